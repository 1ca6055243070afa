//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::{sub_cancelling, Polynomial, Term};
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

/// Vector-space dimension of `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(d) => Some(d),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Reduced Gröbner basis: monic elements sorted by ascending leading
/// monomial, no term of any element divisible by another leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().copied()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Zero-dimensional iff every variable has a pure power among the
    /// leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        self.pure_power_bounds().is_some()
    }

    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        let n = self.ring.nvars();
        let mut bound = alloc::vec![u32::MAX; n];
        for m in self.leading_monomials() {
            if m.is_one() {
                bound.iter_mut().for_each(|b| *b = 0);
            } else if let Some(v) = m.pure_power_var() {
                bound[v] = bound[v].min(m.exponent(v));
            }
        }
        bound.iter().all(|&b| b != u32::MAX).then_some(bound)
    }

    /// Monomials outside the leading-term ideal, in ascending term order.
    /// `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let bound = self.pure_power_bounds()?;
        let lms = self.leading_monomials();
        let mut out = Vec::new();
        if lms.iter().any(Monomial::is_one) {
            return Some(out);
        }
        let mut exps = alloc::vec![0u32; self.ring.nvars()];
        collect_standard(&lms, &bound, 0, &mut exps, &mut out);
        out.sort_by(|a, b| self.ring.cmp(a, b));
        Some(out)
    }

    /// Monic minimal polynomial of multiplication by `f` on the quotient, as
    /// a polynomial in the single variable of `target`. This generates the
    /// elimination ideal `(I + (w - f)) ∩ Q[w]`.
    pub fn minimal_polynomial(&self, f: &Polynomial, target: &Ring) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if target.nvars() != 1 {
            return Err(Error::NotUnivariate);
        }
        let basis = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let coords = |p: &Polynomial| -> Vec<Rational> { basis.iter().map(|m| p.coefficient(m)).collect() };
        let f = self.normal_form(f)?;
        let mut power = self.normal_form(&self.ring.one())?;
        // echelon rows: (pivot, reduced coordinates, combination of powers)
        let mut echelon: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
        for k in 0..=basis.len() {
            if k > 0 {
                power = self.normal_form(&(&power * &f))?;
            }
            let mut v = coords(&power);
            let mut combo = alloc::vec![Rational::zero(); k + 1];
            combo[k] = Rational::one();
            for (pivot, row, row_combo) in &echelon {
                if v[*pivot].is_zero() {
                    continue;
                }
                let c = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &c * y;
                }
                for (x, y) in combo.iter_mut().zip(row_combo) {
                    *x -= &c * y;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    let terms = combo.into_iter().enumerate().map(|(e, c)| (Monomial::var(0, e as u32), c)).collect();
                    return Ok(Polynomial::from_terms(target, terms));
                }
                Some(p) => {
                    let lead = v[p].clone();
                    v.iter_mut().for_each(|x| *x /= &lead);
                    combo.iter_mut().for_each(|x| *x /= &lead);
                    echelon.push((p, v, combo));
                }
            }
        }
        // the quotient is the zero ring
        Ok(target.one())
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        match self.standard_monomials() {
            Some(s) => QuotientDimension::Finite(s.len()),
            None => QuotientDimension::Infinite,
        }
    }
}

fn collect_standard(lms: &[Monomial], bound: &[u32], var: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == bound.len() {
        out.push(Monomial::from_exponents(exps));
        return;
    }
    for e in 0..bound[var] {
        exps[var] = e;
        let partial = Monomial::from_exponents(exps);
        if lms.iter().any(|l| l.divides(&partial)) {
            break;
        }
        collect_standard(lms, bound, var + 1, exps, out);
    }
    exps[var] = 0;
}

/// Remainder of `f` on division by a reduced basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    let divisors: Vec<&[Term]> = gb.elements.iter().map(|g| g.terms()).collect();
    Ok(Polynomial::from_sorted(gb.ring(), reduce(gb.ring(), f.terms().to_vec(), &divisors)))
}

/// Full reduction of `p` by `divisors` (leading coefficients arbitrary).
fn reduce(ring: &Ring, p: Vec<Term>, divisors: &[&[Term]]) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let hit = divisors.iter().find_map(|g| g[0].0.quotient_of(m).map(|q| (q, *g)));
        match hit {
            Some((q, g)) => {
                let coeff = if g[0].1.is_one() { c.clone() } else { c / &g[0].1 };
                cur = sub_cancelling(ring, &cur[start..], &coeff, &q, g);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// Exact quotient `p / f`, or `NotDivisible`.
pub(crate) fn divide_exact(p: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let Some(fm) = f.leading_monomial() else { return Err(Error::ZeroPolynomial) };
    let fc = f.leading_coefficient().cloned().unwrap_or_else(Rational::one);
    let ring = p.ring();
    let mut quotient = Vec::new();
    let mut cur = p.terms().to_vec();
    while let Some((m, c)) = cur.first() {
        let q = fm.quotient_of(m).ok_or(Error::NotDivisible)?;
        let coeff = c / &fc;
        cur = sub_cancelling(ring, &cur, &coeff, &q, f.terms());
        quotient.push((q, coeff));
    }
    Ok(Polynomial::from_sorted(ring, quotient))
}

fn s_polynomial(ring: &Ring, f: &[Term], g: &[Term]) -> Vec<Term> {
    let l = f[0].0.lcm(&g[0].0);
    let uf = f[0].0.quotient_of(&l).expect("lcm");
    let ug = g[0].0.quotient_of(&l).expect("lcm");
    let a: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&uf), c / &f[0].1)).collect();
    sub_cancelling(ring, &a, &(&Rational::one() / &g[0].1), &ug, g)
}

/// `true` when every S-polynomial of `gens` reduces to zero modulo `gens`.
pub fn is_groebner(gens: &[Polynomial]) -> bool {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else { return true };
    let ring = first.ring();
    let divisors: Vec<&[Term]> = gens.iter().map(|g| g.terms()).collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = s_polynomial(ring, divisors[i], divisors[j]);
            if !reduce(ring, s, &divisors).is_empty() {
                return false;
            }
        }
    }
    true
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Builder {
    ring: Ring,
    polys: Vec<Vec<Term>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn reduce_by_active(&self, p: Vec<Term>) -> Vec<Term> {
        let divisors: Vec<&[Term]> = self.active.iter().map(|&i| self.polys[i].as_slice()).collect();
        reduce(&self.ring, p, &divisors)
    }

    fn insert(&mut self, mut h: Vec<Term>, sugar: u32) {
        let lc = h[0].1.clone();
        if !lc.is_one() {
            h.iter_mut().for_each(|t| t.1 /= &lc);
        }
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        let hm = *self.lm(hi);

        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let gm = self.lm(g);
                let l = hm.lcm(gm);
                let s = (self.sugar[g] + gm.quotient_of(&l).map_or(0, |q| q.total_degree()))
                    .max(sugar + hm.quotient_of(&l).map_or(0, |q| q.total_degree()));
                Pair { i: g, j: hi, lcm: l, sugar: s }
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = hm.is_coprime(self.lm(p.i));
            let dominated = candidates.iter().chain(kept.iter()).any(|o| o.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !hm.is_coprime(self.lm(p.i)));

        // chain criterion on the old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let l1 = polys[p.i][0].0.lcm(&hm);
            let l2 = polys[p.j][0].0.lcm(&hm);
            !(hm.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm)
        });
        self.pairs.extend(kept);

        self.active.retain(|&g| !hm.divides(&polys[g][0].0));
        self.active.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let ring = &self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            ring.cmp(&pa.lcm, &pb.lcm)
                .then_with(|| pa.sugar.cmp(&pb.sugar))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of `gens` in their common ring's term order.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::OutOfRange("no generators and no ring".into()));
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| *g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger_in(&ring, gens))
}

pub(crate) fn buchberger_in(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    let mut b = Builder { ring: ring.clone(), polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut input: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|f, g| {
        let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
        ring.cmp(fm, gm).then_with(|| f.len().cmp(&g.len()))
    });
    for g in input {
        let h = b.reduce_by_active(g.terms().to_vec());
        if let Some((m, _)) = h.first() {
            if m.is_one() {
                return unit_basis(ring);
            }
            let s = g.total_degree().unwrap_or(0);
            b.insert(h, s);
        }
    }

    while let Some(pair) = b.select() {
        let s = s_polynomial(ring, &b.polys[pair.i], &b.polys[pair.j]);
        let h = b.reduce_by_active(s);
        if let Some((m, _)) = h.first() {
            if m.is_one() {
                return unit_basis(ring);
            }
            b.insert(h, pair.sugar);
        }
    }

    // interreduce the minimal basis
    let mut minimal: Vec<Vec<Term>> = b.active.iter().map(|&i| b.polys[i].clone()).collect();
    minimal.sort_by(|f, g| ring.cmp(&f[0].0, &g[0].0));
    let mut elements = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&[Term]> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.as_slice()).collect();
        let head = minimal[k][0].clone();
        let tail = reduce(ring, minimal[k][1..].to_vec(), &others);
        let mut terms = alloc::vec![head];
        terms.extend(tail);
        elements.push(Polynomial::from_sorted(ring, terms));
    }
    GroebnerBasis { ring: ring.clone(), elements }
}

fn unit_basis(ring: &Ring) -> GroebnerBasis {
    GroebnerBasis { ring: ring.clone(), elements: alloc::vec![ring.one()] }
}

impl GroebnerBasis {
    /// The basis of the zero ideal.
    pub fn zero_ideal(ring: &Ring) -> Self {
        GroebnerBasis { ring: ring.clone(), elements: Vec::new() }
    }
}

/// Ascending comparison of leading monomials, used for canonical ordering.
pub(crate) fn cmp_leading(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Ordering {
    match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => ring.cmp(a, b),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_polynomial, rat, TermOrder};
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names, TermOrder::Grevlex).unwrap()
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()
    }

    #[test]
    fn small_bases() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["x^2 - y", "y"])).unwrap();
        assert_eq!(gb.elements(), polys(&r, &["y", "x^2"]).as_slice());
        let gb = buchberger(&polys(&r, &["3*x*y + 6"])).unwrap();
        assert_eq!(gb.elements(), polys(&r, &["x*y + 2"]).as_slice());
        let gb = buchberger(&polys(&r, &["x^2", "y^3"])).unwrap();
        assert_eq!(gb.quotient_dimension(), QuotientDimension::Finite(6));
        let gb = buchberger(&polys(&r, &["x*y"])).unwrap();
        assert_eq!(gb.quotient_dimension(), QuotientDimension::Infinite);
        let gb = buchberger(&polys(&r, &["x + 1", "x"])).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.quotient_dimension(), QuotientDimension::Finite(0));
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["x"])).unwrap();
        assert_eq!(gb.normal_form(&r.one()).unwrap(), r.one());
        let other = ring(&["x", "z"]);
        assert_eq!(gb.normal_form(&other.one()), Err(Error::RingMismatch));
        let gb = buchberger(&polys(&r, &["x^2 + y^2 - 1", "x - y"])).unwrap();
        let nf = gb.normal_form(&parse_polynomial(&r, "x^3").unwrap()).unwrap();
        assert_eq!(nf, parse_polynomial(&r, "1/2*y").unwrap());
        assert!(is_groebner(gb.elements()));
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial(&r, "x - y").unwrap();
        let g = parse_polynomial(&r, "x^2 + 3*y").unwrap();
        assert_eq!(divide_exact(&(&f * &g), &f).unwrap(), g);
        assert_eq!(divide_exact(&g, &f), Err(Error::NotDivisible));
        assert_eq!(divide_exact(&r.zero(), &f).unwrap(), r.zero());
        let _ = rat(1);
    }
}
