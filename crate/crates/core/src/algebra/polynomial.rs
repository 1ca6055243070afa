use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

pub(crate) type Term = (Monomial, Rational);

/// Multivariate polynomial over `Q`.
///
/// Terms are sorted strictly descending in the ring's term order, carry no
/// zero coefficients and no repeated monomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges repeated
    /// monomials and drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusted constructor: `terms` must already satisfy the invariants.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    /// Number of terms; `is_zero` is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map_or_else(Rational::zero, |t| t.1.clone())
    }

    pub fn constant_coefficient(&self) -> Rational {
        self.coefficient(&Monomial::ONE)
    }

    /// Coefficient of each variable in the degree-one part.
    pub fn linear_coefficients(&self) -> Vec<Rational> {
        (0..self.ring.nvars())
            .map(|i| self.coefficient(&Monomial::var(i, 1)))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.total_degree()).max()
    }

    /// Largest exponent of variable `var`.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(var)).max().unwrap_or(0)
    }

    /// The common weighted degree of all terms, `None` for the zero
    /// polynomial or when two terms have different weighted degrees.
    pub fn weighted_homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.iter().map(|t| t.0.weighted_degree(weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True when every term only involves variables with `keep[i]` set.
    pub fn only_involves(&self, keep: &[bool]) -> bool {
        self.terms
            .iter()
            .all(|t| t.0.exponents(self.ring.nvars()).zip(keep).all(|(e, &k)| k || e == 0))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the ring
    /// of the images.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() || images.iter().any(|p| p.ring != *target) {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.nvars();
        // powers of each image, built lazily
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| alloc::vec![target.one(), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, e) in m.exponents(n).enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Moves the polynomial to `target`, sending variable `i` to variable
    /// `mapping[i]` of the target ring.
    pub fn map_variables(&self, target: &Ring, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.ring.nvars(), "mapping length");
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = [0u32; super::MAX_VARS];
                for (i, e) in m.exponents(n).enumerate() {
                    exps[mapping[i]] += e;
                }
                (Monomial::from_exponents(&exps[..target.nvars()]), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Re-sorts into a ring with the same variables and another order.
    pub fn with_ring(&self, target: &Ring) -> Result<Polynomial> {
        if target.names() != self.ring.names() {
            return Err(Error::RingMismatch);
        }
        if *target == self.ring {
            return Ok(self.clone());
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "arithmetic between polynomials of different rings");
    }
}

/// `p - c * m * g`, where the leading terms are known to cancel: the
/// leading term of `p` equals `c * m * lt(g)`.
pub(crate) fn sub_cancelling(ring: &Ring, p: &[Term], c: &Rational, m: &Monomial, g: &[Term]) -> Vec<Term> {
    let (p, g) = (&p[1..], &g[1..]);
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < p.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match ring.cmp(&p[i].0, &gm) {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &p[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&p[i..]);
    out.extend(g[j..].iter().map(|(gm, gc)| (gm.mul(m), -(c * gc))));
    out
}

fn merge(ring: &Ring, a: &[Term], b: &[Term], negate_b: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, sign(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        Polynomial { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, &rhs.terms, false) }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        Polynomial { ring: self.ring.clone(), terms: merge(&self.ring, &self.terms, &rhs.terms, true) }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            let part = big.mul_term(m, c);
            acc.terms = merge(&self.ring, &acc.terms, &part.terms, false);
        }
        acc
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
