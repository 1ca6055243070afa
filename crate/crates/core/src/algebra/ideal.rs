use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::OnceCell;

use super::groebner::{buchberger_in, cmp_leading, divide_exact, GroebnerBasis, QuotientDimension};
use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::{Error, Result};

/// Stabilization bound for saturation when the quotient is not finite.
const SATURATION_CAP: usize = 32;

/// Ideal given by generators in a common ring. The reduced Gröbner basis in
/// the ring's term order is computed on first use and kept.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceCell<GroebnerBasis>,
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ideal").field("ring", &self.ring).field("generators", &self.generators).finish()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceCell::new() })
    }

    fn from_basis(gb: GroebnerBasis) -> Ideal {
        let ring = gb.ring().clone();
        let generators = gb.elements().to_vec();
        let cell = OnceCell::new();
        let _ = cell.set(gb);
        Ideal { ring, generators, gb: cell }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger_in(&self.ring, &self.generators))
    }

    /// Reduced basis for another term order on the same variables.
    pub fn groebner_in(&self, order: TermOrder) -> GroebnerBasis {
        if order == *self.ring.order() {
            return self.groebner().clone();
        }
        let ring = self.ring.with_order(order);
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g.with_ring(&ring).expect("same variables")).collect();
        buchberger_in(&ring, &gens)
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        self.groebner().quotient_dimension()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner().normal_form(f)
    }

    /// Equality of ideals, by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner().elements() == other.groebner().elements()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Ideal with `extra` appended to the generators.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ k[keep]`, expressed in the original ring.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if keep.is_empty() || keep.iter().any(|&v| v >= n) {
            return Err(Error::OutOfRange(format!("keep set {keep:?} for {n} variables")));
        }
        let gone: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
        if gone.is_empty() {
            return Ok(self.clone());
        }
        // new index order: eliminated variables first
        let order: Vec<usize> = gone.iter().chain((0..n).filter(|v| keep.contains(v)).collect::<Vec<_>>().iter()).copied().collect();
        let mut position = alloc::vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let names: Vec<&str> = order.iter().map(|&v| self.ring.names()[v].as_str()).collect();
        let block = Ring::new(&names, TermOrder::Block { split: gone.len() })?;
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g.map_variables(&block, &position)).collect();
        let gb = buchberger_in(&block, &gens);
        let kept = gb.elements().iter().filter(|g| g.terms().iter().all(|(m, _)| (0..gone.len()).all(|v| m.exponent(v) == 0)));
        let back: Vec<Polynomial> = kept.map(|g| g.map_variables(&self.ring, &order)).collect();
        Ideal::new(&self.ring, back)
    }

    /// `I ∩ J` via `t·I + (1 − t)·J` eliminating `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.nvars();
        let fresh = fresh_name(&self.ring);
        let mut names: Vec<&str> = alloc::vec![fresh.as_str()];
        names.extend(self.ring.names().iter().map(String::as_str));
        let big = Ring::new(&names, TermOrder::Block { split: 1 })?;
        let shift: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.map_variables(&big, &shift));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_variables(&big, &shift));
        }
        let gb = buchberger_in(&big, &gens);
        let back: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| drop_first_variable(g, &self.ring))
            .collect();
        Ideal::new(&self.ring, back)
    }

    /// `I : f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, alloc::vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let quotients = meet.groebner().elements().iter().map(|g| divide_exact(g, f)).collect::<Result<Vec<_>>>()?;
        let mut gens = quotients;
        gens.sort_by(|a, b| cmp_leading(&self.ring, a, b));
        Ok(Ideal::from_basis(buchberger_in(&self.ring, &gens)))
    }

    /// `I : f^∞` by iterated colon until the reduced basis repeats.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let bound = match self.quotient_dimension() {
            QuotientDimension::Finite(d) => d + 1,
            QuotientDimension::Infinite => SATURATION_CAP,
        };
        let mut cur = Ideal::from_basis(self.groebner().clone());
        for _ in 0..bound {
            let next = cur.colon(f)?;
            if next.same_ideal(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationDidNotStabilize(bound))
    }
}

fn fresh_name(ring: &Ring) -> String {
    let mut k = 0usize;
    loop {
        let name = format!("t{k}_");
        if ring.index_of(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

fn drop_first_variable(g: &Polynomial, target: &Ring) -> Polynomial {
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let exps: Vec<u32> = (0..target.nvars()).map(|v| m.exponent(v + 1)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}
