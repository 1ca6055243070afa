//! Milnor algebras of isolated hypersurface germs at the origin and the
//! `A_μ` reading of the non-reduced factor of the small quantum ring.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::linalg::rank;
use num_traits::Zero;

use crate::algebra::{rat, Ideal, Monomial, Polynomial, Rational, Ring, TermOrder};
use crate::presentations::{decompose_spectrum, SpectrumReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermData {
    pub milnor_number: usize,
    pub corank: usize,
    /// Standard monomials of the local Milnor algebra, ascending.
    pub monomial_basis: Vec<Monomial>,
}

/// Local Milnor algebra of `f` at the origin.
///
/// The Jacobian ideal may have critical points away from the origin, so the
/// local algebra is read off `J + m^N`: its length grows strictly with `N`
/// until `m^N` vanishes locally (Nakayama) and is constant from then on.
pub fn milnor_data(f: &Polynomial) -> Result<GermData> {
    let ring = f.ring();
    let n = ring.nvars();
    if !f.constant_coefficient().is_zero() {
        return Err(Error::NotSingularGerm(format!("f(0) = {}", f.constant_coefficient())));
    }
    let partials: Vec<Polynomial> = (0..n).map(|v| f.derivative(v)).collect();
    if partials.iter().any(|g| !g.constant_coefficient().is_zero()) {
        return Err(Error::NotSingularGerm(String::from("the gradient does not vanish at the origin")));
    }
    let jacobian = Ideal::new(ring, partials)?;
    let global = jacobian.quotient_dimension().finite().ok_or(Error::NonIsolated)?;
    let truncated = |d: u32| jacobian.with_generators(&power_of_maximal(ring, d));
    // J ⊂ m, so the first truncation has length one
    let mut local = truncated(1)?;
    let mut length = 1;
    for d in 2..=global as u32 + 1 {
        let next = truncated(d)?;
        let next_length = next.quotient_dimension().finite().ok_or(Error::NonIsolated)?;
        if next_length == length {
            break;
        }
        (local, length) = (next, next_length);
    }
    let monomial_basis = local.groebner().standard_monomials().ok_or(Error::NonIsolated)?;
    debug_assert_eq!(monomial_basis.len(), length);
    Ok(GermData { milnor_number: length, corank: n - rank(&hessian_at_origin(f)), monomial_basis })
}

fn power_of_maximal(ring: &Ring, d: u32) -> Vec<Polynomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; n];
    fill(ring, &mut exps, 0, d, &mut out);
    out
}

fn fill(ring: &Ring, exps: &mut [u32], v: usize, left: u32, out: &mut Vec<Polynomial>) {
    if v + 1 == exps.len() {
        exps[v] = left;
        out.push(Polynomial::monomial(ring, Monomial::from_exponents(exps), rat(1)));
        return;
    }
    for e in 0..=left {
        exps[v] = e;
        fill(ring, exps, v + 1, left - e, out);
    }
}

/// Second partials at 0, read off the quadratic part.
pub fn hessian_at_origin(f: &Polynomial) -> Vec<Vec<Rational>> {
    let n = f.ring().nvars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let m = Monomial::var(i, 1).mul(&Monomial::var(j, 1));
                    let c = f.coefficient(&m);
                    if i == j { c * rat(2) } else { c }
                })
                .collect()
        })
        .collect()
}

/// `A_μ` for a germ of corank one, or the Morse point `A_1` of corank zero.
pub fn classify_corank1(corank: usize, mu: usize) -> Result<String> {
    match (corank, mu) {
        (1, m) if m >= 2 => Ok(format!("A_{m}")),
        (0, 1) => Ok(String::from("A_1")),
        (0, m) => Err(Error::Falsified(format!("corank 0 forces μ = 1, got {m}"))),
        (c, _) => Err(Error::NotCorankOne(c)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfoldingMatch {
    pub n: usize,
    pub spectrum: SpectrumReport,
    /// `(corank, μ)` of `x^n`.
    pub germ: (usize, usize),
    /// `(embedding dimension, length)` of the factor at the origin.
    pub quantum: (usize, usize),
    pub label: String,
}

impl UnfoldingMatch {
    /// Both local algebras have embedding dimension at most one, so equal
    /// lengths pin them to the same `K[ε]/(ε^μ)`.
    pub fn matches(&self) -> bool {
        self.germ == self.quantum && (self.n < 3 || self.quantum == (1, self.n - 1))
    }
}

/// Compares the origin factor of the small quantum ring with the Milnor
/// algebra of `x^n`.
pub fn match_quantum_factor(n: usize) -> Result<UnfoldingMatch> {
    match_spectrum(n, decompose_spectrum(n)?)
}

/// As [`match_quantum_factor`], for an already computed spectrum.
pub fn match_spectrum(n: usize, spectrum: SpectrumReport) -> Result<UnfoldingMatch> {
    let ring = Ring::new(&["x"], TermOrder::Grevlex)?;
    let germ = milnor_data(&ring.var(0).pow(n as u32))?;
    let label = classify_corank1(germ.corank, germ.milnor_number)?;
    Ok(UnfoldingMatch {
        n,
        quantum: (spectrum.tangent_dim_origin, spectrum.local_length_origin),
        spectrum,
        germ: (germ.corank, germ.milnor_number),
        label,
    })
}
