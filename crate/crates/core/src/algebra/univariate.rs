//! Root counting for polynomials in one variable, by gcd degrees only.

use alloc::vec::Vec;

use num_traits::Zero;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

/// Dense coefficients, lowest degree first, no trailing zeros.
type Dense = Vec<Rational>;

fn to_dense(f: &Polynomial) -> Result<Dense> {
    if f.ring().nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    let deg = f.degree_in(0) as usize;
    let mut out = alloc::vec![Rational::zero(); if f.is_zero() { 0 } else { deg + 1 }];
    for (m, c) in f.terms() {
        out[m.exponent(0) as usize] = c.clone();
    }
    Ok(out)
}

fn from_dense(ring: &Ring, d: &[Rational]) -> Polynomial {
    let terms = d
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Monomial::var(0, e as u32), c.clone()))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn trim(d: &mut Dense) {
    while d.last().is_some_and(Zero::is_zero) {
        d.pop();
    }
}

fn make_monic(d: &mut Dense) {
    if let Some(lc) = d.last().cloned() {
        d.iter_mut().for_each(|c| *c /= &lc);
    }
}

/// Quotient and remainder.
fn div_rem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = alloc::vec![Rational::zero(); r.len() - db];
    let lb = &b[db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn gcd_dense(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
        make_monic(&mut b);
    }
    make_monic(&mut a);
    a
}

fn derivative(a: &Dense) -> Dense {
    let mut d: Dense = a.iter().enumerate().skip(1).map(|(e, c)| c * Rational::from_integer(e.into())).collect();
    trim(&mut d);
    d
}

/// Monic gcd. Fails on `gcd(0, 0)`.
pub fn univ_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (a, b) = (to_dense(f)?, to_dense(g)?);
    if a.is_empty() && b.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(from_dense(f.ring(), &gcd_dense(&a, &b)))
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    let a = to_dense(f)?;
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd_dense(&a, &derivative(&a));
    let (mut q, _) = div_rem(&a, &g);
    make_monic(&mut q);
    Ok(from_dense(f.ring(), &q))
}

/// Number of distinct complex roots.
pub fn distinct_root_count(f: &Polynomial) -> Result<usize> {
    Ok(squarefree_part(f)?.degree_in(0) as usize)
}

/// `f` with every root of `g` removed: `f / gcd(f, g)`, monic.
pub fn remove_common_roots(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let a = to_dense(f)?;
    if a.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let d = gcd_dense(&a, &to_dense(g)?);
    let (mut q, _) = div_rem(&a, &d);
    make_monic(&mut q);
    Ok(from_dense(f.ring(), &q))
}
