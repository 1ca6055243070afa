//! Canonical text form.
//!
//! A polynomial is written term by term in descending order as
//! `c*x1^e1*...*xk^ek`, joined by ` + `. Coefficients are always `num/den`
//! (`-3/2`, `1/1`); only variables with a positive exponent appear, and the
//! exponent is always written. The zero polynomial is `0/1`. An ideal is one
//! generator per line; lines starting with `#` are comments.
//!
//! The parser also accepts the looser hand-written form (`x^2 - 3*y + 1/2`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0/1");
        }
        let names = self.ring().names();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}/{}", c.numer(), c.denom())?;
            for (i, e) in m.exponents(names.len()).enumerate() {
                if e > 0 {
                    write!(f, "*{}^{}", names[i], e)?;
                }
            }
        }
        Ok(())
    }
}

/// Ideal generators, one per line, each in canonical form.
pub fn write_ideal(generators: &[Polynomial]) -> String {
    let mut out = String::new();
    for g in generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parses generators, one per non-empty, non-comment line.
pub fn parse_ideal(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_polynomial(ring, l))
        .collect()
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, ring };
    let mut terms = Vec::new();
    p.skip_ws();
    if p.at_end() {
        return Err(Error::Parse("empty input".into()));
    }
    loop {
        terms.push(p.term()?);
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !matches!(p.peek(), Some(b'+') | Some(b'-')) {
            return Err(p.error("expected `+` or `-`"));
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = core::str::from_utf8(&self.s[start..self.pos]).map_err(|_| self.error("utf8"))?;
        s.parse::<BigInt>().map_err(|_| self.error("bad integer"))
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut negative = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    negative = !negative;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut coeff = Rational::one();
        let mut exps = [0u32; super::MAX_VARS];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?;
                    let mut value = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.digits()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        value /= Rational::from_integer(den);
                    }
                    coeff *= value;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                        self.pos += 1;
                    }
                    let name = core::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
                    let idx = self
                        .ring
                        .index_of(name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    self.skip_ws();
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = u32::try_from(self.digits()?).map_err(|_| self.error("exponent too large"))?;
                    }
                    exps[idx] += e;
                }
                _ => return Err(self.error("expected a coefficient or a variable")),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        if exps.iter().any(|&e| e > u32::from(u16::MAX)) {
            return Err(Error::Parse("exponent too large".to_string()));
        }
        Ok((Monomial::from_exponents(&exps[..self.ring.nvars()]), coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, TermOrder};
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::new(&["a1", "a2", "b1"], TermOrder::Grevlex).unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = ring();
        let p = parse_polynomial(&r, "2*a2 - a1^2 + b1").unwrap();
        assert_eq!(p.to_string(), "-1/1*a1^2 + 2/1*a2^1 + 1/1*b1^1");
        assert_eq!(r.zero().to_string(), "0/1");
        let q = parse_polynomial(&r, "3/4 - 1/2*a1*a1").unwrap();
        assert_eq!(q.to_string(), "-1/2*a1^2 + 3/4");
        assert_eq!(q.constant_coefficient(), frac(3, 4));
    }

    #[test]
    fn errors() {
        let r = ring();
        assert!(matches!(parse_polynomial(&r, "x^2"), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial(&r, "1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_polynomial(&r, "a1 a2"), Err(Error::Parse(_))));
    }

    #[test]
    fn ideal_lines() {
        let r = ring();
        let gens = parse_ideal(&r, "# header\n a1^2 \n\n-1/1*b1^1\n").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(write_ideal(&gens), "1/1*a1^2\n-1/1*b1^1\n");
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, i64, [u32; 3])>> {
        prop::collection::vec((-20i64..20, 1i64..9, [0u32..4, 0u32..4, 0u32..4]), 0..8)
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(raw in arb_poly()) {
            let r = ring();
            let terms = raw.iter().map(|(n, d, e)| (Monomial::from_exponents(e), frac(*n, *d))).collect();
            let p = Polynomial::from_terms(&r, terms);
            let back = parse_polynomial(&r, &p.to_string()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
