//! First-order big quantum product in the `σ₂` direction.
//!
//! Elements of `QH(IG(2,2n))` are normal forms modulo the presentation I
//! quantum ideal. The first-order product `⋆_τ` adds a `q·t` correction
//! read off the four-point invariants `⟨pt, σ₂, σ_i, σ_j⟩₁ = δ_{i+j,2n-2}`
//! and `⟨σ'_{2n-3}, pt, σ₂⟩₁ = 1`; it is defined only for the classes those
//! numbers cover.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::linalg::rank;
use crate::algebra::{rat, GroebnerBasis, Polynomial, Rational, Ring, TermOrder};
use crate::presentations::{build_presentation, presentation_one_generators, PresentationSpec, QMode, Variant};
use crate::{Error, Result};

/// `QH(IG(2,2n))` in presentation I, with its reduced basis.
#[derive(Clone, Debug)]
pub struct QuantumRing {
    n: usize,
    q_mode: QMode,
    spec: PresentationSpec,
    gb: GroebnerBasis,
}

/// An element in normal form.
#[derive(Clone, Debug, PartialEq)]
pub struct QHElement {
    value: Polynomial,
}

/// Classes for which first-order corrections are known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Unit,
    /// `σ_i`, `1 ≤ i ≤ 2n-2`.
    Special(usize),
    /// `σ'_{2n-3}`.
    SpecialPrime,
}

impl core::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClassTag::Unit => f.write_str("1"),
            ClassTag::Special(i) => write!(f, "s{i}"),
            ClassTag::SpecialPrime => f.write_str("s'"),
        }
    }
}

/// `p0 + p1·t` with `t² = 0`. `tags`, when present, writes `p0` as a
/// combination of tracked classes.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstOrderElement {
    pub p0: QHElement,
    pub p1: QHElement,
    tags: Option<Vec<(Rational, ClassTag)>>,
}

impl QHElement {
    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &QHElement) -> Result<()> {
        if self.value.ring() != other.value.ring() {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> QHElement {
        QHElement { value: self.value.scale(c) }
    }
}

impl Add for &QHElement {
    type Output = QHElement;
    fn add(self, rhs: &QHElement) -> QHElement {
        QHElement { value: &self.value + &rhs.value }
    }
}

impl Sub for &QHElement {
    type Output = QHElement;
    fn sub(self, rhs: &QHElement) -> QHElement {
        QHElement { value: &self.value - &rhs.value }
    }
}

impl Neg for &QHElement {
    type Output = QHElement;
    fn neg(self) -> QHElement {
        QHElement { value: -&self.value }
    }
}

impl QuantumRing {
    pub fn new(n: usize, q_mode: QMode) -> Result<QuantumRing> {
        let spec = PresentationSpec::new(n, Variant::QuantumI, q_mode)?;
        let gb = build_presentation(&spec)?.groebner().clone();
        Ok(QuantumRing { n, q_mode, spec, gb })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q_mode(&self) -> QMode {
        self.q_mode
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Weights of the ring variables (`q` last in symbolic mode).
    pub fn weights(&self) -> Vec<u32> {
        self.spec.weights()
    }

    pub fn element(&self, p: &Polynomial) -> Result<QHElement> {
        Ok(QHElement { value: self.gb.normal_form(p)? })
    }

    pub fn one(&self) -> QHElement {
        QHElement { value: self.ring().one() }
    }

    pub fn zero(&self) -> QHElement {
        QHElement { value: self.ring().zero() }
    }

    /// `q` as an element: `1` or the variable.
    pub fn q(&self) -> QHElement {
        match self.q_mode {
            QMode::Specialize1 => self.one(),
            QMode::Symbolic => QHElement { value: self.ring().var(self.ring().nvars() - 1) },
        }
    }

    /// `σ_i`, with `σ_0 = 1`.
    pub fn sigma(&self, i: usize) -> Result<QHElement> {
        match i {
            0 => Ok(self.one()),
            i if i <= 2 * self.n - 2 => self.element(&self.ring().var(i - 1)),
            _ => Err(Error::OutOfRange(format!("sigma index {i} outside [0, {}]", 2 * self.n - 2))),
        }
    }

    /// `σ'_{2n-3} = σ_{2n-4} ⋆₀ σ₁ − σ_{2n-3}`.
    pub fn sigma_prime(&self) -> Result<QHElement> {
        let prod = self.star0(&self.sigma(2 * self.n - 4)?, &self.sigma(1)?)?;
        Ok(&prod - &self.sigma(2 * self.n - 3)?)
    }

    pub fn class(&self, tag: ClassTag) -> Result<QHElement> {
        match tag {
            ClassTag::Unit => Ok(self.one()),
            ClassTag::Special(i) if i >= 1 => self.sigma(i),
            ClassTag::Special(_) => Err(Error::OutOfRange("special class index 0".into())),
            ClassTag::SpecialPrime => self.sigma_prime(),
        }
    }

    /// Small quantum product.
    pub fn star0(&self, x: &QHElement, y: &QHElement) -> Result<QHElement> {
        x.check(y)?;
        if x.value.ring() != self.ring() {
            return Err(Error::ModeMismatch);
        }
        self.element(&(&x.value * &y.value))
    }

    /// Coefficient `c` of the correction `c·q·t` to `x ⋆_τ y`.
    pub fn tau_correction(&self, x: ClassTag, y: ClassTag) -> Result<Rational> {
        tau_correction(self.n, x, y)
    }

    /// Tracked class lifted with no `t` term.
    pub fn tracked(&self, tag: ClassTag) -> Result<FirstOrderElement> {
        Ok(FirstOrderElement { p0: self.class(tag)?, p1: self.zero(), tags: Some(alloc::vec![(Rational::one(), tag)]) })
    }

    /// Lift without a known class decomposition; `⋆_τ` against it fails
    /// unless no correction can arise.
    pub fn untracked(&self, p0: QHElement, p1: QHElement) -> FirstOrderElement {
        let tags = p0.is_zero().then(Vec::new);
        FirstOrderElement { p0, p1, tags }
    }

    /// Attaches a decomposition of `x.p0` into tracked classes after
    /// checking it.
    pub fn retag(&self, x: &FirstOrderElement, tags: &[(Rational, ClassTag)]) -> Result<FirstOrderElement> {
        let mut sum = self.zero();
        for (c, t) in tags {
            sum = &sum + &self.class(*t)?.scale(c);
        }
        if sum != x.p0 {
            return Err(Error::Falsified(format!("t^0 part {} is not the tagged combination {}", x.p0.value, sum.value)));
        }
        Ok(FirstOrderElement { p0: x.p0.clone(), p1: x.p1.clone(), tags: Some(tags.to_vec()) })
    }

    /// `(x0 ⋆₀ y0, x0 ⋆₀ y1 + x1 ⋆₀ y0 + Σ c·q)` modulo `t²`.
    pub fn star_tau(&self, x: &FirstOrderElement, y: &FirstOrderElement) -> Result<FirstOrderElement> {
        let p0 = self.star0(&x.p0, &y.p0)?;
        let mut p1 = &self.star0(&x.p0, &y.p1)? + &self.star0(&x.p1, &y.p0)?;
        let correction = match (&x.tags, &y.tags) {
            (Some(xs), Some(ys)) => {
                let mut c = Rational::zero();
                for (a, s) in xs {
                    for (b, t) in ys {
                        c += a * b * self.tau_correction(*s, *t)?;
                    }
                }
                c
            }
            _ => {
                return Err(Error::UntrackedProduct(format!(
                    "{} against {}",
                    x.p0.value, y.p0.value
                )))
            }
        };
        p1 = &p1 + &self.q().scale(&correction);
        let tags = p0.is_zero().then(Vec::new);
        Ok(FirstOrderElement { p0, p1, tags })
    }
}

impl FirstOrderElement {
    pub fn tags(&self) -> Option<&[(Rational, ClassTag)]> {
        self.tags.as_deref()
    }

    pub fn scale(&self, c: &Rational) -> FirstOrderElement {
        FirstOrderElement {
            p0: self.p0.scale(c),
            p1: self.p1.scale(c),
            tags: self.tags.as_ref().map(|ts| ts.iter().map(|(a, t)| (a * c, *t)).collect()),
        }
    }
}

impl Add for &FirstOrderElement {
    type Output = FirstOrderElement;
    fn add(self, rhs: &FirstOrderElement) -> FirstOrderElement {
        let tags = match (&self.tags, &rhs.tags) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        FirstOrderElement { p0: &self.p0 + &rhs.p0, p1: &self.p1 + &rhs.p1, tags }
    }
}

impl Sub for &FirstOrderElement {
    type Output = FirstOrderElement;
    fn sub(self, rhs: &FirstOrderElement) -> FirstOrderElement {
        self + &rhs.scale(&rat(-1))
    }
}

/// Coefficient of `q·t` in `x ⋆_τ y − x ⋆₀ y`.
pub fn tau_correction(n: usize, x: ClassTag, y: ClassTag) -> Result<Rational> {
    use ClassTag::*;
    let top = 2 * n - 2;
    let bad = |why: &str| Err(Error::UntrackedProduct(format!("({x}, {y}): {why}")));
    match (x, y) {
        (Unit, _) | (_, Unit) => Ok(Rational::zero()),
        (Special(i), Special(j)) => {
            if i == 0 || j == 0 || i > top || j > top {
                return Err(Error::OutOfRange(format!("special classes s{i}, s{j} outside [1, {top}]")));
            }
            if i + j > top {
                return bad("no four-point data beyond degree 2n-2");
            }
            Ok(if i + j == top { Rational::one() } else { Rational::zero() })
        }
        (SpecialPrime, Special(1)) | (Special(1), SpecialPrime) => Ok(Rational::one()),
        _ => bad("no four-point data"),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport {
    pub n: usize,
    /// t-coefficient of `Σ_{2n-2}` and its expected value `(-1)^n q`.
    pub sigma_low_t: Polynomial,
    pub sigma_low_t_expected: Polynomial,
    /// t-coefficient and `t⁰` part of the reduction of `Δ_{2n-2}`.
    pub reduction_t: Polynomial,
    pub reduction_t0: Polynomial,
    /// `Σ_{2n}` is only recorded as `O(t)`.
    pub sigma_high_recorded: bool,
}

/// `Σ_{2n-2} = (-1)^n q t + O(t²)` and `Δ_{2n-2} = O(t²)` through the
/// reduction `σ_{2n-4}⋆σ₂ − (σ_{2n-4}⋆σ₁)⋆σ₁ + σ_{2n-3}⋆σ₁ − σ_{2n-2}`.
pub fn verify_lemma_presentation(n: usize, q_mode: QMode) -> Result<LemmaReport> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("the lemma needs n >= 3, got {n}")));
    }
    let qr = QuantumRing::new(n, q_mode)?;
    let s = |i: usize| -> Result<FirstOrderElement> {
        qr.tracked(if i == 0 { ClassTag::Unit } else { ClassTag::Special(i) })
    };

    // sum of 1 + 2 Σ_{i=1}^{n-2} (-1)^i telescopes to (-1)^n
    let telescoped: i64 = 1 + 2 * (1..=n as i64 - 2).map(|i| if i % 2 == 0 { 1 } else { -1 }).sum::<i64>();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    if telescoped != sign {
        return Err(Error::Falsified(format!("1 + 2Σ(-1)^i = {telescoped}, not {sign}")));
    }

    let m = n - 1;
    let mut low = qr.star_tau(&s(m)?, &s(m)?)?;
    for i in 1..=m {
        let term = qr.star_tau(&s(m + i)?, &s(m - i)?)?.scale(&rat(if i % 2 == 0 { 2 } else { -2 }));
        low = &low + &term;
    }
    let expected = qr.q().scale(&rat(sign));
    if !low.p0.is_zero() {
        return Err(Error::Falsified(format!("Σ_{} has t^0 part {}", 2 * n - 2, low.p0.value)));
    }
    if low.p1 != expected {
        return Err(Error::Falsified(format!("Σ_{} has t-coefficient {}, expected {}", 2 * n - 2, low.p1.value, expected.value)));
    }

    let top = 2 * n - 2;
    let first = qr.star_tau(&s(top - 2)?, &s(2)?)?;
    let inner = qr.star_tau(&s(top - 2)?, &s(1)?)?;
    let inner = qr.retag(&inner, &[(Rational::one(), ClassTag::Special(top - 1)), (Rational::one(), ClassTag::SpecialPrime)])?;
    let second = qr.star_tau(&inner, &s(1)?)?;
    let third = qr.star_tau(&s(top - 1)?, &s(1)?)?;
    let reduction = &(&(&first - &second) + &third) - &s(top)?;
    if !reduction.p1.is_zero() {
        return Err(Error::Falsified(format!("Δ_{top} reduction has t-coefficient {}", reduction.p1.value)));
    }
    if !reduction.p0.is_zero() {
        return Err(Error::Falsified(format!("Δ_{top} reduction has t^0 part {}", reduction.p0.value)));
    }

    Ok(LemmaReport {
        n,
        sigma_low_t: low.p1.value,
        sigma_low_t_expected: expected.value,
        reduction_t: reduction.p1.value,
        reduction_t0: reduction.p0.value,
        sigma_high_recorded: true,
    })
}

/// Rows: linear parts, in `σ₁..σ_{2n-2}, t`, of `Δ_r` (`3 ≤ r ≤ 2n-2`),
/// `Σ_{2n-2} + (-1)^{n+1} q t` and `Σ_{2n}`, at `q = 1`.
pub fn regularity_matrix(n: usize) -> Result<Vec<Vec<Rational>>> {
    PresentationSpec::new(n, Variant::QuantumI, QMode::Specialize1)?;
    let mut names: Vec<alloc::string::String> = (1..=2 * n - 2).map(|i| format!("s{i}")).collect();
    names.push("t".to_string());
    let ring = Ring::new(&names, TermOrder::Grevlex)?;
    let sigma: Vec<Polynomial> = core::iter::once(ring.one()).chain((0..2 * n - 2).map(|i| ring.var(i))).collect();
    let mut rels = presentation_one_generators(&ring, n, &sigma, Some(&ring.one()));
    let t = ring.var(2 * n - 2);
    let low = rels.len() - 2;
    rels[low] = if n % 2 == 1 { &rels[low] + &t } else { &rels[low] - &t };
    Ok(rels.iter().map(Polynomial::linear_coefficients).collect())
}

/// Columns minus rank.
pub fn corank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    ncols - rank(rows)
}

/// Dimension of the Zariski tangent space of the first-order family at
/// the origin.
pub fn regularity_corank(n: usize) -> Result<usize> {
    Ok(corank(&regularity_matrix(n)?, 2 * n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrections() {
        use ClassTag::*;
        assert_eq!(tau_correction(4, Special(3), Special(3)).unwrap(), rat(1));
        assert_eq!(tau_correction(4, Special(2), Special(3)).unwrap(), rat(0));
        assert_eq!(tau_correction(4, Unit, Special(5)).unwrap(), rat(0));
        assert_eq!(tau_correction(4, SpecialPrime, Special(1)).unwrap(), rat(1));
        assert!(matches!(tau_correction(4, Special(3), Special(4)), Err(Error::UntrackedProduct(_))));
        assert!(matches!(tau_correction(4, SpecialPrime, Special(2)), Err(Error::UntrackedProduct(_))));
    }

    #[test]
    fn small_products() {
        let qr = QuantumRing::new(3, QMode::Specialize1).unwrap();
        let x = qr.sigma(2).unwrap();
        assert_eq!(qr.star0(&qr.one(), &x).unwrap(), x);
        let s1 = qr.tracked(ClassTag::Special(1)).unwrap();
        let s3 = qr.tracked(ClassTag::Special(3)).unwrap();
        let p = qr.star_tau(&s3, &s1).unwrap();
        assert_eq!(p.p1, qr.one());
        let s2 = qr.tracked(ClassTag::Special(1)).unwrap();
        assert!(qr.star_tau(&s1, &s2).unwrap().p1.is_zero());
        let prime = qr.sigma_prime().unwrap();
        assert!(!prime.is_zero());
        assert_eq!(prime.value().weighted_homogeneous_degree(&qr.weights()), Some(3));
        let other = QuantumRing::new(4, QMode::Specialize1).unwrap();
        assert_eq!(qr.star0(&x, &other.one()), Err(Error::ModeMismatch));
    }

    #[test]
    fn untracked_products_fail() {
        let qr = QuantumRing::new(3, QMode::Specialize1).unwrap();
        let s1 = qr.tracked(ClassTag::Special(1)).unwrap();
        let sq = qr.star_tau(&s1, &s1).unwrap();
        assert!(matches!(qr.star_tau(&sq, &s1), Err(Error::UntrackedProduct(_))));
        assert!(qr.retag(&sq, &[(rat(1), ClassTag::Special(2))]).is_err());
    }

    #[test]
    fn lemma_small() {
        let r = verify_lemma_presentation(3, QMode::Specialize1).unwrap();
        assert_eq!(r.sigma_low_t, Polynomial::constant(r.sigma_low_t.ring(), rat(-1)));
        assert!(verify_lemma_presentation(2, QMode::Specialize1).is_err());
    }

    #[test]
    fn corank_small() {
        assert_eq!(regularity_corank(2).unwrap(), 1);
        assert_eq!(regularity_corank(3).unwrap(), 1);
        assert_eq!(corank(&[], 5), 5);
    }
}
