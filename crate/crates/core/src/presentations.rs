//! Ring presentations of `H*(IG(2,2n))` and `QH(IG(2,2n))`.
//!
//! Presentation I uses the special Schubert classes `s1..s{2n-2}`;
//! presentation II uses the Chern classes `a1, a2` of the dual tautological
//! bundle and `b1..b{n-2}` of `U^⊥/U`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::linalg::{determinant, rank};
use crate::algebra::univariate::{distinct_root_count, remove_common_roots, squarefree_part};
use crate::algebra::{rat, Ideal, Polynomial, QuotientDimension, Rational, Ring, TermOrder};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    ClassicalI,
    ClassicalII,
    QuantumI,
    QuantumII,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::ClassicalI, Variant::ClassicalII, Variant::QuantumI, Variant::QuantumII];

    pub fn is_quantum(self) -> bool {
        matches!(self, Variant::QuantumI | Variant::QuantumII)
    }

    pub fn uses_sigma(self) -> bool {
        matches!(self, Variant::ClassicalI | Variant::QuantumI)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::ClassicalI => "CLASSICAL_I",
            Variant::ClassicalII => "CLASSICAL_II",
            Variant::QuantumI => "QUANTUM_I",
            Variant::QuantumII => "QUANTUM_II",
        }
    }
}

/// How the quantum parameter enters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum QMode {
    /// `q = 1`.
    #[default]
    Specialize1,
    /// `q` is the last ring variable.
    Symbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PresentationSpec {
    pub n: usize,
    pub variant: Variant,
    pub q_mode: QMode,
}

impl PresentationSpec {
    pub fn new(n: usize, variant: Variant, q_mode: QMode) -> Result<Self> {
        check_n(n)?;
        Ok(PresentationSpec { n, variant, q_mode })
    }

    fn has_q_variable(&self) -> bool {
        self.variant.is_quantum() && self.q_mode == QMode::Symbolic
    }

    /// Variable names in ring order.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = if self.variant.uses_sigma() { sigma_names(self.n) } else { ab_names(self.n) };
        if self.has_q_variable() {
            names.push("q".into());
        }
        names
    }

    /// Grading: `deg s_i = i`, `deg a1 = 1`, `deg a2 = 2`, `deg b_i = 2i`,
    /// `deg q = 2n - 1`.
    pub fn weights(&self) -> Vec<u32> {
        let n = self.n as u32;
        let mut w: Vec<u32> = if self.variant.uses_sigma() {
            (1..=2 * n - 2).collect()
        } else {
            [1, 2].into_iter().chain((1..=n - 2).map(|i| 2 * i)).collect()
        };
        if self.has_q_variable() {
            w.push(2 * n - 1);
        }
        w
    }

    pub fn ring(&self) -> Ring {
        Ring::new(&self.variable_names(), TermOrder::Grevlex).expect("valid names")
    }

    pub fn label(&self) -> String {
        let q = match (self.variant.is_quantum(), self.q_mode) {
            (false, _) => "none",
            (true, QMode::Specialize1) => "1",
            (true, QMode::Symbolic) => "symbolic",
        };
        format!("IG(2,{}) variant={} q={}", 2 * self.n, self.variant.name(), q)
    }
}

fn check_n(n: usize) -> Result<()> {
    // the symbolic presentation I ring needs 2n - 1 variables
    if n < 2 || 2 * n - 1 > crate::algebra::MAX_VARS {
        return Err(Error::OutOfRange(format!("n = {n} is outside [2, 8]")));
    }
    Ok(())
}

fn sigma_names(n: usize) -> Vec<String> {
    (1..=2 * n - 2).map(|i| format!("s{i}")).collect()
}

fn ab_names(n: usize) -> Vec<String> {
    let mut v: Vec<String> = alloc::vec!["a1".into(), "a2".into()];
    v.extend((1..=n - 2).map(|i| format!("b{i}")));
    v
}

/// Generators of presentation I in terms of given images of the special
/// classes. `sigma[k]` is the image of `s_k` for `k` in `0..=2n-2`, with
/// `sigma[0] = 1`; `quantum` is the image of `q` when the quantum term is
/// present.
pub(crate) fn presentation_one_generators(ring: &Ring, n: usize, sigma: &[Polynomial], quantum: Option<&Polynomial>) -> Vec<Polynomial> {
    let top = 2 * n - 2;
    let s = |k: isize| -> Polynomial {
        if k < 0 || k as usize > top {
            ring.zero()
        } else {
            sigma[k as usize].clone()
        }
    };
    let mut gens = Vec::new();
    for r in 3..=top {
        gens.push(delta(ring, r, &s));
    }
    let two = rat(2);
    let n_i = n as isize;

    let mut low = s(n_i - 1).pow(2);
    for i in 1..n_i {
        let t = (&s(n_i - 1 + i) * &s(n_i - 1 - i)).scale(&two);
        low = if i % 2 == 0 { &low + &t } else { &low - &t };
    }
    gens.push(low);

    let mut high = s(n_i).pow(2);
    for i in 1..=n_i - 2 {
        let t = (&s(n_i + i) * &s(n_i - i)).scale(&two);
        high = if i % 2 == 0 { &high + &t } else { &high - &t };
    }
    if let Some(q) = quantum {
        let t = q * &s(1);
        high = if n % 2 == 1 { &high + &t } else { &high - &t };
    }
    gens.push(high);
    gens
}

/// `det(s_{1+j-i})` of size `r`.
fn delta(ring: &Ring, r: usize, s: &dyn Fn(isize) -> Polynomial) -> Polynomial {
    let m: Vec<Vec<Polynomial>> =
        (0..r).map(|i| (0..r).map(|j| s(1 + j as isize - i as isize)).collect()).collect();
    determinant(ring, &m)
}

/// Generators of presentation II: the coefficients of `x^2, ..., x^{2n}` in
/// `(1 + b1 x^2 + ... + b_{n-2} x^{2n-4})(1 + (2a2 - a1^2) x^2 + a2^2 x^4)`
/// minus `1 - q a1 x^{2n}`.
fn presentation_two_generators(ring: &Ring, n: usize, quantum: Option<&Polynomial>) -> Vec<Polynomial> {
    let a1 = ring.var(0);
    let a2 = ring.var(1);
    let b = |m: isize| -> Polynomial {
        match m {
            0 => ring.one(),
            m if m >= 1 && m as usize <= n - 2 => ring.var(1 + m as usize),
            _ => ring.zero(),
        }
    };
    let mid = &a2.scale(&rat(2)) - &a1.pow(2);
    let last = a2.pow(2);
    (1..=n as isize)
        .map(|m| {
            let mut g = &(&b(m) + &(&mid * &b(m - 1))) + &(&last * &b(m - 2));
            if m == n as isize {
                if let Some(q) = quantum {
                    g = &g + &(q * &a1);
                }
            }
            g
        })
        .collect()
}

fn q_image(spec: &PresentationSpec, ring: &Ring) -> Option<Polynomial> {
    if !spec.variant.is_quantum() {
        return None;
    }
    Some(match spec.q_mode {
        QMode::Specialize1 => ring.one(),
        QMode::Symbolic => ring.var(ring.nvars() - 1),
    })
}

/// The generators exactly as displayed, in the spec's ring.
pub fn build_presentation(spec: &PresentationSpec) -> Result<Ideal> {
    check_n(spec.n)?;
    let ring = spec.ring();
    let q = q_image(spec, &ring);
    let gens = if spec.variant.uses_sigma() {
        let sigma: Vec<Polynomial> = core::iter::once(ring.one()).chain((0..2 * spec.n - 2).map(|i| ring.var(i))).collect();
        presentation_one_generators(&ring, spec.n, &sigma, q.as_ref())
    } else {
        presentation_two_generators(&ring, spec.n, q.as_ref())
    };
    Ideal::new(&ring, gens)
}

/// Ring of presentation II without `q`.
pub fn ab_ring(n: usize) -> Result<Ring> {
    Ok(PresentationSpec::new(n, Variant::ClassicalII, QMode::Specialize1)?.ring())
}

/// `s_k` as a polynomial in `a1, a2, b_i`: the degree-`k` part of
/// `(1 + b1 + ... + b_{n-2})(1 - a1 + a2)`.
pub fn sigma_in_ab(n: usize, k: usize) -> Result<Polynomial> {
    check_n(n)?;
    if k == 0 || k > 2 * n - 2 {
        return Err(Error::OutOfRange(format!("sigma index {k} outside [1, {}]", 2 * n - 2)));
    }
    let ring = ab_ring(n)?;
    Ok(sigma_image(&ring, n, k))
}

fn sigma_image(ring: &Ring, n: usize, k: usize) -> Polynomial {
    let e = |j: usize| -> Polynomial {
        match j {
            0 => ring.one(),
            1 => -ring.var(0),
            2 => ring.var(1),
            _ => ring.zero(),
        }
    };
    let mut acc = ring.zero();
    for i in 0..=k / 2 {
        if i > n - 2 {
            break;
        }
        let b = if i == 0 { ring.one() } else { ring.var(1 + i) };
        acc = &acc + &(&b * &e(k - 2 * i));
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomomorphismReport {
    pub n: usize,
    pub quantum: bool,
    /// Global sign `λ` with `q ↦ λq` making the map well defined; always
    /// `1` in the classical case.
    pub lambda: i32,
    /// Normal forms of the images of the presentation I generators.
    pub images: Vec<Polynomial>,
}

/// Maps presentation I to presentation II through [`sigma_in_ab`] and checks
/// that every relation lands in the ideal (`q = 1`).
pub fn verify_homomorphism(n: usize, quantum: bool) -> Result<HomomorphismReport> {
    check_n(n)?;
    let target = PresentationSpec::new(n, if quantum { Variant::QuantumII } else { Variant::ClassicalII }, QMode::Specialize1)?;
    let ideal = build_presentation(&target)?;
    let ring = ideal.ring().clone();
    let sigma: Vec<Polynomial> = (0..=2 * n - 2).map(|k| if k == 0 { ring.one() } else { sigma_image(&ring, n, k) }).collect();
    let lambdas: &[i32] = if quantum { &[1, -1] } else { &[1] };
    for &lambda in lambdas {
        let q = quantum.then(|| Polynomial::constant(&ring, rat(lambda.into())));
        let gens = presentation_one_generators(&ring, n, &sigma, q.as_ref());
        let images = gens.iter().map(|g| ideal.normal_form(g)).collect::<Result<Vec<_>>>()?;
        if images.iter().all(Polynomial::is_zero) {
            return Ok(HomomorphismReport { n, quantum, lambda, images });
        }
    }
    Err(Error::Falsified(format!("no sign q -> ±q makes presentation I map into presentation II for n = {n}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub total_dim: usize,
    pub tangent_dim_origin: usize,
    pub local_length_origin: usize,
    pub offorigin_dim: usize,
    pub offorigin_distinct_points: usize,
}

impl SpectrumReport {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (
            self.total_dim,
            self.tangent_dim_origin,
            self.local_length_origin,
            self.offorigin_dim,
            self.offorigin_distinct_points,
        )
    }
}

/// Coefficients 1, 2, 3, 5, 7, 11, ... of the separating linear form,
/// starting `offset` places into the sequence.
fn linear_form_coefficients(count: usize, offset: usize) -> Vec<i64> {
    let mut seq: Vec<i64> = alloc::vec![1];
    let mut c = 2;
    while seq.len() < count + offset {
        if (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            seq.push(c);
        }
        c += 1;
    }
    seq[offset..offset + count].to_vec()
}

const SEPARATION_ATTEMPTS: usize = 3;

/// Splits `QH(IG(2,2n))` at `q = 1` into the part supported at the origin
/// and the rest, and counts the points of the rest.
pub fn decompose_spectrum(n: usize) -> Result<SpectrumReport> {
    let spec = PresentationSpec::new(n, Variant::QuantumII, QMode::Specialize1)?;
    let ideal = build_presentation(&spec)?;
    let ring = ideal.ring().clone();
    let total_dim = ideal.quotient_dimension().finite().ok_or(Error::NotZeroDimensional)?;

    if ideal.generators().iter().any(|g| !g.constant_coefficient().is_zero()) {
        return Err(Error::Falsified("origin is not a point of the spectrum".into()));
    }
    let linear: Vec<Vec<Rational>> = ideal.generators().iter().map(Polynomial::linear_coefficients).collect();
    let tangent_dim_origin = ring.nvars() - rank(&linear);

    let off = saturate_at_origin(&ideal)?;
    let offorigin_dim = off.quotient_dimension().finite().ok_or(Error::NotZeroDimensional)?;
    let local_length_origin = total_dim - offorigin_dim;

    let offorigin_distinct_points = count_points(&off, offorigin_dim)?;
    Ok(SpectrumReport { total_dim, tangent_dim_origin, local_length_origin, offorigin_dim, offorigin_distinct_points })
}

/// `I : m^∞` for the maximal ideal `m` of the origin, as the intersection of
/// the saturations by each variable: a point survives one of them exactly
/// when it has a nonzero coordinate.
pub fn saturate_at_origin(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut acc: Option<Ideal> = None;
    for v in 0..ring.nvars() {
        let s = ideal.saturate(&ring.var(v))?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.intersect(&s)?,
        });
    }
    acc.ok_or(Error::OutOfRange("ring without variables".into()))
}

/// Distinct points of a zero-dimensional ideal through the eliminant of a
/// linear form. A form that fails to separate `expected` points is
/// replaced by the next one in the sequence.
fn count_points(ideal: &Ideal, expected: usize) -> Result<usize> {
    let ring = ideal.ring();
    let univariate = Ring::new(&["w"], TermOrder::Grevlex)?;
    let mut last = 0;
    for attempt in 0..SEPARATION_ATTEMPTS {
        let form = linear_form(ring, attempt);
        let eliminant = ideal.groebner().minimal_polynomial(&form, &univariate)?;
        last = distinct_root_count(&eliminant)?;
        if last == expected {
            break;
        }
    }
    Ok(last)
}

/// `a1 + 2 a2 + 3 b1 + 5 b2 + ...`, coefficients shifted by `attempt`.
pub fn linear_form(ring: &Ring, attempt: usize) -> Polynomial {
    let coeffs = linear_form_coefficients(ring.nvars(), attempt);
    let mut form = ring.zero();
    for (v, c) in coeffs.iter().enumerate() {
        form = &form + &ring.var(v).scale(&rat(*c));
    }
    form
}

/// Off-origin point count by the substitution `a1 = z1 + z2`, `a2 = z1 z2`:
/// roots `z` of `(z^{2n} - z)^{2n} = z^{2n}` other than `z = 0`, `z2 = 0`
/// and `z1 = z2`, counted up to swapping `z1, z2`.
pub fn count_offorigin_by_substitution(n: usize) -> Result<usize> {
    check_n(n)?;
    let ring = Ring::new(&["z"], TermOrder::Grevlex)?;
    let z = ring.var(0);
    let e = 2 * n as u32;
    let zp = z.pow(e);
    let f = &(&zp - &z).pow(e) - &zp;
    let mut s = squarefree_part(&f)?;
    s = remove_common_roots(&s, &z)?;
    s = remove_common_roots(&s, &(&zp - &z))?;
    s = remove_common_roots(&s, &(&zp - &z.scale(&rat(2))))?;
    let remaining = s.degree_in(0) as usize;
    if !remaining.is_multiple_of(2) {
        return Err(Error::Falsified(format!("odd number {remaining} of remaining roots")));
    }
    Ok(remaining / 2)
}

/// `true` when every generator is weighted-homogeneous for the spec's
/// grading.
pub fn is_weighted_homogeneous(spec: &PresentationSpec, ideal: &Ideal) -> bool {
    let w = spec.weights();
    ideal.generators().iter().all(|g| g.is_zero() || g.weighted_homogeneous_degree(&w).is_some())
}

/// Quotient dimension, or `NotZeroDimensional`.
pub fn presentation_dimension(spec: &PresentationSpec) -> Result<usize> {
    match build_presentation(spec)?.quotient_dimension() {
        QuotientDimension::Finite(d) => Ok(d),
        QuotientDimension::Infinite => Err(Error::NotZeroDimensional),
    }
}
