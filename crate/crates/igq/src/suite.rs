use std::fmt::Display;
use std::time::Instant;

use igq_core::bbw::{
    check_f_orthogonality, euler_consistency, ext_bundles, ext_f_pair, verify_collection, Bundle, ExtProfile, Space,
    SpaceKind,
};
use igq_core::deformation::{regularity_corank, verify_lemma_presentation};
use igq_core::presentations::{
    build_presentation, count_offorigin_by_substitution, decompose_spectrum, is_weighted_homogeneous,
    presentation_dimension, verify_homomorphism, PresentationSpec, QMode, SpectrumReport, Variant,
};
use igq_core::unfolding::match_spectrum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub claim_id: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
    /// Wall clock; kept out of serialized rows so reports are reproducible.
    #[serde(skip)]
    pub millis: u128,
}

impl CheckResult {
    fn compare(claim_id: String, computed: impl Display, expected: impl Display, started: Instant) -> CheckResult {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let status = if computed == expected { Status::Pass } else { Status::Fail };
        CheckResult { claim_id, computed, expected, status, millis: started.elapsed().as_millis() }
    }

    fn failed(claim_id: String, err: impl Display, expected: impl Display, started: Instant) -> CheckResult {
        CheckResult {
            claim_id,
            computed: format!("error: {err}"),
            expected: expected.to_string(),
            status: Status::Fail,
            millis: started.elapsed().as_millis(),
        }
    }
}

/// Checks of the quantum side, in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum QhCheck {
    Dims,
    Homomorphism,
    Spectrum,
    Zcount,
    Lemma,
    Regularity,
    Unfolding,
}

impl QhCheck {
    pub const ALL: [QhCheck; 7] = [
        QhCheck::Dims,
        QhCheck::Homomorphism,
        QhCheck::Spectrum,
        QhCheck::Zcount,
        QhCheck::Lemma,
        QhCheck::Regularity,
        QhCheck::Unfolding,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum DcatCheck {
    Lefschetz,
    Keyext,
    Residual,
    Euler,
}

impl DcatCheck {
    pub const ALL: [DcatCheck; 4] = [DcatCheck::Lefschetz, DcatCheck::Keyext, DcatCheck::Residual, DcatCheck::Euler];
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("n = {n} is outside [2, {max}]")]
    NOutOfRange { n: usize, max: usize },
    #[error("k = {k} is outside [2, {max}]")]
    KOutOfRange { k: usize, max: usize },
}

fn sorted<T: Ord + Copy>(checks: &[T]) -> Vec<T> {
    let mut v = checks.to_vec();
    v.sort();
    v.dedup();
    v
}

fn tuple(s: &SpectrumReport) -> String {
    format!("{:?}", s.as_tuple())
}

/// Runs the selected checks for `IG(2,2n)`. A failing check becomes a
/// `FAIL` row; the batch always runs to the end.
pub fn run_qh_suite(n: usize, checks: &[QhCheck], q_mode: QMode, max_n: usize) -> Result<Vec<CheckResult>, SuiteError> {
    if n < 2 || n > max_n {
        return Err(SuiteError::NOutOfRange { n, max: max_n });
    }
    let mut rows = Vec::new();
    // computed at most once, shared by the checks that need it
    let mut spectrum: Option<Result<SpectrumReport, String>> = None;
    let mut get_spectrum = || {
        let t = Instant::now();
        (spectrum.get_or_insert_with(|| decompose_spectrum(n).map_err(|e| e.to_string())).clone(), t)
    };
    let dim = 2 * n * (n - 1);
    let points = (2 * n - 1) * (n - 1);

    for check in sorted(checks) {
        match check {
            QhCheck::Dims => {
                for variant in Variant::ALL {
                    let t = Instant::now();
                    let id = format!("dims.n={n}.{}", variant.name());
                    let spec = PresentationSpec::new(n, variant, QMode::Specialize1).expect("n checked");
                    rows.push(match presentation_dimension(&spec) {
                        Ok(d) => CheckResult::compare(id, d, dim, t),
                        Err(e) => CheckResult::failed(id, e, dim, t),
                    });
                }
                if q_mode == QMode::Symbolic {
                    for variant in Variant::ALL {
                        let t = Instant::now();
                        let id = format!("weighted-homogeneous.n={n}.{}", variant.name());
                        let spec = PresentationSpec::new(n, variant, QMode::Symbolic).expect("n checked");
                        rows.push(match build_presentation(&spec) {
                            Ok(ideal) => CheckResult::compare(id, is_weighted_homogeneous(&spec, &ideal), true, t),
                            Err(e) => CheckResult::failed(id, e, true, t),
                        });
                    }
                }
            }
            QhCheck::Homomorphism => {
                for quantum in [false, true] {
                    let t = Instant::now();
                    let id = format!("homomorphism.n={n}.{}", if quantum { "quantum" } else { "classical" });
                    let expected = if quantum { "images vanish for lambda in {1, -1}" } else { "images vanish for lambda = 1" };
                    rows.push(match verify_homomorphism(n, quantum) {
                        Ok(r) if !quantum || r.lambda.abs() == 1 => CheckResult {
                            claim_id: id,
                            computed: format!("images vanish for lambda = {}", r.lambda),
                            expected: expected.into(),
                            status: Status::Pass,
                            millis: t.elapsed().as_millis(),
                        },
                        Ok(r) => CheckResult::failed(id, format!("lambda = {}", r.lambda), expected, t),
                        Err(e) => CheckResult::failed(id, e, expected, t),
                    });
                }
            }
            QhCheck::Spectrum => {
                let (s, t) = get_spectrum();
                let id = format!("spectrum.n={n}");
                let expected = if n == 2 { "(4, 0, 1, 3, 3)".to_string() } else { format!("{:?}", (dim, 1, n - 1, points, points)) };
                rows.push(match s {
                    Ok(s) => CheckResult::compare(id, tuple(&s), expected, t),
                    Err(e) => CheckResult::failed(id, e, expected, t),
                });
            }
            QhCheck::Zcount => {
                let t = Instant::now();
                let id = format!("zcount.n={n}");
                let by_substitution = count_offorigin_by_substitution(n);
                rows.push(match &by_substitution {
                    Ok(c) => CheckResult::compare(id, c, points, t),
                    Err(e) => CheckResult::failed(id, e, points, t),
                });
                let (s, t) = get_spectrum();
                let id = format!("zcount-agreement.n={n}");
                rows.push(match (by_substitution, s) {
                    (Ok(c), Ok(s)) => CheckResult::compare(
                        id,
                        format!("substitution {c}, groebner {}", s.offorigin_distinct_points),
                        format!("substitution {c}, groebner {c}"),
                        t,
                    ),
                    (Err(e), _) => CheckResult::failed(id, e, "equal counts", t),
                    (_, Err(e)) => CheckResult::failed(id, e, "equal counts", t),
                });
            }
            QhCheck::Lemma if n >= 3 => {
                let t = Instant::now();
                let sign = if n.is_multiple_of(2) { "" } else { "-" };
                let expected = match q_mode {
                    QMode::Specialize1 => format!("{sign}1"),
                    QMode::Symbolic => format!("{sign}q"),
                };
                let id_low = format!("lemma-sigma-t.n={n}");
                let id_red = format!("lemma-delta-reduction.n={n}");
                match verify_lemma_presentation(n, q_mode) {
                    Ok(r) => {
                        rows.push(CheckResult::compare(id_low, simple(&r.sigma_low_t.to_string()), expected, t));
                        let computed = format!("t: {}, t^0: {}", simple(&r.reduction_t.to_string()), simple(&r.reduction_t0.to_string()));
                        rows.push(CheckResult::compare(id_red, computed, "t: 0, t^0: 0", t));
                    }
                    Err(e) => {
                        rows.push(CheckResult::failed(id_low, &e, expected, t));
                        rows.push(CheckResult::failed(id_red, e, "t: 0, t^0: 0", t));
                    }
                }
            }
            QhCheck::Lemma => {}
            QhCheck::Regularity => {
                let t = Instant::now();
                let id = format!("regularity-corank.n={n}");
                rows.push(match regularity_corank(n) {
                    Ok(c) => CheckResult::compare(id, c, 1, t),
                    Err(e) => CheckResult::failed(id, e, 1, t),
                });
            }
            QhCheck::Unfolding => {
                let (s, t) = get_spectrum();
                let id = format!("unfolding.n={n}");
                let expected = format!("quantum {:?} = germ {:?}, A_{}", local_pair(n), local_pair(n), n - 1);
                let outcome = s.and_then(|s| match_spectrum(n, s).map_err(|e| e.to_string()));
                rows.push(match outcome {
                    Ok(m) => {
                        let computed = format!("quantum {:?} = germ {:?}, {}", m.quantum, m.germ, m.label);
                        let computed = if m.matches() { computed } else { computed.replace(" = ", " != ") };
                        CheckResult::compare(id, computed, expected, t)
                    }
                    Err(e) => CheckResult::failed(id, e, expected, t),
                });
            }
        }
    }
    Ok(rows)
}

/// `(embedding dimension, length)` of `K[ε]/(ε^{n-1})`.
fn local_pair(n: usize) -> (usize, usize) {
    if n == 2 {
        (0, 1)
    } else {
        (1, n - 1)
    }
}

/// Canonical text with unit denominators, unit coefficients and unit
/// exponents dropped: `-1/1*q^1` becomes `-q`.
fn simple(canonical: &str) -> String {
    canonical
        .split(" + ")
        .map(|term| {
            let mut parts = term.split('*');
            let coeff = parts.next().unwrap_or_default();
            let coeff = coeff.strip_suffix("/1").unwrap_or(coeff);
            let factors: Vec<&str> = parts.map(|f| f.strip_suffix("^1").unwrap_or(f)).collect();
            match (coeff, factors.is_empty()) {
                (c, true) => c.to_string(),
                ("1", false) => factors.join("*"),
                ("-1", false) => format!("-{}", factors.join("*")),
                (c, false) => format!("{c}*{}", factors.join("*")),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show_profile(p: &ExtProfile) -> String {
    let body = if p.is_zero() {
        "0".to_string()
    } else {
        p.dims.iter().map(|(d, v)| format!("{v} in degree {d}")).collect::<Vec<_>>().join(", ")
    };
    if p.conclusive {
        body
    } else {
        format!("{body} (E1, inconclusive, euler {})", p.euler)
    }
}

fn profile_row(id: String, p: &ExtProfile, expected: &str, t: Instant) -> CheckResult {
    let mut row = CheckResult::compare(id, show_profile(p), expected, t);
    if !p.conclusive {
        row.status = Status::Fail;
    }
    row
}

/// Runs the selected checks on `G(2,2k)` or `IG(2,2k)`.
pub fn run_dcat_suite(k: usize, kind: SpaceKind, checks: &[DcatCheck], max_k: usize) -> Result<Vec<CheckResult>, SuiteError> {
    if k < 2 || k > max_k {
        return Err(SuiteError::KOutOfRange { k, max: max_k });
    }
    let space = match kind {
        SpaceKind::Gr => Space::grassmannian(2 * k),
        SpaceKind::Igr => Space::isotropic(k),
    }
    .expect("k checked");
    let name = space.name();
    let mut rows = Vec::new();

    for check in sorted(checks) {
        match check {
            DcatCheck::Lefschetz => {
                let mut spaces = vec![space];
                if kind == SpaceKind::Gr {
                    spaces.push(Space::grassmannian(2 * k + 1).expect("in range"));
                }
                for s in spaces {
                    let t = Instant::now();
                    let r = verify_collection(&s);
                    let computed = format!("{} objects, {} failures", r.objects.len(), r.failures.len());
                    let expected = format!("{} objects, 0 failures", r.objects.len());
                    rows.push(CheckResult::compare(format!("lefschetz.{}", s.name()), computed, expected, t));
                }
                if kind == SpaceKind::Igr {
                    let t = Instant::now();
                    let id = format!("lefschetz-count.{name}");
                    let spec = PresentationSpec::new(k, Variant::ClassicalII, QMode::Specialize1).expect("k checked");
                    let count = verify_collection(&space).objects.len();
                    rows.push(match presentation_dimension(&spec) {
                        Ok(d) => CheckResult::compare(id, format!("{count} objects, rank {d}"), format!("{d} objects, rank {d}"), t),
                        Err(e) => CheckResult::failed(id, e, 2 * k * (k - 1), t),
                    });
                }
            }
            DcatCheck::Keyext => {
                let t = Instant::now();
                let e = Bundle::new(k as u32 - 1, 0);
                let p = ext_bundles(&space, e, e.twisted(1 - k as i64));
                let expected = match kind {
                    SpaceKind::Igr => format!("1 in degree {}", 2 * k - 3),
                    SpaceKind::Gr => "0".to_string(),
                };
                rows.push(profile_row(format!("keyext.{name}"), &p, &expected, t));
            }
            DcatCheck::Residual => {
                for i in 1..=k {
                    let t = Instant::now();
                    let id = format!("f-orthogonality.{name}.i={i}");
                    rows.push(match check_f_orthogonality(&space, i) {
                        Ok(r) => {
                            let bad = r.entries.iter().filter(|(_, p)| !p.is_zero() || !p.conclusive).count();
                            CheckResult::compare(
                                id,
                                format!("{bad} of {} nonzero", r.entries.len()),
                                format!("0 of {} nonzero", r.entries.len()),
                                t,
                            )
                        }
                        Err(e) => CheckResult::failed(id, e, "all zero", t),
                    });
                }
                for i in 1..=k {
                    for j in 1..=k {
                        let t = Instant::now();
                        let id = format!("residual.{name}.i={i}.j={j}");
                        let p = match ext_f_pair(&space, i, j, (k - i) as i64, (k - j) as i64) {
                            Ok(p) => p,
                            Err(e) => {
                                rows.push(CheckResult::failed(id, e, "profile", t));
                                continue;
                            }
                        };
                        let expected = match (kind, i.cmp(&j)) {
                            (_, std::cmp::Ordering::Equal) => Some("1 in degree 0"),
                            (SpaceKind::Gr, _) => Some("0"),
                            (SpaceKind::Igr, std::cmp::Ordering::Greater) if i == j + 1 => Some("1 in degree 0"),
                            (SpaceKind::Igr, std::cmp::Ordering::Greater) => Some("0"),
                            (SpaceKind::Igr, std::cmp::Ordering::Less) => None,
                        };
                        rows.push(match expected {
                            Some(x) if j < i => profile_row(id, &p, x, t),
                            Some(x) => {
                                let mut row = CheckResult::compare(id, show_profile(&p), x, t);
                                if !p.conclusive {
                                    row.status = Status::Inconclusive;
                                }
                                row
                            }
                            // no claim in this direction; reported, never asserted
                            None => CheckResult {
                                claim_id: id,
                                computed: show_profile(&p),
                                expected: "not asserted".into(),
                                status: Status::Inconclusive,
                                millis: t.elapsed().as_millis(),
                            },
                        });
                    }
                }
            }
            DcatCheck::Euler => {
                let t = Instant::now();
                let sums = euler_consistency(&space, k);
                let zeros = vec![0i64; sums.len()];
                rows.push(CheckResult::compare(format!("euler.{name}"), format!("{sums:?}"), format!("{zeros:?}"), t));
            }
        }
    }
    Ok(rows)
}
