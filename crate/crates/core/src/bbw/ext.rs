use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::bundles::{hom_bundle, Bundle, BundleTerm, Space};
use super::weyl::Cohomology;
use crate::{Error, Result};

/// Dimensions of `Ext^d` by degree `d`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtProfile {
    pub dims: BTreeMap<i64, u64>,
    /// No two nonzero degrees are adjacent, so the spectral sequence that
    /// produced `dims` had no room for differentials.
    pub conclusive: bool,
    pub euler: i64,
}

impl ExtProfile {
    fn from_page(page: BTreeMap<i64, u64>) -> ExtProfile {
        let dims: BTreeMap<i64, u64> = page.into_iter().filter(|&(_, v)| v > 0).collect();
        let conclusive = !dims.keys().any(|d| dims.contains_key(&(d + 1)));
        let euler = dims.iter().map(|(d, v)| if d % 2 == 0 { *v as i64 } else { -(*v as i64) }).sum();
        ExtProfile { dims, conclusive, euler }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn dim(&self, degree: i64) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }
}

/// `Ext^•(E, F)` for irreducible bundles: cohomology of `Hom(E, F)`.
/// A direct sum of bundles carries no differentials, so the profile is
/// always conclusive.
pub fn ext_bundles(space: &Space, e: Bundle, f: Bundle) -> ExtProfile {
    let mut page = BTreeMap::new();
    accumulate(space, e, f, 0, 1, &mut page);
    ExtProfile { conclusive: true, ..ExtProfile::from_page(page) }
}

fn accumulate(space: &Space, e: Bundle, f: Bundle, offset: i64, mult: u64, page: &mut BTreeMap<i64, u64>) {
    for t in hom_bundle(e.sym, e.twist, f.sym, f.twist).terms() {
        if let Cohomology::Nonzero { degree, rep_dimension, .. } = space.cohomology(t.bundle) {
            *page.entry(i64::from(degree) + offset).or_insert(0) += mult * t.mult * rep_dimension;
        }
    }
}

/// E1 page of `Ext^•(A, B)` for complexes given by their terms; a term in
/// position `p` of `A` against one in position `q` of `B` contributes to
/// total degree `e + q - p`.
pub fn ext_profile_of_complexes(space: &Space, source: &[BundleTerm], target: &[BundleTerm]) -> ExtProfile {
    let mut page = BTreeMap::new();
    for s in source {
        for t in target {
            accumulate(space, s.bundle, t.bundle, t.shift - s.shift, s.mult * t.mult, &mut page);
        }
    }
    ExtProfile::from_page(page)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The long exact sequence `T_1 → ... → T_{2k}`: first
/// `Λ^j V ⊗ S^{k-1-j} U*(j - k)` for `j = 0..k-1`, then the Koszul part
/// `Λ^j V ⊗ S^{k-1-j} U*` for `j = k-1` down to `0`. `Λ^j V` is recorded
/// as the multiplicity `C(2k, j)`; shifts are left at zero.
pub fn complex_terms(k: usize) -> Vec<BundleTerm> {
    let k64 = k as i64;
    let n = 2 * k as u64;
    let mut out = Vec::with_capacity(2 * k);
    for j in 0..k {
        let bundle = Bundle::new((k - 1 - j) as u32, j as i64 - k64);
        out.push(BundleTerm { bundle, mult: binomial(n, j as u64), shift: 0 });
    }
    for j in (0..k).rev() {
        let bundle = Bundle::new((k - 1 - j) as u32, 0);
        out.push(BundleTerm { bundle, mult: binomial(n, j as u64), shift: 0 });
    }
    out
}

/// Resolution of `F_i`: `Left` uses `T_1..T_i` with `T_s` in position
/// `s - i`; `Right` uses `T_{i+1}..T_{2k}` with `T_s` in position
/// `s - i - 1`.
pub fn f_complex(i: usize, k: usize, side: Side) -> Result<Vec<BundleTerm>> {
    if k < 1 || i < 1 || i > k {
        return Err(Error::OutOfRange(format!("F_{i} needs 1 <= i <= k = {k}")));
    }
    let terms = complex_terms(k);
    let i64_ = i as i64;
    Ok(match side {
        Side::Left => terms
            .iter()
            .take(i)
            .enumerate()
            .map(|(s, t)| BundleTerm { shift: s as i64 + 1 - i64_, ..*t })
            .collect(),
        Side::Right => terms
            .iter()
            .enumerate()
            .skip(i)
            .map(|(s, t)| BundleTerm { shift: s as i64 - i64_, ..*t })
            .collect(),
    })
}

fn twist_terms(terms: &[BundleTerm], by: i64) -> Vec<BundleTerm> {
    terms.iter().map(|t| BundleTerm { bundle: t.bundle.twisted(by), ..*t }).collect()
}

/// `Ext^•(F_i(twist_i), F_j(twist_j))` from the right resolution of the
/// source and the left resolution of the target.
pub fn ext_f_pair(space: &Space, i: usize, j: usize, twist_i: i64, twist_j: i64) -> Result<ExtProfile> {
    let k = space.half();
    let source = twist_terms(&f_complex(i, k, Side::Right)?, twist_i);
    let target = twist_terms(&f_complex(j, k, Side::Left)?, twist_j);
    Ok(ext_profile_of_complexes(space, &source, &target))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub i: usize,
    /// Every `(G, Ext(G, F_i(k-i)))` checked.
    pub entries: Vec<(Bundle, ExtProfile)>,
}

impl OrthogonalityReport {
    pub fn passes(&self) -> bool {
        self.entries.iter().all(|(_, p)| p.is_zero())
    }
}

/// `Ext^•(S^a U*(b), F_i(k-i))` for `a = 0..k-2`, `b = 0..k-i`, through
/// the left resolution.
pub fn check_f_orthogonality(space: &Space, i: usize) -> Result<OrthogonalityReport> {
    let k = space.half();
    let target = twist_terms(&f_complex(i, k, Side::Left)?, (k - i) as i64);
    let mut entries = Vec::new();
    for b in 0..=(k - i) as i64 {
        for a in 0..k.saturating_sub(1) as u32 {
            let g = Bundle::new(a, b);
            let source = [BundleTerm { bundle: g, mult: 1, shift: 0 }];
            entries.push((g, ext_profile_of_complexes(space, &source, &target)));
        }
    }
    Ok(OrthogonalityReport { i, entries })
}
