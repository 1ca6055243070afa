use alloc::vec::Vec;

use super::bundles::{Bundle, Space, SpaceKind};
use super::ext::{complex_terms, ext_bundles, ExtProfile};

/// `S^{i-1}U*(j)` for each block `j` of the support partition, ordered by
/// block and then by `i`.
pub fn lefschetz_collection(space: &Space) -> Vec<Bundle> {
    let k = space.half();
    let support: Vec<usize> = match space.kind() {
        SpaceKind::Gr if space.param() % 2 == 1 => alloc::vec![k; 2 * k + 1],
        SpaceKind::Gr => core::iter::repeat_n(k, k).chain(core::iter::repeat_n(k - 1, k)).collect(),
        SpaceKind::Igr => core::iter::repeat_n(k, k - 1).chain(core::iter::repeat_n(k - 1, k)).collect(),
    };
    support
        .iter()
        .enumerate()
        .flat_map(|(j, &len)| (0..len).map(move |i| Bundle::new(i as u32, j as i64)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollectionFailure {
    NotExceptional { object: Bundle, profile: ExtProfile },
    /// `Ext(later, earlier) ≠ 0`.
    WrongDirection { later: Bundle, earlier: Bundle, profile: ExtProfile },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionReport {
    pub objects: Vec<Bundle>,
    pub pairs_checked: usize,
    pub failures: Vec<CollectionFailure>,
}

impl CollectionReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_collection(space: &Space) -> CollectionReport {
    let objects = lefschetz_collection(space);
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for (x, &e) in objects.iter().enumerate() {
        let own = ext_bundles(space, e, e);
        pairs_checked += 1;
        if own.dims.len() != 1 || own.dim(0) != 1 {
            failures.push(CollectionFailure::NotExceptional { object: e, profile: own });
        }
        for &f in &objects[..x] {
            let p = ext_bundles(space, e, f);
            pairs_checked += 1;
            if !p.is_zero() {
                failures.push(CollectionFailure::WrongDirection { later: e, earlier: f, profile: p });
            }
        }
    }
    CollectionReport { objects, pairs_checked, failures }
}

/// Alternating sum of `χ(T_s(j))` over the glued complex, for
/// `j = 0..2k-1`; exactness forces every sum to vanish.
pub fn euler_consistency(space: &Space, k: usize) -> Vec<i64> {
    let terms = complex_terms(k);
    (0..2 * k as i64)
        .map(|j| {
            terms
                .iter()
                .enumerate()
                .map(|(s, t)| {
                    let chi = t.mult as i64 * space.euler_characteristic(t.bundle.twisted(j));
                    if s % 2 == 0 { -chi } else { chi }
                })
                .sum()
        })
        .collect()
}

/// `dim Ext^d(E, F) = dim Ext^{dim - d}(F, E(-index))` in every degree.
pub fn serre_duality_holds(space: &Space, e: Bundle, f: Bundle) -> bool {
    let forward = ext_bundles(space, e, f);
    let backward = ext_bundles(space, f, e.twisted(-space.index()));
    let n = space.dimension();
    let mirrored: Vec<(i64, u64)> = backward.dims.iter().rev().map(|(&d, &v)| (n - d, v)).collect();
    forward.dims.into_iter().collect::<Vec<_>>() == mirrored
}
