use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::weyl::{bbw_gl, bbw_sp, Cohomology};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// `G(2,m)`.
    Gr,
    /// `IG(2,2k)`.
    Igr,
}

/// `G(2,m)` with `m = param`, or `IG(2,2k)` with `k = param`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    kind: SpaceKind,
    param: usize,
}

impl Space {
    pub fn new(kind: SpaceKind, param: usize) -> Result<Space> {
        let ok = match kind {
            SpaceKind::Gr => (4..=64).contains(&param),
            SpaceKind::Igr => (2..=32).contains(&param),
        };
        if !ok {
            return Err(Error::OutOfRange(format!("{kind:?} with parameter {param}")));
        }
        Ok(Space { kind, param })
    }

    pub fn grassmannian(m: usize) -> Result<Space> {
        Space::new(SpaceKind::Gr, m)
    }

    pub fn isotropic(k: usize) -> Result<Space> {
        Space::new(SpaceKind::Igr, k)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn dimension(&self) -> i64 {
        let p = self.param as i64;
        match self.kind {
            SpaceKind::Gr => 2 * (p - 2),
            SpaceKind::Igr => 4 * p - 5,
        }
    }

    /// Fano index: `K = O(-index)`.
    pub fn index(&self) -> i64 {
        let p = self.param as i64;
        match self.kind {
            SpaceKind::Gr => p,
            SpaceKind::Igr => 2 * p - 1,
        }
    }

    /// Dimension of the ambient vector space `V`.
    pub fn v_dimension(&self) -> usize {
        match self.kind {
            SpaceKind::Gr => self.param,
            SpaceKind::Igr => 2 * self.param,
        }
    }

    /// The `k` of the appendix complexes: `m / 2` or `k`.
    pub fn half(&self) -> usize {
        match self.kind {
            SpaceKind::Gr => self.param / 2,
            SpaceKind::Igr => self.param,
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            SpaceKind::Gr => format!("G(2,{})", self.param),
            SpaceKind::Igr => format!("IG(2,{})", 2 * self.param),
        }
    }

    /// `H^•(S^a U*(p))`.
    pub fn cohomology(&self, bundle: Bundle) -> Cohomology {
        let mut w = alloc::vec![0i64; self.param];
        w[0] = i64::from(bundle.sym) + bundle.twist;
        w[1] = bundle.twist;
        let r = match self.kind {
            SpaceKind::Gr => bbw_gl(&w),
            SpaceKind::Igr => bbw_sp(&w),
        };
        r.expect("bundle weights are dominant for GL(2)")
    }

    /// `χ(S^a U*(p))`.
    pub fn euler_characteristic(&self, bundle: Bundle) -> i64 {
        self.cohomology(bundle).euler()
    }
}

/// `S^sym U*(twist)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bundle {
    pub sym: u32,
    pub twist: i64,
}

impl Bundle {
    pub fn new(sym: u32, twist: i64) -> Bundle {
        Bundle { sym, twist }
    }

    pub fn twisted(self, by: i64) -> Bundle {
        Bundle { sym: self.sym, twist: self.twist + by }
    }

    pub fn rank(self) -> u64 {
        u64::from(self.sym) + 1
    }
}

impl core::fmt::Display for Bundle {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match (self.sym, self.twist) {
            (0, t) => write!(f, "O({t})"),
            (1, t) => write!(f, "U*({t})"),
            (s, t) => write!(f, "S^{s}U*({t})"),
        }
    }
}

/// `mult` copies of a bundle sitting in position `shift` of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleTerm {
    pub bundle: Bundle,
    pub mult: u64,
    pub shift: i64,
}

/// Formal sum of bundle terms, duplicates merged, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BundleSum {
    terms: Vec<BundleTerm>,
}

impl BundleSum {
    pub fn new(terms: Vec<BundleTerm>) -> BundleSum {
        let mut terms: Vec<BundleTerm> = terms.into_iter().filter(|t| t.mult > 0).collect();
        terms.sort_by_key(|t| (t.shift, t.bundle));
        let mut out: Vec<BundleTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.bundle == t.bundle && last.shift == t.shift => last.mult += t.mult,
                _ => out.push(t),
            }
        }
        BundleSum { terms: out }
    }

    pub fn terms(&self) -> &[BundleTerm] {
        &self.terms
    }

    pub fn rank(&self) -> u64 {
        self.terms.iter().map(|t| t.mult * t.bundle.rank()).sum()
    }

    pub fn twisted(&self, by: i64) -> BundleSum {
        BundleSum {
            terms: self.terms.iter().map(|t| BundleTerm { bundle: t.bundle.twisted(by), ..*t }).collect(),
        }
    }
}

/// `Hom(S^a U*(c), S^b U*(d)) = ⊕_{i=0}^{min(a,b)} S^{a+b-2i} U*(d - c - a + i)`.
pub fn hom_bundle(a: u32, c: i64, b: u32, d: i64) -> BundleSum {
    let terms = (0..=a.min(b))
        .map(|i| BundleTerm {
            bundle: Bundle::new(a + b - 2 * i, d - c - i64::from(a) + i64::from(i)),
            mult: 1,
            shift: 0,
        })
        .collect();
    BundleSum::new(terms)
}
