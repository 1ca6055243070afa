//! Borel–Weil–Bott on `G(2,m)` and `IG(2,2k)`.
//!
//! A bundle `S^a U*(p)` is the pair `(a, p)`. Its weight is
//! `(a + p, p, 0, ..., 0)` for `GL(m)` or `Sp(2k)`.

mod bundles;
mod collections;
mod ext;
mod weyl;

pub use bundles::{hom_bundle, Bundle, BundleSum, BundleTerm, Space, SpaceKind};
pub use collections::{
    euler_consistency, lefschetz_collection, serre_duality_holds, verify_collection, CollectionFailure, CollectionReport,
};
pub use ext::{
    check_f_orthogonality, complex_terms, ext_bundles, ext_f_pair, ext_profile_of_complexes, f_complex, ExtProfile,
    OrthogonalityReport, Side,
};
pub use weyl::{bbw_gl, bbw_sp, gl_dimension, sp_dimension, Cohomology};
