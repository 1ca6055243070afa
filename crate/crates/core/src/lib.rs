//! Exact computer algebra for the quantum cohomology of the isotropic
//! Grassmannians `IG(2,2n)` and for Borel–Weil–Bott computations on
//! `G(2,m)` and `IG(2,2k)`.
//!
//! Everything here is a pure function of its inputs over the rationals. The
//! crate is `no_std` and only needs `alloc`; report files, the command line
//! driver and the text dumps live in the `igq` companion crate.
//!
//! Layout:
//!
//! * [`algebra`]: rationals, multivariate polynomials, reduced Gröbner bases,
//!   colon/saturation/elimination and univariate root counting.
//! * [`presentations`]: the four ring presentations of `H*(IG(2,2n))` and
//!   `QH(IG(2,2n))` and the spectrum decomposition of the small quantum ring.
//! * [`deformation`]: the first-order big quantum product in the `σ₂`
//!   direction and the tangent-space regularity check.
//! * [`bbw`]: Borel–Weil–Bott, Clebsch–Gordan for rank two, Ext between
//!   bundles and complexes, Lefschetz collections.
//! * [`unfolding`]: Milnor algebras and the `A_μ` identification of the
//!   non-reduced factor.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bbw;
pub mod deformation;
mod error;
pub mod presentations;
pub mod unfolding;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
