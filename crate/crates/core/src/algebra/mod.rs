//! Exact-arithmetic polynomial kernel.

mod groebner;
mod ideal;
pub mod linalg;
mod monomial;
mod order;
mod polynomial;
mod ring;
mod text;
pub mod univariate;

pub use groebner::{buchberger, is_groebner, normal_form, GroebnerBasis, QuotientDimension};
pub use ideal::Ideal;
pub use monomial::{Monomial, MAX_VARS};
pub use order::TermOrder;
pub use polynomial::Polynomial;
pub use ring::Ring;
pub use text::{parse_ideal, parse_polynomial, write_ideal};

/// Exact rational number, always kept in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `Rational` from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `Rational` from a machine fraction. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
