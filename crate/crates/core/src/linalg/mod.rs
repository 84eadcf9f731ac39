//! Exact integer and rational linear algebra.
//!
//! Nothing in here touches floating point. Ranks come from fraction-free
//! (Bareiss) elimination, characteristic polynomials from the
//! division-free Berkowitz recurrence, and eigenspace bases and
//! projections from Gauss–Jordan elimination over `BigRational`.

mod matrix;
mod poly;
mod ratmatrix;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub use matrix::IntMatrix;
pub use poly::{eval_multiplicity, squarefree_decomposition, IntPolynomial};
pub use ratmatrix::{eigenprojection, nullspace_basis, RatMatrix};

/// Exact rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Parse `p/q` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    text.parse::<BigRational>().map_err(|_| {
        Error::InvalidParameter(format!(
            "{text:?} is not a rational of the form p/q or an integer"
        ))
    })
}

pub fn rational_from_i64(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}
