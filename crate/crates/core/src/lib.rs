//! Exact spectral toolkit for small simple graphs.
//!
//! Everything here is computed in exact integer or rational arithmetic:
//! eigenvalue multiplicities come from fraction-free ranks of `A - μI`,
//! distinct-eigenvalue counts from squarefree decompositions of the
//! characteristic polynomial, and eigenprojections from exact rational
//! elimination. On top of that substrate sit the closed-neighbourhood
//! (true twin) quotient, star sets and star complements, and a
//! structural classifier for connected graphs with `m_G(-1) = n - d`,
//! together with an exhaustive census that checks the classifier against
//! the spectral test.

pub mod campaign;
pub mod canonical;
pub mod classify;
pub mod constructors;
pub mod enumerate;
mod error;
pub mod graph;
pub mod linalg;
pub mod spectra;
pub mod star;

pub use error::{Error, Result};
pub use graph::{Diameter, Graph};
pub use linalg::{IntMatrix, IntPolynomial, RatMatrix, Rational};
