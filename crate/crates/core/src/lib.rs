//! Exact homological algebra for Harish-Chandra pairs.
//!
//! The crate is generic over the scalar [`Field`]; the aliases below pin the
//! exact ground field `Q(i)` used by every computation in the test suite and
//! the command line tool.

pub mod band;
pub mod complex;
pub mod error;
pub mod gk;
pub mod hcomplex;
pub mod io;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod signs;
pub mod sl2;

pub use error::{Error, Result};
pub use scalar::{ComplexField, ExactScalar, Field};

use num_complex::Complex;
use num_rational::BigRational;

/// Rational numbers.
pub type Q = BigRational;
/// Gaussian rationals `a + bi`, `a, b ∈ Q`.
pub type Qi = Complex<BigRational>;
/// The ground field.
pub type Scalar = Qi;
pub type Matrix = linalg::SparseMatrix<Qi>;
