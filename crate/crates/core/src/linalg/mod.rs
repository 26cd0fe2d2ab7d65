//! Exact sparse linear algebra.

mod elim;
mod sparse;
mod subspace;

pub use elim::{cokernel_dim, in_column_span, kernel_basis, pivot_columns, rank, solve, Rref};
pub use sparse::{SparseMatrix, Vector};
pub use subspace::Subspace;
