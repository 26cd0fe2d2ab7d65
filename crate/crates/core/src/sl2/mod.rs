//! Concrete `SL(2)` objects: pairs, subpairs, irreducibles, principal series.

pub mod branching;
pub mod polar;
pub mod principal;
pub mod zoo;
