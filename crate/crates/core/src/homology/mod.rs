//! Resolutions, relative Lie algebra homology and band homology.

pub mod pbw;
pub mod resolution;
pub mod relative;
pub mod band_homology;
