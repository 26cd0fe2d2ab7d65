//! Homology reports: dimensions, representatives, stabilization data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;

/// Raw window data of a stabilization run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilization {
    pub windows: Vec<i64>,
    pub dims: Vec<usize>,
    pub certified: bool,
}

impl Stabilization {
    /// Certified iff the last three dims agree, i.e. the last two
    /// enlargements changed nothing.
    pub fn from_runs(windows: Vec<i64>, dims: Vec<usize>) -> Self {
        let certified = dims.len() >= 3 && dims[dims.len() - 3..].windows(2).all(|w| w[0] == w[1]);
        Self { windows, dims, certified }
    }

    pub fn final_dim(&self) -> Option<usize> {
        self.dims.last().copied()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeData<F> {
    pub dim: usize,
    pub representatives: Vec<Vector<F>>,
    pub stabilization: Option<Stabilization>,
}

/// Per-degree homology. Degrees are whatever the producer uses: cochain
/// degree for complexes, homological degree for relative homology.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyReport<F> {
    pub degrees: BTreeMap<i64, DegreeData<F>>,
}

impl<F> Default for HomologyReport<F> {
    fn default() -> Self {
        Self { degrees: BTreeMap::new() }
    }
}

impl<F> HomologyReport<F> {
    pub fn insert(&mut self, degree: i64, data: DegreeData<F>) {
        self.degrees.insert(degree, data);
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.degrees.get(&degree).map_or(0, |d| d.dim)
    }

    /// Dimensions for degrees `lo..=hi`, zero where nothing is stored.
    pub fn dims_in(&self, lo: i64, hi: i64) -> Vec<usize> {
        (lo..=hi).map(|n| self.dim(n)).collect()
    }

    pub fn representatives(&self, degree: i64) -> &[Vector<F>] {
        self.degrees.get(&degree).map_or(&[], |d| &d.representatives)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(n, d)| crate::signs::parity_sign(*n) * d.dim as i64)
            .sum()
    }

    /// True when every degree is either exact or carries a certificate.
    pub fn certified(&self) -> bool {
        self.degrees
            .values()
            .all(|d| d.stabilization.as_ref().is_none_or(|s| s.certified))
    }

    /// Fixed-width table: degree, dim, certified, windows.
    pub fn table(&self) -> String {
        let mut out = format!("{:>6}  {:>5}  {:>9}  {}\n", "degree", "dim", "certified", "windows");
        for (n, d) in &self.degrees {
            let (cert, win) = match &d.stabilization {
                Some(s) => (
                    if s.certified { "yes" } else { "no" },
                    s.windows
                        .iter()
                        .zip(&s.dims)
                        .map(|(w, k)| format!("{w}:{k}"))
                        .collect::<Vec<_>>()
                        .join(","),
                ),
                None => ("exact", "-".to_string()),
            };
            let _ = writeln!(out, "{n:>6}  {:>5}  {cert:>9}  {win}", d.dim);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_needs_two_agreeing_enlargements() {
        assert!(Stabilization::from_runs(vec![16, 24, 32], vec![1, 1, 1]).certified);
        assert!(!Stabilization::from_runs(vec![16, 24, 32], vec![0, 1, 1]).certified);
        assert!(!Stabilization::from_runs(vec![16, 24], vec![1, 1]).certified);
        assert!(Stabilization::from_runs(vec![16, 24, 32, 48], vec![0, 1, 1, 1]).certified);
    }

    #[test]
    fn table_layout() {
        let mut r = HomologyReport::<i64>::default();
        r.insert(0, DegreeData { dim: 2, representatives: vec![], stabilization: None });
        r.insert(
            1,
            DegreeData {
                dim: 1,
                representatives: vec![],
                stabilization: Some(Stabilization::from_runs(vec![16, 24, 32], vec![1, 1, 1])),
            },
        );
        let t = r.table();
        assert!(t.contains("exact"));
        assert!(t.contains("16:1,24:1,32:1"));
        assert_eq!(r.euler_characteristic(), 1);
    }
}
