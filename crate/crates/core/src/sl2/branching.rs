//! Branching of principal series to the subpairs of the catalog.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::homology::band_homology::{band_rel_homology, BandHomology, StabilizationPolicy};
use crate::scalar::format_rational;
use crate::sl2::principal::principal_series;
use crate::sl2::zoo::subpair;
use crate::{Qi, Q};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchingRow {
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub lambda: Q,
    pub epsilon: u8,
    pub subpair: String,
    pub h0: usize,
    pub h1: usize,
    /// Present only when both degrees are certified.
    pub ep: Option<i64>,
    pub h0_certified: bool,
    pub h1_certified: bool,
    pub h0_windows: Vec<(i64, usize)>,
    pub h1_windows: Vec<(i64, usize)>,
}

fn ser_rational<S: serde::Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn de_rational<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    crate::io::Rat::deserialize(d).map(|r| r.0)
}

impl BranchingRow {
    pub fn certified(&self) -> bool {
        self.h0_certified && self.h1_certified
    }

    pub const TSV_HEADER: &'static str = "lambda\tepsilon\tsubpair\tH0\tH1\tEP\tcertified";

    pub fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            format_rational(&self.lambda),
            self.epsilon,
            self.subpair,
            self.h0,
            self.h1,
            self.ep.map_or("-".to_string(), |e| e.to_string()),
            if self.certified() { "yes" } else { "no" }
        )
    }
}

pub fn sl2_branching_report(lambda: &Q, epsilon: u8, subpair_name: &str, policy: &StabilizationPolicy) -> Result<(BandHomology<Qi>, BranchingRow)> {
    let e = subpair::<Qi>(subpair_name)?;
    let v = principal_series::<Qi>(lambda.clone(), epsilon)?;
    let h = band_rel_homology(&e, &v.module, policy)?;
    let zip = |r: &crate::homology::band_homology::BandResult<Qi>| {
        r.stabilization.windows.iter().copied().zip(r.stabilization.dims.iter().copied()).collect()
    };
    let row = BranchingRow {
        lambda: lambda.clone(),
        epsilon: epsilon % 2,
        subpair: subpair_name.to_string(),
        h0: h.h0.dim(),
        h1: h.h1.dim(),
        ep: h.euler_poincare(),
        h0_certified: h.h0.certified(),
        h1_certified: h.h1.certified(),
        h0_windows: zip(&h.h0),
        h1_windows: zip(&h.h1),
    };
    Ok((h, row))
}

/// One row per `λ`, computed in parallel, in input order.
pub fn sl2_sweep(lambdas: &[Q], epsilon: u8, subpair_name: &str, policy: &StabilizationPolicy) -> Result<Vec<BranchingRow>> {
    lambdas
        .par_iter()
        .map(|l| sl2_branching_report(l, epsilon, subpair_name, policy).map(|(_, row)| row))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn lam(p: i64) -> Q {
        BigRational::from_integer(p.into())
    }

    #[test]
    fn diagonal_torus_rows() {
        let p = StabilizationPolicy::default();
        let (_, r) = sl2_branching_report(&lam(4), 0, "diagonal_torus", &p).unwrap();
        assert_eq!((r.h1, r.certified()), (1, true));
        let (_, r) = sl2_branching_report(&lam(5), 1, "diagonal_torus", &p).unwrap();
        assert_eq!((r.h0, r.h1, r.ep), (0, 0, Some(0)));
        let (_, r) = sl2_branching_report(&lam(3), 0, "diagonal_torus", &p).unwrap();
        assert_eq!((r.h0, r.h1, r.ep), (2, 0, Some(2)));
    }

    #[test]
    fn sweep_keeps_order() {
        let p = StabilizationPolicy::default();
        let rows = sl2_sweep(&[lam(1), lam(0), lam(3)], 0, "diagonal_torus", &p).unwrap();
        assert_eq!(rows.iter().map(|r| r.h1).collect::<Vec<_>>(), vec![0, 1, 0]);
        assert!(rows[0].tsv().starts_with("1\t0\tdiagonal_torus"));
    }
}
