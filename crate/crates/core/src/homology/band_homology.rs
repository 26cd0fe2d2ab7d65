//! Homology of band operators on multiplicity-one `K`-type towers, computed
//! on growing windows of types until the dimensions stabilize.
//!
//! Kernels are taken of the map from the window into the enlarged window,
//! so every kernel vector is a global kernel vector. Cokernels are computed
//! as kernels of the transpose acting on formal series: unknowns `a_m` on the
//! window, one equation per domain type whose whole image lies in it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::band::{BandModule, BandOp, TypeWeight};
use crate::error::{Error, Result};
use crate::homology::relative::Complement;
use crate::lie::{Character, DiagGroup, SubpairEmbedding};
use crate::linalg::{kernel_basis, SparseMatrix, Vector};
use crate::report::{DegreeData, HomologyReport, Stabilization};
use crate::scalar::Field;
use crate::signs;

pub const DEFAULT_WINDOWS: [i64; 4] = [16, 24, 32, 48];
pub const MAX_WINDOW_ENV: &str = "HCH_MAX_WINDOW";

/// Window half-widths `N`, types `|n| ≤ N`, tried in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationPolicy {
    pub windows: Vec<i64>,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        Self {
            windows: DEFAULT_WINDOWS.to_vec(),
        }
    }
}

impl StabilizationPolicy {
    pub fn new(windows: Vec<i64>) -> Result<Self> {
        if windows.is_empty() || windows.iter().any(|&w| w < 0) || windows.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("windows must be a nonempty increasing list of nonnegative integers".into()));
        }
        Ok(Self { windows })
    }

    /// Drops windows above `cap`; keeps `cap` itself if nothing is left.
    pub fn capped(mut self, cap: i64) -> Self {
        self.windows.retain(|&w| w <= cap);
        if self.windows.is_empty() {
            self.windows.push(cap.max(0));
        }
        self
    }

    /// The default windows capped by `HCH_MAX_WINDOW` when it is set.
    pub fn from_env() -> Result<Self> {
        Self::default().with_env_cap()
    }

    pub fn with_env_cap(self) -> Result<Self> {
        match std::env::var(MAX_WINDOW_ENV) {
            Ok(s) => {
                let cap = s
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("{MAX_WINDOW_ENV}={s} is not an integer")))?;
                Ok(self.capped(cap))
            }
            Err(_) => Ok(self),
        }
    }
}

/// A set of `K`-types: all `n` in given residue classes, or finitely many.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IndexSet {
    Residues { modulus: i64, residues: Vec<i64> },
    Finite(Vec<i64>),
}

impl IndexSet {
    pub fn contains(&self, n: i64) -> bool {
        match self {
            Self::Residues { modulus, residues } => residues.contains(&n.rem_euclid(*modulus)),
            Self::Finite(v) => v.contains(&n),
        }
    }

    pub fn in_window(&self, lo: i64, hi: i64) -> Vec<i64> {
        match self {
            Self::Residues { .. } => (lo..=hi).filter(|&n| self.contains(n)).collect(),
            Self::Finite(v) => v.iter().copied().filter(|n| (lo..=hi).contains(n)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Self::Residues { residues, .. } => residues.is_empty(),
            Self::Finite(v) => v.is_empty(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_)) || self.is_empty()
    }

    /// Types `n ≡ parity (mod 2)` whose weight is `target`.
    pub fn solve(k: &DiagGroup, weight: &TypeWeight, parity: u8, target: &Character) -> Self {
        let modulus: i64 = if k.finite_orders().contains(&4) { 4 } else { 2 };
        let residues: Vec<i64> = (0..modulus)
            .filter(|r| r % 2 == i64::from(parity))
            .filter(|&r| {
                weight
                    .finite
                    .iter()
                    .zip(k.finite_orders())
                    .zip(&target.finite)
                    .all(|(((a, b), &o), &t)| (a * r + b - t).rem_euclid(i64::from(o)) == 0)
            })
            .collect();
        let mut fixed: Option<i64> = None;
        for ((a, b), &t) in weight.torus.iter().zip(&target.torus) {
            if *a == 0 {
                if *b != t {
                    return Self::Finite(vec![]);
                }
                continue;
            }
            if (t - b) % a != 0 {
                return Self::Finite(vec![]);
            }
            let n = (t - b) / a;
            if fixed.is_some_and(|m| m != n) {
                return Self::Finite(vec![]);
            }
            fixed = Some(n);
        }
        match fixed {
            Some(n) => Self::Finite(if residues.contains(&n.rem_euclid(modulus)) { vec![n] } else { vec![] }),
            None => Self::Residues { modulus, residues },
        }
    }
}

/// One stabilized kernel or cokernel.
#[derive(Clone, Debug, PartialEq)]
pub struct BandResult<F> {
    pub stabilization: Stabilization,
    /// Coordinates of the representatives: domain types for kernels,
    /// codomain types for cokernel functionals. From the last window.
    pub types: Vec<i64>,
    pub representatives: Vec<Vector<F>>,
}

impl<F: Field> BandResult<F> {
    pub fn dim(&self) -> usize {
        self.stabilization.final_dim().unwrap_or(0)
    }

    pub fn certified(&self) -> bool {
        self.stabilization.certified
    }

    pub fn degree_data(&self) -> DegreeData<F> {
        DegreeData {
            dim: self.dim(),
            representatives: self.representatives.clone(),
            stabilization: Some(self.stabilization.clone()),
        }
    }

    /// Representative `k` as a map type ↦ coefficient, zeros dropped.
    pub fn representative(&self, k: usize) -> BTreeMap<i64, F> {
        self.types
            .iter()
            .zip(&self.representatives[k])
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (*n, c.clone()))
            .collect()
    }
}

/// Strict growth across three consecutive windows.
fn check_degenerate(dims: &[usize]) -> Result<()> {
    if dims.windows(3).any(|w| w[0] < w[1] && w[1] < w[2]) {
        return Err(Error::Degenerate { dims: dims.to_vec() });
    }
    Ok(())
}

fn nonzero_targets<F: Field>(op: &BandOp<F>, params: &[F], n: i64) -> Vec<(i64, F)> {
    op.terms()
        .map(|(s, _)| (n + s, op.eval(s, n, params)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn outside_codomain(n: i64, t: i64) -> Error {
    Error::Grading(format!("operator maps type {n} to {t}, outside the codomain"))
}

/// Kernel of `op : domain → codomain`.
pub fn band_kernel<F: Field>(
    op: &BandOp<F>,
    params: &[F],
    domain: &IndexSet,
    codomain: &IndexSet,
    policy: &StabilizationPolicy,
) -> Result<BandResult<F>> {
    let mut dims = Vec::new();
    let mut last = (vec![], vec![]);
    for &w in &policy.windows {
        let types = domain.in_window(-w, w);
        let mut rows: BTreeMap<i64, usize> = BTreeMap::new();
        let mut cols = Vec::with_capacity(types.len());
        for &n in &types {
            let col = nonzero_targets(op, params, n);
            for (t, _) in &col {
                if !codomain.contains(*t) {
                    return Err(outside_codomain(n, *t));
                }
                let next = rows.len();
                rows.entry(*t).or_insert(next);
            }
            cols.push(col);
        }
        let trip = cols
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(t, x)| (t, c, x)))
            .map(|(t, c, x)| (rows[&t], c, x));
        let m = SparseMatrix::from_triplets(rows.len(), types.len(), trip.collect::<Vec<_>>());
        let ker = kernel_basis(&m);
        dims.push(ker.len());
        check_degenerate(&dims)?;
        last = (types, ker);
    }
    Ok(BandResult {
        stabilization: Stabilization::from_runs(policy.windows.clone(), dims),
        types: last.0,
        representatives: last.1,
    })
}

/// Cokernel of `op : domain → codomain`, as the space of functionals on the
/// codomain killing the image.
pub fn band_cokernel<F: Field>(
    op: &BandOp<F>,
    params: &[F],
    domain: &IndexSet,
    codomain: &IndexSet,
    policy: &StabilizationPolicy,
) -> Result<BandResult<F>> {
    let s = op.max_shift();
    let mut dims = Vec::new();
    let mut last = (vec![], vec![]);
    for &w in &policy.windows {
        let unknowns = codomain.in_window(-w, w);
        let pos: BTreeMap<i64, usize> = unknowns.iter().enumerate().map(|(k, n)| (*n, k)).collect();
        let mut trip = Vec::new();
        let mut row = 0;
        for n in domain.in_window(-w - s, w + s) {
            let targets = nonzero_targets(op, params, n);
            if let Some((t, _)) = targets.iter().find(|(t, _)| !codomain.contains(*t)) {
                return Err(outside_codomain(n, *t));
            }
            if targets.is_empty() || targets.iter().any(|(t, _)| !pos.contains_key(t)) {
                continue;
            }
            trip.extend(targets.into_iter().map(|(t, c)| (row, pos[&t], c)));
            row += 1;
        }
        let m = SparseMatrix::from_triplets(row, unknowns.len(), trip);
        let ker = kernel_basis(&m);
        dims.push(ker.len());
        check_degenerate(&dims)?;
        last = (unknowns, ker);
    }
    Ok(BandResult {
        stabilization: Stabilization::from_runs(policy.windows.clone(), dims),
        types: last.0,
        representatives: last.1,
    })
}

/// Relative homology of a band module restricted to a subpair with
/// `dim p ≤ 1`: the complex is `C_1 → C_0` or just `C_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandHomology<F> {
    pub report: HomologyReport<F>,
    pub c0: IndexSet,
    pub c1: IndexSet,
    /// `H_0` and `H_1` in full.
    pub h0: BandResult<F>,
    pub h1: BandResult<F>,
}

impl<F: Field> BandHomology<F> {
    pub fn certified(&self) -> bool {
        self.h0.certified() && self.h1.certified()
    }

    /// Defined only when both degrees are certified.
    pub fn euler_poincare(&self) -> Option<i64> {
        self.certified().then(|| self.h0.dim() as i64 - self.h1.dim() as i64)
    }
}

/// `v` is a module over the big pair of `e`.
pub fn band_rel_homology<F: Field>(e: &SubpairEmbedding<F>, v: &BandModule<F>, policy: &StabilizationPolicy) -> Result<BandHomology<F>> {
    let small = &e.small;
    let w = v.restrict(e);
    let comp = Complement::new(small)?;
    if comp.dim() > 1 {
        return Err(Error::Unsupported(format!("band homology needs dim p ≤ 1, got {}", comp.dim())));
    }
    let params = w.param_values();
    let trivial = small.k.trivial_character();
    let c0 = IndexSet::solve(&small.k, &w.weight, w.parity, &trivial);
    let (op, c1) = match comp.p.first() {
        Some(&j) => {
            let target = small.k.neg(&small.grading[j]);
            let sign = F::from_i64(signs::relative_first(1));
            (w.ops[j].scale(&sign), IndexSet::solve(&small.k, &w.weight, w.parity, &target))
        }
        None => (BandOp::zero(w.nvars()), IndexSet::Finite(vec![])),
    };
    let h1 = band_kernel(&op, &params, &c1, &c0, policy)?;
    let h0 = band_cokernel(&op, &params, &c1, &c0, policy)?;
    let mut report = HomologyReport::default();
    report.insert(0, h0.degree_data());
    report.insert(1, h1.degree_data());
    Ok(BandHomology { report, c0, c1, h0, h1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::Qi;

    fn q(v: i64) -> Qi {
        Qi::from_i64(v)
    }

    /// `f_n ↦ ((λ−n)/2) f_{n+2} + ((λ+n)/2) f_{n−2}` in variables `(n, λ)`.
    fn theta() -> BandOp<Qi> {
        let half = Qi::from_ratio(1, 2);
        let up = Poly::linear(q(0), &[half.neg_ref(), half.clone()]);
        let down = Poly::linear(q(0), &[half.clone(), half]);
        BandOp::from_terms(2, [(2, up), (-2, down)])
    }

    fn evens() -> IndexSet {
        IndexSet::Residues { modulus: 2, residues: vec![0] }
    }

    #[test]
    fn kernel_at_zero_is_the_constant() {
        let policy = StabilizationPolicy::new(vec![8, 12, 16]).unwrap();
        let r = band_kernel(&theta(), &[q(0)], &evens(), &evens(), &policy).unwrap();
        assert!(r.certified());
        assert_eq!(r.dim(), 1);
        let rep = r.representative(0);
        assert_eq!(rep.keys().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn zero_operator_is_degenerate() {
        let zero = BandOp::<Qi>::zero(2);
        let all = IndexSet::Residues { modulus: 2, residues: vec![0, 1] };
        let err = band_cokernel(&zero, &[q(0)], &all, &all, &StabilizationPolicy::default()).unwrap_err();
        assert!(matches!(err, Error::Degenerate { .. }));
    }

    #[test]
    fn solving_type_weights() {
        let k = DiagGroup::cyclic(4).unwrap();
        let w = TypeWeight {
            torus: vec![],
            finite: vec![(1, 0)],
        };
        let target = k.character(vec![], vec![2]).unwrap();
        assert_eq!(
            IndexSet::solve(&k, &w, 0, &target),
            IndexSet::Residues {
                modulus: 4,
                residues: vec![2]
            }
        );
        let t = DiagGroup::torus(1);
        let w = TypeWeight {
            torus: vec![(1, 0)],
            finite: vec![],
        };
        assert_eq!(IndexSet::solve(&t, &w, 0, &t.trivial_character()), IndexSet::Finite(vec![0]));
        assert_eq!(IndexSet::solve(&t, &w, 1, &t.trivial_character()), IndexSet::Finite(vec![]));
    }

    #[test]
    fn policy_cap() {
        let p = StabilizationPolicy::default().capped(30);
        assert_eq!(p.windows, vec![16, 24]);
        assert_eq!(StabilizationPolicy::default().capped(4).windows, vec![4]);
        assert!(StabilizationPolicy::new(vec![8, 8]).is_err());
    }
}
