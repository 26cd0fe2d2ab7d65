//! Exact Gauss–Jordan elimination on sparse rows.

use std::collections::BTreeMap;

use super::sparse::{SparseMatrix, Vector};
use crate::scalar::Field;

/// Reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub cols: usize,
    /// Nonzero rows, sorted by pivot column; each pivot entry equals one.
    pub rows: Vec<BTreeMap<usize, F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    /// Eliminates column by column. Among the candidate pivot rows the one
    /// with the smallest support wins, ties going to the lowest row index;
    /// the reduced form itself does not depend on that choice.
    pub fn new(m: &SparseMatrix<F>) -> Self {
        let mut rows: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); m.rows()];
        for (i, j, v) in m.entries() {
            rows[i].insert(j, v.clone());
        }
        Self::from_rows(rows, m.cols())
    }

    pub fn from_rows(mut rows: Vec<BTreeMap<usize, F>>, cols: usize) -> Self {
        rows.retain(|r| !r.is_empty());
        // Column occupancy: which rows currently touch each column.
        let mut occupancy: Vec<Vec<usize>> = vec![Vec::new(); cols];
        for (i, r) in rows.iter().enumerate() {
            for &j in r.keys() {
                occupancy[j].push(i);
            }
        }
        let mut used = vec![false; rows.len()];
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
        for c in 0..cols {
            let candidates: Vec<usize> = occupancy[c]
                .iter()
                .copied()
                .filter(|&i| !used[i] && rows[i].get(&c).is_some_and(|v| !v.is_negligible()))
                .collect();
            let Some(&p) = candidates.iter().min_by_key(|&&i| (rows[i].len(), i)) else {
                continue;
            };
            used[p] = true;
            let inv = rows[p][&c].inv();
            let pivot_row: BTreeMap<usize, F> = rows[p].iter().map(|(j, v)| (*j, v.mul_ref(&inv))).collect();
            rows[p] = pivot_row.clone();
            let touching: Vec<usize> = occupancy[c].clone();
            for i in touching {
                if i == p {
                    continue;
                }
                let Some(factor) = rows[i].get(&c).cloned() else {
                    continue;
                };
                if factor.is_zero() {
                    rows[i].remove(&c);
                    continue;
                }
                for (j, v) in &pivot_row {
                    let delta = v.mul_ref(&factor);
                    let entry = rows[i].entry(*j).or_insert_with(F::zero);
                    let was_new = entry.is_zero();
                    entry.sub_assign_ref(&delta);
                    if entry.is_negligible() {
                        rows[i].remove(j);
                    } else if was_new {
                        occupancy[*j].push(i);
                    }
                }
            }
            occupancy[c] = vec![p];
            pivot_rows.push((c, p));
        }
        let pivots = pivot_rows.iter().map(|(c, _)| *c).collect();
        let rows = pivot_rows.into_iter().map(|(_, p)| std::mem::take(&mut rows[p])).collect();
        Self { cols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&j| !is_pivot[j]).collect()
    }

    /// Kernel basis: one vector per free column, equal to one there and zero
    /// on the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vector<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if let Some(x) = row.get(&f) {
                        v[p] = x.neg_ref();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    Rref::new(m).rank()
}

pub fn kernel_basis<F: Field>(m: &SparseMatrix<F>) -> Vec<Vector<F>> {
    Rref::new(m).kernel_basis()
}

pub fn cokernel_dim<F: Field>(m: &SparseMatrix<F>) -> usize {
    m.rows() - rank(m)
}

/// Columns of `m` that are not in the span of the preceding columns.
pub fn pivot_columns<F: Field>(m: &SparseMatrix<F>) -> Vec<usize> {
    Rref::new(m).pivots
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<F: Field>(m: &SparseMatrix<F>, b: &[F]) -> Option<Vector<F>> {
    assert_eq!(b.len(), m.rows());
    let n = m.cols();
    let rhs = SparseMatrix::from_columns(m.rows(), &[b.to_vec()]);
    let augmented = SparseMatrix::block(&[vec![Some(m), Some(&rhs)]], &[m.rows()], &[n, 1]);
    let r = Rref::new(&augmented);
    if r.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        if let Some(v) = row.get(&n) {
            x[p] = v.clone();
        }
    }
    Some(x)
}

/// Whether `v` lies in the column span of `m`.
pub fn in_column_span<F: Field>(m: &SparseMatrix<F>, v: &[F]) -> bool {
    solve(m, v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;
    use num_traits::Zero;

    type M = SparseMatrix<Qi>;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&M::zeros(0, 0)), 0);
        assert_eq!(rank(&M::identity(3)), 3);
        let i = Qi::i();
        let m = M::from_dense(&[vec![Qi::from_i64(1), i.clone()], vec![i.clone(), Qi::from_i64(-1)]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&M::identity(2)).is_empty());
        assert_eq!(kernel_basis(&M::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&M::from_i64(&[vec![1, -1]]));
        assert_eq!(k, vec![vec![Qi::from_i64(1), Qi::from_i64(1)]]);
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel_dim(&M::identity(3)), 0);
        assert_eq!(cokernel_dim(&M::zeros(2, 2)), 2);
        assert_eq!(cokernel_dim(&M::from_i64(&[vec![1], vec![1]])), 1);
    }

    #[test]
    fn solve_and_span() {
        let m = M::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(solve(&m, &[Qi::from_i64(1), Qi::from_i64(2)]).is_some());
        assert!(solve(&m, &[Qi::from_i64(1), Qi::from_i64(3)]).is_none());
        let x = solve(&M::identity(2), &[Qi::from_i64(4), Qi::zero()]).unwrap();
        assert_eq!(x, vec![Qi::from_i64(4), Qi::zero()]);
    }

    #[test]
    fn pivots_pick_first_independent_columns() {
        let m = M::from_i64(&[vec![1, 2, 0], vec![0, 0, 1]]);
        assert_eq!(pivot_columns(&m), vec![0, 2]);
    }
}
