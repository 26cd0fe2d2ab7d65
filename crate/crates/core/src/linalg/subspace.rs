use std::collections::BTreeMap;

use super::elim::Rref;
use super::sparse::{SparseMatrix, Vector};
use crate::scalar::Field;

/// A subspace of `F^ambient` with a basis in reduced form: there are
/// coordinate columns `c_l` such that `basis[k][c_l] = δ_kl`. Coordinates of
/// a member vector are read off at those columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vector<F>>,
    coord_cols: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|k| {
                let mut v = vec![F::zero(); ambient];
                v[k] = F::one();
                v
            })
            .collect();
        Self {
            ambient,
            basis,
            coord_cols: (0..ambient).collect(),
        }
    }

    /// Null space of `m`.
    pub fn kernel(m: &SparseMatrix<F>) -> Self {
        let r = Rref::new(m);
        Self {
            ambient: m.cols(),
            coord_cols: r.free_columns(),
            basis: r.kernel_basis(),
        }
    }

    /// Span of arbitrary vectors.
    pub fn span(ambient: usize, vectors: &[Vector<F>]) -> Self {
        let rows: Vec<BTreeMap<usize, F>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        let r = Rref::from_rows(rows, ambient);
        let basis = r
            .rows
            .iter()
            .map(|row| {
                let mut v = vec![F::zero(); ambient];
                for (j, x) in row {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        Self {
            ambient,
            basis,
            coord_cols: r.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.basis
    }

    pub fn coordinates(&self, v: &[F]) -> Vector<F> {
        self.coord_cols.iter().map(|&c| v[c].clone()).collect()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let coords = self.coordinates(v);
        let mut rebuilt = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                r.add_assign_ref(&x.mul_ref(c));
            }
        }
        rebuilt.iter().zip(v).all(|(a, b)| a.sub_ref(b).is_negligible())
    }

    /// Columns are the basis vectors.
    pub fn embedding(&self) -> SparseMatrix<F> {
        SparseMatrix::from_columns(self.ambient, &self.basis)
    }

    /// Reads coordinates of member vectors: a `dim x ambient` selection.
    pub fn coordinate_map(&self) -> SparseMatrix<F> {
        SparseMatrix::from_triplets(
            self.dim(),
            self.ambient,
            self.coord_cols.iter().enumerate().map(|(k, &c)| (k, c, F::one())),
        )
    }

    /// Matrix of `op` restricted to `self`, landing in `target`. The caller
    /// guarantees `op(self) ⊆ target`.
    pub fn restrict(&self, op: &SparseMatrix<F>, target: &Subspace<F>) -> SparseMatrix<F> {
        target.coordinate_map().mul(&op.mul(&self.embedding()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    #[test]
    fn kernel_coordinates_roundtrip() {
        let m = SparseMatrix::<Qi>::from_i64(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = Subspace::kernel(&m);
        assert_eq!(k.dim(), 1);
        let v = vec![Qi::from_i64(-3), Qi::from_i64(3), Qi::from_i64(0)];
        assert!(k.contains(&v));
        assert_eq!(k.coordinates(&v), vec![Qi::from_i64(3)]);
        assert!(!k.contains(&[Qi::from_i64(1), Qi::from_i64(0), Qi::from_i64(0)]));
    }

    #[test]
    fn span_is_reduced() {
        let s = Subspace::<Qi>::span(3, &[vec![Qi::from_i64(2), Qi::from_i64(2), Qi::from_i64(0)], vec![Qi::from_i64(1), Qi::from_i64(1), Qi::from_i64(0)]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], vec![Qi::from_i64(1), Qi::from_i64(1), Qi::from_i64(0)]);
    }
}
