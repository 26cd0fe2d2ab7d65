use std::collections::BTreeMap;

use crate::scalar::Field;

/// Column-major sparse matrix. Each column holds `(row, value)` pairs sorted
/// by row; no stored value is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, F)>>,
}

pub type Vector<F> = Vec<F>;

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (j, col) in m.data.iter_mut().enumerate() {
                col.push((j, c.clone()));
            }
        }
        m
    }

    pub fn diagonal(diag: &[F]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (j, v) in diag.iter().enumerate() {
            if !v.is_zero() {
                m.data[j].push((j, v.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of bounds {rows}x{cols}");
            acc[c]
                .entry(r)
                .and_modify(|x| x.add_assign_ref(&v))
                .or_insert(v);
        }
        let data = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.data[j].push((i, v.clone()));
                }
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_dense(&dense)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, v) in columns.iter().enumerate() {
            assert_eq!(v.len(), rows);
            m.data[j] = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn column(&self, j: usize) -> &[(usize, F)] {
        &self.data[j]
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        match self.data[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.data[j][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Iterates `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn dense_column(&self, j: usize) -> Vector<F> {
        let mut v = vec![F::zero(); self.rows];
        for (i, x) in &self.data[j] {
            v[*i] = x.clone();
        }
        v
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn set_column(&mut self, j: usize, col: Vec<(usize, F)>) {
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(col.iter().all(|(i, v)| *i < self.rows && !v.is_zero()));
        self.data[j] = col;
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.rows];
        for (i, j, v) in self.entries() {
            data[i].push((j, v.clone()));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v.mul_ref(c))).collect())
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        let data = self
            .data
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v.neg_ref())).collect())
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    fn combine(&self, other: &Self, sign_other: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_columns(a, b, sign_other))
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let data = other.data.iter().map(|col| self.mul_sparse_column(col)).collect();
        Self {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Product restricted to the listed columns of `other`; every other column
    /// of the result is left empty.
    pub fn mul_columns(&self, other: &Self, columns: &[usize]) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for &j in columns {
            out.data[j] = self.mul_sparse_column(&other.data[j]);
        }
        out
    }

    pub fn mul_sparse_column(&self, col: &[(usize, F)]) -> Vec<(usize, F)> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (k, b) in col {
            for (i, a) in &self.data[*k] {
                let p = a.mul_ref(b);
                match acc.get_mut(i) {
                    Some(x) => x.add_assign_ref(&p),
                    None => {
                        acc.insert(*i, p);
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_negligible()).collect()
    }

    pub fn mul_vec(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![F::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.data[j] {
                out[i.to_owned()].add_assign_ref(&a.mul_ref(x));
            }
        }
        out
    }

    /// Kronecker product; index `(i1, i2)` maps to `i1 * dim2 + i2`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(cols);
        for a_col in &self.data {
            for b_col in &other.data {
                let mut col = Vec::with_capacity(a_col.len() * b_col.len());
                for (ia, va) in a_col {
                    for (ib, vb) in b_col {
                        col.push((ia * other.rows + ib, va.mul_ref(vb)));
                    }
                }
                data.push(col);
            }
        }
        Self { rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::block(&[vec![Some(self), None], vec![None, Some(other)]], &[self.rows, other.rows], &[self.cols, other.cols])
    }

    /// Assembles a block matrix; `None` blocks are zero. Block sizes are
    /// given explicitly so that empty block rows and columns are allowed.
    pub fn block(blocks: &[Vec<Option<&Self>>], row_sizes: &[usize], col_sizes: &[usize]) -> Self {
        assert_eq!(blocks.len(), row_sizes.len());
        let rows: usize = row_sizes.iter().sum();
        let cols: usize = col_sizes.iter().sum();
        let row_off: Vec<usize> = offsets(row_sizes);
        let col_off: Vec<usize> = offsets(col_sizes);
        let mut data: Vec<Vec<(usize, F)>> = vec![Vec::new(); cols];
        for (bj, &cw) in col_sizes.iter().enumerate() {
            for local in 0..cw {
                let j = col_off[bj] + local;
                for (bi, brow) in blocks.iter().enumerate() {
                    assert_eq!(brow.len(), col_sizes.len());
                    if let Some(m) = brow[bj] {
                        assert_eq!((m.rows, m.cols), (row_sizes[bi], cw), "block ({bi},{bj}) has wrong shape");
                        data[j].extend(m.data[local].iter().map(|(i, v)| (row_off[bi] + i, v.clone())));
                    }
                }
            }
        }
        Self { rows, cols, data }
    }

    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let data = columns.iter().map(|&j| self.data[j].clone()).collect();
        Self {
            rows: self.rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut position = vec![usize::MAX; self.rows];
        for (new, &old) in rows.iter().enumerate() {
            position[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|col| {
                let mut c: Vec<(usize, F)> = col
                    .iter()
                    .filter(|(i, _)| position[*i] != usize::MAX)
                    .map(|(i, v)| (position[*i], v.clone()))
                    .collect();
                c.sort_by_key(|(i, _)| *i);
                c
            })
            .collect();
        Self {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Whether the listed columns agree with those of `other`.
    pub fn columns_equal(&self, other: &Self, columns: impl IntoIterator<Item = usize>) -> Option<usize> {
        columns.into_iter().find(|&j| self.data[j] != other.data[j])
    }
}

fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

fn merge_columns<F: Field>(a: &[(usize, F)], b: &[(usize, F)], negate_b: bool) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    let fix = |v: &F| if negate_b { v.neg_ref() } else { v.clone() };
    while p < a.len() || q < b.len() {
        if q == b.len() || (p < a.len() && a[p].0 < b[q].0) {
            out.push(a[p].clone());
            p += 1;
        } else if p == a.len() || b[q].0 < a[p].0 {
            out.push((b[q].0, fix(&b[q].1)));
            q += 1;
        } else {
            let v = if negate_b {
                a[p].1.sub_ref(&b[q].1)
            } else {
                a[p].1.add_ref(&b[q].1)
            };
            if !v.is_negligible() {
                out.push((a[p].0, v));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    type M = SparseMatrix<Qi>;

    #[test]
    fn triplets_drop_cancelled_entries() {
        let m = M::from_triplets(2, 2, [(0, 0, Qi::from_i64(1)), (0, 0, Qi::from_i64(-1)), (1, 1, Qi::from_i64(3))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), Qi::from_i64(3));
    }

    #[test]
    fn product_and_transpose() {
        let a = M::from_i64(&[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = M::from_i64(&[vec![1, 0, 2], vec![0, 1, 1]]);
        let ab = a.mul(&b);
        assert_eq!(ab, M::from_i64(&[vec![1, 2, 4], vec![0, 1, 1], vec![3, 0, 6]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn kron_index_convention() {
        let a = M::from_i64(&[vec![0, 1], vec![1, 0]]);
        let b = M::from_i64(&[vec![2, 0], vec![0, 3]]);
        let k = a.kron(&b);
        // (i1, i2) -> 2*i1 + i2; a swaps the first factor.
        assert_eq!(k.get(2, 0), Qi::from_i64(2));
        assert_eq!(k.get(3, 1), Qi::from_i64(3));
        assert_eq!(k.get(0, 2), Qi::from_i64(2));
        assert_eq!(k.nnz(), 4);
    }

    #[test]
    fn block_assembly_with_empty_blocks() {
        let a = M::identity(2);
        let z = M::zeros(0, 2);
        let m = M::block(&[vec![Some(&a)], vec![Some(&z)]], &[2, 0], &[2]);
        assert_eq!(m, a);
        let d = a.direct_sum(&M::scalar(1, Qi::from_i64(5)));
        assert_eq!(d.get(2, 2), Qi::from_i64(5));
        assert_eq!(d.nnz(), 3);
    }
}
