//! Bounded cochain complexes of finite-dimensional spaces.

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, pivot_columns, rank, SparseMatrix, Vector};
use crate::report::{DegreeData, HomologyReport};
use crate::scalar::Field;
use crate::signs;

/// Terms in degrees `lo, lo+1, …`; `d[k]` maps term `k` to term `k+1`
/// (indices relative to `lo`).
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<F> {
    pub lo: i64,
    pub dims: Vec<usize>,
    pub d: Vec<SparseMatrix<F>>,
}

impl<F: Field> Complex<F> {
    pub fn new(lo: i64, dims: Vec<usize>, d: Vec<SparseMatrix<F>>) -> Result<Self> {
        if d.len() != dims.len().saturating_sub(1) {
            return Err(Error::Dimension(format!("{} differentials for {} terms", d.len(), dims.len())));
        }
        for (k, m) in d.iter().enumerate() {
            if m.cols() != dims[k] || m.rows() != dims[k + 1] {
                return Err(Error::Dimension(format!(
                    "d^{} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    m.rows(),
                    m.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        Ok(Self { lo, dims, d })
    }

    /// A single space in degree `n`.
    pub fn concentrated(n: i64, dim: usize) -> Self {
        Self::new(n, vec![dim], vec![]).unwrap()
    }

    /// Empty complex.
    pub fn zero() -> Self {
        Self::new(0, vec![], vec![]).unwrap()
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    /// `d^n`, zero outside the stored range.
    pub fn differential(&self, n: i64) -> SparseMatrix<F> {
        if n >= self.lo && n < self.hi() {
            self.d[(n - self.lo) as usize].clone()
        } else {
            SparseMatrix::zeros(self.dim(n + 1), self.dim(n))
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|n| signs::parity_sign(n) * self.dim(n) as i64).sum()
    }
}

/// First degree `n` with `d^{n+1} d^n ≠ 0`.
pub fn check_complex<F: Field>(c: &Complex<F>) -> std::result::Result<(), i64> {
    for w in c.d.windows(2).enumerate() {
        let (k, pair) = w;
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(c.lo + k as i64);
        }
    }
    Ok(())
}

/// Representatives of `ker a / im b` where `a ∘ b = 0`.
pub fn quotient_representatives<F: Field>(kernel: &[Vector<F>], image: &SparseMatrix<F>) -> Vec<Vector<F>> {
    if kernel.is_empty() {
        return vec![];
    }
    let k = SparseMatrix::from_columns(image.rows(), kernel);
    let joined = SparseMatrix::block(&[vec![Some(image), Some(&k)]], &[image.rows()], &[image.cols(), k.cols()]);
    pivot_columns(&joined)
        .into_iter()
        .filter(|&c| c >= image.cols())
        .map(|c| kernel[c - image.cols()].clone())
        .collect()
}

/// `H^n = ker d^n / im d^{n−1}` with representatives.
pub fn homology<F: Field>(c: &Complex<F>) -> HomologyReport<F> {
    let mut report = HomologyReport::default();
    for n in c.degrees() {
        let ker = kernel_basis(&c.differential(n));
        let reps = quotient_representatives(&ker, &c.differential(n - 1));
        report.insert(
            n,
            DegreeData {
                dim: reps.len(),
                representatives: reps,
                stabilization: None,
            },
        );
    }
    report
}

/// Homology dimensions only, via ranks.
pub fn homology_dims<F: Field>(c: &Complex<F>) -> Vec<usize> {
    let ranks: Vec<usize> = c.d.iter().map(rank).collect();
    (0..c.dims.len())
        .map(|k| {
            let out = if k < ranks.len() { ranks[k] } else { 0 };
            let inc = if k > 0 { ranks[k - 1] } else { 0 };
            c.dims[k] - out - inc
        })
        .collect()
}

/// `C[k]`: `C[k]^n = C^{n+k}`, `d_{C[k]}^n = (−1)^k d_C^{n+k}`.
pub fn shift<F: Field>(c: &Complex<F>, k: i64) -> Complex<F> {
    let s = F::from_i64(signs::shift_differential(k));
    Complex {
        lo: c.lo - k,
        dims: c.dims.clone(),
        d: c.d.iter().map(|m| m.scale(&s)).collect(),
    }
}

/// Degree-preserving map of complexes: `maps[k]` in degree `lo + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap<F> {
    pub source: Complex<F>,
    pub target: Complex<F>,
    pub lo: i64,
    pub maps: Vec<SparseMatrix<F>>,
}

impl<F: Field> ChainMap<F> {
    /// Builds a map given on every degree in the union of both ranges.
    pub fn new(source: Complex<F>, target: Complex<F>, f: impl Fn(i64) -> SparseMatrix<F>) -> Result<Self> {
        let lo = source.lo.min(target.lo);
        let hi = source.hi().max(target.hi());
        let mut maps = Vec::new();
        for n in lo..=hi {
            let m = f(n);
            if m.rows() != target.dim(n) || m.cols() != source.dim(n) {
                return Err(Error::Dimension(format!("chain map component in degree {n} has the wrong shape")));
            }
            maps.push(m);
        }
        Ok(Self { source, target, lo, maps })
    }

    pub fn identity(c: &Complex<F>) -> Self {
        Self::new(c.clone(), c.clone(), |n| SparseMatrix::identity(c.dim(n))).unwrap()
    }

    pub fn zero(source: &Complex<F>, target: &Complex<F>) -> Self {
        Self::new(source.clone(), target.clone(), |n| SparseMatrix::zeros(target.dim(n), source.dim(n))).unwrap()
    }

    pub fn at(&self, n: i64) -> SparseMatrix<F> {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            SparseMatrix::zeros(self.target.dim(n), self.source.dim(n))
        }
    }

    /// First degree where `f d ≠ d f`.
    pub fn check(&self) -> std::result::Result<(), i64> {
        let lo = self.lo - 1;
        let hi = self.lo + self.maps.len() as i64;
        for n in lo..=hi {
            let lhs = self.at(n + 1).mul(&self.source.differential(n));
            let rhs = self.target.differential(n).mul(&self.at(n));
            if lhs != rhs {
                return Err(n);
            }
        }
        Ok(())
    }
}

/// `Cone(f)^n = M^{n+1} ⊕ N^n` with `d = [[−d_M, 0], [f, d_N]]`, together
/// with the natural maps `N → Cone(f) → M[1]`.
pub struct Cone<F> {
    pub complex: Complex<F>,
    pub from_target: ChainMap<F>,
    pub to_shifted_source: ChainMap<F>,
}

pub fn cone<F: Field>(f: &ChainMap<F>) -> Result<Cone<F>> {
    if let Err(n) = f.check() {
        return Err(Error::Invalid(format!("not a chain map: fails in degree {n}")));
    }
    let (m, n) = (&f.source, &f.target);
    let lo = (m.lo - 1).min(n.lo);
    let hi = (m.hi() - 1).max(n.hi());
    let dims: Vec<usize> = (lo..=hi).map(|k| m.dim(k + 1) + n.dim(k)).collect();
    let sign = F::from_i64(signs::CONE_SOURCE);
    let d = (lo..hi)
        .map(|k| {
            let dm = m.differential(k + 1).scale(&sign);
            let fk = f.at(k + 1);
            let dn = n.differential(k);
            SparseMatrix::block(
                &[vec![Some(&dm), None], vec![Some(&fk), Some(&dn)]],
                &[m.dim(k + 2), n.dim(k + 1)],
                &[m.dim(k + 1), n.dim(k)],
            )
        })
        .collect();
    let complex = Complex::new(lo, dims, d)?;
    let shifted = shift(m, 1);
    let from_target = ChainMap::new(n.clone(), complex.clone(), |k| {
        let inc = SparseMatrix::identity(n.dim(k));
        SparseMatrix::block(&[vec![None], vec![Some(&inc)]], &[m.dim(k + 1), n.dim(k)], &[n.dim(k)])
    })?;
    let to_shifted_source = ChainMap::new(complex.clone(), shifted, |k| {
        let pr = SparseMatrix::identity(m.dim(k + 1));
        SparseMatrix::block(&[vec![Some(&pr), None]], &[m.dim(k + 1)], &[m.dim(k + 1), n.dim(k)])
    })?;
    Ok(Cone {
        complex,
        from_target,
        to_shifted_source,
    })
}

/// Block layout of `(M ⊗ N)^n = ⊕_{i+j=n} M^i ⊗ N^j`, blocks ordered by `i`.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    pub lo: i64,
    /// Per total degree: `(i, j, offset)` for every nonzero block.
    pub blocks: Vec<Vec<(i64, i64, usize)>>,
    pub dims: Vec<usize>,
}

impl TensorLayout {
    pub fn new<F: Field>(m: &Complex<F>, n: &Complex<F>) -> Self {
        if m.dims.is_empty() || n.dims.is_empty() {
            return Self {
                lo: 0,
                blocks: vec![],
                dims: vec![],
            };
        }
        let lo = m.lo + n.lo;
        let hi = m.hi() + n.hi();
        let mut blocks = Vec::new();
        let mut dims = Vec::new();
        for t in lo..=hi {
            let mut off = 0;
            let mut bl = Vec::new();
            for i in m.degrees() {
                let j = t - i;
                let sz = m.dim(i) * n.dim(j);
                if sz > 0 {
                    bl.push((i, j, off));
                    off += sz;
                }
            }
            blocks.push(bl);
            dims.push(off);
        }
        Self { lo, blocks, dims }
    }

    pub fn offset(&self, i: i64, j: i64) -> Option<usize> {
        let t = (i + j - self.lo) as usize;
        self.blocks.get(t)?.iter().find(|b| b.0 == i).map(|b| b.2)
    }

    pub fn dim(&self, t: i64) -> usize {
        let k = t - self.lo;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// Assembles the degree-`t` component of `Σ A_i ⊗ B_j` where `op(i, j)`
    /// returns the pieces `(target i', target j', A ⊗ B)` for block `(i, j)`
    /// and `out_shift` is the degree change.
    pub fn assemble<F: Field>(
        &self,
        t: i64,
        out_shift: i64,
        op: impl Fn(i64, i64) -> Vec<(i64, i64, SparseMatrix<F>)>,
    ) -> SparseMatrix<F> {
        let rows = self.dim(t + out_shift);
        let cols = self.dim(t);
        let mut trip = Vec::new();
        if cols > 0 {
            for &(i, j, off) in &self.blocks[(t - self.lo) as usize] {
                for (ti, tj, m) in op(i, j) {
                    let Some(toff) = self.offset(ti, tj) else {
                        debug_assert!(m.is_zero());
                        continue;
                    };
                    for (r, c, v) in m.entries() {
                        trip.push((toff + r, off + c, v.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(rows, cols, trip)
    }
}

/// Koszul tensor product `d(m ⊗ n) = dm ⊗ n + (−1)^i m ⊗ dn`.
pub fn tensor_complex<F: Field>(m: &Complex<F>, n: &Complex<F>) -> (Complex<F>, TensorLayout) {
    let layout = TensorLayout::new(m, n);
    if layout.dims.is_empty() {
        return (Complex::zero(), layout);
    }
    let hi = layout.lo + layout.dims.len() as i64 - 1;
    let d = (layout.lo..hi)
        .map(|t| {
            layout.assemble(t, 1, |i, j| {
                let s = F::from_i64(signs::koszul(i));
                vec![
                    (i + 1, j, m.differential(i).kron(&SparseMatrix::identity(n.dim(j)))),
                    (i, j + 1, SparseMatrix::identity(m.dim(i)).kron(&n.differential(j)).scale(&s)),
                ]
            })
        })
        .collect();
    (Complex::new(layout.lo, layout.dims.clone(), d).unwrap(), layout)
}

/// `M ⊗ N → N ⊗ M`, `m ⊗ n ↦ (−1)^{ij} n ⊗ m`.
pub fn braiding<F: Field>(m: &Complex<F>, n: &Complex<F>) -> ChainMap<F> {
    let (mn, lmn) = tensor_complex(m, n);
    let (nm, lnm) = tensor_complex(n, m);
    ChainMap::new(mn, nm, |t| {
        let mut trip = Vec::new();
        if let Some(blocks) = (t >= lmn.lo).then(|| lmn.blocks.get((t - lmn.lo) as usize)).flatten() {
            for &(i, j, off) in blocks {
                let toff = lnm.offset(j, i).expect("swapped block exists");
                let s = F::from_i64(signs::braiding(i, j));
                let (a, b) = (m.dim(i), n.dim(j));
                for x in 0..a {
                    for y in 0..b {
                        trip.push((toff + y * a + x, off + x * b + y, s.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(lnm.dim(t), lmn.dim(t), trip)
    })
    .unwrap()
}

/// Layout of `Hom^n(M, N) = ⊕_k Hom(M^k, N^{k+n})`; a map `M^k → N^{k+n}`
/// is stored column-major at its block offset.
#[derive(Clone, Debug)]
pub struct HomLayout {
    pub lo: i64,
    /// Per degree `n`: `(k, offset)` for every nonzero block.
    pub blocks: Vec<Vec<(i64, usize)>>,
    pub dims: Vec<usize>,
}

impl HomLayout {
    pub fn new<F: Field>(m: &Complex<F>, n: &Complex<F>) -> Self {
        if m.dims.is_empty() || n.dims.is_empty() {
            return Self {
                lo: 0,
                blocks: vec![],
                dims: vec![],
            };
        }
        let lo = n.lo - m.hi();
        let hi = n.hi() - m.lo;
        let mut blocks = Vec::new();
        let mut dims = Vec::new();
        for deg in lo..=hi {
            let mut off = 0;
            let mut bl = Vec::new();
            for k in m.degrees() {
                let sz = m.dim(k) * n.dim(k + deg);
                if sz > 0 {
                    bl.push((k, off));
                    off += sz;
                }
            }
            blocks.push(bl);
            dims.push(off);
        }
        Self { lo, blocks, dims }
    }

    pub fn offset(&self, deg: i64, k: i64) -> Option<usize> {
        let i = deg - self.lo;
        if i < 0 {
            return None;
        }
        self.blocks.get(i as usize)?.iter().find(|b| b.0 == k).map(|b| b.1)
    }

    pub fn dim(&self, deg: i64) -> usize {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// Unpacks a degree-`deg` vector into its components `f^k`.
    pub fn unpack<F: Field>(&self, m: &Complex<F>, n: &Complex<F>, deg: i64, v: &[F]) -> Vec<(i64, SparseMatrix<F>)> {
        let mut out = Vec::new();
        for k in m.degrees() {
            let (r, c) = (n.dim(k + deg), m.dim(k));
            let mat = match self.offset(deg, k) {
                Some(off) => SparseMatrix::from_triplets(
                    r,
                    c,
                    (0..c).flat_map(|b| (0..r).map(move |a| (a, b))).filter_map(|(a, b)| {
                        let x = &v[off + b * r + a];
                        (!x.is_zero()).then(|| (a, b, x.clone()))
                    }),
                ),
                None => SparseMatrix::zeros(r, c),
            };
            out.push((k, mat));
        }
        out
    }

    /// Packs components `f^k: M^k → N^{k+deg}` into a vector.
    pub fn pack<F: Field>(&self, deg: i64, parts: &[(i64, SparseMatrix<F>)]) -> Vector<F> {
        let mut v = vec![F::zero(); self.dim(deg)];
        for (k, mat) in parts {
            if let Some(off) = self.offset(deg, *k) {
                for (a, b, x) in mat.entries() {
                    v[off + b * mat.rows() + a] = x.clone();
                }
            }
        }
        v
    }
}

/// Differential of the plain Hom complex, `df = d_N f − (−1)^n f d_M`, as a
/// matrix `Hom^n → Hom^{n+1}`.
pub fn hom_differential<F: Field>(m: &Complex<F>, n: &Complex<F>, layout: &HomLayout, deg: i64) -> SparseMatrix<F> {
    let mut trip = Vec::new();
    let sign = F::from_i64(signs::hom_differential(deg));
    for k in m.degrees() {
        let Some(off) = layout.offset(deg, k) else { continue };
        let (r, c) = (n.dim(k + deg), m.dim(k));
        // d_N f^k lands in block k of degree deg+1.
        if let Some(toff) = layout.offset(deg + 1, k) {
            let dn = n.differential(k + deg);
            let rr = dn.rows();
            for b in 0..c {
                for a2 in 0..r {
                    for (a, x) in dn.column(a2) {
                        trip.push((toff + b * rr + a, off + b * r + a2, x.clone()));
                    }
                }
            }
        }
        // ± f^k d_M^{k−1} lands in block k−1 of degree deg+1.
        if let Some(toff) = layout.offset(deg + 1, k - 1) {
            let dm = m.differential(k - 1);
            for b2 in 0..dm.cols() {
                for (b, x) in dm.column(b2) {
                    let coeff = x.mul_ref(&sign);
                    for a in 0..r {
                        trip.push((toff + b2 * r + a, off + b * r + a, coeff.clone()));
                    }
                }
            }
        }
    }
    SparseMatrix::from_triplets(layout.dim(deg + 1), layout.dim(deg), trip)
}

/// Plain `Hom•(M, N)` over the ground field.
pub fn hom_complex<F: Field>(m: &Complex<F>, n: &Complex<F>) -> (Complex<F>, HomLayout) {
    let layout = HomLayout::new(m, n);
    if layout.dims.is_empty() {
        return (Complex::zero(), layout);
    }
    let hi = layout.lo + layout.dims.len() as i64 - 1;
    let d = (layout.lo..hi).map(|deg| hom_differential(m, n, &layout, deg)).collect();
    (Complex::new(layout.lo, layout.dims.clone(), d).unwrap(), layout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    type M = SparseMatrix<Qi>;

    fn two_term_identity() -> Complex<Qi> {
        Complex::new(0, vec![1, 1], vec![M::identity(1)]).unwrap()
    }

    #[test]
    fn check_examples() {
        assert!(check_complex(&Complex::<Qi>::concentrated(0, 3)).is_ok());
        assert!(check_complex(&two_term_identity()).is_ok());
        let bad = Complex::new(0, vec![1, 1, 1], vec![M::identity(1), M::identity(1)]).unwrap();
        assert_eq!(check_complex(&bad), Err(0));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology(&two_term_identity()).dims_in(0, 1), vec![0, 0]);
        let z = Complex::new(0, vec![2, 3], vec![M::zeros(3, 2)]).unwrap();
        assert_eq!(homology(&z).dims_in(0, 1), vec![2, 3]);
        let c = Complex::new(0, vec![2, 2], vec![M::from_i64(&[vec![0, 0], vec![1, 0]])]).unwrap();
        let h = homology(&c);
        assert_eq!(h.dims_in(0, 1), vec![1, 1]);
        assert_eq!(homology_dims(&c), vec![1, 1]);
    }

    #[test]
    fn shift_signs() {
        let c = two_term_identity();
        let s = shift(&c, 1);
        assert_eq!(s.lo, -1);
        assert_eq!(s.differential(-1), c.differential(0).neg());
        assert_eq!(shift(&s, -1), c);
    }

    #[test]
    fn cone_of_identity_is_exact() {
        let c = two_term_identity();
        let k = cone(&ChainMap::identity(&c)).unwrap();
        assert!(check_complex(&k.complex).is_ok());
        assert!(homology_dims(&k.complex).iter().all(|&d| d == 0));
        assert!(k.from_target.check().is_ok());
        assert!(k.to_shifted_source.check().is_ok());
    }

    #[test]
    fn tensor_of_exact_pairs() {
        let c = two_term_identity();
        let (t, _) = tensor_complex(&c, &c);
        assert_eq!(t.dims, vec![1, 2, 1]);
        assert!(check_complex(&t).is_ok());
        assert!(homology_dims(&t).iter().all(|&d| d == 0));
        let (u, _) = tensor_complex(&c, &Complex::concentrated(0, 1));
        assert_eq!(u, c);
    }

    #[test]
    fn braiding_is_chain_map() {
        let a = Complex::new(-1, vec![2, 1], vec![M::from_i64(&[vec![1, 2]])]).unwrap();
        let b = Complex::new(0, vec![1, 2], vec![M::from_i64(&[vec![1], vec![-1]])]).unwrap();
        let br = braiding(&a, &b);
        assert!(br.check().is_ok());
    }

    #[test]
    fn hom_of_points() {
        let pt = Complex::<Qi>::concentrated(0, 1);
        let (h, _) = hom_complex(&pt, &pt);
        assert_eq!(h.lo, 0);
        assert_eq!(homology_dims(&h), vec![1]);
    }
}
