//! h-complexes: complexes of weak `(g, K)`-modules with contractions `i_ξ`
//! of degree −1, one per torus generator of `K`.
//!
//! Objects built from unbounded ones (the standard resolution) are stored
//! truncated. Every basis vector carries a headroom: how many more
//! applications of a `g`-action, `i_ξ` or `w(ξ)` the truncation can absorb
//! before a result would leave it. Identities are only checked on columns
//! with enough headroom for every map involved; genuinely finite objects
//! have unlimited headroom.

use rayon::prelude::*;

use crate::complex::{shift, ChainMap, Complex, HomLayout};
use crate::error::{Error, Result};
use crate::gk::{check_brackets, check_equivariance, FiniteModule};
use crate::lie::{Character, DiagGroup, Pair};
use crate::linalg::{kernel_basis, rank, SparseMatrix, Subspace};
use crate::report::HomologyReport;
use crate::scalar::Field;
use crate::signs;

pub const UNBOUNDED: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq)]
pub struct HComplex<F> {
    pub complex: Complex<F>,
    pub modules: Vec<FiniteModule<F>>,
    /// `i[t][k]` maps term `k` to term `k − 1` (a `0 × dim` matrix for `k = 0`).
    pub i: Vec<Vec<SparseMatrix<F>>>,
    pub headroom: Vec<Vec<u32>>,
}

/// One failed h-complex condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HViolation {
    pub axiom: String,
    pub degree: i64,
    pub xi: Option<usize>,
    pub detail: String,
}

impl std::fmt::Display for HViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} in degree {}", self.axiom, self.degree)?;
        if let Some(t) = self.xi {
            write!(f, " for ξ_{t}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

impl<F: Field> HComplex<F> {
    pub fn new(complex: Complex<F>, modules: Vec<FiniteModule<F>>, i: Vec<Vec<SparseMatrix<F>>>, headroom: Vec<Vec<u32>>) -> Result<Self> {
        let n = complex.dims.len();
        if modules.len() != n || headroom.len() != n || i.iter().any(|it| it.len() != n) {
            return Err(Error::Dimension("h-complex data does not cover every term".into()));
        }
        for k in 0..n {
            let dim = complex.dims[k];
            if modules[k].dim() != dim || headroom[k].len() != dim {
                return Err(Error::Dimension(format!("term {} has inconsistent dimensions", complex.lo + k as i64)));
            }
            let prev = if k > 0 { complex.dims[k - 1] } else { 0 };
            if i.iter().any(|it| it[k].rows() != prev || it[k].cols() != dim) {
                return Err(Error::Dimension(format!("contraction on term {} has the wrong shape", complex.lo + k as i64)));
            }
        }
        Ok(Self {
            complex,
            modules,
            i,
            headroom,
        })
    }

    /// A complex of modules with `i = 0` and unlimited headroom.
    pub fn with_zero_contraction(complex: Complex<F>, modules: Vec<FiniteModule<F>>, torus_rank: usize) -> Result<Self> {
        let i = (0..torus_rank)
            .map(|_| {
                (0..complex.dims.len())
                    .map(|k| SparseMatrix::zeros(if k > 0 { complex.dims[k - 1] } else { 0 }, complex.dims[k]))
                    .collect()
            })
            .collect();
        let headroom = complex.dims.iter().map(|&d| vec![UNBOUNDED; d]).collect();
        Self::new(complex, modules, i, headroom)
    }

    /// A single module in degree `n`.
    pub fn concentrated(n: i64, module: FiniteModule<F>, torus_rank: usize) -> Self {
        let c = Complex::concentrated(n, module.dim());
        Self::with_zero_contraction(c, vec![module], torus_rank).unwrap()
    }

    pub fn lo(&self) -> i64 {
        self.complex.lo
    }

    pub fn hi(&self) -> i64 {
        self.complex.hi()
    }

    pub fn torus_rank(&self) -> usize {
        self.i.len()
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo() && n <= self.hi()).then(|| (n - self.lo()) as usize)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.complex.dim(n)
    }

    /// `i_{ξ_t}` on the degree-`n` term.
    pub fn contraction(&self, t: usize, n: i64) -> SparseMatrix<F> {
        match self.index(n) {
            Some(k) => self.i[t][k].clone(),
            None => SparseMatrix::zeros(self.dim(n - 1), self.dim(n)),
        }
    }

    pub fn module(&self, n: i64) -> Option<&FiniteModule<F>> {
        self.index(n).map(|k| &self.modules[k])
    }

    pub fn headroom_at(&self, n: i64) -> &[u32] {
        self.index(n).map_or(&[], |k| &self.headroom[k])
    }

    /// Columns of the degree-`n` term with headroom at least `h`.
    pub fn columns_with_headroom(&self, n: i64, h: u32) -> Vec<usize> {
        self.headroom_at(n).iter().enumerate().filter(|(_, &x)| x >= h).map(|(c, _)| c).collect()
    }

    /// `w(ξ_t)` on the degree-`n` term.
    pub fn defect(&self, pair: &Pair<F>, n: i64) -> Result<Vec<SparseMatrix<F>>> {
        match self.module(n) {
            Some(m) => m.defect(pair),
            None => Ok(vec![SparseMatrix::zeros(0, 0); pair.torus_rank()]),
        }
    }

    pub fn weights(&self, n: i64) -> &[Character] {
        self.module(n).map_or(&[], |m| &m.weights)
    }
}

/// Checks `d² = 0`, the weak-module structure of every term, that `d` is a
/// morphism of weak modules, and the four contraction axioms. Violations are ordered by
/// degree, then `ξ`, then axiom.
pub fn check_h_axioms<F: Field>(h: &HComplex<F>, pair: &Pair<F>) -> Vec<HViolation> {
    if h.torus_rank() != pair.torus_rank() {
        return vec![HViolation {
            axiom: "shape".into(),
            degree: h.lo(),
            xi: None,
            detail: format!("{} contractions for a torus of rank {}", h.torus_rank(), pair.torus_rank()),
        }];
    }
    let degrees: Vec<i64> = h.complex.degrees().collect();
    let mut all: Vec<HViolation> = degrees.par_iter().flat_map(|&n| check_degree(h, pair, n)).collect();
    all.sort_by_key(|v| (v.degree, v.xi.map_or(-1, |t| t as i64)));
    all
}

fn check_degree<F: Field>(h: &HComplex<F>, pair: &Pair<F>, n: i64) -> Vec<HViolation> {
    let mut out = Vec::new();
    let mut push = |axiom: &str, xi: Option<usize>, detail: String| {
        out.push(HViolation {
            axiom: axiom.to_string(),
            degree: n,
            xi,
            detail,
        })
    };
    let module = h.module(n).expect("degree in range");
    let labels = pair.g.labels();
    let h1 = h.columns_with_headroom(n, 1);
    let h2 = h.columns_with_headroom(n, 2);
    let d_out = h.complex.differential(n);
    let d_in = h.complex.differential(n - 1);

    if !h.complex.differential(n + 1).mul(&d_out).is_zero() {
        push("d² = 0", None, "d^{n+1} d^n ≠ 0".into());
    }
    if let Err(v) = check_equivariance(&pair.k, &pair.grading, &module.weights, &module.weights, &module.action, labels) {
        push("weak module", None, v.to_string());
    }
    if let Err(v) = check_brackets(&pair.g, &module.action, Some(&h2)) {
        push("weak module", None, v.to_string());
    }
    // d is K-equivariant and g-linear.
    let next_weights = h.weights(n + 1);
    if let Some((r, c, _)) = d_out.entries().find(|(r, c, _)| next_weights[*r] != module.weights[*c]) {
        push("d equivariant", None, format!("d^n maps weight {} to weight {}", module.weights[c], next_weights[r]));
    }
    if let Some(next) = h.module(n + 1) {
        for (j, label) in labels.iter().enumerate() {
            let lhs = next.action[j].mul(&d_out.select_columns(&h1));
            let rhs = d_out.mul(&module.action[j].select_columns(&h1));
            if let Some(c) = lhs.columns_equal(&rhs, 0..h1.len()) {
                push("d g-linear", None, format!("ρ({label}) d ≠ d ρ({label}) on basis vector {}", h1[c]));
                break;
            }
        }
    }
    let defect = match module.defect(pair) {
        Ok(w) => w,
        Err(e) => {
            push("weak module", None, e.to_string());
            return out;
        }
    };
    let prev_weights = h.weights(n - 1);
    for t in 0..h.torus_rank() {
        let it = h.contraction(t, n);
        // i preserves weights
        if let Some((r, c, _)) = it.entries().find(|(r, c, _)| prev_weights[*r] != module.weights[*c]) {
            push(
                "i_ξ K-equivariant",
                Some(t),
                format!("i maps weight {} to weight {}", module.weights[c], prev_weights[r]),
            );
        }
        // i is g-linear
        if let Some(prev) = h.module(n - 1) {
            for (j, label) in labels.iter().enumerate() {
                let lhs = prev.action[j].mul(&it.select_columns(&h2));
                let rhs = it.mul(&module.action[j].select_columns(&h2));
                if let Some(c) = lhs.columns_equal(&rhs, 0..h2.len()) {
                    push("i_ξ g-linear", Some(t), format!("ρ({label}) i ≠ i ρ({label}) on basis vector {}", h2[c]));
                    break;
                }
            }
        }
        // i anticommutes with itself
        for s in 0..=t {
            let is = h.contraction(s, n);
            let lhs = h.contraction(s, n - 1).mul(&it.select_columns(&h2));
            let rhs = h.contraction(t, n - 1).mul(&is.select_columns(&h2));
            let sum = lhs.add(&rhs);
            let first = sum.entries().next().map(|(_, c, _)| c);
            if let Some(c) = first {
                push(
                    "i_ξ i_η + i_η i_ξ = 0",
                    Some(t),
                    format!("fails with η = ξ_{s} on basis vector {}", h2[c]),
                );
            }
        }
        // homotopy identity
        let lhs = d_in
            .mul(&it.select_columns(&h1))
            .add(&h.contraction(t, n + 1).mul(&d_out.select_columns(&h1)));
        let rhs = defect[t].select_columns(&h1);
        if let Some(c) = lhs.columns_equal(&rhs, 0..h1.len()) {
            push("d i_ξ + i_ξ d = w(ξ)", Some(t), format!("fails on basis vector {}", h1[c]));
        }
    }
    out
}

/// Result of computing the cohomology of an h-complex.
#[derive(Clone, Debug)]
pub struct HCohomology<F> {
    pub report: HomologyReport<F>,
    /// Degrees where some `w(ξ)` does not vanish on cohomology.
    pub defect_failures: Vec<(i64, usize)>,
}

/// Cohomology of an h-complex, plus the check that every `w(ξ)` maps
/// cocycles into coboundaries. Cocycles are taken among vectors with
/// headroom at least one so that `w(ξ)` is known on them.
pub fn h_cohomology_modules<F: Field>(h: &HComplex<F>, pair: &Pair<F>) -> Result<HCohomology<F>> {
    let report = crate::complex::homology(&h.complex);
    let mut defect_failures = Vec::new();
    for n in h.complex.degrees() {
        let cols = h.columns_with_headroom(n, 1);
        let d = h.complex.differential(n).select_columns(&cols);
        let dim = h.dim(n);
        let cocycles: Vec<Vec<F>> = kernel_basis(&d)
            .into_iter()
            .map(|v| {
                let mut full = vec![F::zero(); dim];
                for (c, x) in cols.iter().zip(v) {
                    full[*c] = x;
                }
                full
            })
            .collect();
        if cocycles.is_empty() {
            continue;
        }
        let z = SparseMatrix::from_columns(dim, &cocycles);
        let image = h.complex.differential(n - 1);
        let base = rank(&image);
        for (t, w) in h.defect(pair, n)?.iter().enumerate() {
            let wz = w.mul(&z);
            let joined = SparseMatrix::block(&[vec![Some(&image), Some(&wz)]], &[dim], &[image.cols(), wz.cols()]);
            if rank(&joined) != base {
                defect_failures.push((n, t));
            }
        }
    }
    Ok(HCohomology { report, defect_failures })
}

/// `C[k]` with `i' = (−1)^k i`; the `g`-action is unchanged since `U(g)`
/// sits in degree zero.
pub fn h_shift<F: Field>(h: &HComplex<F>, k: i64) -> HComplex<F> {
    let s = F::from_i64(signs::shift_contraction(k));
    let a = F::from_i64(signs::shift_action(0, k));
    HComplex {
        complex: shift(&h.complex, k),
        modules: h
            .modules
            .iter()
            .map(|m| FiniteModule::new(m.weights.clone(), m.action.iter().map(|x| x.scale(&a)).collect()))
            .collect(),
        i: h.i.iter().map(|it| it.iter().map(|m| m.scale(&s)).collect()).collect(),
        headroom: h.headroom.clone(),
    }
}

/// A morphism of h-complexes: a chain map commuting with `g`, `K` and `i`.
#[derive(Clone, Debug)]
pub struct HMorphism<F> {
    pub source: HComplex<F>,
    pub target: HComplex<F>,
    pub map: ChainMap<F>,
}

impl<F: Field> HMorphism<F> {
    pub fn new(source: HComplex<F>, target: HComplex<F>, f: impl Fn(i64) -> SparseMatrix<F>) -> Result<Self> {
        let map = ChainMap::new(source.complex.clone(), target.complex.clone(), f)?;
        Ok(Self { source, target, map })
    }

    pub fn identity(h: &HComplex<F>) -> Self {
        Self::new(h.clone(), h.clone(), |n| SparseMatrix::identity(h.dim(n))).unwrap()
    }

    /// First failing condition, if any.
    pub fn check(&self) -> std::result::Result<(), String> {
        self.map.check().map_err(|n| format!("f d ≠ d f in degree {n}"))?;
        for n in self.map.lo..self.map.lo + self.map.maps.len() as i64 {
            let f = self.map.at(n);
            let (ws, wt) = (self.source.weights(n), self.target.weights(n));
            if f.entries().any(|(r, c, _)| ws[c] != wt[r]) {
                return Err(format!("not K-equivariant in degree {n}"));
            }
            if let (Some(ms), Some(mt)) = (self.source.module(n), self.target.module(n)) {
                for (a, b) in ms.action.iter().zip(&mt.action) {
                    if f.mul(a) != b.mul(&f) {
                        return Err(format!("not g-linear in degree {n}"));
                    }
                }
            }
            for t in 0..self.source.torus_rank() {
                let lhs = self.map.at(n - 1).mul(&self.source.contraction(t, n));
                let rhs = self.target.contraction(t, n).mul(&f);
                if lhs != rhs {
                    return Err(format!("does not commute with i_ξ{t} in degree {n}"));
                }
            }
        }
        Ok(())
    }
}

/// Cone of a morphism of h-complexes: term `n` is `M^{n+1} ⊕ N^n`, the
/// `M[1]` part carries `−i`.
pub fn h_cone<F: Field>(f: &HMorphism<F>) -> Result<HComplex<F>> {
    f.check().map_err(Error::Invalid)?;
    let c = crate::complex::cone(&f.map)?.complex;
    let (m, n) = (&f.source, &f.target);
    let g_dim = m.modules.first().or(n.modules.first()).map_or(0, |x| x.action.len());
    let empty = FiniteModule::new(vec![], vec![SparseMatrix::zeros(0, 0); g_dim]);
    let mut modules = Vec::new();
    let mut headroom = Vec::new();
    for k in c.degrees() {
        let a = m.module(k + 1).unwrap_or(&empty);
        let b = n.module(k).unwrap_or(&empty);
        modules.push(a.direct_sum(b));
        let mut hr = m.headroom_at(k + 1).to_vec();
        hr.extend_from_slice(n.headroom_at(k));
        headroom.push(hr);
    }
    let neg = F::from_i64(signs::shift_contraction(1));
    let i = (0..m.torus_rank().max(n.torus_rank()))
        .map(|t| {
            c.degrees()
                .map(|k| {
                    let im = m.contraction(t, k + 1).scale(&neg);
                    let in_ = n.contraction(t, k);
                    im.direct_sum(&in_)
                })
                .collect()
        })
        .collect();
    HComplex::new(c, modules, i, headroom)
}

/// Koszul tensor product with Leibniz `g`-action, diagonal `K`-action and
/// `i = i^M ⊗ 1 + (−1)^p 1 ⊗ i^N`.
pub fn h_tensor<F: Field>(m: &HComplex<F>, n: &HComplex<F>, k: &DiagGroup) -> Result<HComplex<F>> {
    if m.torus_rank() != n.torus_rank() {
        return Err(Error::Invalid("h-complexes over different pairs".into()));
    }
    let (c, layout) = crate::complex::tensor_complex(&m.complex, &n.complex);
    let mut modules = Vec::new();
    let mut headroom = Vec::new();
    for (bi, blocks) in layout.blocks.iter().enumerate() {
        let t = layout.lo + bi as i64;
        let mut module: Option<FiniteModule<F>> = None;
        let mut hr = Vec::with_capacity(layout.dim(t));
        for &(i, j, _) in blocks {
            let (a, b) = (m.module(i).unwrap(), n.module(j).unwrap());
            let prod = a.tensor(b, k);
            module = Some(match module {
                Some(x) => x.direct_sum(&prod),
                None => prod,
            });
            for &x in m.headroom_at(i) {
                hr.extend(n.headroom_at(j).iter().map(|&y| x.min(y)));
            }
        }
        let g_dim = m.modules.first().map_or(0, |x| x.action.len());
        modules.push(module.unwrap_or_else(|| FiniteModule::new(vec![], vec![SparseMatrix::zeros(0, 0); g_dim])));
        headroom.push(hr);
    }
    let i = (0..m.torus_rank())
        .map(|tt| {
            c.degrees()
                .map(|t| {
                    layout.assemble(t, -1, |i, j| {
                        let s = F::from_i64(signs::tensor_contraction(i));
                        vec![
                            (i - 1, j, m.contraction(tt, i).kron(&SparseMatrix::identity(n.dim(j)))),
                            (i, j - 1, SparseMatrix::identity(m.dim(i)).kron(&n.contraction(tt, j)).scale(&s)),
                        ]
                    })
                })
                .collect()
        })
        .collect();
    HComplex::new(c, modules, i, headroom)
}

fn require_unbounded<F: Field>(h: &HComplex<F>) -> Result<()> {
    if h.headroom.iter().flatten().any(|&x| x != UNBOUNDED) {
        return Err(Error::Unsupported("Hom constructions need untruncated h-complexes".into()));
    }
    Ok(())
}

/// Internal Hom: `Hom•_C(M, N)` with `(ηf) = ηf − fη`, weights `ν − μ` and
/// `i(f) = i^N f − (−1)^n f i^M`.
pub fn h_internal_hom<F: Field>(m: &HComplex<F>, n: &HComplex<F>, k: &DiagGroup) -> Result<HComplex<F>> {
    require_unbounded(m)?;
    require_unbounded(n)?;
    let (c, layout) = crate::complex::hom_complex(&m.complex, &n.complex);
    let g_dim = m.modules.first().map_or(0, |x| x.action.len());
    let mut modules = Vec::new();
    for deg in c.degrees() {
        let mut weights = Vec::new();
        let mut action: Vec<SparseMatrix<F>> = vec![SparseMatrix::zeros(0, 0); g_dim];
        for kk in m.complex.degrees() {
            if layout.offset(deg, kk).is_none() {
                continue;
            }
            let (src, dst) = (m.module(kk).unwrap(), n.module(kk + deg).unwrap());
            for mu in &src.weights {
                for nu in &dst.weights {
                    weights.push(k.add(nu, &k.neg(mu)));
                }
            }
            let (r, cdim) = (dst.dim(), src.dim());
            for (j, a) in action.iter_mut().enumerate() {
                let blk = SparseMatrix::identity(cdim)
                    .kron(&dst.action[j])
                    .sub(&src.action[j].transpose().kron(&SparseMatrix::identity(r)));
                *a = a.direct_sum(&blk);
            }
        }
        modules.push(FiniteModule::new(weights, action));
    }
    let i = (0..m.torus_rank())
        .map(|t| {
            c.degrees()
                .map(|deg| {
                    let mut trip = Vec::new();
                    let sign = F::from_i64(signs::hom_contraction(deg));
                    for kk in m.complex.degrees() {
                        let Some(off) = layout.offset(deg, kk) else { continue };
                        let (r, cdim) = (n.dim(kk + deg), m.dim(kk));
                        if let Some(toff) = layout.offset(deg - 1, kk) {
                            let blk = SparseMatrix::identity(cdim).kron(&n.contraction(t, kk + deg));
                            trip.extend(blk.entries().map(|(a, b, x)| (toff + a, off + b, x.clone())));
                        }
                        if let Some(toff) = layout.offset(deg - 1, kk + 1) {
                            let blk = m.contraction(t, kk + 1).transpose().kron(&SparseMatrix::identity(r)).scale(&sign);
                            trip.extend(blk.entries().map(|(a, b, x)| (toff + a, off + b, x.clone())));
                        }
                    }
                    SparseMatrix::from_triplets(layout.dim(deg - 1), layout.dim(deg), trip)
                })
                .collect()
        })
        .collect();
    let headroom = c.dims.iter().map(|&d| vec![UNBOUNDED; d]).collect();
    HComplex::new(c, modules, i, headroom)
}

/// Which linearity conditions cut out the Hom complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomKind {
    /// `Hom•_{g,K}`: `g`-linear and `K`-equivariant components.
    Equivariant,
    /// `ʰHom•`: additionally `f i_ξ = (−1)^n i_ξ f`.
    H,
}

/// A subcomplex of a plain Hom complex, with the embedding of each term.
#[derive(Clone, Debug)]
pub struct ConstrainedHom<F> {
    pub complex: Complex<F>,
    pub layout: HomLayout,
    pub spaces: Vec<Subspace<F>>,
}

/// `Hom•_{g,K}(M, N)` or `ʰHom•(M, N)` as the kernel of explicit linear
/// conditions inside the plain Hom complex.
pub fn hom_complex_over<F: Field>(m: &HComplex<F>, n: &HComplex<F>, kind: HomKind) -> Result<ConstrainedHom<F>> {
    require_unbounded(m)?;
    require_unbounded(n)?;
    let (plain, layout) = crate::complex::hom_complex(&m.complex, &n.complex);
    let mut spaces = Vec::new();
    for deg in plain.degrees() {
        let dim = layout.dim(deg);
        let mut rows: Vec<Vec<(usize, F)>> = Vec::new();
        for kk in m.complex.degrees() {
            let Some(off) = layout.offset(deg, kk) else { continue };
            let (src, dst) = (m.module(kk).unwrap(), n.module(kk + deg).unwrap());
            let (r, cdim) = (dst.dim(), src.dim());
            for b in 0..cdim {
                for a in 0..r {
                    if src.weights[b] != dst.weights[a] {
                        rows.push(vec![(off + b * r + a, F::one())]);
                    }
                }
            }
            for j in 0..src.action.len() {
                let blk = SparseMatrix::identity(cdim)
                    .kron(&dst.action[j])
                    .sub(&src.action[j].transpose().kron(&SparseMatrix::identity(r)));
                rows.extend(blk.transpose().columns_as_rows(off));
            }
        }
        if kind == HomKind::H {
            // f^{l−1} i − (−1)^n i f^l = 0 as maps M^l → N^{l+deg−1}.
            let sign = F::from_i64(signs::h_hom(deg));
            for t in 0..m.torus_rank() {
                for l in m.complex.degrees() {
                    let (r, cdim) = (n.dim(l + deg - 1), m.dim(l));
                    if r * cdim == 0 {
                        continue;
                    }
                    let mut trip = Vec::new();
                    if let Some(off) = layout.offset(deg, l - 1) {
                        let blk = m.contraction(t, l).transpose().kron(&SparseMatrix::identity(r));
                        trip.extend(blk.entries().map(|(a, b, x)| (a, off + b, x.clone())));
                    }
                    if let Some(off) = layout.offset(deg, l) {
                        let blk = SparseMatrix::identity(cdim).kron(&n.contraction(t, l + deg)).scale(&sign).neg();
                        trip.extend(blk.entries().map(|(a, b, x)| (a, off + b, x.clone())));
                    }
                    let cond = SparseMatrix::from_triplets(r * cdim, dim, trip);
                    rows.extend(cond.transpose().columns_as_rows(0));
                }
            }
        }
        let constraints = SparseMatrix::from_triplets(
            rows.len(),
            dim,
            rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(c, x)| (i, *c, x.clone()))),
        );
        spaces.push(Subspace::kernel(&constraints));
    }
    let d = (0..spaces.len().saturating_sub(1))
        .map(|k| {
            let deg = plain.lo + k as i64;
            spaces[k].restrict(&plain.differential(deg), &spaces[k + 1])
        })
        .collect();
    let complex = Complex::new(plain.lo, spaces.iter().map(Subspace::dim).collect(), d)?;
    Ok(ConstrainedHom { complex, layout, spaces })
}

trait ColumnsAsRows<F> {
    fn columns_as_rows(&self, offset: usize) -> Vec<Vec<(usize, F)>>;
}

impl<F: Field> ColumnsAsRows<F> for SparseMatrix<F> {
    /// Each nonempty column, read as a row vector with indices shifted by
    /// `offset`.
    fn columns_as_rows(&self, offset: usize) -> Vec<Vec<(usize, F)>> {
        (0..self.cols())
            .filter(|&c| !self.column(c).is_empty())
            .map(|c| self.column(c).iter().map(|(r, x)| (offset + r, x.clone())).collect())
            .collect()
    }
}
