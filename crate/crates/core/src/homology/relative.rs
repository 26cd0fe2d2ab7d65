//! Relative Lie algebra homology `H_n(h, K; E)` of a finite module.
//!
//! Chains are `C_n = (∧ⁿp ⊗ E)^K`, the weight-zero part, with boundary
//!
//! ```text
//! ∂(ξ_1 ∧ … ∧ ξ_n ⊗ v) = Σ_i (−1)^i (… ξ̂_i …) ⊗ ξ_i v
//!                      + Σ_{p<q} (−1)^{p+q} (P[ξ_p, ξ_q] ∧ … ξ̂_p … ξ̂_q …) ⊗ v
//! ```
//!
//! where `h = k ⊕ p` and `P` is the projection onto `p` along `k`.

use std::collections::HashMap;

use crate::complex::{homology, homology_dims, hom_complex, Complex};
use crate::error::{Error, Result};
use crate::gk::FiniteModule;
use crate::homology::pbw::wedge_basis;
use crate::lie::{Character, Pair, SubpairEmbedding};
use crate::linalg::{rank, solve, SparseMatrix, Vector};
use crate::report::{DegreeData, HomologyReport};
use crate::scalar::Field;
use crate::signs;

/// `h = ι(k) ⊕ p` with `p` spanned by basis vectors of `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Complement<F> {
    /// Basis indices of `h` spanning `p`, increasing.
    pub p: Vec<usize>,
    /// `P : h → p` in the basis `p`, a `dim p × dim h` matrix.
    pub projection: SparseMatrix<F>,
}

impl<F: Field> Complement<F> {
    /// Non-zero-weight basis vectors, then greedily the weight-zero basis
    /// vectors outside `ι(k)` and the ones chosen before them.
    pub fn new(pair: &Pair<F>) -> Result<Self> {
        let dim = pair.g.dim();
        for (t, col) in pair.iota.iter().enumerate() {
            if col.iter().enumerate().any(|(j, x)| !x.is_zero() && !pair.grading[j].is_trivial()) {
                return Err(Error::Grading(format!("ι(ξ_{t}) leaves the weight-zero part; the complement would not be K-stable")));
            }
        }
        let mut span: Vec<Vector<F>> = pair.iota.clone();
        if !span.is_empty() && rank(&SparseMatrix::from_columns(dim, &span)) != span.len() {
            return Err(Error::Invalid("ι is not injective".into()));
        }
        let mut p = Vec::new();
        for j in 0..dim {
            let e = pair.g.basis_vector(j);
            if !pair.grading[j].is_trivial() {
                p.push(j);
                span.push(e);
                continue;
            }
            span.push(e);
            if rank(&SparseMatrix::from_columns(dim, &span)) == span.len() {
                p.push(j);
            } else {
                span.pop();
            }
        }
        if span.len() != dim {
            return Err(Error::Invalid("ι(k) and p do not span h".into()));
        }
        // Columns of `basis` are ι_1, …, ι_r, e_{p_1}, …; solve for each e_j.
        let mut columns = pair.iota.clone();
        columns.extend(p.iter().map(|&j| pair.g.basis_vector(j)));
        let basis = SparseMatrix::from_columns(dim, &columns);
        let r = pair.iota.len();
        let mut trip = Vec::new();
        for j in 0..dim {
            let x = solve(&basis, &pair.g.basis_vector(j)).expect("basis spans h");
            for (a, c) in x[r..].iter().enumerate() {
                if !c.is_zero() {
                    trip.push((a, j, c.clone()));
                }
            }
        }
        Ok(Self {
            projection: SparseMatrix::from_triplets(p.len(), dim, trip),
            p,
        })
    }

    pub fn dim(&self) -> usize {
        self.p.len()
    }

    /// `P[ξ_a, ξ_b]` for positions `a, b` in `p`, in the basis `p`.
    pub fn projected_bracket(&self, pair: &Pair<F>, a: usize, b: usize) -> Vector<F> {
        let br = pair.g.bracket_basis(self.p[a], self.p[b]);
        self.projection.mul_vec(&br)
    }
}

/// One chain basis vector: positions in `p` (increasing) and a module index.
pub type Chain = (Vec<usize>, usize);

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeComplex<F> {
    pub complement: Complement<F>,
    /// `chains[n]` is the basis of `C_n`.
    pub chains: Vec<Vec<Chain>>,
    /// `C_n` sits in cochain degree `−n`.
    pub complex: Complex<F>,
}

fn wedge_weight<F>(pair: &Pair<F>, comp: &Complement<F>, s: &[usize]) -> Character {
    s.iter()
        .fold(pair.k.trivial_character(), |acc, &a| pair.k.add(&acc, &pair.grading[comp.p[a]]))
}

fn invariant_basis<F: Field>(pair: &Pair<F>, comp: &Complement<F>, m: &FiniteModule<F>, n: usize) -> Vec<Chain> {
    let mut out = Vec::new();
    for s in wedge_basis(comp.dim(), n) {
        let ws = wedge_weight(pair, comp, &s);
        for (v, wv) in m.weights.iter().enumerate() {
            if pair.k.add(&ws, wv).is_trivial() {
                out.push((s.clone(), v));
            }
        }
    }
    out
}

fn missing() -> Error {
    Error::Grading("boundary leaves the weight-zero part; the module weights are not equivariant".into())
}

/// Standard complex of `(h, K)` with coefficients in `m`.
pub fn relative_complex<F: Field>(pair: &Pair<F>, m: &FiniteModule<F>) -> Result<RelativeComplex<F>> {
    m.validate(pair).map_err(|v| Error::Invalid(v.to_string()))?;
    let comp = Complement::new(pair)?;
    let d = comp.dim();
    let chains: Vec<Vec<Chain>> = (0..=d).map(|n| invariant_basis(pair, &comp, m, n)).collect();
    let index: Vec<HashMap<Chain, usize>> = chains
        .iter()
        .map(|c| c.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect())
        .collect();
    let brackets: Vec<Vec<Vector<F>>> = (0..d).map(|a| (0..d).map(|b| comp.projected_bracket(pair, a, b)).collect()).collect();

    let mut boundaries = Vec::with_capacity(d);
    for n in 1..=d {
        let mut trip = Vec::new();
        for (col, (s, v)) in chains[n].iter().enumerate() {
            for i in 0..s.len() {
                let sign = F::from_i64(signs::relative_first(i + 1));
                let mut rest = s.clone();
                rest.remove(i);
                for (w, c) in m.action[comp.p[s[i]]].column(*v) {
                    let row = *index[n - 1].get(&(rest.clone(), *w)).ok_or_else(missing)?;
                    trip.push((row, col, c.mul_ref(&sign)));
                }
            }
            for p in 0..s.len() {
                for q in p + 1..s.len() {
                    let sign = F::from_i64(signs::bracket_term(p + 1, q + 1));
                    let rest: Vec<usize> = s.iter().enumerate().filter(|&(k, _)| k != p && k != q).map(|(_, &x)| x).collect();
                    for (c, coeff) in brackets[s[p]][s[q]].iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut seq = vec![c];
                        seq.extend_from_slice(&rest);
                        let t = signs::sort_sign(&mut seq);
                        if t == 0 {
                            continue;
                        }
                        let row = *index[n - 1].get(&(seq, *v)).ok_or_else(missing)?;
                        trip.push((row, col, coeff.mul_ref(&sign).mul_ref(&F::from_i64(t))));
                    }
                }
            }
        }
        boundaries.push(SparseMatrix::from_triplets(chains[n - 1].len(), chains[n].len(), trip));
    }
    // Cochain index k ↔ degree −d + k ↔ homological degree d − k.
    let dims = (0..=d).map(|k| chains[d - k].len()).collect();
    let dmat = (0..d).map(|k| boundaries[d - k - 1].clone()).collect();
    let complex = Complex::new(-(d as i64), dims, dmat)?;
    Ok(RelativeComplex {
        complement: comp,
        chains,
        complex,
    })
}

/// The relative complex of a subpair; `m` is a module over the small pair.
pub fn relative_standard_complex<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>) -> Result<RelativeComplex<F>> {
    relative_complex(&e.small, m)
}

impl<F: Field> RelativeComplex<F> {
    pub fn length(&self) -> usize {
        self.complement.dim()
    }

    /// `∂_n : C_n → C_{n−1}`.
    pub fn boundary(&self, n: usize) -> SparseMatrix<F> {
        self.complex.differential(-(n as i64))
    }

    pub fn chain_dim(&self, n: usize) -> usize {
        self.chains.get(n).map_or(0, Vec::len)
    }

    /// `H_n` for `n = 0..=dim p`, keyed by homological degree.
    pub fn homology(&self) -> HomologyReport<F> {
        let cohom = homology(&self.complex);
        let mut out = HomologyReport::default();
        for (deg, data) in cohom.degrees {
            out.insert(-deg, data);
        }
        for n in 0..=self.length() as i64 {
            out.degrees.entry(n).or_insert(DegreeData {
                dim: 0,
                representatives: vec![],
                stabilization: None,
            });
        }
        out
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        let mut dims = homology_dims(&self.complex);
        dims.reverse();
        dims
    }
}

pub fn rel_homology<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>) -> Result<HomologyReport<F>> {
    Ok(relative_standard_complex(e, m)?.homology())
}

/// `V / hV` restricted to the invariant weights: the quotient of the
/// weight-zero part by the weight-zero part of `Σ im η`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coinvariants<F> {
    pub dim: usize,
    /// Representatives as vectors of `M`.
    pub representatives: Vec<Vector<F>>,
}

pub fn coinvariants<F: Field>(m: &FiniteModule<F>, h_basis: &[Vector<F>], invariant: impl Fn(&Character) -> bool) -> Coinvariants<F> {
    let zero: Vec<usize> = (0..m.dim()).filter(|&v| invariant(&m.weights[v])).collect();
    let images: Vec<SparseMatrix<F>> = h_basis.iter().map(|x| m.act(x).select_rows(&zero)).collect();
    let mut image = SparseMatrix::zeros(zero.len(), 0);
    for im in &images {
        image = SparseMatrix::block(&[vec![Some(&image), Some(im)]], &[zero.len()], &[image.cols(), im.cols()]);
    }
    let unit: Vec<Vector<F>> = (0..zero.len())
        .map(|k| {
            let mut v = vec![F::zero(); zero.len()];
            v[k] = F::one();
            v
        })
        .collect();
    let reps = crate::complex::quotient_representatives(&unit, &image);
    let representatives = reps
        .into_iter()
        .map(|r| {
            let mut v = vec![F::zero(); m.dim()];
            for (k, x) in r.into_iter().enumerate() {
                v[zero[k]] = x;
            }
            v
        })
        .collect::<Vec<_>>();
    Coinvariants {
        dim: representatives.len(),
        representatives,
    }
}

/// Coinvariants of the whole small algebra of a subpair on `m`.
pub fn subpair_coinvariants<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>) -> Coinvariants<F> {
    let basis: Vec<Vector<F>> = (0..e.small.g.dim()).map(|j| e.small.g.basis_vector(j)).collect();
    coinvariants(m, &basis, Character::is_trivial)
}

/// `dim Ext^n(M, C) = dim H_n(h, K; M)`.
pub fn ext_via_duality<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>, n: usize) -> Result<usize> {
    let c = relative_standard_complex(e, m)?;
    Ok(c.homology_dims().get(n).copied().unwrap_or(0))
}

/// Chain maps `C → C[n]` modulo homotopy, i.e. `H⁰ Hom•(C, C[n])` with the
/// one-dimensional target in degree `−n`.
pub fn ext_via_chain_maps<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>, n: usize) -> Result<usize> {
    let c = relative_standard_complex(e, m)?;
    let target = Complex::concentrated(-(n as i64), 1);
    let (hom, _) = hom_complex(&c.complex, &target);
    if hom.dims.is_empty() {
        return Ok(0);
    }
    let dims = homology_dims(&hom);
    let k = -hom.lo;
    Ok(if k >= 0 && (k as usize) < dims.len() { dims[k as usize] } else { 0 })
}

/// Relative Chevalley–Eilenberg cohomology `H^n(h, K; M*)` from invariant
/// cochains `Hom_K(∧ⁿp, M*)`.
pub fn ext_via_cochains<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>, n: usize) -> Result<usize> {
    Ok(cochain_cohomology(&e.small, m)?.get(n).copied().unwrap_or(0))
}

/// Dimensions of `H^n(h, K; M*)` for `n = 0..=dim p`.
pub fn cochain_cohomology<F: Field>(pair: &Pair<F>, m: &FiniteModule<F>) -> Result<Vec<usize>> {
    m.validate(pair).map_err(|v| Error::Invalid(v.to_string()))?;
    let comp = Complement::new(pair)?;
    let d = comp.dim();
    // Basis cochain (S, v): ξ_S ↦ v*, zero on the other wedges. `v*` has
    // weight −wt(v), so invariance is the same condition as for chains.
    let cochains: Vec<Vec<Chain>> = (0..=d).map(|n| invariant_basis(pair, &comp, m, n)).collect();
    let index: Vec<HashMap<Chain, usize>> = cochains
        .iter()
        .map(|c| c.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect())
        .collect();
    let mut diffs = Vec::with_capacity(d);
    for n in 0..d {
        // (dω)(ξ_0, …, ξ_n) = Σ_i (−1)^i ξ_i ω(… ξ̂_i …)
        //                    + Σ_{i<j} (−1)^{i+j} ω(P[ξ_i, ξ_j], … ξ̂_i … ξ̂_j …).
        let mut trip = Vec::new();
        for (row, (t, w)) in cochains[n + 1].iter().enumerate() {
            for i in 0..t.len() {
                let sign = F::from_i64(signs::parity_sign(i as i64));
                let mut rest = t.clone();
                rest.remove(i);
                // (η·v*)(w) = −v*(η w), so the w*-coefficient of ξ_i·v* is −ρ(ξ_i)_{v,w}.
                for (v, c) in m.action[comp.p[t[i]]].column(*w) {
                    if let Some(&col) = index[n].get(&(rest.clone(), *v)) {
                        trip.push((row, col, c.mul_ref(&sign).neg_ref()));
                    }
                }
            }
            for i in 0..t.len() {
                for j in i + 1..t.len() {
                    let sign = F::from_i64(signs::parity_sign((i + j) as i64));
                    let rest: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                    for (c, coeff) in comp.projected_bracket(pair, t[i], t[j]).iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut seq = vec![c];
                        seq.extend_from_slice(&rest);
                        let s = signs::sort_sign(&mut seq);
                        if s == 0 {
                            continue;
                        }
                        if let Some(&col) = index[n].get(&(seq, *w)) {
                            trip.push((row, col, coeff.mul_ref(&sign).mul_ref(&F::from_i64(s))));
                        }
                    }
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(cochains[n + 1].len(), cochains[n].len(), trip));
    }
    let complex = Complex::new(0, cochains.iter().map(Vec::len).collect(), diffs)?;
    Ok(homology_dims(&complex))
}

/// Ext dimensions for `n = 0..=dim p` by all three routes; disagreement is
/// an error.
pub fn ext_checked<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>) -> Result<Vec<usize>> {
    let c = relative_standard_complex(e, m)?;
    let duality = c.homology_dims();
    let cochains = cochain_cohomology(&e.small, m)?;
    for n in 0..duality.len() {
        let maps = ext_via_chain_maps(e, m, n)?;
        if maps != duality[n] || cochains[n] != duality[n] {
            return Err(Error::OracleMismatch(format!(
                "Ext^{n}: duality {}, chain maps {maps}, cochains {}",
                duality[n], cochains[n]
            )));
        }
    }
    Ok(duality)
}

/// `Σ (−1)^n dim H_n(h, K; M)`.
pub fn euler_poincare<F: Field>(e: &SubpairEmbedding<F>, m: &FiniteModule<F>) -> Result<i64> {
    let dims = relative_standard_complex(e, m)?.homology_dims();
    Ok(dims.iter().enumerate().map(|(n, &k)| signs::parity_sign(n as i64) * k as i64).sum())
}
