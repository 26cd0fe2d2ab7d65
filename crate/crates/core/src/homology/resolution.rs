//! The standard resolution `U(g) ⊗ ∧•g → C`, truncated by level.
//!
//! A basis vector `u ⊗ ξ_λ` of the term `U(g) ⊗ ∧ⁿg` (cochain degree `−n`)
//! has level `deg u + n`. The truncation at cutoff `N` keeps levels `≤ N`.
//! The differential never raises the level, while the action, the
//! contractions and the defect raise it by at most one, so every identity
//! holds on columns of headroom `N − level` large enough.

use std::collections::HashMap;

use crate::complex::{homology_dims, Complex};
use crate::gk::FiniteModule;
use crate::hcomplex::HComplex;
use crate::homology::pbw::{monomials_of_degree, wedge_basis, Monomial, Pbw};
use crate::lie::{Character, Pair};
use crate::linalg::SparseMatrix;
use crate::scalar::Field;
use crate::signs;
use crate::Result;

pub type BasisVector = (Monomial, Vec<usize>);

pub struct StandardResolution<F> {
    pub cutoff: u32,
    pub h: HComplex<F>,
    /// `basis[k]` lists the basis of the term in degree `lo + k`.
    pub basis: Vec<Vec<BasisVector>>,
    /// `ε : U(g) → C`, defined on the degree-0 term.
    pub augmentation: SparseMatrix<F>,
}

struct Term {
    basis: Vec<BasisVector>,
    index: HashMap<BasisVector, usize>,
}

impl Term {
    fn new(dim_g: usize, n: usize, cutoff: usize) -> Self {
        let mut basis = Vec::new();
        if n <= cutoff {
            for deg in 0..=cutoff - n {
                for u in monomials_of_degree(dim_g, deg) {
                    for l in wedge_basis(dim_g, n) {
                        basis.push((u.clone(), l));
                    }
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        Self { basis, index }
    }
}

fn weight_of<F>(pair: &Pair<F>, b: &BasisVector) -> Character {
    b.0.iter()
        .chain(&b.1)
        .fold(pair.k.trivial_character(), |acc, &j| pair.k.add(&acc, &pair.grading[j]))
}

/// Inserts `c` in front of the sorted wedge `rest` and sorts, returning the
/// sign or `None` if `c` already occurs.
fn wedge_insert(c: usize, rest: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut seq = Vec::with_capacity(rest.len() + 1);
    seq.push(c);
    seq.extend_from_slice(rest);
    let s = signs::sort_sign(&mut seq);
    (s != 0).then_some((s, seq))
}

/// Builds the standard resolution of the trivial module truncated at
/// level `cutoff`. Wedge degrees above `dim g` are empty, so the complex
/// lives in degrees `−min(dim g, cutoff) ..= 0`.
pub fn standard_resolution<F: Field>(pair: &Pair<F>, cutoff: u32) -> Result<StandardResolution<F>> {
    let g = &pair.g;
    let dim = g.dim();
    let n_max = dim.min(cutoff as usize);
    let cut = cutoff as usize;
    // terms[n] is the wedge-degree-n term.
    let terms: Vec<Term> = (0..=n_max).map(|n| Term::new(dim, n, cut)).collect();
    let mut pbw = Pbw::new(g);

    // ∂ : ∧ⁿ → ∧ⁿ⁻¹.
    let mut boundaries = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (src, dst) = (&terms[n], &terms[n - 1]);
        let mut trip = Vec::new();
        for (col, (u, l)) in src.basis.iter().enumerate() {
            for (i, &li) in l.iter().enumerate() {
                let sign = F::from_i64(signs::resolution_first(i + 1));
                let mut rest = l.clone();
                rest.remove(i);
                for (v, c) in pbw.mul_right(u, li) {
                    let row = dst.index[&(v, rest.clone())];
                    trip.push((row, col, c.mul_ref(&sign)));
                }
            }
            for p in 0..l.len() {
                for q in p + 1..l.len() {
                    let sign = F::from_i64(signs::bracket_term(p + 1, q + 1));
                    let rest: Vec<usize> = l.iter().enumerate().filter(|&(k, _)| k != p && k != q).map(|(_, &x)| x).collect();
                    for (c, coeff) in g.bracket_basis(l[p], l[q]).iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        if let Some((s, wedge)) = wedge_insert(c, &rest) {
                            let row = dst.index[&(u.clone(), wedge)];
                            trip.push((row, col, coeff.mul_ref(&sign).mul_ref(&F::from_i64(s))));
                        }
                    }
                }
            }
        }
        boundaries.push(SparseMatrix::from_triplets(dst.basis.len(), src.basis.len(), trip));
    }

    // Cochain layout: index k ↔ degree −n_max + k ↔ wedge degree n_max − k.
    let lo = -(n_max as i64);
    let wedge_of = |k: usize| n_max - k;
    let dims: Vec<usize> = (0..=n_max).map(|k| terms[wedge_of(k)].basis.len()).collect();
    let d: Vec<SparseMatrix<F>> = (0..n_max).map(|k| boundaries[wedge_of(k) - 1].clone()).collect();
    let complex = Complex::new(lo, dims.clone(), d)?;

    let mut modules = Vec::with_capacity(n_max + 1);
    let mut headroom = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let t = &terms[wedge_of(k)];
        let weights = t.basis.iter().map(|b| weight_of(pair, b)).collect();
        let action = (0..dim)
            .map(|j| {
                let mut trip = Vec::new();
                for (col, (u, l)) in t.basis.iter().enumerate() {
                    for (v, c) in pbw.mul_left(j, u) {
                        if let Some(&row) = t.index.get(&(v, l.clone())) {
                            trip.push((row, col, c));
                        }
                    }
                }
                SparseMatrix::from_triplets(t.basis.len(), t.basis.len(), trip)
            })
            .collect();
        modules.push(FiniteModule::new(weights, action));
        headroom.push(t.basis.iter().map(|(u, l)| cutoff - (u.len() + l.len()) as u32).collect());
    }

    // i_ξ(u ⊗ λ) = −u ⊗ (ι(ξ) ∧ λ), from term k to term k − 1.
    let contraction_sign = F::from_i64(signs::RESOLUTION_CONTRACTION);
    let i = pair
        .iota
        .iter()
        .map(|iota| {
            (0..=n_max)
                .map(|k| {
                    let src = &terms[wedge_of(k)];
                    if k == 0 {
                        return SparseMatrix::zeros(0, src.basis.len());
                    }
                    let dst = &terms[wedge_of(k - 1)];
                    let mut trip = Vec::new();
                    for (col, (u, l)) in src.basis.iter().enumerate() {
                        for (j, c) in iota.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            if let Some((s, wedge)) = wedge_insert(j, l) {
                                if let Some(&row) = dst.index.get(&(u.clone(), wedge)) {
                                    trip.push((row, col, c.mul_ref(&contraction_sign).mul_ref(&F::from_i64(s))));
                                }
                            }
                        }
                    }
                    SparseMatrix::from_triplets(dst.basis.len(), src.basis.len(), trip)
                })
                .collect()
        })
        .collect();

    let top = &terms[0];
    let augmentation = SparseMatrix::from_triplets(
        1,
        top.basis.len(),
        top.basis.iter().enumerate().filter(|(_, (u, _))| u.is_empty()).map(|(c, _)| (0, c, F::one())),
    );
    let basis = (0..=n_max).map(|k| terms[wedge_of(k)].basis.clone()).collect();
    let h = HComplex::new(complex, modules, i, headroom)?;
    Ok(StandardResolution {
        cutoff,
        h,
        basis,
        augmentation,
    })
}

impl<F: Field> StandardResolution<F> {
    /// The resolution followed by `ε` into `C` in degree 1.
    pub fn augmented(&self) -> Complex<F> {
        let c = &self.h.complex;
        let mut dims = c.dims.clone();
        dims.push(1);
        let mut d = c.d.clone();
        d.push(self.augmentation.clone());
        Complex::new(c.lo, dims, d).expect("augmentation has the right shape")
    }

    /// First degree where the augmented complex has homology.
    pub fn check_exact(&self) -> std::result::Result<(), i64> {
        let aug = self.augmented();
        match homology_dims(&aug).iter().position(|&k| k != 0) {
            Some(k) => Err(aug.lo + k as i64),
            None => Ok(()),
        }
    }

    pub fn basis_index(&self, degree: i64, b: &BasisVector) -> Option<usize> {
        let k = usize::try_from(degree - self.h.lo()).ok()?;
        self.basis.get(k)?.iter().position(|x| x == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcomplex::check_h_axioms;
    use crate::lie::{DiagGroup, LieAlgebra};
    use crate::Qi;

    fn q(v: i64) -> Qi {
        Qi::from_i64(v)
    }

    #[test]
    fn abelian_line_is_koszul() {
        let g = LieAlgebra::<Qi>::abelian(vec!["x".into()]);
        let pair = Pair::with_trivial_group(g);
        let r = standard_resolution(&pair, 2).unwrap();
        assert_eq!(r.h.complex.dims, vec![2, 3]);
        assert_eq!(r.check_exact(), Ok(()));
        // ∂(1 ⊗ x) = x ⊗ 1
        let src = r.basis_index(-1, &(vec![], vec![0])).unwrap();
        let dst = r.basis_index(0, &(vec![0], vec![])).unwrap();
        assert_eq!(r.h.complex.differential(-1).get(dst, src), q(1));
    }

    #[test]
    fn split_sl2_resolution() {
        let g = LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            [(1, 0, 0, q(2)), (1, 2, 2, q(-2)), (0, 2, 1, q(1))],
        )
        .unwrap();
        let k = DiagGroup::torus(1);
        let grading = [2, 0, -2].iter().map(|&w| k.character(vec![w], vec![]).unwrap()).collect();
        let pair = Pair::new(g, k, grading, vec![vec![q(0), q(1), q(0)]]);
        for cutoff in [3, 4] {
            let r = standard_resolution(&pair, cutoff).unwrap();
            assert_eq!(r.check_exact(), Ok(()));
            let v = check_h_axioms(&r.h, &pair);
            assert!(v.is_empty(), "cutoff {cutoff}: {:?}", v.first().map(ToString::to_string));
        }
        let r = standard_resolution(&pair, 4).unwrap();
        assert_eq!(r.h.complex.dims, vec![4, 30, 60, 35]);
    }
}
