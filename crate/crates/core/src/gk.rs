//! Finite-dimensional weak `(g, K)`-modules.

use crate::error::{Error, Result};
use crate::lie::{Character, DiagGroup, LieAlgebra, Pair, Report, SubpairEmbedding, Violation};
use crate::linalg::{kernel_basis, SparseMatrix};
use crate::scalar::Field;

/// A `K`-graded space with one matrix per basis element of `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteModule<F> {
    pub weights: Vec<Character>,
    pub action: Vec<SparseMatrix<F>>,
}

fn fail(condition: &str, detail: impl Into<String>) -> Report {
    Err(Violation {
        condition: condition.to_string(),
        detail: detail.into(),
    })
}

impl<F: Field> FiniteModule<F> {
    pub fn new(weights: Vec<Character>, action: Vec<SparseMatrix<F>>) -> Self {
        Self { weights, action }
    }

    /// The trivial one-dimensional module.
    pub fn trivial(pair: &Pair<F>) -> Self {
        Self::new(vec![pair.k.trivial_character()], vec![SparseMatrix::zeros(1, 1); pair.g.dim()])
    }

    /// The zero module.
    pub fn zero(pair: &Pair<F>) -> Self {
        Self::new(vec![], vec![SparseMatrix::zeros(0, 0); pair.g.dim()])
    }

    /// `g` acting on itself, graded by the adjoint weights.
    pub fn adjoint(pair: &Pair<F>) -> Self {
        let g = &pair.g;
        let action = (0..g.dim()).map(|j| g.ad(&g.basis_vector(j))).collect();
        Self::new(pair.grading.clone(), action)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `ρ(x)` for `x = Σ x_j e_j`.
    pub fn act(&self, x: &[F]) -> SparseMatrix<F> {
        let mut m = SparseMatrix::zeros(self.dim(), self.dim());
        for (xj, a) in x.iter().zip(&self.action) {
            if !xj.is_zero() {
                m = m.add(&a.scale(xj));
            }
        }
        m
    }

    /// `dρ(ξ_t)`: the derivative of the `K`-action along the `t`-th torus
    /// generator, diagonal in the weight basis.
    pub fn torus_derivative(&self, t: usize) -> SparseMatrix<F> {
        let diag: Vec<F> = self.weights.iter().map(|w| F::from_i64(w.pairing(t))).collect();
        SparseMatrix::diagonal(&diag)
    }

    /// Checks shapes, weights, the bracket relations and weight equivariance.
    pub fn validate(&self, pair: &Pair<F>) -> Report {
        let d = self.dim();
        if self.action.len() != pair.g.dim() {
            return fail("action shape", format!("{} matrices for a {}-dimensional algebra", self.action.len(), pair.g.dim()));
        }
        if let Some(j) = self.action.iter().position(|a| a.rows() != d || a.cols() != d) {
            return fail("action shape", format!("matrix of {} is not {d}x{d}", pair.g.label(j)));
        }
        if let Some(v) = self.weights.iter().position(|w| !pair.k.owns(w)) {
            return fail("weights", format!("basis vector {v} has weight outside the character group of K"));
        }
        check_equivariance(&pair.k, &pair.grading, &self.weights, &self.weights, &self.action, pair.g.labels())?;
        check_brackets(&pair.g, &self.action, None)
    }

    /// `w(ξ_t) = dρ(ξ_t) − ρ(ι(ξ_t))` for every torus generator.
    pub fn defect(&self, pair: &Pair<F>) -> Result<Vec<SparseMatrix<F>>> {
        if self.action.len() != pair.g.dim() || self.weights.iter().any(|w| !pair.k.owns(w)) {
            return Err(Error::Grading("module does not match the pair".into()));
        }
        Ok((0..pair.torus_rank())
            .map(|t| self.torus_derivative(t).sub(&self.act(&pair.iota[t])))
            .collect())
    }

    pub fn is_genuine(&self, pair: &Pair<F>) -> Result<bool> {
        Ok(self.defect(pair)?.iter().all(|w| w.is_zero()))
    }

    /// `ρ(x) ⊗ 1 + 1 ⊗ ρ(x)`, weights added; index `(a, b) ↦ a·dim N + b`.
    pub fn tensor(&self, other: &Self, k: &DiagGroup) -> Self {
        let weights = self
            .weights
            .iter()
            .flat_map(|a| other.weights.iter().map(move |b| k.add(a, b)))
            .collect();
        let (im, in_) = (SparseMatrix::identity(self.dim()), SparseMatrix::identity(other.dim()));
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kron(&in_).add(&im.kron(b)))
            .collect();
        Self::new(weights, action)
    }

    /// `ρ*(x) = −ρ(x)ᵀ`, weights negated.
    pub fn contragredient(&self, k: &DiagGroup) -> Self {
        Self::new(
            self.weights.iter().map(|w| k.neg(w)).collect(),
            self.action.iter().map(|a| a.transpose().neg()).collect(),
        )
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new(weights, action)
    }

    /// Restriction along a subpair embedding.
    pub fn restrict(&self, emb: &SubpairEmbedding<F>) -> Self {
        Self::new(
            self.weights.iter().map(|w| emb.restrict_character(w)).collect(),
            emb.alg_embed.iter().map(|col| self.act(col)).collect(),
        )
    }

    /// `Ω = 4 Σ κ^{ab} ρ(x_a) ρ(x_b)` with `κ` the inverse Killing form; for
    /// `sl2 = ⟨e, h, f⟩` this is `ef + fe + h²/2`.
    pub fn casimir(&self, g: &LieAlgebra<F>) -> Result<SparseMatrix<F>> {
        let inv = sl2_inverse_killing(g)?;
        let mut omega = SparseMatrix::zeros(self.dim(), self.dim());
        let four = F::from_i64(4);
        for (a, row) in inv.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    omega = omega.add(&self.action[a].mul(&self.action[b]).scale(&c.mul_ref(&four)));
                }
            }
        }
        Ok(omega)
    }
}

/// Inverse Killing form for a three-dimensional simple algebra; anything else
/// is rejected.
pub fn sl2_inverse_killing<F: Field>(g: &LieAlgebra<F>) -> Result<Vec<Vec<F>>> {
    if g.dim() != 3 {
        return Err(Error::Unsupported(format!("Casimir is only available for sl2, not a {}-dimensional algebra", g.dim())));
    }
    let b = SparseMatrix::from_dense(&g.killing_form());
    let id = SparseMatrix::identity(3);
    let cols: Option<Vec<Vec<F>>> = (0..3).map(|j| crate::linalg::solve(&b, &id.dense_column(j))).collect();
    let cols = cols.ok_or_else(|| Error::Unsupported("Killing form is degenerate: algebra is not sl2".into()))?;
    Ok((0..3).map(|i| (0..3).map(|j| cols[j][i].clone()).collect()).collect())
}

/// `ρ(x_j)` must send weight `μ` to weight `μ + wt(x_j)`: every stored entry
/// `(r, c)` of action `j` satisfies `wt_out[r] = wt_in[c] + grading[j]`.
pub(crate) fn check_equivariance<F: Field>(
    k: &DiagGroup,
    grading: &[Character],
    wt_in: &[Character],
    wt_out: &[Character],
    action: &[SparseMatrix<F>],
    labels: &[String],
) -> Report {
    for (j, a) in action.iter().enumerate() {
        for (r, c, _) in a.entries() {
            if wt_out[r] != k.add(&wt_in[c], &grading[j]) {
                return fail(
                    "K-equivariance",
                    format!("{} sends weight {} (vector {c}) to weight {} (vector {r})", labels[j], wt_in[c], wt_out[r]),
                );
            }
        }
    }
    Ok(())
}

/// `ρ([x_j, x_k]) = [ρ(x_j), ρ(x_k)]`, on the given columns only if set.
pub(crate) fn check_brackets<F: Field>(g: &LieAlgebra<F>, action: &[SparseMatrix<F>], columns: Option<&[usize]>) -> Report {
    let n = action.first().map_or(0, |a| a.cols());
    let all: Vec<usize>;
    let cols = match columns {
        Some(c) => c,
        None => {
            all = (0..n).collect();
            &all
        }
    };
    for j in 0..g.dim() {
        for k in j + 1..g.dim() {
            let lhs = {
                let mut m = SparseMatrix::zeros(n, n);
                for (l, c) in g.bracket_basis(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        m = m.add(&action[l].scale(c));
                    }
                }
                m.select_columns(cols)
            };
            let rhs = action[j]
                .mul(&action[k].select_columns(cols))
                .sub(&action[k].mul(&action[j].select_columns(cols)));
            if let Some(c) = lhs.columns_equal(&rhs, 0..cols.len()) {
                return fail(
                    "bracket relation",
                    format!("ρ([{}, {}]) ≠ [ρ({}), ρ({})] on basis vector {}", g.label(j), g.label(k), g.label(j), g.label(k), cols[c]),
                );
            }
        }
    }
    Ok(())
}

/// Casimir eigenvalues with eigenspace dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirReport<F> {
    pub eigenvalues: Vec<(F, usize)>,
}

/// Certifies local `Z(g)`-finiteness of a finite module over `sl2` by
/// decomposing it into Casimir eigenspaces. On a finite-dimensional `sl2`
/// module the Casimir eigenvalues are among `m(m+2)/2`, `0 ≤ m < dim`.
pub fn check_hc<F: Field>(module: &FiniteModule<F>, pair: &Pair<F>) -> Result<CasimirReport<F>> {
    let omega = module.casimir(&pair.g)?;
    let n = module.dim();
    let mut eigenvalues = Vec::new();
    let mut total = 0;
    for m in 0..n.max(1) as i64 {
        let c = F::from_ratio(m * (m + 2), 2);
        let mult = kernel_basis(&omega.sub(&SparseMatrix::scalar(n, c.clone()))).len();
        if mult > 0 {
            eigenvalues.push((c, mult));
            total += mult;
        }
    }
    if total != n {
        return Err(Error::Invalid(format!(
            "Casimir is not diagonalizable with sl2 eigenvalues: eigenspaces cover {total} of {n} dimensions"
        )));
    }
    Ok(CasimirReport { eigenvalues })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    fn sl2_pair() -> Pair<Qi> {
        let q = Qi::from_i64;
        let g = LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            [(1, 0, 0, q(2)), (1, 2, 2, q(-2)), (0, 2, 1, q(1))],
        )
        .unwrap();
        let k = DiagGroup::torus(1);
        let grading = [2, 0, -2].iter().map(|&w| k.character(vec![w], vec![]).unwrap()).collect();
        Pair::new(g, k, grading, vec![vec![q(0), q(1), q(0)]])
    }

    #[test]
    fn adjoint_is_genuine() {
        let p = sl2_pair();
        let ad = FiniteModule::adjoint(&p);
        assert!(ad.validate(&p).is_ok());
        assert!(ad.is_genuine(&p).unwrap());
        assert!(FiniteModule::trivial(&p).is_genuine(&p).unwrap());
    }

    #[test]
    fn shifted_weights_give_constant_defect() {
        let p = sl2_pair();
        let mut ad = FiniteModule::adjoint(&p);
        for w in &mut ad.weights {
            w.torus[0] += 2;
        }
        assert!(ad.validate(&p).is_ok());
        let w = ad.defect(&p).unwrap();
        assert_eq!(w[0], SparseMatrix::scalar(3, Qi::from_i64(2)));
    }

    #[test]
    fn adjoint_casimir() {
        let p = sl2_pair();
        let r = check_hc(&FiniteModule::adjoint(&p), &p).unwrap();
        assert_eq!(r.eigenvalues, vec![(Qi::from_i64(4), 3)]);
    }

    #[test]
    fn casimir_rejects_non_sl2() {
        let g = LieAlgebra::<Qi>::abelian(vec!["a".into()]);
        let p = Pair::with_trivial_group(g);
        assert!(matches!(check_hc(&FiniteModule::trivial(&p), &p), Err(Error::Unsupported(_))));
    }
}
