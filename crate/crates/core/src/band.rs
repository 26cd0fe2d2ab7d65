//! Band modules: one line per `K`-type `n ≡ parity (mod 2)`, with operators
//! shifting `n` by finitely many offsets and coefficients polynomial in
//! `(n, params…)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gk::sl2_inverse_killing;
use crate::lie::{Character, DiagGroup, LieAlgebra, SubpairEmbedding};
use crate::linalg::SparseMatrix;
use crate::poly::Poly;
use crate::scalar::Field;
use crate::Q;

/// `f_n ↦ Σ_s c_s(n, params) f_{n+s}`. Polynomials have variable 0 = `n`
/// and variables `1..` = the module parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct BandOp<F> {
    nvars: usize,
    terms: BTreeMap<i64, Poly<F>>,
}

impl<F: Field> BandOp<F> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (i64, Poly<F>)>) -> Self {
        let mut op = Self::zero(nvars);
        for (s, p) in terms {
            op.add_term(s, p);
        }
        op
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, shift: i64, p: Poly<F>) {
        assert_eq!(p.nvars(), self.nvars);
        let sum = match self.terms.remove(&shift) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(shift, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly<F>)> {
        self.terms.iter().map(|(s, p)| (*s, p))
    }

    pub fn coefficient(&self, shift: i64) -> Option<&Poly<F>> {
        self.terms.get(&shift)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_shift(&self) -> i64 {
        self.terms.keys().map(|s| s.abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, p) in &other.terms {
            out.add_term(*s, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg_ref()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(s, p)| (*s, p.scale(c))))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (t, b) in &other.terms {
            for (s, a) in &self.terms {
                out.add_term(s + t, b.mul(&a.shift_var(0, &F::from_i64(*t))));
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Substitutes numeric values for the parameters, leaving `n` free.
    pub fn specialize(&self, params: &[F]) -> Self {
        assert_eq!(params.len() + 1, self.nvars);
        let terms = self.terms.iter().map(|(s, p)| {
            let mut q = p.clone();
            for (k, v) in params.iter().enumerate() {
                q = q.substitute(k + 1, v);
            }
            (*s, q)
        });
        Self::from_terms(self.nvars, terms)
    }

    /// Coefficient of `f_{n+s}` in `op f_n`, parameters substituted.
    pub fn eval(&self, shift: i64, n: i64, params: &[F]) -> F {
        self.terms.get(&shift).map_or_else(F::zero, |p| {
            let mut vals = vec![F::from_i64(n)];
            vals.extend(params.iter().cloned());
            p.eval(&vals)
        })
    }
}

/// Weight of the `K`-type `n` as an affine function of `n`:
/// torus component `t` is `a·n + b`, finite component `j` is `(a·n + b) mod n_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeWeight {
    pub torus: Vec<(i64, i64)>,
    pub finite: Vec<(i64, i64)>,
}

impl TypeWeight {
    pub fn character(&self, k: &DiagGroup, n: i64) -> Character {
        let torus = self.torus.iter().map(|(a, b)| a * n + b).collect();
        let finite = self
            .finite
            .iter()
            .zip(k.finite_orders())
            .map(|((a, b), &o)| (a * n + b).rem_euclid(i64::from(o)))
            .collect();
        Character { torus, finite }
    }
}

/// Infinite-dimensional weight module with multiplicity-one `K`-types.
#[derive(Clone, Debug, PartialEq)]
pub struct BandModule<F> {
    pub parity: u8,
    pub param_names: Vec<String>,
    pub params: Vec<Q>,
    pub ops: Vec<BandOp<F>>,
    pub weight: TypeWeight,
}

/// Finite slice of a band module: types in a window and, per operator, the
/// matrix from the window into the enlarged window.
#[derive(Clone, Debug, PartialEq)]
pub struct BandSlice<F> {
    pub types: Vec<i64>,
    pub weights: Vec<Character>,
    pub target_types: Vec<i64>,
    pub ops: Vec<SparseMatrix<F>>,
}

/// Types `n ≡ parity (mod 2)` in `[lo, hi]`.
pub fn parity_window(lo: i64, hi: i64, parity: u8) -> Result<Vec<i64>> {
    let types: Vec<i64> = (lo..=hi).filter(|n| n.rem_euclid(2) == i64::from(parity)).collect();
    if types.is_empty() {
        return Err(Error::EmptyWindow { lo, hi, parity });
    }
    Ok(types)
}

impl<F: Field> BandModule<F> {
    pub fn param_values(&self) -> Vec<F> {
        self.params.iter().map(F::from_rational).collect()
    }

    pub fn nvars(&self) -> usize {
        1 + self.params.len()
    }

    pub fn max_shift(&self) -> i64 {
        self.ops.iter().map(BandOp::max_shift).max().unwrap_or(0)
    }

    pub fn contains_type(&self, n: i64) -> bool {
        n.rem_euclid(2) == i64::from(self.parity)
    }

    /// Operators with parameters substituted.
    pub fn specialized_ops(&self) -> Vec<BandOp<F>> {
        let p = self.param_values();
        self.ops.iter().map(|op| op.specialize(&p)).collect()
    }

    /// `Σ x_j op_j`.
    pub fn act(&self, x: &[F]) -> BandOp<F> {
        let mut out = BandOp::zero(self.nvars());
        for (c, op) in x.iter().zip(&self.ops) {
            if !c.is_zero() {
                out = out.add(&op.scale(c));
            }
        }
        out
    }

    /// Checks that every operator shift preserves parity and that the
    /// bracket relations hold as polynomial identities in `(n, params)`.
    /// Returns the first failing pair of basis labels.
    pub fn check_brackets(&self, g: &LieAlgebra<F>) -> std::result::Result<(), (String, String)> {
        for (j, op) in self.ops.iter().enumerate() {
            if op.terms().any(|(s, _)| s.rem_euclid(2) != 0) {
                return Err((g.label(j).to_string(), "parity".to_string()));
            }
        }
        for j in 0..g.dim() {
            for k in j + 1..g.dim() {
                let lhs = self.act(&g.bracket_basis(j, k));
                let rhs = self.ops[j].commutator(&self.ops[k]);
                if !lhs.sub(&rhs).is_zero() {
                    return Err((g.label(j).to_string(), g.label(k).to_string()));
                }
            }
        }
        Ok(())
    }

    /// Checks operator shifts against the `K`-grading: each shift must move
    /// the type weight by the weight of its generator.
    pub fn check_equivariance(&self, k: &DiagGroup, grading: &[Character], samples: &[i64]) -> bool {
        self.ops.iter().zip(grading).all(|(op, wt)| {
            op.terms().all(|(s, _)| {
                samples
                    .iter()
                    .filter(|&&n| self.contains_type(n))
                    .all(|&n| self.weight.character(k, n + s) == k.add(&self.weight.character(k, n), wt))
            })
        })
    }

    /// Casimir `4 Σ κ^{ab} X_a X_b` as a band operator.
    pub fn casimir(&self, g: &LieAlgebra<F>) -> Result<BandOp<F>> {
        let inv = sl2_inverse_killing(g)?;
        let mut out = BandOp::zero(self.nvars());
        let four = F::from_i64(4);
        for (a, row) in inv.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out = out.add(&self.ops[a].compose(&self.ops[b]).scale(&c.mul_ref(&four)));
                }
            }
        }
        Ok(out)
    }

    /// Casimir eigenvalue as a polynomial in the parameters (variable 0,
    /// `n`, absent), after certifying that the Casimir is diagonal and does
    /// not depend on the type.
    pub fn casimir_scalar(&self, g: &LieAlgebra<F>) -> Result<Poly<F>> {
        let omega = self.casimir(g)?;
        if omega.terms().any(|(s, _)| s != 0) {
            return Err(Error::Invalid("Casimir shifts K-types".into()));
        }
        let c = omega.coefficient(0).cloned().unwrap_or_else(|| Poly::zero(self.nvars()));
        if c.depends_on(0) {
            return Err(Error::Invalid("Casimir eigenvalue varies with the K-type".into()));
        }
        Ok(c)
    }

    /// Restriction along a subpair embedding (the `K`-types stay the same
    /// lines; operators and weights are pulled back).
    pub fn restrict(&self, emb: &SubpairEmbedding<F>) -> Self {
        let r = &emb.grp_embed;
        let affine = |rows: &[Vec<i64>], parts: &[(i64, i64)]| -> Vec<(i64, i64)> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .zip(parts)
                        .fold((0, 0), |(a, b), (c, (x, y))| (a + c * x, b + c * y))
                })
                .collect()
        };
        let from_t = affine(&r.torus, &self.weight.torus);
        let ft = affine(&r.from_torus, &self.weight.torus);
        let ff = affine(&r.from_finite, &self.weight.finite);
        let finite = ft.iter().zip(&ff).map(|(a, b)| (a.0 + b.0, a.1 + b.1)).collect();
        Self {
            parity: self.parity,
            param_names: self.param_names.clone(),
            params: self.params.clone(),
            ops: emb.alg_embed.iter().map(|col| self.act(col)).collect(),
            weight: TypeWeight { torus: from_t, finite },
        }
    }

    /// Slice onto the types in `[lo, hi]`; each operator matrix maps into
    /// the window enlarged by the maximal shift, so nothing is dropped.
    pub fn truncate(&self, k: &DiagGroup, lo: i64, hi: i64) -> Result<BandSlice<F>> {
        let types = parity_window(lo, hi, self.parity)?;
        let s = self.max_shift();
        let target_types = parity_window(lo - s, hi + s, self.parity)?;
        let pos: BTreeMap<i64, usize> = target_types.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let params = self.param_values();
        let ops = self
            .ops
            .iter()
            .map(|op| {
                let mut trip = Vec::new();
                for (c, &n) in types.iter().enumerate() {
                    for (shift, _) in op.terms() {
                        let v = op.eval(shift, n, &params);
                        if !v.is_zero() {
                            trip.push((pos[&(n + shift)], c, v));
                        }
                    }
                }
                SparseMatrix::from_triplets(target_types.len(), types.len(), trip)
            })
            .collect();
        Ok(BandSlice {
            weights: types.iter().map(|&n| self.weight.character(k, n)).collect(),
            types,
            target_types,
            ops,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    type P = Poly<Qi>;

    #[test]
    fn composition_of_shifts() {
        // A f_n = n f_{n+2}; A∘A f_n = n (n+2) f_{n+4}.
        let a = BandOp::from_terms(1, [(2, P::var(1, 0))]);
        let aa = a.compose(&a);
        let c = aa.coefficient(4).unwrap();
        assert_eq!(c.eval(&[Qi::from_i64(3)]), Qi::from_i64(15));
    }

    #[test]
    fn parity_window_rejects_empty() {
        assert_eq!(parity_window(-2, 2, 0).unwrap(), vec![-2, 0, 2]);
        assert!(matches!(parity_window(1, 1, 0), Err(Error::EmptyWindow { .. })));
    }
}
