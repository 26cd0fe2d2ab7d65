//! Lie algebras by structure constants, diagonalizable groups, and
//! Harish-Chandra pairs `(g, K)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix, Vector};
use crate::scalar::Field;

/// Finite-dimensional Lie algebra with basis `x_0, …, x_{d-1}` and
/// `[x_j, x_k] = Σ_l c[j][k][l] x_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F> {
    labels: Vec<String>,
    consts: Vec<Vec<Vec<F>>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds from brackets `[x_j, x_k] = Σ c x_l` given as `(j, k, l, c)`
    /// with `j != k`; the opposite bracket is filled in by antisymmetry.
    pub fn new(labels: Vec<String>, brackets: impl IntoIterator<Item = (usize, usize, usize, F)>) -> Result<Self> {
        let d = labels.len();
        let mut consts = vec![vec![vec![F::zero(); d]; d]; d];
        let mut set = vec![vec![vec![false; d]; d]; d];
        for (j, k, l, c) in brackets {
            if j >= d || k >= d || l >= d {
                return Err(Error::Invalid(format!("structure constant index ({j},{k},{l}) out of range")));
            }
            if j == k {
                if !c.is_zero() {
                    return Err(Error::Invalid(format!("[x_{j}, x_{j}] must vanish")));
                }
                continue;
            }
            let neg = c.neg_ref();
            for (a, b, v) in [(j, k, c), (k, j, neg)] {
                if set[a][b][l] && consts[a][b][l] != v {
                    return Err(Error::Invalid(format!("conflicting structure constants for [x_{a}, x_{b}] at x_{l}")));
                }
                set[a][b][l] = true;
                consts[a][b][l] = v;
            }
        }
        Ok(Self { labels, consts })
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        Self::new(labels, []).expect("abelian algebra is always valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, j: usize) -> &str {
        &self.labels[j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, j: usize, k: usize, l: usize) -> &F {
        &self.consts[j][k][l]
    }

    /// Nonzero structure constants with `j < k`.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, F)> {
        let d = self.dim();
        let mut out = Vec::new();
        for j in 0..d {
            for k in j + 1..d {
                for l in 0..d {
                    let c = &self.consts[j][k][l];
                    if !c.is_zero() {
                        out.push((j, k, l, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// `[x_j, x_k]` as a coordinate vector.
    pub fn bracket_basis(&self, j: usize, k: usize) -> Vector<F> {
        self.consts[j][k].clone()
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vector<F> {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let mut out = vec![F::zero(); self.dim()];
        for (j, xj) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xj.mul_ref(yk);
                for (l, c) in self.consts[j][k].iter().enumerate() {
                    if !c.is_zero() {
                        out[l].add_assign_ref(&c.mul_ref(&s));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, j: usize) -> Vector<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[j] = F::one();
        v
    }

    /// Matrix of `ad(x)` in the basis.
    pub fn ad(&self, x: &[F]) -> SparseMatrix<F> {
        let cols: Vec<Vector<F>> = (0..self.dim()).map(|k| self.bracket(x, &self.basis_vector(k))).collect();
        SparseMatrix::from_columns(self.dim(), &cols)
    }

    /// Basis triples `(j, k, l)`, `j < k < l`, violating the Jacobi identity.
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for j in 0..d {
            for k in j + 1..d {
                for l in k + 1..d {
                    let (x, y, z) = (self.basis_vector(j), self.basis_vector(k), self.basis_vector(l));
                    let t1 = self.bracket(&x, &self.bracket(&y, &z));
                    let t2 = self.bracket(&y, &self.bracket(&z, &x));
                    let t3 = self.bracket(&z, &self.bracket(&x, &y));
                    if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !a.add_ref(b).add_ref(c).is_zero()) {
                        bad.push((j, k, l));
                    }
                }
            }
        }
        bad
    }

    /// Killing form `B(x_j, x_k) = tr(ad x_j ad x_k)`.
    pub fn killing_form(&self) -> Vec<Vec<F>> {
        let ads: Vec<SparseMatrix<F>> = (0..self.dim()).map(|j| self.ad(&self.basis_vector(j))).collect();
        (0..self.dim())
            .map(|j| {
                (0..self.dim())
                    .map(|k| {
                        let p = ads[j].mul(&ads[k]);
                        (0..self.dim()).fold(F::zero(), |acc, i| acc.add_ref(&p.get(i, i)))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Product of a torus of rank `torus_rank` with cyclic groups of the given
/// orders. Orders are restricted to divisors of 4, so that character values
/// stay in `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagGroup {
    torus_rank: usize,
    finite_orders: Vec<u32>,
}

impl DiagGroup {
    pub fn new(torus_rank: usize, finite_orders: Vec<u32>) -> Result<Self> {
        if let Some(n) = finite_orders.iter().find(|&&n| !matches!(n, 1 | 2 | 4)) {
            return Err(Error::Invalid(format!("cyclic factor of order {n}: only orders dividing 4 are supported")));
        }
        Ok(Self {
            torus_rank,
            finite_orders,
        })
    }

    pub fn trivial() -> Self {
        Self::new(0, vec![]).unwrap()
    }

    pub fn torus(rank: usize) -> Self {
        Self::new(rank, vec![]).unwrap()
    }

    pub fn cyclic(order: u32) -> Result<Self> {
        Self::new(0, vec![order])
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn finite_orders(&self) -> &[u32] {
        &self.finite_orders
    }

    /// Dimension of the Lie algebra of the group.
    pub fn lie_dim(&self) -> usize {
        self.torus_rank
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            torus: vec![0; self.torus_rank],
            finite: vec![0; self.finite_orders.len()],
        }
    }

    /// Builds a character, reducing the finite components.
    pub fn character(&self, torus: Vec<i64>, finite: Vec<i64>) -> Result<Character> {
        if torus.len() != self.torus_rank || finite.len() != self.finite_orders.len() {
            return Err(Error::Grading(format!(
                "character ({torus:?}; {finite:?}) does not match group of torus rank {} and finite orders {:?}",
                self.torus_rank, self.finite_orders
            )));
        }
        let finite = finite
            .iter()
            .zip(&self.finite_orders)
            .map(|(&a, &n)| a.rem_euclid(i64::from(n)))
            .collect();
        Ok(Character { torus, finite })
    }

    /// Splits a flat integer tuple (torus entries first) into a character.
    pub fn character_from_flat(&self, flat: &[i64]) -> Result<Character> {
        if flat.len() != self.torus_rank + self.finite_orders.len() {
            return Err(Error::Grading(format!("weight tuple {flat:?} has the wrong length")));
        }
        self.character(flat[..self.torus_rank].to_vec(), flat[self.torus_rank..].to_vec())
    }

    pub fn owns(&self, chi: &Character) -> bool {
        chi.torus.len() == self.torus_rank
            && chi.finite.len() == self.finite_orders.len()
            && chi.finite.iter().zip(&self.finite_orders).all(|(&a, &n)| (0..i64::from(n)).contains(&a))
    }

    pub fn add(&self, a: &Character, b: &Character) -> Character {
        let torus = a.torus.iter().zip(&b.torus).map(|(x, y)| x + y).collect();
        let finite = a
            .finite
            .iter()
            .zip(&b.finite)
            .zip(&self.finite_orders)
            .map(|((x, y), &n)| (x + y).rem_euclid(i64::from(n)))
            .collect();
        Character { torus, finite }
    }

    pub fn neg(&self, a: &Character) -> Character {
        let torus = a.torus.iter().map(|x| -x).collect();
        let finite = a
            .finite
            .iter()
            .zip(&self.finite_orders)
            .map(|(x, &n)| (-x).rem_euclid(i64::from(n)))
            .collect();
        Character { torus, finite }
    }
}

/// A character of a diagonalizable group: torus exponents and residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub torus: Vec<i64>,
    pub finite: Vec<i64>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.torus.iter().chain(&self.finite).all(|&x| x == 0)
    }

    /// `⟨ξ_t, χ⟩` for the `t`-th torus generator.
    pub fn pairing(&self, t: usize) -> i64 {
        self.torus[t]
    }

    pub fn flat(&self) -> Vec<i64> {
        self.torus.iter().chain(&self.finite).copied().collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.flat())
    }
}

/// One failed condition, named for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

pub type Report = std::result::Result<(), Violation>;

fn violation(condition: &str, detail: impl Into<String>) -> Report {
    Err(Violation {
        condition: condition.to_string(),
        detail: detail.into(),
    })
}

pub const AD_CONDITION: &str = "(dAd)(ξ) ≠ ad(ι(ξ))";

/// A Harish-Chandra pair `(g, K)` with `K` diagonalizable: the adjoint action
/// is a grading of the basis of `g` by characters, and `iota` sends the
/// `t`-th torus generator to `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pair<F> {
    pub g: LieAlgebra<F>,
    pub k: DiagGroup,
    pub grading: Vec<Character>,
    /// One column per torus generator, each of length `dim g`.
    pub iota: Vec<Vector<F>>,
}

impl<F: Field> Pair<F> {
    pub fn new(g: LieAlgebra<F>, k: DiagGroup, grading: Vec<Character>, iota: Vec<Vector<F>>) -> Self {
        Self { g, k, grading, iota }
    }

    /// `g` with the trivial group.
    pub fn with_trivial_group(g: LieAlgebra<F>) -> Self {
        let k = DiagGroup::trivial();
        let grading = vec![k.trivial_character(); g.dim()];
        Self::new(g, k, grading, vec![])
    }

    pub fn torus_rank(&self) -> usize {
        self.k.torus_rank()
    }

    pub fn validate(&self) -> Report {
        let d = self.g.dim();
        if let Some(t) = self.g.check_jacobi().first() {
            return violation("Jacobi identity", format!("fails on basis triple {t:?}"));
        }
        if self.grading.len() != d {
            return violation("grading", format!("{} weights for a {d}-dimensional algebra", self.grading.len()));
        }
        if let Some(j) = self.grading.iter().position(|chi| !self.k.owns(chi)) {
            return violation("grading", format!("weight of {} is not a character of K", self.g.label(j)));
        }
        if self.iota.len() != self.k.torus_rank() || self.iota.iter().any(|c| c.len() != d) {
            return violation("ι shape", "ι needs one column of length dim g per torus generator");
        }
        if !self.iota.is_empty() && rank(&SparseMatrix::from_columns(d, &self.iota)) != self.iota.len() {
            return violation("ι injective", "ι has a nontrivial kernel");
        }
        for (t, col) in self.iota.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                if !v.is_zero() && !self.grading[j].is_trivial() {
                    return violation(
                        "ι lands in weight zero",
                        format!("ι(ξ_{t}) has a component along {} of weight {}", self.g.label(j), self.grading[j]),
                    );
                }
            }
        }
        for (t, col) in self.iota.iter().enumerate() {
            for j in 0..d {
                let lhs = self.g.bracket(col, &self.g.basis_vector(j));
                let w = F::from_i64(self.grading[j].pairing(t));
                let rhs: Vector<F> = self.g.basis_vector(j).iter().map(|x| x.mul_ref(&w)).collect();
                if lhs != rhs {
                    return violation(AD_CONDITION, format!("on {} for torus generator ξ_{t}", self.g.label(j)));
                }
            }
        }
        Ok(())
    }
}

/// Homomorphism of character groups `X(K) → X(K^H)` dual to `K^H ↪ K`.
///
/// The torus part of the restricted character is `torus · z`; each finite
/// component is `from_torus_j · z + from_finite_j · a` reduced mod its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRestriction {
    pub torus: Vec<Vec<i64>>,
    pub from_torus: Vec<Vec<i64>>,
    pub from_finite: Vec<Vec<i64>>,
}

impl CharacterRestriction {
    pub fn apply(&self, small: &DiagGroup, chi: &Character) -> Character {
        let dot = |row: &[i64], v: &[i64]| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
        let torus = self.torus.iter().map(|row| dot(row, &chi.torus)).collect();
        let finite = self
            .from_torus
            .iter()
            .zip(&self.from_finite)
            .zip(small.finite_orders())
            .map(|((rt, rf), &n)| (dot(rt, &chi.torus) + dot(rf, &chi.finite)).rem_euclid(i64::from(n)))
            .collect();
        Character { torus, finite }
    }

    /// Restriction from a group to itself.
    pub fn identity(k: &DiagGroup) -> Self {
        let unit = |n: usize| (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Self {
            torus: unit(k.torus_rank()),
            from_torus: vec![vec![0; k.torus_rank()]; k.finite_orders().len()],
            from_finite: unit(k.finite_orders().len()),
        }
    }
}

/// Subpair `(h, K^H) ⊂ (g, K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubpairEmbedding<F> {
    pub small: Pair<F>,
    pub big: Pair<F>,
    /// Column `a` is the image of the `a`-th basis vector of `h` in `g`.
    pub alg_embed: Vec<Vector<F>>,
    pub grp_embed: CharacterRestriction,
}

impl<F: Field> SubpairEmbedding<F> {
    pub fn identity(pair: Pair<F>) -> Self {
        let alg_embed = (0..pair.g.dim()).map(|a| pair.g.basis_vector(a)).collect();
        let grp_embed = CharacterRestriction::identity(&pair.k);
        Self {
            small: pair.clone(),
            big: pair,
            alg_embed,
            grp_embed,
        }
    }

    pub fn restrict_character(&self, chi: &Character) -> Character {
        self.grp_embed.apply(&self.small.k, chi)
    }

    pub fn validate(&self) -> Report {
        let (h, g) = (&self.small.g, &self.big.g);
        let (kh, k) = (&self.small.k, &self.big.k);
        if self.alg_embed.len() != h.dim() || self.alg_embed.iter().any(|c| c.len() != g.dim()) {
            return violation("embedding shape", "alg_embed needs dim h columns of length dim g");
        }
        let r = &self.grp_embed;
        let shape_ok = r.torus.len() == kh.torus_rank()
            && r.torus.iter().all(|row| row.len() == k.torus_rank())
            && r.from_torus.len() == kh.finite_orders().len()
            && r.from_torus.iter().all(|row| row.len() == k.torus_rank())
            && r.from_finite.len() == kh.finite_orders().len()
            && r.from_finite.iter().all(|row| row.len() == k.finite_orders().len());
        if !shape_ok {
            return violation("character restriction shape", "grp_embed does not match the two groups");
        }
        // Well defined on X(K): n_i · e_i must restrict to zero.
        for (j, row) in r.from_finite.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                if (c * i64::from(k.finite_orders()[i])) % i64::from(kh.finite_orders()[j]) != 0 {
                    return violation("character restriction", format!("finite factor {i} of K does not map into factor {j} of K^H"));
                }
            }
        }
        if !self.alg_embed.is_empty() && rank(&SparseMatrix::from_columns(g.dim(), &self.alg_embed)) != h.dim() {
            return violation("embedding injective", "alg_embed has a nontrivial kernel");
        }
        for a in 0..h.dim() {
            for b in a + 1..h.dim() {
                let hb = h.bracket_basis(a, b);
                let mut lhs = vec![F::zero(); g.dim()];
                for (c, coeff) in hb.iter().enumerate() {
                    for (l, x) in self.alg_embed[c].iter().enumerate() {
                        lhs[l].add_assign_ref(&x.mul_ref(coeff));
                    }
                }
                let rhs = g.bracket(&self.alg_embed[a], &self.alg_embed[b]);
                if lhs != rhs {
                    return violation("bracket preserved", format!("on [{}, {}]", h.label(a), h.label(b)));
                }
            }
        }
        for (a, col) in self.alg_embed.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let restricted = self.restrict_character(&self.big.grading[j]);
                if restricted != self.small.grading[a] {
                    return violation(
                        "gradings compatible",
                        format!(
                            "{} has K-weight {} restricting to {}, but {} has K^H-weight {}",
                            g.label(j),
                            self.big.grading[j],
                            restricted,
                            h.label(a),
                            self.small.grading[a]
                        ),
                    );
                }
            }
        }
        // ι_g ∘ Lie(K^H → K) = embed ∘ ι_h; the Lie map is the transpose of the torus block.
        for (s, small_col) in self.small.iota.iter().enumerate() {
            let mut lhs = vec![F::zero(); g.dim()];
            for (t, big_col) in self.big.iota.iter().enumerate() {
                let c = F::from_i64(r.torus[s][t]);
                for (l, x) in big_col.iter().enumerate() {
                    lhs[l].add_assign_ref(&x.mul_ref(&c));
                }
            }
            let mut rhs = vec![F::zero(); g.dim()];
            for (a, coeff) in small_col.iter().enumerate() {
                for (l, x) in self.alg_embed[a].iter().enumerate() {
                    rhs[l].add_assign_ref(&x.mul_ref(coeff));
                }
            }
            if lhs != rhs {
                return violation("ι compatible", format!("on torus generator ξ_{s} of K^H"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;
    use num_traits::Zero;

    fn sl2() -> LieAlgebra<Qi> {
        let q = Qi::from_i64;
        LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            [(1, 0, 0, q(2)), (1, 2, 2, q(-2)), (0, 2, 1, q(1))],
        )
        .unwrap()
    }

    #[test]
    fn abelian_and_sl2_satisfy_jacobi() {
        assert!(LieAlgebra::<Qi>::abelian(vec!["a".into(), "b".into()]).check_jacobi().is_empty());
        assert!(sl2().check_jacobi().is_empty());
    }

    #[test]
    fn tampered_sl2_violates_jacobi() {
        let q = Qi::from_i64;
        let bad = LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            [(1, 0, 0, q(2)), (1, 2, 2, q(-2)), (0, 2, 0, q(1))],
        )
        .unwrap();
        // Hand expansion: [h,[e,f]] + [e,[f,h]] + [f,[h,e]] = 2e + 2e - 2e = 2e.
        let v = bad.check_jacobi();
        assert_eq!(v.len(), 1);
        let (a, b, c) = v[0];
        let mut names = vec![bad.label(a), bad.label(b), bad.label(c)];
        names.sort();
        assert_eq!(names, vec!["e", "f", "h"]);
    }

    #[test]
    fn bracket_examples() {
        let g = sl2();
        let (e, h, f) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        let two_e: Vec<Qi> = e.iter().map(|x| x.mul_ref(&Qi::from_i64(2))).collect();
        assert_eq!(g.bracket(&h, &e), two_e);
        assert_eq!(g.bracket(&e, &f), h);
        let x = vec![Qi::from_i64(1), Qi::from_ratio(1, 3), Qi::from_i64(-2)];
        assert!(g.bracket(&x, &x).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn conflicting_constants_rejected() {
        let q = Qi::from_i64;
        let r = LieAlgebra::new(vec!["a".into(), "b".into()], [(0, 1, 0, q(1)), (1, 0, 0, q(1))]);
        assert!(r.is_err());
    }

    #[test]
    fn group_orders_restricted() {
        assert!(DiagGroup::cyclic(4).is_ok());
        assert!(DiagGroup::cyclic(3).is_err());
        let k = DiagGroup::new(1, vec![4]).unwrap();
        let a = k.character(vec![2], vec![3]).unwrap();
        let b = k.character(vec![-2], vec![3]).unwrap();
        assert_eq!(k.add(&a, &b), k.character(vec![0], vec![2]).unwrap());
        assert_eq!(k.add(&a, &k.neg(&a)), k.trivial_character());
    }
}
