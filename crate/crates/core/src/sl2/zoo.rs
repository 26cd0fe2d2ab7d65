//! `sl2`, its pairs and subpairs, and the finite-dimensional irreducibles.
//!
//! The compact picture uses the basis `(E+, Hc, E−)` with
//! `Hc = −i(e − f)` and `E± = (h ± i(e + f))/2`; it has the same structure
//! constants as `(e, h, f)`, and `Hc` spans the Lie algebra of `SO(2)`.

use crate::error::{Error, Result};
use crate::gk::FiniteModule;
use crate::lie::{CharacterRestriction, DiagGroup, LieAlgebra, Pair, SubpairEmbedding};
use crate::linalg::{SparseMatrix, Vector};
use crate::scalar::ComplexField;

pub const SUBPAIR_NAMES: [&str; 3] = ["diagonal_torus", "torus_normalizer", "so2"];

fn sl2_with_labels<F: ComplexField>(labels: [&str; 3]) -> LieAlgebra<F> {
    let c = F::from_i64;
    LieAlgebra::new(
        labels.iter().map(|s| s.to_string()).collect(),
        [(1, 0, 0, c(2)), (1, 2, 2, c(-2)), (0, 2, 1, c(1))],
    )
    .expect("sl2 structure constants are consistent")
}

/// `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`, basis order `(e, h, f)`.
pub fn sl2<F: ComplexField>() -> LieAlgebra<F> {
    sl2_with_labels(["e", "h", "f"])
}

/// `sl2` in the basis `(E+, Hc, E−)`.
pub fn sl2_compact<F: ComplexField>() -> LieAlgebra<F> {
    sl2_with_labels(["E+", "Hc", "E-"])
}

fn rank_one_grading(k: &DiagGroup) -> Vec<crate::lie::Character> {
    [2, 0, -2].iter().map(|&w| k.character(vec![w], vec![]).unwrap()).collect()
}

/// `(sl2, SO(2))` in the compact basis, `ι = Hc`.
pub fn compact_pair<F: ComplexField>() -> Pair<F> {
    let k = DiagGroup::torus(1);
    let grading = rank_one_grading(&k);
    Pair::new(sl2_compact(), k, grading, vec![vec![F::zero(), F::one(), F::zero()]])
}

/// `(sl2, C^×)` with the split torus, `ι = h`.
pub fn split_torus_pair<F: ComplexField>() -> Pair<F> {
    let k = DiagGroup::torus(1);
    let grading = rank_one_grading(&k);
    Pair::new(sl2(), k, grading, vec![vec![F::zero(), F::one(), F::zero()]])
}

/// `(sl2, {1})`.
pub fn trivial_pair<F: ComplexField>() -> Pair<F> {
    Pair::with_trivial_group(sl2())
}

/// Coordinates of `e`, `h`, `f` in the compact basis (rows in that order).
pub fn standard_in_compact<F: ComplexField>() -> [Vector<F>; 3] {
    let i = F::i();
    let half_i = i.mul_ref(&F::from_ratio(1, 2));
    let (z, one) = (F::zero(), F::one());
    [
        vec![half_i.neg_ref(), half_i.clone(), half_i.clone()],
        vec![one.clone(), z, one],
        vec![half_i.neg_ref(), half_i.neg_ref(), half_i],
    ]
}

/// Coordinates of `E+`, `Hc`, `E−` in the standard basis.
pub fn compact_in_standard<F: ComplexField>() -> [Vector<F>; 3] {
    let i = F::i();
    let half_i = i.mul_ref(&F::from_ratio(1, 2));
    let half = F::from_ratio(1, 2);
    [
        vec![half_i.clone(), half.clone(), half_i.clone()],
        vec![i.neg_ref(), F::zero(), i],
        vec![half_i.neg_ref(), half, half_i.neg_ref()],
    ]
}

/// `θ = h = E+ + E−`, in the compact basis.
pub fn theta_compact<F: ComplexField>() -> Vector<F> {
    standard_in_compact::<F>()[1].clone()
}

fn line_pair<F: ComplexField>(label: &str, k: DiagGroup, weight: crate::lie::Character, iota: Vec<Vector<F>>) -> Pair<F> {
    Pair::new(LieAlgebra::abelian(vec![label.to_string()]), k, vec![weight], iota)
}

/// Named subpairs of the compact pair.
pub fn subpair<F: ComplexField>(name: &str) -> Result<SubpairEmbedding<F>> {
    let big = compact_pair::<F>();
    let e = match name {
        // K^H = {±1}; θ has weight 0; n ↦ n mod 2.
        "diagonal_torus" => {
            let k = DiagGroup::cyclic(2)?;
            let small = line_pair("theta", k.clone(), k.trivial_character(), vec![]);
            SubpairEmbedding {
                small,
                big,
                alg_embed: vec![theta_compact()],
                grp_embed: CharacterRestriction {
                    torus: vec![],
                    from_torus: vec![vec![1]],
                    from_finite: vec![vec![]],
                },
            }
        }
        // K^H = Z/4 generated by the quarter turn, which negates θ.
        "torus_normalizer" => {
            let k = DiagGroup::cyclic(4)?;
            let w = k.character(vec![], vec![2])?;
            let small = line_pair("theta", k, w, vec![]);
            SubpairEmbedding {
                small,
                big,
                alg_embed: vec![theta_compact()],
                grp_embed: CharacterRestriction {
                    torus: vec![],
                    from_torus: vec![vec![1]],
                    from_finite: vec![vec![]],
                },
            }
        }
        "so2" => {
            let k = DiagGroup::torus(1);
            let small = line_pair("Hc", k.clone(), k.trivial_character(), vec![vec![F::one()]]);
            SubpairEmbedding {
                small,
                big,
                alg_embed: vec![vec![F::zero(), F::one(), F::zero()]],
                grp_embed: CharacterRestriction::identity(&k),
            }
        }
        other => return Err(Error::Invalid(format!("unknown subpair {other:?}; expected one of {SUBPAIR_NAMES:?}"))),
    };
    Ok(e)
}

/// The `(m+1)`-dimensional irreducible with basis `v_0, …, v_m`:
/// `h v_k = (m − 2k) v_k`, `e v_k = (m − k + 1) v_{k−1}`, `f v_k = (k + 1) v_{k+1}`.
/// The three matrices act through the pair's first, second and third basis
/// vectors; on a rank-one torus `v_k` has weight `m − 2k`.
pub fn finite_irrep<F: ComplexField>(pair: &Pair<F>, m: u32) -> Result<FiniteModule<F>> {
    if pair.g.dim() != 3 {
        return Err(Error::Unsupported("finite_irrep needs a three-dimensional algebra".into()));
    }
    let m = m as usize;
    let dim = m + 1;
    let c = |x: usize| F::from_i64(x as i64);
    let e = SparseMatrix::from_triplets(dim, dim, (1..dim).map(|k| (k - 1, k, c(m - k + 1))));
    let h = SparseMatrix::diagonal(&(0..dim).map(|k| F::from_i64(m as i64 - 2 * k as i64)).collect::<Vec<_>>());
    let f = SparseMatrix::from_triplets(dim, dim, (0..m).map(|k| (k + 1, k, c(k + 1))));
    let weights = match pair.k.torus_rank() {
        0 if pair.k.finite_orders().is_empty() => vec![pair.k.trivial_character(); dim],
        1 if pair.k.finite_orders().is_empty() => (0..dim)
            .map(|k| pair.k.character(vec![m as i64 - 2 * k as i64], vec![]))
            .collect::<Result<_>>()?,
        _ => return Err(Error::Unsupported("finite_irrep needs K trivial or a rank-one torus".into())),
    };
    Ok(FiniteModule::new(weights, vec![e, h, f]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gk::check_hc;
    use crate::{Field, Qi};

    fn q(v: i64) -> Qi {
        Qi::from_i64(v)
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2::<Qi>();
        assert!(g.check_jacobi().is_empty());
        assert_eq!(g.bracket_basis(1, 0), vec![q(2), q(0), q(0)]);
        assert_eq!(g.bracket_basis(0, 2), vec![q(0), q(1), q(0)]);
        let ad_h = g.ad(&g.basis_vector(1));
        assert_eq!(ad_h, SparseMatrix::diagonal(&[q(2), q(0), q(-2)]));
    }

    #[test]
    fn compact_basis_change_is_an_isomorphism() {
        // Brackets of the images of E+, Hc, E− in (e, h, f) follow the same table.
        let g = sl2::<Qi>();
        let img = compact_in_standard::<Qi>();
        let comb = |v: &Vector<Qi>| {
            let mut out = vec![q(0); 3];
            for (c, col) in v.iter().zip(&img) {
                for (o, x) in out.iter_mut().zip(col) {
                    o.add_assign_ref(&c.mul_ref(x));
                }
            }
            out
        };
        let gc = sl2_compact::<Qi>();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(g.bracket(&img[a], &img[b]), comb(&gc.bracket_basis(a, b)));
            }
        }
        // The two coordinate changes are inverse.
        let back = standard_in_compact::<Qi>();
        for (j, v) in back.iter().enumerate() {
            assert_eq!(comb(v), g.basis_vector(j));
        }
    }

    #[test]
    fn pairs_and_subpairs_validate() {
        assert!(compact_pair::<Qi>().validate().is_ok());
        assert!(split_torus_pair::<Qi>().validate().is_ok());
        assert!(trivial_pair::<Qi>().validate().is_ok());
        for name in SUBPAIR_NAMES {
            let e = subpair::<Qi>(name).unwrap();
            assert!(e.validate().is_ok(), "{name}: {:?}", e.validate());
        }
        assert!(subpair::<Qi>("borel").is_err());
    }

    #[test]
    fn irreps() {
        let pair = compact_pair::<Qi>();
        let triv = finite_irrep(&pair, 0).unwrap();
        assert_eq!(triv, FiniteModule::trivial(&pair));
        let f1 = finite_irrep(&pair, 1).unwrap();
        assert_eq!(f1.action[1], SparseMatrix::diagonal(&[q(1), q(-1)]));
        for m in 0..5u32 {
            let v = finite_irrep(&pair, m).unwrap();
            assert!(v.validate(&pair).is_ok());
            let c = check_hc(&v, &pair).unwrap();
            let expected = Qi::from_ratio(i64::from(m * (m + 2)), 2);
            assert_eq!(c.eigenvalues, vec![(expected, m as usize + 1)]);
        }
    }
}
