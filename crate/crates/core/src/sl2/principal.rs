//! K-finite principal series `V_λ^ε` of `SL(2, R)`: functions on
//! `R² ∖ {0}` with `f(tx) = sgn(t)^ε |t|^λ f(x)` and right action
//! `(g·f)(x) = f(xg)`. The K-types are `f_n = r^λ e^{inφ}`, `n ≡ ε (mod 2)`.

use crate::band::{BandModule, BandOp, TypeWeight};
use crate::error::Result;
use crate::scalar::ComplexField;
use crate::sl2::polar::{derive_band, NVARS};
use crate::sl2::zoo::compact_in_standard;
use crate::Q;

#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalSeriesModel<F> {
    pub lambda: Q,
    pub epsilon: u8,
    /// Band tables in the variables `(n, λ)`, all derived by the polar oracle.
    pub theta: BandOp<F>,
    pub kappa: BandOp<F>,
    pub e: BandOp<F>,
    pub f: BandOp<F>,
    /// Module over the compact pair: operators for `E+`, `Hc`, `E−`, type
    /// `n` of `SO(2)`-weight `n`.
    pub module: BandModule<F>,
}

fn matrix<F: ComplexField>(rows: [[i64; 2]; 2]) -> [[F; 2]; 2] {
    rows.map(|r| r.map(F::from_i64))
}

/// Number of quarter turns `k` such that `x ↦ xg` is rotation by `kπ/2`,
/// for an integer rotation matrix.
pub fn quarter_turns(g: [[i64; 2]; 2]) -> Option<i64> {
    // (1, 0) g is the first row; compare with (cos, sin) of kπ/2.
    let rows = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]], [[-1, 0], [0, -1]], [[0, -1], [1, 0]]];
    rows.iter().position(|r| *r == g).map(|k| k as i64)
}

pub fn principal_series<F: ComplexField>(lambda: Q, epsilon: u8) -> Result<PrincipalSeriesModel<F>> {
    let theta = derive_band(&matrix([[1, 0], [0, -1]]))?;
    let e = derive_band(&matrix([[0, 1], [0, 0]]))?;
    let f = derive_band(&matrix([[0, 0], [1, 0]]))?;
    let kappa = derive_band(&matrix([[0, 1], [-1, 0]]))?;
    let standard = [&e, &theta, &f];
    let ops = compact_in_standard::<F>()
        .iter()
        .map(|coords| {
            coords
                .iter()
                .zip(standard)
                .filter(|(c, _)| !c.is_zero())
                .fold(BandOp::zero(NVARS), |acc, (c, op)| acc.add(&op.scale(c)))
        })
        .collect();
    let module = BandModule {
        parity: epsilon % 2,
        param_names: vec!["lambda".into()],
        params: vec![lambda.clone()],
        ops,
        weight: TypeWeight {
            torus: vec![(1, 0)],
            finite: vec![],
        },
    };
    Ok(PrincipalSeriesModel {
        lambda,
        epsilon: epsilon % 2,
        theta,
        kappa,
        e,
        f,
        module,
    })
}

impl<F: ComplexField> PrincipalSeriesModel<F> {
    /// Eigenvalue of a rotation by `kπ/2` on `f_n`: `e^{inkπ/2} = i^{nk}`.
    pub fn rotation_value(&self, quarter_turns: i64, n: i64) -> F {
        F::i().powi((n * quarter_turns).rem_euclid(4))
    }

    /// `−I` on `f_n`.
    pub fn minus_identity(&self, n: i64) -> F {
        self.rotation_value(quarter_turns([[-1, 0], [0, -1]]).unwrap(), n)
    }

    /// `w = [[0, 1], [−1, 0]]` on `f_n`.
    pub fn w_value(&self, n: i64) -> F {
        self.rotation_value(quarter_turns([[0, 1], [-1, 0]]).unwrap(), n)
    }

    pub fn contains_type(&self, n: i64) -> bool {
        self.module.contains_type(n)
    }

    pub fn lambda_value(&self) -> F {
        F::from_rational(&self.lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::zoo::{sl2, sl2_compact};
    use crate::{Field, Qi};
    use num_rational::BigRational;

    fn lam(p: i64, q: i64) -> Q {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn brackets_hold_symbolically() {
        let m = principal_series::<Qi>(lam(3, 7), 1).unwrap();
        assert_eq!(m.module.check_brackets(&sl2_compact()), Ok(()));
        let std = BandModule {
            ops: vec![m.e.clone(), m.theta.clone(), m.f.clone()],
            ..m.module.clone()
        };
        assert_eq!(std.check_brackets(&sl2()), Ok(()));
    }

    #[test]
    fn compact_operators() {
        let m = principal_series::<Qi>(lam(0, 1), 0).unwrap();
        let hc = &m.module.ops[1];
        assert_eq!(hc.terms().map(|(s, _)| s).collect::<Vec<_>>(), vec![0]);
        assert_eq!(hc.eval(0, 6, &[Qi::from_i64(0)]), Qi::from_i64(6));
        // θ f_0 = 0 at λ = 0.
        assert_eq!(m.theta.eval(2, 0, &[Qi::from_i64(0)]), Qi::from_i64(0));
        assert_eq!(m.theta.eval(-2, 0, &[Qi::from_i64(0)]), Qi::from_i64(0));
    }

    #[test]
    fn finite_group_values() {
        for eps in [0u8, 1] {
            let m = principal_series::<Qi>(lam(1, 2), eps).unwrap();
            let sign = Qi::from_i64(if eps == 0 { 1 } else { -1 });
            for n in (-20..=20).filter(|&n| m.contains_type(n)) {
                assert_eq!(m.minus_identity(n), sign);
                let w = m.w_value(n);
                assert_eq!(w.mul_ref(&w), sign);
                assert_eq!(w.powi(4), Qi::from_i64(1));
            }
        }
        let m = principal_series::<Qi>(lam(0, 1), 0).unwrap();
        assert_eq!(m.w_value(2), Qi::from_i64(-1));
        assert_eq!(m.w_value(1), Qi::i());
    }
}
