use std::collections::BTreeMap;

use hch::homology::band_homology::{band_cokernel, band_kernel, band_rel_homology, IndexSet, StabilizationPolicy};
use hch::sl2::polar::monomial_expansion;
use hch::sl2::principal::principal_series;
use hch::sl2::zoo::{compact_pair, subpair};
use hch::{Error, Field, Qi, Q};
use num_rational::BigRational;

fn lam(p: i64) -> Q {
    BigRational::from_integer(p.into())
}

fn parity_class(eps: i64) -> IndexSet {
    IndexSet::Residues { modulus: 2, residues: vec![eps] }
}

/// Restricted `θ` band of `V_λ^ε` with `λ` substituted.
fn theta_kernel(l: i64, eps: u8, policy: &StabilizationPolicy) -> hch::homology::band_homology::BandResult<Qi> {
    let v = principal_series::<Qi>(lam(l), eps).unwrap();
    let set = parity_class(i64::from(eps));
    band_kernel(&v.theta, &[Qi::from_i64(l)], &set, &set, policy).unwrap()
}

#[test]
fn constant_function_at_lambda_zero() {
    let r = theta_kernel(0, 0, &StabilizationPolicy::new(vec![4, 6, 8]).unwrap());
    assert_eq!(r.dim(), 1);
    assert!(r.certified());
    assert_eq!(r.representative(0).keys().copied().collect::<Vec<_>>(), vec![0]);
}

#[test]
fn kernel_at_four_is_x1x2_squared() {
    let r = theta_kernel(4, 0, &StabilizationPolicy::default());
    assert_eq!((r.dim(), r.certified()), (1, true));
    let rep = r.representative(0);
    let oracle: BTreeMap<i64, Qi> = monomial_expansion(2, 2);
    assert_eq!(rep.keys().collect::<Vec<_>>(), oracle.keys().collect::<Vec<_>>());
    let ratio = rep[&0].div_ref(&oracle[&0]);
    for (n, c) in &oracle {
        assert_eq!(rep[n], c.mul_ref(&ratio));
    }
}

#[test]
fn odd_series_has_trivial_kernel() {
    let r = theta_kernel(3, 1, &StabilizationPolicy::default());
    assert_eq!((r.dim(), r.certified()), (0, true));
}

#[test]
fn kernel_dimension_is_monotone() {
    for l in [0, 2, 4, 5] {
        let r = theta_kernel(l, 0, &StabilizationPolicy::new(vec![2, 4, 6, 8, 12, 16]).unwrap());
        let dims = &r.stabilization.dims;
        assert!(dims.windows(2).all(|w| w[0] <= w[1]));
        assert!(dims.iter().all(|&d| d <= r.dim()));
    }
}

#[test]
fn odd_series_restricted_to_diagonal_torus_vanishes() {
    let e = subpair::<Qi>("diagonal_torus").unwrap();
    for l in [0, 1, 3, 4] {
        let v = principal_series::<Qi>(lam(l), 1).unwrap();
        let h = band_rel_homology(&e, &v.module, &StabilizationPolicy::default()).unwrap();
        assert!(h.c0.is_empty() && h.c1.is_empty());
        assert_eq!((h.h0.dim(), h.h1.dim(), h.certified()), (0, 0, true));
    }
}

#[test]
fn coinvariants_at_lambda_one() {
    let e = subpair::<Qi>("diagonal_torus").unwrap();
    let v = principal_series::<Qi>(lam(1), 0).unwrap();
    let h = band_rel_homology(&e, &v.module, &StabilizationPolicy::default()).unwrap();
    assert_eq!((h.h0.dim(), h.h0.certified()), (2, true));
}

#[test]
fn zero_operator_on_a_full_band_is_degenerate() {
    let v = principal_series::<Qi>(lam(0), 0).unwrap();
    let zero = v.theta.sub(&v.theta);
    let set = parity_class(0);
    let err = band_cokernel(&zero, &[Qi::from_i64(0)], &set, &set, &StabilizationPolicy::default()).unwrap_err();
    assert!(matches!(err, Error::Degenerate { .. }));
}

#[test]
fn uncertified_when_windows_run_out() {
    let v = principal_series::<Qi>(lam(0), 0).unwrap();
    let set = parity_class(0);
    let r = band_kernel(&v.theta, &[Qi::from_i64(0)], &set, &set, &StabilizationPolicy::new(vec![4, 8]).unwrap()).unwrap();
    assert!(!r.certified());
    assert_eq!(r.stabilization.dims, vec![1, 1]);
}

#[test]
fn casimir_and_restriction_shape() {
    let v = principal_series::<Qi>(lam(3), 1).unwrap();
    let omega = v.module.casimir_scalar(&compact_pair::<Qi>().g).unwrap();
    // λ(λ + 2)/2 at λ = 3.
    assert_eq!(omega.eval(&[Qi::from_i64(0), Qi::from_i64(3)]), Qi::from_ratio(15, 2));
    let e = subpair::<Qi>("so2").unwrap();
    let h = band_rel_homology(&e, &principal_series::<Qi>(lam(2), 0).unwrap().module, &StabilizationPolicy::default()).unwrap();
    assert_eq!(h.c0, IndexSet::Finite(vec![0]));
    assert_eq!((h.h0.dim(), h.h1.dim()), (1, 0));
}
