mod common;

use common::{euler, random_complex};
use hch::complex::{check_complex, cone, homology_dims, hom_complex, shift, tensor_complex, ChainMap};
use hch::gk::FiniteModule;
use hch::homology::band_homology::{band_kernel, IndexSet, StabilizationPolicy};
use hch::homology::relative::{euler_poincare, ext_checked};
use hch::signs::sort_sign;
use hch::sl2::principal::principal_series;
use hch::sl2::zoo::{compact_pair, finite_irrep, sl2_compact, subpair};
use hch::{Field, Qi, Q};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Q> {
    (-40i64..40, 1i64..9).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generator_has_the_advertised_homology(seed in any::<u64>()) {
        let (c, h) = random_complex(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(check_complex(&c), Ok(()));
        prop_assert_eq!(homology_dims(&c), h);
    }

    #[test]
    fn shift_and_cone(seed in any::<u64>(), k in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, h) = random_complex(&mut rng);
        let s = shift(&c, k);
        prop_assert_eq!(check_complex(&s), Ok(()));
        prop_assert_eq!(homology_dims(&s), h.clone());
        prop_assert_eq!(s.lo, c.lo - k);
        let id = cone(&ChainMap::identity(&c)).unwrap().complex;
        prop_assert_eq!(check_complex(&id), Ok(()));
        prop_assert!(homology_dims(&id).iter().all(|&d| d == 0));
        let (d, _) = random_complex(&mut rng);
        let z = cone(&ChainMap::zero(&c, &d)).unwrap().complex;
        prop_assert_eq!(check_complex(&z), Ok(()));
        prop_assert_eq!(euler(z.lo, &homology_dims(&z)), d.euler_characteristic() - c.euler_characteristic());
    }

    #[test]
    fn tensor_and_hom(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, _) = random_complex(&mut rng);
        let (n, _) = random_complex(&mut rng);
        let (t, _) = tensor_complex(&m, &n);
        prop_assert_eq!(check_complex(&t), Ok(()));
        let chi = m.euler_characteristic() * n.euler_characteristic();
        prop_assert_eq!(euler(t.lo, &homology_dims(&t)), chi);
        let (h, _) = hom_complex(&m, &n);
        prop_assert_eq!(check_complex(&h), Ok(()));
        prop_assert_eq!(euler(h.lo, &homology_dims(&h)), chi);
    }

    #[test]
    fn sort_sign_is_a_sign_of_permutation(mut v in proptest::collection::vec(0usize..6, 0..6)) {
        let original = v.clone();
        let s = sort_sign(&mut v);
        let mut sorted = original.clone();
        sorted.sort_unstable();
        let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
        prop_assert_eq!(s != 0, distinct);
        if distinct {
            prop_assert_eq!(&v, &sorted);
            let inversions = (0..original.len())
                .flat_map(|i| (i + 1..original.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| original[i] > original[j])
                .count();
            prop_assert_eq!(s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn principal_series_brackets_and_casimir(l in rational(), eps in 0u8..2) {
        let v = principal_series::<Qi>(l.clone(), eps).unwrap();
        let g = sl2_compact::<Qi>();
        prop_assert_eq!(v.module.check_brackets(&g), Ok(()));
        let omega = v.module.casimir(&g).unwrap();
        let lv = Qi::from_rational(&l);
        let expected = lv.mul_ref(&lv.add_ref(&Qi::from_i64(2))).div_ref(&Qi::from_i64(2));
        for n in (-20i64..=20).filter(|n| v.contains_type(*n)) {
            prop_assert_eq!(omega.eval(0, n, &[lv.clone()]), expected.clone());
            prop_assert!(omega.eval(2, n, &[lv.clone()]).is_zero() && omega.eval(-2, n, &[lv.clone()]).is_zero());
        }
    }

    #[test]
    fn band_kernel_is_monotone(l in 0i64..10) {
        let v = principal_series::<Qi>(BigRational::from_integer(l.into()), 0).unwrap();
        let set = IndexSet::Residues { modulus: 2, residues: vec![0] };
        let policy = StabilizationPolicy::new(vec![2, 4, 8, 12, 16, 24]).unwrap();
        let r = band_kernel(&v.theta, &[Qi::from_i64(l)], &set, &set, &policy).unwrap();
        prop_assert!(r.stabilization.dims.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(r.certified());
    }

    #[test]
    fn euler_poincare_is_additive(a in 0u32..5, b in 0u32..5, which in 0usize..3) {
        let e = subpair::<Qi>(hch::sl2::zoo::SUBPAIR_NAMES[which]).unwrap();
        let pair = compact_pair::<Qi>();
        let (ma, mb) = (finite_irrep(&pair, a).unwrap().restrict(&e), finite_irrep(&pair, b).unwrap().restrict(&e));
        let sum: FiniteModule<Qi> = ma.direct_sum(&mb);
        prop_assert_eq!(
            euler_poincare(&e, &sum).unwrap(),
            euler_poincare(&e, &ma).unwrap() + euler_poincare(&e, &mb).unwrap()
        );
        prop_assert!(ext_checked(&e, &sum).is_ok());
    }
}
