use hch::complex::homology_dims;
use hch::hcomplex::{check_h_axioms, h_cohomology_modules, h_cone, h_shift, h_tensor, HMorphism};
use hch::homology::resolution::standard_resolution;
use hch::linalg::SparseMatrix;
use hch::sl2::zoo::{compact_pair, split_torus_pair};
use hch::{Field, Qi};

#[test]
fn resolution_is_an_h_complex_over_both_tori() {
    for pair in [split_torus_pair::<Qi>(), compact_pair::<Qi>()] {
        let r = standard_resolution(&pair, 3).unwrap();
        assert!(check_h_axioms(&r.h, &pair).is_empty());
    }
}

#[test]
fn shifted_resolution() {
    let pair = split_torus_pair::<Qi>();
    let h = standard_resolution(&pair, 3).unwrap().h;
    for k in [-1, 1, 2] {
        let s = h_shift(&h, k);
        assert!(check_h_axioms(&s, &pair).is_empty(), "shift by {k}");
        assert_eq!(h_shift(&s, -k), h);
    }
}

#[test]
fn cone_of_identity_is_acyclic() {
    let pair = split_torus_pair::<Qi>();
    let h = standard_resolution(&pair, 2).unwrap().h;
    let c = h_cone(&HMorphism::identity(&h)).unwrap();
    assert!(check_h_axioms(&c, &pair).is_empty());
    assert!(homology_dims(&c.complex).iter().all(|&k| k == 0));
}

#[test]
fn tensor_of_resolutions() {
    let pair = split_torus_pair::<Qi>();
    let a = standard_resolution(&pair, 2).unwrap().h;
    let b = standard_resolution(&pair, 1).unwrap().h;
    let t = h_tensor(&a, &b, &pair.k).unwrap();
    let v = check_h_axioms(&t, &pair);
    assert!(v.is_empty(), "{}", v[0]);
}

#[test]
fn perturbed_contraction_is_caught() {
    let pair = split_torus_pair::<Qi>();
    let mut h = standard_resolution(&pair, 3).unwrap().h;
    // Scale i on the wedge-degree-0 term: the homotopy identity breaks.
    let last = h.i[0].len() - 1;
    h.i[0][last] = h.i[0][last].scale(&Qi::from_i64(2));
    let v = check_h_axioms(&h, &pair);
    assert!(v.iter().any(|x| x.axiom.starts_with("d i_ξ + i_ξ d") && x.degree == 0 && x.xi == Some(0)));
}

#[test]
fn cohomology_of_resolution_is_genuine() {
    let pair = split_torus_pair::<Qi>();
    let h = standard_resolution(&pair, 3).unwrap().h;
    let c = h_cohomology_modules(&h, &pair).unwrap();
    assert!(c.defect_failures.is_empty());
}

#[test]
fn morphism_check_rejects_non_chain_maps() {
    let pair = split_torus_pair::<Qi>();
    let h = standard_resolution(&pair, 2).unwrap().h;
    let f = HMorphism::new(h.clone(), h.clone(), |n| {
        if n == 0 {
            SparseMatrix::zeros(h.dim(n), h.dim(n))
        } else {
            SparseMatrix::identity(h.dim(n))
        }
    })
    .unwrap();
    assert!(f.check().is_err());
    assert!(h_cone(&f).is_err());
}
