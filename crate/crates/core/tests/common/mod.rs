#![allow(dead_code)]

use hch::complex::Complex;
use hch::linalg::SparseMatrix;
use hch::{Field, Qi};
use rand::Rng;

/// Random elementary row operations `P` and `P⁻¹`.
fn random_change<R: Rng>(rng: &mut R, n: usize) -> (SparseMatrix<Qi>, SparseMatrix<Qi>) {
    let mut p = SparseMatrix::identity(n);
    let mut inv = SparseMatrix::identity(n);
    if n < 2 {
        return (p, inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = Qi::from_i64(rng.gen_range(-3i64..=3)).add_ref(&Qi::i().mul_ref(&Qi::from_i64(rng.gen_range(-2i64..=2))));
        let e = SparseMatrix::identity(n).add(&SparseMatrix::from_triplets(n, n, [(i, j, c.clone())]));
        let e_inv = SparseMatrix::identity(n).add(&SparseMatrix::from_triplets(n, n, [(i, j, c.neg_ref())]));
        p = e.mul(&p);
        inv = inv.mul(&e_inv);
    }
    (p, inv)
}

/// A random bounded complex together with its homology dimensions: a sum of
/// one-dimensional complexes and two-term identities, in scrambled bases.
pub fn random_complex<R: Rng>(rng: &mut R) -> (Complex<Qi>, Vec<usize>) {
    let lo = rng.gen_range(-2i64..=1);
    let len = rng.gen_range(1usize..=4);
    let a: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=2)).collect();
    let b: Vec<usize> = (0..len).map(|k| if k + 1 < len { rng.gen_range(0..=2) } else { 0 }).collect();
    let dims: Vec<usize> = (0..len).map(|k| a[k] + b[k] + if k > 0 { b[k - 1] } else { 0 }).collect();
    let changes: Vec<_> = dims.iter().map(|&n| random_change(rng, n)).collect();
    let d = (0..len.saturating_sub(1))
        .map(|k| {
            // Sources of term k sit after its homology block; targets of term k+1 after its sources.
            let trip = (0..b[k]).map(|j| (a[k + 1] + b[k + 1] + j, a[k] + j, Qi::from_i64(1)));
            let raw = SparseMatrix::from_triplets(dims[k + 1], dims[k], trip);
            changes[k + 1].0.mul(&raw).mul(&changes[k].1)
        })
        .collect();
    (Complex::new(lo, dims, d).unwrap(), a)
}

/// `Σ (−1)^n dim H^n` from a list of dims starting at degree `lo`.
pub fn euler(lo: i64, dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(k, &d)| if (lo + k as i64).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
        .sum()
}
