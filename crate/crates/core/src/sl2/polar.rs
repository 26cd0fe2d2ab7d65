//! Symbolic polar-coordinate calculus on `R² ∖ {0}`, used to derive the
//! band tables of the principal series instead of typing them in.
//!
//! An expression is a finite sum `Σ c_{a,m}(n, λ) r^{λ+a} e^{i(n+m)φ}`,
//! i.e. a linear combination of shifted copies of `f_n = r^λ e^{inφ}`.

use std::collections::BTreeMap;

use crate::band::BandOp;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::ComplexField;

/// Variables of the coefficient polynomials: `n`, then `λ`.
pub const NVARS: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct PolarExpr<F> {
    terms: BTreeMap<(i64, i64), Poly<F>>,
}

impl<F: ComplexField> PolarExpr<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `f_n` itself.
    pub fn basis() -> Self {
        let mut e = Self::zero();
        e.push((0, 0), Poly::constant(NVARS, F::one()));
        e
    }

    fn push(&mut self, key: (i64, i64), p: Poly<F>) {
        let sum = match self.terms.remove(&key) {
            Some(q) => q.add(&p),
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.push(*k, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (k, p) in &self.terms {
            out.push(*k, p.scale(c));
        }
        out
    }

    /// Multiplies by `α e^{iφ} + β e^{−iφ}`.
    fn mul_exp(&self, alpha: &F, beta: &F) -> Self {
        let mut out = Self::zero();
        for (&(a, m), p) in &self.terms {
            out.push((a, m + 1), p.scale(alpha));
            out.push((a, m - 1), p.scale(beta));
        }
        out
    }

    /// `cos φ = (e^{iφ} + e^{−iφ})/2`.
    pub fn mul_cos(&self) -> Self {
        let half = F::from_ratio(1, 2);
        self.mul_exp(&half, &half)
    }

    /// `sin φ = (e^{iφ} − e^{−iφ})/(2i)`.
    pub fn mul_sin(&self) -> Self {
        let c = F::from_ratio(1, 2).div_ref(&F::i());
        self.mul_exp(&c, &c.neg_ref())
    }

    pub fn mul_r_pow(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&(a, m), p) in &self.terms {
            out.push((a + k, m), p.clone());
        }
        out
    }

    pub fn d_r(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, m), p) in &self.terms {
            let factor = Poly::linear(F::from_i64(a), &[F::zero(), F::one()]);
            out.push((a - 1, m), p.mul(&factor));
        }
        out
    }

    pub fn d_phi(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, m), p) in &self.terms {
            let i = F::i();
            let factor = Poly::linear(i.mul_ref(&F::from_i64(m)), &[i, F::zero()]);
            out.push((a, m), p.mul(&factor));
        }
        out
    }

    /// `x₁ = r cos φ`.
    pub fn mul_x1(&self) -> Self {
        self.mul_cos().mul_r_pow(1)
    }

    /// `x₂ = r sin φ`.
    pub fn mul_x2(&self) -> Self {
        self.mul_sin().mul_r_pow(1)
    }

    /// `∂₁ = cos φ ∂_r − (sin φ / r) ∂_φ`.
    pub fn d1(&self) -> Self {
        let radial = self.d_r().mul_cos();
        let angular = self.d_phi().mul_sin().mul_r_pow(-1);
        radial.add(&angular.scale(&F::one().neg_ref()))
    }

    /// `∂₂ = sin φ ∂_r + (cos φ / r) ∂_φ`.
    pub fn d2(&self) -> Self {
        self.d_r().mul_sin().add(&self.d_phi().mul_cos().mul_r_pow(-1))
    }

    /// The right-translation field `Σ_{a,b} x_a X_{ab} ∂_b` of a `2 × 2`
    /// matrix `X`, applied to `self`.
    pub fn right_field(&self, x: &[[F; 2]; 2]) -> Self {
        let partials = [self.d1(), self.d2()];
        let mut out = Self::zero();
        for (a, row) in x.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = if a == 0 { partials[b].mul_x1() } else { partials[b].mul_x2() };
                out = out.add(&term.scale(c));
            }
        }
        out
    }

    /// Reads off a band operator; fails if any term changed the homogeneity.
    pub fn to_band(&self) -> Result<BandOp<F>> {
        let mut op = BandOp::zero(NVARS);
        for (&(a, m), p) in &self.terms {
            if a != 0 {
                return Err(Error::Invalid(format!("term r^(λ+{a}) is not homogeneous of degree λ")));
            }
            op.add_term(m, p.clone());
        }
        Ok(op)
    }
}

/// Band operator of the right-translation field of `X` on `f_n = r^λ e^{inφ}`.
pub fn derive_band<F: ComplexField>(x: &[[F; 2]; 2]) -> Result<BandOp<F>> {
    PolarExpr::basis().right_field(x).to_band()
}

/// Fourier expansion `x₁^p x₂^q = r^{p+q} Σ_m c_m e^{imφ}` by repeated
/// multiplication of Laurent polynomials in `e^{iφ}`.
pub fn monomial_expansion<F: ComplexField>(p: u32, q: u32) -> BTreeMap<i64, F> {
    let mut cur: BTreeMap<i64, F> = BTreeMap::from([(0, F::one())]);
    let half = F::from_ratio(1, 2);
    let cos = [(1, half.clone()), (-1, half.clone())];
    let s = half.div_ref(&F::i());
    let sin = [(1, s.clone()), (-1, s.neg_ref())];
    let factors = std::iter::repeat_n(&cos, p as usize).chain(std::iter::repeat_n(&sin, q as usize));
    for factor in factors {
        let mut next: BTreeMap<i64, F> = BTreeMap::new();
        for (m, c) in &cur {
            for (dm, d) in factor {
                next.entry(m + dm).or_insert_with(F::zero).add_assign_ref(&c.mul_ref(d));
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Field, Qi};

    fn q(v: i64) -> Qi {
        Qi::from_i64(v)
    }

    #[test]
    fn theta_table() {
        let theta = derive_band(&[[q(1), q(0)], [q(0), q(-1)]]).unwrap();
        let half = Qi::from_ratio(1, 2);
        let up = Poly::linear(q(0), &[half.neg_ref(), half.clone()]);
        let down = Poly::linear(q(0), &[half.clone(), half]);
        assert_eq!(theta, BandOp::from_terms(NVARS, [(2, up), (-2, down)]));
    }

    #[test]
    fn rotation_is_d_phi() {
        // x₁∂₂ − x₂∂₁ multiplies f_n by i n.
        let kappa = derive_band(&[[q(0), q(1)], [q(-1), q(0)]]).unwrap();
        let expected = Poly::linear(q(0), &[Qi::i(), q(0)]);
        assert_eq!(kappa, BandOp::from_terms(NVARS, [(0, expected)]));
    }

    #[test]
    fn expansion_of_x1x2_squared() {
        // (x₁x₂)² = r⁴ sin²(2φ)/4 = r⁴ (2 − e^{4iφ} − e^{−4iφ})/16.
        let e = monomial_expansion::<Qi>(2, 2);
        let c = Qi::from_ratio(1, 16);
        let expected = BTreeMap::from([(-4, c.neg_ref()), (0, c.mul_ref(&q(2))), (4, c.neg_ref())]);
        assert_eq!(e, expected);
    }
}
