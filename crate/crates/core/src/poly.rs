//! Sparse multivariate polynomials, used as band coefficients `c(n, λ, …)`.

use std::collections::BTreeMap;

use crate::scalar::Field;

/// Polynomial in a fixed number of variables. Exponent vectors map to
/// nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, F::one());
        p
    }

    /// `c0 + Σ c_k x_k` from a constant and per-variable coefficients.
    pub fn linear(constant: F, coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (k, c) in coeffs.iter().enumerate() {
            p = p.add(&Self::var(n, k).scale(c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(x) => {
                x.add_assign_ref(&c);
                if x.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::one().neg_ref()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, a.mul_ref(b));
            }
        }
        out
    }

    /// Total degree in variable `k` (`None` for the zero polynomial).
    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[k]).max()
    }

    /// Substitutes `x_k -> x_k + t`.
    pub fn shift_var(&self, k: usize, t: &F) -> Self {
        if t.is_zero() {
            return self.clone();
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let d = e[k];
            // (x + t)^d = Σ binom(d, j) x^j t^(d-j)
            let mut binom = F::one();
            for j in 0..=d {
                let mut ee = e.clone();
                ee[k] = j;
                let coeff = c.mul_ref(&binom).mul_ref(&t.powi(i64::from(d - j)));
                out.add_term(ee, coeff);
                binom = binom
                    .mul_ref(&F::from_i64(i64::from(d - j)))
                    .div_ref(&F::from_i64(i64::from(j + 1)));
            }
        }
        out
    }

    /// Substitutes a value for variable `k`, keeping the variable slot with
    /// exponent zero.
    pub fn substitute(&self, k: usize, value: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            ee[k] = 0;
            out.add_term(ee, c.mul_ref(&value.powi(i64::from(e[k]))));
        }
        out
    }

    pub fn eval(&self, values: &[F]) -> F {
        assert_eq!(values.len(), self.nvars);
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &d) in values.iter().zip(e) {
                if d > 0 {
                    t = t.mul_ref(&v.powi(i64::from(d)));
                }
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    /// The constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(e, _)| e.iter().all(|&d| d == 0))
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// Whether the polynomial involves variable `k`.
    pub fn depends_on(&self, k: usize) -> bool {
        self.terms.keys().any(|e| e[k] > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    type P = Poly<Qi>;

    fn q(v: i64) -> Qi {
        Qi::from_i64(v)
    }

    #[test]
    fn shift_matches_evaluation() {
        // p(n, l) = n^3 - 2 n l + 5
        let n = P::var(2, 0);
        let l = P::var(2, 1);
        let p = n.mul(&n).mul(&n).sub(&n.mul(&l).scale(&q(2))).add(&P::constant(2, q(5)));
        let shifted = p.shift_var(0, &q(3));
        for nv in -3..4 {
            for lv in -2..3 {
                assert_eq!(shifted.eval(&[q(nv), q(lv)]), p.eval(&[q(nv + 3), q(lv)]));
            }
        }
    }

    #[test]
    fn cancellation_leaves_zero() {
        let n = P::var(1, 0);
        assert!(n.sub(&n).is_zero());
        assert_eq!(n.sub(&n).as_constant(), Some(q(0)));
        assert_eq!(P::constant(1, q(7)).as_constant(), Some(q(7)));
        assert_eq!(n.as_constant(), None);
    }

    #[test]
    fn substitute_parameter() {
        let p = P::linear(q(0), &[q(-1), q(1)]).scale(&Qi::from_ratio(1, 2));
        let at4 = p.substitute(1, &q(4));
        assert_eq!(at4.eval(&[q(0), q(99)]), q(2));
        assert!(!at4.depends_on(1));
    }
}
