//! Scalar fields.
//!
//! Everything in the crate is generic over [`Field`]. The exact ground field
//! is the Gaussian rationals `Q(i)` ([`crate::Qi`]); `BigRational` and the
//! floating point types are provided for experiments and cross-checks.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative field with by-reference arithmetic.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    /// Whether arithmetic is exact. Elimination on inexact fields treats tiny
    /// values as zero.
    const EXACT: bool;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    /// Zero test used by elimination. Exact fields compare with zero.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).div_ref(&Self::from_i64(den))
    }

    fn inv(&self) -> Self {
        Self::one().div_ref(self)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }

    /// Integer power (negative exponents invert).
    fn powi(&self, exp: i64) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul_ref(self);
        }
        if exp < 0 {
            acc.inv()
        } else {
            acc
        }
    }
}

/// Fields that contain a square root of `-1`.
pub trait ComplexField: Field {
    fn i() -> Self;
}

/// Fields whose elements have exact rational real and imaginary parts, used
/// by the JSON wire formats.
pub trait ExactScalar: Field {
    fn from_parts(re: BigRational, im: BigRational) -> Option<Self>;
    fn parts(&self) -> (BigRational, BigRational);
}

macro_rules! ref_ops {
    () => {
        fn add_ref(&self, other: &Self) -> Self {
            self + other
        }
        fn sub_ref(&self, other: &Self) -> Self {
            self - other
        }
        fn mul_ref(&self, other: &Self) -> Self {
            self * other
        }
        fn div_ref(&self, other: &Self) -> Self {
            self / other
        }
        fn neg_ref(&self) -> Self {
            -self
        }
    };
}

impl Field for BigRational {
    const EXACT: bool = true;
    ref_ops!();

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

impl Field for Complex<BigRational> {
    const EXACT: bool = true;
    ref_ops!();

    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_i64(v), BigRational::zero())
    }

    fn from_rational(q: &BigRational) -> Self {
        Complex::new(q.clone(), BigRational::zero())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        self.re += &other.re;
        self.im += &other.im;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        self.re -= &other.re;
        self.im -= &other.im;
    }
}

impl ComplexField for Complex<BigRational> {
    fn i() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
}

impl ExactScalar for BigRational {
    fn from_parts(re: BigRational, im: BigRational) -> Option<Self> {
        im.is_zero().then_some(re)
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.clone(), BigRational::zero())
    }
}

impl ExactScalar for Complex<BigRational> {
    fn from_parts(re: BigRational, im: BigRational) -> Option<Self> {
        Some(Complex::new(re, im))
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.re.clone(), self.im.clone())
    }
}

const FLOAT_EPS: f64 = 1e-10;

impl Field for f64 {
    const EXACT: bool = false;
    ref_ops!();

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.abs() < FLOAT_EPS
    }
}

impl Field for Complex<f64> {
    const EXACT: bool = false;
    ref_ops!();

    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }

    fn from_rational(q: &BigRational) -> Self {
        Complex::new(q.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn is_negligible(&self) -> bool {
        self.norm() < FLOAT_EPS
    }
}

impl ComplexField for Complex<f64> {
    fn i() -> Self {
        Complex::new(0.0, 1.0)
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q`, or a terminating decimal such as `-2.5`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(num, den);
        return Some(if negative { -q } else { q });
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Human-readable rendering of an exact scalar, e.g. `3/2`, `-i`, `1+2i`.
pub fn format_scalar<F: ExactScalar>(x: &F) -> String {
    let (re, im) = x.parts();
    if im.is_zero() {
        return format_rational(&re);
    }
    let im_part = if im.abs().is_one() {
        String::new()
    } else {
        format_rational(&im.abs())
    };
    let sign = if im.is_negative() { "-" } else { "+" };
    if re.is_zero() {
        let sign = if im.is_negative() { "-" } else { "" };
        format!("{sign}{im_part}i")
    } else {
        format!("{}{sign}{im_part}i", format_rational(&re))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    #[test]
    fn gaussian_field_axioms_on_samples() {
        let a = Qi::new(BigRational::from_i64(1), BigRational::from_ratio(1, 2));
        let b = Qi::new(BigRational::from_ratio(-3, 4), BigRational::from_i64(2));
        assert_eq!(a.mul_ref(&b).div_ref(&b), a);
        assert_eq!(a.add_ref(&b).sub_ref(&b), a);
        assert_eq!(a.mul_ref(&a.inv()), Qi::one());
        assert_eq!(Qi::i().mul_ref(&Qi::i()), Qi::from_i64(-1));
    }

    #[test]
    fn rationals_are_normalized() {
        let q = BigRational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(format_rational(&q), "-2/3");
        assert_eq!(parse_rational("4/-6"), Some(q));
        assert_eq!(parse_rational("-2.5"), Some(BigRational::from_ratio(-5, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn scalar_formatting() {
        assert_eq!(format_scalar(&Qi::i()), "i");
        assert_eq!(format_scalar(&Qi::i().neg_ref()), "-i");
        let z = Qi::new(BigRational::from_i64(1), BigRational::from_ratio(-1, 2));
        assert_eq!(format_scalar(&z), "1-1/2i");
    }

    #[test]
    fn float_negligible() {
        assert!(1e-12f64.is_negligible());
        assert!(!1e-3f64.is_negligible());
    }
}
