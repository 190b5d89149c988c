//! Reduced quotients of polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ratpoly::{Poly, Rational};

/// A rational function `num / den` in `z`, kept in canonical form:
/// the denominator is monic and coprime to the numerator. Equality on the
/// canonical form is therefore equality of rational functions.
#[derive(Clone, PartialEq)]
pub struct RationalFunc {
    num: Poly,
    den: Poly,
}

impl RationalFunc {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunc { num: Poly::zero(), den: Poly::one() });
        }
        let g = num.gcd(&den);
        let mut num = num.divexact(&g).expect("gcd divides numerator");
        let mut den = den.divexact(&g).expect("gcd divides denominator");
        // Make the denominator monic, folding its leading coefficient into
        // the numerator.
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if !num::One::is_one(&lead) {
            let inv = Rational::from_integer(1.into()) / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunc::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Quotient-rule derivative with respect to `z`.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFunc::new(num, den).expect("nonzero denominator squared")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if num::Zero::is_zero(c) {
            return RationalFunc::zero();
        }
        RationalFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Floating-point evaluation.
    pub fn eval_f64(&self, z: f64) -> f64 {
        self.num.eval_f64(z) / self.den.eval_f64(z)
    }
}

/// The logarithmic derivative `p' / p` as a reduced rational function.
pub fn log_derivative(p: &Poly) -> RationalFunc {
    RationalFunc::new(p.derivative(), p.clone()).expect("log derivative of nonzero polynomial")
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunc::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunc {
            type Output = RationalFunc;
            fn $method(self, rhs: RationalFunc) -> RationalFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunc> for RationalFunc {
            type Output = RationalFunc;
            fn $method(self, rhs: &RationalFunc) -> RationalFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<RationalFunc> for &RationalFunc {
            type Output = RationalFunc;
            fn $method(self, rhs: RationalFunc) -> RationalFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn shared_factor_cancels() {
        let f = RationalFunc::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &Poly::from_i64(&[1, 1]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn constant_denominator_folds_into_numerator() {
        let f = RationalFunc::new(Poly::from_i64(&[0, 2]), Poly::from_i64(&[4])).unwrap();
        assert_eq!(f.num(), &Poly::new(vec![rat(0, 1), rat(1, 2)]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn zero_numerator_is_canonical_zero() {
        let f = RationalFunc::new(Poly::zero(), Poly::from_i64(&[3, 1, 2])).unwrap();
        assert_eq!(f, RationalFunc::zero());
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunc::new(Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dz (1/z) = -1/z^2
        let f = RationalFunc::new(Poly::one(), Poly::z()).unwrap();
        let df = f.derivative();
        assert_eq!(df.num(), &Poly::from_i64(&[-1]));
        assert_eq!(df.den(), &Poly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn arithmetic_reduces() {
        // 1/(z-1) + 1/(z+1) = 2z/(z^2-1); multiplied by (z^2-1)/2 gives z.
        let a = RationalFunc::new(Poly::one(), Poly::from_i64(&[-1, 1])).unwrap();
        let b = RationalFunc::new(Poly::one(), Poly::from_i64(&[1, 1])).unwrap();
        let s = &a + &b;
        assert_eq!(s.num(), &Poly::from_i64(&[0, 2]));
        assert_eq!(s.den(), &Poly::from_i64(&[-1, 0, 1]));
        let back = &s * &RationalFunc::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[2])).unwrap();
        assert_eq!(back, RationalFunc::from_poly(Poly::z()));
    }
}
