use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use super::{Field, QiSqrt5, Rational, Root4};

/// A rational number with `i64` numerator and denominator.
///
/// Every operation is overflow-checked and panics instead of wrapping, so a
/// result is either exact or absent. Much faster than [`Rational`] for the
/// dyadic coefficients of real-valued twists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallRational(Ratio<i64>);

const OVERFLOW: &str = "overflow in SmallRational arithmetic";

impl SmallRational {
    pub fn new(n: i64, d: i64) -> SmallRational {
        SmallRational(Ratio::new(n, d))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer()), BigInt::from(self.denom()))
    }

    pub fn from_rational(r: &Rational) -> Option<SmallRational> {
        Some(SmallRational::new(r.numer().to_i64()?, r.denom().to_i64()?))
    }
}

impl fmt::Debug for SmallRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for SmallRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Zero for SmallRational {
    fn zero() -> Self {
        SmallRational(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for SmallRational {
    fn one() -> Self {
        SmallRational(Ratio::one())
    }
}

impl Neg for SmallRational {
    type Output = SmallRational;
    fn neg(self) -> Self {
        SmallRational::new(self.numer().checked_neg().expect(OVERFLOW), self.denom())
    }
}

impl Add for SmallRational {
    type Output = SmallRational;
    fn add(self, rhs: Self) -> Self {
        SmallRational(self.0.checked_add(&rhs.0).expect(OVERFLOW))
    }
}

impl Sub for SmallRational {
    type Output = SmallRational;
    fn sub(self, rhs: Self) -> Self {
        SmallRational(self.0.checked_sub(&rhs.0).expect(OVERFLOW))
    }
}

impl Mul for SmallRational {
    type Output = SmallRational;
    fn mul(self, rhs: Self) -> Self {
        SmallRational(self.0.checked_mul(&rhs.0).expect(OVERFLOW))
    }
}

impl<'a> AddAssign<&'a SmallRational> for SmallRational {
    fn add_assign(&mut self, rhs: &'a SmallRational) {
        *self = *self + *rhs;
    }
}

impl<'a> SubAssign<&'a SmallRational> for SmallRational {
    fn sub_assign(&mut self, rhs: &'a SmallRational) {
        *self = *self - *rhs;
    }
}

impl Field for SmallRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(SmallRational(self.0.recip()))
        }
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        SmallRational::new(numer, denom)
    }

    fn from_root4(r: Root4) -> Option<Self> {
        match r {
            Root4::ONE => Some(SmallRational::one()),
            Root4::MINUS_ONE => Some(-SmallRational::one()),
            _ => None,
        }
    }

    fn to_scalar(&self) -> QiSqrt5 {
        QiSqrt5::from_rational(self.to_rational())
    }

    fn from_scalar(x: &QiSqrt5) -> Option<Self> {
        SmallRational::from_rational(x.as_rational()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_big_rationals() {
        let vals = [(1, 2), (-3, 4), (5, 16), (7, 1), (0, 1), (-1, 256)];
        for (a, b) in vals {
            for (c, d) in vals {
                let x = SmallRational::new(a, b);
                let y = SmallRational::new(c, d);
                let bx = x.to_rational();
                let by = y.to_rational();
                assert_eq!((x + y).to_rational(), &bx + &by);
                assert_eq!((x - y).to_rational(), &bx - &by);
                assert_eq!((x * y).to_rational(), &bx * &by);
            }
        }
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_panics() {
        let big = SmallRational::new(i64::MAX / 2, 1);
        let _ = big * big;
    }

    #[test]
    fn scalar_round_trip() {
        let x = SmallRational::new(-27, 4);
        assert_eq!(SmallRational::from_scalar(&x.to_scalar()), Some(x));
        assert_eq!(SmallRational::from_scalar(&QiSqrt5::i()), None);
    }
}
