//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Instances:
//! [`Rational`] and its overflow-checked machine-word variant
//! [`SmallRational`] (plain `Q`), and [`QiSqrt5`], the number field
//! `Q(i, sqrt 5)` which holds every scalar that occurs in the twisted
//! computations (4th roots of unity and the golden ratio of the `A5` table).

mod qi5;
mod small;

pub use qi5::{CharPoly, QiSqrt5};
pub use small::SmallRational;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision rational number, always kept reduced.
pub type Rational = BigRational;

/// Build a reduced rational from machine integers. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A 4th root of unity `i^k`, stored by its exponent mod 4.
///
/// Cocycle values live here; multiplication is addition of exponents.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root4(u8);

impl Root4 {
    pub const ONE: Root4 = Root4(0);
    pub const I: Root4 = Root4(1);
    pub const MINUS_ONE: Root4 = Root4(2);
    pub const MINUS_I: Root4 = Root4(3);

    pub fn from_exponent(k: u32) -> Root4 {
        Root4((k % 4) as u8)
    }

    /// `(-1)^bit`.
    pub fn sign(bit: u32) -> Root4 {
        if bit & 1 == 1 {
            Root4::MINUS_ONE
        } else {
            Root4::ONE
        }
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn inv(self) -> Root4 {
        Root4((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }

    /// Recognise a field element as a 4th root of unity.
    pub fn from_scalar(x: &QiSqrt5) -> Option<Root4> {
        [Root4::ONE, Root4::I, Root4::MINUS_ONE, Root4::MINUS_I]
            .into_iter()
            .find(|r| QiSqrt5::from_root4(*r) == *x)
    }

    pub fn parse(s: &str) -> Option<Root4> {
        match s.trim() {
            "1" | "+1" => Some(Root4::ONE),
            "-1" => Some(Root4::MINUS_ONE),
            "i" | "+i" | "xi" => Some(Root4::I),
            "-i" | "-xi" => Some(Root4::MINUS_I),
            _ => None,
        }
    }
}

impl Mul for Root4 {
    type Output = Root4;
    fn mul(self, rhs: Root4) -> Root4 {
        Root4((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Root4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// An exact field of characteristic zero usable as coefficients of group
/// algebra elements.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn inverse(&self) -> Option<Self>;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// `None` when the field does not contain `i`.
    fn from_root4(r: Root4) -> Option<Self>;

    fn to_scalar(&self) -> QiSqrt5;

    fn from_scalar(x: &QiSqrt5) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
}

impl Field for Rational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        rat(numer, denom)
    }

    fn from_root4(r: Root4) -> Option<Self> {
        match r {
            Root4::ONE => Some(Rational::one()),
            Root4::MINUS_ONE => Some(-Rational::one()),
            _ => None,
        }
    }

    fn to_scalar(&self) -> QiSqrt5 {
        QiSqrt5::from_rational(self.clone())
    }

    fn from_scalar(x: &QiSqrt5) -> Option<Self> {
        x.as_rational().cloned()
    }
}
