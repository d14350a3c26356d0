use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat, Field, Rational, Root4};
use crate::error::{Error, Result};

/// An element `a + b*i + c*sqrt5 + d*i*sqrt5` of `Q(i, sqrt 5)`.
///
/// The four rational coordinates are stored in the basis `{1, i, r5, i*r5}`;
/// since that basis is linearly independent over `Q`, equality is
/// coordinate-wise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QiSqrt5 {
    c: [Rational; 4],
}

/// Monic characteristic polynomial of the multiplication map, lowest degree
/// coefficient first (`coeffs[4] == 1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    pub coeffs: [Rational; 5],
}

impl CharPoly {
    pub fn from_ints(coeffs: [i64; 5]) -> CharPoly {
        CharPoly {
            coeffs: coeffs.map(|c| rat(c, 1)),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Evaluate at a field element (Horner).
    pub fn eval(&self, x: &QiSqrt5) -> QiSqrt5 {
        let mut acc = QiSqrt5::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x) + QiSqrt5::from_rational(c.clone());
        }
        acc
    }
}

// (a + b i)(e + f i) with zero shortcuts; most operands are real or purely imaginary.
fn gauss_mul(a: &Rational, b: &Rational, e: &Rational, f: &Rational) -> (Rational, Rational) {
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    if !a.is_zero() {
        if !e.is_zero() {
            re += a * e;
        }
        if !f.is_zero() {
            im += a * f;
        }
    }
    if !b.is_zero() {
        if !f.is_zero() {
            re -= b * f;
        }
        if !e.is_zero() {
            im += b * e;
        }
    }
    (re, im)
}

impl QiSqrt5 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> QiSqrt5 {
        QiSqrt5 { c: [a, b, c, d] }
    }

    pub fn from_rational(a: Rational) -> QiSqrt5 {
        QiSqrt5::new(a, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(n: i64) -> QiSqrt5 {
        QiSqrt5::from_rational(rat(n, 1))
    }

    pub fn ratio(n: i64, d: i64) -> QiSqrt5 {
        QiSqrt5::from_rational(rat(n, d))
    }

    pub fn i() -> QiSqrt5 {
        QiSqrt5::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn sqrt5() -> QiSqrt5 {
        QiSqrt5::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    /// `(1 + sqrt5) / 2`.
    pub fn golden() -> QiSqrt5 {
        QiSqrt5::new(rat(1, 2), Rational::zero(), rat(1, 2), Rational::zero())
    }

    /// `(1 - sqrt5) / 2`.
    pub fn golden_conjugate() -> QiSqrt5 {
        QiSqrt5::new(rat(1, 2), Rational::zero(), rat(-1, 2), Rational::zero())
    }

    pub fn from_root4(r: Root4) -> QiSqrt5 {
        match r {
            Root4::ONE => QiSqrt5::one(),
            Root4::MINUS_ONE => -QiSqrt5::one(),
            Root4::I => QiSqrt5::i(),
            _ => -QiSqrt5::i(),
        }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Coordinates are all in `Q(i)` (no `sqrt5` part).
    pub fn is_gaussian_rational(&self) -> bool {
        self.c[2].is_zero() && self.c[3].is_zero()
    }

    fn mul_impl(&self, y: &QiSqrt5) -> QiSqrt5 {
        let [a, b, c, d] = &self.c;
        let [e, f, g, h] = &y.c;
        // x = u + v r5, y = p + q r5
        let (up_re, up_im) = gauss_mul(a, b, e, f);
        let (vq_re, vq_im) = gauss_mul(c, d, g, h);
        let (uq_re, uq_im) = gauss_mul(a, b, g, h);
        let (vp_re, vp_im) = gauss_mul(c, d, e, f);
        let five = rat(5, 1);
        let re = if vq_re.is_zero() { up_re } else { up_re + vq_re * &five };
        let im = if vq_im.is_zero() { up_im } else { up_im + vq_im * &five };
        QiSqrt5::new(re, im, uq_re + vp_re, uq_im + vp_im)
    }

    /// Galois conjugate `sqrt5 -> -sqrt5`.
    fn conj_sqrt5(&self) -> QiSqrt5 {
        QiSqrt5::new(self.c[0].clone(), self.c[1].clone(), -&self.c[2], -&self.c[3])
    }

    pub fn checked_inverse(&self) -> Result<QiSqrt5> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // x * conj(x) = w lies in Q(i); invert w through its complex conjugate.
        let xbar = self.conj_sqrt5();
        let w = self.mul_impl(&xbar);
        debug_assert!(w.is_gaussian_rational());
        let (p, q) = (&w.c[0], &w.c[1]);
        let norm = p * p + q * q;
        let winv = QiSqrt5::new(p / &norm, -(q / &norm), Rational::zero(), Rational::zero());
        Ok(xbar.mul_impl(&winv))
    }

    pub fn checked_div(&self, y: &QiSqrt5) -> Result<QiSqrt5> {
        Ok(self.mul_impl(&y.checked_inverse()?))
    }

    /// Matrix of `z -> self * z` in the basis `{1, i, r5, i*r5}`; column `j`
    /// holds the image of the `j`-th basis vector.
    pub fn multiplication_matrix(&self) -> [[Rational; 4]; 4] {
        let basis = [
            QiSqrt5::one(),
            QiSqrt5::i(),
            QiSqrt5::sqrt5(),
            QiSqrt5::i().mul_impl(&QiSqrt5::sqrt5()),
        ];
        let mut m: [[Rational; 4]; 4] = Default::default();
        for (j, b) in basis.iter().enumerate() {
            let img = self.mul_impl(b);
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = img.c[i].clone();
            }
        }
        m
    }

    /// Characteristic polynomial of the multiplication operator, computed with
    /// the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> CharPoly {
        let a = self.multiplication_matrix();
        let n = 4;
        let mut coeffs: [Rational; 5] = Default::default();
        coeffs[n] = Rational::one();
        let mut mk: [[Rational; 4]; 4] = Default::default();
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next: [[Rational; 4]; 4] = Default::default();
            for i in 0..n {
                for j in 0..n {
                    let mut s = Rational::zero();
                    for l in 0..n {
                        if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                            s += &a[i][l] * &mk[l][j];
                        }
                    }
                    if i == j {
                        s += &coeffs[n - k + 1];
                    }
                    next[i][j] = s;
                }
            }
            mk = next;
            let mut tr = Rational::zero();
            for i in 0..n {
                for l in 0..n {
                    tr += &a[i][l] * &mk[l][i];
                }
            }
            coeffs[n - k] = -tr / rat(k as i64, 1);
        }
        CharPoly { coeffs }
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.char_poly().is_integral()
    }

    /// Smallest `e >= 0` such that every coordinate of `2^e * self` has an odd
    /// reduced denominator.
    pub fn two_adic_defect(&self) -> u32 {
        self.c
            .iter()
            .map(|q| {
                let den = q.denom();
                let mut e = 0u32;
                let mut d = den.clone();
                let two = BigInt::from(2);
                while d.is_even() {
                    d /= &two;
                    e += 1;
                }
                e
            })
            .max()
            .unwrap_or(0)
    }

    pub fn scale_pow2(&self, k: u32) -> QiSqrt5 {
        let f = Rational::from_integer(BigInt::one() << k);
        QiSqrt5 {
            c: self.c.clone().map(|q| q * &f),
        }
    }

    /// Parse the four coordinate strings produced by [`QiSqrt5::coord_strings`].
    pub fn from_coord_strings<S: AsRef<str>>(parts: &[S]) -> Result<QiSqrt5> {
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected 4 coordinates, got {}", parts.len())));
        }
        let mut c: [Rational; 4] = Default::default();
        for (slot, p) in c.iter_mut().zip(parts) {
            *slot = parse_rational(p.as_ref())?;
        }
        Ok(QiSqrt5 { c })
    }

    pub fn coord_strings(&self) -> [String; 4] {
        self.c.clone().map(|q| q.to_string())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Zero for QiSqrt5 {
    fn zero() -> Self {
        QiSqrt5 {
            c: Default::default(),
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for QiSqrt5 {
    fn one() -> Self {
        QiSqrt5::from_rational(Rational::one())
    }
}

impl Add for QiSqrt5 {
    type Output = QiSqrt5;
    fn add(mut self, rhs: QiSqrt5) -> QiSqrt5 {
        self += &rhs;
        self
    }
}

impl Sub for QiSqrt5 {
    type Output = QiSqrt5;
    fn sub(mut self, rhs: QiSqrt5) -> QiSqrt5 {
        self -= &rhs;
        self
    }
}

impl<'a> AddAssign<&'a QiSqrt5> for QiSqrt5 {
    fn add_assign(&mut self, rhs: &'a QiSqrt5) {
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }
}

impl<'a> SubAssign<&'a QiSqrt5> for QiSqrt5 {
    fn sub_assign(&mut self, rhs: &'a QiSqrt5) {
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }
}

impl Mul for QiSqrt5 {
    type Output = QiSqrt5;
    fn mul(self, rhs: QiSqrt5) -> QiSqrt5 {
        self.mul_impl(&rhs)
    }
}

impl<'a> Mul<&'a QiSqrt5> for &'a QiSqrt5 {
    type Output = QiSqrt5;
    fn mul(self, rhs: &'a QiSqrt5) -> QiSqrt5 {
        self.mul_impl(rhs)
    }
}

impl Neg for QiSqrt5 {
    type Output = QiSqrt5;
    fn neg(self) -> QiSqrt5 {
        QiSqrt5 {
            c: self.c.map(|q| -q),
        }
    }
}

impl Field for QiSqrt5 {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }

    fn inverse(&self) -> Option<Self> {
        self.checked_inverse().ok()
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        QiSqrt5::ratio(numer, denom)
    }

    fn from_root4(r: Root4) -> Option<Self> {
        Some(QiSqrt5::from_root4(r))
    }

    fn to_scalar(&self) -> QiSqrt5 {
        self.clone()
    }

    fn from_scalar(x: &QiSqrt5) -> Option<Self> {
        Some(x.clone())
    }
}

impl fmt::Display for QiSqrt5 {
    /// Canonical rendering `a + b*i + c*r5 + d*i*r5`; zero coordinates are
    /// omitted and the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SUFFIX: [&str; 4] = ["", "*i", "*r5", "*i*r5"];
        let mut first = true;
        for (q, suffix) in self.c.iter().zip(SUFFIX) {
            if q.is_zero() {
                continue;
            }
            if first {
                write!(f, "{q}{suffix}")?;
                first = false;
            } else if q.is_negative() {
                write!(f, " - {}{suffix}", -q)?;
            } else {
                write!(f, " + {q}{suffix}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for QiSqrt5 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coord_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QiSqrt5 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(d)?;
        QiSqrt5::from_coord_strings(&parts).map_err(D::Error::custom)
    }
}
