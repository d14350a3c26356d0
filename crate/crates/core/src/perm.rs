//! Permutations of `{1..n}` in image-word form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 16;

/// A permutation of `{1..degree}`. Products compose right to left:
/// `(p * q)(k) = p(q(k))`.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    degree: u8,
    // 0-based images; entries at or past `degree` stay fixed so that derived
    // equality and hashing only see the meaningful prefix.
    img: [u8; MAX_DEGREE],
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

const IDENTITY_IMG: [u8; MAX_DEGREE] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15];

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        assert!((1..=MAX_DEGREE).contains(&degree), "unsupported degree {degree}");
        Perm {
            degree: degree as u8,
            img: IDENTITY_IMG,
        }
    }

    /// Build from 1-based images: `images[k]` is the image of `k + 1`.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut p = Perm::identity(n);
        let mut seen = [false; MAX_DEGREE];
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[v - 1] = true;
            p.img[k] = (v - 1) as u8;
        }
        Ok(p)
    }

    /// Product of the given cycles (1-based points), applied right to left.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        let mut acc = Perm::identity(degree);
        for cyc in cycles.iter().rev() {
            let c = Perm::single_cycle(degree, cyc)?;
            acc = c * acc;
        }
        Ok(acc)
    }

    fn single_cycle(degree: usize, cyc: &[usize]) -> Result<Perm> {
        let mut p = Perm::identity(degree);
        let mut seen = [false; MAX_DEGREE];
        for &x in cyc {
            if x == 0 || x > degree {
                return Err(Error::Parse(format!("point {x} outside 1..{degree}")));
            }
            if seen[x - 1] {
                return Err(Error::Parse(format!("point {x} repeated in cycle")));
            }
            seen[x - 1] = true;
        }
        for (k, &x) in cyc.iter().enumerate() {
            let y = cyc[(k + 1) % cyc.len()];
            p.img[x - 1] = (y - 1) as u8;
        }
        Ok(p)
    }

    /// Parse cycle notation such as `"(1 2 3)(4 5)"`, `"(12)(34)"` or `"id"`.
    ///
    /// Points inside a cycle are whitespace or comma separated; a cycle written
    /// without separators is read digit by digit (only sensible for degree < 10).
    pub fn parse(s: &str, degree: usize) -> Result<Perm> {
        let t = s.trim();
        if t.is_empty() || t == "id" || t == "()" {
            return if (1..=MAX_DEGREE).contains(&degree) {
                Ok(Perm::identity(degree))
            } else {
                Err(Error::UnsupportedDegree(degree))
            };
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let body = open[..close].trim();
            let points: Vec<usize> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
                body.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|w| !w.is_empty())
                    .map(|w| w.parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{w}`"))))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad point `{c}`")))
                    })
                    .collect::<Result<_>>()?
            };
            cycles.push(points);
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize + 1
    }

    /// 1-based image word.
    pub fn images(&self) -> Vec<usize> {
        self.img[..self.degree()].iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img == IDENTITY_IMG
    }

    pub fn compose(&self, q: &Perm) -> Result<Perm> {
        if self.degree != q.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: q.degree(),
            });
        }
        Ok(self.compose_unchecked(q))
    }

    #[inline]
    fn compose_unchecked(&self, q: &Perm) -> Perm {
        let mut img = IDENTITY_IMG;
        for k in 0..self.degree as usize {
            img[k] = self.img[q.img[k] as usize];
        }
        Perm {
            degree: self.degree,
            img,
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = IDENTITY_IMG;
        for k in 0..self.degree as usize {
            img[self.img[k] as usize] = k as u8;
        }
        Perm {
            degree: self.degree,
            img,
        }
    }

    /// `by * self * by^-1`.
    pub fn conjugate(&self, by: &Perm) -> Result<Perm> {
        by.compose(self)?.compose(&by.inverse())
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles(true).iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles(false).iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles(false).iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }

    /// Cycles as 1-based point lists, each starting at its least point.
    pub fn cycles(&self, include_fixed: bool) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push(k + 1);
                k = self.img[k] as usize;
            }
            if include_fixed || cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Embed into `S_degree` fixing the new points.
    pub fn pad(&self, degree: usize) -> Result<Perm> {
        if degree < self.degree() || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        Ok(Perm {
            degree: degree as u8,
            img: self.img,
        })
    }

    /// Whether every point above `k` is fixed.
    pub fn fixes_above(&self, k: usize) -> bool {
        (k..self.degree()).all(|j| self.img[j] as usize == j)
    }

    /// Restriction to `{1..k}`; the caller guarantees the set is invariant.
    pub fn restrict(&self, k: usize) -> Result<Perm> {
        if k == 0 || k > self.degree() || (0..k).any(|j| self.img[j] as usize >= k) {
            return Err(Error::NotSplit(format!("{self} does not preserve 1..{k}")));
        }
        let mut img = IDENTITY_IMG;
        img[..k].copy_from_slice(&self.img[..k]);
        Ok(Perm { degree: k as u8, img })
    }

    /// Relabel points through `map` (1-based; `map[k-1]` is the new name of `k`).
    /// Equivalent to conjugation by the renaming permutation.
    pub fn rename(&self, map: &Perm) -> Result<Perm> {
        self.conjugate(map)
    }
}

impl Mul for Perm {
    type Output = Perm;
    /// Right-to-left composition; panics on a degree mismatch (use
    /// [`Perm::compose`] for the fallible form).
    #[inline]
    fn mul(self, rhs: Perm) -> Perm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in permutation product");
        self.compose_unchecked(&rhs)
    }
}

impl<'a> Mul<&'a Perm> for &'a Perm {
    type Output = Perm;
    #[inline]
    fn mul(self, rhs: &'a Perm) -> Perm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in permutation product");
        self.compose_unchecked(rhs)
    }
}

impl Ord for Perm {
    /// Degree first, then lexicographic on image words.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.img[..self.degree()].cmp(&other.img[..other.degree()]))
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles(false);
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as `{"degree": n, "cycles": "(1 2 3)"}`.
#[derive(Serialize, Deserialize)]
struct PermRepr {
    degree: usize,
    cycles: String,
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr {
            degree: self.degree(),
            cycles: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PermRepr::deserialize(d)?;
        Perm::parse(&r.cycles, r.degree).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn basic_operations() {
        assert!((p("(12)", 4) * p("(12)", 4)).is_identity());
        assert_eq!(p("(1234)", 4).inverse(), p("(1432)", 4));
        assert_eq!(p("(354)", 5).conjugate(&p("(143)(52)", 5)).unwrap(), p("(123)", 5));
    }

    #[test]
    fn composition_is_right_to_left() {
        // (12)(34) * (12)(35): 3 -> 5 -> 5, 5 -> 3 -> 4, 4 -> 4 -> 3
        assert_eq!(p("(12)(34)", 5) * p("(12)(35)", 5), p("(354)", 5));
    }

    #[test]
    fn degree_mismatch() {
        assert_eq!(
            p("(12)", 3).compose(&p("(12)", 4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn cycle_type_and_parity() {
        assert_eq!(p("(12)(34)", 5).cycle_type(), vec![2, 2, 1]);
        assert_eq!(p("(12)(34)", 5).parity(), Parity::Even);
        assert_eq!(p("(12345)", 5).cycle_type(), vec![5]);
        assert_eq!(p("(12345)", 5).parity(), Parity::Even);
        assert_eq!(p("(1234)", 6).cycle_type(), vec![4, 1, 1]);
        assert_eq!(p("(1234)", 6).parity(), Parity::Odd);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("(1 2 3)(4 5)", 6).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("(45)(123)", 6).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("id", 3).to_string(), "id");
        assert_eq!(p("(9 10)", 10).apply(9), 10);
        assert!(Perm::parse("(1 1)", 3).is_err());
        assert!(Perm::parse("(1 4)", 3).is_err());
        assert!(Perm::parse("1 2", 3).is_err());
    }

    #[test]
    fn pad_restrict_rename() {
        let q = p("(123)", 4).pad(8).unwrap();
        assert_eq!(q, p("(123)", 8));
        assert_eq!(q.restrict(4).unwrap(), p("(123)", 4));
        assert!(p("(45)", 8).restrict(4).is_err());
        // 1->3, 2->4, 3->5, 4->6, 5->1, 6->2
        let map = Perm::from_images(&[3, 4, 5, 6, 1, 2, 7, 8]).unwrap();
        assert_eq!(p("(12)(34)", 8).rename(&map).unwrap(), p("(34)(56)", 8));
    }

    #[test]
    fn order_is_lexicographic() {
        let mut v = vec![p("(12)", 3), p("id", 3), p("(123)", 3), p("(13)", 3)];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.images().iter().map(|d| d.to_string()).collect()).collect();
        assert_eq!(shown, ["123", "213", "231", "321"]);
    }

    #[test]
    fn serde_round_trip() {
        let x = p("(1 3)(2 5 4)", 6);
        let s = serde_json::to_string(&x).unwrap();
        let y: Perm = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
