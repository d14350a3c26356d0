use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::element::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::perm::Perm;

/// A sparse element of the `K`-fold tensor power of `F[S_n]`.
#[derive(Clone, PartialEq)]
pub struct Tensor<F, const K: usize> {
    degree: usize,
    terms: FxHashMap<[Perm; K], F>,
}

pub type Tensor2<F> = Tensor<F, 2>;
pub type Tensor3<F> = Tensor<F, 3>;

#[inline]
fn key_mul<const K: usize>(a: &[Perm; K], b: &[Perm; K]) -> [Perm; K] {
    std::array::from_fn(|j| a[j] * b[j])
}

impl<F: Field, const K: usize> Tensor<F, K> {
    pub fn zero(degree: usize) -> Self {
        Tensor {
            degree,
            terms: FxHashMap::default(),
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(F::one(), [Perm::identity(degree); K])
    }

    pub fn monomial(c: F, key: [Perm; K]) -> Self {
        let mut t = Self::zero(key[0].degree());
        t.add_term(key, &c);
        t
    }

    pub(crate) fn from_map(degree: usize, mut terms: FxHashMap<[Perm; K], F>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Tensor { degree, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ([Perm; K], F)>>(degree: usize, terms: I) -> Result<Self> {
        let mut t = Self::zero(degree);
        for (key, c) in terms {
            if let Some(g) = key.iter().find(|g| g.degree() != degree) {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            t.add_term(key, &c);
        }
        Ok(t)
    }

    /// `a_1 (x) ... (x) a_K`.
    pub fn outer(legs: [&GroupAlgebraElement<F>; K]) -> Result<Self> {
        let degree = legs[0].degree();
        if let Some(a) = legs.iter().find(|a| a.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: a.degree(),
            });
        }
        let mut partial: Vec<(Vec<Perm>, F)> = vec![(Vec::new(), F::one())];
        for a in legs {
            let mut next = Vec::with_capacity(partial.len() * a.len());
            for (k, c) in &partial {
                for (g, x) in a.iter() {
                    let mut k2 = k.clone();
                    k2.push(*g);
                    next.push((k2, c.mul_ref(x)));
                }
            }
            partial = next;
        }
        Self::from_terms(
            degree,
            partial.into_iter().map(|(k, c)| (std::array::from_fn(|j| k[j]), c)),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[Perm; K]) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Perm; K], &F)> {
        self.terms.iter()
    }

    pub fn sorted_terms(&self) -> Vec<([Perm; K], F)> {
        let mut v: Vec<([Perm; K], F)> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub(crate) fn add_term(&mut self, key: [Perm; K], c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (k, x) in &other.terms {
            self.add_term(*k, &x.mul_ref(c));
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &-c.clone());
        }
        Ok(out)
    }

    /// Componentwise product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: FxHashMap<[Perm; K], F> = FxHashMap::default();
        acc.reserve(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let key = key_mul(a, b);
                let c = x.mul_ref(y);
                match acc.get_mut(&key) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.degree, acc))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Tensor {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, x)| (*k, x.mul_ref(c))).collect(),
        }
    }

    /// `(g_1 (x) ... (x) g_K) * self`.
    pub fn left_translate(&self, gs: &[Perm; K]) -> Self {
        Tensor {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (key_mul(gs, k), c.clone())).collect(),
        }
    }

    /// `self * (g_1 (x) ... (x) g_K)`.
    pub fn right_translate(&self, gs: &[Perm; K]) -> Self {
        Tensor {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (key_mul(k, gs), c.clone())).collect(),
        }
    }

    /// Apply a map on basis keys, extended linearly.
    pub fn map_keys<G: Fn(&[Perm; K]) -> [Perm; K]>(&self, f: G) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, c) in &self.terms {
            out.add_term(f(k), c);
        }
        out
    }

    /// Apply a fallible map on basis keys; the output degree may change.
    pub fn try_map_keys<G: Fn(&[Perm; K]) -> Result<[Perm; K]>>(&self, degree: usize, f: G) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (k, c) in &self.terms {
            out.add_term(f(k)?, c);
        }
        Ok(out)
    }

    /// Antipode applied to every leg.
    pub fn antipode_all(&self) -> Self {
        self.map_keys(|k| std::array::from_fn(|j| k[j].inverse()))
    }

    /// Multiply all legs together: `g_1 g_2 ... g_K`.
    pub fn multiply_legs(&self) -> GroupAlgebraElement<F> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (k, c) in &self.terms {
            let mut g = k[0];
            for h in &k[1..] {
                g = g * *h;
            }
            out.add_term(g, c);
        }
        out
    }

    pub fn convert<G: Field>(&self) -> Result<Tensor<G, K>> {
        let mut out = Tensor::<G, K>::zero(self.degree);
        for (k, c) in &self.terms {
            let s = c.to_scalar();
            let v = G::from_scalar(&s).ok_or_else(|| Error::NotRepresentable(s.to_string()))?;
            out.add_term(*k, &v);
        }
        Ok(out)
    }

    pub fn to_repr(&self) -> TensorRepr {
        TensorRepr {
            degree: self.degree,
            legs: K,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(k, c)| TensorTermRepr {
                    perms: k.iter().map(Perm::to_string).collect(),
                    coeff: c.to_scalar(),
                })
                .collect(),
        }
    }

    pub fn from_repr(r: &TensorRepr) -> Result<Self> {
        if r.legs != K {
            return Err(Error::Parse(format!("expected {K} tensor legs, found {}", r.legs)));
        }
        let mut out = Self::zero(r.degree);
        for t in &r.terms {
            if t.perms.len() != K {
                return Err(Error::Parse(format!("term with {} legs", t.perms.len())));
            }
            let mut key = [Perm::identity(r.degree); K];
            for (j, s) in t.perms.iter().enumerate() {
                key[j] = Perm::parse(s, r.degree)?;
            }
            let c = F::from_scalar(&t.coeff).ok_or_else(|| Error::NotRepresentable(t.coeff.to_string()))?;
            out.add_term(key, &c);
        }
        Ok(out)
    }
}

impl<F: Field> Tensor<F, 2> {
    /// `tau(a (x) b) = b (x) a`.
    pub fn flip(&self) -> Self {
        self.map_keys(|k| [k[1], k[0]])
    }

    /// `(Delta (x) Id)`.
    pub fn coproduct_left(&self) -> Tensor3<F> {
        Tensor3::from_map(self.degree, self.terms.iter().map(|(k, c)| ([k[0], k[0], k[1]], c.clone())).collect())
    }

    /// `(Id (x) Delta)`.
    pub fn coproduct_right(&self) -> Tensor3<F> {
        Tensor3::from_map(self.degree, self.terms.iter().map(|(k, c)| ([k[0], k[1], k[1]], c.clone())).collect())
    }

    /// `1 (x) self`.
    pub fn with_one_left(&self) -> Tensor3<F> {
        let id = Perm::identity(self.degree);
        Tensor3::from_map(self.degree, self.terms.iter().map(|(k, c)| ([id, k[0], k[1]], c.clone())).collect())
    }

    /// `self (x) 1`.
    pub fn with_one_right(&self) -> Tensor3<F> {
        let id = Perm::identity(self.degree);
        Tensor3::from_map(self.degree, self.terms.iter().map(|(k, c)| ([k[0], k[1], id], c.clone())).collect())
    }

    /// `(epsilon (x) Id)`.
    pub fn counit_left(&self) -> GroupAlgebraElement<F> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (k, c) in &self.terms {
            out.add_term(k[1], c);
        }
        out
    }

    /// `(Id (x) epsilon)`.
    pub fn counit_right(&self) -> GroupAlgebraElement<F> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (k, c) in &self.terms {
            out.add_term(k[0], c);
        }
        out
    }

    /// `sum S(a) b` over the terms `a (x) b`.
    pub fn antipode_left_multiply(&self) -> GroupAlgebraElement<F> {
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (k, c) in &self.terms {
            out.add_term(k[0].inverse() * k[1], c);
        }
        out
    }
}

impl<F: Field, const K: usize> fmt::Display for Tensor<F, K> {
    /// `c*[g_1 | ... | g_K] + ...` in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let cs = c.to_scalar().to_string();
            let shown = if cs.contains(' ') { format!("({cs})") } else { cs };
            let legs: Vec<String> = k.iter().map(Perm::to_string).collect();
            write!(f, "{shown}*[{}]", legs.join(" | "))?;
        }
        Ok(())
    }
}

impl<F: Field, const K: usize> fmt::Debug for Tensor<F, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a, F: Field, const K: usize> $tr<&'a Tensor<F, K>> for &'a Tensor<F, K> {
            type Output = Tensor<F, K>;
            fn $method(self, rhs: &'a Tensor<F, K>) -> Tensor<F, K> {
                self.$inner(rhs).expect("degree mismatch in tensor operation")
            }
        }
        impl<F: Field, const K: usize> $tr for Tensor<F, K> {
            type Output = Tensor<F, K>;
            fn $method(self, rhs: Tensor<F, K>) -> Tensor<F, K> {
                self.$inner(&rhs).expect("degree mismatch in tensor operation")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field, const K: usize> Neg for Tensor<F, K> {
    type Output = Tensor<F, K>;
    fn neg(self) -> Self {
        self.scale(&-F::one())
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TensorRepr {
    pub degree: usize,
    pub legs: usize,
    pub terms: Vec<TensorTermRepr>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TensorTermRepr {
    pub perms: Vec<String>,
    pub coeff: QiSqrt5,
}
