use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::tensor::{Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::perm::Perm;

/// A sparse element `sum c_g g` of the group algebra `F[S_n]`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// algebra elements.
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraElement<F> {
    degree: usize,
    terms: FxHashMap<Perm, F>,
}

impl<F: Field> GroupAlgebraElement<F> {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: FxHashMap::default(),
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::basis(Perm::identity(degree))
    }

    pub fn basis(g: Perm) -> Self {
        let mut terms = FxHashMap::default();
        terms.insert(g, F::one());
        GroupAlgebraElement {
            degree: g.degree(),
            terms,
        }
    }

    pub fn monomial(c: F, g: Perm) -> Self {
        let mut a = Self::zero(g.degree());
        a.add_term(g, &c);
        a
    }

    /// Sum of `c * g` over the given terms; repeated permutations accumulate.
    pub fn from_terms<I: IntoIterator<Item = (Perm, F)>>(degree: usize, terms: I) -> Result<Self> {
        let mut a = Self::zero(degree);
        for (g, c) in terms {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            a.add_term(g, &c);
        }
        Ok(a)
    }

    /// Sum of the listed permutations with coefficient `c` each.
    pub fn uniform(degree: usize, c: F, perms: &[Perm]) -> Result<Self> {
        Self::from_terms(degree, perms.iter().map(|g| (*g, c.clone())))
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

    pub fn coeff(&self, g: &Perm) -> F {
        self.terms.get(g).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, &F)> {
        self.terms.iter()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(Perm, F)> {
        let mut v: Vec<(Perm, F)> = self.terms.iter().map(|(g, c)| (*g, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn support(&self) -> Vec<Perm> {
        let mut v: Vec<Perm> = self.terms.keys().copied().collect();
        v.sort();
        v
    }

    pub(crate) fn add_term(&mut self, g: Perm, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (g, x) in &other.terms {
            self.add_term(*g, &x.mul_ref(c));
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
        for (g, c) in &other.terms {
            out.add_term(*g, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, &-c.clone());
        }
        Ok(out)
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: FxHashMap<Perm, F> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len());
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                let c = a.mul_ref(b);
                match acc.get_mut(&(*g * *h)) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(*g * *h, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement {
            degree: self.degree,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(g, x)| (*g, x.mul_ref(c))).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.degree);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `g * self`.
    pub fn left_translate(&self, g: &Perm) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(h, c)| (*g * *h, c.clone())).collect(),
        }
    }

    /// `self * g`.
    pub fn right_translate(&self, g: &Perm) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(h, c)| (*h * *g, c.clone())).collect(),
        }
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Perm) -> Self {
        let gi = g.inverse();
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(h, c)| (*g * *h * gi, c.clone())).collect(),
        }
    }

    /// Apply a point relabelling to every permutation in the support.
    pub fn rename(&self, map: &Perm) -> Result<Self> {
        let mut out = Self::zero(self.degree);
        for (g, c) in &self.terms {
            out.add_term(g.rename(map)?, c);
        }
        Ok(out)
    }

    /// Re-embed into a larger symmetric group.
    pub fn pad(&self, degree: usize) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (g, c) in &self.terms {
            out.add_term(g.pad(degree)?, c);
        }
        Ok(out)
    }

    /// `Delta(g) = g (x) g`, extended linearly.
    pub fn coproduct(&self) -> Tensor2<F> {
        Tensor2::from_map(self.degree, self.terms.iter().map(|(g, c)| ([*g, *g], c.clone())).collect())
    }

    /// `(Delta (x) Id) Delta`.
    pub fn coproduct3(&self) -> Tensor3<F> {
        Tensor3::from_map(self.degree, self.terms.iter().map(|(g, c)| ([*g, *g, *g], c.clone())).collect())
    }

    /// `epsilon(g) = 1`, extended linearly.
    pub fn counit(&self) -> F {
        let mut s = F::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// `S(g) = g^-1`, extended linearly.
    pub fn antipode(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(g, c)| (g.inverse(), c.clone())).collect(),
        }
    }

    /// Inverse in the group algebra, by Gauss-Jordan elimination on the
    /// matrix of left multiplication restricted to the subgroup generated by
    /// the support. `None` when the element is a zero divisor.
    pub fn inverse(&self) -> Option<Self> {
        let gens = self.support();
        let group = crate::subgroup::SubgroupTable::generate(self.degree, &gens).ok()?;
        let elems = group.elements();
        let n = elems.len();
        let index: FxHashMap<Perm, usize> = elems.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        // Solve self * x = 1: column j of the matrix is self * elems[j].
        let mut m: Vec<Vec<F>> = vec![vec![F::zero(); n + 1]; n];
        for (j, h) in elems.iter().enumerate() {
            for (g, c) in &self.terms {
                m[index[&(*g * *h)]][j] += c;
            }
        }
        m[index[&Perm::identity(self.degree)]][n] = F::one();
        let sol = crate::linalg::solve_square(m)?;
        Self::from_terms(self.degree, elems.iter().copied().zip(sol)).ok()
    }

    /// Change of coefficient field.
    pub fn convert<G: Field>(&self) -> Result<GroupAlgebraElement<G>> {
        let mut out = GroupAlgebraElement::<G>::zero(self.degree);
        for (g, c) in &self.terms {
            let s = c.to_scalar();
            let v = G::from_scalar(&s).ok_or_else(|| Error::NotRepresentable(s.to_string()))?;
            out.add_term(*g, &v);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for GroupAlgebraElement<F> {
    /// `c1*(perm1) + c2*(perm2) + ...` in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let s = c.to_scalar();
            let cs = s.to_string();
            let shown = if cs.contains(' ') { format!("({cs})") } else { cs };
            let gs = g.to_string();
            if gs == "id" {
                write!(f, "{shown}*id")?;
            } else {
                write!(f, "{shown}*{gs}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for GroupAlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a, F: Field> $tr<&'a GroupAlgebraElement<F>> for &'a GroupAlgebraElement<F> {
            type Output = GroupAlgebraElement<F>;
            /// Panics on a degree mismatch; the `try_` form returns an error instead.
            fn $method(self, rhs: &'a GroupAlgebraElement<F>) -> GroupAlgebraElement<F> {
                self.$inner(rhs).expect("degree mismatch in group algebra operation")
            }
        }
        impl<F: Field> $tr for GroupAlgebraElement<F> {
            type Output = GroupAlgebraElement<F>;
            fn $method(self, rhs: GroupAlgebraElement<F>) -> GroupAlgebraElement<F> {
                self.$inner(&rhs).expect("degree mismatch in group algebra operation")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for GroupAlgebraElement<F> {
    type Output = GroupAlgebraElement<F>;
    fn neg(self) -> Self {
        self.scale(&-F::one())
    }
}

/// JSON form: degree plus canonical term list with coordinate-array scalars.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ElementRepr {
    pub degree: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TermRepr {
    pub perm: String,
    pub coeff: QiSqrt5,
}

impl<F: Field> GroupAlgebraElement<F> {
    pub fn to_repr(&self) -> ElementRepr {
        ElementRepr {
            degree: self.degree,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(g, c)| TermRepr {
                    perm: g.to_string(),
                    coeff: c.to_scalar(),
                })
                .collect(),
        }
    }

    pub fn from_repr(r: &ElementRepr) -> Result<Self> {
        let mut out = Self::zero(r.degree);
        for t in &r.terms {
            let g = Perm::parse(&t.perm, r.degree)?;
            let c = F::from_scalar(&t.coeff).ok_or_else(|| Error::NotRepresentable(t.coeff.to_string()))?;
            out.add_term(g, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::field::Rational;
    use crate::{AlgElt, Scalar};

    fn p(s: &str) -> Perm {
        Perm::parse(s, 4).unwrap()
    }

    fn half_minus(g: &str) -> AlgElt {
        AlgElt::from_terms(4, [(p("id"), Scalar::ratio(1, 2)), (p(g), Scalar::ratio(-1, 2))]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = half_minus("(123)") + AlgElt::monomial(Scalar::i(), p("(14)"));
        assert_eq!(&AlgElt::one(4) * &a, a);
        assert_eq!(&a * &AlgElt::one(4), a);
    }

    #[test]
    fn half_difference_is_idempotent() {
        let x = half_minus("(12)(34)");
        assert_eq!(&x * &x, x);
    }

    #[test]
    fn zero_terms_are_purged() {
        let a = AlgElt::from_terms(4, [(p("(12)"), Scalar::one()), (p("(12)"), -Scalar::one())]).unwrap();
        assert!(a.is_zero());
        assert_eq!(a, AlgElt::zero(4));
    }

    #[test]
    fn degree_mismatch_errors() {
        let a = AlgElt::one(4);
        let b = AlgElt::one(5);
        assert!(matches!(a.try_mul(&b), Err(Error::DegreeMismatch { .. })));
        assert!(AlgElt::from_terms(4, [(Perm::identity(3), Scalar::one())]).is_err());
    }

    #[test]
    fn hopf_structure_on_basis() {
        let g = AlgElt::basis(p("(123)"));
        let d = g.coproduct();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&[p("(123)"), p("(123)")]), Scalar::one());
        assert_eq!(g.counit(), Scalar::one());
        assert_eq!(g.antipode(), AlgElt::basis(p("(132)")));
    }

    #[test]
    fn inverse_in_group_algebra() {
        // id + (12)/2 is invertible; id - (12) is a zero divisor
        let a = AlgElt::from_terms(4, [(p("id"), Scalar::one()), (p("(12)"), Scalar::ratio(1, 2))]).unwrap();
        let ai = a.inverse().unwrap();
        assert_eq!(&a * &ai, AlgElt::one(4));
        let z = AlgElt::from_terms(4, [(p("id"), Scalar::one()), (p("(12)"), -Scalar::one())]).unwrap();
        assert!(z.inverse().is_none());
    }

    #[test]
    fn display_is_canonical() {
        let x = half_minus("(12)(34)");
        assert_eq!(x.to_string(), "1/2*id + -1/2*(1 2)(3 4)");
    }

    #[test]
    fn convert_between_fields() {
        let x = half_minus("(12)(34)");
        let r: GroupAlgebraElement<Rational> = x.convert().unwrap();
        assert_eq!(r.convert::<Scalar>().unwrap(), x);
        assert!(AlgElt::monomial(Scalar::i(), p("id")).convert::<Rational>().is_err());
    }

    #[test]
    fn repr_round_trip() {
        let x = half_minus("(12)(34)") + AlgElt::monomial(Scalar::golden(), p("(1432)"));
        let back = AlgElt::from_repr(&x.to_repr()).unwrap();
        assert_eq!(back, x);
    }
}
