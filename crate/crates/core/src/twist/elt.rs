use serde::Serialize;

use super::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5, Root4};
use crate::groupalg::{GroupAlgebraElement, LinChar, Tensor2, Tensor3, TwoGroup};
use crate::perm::Perm;
use crate::subgroup::SubgroupTable;

/// Outcome of checking the twist and counit identities on a tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistAxiomReport {
    pub invertible: bool,
    pub pentagon: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub counterexample: Option<String>,
}

impl TwistAxiomReport {
    pub fn passed(&self) -> bool {
        self.invertible && self.pentagon && self.counit_left && self.counit_right
    }
}

/// `J_omega = sum omega(phi, psi) e_phi (x) e_psi` with its inverse.
#[derive(Clone)]
pub struct TwistElt<F> {
    m: TwoGroup,
    cocycle: Cocycle,
    value: Tensor2<F>,
    inverse: Tensor2<F>,
    report: TwistAxiomReport,
}

fn gauss<F: Field>(re: i64, im: i64, den: i64) -> Result<F> {
    let mut x = F::from_ratio(re, den);
    if im != 0 {
        let i = F::from_root4(Root4::I).ok_or_else(|| Error::NotRepresentable("i".into()))?;
        x = x + i * F::from_ratio(im, den);
    }
    Ok(x)
}

/// In-place Walsh-Hadamard transform on Gaussian integers.
fn walsh_hadamard(v: &mut [(i64, i64)], stride: usize, len: usize) {
    let mut h = 1;
    while h < len {
        for start in (0..len).step_by(2 * h) {
            for k in start..start + h {
                let a = v[k * stride];
                let b = v[(k + h) * stride];
                v[k * stride] = (a.0 + b.0, a.1 + b.1);
                v[(k + h) * stride] = (a.0 - b.0, a.1 - b.1);
            }
        }
        h *= 2;
    }
}

fn root_to_gauss(r: Root4) -> (i64, i64) {
    match r.exponent() {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

/// `sum f(a, b) e_a (x) e_b` over `M`, expanded in the group basis.
pub fn twist_tensor<F: Field, G: Fn(u32, u32) -> Root4>(m: &TwoGroup, f: G) -> Result<Tensor2<F>> {
    let n = m.order();
    let mut h: Vec<(i64, i64)> = Vec::with_capacity(n * n);
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            h.push(root_to_gauss(f(a, b)));
        }
    }
    for row in 0..n {
        walsh_hadamard(&mut h[row * n..], 1, n);
    }
    for col in 0..n {
        walsh_hadamard(&mut h[col..], n, n);
    }
    let den = (n * n) as i64;
    let mut terms = Vec::new();
    for g in 0..n {
        for d in 0..n {
            let (re, im) = h[g * n + d];
            if re != 0 || im != 0 {
                terms.push(([m.element(g as u32), m.element(d as u32)], gauss::<F>(re, im, den)?));
            }
        }
    }
    Tensor2::from_terms(m.degree(), terms)
}

/// Verify `(1 (x) J)(Id (x) Delta)(J) = (J (x) 1)(Delta (x) Id)(J)`, the counit
/// conditions, and `J J^-1 = 1 (x) 1` when an inverse is supplied.
pub fn check_twist_axioms<F: Field>(j: &Tensor2<F>, inverse: Option<&Tensor2<F>>) -> TwistAxiomReport {
    let n = j.degree();
    let lhs = j.with_one_left() * j.coproduct_right();
    let rhs = j.with_one_right() * j.coproduct_left();
    let one = GroupAlgebraElement::one(n);
    let counit_left = j.counit_left() == one;
    let counit_right = j.counit_right() == one;
    let invertible = inverse.is_none_or(|ji| (j * ji) == Tensor2::one(n) && (ji * j) == Tensor2::one(n));
    let mut counterexample = None;
    if lhs != rhs {
        let diff = &lhs - &rhs;
        if let Some((k, c)) = diff.sorted_terms().into_iter().next() {
            counterexample = Some(format!(
                "pentagon differs at [{} | {} | {}] by {}",
                k[0],
                k[1],
                k[2],
                c.to_scalar()
            ));
        }
    } else if !counit_left || !counit_right {
        counterexample = Some("counit condition fails".into());
    } else if !invertible {
        counterexample = Some("J J^-1 differs from 1 (x) 1".into());
    }
    TwistAxiomReport {
        invertible,
        pentagon: lhs == rhs,
        counit_left,
        counit_right,
        counterexample,
    }
}

/// `left * (Delta a) * right`.
pub fn sandwich<F: Field>(left: &Tensor2<F>, a: &GroupAlgebraElement<F>, right: &Tensor2<F>) -> Tensor2<F> {
    let mut acc = Tensor2::zero(a.degree());
    for (g, c) in a.iter() {
        let part = left.right_translate(&[*g, *g]) * right.clone();
        acc.add_scaled(&part, c);
    }
    acc
}

impl<F: Field> std::fmt::Debug for TwistElt<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TwistElt({}: {})", self.cocycle.name(), self.value)
    }
}

impl<F: Field> TwistElt<F> {
    /// Builds `J` and `J^-1` from the cocycle values and checks the twist axioms.
    pub fn build(m: &TwoGroup, cocycle: &Cocycle) -> Result<TwistElt<F>> {
        if cocycle.rank() != m.rank() || cocycle.order() != m.order() {
            return Err(Error::RankMismatch(cocycle.rank(), m.rank()));
        }
        let value = twist_tensor(m, |a, b| cocycle.value(a, b))?;
        let inverse = twist_tensor(m, |a, b| cocycle.value(a, b).inv())?;
        let report = check_twist_axioms(&value, Some(&inverse));
        if !report.passed() {
            return Err(Error::TwistAxioms(report.counterexample.clone().unwrap_or_default()));
        }
        Ok(TwistElt {
            m: m.clone(),
            cocycle: cocycle.clone(),
            value,
            inverse,
            report,
        })
    }

    pub fn subgroup(&self) -> &TwoGroup {
        &self.m
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn value(&self) -> &Tensor2<F> {
        &self.value
    }

    pub fn inverse(&self) -> &Tensor2<F> {
        &self.inverse
    }

    pub fn degree(&self) -> usize {
        self.m.degree()
    }

    pub fn axiom_report(&self) -> &TwistAxiomReport {
        &self.report
    }

    pub fn idempotent(&self, phi: &LinChar) -> GroupAlgebraElement<F> {
        self.m.idempotent(phi)
    }

    /// `Delta_J(a) = J Delta(a) J^-1`.
    pub fn twisted_coproduct(&self, a: &GroupAlgebraElement<F>) -> Tensor2<F> {
        sandwich(&self.value, a, &self.inverse)
    }

    /// `(Delta_J (x) Id) Delta_J (a)`, computed as
    /// `(J (x) 1)(Delta (x) Id)(J) Delta^2(a) (Delta (x) Id)(J^-1)(J^-1 (x) 1)`.
    pub fn twisted_coproduct3_left(&self, a: &GroupAlgebraElement<F>) -> Tensor3<F> {
        let left = self.value.with_one_right() * self.value.coproduct_left();
        let right = self.inverse.coproduct_left() * self.inverse.with_one_right();
        sandwich3(&left, a, &right)
    }

    /// `(Id (x) Delta_J) Delta_J (a)`.
    pub fn twisted_coproduct3_right(&self, a: &GroupAlgebraElement<F>) -> Tensor3<F> {
        let left = self.value.with_one_left() * self.value.coproduct_right();
        let right = self.inverse.coproduct_right() * self.inverse.with_one_left();
        sandwich3(&left, a, &right)
    }

    /// `U_J = sum J1 S(J2)` and its inverse `sum S(Jinv1) Jinv2`, checked to
    /// multiply to the identity.
    pub fn u_element(&self) -> Result<(GroupAlgebraElement<F>, GroupAlgebraElement<F>)> {
        let n = self.degree();
        let mut u = GroupAlgebraElement::zero(n);
        for (k, c) in self.value.iter() {
            u.add_term(k[0] * k[1].inverse(), c);
        }
        let u_inv = self.inverse.antipode_left_multiply();
        let one = GroupAlgebraElement::one(n);
        if &u * &u_inv != one || &u_inv * &u != one {
            return Err(Error::NotInvertible(format!("U_J = {u}")));
        }
        Ok((u, u_inv))
    }

    /// `S_J(a) = U_J S(a) U_J^-1`.
    pub fn twisted_antipode(&self, a: &GroupAlgebraElement<F>) -> Result<GroupAlgebraElement<F>> {
        let (u, ui) = self.u_element()?;
        Ok(&(&u * &a.antipode()) * &ui)
    }

    /// `Delta_J(g) = g (x) g`, decided by `J` commuting with `g (x) g`.
    pub fn is_group_like(&self, g: &Perm) -> bool {
        let gi = g.inverse();
        self.value.iter().all(|(k, c)| {
            let key = [*g * k[0] * gi, *g * k[1] * gi];
            self.value.coeff(&key) == *c
        })
    }

    pub fn group_like_elements(&self, group: &SubgroupTable) -> Vec<Perm> {
        group.elements().iter().copied().filter(|g| self.is_group_like(g)).collect()
    }

    /// `(pi (x) pi)(J)` for the projection `S_k x Q -> S_k` restricting to the
    /// points `1..k`, checked against the twist of the cocycle restricted to
    /// the characters of the factor acting on `1..k`.
    pub fn project(&self, k: usize) -> Result<TwistElt<F>> {
        let mut p_idx = Vec::new();
        for (j, t) in self.m.generators().iter().enumerate() {
            let low = t.fixes_above(k);
            let high = (1..=k).all(|x| t.apply(x) == x);
            match (low, high) {
                (true, false) => p_idx.push(j),
                (false, true) => {}
                _ => return Err(Error::NotSplit(format!("generator {t} acts on both sides of {k}"))),
            }
        }
        let p_gens: Vec<Perm> = p_idx.iter().map(|j| self.m.generators()[*j].restrict(k)).collect::<Result<_>>()?;
        let p = TwoGroup::new(k, &p_gens)?;
        let spread = |a: u32| p_idx.iter().enumerate().fold(0u32, |m, (b, j)| m | ((a >> b & 1) << j));
        let dom = Cocycle::full_domain(p.rank());
        let restricted = Cocycle::from_fn(&format!("{}|P", self.cocycle.name()), p.rank(), &dom, |a, b| {
            self.cocycle.value(spread(a), spread(b))
        })?;
        let projected = self.value.try_map_keys(k, |key| Ok([key[0].restrict(k)?, key[1].restrict(k)?]))?;
        let built = TwistElt::build(&p, &restricted)?;
        if built.value != projected {
            return Err(Error::Mismatch {
                label: "projected twist".into(),
                expected: built.value.to_string(),
                computed: projected.to_string(),
            });
        }
        Ok(built)
    }
}

/// `left * Delta^2(a) * right`.
pub fn sandwich3<F: Field>(left: &Tensor3<F>, a: &GroupAlgebraElement<F>, right: &Tensor3<F>) -> Tensor3<F> {
    let mut acc = Tensor3::zero(a.degree());
    for (g, c) in a.iter() {
        let part = left.right_translate(&[*g, *g, *g]) * right.clone();
        acc.add_scaled(&part, c);
    }
    acc
}

/// `v = sum q(phi) e_phi` and `v^-1 = sum q(phi)^-1 e_phi`.
pub fn cohomologous_v<F: Field>(m: &TwoGroup, q: &[QiSqrt5]) -> Result<(GroupAlgebraElement<F>, GroupAlgebraElement<F>)> {
    if q.len() != m.order() {
        return Err(Error::Parse(format!("q needs {} values", m.order())));
    }
    let conv = |x: &QiSqrt5| F::from_scalar(x).ok_or_else(|| Error::NotRepresentable(x.to_string()));
    let mut v = GroupAlgebraElement::zero(m.degree());
    let mut vi = GroupAlgebraElement::zero(m.degree());
    for phi in m.characters() {
        let e: GroupAlgebraElement<F> = m.idempotent(&phi);
        let qv = &q[phi.bits as usize];
        v.add_scaled(&e, &conv(qv)?);
        vi.add_scaled(&e, &conv(&qv.checked_inverse()?)?);
    }
    Ok((v, vi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub twist_identity: bool,
    pub samples: usize,
    pub samples_passed: usize,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.twist_identity && self.samples == self.samples_passed
    }
}

/// Checks `J' = (v (x) v) J Delta(v^-1)` and, for each sample `h`,
/// `Delta_{J'}(v h v^-1) = (f (x) f)(Delta_J(h))` with `f(x) = v x v^-1`.
pub fn transport_check<F: Field>(
    j: &TwistElt<F>,
    j2: &TwistElt<F>,
    v: &GroupAlgebraElement<F>,
    v_inv: &GroupAlgebraElement<F>,
    samples: &[GroupAlgebraElement<F>],
) -> Result<TransportReport> {
    let n = j.degree();
    if v * v_inv != GroupAlgebraElement::one(n) {
        return Err(Error::NotInvertible(v.to_string()));
    }
    let vv = Tensor2::outer([v, v])?;
    let vv_inv = Tensor2::outer([v_inv, v_inv])?;
    let twist_identity = *j2.value() == &vv * &(j.value() * &v_inv.coproduct());
    // Delta_{J'}(v h v^-1) = J' Delta(v) Delta(h) Delta(v^-1) J'^-1
    let left2 = j2.value() * &v.coproduct();
    let right2 = &v_inv.coproduct() * j2.inverse();
    // (f (x) f)(Delta_J h) = (v (x) v) J Delta(h) J^-1 (v^-1 (x) v^-1)
    let left1 = &vv * j.value();
    let right1 = j.inverse() * &vv_inv;
    let mut ok = 0;
    for h in samples {
        if sandwich(&left2, h, &right2) == sandwich(&left1, h, &right1) {
            ok += 1;
        }
    }
    Ok(TransportReport {
        twist_identity,
        samples: samples.len(),
        samples_passed: ok,
    })
}

/// Group-like test by brute force: `Delta_J(g) == g (x) g`.
pub fn is_group_like_direct<F: Field>(j: &TwistElt<F>, g: &Perm) -> bool {
    j.twisted_coproduct(&GroupAlgebraElement::basis(*g)) == Tensor2::monomial(F::one(), [*g, *g])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::twist::builtin;
    use crate::{AlgElt, Scalar};

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn half(sign: i64, g: &str, n: usize) -> AlgElt {
        AlgElt::from_terms(n, [(Perm::identity(n), Scalar::ratio(1, 2)), (p(g, n), Scalar::ratio(sign, 2))]).unwrap()
    }

    #[test]
    fn trivial_cocycle_gives_trivial_twist() {
        let m = builtin::transposition_group(4, 2).unwrap();
        let c = Cocycle::from_fn("1", 2, &Cocycle::full_domain(2), |_, _| Root4::ONE).unwrap();
        let j: TwistElt<Scalar> = TwistElt::build(&m, &c).unwrap();
        assert_eq!(*j.value(), crate::Tensor2::one(4));
    }

    #[test]
    fn s4_omega_twist_matches_closed_form() {
        let s = builtin::load("s4-omega").unwrap();
        let j: TwistElt<Scalar> = TwistElt::build(&s.m, &s.cocycle).unwrap();
        let id = AlgElt::one(4);
        let expected = crate::Tensor2::outer([&half(1, "(12)", 4), &id]).unwrap()
            + crate::Tensor2::outer([&half(-1, "(12)", 4), &AlgElt::basis(p("(34)", 4))]).unwrap();
        assert_eq!(*j.value(), expected);
        assert_eq!(j.value(), j.inverse());
    }

    #[test]
    fn corrupted_twist_fails_axioms() {
        let s = builtin::load("s4-omega").unwrap();
        let bad: Tensor2<Scalar> = twist_tensor(&s.m, |a, b| {
            if a == 1 && b == 1 {
                Root4::MINUS_ONE
            } else {
                s.cocycle.value(a, b)
            }
        })
        .unwrap();
        let r = check_twist_axioms(&bad, None);
        assert!(!r.passed());
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn rational_field_refuses_imaginary_twist() {
        let s = builtin::load("a5-xi").unwrap();
        assert!(TwistElt::<Rational>::build(&s.m, &s.cocycle).is_err());
        assert!(TwistElt::<Scalar>::build(&s.m, &s.cocycle).is_ok());
    }

    #[test]
    fn a4_is_group_like_in_a5_twist() {
        let s = builtin::load("a5-xi").unwrap();
        let j: TwistElt<Scalar> = TwistElt::build(&s.m, &s.cocycle).unwrap();
        for g in s.group.elements() {
            assert_eq!(j.is_group_like(g), is_group_like_direct(&j, g), "{g}");
        }
        assert_eq!(j.group_like_elements(&s.group), SubgroupTable::alternating(4).elements().iter().map(|g| g.pad(5).unwrap()).collect::<Vec<_>>());
    }

    #[test]
    fn u_element_and_twisted_antipode() {
        let s = builtin::load("a5-xi").unwrap();
        let j: TwistElt<Scalar> = TwistElt::build(&s.m, &s.cocycle).unwrap();
        let (u, ui) = j.u_element().unwrap();
        assert_eq!(&u * &ui, AlgElt::one(5));
        // antipode law m(S_J (x) Id) Delta_J(g) = 1 on a few basis elements
        for g in ["(12345)", "(123)", "(12)(34)"] {
            let d = j.twisted_coproduct(&AlgElt::basis(p(g, 5)));
            let mut acc = AlgElt::zero(5);
            for (k, c) in d.iter() {
                let sa = j.twisted_antipode(&AlgElt::basis(k[0])).unwrap();
                acc = acc + (&sa * &AlgElt::basis(k[1])).scale(c);
            }
            assert_eq!(acc, AlgElt::one(5));
        }
    }

    #[test]
    fn projection_of_s8_twist() {
        let s = builtin::load("s8-omega").unwrap();
        let j: TwistElt<Rational> = TwistElt::build(&s.m, &s.cocycle).unwrap();
        let pj = j.project(4).unwrap();
        let s4 = builtin::load("s4-omega").unwrap();
        let j4: TwistElt<Rational> = TwistElt::build(&s4.m, &s4.cocycle).unwrap();
        assert_eq!(pj.value(), j4.value());
        assert!(j.project(3).is_err());
    }

    #[test]
    fn transport_identity_for_trivial_v() {
        let s = builtin::load("s4-kappa").unwrap();
        let j: TwistElt<Scalar> = TwistElt::build(&s.m, &s.cocycle).unwrap();
        let one = AlgElt::one(4);
        let r = transport_check(&j, &j, &one, &one, &[AlgElt::basis(p("(123)", 4))]).unwrap();
        assert!(r.passed());
    }
}
