//! The Hopf order `X` of `K S4` spanned by `{xy s, (1-x)y s, x(1-y)s, (1-x)(1-y)s}`
//! with `s` in `S3`, its twist by `T`, and the computations behind its uniqueness.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::certificate::{Check, TrailEntry};
use super::lattice::{ClosureReport, CoeffRing, Lattice};
use super::{printed, Recorder};
use crate::cosetcoalg::CosetBlock;
use crate::error::Result;
use crate::field::{Field, QiSqrt5, SmallRational};
use crate::groupalg::{apply_char, slice_left, slice_right, ClassFunction, GroupAlgebraElement, LinChar, Tensor2, Tensor3, TwoGroup};
use crate::perm::Perm;
use crate::subgroup::SubgroupTable;
use crate::twist::{builtin, cohomologous_v, TwistElt};
use crate::Scalar;

type Q = SmallRational;
type Elt = GroupAlgebraElement<Q>;

/// Outcome of the `S4` pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct S4Report {
    pub closure_untwisted: ClosureReport,
    pub closure_t: ClosureReport,
    pub closure_j: ClosureReport,
    pub j_in_x_tensor_x: bool,
    pub pairing: QiSqrt5,
    pub trail: Vec<TrailEntry>,
    pub checks: Vec<Check>,
}

impl S4Report {
    pub fn passed(&self) -> bool {
        self.closure_untwisted.passed()
            && self.closure_t.passed()
            && !self.j_in_x_tensor_x
            && self.checks.iter().all(|c| c.passed)
    }
}

fn p(s: &str) -> Result<Perm> {
    Perm::parse(s, 4)
}

fn one() -> Elt {
    Elt::one(4)
}

/// `e_(a1,a2) tau e_(b1,b2)` for `M = <(12), (34)>`.
fn sandwich_elt(m: &TwoGroup, tau: &Perm, a: u32, b: u32) -> Elt {
    let ea: Elt = m.idempotent(&LinChar::new(a, 2));
    let eb: Elt = m.idempotent(&LinChar::new(b, 2));
    &ea.right_translate(tau) * &eb
}

fn bits(i: u32, j: u32) -> u32 {
    i | j << 1
}

/// `(f (x) g)(t)`.
fn pair2(f: &ClassFunction, g: &ClassFunction, t: &Tensor2<Q>) -> Result<Q> {
    apply_char(f, &slice_right(t, g)?)
}

fn spanning_set(x: &Elt, y: &Elt) -> Vec<Elt> {
    let s3 = SubgroupTable::symmetric(3);
    let mut out = Vec::new();
    for s in s3.elements() {
        let s = s.pad(4).expect("S3 inside S4");
        for f in [x * y, &(&one() - x) * y, x * &(&one() - y), &(&one() - x) * &(&one() - y)] {
            out.push(f.right_translate(&s));
        }
    }
    out
}

pub fn pipeline_s4() -> Result<S4Report> {
    let mut rec = Recorder::default();
    let x: Elt = printed(4, 1, 2, "id - (12)(34)")?;
    let y: Elt = printed(4, 1, 2, "id - (13)(24)")?;
    rec.record_elt("x", &x, true);
    rec.record_elt("y", &y, true);

    // (a) the lattice X and the untwisted axioms
    let lattice = Lattice::new(4, spanning_set(&x, &y), CoeffRing::Integers)?;
    rec.ensure("spanning set is a basis of K S4", lattice.len() == 24, "24", || lattice.len().to_string())?;
    rec.ensure("x in X", lattice.contains(&x), "member", || "not a member".into())?;
    rec.ensure("id in X", lattice.contains(&one()), "member", || "not a member".into())?;
    let half = one().scale(&Q::new(1, 2));
    rec.ensure("1/2 id not in X", !lattice.contains(&half), "not a member", || "member".into())?;
    let dx = Tensor2::outer([&one(), &x])? + Tensor2::outer([&x, &Elt::basis(p("(12)(34)")?)])?;
    rec.same_tensor("Delta(x) = id (x) x + x (x) (12)(34)", &dx, &x.coproduct())?;
    let dy = Tensor2::outer([&one(), &y])? + Tensor2::outer([&y, &Elt::basis(p("(13)(24)")?)])?;
    rec.same_tensor("Delta(y) = id (x) y + y (x) (13)(24)", &dy, &y.coproduct())?;
    let closure_untwisted = lattice.closure_check(None)?;
    rec.ensure("X is closed under the Hopf operations of K S4", closure_untwisted.passed(), "no failures", || {
        closure_untwisted.failures.join(", ")
    })?;

    // (b) the twists J (from omega) and T (from kappa)
    let so = builtin::load("s4-omega")?;
    let sk = builtin::load("s4-kappa")?;
    let m = so.m.clone();
    let j: TwistElt<Q> = TwistElt::build(&m, &so.cocycle)?;
    let t: TwistElt<Q> = TwistElt::build(&m, &sk.cocycle)?;
    let t12 = Elt::basis(p("(12)")?);
    let t34 = Elt::basis(p("(34)")?);
    let j_printed = Tensor2::outer([&printed(4, 1, 2, "id + (12)")?, &one()])?
        + Tensor2::outer([&printed(4, 1, 2, "id - (12)")?, &t34])?;
    rec.same_tensor("J = 1/2(id+(12)) (x) id + 1/2(id-(12)) (x) (34)", &j_printed, j.value())?;
    rec.same_tensor("J = J^-1", j.value(), j.inverse())?;
    rec.record_tensor("J", j.value(), true);
    let t_printed = Tensor2::outer([&(&one() - &x), &one()])? + Tensor2::outer([&x, &t12])?;
    rec.same_tensor("T = (id-x) (x) id + x (x) (12)", &t_printed, t.value())?;
    rec.same_tensor("T = T^-1", t.value(), t.inverse())?;
    rec.record_tensor("T", t.value(), true);
    rec.ensure("(12) is group-like for T", t.is_group_like(&p("(12)")?), "group-like", || "not".into())?;

    let closure_t = lattice.closure_check(Some(&t))?;
    rec.ensure("X is a Hopf order of (K S4)_T", closure_t.passed(), "no failures", || closure_t.failures.join(", "))?;
    let closure_j = lattice.closure_check(Some(&j))?;
    let j_in = closure_j.twist_member == Some(true);
    rec.ensure("J not in X (x) X", !j_in, "not a member", || "member".into())?;

    // v and the image of (123) under h -> v h v^-1, over Q(i, sqrt 5)
    let xi = QiSqrt5::i();
    let q = [QiSqrt5::from_int(1), xi.clone(), QiSqrt5::from_int(-1), xi.clone()];
    let (v, vi) = cohomologous_v::<Scalar>(&m, &q)?;
    let mut v_printed = GroupAlgebraElement::<Scalar>::zero(4);
    for (c, g) in [(xi.clone(), "id"), (-xi.clone(), "(12)"), (QiSqrt5::from_int(1), "(34)"), (QiSqrt5::from_int(1), "(12)(34)")] {
        v_printed.add_scaled(&GroupAlgebraElement::monomial(c, p(g)?), &QiSqrt5::ratio(1, 2));
    }
    rec.same_elt("v = 1/2(xi id - xi (12) + (34) + (12)(34))", &v_printed, &v)?;
    let image = &(&v * &GroupAlgebraElement::basis(p("(123)")?)) * &vi;
    let mut image_printed = GroupAlgebraElement::<Scalar>::zero(4);
    let image_terms = [
        (1, false, "(123)"),
        (-1, false, "(13)"),
        (1, true, "(1234)"),
        (1, true, "(134)"),
        (-1, false, "(23)"),
        (1, false, "(132)"),
        (-1, true, "(234)"),
        (-1, true, "(1342)"),
        (-1, true, "(1243)"),
        (1, true, "(143)"),
        (1, false, "(124)"),
        (1, false, "(14)"),
        (-1, true, "(243)"),
        (1, true, "(1432)"),
        (1, false, "(24)"),
        (1, false, "(142)"),
    ];
    for (sign, has_xi, g) in image_terms {
        let mut c = QiSqrt5::ratio(sign, 4);
        if has_xi {
            c = c * xi.clone();
        }
        image_printed.add_scaled(&GroupAlgebraElement::monomial(c, p(g)?), &QiSqrt5::from_int(1));
    }
    rec.same_elt("v (123) v^-1", &image_printed, &image)?;

    // (c) the cocharacter mu and r = (chi4 (x) Id) Delta_J(mu)
    let tau = p("(123)")?;
    let block = CosetBlock::new(&m, &so.cocycle, tau, false)?;
    rec.ensure("M meet tau M tau^-1 = {id}", m.table().conjugate_intersection_order(&tau) == 1, "1", || {
        m.table().conjugate_intersection_order(&tau).to_string()
    })?;
    let mu = block.matrix_cocharacter::<Q>(&m)?.value;
    let mu_printed = sandwich_elt(&m, &tau, 0, 0).scale(&Q::from_int(4));
    rec.same_elt("mu = 4 e_eps tau e_eps", &mu_printed, &mu)?;
    let dmu = j.twisted_coproduct(&mu);
    let mut dmu_printed = Tensor2::zero(4);
    for a in 0..4u32 {
        for b in 0..4u32 {
            let s = sandwich_elt(&m, &tau, a, b);
            let sign = if (a == 3) ^ (b == 3) { -4 } else { 4 };
            dmu_printed.add_scaled(&Tensor2::outer([&s, &s])?, &Q::from_int(sign));
        }
    }
    rec.same_tensor("Delta_J(mu) = 4 sum (-1)^(ij+kl) ...", &dmu_printed, &dmu)?;
    let chi4 = ClassFunction::s4(4)?;
    for (g, v) in [("(123)", 0), ("(123)(12)", 1), ("(123)(34)", -1), ("(123)(12)(34)", 0)] {
        let c = apply_char(&chi4, &Elt::basis(p(g)?))?;
        rec.same_scalar(&format!("chi4({g})"), &QiSqrt5::from_int(v), &c.to_scalar())?;
    }
    for (i, j_, num) in [(0, 0, 0), (0, 1, 1), (1, 0, -1), (1, 1, 0)] {
        let e: Elt = m.idempotent(&LinChar::new(bits(i, j_), 2));
        let c = apply_char(&chi4, &e.left_translate(&tau))?;
        rec.same_scalar(&format!("chi4(tau e_({i},{j_}))"), &QiSqrt5::ratio(num, 2), &c.to_scalar())?;
    }
    let e01 = sandwich_elt(&m, &tau, bits(0, 1), bits(0, 1));
    let e10 = sandwich_elt(&m, &tau, bits(1, 0), bits(1, 0));
    let e01_printed = printed(
        4,
        1,
        16,
        "(123) + (13) - (1234) - (134) + (23) + (132) - (234) - (1342) \
         - (1243) - (143) + (124) + (14) - (243) - (1432) + (24) + (142)",
    )?;
    let e10_printed = printed(
        4,
        1,
        16,
        "(123) - (13) + (1234) - (134) - (23) + (132) - (234) + (1342) \
         + (1243) - (143) + (124) - (14) - (243) + (1432) - (24) + (142)",
    )?;
    rec.same_elt("e_(0,1) tau e_(0,1)", &e01_printed, &e01)?;
    rec.same_elt("e_(1,0) tau e_(1,0)", &e10_printed, &e10)?;
    let r = slice_left(&chi4, &dmu)?;
    rec.same_elt("r = 2(e_(0,1) tau e_(0,1) - e_(1,0) tau e_(1,0))", &(&e01 - &e10).scale(&Q::from_int(2)), &r)?;
    let r_printed = printed(4, 1, 4, "(13) - (1234) + (23) - (1342) - (1243) + (14) - (1432) + (24)")?;
    rec.same_elt("r = 1/4(...)", &r_printed, &r)?;
    rec.record_elt("r", &r, true);
    let r2 = &r * &r;
    rec.same_elt("r^2 = x", &x, &r2)?;
    rec.record_elt("r^2", &r2, true);

    // (d) the idempotents of F = <(12)(34), (13)(24)> and coefficient extraction
    let f = TwoGroup::parse(4, &["(12)(34)", "(13)(24)"])?;
    let eps = |i: u32, j: u32| -> Elt { f.idempotent(&LinChar::new(bits(i, j), 2)) };
    let dict = [
        ((0, 0), &(&one() - &x) * &(&one() - &y)),
        ((1, 0), &x * &(&one() - &y)),
        ((0, 1), &(&one() - &x) * &y),
        ((1, 1), &x * &y),
    ];
    for ((i, j_), val) in &dict {
        rec.same_elt(&format!("eps_{i}{j_}"), val, &eps(*i, *j_))?;
    }
    let s3: Vec<Perm> = SubgroupTable::symmetric(3)
        .elements()
        .iter()
        .map(|s| s.pad(4))
        .collect::<Result<_>>()?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for sample in 0..4 {
        let mut a: Vec<Elt> = Vec::new();
        for _ in 0..4 {
            let mut e = Elt::zero(4);
            for s in &s3 {
                let c = Q::new(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                e.add_scaled(&Elt::basis(*s), &c);
            }
            a.push(e);
        }
        // a[0] = a_00, a[1] = a_10, a[2] = a_01, a[3] = a_11
        let idx = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let mut w = Elt::zero(4);
        for (k, (i, j_)) in idx.iter().enumerate() {
            w = &w + &(&eps(*i, *j_) * &a[k]);
        }
        let d2 = w.coproduct3();
        let triples = [
            ([(0, 1), (1, 0), (1, 1)], 0),
            ([(1, 0), (1, 1), (1, 1)], 1),
            ([(0, 1), (1, 1), (1, 1)], 2),
            ([(0, 1), (1, 1), (0, 1)], 3),
        ];
        for (legs, k) in triples {
            let [l0, l1, l2] = legs.map(|(i, j_)| eps(i, j_));
            let e3 = Tensor3::outer([&l0, &l1, &l2])?;
            let lhs = &(&e3 * &d2) * &e3;
            let lambda = a[k].coeff(&Perm::identity(4));
            let rhs = e3.scale(&lambda);
            let label = format!("extraction of lambda_(id) from a_{}{} (sample {sample})", idx[k].0, idx[k].1);
            rec.ensure(&label, lhs == rhs, &rhs.to_string(), || lhs.to_string())?;
        }
    }

    // (e) S3 permutes {eps_01, eps_10, eps_11} and only id fixes two of them
    let three = [eps(0, 1), eps(1, 0), eps(1, 1)];
    for s in &s3 {
        let images: Vec<Option<usize>> = three
            .iter()
            .map(|e| three.iter().position(|f| *f == e.conjugate_by(s)))
            .collect();
        let permutes = images.iter().all(Option::is_some);
        let fixed = images.iter().enumerate().filter(|(k, im)| **im == Some(*k)).count();
        let ok = permutes && (s.is_identity() || fixed < 2);
        rec.ensure(&format!("conjugation by {s} on eps_01, eps_10, eps_11"), ok, "a permutation fixing at most one", || {
            format!("{images:?}")
        })?;
    }

    // (f) (chi3 (x) chi3)(J((123) (x) (134))) = 1/2
    let d = j.value() * &Tensor2::outer([&Elt::basis(p("(123)")?), &Elt::basis(p("(134)")?)])?;
    let d_printed = Tensor2::outer([&printed(4, 1, 2, "(123) + (23)")?, &Elt::basis(p("(134)")?)])?
        + Tensor2::outer([&printed(4, 1, 2, "(123) - (23)")?, &Elt::basis(p("(14)")?)])?;
    rec.same_tensor("J((123) (x) (134))", &d_printed, &d)?;
    rec.record_tensor("d = J((123) (x) (134))", &d, true);
    let chi3 = ClassFunction::s4(3)?;
    let pairing = pair2(&chi3, &chi3, &d)?.to_scalar();
    rec.same_scalar("(chi3 (x) chi3)(d) = 1/2", &QiSqrt5::ratio(1, 2), &pairing)?;
    rec.record_scalar("(chi3 (x) chi3)(d)", &pairing, true);

    Ok(S4Report {
        closure_untwisted,
        closure_t,
        closure_j,
        j_in_x_tensor_x: j_in,
        pairing,
        trail: rec.trail,
        checks: rec.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_pipeline_passes() {
        let r = pipeline_s4().unwrap();
        assert!(r.passed());
        assert!(r.closure_untwisted.axioms_pass());
        assert_eq!(r.closure_untwisted.product.len(), 24);
        assert_eq!(r.closure_t.twist_member, Some(true));
        assert_eq!(r.closure_j.twist_member, Some(false));
        assert_eq!(r.pairing, QiSqrt5::ratio(1, 2));
    }

    #[test]
    fn half_integral_coordinates() {
        let x: Elt = printed(4, 1, 2, "id - (12)(34)").unwrap();
        let y: Elt = printed(4, 1, 2, "id - (13)(24)").unwrap();
        let lattice = Lattice::new(4, spanning_set(&x, &y), CoeffRing::Integers).unwrap();
        let m = lattice.membership(&one().scale(&Q::new(1, 2)));
        assert!(!m.member);
        let c = m.coordinates.unwrap();
        assert!(c.iter().all(|v| *v == QiSqrt5::from_int(0) || *v == QiSqrt5::ratio(1, 2)));
        // x = xy + x(1-y)
        let mx = lattice.membership(&x).coordinates.unwrap();
        assert_eq!(mx.iter().filter(|v| **v == QiSqrt5::from_int(1)).count(), 2);
    }
}
