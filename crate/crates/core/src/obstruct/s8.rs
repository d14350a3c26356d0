//! `(K S8)_J` for `omega = (-1)^(sum_{i<j} a_i b_j)` forces `1/2` into any
//! ring of definition of a Hopf order.

use rustc_hash::FxHashSet;

use super::certificate::{confirm, trail_elt, trail_tensor, ObstructionCertificate, TrailEntry, TrailValue};
use super::{printed, Recorder};
use crate::cosetcoalg::{pair_mask, CosetBlock};
use crate::error::Result;
use crate::field::{Field, QiSqrt5, SmallRational};
use crate::groupalg::{apply_char, slice_right, ClassFunction, GroupAlgebraElement, InflatedCharacter, LinChar, Tensor2, TwoGroup};
use crate::perm::Perm;
use crate::subgroup::SubgroupTable;
use crate::twist::{builtin, Cocycle, TwistElt};

type Q = SmallRational;
type Elt = GroupAlgebraElement<Q>;

fn p(s: &str) -> Result<Perm> {
    Perm::parse(s, 8)
}

/// Mask of `(a1, a2, a3, a4)`.
fn tuple(a: [u32; 4]) -> u32 {
    a.iter().enumerate().fold(0, |m, (j, b)| m | b << j)
}

fn e(m: &TwoGroup, a: [u32; 4]) -> Elt {
    m.idempotent(&LinChar::new(tuple(a), 4))
}

fn e_tau_e(m: &TwoGroup, tau: &Perm, a: [u32; 4]) -> Elt {
    let ea = e(m, a);
    &ea.right_translate(tau) * &ea
}

const X_S4: &str = "(13) - (1234) + (23) - (1342) - (1243) + (14) - (1432) + (24)";

struct Setup {
    m: TwoGroup,
    omega: Cocycle,
    twist: TwistElt<Q>,
    block: CosetBlock,
}

fn setup() -> Result<Setup> {
    let s = builtin::load("s8-omega")?;
    let twist = TwistElt::build(&s.m, &s.cocycle)?;
    let block = CosetBlock::new(&s.m, &s.cocycle, p("(123)")?, false)?;
    Ok(Setup {
        m: s.m,
        omega: s.cocycle,
        twist,
        block,
    })
}

fn psi(s: &Setup) -> Result<Elt> {
    Ok(s.block.matrix_cocharacter::<Q>(&s.m)?.value)
}

fn theta() -> Result<InflatedCharacter> {
    let q = SubgroupTable::generate(8, &[p("(56)")?, p("(78)")?])?;
    Ok(InflatedCharacter::new(ClassFunction::s4(4)?, q))
}

fn renamings() -> Result<[Perm; 2]> {
    Ok([Perm::from_images(&[3, 4, 5, 6, 1, 2, 7, 8])?, Perm::from_images(&[5, 6, 7, 8, 1, 2, 3, 4])?])
}

/// `a + g a h` with `g = (12)(34)(45)`, `h = (45)`.
fn chain(a: &Elt) -> Result<Elt> {
    Ok(a + &a.left_translate(&p("(12)(34)(45)")?).right_translate(&p("(45)")?))
}

fn conj_sigma(b: &Elt) -> Result<Elt> {
    Ok(b.conjugate_by(&p("(143)(52)")?))
}

fn step1(rec: &mut Recorder, s: &Setup) -> Result<()> {
    // S10 -> S8: M = P x Q with Q = <(9 10)>
    let m10 = builtin::transposition_group(10, 5)?;
    let w10 = Cocycle::from_bichar("s10-omega", &builtin::upper_triangular(5))?;
    let j10: TwistElt<Q> = TwistElt::build(&m10, &w10)?;
    let j8 = j10.project(8)?;
    rec.same_tensor("(pi (x) pi)(J) for S10 -> S8", s.twist.value(), j8.value())?;
    let same = (0..16).all(|a| (0..16).all(|b| j8.cocycle().value(a, b) == s.omega.value(a, b)));
    rec.ensure("restricted cocycle is omega of S8", same, "equal tables", || "tables differ".into())?;
    // S8 -> S4: P = <(12), (34)>, Q = <(56), (78)>
    let j4 = s.twist.project(4)?;
    let s4 = builtin::load("s4-omega")?;
    let j4_expected: TwistElt<Q> = TwistElt::build(&s4.m, &s4.cocycle)?;
    rec.same_tensor("(pi (x) pi)(J) for S8 -> S4", j4_expected.value(), j4.value())
}

/// Steps 1 to 3: the projections of `J`, the cocharacter `Psi` of the block
/// `M (123) M`, `x = (Id (x) theta) Delta_J(Psi)` and `x^2`, the twist `T` of
/// `kappa`, and finally `y = 1/2(id - (123))` with `chi4(y) = 3/2`.
pub fn pipeline_s8() -> Result<ObstructionCertificate> {
    let mut rec = Recorder::default();
    let s = setup()?;
    let m = &s.m;
    let tau = p("(123)")?;
    step1(&mut rec, &s)?;

    // Step 2
    let meet: Vec<Perm> = m
        .elements()
        .iter()
        .copied()
        .filter(|g| m.contains(&(tau * *g * tau.inverse())))
        .collect();
    let t34 = TwoGroup::parse(8, &["(56)", "(78)"])?;
    let mut expected_meet = t34.elements().to_vec();
    expected_meet.sort();
    let mut meet_sorted = meet.clone();
    meet_sorted.sort();
    rec.ensure("M meet tau M tau^-1 = <t3, t4>", meet_sorted == expected_meet, "<(56), (78)>", || format!("{meet:?}"))?;
    let n_pairs: FxHashSet<u32> = s.block.pairs().iter().copied().collect();
    rec.ensure("|N| = 64", n_pairs.len() == 64, "64", || n_pairs.len().to_string())?;
    let phi = |j: usize| 1u32 << (j - 1);
    let gens = [(0, phi(1)), (0, phi(2)), (phi(1), phi(1)), (phi(2), phi(2)), (phi(3), phi(3)), (phi(4), phi(4))];
    let mut span: FxHashSet<u32> = [0].into_iter().collect();
    for (a, b) in gens {
        let g = pair_mask(a, b, 4);
        let next: Vec<u32> = span.iter().map(|x| x ^ g).collect();
        span.extend(next);
    }
    rec.ensure("N is generated by the six printed pairs", span == n_pairs, "64 pairs", || span.len().to_string())?;

    let diag = |a: u32| pair_mask(a, a, 4);
    let mut z_printed = vec![0, diag(phi(1) | phi(2) | phi(3)), diag(phi(3) | phi(4)), diag(phi(1) | phi(2) | phi(4))];
    z_printed.sort_unstable();
    let mut z = s.block.center();
    z.sort_unstable();
    rec.ensure("Z = Rad of the block cocycle", z == z_printed, &format!("{z_printed:?}"), || format!("{z:?}"))?;
    let prof = s.block.profile()?;
    rec.ensure("irreducible representations of dimension 4", prof.irrep_dim == 4 && prof.radical_order == 4, "4", || {
        prof.irrep_dim.to_string()
    })?;
    let cidem = s.block.central_idempotent_check();
    rec.ensure("c is a central idempotent with |N/Z| dimensional image", cidem.passed(), "16", || cidem.rank.to_string())?;

    let psi = psi(&s)?;
    let mut psi_printed = Elt::zero(8);
    for a in [[0, 0, 0, 0], [1, 1, 1, 0], [0, 0, 1, 1], [1, 1, 0, 1]] {
        psi_printed.add_scaled(&e_tau_e(m, &tau, a), &Q::from_int(4));
    }
    rec.same_elt("Psi = 4(e tau e + ...)", &psi_printed, &psi)?;
    rec.record_elt("Psi", &psi, true);

    let d = s.twist.twisted_coproduct(&psi);
    rec.record_tensor("Delta_J(Psi)", &d, false);
    let x = slice_right(&d, &theta()?)?;
    let mut x_sandwich = Elt::zero(8);
    let eight = [
        ([0, 1, 0, 0], 2),
        ([1, 0, 0, 0], -2),
        ([1, 0, 1, 0], 2),
        ([0, 1, 1, 0], -2),
        ([0, 1, 1, 1], 2),
        ([1, 0, 1, 1], -2),
        ([1, 0, 0, 1], 2),
        ([0, 1, 0, 1], -2),
    ];
    for (a, c) in eight {
        x_sandwich.add_scaled(&e_tau_e(m, &tau, a), &Q::from_int(c));
    }
    rec.same_elt("x = 2(e tau e - ...), eight terms", &x_sandwich, &x)?;
    let t56_78 = p("(56)(78)")?;
    let x_printed = printed::<Q>(8, 1, 4, X_S4)?.right_translate(&t56_78);
    rec.same_elt("x = 1/4(...) (x) (56)(78)", &x_printed, &x)?;
    rec.record_elt("x", &x, true);

    let x2 = &x * &x;
    let half_t1t2: Elt = printed(8, 1, 2, "id - (12)(34)")?;
    rec.same_elt("x^2 = 1/2(id - (12)(34))", &half_t1t2, &x2)?;
    rec.record_elt("x^2", &x2, true);

    let [rho1, rho2] = renamings()?;
    let r1 = x2.rename(&rho1)?;
    let r2 = x2.rename(&rho2)?;
    rec.same_elt("relabeled 1/2(id - (34)(56))", &printed(8, 1, 2, "id - (34)(56)")?, &r1)?;
    rec.same_elt("relabeled 1/2(id - (56)(78))", &printed(8, 1, 2, "id - (56)(78)")?, &r2)?;
    rec.record_elt("1/2(id - (34)(56))", &r1, true);
    rec.record_elt("1/2(id - (56)(78))", &r2, true);

    let one = Elt::one(8);
    let factor = |sign: u32, minus: &Elt| if sign % 2 == 1 { minus.clone() } else { &one - minus };
    for mask in 0..16u32 {
        let a = [mask & 1, mask >> 1 & 1, mask >> 2 & 1, mask >> 3 & 1];
        let abar = a.map(|b| 1 - b);
        let lhs = &e(m, a) + &e(m, abar);
        let rhs = &(&factor(a[0] + a[1], &x2) * &factor(a[1] + a[2], &r1)) * &factor(a[2] + a[3], &r2);
        rec.same_elt(&format!("e_{a:?} + e_{abar:?} as a product"), &lhs, &rhs)?;
    }

    // Step 3
    let kappa = builtin::load("s8-kappa")?.cocycle;
    let q: Vec<QiSqrt5> = (0..16u32)
        .map(|a| QiSqrt5::from_int(if a & 1 == 1 && a >> 2 & 1 == 1 { -1 } else { 1 }))
        .collect();
    let dq = Cocycle::coboundary(4, &q)?;
    let wdq = s.omega.multiply(&dq)?;
    let cohom = (0..16).all(|a| (0..16).all(|b| wdq.value(a, b) == kappa.value(a, b)));
    rec.ensure("kappa = omega d(q)", cohom, "equal tables", || "tables differ".into())?;
    let flip = (0..16u32).all(|a| {
        (0..16u32).all(|b| {
            let bit = ((a & 1) & (b >> 2 & 1)) ^ ((a >> 2 & 1) & (b & 1));
            kappa.value(a, b) == crate::field::Root4::sign(bit) * s.omega.value(a, b)
        })
    });
    rec.ensure("kappa = (-1)^(a1 b3 + a3 b1) omega", flip, "equal tables", || "tables differ".into())?;

    let t: TwistElt<Q> = TwistElt::build(m, &kappa)?;
    let ell = |psi: u32| -> Elt {
        let mut out = Elt::zero(8);
        for phi in 0..16u32 {
            let c = Q::from_root4(kappa.value(phi, psi)).expect("real cocycle");
            out.add_scaled(&m.idempotent(&LinChar::new(phi, 4)), &c);
        }
        out
    };
    for (j, g) in [(1, "(56)"), (2, "(12)"), (3, "(34)"), (4, "(12)(34)(56)")] {
        let got = ell(phi(j));
        rec.same_elt(&format!("l(phi{j}) = {g}"), &Elt::basis(p(g)?), &got)?;
    }
    let t_terms = [
        ("id", [0, 0, 0, 0]),
        ("(12)", [0, 1, 0, 0]),
        ("(34)", [0, 0, 1, 0]),
        ("(56)", [0, 1, 1, 1]),
        ("(12)(34)", [0, 1, 1, 0]),
        ("(12)(56)", [0, 0, 1, 1]),
        ("(34)(56)", [0, 1, 0, 1]),
        ("(12)(34)(56)", [0, 0, 0, 1]),
    ];
    let mut t_printed = Tensor2::zero(8);
    for (g, a) in t_terms {
        let right = &e(m, a) + &e(m, a.map(|b| 1 - b));
        t_printed.add_scaled(&Tensor2::outer([&Elt::basis(p(g)?), &right])?, &Q::from_int(1));
    }
    rec.same_tensor("T = id (x) (e_0000 + e_1111) + ...", &t_printed, t.value())?;
    rec.same_tensor("T = T^-1", t.value(), t.inverse())?;
    for g in ["(12)", "(34)", "(56)"] {
        rec.ensure(&format!("{g} is group-like for T"), t.is_group_like(&p(g)?), "group-like", || "not".into())?;
    }

    let b = chain(&x2)?;
    rec.same_elt("1/2(id - (12)(34)) + g(...)(45) = 1/2(id - (354))", &printed(8, 1, 2, "id - (354)")?, &b)?;
    rec.record_elt("1/2(id - (354))", &b, true);
    let y = conj_sigma(&b)?;
    rec.same_elt("y = 1/2(id - (123))", &printed(8, 1, 2, "id - (123)")?, &y)?;
    rec.record_elt("y", &y, true);
    let w = apply_char(&ClassFunction::s4(4)?, &y)?.to_scalar();
    rec.same_scalar("chi4(y) = 3/2", &QiSqrt5::ratio(3, 2), &w)?;
    rec.record_scalar("chi4(y)", &w, true);
    ObstructionCertificate::finish("s8", rec)
}

pub(crate) fn replay(trail: &[TrailEntry]) -> Result<QiSqrt5> {
    let s = setup()?;
    confirm(trail, "Psi", TrailValue::Element(psi(&s)?.to_repr()))?;
    let psi: Elt = trail_elt(trail, "Psi")?;
    confirm(trail, "Delta_J(Psi)", TrailValue::Tensor(s.twist.twisted_coproduct(&psi).to_repr()))?;
    let d: Tensor2<Q> = trail_tensor(trail, "Delta_J(Psi)")?;
    confirm(trail, "x", TrailValue::Element(slice_right(&d, &theta()?)?.to_repr()))?;
    let x: Elt = trail_elt(trail, "x")?;
    confirm(trail, "x^2", TrailValue::Element((&x * &x).to_repr()))?;
    let x2: Elt = trail_elt(trail, "x^2")?;
    let [rho1, rho2] = renamings()?;
    confirm(trail, "1/2(id - (34)(56))", TrailValue::Element(x2.rename(&rho1)?.to_repr()))?;
    confirm(trail, "1/2(id - (56)(78))", TrailValue::Element(x2.rename(&rho2)?.to_repr()))?;
    confirm(trail, "1/2(id - (354))", TrailValue::Element(chain(&x2)?.to_repr()))?;
    let b: Elt = trail_elt(trail, "1/2(id - (354))")?;
    confirm(trail, "y", TrailValue::Element(conj_sigma(&b)?.to_repr()))?;
    let y: Elt = trail_elt(trail, "y")?;
    let w = apply_char(&ClassFunction::s4(4)?, &y)?.to_scalar();
    confirm(trail, "chi4(y)", TrailValue::Scalar(w.clone()))?;
    Ok(w)
}
