//! `(K A5)_J` has no Hopf order over a ring in which 2 is not invertible.

use super::certificate::{confirm, trail_elt, trail_tensor, ObstructionCertificate, TrailEntry, TrailValue};
use super::{printed, Recorder};
use crate::cosetcoalg::CosetBlock;
use crate::error::Result;
use crate::field::QiSqrt5;
use crate::groupalg::{apply_char, slice_left, ClassFunction, GroupAlgebraElement, LinChar, Tensor2};
use crate::perm::Perm;
use crate::twist::{builtin, TwistElt};
use crate::{AlgElt, Scalar};

const COSET: [&str; 16] = [
    "(12345)", "(14325)", "(15)(24)", "(135)", "(14532)", "(12534)", "(153)", "(24)(35)", "(13)(45)", "(254)",
    "(15432)", "(12354)", "(245)", "(13)(25)", "(15234)", "(14352)",
];

const Y: &str = "(15)(24) + (24)(35) + (13)(45) + (13)(25)";

const Y_SQUARED: &str = "4*id + (15243) + (13425) + (15423) + (13245) + (135) + (153) \
    + (452) + (425) + (14253) + (13524) + (12453) + (13542)";

fn chi() -> Result<ClassFunction> {
    let (c1, c4, c5) = (ClassFunction::a5(1)?, ClassFunction::a5(4)?, ClassFunction::a5(5)?);
    ClassFunction::combination(&[(1, &c1), (1, &c4), (2, &c5)])
}

struct Setup {
    twist: TwistElt<Scalar>,
    block: CosetBlock,
}

fn setup() -> Result<Setup> {
    let s = builtin::load("a5-xi")?;
    let twist = TwistElt::build(&s.m, &s.cocycle)?;
    let tau = Perm::parse("(12345)", 5)?;
    let block = CosetBlock::new(&s.m, &s.cocycle, tau, false)?;
    Ok(Setup { twist, block })
}

fn mu(s: &Setup) -> Result<AlgElt> {
    Ok(s.block.matrix_cocharacter::<Scalar>(s.twist.subgroup())?.value)
}

/// Builds `mu = 4 e_eps (12345) e_eps`, `Delta_J(mu)`, `y = (chi (x) Id) Delta_J(mu)`
/// with `chi = chi1 + chi4 + 2 chi5`, `y^2` and `chi4(y^2) = 27/4`.
pub fn pipeline_a5() -> Result<ObstructionCertificate> {
    let mut rec = Recorder::default();
    let s = setup()?;
    let m = s.twist.subgroup();
    let tau = *s.block.representative();

    let mut coset: Vec<Perm> = COSET.iter().map(|c| Perm::parse(c, 5)).collect::<Result<_>>()?;
    coset.sort();
    rec.ensure("double coset M(12345)M", coset == s.block.elements(), &COSET.join(","), || {
        s.block.elements().iter().map(Perm::to_string).collect::<Vec<_>>().join(",")
    })?;
    let profile = s.block.profile()?;
    rec.ensure("block is a 4x4 matrix coalgebra", profile.irrep_dim == 4 && profile.radical_order == 1, "4", || {
        profile.irrep_dim.to_string()
    })?;

    let mu = mu(&s)?;
    let e = m.idempotent::<Scalar>(&LinChar::trivial(2));
    let expected_mu = (&e.right_translate(&tau) * &e).scale(&QiSqrt5::from_int(4));
    rec.same_elt("mu = 4 e_eps tau e_eps", &expected_mu, &mu)?;
    rec.record_elt("mu", &mu, true);

    let d = s.twist.twisted_coproduct(&mu);
    let quarter = Tensor2::from_terms(5, coset.iter().map(|g| ([*g, *g], QiSqrt5::ratio(1, 4))))?;
    rec.same_tensor("Delta_J(mu) = 1/4 sum sigma (x) sigma", &quarter, &d)?;
    rec.ensure("Delta_J(mu) has 16 terms", d.len() == 16, "16", || d.len().to_string())?;
    rec.same_tensor("Delta_J(mu) = Delta(mu)", &mu.coproduct(), &d)?;
    rec.record_tensor("Delta_J(mu)", &d, true);

    let chi = chi()?;
    for (g, v) in [("(12)(34)", 3), ("(123)", 0), ("(12345)", 0), ("(13524)", 0)] {
        let x = apply_char(&chi, &AlgElt::basis(Perm::parse(g, 5)?))?;
        rec.same_scalar(&format!("chi({g})"), &QiSqrt5::from_int(v), &x)?;
    }
    let y = slice_left(&chi, &d)?;
    rec.same_elt("y = 3/4(...)", &printed(5, 3, 4, Y)?, &y)?;
    rec.record_elt("y", &y, true);

    let c1 = apply_char(&ClassFunction::a5(1)?, &y)?;
    rec.same_scalar("chi1(y) = 3", &QiSqrt5::from_int(3), &c1)?;
    rec.record_scalar("chi1(y)", &c1, false);

    let y2 = &y * &y;
    rec.same_elt("y^2 = 9/16(...)", &printed(5, 9, 16, Y_SQUARED)?, &y2)?;
    rec.ensure("y^2 has 13 terms", y2.len() == 13, "13", || y2.len().to_string())?;
    rec.record_elt("y^2", &y2, true);

    let w = apply_char(&ClassFunction::a5(4)?, &y2)?;
    let by_classes = QiSqrt5::ratio(9, 16) * QiSqrt5::from_int(4 * 4 + 4 * 1 - 8);
    rec.same_scalar("chi4(y^2) by classes", &by_classes, &w)?;
    rec.same_scalar("chi4(y^2) = 27/4", &QiSqrt5::ratio(27, 4), &w)?;
    rec.record_scalar("chi4(y^2)", &w, true);
    ObstructionCertificate::finish("a5", rec)
}

pub(crate) fn replay(trail: &[TrailEntry]) -> Result<QiSqrt5> {
    let s = setup()?;
    confirm(trail, "mu", TrailValue::Element(mu(&s)?.to_repr()))?;
    let mu: AlgElt = trail_elt(trail, "mu")?;
    confirm(trail, "Delta_J(mu)", TrailValue::Tensor(s.twist.twisted_coproduct(&mu).to_repr()))?;
    let d: Tensor2<Scalar> = trail_tensor(trail, "Delta_J(mu)")?;
    confirm(trail, "y", TrailValue::Element(slice_left(&chi()?, &d)?.to_repr()))?;
    let y: GroupAlgebraElement<Scalar> = trail_elt(trail, "y")?;
    confirm(trail, "chi1(y)", TrailValue::Scalar(apply_char(&ClassFunction::a5(1)?, &y)?))?;
    confirm(trail, "y^2", TrailValue::Element((&y * &y).to_repr()))?;
    let y2: AlgElt = trail_elt(trail, "y^2")?;
    let w = apply_char(&ClassFunction::a5(4)?, &y2)?;
    confirm(trail, "chi4(y^2)", TrailValue::Scalar(w.clone()))?;
    Ok(w)
}
