//! Named cocycles together with the group and subgroup they live on.

use crate::error::{Error, Result};
use crate::field::Root4;
use crate::groupalg::TwoGroup;
use crate::subgroup::SubgroupTable;

use super::cocycle::Cocycle;

pub const NAMES: [&str; 6] = ["a5-xi", "a5-rational", "s4-omega", "s4-kappa", "s8-omega", "s8-kappa"];

/// An ambient group `G`, its subgroup `M` with ordered generators, and a
/// cocycle on the character group of `M`.
#[derive(Clone, Debug)]
pub struct TwistSetup {
    pub name: String,
    pub group: SubgroupTable,
    pub m: TwoGroup,
    pub cocycle: Cocycle,
}

/// `(-1)^(sum_{i<j} alpha_i beta_j)` on `F_2^k`.
pub fn upper_triangular(k: usize) -> Vec<Vec<u8>> {
    (0..k).map(|i| (0..k).map(|j| u8::from(i < j)).collect()).collect()
}

/// `M = <(12), (34), ..., (2k-1 2k)>` inside `S_{2k}` (or larger degree).
pub fn transposition_group(degree: usize, k: usize) -> Result<TwoGroup> {
    let gens: Vec<String> = (1..=k).map(|i| format!("({} {})", 2 * i - 1, 2 * i)).collect();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    TwoGroup::parse(degree, &refs)
}

pub fn a5_klein() -> Result<TwoGroup> {
    TwoGroup::parse(5, &["(12)(34)", "(13)(24)"])
}

fn a5_xi() -> Result<Cocycle> {
    use Root4 as R;
    let (one, xi, mxi) = (R::ONE, R::I, R::MINUS_I);
    // rows and columns: eps, phi1, phi2, phi1 phi2 (mask order)
    let rows = vec![
        vec![one, one, one, one],
        vec![one, one, xi, mxi],
        vec![one, mxi, one, xi],
        vec![one, xi, mxi, one],
    ];
    Cocycle::from_table("a5-xi", 2, &rows)
}

fn s4_kappa() -> Result<Cocycle> {
    let (p, m) = (Root4::ONE, Root4::MINUS_ONE);
    let rows = vec![vec![p, p, p, p], vec![p, m, p, m], vec![p, m, p, m], vec![p, p, p, p]];
    Cocycle::from_table("s4-kappa", 2, &rows)
}

fn s8_kappa_matrix() -> Vec<Vec<u8>> {
    let mut b = upper_triangular(4);
    b[0][2] ^= 1;
    b[2][0] ^= 1;
    b
}

pub fn load(name: &str) -> Result<TwistSetup> {
    let (group, m, cocycle) = match name {
        "a5-xi" => (SubgroupTable::alternating(5), a5_klein()?, a5_xi()?),
        "a5-rational" => (
            SubgroupTable::alternating(5),
            a5_klein()?,
            Cocycle::from_bichar(name, &upper_triangular(2))?,
        ),
        "s4-omega" => (
            SubgroupTable::symmetric(4),
            transposition_group(4, 2)?,
            Cocycle::from_bichar(name, &upper_triangular(2))?,
        ),
        "s4-kappa" => (SubgroupTable::symmetric(4), transposition_group(4, 2)?, s4_kappa()?),
        "s8-omega" => (
            SubgroupTable::symmetric(8),
            transposition_group(8, 4)?,
            Cocycle::from_bichar(name, &upper_triangular(4))?,
        ),
        "s8-kappa" => (
            SubgroupTable::symmetric(8),
            transposition_group(8, 4)?,
            Cocycle::from_bichar(name, &s8_kappa_matrix())?,
        ),
        _ => return Err(Error::Parse(format!("unknown builtin cocycle `{name}`"))),
    };
    Ok(TwistSetup {
        name: name.to_string(),
        group,
        m,
        cocycle,
    })
}
