use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::element::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::perm::Perm;
use crate::subgroup::SubgroupTable;

/// A linear character of an elementary abelian 2-group `M = <t_1..t_k>`,
/// stored as the bit vector `alpha` with `phi(t^gamma) = (-1)^(alpha . gamma)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinChar {
    pub bits: u32,
    pub rank: u8,
}

impl LinChar {
    pub fn trivial(rank: usize) -> LinChar {
        LinChar { bits: 0, rank: rank as u8 }
    }

    pub fn new(bits: u32, rank: usize) -> LinChar {
        LinChar {
            bits: bits & mask(rank),
            rank: rank as u8,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }

    /// Pointwise product (sum of bit vectors).
    pub fn product(&self, other: &LinChar) -> LinChar {
        LinChar {
            bits: self.bits ^ other.bits,
            rank: self.rank,
        }
    }

    /// `phi(t^gamma)` as a sign exponent: 0 for `+1`, 1 for `-1`.
    pub fn sign_bit(&self, gamma: u32) -> u32 {
        (self.bits & gamma).count_ones() & 1
    }

    /// Component `alpha_j` (1-based `j`).
    pub fn component(&self, j: usize) -> u32 {
        (self.bits >> (j - 1)) & 1
    }

    /// Accepts `eps`, products of `phiK` such as `phi1*phi2`, a bit string
    /// `1011`, or a tuple `(1,0,1,1)`.
    pub fn parse(s: &str, rank: usize) -> Result<LinChar> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad character `{s}` for rank {rank}"));
        if t == "eps" || t == "1" && rank != 1 {
            return Ok(LinChar::trivial(rank));
        }
        if t.starts_with("phi") {
            let mut bits = 0u32;
            for part in t.split('*') {
                let j: usize = part.trim().strip_prefix("phi").ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if j == 0 || j > rank {
                    return Err(bad());
                }
                bits ^= 1 << (j - 1);
            }
            return Ok(LinChar::new(bits, rank));
        }
        let digits: Vec<char> = t.chars().filter(|c| *c == '0' || *c == '1').collect();
        let stripped: String = t.chars().filter(|c| !matches!(c, '(' | ')' | ',' | ' ')).collect();
        if digits.len() != rank || stripped.len() != rank {
            return Err(bad());
        }
        let bits = digits.iter().enumerate().fold(0u32, |b, (j, c)| if *c == '1' { b | (1 << j) } else { b });
        Ok(LinChar::new(bits, rank))
    }

    /// Name as a product of the dual basis characters: `eps`, `phi1*phi3`.
    pub fn name(&self) -> String {
        if self.bits == 0 {
            return "eps".to_string();
        }
        let parts: Vec<String> = (1..=self.rank()).filter(|&j| self.component(j) == 1).map(|j| format!("phi{j}")).collect();
        parts.join("*")
    }
}

fn mask(rank: usize) -> u32 {
    if rank >= 32 {
        u32::MAX
    } else {
        (1u32 << rank) - 1
    }
}

impl fmt::Display for LinChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.rank()).map(|j| self.component(j).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for LinChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An elementary abelian 2-subgroup of `S_n` with an ordered basis.
#[derive(Clone, Debug)]
pub struct TwoGroup {
    degree: usize,
    gens: Vec<Perm>,
    by_mask: Vec<Perm>,
    mask_of: FxHashMap<Perm, u32>,
    table: SubgroupTable,
}

impl TwoGroup {
    /// Checks that the generators are commuting involutions that are
    /// independent, so that `|M| = 2^k`.
    pub fn new(degree: usize, gens: &[Perm]) -> Result<TwoGroup> {
        let table = SubgroupTable::generate(degree, gens)?;
        for (a, g) in gens.iter().enumerate() {
            if g.is_identity() || !(*g * *g).is_identity() {
                return Err(Error::NotElementaryAbelian(format!("{g} is not an involution")));
            }
            for h in &gens[a + 1..] {
                if *g * *h != *h * *g {
                    return Err(Error::NotElementaryAbelian(format!("{g} and {h} do not commute")));
                }
            }
        }
        let k = gens.len();
        if k > 16 || table.order() != 1usize << k {
            return Err(Error::NotElementaryAbelian(format!(
                "generators are dependent: order {} for {k} generators",
                table.order()
            )));
        }
        let mut by_mask = Vec::with_capacity(1 << k);
        for m in 0u32..(1 << k) {
            let mut x = Perm::identity(degree);
            for (j, g) in gens.iter().enumerate() {
                if m >> j & 1 == 1 {
                    x = x * *g;
                }
            }
            by_mask.push(x);
        }
        let mask_of = by_mask.iter().enumerate().map(|(m, g)| (*g, m as u32)).collect();
        Ok(TwoGroup {
            degree,
            gens: gens.to_vec(),
            by_mask,
            mask_of,
            table,
        })
    }

    pub fn parse(degree: usize, gens: &[&str]) -> Result<TwoGroup> {
        let g: Vec<Perm> = gens.iter().map(|s| Perm::parse(s, degree)).collect::<Result<_>>()?;
        TwoGroup::new(degree, &g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn order(&self) -> usize {
        self.by_mask.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn table(&self) -> &SubgroupTable {
        &self.table
    }

    /// `t^gamma`.
    pub fn element(&self, gamma: u32) -> Perm {
        self.by_mask[gamma as usize]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.by_mask
    }

    pub fn mask_of(&self, g: &Perm) -> Option<u32> {
        self.mask_of.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.mask_of.contains_key(g)
    }

    /// All characters in bit-vector order.
    pub fn characters(&self) -> Vec<LinChar> {
        (0..self.order() as u32).map(|b| LinChar::new(b, self.rank())).collect()
    }

    /// `phi(m)` as `+1` or `-1`; `None` when `m` is not in `M`.
    pub fn value(&self, phi: &LinChar, m: &Perm) -> Option<i64> {
        let g = self.mask_of(m)?;
        Some(if phi.sign_bit(g) == 1 { -1 } else { 1 })
    }

    /// `e_phi = (1/|M|) sum_m phi(m) m`.
    pub fn idempotent<F: Field>(&self, phi: &LinChar) -> GroupAlgebraElement<F> {
        let n = self.order() as i64;
        let plus = F::from_ratio(1, n);
        let minus = F::from_ratio(-1, n);
        let mut e = GroupAlgebraElement::zero(self.degree);
        for (g, m) in self.by_mask.iter().enumerate() {
            let c = if phi.sign_bit(g as u32) == 1 { &minus } else { &plus };
            e.add_term(*m, c);
        }
        e
    }

    /// The character `g > phi < g^-1`, that is `m -> phi(g^-1 m g)`; defined when
    /// `g` normalizes `M`.
    pub fn conj_act(&self, g: &Perm, phi: &LinChar) -> Result<LinChar> {
        let gi = g.inverse();
        let mut bits = 0;
        for (j, t) in self.gens.iter().enumerate() {
            let c = gi * *t * *g;
            let m = self.mask_of(&c).ok_or_else(|| Error::NotNormalizing { by: g.to_string() })?;
            bits |= phi.sign_bit(m) << j;
        }
        Ok(LinChar::new(bits, self.rank()))
    }

    /// Whether `g M g^-1 = M`.
    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        let gi = g.inverse();
        self.gens.iter().all(|t| self.contains(&(*g * *t * gi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{AlgElt, Scalar};

    fn klein() -> TwoGroup {
        TwoGroup::parse(4, &["(12)", "(34)"]).unwrap()
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(TwoGroup::parse(4, &["(123)"]), Err(Error::NotElementaryAbelian(_))));
        assert!(matches!(TwoGroup::parse(4, &["(12)", "(13)"]), Err(Error::NotElementaryAbelian(_))));
        assert!(matches!(TwoGroup::parse(4, &["(12)", "(12)"]), Err(Error::NotElementaryAbelian(_))));
    }

    #[test]
    fn idempotents_are_orthogonal_and_complete() {
        let m = klein();
        let chars = m.characters();
        let mut sum = AlgElt::zero(4);
        for a in &chars {
            let ea: AlgElt = m.idempotent(a);
            assert_eq!(&ea * &ea, ea);
            for b in &chars {
                if a != b {
                    assert!((&ea * &m.idempotent(b)).is_zero());
                }
            }
            sum = sum + ea;
        }
        assert_eq!(sum, AlgElt::one(4));
    }

    #[test]
    fn idempotent_absorbs_group_elements() {
        let m = klein();
        let phi = LinChar::parse("phi1", 2).unwrap();
        let e: AlgElt = m.idempotent(&phi);
        let t1 = AlgElt::basis(m.element(1));
        assert_eq!(&t1 * &e, e.scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn conjugation_action() {
        // (13)(24) swaps the two generators, so it swaps phi1 and phi2
        let m = klein();
        let g = Perm::parse("(13)(24)", 4).unwrap();
        let phi1 = LinChar::parse("phi1", 2).unwrap();
        assert_eq!(m.conj_act(&g, &phi1).unwrap(), LinChar::parse("phi2", 2).unwrap());
        let bad = Perm::parse("(123)", 4).unwrap();
        assert!(m.conj_act(&bad, &phi1).is_err());
    }

    #[test]
    fn character_names_round_trip() {
        for b in 0..16 {
            let c = LinChar::new(b, 4);
            assert_eq!(LinChar::parse(&c.name(), 4).unwrap(), c);
            assert_eq!(LinChar::parse(&c.to_string(), 4).unwrap(), c);
        }
        assert_eq!(LinChar::parse("(1,0,1,1)", 4).unwrap().name(), "phi1*phi3*phi4");
    }
}
