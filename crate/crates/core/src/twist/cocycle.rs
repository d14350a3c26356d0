use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{QiSqrt5, Root4};
use crate::groupalg::{LinChar, TwoGroup};
use crate::perm::Perm;

const NONE: u32 = u32::MAX;

/// A normalized 2-cocycle with values in `{1, i, -1, -i}` on a subgroup of
/// `F_2^rank`.
///
/// Group elements are bit masks. For the character group of `M` the subgroup
/// is everything and bit `j` is the exponent of `phi_{j+1}`; block cocycles on
/// pairs `(phi, psi)` use the mask `phi | psi << k` inside `F_2^{2k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    name: String,
    rank: usize,
    elements: Vec<u32>,
    pos: Vec<u32>,
    values: Vec<Root4>,
    bichar: Option<Vec<u32>>,
    pair_split: Option<usize>,
}

/// `|Rad(c)|` matrix blocks, each of dimension `|N/Rad(c)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnProfile {
    pub group_order: usize,
    pub radical_order: usize,
    pub block_count: usize,
    pub block_dim: usize,
    pub irrep_dim: usize,
}

fn isqrt_exact(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

impl Cocycle {
    /// Tabulate `f` on `elements` (a subgroup of `F_2^rank`) and validate
    /// normalization and the cocycle identity.
    pub fn from_fn<G: Fn(u32, u32) -> Root4>(name: &str, rank: usize, elements: &[u32], f: G) -> Result<Cocycle> {
        let c = Cocycle::tabulate(name, rank, elements, f)?;
        c.validate()?;
        Ok(c)
    }

    /// Tabulate without the cubic cocycle-identity check; for tables that are
    /// cocycles by construction, such as restrictions and products.
    pub(crate) fn tabulate<G: Fn(u32, u32) -> Root4>(name: &str, rank: usize, elements: &[u32], f: G) -> Result<Cocycle> {
        if rank > 16 {
            return Err(Error::UnsupportedDegree(rank));
        }
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let mut pos = vec![NONE; 1 << rank];
        for (k, e) in elements.iter().enumerate() {
            if *e >= 1 << rank {
                return Err(Error::Parse(format!("element {e:#b} outside F_2^{rank}")));
            }
            pos[*e as usize] = k as u32;
        }
        if elements.first() != Some(&0) || elements.iter().any(|a| elements.iter().any(|b| pos[(a ^ b) as usize] == NONE)) {
            return Err(Error::Parse("cocycle domain is not a subgroup".into()));
        }
        let n = elements.len();
        let mut values = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                values.push(f(*a, *b));
            }
        }
        let c = Cocycle {
            name: name.to_string(),
            rank,
            elements,
            pos,
            values,
            bichar: None,
            pair_split: None,
        };
        Ok(c)
    }

    /// All of `F_2^rank`.
    pub fn full_domain(rank: usize) -> Vec<u32> {
        (0..1u32 << rank).collect()
    }

    /// `(-1)^(alpha^T B beta)` with `b[i][j]` the entry `B_{i+1, j+1}`.
    pub fn from_bichar(name: &str, b: &[Vec<u8>]) -> Result<Cocycle> {
        let rank = b.len();
        if b.iter().any(|r| r.len() != rank || r.iter().any(|x| *x > 1)) {
            return Err(Error::Parse("bicharacter matrix must be square over Z_2".into()));
        }
        // row i as a mask over j
        let rows: Vec<u32> = b
            .iter()
            .map(|r| r.iter().enumerate().fold(0, |m, (j, x)| m | (u32::from(*x) << j)))
            .collect();
        let f = |a: u32, c: u32| {
            let mut e = 0;
            for (i, row) in rows.iter().enumerate() {
                if a >> i & 1 == 1 {
                    e ^= (row & c).count_ones() & 1;
                }
            }
            Root4::sign(e)
        };
        let mut c = Cocycle::from_fn(name, rank, &Cocycle::full_domain(rank), f)?;
        c.bichar = Some(rows);
        Ok(c)
    }

    /// Rows and columns indexed by characters in mask order.
    pub fn from_table(name: &str, rank: usize, rows: &[Vec<Root4>]) -> Result<Cocycle> {
        let n = 1usize << rank;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("table must be {n} x {n}")));
        }
        Cocycle::from_fn(name, rank, &Cocycle::full_domain(rank), |a, b| rows[a as usize][b as usize])
    }

    /// Normalization and the 2-cocycle identity on every triple.
    pub fn validate(&self) -> Result<()> {
        let n = self.elements.len();
        for k in 0..n {
            if self.values[k] != Root4::ONE || self.values[k * n] != Root4::ONE {
                let e = self.label(self.elements[k]);
                return Err(Error::NotNormalized(e.clone(), self.label(0)));
            }
        }
        for (ia, a) in self.elements.iter().enumerate() {
            for (ib, b) in self.elements.iter().enumerate() {
                let ab = self.pos[(a ^ b) as usize] as usize;
                let wab = self.values[ia * n + ib];
                for (ic, c) in self.elements.iter().enumerate() {
                    let bc = self.pos[(b ^ c) as usize] as usize;
                    let lhs = wab * self.values[ab * n + ic];
                    let rhs = self.values[ib * n + ic] * self.values[ia * n + bc];
                    if lhs != rhs {
                        return Err(Error::CocycleIdentity {
                            phi: self.label(*a),
                            psi: self.label(*b),
                            rho: self.label(*c),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Cocycle {
        self.name = name.to_string();
        self
    }

    /// Display masks as pairs of `k`-bit characters.
    pub fn with_pair_split(mut self, k: usize) -> Cocycle {
        self.pair_split = Some(k);
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u32) -> bool {
        (a as usize) < self.pos.len() && self.pos[a as usize] != NONE
    }

    pub fn bichar_rows(&self) -> Option<&[u32]> {
        self.bichar.as_deref()
    }

    /// Panics when an argument is outside the domain; see [`Cocycle::try_value`].
    pub fn value(&self, a: u32, b: u32) -> Root4 {
        self.try_value(a, b).expect("argument outside the cocycle domain")
    }

    pub fn try_value(&self, a: u32, b: u32) -> Option<Root4> {
        let ia = *self.pos.get(a as usize)?;
        let ib = *self.pos.get(b as usize)?;
        if ia == NONE || ib == NONE {
            return None;
        }
        Some(self.values[ia as usize * self.elements.len() + ib as usize])
    }

    pub fn value_chars(&self, a: &LinChar, b: &LinChar) -> Root4 {
        self.value(a.bits, b.bits)
    }

    pub fn label(&self, a: u32) -> String {
        match self.pair_split {
            Some(k) => format!("({}, {})", LinChar::new(a, k), LinChar::new(a >> k, k)),
            None => LinChar::new(a, self.rank).to_string(),
        }
    }

    pub fn restrict(&self, name: &str, subgroup: &[u32]) -> Result<Cocycle> {
        if let Some(x) = subgroup.iter().find(|x| !self.contains(**x)) {
            return Err(Error::Parse(format!("{} is outside the domain", self.label(*x))));
        }
        let mut c = Cocycle::from_fn(name, self.rank, subgroup, |a, b| self.value(a, b))?;
        c.pair_split = self.pair_split;
        Ok(c)
    }

    /// Pointwise product.
    pub fn multiply(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.rank != other.rank || self.elements != other.elements {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let name = format!("{}*{}", self.name, other.name);
        Cocycle::from_fn(&name, self.rank, &self.elements, |a, b| self.value(a, b) * other.value(a, b))
    }

    pub fn inverse(&self) -> Cocycle {
        let mut c = self.clone();
        c.values.iter_mut().for_each(|v| *v = v.inv());
        c.name = format!("{}^-1", self.name);
        c
    }

    /// `dq(a, b) = q(a) q(b) / q(ab)` on all of `F_2^rank`, `q` indexed by mask.
    pub fn coboundary(rank: usize, q: &[QiSqrt5]) -> Result<Cocycle> {
        let n = 1usize << rank;
        if q.len() != n {
            return Err(Error::Parse(format!("q needs {n} values")));
        }
        if q[0] != QiSqrt5::from_int(1) {
            return Err(Error::CoboundaryNotNormalized);
        }
        let inv: Vec<QiSqrt5> = q.iter().map(QiSqrt5::checked_inverse).collect::<Result<_>>()?;
        let mut table = vec![vec![Root4::ONE; n]; n];
        for a in 0..n {
            for b in 0..n {
                let v = q[a].clone() * q[b].clone() * inv[a ^ b].clone();
                table[a][b] = Root4::from_scalar(&v).ok_or_else(|| Error::NotRootOfUnity(v.to_string()))?;
            }
        }
        Cocycle::from_table("dq", rank, &table)
    }

    /// Every value is `+-1`, so the twist is defined over `Q`.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.is_real())
    }

    /// `Rad(c) = {a : c(a, b) = c(b, a) for all b}`.
    pub fn radical(&self) -> Vec<u32> {
        self.elements
            .iter()
            .copied()
            .filter(|a| self.elements.iter().all(|b| self.value(*a, *b) == self.value(*b, *a)))
            .collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().len() == 1
    }

    pub fn wedderburn_profile(&self) -> Result<WedderburnProfile> {
        let rad = self.radical().len();
        let quotient = self.order() / rad;
        let irrep = isqrt_exact(quotient).ok_or(Error::NonSquareQuotient(quotient))?;
        Ok(WedderburnProfile {
            group_order: self.order(),
            radical_order: rad,
            block_count: rad,
            block_dim: quotient,
            irrep_dim: irrep,
        })
    }

    /// Multiplicative in each argument separately.
    pub fn is_bicharacter(&self) -> bool {
        let e = &self.elements;
        e.iter().all(|a| {
            e.iter().all(|b| {
                e.iter().all(|c| {
                    self.value(a ^ b, *c) == self.value(*a, *c) * self.value(*b, *c)
                        && self.value(*c, a ^ b) == self.value(*c, *a) * self.value(*c, *b)
                })
            })
        })
    }

    /// Whether `c(g > a < g^-1, g > b < g^-1) = c(a, b)` for all characters.
    pub fn is_invariant_under(&self, m: &TwoGroup, g: &Perm) -> Result<bool> {
        let k = m.rank();
        if self.elements.len() != 1 << k {
            return Err(Error::RankMismatch(self.rank, k));
        }
        let act: Vec<u32> = (0..1u32 << k)
            .map(|a| m.conj_act(g, &LinChar::new(a, k)).map(|c| c.bits))
            .collect::<Result<_>>()?;
        Ok(self
            .elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.value(act[*a as usize], act[*b as usize]) == self.value(*a, *b))))
    }

    /// Text table: header row of bit vectors, one labelled row per element.
    pub fn to_table_text(&self) -> String {
        let mut s = String::new();
        let w = self.rank + 1;
        let names: Vec<String> = self.elements.iter().map(|a| self.bits_text(*a)).collect();
        let _ = write!(s, "{:w$}", "");
        for n in &names {
            let _ = write!(s, " {n:>w$}");
        }
        s.push('\n');
        for (a, n) in self.elements.iter().zip(&names) {
            let _ = write!(s, "{n:w$}");
            for b in &self.elements {
                let _ = write!(s, " {:>w$}", self.value(*a, *b).to_string());
            }
            s.push('\n');
        }
        s
    }

    fn bits_text(&self, a: u32) -> String {
        (0..self.rank).map(|j| if a >> j & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// Parse either a table (header row of characters, then one row per
    /// character beginning with its label) or, after a `bichar` line, a
    /// square 0/1 matrix. Lines starting with `#` are ignored.
    pub fn parse(name: &str, text: &str) -> Result<Cocycle> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let Some(first) = lines.first() else {
            return Err(Error::Parse("empty cocycle description".into()));
        };
        if first.eq_ignore_ascii_case("bichar") {
            let b: Vec<Vec<u8>> = lines[1..]
                .iter()
                .map(|l| {
                    l.split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(format!("bad matrix entry `{t}`"))))
                        .collect::<Result<Vec<u8>>>()
                })
                .collect::<Result<_>>()?;
            return Cocycle::from_bichar(name, &b);
        }
        let body = if first.eq_ignore_ascii_case("table") { &lines[1..] } else { &lines[..] };
        let header: Vec<&str> = body.first().ok_or_else(|| Error::Parse("missing header".into()))?.split_whitespace().collect();
        let n = header.len();
        if !n.is_power_of_two() {
            return Err(Error::Parse(format!("{n} columns is not a power of two")));
        }
        let rank = n.trailing_zeros() as usize;
        let cols: Vec<u32> = header.iter().map(|h| LinChar::parse(h, rank).map(|c| c.bits)).collect::<Result<_>>()?;
        let mut table = vec![vec![None; n]; n];
        if body.len() != n + 1 {
            return Err(Error::Parse(format!("expected {n} rows, found {}", body.len() - 1)));
        }
        for line in &body[1..] {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n + 1 {
                return Err(Error::Parse(format!("row `{line}` has {} entries", toks.len())));
            }
            let r = LinChar::parse(toks[0], rank)?.bits as usize;
            for (t, c) in toks[1..].iter().zip(&cols) {
                let v = Root4::parse(t).ok_or_else(|| Error::NotRootOfUnity((*t).to_string()))?;
                table[r][*c as usize] = Some(v);
            }
        }
        let rows: Vec<Vec<Root4>> = table
            .into_iter()
            .map(|r| r.into_iter().collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse("table has repeated or missing entries".into()))?;
        Cocycle::from_table(name, rank, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::builtin;

    #[test]
    fn bicharacter_values() {
        let w = Cocycle::from_bichar("w", &[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(w.value(0b01, 0b10), Root4::MINUS_ONE);
        assert_eq!(w.value(0b10, 0b01), Root4::ONE);
        assert!(w.is_bicharacter());
        assert!(w.is_nondegenerate());
    }

    #[test]
    fn rejects_non_cocycles() {
        let mut rows = vec![vec![Root4::ONE; 4]; 4];
        rows[1][2] = Root4::I;
        assert!(matches!(Cocycle::from_table("bad", 2, &rows), Err(Error::CocycleIdentity { .. })));
        let mut rows = vec![vec![Root4::ONE; 4]; 4];
        rows[0][3] = Root4::MINUS_ONE;
        assert!(matches!(Cocycle::from_table("bad", 2, &rows), Err(Error::NotNormalized(..))));
    }

    #[test]
    fn coboundary_checks() {
        let mut q = vec![QiSqrt5::from_int(1); 4];
        q[0] = QiSqrt5::from_int(2);
        assert_eq!(Cocycle::coboundary(2, &q), Err(Error::CoboundaryNotNormalized));
        let q = vec![QiSqrt5::from_int(1), QiSqrt5::from_int(2), QiSqrt5::from_int(1), QiSqrt5::from_int(1)];
        assert!(matches!(Cocycle::coboundary(2, &q), Err(Error::NotRootOfUnity(_))));
        let q = vec![QiSqrt5::from_int(1), QiSqrt5::i(), QiSqrt5::from_int(-1), QiSqrt5::i()];
        let d = Cocycle::coboundary(2, &q).unwrap();
        assert_eq!(d.value(1, 1), Root4::MINUS_ONE);
    }

    #[test]
    fn trivial_cocycle_radical_is_everything() {
        let t = Cocycle::from_fn("1", 3, &Cocycle::full_domain(3), |_, _| Root4::ONE).unwrap();
        assert_eq!(t.radical().len(), 8);
        let p = t.wedderburn_profile();
        assert_eq!(p.unwrap().block_count, 8);
    }

    #[test]
    fn degenerate_profiles() {
        let w = Cocycle::from_bichar("w", &[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(w.wedderburn_profile().unwrap().irrep_dim, 2);
        let odd = Cocycle::from_fn("1", 1, &[0, 1], |_, _| Root4::ONE).unwrap();
        assert_eq!(odd.wedderburn_profile().unwrap().irrep_dim, 1);
    }

    #[test]
    fn table_text_round_trip() {
        for name in builtin::NAMES {
            let c = builtin::load(name).unwrap().cocycle;
            let back = Cocycle::parse(name, &c.to_table_text()).unwrap();
            assert_eq!(back.elements, c.elements);
            assert_eq!(back.values, c.values);
        }
    }

    #[test]
    fn parse_bichar_and_named_table() {
        let c = Cocycle::parse("k", "# kappa\nbichar\n1 0\n1 0\n").unwrap();
        let t = Cocycle::parse(
            "k",
            "eps phi1 phi2 phi1*phi2\neps 1 1 1 1\nphi1 1 -1 1 -1\nphi2 1 -1 1 -1\nphi1*phi2 1 1 1 1\n",
        )
        .unwrap();
        assert_eq!(c.values, t.values);
        assert!(Cocycle::parse("x", "").is_err());
        assert!(Cocycle::parse("x", "00 10 01\n").is_err());
    }
}
