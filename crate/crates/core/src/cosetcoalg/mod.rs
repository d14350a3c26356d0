//! The decomposition of `(K G)_J` into subcoalgebras `K(M tau M)`, the dual
//! twisted group algebra of each block, and cocharacters.

mod sandwich;

pub use sandwich::{
    sandwich_coassociative, sandwich_coproduct, sandwich_counit_law, sandwich_expand, SandwichTerms,
};

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5, Root4};
use crate::groupalg::{GroupAlgebraElement, LinChar, TwoGroup};
use crate::linalg;
use crate::perm::Perm;
use crate::subgroup::SubgroupTable;
use crate::twist::{Cocycle, TwistElt, WedderburnProfile};

/// Mask of the pair `(phi, psi)` for characters of rank `k`.
pub fn pair_mask(phi: u32, psi: u32, k: usize) -> u32 {
    phi | psi << k
}

pub fn split_pair(nu: u32, k: usize) -> (u32, u32) {
    (nu & ((1 << k) - 1), nu >> k)
}

/// One double coset `M tau M` with its block group
/// `N = {(phi, psi) : e_phi tau e_psi != 0}` and the cocycle
/// `(phi, psi), (phi', psi') -> omega(phi, phi') / omega(psi, psi')` on `N`.
#[derive(Clone, Debug)]
pub struct CosetBlock {
    representative: Perm,
    elements: Vec<Perm>,
    rank: usize,
    pairs: Vec<u32>,
    cocycle: Cocycle,
    group_like: bool,
}

/// `d * sum_{nu in Z} e_phi tau e_psi` with `d = sqrt |N/Z|`.
#[derive(Clone)]
pub struct Cocharacter<F> {
    pub representative: Perm,
    pub value: GroupAlgebraElement<F>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralIdempotentReport {
    pub idempotent: bool,
    pub central: bool,
    pub rank: usize,
    pub expected_rank: usize,
}

impl CentralIdempotentReport {
    pub fn passed(&self) -> bool {
        self.idempotent && self.central && self.rank == self.expected_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub representative: String,
    pub pairs_checked: usize,
    pub support_in_block: bool,
    pub failures: Vec<String>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.support_in_block && self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub representative: String,
    pub size: usize,
    pub n_order: usize,
    pub center_order: usize,
    pub dimension: usize,
    pub group_like: bool,
    pub profile: WedderburnProfile,
}

impl CosetBlock {
    /// Block of `M tau M`; `group_like` records whether every element of the
    /// coset is group-like for the twisted coproduct.
    pub fn new(m: &TwoGroup, omega: &Cocycle, tau: Perm, group_like: bool) -> Result<CosetBlock> {
        let elements = m.table().double_coset_of(&tau);
        CosetBlock::with_elements(m, omega, tau, elements, group_like)
    }

    fn with_elements(m: &TwoGroup, omega: &Cocycle, tau: Perm, elements: Vec<Perm>, group_like: bool) -> Result<CosetBlock> {
        let k = m.rank();
        let ti = tau.inverse();
        // L = M meet tau^-1 M tau, as pairs (mask of m, mask of tau m tau^-1)
        let l: Vec<(u32, u32)> = m
            .elements()
            .iter()
            .filter_map(|x| {
                let y = tau * *x * ti;
                m.mask_of(&y).map(|d| (m.mask_of(x).expect("element of M"), d))
            })
            .collect();
        let mut pairs = Vec::new();
        for phi in 0..1u32 << k {
            for psi in 0..1u32 << k {
                let ok = l.iter().all(|(g, d)| (psi & g).count_ones() % 2 == (phi & d).count_ones() % 2);
                if ok {
                    pairs.push(pair_mask(phi, psi, k));
                }
            }
        }
        pairs.sort_unstable();
        if pairs.len() != elements.len() {
            return Err(Error::Mismatch {
                label: format!("|N| for {tau}"),
                expected: elements.len().to_string(),
                computed: pairs.len().to_string(),
            });
        }
        let cocycle = Cocycle::tabulate(&format!("block {tau}"), 2 * k, &pairs, |a, b| {
            let (a1, a2) = split_pair(a, k);
            let (b1, b2) = split_pair(b, k);
            omega.value(a1, b1) * omega.value(a2, b2).inv()
        })?
        .with_pair_split(k);
        Ok(CosetBlock {
            representative: tau,
            elements,
            rank: k,
            pairs,
            cocycle,
            group_like,
        })
    }

    pub fn representative(&self) -> &Perm {
        &self.representative
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_group_like(&self) -> bool {
        self.group_like
    }

    /// `N` as masks `phi | psi << k`, sorted.
    pub fn pairs(&self) -> &[u32] {
        &self.pairs
    }

    pub fn pair_chars(&self) -> Vec<(LinChar, LinChar)> {
        self.pairs.iter().map(|nu| self.chars_of(*nu)).collect()
    }

    pub fn chars_of(&self, nu: u32) -> (LinChar, LinChar) {
        let (a, b) = split_pair(nu, self.rank);
        (LinChar::new(a, self.rank), LinChar::new(b, self.rank))
    }

    pub fn contains_pair(&self, nu: u32) -> bool {
        self.pairs.binary_search(&nu).is_ok()
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    /// `e_phi tau e_psi`.
    pub fn basis_element<F: Field>(&self, m: &TwoGroup, nu: u32) -> GroupAlgebraElement<F> {
        let (phi, psi) = self.chars_of(nu);
        let left = m.idempotent::<F>(&phi).right_translate(&self.representative);
        &left * &m.idempotent::<F>(&psi)
    }

    /// `u_a u_b = c(a, b) u_{ab}` in the dual twisted group algebra.
    pub fn dual_product(&self, a: u32, b: u32) -> Result<(Root4, u32)> {
        for x in [a, b] {
            if !self.contains_pair(x) {
                return Err(Error::PairNotInBlock(self.cocycle.label(x)));
            }
        }
        Ok((self.cocycle.value(a, b), a ^ b))
    }

    /// `Z = Rad` of the block cocycle.
    pub fn center(&self) -> Vec<u32> {
        self.cocycle.radical()
    }

    pub fn profile(&self) -> Result<WedderburnProfile> {
        self.cocycle.wedderburn_profile()
    }

    pub fn matrix_cocharacter<F: Field>(&self, m: &TwoGroup) -> Result<Cocharacter<F>> {
        let prof = self.profile()?;
        let d = prof.irrep_dim;
        let mut value = GroupAlgebraElement::zero(m.degree());
        for nu in self.center() {
            value.add_scaled(&self.basis_element::<F>(m, nu), &F::one());
        }
        Ok(Cocharacter {
            representative: self.representative,
            value: value.scale(&F::from_int(d as i64)),
            dimension: d,
        })
    }

    fn product(&self, x: &FxHashMap<u32, QiSqrt5>, y: &FxHashMap<u32, QiSqrt5>) -> FxHashMap<u32, QiSqrt5> {
        let mut out: FxHashMap<u32, QiSqrt5> = FxHashMap::default();
        for (a, s) in x {
            for (b, t) in y {
                let c = QiSqrt5::from_root4(self.cocycle.value(*a, *b)) * s.clone() * t.clone();
                *out.entry(a ^ b).or_insert_with(|| QiSqrt5::from_int(0)) += &c;
            }
        }
        out.retain(|_, v| *v != QiSqrt5::from_int(0));
        out
    }

    /// `c = (1/|Z|) sum_{nu in Z} u_nu`: idempotent, central, and the span of
    /// `{u_g c}` has dimension `|N|/|Z|`.
    pub fn central_idempotent_check(&self) -> CentralIdempotentReport {
        let z = self.center();
        let w = QiSqrt5::ratio(1, z.len() as i64);
        let c: FxHashMap<u32, QiSqrt5> = z.iter().map(|nu| (*nu, w.clone())).collect();
        let idempotent = self.product(&c, &c) == c;
        let mut central = true;
        let index: FxHashMap<u32, usize> = self.pairs.iter().enumerate().map(|(i, nu)| (*nu, i)).collect();
        let mut rows = Vec::with_capacity(self.pairs.len());
        for g in &self.pairs {
            let u: FxHashMap<u32, QiSqrt5> = [(*g, QiSqrt5::from_int(1))].into_iter().collect();
            let uc = self.product(&u, &c);
            if uc != self.product(&c, &u) {
                central = false;
            }
            let mut row = vec![QiSqrt5::from_int(0); self.pairs.len()];
            for (nu, v) in uc {
                row[index[&nu]] = v;
            }
            rows.push(row);
        }
        CentralIdempotentReport {
            idempotent,
            central,
            rank: linalg::rank(&rows),
            expected_rank: self.pairs.len() / z.len(),
        }
    }

    pub fn report(&self) -> Result<BlockReport> {
        let profile = self.profile()?;
        Ok(BlockReport {
            representative: self.representative.to_string(),
            size: self.size(),
            n_order: self.pairs.len(),
            center_order: profile.radical_order,
            dimension: profile.irrep_dim,
            group_like: self.group_like,
            profile,
        })
    }
}

/// Double coset blocks of `M` in `group`, keyed by least representative.
pub fn decompose<F: Field>(group: &SubgroupTable, twist: &TwistElt<F>) -> Result<Vec<CosetBlock>> {
    let m = twist.subgroup();
    let cosets = m.table().double_cosets(group)?;
    cosets
        .into_iter()
        .map(|dc| {
            let gl = dc.elements.iter().all(|g| twist.is_group_like(g));
            CosetBlock::with_elements(m, twist.cocycle(), dc.representative, dc.elements, gl)
        })
        .collect()
}

/// Every `g` with `Delta_J(g) = g (x) g`.
pub fn group_like_blocks<F: Field>(group: &SubgroupTable, twist: &TwistElt<F>) -> Vec<Perm> {
    twist.group_like_elements(group)
}

/// `Delta_J(g)` lies in `K(M tau M) (x) K(M tau M)` for every `g` in the block.
pub fn check_block_closure<F: Field>(twist: &TwistElt<F>, block: &CosetBlock) -> bool {
    let set: FxHashSet<Perm> = block.elements.iter().copied().collect();
    block.elements.iter().all(|g| {
        twist
            .twisted_coproduct(&GroupAlgebraElement::basis(*g))
            .iter()
            .all(|(k, _)| set.contains(&k[0]) && set.contains(&k[1]))
    })
}

/// For every `nu` in `N`, expresses `Delta_J(e_phi tau e_psi)` in the block
/// basis (by inverting the matrix of that basis in group coordinates) and
/// compares the coordinates with `<u_a u_b, e_phi tau e_psi>`, i.e. with
/// `c(a, b)` when `ab = nu` and `0` otherwise.
pub fn pairing_check<F: Field>(twist: &TwistElt<F>, block: &CosetBlock) -> Result<PairingReport> {
    let m = twist.subgroup();
    let n = block.size();
    let pos: FxHashMap<Perm, usize> = block.elements.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let basis: Vec<GroupAlgebraElement<F>> = block.pairs.iter().map(|nu| block.basis_element(m, *nu)).collect();
    let s: linalg::Matrix<F> = basis
        .iter()
        .map(|b| {
            let mut row = vec![F::zero(); n];
            for (g, c) in b.iter() {
                row[pos[g]] = c.clone();
            }
            row
        })
        .collect();
    let sinv = linalg::invert(&s).ok_or(Error::DependentBasis {
        rank: linalg::rank(&s),
        len: n,
    })?;
    let sinv_t: linalg::Matrix<F> = (0..n).map(|i| (0..n).map(|b| sinv[b][i].clone()).collect()).collect();
    let mut failures = Vec::new();
    let mut support_in_block = true;
    for (idx, nu) in block.pairs.iter().enumerate() {
        let t = twist.twisted_coproduct(&basis[idx]);
        let mut dense = vec![vec![F::zero(); n]; n];
        for (k, c) in t.iter() {
            match (pos.get(&k[0]), pos.get(&k[1])) {
                (Some(a), Some(b)) => dense[*a][*b] += c,
                _ => support_in_block = false,
            }
        }
        // coordinates C = Sinv^T T Sinv
        let coords = linalg::mat_mul(&linalg::mat_mul(&sinv_t, &dense), &sinv);
        for (i, a) in block.pairs.iter().enumerate() {
            for (j, b) in block.pairs.iter().enumerate() {
                let expected = if a ^ b == *nu {
                    F::from_root4(block.cocycle.value(*a, *b)).ok_or_else(|| Error::NotRepresentable("i".into()))?
                } else {
                    F::zero()
                };
                if coords[i][j] != expected {
                    failures.push(format!(
                        "{} at ({}, {})",
                        block.cocycle.label(*nu),
                        block.cocycle.label(*a),
                        block.cocycle.label(*b)
                    ));
                }
            }
        }
    }
    Ok(PairingReport {
        representative: block.representative.to_string(),
        pairs_checked: block.pairs.len(),
        support_in_block,
        failures,
    })
}
