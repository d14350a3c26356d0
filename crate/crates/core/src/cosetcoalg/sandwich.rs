//! The twisted coproduct in the block basis `u_nu = e_phi g e_psi`, where it is
//! given by the block cocycle:
//! `Delta_J(u_nu) = sum_{a in N} c(a, a nu) u_a (x) u_{a nu}`.

use rustc_hash::FxHashMap;

use super::CosetBlock;
use crate::error::Result;
use crate::field::{Field, Root4};
use crate::groupalg::{GroupAlgebraElement, Tensor2, TwoGroup};

/// Coefficients over `Z[i]` keyed by tuples of pair masks.
pub type SandwichTerms<const K: usize> = FxHashMap<[u32; K], (i64, i64)>;

fn times(r: Root4, (a, b): (i64, i64)) -> (i64, i64) {
    match r.exponent() {
        0 => (a, b),
        1 => (-b, a),
        2 => (-a, -b),
        _ => (b, -a),
    }
}

fn add<const K: usize>(map: &mut SandwichTerms<K>, key: [u32; K], v: (i64, i64)) {
    let e = map.entry(key).or_insert((0, 0));
    e.0 += v.0;
    e.1 += v.1;
    if *e == (0, 0) {
        map.remove(&key);
    }
}

fn delta(block: &CosetBlock, nu: u32) -> impl Iterator<Item = (u32, u32, Root4)> + '_ {
    block.pairs().iter().map(move |a| (*a, a ^ nu, block.cocycle().value(*a, a ^ nu)))
}

pub fn sandwich_coproduct(block: &CosetBlock, nu: u32) -> SandwichTerms<2> {
    let mut out = SandwichTerms::default();
    for (a, b, c) in delta(block, nu) {
        add(&mut out, [a, b], times(c, (1, 0)));
    }
    out
}

/// `(Delta_J (x) Id) Delta_J (u_nu) = (Id (x) Delta_J) Delta_J (u_nu)`.
pub fn sandwich_coassociative(block: &CosetBlock, nu: u32) -> bool {
    let mut lhs = SandwichTerms::<3>::default();
    let mut rhs = SandwichTerms::<3>::default();
    for (a, b, c) in delta(block, nu) {
        let v = times(c, (1, 0));
        for (a1, a2, c1) in delta(block, a) {
            add(&mut lhs, [a1, a2, b], times(c1, v));
        }
        for (b1, b2, c2) in delta(block, b) {
            add(&mut rhs, [a, b1, b2], times(c2, v));
        }
    }
    lhs == rhs
}

/// `(epsilon (x) Id) Delta_J = Id = (Id (x) epsilon) Delta_J` on `u_nu`, using
/// `epsilon(e_phi g e_psi) = [phi = psi = eps]`.
pub fn sandwich_counit_law(block: &CosetBlock, nu: u32) -> bool {
    let d = sandwich_coproduct(block, nu);
    let left: Vec<_> = d.iter().filter(|(k, _)| k[0] == 0).collect();
    let right: Vec<_> = d.iter().filter(|(k, _)| k[1] == 0).collect();
    let unit = |v: &Vec<(&[u32; 2], &(i64, i64))>, slot: usize| v.len() == 1 && v[0].0[slot] == nu && *v[0].1 == (1, 0);
    unit(&left, 1) && unit(&right, 0)
}

/// Rewrite block-basis terms in the group basis.
pub fn sandwich_expand<F: Field>(m: &TwoGroup, block: &CosetBlock, terms: &SandwichTerms<2>) -> Result<Tensor2<F>> {
    let mut cache: FxHashMap<u32, GroupAlgebraElement<F>> = FxHashMap::default();
    let mut out = Tensor2::zero(m.degree());
    let i = F::from_root4(Root4::I);
    for (k, (re, im)) in terms {
        for x in k {
            cache.entry(*x).or_insert_with(|| block.basis_element(m, *x));
        }
        let mut c = F::from_int(*re);
        if *im != 0 {
            let i = i.clone().ok_or_else(|| crate::error::Error::NotRepresentable("i".into()))?;
            c = c + i * F::from_int(*im);
        }
        out.add_scaled(&Tensor2::outer([&cache[&k[0]], &cache[&k[1]]])?, &c);
    }
    Ok(out)
}
