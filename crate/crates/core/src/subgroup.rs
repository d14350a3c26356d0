//! Subgroups of `S_n` given by generators, and double cosets.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::perm::{Parity, Perm};

/// A subgroup of `S_degree` with its full, sorted element list.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    members: FxHashSet<Perm>,
}

/// One block of a double coset partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    /// Least element of the block.
    pub representative: Perm,
    /// Sorted elements.
    pub elements: Vec<Perm>,
}

impl SubgroupTable {
    /// Closure of `gens` under products (breadth-first). With no generators the
    /// trivial group of the given degree is returned.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<SubgroupTable> {
        let id = Perm::identity(degree);
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut members = FxHashSet::default();
        members.insert(id);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = *g * x;
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = members.iter().copied().collect();
        elements.sort();
        Ok(SubgroupTable {
            degree,
            generators: gens.to_vec(),
            elements,
            members,
        })
    }

    pub fn symmetric(n: usize) -> SubgroupTable {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[1, 2]]).unwrap());
            let long: Vec<usize> = (1..=n).collect();
            gens.push(Perm::from_cycles(n, &[&long]).unwrap());
        }
        SubgroupTable::generate(n, &gens).unwrap()
    }

    pub fn alternating(n: usize) -> SubgroupTable {
        let gens: Vec<Perm> = (3..=n)
            .map(|k| Perm::from_cycles(n, &[&[1, 2, k]]).unwrap())
            .collect();
        SubgroupTable::generate(n, &gens).unwrap()
    }

    /// Parse a group spec `S<n>` or `A<n>`.
    pub fn from_spec(spec: &str) -> Result<SubgroupTable> {
        let spec = spec.trim();
        let (kind, n) = spec.split_at(1.min(spec.len()));
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad group spec `{spec}`")))?;
        if !(1..=12).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        match kind {
            "S" | "s" => Ok(SubgroupTable::symmetric(n)),
            "A" | "a" => Ok(SubgroupTable::alternating(n)),
            _ => Err(Error::Parse(format!("bad group spec `{spec}`"))),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupTable) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| *a * *b == *b * *a))
    }

    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        let gi = g.inverse();
        self.generators.iter().all(|m| self.contains(&(*g * *m * gi)))
    }

    pub fn all_even(&self) -> bool {
        self.generators.iter().all(|g| g.parity() == Parity::Even)
    }

    /// `|self ∩ tau self tau^-1|`.
    pub fn conjugate_intersection_order(&self, tau: &Perm) -> usize {
        let ti = tau.inverse();
        self.elements
            .iter()
            .filter(|m| self.contains(&(ti * **m * *tau)))
            .count()
    }

    /// The set `M tau M`, sorted.
    pub fn double_coset_of(&self, tau: &Perm) -> Vec<Perm> {
        let mut set = FxHashSet::default();
        for a in &self.elements {
            let at = *a * *tau;
            for b in &self.elements {
                set.insert(at * *b);
            }
        }
        let mut v: Vec<Perm> = set.into_iter().collect();
        v.sort();
        v
    }

    /// Partition of `group` into double cosets `self tau self`, ordered by
    /// representative (the least element of each block).
    pub fn double_cosets(&self, group: &SubgroupTable) -> Result<Vec<DoubleCoset>> {
        if !self.is_subgroup_of(group) {
            return Err(Error::NotContained(format!(
                "subgroup of order {} in group of order {}",
                self.order(),
                group.order()
            )));
        }
        let mut assigned: FxHashSet<Perm> = FxHashSet::default();
        let mut out = Vec::new();
        for g in group.elements() {
            if assigned.contains(g) {
                continue;
            }
            let elements = self.double_coset_of(g);
            assigned.extend(elements.iter().copied());
            out.push(DoubleCoset {
                representative: elements[0],
                elements,
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn generation_examples() {
        let k = SubgroupTable::generate(4, &[p("(12)(34)", 4), p("(13)(24)", 4)]).unwrap();
        assert_eq!(k.order(), 4);
        assert!(k.contains(&p("(14)(23)", 4)));
        let m = SubgroupTable::generate(8, &[p("(12)", 8), p("(34)", 8), p("(56)", 8), p("(78)", 8)]).unwrap();
        assert_eq!(m.order(), 16);
        assert_eq!(SubgroupTable::generate(5, &[]).unwrap().order(), 1);
        assert_eq!(SubgroupTable::symmetric(5).order(), 120);
        assert_eq!(SubgroupTable::alternating(5).order(), 60);
        assert_eq!(SubgroupTable::from_spec("S4").unwrap().order(), 24);
        assert!(SubgroupTable::from_spec("Q4").is_err());
    }

    #[test]
    fn generate_is_idempotent() {
        let g = SubgroupTable::alternating(5);
        let again = SubgroupTable::generate(5, g.elements()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn s4_double_cosets_of_transposition_pair() {
        let s4 = SubgroupTable::symmetric(4);
        let m = SubgroupTable::generate(4, &[p("(12)", 4), p("(34)", 4)]).unwrap();
        let mut sizes: Vec<usize> = m.double_cosets(&s4).unwrap().iter().map(|d| d.elements.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4, 16]);
    }

    #[test]
    fn double_coset_size_formula() {
        let a5 = SubgroupTable::alternating(5);
        let m = SubgroupTable::generate(5, &[p("(12)(34)", 5), p("(13)(24)", 5)]).unwrap();
        let blocks = m.double_cosets(&a5).unwrap();
        let total: usize = blocks.iter().map(|b| b.elements.len()).sum();
        assert_eq!(total, 60);
        for b in &blocks {
            assert_eq!(
                b.elements.len() * m.conjugate_intersection_order(&b.representative),
                m.order() * m.order()
            );
        }
        assert_eq!(blocks.iter().filter(|b| b.elements.len() == 16).count(), 3);
    }

    #[test]
    fn not_contained_is_an_error() {
        let a4 = SubgroupTable::alternating(4);
        let m = SubgroupTable::generate(4, &[p("(12)", 4)]).unwrap();
        assert!(matches!(m.double_cosets(&a4), Err(Error::NotContained(_))));
    }

    #[test]
    fn s8_coset_of_three_cycle() {
        let gens: Vec<Perm> = ["(12)", "(34)", "(56)", "(78)"].iter().map(|s| p(s, 8)).collect();
        let m = SubgroupTable::generate(8, &gens).unwrap();
        assert_eq!(m.double_coset_of(&p("(123)", 8)).len(), 64);
        assert_eq!(m.double_coset_of(&p("(12)(56)", 8)), m.elements().to_vec());
    }
}
