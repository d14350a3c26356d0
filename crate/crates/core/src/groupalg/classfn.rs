use std::sync::OnceLock;

use num_traits::Zero;
use rustc_hash::FxHashSet;

use super::element::GroupAlgebraElement;
use super::tensor::Tensor2;
use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::perm::{Parity, Perm};
use crate::subgroup::SubgroupTable;

/// A linear functional on `K[S_n]` given by its values on permutations.
pub trait Functional {
    fn value(&self, g: &Perm) -> Result<QiSqrt5>;
    fn label(&self) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharGroup {
    /// `S_4` on the points `1..4`.
    S4,
    /// `A_5` on the points `1..5`.
    A5,
}

/// A class function on `S_4` or `A_5`, embedded in any `S_n` as the
/// permutations fixing every point above 4 (resp. 5).
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    group: CharGroup,
    name: String,
    /// Values on the classes in table order.
    values: [QiSqrt5; 5],
}

/// Column headers of the stored tables.
pub const S4_CLASSES: [&str; 5] = ["id", "(12)", "(12)(34)", "(123)", "(1234)"];
pub const A5_CLASSES: [&str; 5] = ["id", "(12)(34)", "(123)", "(12345)", "(13524)"];

const S4_TABLE: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1],
    [2, 0, 2, -1, 0],
    [3, 1, -1, 0, -1],
    [3, -1, -1, 0, 1],
];

fn a5_row(k: usize) -> [QiSqrt5; 5] {
    let z = QiSqrt5::from_int;
    let g = QiSqrt5::golden;
    let gc = QiSqrt5::golden_conjugate;
    match k {
        1 => [z(1), z(1), z(1), z(1), z(1)],
        2 => [z(3), z(-1), z(0), g(), gc()],
        3 => [z(3), z(-1), z(0), gc(), g()],
        4 => [z(4), z(0), z(1), z(-1), z(-1)],
        5 => [z(5), z(1), z(-1), z(0), z(0)],
        _ => unreachable!(),
    }
}

/// The conjugacy class of `(12345)` inside `A_5`, on 5 points.
fn a5_class_of_12345() -> &'static FxHashSet<Perm> {
    static CLASS: OnceLock<FxHashSet<Perm>> = OnceLock::new();
    CLASS.get_or_init(|| {
        let c = Perm::parse("(12345)", 5).expect("valid cycle");
        SubgroupTable::alternating(5)
            .elements()
            .iter()
            .map(|g| *g * c * g.inverse())
            .collect()
    })
}

impl ClassFunction {
    /// `chi_k` of `S_4`, `k = 1..=5`.
    pub fn s4(k: usize) -> Result<ClassFunction> {
        if !(1..=5).contains(&k) {
            return Err(Error::Parse(format!("no S4 character chi{k}")));
        }
        Ok(ClassFunction {
            group: CharGroup::S4,
            name: format!("chi{k}"),
            values: S4_TABLE[k - 1].map(QiSqrt5::from_int),
        })
    }

    /// `chi_k` of `A_5`, `k = 1..=5`.
    pub fn a5(k: usize) -> Result<ClassFunction> {
        if !(1..=5).contains(&k) {
            return Err(Error::Parse(format!("no A5 character chi{k}")));
        }
        Ok(ClassFunction {
            group: CharGroup::A5,
            name: format!("chi{k}"),
            values: a5_row(k),
        })
    }

    /// `sum n_j f_j` over class functions of the same group.
    pub fn combination(parts: &[(i64, &ClassFunction)]) -> Result<ClassFunction> {
        let group = parts.first().ok_or_else(|| Error::Parse("empty combination".into()))?.1.group;
        let mut values: [QiSqrt5; 5] = std::array::from_fn(|_| QiSqrt5::zero());
        let mut names = Vec::new();
        for (n, f) in parts {
            if f.group != group {
                return Err(Error::Parse("class functions on different groups".into()));
            }
            for (v, w) in values.iter_mut().zip(&f.values) {
                *v += &(w.clone() * QiSqrt5::from_int(*n));
            }
            names.push(if *n == 1 { f.name.clone() } else { format!("{n}{}", f.name) });
        }
        Ok(ClassFunction {
            group,
            name: names.join("+"),
            values,
        })
    }

    pub fn group(&self) -> CharGroup {
        self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[QiSqrt5; 5] {
        &self.values
    }

    /// Table column of `g`, after checking that it lies in the group.
    pub fn class_index(&self, g: &Perm) -> Result<usize> {
        let outside = || Error::SupportOutsideGroup {
            perm: g.to_string(),
            owner: format!("{:?}", self.group),
        };
        match self.group {
            CharGroup::S4 => {
                if g.degree() < 4 || !g.fixes_above(4) {
                    return Err(outside());
                }
                let ct = g.restrict(4)?.cycle_type();
                Ok(match ct.as_slice() {
                    [1, 1, 1, 1] => 0,
                    [2, 1, 1] => 1,
                    [2, 2] => 2,
                    [3, 1] => 3,
                    _ => 4,
                })
            }
            CharGroup::A5 => {
                if g.degree() < 5 || !g.fixes_above(5) || g.parity() != Parity::Even {
                    return Err(outside());
                }
                let h = g.restrict(5)?;
                Ok(match h.cycle_type().as_slice() {
                    [1, 1, 1, 1, 1] => 0,
                    [2, 2, 1] => 1,
                    [3, 1, 1] => 2,
                    _ if a5_class_of_12345().contains(&h) => 3,
                    _ => 4,
                })
            }
        }
    }
}

impl Functional for ClassFunction {
    fn value(&self, g: &Perm) -> Result<QiSqrt5> {
        Ok(self.values[self.class_index(g)?].clone())
    }

    fn label(&self) -> String {
        self.name.clone()
    }
}

/// `chi (x) eps_Q` on `S_k x Q`, where `chi` lives on the points `1..k` and
/// `Q` acts on the remaining points.
#[derive(Clone, Debug)]
pub struct InflatedCharacter {
    base: ClassFunction,
    points: usize,
    factor: SubgroupTable,
}

impl InflatedCharacter {
    pub fn new(base: ClassFunction, factor: SubgroupTable) -> InflatedCharacter {
        let points = match base.group {
            CharGroup::S4 => 4,
            CharGroup::A5 => 5,
        };
        InflatedCharacter { base, points, factor }
    }
}

impl Functional for InflatedCharacter {
    fn value(&self, g: &Perm) -> Result<QiSqrt5> {
        let outside = || Error::SupportOutsideGroup {
            perm: g.to_string(),
            owner: self.label(),
        };
        let p = g.restrict(self.points).map_err(|_| outside())?;
        let q = p.pad(g.degree())?.inverse() * *g;
        if !self.factor.contains(&q) {
            return Err(outside());
        }
        self.base.value(&p.pad(self.points)?)
    }

    fn label(&self) -> String {
        format!("{} x eps", self.base.name)
    }
}

fn eval<F: Field>(f: &dyn Functional, g: &Perm) -> Result<F> {
    let v = f.value(g)?;
    F::from_scalar(&v).ok_or_else(|| Error::NotRepresentable(v.to_string()))
}

/// Linear extension of a functional.
pub fn apply_char<F: Field>(f: &dyn Functional, a: &GroupAlgebraElement<F>) -> Result<F> {
    let mut s = F::zero();
    for (g, c) in a.iter() {
        let v: F = eval(f, g)?;
        if !v.is_zero() {
            s += &v.mul_ref(c);
        }
    }
    Ok(s)
}

/// `(f (x) Id)(t)`.
pub fn slice_left<F: Field>(f: &dyn Functional, t: &Tensor2<F>) -> Result<GroupAlgebraElement<F>> {
    let mut out = GroupAlgebraElement::zero(t.degree());
    for (k, c) in t.iter() {
        let v: F = eval(f, &k[0])?;
        out.add_term(k[1], &v.mul_ref(c));
    }
    Ok(out)
}

/// `(Id (x) f)(t)`.
pub fn slice_right<F: Field>(t: &Tensor2<F>, f: &dyn Functional) -> Result<GroupAlgebraElement<F>> {
    let mut out = GroupAlgebraElement::zero(t.degree());
    for (k, c) in t.iter() {
        let v: F = eval(f, &k[1])?;
        out.add_term(k[0], &v.mul_ref(c));
    }
    Ok(out)
}
