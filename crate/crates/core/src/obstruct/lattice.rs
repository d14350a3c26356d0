//! Lattices `X = O x_1 + ... + O x_k` inside a group algebra, with exact
//! membership tests and the closure axioms of a Hopf order.

use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::groupalg::{GroupAlgebraElement, Tensor2};
use crate::linalg::{self, Matrix};
use crate::perm::Perm;
use crate::twist::TwistElt;

/// Coefficient ring of a lattice.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoeffRing {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Z[i]")]
    GaussianIntegers,
}

impl CoeffRing {
    pub fn contains(self, x: &QiSqrt5) -> bool {
        let c = x.coords();
        match self {
            CoeffRing::Integers => c[0].is_integer() && c[1..].iter().all(Zero::is_zero),
            CoeffRing::GaussianIntegers => {
                c[0].is_integer() && c[1].is_integer() && c[2..].iter().all(Zero::is_zero)
            }
        }
    }
}

/// Outcome of a membership test.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// Coordinates in the lattice basis, `None` when the element is not even in
    /// the `K`-span.
    pub coordinates: Option<Vec<QiSqrt5>>,
}

/// Lattice with a `K`-linearly independent basis.
#[derive(Clone)]
pub struct Lattice<F> {
    degree: usize,
    basis: Vec<GroupAlgebraElement<F>>,
    ring: CoeffRing,
    columns: FxHashMap<Perm, usize>,
    // `pivot_pos[col]` is the row of `pinv` for a pivot column
    pivot_pos: FxHashMap<usize, usize>,
    pinv: Matrix<F>,
    full: bool,
}

impl<F: Field> Lattice<F> {
    pub fn new(degree: usize, basis: Vec<GroupAlgebraElement<F>>, ring: CoeffRing) -> Result<Lattice<F>> {
        let mut columns: FxHashMap<Perm, usize> = FxHashMap::default();
        let mut order = Vec::new();
        for b in &basis {
            if b.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: b.degree(),
                });
            }
            for g in b.support() {
                if !columns.contains_key(&g) {
                    columns.insert(g, order.len());
                    order.push(g);
                }
            }
        }
        let n = order.len();
        let rows: Matrix<F> = basis
            .iter()
            .map(|b| {
                let mut row = vec![F::zero(); n];
                for (g, c) in b.iter() {
                    row[columns[g]] = c.clone();
                }
                row
            })
            .collect();
        let mut reduced = rows.clone();
        let pivots = linalg::rref(&mut reduced, n);
        if pivots.len() < basis.len() {
            return Err(Error::DependentBasis {
                rank: pivots.len(),
                len: basis.len(),
            });
        }
        let square: Matrix<F> = rows.iter().map(|r| pivots.iter().map(|p| r[*p].clone()).collect()).collect();
        let pinv = linalg::invert(&square).ok_or(Error::DependentBasis {
            rank: pivots.len(),
            len: basis.len(),
        })?;
        let pivot_pos = pivots.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        Ok(Lattice {
            degree,
            full: pivots.len() == n,
            basis,
            ring,
            columns,
            pivot_pos,
            pinv,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[GroupAlgebraElement<F>] {
        &self.basis
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn pivot_row(&self, g: &Perm) -> Option<Option<&Vec<F>>> {
        let col = self.columns.get(g)?;
        Some(self.pivot_pos.get(col).map(|i| &self.pinv[*i]))
    }

    /// Solve `a = sum c_i x_i` over the field.
    pub fn coordinates(&self, a: &GroupAlgebraElement<F>) -> Option<Vec<F>> {
        let k = self.basis.len();
        let mut c = vec![F::zero(); k];
        for (g, x) in a.iter() {
            if let Some(row) = self.pivot_row(g)? {
                for (ci, r) in c.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *ci += &x.mul_ref(r);
                    }
                }
            }
        }
        if !self.full {
            let mut back = GroupAlgebraElement::zero(self.degree);
            for (b, ci) in self.basis.iter().zip(&c) {
                back.add_scaled(b, ci);
            }
            if back != *a {
                return None;
            }
        }
        Some(c)
    }

    pub fn membership(&self, a: &GroupAlgebraElement<F>) -> Membership {
        let coords = self.coordinates(a).map(|c| c.iter().map(Field::to_scalar).collect::<Vec<_>>());
        Membership {
            member: coords.as_ref().is_some_and(|c| c.iter().all(|x| self.ring.contains(x))),
            coordinates: coords,
        }
    }

    pub fn contains(&self, a: &GroupAlgebraElement<F>) -> bool {
        self.membership(a).member
    }

    /// Coordinates of `t` in the basis `{x_i (x) x_j}` of `X (x) X`.
    pub fn tensor_coordinates(&self, t: &Tensor2<F>) -> Option<Vec<Vec<F>>> {
        let k = self.basis.len();
        let mut c = vec![vec![F::zero(); k]; k];
        for (key, x) in t.iter() {
            let (Some(left), Some(right)) = (self.pivot_row(&key[0]), self.pivot_row(&key[1])) else {
                return None;
            };
            let (Some(left), Some(right)) = (left, right) else {
                continue;
            };
            for (i, l) in left.iter().enumerate() {
                if l.is_zero() {
                    continue;
                }
                let lx = l.mul_ref(x);
                for (j, r) in right.iter().enumerate() {
                    if !r.is_zero() {
                        c[i][j] += &lx.mul_ref(r);
                    }
                }
            }
        }
        if !self.full {
            let mut back = Tensor2::zero(self.degree);
            for (i, row) in c.iter().enumerate() {
                for (j, cij) in row.iter().enumerate() {
                    if !cij.is_zero() {
                        let part = Tensor2::outer([&self.basis[i], &self.basis[j]]).ok()?;
                        back.add_scaled(&part, cij);
                    }
                }
            }
            if back != *t {
                return None;
            }
        }
        Some(c)
    }

    /// Membership in the induced lattice `X (x) X`.
    pub fn tensor_contains(&self, t: &Tensor2<F>) -> bool {
        self.tensor_coordinates(t)
            .is_some_and(|c| c.iter().flatten().all(|x| self.ring.contains(&x.to_scalar())))
    }

    /// The Hopf order axioms on every basis element and basis pair, for the
    /// coproduct of `K G` or, with a twist, of `(K G)_J` (then `J` and `J^-1`
    /// must also lie in `X (x) X`).
    pub fn closure_check(&self, twist: Option<&TwistElt<F>>) -> Result<ClosureReport> {
        let k = self.basis.len();
        let mut failures = Vec::new();
        let unit = self.contains(&GroupAlgebraElement::one(self.degree));
        if !unit {
            failures.push("unit".to_string());
        }
        let mut product = vec![vec![false; k]; k];
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                product[i][j] = self.contains(&(a * b));
                if !product[i][j] {
                    failures.push(format!("product x{i} x{j}"));
                }
            }
        }
        let uinv = match twist {
            Some(t) => Some(t.u_element()?),
            None => None,
        };
        let mut coproduct = Vec::with_capacity(k);
        let mut counit = Vec::with_capacity(k);
        let mut antipode = Vec::with_capacity(k);
        for (i, a) in self.basis.iter().enumerate() {
            let d = match twist {
                Some(t) => t.twisted_coproduct(a),
                None => a.coproduct(),
            };
            let s = match &uinv {
                Some((u, ui)) => &(u * &a.antipode()) * ui,
                None => a.antipode(),
            };
            coproduct.push(self.tensor_contains(&d));
            counit.push(self.ring.contains(&a.counit().to_scalar()));
            antipode.push(self.contains(&s));
            for (name, ok) in [("coproduct", coproduct[i]), ("counit", counit[i]), ("antipode", antipode[i])] {
                if !ok {
                    failures.push(format!("{name} x{i}"));
                }
            }
        }
        let (twist_member, twist_inverse_member) = match twist {
            Some(t) => {
                let a = self.tensor_contains(t.value());
                let b = self.tensor_contains(t.inverse());
                if !a {
                    failures.push("twist".into());
                }
                if !b {
                    failures.push("twist inverse".into());
                }
                (Some(a), Some(b))
            }
            None => (None, None),
        };
        Ok(ClosureReport {
            ring: self.ring,
            twist: twist.map(|t| t.cocycle().name().to_string()),
            basis_len: k,
            unit,
            product,
            coproduct,
            counit,
            antipode,
            twist_member,
            twist_inverse_member,
            failures,
        })
    }
}

/// Axiom by basis element (or basis pair, for the product) table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosureReport {
    pub ring: CoeffRing,
    pub twist: Option<String>,
    pub basis_len: usize,
    pub unit: bool,
    pub product: Vec<Vec<bool>>,
    pub coproduct: Vec<bool>,
    pub counit: Vec<bool>,
    pub antipode: Vec<bool>,
    pub twist_member: Option<bool>,
    pub twist_inverse_member: Option<bool>,
    pub failures: Vec<String>,
}

impl ClosureReport {
    /// The five Hopf order axioms (unit, product, coproduct, counit, antipode).
    pub fn axioms_pass(&self) -> bool {
        self.unit
            && self.product.iter().flatten().all(|b| *b)
            && self.coproduct.iter().all(|b| *b)
            && self.counit.iter().all(|b| *b)
            && self.antipode.iter().all(|b| *b)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
