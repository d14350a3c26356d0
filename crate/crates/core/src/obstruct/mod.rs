//! Hopf order lattices and the three integrality pipelines.
//!
//! Each pipeline recomputes a chain of elements of a twisted group algebra,
//! compares every link with its printed closed form and stops at the first
//! difference. The `A5` and `S8` pipelines end in a pairing value that is not
//! an algebraic integer; they return an [`ObstructionCertificate`] whose trail
//! can be serialized and replayed. The `S4` pipeline returns a report on the
//! explicit Hopf order `X` of `K S4`.

mod a5;
mod certificate;
mod lattice;
mod s4;
mod s8;

pub use a5::pipeline_a5;
pub use certificate::{
    emit_report, replay, Check, ObstructionCertificate, Report, TrailEntry, TrailValue,
};
pub use lattice::{ClosureReport, CoeffRing, Lattice, Membership};
pub use s4::{pipeline_s4, S4Report};
pub use s8::pipeline_s8;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::groupalg::{GroupAlgebraElement, Tensor2};
use crate::perm::Perm;

/// `num/den * (s)` where `s` is a signed sum such as
/// `"(13) - (1234) + 4*id"`.
pub fn printed<F: Field>(degree: usize, num: i64, den: i64, s: &str) -> Result<GroupAlgebraElement<F>> {
    let mut out = GroupAlgebraElement::zero(degree);
    let mut sign = 1i64;
    for tok in s.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -1,
            _ => {
                let (tok, neg) = match tok.strip_prefix('-') {
                    Some(t) => (t, -1),
                    None => (tok.strip_prefix('+').unwrap_or(tok), 1),
                };
                let (k, perm) = match tok.split_once('*') {
                    Some((k, p)) => (k.parse::<i64>().map_err(|_| Error::Parse(format!("bad factor `{k}`")))?, p),
                    None => (1, tok),
                };
                let g = Perm::parse(perm, degree)?;
                let term = GroupAlgebraElement::monomial(F::from_ratio(sign * neg * k * num, den), g);
                out.add_scaled(&term, &F::one());
                sign = 1;
            }
        }
    }
    Ok(out)
}

fn element_terms<F: Field>(a: &GroupAlgebraElement<F>) -> BTreeMap<Perm, QiSqrt5> {
    a.iter().map(|(g, c)| (*g, c.to_scalar())).collect()
}

fn tensor_terms<F: Field>(t: &Tensor2<F>) -> BTreeMap<[Perm; 2], QiSqrt5> {
    t.iter().map(|(k, c)| (*k, c.to_scalar())).collect()
}

/// The terms on which two coefficient maps differ, rendered side by side.
fn diff_terms<K: Ord + Copy, D: Fn(&K) -> String>(
    expected: &BTreeMap<K, QiSqrt5>,
    computed: &BTreeMap<K, QiSqrt5>,
    show: D,
) -> (String, String) {
    let zero = QiSqrt5::from_int(0);
    let mut keys: Vec<K> = expected.keys().chain(computed.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let mut e = Vec::new();
    let mut c = Vec::new();
    for k in keys {
        let a = expected.get(&k).unwrap_or(&zero);
        let b = computed.get(&k).unwrap_or(&zero);
        if a != b {
            e.push(format!("{a}*{}", show(&k)));
            c.push(format!("{b}*{}", show(&k)));
        }
    }
    (e.join(" + "), c.join(" + "))
}

/// Trail and identity log shared by the pipelines.
#[derive(Default)]
pub(crate) struct Recorder {
    pub trail: Vec<TrailEntry>,
    pub checks: Vec<Check>,
}

impl Recorder {
    pub fn pass(&mut self, label: &str) {
        self.checks.push(Check {
            label: label.to_string(),
            passed: true,
        });
    }

    /// Log a boolean identity; a failure aborts the pipeline.
    pub fn ensure(&mut self, label: &str, ok: bool, expected: &str, computed: impl Fn() -> String) -> Result<()> {
        if ok {
            self.pass(label);
            Ok(())
        } else {
            Err(Error::Mismatch {
                label: label.to_string(),
                expected: expected.to_string(),
                computed: computed(),
            })
        }
    }

    pub fn same_elt<F: Field>(
        &mut self,
        label: &str,
        expected: &GroupAlgebraElement<F>,
        computed: &GroupAlgebraElement<F>,
    ) -> Result<()> {
        if expected == computed {
            self.pass(label);
            return Ok(());
        }
        let (e, c) = diff_terms(&element_terms(expected), &element_terms(computed), |g| g.to_string());
        Err(Error::Mismatch {
            label: label.to_string(),
            expected: e,
            computed: c,
        })
    }

    pub fn same_tensor<F: Field>(&mut self, label: &str, expected: &Tensor2<F>, computed: &Tensor2<F>) -> Result<()> {
        if expected == computed {
            self.pass(label);
            return Ok(());
        }
        let (e, c) = diff_terms(&tensor_terms(expected), &tensor_terms(computed), |k| {
            format!("[{} | {}]", k[0], k[1])
        });
        Err(Error::Mismatch {
            label: label.to_string(),
            expected: e,
            computed: c,
        })
    }

    pub fn same_scalar(&mut self, label: &str, expected: &QiSqrt5, computed: &QiSqrt5) -> Result<()> {
        self.ensure(label, expected == computed, &expected.to_string(), || computed.to_string())
    }

    pub fn record_elt<F: Field>(&mut self, label: &str, a: &GroupAlgebraElement<F>, printed: bool) {
        self.trail.push(TrailEntry {
            label: label.to_string(),
            matches_printed: printed,
            value: TrailValue::Element(a.to_repr()),
        });
    }

    pub fn record_tensor<F: Field>(&mut self, label: &str, t: &Tensor2<F>, printed: bool) {
        self.trail.push(TrailEntry {
            label: label.to_string(),
            matches_printed: printed,
            value: TrailValue::Tensor(t.to_repr()),
        });
    }

    pub fn record_scalar(&mut self, label: &str, x: &QiSqrt5, printed: bool) {
        self.trail.push(TrailEntry {
            label: label.to_string(),
            matches_printed: printed,
            value: TrailValue::Scalar(x.clone()),
        });
    }
}
