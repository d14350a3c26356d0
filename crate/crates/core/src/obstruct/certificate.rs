use serde::{Deserialize, Serialize};

use super::{Recorder, S4Report};
use crate::error::{Error, Result};
use crate::field::{Field, QiSqrt5};
use crate::groupalg::{ElementRepr, GroupAlgebraElement, Tensor2, TensorRepr};

/// One identity verified along the way.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum TrailValue {
    Element(ElementRepr),
    Tensor(TensorRepr),
    Scalar(QiSqrt5),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrailEntry {
    pub label: String,
    /// Whether the value was compared with a printed closed form.
    pub matches_printed: bool,
    pub value: TrailValue,
}

/// Ordered intermediate elements ending in a pairing value that any ring of
/// coefficients of a Hopf order would have to contain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub pipeline: String,
    pub trail: Vec<TrailEntry>,
    pub checks: Vec<Check>,
    pub witness: QiSqrt5,
    pub witness_text: String,
    pub defect: u32,
    pub algebraic_integer: bool,
}

impl ObstructionCertificate {
    pub(crate) fn finish(pipeline: &str, rec: Recorder) -> Result<ObstructionCertificate> {
        let witness = match rec.trail.last().map(|e| &e.value) {
            Some(TrailValue::Scalar(x)) => x.clone(),
            _ => return Err(Error::Parse("trail must end in a scalar".into())),
        };
        let cert = ObstructionCertificate {
            pipeline: pipeline.to_string(),
            defect: witness.two_adic_defect(),
            algebraic_integer: witness.is_algebraic_integer(),
            witness_text: witness.to_string(),
            witness,
            trail: rec.trail,
            checks: rec.checks,
        };
        if cert.algebraic_integer || cert.defect == 0 {
            return Err(Error::Mismatch {
                label: "witness integrality".into(),
                expected: "a value outside the ring of integers".into(),
                computed: cert.witness_text,
            });
        }
        Ok(cert)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<ObstructionCertificate> {
        Ok(serde_json::from_str(s)?)
    }
}

fn entry<'a>(trail: &'a [TrailEntry], label: &str) -> Result<&'a TrailValue> {
    trail
        .iter()
        .find(|e| e.label == label)
        .map(|e| &e.value)
        .ok_or_else(|| Error::Parse(format!("trail has no entry `{label}`")))
}

pub(crate) fn trail_elt<F: Field>(trail: &[TrailEntry], label: &str) -> Result<GroupAlgebraElement<F>> {
    match entry(trail, label)? {
        TrailValue::Element(r) => GroupAlgebraElement::from_repr(r),
        _ => Err(Error::Parse(format!("trail entry `{label}` is not an element"))),
    }
}

pub(crate) fn trail_tensor<F: Field>(trail: &[TrailEntry], label: &str) -> Result<Tensor2<F>> {
    match entry(trail, label)? {
        TrailValue::Tensor(r) => Tensor2::from_repr(r),
        _ => Err(Error::Parse(format!("trail entry `{label}` is not a tensor"))),
    }
}

/// Compare a recomputed trail value with the stored one, representation by
/// representation.
pub(crate) fn confirm(trail: &[TrailEntry], label: &str, recomputed: TrailValue) -> Result<()> {
    let stored = entry(trail, label)?;
    if *stored == recomputed {
        Ok(())
    } else {
        Err(Error::Mismatch {
            label: format!("replay of `{label}`"),
            expected: serde_json::to_string(stored)?,
            computed: serde_json::to_string(&recomputed)?,
        })
    }
}

/// Recompute every derived trail entry from the entries before it and return
/// the recomputed witness. Fails on the first entry that does not reproduce.
pub fn replay(cert: &ObstructionCertificate) -> Result<QiSqrt5> {
    let w = match cert.pipeline.as_str() {
        "a5" => super::a5::replay(&cert.trail)?,
        "s8" => super::s8::replay(&cert.trail)?,
        other => return Err(Error::Parse(format!("unknown pipeline `{other}`"))),
    };
    if w != cert.witness || w.to_string() != cert.witness_text || w.two_adic_defect() != cert.defect {
        return Err(Error::Mismatch {
            label: "replayed witness".into(),
            expected: cert.witness_text.clone(),
            computed: w.to_string(),
        });
    }
    Ok(w)
}

/// Everything `report --out` writes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub certificates: Vec<ObstructionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s4: Option<S4Report>,
    pub all_passed: bool,
}

pub fn emit_report(certs: &[ObstructionCertificate], s4: Option<&S4Report>) -> serde_json::Value {
    let all_passed = certs.iter().all(|c| c.checks.iter().all(|k| k.passed)) && s4.is_none_or(S4Report::passed);
    let report = Report {
        certificates: certs.to_vec(),
        s4: s4.cloned(),
        all_passed,
    };
    serde_json::to_value(report).expect("report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let v = emit_report(&[], None);
        assert_eq!(v["certificates"].as_array().unwrap().len(), 0);
        assert!(v.get("s4").is_none());
        assert_eq!(v["all_passed"], true);
    }

    #[test]
    fn integral_witness_is_rejected() {
        let mut rec = Recorder::default();
        rec.record_scalar("w", &QiSqrt5::from_int(3), false);
        assert!(ObstructionCertificate::finish("a5", rec).is_err());
        let mut rec = Recorder::default();
        rec.record_scalar("w", &QiSqrt5::ratio(3, 2), false);
        let c = ObstructionCertificate::finish("s8", rec).unwrap();
        assert_eq!(c.defect, 1);
        assert!(!c.algebraic_integer);
    }

    #[test]
    fn unknown_pipeline_does_not_replay() {
        let mut rec = Recorder::default();
        rec.record_scalar("w", &QiSqrt5::ratio(1, 2), false);
        let mut c = ObstructionCertificate::finish("a5", rec).unwrap();
        c.pipeline = "b7".into();
        assert!(replay(&c).is_err());
    }
}
