//! Machine-readable certificate documents.
//!
//! Stable JSON schema (schema_version "1"), canonical field order fixed by
//! struct declaration order. Rationals serialize as exact `p/q` strings,
//! never as floating point; node approximations carry explicit interval
//! bounds. The `timings_ms` map is present but left empty unless timings
//! were requested, keeping documents byte-stable across runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rootcert_core::certify::{CriterionLevel, Method, RealRootednessVerdict};
use rootcert_core::oprl::{DiscreteMeasure, RecurrenceCoefficients};
use rootcert_core::rational::{to_f64, Rat};
use rootcert_core::realroot::{Positivity, PositivityReason, Witness};
use rootcert_core::Polynomial;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub input: InputEcho,
    pub degree: usize,
    pub method: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oprl: Option<OprlRecord>,
    pub timings_ms: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LevelRecord {
    pub j: usize,
    pub q_coeffs: Vec<String>,
    pub positivity: PositivityRecord,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PositivityRecord {
    pub verdict: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IntervalRecord {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OracleRecord {
    pub distinct_real_roots: usize,
    pub squarefree: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OprlRecord {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub favard: bool,
    pub nodes: Vec<NodeRecord>,
    pub weights: Vec<String>,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NodeRecord {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

pub fn method_name(method: Method) -> &'static str {
    match method {
        Method::Criterion => "chamberland",
        Method::SturmOracle => "sturm",
        Method::Both => "both",
    }
}

pub fn positivity_verdict_name(v: Positivity) -> &'static str {
    match v {
        Positivity::PositiveOnR => "positive_on_r",
        Positivity::NotPositive => "not_positive",
    }
}

pub fn positivity_reason_name(r: PositivityReason) -> &'static str {
    match r {
        PositivityReason::EvenDegreePositiveLeadNoRealRoots => {
            "even_degree_positive_lead_no_real_roots"
        }
        PositivityReason::PositiveConstant => "positive_constant",
        PositivityReason::OddDegree => "odd_degree",
        PositivityReason::NegativeLead => "negative_lead",
        PositivityReason::HasRealZero => "has_real_zero",
        PositivityReason::NonpositiveConstant => "nonpositive_constant",
    }
}

fn rat_string(x: &Rat) -> String {
    x.to_string()
}

pub fn level_record(level: &CriterionLevel) -> LevelRecord {
    let witness = level.certificate.witness.as_ref().map(|w| match w {
        Witness::Point { x, value } => WitnessRecord {
            point: Some(rat_string(x)),
            interval: None,
            value: Some(rat_string(value)),
        },
        Witness::Interval(iv) => WitnessRecord {
            point: None,
            interval: Some(IntervalRecord { lo: rat_string(&iv.lo), hi: rat_string(&iv.hi) }),
            value: None,
        },
    });
    LevelRecord {
        j: level.j,
        q_coeffs: level.q.coeffs().iter().map(rat_string).collect(),
        positivity: PositivityRecord {
            verdict: positivity_verdict_name(level.certificate.verdict).to_string(),
            reason: positivity_reason_name(level.certificate.reason).to_string(),
            witness,
        },
    }
}

pub fn oracle_record(verdict: &RealRootednessVerdict) -> Option<OracleRecord> {
    match (verdict.oracle_root_count, verdict.squarefree) {
        (Some(count), Some(squarefree)) => {
            Some(OracleRecord { distinct_real_roots: count, squarefree })
        }
        _ => None,
    }
}

pub fn oprl_record(
    rc: &RecurrenceCoefficients,
    mu: &DiscreteMeasure,
    residual: f64,
) -> OprlRecord {
    OprlRecord {
        a: rc.a.iter().map(rat_string).collect(),
        b: rc.b.iter().map(rat_string).collect(),
        favard: rootcert_core::oprl::favard_holds(rc),
        nodes: mu
            .nodes
            .iter()
            .map(|n| NodeRecord {
                lo: rat_string(&n.interval.lo),
                hi: rat_string(&n.interval.hi),
                approx: to_f64(&n.representative),
            })
            .collect(),
        weights: mu.weights.iter().map(rat_string).collect(),
        residual,
    }
}

/// Assemble the full document for a check-style run.
pub fn check_document(
    input: InputEcho,
    p: &Polynomial,
    verdict: &RealRootednessVerdict,
    timings_ms: BTreeMap<String, u64>,
) -> CertificateDocument {
    let levels = match verdict.method {
        Method::SturmOracle => None,
        _ => Some(verdict.levels.iter().map(level_record).collect()),
    };
    CertificateDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        input,
        degree: p.degree().unwrap_or(0),
        method: method_name(verdict.method).to_string(),
        verdict: verdict.all_real_and_distinct,
        levels,
        oracle: oracle_record(verdict),
        oprl: None,
        timings_ms,
    }
}

/// Serialize with a trailing newline; byte-stable for identical inputs.
pub fn to_json(doc: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    s.push('\n');
    s
}

pub struct ReverifiedWitness {
    pub holds: bool,
    pub detail: String,
}

/// Re-check a serialized NotPositive certificate using only document data:
/// rebuild Q_j from its coefficient strings, then either evaluate exactly at
/// the witness point (must be <= 0) or Sturm-count the witness interval
/// (must contain a real zero).
pub fn verify_witness(record: &LevelRecord) -> Result<ReverifiedWitness, String> {
    use rootcert_core::realroot::{count_distinct_real_roots, ExtendedPoint};

    let coeffs: Result<Vec<Rat>, _> =
        record.q_coeffs.iter().map(|s| crate::parse::parse_rational(s)).collect();
    let q = Polynomial::new(coeffs.map_err(|e| e.to_string())?);
    let witness = record
        .positivity
        .witness
        .as_ref()
        .ok_or_else(|| "record has no witness".to_string())?;
    if let Some(point) = &witness.point {
        let x = crate::parse::parse_rational(point).map_err(|e| e.to_string())?;
        let value_claim = witness
            .value
            .as_ref()
            .ok_or_else(|| "point witness without value".to_string())?;
        let claimed = crate::parse::parse_rational(value_claim).map_err(|e| e.to_string())?;
        let actual = q.evaluate(&x);
        let holds = actual == claimed && actual <= Rat::new(0.into(), 1.into());
        return Ok(ReverifiedWitness {
            holds,
            detail: format!("Q({x}) = {actual}"),
        });
    }
    if let Some(interval) = &witness.interval {
        let lo = crate::parse::parse_rational(&interval.lo).map_err(|e| e.to_string())?;
        let hi = crate::parse::parse_rational(&interval.hi).map_err(|e| e.to_string())?;
        let count = count_distinct_real_roots(
            &q,
            &ExtendedPoint::Finite(lo.clone()),
            &ExtendedPoint::Finite(hi.clone()),
        )
        .map_err(|e| e.to_string())?;
        return Ok(ReverifiedWitness {
            holds: count >= 1,
            detail: format!("{count} real zero(s) in ({lo}, {hi}]"),
        });
    }
    Err("witness has neither point nor interval".to_string())
}
