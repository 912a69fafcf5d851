//! Subcommand implementations.
//!
//! Exit codes: 0 = all zeros real and distinct, 1 = not, 2 = input/usage
//! error, 3 = internal disagreement between the two decision methods (a
//! bug, never a valid outcome).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rootcert_core::certify::{self, Method, RealRootednessVerdict};
use rootcert_core::error::Error;
use rootcert_core::oprl;
use rootcert_core::rational::{to_f64, Rat};
use rootcert_core::realroot::Witness;
use rootcert_core::{batch, Polynomial};

use crate::document::{self, CertificateDocument, InputEcho};
use crate::parse;

pub struct CmdOutput {
    pub stdout: String,
    pub code: i32,
}

pub struct CliFailure {
    pub message: String,
    pub code: i32,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        CliFailure { message: message.into(), code: 2 }
    }
}

impl From<parse::ParseError> for CliFailure {
    fn from(e: parse::ParseError) -> Self {
        CliFailure::usage(e.to_string())
    }
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalDisagreement { .. } => 3,
            _ => 2,
        };
        CliFailure { message: e.to_string(), code }
    }
}

/// Raw polynomial input: an expression or an ascending coefficient list.
pub enum PolynomialInput {
    Expr(String),
    Coeffs(String),
}

impl PolynomialInput {
    pub fn from_args(expr: Option<String>, coeffs: Option<String>) -> Result<Self, CliFailure> {
        match (expr, coeffs) {
            (Some(e), None) => Ok(PolynomialInput::Expr(e)),
            (None, Some(c)) => Ok(PolynomialInput::Coeffs(c)),
            (Some(_), Some(_)) => {
                Err(CliFailure::usage("give either an expression or --coeffs, not both"))
            }
            (None, None) => Err(CliFailure::usage("missing polynomial (expression or --coeffs)")),
        }
    }

    pub fn parse(&self) -> Result<(Polynomial, InputEcho), CliFailure> {
        match self {
            PolynomialInput::Expr(src) => {
                let p = parse::parse_expression(src)?;
                Ok((p, InputEcho { expr: Some(src.clone()), coeffs: None }))
            }
            PolynomialInput::Coeffs(src) => {
                let p = parse::parse_coeff_list(src)?;
                let echo = src.split(',').map(|s| s.trim().to_string()).collect();
                Ok((p, InputEcho { expr: None, coeffs: Some(echo) }))
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Chamberland,
    Sturm,
    Both,
}

fn run_method(p: &Polynomial, method: MethodArg) -> Result<RealRootednessVerdict, Error> {
    match method {
        MethodArg::Chamberland => certify::check_criterion(p),
        MethodArg::Sturm => certify::check_sturm_oracle(p),
        MethodArg::Both => certify::check_both(p),
    }
}

fn ms_since(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn witness_line(q_name: &str, witness: &Witness) -> String {
    match witness {
        Witness::Point { x, value } => format!("{q_name}({x}) = {value} <= 0"),
        Witness::Interval(iv) => {
            format!("{q_name} has a real zero inside ({}, {})", iv.lo, iv.hi)
        }
    }
}

fn render_check_human(
    input_text: &str,
    p: &Polynomial,
    verdict: &RealRootednessVerdict,
    full_witness: bool,
) -> String {
    let mut out = String::new();
    let degree = p.degree().unwrap_or(0);
    let _ = writeln!(out, "input: {input_text} (degree {degree})");
    let _ = writeln!(out, "method: {}", document::method_name(verdict.method));
    if verdict.method != Method::SturmOracle {
        let _ = writeln!(out, "criterion levels:");
        for level in &verdict.levels {
            let cert = &level.certificate;
            let _ = writeln!(
                out,
                "  j = {}: Q_{} = {}: {} ({})",
                level.j,
                level.j,
                level.q,
                document::positivity_verdict_name(cert.verdict),
                document::positivity_reason_name(cert.reason),
            );
            let show = full_witness || !cert.is_positive();
            if show {
                if let Some(w) = &cert.witness {
                    let name = format!("Q_{}", level.j);
                    let _ = writeln!(out, "    witness: {}", witness_line(&name, w));
                }
                if full_witness {
                    let _ = writeln!(
                        out,
                        "    distinct real zeros of Q_{}: {}",
                        level.j, cert.sturm_root_count
                    );
                }
            }
        }
    }
    if let (Some(count), Some(squarefree)) = (verdict.oracle_root_count, verdict.squarefree) {
        let _ = writeln!(
            out,
            "sturm oracle: {count} distinct real roots, degree {degree}, squarefree: {squarefree}"
        );
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if verdict.all_real_and_distinct {
            "all zeros real and distinct"
        } else {
            "NOT all zeros real and distinct"
        }
    );
    out
}

pub fn run_check(
    input: &PolynomialInput,
    method: MethodArg,
    json: bool,
    full_witness: bool,
    timings: bool,
) -> Result<CmdOutput, CliFailure> {
    let total = Instant::now();
    let t = Instant::now();
    let (p, echo) = input.parse()?;
    let parse_ms = ms_since(t);
    let t = Instant::now();
    let verdict = run_method(&p, method)?;
    let check_ms = ms_since(t);

    let mut timings_ms = BTreeMap::new();
    if timings {
        timings_ms.insert("parse".to_string(), parse_ms);
        timings_ms.insert("check".to_string(), check_ms);
        timings_ms.insert("total".to_string(), ms_since(total));
    }
    let code = if verdict.all_real_and_distinct { 0 } else { 1 };
    let stdout = if json {
        document::to_json(&document::check_document(echo, &p, &verdict, timings_ms))
    } else {
        let text = match input {
            PolynomialInput::Expr(s) => s.clone(),
            PolynomialInput::Coeffs(_) => p.to_string(),
        };
        render_check_human(&text, &p, &verdict, full_witness)
    };
    Ok(CmdOutput { stdout, code })
}

/// Document shape for the `criterion` subcommand: one level only.
#[derive(serde::Serialize)]
struct CriterionDocument {
    schema_version: String,
    input: InputEcho,
    degree: usize,
    level: document::LevelRecord,
}

pub fn run_criterion(
    input: &PolynomialInput,
    j: usize,
    json: bool,
) -> Result<CmdOutput, CliFailure> {
    let (p, echo) = input.parse()?;
    let q = certify::criterion_poly(&p, j)?;
    let (level_poly, _) = certify::derived_pair(&p, j)?;
    let certificate = rootcert_core::realroot::is_strictly_positive_on_r(&q);
    let level = certify::CriterionLevel { j, level_poly, q, certificate };
    let record = document::level_record(&level);
    if json {
        let doc = CriterionDocument {
            schema_version: document::SCHEMA_VERSION.to_string(),
            input: echo,
            degree: p.degree().unwrap_or(0),
            level: record,
        };
        return Ok(CmdOutput { stdout: document::to_json(&doc), code: 0 });
    }
    let mut out = String::new();
    let _ = writeln!(out, "Q_{} = {}", j, level.q);
    let ascending: Vec<String> = level.q.coeffs().iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "coefficients (ascending): {}", ascending.join(", "));
    let _ = writeln!(
        out,
        "positivity: {} ({})",
        document::positivity_verdict_name(level.certificate.verdict),
        document::positivity_reason_name(level.certificate.reason),
    );
    if let Some(w) = &level.certificate.witness {
        let _ = writeln!(out, "witness: {}", witness_line(&format!("Q_{j}"), w));
    }
    Ok(CmdOutput { stdout: out, code: 0 })
}

pub fn run_oprl(
    input: &PolynomialInput,
    precision: Option<&str>,
    json: bool,
    unchecked: bool,
    timings: bool,
) -> Result<CmdOutput, CliFailure> {
    let total = Instant::now();
    let (p, echo) = input.parse()?;
    let (top, second) = oprl::monic_derivative_pair(&p)?;

    let t = Instant::now();
    let verdict = if unchecked { None } else { Some(certify::check_both(&p)?) };
    let check_ms = ms_since(t);

    let t = Instant::now();
    let extension = oprl::extend_downward(&top, &second);
    let extend_ms = ms_since(t);

    let (seq, rc) = match extension {
        Ok(pair) => pair,
        Err(e @ Error::NotInterlacing { .. }) => {
            // Surface the failure detail; a pre-run check already told us
            // the verdict is false, and without it the extension itself is
            // the decision.
            let mut doc_timings = BTreeMap::new();
            if timings {
                doc_timings.insert("check".to_string(), check_ms);
                doc_timings.insert("extend".to_string(), extend_ms);
                doc_timings.insert("total".to_string(), ms_since(total));
            }
            let stdout = match (&verdict, json) {
                (Some(v), true) => document::to_json(&document::check_document(
                    echo,
                    &p,
                    v,
                    doc_timings,
                )),
                _ => format!("{e}\n"),
            };
            return Ok(CmdOutput { stdout, code: 1 });
        }
        Err(e) => return Err(e.into()),
    };

    let precision = match precision {
        Some(s) => {
            let eps = parse::parse_rational(s)?;
            if eps <= Rat::new(0.into(), 1.into()) {
                return Err(CliFailure::usage("--precision must be positive"));
            }
            eps
        }
        None => oprl::default_precision(&top),
    };
    let t = Instant::now();
    let measure = oprl::discrete_measure(&seq, &rc, &precision)?;
    let residual = oprl::verify_orthogonality(&seq, &measure)?;
    let measure_ms = ms_since(t);

    let mut timings_ms = BTreeMap::new();
    if timings {
        timings_ms.insert("check".to_string(), check_ms);
        timings_ms.insert("extend".to_string(), extend_ms);
        timings_ms.insert("measure".to_string(), measure_ms);
        timings_ms.insert("total".to_string(), ms_since(total));
    }

    if json {
        let mut doc = match &verdict {
            Some(v) => document::check_document(echo, &p, v, timings_ms),
            None => CertificateDocument {
                schema_version: document::SCHEMA_VERSION.to_string(),
                input: echo,
                degree: p.degree().unwrap_or(0),
                method: "unchecked".to_string(),
                verdict: true,
                levels: None,
                oracle: None,
                oprl: None,
                timings_ms,
            },
        };
        doc.oprl = Some(document::oprl_record(&rc, &measure, residual));
        return Ok(CmdOutput { stdout: document::to_json(&doc), code: 0 });
    }

    let mut out = String::new();
    let text = match input {
        PolynomialInput::Expr(s) => s.clone(),
        PolynomialInput::Coeffs(_) => p.to_string(),
    };
    let _ = writeln!(out, "input: {} (degree {})", text, p.degree().unwrap_or(0));
    if verdict.is_some() {
        let _ = writeln!(out, "check: all zeros real and distinct");
    } else {
        let _ = writeln!(out, "check: skipped (--unchecked)");
    }
    let a: Vec<String> = rc.a.iter().map(|x| x.to_string()).collect();
    let b: Vec<String> = rc.b.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "recurrence a: [{}]", a.join(", "));
    let _ = writeln!(out, "recurrence b: [{}]", b.join(", "));
    let _ = writeln!(out, "favard: all b_k > 0: {}", oprl::favard_holds(&rc));
    let _ = writeln!(out, "nodes (interval width < {precision}):");
    for (node, w) in measure.nodes.iter().zip(&measure.weights) {
        let _ = writeln!(
            out,
            "  {:.12} in ({}, {}) with weight {:.12}",
            to_f64(&node.representative),
            node.interval.lo,
            node.interval.hi,
            to_f64(w),
        );
    }
    let _ = writeln!(out, "orthogonality residual: {residual:.3e}");
    Ok(CmdOutput { stdout: out, code: 0 })
}

#[derive(serde::Serialize)]
struct BatchDocument {
    schema_version: String,
    items: Vec<BatchItem>,
    summary: BatchSummary,
}

#[derive(serde::Serialize)]
struct BatchItem {
    line: usize,
    input: InputEcho,
    degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<bool>,
    chamberland: bool,
    sturm: bool,
    agree: bool,
}

#[derive(serde::Serialize)]
struct BatchSummary {
    total: usize,
    real_and_distinct: usize,
    not_real_and_distinct: usize,
    disagreements: usize,
}

pub fn run_batch(path: &Path, json: bool) -> Result<CmdOutput, CliFailure> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| CliFailure::usage(format!("cannot read {}: {e}", path.display())))?;

    let mut entries: Vec<(usize, String, Polynomial, InputEcho)> = Vec::new();
    for (idx, raw) in content.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let input = match line.strip_prefix("coeffs:") {
            Some(rest) => PolynomialInput::Coeffs(rest.trim().to_string()),
            None => PolynomialInput::Expr(line.to_string()),
        };
        let (p, echo) = input
            .parse()
            .map_err(|e| CliFailure::usage(format!("line {line_no}: {}", e.message)))?;
        entries.push((line_no, line.to_string(), p, echo));
    }

    let polys: Vec<Polynomial> = entries.iter().map(|(_, _, p, _)| p.clone()).collect();
    let results = batch::check_both_all(&polys);

    let mut items = Vec::with_capacity(entries.len());
    let mut human = String::new();
    let mut yes = 0usize;
    let mut no = 0usize;
    let mut disagreements = 0usize;
    for ((line_no, text, p, echo), result) in entries.into_iter().zip(results) {
        let degree = p.degree().unwrap_or(0);
        match result {
            Ok(v) => {
                if v.all_real_and_distinct {
                    yes += 1;
                } else {
                    no += 1;
                }
                let _ = writeln!(
                    human,
                    "line {line_no}: {text}: {} (chamberland: {}, sturm: {})",
                    if v.all_real_and_distinct { "real and distinct" } else { "NOT real and distinct" },
                    v.all_real_and_distinct,
                    v.all_real_and_distinct,
                );
                items.push(BatchItem {
                    line: line_no,
                    input: echo,
                    degree,
                    verdict: Some(v.all_real_and_distinct),
                    chamberland: v.all_real_and_distinct,
                    sturm: v.all_real_and_distinct,
                    agree: true,
                });
            }
            Err(Error::InternalDisagreement { criterion, sturm }) => {
                disagreements += 1;
                let _ = writeln!(
                    human,
                    "line {line_no}: {text}: INTERNAL DISAGREEMENT (chamberland: {criterion}, sturm: {sturm})"
                );
                items.push(BatchItem {
                    line: line_no,
                    input: echo,
                    degree,
                    verdict: None,
                    chamberland: criterion,
                    sturm,
                    agree: false,
                });
            }
            Err(e) => {
                return Err(CliFailure::usage(format!("line {line_no}: {e}")));
            }
        }
    }
    let total = items.len();
    let summary = BatchSummary {
        total,
        real_and_distinct: yes,
        not_real_and_distinct: no,
        disagreements,
    };
    let code = if disagreements > 0 { 3 } else { 0 };
    if json {
        let doc = BatchDocument {
            schema_version: document::SCHEMA_VERSION.to_string(),
            items,
            summary,
        };
        return Ok(CmdOutput { stdout: document::to_json(&doc), code });
    }
    let _ = writeln!(
        human,
        "summary: {total} checked, {yes} real and distinct, {no} not, {disagreements} disagreements"
    );
    Ok(CmdOutput { stdout: human, code })
}
