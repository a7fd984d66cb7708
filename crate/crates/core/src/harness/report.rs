//! Verification reports and their JSON and CSV renderings.
//!
//! Reals are written in scientific notation with 17 significant digits, which
//! round-trips every `f64`; NaN and infinities become `null` (JSON) or an
//! empty field (CSV).

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// An `f64` serialized with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Real {
    fn render(self) -> Option<String> {
        self.0.is_finite().then(|| format!("{:.16e}", self.0))
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.render() {
            Some(text) => RawValue::from_string(text)
                .map_err(serde::ser::Error::custom)?
                .serialize(serializer),
            None => serializer.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        }
    }

    /// Margin by which `lhs relation rhs` holds under the mixed tolerance
    /// `a <= b·(1 + tol) + tol`; negative when it fails, NaN on NaN input.
    pub fn slack(self, lhs: f64, rhs: f64, tol: f64) -> f64 {
        match self {
            Relation::Le => rhs * (1.0 + tol) + tol - lhs,
            Relation::Ge => lhs * (1.0 + tol) + tol - rhs,
            Relation::Eq => tol * lhs.abs().max(rhs.abs()) + tol - (lhs - rhs).abs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Option<Real>,
    pub rhs: Option<Real>,
    pub relation: Relation,
    pub holds: bool,
    pub slack: Option<Real>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Check {
    pub fn compare(name: &str, lhs: f64, relation: Relation, rhs: f64, tol: f64) -> Self {
        let slack = relation.slack(lhs, rhs, tol);
        Self {
            name: name.to_string(),
            lhs: Some(Real(lhs)),
            rhs: Some(Real(rhs)),
            relation,
            holds: slack >= 0.0,
            slack: Some(Real(slack)),
            reason: None,
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(name: &str, relation: Relation, reason: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            lhs: None,
            rhs: None,
            relation,
            holds: false,
            slack: None,
            reason: Some(reason.into()),
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edge_count: usize,
    pub mass_total: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub seed: u64,
    pub tolerance: Real,
    pub graph_summary: GraphSummary,
    pub quantities: BTreeMap<String, Real>,
    pub checks: Vec<Check>,
    pub witnesses: BTreeMap<String, Vec<String>>,
    pub timing_ms: BTreeMap<String, Real>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

const CSV_HEADER: [&str; 7] = ["name", "lhs", "rhs", "relation", "holds", "slack", "reason"];

pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut text = serde_json::to_string_pretty(report).expect("report serializes");
            text.push('\n');
            text
        }
        ReportFormat::Csv => {
            let real = |r: Option<Real>| r.and_then(Real::render).unwrap_or_default();
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(CSV_HEADER).expect("in-memory write");
            for c in &report.checks {
                writer
                    .write_record([
                        c.name.clone(),
                        real(c.lhs),
                        real(c.rhs),
                        c.relation.symbol().to_string(),
                        c.holds.to_string(),
                        real(c.slack),
                        c.reason.clone().unwrap_or_default(),
                    ])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

/// `name,value` rows for a set of quantities.
pub fn emit_quantities_csv(quantities: &BTreeMap<String, Real>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["quantity", "value"]).expect("in-memory write");
    for (name, value) in quantities {
        writer
            .write_record([name.clone(), value.render().unwrap_or_default()])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
