//! Uniform check reports, serialized deterministically for the CLI.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub outcome: Outcome,
    #[serde(serialize_with = "ser_float", skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Floats are emitted as strings with 17 significant digits.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn ser_float<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&format_float(*v)),
        None => s.serialize_none(),
    }
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            params: BTreeMap::new(),
            order: None,
            outcome: Outcome::Pass,
            max_deviation: None,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Report::new(check);
        r.outcome = Outcome::Skipped;
        r.notes.push(reason.into());
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    /// Records a failed assertion; the report becomes a failure.
    pub fn violation(&mut self, message: impl Into<String>) {
        self.outcome = Outcome::Fail;
        self.violations.push(message.into());
    }

    pub fn note(&mut self, message: impl Into<String>) {
        self.notes.push(message.into());
    }

    pub fn deviation(&mut self, d: f64) {
        self.max_deviation = Some(self.max_deviation.map_or(d, |m| m.max(d)));
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }

    pub fn is_skipped(&self) -> bool {
        self.outcome == Outcome::Skipped
    }
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violation_flips_outcome() {
        let mut r = Report::new("x").param("n", 3);
        assert!(r.passed());
        r.violation("bad");
        assert!(!r.passed());
        assert!(Report::skipped("y", "n/a").passed());
    }

    #[test]
    fn serialization_is_stable() {
        let mut r = Report::new("mh").param("b", 2).param("a", 1).with_order(5);
        r.deviation(0.25);
        r.deviation(0.125);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"check":"mh","params":{"a":"1","b":"2"},"order":5,"outcome":"pass","max_deviation":"2.5000000000000000e-1"}"#
        );
    }
}
