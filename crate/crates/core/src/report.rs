//! JSON report of a verification run.
//!
//! The layout is fixed: results sorted by id, and `elapsed_ms` zeroed unless
//! timings are requested, so two runs with one seed produce identical bytes.

use serde::{Deserialize, Serialize};

use crate::numeric::EvalConfig;
use crate::registry::{Mode, Status, Verdict};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub tolerance: f64,
    /// Order override of the run, or 0 when each record used its default.
    pub order: i64,
    pub results: Vec<ResultRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub id: String,
    pub mode: Mode,
    pub status: Status,
    pub max_abs_residual: Option<f64>,
    pub first_mismatch_exponent: Option<String>,
    pub elapsed_ms: u64,
    pub paper_label: String,
    pub note: Option<String>,
}

impl From<&Verdict> for ResultRow {
    fn from(v: &Verdict) -> Self {
        ResultRow {
            id: v.id.clone(),
            mode: v.mode,
            status: v.status,
            max_abs_residual: v.max_abs_residual,
            first_mismatch_exponent: v.mismatch.as_ref().map(|m| m.exponent.clone()),
            elapsed_ms: v.elapsed_ms,
            paper_label: v.paper_label.clone(),
            note: v.note.clone(),
        }
    }
}

impl Report {
    /// Collect verdicts, sorting by id.
    pub fn new(cfg: &EvalConfig, order: Option<i64>, verdicts: Vec<Verdict>) -> Self {
        let mut results: Vec<ResultRow> = verdicts.iter().map(ResultRow::from).collect();
        results.sort_by(|a, b| a.id.cmp(&b.id));
        Report {
            version: crate::VERSION.to_string(),
            seed: cfg.seed,
            tolerance: cfg.comparison_tolerance,
            order: order.unwrap_or(0),
            results,
        }
    }

    /// Drop wall-clock times, which differ between runs.
    pub fn without_timings(mut self) -> Self {
        for r in &mut self.results {
            r.elapsed_ms = 0;
        }
        self
    }

    /// True when every result passed or counts as evidence.
    pub fn succeeded(&self) -> bool {
        self.results.iter().all(|r| r.status.is_success())
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(id: &str, status: Status) -> Verdict {
        Verdict {
            id: id.into(),
            mode: Mode::Numeric,
            status,
            order: None,
            samples: Some(5),
            max_abs_residual: Some(1e-12),
            mismatch: None,
            elapsed_ms: 17,
            paper_label: "x:eqn1".into(),
            note: None,
        }
    }

    #[test]
    fn sorted_and_stable() {
        let cfg = EvalConfig::default();
        let r =
            Report::new(&cfg, None, vec![verdict("b", Status::Pass), verdict("a", Status::Evidence)]).without_timings();
        assert_eq!(r.results[0].id, "a");
        assert!(r.succeeded());
        let json = r.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(json.contains("\"mode\": \"numeric\""));
        assert!(json.contains("\"elapsed_ms\": 0"));
    }

    #[test]
    fn empty_report() {
        let r = Report::new(&EvalConfig::default(), Some(40), vec![]);
        assert!(r.results.is_empty());
        assert_eq!(r.order, 40);
        assert!(r.succeeded());
    }
}
