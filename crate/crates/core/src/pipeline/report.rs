//! JSON and aligned-text rendering of pipeline results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{Outcome, Pair, Pipeline, ReductionTrace, ResidualCase, Status};
use crate::coxeter::SymmetricGroup;

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub rule: &'static str,
    pub citation: &'static str,
    pub before: (String, String),
    pub after: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceReport {
    pub x: String,
    pub y: String,
    pub steps: Vec<StepReport>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hard_label: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub label: Option<String>,
    pub x: String,
    pub y: String,
    pub status: &'static str,
    pub verdict: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pairs: usize,
    pub by_status: BTreeMap<&'static str, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub rank: usize,
    pub summary: Summary,
    pub direct_residuals: Vec<ResidualReport>,
    pub residual_cases: Vec<ResidualReport>,
    pub golden_diff: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<TraceReport>>,
}

fn words(g: &SymmetricGroup, (x, y): Pair) -> (String, String) {
    (g.element(x).word_string(), g.element(y).word_string())
}

fn residual_report(g: &SymmetricGroup, c: &ResidualCase) -> ResidualReport {
    let (x, y) = words(g, c.pair);
    ResidualReport {
        label: c.label.clone(),
        x,
        y,
        status: c.status.kind(),
        verdict: c.verdict.clone(),
    }
}

impl TraceReport {
    pub fn new(g: &SymmetricGroup, t: &ReductionTrace) -> Self {
        let (x, y) = words(g, t.original);
        let steps = t
            .steps
            .iter()
            .map(|s| StepReport {
                rule: s.rule.name(),
                citation: s.rule.citation(),
                before: words(g, s.before),
                after: match &s.after {
                    Outcome::Pair(p) => {
                        let (a, b) = words(g, *p);
                        format!("({a}, {b})")
                    }
                    Outcome::Verdict(v) => v.clone(),
                },
            })
            .collect();
        TraceReport {
            x,
            y,
            steps,
            status: t.status.clone(),
            direct_label: t.direct.as_ref().and_then(|(_, l)| l.clone()),
            hard_label: t.hard.as_ref().and_then(|h| h.label.clone()),
        }
    }
}

impl PipelineReport {
    /// Assembles the report in the order of `traces`; include per-pair
    /// traces only when `with_traces` is set.
    pub fn new(pipeline: &Pipeline, traces: &[ReductionTrace], with_traces: bool) -> Self {
        let g = pipeline.cells().group();
        let mut by_status = BTreeMap::new();
        for t in traces {
            *by_status.entry(t.status.kind()).or_insert(0) += 1;
        }
        PipelineReport {
            rank: pipeline.rank(),
            summary: Summary {
                pairs: traces.len(),
                by_status,
            },
            direct_residuals: pipeline
                .direct_residuals(traces)
                .iter()
                .map(|c| residual_report(g, c))
                .collect(),
            residual_cases: pipeline
                .residual_cases(traces)
                .iter()
                .map(|c| residual_report(g, c))
                .collect(),
            golden_diff: pipeline.golden_diff(traces),
            traces: with_traces.then(|| traces.iter().map(|t| TraceReport::new(g, t)).collect()),
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// One row per direct or hard residual case.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("set\tlabel\tx\ty\tstatus\tverdict\n");
        let sets = [("direct", &self.direct_residuals), ("hard", &self.residual_cases)];
        for (set, rows) in sets {
            for r in rows {
                let label = r.label.as_deref().unwrap_or("-");
                let _ = writeln!(out, "{set}\t{label}\t{}\t{}\t{}\t{}", r.x, r.y, r.status, r.verdict);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rank {}: {} normalized pairs", self.rank, self.summary.pairs);
        for (kind, count) in &self.summary.by_status {
            let _ = writeln!(out, "  {kind:<24}{count:>8}");
        }
        let table = |out: &mut String, title: &str, rows: &[ResidualReport]| {
            let _ = writeln!(out, "{title} ({})", rows.len());
            let wx = rows.iter().map(|r| r.x.len()).max().unwrap_or(0);
            let wy = rows.iter().map(|r| r.y.len()).max().unwrap_or(0);
            for r in rows {
                let _ = writeln!(
                    out,
                    "  {:<6} {:<wx$}  {:<wy$}  {:<16} {}",
                    r.label.as_deref().unwrap_or("-"),
                    r.x,
                    r.y,
                    r.status,
                    r.verdict
                );
            }
        };
        table(&mut out, "direct residuals", &self.direct_residuals);
        table(&mut out, "hard residuals", &self.residual_cases);
        let _ = writeln!(out, "residual: {}", self.residual_cases.len());
        if self.golden_diff.is_empty() {
            let _ = writeln!(out, "golden: match");
        } else {
            let _ = writeln!(out, "golden: {} differences", self.golden_diff.len());
            for d in &self.golden_diff {
                let _ = writeln!(out, "  {d}");
            }
        }
        if let Some(traces) = &self.traces {
            for t in traces {
                let _ = writeln!(out, "({}, {}) -> {}", t.x, t.y, t.status.kind());
                for s in &t.steps {
                    let _ = writeln!(
                        out,
                        "    {:<24} ({}, {}) -> {}",
                        s.rule, s.before.0, s.before.1, s.after
                    );
                }
            }
        }
        out
    }
}
