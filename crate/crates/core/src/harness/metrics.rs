//! Per-run metrics, the CSV results table and per-planner summaries.

use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::planners::{OutcomeKind, PlannerKind, RunResult};

pub const CSV_HEADER: &str =
    "planner,fire,start_x,start_y,outcome,ttv_total,ttl_total,ttv_sa,ttl_sa,nontrivial_v,nontrivial_l,compute_ms";

/// One results-table row. Times are in timestamps since the UAV launched.
/// `ttv_*` is the time the alert was resolved: fire evidence observed, or
/// the false positive declared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMetrics {
    pub planner: PlannerKind,
    pub fire: usize,
    pub start_x: i32,
    pub start_y: i32,
    pub outcome: OutcomeKind,
    pub ttv_total: Option<u64>,
    pub ttl_total: Option<u64>,
    /// Time after the initial transit; only set for non-trivial runs.
    pub ttv_sa: Option<u64>,
    pub ttl_sa: Option<u64>,
    pub nontrivial_v: bool,
    pub nontrivial_l: bool,
    pub compute_ms: Option<f64>,
}

impl RunMetrics {
    pub fn from_run(fire: usize, result: &RunResult, with_timing: bool) -> Self {
        let o = &result.outcome;
        let start = result.trace.records.first().map(|r| (r.x, r.y)).unwrap_or((0, 0));
        let transit = result.transit_len;
        let ttv = o.t_resolved();
        let nontrivial_v = !(ttv.is_some() && o.validated_in_transit);
        let nontrivial_l = !(o.t_localize.is_some() && o.localized_in_transit);
        let after_transit = |t: Option<u64>, nontrivial: bool| match t {
            Some(t) if nontrivial => Some(t - transit),
            _ => None,
        };
        Self {
            planner: result.planner,
            fire,
            start_x: start.0,
            start_y: start.1,
            outcome: o.kind,
            ttv_total: ttv,
            ttl_total: o.t_localize,
            ttv_sa: after_transit(ttv, nontrivial_v),
            ttl_sa: after_transit(o.t_localize, nontrivial_l),
            nontrivial_v,
            nontrivial_l,
            compute_ms: with_timing.then_some(result.compute.as_secs_f64() * 1e3),
        }
    }
}

pub fn write_csv<W: Write>(rows: &[RunMetrics], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in rows {
        let opt = |v: Option<u64>| v.map(|t| t.to_string()).unwrap_or_default();
        w.write_record([
            r.planner.as_str().to_string(),
            r.fire.to_string(),
            r.start_x.to_string(),
            r.start_y.to_string(),
            r.outcome.as_str().to_string(),
            opt(r.ttv_total),
            opt(r.ttl_total),
            opt(r.ttv_sa),
            opt(r.ttl_sa),
            r.nontrivial_v.to_string(),
            r.nontrivial_l.to_string(),
            r.compute_ms.map(|v| format!("{v:.4}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<RunMetrics>> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut rows = Vec::new();
    for rec in rdr.deserialize() {
        rows.push(rec?);
    }
    Ok(rows)
}

fn mean<I: IntoIterator<Item = f64>>(values: I) -> Option<f64> {
    let (sum, n) = values.into_iter().fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    (n > 0).then(|| sum / n as f64)
}

/// Means per planner. `None` when no run qualifies for the metric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlannerSummary {
    pub planner: PlannerKind,
    pub runs: usize,
    pub localized: usize,
    pub validated_only: usize,
    pub false_positive: usize,
    pub exhausted: usize,
    pub nontrivial_l_runs: usize,
    pub nontrivial_v_runs: usize,
    pub ttl_total: Option<f64>,
    pub ttl_nontrivial: Option<f64>,
    pub ttl_sa: Option<f64>,
    pub ttv_total: Option<f64>,
    pub ttv_nontrivial: Option<f64>,
    pub ttv_sa: Option<f64>,
    pub compute_ms: Option<f64>,
}

impl PlannerSummary {
    pub fn from_rows<'a>(planner: PlannerKind, rows: impl IntoIterator<Item = &'a RunMetrics>) -> Self {
        let rows: Vec<&RunMetrics> = rows.into_iter().filter(|r| r.planner == planner).collect();
        let count = |k: OutcomeKind| rows.iter().filter(|r| r.outcome == k).count();
        let f = |v: u64| v as f64;
        Self {
            planner,
            runs: rows.len(),
            localized: count(OutcomeKind::Localized),
            validated_only: count(OutcomeKind::ValidatedOnly),
            false_positive: count(OutcomeKind::FalsePositive),
            exhausted: count(OutcomeKind::Exhausted),
            nontrivial_l_runs: rows.iter().filter(|r| r.ttl_total.is_some() && r.nontrivial_l).count(),
            nontrivial_v_runs: rows.iter().filter(|r| r.ttv_total.is_some() && r.nontrivial_v).count(),
            ttl_total: mean(rows.iter().filter_map(|r| r.ttl_total).map(f)),
            ttl_nontrivial: mean(
                rows.iter()
                    .filter(|r| r.nontrivial_l)
                    .filter_map(|r| r.ttl_total)
                    .map(f),
            ),
            ttl_sa: mean(rows.iter().filter_map(|r| r.ttl_sa).map(f)),
            ttv_total: mean(rows.iter().filter_map(|r| r.ttv_total).map(f)),
            ttv_nontrivial: mean(
                rows.iter()
                    .filter(|r| r.nontrivial_v)
                    .filter_map(|r| r.ttv_total)
                    .map(f),
            ),
            ttv_sa: mean(rows.iter().filter_map(|r| r.ttv_sa).map(f)),
            compute_ms: mean(rows.iter().filter_map(|r| r.compute_ms)),
        }
    }
}

/// One summary per planner that appears in the rows, in planner order.
pub fn aggregate(rows: &[RunMetrics]) -> Vec<PlannerSummary> {
    let mut planners: Vec<PlannerKind> = rows.iter().map(|r| r.planner).collect();
    planners.sort();
    planners.dedup();
    planners
        .into_iter()
        .map(|p| PlannerSummary::from_rows(p, rows))
        .collect()
}

/// Relative improvement of `ours` over `theirs`: `1 - ours / theirs`.
pub fn improvement(ours: f64, theirs: f64) -> f64 {
    1.0 - ours / theirs
}

/// Summaries pooled over every run and split by scenario kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub overall: Vec<PlannerSummary>,
    pub true_positive: Vec<PlannerSummary>,
    pub false_positive: Vec<PlannerSummary>,
}

impl Summary {
    pub fn new(true_fire_rows: &[RunMetrics], false_positive_rows: &[RunMetrics]) -> Self {
        let all: Vec<RunMetrics> = true_fire_rows.iter().chain(false_positive_rows).cloned().collect();
        Self {
            overall: aggregate(&all),
            true_positive: aggregate(true_fire_rows),
            false_positive: aggregate(false_positive_rows),
        }
    }
}

type Metric = fn(&PlannerSummary) -> Option<f64>;

pub struct SummaryTable<'a>(pub &'a [PlannerSummary]);

impl fmt::Display for SummaryTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |v: Option<f64>| v.map(|v| format!("{v:.2}")).unwrap_or_else(|| "N/A".into());
        write!(f, "{:<22}", "")?;
        for s in self.0 {
            write!(f, " {:>16}", s.planner.as_str())?;
        }
        writeln!(f)?;
        let rows: [(&str, Metric); 7] = [
            ("TtL total", |s| s.ttl_total),
            ("TtL non-trivial", |s| s.ttl_nontrivial),
            ("TtL search area", |s| s.ttl_sa),
            ("TtV total", |s| s.ttv_total),
            ("TtV non-trivial", |s| s.ttv_nontrivial),
            ("TtV search area", |s| s.ttv_sa),
            ("compute (ms)", |s| s.compute_ms),
        ];
        for (name, get) in rows {
            write!(f, "{name:<22}")?;
            for s in self.0 {
                write!(f, " {:>16}", cell(get(s)))?;
            }
            writeln!(f)?;
        }
        write!(f, "{:<22}", "runs (loc/val/fp/exh)")?;
        for s in self.0 {
            let counts = format!(
                "{}/{}/{}/{}",
                s.localized, s.validated_only, s.false_positive, s.exhausted
            );
            write!(f, " {counts:>16}")?;
        }
        writeln!(f)
    }
}
