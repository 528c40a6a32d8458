//! Rendering verification reports as JSON, CSV or an aligned text table.

use std::io::{self, Write};

use serde::Serialize;

use crate::catalog::{sort_reports, VerificationReport};
use crate::rational::format_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Run-level metadata printed alongside the results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunInfo {
    /// `None` when each identity ran at its own default order.
    pub order: Option<usize>,
    pub grid_hash: String,
    /// Seconds since the Unix epoch; 0 when timing is suppressed.
    pub timestamp: u64,
    /// When false, per-run timings are written as 0 so output is reproducible.
    #[serde(skip)]
    pub timing: bool,
}

impl RunInfo {
    pub fn new(order: Option<usize>, grid_hash: String, timing: bool) -> Self {
        let timestamp = if timing {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        } else {
            0
        };
        RunInfo { order, grid_hash, timestamp, timing }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    run: &'a RunInfo,
    results: Vec<JsonResult>,
}

#[derive(Serialize)]
struct JsonResult {
    id: String,
    status: &'static str,
    bindings: String,
    first_mismatch: Option<JsonMismatch>,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct JsonMismatch {
    exp: usize,
    lhs: String,
    rhs: String,
}

/// Writes `reports` in id-then-bindings order. Reports are cloned and sorted
/// here so callers may pass them in any order.
pub fn emit_report(reports: &[VerificationReport], run: &RunInfo, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    let mut sorted = reports.to_vec();
    sort_reports(&mut sorted);
    match format {
        Format::Json => write_json(&sorted, run, sink),
        Format::Csv => write_csv(&sorted, sink),
        Format::Text => write_text(&sorted, run, sink),
    }?;
    sink.flush()
}

fn write_json(reports: &[VerificationReport], run: &RunInfo, sink: &mut dyn Write) -> io::Result<()> {
    let results = reports
        .iter()
        .map(|r| JsonResult {
            id: r.id.clone(),
            status: r.status.as_str(),
            bindings: r.bindings_text(),
            first_mismatch: r.first_mismatch.as_ref().map(|m| JsonMismatch {
                exp: m.exp,
                lhs: format_rational(&m.lhs),
                rhs: format_rational(&m.rhs),
            }),
            elapsed_ms: if run.timing { r.elapsed_ms } else { 0 },
        })
        .collect();
    serde_json::to_writer_pretty(&mut *sink, &JsonReport { run, results })?;
    writeln!(sink)
}

fn write_csv(reports: &[VerificationReport], sink: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["id", "status", "bindings", "first_mismatch_exp"])?;
    for r in reports {
        let exp = r.first_mismatch.as_ref().map(|m| m.exp.to_string()).unwrap_or_default();
        w.write_record([r.id.as_str(), r.status.as_str(), &r.bindings_text(), &exp])?;
    }
    w.flush()
}

fn write_text(reports: &[VerificationReport], run: &RunInfo, sink: &mut dyn Write) -> io::Result<()> {
    let timed = run.timing;
    let mut rows: Vec<[String; 6]> = vec![[
        "id".into(),
        "order".into(),
        "status".into(),
        "bindings".into(),
        "first mismatch".into(),
        "ms".into(),
    ]];
    for r in reports {
        let mismatch = match &r.first_mismatch {
            Some(m) => format!("q^{}: {} vs {}", m.exp, m.lhs, m.rhs),
            None => r.detail.clone().unwrap_or_default(),
        };
        let bindings = if r.bindings.is_empty() { "-".to_string() } else { r.bindings_text() };
        let ms = if timed { r.elapsed_ms.to_string() } else { "-".to_string() };
        rows.push([r.id.clone(), r.order.to_string(), r.status.to_string(), bindings, mismatch, ms]);
    }
    let mut widths = [0usize; 6];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in &rows {
        let line: Vec<String> = row.iter().zip(widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        writeln!(sink, "{}", line.join("  ").trim_end())?;
    }
    let failures = reports.iter().filter(|r| r.status.is_failure()).count();
    writeln!(sink, "{} runs, {} failing, grid {}", reports.len(), failures, &run.grid_hash[..run.grid_hash.len().min(12)])
}
