//! Command-line front end: `expand`, `verify`, `table` and `list`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{self, Bindings, BuildCtx, IdentityDescriptor};
use crate::error::{CatalogError, ParseError, PartitionError};
use crate::partition::{generating_series, GenStat, DEFAULT_BUDGET};
use crate::qseries::SumGuard;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::report::{emit_report, Format, RunInfo};
use crate::series::Series;

#[derive(Parser, Debug)]
#[command(name = "qtails", version, about = "Exact q-series lab: expand series and verify sum-of-tails identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of a named series, statistic or identity side.
    Expand(ExpandArgs),
    /// Check identities coefficient by coefficient.
    Verify(VerifyArgs),
    /// Tabulate partition statistics computed by enumeration.
    Table(TableArgs),
    /// List every identity with its anchor quote and parameter slots.
    List,
}

#[derive(Args, Debug)]
struct Common {
    /// Parameter assignment such as `c=1/2` or `t=-1/2*q^3`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Stall limit of the formal-sum convergence guard.
    #[arg(long, value_name = "N")]
    guard: Option<usize>,
    /// Maximum number of partitions enumerated per n.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    /// A named series, a statistic, or `<identity>:<side>`.
    #[arg(long)]
    series: String,
    #[arg(long, default_value_t = 20)]
    order: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["id", "all"])))]
struct VerifyArgs {
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    /// Truncation order; defaults to each identity's own order.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write zero timings and timestamp so reruns are byte-identical.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Largest n tabulated.
    #[arg(long, default_value_t = 20)]
    order: usize,
    /// Statistics to include (default: all).
    #[arg(long = "stat")]
    stats: Vec<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code: 0 on success, 1 if a verification failed or did
/// not converge, 2 on usage, parse or i/o errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Expand(args) => expand(&args, &mut out),
        Command::Verify(args) => verify(&args, &mut out),
        Command::Table(args) => table(&args, &mut out),
        Command::List => list(&mut out),
    };
    let flushed = out.flush();
    match result.and_then(|code| flushed.map(|_| code).map_err(CliError::from)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qtails: {e}");
            2
        }
    }
}

fn build_ctx(order: usize, common: &Common) -> BuildCtx {
    BuildCtx {
        order,
        guard: common.guard.map(SumGuard::with_stall_limit).unwrap_or_default(),
        budget: common.budget.unwrap_or(DEFAULT_BUDGET),
    }
}

fn split_assignment(text: &str) -> Result<(&str, &str), ParseError> {
    match text.split_once('=') {
        Some((name, value)) if !name.trim().is_empty() && !value.trim().is_empty() => Ok((name.trim(), value.trim())),
        _ => Err(ParseError::Assignment(text.to_string())),
    }
}

/// Parses `--param` values against the slots of one identity.
fn bindings_for(desc: &IdentityDescriptor, params: &[String]) -> Result<Bindings, ParseError> {
    let mut b = Bindings::new();
    for text in params {
        let (name, value) = split_assignment(text)?;
        let slot = desc.slot(name).ok_or_else(|| ParseError::ParamName(name.to_string()))?;
        b.set(slot.name, slot.parse_value(value)?);
    }
    Ok(b)
}

/// For `--all`: each assignment pins the slot of that name in every identity
/// that has one. A name no identity uses is an error.
fn overrides_for_all(params: &[String]) -> Result<BTreeMap<String, Bindings>, ParseError> {
    let mut map: BTreeMap<String, Bindings> = BTreeMap::new();
    for text in params {
        let (name, value) = split_assignment(text)?;
        let mut used = false;
        for desc in catalog::catalog() {
            if let Some(slot) = desc.slot(name) {
                let v = slot.parse_value(value)?;
                map.entry(desc.id.to_string()).or_default().set(slot.name, v);
                used = true;
            }
        }
        if !used {
            return Err(ParseError::ParamName(name.to_string()));
        }
    }
    Ok(map)
}

fn plain_rational_param(params: &[String], wanted: &str) -> Result<Option<Rational>, ParseError> {
    let mut found = None;
    for text in params {
        let (name, value) = split_assignment(text)?;
        if name != wanted {
            return Err(ParseError::ParamName(name.to_string()));
        }
        found = Some(parse_rational(value)?);
    }
    Ok(found)
}

fn expand_series(args: &ExpandArgs) -> Result<Series, CliError> {
    let ctx = build_ctx(args.order, &args.common);
    let name = args.series.as_str();
    if let Some((id, side)) = name.split_once(':') {
        let desc = catalog::lookup(id)?;
        let index = match side.parse::<usize>() {
            Ok(i) => i,
            Err(_) => desc
                .sides
                .iter()
                .position(|s| s.label == side)
                .ok_or_else(|| CliError::Usage(format!("{id} has no side {side:?}")))?,
        };
        let bindings = bindings_for(desc, &args.common.params)?;
        return Ok(catalog::build_side(id, index, &bindings, &ctx)?);
    }
    if let Some(series) = catalog::named_series(name, &ctx) {
        if !args.common.params.is_empty() {
            return Err(CliError::Usage(format!("series {name} takes no parameters")));
        }
        return Ok(series?);
    }
    if let Some(stat) = GenStat::parse(name) {
        let c = plain_rational_param(&args.common.params, "c")?;
        return Ok(generating_series(stat, c.as_ref(), ctx.order, ctx.budget)?);
    }
    Err(CliError::Usage(format!(
        "unknown series {name:?}; expected one of {}, {}, or <identity>:<side>",
        catalog::series_names().join(", "),
        GenStat::NAMES.join(", ")
    )))
}

#[derive(Serialize)]
struct ExpandJson<'a> {
    series: &'a str,
    order: usize,
    coeffs: Vec<String>,
}

fn expand(args: &ExpandArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let series = expand_series(args)?;
    let coeffs: Vec<String> = series.coeffs().iter().map(format_rational).collect();
    match args.common.format {
        Format::Csv => {
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
        }
        Format::Text => {
            let width = series.order().to_string().len();
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k:>width$}  {c}")?;
            }
        }
        Format::Json => {
            let doc = ExpandJson { series: &args.series, order: series.order(), coeffs };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(0)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let template = build_ctx(0, &args.common);
    let reports = if args.all {
        let overrides = overrides_for_all(&args.common.params)?;
        catalog::verify_all(&template, args.order, &overrides)?
    } else {
        let id = args.id.as_deref().expect("clap enforces --id or --all");
        let desc = catalog::lookup(id)?;
        let pinned = bindings_for(desc, &args.common.params)?;
        let ctx = BuildCtx { order: args.order.unwrap_or(desc.default_order), ..template };
        catalog::with_thread_cap(|| catalog::verify_grid(id, &pinned, &ctx))?
    };
    let run = RunInfo::new(args.order, catalog::grid_hash(catalog::catalog()), !args.no_timing);
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            let mut sink = BufWriter::new(file);
            emit_report(&reports, &run, args.common.format, &mut sink)?;
        }
        None => emit_report(&reports, &run, args.common.format, out)?,
    }
    Ok(if catalog::any_failure(&reports) { 1 } else { 0 })
}

fn table(args: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let stats: Vec<String> = if args.stats.is_empty() {
        GenStat::NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        args.stats.clone()
    };
    let c = plain_rational_param(&args.common.params, "c")?.unwrap_or_else(|| Rational::from_integer(1.into()));
    let budget = args.common.budget.unwrap_or(DEFAULT_BUDGET);
    let mut columns = Vec::with_capacity(stats.len());
    for name in &stats {
        let stat = GenStat::parse(name).ok_or_else(|| CliError::Usage(format!("unknown statistic {name:?}")))?;
        columns.push(generating_series(stat, Some(&c), args.order, budget)?);
    }
    let mut rows: Vec<Vec<String>> = vec![std::iter::once("n".to_string()).chain(stats.iter().cloned()).collect()];
    for n in 0..=args.order {
        let mut row = vec![n.to_string()];
        row.extend(columns.iter().map(|s| format_rational(s.coeff(n))));
        rows.push(row);
    }
    match args.common.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in &rows {
                w.write_record(row).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let header = &rows[0];
            let records: Vec<BTreeMap<&str, &str>> = rows[1..]
                .iter()
                .map(|row| header.iter().map(String::as_str).zip(row.iter().map(String::as_str)).collect())
                .collect();
            serde_json::to_writer_pretty(&mut *out, &records).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => {
            let widths: Vec<usize> =
                (0..rows[0].len()).map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
            for row in &rows {
                let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(out, "{}", cells.join("  "))?;
            }
        }
    }
    Ok(0)
}

fn list(out: &mut dyn Write) -> Result<i32, CliError> {
    let all = catalog::catalog();
    let width = all.iter().map(|d| d.id.len()).max().unwrap_or(0);
    for d in all {
        writeln!(out, "{:width$}  \"{}\"  [{}]", d.id, d.anchor.quote, d.slot_summary())?;
    }
    Ok(0)
}
