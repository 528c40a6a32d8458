//! Registry of identities, each given as two or three independently built
//! sides, and the verification driver that compares them.

mod entries;
pub mod grid;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CatalogError, ParseError, SeriesError};
use crate::partition::DEFAULT_BUDGET;
use crate::qseries::{Monomial, SumGuard};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::series::Series;

pub use entries::g_choice;
pub use grid::{default_grid, grid_hash, GRID_CAP};

/// A bound parameter: a rational multiple of a power of `q` (a plain
/// rational when the power is zero), or a small integer such as `N` or `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Mono(Monomial),
    Int(i64),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Mono(m) => write!(f, "{m}"),
            ParamValue::Int(v) => write!(f, "{v}"),
        }
    }
}

/// Parses `p/q`, `q`, `-q^2`, `1/2*q^3` and similar.
pub fn parse_monomial(text: &str) -> Result<Monomial, ParseError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || ParseError::ParamValue(text.to_string());
    if !s.contains('q') {
        return Ok(Monomial::constant(parse_rational(&s).map_err(|_| bad())?));
    }
    let (coeff, power) = match s.rsplit_once('*') {
        Some((c, p)) => (parse_rational(c).map_err(|_| bad())?, p.to_string()),
        None => match s.strip_prefix('-') {
            Some(p) => (-Rational::one(), p.to_string()),
            None => (Rational::one(), s.clone()),
        },
    };
    let exp = match power.as_str() {
        "q" => 1,
        p => p
            .strip_prefix("q^")
            .and_then(|e| e.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok(Monomial::new(coeff, exp))
}

/// What a parameter slot accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlotKind {
    /// A rational constant.
    Rational,
    /// `r q^m` with `m >= 1`.
    Monomial,
    /// Either of the above.
    Either,
    /// An integer from the listed default values (other values >= `min` are
    /// accepted when bound explicitly).
    Integer { defaults: &'static [i64], min: i64, max: Option<i64> },
}

impl fmt::Display for SlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotKind::Rational => write!(f, "rational"),
            SlotKind::Monomial => write!(f, "monomial"),
            SlotKind::Either => write!(f, "either"),
            SlotKind::Integer { min, max: None, .. } => write!(f, "integer>={min}"),
            SlotKind::Integer { min, max: Some(max), .. } => write!(f, "integer {min}..={max}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParamSlot {
    pub name: &'static str,
    pub kind: SlotKind,
    /// Constant values at which some side has a pole.
    pub poles: Vec<Rational>,
}

impl ParamSlot {
    pub fn parse_value(&self, text: &str) -> Result<ParamValue, ParseError> {
        match &self.kind {
            SlotKind::Integer { .. } => text
                .trim()
                .parse::<i64>()
                .map(ParamValue::Int)
                .map_err(|_| ParseError::ParamValue(text.to_string())),
            _ => parse_monomial(text).map(ParamValue::Mono),
        }
    }

    /// Checks that a value has the right kind for this slot.
    pub fn admits(&self, value: &ParamValue) -> bool {
        match (&self.kind, value) {
            (SlotKind::Rational, ParamValue::Mono(m)) => m.is_constant(),
            (SlotKind::Monomial, ParamValue::Mono(m)) => m.exp >= 1 && !m.is_zero(),
            (SlotKind::Either, ParamValue::Mono(_)) => true,
            (SlotKind::Integer { min, max, .. }, ParamValue::Int(v)) => v >= min && max.is_none_or(|m| *v <= m),
            _ => false,
        }
    }

    pub fn is_pole(&self, value: &ParamValue) -> bool {
        match value {
            ParamValue::Mono(m) => m.is_constant() && self.poles.contains(&m.coeff),
            ParamValue::Int(_) => false,
        }
    }
}

/// Parameter assignments, kept in slot order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bindings {
    values: Vec<(String, ParamValue)>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: ParamValue) {
        match self.values.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.values.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ParamValue)> {
        self.values.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Bound monomial (or constant) for `name`.
    pub fn mono(&self, name: &str) -> Result<Monomial, CatalogError> {
        match self.get(name) {
            Some(ParamValue::Mono(m)) => Ok(m.clone()),
            Some(ParamValue::Int(v)) => Ok(Monomial::constant(Rational::from_integer((*v).into()))),
            None => Err(CatalogError::Binding(format!("parameter {name} is unbound"))),
        }
    }

    /// Bound constant for `name`; rejects a `q`-monomial.
    pub fn rational(&self, name: &str) -> Result<Rational, CatalogError> {
        let m = self.mono(name)?;
        if !m.is_constant() {
            return Err(CatalogError::Binding(format!("parameter {name} must be a rational constant")));
        }
        Ok(m.coeff)
    }

    /// Bound nonnegative integer for `name`.
    pub fn int(&self, name: &str) -> Result<usize, CatalogError> {
        match self.get(name) {
            Some(ParamValue::Int(v)) if *v >= 0 => Ok(*v as usize),
            Some(other) => Err(CatalogError::Binding(format!("parameter {name}={other} is not a nonnegative integer"))),
            None => Err(CatalogError::Binding(format!("parameter {name} is unbound"))),
        }
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Truncation order, sum guard and enumeration budget for one build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildCtx {
    pub order: usize,
    pub guard: SumGuard,
    pub budget: u64,
}

impl BuildCtx {
    pub fn new(order: usize) -> Self {
        BuildCtx { order, guard: SumGuard::default(), budget: DEFAULT_BUDGET }
    }

    pub fn one(&self) -> Series {
        Series::one(self.order)
    }

    pub fn zero(&self) -> Series {
        Series::zero(self.order)
    }

    /// Guarded infinite sum starting at `start`.
    pub fn sum<F>(&self, start: usize, term: F) -> Result<Series, SeriesError>
    where
        F: FnMut(usize) -> Result<Series, SeriesError>,
    {
        crate::qseries::sum_formal(self.order, self.guard, start, term)
    }

    /// Plain finite sum over `range`.
    pub fn finite_sum<F>(&self, range: std::ops::RangeInclusive<usize>, mut term: F) -> Result<Series, SeriesError>
    where
        F: FnMut(usize) -> Result<Series, SeriesError>,
    {
        let mut acc = self.zero();
        for n in range {
            acc.add_assign_ref(&term(n)?);
        }
        Ok(acc)
    }
}

pub type Builder = fn(&BuildCtx, &Bindings) -> Result<Series, CatalogError>;

/// One side of an identity.
#[derive(Clone)]
pub struct Side {
    pub label: &'static str,
    /// Built by partition enumeration rather than series arithmetic.
    pub oracle: bool,
    pub build: Builder,
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Side").field("label", &self.label).field("oracle", &self.oracle).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Anchor {
    /// Short descriptive label.
    pub label: &'static str,
    /// Verbatim phrase locating the identity in the source text.
    pub quote: &'static str,
}

#[derive(Clone, Debug)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub anchor: Anchor,
    pub slots: Vec<ParamSlot>,
    pub sides: Vec<Side>,
    pub default_order: usize,
    /// Deviations from the literal display, if any.
    pub note: Option<&'static str>,
}

impl IdentityDescriptor {
    pub fn slot(&self, name: &str) -> Option<&ParamSlot> {
        self.slots.iter().find(|s| s.name == name)
    }

    pub fn has_oracle(&self) -> bool {
        self.sides.iter().any(|s| s.oracle)
    }

    /// Slot names with their kinds, e.g. `c:either!=1, N:integer>=1`.
    pub fn slot_summary(&self) -> String {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| {
                let poles: Vec<String> = s.poles.iter().map(|p| format!("!={}", format_rational(p))).collect();
                format!("{}:{}{}", s.name, s.kind, poles.join(""))
            })
            .collect();
        parts.join(", ")
    }
}

/// Every identity in a fixed order.
pub fn catalog() -> &'static [IdentityDescriptor] {
    static CATALOG: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    CATALOG.get_or_init(entries::all)
}

pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor, CatalogError> {
    catalog()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

/// Checks kinds and completeness of `bindings` against the descriptor's slots.
fn check_bindings(desc: &IdentityDescriptor, bindings: &Bindings) -> Result<(), CatalogError> {
    for (name, value) in bindings.iter() {
        let slot = desc
            .slot(name)
            .ok_or_else(|| CatalogError::Binding(format!("{} has no parameter {name}", desc.id)))?;
        if !slot.admits(value) {
            return Err(CatalogError::Binding(format!("{name}={value} is not a valid {} value", slot.kind)));
        }
    }
    for slot in &desc.slots {
        if bindings.get(slot.name).is_none() {
            return Err(CatalogError::Binding(format!("parameter {} is unbound", slot.name)));
        }
    }
    Ok(())
}

/// Names of the standalone series `named_series` knows.
pub fn series_names() -> &'static [&'static str] {
    entries::NAMED
}

/// A standalone series such as `sigma` or `euler`; `None` for unknown names.
pub fn named_series(name: &str, ctx: &BuildCtx) -> Option<Result<Series, CatalogError>> {
    entries::named(name, ctx)
}

/// Builds one side of an identity.
pub fn build_side(id: &str, side: usize, bindings: &Bindings, ctx: &BuildCtx) -> Result<Series, CatalogError> {
    let desc = lookup(id)?;
    let s = desc
        .sides
        .get(side)
        .ok_or_else(|| CatalogError::NoSuchSide { id: id.to_string(), side })?;
    check_bindings(desc, bindings)?;
    (s.build)(ctx, bindings)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedPole,
    NonConvergent,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedPole => "skipped-pole",
            Status::NonConvergent => "non-convergent",
        }
    }

    /// Whether this status should make a run exit nonzero.
    pub fn is_failure(&self) -> bool {
        matches!(self, Status::Fail | Status::NonConvergent)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exp: usize,
    /// Sides compared (indices into the descriptor's sides).
    pub sides: (usize, usize),
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub bindings: Bindings,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    /// Explanation for skipped, non-convergent or erroring runs.
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn bindings_text(&self) -> String {
        self.bindings.to_string()
    }
}

/// Compares every pair of sides at one binding. Math failures are encoded
/// in the status; only unusable input (unknown id, bad binding) is an error.
pub fn verify(id: &str, bindings: &Bindings, ctx: &BuildCtx) -> Result<VerificationReport, CatalogError> {
    let desc = lookup(id)?;
    check_bindings(desc, bindings)?;
    let started = Instant::now();
    let mut report = VerificationReport {
        id: id.to_string(),
        order: ctx.order,
        bindings: bindings.clone(),
        status: Status::Pass,
        first_mismatch: None,
        detail: None,
        elapsed_ms: 0,
    };
    let pole = desc.slots.iter().find(|s| bindings.get(s.name).is_some_and(|v| s.is_pole(v)));
    if let Some(slot) = pole {
        report.status = Status::SkippedPole;
        report.detail = Some(format!("excluded value {}={}", slot.name, bindings.get(slot.name).expect("bound")));
        return Ok(report);
    }
    let mut built = Vec::with_capacity(desc.sides.len());
    for side in &desc.sides {
        match (side.build)(ctx, bindings) {
            Ok(s) => built.push(s),
            Err(CatalogError::Series(SeriesError::Pole(d))) => {
                report.status = Status::SkippedPole;
                report.detail = Some(d);
                break;
            }
            Err(CatalogError::Series(SeriesError::NotAUnit)) => {
                report.status = Status::SkippedPole;
                report.detail = Some("a denominator has zero constant term".to_string());
                break;
            }
            Err(CatalogError::Series(e @ SeriesError::NonConvergentSum { .. })) => {
                report.status = Status::NonConvergent;
                report.detail = Some(format!("side {}: {e}", side.label));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if report.status == Status::Pass {
        report.first_mismatch = first_mismatch(&built);
        if report.first_mismatch.is_some() {
            report.status = Status::Fail;
        }
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Earliest exponent at which any pair of sides disagrees.
pub fn first_mismatch(sides: &[Series]) -> Option<Mismatch> {
    let mut best: Option<Mismatch> = None;
    for i in 0..sides.len() {
        for j in i + 1..sides.len() {
            if let Some((exp, lhs, rhs)) = sides[i].first_difference(&sides[j]) {
                if best.as_ref().is_none_or(|b| exp < b.exp) {
                    best = Some(Mismatch { exp, sides: (i, j), lhs, rhs });
                }
            }
        }
    }
    best
}

/// Runs the catalog entry on its default grid with `overrides` pinned.
pub fn verify_grid(id: &str, overrides: &Bindings, ctx: &BuildCtx) -> Result<Vec<VerificationReport>, CatalogError> {
    let desc = lookup(id)?;
    for (name, value) in overrides.iter() {
        let slot = desc
            .slot(name)
            .ok_or_else(|| CatalogError::Binding(format!("{id} has no parameter {name}")))?;
        if !slot.admits(value) {
            return Err(CatalogError::Binding(format!("{name}={value} is not a valid {} value", slot.kind)));
        }
    }
    let grid = grid::grid_with_overrides(desc, overrides);
    let reports: Result<Vec<_>, _> = grid.par_iter().map(|b| verify(id, b, ctx)).collect();
    let mut reports = reports?;
    sort_reports(&mut reports);
    Ok(reports)
}

/// Verifies every entry on its default grid, in parallel, sorted by id then
/// bindings. Each entry runs at `order`, or at its own default order when
/// `order` is `None`; guard and budget come from `template`.
pub fn verify_all(
    template: &BuildCtx,
    order: Option<usize>,
    overrides: &BTreeMap<String, Bindings>,
) -> Result<Vec<VerificationReport>, CatalogError> {
    let jobs: Vec<(&'static str, BuildCtx, Bindings)> = catalog()
        .iter()
        .flat_map(|d| {
            let pinned = overrides.get(d.id).cloned().unwrap_or_default();
            let ctx = BuildCtx { order: order.unwrap_or(d.default_order), ..*template };
            grid::grid_with_overrides(d, &pinned).into_iter().map(move |b| (d.id, ctx, b))
        })
        .collect();
    let run = || jobs.par_iter().map(|(id, ctx, b)| verify(id, b, ctx)).collect::<Result<Vec<_>, _>>();
    let mut reports = with_thread_cap(run)?;
    sort_reports(&mut reports);
    Ok(reports)
}

/// Runs `f` on a pool capped by `QTAILS_THREADS` when it is set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("QTAILS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0);
    match cap.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (a.id.as_str(), a.bindings_text()).cmp(&(b.id.as_str(), b.bindings_text())));
}

/// `true` iff some report failed or did not converge.
pub fn any_failure(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.status.is_failure())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn monomial_parsing() {
        assert_eq!(parse_monomial("1/2").unwrap(), Monomial::constant(rat(1, 2)));
        assert_eq!(parse_monomial("q").unwrap(), Monomial::q());
        assert_eq!(parse_monomial("-q^3").unwrap(), Monomial::new(int(-1), 3));
        assert_eq!(parse_monomial("-2/3*q^2").unwrap(), Monomial::new(rat(-2, 3), 2));
        assert_eq!(parse_monomial("1/2*q").unwrap(), Monomial::new(rat(1, 2), 1));
        assert!(parse_monomial("q^x").is_err());
        assert!(parse_monomial("1/0").is_err());
        for text in ["q", "-q", "q^2", "1/2*q", "-1/2", "3"] {
            assert_eq!(parse_monomial(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn registry_shape() {
        let all = catalog();
        assert!(all.len() >= 45);
        let mut ids: Vec<&str> = all.iter().map(|d| d.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len(), "ids are unique");
        for d in all {
            assert!((2..=3).contains(&d.sides.len()), "{} has {} sides", d.id, d.sides.len());
        }
    }

    #[test]
    fn binding_checks() {
        let ctx = BuildCtx::new(10);
        let missing = verify("c-chain-finite", &Bindings::new(), &ctx);
        assert!(matches!(missing, Err(CatalogError::Binding(_))));
        let wrong_kind = Bindings::new().with("t", ParamValue::Mono(Monomial::constant(int(2))));
        assert!(matches!(verify("af-tails", &wrong_kind, &ctx), Err(CatalogError::Binding(_))));
        assert!(matches!(verify("nope", &Bindings::new(), &ctx), Err(CatalogError::UnknownId(_))));
    }

    #[test]
    fn pole_exclusion_is_reported_not_raised() {
        let ctx = BuildCtx::new(40);
        let b = Bindings::new()
            .with("c", ParamValue::Mono(Monomial::constant(int(1))))
            .with("N", ParamValue::Int(3));
        let r = verify("c-chain-finite", &b, &ctx).unwrap();
        assert_eq!(r.status, Status::SkippedPole);
    }

    #[test]
    fn mismatch_is_located() {
        let a = Series::from_ints(5, &[1, 2, 3]).unwrap();
        let b = Series::from_ints(5, &[1, 2, 4]).unwrap();
        let c = Series::from_ints(5, &[1, 5, 3]).unwrap();
        let m = first_mismatch(&[a.clone(), a.clone(), b]).unwrap();
        assert_eq!((m.exp, m.sides), (2, (0, 2)));
        let m = first_mismatch(&[a.clone(), a, c]).unwrap();
        assert_eq!((m.exp, m.lhs, m.rhs), (1, int(2), int(5)));
    }
}
