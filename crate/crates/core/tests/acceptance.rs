//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the output; exits nonzero if
//! any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};

use qtails::catalog::{self, build_side, g_choice, named_series, parse_monomial, verify, Bindings, BuildCtx, ParamValue, Status};
use qtails::engine::{engine_lhs, theorem1_engine};
use qtails::partition::{
    crank_moment, d_distinct, d_divisors, ffw, l_odd, lpt, s_odd, sigma_prime, spt, t_sum, weighted_sum, ClassSpec,
    PartitionClass, WeightExpr,
};
use qtails::qseries::{Monomial, SumGuard};
use qtails::rational::{int, rat, Rational};

/// Wall-clock limits.
const FULL_RUN_LIMIT: Duration = Duration::from_secs(300);
const DELTA_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 full catalog, verify --all --order 40", full_catalog),
        ("2 delta(q) two ways to q^1000, |coeff| < 2", delta_bound),
        ("3 FFW at c=1 against divisor counts", ffw_divisors),
        ("4 crank moments against sum n q^(n^2)/(q)_n^2", crank_identity),
        ("5 spt three ways for n <= 40", spt_three_ways),
        ("6 sigma(q,N), sigma(q), phi(q), psi(q) representations", sigma_and_mock),
        ("7 combinatorial corollaries by enumeration", combinatorial),
        ("8 general finite transformation over grids", engine_grid),
        ("9 eta(24z) tails identity to q^1200", zagier_1200),
        ("10 property suites, 1000 seeded cases each", property_suites),
        ("anchor quotes found verbatim", anchors),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn full_catalog() -> Outcome {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qtails"))
        .args(["verify", "--all", "--order", "40", "--format", "csv", "--no-timing"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let statuses: Vec<&str> = text.lines().skip(1).filter_map(|l| l.split(',').nth(1)).collect();
    let bad: Vec<&str> =
        text.lines().skip(1).filter(|l| matches!(l.split(',').nth(1), Some("fail" | "non-convergent"))).collect();
    let detail = format!(
        "{} runs, {} bad, exit {:?}, {:.1}s of {}s",
        statuses.len(),
        bad.len(),
        out.status.code(),
        elapsed.as_secs_f64(),
        FULL_RUN_LIMIT.as_secs()
    );
    check(bad.is_empty() && out.status.code() == Some(0) && statuses.len() >= 45 && elapsed < FULL_RUN_LIMIT, detail)
}

fn delta_bound() -> Outcome {
    const ORDER: usize = 1000;
    let started = Instant::now();
    let ctx = BuildCtx::new(ORDER);
    let def = build_side("delta-at-minus1", 0, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let alt = build_side("delta-at-minus1", 1, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let from_one = named_series("delta", &ctx).expect("named").map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let max = def.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let agree = def == alt && &from_one + &qtails::series::Series::one(ORDER) == def;
    check(
        agree && max < int(2) && elapsed < DELTA_LIMIT,
        format!("agree {agree}, max |coeff| {max}, {:.1}s of {}s", elapsed.as_secs_f64(), DELTA_LIMIT.as_secs()),
    )
}

fn ffw_divisors() -> Outcome {
    let ctx = BuildCtx::new(1000);
    let series = build_side("ffw-divisor", 1, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let lambert = build_side("ffw-divisor", 2, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let lambert_is_d = (1..=1000u32).all(|n| *lambert.coeff(n as usize) == int(d_divisors(n) as i64));
    let oracle = build_side("ffw-divisor", 0, &Bindings::new(), &BuildCtx::new(100)).map_err(|e| e.to_string())?;
    // the literal weight (-1)^# s(pi) sums to -d(n); see the FFW sign note in the catalog
    let enumerated = (1..=100u32).all(|n| -ffw(n, &Rational::one()) == int(d_divisors(n) as i64));
    check(
        series == lambert && lambert_is_d && oracle == series.truncate(100) && enumerated,
        format!(
            "series = lambert to q^1000: {}, lambert = d(n): {lambert_is_d}, -FFW(n) = d(n) for n <= 100: {enumerated}",
            series == lambert
        ),
    )
}

fn crank_identity() -> Outcome {
    let series = build_side("agl-crank", 1, &Bindings::new(), &BuildCtx::new(30)).map_err(|e| e.to_string())?;
    let bad: Vec<u32> = (2..=30u32).filter(|&n| *series.coeff(n as usize) != int(crank_moment(n) as i64)).collect();
    check(bad.is_empty(), format!("mismatched n: {bad:?}"))
}

fn spt_three_ways() -> Outcome {
    let ctx = BuildCtx::new(40);
    let products = build_side("spt-rep", 1, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let derivative = build_side("spt-rep", 0, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let enumerated = (1..=40u32).all(|n| *products.coeff(n as usize) == int(spt(n) as i64));
    check(
        products == derivative && enumerated,
        format!("products = derivative: {}, = spt(n): {enumerated}", products == derivative),
    )
}

fn passes(id: &str, bindings: &Bindings, order: usize) -> Result<bool, String> {
    let r = verify(id, bindings, &BuildCtx::new(order)).map_err(|e| e.to_string())?;
    Ok(r.status == Status::Pass)
}

fn sigma_and_mock() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=8 {
        if !passes("sigma-finite", &Bindings::new().with("N", ParamValue::Int(n)), 60)? {
            failures.push(format!("sigma-finite N={n}"));
        }
    }
    for id in ["sigma-new-rep", "mock-phi", "mock-psi"] {
        if !passes(id, &Bindings::new(), 200)? {
            failures.push(id.to_string());
        }
    }
    check(failures.is_empty(), format!("failing: {failures:?}"))
}

fn sum_over(class: PartitionClass, n: u32, weight: &str, c: Option<&Rational>) -> Result<Rational, String> {
    let w = WeightExpr::parse(weight).map_err(|e| e.to_string())?;
    weighted_sum(ClassSpec::new(class, n), &w, c).map_err(|e| e.to_string())
}

fn combinatorial() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let first_bad = (1..=40u32).find(|&n| {
        let lhs = sum_over(PartitionClass::Distinct, n, "(-1)^num_parts - (-1)^rank", None);
        let rhs = sum_over(PartitionClass::SmallestRepeats, n, "2*(-1)^num_parts", None);
        lhs.is_err() || lhs != rhs
    });
    ok &= first_bad.is_none();
    notes.push(format!("rank identity n<=40: {}", first_bad.map_or("ok".into(), |n| format!("fails at n={n}"))));

    let lpt_ok = (1..=60u32).all(|n| lpt(n) == t_sum(n));
    let lodd_ok = (1..=60u32).all(|n| l_odd(n) == s_odd(n));
    ok &= lpt_ok && lodd_ok;
    notes.push(format!("lpt=t {lpt_ok}, l_o=s {lodd_ok} (n<=60)"));

    let first_bad = (1..=40u32).find(|&n| {
        let ranks = sum_over(PartitionClass::Distinct, n, "(-1)^rank", None).unwrap_or_default();
        let lhs = ranks - int(d_distinct(n) as i64);
        let conv: Rational = (0..n).map(|k| int(d_distinct(k) as i64) * sigma_prime(n - k)).sum();
        let b = sum_over(PartitionClass::SmallestRepeats, n, "1", None).unwrap_or_default();
        lhs != (conv - b) * int(2)
    });
    ok &= first_bad.is_none();
    notes.push(format!("sigma' identity n<=40: {}", first_bad.map_or("ok".into(), |n| format!("fails at n={n}"))));

    // as printed: sum_k c^k sum_{D_k(n)} (-1)^(#+1) = sum_{B(n)} (-c)^(#s-1)
    for c in [int(-1), rat(1, 2), int(2)] {
        let first_bad = (1..=30u32).find(|&n| {
            let lhs: Rational = (0..=n)
                .map(|k| {
                    let inner = sum_over(PartitionClass::DistinctAbove(k), n, "(-1)^(num_parts+1)", None).unwrap_or_default();
                    qtails::rational::pow(&c, k as u64) * inner
                })
                .sum();
            let rhs = sum_over(PartitionClass::SmallestRepeats, n, "(-c)^(smallest_mult-1)", Some(&c));
            rhs.map_or(true, |r| r != lhs)
        });
        ok &= first_bad.is_none();
        notes.push(format!(
            "weighted AGL c={c} n<=30: {}",
            first_bad.map_or("ok".into(), |n| format!("fails at n={n}"))
        ));
    }
    check(ok, notes.join("; "))
}

fn monomial_grid() -> Vec<Monomial> {
    ["q", "q^2", "-q", "1/2*q"].iter().map(|s| parse_monomial(s).unwrap()).collect()
}

fn engine_grid() -> Outcome {
    const ORDER: usize = 30;
    let grid = monomial_grid();
    let mut runs = 0;
    let mut failures = Vec::new();
    for g in 0..4 {
        let choice = g_choice(g);
        for a in &grid {
            for t in &grid {
                for n in [1, 2, 3, 5, 8] {
                    runs += 1;
                    match theorem1_engine(&choice, a, t, n, ORDER, SumGuard::default()) {
                        Ok((lhs, rhs)) if lhs == rhs => {}
                        _ => failures.push(format!("g={g} a={a} t={t} N={n}")),
                    }
                }
            }
        }
    }
    // N = 30 is past the truncation, so the finite form equals the limit form
    let mut limit_runs = 0;
    for g in 0..4 {
        let choice = g_choice(g);
        for a in &grid {
            for t in &grid {
                limit_runs += 1;
                let b = Bindings::new()
                    .with("g", ParamValue::Int(g as i64))
                    .with("a", ParamValue::Mono(a.clone()))
                    .with("t", ParamValue::Mono(t.clone()));
                let limit = build_side("andrews-freitas-gen", 0, &b, &BuildCtx::new(20));
                let finite = engine_lhs(&choice, a, t, 30, 20, SumGuard::default());
                match (limit, finite) {
                    (Ok(l), Ok(f)) if l == f => {}
                    _ => failures.push(format!("limit g={g} a={a} t={t}")),
                }
            }
        }
    }
    check(failures.is_empty(), format!("{runs} grid runs, {limit_runs} large-N runs, failing: {failures:?}"))
}

fn zagier_1200() -> Outcome {
    let ctx = BuildCtx::new(1200);
    let r = verify("zagier-eta24", &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let lhs = build_side("zagier-eta24", 0, &Bindings::new(), &ctx).map_err(|e| e.to_string())?;
    let active = lhs.coeffs().iter().filter(|c| !c.is_zero()).count();
    check(r.status == Status::Pass, format!("status {}, {active} nonzero coefficients", r.status))
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();
    for (name, suite) in common::SUITES {
        if let Err(e) = suite() {
            failures.push(format!("{name}: {e}"));
        }
    }
    check(failures.is_empty(), format!("{} suites, failing: {failures:?}", common::SUITES.len()))
}

fn anchors() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md");
    let Ok(text) = std::fs::read_to_string(path) else {
        return Ok("paper.md not present, skipped".to_string());
    };
    let missing: Vec<&str> = catalog::catalog().iter().filter(|d| !text.contains(d.anchor.quote)).map(|d| d.id).collect();
    check(missing.is_empty(), format!("{} entries, missing: {missing:?}", catalog::catalog().len()))
}
