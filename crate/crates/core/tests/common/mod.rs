//! Seeded property suites shared by `properties` and `acceptance`.
//!
//! Each suite runs a fixed-seed proptest runner and returns the first
//! counterexample as a string.

#![allow(dead_code)]

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use qtails::partition::{
    d_divisors, enumerate, ffw, l_odd, lpt, s_odd, t_sum, weighted_sum, ClassSpec, PartitionClass, PartitionStats,
    WeightExpr,
};
use qtails::qseries::{gaussian_binomial, poch, poch_inf, rising_power_product, GaussianTable, Monomial};
use qtails::rational::{int, pow, rat, Rational};
use qtails::series::Series;

pub const CASES: u32 = 1000;

pub fn config(seed: u64) -> Config {
    Config { cases: CASES, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn run<S: Strategy>(seed: u64, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    TestRunner::new(config(seed)).run(&strategy, test).map_err(|e| e.to_string())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn series(max_order: usize) -> impl Strategy<Value = Series> {
    (0..=max_order).prop_flat_map(|order| {
        prop::collection::vec(small_rational(), order + 1).prop_map(move |c| Series::make(order, c).unwrap())
    })
}

/// `r q^m` with `m >= min_exp`.
pub fn monomial(min_exp: usize) -> impl Strategy<Value = Monomial> {
    (nonzero_rational(), min_exp..=3).prop_map(|(r, m)| Monomial::new(r, m))
}

/// `x^j` as a series.
fn mono_pow(x: &Monomial, j: usize, order: usize) -> Series {
    x.pow(j).to_series(order)
}

pub fn ring_laws() -> Result<(), String> {
    run(0x5eed_0001, (series(10), series(10), series(10), small_rational()), |(a, b, c, r)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).order(), a.order().min(b.order()));
        prop_assert_eq!(&(&a - &b) + &b, a.truncate(a.order().min(b.order())));
        prop_assert_eq!((&a + &b).scale(&r), &a.scale(&r) + &b.scale(&r));
        if a.coeff(0).is_zero() {
            prop_assert!(a.invert().is_err());
        } else {
            prop_assert_eq!(&a * &a.invert().unwrap(), Series::one(a.order()));
        }
        Ok(())
    })
}

/// `(x)_N = sum_j [N,j] (-1)^j x^j q^(j(j-1)/2)`.
pub fn finite_q_binomial() -> Result<(), String> {
    const ORDER: usize = 40;
    run(0x5eed_0002, (monomial(0), 0usize..=8), |(x, n)| {
        let lhs = poch(&x, 1, n, ORDER);
        let mut rhs = Series::zero(ORDER);
        for j in 0..=n {
            let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            let term = &gaussian_binomial(n, j, ORDER) * &mono_pow(&x, j, ORDER);
            rhs = &rhs + &term.mul_monomial(&sign, j * j.saturating_sub(1) / 2);
        }
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// `1/(x)_N = sum_{j>=0} [N+j-1, j] x^j`.
pub fn reciprocal_q_binomial() -> Result<(), String> {
    const ORDER: usize = 30;
    run(0x5eed_0003, (monomial(1), 1usize..=8), |(x, n)| {
        let lhs = poch(&x, 1, n, ORDER).invert().unwrap();
        let mut table = GaussianTable::new(ORDER);
        let mut rhs = Series::zero(ORDER);
        for j in 0..=ORDER / x.exp {
            rhs = &rhs + &(table.get(n + j - 1, j) * &mono_pow(&x, j, ORDER));
        }
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// q-binomial theorem `sum (alpha)_n/(q)_n z^n = (alpha z)_inf/(z)_inf`.
pub fn q_binomial_theorem() -> Result<(), String> {
    const ORDER: usize = 30;
    let alpha = prop_oneof![Just(Monomial::zero()), monomial(0)];
    run(0x5eed_0004, (alpha, monomial(1)), |(alpha, z)| {
        let mut lhs = Series::zero(ORDER);
        for n in 0..=ORDER / z.exp {
            let term = poch(&alpha, 1, n, ORDER).div_poch(&Monomial::q(), 1, n).unwrap();
            lhs = &lhs + &(&term * &mono_pow(&z, n, ORDER));
        }
        let rhs = poch_inf(&alpha.mul(&z), 1, ORDER).div_poch_inf(&z, 1).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// `(x q^n)_N (x)_n = (x)_N (x q^N)_n`.
pub fn shifted_pochhammer() -> Result<(), String> {
    const ORDER: usize = 40;
    run(0x5eed_0005, (monomial(0), 0usize..=6, 0usize..=6), |(x, big, n)| {
        let lhs = &poch(&x.shifted(n), 1, big, ORDER) * &poch(&x, 1, n, ORDER);
        let rhs = &poch(&x, 1, big, ORDER) * &poch(&x.shifted(big), 1, n, ORDER);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// `prod_{j<k} (q^N - q^j) = (-1)^k q^(k(k-1)/2) (q^(N-k+1))_k`, and 0 for `k > N`.
pub fn rising_power_fact() -> Result<(), String> {
    const ORDER: usize = 80;
    run(0x5eed_0006, (1usize..=8, 0usize..=9), |(big, k)| {
        let lhs = rising_power_product(big, k, ORDER);
        if k > big {
            prop_assert!(lhs.is_zero());
            return Ok(());
        }
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        let rhs = poch(&Monomial::new(Rational::one(), big - k + 1), 1, k, ORDER).mul_monomial(&sign, k * k.saturating_sub(1) / 2);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// `sum_n f_n g(q^n) x^n = sum_n g_n f(q^n x)` at `x = q`, `f`, `g` of degree at most 6.
pub fn swap_lemma() -> Result<(), String> {
    const ORDER: usize = 40;
    let poly = || prop::collection::vec(small_rational(), 1..=7);
    run(0x5eed_0007, (poly(), poly()), |(f, g): (Vec<Rational>, Vec<Rational>)| {
        let as_series = |c: &[Rational]| Series::make(ORDER, c.to_vec()).unwrap();
        let (fs, gs) = (as_series(&f), as_series(&g));
        // g(q^n) and f(q^(n+1)); g(1) is the plain coefficient sum
        let g_at = |n: usize| {
            if n == 0 {
                Series::constant(g.iter().sum(), ORDER)
            } else {
                gs.eval_at_monomial(&Rational::one(), n, ORDER).unwrap()
            }
        };
        let mut lhs = Series::zero(ORDER);
        for (n, fn_) in f.iter().enumerate() {
            lhs = &lhs + &g_at(n).mul_monomial(fn_, n);
        }
        let mut rhs = Series::zero(ORDER);
        for (n, gn) in g.iter().enumerate() {
            rhs = &rhs + &fs.eval_at_monomial(&Rational::one(), n + 1, ORDER).unwrap().scale(gn);
        }
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn gaussian_binomials() -> Result<(), String> {
    const ORDER: usize = 40;
    run(0x5eed_0008, (0usize..=12, 0usize..=13), |(big, k)| {
        let g = gaussian_binomial(big, k, ORDER);
        if k > big {
            prop_assert!(g.is_zero());
            return Ok(());
        }
        let degree = k * (big - k);
        prop_assert!(g.coeffs().iter().all(|c| c.is_integer() && !c.is_negative()));
        prop_assert_eq!(g.valuation(), Some(0));
        prop_assert!(g.coeffs()[degree + 1..].iter().all(Zero::is_zero));
        prop_assert!(!g.coeff(degree).is_zero());
        for i in 0..=degree {
            prop_assert_eq!(g.coeff(i), g.coeff(degree - i));
        }
        if k >= 1 && k < big {
            let pascal = &gaussian_binomial(big - 1, k - 1, ORDER) + &gaussian_binomial(big - 1, k, ORDER).shift(k);
            prop_assert_eq!(&g, &pascal);
        }
        let q = Monomial::q();
        let quotient = poch(&q, 1, big, ORDER).div_poch(&q, 1, k).unwrap().div_poch(&q, 1, big - k).unwrap();
        prop_assert_eq!(g, quotient);
        Ok(())
    })
}

/// Coefficients of `1/(q)_inf`, `(-q)_inf` and of the smallest-part-repeats
/// product, by power series arithmetic rather than enumeration.
fn class_count_series(order: usize) -> (Series, Series, Series) {
    let q = Monomial::q();
    let all = Series::one(order).div_poch_inf(&q, 1).unwrap();
    let distinct = poch_inf(&q.neg(), 1, order);
    let mut b = Series::zero(order);
    for m in 1..=order {
        let term = poch_inf(&Monomial::new(-Rational::one(), m + 1), 1, order).shift(m).div_binomial(&Rational::one(), m);
        b = &b + &term.unwrap();
    }
    (all, distinct, b)
}

pub fn partition_invariants() -> Result<(), String> {
    const MAX_N: u32 = 22;
    let (all, distinct, b) = class_count_series(MAX_N as usize);
    run(0x5eed_0009, 0u32..=MAX_N, |n| {
        let parts: Vec<_> = enumerate(ClassSpec::new(PartitionClass::All, n)).collect();
        prop_assert_eq!(int(parts.len() as i64), all.coeff(n as usize).clone());
        let unique: HashSet<_> = parts.iter().collect();
        prop_assert_eq!(unique.len(), parts.len());
        prop_assert!(parts.windows(2).all(|w| w[0].parts() > w[1].parts()));
        prop_assert!(parts.iter().all(|p| p.size() == n && p.parts().windows(2).all(|w| w[0] >= w[1])));
        let count = |class: PartitionClass| enumerate(ClassSpec::new(class, n)).count() as i64;
        prop_assert_eq!(int(count(PartitionClass::Distinct)), distinct.coeff(n as usize).clone());
        if n >= 1 {
            prop_assert_eq!(int(count(PartitionClass::SmallestRepeats)), b.coeff(n as usize).clone());
            // conjugation swaps largest part and number of parts, so ranks are symmetric
            let rank_sum: i64 = parts.iter().map(|p| p.stats().rank).sum();
            prop_assert_eq!(rank_sum, 0);
            prop_assert_eq!(-ffw(n, &Rational::one()), int(d_divisors(n) as i64));
            prop_assert_eq!(lpt(n), t_sum(n));
            prop_assert_eq!(l_odd(n), s_odd(n));
        }
        if n >= 2 {
            let mut cranks: Vec<i64> = parts.iter().map(|p| p.crank()).collect();
            let mut mirrored: Vec<i64> = cranks.iter().map(|c| -c).collect();
            cranks.sort_unstable();
            mirrored.sort_unstable();
            prop_assert_eq!(cranks, mirrored);
        }
        Ok(())
    })
}

const FIELDS: [&str; 9] =
    ["size", "smallest", "largest", "num_parts", "rank", "smallest_mult", "largest_mult", "num_distinct", "crank"];

fn field(s: &PartitionStats, name: &str) -> i64 {
    match name {
        "size" => s.size as i64,
        "smallest" => s.smallest as i64,
        "largest" => s.largest as i64,
        "num_parts" => s.num_parts as i64,
        "rank" => s.rank,
        "smallest_mult" => s.smallest_mult as i64,
        "largest_mult" => s.largest_mult as i64,
        "num_distinct" => s.num_distinct as i64,
        "crank" => s.crank,
        _ => unreachable!("unknown field {name}"),
    }
}

/// `k * (base)^(e1 - shift) * e2 + e3`, evaluated through the parser and directly.
pub fn weight_expressions() -> Result<(), String> {
    let classes = prop_oneof![
        Just(PartitionClass::All),
        Just(PartitionClass::Distinct),
        Just(PartitionClass::SmallestRepeats),
        Just(PartitionClass::LargestRepeats),
        (0u32..3).prop_map(PartitionClass::DistinctAbove),
    ];
    let strategy = (
        classes,
        1u32..=12,
        -3i64..=3,
        prop::bool::ANY,
        0usize..9,
        0usize..9,
        0usize..9,
        0i64..=1,
        nonzero_rational(),
    );
    run(0x5eed_000a, strategy, |(class, n, k, use_c, e1, e2, e3, shift, c)| {
        let base = if use_c { "(-c)" } else { "(-1)" };
        let source = format!("{k}*{base}^({}-{shift})*{} + {}", FIELDS[e1], FIELDS[e2], FIELDS[e3]);
        let w = WeightExpr::parse(&source).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let base_value = if use_c { -c.clone() } else { -Rational::one() };
        let mut expected = Rational::zero();
        let mut undefined = false;
        for p in enumerate(ClassSpec::new(class, n)) {
            let s = p.stats();
            let e = field(&s, FIELDS[e1]) - shift;
            let power = if e >= 0 {
                pow(&base_value, e as u64)
            } else if base_value.is_zero() {
                undefined = true;
                break;
            } else {
                pow(&base_value.recip(), (-e) as u64)
            };
            expected += int(k) * power * int(field(&s, FIELDS[e2])) + int(field(&s, FIELDS[e3]));
        }
        let got = weighted_sum(ClassSpec::new(class, n), &w, Some(&c));
        match got {
            Ok(v) => {
                prop_assert!(!undefined);
                prop_assert_eq!(v, expected, "weight {}", source);
            }
            Err(_) => prop_assert!(undefined),
        }
        Ok(())
    })
}

pub type Suite = fn() -> Result<(), String>;

pub const SUITES: [(&str, Suite); 10] = [
    ("ring laws", ring_laws),
    ("finite q-binomial expansion", finite_q_binomial),
    ("reciprocal q-binomial expansion", reciprocal_q_binomial),
    ("q-binomial theorem", q_binomial_theorem),
    ("shifted Pochhammer products", shifted_pochhammer),
    ("rising power product", rising_power_fact),
    ("swap lemma", swap_lemma),
    ("Gaussian binomials", gaussian_binomials),
    ("partition invariants", partition_invariants),
    ("weight expressions", weight_expressions),
];
