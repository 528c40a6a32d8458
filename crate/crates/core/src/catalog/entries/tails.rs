//! Classical sums of tails and their one-parameter companions.

use super::*;
use crate::qseries::{gaussian_binomial, lambert_sum, poch, sum_formal, LambertFlavor};
use crate::rational::rat;

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    vec![
        entry(
            "ramanujan-lost-notebook",
            "sum of tails of (-q)_inf",
            "beautiful sum-of-tails identity",
            vec![],
            vec![side("tails", ramanujan_lhs), side("divisor form", ramanujan_rhs)],
        ),
        noted(
            entry(
                "zagier-eta24",
                "sum of tails of (q^24;q^24)_inf",
                "derived the following identity of a similar type",
                vec![],
                vec![side("tails", zagier_lhs), side("divisor form plus theta", zagier_rhs)],
            ),
            "normalized to integer powers: both sides carry a factor q and the theta part is sum n chi(n) q^(n^2)/2",
        ),
        entry(
            "dems-finite",
            "alternating finite tails",
            "The motivation for this project stemmed",
            vec![n_slot()],
            vec![side("tails", dems_finite_lhs), side("product", dems_finite_rhs)],
        ),
        entry(
            "dems-limit",
            "alternating tails of (q)_inf",
            "we get the well-known identity",
            vec![],
            vec![side("tails", dems_limit_lhs), side("product", dems_limit_rhs)],
        ),
        entry(
            "yan-fu",
            "finite Gaussian sum",
            "Yan and Fu derived the following identity",
            vec![slot_not_one("c", SlotKind::Either), n_slot()],
            vec![side("gaussian sum", gaussian_c_sum), side("product", c_product)],
        ),
        entry(
            "half-c-finite",
            "weighted finite tails",
            "The special case of one of our Theorems",
            vec![slot("c", SlotKind::Either), n_slot()],
            vec![side("tails", c_finite_tails), side("gaussian sum", gaussian_c_sum)],
        ),
        entry(
            "c-chain-finite",
            "weighted finite tails, three forms",
            "Actually, the following is true",
            vec![slot_not_one("c", SlotKind::Either), n_slot()],
            vec![side("tails", c_finite_tails), side("gaussian sum", gaussian_c_sum), side("product", c_product)],
        ),
        entry(
            "agl-c-chain",
            "weighted tails of (q)_inf, three forms",
            "which they proved  combinatorially",
            vec![slot_not_one("c", SlotKind::Either)],
            vec![side("tails", agl_chain_tails), side("series", agl_chain_series), side("product", agl_chain_product)],
        ),
        entry(
            "new-zagier",
            "weighted tails of (q)_inf",
            "The special case $c=1$ of the above identity",
            vec![slot("c", SlotKind::Either)],
            vec![side("tails", new_zagier_lhs), side("partial geometric sums", new_zagier_rhs)],
        ),
    ]
}

fn ramanujan_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let full = poch_inf(&m(-1, 1), 1, cx.order);
    let mut partial = cx.one();
    Ok(cx.sum(0, |n| {
        let term = &full - &partial;
        partial.mul_binomial_in_place(&int(-1), n + 1);
        Ok(term)
    })?)
}

fn ramanujan_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let o = cx.order;
    let lambert = &lambert_sum(LambertFlavor::Minus, o) - &Series::constant(rat(1, 2), o);
    let product = &poch_inf(&m(-1, 1), 1, o) * &lambert;
    let mut inv = cx.one();
    let theta = cx.sum(0, |n| {
        let term = inv.shift(tri(n));
        inv.div_binomial_in_place(&int(-1), n + 1)?;
        Ok(term)
    })?;
    Ok(&product + &theta.scale(&rat(1, 2)))
}

/// Order in `Q = q^24` that determines a `q`-series of order `order` after `Q -> q^24`.
fn zagier_q_order(order: usize) -> usize {
    order / 24
}

/// `q * F(q^24)`.
fn zagier_lift(f: &Series, order: usize) -> Built {
    Ok(f.eval_at_monomial(&Rational::one(), 24, order)?.shift(1))
}

fn zagier_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let qo = zagier_q_order(cx.order);
    let full = poch_inf(&Monomial::q(), 1, qo);
    let mut partial = Series::one(qo);
    let tails = sum_formal(qo, cx.guard, 0, |n| {
        let term = &full - &partial;
        partial.mul_binomial_in_place(&Rational::one(), n + 1);
        Ok(term)
    })?;
    zagier_lift(&tails, cx.order)
}

/// `chi(n)`: 1 for `n = +-1 mod 12`, -1 for `n = +-5 mod 12`, else 0.
fn chi12(n: usize) -> i64 {
    match n % 12 {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

fn zagier_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let qo = zagier_q_order(cx.order);
    let d = &lambert_sum(LambertFlavor::Minus, qo) - &Series::constant(rat(1, 2), qo);
    let product = zagier_lift(&(&poch_inf(&Monomial::q(), 1, qo) * &d), cx.order)?;
    let mut theta = cx.zero();
    for n in (1..).take_while(|n| n * n <= cx.order) {
        theta.add_assign_ref(&Series::monomial(rat((n as i64) * chi12(n), 2), n * n, cx.order));
    }
    Ok(&product + &theta)
}

fn dems_finite_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let one = cx.one();
    Ok(cx.sum(1, |n| Ok((&poch(&m(1, n), 1, n_fin, cx.order) - &one).scale(&sign(n - 1))))?)
}

fn dems_finite_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let ratio = poch(&Monomial::q(), 1, n_fin, cx.order).div_poch(&m(-1, 1), 1, n_fin)?;
    Ok((&ratio - &cx.one()).scale(&rat(1, 2)))
}

fn dems_limit_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let one = cx.one();
    Ok(cx.sum(1, |n| Ok((&poch_inf(&m(1, n), 1, cx.order) - &one).scale(&sign(n - 1))))?)
}

fn dems_limit_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let ratio = euler(cx).div_poch_inf(&m(-1, 1), 1)?;
    Ok((&ratio - &cx.one()).scale(&rat(1, 2)))
}

/// `sum_{n=1}^N [N,n] (-1)^n q^(n(n+1)/2) / (1 - c q^n)`.
fn gaussian_c_sum(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let n_fin = b.int("N")?;
    Ok(cx.finite_sum(1..=n_fin, |n| {
        let top = gaussian_binomial(n_fin, n, cx.order).mul_monomial(&sign(n), tri(n));
        over_one_minus(&top, &c.shifted(n))
    })?)
}

/// `((q)_N / (cq)_N - 1) / (1 - c)`.
fn c_product(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let n_fin = b.int("N")?;
    let ratio = poch(&Monomial::q(), 1, n_fin, cx.order).div_poch(&c.shifted(1), 1, n_fin)?;
    Ok(over_one_minus(&(&ratio - &cx.one()), &c)?)
}

/// `sum_{n>=1} c^(n-1) [(q^n)_N - 1]`.
fn c_finite_tails(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let n_fin = b.int("N")?;
    let one = cx.one();
    Ok(cx.sum(1, |n| Ok(times(&(&poch(&m(1, n), 1, n_fin, cx.order) - &one), &c.pow(n - 1))))?)
}

fn agl_chain_tails(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let one = cx.one();
    Ok(cx.sum(1, |n| Ok(times(&(&poch_inf(&m(1, n), 1, cx.order) - &one), &c.pow(n - 1))))?)
}

/// `sum_{n>=1} (-1)^n q^(n(n+1)/2) / ((q)_n (1 - c q^n))`.
fn agl_chain_series(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        over_one_minus(&inv.mul_monomial(&sign(n), tri(n)), &c.shifted(n))
    })?)
}

fn agl_chain_product(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let ratio = euler(cx).div_poch_inf(&c.shifted(1), 1)?;
    Ok(over_one_minus(&(&ratio - &cx.one()), &c)?)
}

fn new_zagier_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let full = euler(cx);
    let mut partial = cx.one();
    Ok(cx.sum(0, |n| {
        let term = times(&(&partial - &full), &c.pow(n));
        partial.mul_binomial_in_place(&Rational::one(), n + 1);
        Ok(term)
    })?)
}

/// `sum_{n>=1} (1 + c + ... + c^(n-1)) (q)_(n-1) q^n`.
fn new_zagier_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let mut partial = cx.one();
    Ok(cx.sum(1, |n| {
        let term = &geometric_partial(&c, n, cx.order) * &partial.shift(n);
        partial.mul_binomial_in_place(&Rational::one(), n);
        Ok(term)
    })?)
}
