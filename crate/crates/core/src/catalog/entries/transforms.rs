//! Instances of the general finite transformation: the engine itself,
//! Heine-type transformations, and the corollaries obtained from special `g`.

use num_traits::Zero;

use super::*;
use crate::engine::{engine_lhs, engine_rhs, GChoice, GSequence};
use crate::qseries::{gaussian_binomial, poch, rising_power_product, GaussianTable};
use crate::rational::{binomial, rat};

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    let c = || slot("c", SlotKind::Either);
    let c_not_one = || slot_not_one("c", SlotKind::Either);
    let t = || slot("t", SlotKind::Monomial);
    vec![
        entry(
            "thm-1-1-engine",
            "general finite transformation",
            "Let $N$ be positive integer",
            vec![g_slot(), slot_not_one("a", SlotKind::Either), t(), positive_n_slot()],
            vec![side("tails", engine_tails), side("gaussian form", engine_gaussian)],
        ),
        entry(
            "andrews-freitas-gen",
            "tails of (t)_n/(a)_n",
            "This theorem also generalizes the result",
            vec![g_slot(), slot_not_one("a", SlotKind::Either), t()],
            vec![side("tails", af_gen_lhs), side("product form", af_gen_rhs)],
        ),
        entry(
            "finite-heine",
            "finite Heine transformation",
            "We now give a special case of Theorem",
            vec![
                slot("a", SlotKind::Either),
                slot("b", SlotKind::Monomial),
                c_not_one(),
                t(),
                n_slot(),
            ],
            vec![side("terminating side", finite_heine_lhs), side("transformed side", finite_heine_rhs)],
        ),
        entry(
            "heine",
            "Heine transformation",
            "Heine's $_2\\phi_1$ transformation",
            vec![slot("a", SlotKind::Either), slot("b", SlotKind::Monomial), c_not_one(), t()],
            vec![side("2phi1", heine_lhs), side("transformed", heine_rhs)],
        ),
        entry(
            "af-tails",
            "tails of (t)_inf",
            "a finite analogue of an identity",
            vec![t()],
            vec![side("tails", af_tails_lhs), side("series", af_tails_rhs)],
        ),
        entry(
            "thm-1-8-finite",
            "finite tails with extra parameter",
            "along with an extra parameter",
            vec![c(), t(), n_slot()],
            vec![side("tails", thm18_lhs), side("series", thm18_rhs)],
        ),
        entry(
            "one-param-zagier-a",
            "weighted tails of (t)_inf",
            "one parameter generalization of",
            vec![c(), t()],
            vec![side("tails", weighted_t_tails), side("series", opz_a_rhs)],
        ),
        noted(
            entry(
                "zagier-finite-induction",
                "finite weighted tails by induction",
                "it is easy to see, using induction",
                vec![c_not_one(), slot("t", SlotKind::Either), positive_n_slot()],
                vec![side("tails", zfi_lhs), side("partial geometric sums", zfi_mid), side("closed geometric sums", zfi_rhs)],
            ),
            "the middle side uses 1 + c + ... + c^(n-1), which is what the right side expands to",
        ),
        entry(
            "one-param-zagier-b",
            "weighted tails of (t)_inf, second form",
            "Now take the limit",
            vec![c_not_one(), t()],
            vec![side("tails", weighted_t_tails), side("series", opz_b_rhs)],
        ),
        entry(
            "remark1-bridge",
            "bridge between the two weighted forms",
            "Interesting special cases of",
            vec![c_not_one(), t()],
            vec![side("series", opz_a_series), side("tail products", bridge_rhs)],
        ),
        entry(
            "thm-1-16",
            "finite tails with binomial weights",
            "We answer this question in the affirmative",
            vec![slot("a", SlotKind::Either), c(), k_slot(), n_slot()],
            vec![side("tails", thm116_lhs), side("series", thm116_rhs)],
        ),
        entry(
            "crippa",
            "higher powers of 1 - q^n",
            "gave the following expression for",
            vec![k_slot()],
            vec![side("series", crippa_lhs), side("product form", crippa_rhs)],
        ),
        noted(
            entry(
                "crippa-limit",
                "tails with binomial weights",
                "Letting $N \\to \\infty$ with $a = q$",
                vec![c(), k_slot()],
                vec![side("tails", crippa_limit_lhs), side("series", crippa_limit_rhs)],
            ),
            "the tail sum starts at n = 0; the n = 0 bracket 1 - (q)_inf is needed for equality",
        ),
        entry(
            "crippa-remark",
            "tails of 1/(q)_n with binomial weights",
            "simple looking sum of tail identity",
            vec![k_slot()],
            vec![side("tails", crippa_remark_lhs), side("series", crippa_remark_rhs)],
        ),
        entry(
            "af-finite-iv",
            "finite analogue, weights (q)_inf/(q)_n",
            "finite analogues of some of the corollaries",
            vec![positive_n_slot()],
            vec![side("tails", af_iv_lhs), side("gaussian sum", af_iv_rhs)],
        ),
        entry(
            "af-finite-vii",
            "finite analogue, squared ratios",
            "finite analogues of some of the corollaries",
            vec![positive_n_slot()],
            vec![side("tails", af_vii_lhs), side("gaussian sum", af_vii_rhs)],
        ),
        entry(
            "af-finite-ix-a",
            "finite analogue with a = 0",
            "finite analogues of some of the corollaries",
            vec![positive_n_slot()],
            vec![side("tails", af_ix_a_lhs), side("gaussian sum", af_ix_a_rhs)],
        ),
        noted(
            entry(
                "af-finite-ix-b",
                "finite analogue with t = 0",
                "finite analogues of some of the corollaries",
                vec![positive_n_slot()],
                vec![side("tails", af_ix_b_lhs), side("gaussian sum", af_ix_b_rhs)],
            ),
            "the right side carries [N, n]; with [N+n-1, n] it already fails at q^3 for N = 1",
        ),
        entry(
            "af-limit-identity",
            "tails of 1/(q)_n against an alternating weight",
            "leads to a beautiful identity",
            vec![],
            vec![side("tails", af_limit_lhs), side("series", af_limit_rhs)],
        ),
    ]
}

fn positive_n_slot() -> ParamSlot {
    slot("N", SlotKind::Integer { defaults: N_VALUES, min: 1, max: None })
}

/// The four named `g` choices exposed through the `g` slot.
pub fn g_choice(index: usize) -> GChoice {
    match index {
        0 => GChoice::Geometric(Monomial::constant(rat(1, 2))),
        1 => GChoice::EtaRatio { b: Monomial::constant(rat(1, 3)), c: Monomial::constant(rat(-1, 2)) },
        2 => GChoice::QExponentialAlt,
        _ => GChoice::BinomialNegative { k: 2, c: Monomial::constant(int(-1)) },
    }
}

fn engine_tails(cx: &BuildCtx, b: &Bindings) -> Built {
    let g = g_choice(b.int("g")?);
    Ok(engine_lhs(&g, &b.mono("a")?, &b.mono("t")?, b.int("N")?, cx.order, cx.guard)?)
}

fn engine_gaussian(cx: &BuildCtx, b: &Bindings) -> Built {
    let g = g_choice(b.int("g")?);
    Ok(engine_rhs(&g, &b.mono("a")?, &b.mono("t")?, b.int("N")?, cx.order, cx.guard)?)
}

/// `sum_{n>=0} g_n [(t)_n/(a)_n - (t)_inf/(a)_inf]`.
fn af_gen_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let g = g_choice(b.int("g")?);
    let (a, t) = (b.mono("a")?, b.mono("t")?);
    let limit = poch_inf(&t, 1, cx.order).div_poch_inf(&a, 1)?;
    let mut seq = GSequence::new(&g, cx.order)?;
    let mut ratio = cx.one();
    Ok(cx.sum(0, |n| {
        let term = &seq.next_coeff()? * &(&ratio - &limit);
        ratio.mul_binomial_in_place(&t.coeff, t.exp + n);
        ratio.div_binomial_in_place(&a.coeff, a.exp + n)?;
        Ok(term)
    })?)
}

/// `(t)_inf/(a)_inf sum_{n>=1} (t - a)(t - aq)...(t - aq^(n-1)) g(q^n) / (q)_n`.
fn af_gen_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let g = g_choice(b.int("g")?);
    let (a, t) = (b.mono("a")?, b.mono("t")?);
    let seq = GSequence::new(&g, cx.order)?;
    let mut prod = cx.one();
    let sum = cx.sum(1, |n| {
        prod = prod.mul_sparse(&[(t.exp, t.coeff.clone()), (a.exp + n - 1, -a.coeff.clone())]);
        prod.div_binomial_in_place(&Rational::one(), n)?;
        Ok(&prod * &seq.at_q_power(n)?)
    })?;
    Ok(sum.mul_poch_inf(&t, 1).div_poch_inf(&a, 1)?)
}

fn finite_heine_lhs(cx: &BuildCtx, bd: &Bindings) -> Built {
    let (a, b, c, t) = (bd.mono("a")?, bd.mono("b")?, bd.mono("c")?, bd.mono("t")?);
    let n_fin = bd.int("N")?;
    let at = a.mul(&t);
    let mut run = cx.one();
    Ok(cx.sum(0, |n| {
        let term = run.clone();
        // (c/b)_n b^n = (b - c)(b - cq)...(b - cq^(n-1))
        run = run.mul_sparse(&[(b.exp, b.coeff.clone()), (c.exp + n, -c.coeff.clone())]);
        run.div_binomial_in_place(&Rational::one(), n + 1)?;
        run.mul_binomial_in_place(&t.coeff, t.exp + n);
        run.div_binomial_in_place(&at.coeff, at.exp + n)?;
        run.mul_binomial_in_place(&at.coeff, at.exp + n_fin + n);
        run.div_binomial_in_place(&t.coeff, t.exp + n_fin + n)?;
        Ok(term)
    })?)
}

fn finite_heine_rhs(cx: &BuildCtx, bd: &Bindings) -> Built {
    let (a, b, c, t) = (bd.mono("a")?, bd.mono("b")?, bd.mono("c")?, bd.mono("t")?);
    let n_fin = bd.int("N")?;
    let o = cx.order;
    let at = a.mul(&t);
    let front = poch(&t, 1, n_fin, o).mul_poch_inf(&c, 1).div_poch(&at, 1, n_fin)?.div_poch_inf(&b, 1)?;
    let mut gauss = GaussianTable::new(o);
    // (aq^N)^k (q^-N)_k = a^k (q^N - 1)(q^N - q)...(q^N - q^(k-1))
    let rising: Vec<Series> = (0..=n_fin).map(|k| times(&rising_power_product(n_fin, k, o), &a.pow(k))).collect();
    let mut tails = vec![cx.one()];
    let mut weight = cx.one();
    let sum = cx.sum(0, |n| {
        while tails.len() <= n {
            let j = tails.len() - 1;
            let next = tails[j].mul_binomial(&Rational::one(), n_fin + j);
            tails.push(next);
        }
        let mut inner = cx.zero();
        for k in 0..=n.min(n_fin) {
            inner.add_assign_ref(&(&(gauss.get(n, k) * &rising[k]) * &tails[n - k]));
        }
        let term = times(&(&inner * &weight), &t.pow(n));
        weight.mul_binomial_in_place(&b.coeff, b.exp + n);
        weight.div_binomial_in_place(&c.coeff, c.exp + n)?;
        weight.div_binomial_in_place(&Rational::one(), n + 1)?;
        Ok(term)
    })?;
    Ok(&front * &sum)
}

fn heine_lhs(cx: &BuildCtx, bd: &Bindings) -> Built {
    let (a, b, c, t) = (bd.mono("a")?, bd.mono("b")?, bd.mono("c")?, bd.mono("t")?);
    let mut run = cx.one();
    Ok(cx.sum(0, |n| {
        let term = times(&run, &t.pow(n));
        run.mul_binomial_in_place(&a.coeff, a.exp + n);
        run.mul_binomial_in_place(&b.coeff, b.exp + n);
        run.div_binomial_in_place(&c.coeff, c.exp + n)?;
        run.div_binomial_in_place(&Rational::one(), n + 1)?;
        Ok(term)
    })?)
}

fn heine_rhs(cx: &BuildCtx, bd: &Bindings) -> Built {
    let (a, b, c, t) = (bd.mono("a")?, bd.mono("b")?, bd.mono("c")?, bd.mono("t")?);
    let at = a.mul(&t);
    let mut run = cx.one();
    let sum = cx.sum(0, |n| {
        let term = run.clone();
        run = run.mul_sparse(&[(b.exp, b.coeff.clone()), (c.exp + n, -c.coeff.clone())]);
        run.mul_binomial_in_place(&t.coeff, t.exp + n);
        run.div_binomial_in_place(&at.coeff, at.exp + n)?;
        run.div_binomial_in_place(&Rational::one(), n + 1)?;
        Ok(term)
    })?;
    Ok(sum.mul_poch_inf(&at, 1).mul_poch_inf(&b, 1).div_poch_inf(&t, 1)?.div_poch_inf(&c, 1)?)
}

/// `sum_{n>=0} c^n [(t)_n - (t)_inf]`, with `c = 1` when unbound.
fn weighted_t_tails(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = match b.get("c") {
        Some(_) => b.mono("c")?,
        None => Monomial::constant(Rational::one()),
    };
    let t = b.mono("t")?;
    let full = poch_inf(&t, 1, cx.order);
    let mut partial = cx.one();
    Ok(cx.sum(0, |n| {
        let term = times(&(&partial - &full), &c.pow(n));
        partial.mul_binomial_in_place(&t.coeff, t.exp + n);
        Ok(term)
    })?)
}

fn af_tails_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    weighted_t_tails(cx, b)
}

/// `sum_{n>=1} t^n / ((q)_n (1 - c q^n))`, with `c = 1` when unbound.
fn opz_a_series(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = match b.get("c") {
        Some(_) => b.mono("c")?,
        None => Monomial::constant(Rational::one()),
    };
    let t = b.mono("t")?;
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        over_one_minus(&times(&inv, &t.pow(n)), &c.shifted(n))
    })?)
}

fn af_tails_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let t = b.mono("t")?;
    Ok(opz_a_series(cx, b)?.mul_poch_inf(&t, 1))
}

fn opz_a_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    af_tails_rhs(cx, b)
}

fn thm18_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (c, t) = (b.mono("c")?, b.mono("t")?);
    let n_fin = b.int("N")?;
    let one = cx.one();
    Ok(cx.sum(0, |n| {
        let ratio = one.div_poch(&t.shifted(n), 1, n_fin)?;
        Ok(times(&(&ratio - &one), &c.pow(n)))
    })?)
}

fn thm18_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (c, t) = (b.mono("c")?, b.mono("t")?);
    let n_fin = b.int("N")?;
    // (q^N)_n / (q)_n
    let mut ratio = cx.one();
    Ok(cx.sum(1, |n| {
        ratio.mul_binomial_in_place(&Rational::one(), n_fin + n - 1);
        ratio.div_binomial_in_place(&Rational::one(), n)?;
        over_one_minus(&times(&ratio, &t.pow(n)), &c.shifted(n))
    })?)
}

fn zfi_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (c, t) = (b.mono("c")?, b.mono("t")?);
    let n_fin = b.int("N")?;
    let full = poch(&t, 1, n_fin, cx.order);
    let mut partial = cx.one();
    Ok(cx.finite_sum(0..=n_fin - 1, |n| {
        let term = times(&(&partial - &full), &c.pow(n));
        partial.mul_binomial_in_place(&t.coeff, t.exp + n);
        Ok(term)
    })?)
}

fn zfi_mid(cx: &BuildCtx, b: &Bindings) -> Built {
    let (c, t) = (b.mono("c")?, b.mono("t")?);
    let n_fin = b.int("N")?;
    let mut partial = cx.one();
    let sum = cx.finite_sum(1..=n_fin, |n| {
        let term = &geometric_partial(&c, n, cx.order) * &partial.shift(n - 1);
        partial.mul_binomial_in_place(&t.coeff, t.exp + n - 1);
        Ok(term)
    })?;
    Ok(times(&sum, &t))
}

/// `t/(1-c) sum_{n=1}^{last} (1 - c^n) (t)_(n-1) q^(n-1)`.
fn closed_geometric_sum(cx: &BuildCtx, c: &Monomial, t: &Monomial, last: Option<usize>) -> Built {
    let mut partial = cx.one();
    let term_at = |n: usize| {
        let cn = c.pow(n);
        let factor = partial.shift(n - 1).mul_sparse(&[(0, Rational::one()), (cn.exp, -cn.coeff)]);
        partial.mul_binomial_in_place(&t.coeff, t.exp + n - 1);
        Ok(factor)
    };
    let sum = match last {
        Some(last) => cx.finite_sum(1..=last, term_at)?,
        None => cx.sum(1, term_at)?,
    };
    Ok(over_one_minus(&times(&sum, t), c)?)
}

fn zfi_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    closed_geometric_sum(cx, &b.mono("c")?, &b.mono("t")?, Some(b.int("N")?))
}

fn opz_b_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    closed_geometric_sum(cx, &b.mono("c")?, &b.mono("t")?, None)
}

/// `t/(1-c) sum_{n>=1} (1 - c^n) q^(n-1) / (tq^(n-1))_inf`.
fn bridge_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (c, t) = (b.mono("c")?, b.mono("t")?);
    let mut inv = cx.one().div_poch_inf(&t, 1)?;
    let sum = cx.sum(1, |n| {
        let cn = c.pow(n);
        let term = inv.shift(n - 1).mul_sparse(&[(0, Rational::one()), (cn.exp, -cn.coeff)]);
        inv.mul_binomial_in_place(&t.coeff, t.exp + n - 1);
        Ok(term)
    })?;
    Ok(over_one_minus(&times(&sum, &t), &c)?)
}

fn binom(top: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(top as u64, k as u64))
}

fn thm116_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (a, c) = (b.mono("a")?, b.mono("c")?);
    let (k, n_fin) = (b.int("k")?, b.int("N")?);
    let one = cx.one();
    Ok(cx.sum(0, |n| {
        let bracket = &poch(&a.shifted(n), 1, n_fin, cx.order) - &one;
        Ok(times(&bracket, &c.pow(n)).scale(&binom(k + n - 1, n)))
    })?)
}

/// `sum_{n=1}^N (-a)^n q^(n(n-1)/2) (q^(N-n+1))_n / ((q)_n (1 - cq^n)^k)`.
fn thm116_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (a, c) = (b.mono("a")?, b.mono("c")?);
    let (k, n_fin) = (b.int("k")?, b.int("N")?);
    let mut inv = cx.one();
    Ok(cx.finite_sum(1..=n_fin, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        let mut term = times(&poch(&m(1, n_fin - n + 1), 1, n, cx.order), &a.neg().pow(n).shifted(n * (n - 1) / 2));
        term = &term * &inv;
        for _ in 0..k {
            term.div_binomial_in_place(&c.coeff, c.exp + n)?;
        }
        Ok(term)
    })?)
}

/// `sum_{n>=1} (-1)^(n-1) q^(n(n+1)/2) / ((q)_n (1 - c q^n)^k)`.
fn alternating_power_series(cx: &BuildCtx, c: &Monomial, k: usize) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        let mut term = inv.mul_monomial(&sign(n - 1), tri(n));
        for _ in 0..k {
            term.div_binomial_in_place(&c.coeff, c.exp + n)?;
        }
        Ok(term)
    })?)
}

fn crippa_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    alternating_power_series(cx, &Monomial::constant(Rational::one()), b.int("k")?)
}

/// `sum_{n>=0} binom(k+n-1, k) q^n / (q)_n`.
fn crippa_remark_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let k = b.int("k")?;
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&Rational::one(), n)?;
        }
        let w = if k + n == 0 { Rational::zero() } else { binom(k + n - 1, k) };
        Ok(inv.mul_monomial(&w, n))
    })?)
}

fn crippa_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    Ok(&euler(cx) * &crippa_remark_rhs(cx, b)?)
}

fn crippa_limit_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.mono("c")?;
    let k = b.int("k")?;
    let one = cx.one();
    Ok(cx.sum(0, |n| {
        let bracket = &one - &poch_inf(&m(1, n + 1), 1, cx.order);
        Ok(times(&bracket, &c.pow(n)).scale(&binom(k + n - 1, n)))
    })?)
}

fn crippa_limit_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    alternating_power_series(cx, &b.mono("c")?, b.int("k")?)
}

fn crippa_remark_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let k = b.int("k")?;
    let full = cx.one().div_poch_inf(&Monomial::q(), 1)?;
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&Rational::one(), n)?;
        }
        Ok((&full - &inv).scale(&binom(k + n - 1, n)))
    })?)
}

fn af_iv_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let one = cx.one();
    // (q)_inf / (q)_n = (q^(n+1))_inf
    Ok(cx.sum(0, |n| {
        let bracket = &poch(&m(1, n + 1), 1, n_fin, cx.order) - &one;
        Ok(&poch_inf(&m(1, n + 1), 1, cx.order) * &bracket)
    })?)
}

fn af_iv_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let o = cx.order;
    Ok(cx.finite_sum(1..=n_fin, |n| {
        let top = &gaussian_binomial(n_fin, n, o) * &poch(&Monomial::q(), 1, n, o);
        top.mul_monomial(&sign(n), tri(n)).div_binomial(&Rational::one(), n)
    })?)
}

fn af_vii_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let inv_n = cx.one().div_poch(&Monomial::q(), 1, n_fin)?;
    let limit = &inv_n * &inv_n;
    // (q^(N+1))_n / (q)_n
    let mut ratio = cx.one();
    Ok(cx.sum(0, |n| {
        let term = &(&ratio * &ratio) - &limit;
        ratio.mul_binomial_in_place(&Rational::one(), n_fin + n + 1);
        ratio.div_binomial_in_place(&Rational::one(), n + 1)?;
        Ok(term)
    })?)
}

fn af_vii_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let o = cx.order;
    let q_n = poch(&Monomial::q(), 1, n_fin, o);
    let sum = cx.finite_sum(1..=n_fin, |n| {
        let ratio = q_n.div_poch(&m(1, n + 1), 1, n_fin)?;
        let bracket = &ratio + &cx.one();
        let top = gaussian_binomial(n_fin, n, o).mul_monomial(&sign(n), tri(n)).div_binomial(&Rational::one(), n)?;
        Ok(&top * &bracket)
    })?;
    Ok(sum.div(&(&q_n * &q_n))?)
}

/// `(-1)^n q^(n(n+1)/2) / (q)_n` for `n = 0, 1, ...`, advanced in place.
struct AltWeight {
    inv: Series,
}

impl AltWeight {
    fn at(&mut self, n: usize) -> Result<Series, crate::error::SeriesError> {
        if n > 0 {
            self.inv.div_binomial_in_place(&Rational::one(), n)?;
        }
        Ok(self.inv.mul_monomial(&sign(n), tri(n)))
    }
}

fn af_ix_a_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let q_n = poch(&Monomial::q(), 1, n_fin, cx.order);
    let mut w = AltWeight { inv: cx.one() };
    // (q)_n / (q^(N+1))_n
    let mut ratio = cx.one();
    let sum = cx.sum(0, |n| {
        let term = &(&ratio - &q_n) * &w.at(n)?;
        ratio.mul_binomial_in_place(&Rational::one(), n + 1);
        ratio.div_binomial_in_place(&Rational::one(), n_fin + n + 1)?;
        Ok(term)
    })?;
    Ok(sum.div_poch(&Monomial::q(), 1, n_fin)?.div_poch_inf(&Monomial::q(), 1)?)
}

/// `sum_{n>=1} [N+n-1, n] q^n / (q)_n`.
fn af_ix_a_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let mut gauss = GaussianTable::new(cx.order);
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        Ok((gauss.get(n_fin + n - 1, n) * &inv).shift(n))
    })?)
}

fn af_ix_b_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let inv_n = cx.one().div_poch(&Monomial::q(), 1, n_fin)?;
    let mut w = AltWeight { inv: cx.one() };
    // (q^(N+1))_n / (q)_n
    let mut ratio = cx.one();
    let sum = cx.sum(0, |n| {
        let term = &(&ratio - &inv_n) * &w.at(n)?;
        ratio.mul_binomial_in_place(&Rational::one(), n_fin + n + 1);
        ratio.div_binomial_in_place(&Rational::one(), n + 1)?;
        Ok(term)
    })?;
    Ok(sum.mul_poch(&Monomial::q(), 1, n_fin).div_poch_inf(&Monomial::q(), 1)?)
}

/// `sum_{n=1}^N [N, n] (-1)^n q^(n(n+1)/2) / (q)_n`.
fn af_ix_b_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let mut w = AltWeight { inv: cx.one() };
    w.at(0)?;
    Ok(cx.finite_sum(1..=n_fin, |n| Ok(&gaussian_binomial(n_fin, n, cx.order) * &w.at(n)?))?)
}

fn af_limit_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let full = cx.one().div_poch_inf(&Monomial::q(), 1)?;
    let mut w = AltWeight { inv: cx.one() };
    Ok(cx.sum(0, |n| {
        let weight = w.at(n)?;
        Ok(&(&w.inv - &full) * &weight)
    })?)
}

/// `sum_{n>=1} (-1)^n q^(n(n+1)/2) / (q)_n^2`.
fn af_limit_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut w = AltWeight { inv: cx.one() };
    w.at(0)?;
    Ok(cx.sum(1, |n| {
        let weight = w.at(n)?;
        Ok(&weight * &w.inv)
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_slot_covers_four_choices() {
        let names: Vec<String> = (0..4).map(|i| g_choice(i).to_string()).collect();
        assert_eq!(names.len(), 4);
        assert!(names.iter().all(|n| !n.starts_with("coeffs")));
    }
}
