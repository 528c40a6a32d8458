//! Identities with at least one side computed by enumerating partitions.

use num_traits::Zero;

use super::*;
use crate::partition::{
    d_distinct, generating_series, sigma_prime, weighted_series, weighted_series_with, GenStat, PartitionClass,
    WeightExpr,
};
use crate::rational::pow;

use super::sigma::b_class_alternating;

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    vec![
        entry(
            "sigma-combinatorial",
            "rank-weighted distinct partitions",
            "interesting weighted partition identity",
            vec![],
            vec![
                oracle("distinct partitions", sigma_comb_distinct),
                oracle("smallest parts repeat", sigma_comb_b),
                side("tail products", sigma_comb_series),
            ],
        ),
        entry(
            "remark1-a",
            "reciprocal of (t)_inf",
            "Special cases of Remark",
            vec![slot("t", SlotKind::Monomial)],
            vec![side("product", remark_a_lhs), side("tail products", remark_a_rhs)],
        ),
        entry(
            "remark1-b",
            "sum of smallest parts",
            "Special cases of Remark",
            vec![],
            vec![side("series", remark_b_lhs), side("tail products", remark_b_rhs), oracle("t_sum", remark_b_oracle)],
        ),
        entry(
            "remark1-c",
            "odd smallest part",
            "Special cases of Remark",
            vec![],
            vec![side("series", remark_c_lhs), side("tail products", remark_c_rhs), oracle("s_odd", remark_c_oracle)],
        ),
        entry(
            "remark1-d",
            "signed sum of smallest parts",
            "Special cases of Remark",
            vec![],
            vec![side("series", remark_d_lhs), side("tail products", remark_d_rhs), oracle("signed smallest", remark_d_oracle)],
        ),
        entry(
            "remark1-e",
            "signed odd smallest part",
            "Special cases of Remark",
            vec![],
            vec![side("series", remark_e_lhs), side("tail products", remark_e_rhs), oracle("signed odd smallest", remark_e_oracle)],
        ),
        entry(
            "lpt-equals-t",
            "largest part count against smallest part sum",
            "total number of appearances of largest parts",
            vec![],
            vec![oracle("lpt", lpt_oracle), oracle("t_sum", remark_b_oracle)],
        ),
        entry(
            "lodd-equals-s",
            "odd largest multiplicity against odd smallest part",
            "the number of appearances of the largest part is odd",
            vec![],
            vec![oracle("l_odd", l_odd_oracle), oracle("s_odd", remark_c_oracle)],
        ),
        entry(
            "sigma-prime-weighted",
            "rank-weighted distinct partitions against divisor convolution",
            "the weighted partition identity resulting from it",
            vec![],
            vec![oracle("distinct partitions", sigma_prime_left), oracle("convolution", sigma_prime_right)],
        ),
        noted(
            entry(
                "agl-weighted",
                "weighted distinct partitions against repeated smallest parts",
                "weighted partition identity associated to",
                vec![slot("c", SlotKind::Rational)],
                vec![
                    oracle("distinct partitions", agl_weighted_distinct),
                    oracle("smallest parts repeat", agl_weighted_b),
                    side("series", agl_weighted_series),
                ],
            ),
            "corrected form: the left sum runs over distinct partitions whose largest part exceeds k, \
             and the right weight is (-1)^(#-#s) c^(#s-1)",
        ),
    ]
}

fn weighted(cx: &BuildCtx, class: PartitionClass, source: &str, c: Option<&Rational>) -> Built {
    let w = WeightExpr::parse(source)?;
    Ok(weighted_series(class, &w, c, cx.order, cx.budget)?)
}

fn sigma_comb_distinct(cx: &BuildCtx, _: &Bindings) -> Built {
    weighted(cx, PartitionClass::Distinct, "(-1)^num_parts - (-1)^rank", None)
}

fn sigma_comb_b(cx: &BuildCtx, _: &Bindings) -> Built {
    weighted(cx, PartitionClass::SmallestRepeats, "2*(-1)^num_parts", None)
}

fn sigma_comb_series(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(b_class_alternating(cx)?.scale(&int(-2)))
}

fn remark_a_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    Ok(cx.one().div_poch_inf(&b.mono("t")?, 1)?)
}

/// `1 + sum_{n>=1} t q^(n-1) / (tq^(n-1))_inf`.
fn remark_a_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let t = b.mono("t")?;
    let mut inv = cx.one().div_poch_inf(&t, 1)?;
    let sum = cx.sum(1, |n| {
        let term = times(&inv, &t.shifted(n - 1));
        inv.mul_binomial_in_place(&t.coeff, t.exp + n - 1);
        Ok(term)
    })?;
    Ok(&cx.one() + &sum)
}

/// `sum_{n>=1} q^n / ((q)_(n-1) (1 - q^n)^2)`.
fn remark_b_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        let term = inv.shift(n).div_binomial(&Rational::one(), n)?.div_binomial(&Rational::one(), n)?;
        inv.div_binomial_in_place(&Rational::one(), n)?;
        Ok(term)
    })?)
}

/// `sum_{n>=1} n q^n / (q^n)_inf`.
fn remark_b_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| Series::monomial(int(n as i64), n, cx.order).div_poch_inf(&m(1, n), 1))?)
}

fn remark_b_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::TSum, None, cx.order, cx.budget)?)
}

/// `sum_{n>=1} s q^n / ((q)_n (1 - s' q^n))` with signs `s` alternating or not.
fn lambert_over_poch(cx: &BuildCtx, alternate: bool, plus: bool) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        let s = if alternate { sign(n + 1) } else { Rational::one() };
        let denominator = if plus { int(-1) } else { Rational::one() };
        inv.mul_monomial(&s, n).div_binomial(&denominator, n)
    })?)
}

fn remark_c_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    lambert_over_poch(cx, false, true)
}

/// `sum_{n>=1} q^(2n-1) / (s q^(2n-1))_inf`.
fn odd_tail_products(cx: &BuildCtx, s: i64) -> Built {
    Ok(cx.sum(1, |n| Series::monomial(Rational::one(), 2 * n - 1, cx.order).div_poch_inf(&m(s, 2 * n - 1), 1))?)
}

fn remark_c_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    odd_tail_products(cx, 1)
}

fn remark_c_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::SOdd, None, cx.order, cx.budget)?)
}

fn remark_d_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    lambert_over_poch(cx, true, false)
}

/// `sum_{n>=1} n q^n / (-q^n)_inf`.
fn remark_d_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| Series::monomial(int(n as i64), n, cx.order).div_poch_inf(&m(-1, n), 1))?)
}

fn remark_d_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    weighted(cx, PartitionClass::All, "(-1)^(num_parts-1)*smallest", None)
}

fn remark_e_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    lambert_over_poch(cx, true, true)
}

fn remark_e_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    odd_tail_products(cx, -1)
}

fn remark_e_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    weighted(cx, PartitionClass::All, "(-1)^(num_parts-1)*(1-(-1)^smallest)*1/2", None)
}

fn lpt_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::Lpt, None, cx.order, cx.budget)?)
}

fn l_odd_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::LOdd, None, cx.order, cx.budget)?)
}

/// `sum_{D(n)} (-1)^rank - d(n)` for `n >= 1`.
fn sigma_prime_left(cx: &BuildCtx, _: &Bindings) -> Built {
    let ranks = weighted(cx, PartitionClass::Distinct, "(-1)^rank", None)?;
    let counts = generating_series(GenStat::ClassCount(PartitionClass::Distinct), None, cx.order, cx.budget)?;
    let mut out = &ranks - &counts;
    out = &out + &Series::constant(counts.coeff(0).clone(), cx.order);
    Ok(out)
}

/// `2 (sum_{k=0}^{n-1} d(k) sigma'(n-k) - |B(n)|)` for `n >= 1`.
fn sigma_prime_right(cx: &BuildCtx, _: &Bindings) -> Built {
    let b_counts = generating_series(GenStat::ClassCount(PartitionClass::SmallestRepeats), None, cx.order, cx.budget)?;
    let d: Vec<u64> = (0..cx.order as u32).map(d_distinct).collect();
    let mut coeffs = vec![Rational::zero(); cx.order + 1];
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut conv = Rational::zero();
        for (k, dk) in d.iter().enumerate().take(n) {
            conv += sigma_prime((n - k) as u32) * int(*dk as i64);
        }
        *slot = (conv - b_counts.coeff(n)) * int(2);
    }
    Ok(Series::make(cx.order, coeffs)?)
}

/// `sum_{pi in D(n)} (-1)^(#+1) (1 + c + ... + c^(l-1))`, which regroups
/// `sum_k c^k` over distinct partitions with largest part above `k`.
fn agl_weighted_distinct(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.rational("c")?;
    let series = weighted_series_with(PartitionClass::Distinct, cx.order, cx.budget, |s| {
        let geometric: Rational = (0..s.largest as u64).map(|k| pow(&c, k)).sum();
        sign(s.num_parts as usize + 1) * geometric
    })?;
    Ok(series)
}

fn agl_weighted_b(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.rational("c")?;
    weighted(cx, PartitionClass::SmallestRepeats, "(-1)^(num_parts-smallest_mult)*c^(smallest_mult-1)", Some(&c))
}

/// `sum_{n>=1} (q^(n+1))_inf q^n / (1 - c q^n)`.
fn agl_weighted_series(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.rational("c")?;
    Ok(cx.sum(1, |n| poch_inf(&m(1, n + 1), 1, cx.order).shift(n).div_binomial(&c, n))?)
}
