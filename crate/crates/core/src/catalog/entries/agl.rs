//! The two-parameter tails of `(alpha)_n`, their specializations, and the
//! FFW / spt family.

use super::*;
use crate::partition::{generating_series, GenStat};
use crate::qseries::{lambert_sum, LambertFlavor};

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    vec![
        entry(
            "agl-crank",
            "tails against 1/(q)_n^2",
            "prove a sum-of-tails identity",
            vec![],
            vec![side("tails", agl_crank_tails), side("series", agl_crank_series), oracle("crank moments", agl_crank_oracle)],
        ),
        entry(
            "gen-agl",
            "two-parameter tails of (alpha)_n",
            "This is given in theorem below",
            vec![slot("alpha", SlotKind::Monomial), slot("beta", SlotKind::Either)],
            vec![side("tails", gen_agl_lhs), side("two sums", gen_agl_rhs)],
        ),
        entry(
            "lerch-half-beta",
            "partial theta with a Lambert denominator",
            "This identity is given by Ramanujan",
            vec![slot("beta", SlotKind::Either)],
            vec![side("series", lerch_lhs), side("product form", lerch_rhs)],
        ),
        entry(
            "agl-alpha-minus-q",
            "alpha = -q, beta = -1",
            "Upon taking $\\alpha=-q$ and $\\beta=-1$",
            vec![],
            vec![side("tails", amq_tails), side("series", amq_series), side("lambert form", amq_lambert)],
        ),
        entry(
            "agl-alpha-q",
            "alpha = q, beta = -1",
            "Upon taking $\\alpha=q$ and $\\beta=-1$",
            vec![],
            vec![side("tails", aq_tails), side("series", aq_series)],
        ),
        entry(
            "product-subtraction",
            "difference of the two tails",
            "Subtract \\eqref{AGla=-qenq} from",
            vec![],
            vec![side("tails", subtraction_tails), side("series", subtraction_series)],
        ),
        entry(
            "q-to-q2",
            "base q^2 against base q tails",
            "Replace $q $ by $q^2$",
            vec![],
            vec![side("tails", q2_tails), side("product form", q2_product), side("lambert form", q2_lambert)],
        ),
        noted(
            entry(
                "ffw-c-gen",
                "generating function of FFW_c",
                "Using \\eqref{defn} we have the following theorem",
                vec![slot("c", SlotKind::Rational)],
                vec![
                    oracle("negated FFW_c", ffw_c_oracle),
                    side("series", ffw_c_series),
                    side("divisor form", ffw_c_divisor),
                ],
            ),
            "the oracle side is minus the literal FFW_c generating function; the displayed signs match the (-1)^(#+1) weighting",
        ),
        noted(
            entry(
                "ffw-divisor",
                "FFW and the divisor function",
                "Letting $c\\to1$ in the above Theorem",
                vec![],
                vec![oracle("negated FFW", ffw_oracle), side("series", ffw_series), side("lambert", ffw_lambert)],
            ),
            "the oracle side is minus the literal FFW generating function",
        ),
        entry(
            "spt-rep",
            "spt generating function",
            "the generating function of $\\textup{spt}(n)$",
            vec![],
            vec![side("derivative form", spt_derivative), side("tail products", spt_products), oracle("spt", spt_oracle)],
        ),
    ]
}

fn agl_crank_tails(cx: &BuildCtx, _: &Bindings) -> Built {
    let one = cx.one();
    // ((q)_n - (q)_inf) / (q)_n^2 = (1 - (q^(n+1))_inf) / (q)_n
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&Rational::one(), n)?;
        }
        Ok(&(&one - &poch_inf(&m(1, n + 1), 1, cx.order)) * &inv)
    })?)
}

/// `sum_{n>=1} n q^(n^2) / (q)_n^2`.
fn agl_crank_series(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        Ok((&inv * &inv).mul_monomial(&int(n as i64), n * n))
    })?)
}

/// `q + sum_{n>=2} sum_{m>=1} m M(m, n) q^n`.
fn agl_crank_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut coeffs = generating_series(GenStat::CrankMoment, None, cx.order, cx.budget)?.into_coeffs();
    if cx.order >= 1 {
        coeffs[1] = Rational::one();
    }
    Ok(Series::make(cx.order, coeffs)?)
}

fn gen_agl_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (alpha, beta) = (b.mono("alpha")?, b.mono("beta")?);
    let full = poch_inf(&alpha, 1, cx.order);
    let mut partial = cx.one();
    // 1 / ((beta q)_n (q)_n)
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&beta.coeff, beta.exp + n)?;
            inv.div_binomial_in_place(&Rational::one(), n)?;
        }
        let term = &(&partial - &full) * &inv;
        partial.mul_binomial_in_place(&alpha.coeff, alpha.exp + n);
        Ok(term)
    })?)
}

/// `sum_{n>=1} n beta^n q^(n^2) / ((beta q)_n (q)_n)`.
fn beta_theta(cx: &BuildCtx, beta: &Monomial) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&beta.coeff, beta.exp + n)?;
        inv.div_binomial_in_place(&Rational::one(), n)?;
        Ok(times(&inv, &beta.pow(n).shifted(n * n)).scale(&int(n as i64)))
    })?)
}

fn gen_agl_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let (alpha, beta) = (b.mono("alpha")?, b.mono("beta")?);
    let theta = beta_theta(cx, &beta)?;
    // (beta q/alpha)_n alpha^n = (alpha - beta q)(alpha - beta q^2)...(alpha - beta q^n)
    let mut prod = cx.one();
    let lambert = cx.sum(1, |n| {
        prod = prod.mul_sparse(&[(alpha.exp, alpha.coeff.clone()), (beta.exp + n, -beta.coeff.clone())]);
        prod.div_binomial(&Rational::one(), n)
    })?;
    let second = lambert.div_poch_inf(&beta.shifted(1), 1)?;
    Ok((&theta + &second).mul_poch_inf(&alpha, 1).div_poch_inf(&Monomial::q(), 1)?)
}

/// `sum_{n>=1} (-beta)^n q^(n(n+1)/2) / (1 - q^n)`.
fn lerch_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let beta = b.mono("beta")?;
    Ok(cx.sum(1, |n| times(&cx.one(), &beta.neg().pow(n).shifted(tri(n))).div_binomial(&Rational::one(), n))?)
}

fn lerch_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let beta = b.mono("beta")?;
    Ok(beta_theta(cx, &beta)?.mul_poch_inf(&beta.shifted(1), 1).scale(&int(-1)))
}

/// `sum_{n>=0} (1 - (s q^(n+1))_inf) (-s q^(n+1))_inf` for a sign `s`.
fn signed_product_tails(cx: &BuildCtx, s: i64) -> Built {
    let one = cx.one();
    Ok(cx.sum(0, |n| {
        let bracket = &one - &poch_inf(&m(s, n + 1), 1, cx.order);
        Ok(&bracket * &poch_inf(&m(-s, n + 1), 1, cx.order))
    })?)
}

fn amq_tails(cx: &BuildCtx, _: &Bindings) -> Built {
    signed_product_tails(cx, -1)
}

/// `sum_{n>=1} n (-1)^n q^(n^2) / (q)_n (-q^(n+1))_inf`.
fn amq_series(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        let tail = poch_inf(&m(-1, n + 1), 1, cx.order);
        Ok((&inv * &tail).mul_monomial(&(sign(n) * int(n as i64)), n * n))
    })?)
}

/// `sum_{n>=1} q^(n(n+1)/2) / (1 - q^n)`.
fn triangular_lambert(cx: &BuildCtx) -> Built {
    Ok(cx.sum(1, |n| Series::monomial(Rational::one(), tri(n), cx.order).div_binomial(&Rational::one(), n))?)
}

fn amq_lambert(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(triangular_lambert(cx)?.scale(&int(-1)))
}

fn aq_tails(cx: &BuildCtx, _: &Bindings) -> Built {
    signed_product_tails(cx, 1)
}

/// `2 sum_{n>=1} (-q)_n q^n / (1 - q^(2n))`.
fn minus_q_lambert(cx: &BuildCtx) -> Built {
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        partial.mul_binomial_in_place(&int(-1), n);
        partial.shift(n).div_binomial(&Rational::one(), 2 * n)
    })?;
    Ok(sum.scale(&int(2)))
}

fn aq_series(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(&minus_q_lambert(cx)? - &triangular_lambert(cx)?)
}

fn subtraction_tails(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(0, |n| Ok(&poch_inf(&m(-1, n + 1), 1, cx.order) - &poch_inf(&m(1, n + 1), 1, cx.order)))?)
}

fn subtraction_series(cx: &BuildCtx, _: &Bindings) -> Built {
    minus_q_lambert(cx)
}

/// `sum_{n>=0} [(q^(2n+2);q^2)_inf - (q^(2n+1);q)_inf]`.
fn q2_tails(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(0, |n| Ok(&poch_inf(&m(1, 2 * n + 2), 2, cx.order) - &poch_inf(&m(1, 2 * n + 1), 1, cx.order)))?)
}

/// `(q;q^2)_inf sum_{n>=1} n q^(n(2n-1)) / (q;q)_(2n)`.
fn q2_product(cx: &BuildCtx, _: &Bindings) -> Built {
    let sum = cx.sum(1, |n| {
        Series::monomial(int(n as i64), n * (2 * n - 1), cx.order).div_poch(&Monomial::q(), 1, 2 * n)
    })?;
    Ok(sum.mul_poch_inf(&Monomial::q(), 2))
}

/// `sum_{n>=1} (-1)^(n-1) q^(n^2) / (1 - q^(2n))`.
fn q2_lambert(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| Series::monomial(sign(n - 1), n * n, cx.order).div_binomial(&Rational::one(), 2 * n))?)
}

fn ffw_c_oracle(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.rational("c")?;
    Ok(generating_series(GenStat::FfwC, Some(&c), cx.order, cx.budget)?.scale(&int(-1)))
}

/// `-sum_{n>=1} (-c)^n q^(n(n+1)/2) / ((q)_n (1 - q^n))`.
fn ffw_c_series_with(cx: &BuildCtx, c: &Rational) -> Built {
    let minus_c = Monomial::constant(-c.clone());
    let mut inv = cx.one();
    let sum = cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        times(&inv, &minus_c.pow(n).shifted(tri(n))).div_binomial(&Rational::one(), n)
    })?;
    Ok(sum.scale(&int(-1)))
}

fn ffw_c_series(cx: &BuildCtx, b: &Bindings) -> Built {
    ffw_c_series_with(cx, &b.rational("c")?)
}

/// `sum_{n>=1} q^n/(1-q^n) - sum_{n>=1} (c)_n q^n/(1-q^n)`.
fn ffw_c_divisor(cx: &BuildCtx, b: &Bindings) -> Built {
    let c = b.rational("c")?;
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        partial.mul_binomial_in_place(&c, n - 1);
        partial.shift(n).div_binomial(&Rational::one(), n)
    })?;
    Ok(&lambert_sum(LambertFlavor::Minus, cx.order) - &sum)
}

fn ffw_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::FfwC, Some(&Rational::one()), cx.order, cx.budget)?.scale(&int(-1)))
}

fn ffw_series(cx: &BuildCtx, _: &Bindings) -> Built {
    ffw_c_series_with(cx, &Rational::one())
}

fn ffw_lambert(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(lambert_sum(LambertFlavor::Minus, cx.order))
}

/// `1/(q)_inf sum_{n>=1} n (-1)^(n-1) q^(n(n+1)/2) / ((q)_n (1 - q^n))`.
fn spt_derivative(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut inv = cx.one();
    let sum = cx.sum(1, |n| {
        inv.div_binomial_in_place(&Rational::one(), n)?;
        inv.mul_monomial(&(sign(n - 1) * int(n as i64)), tri(n)).div_binomial(&Rational::one(), n)
    })?;
    Ok(sum.div_poch_inf(&Monomial::q(), 1)?)
}

/// `sum_{n>=1} q^n / ((1 - q^n)^2 (q^(n+1))_inf)`.
fn spt_products(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| {
        Series::monomial(Rational::one(), n, cx.order)
            .div_binomial(&Rational::one(), n)?
            .div_binomial(&Rational::one(), n)?
            .div_poch_inf(&m(1, n + 1), 1)
    })?)
}

fn spt_oracle(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(generating_series(GenStat::Spt, None, cx.order, cx.budget)?)
}
