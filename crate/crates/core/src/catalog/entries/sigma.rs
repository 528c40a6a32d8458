//! Representations of sigma(q), delta(q) and two third order mock theta functions.

use super::*;
use crate::qseries::{gaussian_binomial, lambert_sum, poch, LambertFlavor};
use crate::rational::rat;

pub(super) fn entries() -> Vec<IdentityDescriptor> {
    vec![
        entry(
            "sigma-two-forms",
            "sigma(q), two series",
            "another series representation for $\\sigma(q)$",
            vec![],
            vec![side("definition", sigma_def), side("alternating form", sigma_alt)],
        ),
        entry(
            "sigma-finite",
            "finite sigma(q, N)",
            "a new series presentation for $\\sigma(q,N)$",
            vec![slot("N", SlotKind::Integer { defaults: N_VALUES, min: 0, max: None })],
            vec![side("gaussian sum", sigma_finite_lhs), side("tail products", sigma_finite_rhs)],
        ),
        entry(
            "sigma-new-rep",
            "sigma(q) from tail products",
            "seems to be new",
            vec![],
            vec![side("definition", sigma_def), side("tail products", sigma_new_rep)],
        ),
        entry(
            "new-ramanujan-i",
            "divisor-weighted tails of (-q)_inf",
            "Another new representation for $\\sigma(q)$",
            vec![],
            vec![side("series", new_ram_i_lhs), side("sigma form", new_ram_i_rhs)],
        ),
        entry(
            "new-ramanujan-ii",
            "odd analogue with delta(q)",
            "Another new representation for $\\sigma(q)$",
            vec![],
            vec![side("series", new_ram_ii_lhs), side("delta form", new_ram_ii_rhs)],
        ),
        entry(
            "delta-general",
            "one-parameter delta(q)",
            "a beautiful identity for a generalization",
            vec![slot("t", SlotKind::Either)],
            vec![side("definition", delta_general_lhs), side("product form", delta_general_rhs)],
        ),
        entry(
            "delta-at-minus1",
            "delta(q) at t = -1",
            "If we put $t=-1$, we get",
            vec![],
            vec![side("definition", delta_minus1_lhs), side("alternating form", delta_minus1_rhs)],
        ),
        entry(
            "mock-phi",
            "third order phi(q)",
            "new and elegant representation",
            vec![],
            vec![side("definition", mock_phi_lhs), side("alternating form", mock_phi_rhs)],
        ),
        entry(
            "mock-psi",
            "third order psi(q)",
            "new and elegant representation",
            vec![],
            vec![side("definition", mock_psi_lhs), side("product form", mock_psi_rhs)],
        ),
    ]
}

/// `sigma(q) = sum_{n>=0} q^(n(n+1)/2) / (-q)_n`.
pub(crate) fn sigma_series(cx: &BuildCtx) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&int(-1), n)?;
        }
        Ok(inv.shift(tri(n)))
    })?)
}

/// `delta(q) = sum_{n>=1} q^(n^2) / (-q;q^2)_n`.
pub(crate) fn delta_series(cx: &BuildCtx) -> Built {
    Ok(&delta_with(cx, &m(-1, 0))? - &cx.one())
}

/// `sum_{n>=0} q^(n^2) / (tq;q^2)_n`.
fn delta_with(cx: &BuildCtx, t: &Monomial) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&t.coeff, t.exp + 2 * n - 1)?;
        }
        Ok(inv.shift(n * n))
    })?)
}

fn sigma_def(cx: &BuildCtx, _: &Bindings) -> Built {
    sigma_series(cx)
}

/// `1 + sum_{n>=1} (-1)^(n-1) q^n (q)_(n-1)`.
fn sigma_alt(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        let term = partial.mul_monomial(&sign(n - 1), n);
        partial.mul_binomial_in_place(&Rational::one(), n);
        Ok(term)
    })?;
    Ok(&cx.one() + &sum)
}

fn sigma_finite_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let o = cx.order;
    Ok(cx.finite_sum(0..=n_fin, |n| {
        let top = &gaussian_binomial(n_fin, n, o) * &poch(&Monomial::q(), 1, n, o);
        top.shift(tri(n)).div_poch(&m(-1, 1), 1, n)
    })?)
}

/// `(q)_inf/(-q^(N+1))_inf + 2 sum_{n>=1} q^n/(1+q^n) (q^(n+1))_inf/(-q^(N+n+1))_inf`.
fn sigma_finite_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let n_fin = b.int("N")?;
    let head = euler(cx).div_poch_inf(&m(-1, n_fin + 1), 1)?;
    let sum = cx.sum(1, |n| {
        let tail = poch_inf(&m(1, n + 1), 1, cx.order).div_poch_inf(&m(-1, n_fin + n + 1), 1)?;
        tail.shift(n).div_binomial(&int(-1), n)
    })?;
    Ok(&head + &sum.scale(&int(2)))
}

/// `sum_{n>=1} q^n/(1+q^n) (q^(n+1))_inf`.
pub(crate) fn b_class_alternating(cx: &BuildCtx) -> Built {
    Ok(cx.sum(1, |n| poch_inf(&m(1, n + 1), 1, cx.order).shift(n).div_binomial(&int(-1), n))?)
}

fn sigma_new_rep(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(&euler(cx) + &b_class_alternating(cx)?.scale(&int(2)))
}

/// `sum_{n>=1} q^n/(1-q^n) (-q^(n+1))_inf`.
fn new_ram_i_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| poch_inf(&m(-1, n + 1), 1, cx.order).shift(n).div_binomial(&Rational::one(), n))?)
}

fn new_ram_i_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let o = cx.order;
    let lambert = &lambert_sum(LambertFlavor::Plus, o) + &Series::constant(rat(1, 2), o);
    let product = &poch_inf(&m(-1, 1), 1, o) * &lambert;
    Ok(&product - &sigma_series(cx)?.scale(&rat(1, 2)))
}

/// `sum_{n>=1} q^(2n)/(1-q^(2n)) (-q^(2n+1);q^2)_inf`.
fn new_ram_ii_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    Ok(cx.sum(1, |n| {
        poch_inf(&m(-1, 2 * n + 1), 2, cx.order).shift(2 * n).div_binomial(&Rational::one(), 2 * n)
    })?)
}

fn new_ram_ii_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let o = cx.order;
    let product = &poch_inf(&m(-1, 1), 2, o) * &lambert_sum(LambertFlavor::OddPlus, o);
    Ok(&product - &delta_series(cx)?)
}

fn delta_general_lhs(cx: &BuildCtx, b: &Bindings) -> Built {
    delta_with(cx, &b.mono("t")?)
}

/// `1 + sum_{n>=1} q^n (t + q^2)(t + q^4)...(t + q^(2n-2))`, which is
/// `t^(n-1) (-q^2/t;q^2)_(n-1)` without dividing by `t`.
fn delta_general_rhs(cx: &BuildCtx, b: &Bindings) -> Built {
    let t = b.mono("t")?;
    let mut prod = cx.one();
    let sum = cx.sum(1, |n| {
        if n > 1 {
            prod = prod.mul_sparse(&[(t.exp, t.coeff.clone()), (2 * n - 2, Rational::one())]);
        }
        Ok(prod.shift(n))
    })?;
    Ok(&cx.one() + &sum)
}

fn delta_minus1_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    delta_with(cx, &m(-1, 0))
}

/// `1 + sum_{n>=1} (-1)^(n-1) q^n (q^2;q^2)_(n-1)`.
fn delta_minus1_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        let term = partial.mul_monomial(&sign(n - 1), n);
        partial.mul_binomial_in_place(&Rational::one(), 2 * n);
        Ok(term)
    })?;
    Ok(&cx.one() + &sum)
}

fn mock_phi_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    mock_phi(cx)
}

/// `phi(q) = sum_{n>=0} q^(n^2) / (-q^2;q^2)_n`.
pub(crate) fn mock_phi(cx: &BuildCtx) -> Built {
    let mut inv = cx.one();
    Ok(cx.sum(0, |n| {
        if n > 0 {
            inv.div_binomial_in_place(&int(-1), 2 * n)?;
        }
        Ok(inv.shift(n * n))
    })?)
}

/// `1 + sum_{n>=1} (-1)^(n-1) q^(2n-1) (q;q^2)_(n-1)`.
fn mock_phi_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        let term = partial.mul_monomial(&sign(n - 1), 2 * n - 1);
        partial.mul_binomial_in_place(&Rational::one(), 2 * n - 1);
        Ok(term)
    })?;
    Ok(&cx.one() + &sum)
}

fn mock_psi_lhs(cx: &BuildCtx, _: &Bindings) -> Built {
    mock_psi(cx)
}

/// `sum_{n>=0} q^(n^2) / (q;q^2)_n`.
pub(crate) fn mock_psi(cx: &BuildCtx) -> Built {
    delta_with(cx, &m(1, 0))
}

/// `1 + sum_{n>=1} q^n (-q^2;q^2)_(n-1)`.
fn mock_psi_rhs(cx: &BuildCtx, _: &Bindings) -> Built {
    let mut partial = cx.one();
    let sum = cx.sum(1, |n| {
        let term = partial.shift(n);
        partial.mul_binomial_in_place(&int(-1), 2 * n);
        Ok(term)
    })?;
    Ok(&cx.one() + &sum)
}
