//! Catalog entries, grouped loosely by theme.

mod agl;
mod combinatorial;
mod sigma;
mod tails;
mod transforms;

pub use transforms::g_choice;

use num_traits::One;

use super::{Anchor, Bindings, BuildCtx, IdentityDescriptor, ParamSlot, Side, SlotKind};
use crate::error::CatalogError;
use crate::qseries::{poch_inf, Monomial};
use crate::rational::{int, sign_pow, Rational};
use crate::series::Series;

pub(super) fn all() -> Vec<IdentityDescriptor> {
    let mut out = Vec::new();
    out.extend(tails::entries());
    out.extend(transforms::entries());
    out.extend(sigma::entries());
    out.extend(agl::entries());
    out.extend(combinatorial::entries());
    out
}

type Built = Result<Series, CatalogError>;

/// Names accepted by [`named`].
pub(super) const NAMED: &[&str] = &["sigma", "delta", "mock-phi", "mock-psi", "euler", "lambert"];

/// Standalone series outside any single identity.
pub(super) fn named(name: &str, cx: &BuildCtx) -> Option<Built> {
    Some(match name {
        "sigma" => sigma::sigma_series(cx),
        "delta" => sigma::delta_series(cx),
        "mock-phi" => sigma::mock_phi(cx),
        "mock-psi" => sigma::mock_psi(cx),
        "euler" => Ok(euler(cx)),
        "lambert" => Ok(crate::qseries::lambert_sum(crate::qseries::LambertFlavor::Minus, cx.order)),
        _ => return None,
    })
}

const N_VALUES: &[i64] = &[1, 2, 3, 5, 8];
const K_VALUES: &[i64] = &[1, 2, 3];
const G_VALUES: &[i64] = &[0, 1, 2, 3];

fn entry(id: &'static str, label: &'static str, quote: &'static str, slots: Vec<ParamSlot>, sides: Vec<Side>) -> IdentityDescriptor {
    let default_order = if ["sigma-", "delta-", "mock-"].iter().any(|p| id.starts_with(p)) { 60 } else { 40 };
    IdentityDescriptor { id, anchor: Anchor { label, quote }, slots, sides, default_order, note: None }
}

fn noted(mut desc: IdentityDescriptor, note: &'static str) -> IdentityDescriptor {
    desc.note = Some(note);
    desc
}

fn side(label: &'static str, build: super::Builder) -> Side {
    Side { label, oracle: false, build }
}

fn oracle(label: &'static str, build: super::Builder) -> Side {
    Side { label, oracle: true, build }
}

fn slot(name: &'static str, kind: SlotKind) -> ParamSlot {
    ParamSlot { name, kind, poles: Vec::new() }
}

/// A slot whose constant value 1 is a pole of some side.
fn slot_not_one(name: &'static str, kind: SlotKind) -> ParamSlot {
    ParamSlot { name, kind, poles: vec![Rational::one()] }
}

fn n_slot() -> ParamSlot {
    slot("N", SlotKind::Integer { defaults: N_VALUES, min: 0, max: None })
}

fn k_slot() -> ParamSlot {
    slot("k", SlotKind::Integer { defaults: K_VALUES, min: 1, max: None })
}

fn g_slot() -> ParamSlot {
    slot("g", SlotKind::Integer { defaults: G_VALUES, min: 0, max: Some(3) })
}

/// `c q^e` with integer `c`.
fn m(c: i64, e: usize) -> Monomial {
    Monomial::new(int(c), e)
}

fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

fn sign(n: usize) -> Rational {
    sign_pow(n as i64)
}

/// `s * x` for a monomial `x`.
fn times(s: &Series, x: &Monomial) -> Series {
    s.mul_monomial(&x.coeff, x.exp)
}

/// `s / (1 - x)`.
fn over_one_minus(s: &Series, x: &Monomial) -> Result<Series, crate::error::SeriesError> {
    s.div_binomial(&x.coeff, x.exp)
}

/// `(q)_inf`.
fn euler(cx: &BuildCtx) -> Series {
    poch_inf(&Monomial::q(), 1, cx.order)
}

/// `1 + x + ... + x^(n-1)`.
fn geometric_partial(x: &Monomial, n: usize, order: usize) -> Series {
    let mut out = Series::zero(order);
    for j in 0..n {
        out.add_assign_ref(&x.pow(j).to_series(order));
    }
    out
}
