//! The general finite sum-of-tails transformation
//!
//! ```text
//! sum_{n>=0} g_n [ (aq^N)_n (t)_n / ((tq^N)_n (a)_n) - (t)_N/(a)_N ]
//!   = (t)_N/(a)_N sum_{n>=1} { sum_k [n,k] a^k t^(n-k) (q^N - 1)...(q^N - q^(k-1)) (q^N)_(n-k) } g(q^n)/(q)_n
//! ```
//!
//! with both sides built independently for a chosen `g`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::qseries::{poch, poch_inf, rising_power_product, sum_formal, GaussianTable, Monomial, SumGuard};
use crate::rational::{binomial, format_rational, Rational};
use crate::series::Series;

/// The coefficient sequence `g_n` together with its generating function `g(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GChoice {
    /// `g_n` given explicitly; zero past the end of the list.
    Coeffs(Vec<Rational>),
    /// `g(x) = 1/(1 - cx)`, `g_n = c^n`.
    Geometric(Monomial),
    /// `g(x) = (cx)_inf/(bx)_inf`, `g_n = (b - c)(b - cq)...(b - cq^(n-1))/(q)_n`.
    EtaRatio { b: Monomial, c: Monomial },
    /// `g_n = (q)_inf/(q)_n`, so `g(q^n) = (q)_(n-1)`.
    QExponentialAlt,
    /// `g(x) = 1/(1 - cx)^k`, `g_n = binom(k+n-1, n) c^n`.
    BinomialNegative { k: usize, c: Monomial },
}

impl fmt::Display for GChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GChoice::Coeffs(v) => {
                let text: Vec<String> = v.iter().map(format_rational).collect();
                write!(f, "coeffs[{}]", text.join(","))
            }
            GChoice::Geometric(c) => write!(f, "geometric({c})"),
            GChoice::EtaRatio { b, c } => write!(f, "eta-ratio({b},{c})"),
            GChoice::QExponentialAlt => write!(f, "q-exponential-alt"),
            GChoice::BinomialNegative { k, c } => write!(f, "binomial-negative({k},{c})"),
        }
    }
}

/// Streams `g_0, g_1, ...` as series, carrying the running products.
pub struct GSequence<'a> {
    choice: &'a GChoice,
    order: usize,
    n: usize,
    running: Series,
}

impl<'a> GSequence<'a> {
    pub fn new(choice: &'a GChoice, order: usize) -> Result<Self, SeriesError> {
        let running = match choice {
            GChoice::QExponentialAlt => poch_inf(&Monomial::q(), 1, order),
            _ => Series::one(order),
        };
        Ok(GSequence { choice, order, n: 0, running })
    }

    /// `g_n` for the next `n`.
    pub fn next_coeff(&mut self) -> Result<Series, SeriesError> {
        let n = self.n;
        self.n += 1;
        let order = self.order;
        Ok(match self.choice {
            GChoice::Coeffs(v) => Series::constant(v.get(n).cloned().unwrap_or_else(Rational::zero), order),
            GChoice::Geometric(c) => c.pow(n).to_series(order),
            GChoice::BinomialNegative { k: 0, .. } => {
                Series::constant(if n == 0 { Rational::one() } else { Rational::zero() }, order)
            }
            GChoice::BinomialNegative { k, c } => {
                let b = Rational::from_integer(binomial((k + n - 1) as u64, n as u64));
                c.pow(n).to_series(order).scale(&b)
            }
            GChoice::EtaRatio { b, c } => {
                let current = self.running.clone();
                // next factor (b - c q^n) / (1 - q^(n+1))
                let terms = [(b.exp, b.coeff.clone()), (c.exp + n, -c.coeff.clone())];
                self.running = self.running.mul_sparse(&terms).div_binomial(&Rational::one(), n + 1)?;
                current
            }
            GChoice::QExponentialAlt => {
                let current = self.running.clone();
                self.running = self.running.div_binomial(&Rational::one(), n + 1)?;
                current
            }
        })
    }

    /// `g(q^n)` for `n >= 1`.
    pub fn at_q_power(&self, n: usize) -> Result<Series, SeriesError> {
        let order = self.order;
        let one = Series::one(order);
        match self.choice {
            GChoice::Coeffs(v) => {
                let mut out = Series::zero(order);
                for (j, g) in v.iter().enumerate().take_while(|(j, _)| j * n <= order) {
                    out = &out + &Series::monomial(g.clone(), j * n, order);
                }
                Ok(out)
            }
            GChoice::Geometric(c) => one.div_binomial(&c.coeff, c.exp + n),
            GChoice::BinomialNegative { k, c } => {
                let mut out = one;
                for _ in 0..*k {
                    out.div_binomial_in_place(&c.coeff, c.exp + n)?;
                }
                Ok(out)
            }
            GChoice::EtaRatio { b, c } => one.mul_poch_inf(&c.shifted(n), 1).div_poch_inf(&b.shifted(n), 1),
            GChoice::QExponentialAlt => Ok(poch(&Monomial::q(), 1, n - 1, order)),
        }
    }
}

/// Both sides of the finite transformation for the given `g`, `a`, `t` and `N`.
pub fn theorem1_engine(
    g: &GChoice,
    a: &Monomial,
    t: &Monomial,
    n_finite: usize,
    order: usize,
    guard: SumGuard,
) -> Result<(Series, Series), SeriesError> {
    let lhs = engine_lhs(g, a, t, n_finite, order, guard)?;
    let rhs = engine_rhs(g, a, t, n_finite, order, guard)?;
    Ok((lhs, rhs))
}

/// `(t)_N / (a)_N`.
fn front_ratio(a: &Monomial, t: &Monomial, n_finite: usize, order: usize) -> Result<Series, SeriesError> {
    poch(t, 1, n_finite, order).div_poch(a, 1, n_finite)
}

pub fn engine_lhs(
    g: &GChoice,
    a: &Monomial,
    t: &Monomial,
    n_finite: usize,
    order: usize,
    guard: SumGuard,
) -> Result<Series, SeriesError> {
    let front = front_ratio(a, t, n_finite, order)?;
    let mut coeffs = GSequence::new(g, order)?;
    // P_n = (aq^N)_n (t)_n / ((tq^N)_n (a)_n), advanced one factor at a time
    let mut ratio = Series::one(order);
    let mut step = |n: usize| -> Result<Series, SeriesError> {
        let gn = coeffs.next_coeff()?;
        let term = &gn * &(&ratio - &front);
        ratio.mul_binomial_in_place(&a.coeff, a.exp + n_finite + n);
        ratio.mul_binomial_in_place(&t.coeff, t.exp + n);
        ratio.div_binomial_in_place(&t.coeff, t.exp + n_finite + n)?;
        ratio.div_binomial_in_place(&a.coeff, a.exp + n)?;
        Ok(term)
    };
    if let GChoice::Coeffs(v) = g {
        let mut acc = Series::zero(order);
        for n in 0..v.len() {
            acc = &acc + &step(n)?;
        }
        return Ok(acc);
    }
    sum_formal(order, guard, 0, step)
}

pub fn engine_rhs(
    g: &GChoice,
    a: &Monomial,
    t: &Monomial,
    n_finite: usize,
    order: usize,
    guard: SumGuard,
) -> Result<Series, SeriesError> {
    let front = front_ratio(a, t, n_finite, order)?;
    let coeffs = GSequence::new(g, order)?;
    let mut gauss = GaussianTable::new(order);
    let rising: Vec<Series> = (0..=n_finite).map(|k| rising_power_product(n_finite, k, order)).collect();
    // (q^N)_m for m = 0, 1, ... grown on demand
    let q_n = Monomial::new(Rational::one(), n_finite);
    let mut tails: Vec<Series> = vec![Series::one(order)];
    let mut inv_q_n = Series::one(order);
    let total = sum_formal(order, guard, 1, |n| {
        while tails.len() <= n {
            let m = tails.len();
            let next = tails[m - 1].mul_binomial(&q_n.coeff, q_n.exp + m - 1);
            tails.push(next);
        }
        inv_q_n.div_binomial_in_place(&Rational::one(), n)?;
        let mut inner = Series::zero(order);
        for k in 0..=n.min(n_finite) {
            let weight = a.pow(k).mul(&t.pow(n - k));
            if weight.is_zero() {
                continue;
            }
            let prod = &(gauss.get(n, k) * &rising[k]) * &tails[n - k];
            inner = &inner + &prod.mul_monomial(&weight.coeff, weight.exp);
        }
        if inner.is_zero() {
            return Ok(inner);
        }
        Ok(&(&inner * &coeffs.at_q_power(n)?) * &inv_q_n)
    })?;
    Ok(&front * &total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::geometric_fraction;
    use crate::rational::{int, rat};

    const GUARD: SumGuard = SumGuard { stall_limit: 50, zero_window: 8 };

    fn check(g: &GChoice, a: &Monomial, t: &Monomial, n: usize, order: usize) {
        let (lhs, rhs) = theorem1_engine(g, a, t, n, order, GUARD).unwrap();
        assert_eq!(lhs.first_difference(&rhs), None, "g={g} a={a} t={t} N={n}");
    }

    #[test]
    fn constant_g_leaves_only_the_zeroth_bracket() {
        let a = Monomial::new(rat(1, 2), 1);
        let t = Monomial::q();
        let g = GChoice::Coeffs(vec![int(1)]);
        let (lhs, rhs) = theorem1_engine(&g, &a, &t, 3, 12, GUARD).unwrap();
        let expected = &Series::one(12) - &front_ratio(&a, &t, 3, 12).unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn named_choices_balance() {
        let q = Monomial::q();
        let half = Monomial::constant(rat(1, 2));
        let choices = [
            GChoice::Geometric(half.clone()),
            GChoice::EtaRatio { b: Monomial::constant(rat(1, 3)), c: half.clone() },
            GChoice::QExponentialAlt,
            GChoice::BinomialNegative { k: 2, c: Monomial::constant(int(-1)) },
            GChoice::Coeffs(vec![int(2), rat(-1, 3), int(5)]),
        ];
        for g in &choices {
            for (a, t) in [(Monomial::zero(), q.clone()), (q.neg(), q.shifted(1)), (half.clone(), Monomial::zero())] {
                for n in [1, 2, 4] {
                    check(g, &a, &t, n, 14);
                }
            }
        }
    }

    #[test]
    fn geometric_at_q_powers_matches_fraction() {
        let c = Monomial::constant(rat(-3, 2));
        let g = GChoice::Geometric(c.clone());
        let coeffs = GSequence::new(&g, 10).unwrap();
        assert_eq!(coeffs.at_q_power(2).unwrap(), geometric_fraction(&c.shifted(2), 10).unwrap());
    }

    #[test]
    fn q_exponential_alt_coefficients() {
        let g = GChoice::QExponentialAlt;
        let mut coeffs = GSequence::new(&g, 10).unwrap();
        let g0 = coeffs.next_coeff().unwrap();
        assert_eq!(g0, poch_inf(&Monomial::q(), 1, 10));
        assert_eq!(coeffs.at_q_power(3).unwrap(), poch(&Monomial::q(), 1, 2, 10));
    }
}
