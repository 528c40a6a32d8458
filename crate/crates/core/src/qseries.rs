//! q-series building blocks on top of [`Series`]: monomials, q-Pochhammer
//! symbols, Gaussian binomials, Lambert series and guarded formal sums.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::rational::{format_rational, pow, Rational};
use crate::series::Series;

/// `coeff * q^exp`. With `exp == 0` this is a plain rational constant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub exp: usize,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: usize) -> Self {
        Monomial { coeff, exp }
    }

    pub fn constant(coeff: Rational) -> Self {
        Monomial { coeff, exp: 0 }
    }

    /// The indeterminate `q` itself.
    pub fn q() -> Self {
        Monomial { coeff: Rational::one(), exp: 1 }
    }

    pub fn zero() -> Self {
        Monomial::constant(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.exp == 0 || self.is_zero()
    }

    /// `self * r * q^e`.
    pub fn times(&self, r: &Rational, e: usize) -> Monomial {
        Monomial { coeff: &self.coeff * r, exp: self.exp + e }
    }

    pub fn shifted(&self, e: usize) -> Monomial {
        Monomial { coeff: self.coeff.clone(), exp: self.exp + e }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { coeff: &self.coeff * &other.coeff, exp: self.exp + other.exp }
    }

    pub fn neg(&self) -> Monomial {
        Monomial { coeff: -&self.coeff, exp: self.exp }
    }

    pub fn pow(&self, k: usize) -> Monomial {
        Monomial { coeff: pow(&self.coeff, k as u64), exp: self.exp * k }
    }

    pub fn to_series(&self, order: usize) -> Series {
        Series::monomial(self.coeff.clone(), self.exp, order)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 || self.coeff.is_zero() {
            return write!(f, "{}", format_rational(&self.coeff));
        }
        let power = if self.exp == 1 { "q".to_string() } else { format!("q^{}", self.exp) };
        if self.coeff.is_one() {
            write!(f, "{power}")
        } else if (-&self.coeff).is_one() {
            write!(f, "-{power}")
        } else {
            write!(f, "{}*{power}", format_rational(&self.coeff))
        }
    }
}

impl Series {
    /// Multiplies by `(x; q^step)_n`.
    pub fn mul_poch(&self, x: &Monomial, step: usize, n: usize) -> Series {
        let mut out = self.clone();
        if x.is_zero() {
            return out;
        }
        for j in 0..n {
            let e = x.exp + step * j;
            if e > out.order() {
                break;
            }
            out.mul_binomial_in_place(&x.coeff, e);
        }
        out
    }

    /// Divides by `(x; q^step)_n`.
    pub fn div_poch(&self, x: &Monomial, step: usize, n: usize) -> Result<Series, SeriesError> {
        let mut out = self.clone();
        if x.is_zero() {
            return Ok(out);
        }
        for j in 0..n {
            let e = x.exp + step * j;
            if e > out.order() {
                break;
            }
            out.div_binomial_in_place(&x.coeff, e)?;
        }
        Ok(out)
    }

    /// Multiplies by `(x; q^step)_inf`.
    pub fn mul_poch_inf(&self, x: &Monomial, step: usize) -> Series {
        let n = inf_factor_count(x, step, self.order());
        self.mul_poch(x, step, n)
    }

    /// Divides by `(x; q^step)_inf`.
    pub fn div_poch_inf(&self, x: &Monomial, step: usize) -> Result<Series, SeriesError> {
        let n = inf_factor_count(x, step, self.order());
        self.div_poch(x, step, n)
    }
}

/// Number of factors of `(x; q^step)_inf` that are not `1 + O(q^(order+1))`.
fn inf_factor_count(x: &Monomial, step: usize, order: usize) -> usize {
    assert!(step >= 1, "q-Pochhammer step must be positive");
    if x.is_zero() {
        return 0;
    }
    if x.exp > order {
        return 0;
    }
    (order - x.exp) / step + 1
}

/// `(x; q^step)_n` for a monomial `x`.
pub fn poch(x: &Monomial, step: usize, n: usize, order: usize) -> Series {
    Series::one(order).mul_poch(x, step, n)
}

/// `(x; q^step)_inf` for a monomial `x`, exact to `order`.
pub fn poch_inf(x: &Monomial, step: usize, order: usize) -> Series {
    Series::one(order).mul_poch_inf(x, step)
}

/// `prod_{j<n} (1 - a q^{step*j})` for an arbitrary series `a`.
pub fn pochhammer(a: &Series, step: usize, n: usize) -> Series {
    assert!(step >= 1, "q-Pochhammer step must be positive");
    if let Some(m) = as_monomial(a) {
        return poch(&m, step, n, a.order());
    }
    let order = a.order();
    let one = Series::one(order);
    let mut acc = one.clone();
    for j in 0..n {
        let factor = &one - &a.shift(step * j);
        acc = &acc * &factor;
    }
    acc
}

/// `prod_{j>=0} (1 - a q^{step*j})`, cut once the factors are `1 + O(q^(order+1))`.
pub fn pochhammer_inf(a: &Series, step: usize, order: usize) -> Series {
    let a = a.truncate(order);
    let Some(v) = a.valuation() else {
        return Series::one(a.order());
    };
    pochhammer(&a, step, (a.order() - v) / step + 1)
}

fn as_monomial(a: &Series) -> Option<Monomial> {
    if a.support_len() > 1 {
        return None;
    }
    match a.valuation() {
        None => Some(Monomial::zero()),
        Some(e) => Some(Monomial::new(a.coeff(e).clone(), e)),
    }
}

/// Gaussian binomial `[top, k]` via the Pascal recurrence
/// `[N, k] = [N-1, k-1] + q^k [N-1, k]`; zero when `k > top`.
pub fn gaussian_binomial(top: usize, k: usize, order: usize) -> Series {
    if k > top {
        return Series::zero(order);
    }
    let mut table = GaussianTable::new(order);
    table.get(top, k).clone()
}

/// Rows of Gaussian binomials, built on demand by the Pascal recurrence.
#[derive(Clone, Debug)]
pub struct GaussianTable {
    order: usize,
    rows: Vec<Vec<Series>>,
    zero: Series,
}

impl GaussianTable {
    pub fn new(order: usize) -> Self {
        GaussianTable { order, rows: vec![vec![Series::one(order)]], zero: Series::zero(order) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `[top, k]`, extending the table as needed.
    pub fn get(&mut self, top: usize, k: usize) -> &Series {
        while self.rows.len() <= top {
            self.push_row();
        }
        if k > top {
            return &self.zero;
        }
        &self.rows[top][k]
    }

    fn push_row(&mut self) {
        let n = self.rows.len();
        let prev = &self.rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let series = if k == 0 || k == n {
                Series::one(self.order)
            } else {
                &prev[k - 1] + &prev[k].shift(k)
            };
            row.push(series);
        }
        self.rows.push(row);
    }
}

/// `prod_{j<k} (q^top - q^j)`, the polynomial form of `(q^-top)_k q^(top*k)`.
pub fn rising_power_product(top: usize, k: usize, order: usize) -> Series {
    let mut acc = Series::one(order);
    for j in 0..k {
        if j == top {
            return Series::zero(order);
        }
        let terms = [(top, Rational::one()), (j, -Rational::one())];
        acc = acc.mul_sparse(&terms);
    }
    acc
}

/// `1 / (1 - c q^m)`.
pub fn geometric_fraction(c: &Monomial, order: usize) -> Result<Series, SeriesError> {
    Series::one(order).div_binomial(&c.coeff, c.exp)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambertFlavor {
    /// `sum_{n>=1} q^n / (1 - q^n)`
    Minus,
    /// `sum_{n>=1} q^n / (1 + q^n)`
    Plus,
    /// `sum_{n>=1} q^(2n-1) / (1 + q^(2n-1))`
    OddPlus,
    /// `sum_{n>=start} q^n / (1 -+ q^n)`
    Custom { start: usize, plus: bool },
}

/// Lambert series expanded by divisor loops: `q^n/(1 - s q^n) = sum_j s^(j-1) q^(nj)`.
pub fn lambert_sum(flavor: LambertFlavor, order: usize) -> Series {
    let (start, stride, plus) = match flavor {
        LambertFlavor::Minus => (1, 1, false),
        LambertFlavor::Plus => (1, 1, true),
        LambertFlavor::OddPlus => (1, 2, true),
        LambertFlavor::Custom { start, plus } => (start.max(1), 1, plus),
    };
    let mut coeffs = vec![0i64; order + 1];
    let mut n = start;
    while n <= order {
        let mut sign = 1i64;
        let mut e = n;
        while e <= order {
            coeffs[e] += sign;
            if plus {
                sign = -sign;
            }
            e += n;
        }
        n += stride;
    }
    Series::from_ints(order, &coeffs).expect("length matches order")
}

/// Limits for [`sum_formal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumGuard {
    /// Nonzero terms in a row allowed to not raise the best valuation seen.
    pub stall_limit: usize,
    /// Terms in a row that vanish to the truncation order before stopping.
    pub zero_window: usize,
}

impl Default for SumGuard {
    fn default() -> Self {
        SumGuard { stall_limit: 50, zero_window: 8 }
    }
}

impl SumGuard {
    pub fn with_stall_limit(stall_limit: usize) -> Self {
        SumGuard { stall_limit, ..SumGuard::default() }
    }
}

/// `sum_{n>=start} term(n)` to `order`.
///
/// Terms are requested in increasing `n`, so the closure may carry running
/// products. Summation stops after `zero_window` consecutive terms vanish to
/// the truncation order. A run of `stall_limit` nonzero terms that never
/// beats the best valuation so far aborts with `NonConvergentSum`.
pub fn sum_formal<F>(order: usize, guard: SumGuard, start: usize, mut term: F) -> Result<Series, SeriesError>
where
    F: FnMut(usize) -> Result<Series, SeriesError>,
{
    let mut acc = Series::zero(order);
    let mut best: Option<usize> = None;
    let mut stalled = 0usize;
    let mut zeros = 0usize;
    let mut n = start;
    loop {
        let t = term(n)?;
        match t.truncate(order).valuation() {
            None => {
                zeros += 1;
                if zeros >= guard.zero_window {
                    return Ok(acc);
                }
            }
            Some(v) => {
                zeros = 0;
                acc.add_assign_ref(&t);
                if best.is_none_or(|b| v > b) {
                    best = Some(v);
                    stalled = 0;
                } else {
                    stalled += 1;
                    if stalled >= guard.stall_limit {
                        return Err(SeriesError::NonConvergentSum { stalled, index: n });
                    }
                }
            }
        }
        n += 1;
    }
}

/// Largest `n` with `n*(n+1)/2 <= order`, a convenient bound for sums
/// whose terms carry `q^(n(n+1)/2)`.
pub fn triangular_bound(order: usize) -> usize {
    let mut n = 0;
    while (n + 1) * (n + 2) / 2 <= order {
        n += 1;
    }
    n
}
