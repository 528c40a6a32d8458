//! Truncated formal power series in `q` over exact rationals.
//!
//! A [`Series`] of order `N` stores exactly the coefficients of `q^0..=q^N`.
//! Binary operations yield the smaller of the two orders; nothing is ever
//! extended past what was computed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(r: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = r;
        s
    }

    /// `r * q^exp`, which is the zero series when `exp > order`.
    pub fn monomial(r: Rational, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = r;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero.
    pub fn make(order: usize, coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.len() > order + 1 {
            return Err(SeriesError::Arity { order, given: coeffs.len() });
        }
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, Rational::zero());
        Ok(Series { coeffs })
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Result<Self, SeriesError> {
        Self::make(order, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^k`. Panics if `k` lies beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k <= self.order(), "coefficient q^{k} lies beyond truncation order {}", self.order());
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Least exponent with a nonzero coefficient; `None` when every tracked
    /// coefficient vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Drops coefficients above `order` (no-op if already at or below it).
    pub fn truncate(&self, order: usize) -> Series {
        let order = order.min(self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, r: &Rational) -> Series {
        if r.is_zero() {
            return Series::zero(self.order());
        }
        Series { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplies by `q^m`.
    pub fn shift(&self, m: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for k in m..=order {
            out.coeffs[k] = self.coeffs[k - m].clone();
        }
        out
    }

    /// Multiplies by `r * q^m`.
    pub fn mul_monomial(&self, r: &Rational, m: usize) -> Series {
        self.shift(m).scale(r)
    }

    /// Multiplies by a sparse polynomial given as `(exponent, coefficient)` terms.
    pub fn mul_sparse(&self, terms: &[(usize, Rational)]) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for (e, c) in terms {
            if c.is_zero() || *e > order {
                continue;
            }
            for k in *e..=order {
                let a = &self.coeffs[k - e];
                if !a.is_zero() {
                    out.coeffs[k] += a * c;
                }
            }
        }
        out
    }

    /// Multiplies by `1 - c q^m`.
    pub fn mul_binomial(&self, c: &Rational, m: usize) -> Series {
        let mut out = self.clone();
        out.mul_binomial_in_place(c, m);
        out
    }

    pub(crate) fn mul_binomial_in_place(&mut self, c: &Rational, m: usize) {
        if c.is_zero() {
            return;
        }
        let order = self.order();
        if m == 0 {
            let f = Rational::one() - c;
            for x in &mut self.coeffs {
                *x *= &f;
            }
            return;
        }
        // descending so each read sees the untouched input
        for k in (m..=order).rev() {
            if !self.coeffs[k - m].is_zero() {
                let d = &self.coeffs[k - m] * c;
                self.coeffs[k] -= d;
            }
        }
    }

    /// Divides by `1 - c q^m`.
    pub fn div_binomial(&self, c: &Rational, m: usize) -> Result<Series, SeriesError> {
        let mut out = self.clone();
        out.div_binomial_in_place(c, m)?;
        Ok(out)
    }

    pub(crate) fn div_binomial_in_place(&mut self, c: &Rational, m: usize) -> Result<(), SeriesError> {
        if c.is_zero() {
            return Ok(());
        }
        let order = self.order();
        if m == 0 {
            let f = Rational::one() - c;
            if f.is_zero() {
                return Err(SeriesError::Pole(format!("1 - {}*q^0 vanishes", format_rational(c))));
            }
            let inv = f.recip();
            for x in &mut self.coeffs {
                *x *= &inv;
            }
            return Ok(());
        }
        // ascending: y_k = x_k + c * y_{k-m}
        for k in m..=order {
            if !self.coeffs[k - m].is_zero() {
                let d = &self.coeffs[k - m] * c;
                self.coeffs[k] += d;
            }
        }
        Ok(())
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        Series::one(self.order()).div(self)
    }

    /// `self / other` by long division; `other` must be a unit.
    pub fn div(&self, other: &Series) -> Result<Series, SeriesError> {
        let order = self.order().min(other.order());
        let a0 = &other.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NotAUnit);
        }
        let inv0 = a0.recip();
        let support: Vec<usize> = (1..=order).filter(|&k| !other.coeffs[k].is_zero()).collect();
        let mut out = Series::zero(order);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for &k in &support {
                if k > n {
                    break;
                }
                let y = &out.coeffs[n - k];
                if !y.is_zero() {
                    acc -= &other.coeffs[k] * y;
                }
            }
            out.coeffs[n] = acc * &inv0;
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `x -> r q^m` into `sum_j s_j x^j`.
    ///
    /// The result tracks `order` coefficients when the input has enough of
    /// them; otherwise it is cut at the last exponent the input determines.
    pub fn eval_at_monomial(&self, r: &Rational, m: usize, order: usize) -> Result<Series, SeriesError> {
        if m == 0 {
            return Err(SeriesError::Substitution);
        }
        let known = m * (self.order() + 1) - 1;
        let order = order.min(known);
        let mut out = Series::zero(order);
        let mut rj = Rational::one();
        for j in 0..=self.order() {
            if m * j > order {
                break;
            }
            if !self.coeffs[j].is_zero() {
                out.coeffs[m * j] = &self.coeffs[j] * &rj;
            }
            rj *= r;
        }
        Ok(out)
    }

    /// First exponent where the two series differ, with both coefficients,
    /// compared up to the smaller order.
    pub fn first_difference(&self, other: &Series) -> Option<(usize, Rational, Rational)> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Series) {
        let order = self.order().min(other.order());
        self.coeffs.truncate(order + 1);
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    pub(crate) fn sub_assign_ref(&mut self, other: &Series) {
        let order = self.order().min(other.order());
        self.coeffs.truncate(order + 1);
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }

    fn convolve(a: &Series, b: &Series) -> Series {
        let order = a.order().min(b.order());
        // walk the sparser operand in the outer loop
        let (outer, inner) = if a.support_len() <= b.support_len() { (a, b) } else { (b, a) };
        let mut out = Series::zero(order);
        for (i, x) in outer.coeffs.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let y = &inner.coeffs[j];
                if !y.is_zero() {
                    out.coeffs[i + j] += x * y;
                }
            }
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::convolve(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Series> for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series {
                (&self).$m(rhs)
            }
        }
        impl $tr<Series> for &Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(order: usize, c: &[i64]) -> Series {
        Series::from_ints(order, c).unwrap()
    }

    #[test]
    fn make_pads_and_checks_arity() {
        assert_eq!(ints(3, &[1]).coeffs(), ints(3, &[1, 0, 0, 0]).coeffs());
        let q = ints(2, &[0, 1]);
        assert_eq!(q.valuation(), Some(1));
        assert_eq!(
            Series::from_ints(1, &[1, 1, 1]),
            Err(SeriesError::Arity { order: 1, given: 3 })
        );
    }

    #[test]
    fn ring_operations() {
        let p = ints(3, &[1, 1]);
        let m = ints(3, &[1, -1]);
        assert_eq!(&p * &m, ints(3, &[1, 0, -1]));
        let q = ints(3, &[0, 1]);
        assert_eq!(q.scale(&rat(1, 2)).coeff(1), &rat(1, 2));
        let short = ints(2, &[1, 1]);
        let long = ints(5, &[1, 1]);
        assert_eq!((&short * &long).order(), 2);
        assert_eq!((&short + &long).order(), 2);
        assert_eq!(-&q, ints(3, &[0, -1]));
    }

    #[test]
    fn inversion() {
        let g = ints(3, &[1, -1]).invert().unwrap();
        assert_eq!(g, ints(3, &[1, 1, 1, 1]));
        assert_eq!(ints(3, &[0, 1]).invert(), Err(SeriesError::NotAUnit));
        // (1+q)(1+q^2) = 1 + q + q^2 + q^3; its inverse multiplied back is 1
        let f = ints(5, &[1, 1, 1, 1]);
        let inv = f.invert().unwrap();
        assert_eq!(inv, ints(5, &[1, -1, 0, 0, 1, -1]));
        assert_eq!(&f * &inv, Series::one(5));
    }

    #[test]
    fn binomial_factors_match_general_ops() {
        let s = ints(8, &[3, -1, 4, 1, -5, 9, 2, -6, 5]);
        let c = rat(-2, 3);
        let factor = Series::make(8, vec![int(1), int(0), -c.clone()]).unwrap();
        assert_eq!(s.mul_binomial(&c, 2), &s * &factor);
        assert_eq!(s.div_binomial(&c, 2).unwrap(), s.div(&factor).unwrap());
        assert_eq!(s.mul_binomial(&c, 0), s.scale(&(int(1) - &c)));
        assert!(s.div_binomial(&int(1), 0).is_err());
    }

    #[test]
    fn substitution() {
        let geo = ints(10, &[1; 11]);
        let at_q2 = geo.eval_at_monomial(&int(1), 2, 10).unwrap();
        assert_eq!(at_q2, ints(10, &[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]));
        let x = ints(3, &[0, 1]);
        assert_eq!(x.eval_at_monomial(&rat(3, 2), 1, 3).unwrap().coeff(1), &rat(3, 2));
        assert_eq!(x.eval_at_monomial(&int(1), 0, 3), Err(SeriesError::Substitution));
        // only 3 input coefficients: with m = 2 we know q^0..q^5
        let short = ints(2, &[1, 1, 1]);
        assert_eq!(short.eval_at_monomial(&int(1), 2, 10).unwrap().order(), 5);
    }

    #[test]
    fn first_difference_reports_position() {
        let a = ints(4, &[1, 2, 3]);
        let b = ints(4, &[1, 2, 4]);
        assert_eq!(a.first_difference(&b), Some((2, int(3), int(4))));
        assert_eq!(a.first_difference(&a), None);
    }
}
