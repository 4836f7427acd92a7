//! Truncated Laurent series in `w`, where `w * w = z`, with exact rational
//! coefficients and explicit precision bookkeeping.
//!
//! A series stores its valuation `v`, the coefficients of `w^v .. w^(order-1)`
//! and the exclusive truncation `order`. Every operation derives the order of
//! its result from the orders and valuations of its inputs, so a coefficient
//! is only ever reported when it is actually determined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<BigRational>,
    order: i64,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl LaurentSeries {
    /// Builds `sum coeffs[j] w^(valuation + j)` known up to `w^order` (exclusive).
    pub fn new(valuation: i64, mut coeffs: Vec<BigRational>, order: i64) -> LaurentSeries {
        let keep = (order - valuation).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = LaurentSeries {
            valuation,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    pub fn zero(order: i64) -> LaurentSeries {
        LaurentSeries {
            valuation: order,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn constant(c: BigRational, order: i64) -> LaurentSeries {
        LaurentSeries::new(0, vec![c], order)
    }

    pub fn from_int(c: i64, order: i64) -> LaurentSeries {
        LaurentSeries::constant(rat(c), order)
    }

    /// `c * z^j`, i.e. `c * w^(2j)`.
    pub fn z_monomial(c: i64, j: i64, order: i64) -> LaurentSeries {
        LaurentSeries::new(2 * j, vec![rat(c)], order)
    }

    /// Integer polynomial in `z`, lowest degree first.
    pub fn from_z_poly(coeffs: &[i64], order: i64) -> LaurentSeries {
        let mut w = vec![BigRational::zero(); 2 * coeffs.len()];
        for (j, &c) in coeffs.iter().enumerate() {
            w[2 * j] = rat(c);
        }
        LaurentSeries::new(0, w, order)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.valuation = self.order;
            self.coeffs.clear();
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
    }

    /// Index of the first nonzero coefficient, or `order` for a series that
    /// vanishes to its known precision.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Coefficient of `w^e`, or `None` when `e` is at or beyond the order.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.order {
            return None;
        }
        if e < self.valuation {
            return Some(BigRational::zero());
        }
        Some(
            self.coeffs
                .get((e - self.valuation) as usize)
                .cloned()
                .unwrap_or_else(BigRational::zero),
        )
    }

    fn c(&self, e: i64) -> &BigRational {
        &self.coeffs[(e - self.valuation) as usize]
    }

    pub fn truncate(&self, order: i64) -> LaurentSeries {
        let order = order.min(self.order);
        LaurentSeries::new(self.valuation, self.coeffs.clone(), order)
    }

    /// Multiplies by `w^j`; exact.
    pub fn shift_w(&self, j: i64) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation + j,
            coeffs: self.coeffs.clone(),
            order: self.order + j,
        }
    }

    pub fn shift_z(&self, j: i64) -> LaurentSeries {
        self.shift_w(2 * j)
    }

    /// Divides by `z^j` after checking that every coefficient below `z^j`
    /// cancels exactly.
    pub fn div_z_pow_exact(&self, j: i64) -> Result<LaurentSeries> {
        let need = 2 * j;
        if self.order < need {
            return Err(Error::InsufficientPrecision {
                known: self.order,
                needed: need,
            });
        }
        if self.valuation < need {
            return Err(Error::InvalidParameter(format!(
                "numerator does not cancel below z^{j}: nonzero w^{} term",
                self.valuation
            )));
        }
        Ok(self.shift_w(-need))
    }

    pub fn scale(&self, c: &BigRational) -> LaurentSeries {
        if c.is_zero() {
            return LaurentSeries::zero(self.order);
        }
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    pub fn scale_int(&self, c: i64) -> LaurentSeries {
        self.scale(&rat(c))
    }

    fn add_impl(&self, other: &LaurentSeries, negate: bool) -> LaurentSeries {
        let order = self.order.min(other.order);
        let v = self.valuation.min(other.valuation).min(order);
        let len = (order - v).max(0) as usize;
        let mut out = vec![BigRational::zero(); len];
        for (j, slot) in out.iter_mut().enumerate() {
            let e = v + j as i64;
            if e >= self.valuation && ((e - self.valuation) as usize) < self.coeffs.len() {
                *slot += self.c(e);
            }
            if e >= other.valuation && ((e - other.valuation) as usize) < other.coeffs.len() {
                if negate {
                    *slot -= other.c(e);
                } else {
                    *slot += other.c(e);
                }
            }
        }
        LaurentSeries::new(v, out, order)
    }

    fn mul_impl(&self, other: &LaurentSeries) -> LaurentSeries {
        let v = self.valuation + other.valuation;
        let order = (self.order + other.valuation).min(other.order + self.valuation);
        let len = (order - v).max(0) as usize;
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        LaurentSeries::new(v, out, order)
    }

    /// Inverse of the unit part `coeffs` to `len` terms.
    fn unit_inverse(coeffs: &[BigRational], len: usize) -> Vec<BigRational> {
        let inv0 = coeffs[0].recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        if len == 0 {
            return out;
        }
        out.push(inv0.clone());
        for k in 1..len {
            let mut acc = BigRational::zero();
            for j in 1..=k.min(coeffs.len() - 1) {
                if coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc += &coeffs[j] * &out[k - j];
            }
            out.push(-(acc * &inv0));
        }
        out
    }

    pub fn inverse(&self) -> Result<LaurentSeries> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.order));
        }
        let rel = (self.order - self.valuation) as usize;
        let inv = LaurentSeries::unit_inverse(&self.coeffs, rel);
        Ok(LaurentSeries::new(
            -self.valuation,
            inv,
            -self.valuation + rel as i64,
        ))
    }

    pub fn div(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        if other.is_zero() {
            return Err(Error::DivisionByZero(other.order));
        }
        let v = self.valuation - other.valuation;
        let rel = (self.order - self.valuation).min(other.order - other.valuation);
        let order = v + rel.max(0);
        if self.is_zero() {
            return Ok(LaurentSeries::zero(self.order - other.valuation));
        }
        let len = rel.max(0) as usize;
        let inv = LaurentSeries::unit_inverse(&other.coeffs, len);
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inv.iter().enumerate().take(len - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Ok(LaurentSeries::new(v, out, order))
    }

    pub fn pow(&self, k: i64) -> Result<LaurentSeries> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let rel = self.order - self.valuation;
        let mut result = LaurentSeries::from_int(1, rel.max(0));
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Square root by Newton iteration `b <- (b + a/b) / 2`, doubling the
    /// number of correct terms each round.
    pub fn sqrt(&self) -> Result<LaurentSeries> {
        if self.is_zero() {
            return Ok(LaurentSeries::zero(self.order.div_euclid(2)));
        }
        if self.valuation % 2 != 0 {
            return Err(Error::OddValuation(self.valuation));
        }
        let lead = self.coeffs[0].clone();
        let root = rational_sqrt(&lead).ok_or_else(|| Error::NonSquareLeading(lead.to_string()))?;
        let rel = self.order - self.valuation;
        // unit part u = a / (lead * w^v), u_0 = 1
        let inv_lead = lead.recip();
        let unit = LaurentSeries::new(
            0,
            self.coeffs.iter().map(|c| c * &inv_lead).collect(),
            rel,
        );
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut y = LaurentSeries::from_int(1, 1);
        let mut prec = 1;
        while prec < rel {
            prec = (2 * prec).min(rel);
            let u = unit.truncate(prec);
            let y_ext = LaurentSeries::new(y.valuation, y.coeffs.clone(), prec);
            let q = u.div(&y_ext)?;
            y = (&y_ext + &q).scale(&half).truncate(prec);
        }
        let y = LaurentSeries::new(y.valuation, y.coeffs, rel);
        Ok(y.scale(&root).shift_w(self.valuation / 2))
    }

    /// Checks that every known odd power of `w` has a zero coefficient.
    pub fn check_even(&self) -> Result<()> {
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.valuation + j as i64;
            if e.rem_euclid(2) == 1 && !c.is_zero() {
                return Err(Error::OddTerm(e));
            }
        }
        Ok(())
    }

    /// True when every coefficient of an odd power of `w` is zero.
    pub fn is_even(&self) -> bool {
        self.check_even().is_ok()
    }

    /// Number of `z` coefficients `z^0, z^1, ...` that are determined.
    pub fn z_order(&self) -> usize {
        (self.order.max(0) as usize).div_ceil(2)
    }

    /// `[z^0 .. z^(count-1)]` after asserting the series is a power series in `z`.
    pub fn z_coeffs(&self, count: usize) -> Result<Vec<BigRational>> {
        self.check_even()?;
        let needed = 2 * count as i64 - 1;
        if count > 0 && self.order < needed {
            return Err(Error::InsufficientPrecision {
                known: self.order,
                needed,
            });
        }
        if self.valuation < 0 {
            return Err(Error::InvalidParameter(format!(
                "series has negative valuation w^{}",
                self.valuation
            )));
        }
        Ok((0..count as i64)
            .map(|j| self.coeff(2 * j).unwrap_or_else(BigRational::zero))
            .collect())
    }

    /// Coefficients as exact non-negative integers.
    pub fn z_counts(&self, count: usize) -> Result<Vec<BigUint>> {
        self.z_coeffs(count)?
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() && !c.is_negative() {
                    Ok(c.to_integer().to_biguint().expect("non-negative"))
                } else {
                    Err(Error::NotACount {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Coefficients as exact signed integers.
    pub fn z_integers(&self, count: usize) -> Result<Vec<BigInt>> {
        self.z_coeffs(count)?
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotACount {
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }
}

/// Exact square root of a non-negative rational square, if it is one.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer();
    let den = q.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                let f: fn(&LaurentSeries, &LaurentSeries) -> LaurentSeries = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.valuation + j as i64;
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*w^{e}")?;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(w^{})", self.order)
    }
}
