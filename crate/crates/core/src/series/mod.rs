//! Generating functions as exact truncated series.
//!
//! Grand knight's paths need the large kernel roots `u1`, `u2`, which are
//! Puiseux series in `z^(1/2)`; every computation therefore runs in
//! `w = z^(1/2)` and the final answers are checked to be even in `w`.
//! Kernel roots come from their explicit radical expressions and can be
//! certified by substituting them back into the kernel.
//!
//! Every public function takes `order`, the number of `z` coefficients
//! wanted. Intermediate work runs at a higher working precision that is
//! raised automatically until the result is determined to `order`.

mod laurent;
mod rational;

pub use laurent::{rational_sqrt, LaurentSeries};
pub use rational::RationalGF;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square root of a series with even valuation and a square leading coefficient.
pub fn sqrt_series(a: &LaurentSeries) -> Result<LaurentSeries> {
    a.sqrt()
}

/// Default number of `z` coefficients.
pub const DEFAULT_ORDER: usize = 64;

/// Truncated result types that the precision driver can check and trim.
pub trait Truncated: Sized {
    fn min_order(&self) -> i64;
    fn truncated(&self, order: i64) -> Self;
}

impl Truncated for LaurentSeries {
    fn min_order(&self) -> i64 {
        self.order()
    }
    fn truncated(&self, order: i64) -> Self {
        self.truncate(order)
    }
}

impl<A: Truncated, B: Truncated> Truncated for (A, B) {
    fn min_order(&self) -> i64 {
        self.0.min_order().min(self.1.min_order())
    }
    fn truncated(&self, order: i64) -> Self {
        (self.0.truncated(order), self.1.truncated(order))
    }
}

/// Runs `f` at increasing working precision (in `w`) until its result is
/// known through `z^(order-1)`.
fn solve<T: Truncated>(order: usize, f: impl Fn(&Ctx) -> Result<T>) -> Result<T> {
    let target = 2 * order as i64;
    let mut work = target + 24;
    let mut last_err = None;
    for _ in 0..12 {
        let ctx = Ctx { w: work };
        match f(&ctx) {
            Ok(v) if v.min_order() >= target => return Ok(v.truncated(target)),
            Ok(v) => {
                let lost = work - v.min_order();
                work = target + lost + 16;
                last_err = Some(Error::InsufficientPrecision {
                    known: v.min_order(),
                    needed: target,
                });
            }
            Err(e @ (Error::InsufficientPrecision { .. } | Error::DivisionByZero(_))) => {
                work *= 2;
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(Error::InsufficientPrecision {
        known: 0,
        needed: target,
    }))
}

/// Working precision for building polynomial inputs.
struct Ctx {
    w: i64,
}

impl Ctx {
    fn int(&self, c: i64) -> LaurentSeries {
        LaurentSeries::from_int(c, self.w)
    }

    fn z(&self, j: i64) -> LaurentSeries {
        LaurentSeries::z_monomial(1, j, self.w)
    }

    fn poly(&self, coeffs: &[i64]) -> LaurentSeries {
        LaurentSeries::from_z_poly(coeffs, self.w)
    }

    fn half(&self) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }
}

fn indicator(b: bool) -> i64 {
    i64::from(b)
}

// ---------------------------------------------------------------------------
// grand knight's paths

/// Grand-knight kernel `K(u) = u^2 - z u^4 - z - z^2 u - z^2 u^3`.
pub fn grand_kernel(u: &LaurentSeries) -> LaurentSeries {
    let ctx = Ctx {
        w: u.order() + 4 * u.valuation().abs() + 16,
    };
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u2 * &u2;
    &u2 - &(&ctx.z(1) * &u4) - ctx.z(1) - &ctx.z(2) * u - &ctx.z(2) * &u3
}

fn grand_roots_at(ctx: &Ctx) -> Result<(LaurentSeries, LaurentSeries)> {
    let radical = ctx.poly(&[0, 4, 8, 0, 1]).sqrt()?;
    let zr = radical.shift_z(1);
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let eighth = BigRational::new(BigInt::from(1), BigInt::from(8));
    let base = ctx.poly(&[2, -4, 0, 1]);
    // 1/(2 sqrt 2) * sqrt(X / z) = sqrt(X / (8 z))
    let inner1 = (&base - &zr).shift_z(-1).scale(&eighth).sqrt()?;
    let inner2 = (&base + &zr).shift_z(-1).scale(&eighth).sqrt()?;
    let z2 = ctx.z(2);
    let u1 = (&radical - &z2).shift_z(-1).scale(&quarter) + inner1;
    let u2 = (-(&z2 + &radical)).shift_z(-1).scale(&quarter) - inner2;
    Ok((u1, u2))
}

/// The two large roots `u1`, `u2` of the grand-knight kernel, as Laurent
/// series in `w`.
pub fn grand_kernel_roots(order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    check_order(order, 4)?;
    solve(order, grand_roots_at)
}

struct GrandBasis {
    u1: LaurentSeries,
    u2: LaurentSeries,
    h0: LaurentSeries,
    h1: LaurentSeries,
}

fn grand_basis_at(ctx: &Ctx) -> Result<GrandBasis> {
    let (u1, u2) = grand_roots_at(ctx)?;
    let prod = &u1 * &u2;
    let sum = &u1 + &u2;
    let one = ctx.int(1);
    let one_plus_prod = &one + &prod;
    let squares = &(&u1 * &u1) + &(&u2 * &u2);
    let tail = (&ctx.z(1).scale_int(2) * &(&one - &squares)).div(&prod)?;
    let den = &one_plus_prod - &(&ctx.z(2) * &sum).scale_int(2) - ctx.z(1).scale_int(2) + tail;
    let h0 = one_plus_prod.div(&den)?;
    let h1 = (&sum * &h0).div(&one_plus_prod)?;
    Ok(GrandBasis { u1, u2, h0, h1 })
}

/// `h0` (paths ending on the x-axis) and `h1` (altitude 1).
pub fn grand_h0_h1(order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    check_order(order, 4)?;
    let (h0, h1) = solve(order, |ctx| {
        let b = grand_basis_at(ctx)?;
        Ok((b.h0, b.h1))
    })?;
    h0.check_even()?;
    h1.check_even()?;
    Ok((h0, h1))
}

/// Grand knight's paths of altitude `k` (either sign), by size.
pub fn grand_altitude_gf(k: i64, order: usize) -> Result<LaurentSeries> {
    let k = k.abs();
    let s = solve(order, |ctx| {
        let b = grand_basis_at(ctx)?;
        let a = &(&b.h0 * &b.u1) - &b.h1;
        let c = &(&b.h0 * &b.u2) - &b.h1;
        let num = &a * &b.u2.pow(-k)? - &c * &b.u1.pow(-k)?;
        num.div(&(&b.u1 - &b.u2))
    })?;
    s.check_even()?;
    Ok(s)
}

/// `(H(1), dH/du at u = 1)`: totals `t_n` and altitude sums `s_n` over paths
/// ending at a non-negative altitude.
pub fn grand_totals(order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    check_order(order, 4)?;
    let (t, s) = solve(order, |ctx| {
        let b = grand_basis_at(ctx)?;
        let one = ctx.int(1);
        let prod = &b.u1 * &b.u2;
        let a1 = &one - &b.u1;
        let a2 = &one - &b.u2;
        let den = &a1 * &a2;
        let total = (&(&b.h0 * &prod) - &b.h1).div(&den)?;
        let h0u2 = &b.h0 * &b.u2;
        let inner = &h0u2 - &b.h0.scale_int(2) - &b.h1;
        let num = &(&(&b.h0 * &b.u1) * &prod) + &(&prod * &inner) + b.h1.clone();
        let sum = num.div(&(&den * &den))?;
        Ok((total, sum))
    })?;
    t.check_even()?;
    s.check_even()?;
    Ok((t, s))
}

/// `1 / (1 - 2z - 2z^2)`: all grand knight's paths by size.
pub fn grand_all_gf() -> RationalGF {
    RationalGF::new(&[1], &[1, -2, -2]).expect("valid denominator")
}

// ---------------------------------------------------------------------------
// grand zigzag knight's paths

/// `(1 + z + z^2) / (1 - z - z^2)`.
pub fn zigzag_rational_gf() -> RationalGF {
    RationalGF::new(&[1, 1, 1], &[1, -1, -1]).expect("valid denominator")
}

/// All grand zigzag knight's paths by size, for `n < order`.
pub fn zigzag_rational(order: usize) -> Vec<BigUint> {
    zigzag_rational_gf()
        .expand_counts(order)
        .expect("coefficients are positive integers")
}

/// Zigzag kernel `u^2 z^3 + u z^4 + z^2 u + z^3 - u`.
pub fn zigzag_kernel(u: &LaurentSeries) -> LaurentSeries {
    let ctx = Ctx {
        w: u.order() + 4 * u.valuation().abs() + 16,
    };
    let u2 = u * u;
    &(&u2 * &ctx.z(3)) + &(u * &ctx.z(4)) + &(u * &ctx.z(2)) + ctx.z(3) - u.clone()
}

fn zigzag_roots_at(ctx: &Ctx) -> Result<(LaurentSeries, LaurentSeries)> {
    let disc = ctx.poly(&[1, 0, -2, 0, -1, 0, -2, 0, 1]).sqrt()?;
    let base = ctx.poly(&[1, 0, -1, 0, -1]);
    let half = ctx.half();
    let r = (&base - &disc).div_z_pow_exact(3)?.scale(&half);
    let s = (&base + &disc).shift_z(-3).scale(&half);
    Ok((r, s))
}

/// Roots `r` (small, valuation 3 in z) and `s` (large, valuation -3 in z) of
/// the zigzag kernel.
pub fn zigzag_kernel_roots(order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    check_order(order, 6)?;
    solve(order, zigzag_roots_at)
}

struct ZigzagBasis {
    r: LaurentSeries,
    s: LaurentSeries,
    f0: LaurentSeries,
}

fn zigzag_basis_at(ctx: &Ctx) -> Result<ZigzagBasis> {
    let (r, s) = zigzag_roots_at(ctx)?;
    let z = ctx.z(1);
    let num = &r * &(&z - &ctx.int(1));
    let den = (&(&r * &ctx.z(2)) + &z - ctx.int(1)).shift_z(3);
    let f0 = num.div(&den)?;
    Ok(ZigzagBasis { r, s, f0 })
}

/// `f0`: zigzag paths ending on the x-axis with an up-step, plus the empty path.
pub fn zigzag_f0(order: usize) -> Result<LaurentSeries> {
    check_order(order, 6)?;
    let f0 = solve(order, |ctx| Ok(zigzag_basis_at(ctx)?.f0))?;
    f0.check_even()?;
    Ok(f0)
}

/// Grand zigzag knight's paths of altitude `k` (either sign), by size.
pub fn zigzag_altitude_gf(k: i64, order: usize) -> Result<LaurentSeries> {
    let k = k.abs();
    let s = solve(order, |ctx| {
        let b = zigzag_basis_at(ctx)?;
        let z = ctx.z(1);
        let two_f0 = b.f0.scale_int(2);
        match k {
            0 => Ok(&two_f0 - &ctx.int(1)),
            1 => {
                let num = &b.r + &z + (&two_f0 * &ctx.z(2));
                num.div(&b.s.shift_z(2))
            }
            _ => {
                let inner = &ctx.int(1) + &(&b.r * &(&b.r + &z)) + (&(&two_f0 * &b.r) * &ctx.z(2));
                Ok((&b.r.pow(k - 1)? * &inner).shift_z(-2))
            }
        }
    })?;
    s.check_even()?;
    Ok(s)
}

/// Zigzag paths ending at a non-negative altitude, by size.
pub fn zigzag_nonneg_total(order: usize) -> Result<LaurentSeries> {
    check_order(order, 6)?;
    let s = solve(order, |ctx| {
        let b = zigzag_basis_at(ctx)?;
        let z = ctx.z(1);
        let z2 = ctx.z(2);
        let gamma = &b.f0.scale_int(2) - &ctx.int(1);
        let num = &ctx.int(1) + &b.r + z.clone() + z2.clone() + (&(&z2 * &b.s) * &gamma);
        let den = &z2 * &(&ctx.int(1) - &b.s);
        Ok(-num.div(&den)?)
    })?;
    s.check_even()?;
    Ok(s)
}

/// Zigzag paths ending on the x-axis and touching it only at their endpoints.
pub fn zigzag_primitive_gf(order: usize) -> Result<LaurentSeries> {
    check_order(order, 6)?;
    let s = solve(order, |ctx| {
        let b = zigzag_basis_at(ctx)?;
        let r = &b.r;
        let num = &(r * &ctx.z(5)).scale_int(2) + &ctx.poly(&[0, 0, 0, -2, 2])
            - (r * &ctx.z(1)).scale_int(3)
            + r.scale_int(3);
        let den = r * &ctx.poly(&[1, -1]);
        num.div(&den)
    })?;
    s.check_even()?;
    Ok(s)
}

/// Zigzag paths staying on or above `y = -m`: `(H(1), f_{-m+1})`.
pub fn above_line_gf(m: u32, order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    if m < 1 {
        return Err(Error::InvalidParameter("above_line_gf needs m >= 1".into()));
    }
    check_order(order, 1)?;
    let m = i64::from(m);
    let (h, f) = solve(order, |ctx| {
        let b = zigzag_basis_at(ctx)?;
        let r = &b.r;
        let z = ctx.z(1);
        let rm1 = r.pow(m - 1)?;
        let rm = r.pow(m)?;
        let rm_plus = r.pow(m + 1)?;
        let num = &(&z * &rm1) + &(&ctx.z(2) * &rm) + rm_plus.clone() - ctx.poly(&[1, 1, 1]);
        let h = num.div(&ctx.poly(&[-1, 1, 1]))?;
        let f = &(&(&ctx.int(1) + &(&z * r)) * &rm1) + &rm_plus.shift_z(-1);
        Ok((h, f))
    })?;
    h.check_even()?;
    f.check_even()?;
    Ok((h, f))
}

/// Zigzag paths staying in the symmetric tube `[-m, m]`: `(H(1), f_{-m+1})`.
pub fn sym_tube_gf(m: u32, order: usize) -> Result<(LaurentSeries, LaurentSeries)> {
    if m < 1 {
        return Err(Error::InvalidParameter("sym_tube_gf needs m >= 1".into()));
    }
    check_order(order, 1)?;
    let m = i64::from(m);
    let (h, f) = solve(order, |ctx| {
        let b = zigzag_basis_at(ctx)?;
        let r = &b.r;
        let z = ctx.z(1);
        let r2 = r * r;
        let inner = &ctx.int(1) + &(r * &ctx.z(2)) + (&r2 * &z);
        let num = &r.pow(m)? * &inner;
        let den = (&(r * &z) + &ctx.z(2) + r.pow(2 * m + 1)?).shift_z(1);
        let f = num.div(&den)?;
        let top = &f.scale_int(2) * &z - ctx.poly(&[1, 1, 1]);
        let h = top.div(&ctx.poly(&[-1, 1, 1]))?;
        Ok((h, f))
    })?;
    h.check_even()?;
    f.check_even()?;
    Ok((h, f))
}

/// Series attached to the tube `[-m, M]`.
#[derive(Debug, Clone)]
pub struct TubeSeries {
    pub m: u32,
    pub big_m: u32,
    /// All paths staying in the tube.
    pub total: LaurentSeries,
    /// `f_{-m+1}`.
    pub f_bottom: LaurentSeries,
    /// `f_M`.
    pub f_top: LaurentSeries,
}

impl TubeSeries {
    /// Paths in `[0, M]` ending on the x-axis, `f_1 / z^2`. Only defined for `m = 0`.
    pub fn axis_return(&self) -> Result<LaurentSeries> {
        if self.m != 0 {
            return Err(Error::InvalidParameter(format!(
                "H(0) is only available for m = 0, got m = {}",
                self.m
            )));
        }
        let h0 = self.f_bottom.shift_z(-2);
        let h0 = h0.truncate(h0.order().min(self.total.order()));
        h0.check_even()?;
        Ok(h0)
    }
}

fn general_tube_at(ctx: &Ctx, m: i64, big_m: i64) -> Result<(LaurentSeries, LaurentSeries, LaurentSeries)> {
    let b = zigzag_basis_at(ctx)?;
    let (r, s) = (&b.r, &b.s);
    let d0 = indicator(m == 0);
    let z = ctx.z(1);
    let z2 = ctx.z(2);
    let one = ctx.int(1);
    let one_sz = &one + &(s * &z);
    let one_rz = &one + &(r * &z);
    let z_plus_r = &z + r;
    let span = m + big_m;

    // f_{-m+1}
    let s_poly = &one + &(s * &z2) + (&(s * s) * &z);
    let r_poly = &one + &(r * &z2) + (&(r * r) * &z);
    let first = &(&ctx.int(d0) - &(&s.pow(m)? * &s_poly)) * &r.pow(span + 2)?;
    let second_inner = &(&r.pow(m + 1)? * &r_poly) - &(&(&z2 * &z_plus_r) * &one_rz).scale_int(d0);
    let second = &s.pow(span + 1)? * &second_inner;
    let bottom_num = &one_sz * &(&first + &second);
    let bottom_den = &(&(&s.pow(span)? * &z2) * &(r + &(&z * &(&ctx.int(2) + &(s * &z))))) - &r.pow(span + 1)?;
    let f_bottom = bottom_num.div(&bottom_den)?;

    // f_M
    let s_cubic = &one + &(&(s * s) * &z) + (s * &z2);
    let tail = &(&(&s.pow(m - 1)? * &one_sz) * &s_cubic) - &(r - s).scale_int(d0);
    let top_num = &r.pow(m)? + &(&(&z * &z_plus_r) * &(&r.pow(m + 1)? - &(&z * &tail)));
    let top_den_inner = &(&(&(&z2 * &(r + &z)) * &one_sz) * &s.pow(span)?) - &r.pow(span + 1)?;
    let f_top = -top_num.div(&top_den_inner.shift_z(3))?;

    // H(1)
    let lead = &(&(&f_bottom + &(&z2 * &f_top)) - &one) * &z;
    let num = &lead + &(&z * &ctx.poly(&[1, 1])).scale_int(d0) - ctx.poly(&[1, 0, 1]);
    let total = num.div(&ctx.poly(&[-1, 1, 1]))?;
    Ok((total, f_bottom, f_top))
}

/// Zigzag paths staying in the tube `[-m, M]`, `M >= m >= 0`, `M >= 1`.
pub fn general_tube_gf(m: u32, big_m: u32, order: usize) -> Result<TubeSeries> {
    if big_m < m || big_m < 1 {
        return Err(Error::InvalidParameter(format!(
            "general tube needs M >= m >= 0 and M >= 1, got m = {m}, M = {big_m}"
        )));
    }
    check_order(order, 1)?;
    let (mi, bi) = (i64::from(m), i64::from(big_m));
    // f_1 / z^2 needs two extra coefficients of f_1 when m = 0
    let extra = if m == 0 { 2 } else { 0 };
    let (total, (f_bottom, f_top)) = solve(order + extra, |ctx| {
        let (t, b, f) = general_tube_at(ctx, mi, bi)?;
        Ok((t, (b, f)))
    })?;
    let target = 2 * order as i64;
    let (total, f_top) = (total.truncate(target), f_top.truncate(target));
    total.check_even()?;
    Ok(TubeSeries {
        m,
        big_m,
        total,
        f_bottom,
        f_top,
    })
}

/// `H_{m,M}` for any band `[-m, M]`, using the reflection `H_{m,M} = H_{M,m}`
/// and `H_{0,0} = 1` (only the empty path keeps `y = 0`).
pub fn tube_total(m: u32, big_m: u32, order: usize) -> Result<LaurentSeries> {
    let (lo, hi) = if m <= big_m { (m, big_m) } else { (big_m, m) };
    if hi == 0 {
        return Ok(LaurentSeries::from_int(1, 2 * order as i64));
    }
    Ok(general_tube_gf(lo, hi, order)?.total)
}

/// Zigzag paths whose highest and lowest visited y-coordinates differ by
/// exactly `k`.
///
/// Sums, over the position `m` of the lower line, the paths that touch both
/// `y = -m` and `y = k - m`; each of those is an inclusion-exclusion of four
/// tube totals. Reflection pairs `m` with `k - m`.
pub fn span_exact_gf(k: u32, order: usize) -> Result<LaurentSeries> {
    if k < 1 {
        return Err(Error::InvalidParameter("span_exact_gf needs k >= 1".into()));
    }
    let h = |m: i64, big_m: i64| -> Result<LaurentSeries> {
        if m < 0 || big_m < 0 {
            Ok(LaurentSeries::zero(2 * order as i64))
        } else {
            tube_total(m as u32, big_m as u32, order)
        }
    };
    let touching = |m: i64, big_m: i64| -> Result<LaurentSeries> {
        Ok(&(&h(m, big_m)? - &h(m - 1, big_m)?) - &(&h(m, big_m - 1)? - &h(m - 1, big_m - 1)?))
    };
    let k = i64::from(k);
    let mut acc = LaurentSeries::zero(2 * order as i64);
    for m in 0..=k / 2 {
        let t = touching(m, k - m)?;
        acc = if 2 * m == k { acc + t } else { acc + t.scale_int(2) };
    }
    acc.check_even()?;
    Ok(acc)
}

/// `(1 - z + z^4) / (1 - z - z^4)`: paths in the tube `[-1, 1]` ending on
/// the x-axis.
pub fn tube1_axis_gf() -> RationalGF {
    RationalGF::new(&[1, -1, 0, 0, 1], &[1, -1, 0, 0, -1]).expect("valid denominator")
}

fn check_order(order: usize, min: usize) -> Result<()> {
    if order < min {
        return Err(Error::InvalidParameter(format!(
            "order {order} is below the minimum {min}"
        )));
    }
    Ok(())
}

/// Coefficient stream in the export format `{"name", "order", "coeffs"}`,
/// with big integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientExport {
    pub name: String,
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl CoefficientExport {
    pub fn new<T: ToString>(name: &str, coeffs: &[T]) -> CoefficientExport {
        CoefficientExport {
            name: name.to_string(),
            order: coeffs.len(),
            coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("export serialization cannot fail")
    }

    /// `n,coefficient` lines, optionally preceded by a header.
    pub fn to_csv(&self, header: bool) -> String {
        let mut out = String::new();
        if header {
            out.push_str("n,coefficient\n");
        }
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }
}
