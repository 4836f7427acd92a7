//! Dispatch of counting and series requests to the library engines.

use std::fmt;
use std::str::FromStr;

use knightpaths::closedform::{zigzag_count_closed, zigzag_step_count};
use knightpaths::enumerate::{count, AltitudeFilter, CountQuery};
use knightpaths::series::{self, LaurentSeries};
use knightpaths::{Direction, PathConstraints};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{CliError, CliResult};

/// Environment variable overriding the default truncation order.
pub const ORDER_ENV: &str = "KNIGHTPATHS_ORDER";

pub fn default_order() -> CliResult<usize> {
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ORDER_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(series::DEFAULT_ORDER),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    Dp,
    Gf,
    Closed,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Dp, Engine::Gf, Engine::Closed];
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dp => "dp",
            Engine::Gf => "gf",
            Engine::Closed => "closed",
        })
    }
}

impl FromStr for Engine {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Engine> {
        match s {
            "dp" => Ok(Engine::Dp),
            "gf" => Ok(Engine::Gf),
            "closed" => Ok(Engine::Closed),
            _ => Err(CliError::Usage(format!("unknown engine '{s}' (expected dp, gf, closed or all)"))),
        }
    }
}

/// Count from one engine, or `None` when the engine has no formula for the
/// query.
pub fn count_with(engine: Engine, q: &CountQuery) -> CliResult<Option<BigUint>> {
    q.constraints.validate()?;
    match engine {
        Engine::Dp => Ok(Some(count(q))),
        Engine::Gf => count_gf(q),
        Engine::Closed => Ok(count_closed(q)),
    }
}

/// Every applicable engine, in a fixed order.
pub fn count_all(q: &CountQuery) -> CliResult<Vec<(Engine, BigUint)>> {
    let mut out = Vec::new();
    for e in Engine::ALL {
        if let Some(v) = count_with(e, q)? {
            out.push((e, v));
        }
    }
    Ok(out)
}

fn nth(s: &LaurentSeries, n: usize) -> CliResult<BigUint> {
    Ok(s.z_counts(n + 1)?.swap_remove(n))
}

fn count_gf(q: &CountQuery) -> CliResult<Option<BigUint>> {
    let c = &q.constraints;
    if c.steps.is_some() || c.first_dir.is_some() || c.last_dir.is_some() {
        return Ok(None);
    }
    let (n, order) = (q.n, q.n + 1);
    use AltitudeFilter::*;
    if !c.zigzag {
        if c.min_y.is_some() || c.max_y.is_some() {
            return Ok(None);
        }
        return Ok(Some(match q.altitude {
            Exact(k) => nth(&series::grand_altitude_gf(k, order)?, n)?,
            NonNegative => nth(&series::grand_totals(order)?.0, n)?,
            All => series::grand_all_gf().expand_counts(order)?.swap_remove(n),
        }));
    }
    let lower = c.min_y.map(|v| -v);
    let v = match (lower, c.max_y, q.altitude) {
        (None, None, Exact(k)) => nth(&series::zigzag_altitude_gf(k, order)?, n)?,
        (None, None, NonNegative) => nth(&series::zigzag_nonneg_total(order)?, n)?,
        (None, None, All) => series::zigzag_rational(order).swap_remove(n),
        (Some(m), None, All) | (None, Some(m), All) if m >= 1 => nth(&series::above_line_gf(m as u32, order)?.0, n)?,
        (Some(m), Some(big_m), All) => nth(&series::tube_total(m as u32, big_m as u32, order)?, n)?,
        (Some(1), Some(1), Exact(0)) => series::tube1_axis_gf().expand_counts(order)?.swap_remove(n),
        (Some(0), Some(big_m), Exact(0)) | (Some(big_m), Some(0), Exact(0)) if big_m >= 1 => {
            nth(&series::general_tube_gf(0, big_m as u32, order)?.axis_return()?, n)?
        }
        _ => return Ok(None),
    };
    Ok(Some(v))
}

fn count_closed(q: &CountQuery) -> Option<BigUint> {
    let c = &q.constraints;
    if !c.zigzag || c.min_y.is_some() || c.max_y.is_some() || c.last_dir.is_some() {
        return None;
    }
    let n = q.n as u64;
    let reach = 2 * q.n as i64;
    let ks: Vec<i64> = match q.altitude {
        AltitudeFilter::Exact(k) => vec![k],
        AltitudeFilter::NonNegative => (0..=reach).collect(),
        AltitudeFilter::All => (-reach..=reach).collect(),
    };
    let dirs: Vec<Direction> = match c.first_dir {
        Some(d) => vec![d],
        None => vec![Direction::Up, Direction::Down],
    };
    let mut total = BigUint::zero();
    for k in ks {
        total += match (c.steps, c.first_dir) {
            (None, None) => zigzag_count_closed(n, k),
            (Some(i), _) => dirs.iter().map(|&d| zigzag_step_count(n, k, i as u64, d)).sum(),
            // the empty path has no first step, so a direction filter keeps it
            (None, Some(_)) if n == 0 => BigUint::from(u32::from(k == 0)),
            (None, Some(d)) => (1..=n).map(|i| zigzag_step_count(n, k, i, d)).sum(),
        };
    }
    Some(total)
}

/// Parameters of a named generating function.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GfParams {
    pub k: Option<i64>,
    pub m: Option<u32>,
    pub big_m: Option<u32>,
}

pub const GF_NAMES: [&str; 17] = [
    "grand-h0",
    "grand-h1",
    "grand-altitude",
    "grand-all",
    "grand-nonneg",
    "grand-altitude-sum",
    "zigzag-total",
    "zigzag-f0",
    "zigzag-altitude",
    "zigzag-nonneg",
    "zigzag-primitive",
    "above-line",
    "sym-tube",
    "tube",
    "tube-axis",
    "tube1-axis",
    "span-exact",
];

fn need<T: Copy>(v: Option<T>, flag: &str, name: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("gf '{name}' needs --{flag}")))
}

/// First `order` coefficients of the named generating function.
pub fn named_gf(name: &str, p: GfParams, order: usize) -> CliResult<Vec<BigInt>> {
    let series = |s: LaurentSeries| -> CliResult<Vec<BigInt>> { Ok(s.z_integers(order)?) };
    let counts = |v: Vec<BigUint>| -> Vec<BigInt> { v.into_iter().map(BigInt::from).collect() };
    match name {
        "grand-h0" => series(series::grand_h0_h1(order)?.0),
        "grand-h1" => series(series::grand_h0_h1(order)?.1),
        "grand-altitude" => series(series::grand_altitude_gf(need(p.k, "k", name)?, order)?),
        "grand-all" => Ok(series::grand_all_gf().expand(order)?),
        "grand-nonneg" => series(series::grand_totals(order)?.0),
        "grand-altitude-sum" => series(series::grand_totals(order)?.1),
        "zigzag-total" => Ok(counts(series::zigzag_rational(order))),
        "zigzag-f0" => series(series::zigzag_f0(order)?),
        "zigzag-altitude" => series(series::zigzag_altitude_gf(need(p.k, "k", name)?, order)?),
        "zigzag-nonneg" => series(series::zigzag_nonneg_total(order)?),
        "zigzag-primitive" => series(series::zigzag_primitive_gf(order)?),
        "above-line" => series(series::above_line_gf(need(p.m, "m", name)?, order)?.0),
        "sym-tube" => series(series::sym_tube_gf(need(p.m, "m", name)?, order)?.0),
        "tube" => series(series::tube_total(
            need(p.m, "m", name)?,
            need(p.big_m, "big-m", name)?,
            order,
        )?),
        "tube-axis" => series(series::general_tube_gf(0, need(p.big_m, "big-m", name)?, order)?.axis_return()?),
        "tube1-axis" => Ok(series::tube1_axis_gf().expand(order)?),
        "span-exact" => {
            let k = need(p.k, "k", name)?;
            let k = u32::try_from(k).map_err(|_| CliError::Usage(format!("--k must be positive, got {k}")))?;
            series(series::span_exact_gf(k, order)?)
        }
        _ => Err(CliError::Usage(format!(
            "unknown generating function '{name}'; known: {}",
            GF_NAMES.join(", ")
        ))),
    }
}

/// Builds constraints from command-line style options.
pub fn constraints(
    zigzag: bool,
    min_y: Option<i64>,
    max_y: Option<i64>,
    steps: Option<usize>,
    first: Option<Direction>,
    last: Option<Direction>,
) -> CliResult<PathConstraints> {
    let c = PathConstraints {
        zigzag,
        min_y,
        max_y,
        steps,
        first_dir: first,
        last_dir: last,
    };
    c.validate()?;
    Ok(c)
}

/// Counts ending at altitude `k` for sizes `0..=n_max`, or `None` when the
/// engine has no formula for the constraints.
pub fn altitude_row(engine: Engine, c: &PathConstraints, k: i64, n_max: usize) -> CliResult<Option<Vec<BigUint>>> {
    c.validate()?;
    let plain = c.min_y.is_none() && c.max_y.is_none() && c.steps.is_none() && c.first_dir.is_none() && c.last_dir.is_none();
    let order = n_max + 1;
    match engine {
        Engine::Dp => Ok(Some(knightpaths::enumerate::count_row(n_max, c, AltitudeFilter::Exact(k)))),
        Engine::Gf if plain && c.zigzag => Ok(Some(series::zigzag_altitude_gf(k, order)?.z_counts(order)?)),
        Engine::Gf if plain => Ok(Some(series::grand_altitude_gf(k, order)?.z_counts(order)?)),
        _ => (0..=n_max)
            .map(|n| count_with(engine, &CountQuery::new(n, c.clone(), AltitudeFilter::Exact(k))))
            .collect::<CliResult<Option<Vec<_>>>>(),
    }
}
