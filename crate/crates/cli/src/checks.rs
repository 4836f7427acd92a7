//! The verification suite: one function per acceptance criterion.

use std::collections::HashSet;
use std::fmt::Debug;
use std::time::Instant;

use knightpaths::asymptotics::{convergence_report, ConvergenceReport, ExactSource, FormulaId};
use knightpaths::bijections::{phi, phi_inv, psi, psi_inv, tiling_count, tube_phi, tube_phi_inv, CompositionPair};
use knightpaths::closedform::{zigzag_count_closed, zigzag_step_count};
use knightpaths::enumerate::{
    altitude_profiles, count_primitive, count_row, generate, AltitudeFilter,
};
use knightpaths::series::{self, LaurentSeries};
use knightpaths::{validate_path, Composition, Direction, PathConstraints, Step};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::CliResult;
use crate::fixtures::{self, Fixture, GridFixture};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub criterion: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl CheckOutcome {
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{verdict} criterion {}: {} ({} checks, {:.1}s)",
            self.criterion, self.title, self.checks, self.seconds
        );
        if let Some(first) = self.failures.first() {
            line.push_str(&format!("; first failure: {first}"));
            if self.failures.len() > 1 {
                line.push_str(&format!(" (+{} more)", self.failures.len() - 1));
            }
        }
        line
    }
}

#[derive(Default)]
struct Recorder {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Recorder {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn same<T: PartialEq + Debug>(&mut self, label: &str, got: &T, want: &T) {
        self.expect(got == want, || format!("{label}: got {got:?}, expected {want:?}"));
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn run(criterion: u8, title: &'static str, f: impl FnOnce(&mut Recorder) -> CliResult<()>) -> CheckOutcome {
    let start = Instant::now();
    let mut r = Recorder::default();
    if let Err(e) = f(&mut r) {
        r.failures.push(format!("engine error: {e}"));
    }
    CheckOutcome {
        criterion,
        title,
        passed: r.failures.is_empty(),
        checks: r.checks,
        failures: r.failures,
        notes: r.notes,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn parse(values: &[&str]) -> Vec<BigUint> {
    values.iter().map(|v| v.parse().expect("fixture values are integers")).collect()
}

fn grid(g: &GridFixture) -> Vec<Vec<BigUint>> {
    g.rows.iter().map(|r| parse(r)).collect()
}

fn span(p: &knightpaths::Path) -> i64 {
    let (lo, hi) = p.heights().fold((0, 0), |(lo, hi), y| (lo.min(y), hi.max(y)));
    hi - lo
}

/// Published tables, each reproduced by at least two engines.
pub fn table_fixtures() -> CheckOutcome {
    run(1, "published tables", |r| {
        let zig = PathConstraints::zigzag();
        let want = grid(&fixtures::ZIGZAG_TABLE);
        for (k, row) in want.iter().enumerate() {
            let n_max = row.len() - 1;
            let k = k as i64;
            let dp = count_row(n_max, &zig, AltitudeFilter::Exact(k));
            let gf = series::zigzag_altitude_gf(k, n_max + 1)?.z_counts(n_max + 1)?;
            let closed: Vec<BigUint> = (0..=n_max as u64).map(|n| zigzag_count_closed(n, k)).collect();
            r.same(&format!("zigzag table k={k} dp"), &dp, row);
            r.same(&format!("zigzag table k={k} gf"), &gf, row);
            r.same(&format!("zigzag table k={k} closed"), &closed, row);
        }

        let grand = PathConstraints::unconstrained();
        let want = grid(&fixtures::GRAND_TABLE);
        let n_max = want.len() - 1;
        for k in 0..want[0].len() {
            let column: Vec<BigUint> = want.iter().map(|row| row[k].clone()).collect();
            let dp = count_row(n_max, &grand, AltitudeFilter::Exact(k as i64));
            let gf = series::grand_altitude_gf(k as i64, n_max + 1)?.z_counts(n_max + 1)?;
            r.same(&format!("grand table k={k} dp"), &dp, &column);
            r.same(&format!("grand table k={k} gf"), &gf, &column);
        }

        let want = grid(&fixtures::SPAN_TABLE);
        let n_max = want[0].len() - 1;
        let mut brute = vec![vec![BigUint::zero(); n_max + 1]; want.len()];
        for n in 0..=n_max {
            for p in generate(n, &zig, AltitudeFilter::All)? {
                let s = span(&p) as usize;
                if (1..=want.len()).contains(&s) {
                    brute[s - 1][n] += 1u32;
                }
            }
        }
        for (j, row) in want.iter().enumerate() {
            let k = j as u32 + 1;
            let gf = series::span_exact_gf(k, n_max + 1)?.z_counts(n_max + 1)?;
            r.same(&format!("span table k={k} gf"), &gf, row);
            r.same(&format!("span table k={k} generated"), &brute[j], row);
        }
        Ok(())
    })
}

/// Both engines that produce a published list.
fn list_engines(f: &Fixture) -> CliResult<Vec<(&'static str, Vec<BigUint>)>> {
    let len = f.values.len();
    let n_max = len - 1;
    let zig = PathConstraints::zigzag();
    let grand = PathConstraints::unconstrained();
    let z = |s: LaurentSeries| s.z_counts(len);
    Ok(match f.name {
        "grand-all" => vec![
            ("gf", series::grand_all_gf().expand_counts(len)?),
            ("dp", count_row(n_max, &grand, AltitudeFilter::All)),
        ],
        "grand-nonneg" => vec![
            ("gf", z(series::grand_totals(len)?.0)?),
            ("dp", count_row(n_max, &grand, AltitudeFilter::NonNegative)),
        ],
        "grand-altitude-sum" => vec![
            ("gf", z(series::grand_totals(len)?.1)?),
            (
                "dp",
                altitude_profiles(n_max, &grand)
                    .iter()
                    .map(|p| {
                        p.iter()
                            .filter(|(y, _)| *y > 0)
                            .map(|(y, v)| v * BigUint::from(*y as u64))
                            .sum()
                    })
                    .collect(),
            ),
        ],
        "zigzag-total" => vec![
            ("gf", series::zigzag_rational(len)),
            ("dp", count_row(n_max, &zig, AltitudeFilter::All)),
            (
                "closed",
                (0..=n_max as u64)
                    .map(|n| (-2 * n as i64..=2 * n as i64).map(|k| zigzag_count_closed(n, k)).sum())
                    .collect(),
            ),
        ],
        "zigzag-nonneg" => vec![
            ("gf", z(series::zigzag_nonneg_total(len)?)?),
            ("dp", count_row(n_max, &zig, AltitudeFilter::NonNegative)),
        ],
        "zigzag-primitive" => vec![
            ("gf", z(series::zigzag_primitive_gf(len)?)?),
            ("dp", (0..len).map(count_primitive).collect()),
        ],
        "above-line-2" => vec![
            ("gf", z(series::above_line_gf(2, len)?.0)?),
            ("dp", count_row(n_max, &zig.clone().with_min_y(-2), AltitudeFilter::All)),
        ],
        "tube1-axis" => vec![
            ("gf", series::tube1_axis_gf().expand_counts(len)?),
            ("dp", count_row(n_max, &zig.clone().with_band(1, 1), AltitudeFilter::Exact(0))),
        ],
        "tube-0-2-axis" => vec![
            ("gf", z(series::general_tube_gf(0, 2, len)?.axis_return()?)?),
            ("dp", count_row(n_max, &zig.clone().with_band(0, 2), AltitudeFilter::Exact(0))),
        ],
        other => unreachable!("no engines registered for fixture {other}"),
    })
}

/// Published inline lists.
pub fn list_fixtures() -> CheckOutcome {
    run(2, "published coefficient lists", |r| {
        for f in fixtures::INLINE_LISTS {
            let want = parse(f.values);
            for (engine, got) in list_engines(&f)? {
                r.same(&format!("{} via {engine}", f.name), &got, &want);
            }
        }
        Ok(())
    })
}

/// DP, closed form and series agree on every small count; DP and series
/// agree on every small band.
pub fn cross_engine() -> CheckOutcome {
    run(3, "cross-engine equivalence", |r| {
        const N: usize = 20;
        let zig = PathConstraints::zigzag();
        let profiles = altitude_profiles(N, &zig);
        for k in -8i64..=8 {
            let gf = series::zigzag_altitude_gf(k, N + 1)?.z_counts(N + 1)?;
            for n in 0..=N {
                let dp = profiles[n]
                    .iter()
                    .find(|(y, _)| *y == k)
                    .map_or_else(BigUint::zero, |(_, v)| v.clone());
                let closed = zigzag_count_closed(n as u64, k);
                r.same(&format!("Z({n},{k}) dp vs closed"), &dp, &closed);
                r.same(&format!("Z({n},{k}) dp vs gf"), &dp, &gf[n]);
            }
        }

        const B: usize = 25;
        for m in 0..=3u32 {
            for big_m in 0..=3u32 {
                let band = zig.clone().with_band(i64::from(m), i64::from(big_m));
                let dp = count_row(B, &band, AltitudeFilter::All);
                let gf = series::tube_total(m, big_m, B + 1)?.z_counts(B + 1)?;
                r.same(&format!("band [-{m},{big_m}]"), &dp, &gf);
                if m == 0 && big_m >= 1 {
                    let dp = count_row(B, &band, AltitudeFilter::Exact(0));
                    let gf = series::general_tube_gf(0, big_m, B + 1)?.axis_return()?.z_counts(B + 1)?;
                    r.same(&format!("band [0,{big_m}] ending on the axis"), &dp, &gf);
                }
            }
            if m >= 1 {
                let gf = series::above_line_gf(m, B + 1)?.0.z_counts(B + 1)?;
                let above = count_row(B, &zig.clone().with_min_y(-i64::from(m)), AltitudeFilter::All);
                let below = count_row(B, &zig.clone().with_max_y(i64::from(m)), AltitudeFilter::All);
                r.same(&format!("above y=-{m}"), &above, &gf);
                r.same(&format!("below y={m}"), &below, &gf);
                let (sym, _) = series::sym_tube_gf(m, B + 1)?;
                let dp = count_row(B, &zig.clone().with_band(i64::from(m), i64::from(m)), AltitudeFilter::All);
                r.same(&format!("symmetric tube {m}"), &dp, &sym.z_counts(B + 1)?);
            }
        }
        Ok(())
    })
}

fn strings(paths: impl IntoIterator<Item = knightpaths::Path>) -> HashSet<String> {
    paths.into_iter().map(|p| p.to_string()).collect()
}

/// Round trips and images of the composition encodings.
pub fn bijection_round_trips() -> CheckOutcome {
    run(4, "bijection round trips", |r| {
        const TOTAL: u64 = 14;
        for n in 0..=TOTAL {
            for m in 0..=TOTAL - n {
                let pairs = CompositionPair::all(n, m);
                let mut up = HashSet::new();
                let mut down = HashSet::new();
                for p in &pairs {
                    let (a, b) = (phi(p), psi(p));
                    r.expect(phi_inv(&a).ok().as_ref() == Some(p), || format!("phi round trip {p}"));
                    r.expect(psi_inv(&b).ok().as_ref() == Some(p), || format!("psi round trip {p}"));
                    r.expect(a.reflect() == psi(&p.swap()), || format!("phi/psi reflection {p}"));
                    up.insert(a.to_string());
                    down.insert(b.to_string());
                }
                if n + m == 0 {
                    continue;
                }
                // images: every zigzag path of this size and altitude starting up (down)
                let size = (n + m) as usize;
                let alt = AltitudeFilter::Exact(m as i64 - n as i64);
                let zig = PathConstraints::zigzag();
                let want_up = strings(generate(size, &zig.clone().with_first(Direction::Up), alt)?);
                let want_down = strings(generate(size, &zig.clone().with_first(Direction::Down), alt)?);
                r.expect(up == want_up, || format!("phi image for ({n},{m})"));
                r.expect(down == want_down, || format!("psi image for ({n},{m})"));
            }
        }

        let tube = PathConstraints::zigzag().with_band(1, 1);
        for size in 0..=16usize {
            let from_e: Vec<_> = generate(size, &tube, AltitudeFilter::Exact(0))?
                .into_iter()
                .filter(|p| p.steps().first() == Some(&Step::E))
                .collect();
            if size % 2 == 1 || size < 4 {
                for p in &from_e {
                    r.expect(tube_phi_inv(p).is_err(), || format!("{p} should be outside the image"));
                }
                continue;
            }
            let t = (size as u64 - 4) / 2;
            let parts: Vec<u64> = (1..=t.max(1)).filter(|&p| p == 2 || p % 2 == 1).collect();
            let comps = Composition::all_with_parts(t, &parts);
            r.same(&format!("tube image size at {size}"), &comps.len(), &from_e.len());
            for p in &from_e {
                match tube_phi_inv(p) {
                    Ok(c) => r.expect(tube_phi(&c).ok().as_ref() == Some(p), || format!("tube round trip {p}")),
                    Err(e) => r.expect(false, || format!("tube inverse of {p}: {e}")),
                }
            }
            for c in &comps {
                let p = tube_phi(c)?;
                r.expect(validate_path(&p, &tube) && p.altitude() == 0 && p.size() == size, || {
                    format!("tube image of {c} is {p}")
                });
            }
        }
        Ok(())
    })
}

fn certified(r: &mut Recorder, label: &str, k: &LaurentSeries, w_order: i64) {
    r.expect(k.is_zero() && k.order() >= w_order, || {
        format!("{label}: residual {k} known to w^{}", k.order())
    });
}

/// Kernel roots annihilate their kernels and even series have no odd powers of `w`.
pub fn kernel_certificates() -> CheckOutcome {
    run(5, "kernel certificates", |r| {
        const ORDER: usize = 50;
        let w_order = 2 * ORDER as i64;
        // roots are computed with slack so the residuals are known through z^50
        let (u1, u2) = series::grand_kernel_roots(ORDER + 10)?;
        certified(r, "K(u1)", &series::grand_kernel(&u1), w_order);
        certified(r, "K(u2)", &series::grand_kernel(&u2), w_order);
        let (rr, ss) = series::zigzag_kernel_roots(ORDER + 10)?;
        certified(r, "zigzag kernel at r", &series::zigzag_kernel(&rr), w_order);
        certified(r, "zigzag kernel at s", &series::zigzag_kernel(&ss), w_order);

        let (h0, h1) = series::grand_h0_h1(ORDER)?;
        let (t, s) = series::grand_totals(ORDER)?;
        let evens = [
            ("grand H0", h0),
            ("grand H1", h1),
            ("grand t", t),
            ("grand s", s),
            ("zigzag f0", series::zigzag_f0(ORDER)?),
            ("zigzag nonneg", series::zigzag_nonneg_total(ORDER)?),
            ("zigzag altitude 3", series::zigzag_altitude_gf(3, ORDER)?),
            ("above line 2", series::above_line_gf(2, ORDER)?.0),
            ("tube [-1,2]", series::tube_total(1, 2, ORDER)?),
        ];
        for (label, e) in &evens {
            r.expect(e.check_even().is_ok() && e.order() >= w_order, || {
                format!("{label} has odd powers of w or is short ({})", e.order())
            });
        }
        Ok(())
    })
}

/// Counts above `y = -m` coincide with free counts up to size `3m - 3` and
/// first differ at `3m - 2`.
pub fn valuation_law() -> CheckOutcome {
    run(6, "valuation threshold", |r| {
        for m in 1..=5u32 {
            let first = 3 * m as usize - 2;
            let free = series::zigzag_rational(first + 1);
            let gf = series::above_line_gf(m, first + 1)?.0.z_counts(first + 1)?;
            let dp = count_row(first, &PathConstraints::zigzag().with_min_y(-i64::from(m)), AltitudeFilter::All);
            for (engine, bounded) in [("gf", &gf), ("dp", &dp)] {
                r.same(&format!("m={m} {engine} below threshold"), &bounded[..first].to_vec(), &free[..first].to_vec());
                r.expect(bounded[first] != free[first], || {
                    format!("m={m} {engine}: counts still agree at size {first}")
                });
            }
        }
        Ok(())
    })
}

/// Gates on exact/estimate ratios.
pub struct AsymptoticGate {
    pub formula: FormulaId,
    pub source: ExactSource,
    pub ns: &'static [usize],
    pub tolerance: f64,
    pub require_approach: bool,
}

pub const ASYMPTOTIC_GATES: [AsymptoticGate; 8] = [
    AsymptoticGate {
        formula: FormulaId::GrandAll,
        source: ExactSource::Series,
        ns: &[200],
        tolerance: 0.01,
        require_approach: false,
    },
    AsymptoticGate {
        formula: FormulaId::GrandNonNeg,
        source: ExactSource::Enumerate,
        ns: &[200],
        tolerance: 0.01,
        require_approach: false,
    },
    AsymptoticGate {
        formula: FormulaId::GrandAltitudeSum,
        source: ExactSource::Enumerate,
        ns: &[500],
        tolerance: 0.05,
        require_approach: false,
    },
    AsymptoticGate {
        formula: FormulaId::ZigzagExpectedAltitude,
        source: ExactSource::Enumerate,
        ns: &[500, 1000, 2000],
        tolerance: 0.10,
        require_approach: true,
    },
    AsymptoticGate {
        formula: FormulaId::AboveLineProb(0),
        source: ExactSource::Enumerate,
        ns: &[500, 1000, 2000],
        tolerance: 0.10,
        require_approach: true,
    },
    AsymptoticGate {
        formula: FormulaId::AboveLineProb(1),
        source: ExactSource::Enumerate,
        ns: &[500, 1000, 2000],
        tolerance: 0.10,
        require_approach: true,
    },
    AsymptoticGate {
        formula: FormulaId::AboveLineProb(2),
        source: ExactSource::Enumerate,
        ns: &[500, 1000, 2000],
        tolerance: 0.10,
        require_approach: true,
    },
    AsymptoticGate {
        formula: FormulaId::ExpectedStepsEven,
        source: ExactSource::ClosedForm,
        ns: &[1000],
        tolerance: 0.02,
        require_approach: false,
    },
];

fn describe_report(rep: &ConvergenceReport) -> String {
    let ratios: Vec<String> = rep
        .rows
        .iter()
        .map(|row| match row.ratio {
            Some(x) => format!("n={} ratio={x:.6}", row.n),
            None => format!("n={} ratio=undefined", row.n),
        })
        .collect();
    format!("{} [{}]: {}", rep.formula, rep.source, ratios.join(", "))
}

/// Leading-order estimates against exact values at the stated sizes.
pub fn asymptotic_convergence() -> CheckOutcome {
    run(7, "asymptotic convergence", |r| {
        for gate in &ASYMPTOTIC_GATES {
            let rep = convergence_report(gate.formula, gate.source, gate.ns)?;
            let last = rep.rows.last().and_then(|row| row.ratio);
            r.note(describe_report(&rep));
            r.expect(last.is_some_and(|x| (x - 1.0).abs() <= gate.tolerance), || {
                format!(
                    "{} at n={}: ratio {last:?} outside 1 ± {}",
                    gate.formula,
                    gate.ns[gate.ns.len() - 1],
                    gate.tolerance
                )
            });
            if gate.require_approach {
                r.expect(rep.approaching, || format!("{}: |ratio - 1| not decreasing", gate.formula));
            }
        }
        // unproven at odd sizes: reported, never gated
        let rep = convergence_report(FormulaId::ExpectedStepsOddConjecture, ExactSource::ClosedForm, &[101, 301, 1001])?;
        r.note(format!("report only: {}", describe_report(&rep)));
        Ok(())
    })
}

/// Step-number refinement against the zigzag totals and a step-filtered DP.
pub fn step_refinement() -> CheckOutcome {
    run(8, "step-number refinement", |r| {
        for n in 0..=14u64 {
            let reach = 2 * n as i64;
            let profile = &altitude_profiles(n as usize, &PathConstraints::zigzag())[n as usize];
            for k in -reach..=reach {
                let mut sum: BigUint = (1..=n)
                    .flat_map(|i| [Direction::Up, Direction::Down].map(|d| zigzag_step_count(n, k, i, d)))
                    .sum();
                if n == 0 && k == 0 {
                    sum += 1u32;
                }
                let dp = profile
                    .iter()
                    .find(|(y, _)| *y == k)
                    .map_or_else(BigUint::zero, |(_, v)| v.clone());
                r.same(&format!("sum over steps at ({n},{k})"), &sum, &dp);
            }
        }
        for n in 1..=12usize {
            let reach = 2 * n as i64;
            for i in 1..=n {
                for d in [Direction::Up, Direction::Down] {
                    let c = PathConstraints::zigzag().with_steps(i).with_first(d);
                    let profile = &altitude_profiles(n, &c)[n];
                    for k in -reach..=reach {
                        let dp = profile
                            .iter()
                            .find(|(y, _)| *y == k)
                            .map_or_else(BigUint::zero, |(_, v)| v.clone());
                        let closed = zigzag_step_count(n as u64, k, i as u64, d);
                        r.same(&format!("({n},{k}) with {i} steps starting {d:?}"), &closed, &dp);
                    }
                }
            }
        }
        Ok(())
    })
}

/// Tilings against half the tube counts of size `2n + 4`.
pub fn tiling_equinumerosity() -> CheckOutcome {
    run(9, "tiling equinumerosity", |r| {
        const N: usize = 10;
        let size = 2 * N + 4;
        let gf = series::tube1_axis_gf().expand_counts(size + 1)?;
        let dp = count_row(size, &PathConstraints::zigzag().with_band(1, 1), AltitudeFilter::Exact(0));
        for n in 0..=N {
            let t = tiling_count(n);
            r.same(&format!("tilings({n}) vs gf"), &(&t * 2u32), &gf[2 * n + 4]);
            r.same(&format!("tilings({n}) vs dp"), &(&t * 2u32), &dp[2 * n + 4]);
        }
        Ok(())
    })
}

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Everything except the large asymptotic DPs.
    Quick,
    Full,
    /// Published tables and lists only.
    Fixtures,
}

pub fn run_level(level: Level) -> Vec<CheckOutcome> {
    let mut suite: Vec<fn() -> CheckOutcome> = vec![table_fixtures, list_fixtures];
    if level != Level::Fixtures {
        suite.extend([
            cross_engine as fn() -> CheckOutcome,
            bijection_round_trips,
            kernel_certificates,
            valuation_law,
        ]);
        if level == Level::Full {
            suite.push(asymptotic_convergence);
        }
        suite.extend([step_refinement as fn() -> CheckOutcome, tiling_equinumerosity]);
    }
    suite.into_iter().map(|f| f()).collect()
}

/// Machine-readable summary of a run.
pub fn summary_json(outcomes: &[CheckOutcome]) -> String {
    #[derive(Serialize)]
    struct Summary<'a> {
        passed: bool,
        criteria: &'a [CheckOutcome],
    }
    let s = Summary {
        passed: outcomes.iter().all(|o| o.passed),
        criteria: outcomes,
    };
    serde_json::to_string_pretty(&s).expect("summary serialization cannot fail")
}
