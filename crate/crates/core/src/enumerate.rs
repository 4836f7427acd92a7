//! Exact dynamic-programming counts and exhaustive generation.
//!
//! The DP runs over x = 0..n with state (y, direction of the last step,
//! steps used so far). A step advances x by one or two, so layer x is pulled
//! from layers x-1 and x-2.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::path::{Direction, Path, PathConstraints, Step};

/// Which final altitudes a count includes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AltitudeFilter {
    Exact(i64),
    NonNegative,
    All,
}

impl AltitudeFilter {
    pub fn accepts(self, y: i64) -> bool {
        match self {
            AltitudeFilter::Exact(k) => y == k,
            AltitudeFilter::NonNegative => y >= 0,
            AltitudeFilter::All => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountQuery {
    pub n: usize,
    pub constraints: PathConstraints,
    pub altitude: AltitudeFilter,
}

impl CountQuery {
    pub fn new(n: usize, constraints: PathConstraints, altitude: AltitudeFilter) -> CountQuery {
        CountQuery {
            n,
            constraints,
            altitude,
        }
    }
}

pub const DEFAULT_GENERATE_CAP: usize = 20;

const NONE: usize = 0;
const UP: usize = 1;
const DOWN: usize = 2;

fn dir_index(d: Direction) -> usize {
    match d {
        Direction::Up => UP,
        Direction::Down => DOWN,
    }
}

/// Dense DP layer indexed by (y - y_lo, last direction, steps used).
struct Layer {
    cells: Vec<BigUint>,
}

struct Dp<'a> {
    c: &'a PathConstraints,
    y_lo: i64,
    y_hi: i64,
    step_slots: usize,
    /// When set, layers 0 < x < n carry no mass on y = 0.
    avoid_axis: Option<usize>,
}

impl<'a> Dp<'a> {
    fn new(n_max: usize, c: &'a PathConstraints, avoid_axis: Option<usize>) -> Dp<'a> {
        let reach = 2 * n_max as i64;
        let y_lo = c.min_y.map_or(-reach, |lo| lo.max(-reach));
        let y_hi = c.max_y.map_or(reach, |hi| hi.min(reach));
        let step_slots = c.steps.map_or(1, |s| s + 1);
        Dp {
            c,
            y_lo,
            y_hi,
            step_slots,
            avoid_axis,
        }
    }

    fn width(&self) -> usize {
        (self.y_hi - self.y_lo + 1) as usize
    }

    fn idx(&self, y: i64, dir: usize, steps: usize) -> usize {
        (((y - self.y_lo) as usize) * 3 + dir) * self.step_slots + steps
    }

    fn empty_layer(&self) -> Layer {
        Layer {
            cells: vec![BigUint::zero(); self.width() * 3 * self.step_slots],
        }
    }

    fn origin(&self) -> Layer {
        let mut l = self.empty_layer();
        let i = self.idx(0, NONE, 0);
        l.cells[i] = BigUint::from(1u32);
        l
    }

    /// Pulls layer x from the two previous layers. `prev1` is x-1, `prev2` is x-2.
    fn advance(&self, prev1: Option<&Layer>, prev2: Option<&Layer>, x: usize) -> Layer {
        let mut out = self.empty_layer();
        for step in Step::ALL {
            let src = match step.dx() {
                1 => prev1,
                _ => prev2,
            };
            let Some(src) = src else { continue };
            let to_dir = dir_index(step.direction());
            let reach = 2 * x as i64;
            for y in self.y_lo.max(-reach)..=self.y_hi.min(reach) {
                let from_y = y - step.dy();
                if from_y < self.y_lo || from_y > self.y_hi {
                    continue;
                }
                for from_dir in [NONE, UP, DOWN] {
                    if from_dir == NONE {
                        if let Some(first) = self.c.first_dir {
                            if dir_index(first) != to_dir {
                                continue;
                            }
                        }
                    } else if self.c.zigzag && from_dir == to_dir {
                        continue;
                    }
                    for s in 0..self.step_slots {
                        let (src_s, dst_s) = if self.c.steps.is_some() {
                            if s + 1 >= self.step_slots {
                                continue;
                            }
                            (s, s + 1)
                        } else {
                            (0, 0)
                        };
                        let v = &src.cells[self.idx(from_y, from_dir, src_s)];
                        if v.is_zero() {
                            continue;
                        }
                        let di = self.idx(y, to_dir, dst_s);
                        out.cells[di] += v;
                    }
                }
            }
        }
        let interior = self.avoid_axis.is_some_and(|end| x > 0 && x < end);
        if interior && (self.y_lo..=self.y_hi).contains(&0) {
            for dir in [NONE, UP, DOWN] {
                for s in 0..self.step_slots {
                    let i = self.idx(0, dir, s);
                    out.cells[i] = BigUint::zero();
                }
            }
        }
        out
    }

    /// Final tallies per altitude, honouring step-count and last-direction filters.
    fn profile(&self, layer: &Layer) -> Vec<(i64, BigUint)> {
        let mut out = Vec::new();
        for y in self.y_lo..=self.y_hi {
            let mut total = BigUint::zero();
            for dir in [NONE, UP, DOWN] {
                if dir != NONE {
                    if let Some(last) = self.c.last_dir {
                        if dir_index(last) != dir {
                            continue;
                        }
                    }
                }
                let s = self.c.steps.unwrap_or(0);
                total += &layer.cells[self.idx(y, dir, s)];
            }
            if !total.is_zero() {
                out.push((y, total));
            }
        }
        out
    }

    /// Runs x = 0..=n_max and hands each layer's altitude profile to `visit`.
    fn run(&self, n_max: usize, mut visit: impl FnMut(usize, Vec<(i64, BigUint)>)) {
        let mut prev2: Option<Layer> = None;
        let mut prev1: Option<Layer> = None;
        for x in 0..=n_max {
            let cur = if x == 0 {
                self.origin()
            } else {
                self.advance(prev1.as_ref(), prev2.as_ref(), x)
            };
            visit(x, self.profile(&cur));
            prev2 = prev1.take();
            prev1 = Some(cur);
        }
    }
}

fn sum_filtered(profile: &[(i64, BigUint)], altitude: AltitudeFilter) -> BigUint {
    profile
        .iter()
        .filter(|(y, _)| altitude.accepts(*y))
        .fold(BigUint::zero(), |acc, (_, v)| acc + v)
}

/// Number of paths of size exactly `q.n` satisfying the query.
pub fn count(q: &CountQuery) -> BigUint {
    sum_filtered(&altitude_profile(q.n, &q.constraints), q.altitude)
}

/// `(altitude, count)` pairs with nonzero count for paths of size `n`.
pub fn altitude_profile(n: usize, c: &PathConstraints) -> Vec<(i64, BigUint)> {
    let dp = Dp::new(n, c, None);
    let mut last = Vec::new();
    dp.run(n, |x, prof| {
        if x == n {
            last = prof;
        }
    });
    last
}

/// Profiles for every size 0..=n_max from a single DP pass.
pub fn altitude_profiles(n_max: usize, c: &PathConstraints) -> Vec<Vec<(i64, BigUint)>> {
    let dp = Dp::new(n_max, c, None);
    let mut out = Vec::with_capacity(n_max + 1);
    dp.run(n_max, |_, prof| out.push(prof));
    out
}

/// `[count(0), ..., count(n_max)]` for a fixed constraint/altitude template.
pub fn count_row(n_max: usize, c: &PathConstraints, altitude: AltitudeFilter) -> Vec<BigUint> {
    altitude_profiles(n_max, c)
        .iter()
        .map(|p| sum_filtered(p, altitude))
        .collect()
}

/// Profiles for the requested sizes only, from a single DP pass.
pub fn altitude_profiles_at(sizes: &[usize], c: &PathConstraints) -> Vec<Vec<(i64, BigUint)>> {
    let Some(&n_max) = sizes.iter().max() else {
        return Vec::new();
    };
    let dp = Dp::new(n_max, c, None);
    let mut found: Vec<Option<Vec<(i64, BigUint)>>> = vec![None; sizes.len()];
    dp.run(n_max, |x, prof| {
        for (slot, &n) in found.iter_mut().zip(sizes) {
            if n == x {
                *slot = Some(prof.clone());
            }
        }
    });
    found.into_iter().map(|p| p.unwrap_or_default()).collect()
}

/// Zigzag paths of size `n` ending on the x-axis whose interior vertices avoid it.
pub fn count_primitive(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let c = PathConstraints::zigzag();
    let dp = Dp::new(n, &c, Some(n));
    let mut result = BigUint::zero();
    dp.run(n, |x, prof| {
        if x == n {
            result = sum_filtered(&prof, AltitudeFilter::Exact(0));
        }
    });
    result
}

/// Every valid path of size `n` with an accepted altitude, in lexicographic
/// step order. Fails when `n` exceeds [`DEFAULT_GENERATE_CAP`].
pub fn generate(n: usize, c: &PathConstraints, altitude: AltitudeFilter) -> Result<Vec<Path>> {
    generate_with_cap(n, c, altitude, DEFAULT_GENERATE_CAP)
}

pub fn generate_with_cap(
    n: usize,
    c: &PathConstraints,
    altitude: AltitudeFilter,
    cap: usize,
) -> Result<Vec<Path>> {
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    struct Walk<'a> {
        n: usize,
        c: &'a PathConstraints,
        altitude: AltitudeFilter,
        cur: Vec<Step>,
        out: Vec<Path>,
    }
    impl Walk<'_> {
        fn go(&mut self, x: usize, y: i64) {
            if x == self.n {
                let steps_ok = self.c.steps.is_none_or(|s| s == self.cur.len());
                let last_ok = match (self.c.last_dir, self.cur.last()) {
                    (Some(want), Some(s)) => s.direction() == want,
                    _ => true,
                };
                if steps_ok && last_ok && self.altitude.accepts(y) {
                    self.out.push(Path::new(self.cur.clone()));
                }
                return;
            }
            if self.c.steps.is_some_and(|s| self.cur.len() >= s) {
                return;
            }
            for step in Step::ALL {
                if x + step.dx() > self.n {
                    continue;
                }
                match self.cur.last() {
                    None => {
                        if self.c.first_dir.is_some_and(|d| d != step.direction()) {
                            continue;
                        }
                    }
                    Some(prev) => {
                        if self.c.zigzag && prev.direction() == step.direction() {
                            continue;
                        }
                    }
                }
                let ny = y + step.dy();
                if !self.c.in_band(ny) {
                    continue;
                }
                self.cur.push(step);
                self.go(x + step.dx(), ny);
                self.cur.pop();
            }
        }
    }
    let mut w = Walk {
        n,
        c,
        altitude,
        cur: Vec::new(),
        out: Vec::new(),
    };
    w.go(0, 0);
    Ok(w.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{path_of_string, validate_path};

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn row(vals: &[u64]) -> Vec<BigUint> {
        vals.iter().map(|&v| n(v)).collect()
    }

    #[test]
    fn count_examples() {
        let grand = PathConstraints::unconstrained();
        let zz = PathConstraints::zigzag();
        assert_eq!(count(&CountQuery::new(4, grand.clone(), AltitudeFilter::Exact(0))), n(8));
        assert_eq!(count(&CountQuery::new(7, zz.clone(), AltitudeFilter::Exact(0))), n(6));
        assert_eq!(count(&CountQuery::new(15, zz.clone(), AltitudeFilter::Exact(4))), n(85));
        for c in [grand, zz.clone(), zz.with_band(1, 1).with_first(Direction::Up)] {
            assert_eq!(count(&CountQuery::new(0, c, AltitudeFilter::Exact(0))), n(1));
        }
    }

    #[test]
    fn count_row_examples() {
        let zz = PathConstraints::zigzag();
        assert_eq!(
            count_row(6, &zz, AltitudeFilter::All),
            row(&[1, 2, 4, 6, 10, 16, 26])
        );
        assert_eq!(
            count_row(6, &PathConstraints::unconstrained(), AltitudeFilter::NonNegative),
            row(&[1, 1, 4, 8, 26, 63, 186])
        );
        assert_eq!(
            count_row(7, &zz.with_min_y(-2), AltitudeFilter::All),
            row(&[1, 2, 4, 6, 9, 15, 23, 38])
        );
    }

    #[test]
    fn count_row_matches_single_counts() {
        let c = PathConstraints::zigzag().with_band(2, 3).with_last(Direction::Down);
        let r = count_row(14, &c, AltitudeFilter::NonNegative);
        for (i, v) in r.iter().enumerate() {
            assert_eq!(v, &count(&CountQuery::new(i, c.clone(), AltitudeFilter::NonNegative)));
        }
    }

    #[test]
    fn generate_examples() {
        let zz = PathConstraints::zigzag();
        let got = generate(4, &zz, AltitudeFilter::Exact(0)).unwrap();
        let want: Vec<Path> = ["N Nb N Nb", "Nb N Nb N", "E Eb", "Eb E"]
            .iter()
            .map(|s| path_of_string(s).unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            generate(0, &zz, AltitudeFilter::All).unwrap(),
            vec![Path::empty()]
        );
        let prim: Vec<Path> = generate(10, &zz, AltitudeFilter::Exact(0))
            .unwrap()
            .into_iter()
            .filter(|p| {
                let h: Vec<i64> = p.heights().collect();
                h[1..h.len() - 1].iter().all(|&y| y != 0)
            })
            .collect();
        assert_eq!(prim.len(), 6);
        assert!(matches!(
            generate(21, &zz, AltitudeFilter::All),
            Err(Error::CapExceeded { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn generated_paths_are_valid_and_sorted() {
        let c = PathConstraints::zigzag().with_band(2, 1);
        let paths = generate(9, &c, AltitudeFilter::All).unwrap();
        assert!(paths.windows(2).all(|w| w[0] < w[1]));
        assert!(paths.iter().all(|p| validate_path(p, &c) && p.size() == 9));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(count_primitive(10), n(6));
        assert_eq!(count_primitive(9), n(2));
        assert_eq!(count_primitive(1), n(0));
        assert_eq!(count_primitive(0), n(1));
        let b: Vec<BigUint> = (0..=10).map(count_primitive).collect();
        assert_eq!(b, row(&[1, 0, 2, 0, 2, 2, 4, 2, 4, 2, 6]));
    }

    #[test]
    fn profile_sums_to_all() {
        let c = PathConstraints::zigzag();
        let prof = altitude_profile(11, &c);
        let total: BigUint = prof.iter().map(|(_, v)| v.clone()).sum();
        assert_eq!(total, count(&CountQuery::new(11, c, AltitudeFilter::All)));
    }
}
