//! Steps, paths, compositions and constraint descriptors.
//!
//! A path starts at the origin and is a finite word over the four knight
//! moves `N = (1, 2)`, `Nb = (1, -2)`, `E = (2, 1)` and `Eb = (2, -1)`.
//! Bounds in [`PathConstraints`] are checked at visited vertices only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertical direction of a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Direction> {
        match s.to_ascii_lowercase().as_str() {
            "up" | "u" | "+" => Ok(Direction::Up),
            "down" | "d" | "-" => Ok(Direction::Down),
            _ => Err(Error::InvalidConstraints(format!("unknown direction {s:?}"))),
        }
    }
}

/// One knight move. The declaration order is the lexicographic order used by
/// exhaustive generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    #[serde(rename = "N")]
    N,
    #[serde(rename = "Nb")]
    NBar,
    #[serde(rename = "E")]
    E,
    #[serde(rename = "Eb")]
    EBar,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::N, Step::NBar, Step::E, Step::EBar];

    pub fn dx(self) -> usize {
        match self {
            Step::N | Step::NBar => 1,
            Step::E | Step::EBar => 2,
        }
    }

    pub fn dy(self) -> i64 {
        match self {
            Step::N => 2,
            Step::NBar => -2,
            Step::E => 1,
            Step::EBar => -1,
        }
    }

    pub fn direction(self) -> Direction {
        if self.dy() > 0 {
            Direction::Up
        } else {
            Direction::Down
        }
    }

    /// Mirror image in the x-axis.
    pub fn reflect(self) -> Step {
        match self {
            Step::N => Step::NBar,
            Step::NBar => Step::N,
            Step::E => Step::EBar,
            Step::EBar => Step::E,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Step::N => "N",
            Step::NBar => "Nb",
            Step::E => "E",
            Step::EBar => "Eb",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A finite grand knight's path starting at the origin.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Path {
        Path { steps }
    }

    pub fn empty() -> Path {
        Path::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final x-coordinate.
    pub fn size(&self) -> usize {
        self.steps.iter().map(|s| s.dx()).sum()
    }

    /// Final y-coordinate.
    pub fn altitude(&self) -> i64 {
        self.steps.iter().map(|s| s.dy()).sum()
    }

    /// y-coordinates of every visited vertex, starting with the origin.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(0).chain(self.steps.iter().scan(0i64, |y, s| {
            *y += s.dy();
            Some(*y)
        }))
    }

    /// Maximum y over visited vertices (at least 0).
    pub fn height(&self) -> i64 {
        self.heights().max().unwrap_or(0)
    }

    /// Minimum y over visited vertices (at most 0).
    pub fn min_height(&self) -> i64 {
        self.heights().min().unwrap_or(0)
    }

    pub fn first_direction(&self) -> Option<Direction> {
        self.steps.first().map(|s| s.direction())
    }

    pub fn last_direction(&self) -> Option<Direction> {
        self.steps.last().map(|s| s.direction())
    }

    pub fn is_zigzag(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| w[0].direction() != w[1].direction())
    }

    pub fn reflect(&self) -> Path {
        Path::new(self.steps.iter().map(|s| s.reflect()).collect())
    }

    pub fn reversed(&self) -> Path {
        Path::new(self.steps.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Path::new(steps)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Path> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Path {
        Path::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.token())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        path_of_string(s)
    }
}

/// Parses `N`, `Nb`, `E`, `Eb` tokens, separated by whitespace or nothing.
///
/// Positions in errors are byte offsets into `s`.
pub fn path_of_string(s: &str) -> Result<Path> {
    let bytes = s.as_bytes();
    let mut steps = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let barred = bytes.get(i + 1) == Some(&b'b');
        let step = match (c, barred) {
            (b'N', true) => Step::NBar,
            (b'N', false) => Step::N,
            (b'E', true) => Step::EBar,
            (b'E', false) => Step::E,
            _ => {
                let token: String = s[i..]
                    .chars()
                    .take_while(|ch| !ch.is_whitespace())
                    .collect();
                return Err(Error::Parse { position: i, token });
            }
        };
        steps.push(step);
        i += if barred { 2 } else { 1 };
    }
    Ok(Path::new(steps))
}

/// Constraint descriptor shared by validation, counting and generation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathConstraints {
    pub zigzag: bool,
    pub min_y: Option<i64>,
    pub max_y: Option<i64>,
    pub steps: Option<usize>,
    pub first_dir: Option<Direction>,
    pub last_dir: Option<Direction>,
}

impl PathConstraints {
    pub fn unconstrained() -> PathConstraints {
        PathConstraints::default()
    }

    pub fn zigzag() -> PathConstraints {
        PathConstraints {
            zigzag: true,
            ..Default::default()
        }
    }

    pub fn with_min_y(mut self, min_y: i64) -> PathConstraints {
        self.min_y = Some(min_y);
        self
    }

    pub fn with_max_y(mut self, max_y: i64) -> PathConstraints {
        self.max_y = Some(max_y);
        self
    }

    /// Band `[-m, +big_m]`.
    pub fn with_band(self, m: i64, big_m: i64) -> PathConstraints {
        self.with_min_y(-m).with_max_y(big_m)
    }

    pub fn with_steps(mut self, steps: usize) -> PathConstraints {
        self.steps = Some(steps);
        self
    }

    pub fn with_first(mut self, dir: Direction) -> PathConstraints {
        self.first_dir = Some(dir);
        self
    }

    pub fn with_last(mut self, dir: Direction) -> PathConstraints {
        self.last_dir = Some(dir);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(lo) = self.min_y {
            if lo > 0 {
                return Err(Error::InvalidConstraints(format!("min_y = {lo} > 0")));
            }
        }
        if let Some(hi) = self.max_y {
            if hi < 0 {
                return Err(Error::InvalidConstraints(format!("max_y = {hi} < 0")));
            }
        }
        if self.steps == Some(0) {
            return Err(Error::InvalidConstraints("steps must be positive".into()));
        }
        Ok(())
    }

    pub fn in_band(&self, y: i64) -> bool {
        self.min_y.is_none_or(|lo| y >= lo) && self.max_y.is_none_or(|hi| y <= hi)
    }
}

/// True iff `p` satisfies every constraint in `c`.
///
/// Direction filters hold vacuously for the empty path; a step-count filter
/// requires exactly that many steps.
pub fn validate_path(p: &Path, c: &PathConstraints) -> bool {
    if c.zigzag && !p.is_zigzag() {
        return false;
    }
    if !p.heights().all(|y| c.in_band(y)) {
        return false;
    }
    if let Some(n) = c.steps {
        if p.step_count() != n {
            return false;
        }
    }
    if let (Some(want), Some(got)) = (c.first_dir, p.first_direction()) {
        if want != got {
            return false;
        }
    }
    if let (Some(want), Some(got)) = (c.last_dir, p.last_direction()) {
        if want != got {
            return false;
        }
    }
    true
}

/// An integer composition: an ordered list of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Composition> {
        if let Some(p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidComposition(format!("part {p} is not positive")));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Composition {
        Composition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// All compositions of `n` whose parts lie in `allowed`, in lexicographic order.
    pub fn all_with_parts(n: u64, allowed: &[u64]) -> Vec<Composition> {
        let mut allowed: Vec<u64> = allowed.iter().copied().filter(|&p| p > 0).collect();
        allowed.sort_unstable();
        allowed.dedup();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: u64, allowed: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for &p in allowed {
                if p > rest {
                    break;
                }
                cur.push(p);
                rec(rest - p, allowed, cur, out);
                cur.pop();
            }
        }
        rec(n, &allowed, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Path {
        path_of_string(s).unwrap()
    }

    #[test]
    fn step_table() {
        assert_eq!((Step::N.dx(), Step::N.dy()), (1, 2));
        assert_eq!((Step::NBar.dx(), Step::NBar.dy()), (1, -2));
        assert_eq!((Step::E.dx(), Step::E.dy()), (2, 1));
        assert_eq!((Step::EBar.dx(), Step::EBar.dy()), (2, -1));
        for s in Step::ALL {
            assert_eq!(s.direction() == Direction::Up, s.dy() > 0);
            assert_eq!(s.reflect().reflect(), s);
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p(""), Path::empty());
        let q = p("E Nb N Eb");
        assert_eq!(q.steps(), &[Step::E, Step::NBar, Step::N, Step::EBar]);
        assert_eq!(q.size(), 6);
        assert_eq!(q.altitude(), 0);
        assert_eq!(p("ENbNEb"), q);
        assert_eq!(
            path_of_string("X"),
            Err(Error::Parse {
                position: 0,
                token: "X".into()
            })
        );
        match path_of_string("N E Q") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_path_bookkeeping() {
        let e = Path::empty();
        assert_eq!(
            (e.size(), e.altitude(), e.height(), e.min_height()),
            (0, 0, 0, 0)
        );
        assert!(validate_path(&e, &PathConstraints::zigzag().with_band(0, 0)));
    }

    #[test]
    fn zigzag_validation() {
        let z = PathConstraints::zigzag();
        assert!(validate_path(&p("N Nb N Nb"), &z));
        assert!(!validate_path(&p("N E"), &z));
        assert!(!validate_path(&p("Nb E Nb"), &z.clone().with_min_y(-2)));
        assert!(validate_path(&p("Nb E Nb"), &z.with_min_y(-3)));
    }

    #[test]
    fn direction_and_step_filters() {
        let q = p("N Eb");
        let c = PathConstraints::zigzag().with_first(Direction::Up);
        assert!(validate_path(&q, &c));
        assert!(!validate_path(&q, &c.clone().with_last(Direction::Up)));
        assert!(validate_path(&q, &c.clone().with_steps(2)));
        assert!(!validate_path(&q, &c.with_steps(3)));
    }

    #[test]
    fn bounds_are_checked_at_vertices() {
        // E then Nb visits 0, 1, -1
        let q = p("E Nb");
        assert!(validate_path(&q, &PathConstraints::unconstrained().with_band(1, 1)));
        assert!(!validate_path(&q, &PathConstraints::unconstrained().with_band(0, 1)));
    }

    #[test]
    fn json_form() {
        let q = p("N Nb E");
        assert_eq!(q.to_json(), r#"{"steps":["N","Nb","E"]}"#);
        assert_eq!(Path::from_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn constraint_validation() {
        assert!(PathConstraints::unconstrained().with_min_y(1).validate().is_err());
        assert!(PathConstraints::unconstrained().with_max_y(-1).validate().is_err());
        assert!(PathConstraints::unconstrained().with_band(2, 3).validate().is_ok());
    }

    #[test]
    fn compositions() {
        assert!(Composition::new(vec![1, 0]).is_err());
        let c: Composition = "(2,1,1)".parse().unwrap();
        assert_eq!((c.total(), c.part_count()), (4, 3));
        assert_eq!(Composition::all_with_parts(4, &[1, 2]).len(), 5);
        assert_eq!(Composition::all_with_parts(0, &[1, 2]), vec![Composition::empty()]);
    }
}
