//! Composition encodings of zigzag paths.
//!
//! `phi` sends a pair of `{1,2}`-compositions with equal part counts to a
//! zigzag path starting upward, one two-step block per pair of parts:
//! `(2,2) -> E Eb`, `(1,1) -> N Nb`, `(1,2) -> N Eb`, `(2,1) -> E Nb`.
//! `psi` does the same for paths starting downward with the mirrored blocks
//! `Eb E`, `Nb N`, `Eb N`, `Nb E`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::path::{Composition, Direction, Path, Step};

/// Two compositions with parts in `{1, 2}` and the same number of parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositionPair {
    x: Composition,
    y: Composition,
}

impl CompositionPair {
    pub fn new(x: Composition, y: Composition) -> Result<CompositionPair> {
        if let Some(p) = x.parts().iter().chain(y.parts()).find(|&&p| p > 2) {
            return Err(Error::InvalidComposition(format!("part {p} is not 1 or 2")));
        }
        if x.part_count() != y.part_count() {
            return Err(Error::InvalidComposition(format!(
                "part counts differ: {} vs {}",
                x.part_count(),
                y.part_count()
            )));
        }
        Ok(CompositionPair { x, y })
    }

    pub fn from_parts(x: &[u64], y: &[u64]) -> Result<CompositionPair> {
        CompositionPair::new(Composition::new(x.to_vec())?, Composition::new(y.to_vec())?)
    }

    pub fn x(&self) -> &Composition {
        &self.x
    }

    pub fn y(&self) -> &Composition {
        &self.y
    }

    pub fn swap(&self) -> CompositionPair {
        CompositionPair {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// Every pair in `C_{n,m}`.
    pub fn all(n: u64, m: u64) -> Vec<CompositionPair> {
        let xs = Composition::all_with_parts(n, &[1, 2]);
        let ys = Composition::all_with_parts(m, &[1, 2]);
        let mut out = Vec::new();
        for x in &xs {
            for y in ys.iter().filter(|y| y.part_count() == x.part_count()) {
                out.push(CompositionPair {
                    x: x.clone(),
                    y: y.clone(),
                });
            }
        }
        out
    }

    fn blocks(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.x.parts().iter().copied().zip(self.y.parts().iter().copied())
    }
}

impl fmt::Display for CompositionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={} ; Y={}", self.x, self.y)
    }
}

fn block_up(x: u64, y: u64) -> [Step; 2] {
    match (x, y) {
        (2, 2) => [Step::E, Step::EBar],
        (1, 1) => [Step::N, Step::NBar],
        (1, 2) => [Step::N, Step::EBar],
        _ => [Step::E, Step::NBar],
    }
}

fn block_down(x: u64, y: u64) -> [Step; 2] {
    match (x, y) {
        (2, 2) => [Step::EBar, Step::E],
        (1, 1) => [Step::NBar, Step::N],
        (1, 2) => [Step::EBar, Step::N],
        _ => [Step::NBar, Step::E],
    }
}

fn encode(p: &CompositionPair, block: fn(u64, u64) -> [Step; 2]) -> Path {
    Path::new(p.blocks().flat_map(|(x, y)| block(x, y)).collect())
}

fn decode(path: &Path, first: Direction, block: fn(u64, u64) -> [Step; 2]) -> Result<CompositionPair> {
    let steps = path.steps();
    if steps.len() % 2 != 0 {
        return Err(Error::NotInImage(format!("odd step count {}", steps.len())));
    }
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for (j, pair) in steps.chunks(2).enumerate() {
        let found = [(2, 2), (1, 1), (1, 2), (2, 1)]
            .into_iter()
            .find(|&(a, b)| block(a, b) == [pair[0], pair[1]]);
        match found {
            Some((a, b)) => {
                x.push(a);
                y.push(b);
            }
            None => {
                return Err(Error::NotInImage(format!(
                    "block {} at position {} cannot occur in a path starting {:?}",
                    Path::new(pair.to_vec()),
                    j,
                    first
                )))
            }
        }
    }
    CompositionPair::from_parts(&x, &y)
}

/// Zigzag path starting upward, of size `total(X) + total(Y)` and altitude
/// `total(Y) - total(X)`.
pub fn phi(p: &CompositionPair) -> Path {
    encode(p, block_up)
}

pub fn phi_inv(path: &Path) -> Result<CompositionPair> {
    decode(path, Direction::Up, block_up)
}

/// Mirror of [`phi`] onto paths starting downward.
pub fn psi(p: &CompositionPair) -> Path {
    encode(p, block_down)
}

pub fn psi_inv(path: &Path) -> Result<CompositionPair> {
    decode(path, Direction::Down, block_down)
}

/// True when every prefix sum of `y_i - x_i` lies in `[-m, M]`
/// (`big_m = None` for no upper line). Checked after each pair of parts.
pub fn check_bounded_pair(p: &CompositionPair, m: i64, big_m: Option<i64>) -> bool {
    let mut acc = 0i64;
    for (x, y) in p.blocks() {
        acc += y as i64 - x as i64;
        if acc < -m || big_m.is_some_and(|hi| acc > hi) {
            return false;
        }
    }
    true
}

fn tube_part_allowed(part: u64) -> bool {
    part == 2 || part % 2 == 1
}

/// Encodes a composition with parts in `{2} ∪ odd` as a path of size
/// `2 total + 4` in the tube `[-1, 1]`, starting with `E` and ending on the axis.
pub fn tube_phi(c: &Composition) -> Result<Path> {
    let mut steps = vec![Step::E];
    for &part in c.parts() {
        if !tube_part_allowed(part) {
            return Err(Error::InvalidComposition(format!(
                "part {part} is neither 2 nor odd"
            )));
        }
        if part == 2 {
            steps.extend([Step::EBar, Step::E]);
        } else {
            steps.push(Step::NBar);
            for _ in 0..part / 2 {
                steps.extend([Step::E, Step::EBar]);
            }
            steps.push(Step::N);
        }
    }
    steps.push(Step::EBar);
    Ok(Path::new(steps))
}

pub fn tube_phi_inv(path: &Path) -> Result<Composition> {
    let steps = path.steps();
    let not_in_image = |why: &str| Error::NotInImage(format!("{path}: {why}"));
    if steps.len() < 2 || steps[0] != Step::E || steps[steps.len() - 1] != Step::EBar {
        return Err(not_in_image("must start with E and end with Eb"));
    }
    let middle = &steps[1..steps.len() - 1];
    let mut parts = Vec::new();
    let mut i = 0;
    while i < middle.len() {
        match middle[i] {
            Step::EBar if middle.get(i + 1) == Some(&Step::E) => {
                parts.push(2);
                i += 2;
            }
            Step::NBar => {
                i += 1;
                let mut k = 0;
                while middle.get(i) == Some(&Step::E) && middle.get(i + 1) == Some(&Step::EBar) {
                    k += 1;
                    i += 2;
                }
                if middle.get(i) != Some(&Step::N) {
                    return Err(not_in_image("unterminated Nb block"));
                }
                parts.push(2 * k + 1);
                i += 1;
            }
            _ => return Err(not_in_image("unexpected step")),
        }
    }
    Composition::new(parts)
}

/// Tilings of a `2 x 2n` board by vertical dominoes and horizontal `1 x 4`
/// bars, by a column-profile DP.
pub fn tiling_count(n: usize) -> BigUint {
    let width = 2 * n;
    // state[a][b]: columns still covered by bars already placed in each row
    let mut state = vec![vec![BigUint::zero(); 4]; 4];
    state[0][0] = BigUint::from(1u32);
    for col in 0..width {
        let room = width - col >= 4;
        let mut next = vec![vec![BigUint::zero(); 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                let v = &state[a][b];
                if v.is_zero() {
                    continue;
                }
                // each free cell takes a bar; both free may instead take a domino
                let row_opts = |c: usize| -> Vec<usize> {
                    if c > 0 {
                        vec![c - 1]
                    } else if room {
                        vec![3]
                    } else {
                        vec![]
                    }
                };
                for &na in &row_opts(a) {
                    for &nb in &row_opts(b) {
                        next[na][nb] += v;
                    }
                }
                if a == 0 && b == 0 {
                    next[0][0] += v;
                }
            }
        }
        state = next;
    }
    state[0][0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_pair_maps_to_printed_path() {
        let p = CompositionPair::from_parts(&[2, 2, 2, 1, 1, 1, 1, 2, 1], &[1, 2, 1, 2, 2, 1, 2, 1, 2]).unwrap();
        let path = phi(&p);
        assert_eq!(path.to_string(), "E Nb E Eb E Nb N Eb N Eb N Nb N Eb E Nb N Eb");
        assert_eq!(path.size(), 27);
        assert_eq!(path.altitude(), 1);
        assert_eq!(phi_inv(&path).unwrap(), p);
    }

    #[test]
    fn single_blocks() {
        let p = CompositionPair::from_parts(&[1], &[1]).unwrap();
        assert_eq!(phi(&p).to_string(), "N Nb");
        assert_eq!(psi(&p).to_string(), "Nb N");
        let ee: Path = "E Eb E Eb".parse().unwrap();
        assert_eq!(phi_inv(&ee).unwrap(), CompositionPair::from_parts(&[2, 2], &[2, 2]).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(CompositionPair::from_parts(&[3], &[1]).is_err());
        assert!(CompositionPair::from_parts(&[1, 1], &[2]).is_err());
        assert!(phi_inv(&"N".parse().unwrap()).is_err());
        assert!(phi_inv(&"Nb N".parse().unwrap()).is_err());
        assert!(psi_inv(&"N Nb".parse().unwrap()).is_err());
        assert!(tube_phi(&Composition::new(vec![4]).unwrap()).is_err());
        assert!(tube_phi_inv(&"Eb E".parse().unwrap()).is_err());
    }

    #[test]
    fn bounded_pairs() {
        let up = CompositionPair::from_parts(&[1], &[2]).unwrap();
        let down = CompositionPair::from_parts(&[2], &[1]).unwrap();
        assert!(check_bounded_pair(&up, 0, None));
        assert!(!check_bounded_pair(&down, 0, None));
    }

    #[test]
    fn tube_examples() {
        let one = Composition::new(vec![1]).unwrap();
        assert_eq!(tube_phi(&one).unwrap().to_string(), "E Nb N Eb");
        assert_eq!(tube_phi(&one).unwrap().size(), 6);
        let two = Composition::new(vec![2]).unwrap();
        assert_eq!(tube_phi(&two).unwrap().to_string(), "E Eb E Eb");
        let ones = Composition::new(vec![1, 1]).unwrap();
        assert_eq!(tube_phi(&ones).unwrap().to_string(), "E Nb N Nb N Eb");
        let seven = Composition::new(vec![7]).unwrap();
        assert_eq!(tube_phi_inv(&tube_phi(&seven).unwrap()).unwrap(), seven);
    }

    #[test]
    fn tilings() {
        let got: Vec<BigUint> = (0..=8).map(tiling_count).collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 4, 7, 14, 26, 50, 95].iter().map(|&v| v.into()).collect();
        assert_eq!(got, want);
    }
}
