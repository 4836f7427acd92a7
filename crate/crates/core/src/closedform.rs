//! Binomial-sum formulas for grand zigzag knight's paths.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::Direction;

pub type ExactRational = BigRational;

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k.min(n - k) as u64))
}

/// Pairs of `{1,2}`-compositions of `n` and `m` with the same number of parts.
pub fn comp_pairs_count(n: u64, m: u64) -> BigUint {
    let (n, m) = if n <= m { (n as i64, m as i64) } else { (m as i64, n as i64) };
    let upper = n - (m + 1) / 2;
    (0..=upper.max(-1))
        .map(|i| binom(n - i, i) * binom(n - i, m - n + i))
        .sum()
}

fn half_up(n: i64, k: i64) -> BigUint {
    if n < 0 || (n - k) % 2 != 0 || n < k.abs() {
        return BigUint::zero();
    }
    comp_pairs_count(((n - k) / 2) as u64, ((n + k) / 2) as u64)
}

/// Number of grand zigzag knight's paths of size `n` ending at altitude `k`.
pub fn zigzag_count_closed(n: u64, k: i64) -> BigUint {
    let n = n as i64;
    if n == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if (n - k).rem_euclid(2) == 0 {
        return half_up(n, k.abs()) * 2u32;
    }
    // odd step count: peel the first and last steps off
    let inner = |n: i64, k: i64| {
        if n == 0 && k == 0 {
            BigUint::one()
        } else {
            half_up(n, k)
        }
    };
    inner(n - 1, k - 2) + inner(n - 2, k - 1) + inner(n - 1, k + 2) + inner(n - 2, k + 1)
}

fn halve(v: i64) -> Option<i64> {
    (v % 2 == 0).then_some(v / 2)
}

/// Zigzag paths of size `n`, altitude `k`, exactly `i` steps, first step in
/// direction `first`.
pub fn zigzag_step_count(n: u64, k: i64, i: u64, first: Direction) -> BigUint {
    let (n, i) = (n as i64, i as i64);
    if i == 0 || (n - k - i).rem_euclid(2) != 0 {
        return BigUint::zero();
    }
    if i % 2 == 0 {
        let (Some(h), Some(a), Some(b)) = (halve(i), halve(n - i - k), halve(n - i + k)) else {
            return BigUint::zero();
        };
        return binom(h, a) * binom(h, b);
    }
    let (Some(a), Some(b)) = (halve(n - k - i), halve(n + k - i)) else {
        return BigUint::zero();
    };
    let (hi, lo) = ((i + 1) / 2, (i - 1) / 2);
    match first {
        Direction::Up => binom(hi, a + 1) * binom(lo, b - 1),
        Direction::Down => binom(lo, a - 1) * binom(hi, b + 1),
    }
}

/// Mean number of steps of a zigzag path of size `n` ending at altitude `k`.
pub fn expected_steps(n: u64, k: i64) -> Result<ExactRational> {
    let mut total = BigUint::zero();
    let mut weighted = BigUint::zero();
    for i in 1..=n {
        let c = zigzag_step_count(n, k, i, Direction::Up) + zigzag_step_count(n, k, i, Direction::Down);
        if !c.is_zero() {
            weighted += &c * i;
            total += c;
        }
    }
    if n == 0 && k == 0 {
        return Ok(BigRational::zero());
    }
    if total.is_zero() {
        return Err(Error::UndefinedExpectation { n: n as i64, k });
    }
    Ok(BigRational::new(BigInt::from(weighted), BigInt::from(total)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_convention() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(3, 5), BigUint::zero());
        assert_eq!(binom(4, 0), BigUint::one());
        assert_eq!(binom(-1, 0), BigUint::zero());
        assert_eq!(binom(4, -1), BigUint::zero());
    }

    #[test]
    fn small_pairs() {
        assert_eq!(comp_pairs_count(2, 2), BigUint::from(2u32));
        assert_eq!(comp_pairs_count(0, 0), BigUint::one());
        assert_eq!(comp_pairs_count(1, 1), BigUint::one());
        assert_eq!(comp_pairs_count(1, 3), BigUint::zero());
        assert_eq!(comp_pairs_count(0, 2), BigUint::zero());
    }

    #[test]
    fn table_entries() {
        assert_eq!(zigzag_count_closed(4, 0), BigUint::from(4u32));
        assert_eq!(zigzag_count_closed(7, 0), BigUint::from(6u32));
        assert_eq!(zigzag_count_closed(0, 0), BigUint::one());
        assert_eq!(zigzag_count_closed(0, 1), BigUint::zero());
    }

    #[test]
    fn step_counts() {
        assert_eq!(zigzag_step_count(2, 0, 2, Direction::Up), BigUint::one());
        assert_eq!(zigzag_step_count(4, 0, 2, Direction::Up), BigUint::one());
        assert_eq!(zigzag_step_count(4, 0, 3, Direction::Up), BigUint::zero());
        assert_eq!(zigzag_step_count(4, 0, 0, Direction::Up), BigUint::zero());
    }

    #[test]
    fn expectations() {
        assert_eq!(expected_steps(4, 0).unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(expected_steps(2, 0).unwrap(), BigRational::from_integer(2.into()));
        assert!(matches!(expected_steps(1, 0), Err(Error::UndefinedExpectation { .. })));
    }
}
