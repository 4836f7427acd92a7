use knightpaths::closedform::{comp_pairs_count, expected_steps, zigzag_count_closed, zigzag_step_count};
use knightpaths::enumerate::{count, generate, AltitudeFilter, CountQuery};
use knightpaths::{Direction, PathConstraints};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const TABLE_1: [[u64; 16]; 5] = [
    [1, 0, 2, 0, 4, 2, 10, 6, 22, 16, 52, 44, 126, 116, 306, 302],
    [0, 0, 1, 2, 2, 4, 4, 10, 11, 26, 28, 64, 71, 160, 183, 402],
    [0, 1, 0, 1, 0, 3, 2, 7, 6, 16, 18, 40, 52, 100, 142, 252],
    [0, 0, 0, 0, 1, 0, 2, 0, 6, 2, 16, 8, 41, 28, 107, 90],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 0, 10, 2, 30, 10, 85],
];

fn one_two_compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in [1, 2] {
        if first <= n {
            for mut rest in one_two_compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

#[test]
fn comp_pairs_agree_with_brute_force() {
    let comps: Vec<Vec<Vec<u64>>> = (0..=12).map(one_two_compositions).collect();
    for n in 0..=12u64 {
        for m in 0..=12u64 {
            let brute = comps[n as usize]
                .iter()
                .flat_map(|x| comps[m as usize].iter().filter(move |y| y.len() == x.len()))
                .count();
            assert_eq!(comp_pairs_count(n, m), BigUint::from(brute), "({n}, {m})");
        }
    }
}

#[test]
fn table_one_grid() {
    for (k, row) in TABLE_1.iter().enumerate() {
        for (n, &want) in row.iter().enumerate() {
            assert_eq!(zigzag_count_closed(n as u64, k as i64), BigUint::from(want), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn closed_form_matches_dp() {
    for n in 0..=20usize {
        let n_i = n as i64;
        for k in -2 * n_i..=2 * n_i {
            let q = CountQuery::new(n, PathConstraints::zigzag(), AltitudeFilter::Exact(k));
            assert_eq!(zigzag_count_closed(n as u64, k), count(&q), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn step_refinement_sums_to_total() {
    for n in 0..=14u64 {
        for k in -5..=5i64 {
            let sum: BigUint = (0..=n)
                .flat_map(|i| [Direction::Up, Direction::Down].map(|d| zigzag_step_count(n, k, i, d)))
                .sum();
            let want = if n == 0 { BigUint::zero() } else { zigzag_count_closed(n, k) };
            assert_eq!(sum, want, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn step_counts_match_filtered_dp() {
    for n in 1..=12usize {
        for k in -4..=4i64 {
            for i in 1..=n {
                for d in [Direction::Up, Direction::Down] {
                    let c = PathConstraints::zigzag().with_steps(i).with_first(d);
                    let q = CountQuery::new(n, c, AltitudeFilter::Exact(k));
                    assert_eq!(zigzag_step_count(n as u64, k, i as u64, d), count(&q), "n={n} k={k} i={i} {d:?}");
                }
            }
        }
    }
}

#[test]
fn expected_steps_match_enumeration() {
    for n in 1..=12usize {
        for k in -3..=3i64 {
            let paths = generate(n, &PathConstraints::zigzag(), AltitudeFilter::Exact(k)).unwrap();
            if paths.is_empty() {
                assert!(expected_steps(n as u64, k).is_err());
                continue;
            }
            let steps: usize = paths.iter().map(|p| p.step_count()).sum();
            let want = BigRational::new(steps.into(), paths.len().into());
            assert_eq!(expected_steps(n as u64, k).unwrap(), want);
        }
    }
}

proptest! {
    #[test]
    fn symmetric_in_altitude(n in 0u64..60, k in -40i64..40) {
        prop_assert_eq!(zigzag_count_closed(n, k), zigzag_count_closed(n, -k));
    }

    #[test]
    fn same_parity_counts_are_even(n in 1u64..80, k in -30i64..30) {
        prop_assume!((n as i64 - k).rem_euclid(2) == 0);
        let c = zigzag_count_closed(n, k);
        prop_assert!((&c % 2u32).is_zero());
        if n as i64 >= k.abs() {
            let pairs = comp_pairs_count((n as i64 - k) as u64 / 2, (n as i64 + k) as u64 / 2);
            prop_assert_eq!(c, pairs * 2u32);
        }
    }

    #[test]
    fn comp_pairs_symmetric(n in 0u64..50, m in 0u64..50) {
        prop_assert_eq!(comp_pairs_count(n, m), comp_pairs_count(m, n));
    }

    #[test]
    fn step_counts_are_direction_symmetric(n in 0u64..40, k in -20i64..20, i in 0u64..40) {
        prop_assume!(i % 2 == 0);
        prop_assert_eq!(zigzag_step_count(n, k, i, Direction::Up), zigzag_step_count(n, k, i, Direction::Down));
    }
}
