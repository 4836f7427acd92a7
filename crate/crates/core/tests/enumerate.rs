use knightpaths::enumerate::{
    altitude_profile, count, count_primitive, count_row, generate, generate_with_cap, AltitudeFilter, CountQuery,
};
use knightpaths::{validate_path, Direction, PathConstraints};
use num_bigint::BigUint;
use proptest::prelude::*;

fn ints(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

#[test]
fn rows_from_known_lists() {
    let zig = PathConstraints::zigzag();
    assert_eq!(count_row(6, &zig, AltitudeFilter::All), ints(&[1, 2, 4, 6, 10, 16, 26]));
    let grand = PathConstraints::unconstrained();
    assert_eq!(count_row(6, &grand, AltitudeFilter::NonNegative), ints(&[1, 1, 4, 8, 26, 63, 186]));
    let above = PathConstraints::zigzag().with_min_y(-2);
    assert_eq!(count_row(7, &above, AltitudeFilter::All), ints(&[1, 2, 4, 6, 9, 15, 23, 38]));
}

#[test]
fn grand_table() {
    let table: [[u64; 10]; 10] = [
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [2, 1, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 2, 3, 2, 0, 0, 1, 0, 0, 0],
        [8, 6, 1, 3, 4, 3, 0, 0, 1, 0],
        [6, 12, 16, 12, 3, 4, 5, 4, 0, 0],
        [44, 33, 18, 21, 27, 20, 6, 5, 6, 5],
        [60, 76, 95, 72, 40, 34, 41, 30, 10, 6],
        [256, 210, 154, 155, 177, 135, 75, 52, 58, 42],
        [460, 520, 581, 480, 335, 288, 299, 228, 126, 76],
    ];
    for (n, row) in table.iter().enumerate() {
        for (k, &want) in row.iter().enumerate() {
            let q = CountQuery::new(n, PathConstraints::unconstrained(), AltitudeFilter::Exact(k as i64));
            assert_eq!(count(&q), BigUint::from(want), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn row_equals_single_counts() {
    let c = PathConstraints::zigzag().with_band(2, 3);
    let row = count_row(12, &c, AltitudeFilter::NonNegative);
    for (n, v) in row.iter().enumerate() {
        assert_eq!(v, &count(&CountQuery::new(n, c.clone(), AltitudeFilter::NonNegative)));
    }
}

#[test]
fn primitive_paths() {
    let b: Vec<BigUint> = (0..=22).map(count_primitive).collect();
    let want = ints(&[1, 0, 2, 0, 2, 2, 4, 2, 4, 2, 6, 2, 10, 2, 18, 2, 36, 2, 76, 2, 166, 2, 372]);
    assert_eq!(b, want);
}

#[test]
fn generation_agrees_with_counts() {
    let configs = [
        PathConstraints::unconstrained(),
        PathConstraints::zigzag(),
        PathConstraints::zigzag().with_band(1, 2),
        PathConstraints::zigzag().with_first(Direction::Down).with_last(Direction::Up),
        PathConstraints::unconstrained().with_steps(3),
    ];
    for c in &configs {
        for n in 0..=9 {
            let paths = generate(n, c, AltitudeFilter::All).unwrap();
            assert_eq!(BigUint::from(paths.len()), count(&CountQuery::new(n, c.clone(), AltitudeFilter::All)));
            assert!(paths.iter().all(|p| validate_path(p, c) && p.size() == n));
            assert!(paths.windows(2).all(|w| w[0].steps() < w[1].steps()));
        }
    }
    assert!(generate_with_cap(30, &PathConstraints::zigzag(), AltitudeFilter::All, 20).is_err());
}

#[test]
fn valuation_law() {
    // every path of size <= 3m-3 stays above y = -m; size 3m-2 does not
    for m in 1..=5i64 {
        let c = PathConstraints::zigzag().with_min_y(-m);
        let bounded = count_row(3 * m as usize - 2, &c, AltitudeFilter::All);
        let free = count_row(3 * m as usize - 2, &PathConstraints::zigzag(), AltitudeFilter::All);
        let n = 3 * m as usize - 2;
        assert_eq!(bounded[..n], free[..n]);
        assert!(bounded[n] < free[n]);
    }
}

proptest! {
    #[test]
    fn profiles_are_symmetric(n in 0usize..25, zig in any::<bool>()) {
        let c = if zig { PathConstraints::zigzag() } else { PathConstraints::unconstrained() };
        let p = altitude_profile(n, &c);
        for (y, v) in &p {
            let mirror = p.iter().find(|(z, _)| *z == -*y).map(|(_, w)| w.clone());
            prop_assert_eq!(Some(v.clone()), mirror);
        }
    }

    #[test]
    fn start_direction_splits_evenly(n in 1usize..25, k in -10i64..10) {
        let up = count(&CountQuery::new(n, PathConstraints::zigzag().with_first(Direction::Up), AltitudeFilter::Exact(k)));
        let down = count(&CountQuery::new(n, PathConstraints::zigzag().with_first(Direction::Down), AltitudeFilter::Exact(-k)));
        prop_assert_eq!(up, down);
    }

    #[test]
    fn bands_are_monotone(n in 0usize..20, m in 0i64..3, big_m in 1i64..4) {
        let narrow = count(&CountQuery::new(n, PathConstraints::zigzag().with_band(m, big_m), AltitudeFilter::All));
        let wide = count(&CountQuery::new(n, PathConstraints::zigzag().with_band(m + 1, big_m), AltitudeFilter::All));
        prop_assert!(narrow <= wide);
    }
}
