use knightpaths::enumerate::{count, count_row, AltitudeFilter, CountQuery};
use knightpaths::series::{self, CoefficientExport, LaurentSeries};
use knightpaths::PathConstraints;
use num_bigint::BigUint;

fn ints(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

const ORDER: usize = 26;

#[test]
fn table_two_rows() {
    let rows: [&[u64]; 3] = [
        &[0, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2],
        &[0, 2, 2, 6, 6, 12, 14, 24, 30, 46, 60, 88, 118, 168, 228, 320, 438],
        &[0, 0, 0, 0, 2, 4, 10, 16, 32, 52, 94, 148, 252, 392, 648, 996, 1612],
    ];
    for (k, row) in rows.iter().enumerate() {
        let s = series::span_exact_gf(k as u32 + 1, 17).unwrap();
        assert_eq!(s.z_counts(17).unwrap(), ints(row), "k = {}", k + 1);
    }
}

#[test]
fn bounded_configurations_match_dp() {
    for m in 0..=3u32 {
        for big_m in m.max(1)..=3u32 {
            let c = PathConstraints::zigzag().with_band(i64::from(m), i64::from(big_m));
            let dp = count_row(ORDER - 1, &c, AltitudeFilter::All);
            let gf = series::general_tube_gf(m, big_m, ORDER).unwrap();
            assert_eq!(gf.total.z_counts(ORDER).unwrap(), dp, "[-{m}, {big_m}]");
        }
        if m >= 1 {
            let c = PathConstraints::zigzag().with_min_y(-i64::from(m));
            let dp = count_row(ORDER - 1, &c, AltitudeFilter::All);
            let (h, _) = series::above_line_gf(m, ORDER).unwrap();
            assert_eq!(h.z_counts(ORDER).unwrap(), dp, "above -{m}");
        }
    }
}

#[test]
fn dp_band_example_matches_series() {
    let q = CountQuery::new(4, PathConstraints::zigzag().with_band(2, 3), AltitudeFilter::All);
    let gf = series::general_tube_gf(2, 3, 5).unwrap().total.z_counts(5).unwrap();
    assert_eq!(count(&q), gf[4]);
}

#[test]
fn truncation_is_consistent() {
    let (a, _) = series::grand_h0_h1(15).unwrap();
    let (b, _) = series::grand_h0_h1(30).unwrap();
    assert_eq!(a.z_counts(15).unwrap(), b.z_counts(30).unwrap()[..15].to_vec());
    let a = series::zigzag_f0(15).unwrap();
    let b = series::zigzag_f0(30).unwrap();
    assert_eq!(a.z_counts(15).unwrap(), b.z_counts(30).unwrap()[..15].to_vec());
}

#[test]
fn altitudes_reconstruct_zigzag_total() {
    let mut total = vec![BigUint::from(0u32); ORDER];
    for k in 0..=2 * ORDER as i64 {
        let c = series::zigzag_altitude_gf(k, ORDER).unwrap().z_counts(ORDER).unwrap();
        let mult = if k == 0 { 1u32 } else { 2 };
        for (t, v) in total.iter_mut().zip(c) {
            *t += v * mult;
        }
    }
    assert_eq!(total, series::zigzag_rational(ORDER));
}

#[test]
fn rational_gfs_reach_forty() {
    let zig = count_row(40, &PathConstraints::zigzag(), AltitudeFilter::All);
    assert_eq!(series::zigzag_rational(41), zig);
    let all = count_row(40, &PathConstraints::unconstrained(), AltitudeFilter::All);
    assert_eq!(series::grand_all_gf().expand_counts(41).unwrap(), all);
    let tube = count_row(40, &PathConstraints::zigzag().with_band(1, 1), AltitudeFilter::Exact(0));
    assert_eq!(series::tube1_axis_gf().expand_counts(41).unwrap(), tube);
}

#[test]
fn rational_gfs_expand_far() {
    let c = series::zigzag_rational_gf().expand_counts(100_001).unwrap();
    assert_eq!(c.len(), 100_001);
    // coefficients are twice the Fibonacci numbers
    assert_eq!(&c[100_000], &(&c[99_999] + &c[99_998]));
}

#[test]
fn parity_purity_and_sqrt() {
    let d = LaurentSeries::from_z_poly(&[1, 0, -2, 0, -1, 0, -2, 0, 1], 120);
    let b = series::sqrt_series(&d).unwrap();
    assert!((&(&b * &b) - &d).is_zero());
    assert!(b.is_even());
    let odd = LaurentSeries::from_z_poly(&[0, 4, 8, 0, 1], 40);
    let root = series::sqrt_series(&odd).unwrap();
    assert_eq!(root.valuation(), 1);
    assert!(!root.is_even());
}

#[test]
fn export_round_trip() {
    let c = series::zigzag_primitive_gf(23).unwrap().z_counts(23).unwrap();
    let e = CoefficientExport::new("primitive", &c);
    let back: CoefficientExport = serde_json::from_str(&e.to_json()).unwrap();
    assert_eq!(back, e);
    assert_eq!(e.coeffs[10], "6");
}
