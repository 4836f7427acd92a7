use knightpaths::asymptotics::{convergence_report, evaluate, exact_values, ExactSource, FormulaId};
use knightpaths::Error;

#[test]
fn grand_nonneg_ratios_approach_one() {
    let r = convergence_report(FormulaId::GrandNonNeg, ExactSource::Enumerate, &[50, 100, 200]).unwrap();
    for row in &r.rows {
        let x = row.ratio.unwrap();
        assert!((0.9..=1.1).contains(&x), "n = {}: {x}", row.n);
    }
    assert!(r.approaching);
}

#[test]
fn sources_agree_on_small_sizes() {
    let ns = [5, 9, 14];
    let cases = [
        (FormulaId::GrandAll, ExactSource::Series),
        (FormulaId::GrandNonNeg, ExactSource::Series),
        (FormulaId::GrandAltitudeSum, ExactSource::Series),
        (FormulaId::GrandExpectedAltitude, ExactSource::Series),
        (FormulaId::GrandExpectedAltitudeNonNeg, ExactSource::Series),
        (FormulaId::ZigzagExpectedAltitude, ExactSource::ClosedForm),
        (FormulaId::ExpectedStepsEven, ExactSource::ClosedForm),
        (FormulaId::ExpectedStepsOddConjecture, ExactSource::ClosedForm),
        (FormulaId::AboveLineProb(1), ExactSource::Series),
        (FormulaId::AboveLineProb(2), ExactSource::Series),
        (FormulaId::MinHeightProb(2), ExactSource::Series),
        (FormulaId::MinHeightProb(3), ExactSource::Series),
    ];
    for (id, other) in cases {
        let dp = exact_values(id, ExactSource::Enumerate, &ns).unwrap();
        let alt = exact_values(id, other, &ns).unwrap();
        assert_eq!(dp, alt, "{id}");
    }
}

#[test]
fn unsupported_sources_are_errors() {
    for (id, src) in [
        (FormulaId::GrandAll, ExactSource::ClosedForm),
        (FormulaId::ZigzagAboveAxisAltitude, ExactSource::Series),
        (FormulaId::AboveLineProb(0), ExactSource::Series),
        (FormulaId::MinHeightProb(1), ExactSource::Series),
    ] {
        assert!(matches!(exact_values(id, src, &[4]), Err(Error::UnsupportedSource { .. })), "{id}");
    }
}

#[test]
fn expected_steps_constant_is_reached() {
    let r = convergence_report(FormulaId::ExpectedStepsEven, ExactSource::ClosedForm, &[25, 50, 100]).unwrap();
    let last = r.rows.last().unwrap().ratio.unwrap();
    assert!((last - 1.0).abs() < 0.05, "{last}");
}

#[test]
fn undefined_values_are_reported_not_failed() {
    // a zigzag path of size 1 never ends on the axis
    let r = convergence_report(FormulaId::ExpectedStepsOddConjecture, ExactSource::ClosedForm, &[1, 5]).unwrap();
    assert_eq!(r.rows[0].exact, "undefined");
    assert!(r.rows[0].ratio.is_none());
    assert!(r.rows[1].ratio.is_some());
}

#[test]
fn report_exports() {
    let r = convergence_report(FormulaId::GrandAll, ExactSource::Series, &[1, 2]).unwrap();
    let csv = r.to_csv(true);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,exact,estimate,ratio");
    assert!(lines[1].starts_with("1,2,"));
    assert!(lines[2].starts_with("2,6,"));
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 2);
    assert!(convergence_report(FormulaId::GrandAll, ExactSource::Series, &[2, 1]).is_err());
    assert!(evaluate(FormulaId::AboveLineProb(1), 10).unwrap().value > 0.0);
}
