use knightpaths::{path_of_string, validate_path, Composition, Direction, Path, PathConstraints, Step};
use proptest::prelude::*;

fn path_strategy() -> impl Strategy<Value = Path> {
    prop::collection::vec(prop::sample::select(Step::ALL.to_vec()), 0..30).prop_map(Path::new)
}

fn zigzag_strategy() -> impl Strategy<Value = Path> {
    (any::<bool>(), prop::collection::vec(any::<bool>(), 0..30)).prop_map(|(up, kinds)| {
        let mut dir = if up { Direction::Up } else { Direction::Down };
        let steps = kinds
            .into_iter()
            .map(|wide| {
                let s = match (dir, wide) {
                    (Direction::Up, false) => Step::N,
                    (Direction::Up, true) => Step::E,
                    (Direction::Down, false) => Step::NBar,
                    (Direction::Down, true) => Step::EBar,
                };
                dir = dir.flip();
                s
            })
            .collect();
        Path::new(steps)
    })
}

#[test]
fn parsing_examples() {
    let p = path_of_string("NNbEEb").unwrap();
    assert_eq!(p.steps(), &[Step::N, Step::NBar, Step::E, Step::EBar]);
    assert_eq!(p.size(), 6);
    assert_eq!(p.altitude(), 0);
    assert!(path_of_string("NX").is_err());
    assert_eq!(path_of_string("").unwrap(), Path::empty());
}

#[test]
fn constraint_examples() {
    let p: Path = "N Eb".parse().unwrap();
    assert!(validate_path(&p, &PathConstraints::zigzag()));
    let q: Path = "N N".parse().unwrap();
    assert!(!validate_path(&q, &PathConstraints::zigzag()));
    assert!(validate_path(&q, &PathConstraints::unconstrained()));
    assert!(!validate_path(&p, &PathConstraints::zigzag().with_max_y(1)));
    assert!(PathConstraints::zigzag().with_band(2, -3).validate().is_err());
}

#[test]
fn compositions() {
    let c: Composition = "(2,1,1)".parse().unwrap();
    assert_eq!(c.total(), 4);
    assert_eq!(c.to_string(), "2,1,1");
    assert!(Composition::new(vec![0]).is_err());
    assert_eq!(Composition::all_with_parts(4, &[1, 2]).len(), 5);
}

proptest! {
    #[test]
    fn text_and_json_round_trip(p in path_strategy()) {
        prop_assert_eq!(path_of_string(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(Path::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn reflection_negates_heights(p in path_strategy()) {
        let r = p.reflect();
        prop_assert_eq!(r.size(), p.size());
        prop_assert_eq!(r.altitude(), -p.altitude());
        prop_assert_eq!(r.is_zigzag(), p.is_zigzag());
        let hs: Vec<i64> = p.heights().map(|h| -h).collect();
        prop_assert_eq!(r.heights().collect::<Vec<_>>(), hs);
    }

    #[test]
    fn reversal_keeps_zigzag_and_size(p in zigzag_strategy()) {
        prop_assert!(p.is_zigzag());
        let rev = p.reversed();
        prop_assert!(rev.is_zigzag());
        prop_assert_eq!(rev.size(), p.size());
        prop_assert_eq!(rev.altitude(), p.altitude());
        prop_assert!(validate_path(&p, &PathConstraints::zigzag()));
    }

    #[test]
    fn size_and_altitude_add_under_concat(a in path_strategy(), b in path_strategy()) {
        let c = a.concat(&b);
        prop_assert_eq!(c.size(), a.size() + b.size());
        prop_assert_eq!(c.altitude(), a.altitude() + b.altitude());
    }

    #[test]
    fn bands_bound_every_vertex(p in path_strategy(), m in 0i64..6, big_m in 0i64..6) {
        let c = PathConstraints::unconstrained().with_band(m, big_m);
        let inside = p.heights().all(|h| -m <= h && h <= big_m);
        prop_assert_eq!(validate_path(&p, &c), inside);
    }
}
