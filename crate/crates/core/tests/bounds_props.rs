use cyclesat::bounds::{check_consistency, eval_bounds, known_exact, BoundKind, Observation, Rational, Source};
use proptest::prelude::*;

fn value(n: usize, k: usize, name: &str) -> Rational {
    eval_bounds(n, k).get(name).unwrap().value
}

#[test]
fn sat_interval_is_nonempty() {
    for k in 7..40 {
        for n in 2 * k - 5..2 * k + 200 {
            assert!(value(n, k, "sat-lower") < value(n, k, "sat-upper"), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn wheel_path_bound_tracks_c6_bound() {
    for n in 10..=200 {
        let t = eval_bounds(n, 6);
        let a = t.get("ssat-wheel-paths-upper").unwrap();
        let b = t.get("ssat-c6-upper").unwrap();
        assert!(a.applicable && b.applicable);
        let diff = a.value - b.value;
        assert!(
            diff >= Rational::from_integer(-1) && diff <= Rational::from_integer(1),
            "n = {n}: {} vs {}",
            a.value,
            b.value
        );
    }
}

#[test]
fn c5_semisaturation_beats_saturation() {
    for n in 21..=500 {
        let ssat = value(n, 5, "ssat-c5-upper");
        let sat = Rational::from_integer(known_exact(n, 5).unwrap());
        assert!(ssat < sat, "n = {n}");
    }
}

#[test]
fn table_is_exact_in_known_spots() {
    assert_eq!(value(9, 7, "sat-lower"), Rational::from_integer(9));
    assert_eq!(value(20, 5, "sat-refined-lower"), Rational::new(239, 11));
    assert_eq!(value(16, 6, "ssat-wheel-paths-upper"), Rational::from_integer(22));
    assert_eq!(value(20, 8, "ssat-thin-paths-upper"), Rational::from_integer(28));
    assert_eq!(value(9, 5, "ssat-c5-upper"), Rational::from_integer(11));
}

#[test]
fn regimes() {
    let t = eval_bounds(8, 7);
    assert!(!t.get("sat-lower").unwrap().applicable);
    assert!(eval_bounds(9, 7).get("sat-lower").unwrap().applicable);
    assert!(!eval_bounds(5, 6).get("ssat-lower").unwrap().applicable);
    assert_eq!(known_exact(20, 4), Some(27));
    assert_eq!(known_exact(4, 4), None);
}

proptest! {
    #[test]
    fn strict_bounds_stay_strict(n in 9usize..300, k in 7usize..20) {
        prop_assume!(n + 5 >= 2 * k);
        let t = eval_bounds(n, k);
        let lower = t.get("sat-lower").unwrap();
        prop_assert_eq!(lower.kind, BoundKind::LowerStrict);
        let least = lower.least_integer().unwrap();
        prop_assert!(lower.admits(least));
        prop_assert!(!lower.admits(least - 1));
        let upper = t.get("sat-upper").unwrap();
        let greatest = upper.greatest_integer().unwrap();
        prop_assert!(upper.admits(greatest));
        prop_assert!(!upper.admits(greatest + 1));
    }

    #[test]
    fn consistency_flags_exactly_the_out_of_range_values(n in 9usize..60, k in 7usize..12, x in 0i64..200) {
        prop_assume!(n + 5 >= 2 * k);
        let t = eval_bounds(n, k);
        let report = check_consistency(n, k, &[Observation::new(Source::SatExact, x)]);
        let expected = t
            .entries
            .iter()
            .filter(|e| e.is_assertable() && e.quantity == cyclesat::bounds::Quantity::Sat)
            .all(|e| e.admits(x));
        prop_assert_eq!(report.is_consistent(), expected);
    }

    #[test]
    fn csv_round_trips_values(n in 1usize..100, k in 3usize..15) {
        let t = eval_bounds(n, k);
        let csv = t.to_csv();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        prop_assert_eq!(rows.len(), t.entries.len());
        for (row, e) in rows.iter().zip(&t.entries) {
            let cols: Vec<&str> = row.split(',').collect();
            let v = Rational::new(cols[2].parse().unwrap(), cols[3].parse().unwrap());
            prop_assert_eq!(v, e.value);
        }
    }
}
