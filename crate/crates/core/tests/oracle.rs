use cyclesat::oracle::enumerate::{classes_by_bitmask, Levels};
use cyclesat::oracle::{
    exact_min, exact_min_sharded, exact_min_with, passes, passing_classes, FloorPolicy, OracleConfig,
    OracleOutcome, SatMode,
};
use cyclesat::saturation::{is_saturated, is_semisaturated};
use cyclesat::suitability::{mine_suitable, MineOutcome, MinerConfig, SuitabilityMode};

/// Number of graphs on n unlabeled vertices, n = 0..=7.
const GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

#[test]
fn levels_count_all_graphs() {
    for (n, &expected) in GRAPH_COUNTS.iter().enumerate() {
        let mut levels = Levels::new(n);
        let mut total = levels.classes().len();
        while !levels.is_last() {
            levels.advance(4);
            total += levels.classes().len();
        }
        assert_eq!(total, expected, "n = {n}");
    }
}

#[test]
fn bitmask_levels_sum_to_graph_counts() {
    for n in 0usize..=6 {
        let total: usize = (0..=n * n.saturating_sub(1) / 2).map(|m| classes_by_bitmask(n, m).len()).sum();
        assert_eq!(total, GRAPH_COUNTS[n]);
    }
}

#[test]
fn shard_invariance() {
    for (n, k, mode) in [(5, 4, SatMode::Sat), (6, 3, SatMode::Sat), (7, 5, SatMode::Ssat), (7, 6, SatMode::Sat)] {
        let one = exact_min_sharded(n, k, mode, 1).unwrap();
        for shards in [2, 3, 8] {
            let many = exact_min_sharded(n, k, mode, shards).unwrap();
            assert_eq!(many.outcome, one.outcome, "({n}, {k}, {mode}) shards = {shards}");
        }
    }
}

#[test]
fn witnesses_verify_and_are_minimal() {
    for (n, k, mode) in [(6, 4, SatMode::Sat), (7, 5, SatMode::Ssat), (7, 6, SatMode::Ssat), (7, 7, SatMode::Sat)] {
        let r = exact_min(n, k, mode).unwrap();
        let OracleOutcome::Exact { value, witness, code } = &r.outcome else {
            panic!("no value");
        };
        assert_eq!(witness.edge_count(), *value);
        let verdict = match mode {
            SatMode::Sat => is_saturated(witness, k).unwrap(),
            SatMode::Ssat => is_semisaturated(witness, k).unwrap(),
        };
        verdict.certificate().unwrap().validate(witness).unwrap();
        assert_eq!(passing_classes(n, k, mode, *value).unwrap().first(), Some(code));
        assert!(passing_classes(n, k, mode, value - 1).unwrap().is_empty());
    }
}

#[test]
fn connectivity_floor_agrees_with_bounds_floor() {
    for (n, k) in [(7, 5), (8, 6), (8, 7)] {
        for mode in [SatMode::Sat, SatMode::Ssat] {
            let a = exact_min(n, k, mode).unwrap();
            let b = exact_min_with(
                n,
                k,
                mode,
                &OracleConfig {
                    floor: FloorPolicy::Connectivity,
                    ..OracleConfig::default()
                },
            )
            .unwrap();
            assert_eq!(a.outcome, b.outcome);
        }
    }
}

#[test]
fn disconnected_graphs_never_pass_small_cycles() {
    for n in 4..=7 {
        for k in [3, 4] {
            for mode in [SatMode::Sat, SatMode::Ssat] {
                let value = exact_min(n, k, mode).unwrap().value().unwrap();
                let mut levels = Levels::new(n);
                while levels.edge_count() < value {
                    levels.advance(1);
                }
                for code in levels.classes() {
                    let g = code.to_graph();
                    if !g.is_connected() {
                        assert!(!passes(&g, k, mode).unwrap(), "{code}");
                    }
                }
            }
        }
    }
}

#[test]
fn miner_five() {
    let r = mine_suitable(5, SuitabilityMode::K, &MinerConfig::default()).unwrap();
    let MineOutcome::Found(w) = r.outcome else {
        panic!("nothing found");
    };
    assert!(w.edges <= 8);
    assert!(cyclesat::suitability::is_k_suitable(&w.labeled, 5).unwrap().holds());
}

#[test]
fn expired_budgets_still_report_the_floor() {
    let config = OracleConfig {
        time_budget: Some(std::time::Duration::ZERO),
        ..OracleConfig::default()
    };
    let r = exact_min_with(9, 5, SatMode::Ssat, &config).unwrap();
    assert_eq!(r.outcome, OracleOutcome::AtLeast(r.floor.max(1)));
    assert!(r.floor >= 8);

    let mined = mine_suitable(
        6,
        SuitabilityMode::K,
        &MinerConfig {
            time_budget: Some(std::time::Duration::ZERO),
            ..MinerConfig::default()
        },
    )
    .unwrap();
    assert_eq!(mined.outcome, MineOutcome::TimedOut { at_least: 5 });
}
