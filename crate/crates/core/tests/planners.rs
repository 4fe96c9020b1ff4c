mod common;

use common::{c, scripted_world};
use proptest::prelude::*;
use wildfire_ipp::harness::{generate_scenario, FireSpec, ObstacleSpec, ScenarioConfig};
use wildfire_ipp::planners::{run_fire_gipp, run_tsp_cp, run_tsp_sensor, step_cap};
use wildfire_ipp::{CellState, OutcomeKind, PlannerKind, RunResult, World};

fn assert_well_formed(world: &World, run: &RunResult) {
    let path = run.path();
    for (i, rec) in run.trace.records.iter().enumerate() {
        assert_eq!(rec.t, i as u64, "timestamps step by one");
    }
    for pair in path.windows(2) {
        assert_eq!(pair[0].chebyshev(pair[1]), 1, "one 8-connected move per timestamp");
    }
    for cell in &path {
        assert!(world.grid.is_free(*cell), "path crosses obstacle at {cell:?}");
    }
    let o = run.outcome;
    if let (Some(v), Some(l)) = (o.t_validate, o.t_localize) {
        assert!(v <= l);
    }
    match o.kind {
        OutcomeKind::Localized => assert!(o.t_localize.is_some() && o.t_validate.is_some()),
        OutcomeKind::FalsePositive => assert!(o.t_localize.is_none() && o.t_validate.is_none()),
        _ => {}
    }
    assert!(!run.capped);
}

#[test]
fn fire_gipp_localizes_on_arrival_when_fire_sits_at_the_closest_cell() {
    // Sensor at (10,10), wind east: the area fans out west to x = 2.
    let world = scripted_world(20, 20, &[c(10, 10)], &[(c(2, 10), CellState::Burning)]);
    let run = run_fire_gipp(&world, c(0, 10)).unwrap();
    assert_eq!(run.outcome.kind, OutcomeKind::Localized);
    assert_eq!(run.outcome.t_localize, Some(2));
    assert_eq!(run.outcome.t_validate, Some(2));
    assert!(run.outcome.validated_in_transit && run.outcome.localized_in_transit);
    assert_eq!(run.path(), vec![c(0, 10), c(1, 10), c(2, 10)]);
    assert_well_formed(&world, &run);
}

#[test]
fn tsp_cp_localizes_on_its_first_node() {
    let world = scripted_world(20, 20, &[c(10, 10)], &[(c(2, 10), CellState::Burning)]);
    let run = run_tsp_cp(&world, c(0, 10)).unwrap();
    assert_eq!(run.outcome.kind, OutcomeKind::Localized);
    assert_eq!(run.outcome.t_localize, Some(2));
    assert_well_formed(&world, &run);
}

#[test]
fn every_planner_declares_a_false_positive_at_the_sensor() {
    let world = scripted_world(20, 20, &[c(10, 10)], &[]);
    for kind in PlannerKind::ALL {
        let run = kind.run(&world, c(0, 3)).unwrap();
        assert_eq!(run.outcome.kind, OutcomeKind::FalsePositive, "{kind}");
        assert_eq!(run.path().last(), Some(&c(10, 10)), "{kind}");
        assert!(run.outcome.t_false_positive.is_some());
        assert_well_formed(&world, &run);
    }
}

#[test]
fn fire_gipp_waits_for_every_alerting_sensor_before_calling_a_false_positive() {
    let world = scripted_world(30, 20, &[c(10, 10), c(22, 10)], &[]);
    let run = run_fire_gipp(&world, c(0, 10)).unwrap();
    assert_eq!(run.outcome.kind, OutcomeKind::FalsePositive);
    let path = run.path();
    assert!(path.contains(&c(10, 10)) && path.contains(&c(22, 10)));
    assert_well_formed(&world, &run);
}

#[test]
fn tsp_sensor_validates_by_the_time_it_reaches_the_sensor() {
    let states = [(c(10, 10), CellState::Smoke), (c(5, 10), CellState::Burning)];
    let world = scripted_world(20, 20, &[c(10, 10)], &states);
    let run = run_tsp_sensor(&world, c(10, 0)).unwrap();
    let t_validate = run.outcome.t_validate.unwrap();
    assert!(t_validate <= run.transit_len);
    assert!(run.outcome.validated_in_transit);
    assert_eq!(run.outcome.kind, OutcomeKind::Localized);
    assert_well_formed(&world, &run);
}

#[test]
fn tsp_sensor_starting_on_the_sensor_resolves_at_t0() {
    let world = scripted_world(20, 20, &[c(10, 10)], &[(c(10, 10), CellState::Smoke)]);
    let run = run_tsp_sensor(&world, c(10, 10)).unwrap();
    assert_eq!(run.outcome.t_validate, Some(0));

    let world = scripted_world(20, 20, &[c(10, 10)], &[]);
    let run = run_tsp_sensor(&world, c(10, 10)).unwrap();
    assert_eq!(run.outcome.kind, OutcomeKind::FalsePositive);
    assert_eq!(run.trace.len(), 1);
}

#[test]
fn scripted_nine_by_nine_runs_are_byte_identical() {
    let states = [(c(1, 4), CellState::Burning), (c(3, 4), CellState::Smoke)];
    let world = scripted_world(9, 9, &[c(6, 4)], &states);
    for kind in PlannerKind::ALL {
        let a = kind.run(&world, c(8, 1)).unwrap();
        let b = kind.run(&world, c(8, 1)).unwrap();
        assert_eq!(a.trace.to_jsonl(), b.trace.to_jsonl(), "{kind}");
        assert_eq!(a.outcome, b.outcome);
        assert_well_formed(&world, &a);
    }
}

#[test]
fn start_on_an_obstacle_is_rejected() {
    let mut world = scripted_world(20, 20, &[c(10, 10)], &[]);
    world.grid.set_obstacle(c(0, 5));
    for kind in PlannerKind::ALL {
        assert!(kind.run(&world, c(0, 5)).is_err());
        assert!(kind.run(&world, c(-1, 5)).is_err());
    }
}

#[test]
fn fire_gipp_routes_around_a_wall_to_reach_the_area() {
    let mut world = scripted_world(20, 20, &[c(14, 10)], &[(c(7, 10), CellState::Burning)]);
    for y in 2..19 {
        world.grid.set_obstacle(c(4, y));
    }
    let run = run_fire_gipp(&world, c(0, 10)).unwrap();
    assert_eq!(run.outcome.kind, OutcomeKind::Localized);
    assert_well_formed(&world, &run);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_scenarios_produce_well_formed_runs(
        seed in any::<u64>(),
        false_positive in any::<bool>(),
        start_index in 0usize..1000,
    ) {
        let cfg = ScenarioConfig {
            grid_w: 40,
            grid_h: 40,
            sensor_count: 12,
            obstacle: ObstacleSpec::RandomRect { max_side: 10 },
            fire: if false_positive { FireSpec::FalsePositive } else { FireSpec::TrueFire },
            seed,
            ..Default::default()
        };
        let world = generate_scenario(&cfg).unwrap();
        let starts = wildfire_ipp::harness::perimeter_starts(&world.grid);
        let start = starts[start_index % starts.len()];
        for kind in PlannerKind::ALL {
            let run = kind.run(&world, start).unwrap();
            assert_well_formed(&world, &run);
            prop_assert!((run.trace.len() as u64) <= step_cap(&world) + 1);
            if false_positive {
                prop_assert_eq!(run.outcome.kind, OutcomeKind::FalsePositive);
            }
        }
    }
}
