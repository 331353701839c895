//! Exact search against the brute-force oracle, and the frozen values the
//! oracle produced for the named example sets.

mod common;

use common::{brute_boxes, brute_gap, brute_periodic, exact_f64, q, theorem1, worked_set};
use torus_dispersion::exact::{
    cyclic_gap_dispersion_1d, exact_dispersion_boxes, exact_dispersion_periodic,
    sampled_dispersion_lower_bound,
};
use torus_dispersion::generators::{gen_fibonacci, gen_grid, gen_random};
use torus_dispersion::witness::witness_theorem1;
use torus_dispersion::{Exact, PointSet, SampleOptions, SearchOptions, Witness, WitnessOptions};

fn opts() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn worked_set_oracle_value_is_frozen() {
    let set = worked_set().to_exact();
    let oracle = brute_periodic(&set);
    // frozen from the oracle: the box (full circle minus 0.3) x (0.3, 0.9)
    let frozen = exact_f64(0.9) - exact_f64(0.3);
    assert_eq!(oracle, frozen);
    assert!(oracle >= q(1, 2));

    let got = exact_dispersion_periodic(&set, &opts()).unwrap();
    assert_eq!(got.volume, frozen);
    let Some(Witness::Periodic(b)) = &got.witness else {
        panic!("periodic witness expected")
    };
    assert_eq!(b.anchors(), vec![exact_f64(0.3), exact_f64(0.3)]);
    assert!(b.intervals()[0].is_full());
}

#[test]
fn single_centre_point_in_square() {
    let set = PointSet::canonicalize(&[[0.5, 0.5]], None).unwrap().to_exact();
    assert_eq!(brute_boxes(&set), q(1, 2));
    assert_eq!(exact_dispersion_boxes(&set, &opts()).unwrap().volume, q(1, 2));
    assert_eq!(brute_periodic(&set), q(1, 1));
}

#[test]
fn grid_two_by_two_is_one_half() {
    let set: PointSet<Exact> = gen_grid(2, 2).unwrap();
    assert_eq!(brute_periodic(&set), q(1, 2));
    assert_eq!(exact_dispersion_periodic(&set, &opts()).unwrap().volume, q(1, 2));
}

#[test]
fn grid_one_dimensional_is_one_over_m() {
    for m in 1..=12 {
        let set: PointSet<Exact> = gen_grid(m, 1).unwrap();
        assert_eq!(exact_dispersion_periodic(&set, &opts()).unwrap().volume, q(1, m as u64));
    }
}

#[test]
fn fibonacci_dispersion_frozen() {
    // oracle values; each equals 2/n, so the bound is attained
    let mut previous = q(1, 1);
    for (n, expected) in [(5u64, q(2, 5)), (8, q(1, 4)), (13, q(2, 13))] {
        let set: PointSet<Exact> = gen_fibonacci(n as usize).unwrap();
        let oracle = brute_periodic(&set);
        assert_eq!(oracle, expected, "n = {n}");
        assert_eq!(exact_dispersion_periodic(&set, &opts()).unwrap().volume, oracle);
        assert!(oracle <= previous);
        previous = oracle;
    }
}

#[test]
fn random_sets_match_oracle() {
    let mut checked = 0;
    for d in 1..=3usize {
        let max_n = match d {
            1 => 12,
            2 => 7,
            _ => 4,
        };
        for n in 1..=max_n {
            for seed in 0..3u64 {
                let set: PointSet<Exact> = gen_random(n, d, 1000 * d as u64 + 10 * n as u64 + seed).unwrap();
                let per = exact_dispersion_periodic(&set, &opts()).unwrap();
                assert_eq!(per.volume, brute_periodic(&set), "periodic d={d} n={n} seed={seed}");
                let boxes = exact_dispersion_boxes(&set, &opts()).unwrap();
                assert_eq!(boxes.volume, brute_boxes(&set), "boxes d={d} n={n} seed={seed}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 3 * (12 + 7 + 4));
}

#[test]
fn degenerate_sets_match_oracle() {
    // shared coordinates, duplicates, points on 0
    let sets: Vec<Vec<[f64; 2]>> = vec![
        vec![[0.0, 0.0], [0.0, 0.5], [0.5, 0.0]],
        vec![[0.25, 0.25]; 4],
        vec![[0.25, 0.75], [0.25, 0.25], [0.75, 0.25], [0.75, 0.75], [0.5, 0.5]],
        vec![[0.125, 0.5], [0.375, 0.5], [0.625, 0.5], [0.875, 0.5]],
        vec![[0.0, 0.0], [0.5, 0.5], [0.0, 0.5], [0.5, 0.0], [0.25, 0.25], [0.75, 0.75]],
    ];
    for raw in sets {
        let set = PointSet::canonicalize(&raw, None).unwrap().to_exact();
        assert_eq!(exact_dispersion_periodic(&set, &opts()).unwrap().volume, brute_periodic(&set), "{raw:?}");
        assert_eq!(exact_dispersion_boxes(&set, &opts()).unwrap().volume, brute_boxes(&set), "{raw:?}");
    }
}

#[test]
fn one_dimensional_gap_matches_sort_oracle() {
    for seed in 0..20u64 {
        let set: PointSet<Exact> = gen_random(1 + seed as usize, 1, seed).unwrap();
        let gap = cyclic_gap_dispersion_1d(&set).unwrap();
        assert_eq!(gap.volume, brute_gap(&set.axis_values(0)));
    }
    let set = PointSet::canonicalize(&[[0.1], [0.2], [0.9]], None).unwrap().to_exact();
    assert_eq!(brute_gap(&set.axis_values(0)), exact_f64(0.9) - exact_f64(0.2));
}

#[test]
fn sampling_never_beats_oracle() {
    for seed in 0..10u64 {
        let n = 2 + (seed as usize % 5);
        let set: PointSet<Exact> = gen_random(n, 2, 500 + seed).unwrap();
        let exact = brute_periodic(&set);
        let sampled = sampled_dispersion_lower_bound(&set, &SampleOptions { trials: 300, seed }).unwrap();
        assert!(sampled.volume <= exact);
    }
}

#[test]
fn witness_between_bound_and_oracle() {
    for seed in 0..30u64 {
        let d = 1 + (seed as usize % 3);
        let n = 1 + (seed as usize % 6);
        let set: PointSet<Exact> = gen_random(n, d, 900 + seed).unwrap();
        let w = witness_theorem1(&set, &WitnessOptions::default()).unwrap();
        assert!(w.volume >= theorem1(n, d));
        assert!(w.volume <= brute_periodic(&set));
    }
}
