// The exact search split over worker threads. Ties are broken by the
// smallest (anchor, length) vector, so every split reports the same box.
//
//     cargo run --release --example parallel_search

use std::time::Instant;

use torus_dispersion::exact::exact_dispersion_periodic;
use torus_dispersion::generators::gen_random;
use torus_dispersion::{PointSet, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let set: PointSet = gen_random(14, 3, 3)?;
    let mut reference = None;
    for workers in [1, 2, 4, 8] {
        let start = Instant::now();
        let r = exact_dispersion_periodic(&set, &SearchOptions { workers, ..SearchOptions::default() })?;
        println!(
            "{workers} workers: volume {:.6}, {} nodes, {:.1?}",
            r.volume,
            r.nodes_visited,
            start.elapsed()
        );
        match &reference {
            None => reference = Some(r.witness),
            Some(w) if *w != r.witness => return Err("witness depends on the worker count".into()),
            Some(_) => {}
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
