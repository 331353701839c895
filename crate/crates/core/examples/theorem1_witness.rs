// Constructs an empty periodic box of volume at least min{1, d/n}: the
// longest arc over d consecutive gaps on the first axis, lifted through
// the remaining axes with full-circle sides that exclude the points left
// inside the arc.
//
//     cargo run --example theorem1_witness

use torus_dispersion::bounds::theorem1_bound;
use torus_dispersion::generators::gen_random;
use torus_dispersion::witness::{max_window, witness_theorem1};
use torus_dispersion::{PointSet, WitnessOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, d, seed) in [(3, 5, 1), (10, 3, 7), (40, 4, 2)] {
        let set: PointSet = gen_random(n, d, seed)?;
        let bound = theorem1_bound(n, d)?;
        let w = witness_theorem1(&set, &WitnessOptions::default())?;
        println!("n = {n:>2}, d = {d}: {} witness, volume {:.4} >= {bound:.4}", w.case.as_str(), w.volume);
        if n > d {
            let (arc, inside) = max_window(&set.axis_values(0), d)?;
            println!("  window ({:.4}, +{:.4}), points inside: {inside:?}", arc.anchor(), arc.length());
        }
        println!("  anchors {:.4?}", w.witness.anchors());
        println!("  lengths {:.4?}", w.witness.lengths());
        if !w.witness.is_empty_for(&set)? || w.volume < bound {
            return Err("witness check failed".into());
        }
    }

    // trying every axis can only help
    let set: PointSet = gen_random(12, 3, 5)?;
    let first = witness_theorem1(&set, &WitnessOptions::default())?;
    let best = witness_theorem1(&set, &WitnessOptions { best_axis: true })?;
    println!("first axis {:.4}, best axis {:.4} (axis {})", first.volume, best.volume, best.window_axis);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
