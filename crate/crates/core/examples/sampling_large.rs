// A set too large for the exact search. The budget check refuses it up
// front; random sampling and the constructive witness still give certified
// lower bounds.
//
//     cargo run --release --example sampling_large

use torus_dispersion::bounds::theorem1_bound;
use torus_dispersion::exact::{exact_dispersion_periodic, sampled_dispersion_lower_bound};
use torus_dispersion::generators::gen_random;
use torus_dispersion::witness::witness_theorem1;
use torus_dispersion::{Error, PointSet, SampleOptions, SearchOptions, WitnessOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (n, d) = (200, 6);
    let set: PointSet = gen_random(n, d, 9)?;

    match exact_dispersion_periodic(&set, &SearchOptions::default()) {
        Err(Error::BudgetExceeded { required, budget }) => {
            println!("exact search needs {required} candidate boxes, budget {budget}");
        }
        other => return Err(format!("expected a budget error, got {other:?}").into()),
    }

    let sampled = sampled_dispersion_lower_bound(&set, &SampleOptions { trials: 20_000, seed: 1 })?;
    let witness = witness_theorem1(&set, &WitnessOptions { best_axis: true })?;
    println!("d/n          {:.5}", theorem1_bound(n, d)?);
    println!("sampled      {:.5}", sampled.volume);
    println!("constructed  {:.5}", witness.volume);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
