// CSV points in, JSON report out: the library side of the command line.
//
//     cargo run --example point_io

use torus_dispersion::cli::{compute, format_points, parse_points, report_json, Mode, Ranges, RunConfig};
use torus_dispersion::generators::GeneratorSpec;
use torus_dispersion::{PointSet, SampleOptions, SearchOptions, WitnessOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let set = parse_points("x,y\n0.1,0.3\n0.3,0.7\n0.6,0.2\n0.8,0.9\n", None)?;
    println!("read {} points in d = {}", set.len(), set.dim());

    let config = RunConfig {
        ranges: Ranges::Periodic,
        mode: Mode::Witness,
        search: SearchOptions::default(),
        sample: SampleOptions { trials: 1000, seed: 0 },
        witness: WitnessOptions::default(),
        rational: false,
        timing: false,
    };
    print!("{}", report_json(&compute(&set, &config)?));

    // generator specs are the same JSON the command line takes with --gen
    let spec: GeneratorSpec = serde_json::from_str(r#"{"kind":"fibonacci","n":5}"#)?;
    let fib: PointSet = spec.generate()?;
    print!("{}", format_points(&fib));
    if parse_points(&format_points(&fib), Some(2))? != fib {
        return Err("CSV round trip changed the points".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
