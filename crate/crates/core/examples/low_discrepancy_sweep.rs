// Exact periodic dispersion of structured and random sets against d/n.
//
//     cargo run --release --example low_discrepancy_sweep

use torus_dispersion::bounds::theorem1_bound;
use torus_dispersion::exact::exact_dispersion_periodic;
use torus_dispersion::generators::GeneratorSpec;
use torus_dispersion::{PointSet, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        GeneratorSpec::Fibonacci { n: 8 },
        GeneratorSpec::Fibonacci { n: 21 },
        GeneratorSpec::Kronecker { n: 21, d: 2, alpha: None },
        GeneratorSpec::Random { n: 21, d: 2, seed: 1 },
        GeneratorSpec::Grid { m: 4, d: 2 },
        GeneratorSpec::Kronecker { n: 12, d: 3, alpha: None },
        GeneratorSpec::Random { n: 12, d: 3, seed: 1 },
    ];
    println!("{:<10} {:>3} {:>2} {:>9} {:>9} {:>6}", "kind", "n", "d", "volume", "d/n", "ratio");
    for spec in &specs {
        let set: PointSet = spec.generate()?;
        let (n, d) = (set.len(), set.dim());
        let v = exact_dispersion_periodic(&set, &SearchOptions::default())?.volume;
        let bound = theorem1_bound(n, d)?;
        println!("{:<10} {n:>3} {d:>2} {v:>9.5} {bound:>9.5} {:>6.3}", spec.kind(), v / bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
