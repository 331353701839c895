// The same computation in binary64 and in exact rationals.
//
// Coordinates are copied into the rationals bit for bit, so both modes
// pick the same boxes; only the volume arithmetic differs.
//
//     cargo run --example rational_mode

use torus_dispersion::exact::exact_dispersion_periodic;
use torus_dispersion::generators::{gen_equispaced_1d, gen_fibonacci};
use torus_dispersion::{Exact, PointSet, Scalar, SearchOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SearchOptions::default();

    let float = PointSet::canonicalize(&[[0.1, 0.3], [0.3, 0.7], [0.6, 0.2], [0.8, 0.9]], None)?;
    let exact = float.to_exact();
    let f = exact_dispersion_periodic(&float, &opts)?.volume;
    let q = exact_dispersion_periodic(&exact, &opts)?.volume;
    println!("float    {f:?}");
    println!("rational {q}");
    println!("         = {:?} after rounding", q.to_f64());

    // lattices are built from integer ratios, so 1/n comes out exactly
    for n in [3, 7, 10] {
        let set: PointSet<Exact> = gen_equispaced_1d(n)?;
        let v = exact_dispersion_periodic(&set, &opts)?.volume;
        println!("equispaced n = {n:>2}: {v}");
        if v != Exact::from_ratio(1, n as u64) {
            return Err("expected exactly 1/n".into());
        }
    }
    let fib: PointSet<Exact> = gen_fibonacci(13)?;
    println!("fibonacci n = 13: {}", exact_dispersion_periodic(&fib, &opts)?.volume);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
