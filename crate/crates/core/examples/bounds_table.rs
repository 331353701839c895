// Closed-form bounds next to each other for a few sizes and dimensions.
//
//     cargo run --example bounds_table

use torus_dispersion::bounds::{
    ahr_lower_bound, hinrichs_constant, hinrichs_n_lower, inverse_n0_lower, split_cube_bound, theorem1_bound,
    UPPER_BOUND_CITATIONS,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>4} {:>10} {:>10} {:>10}", "n", "d", "min(1,d/n)", "1/(n+1)", "ahr");
    for d in [2, 8, 64] {
        for n in [1, 10, 100, 1000] {
            println!(
                "{n:>6} {d:>4} {:>10.6} {:>10.6} {:>10.6}",
                theorem1_bound(n, d)?,
                split_cube_bound(n),
                ahr_lower_bound(n, d)?
            );
        }
    }

    println!();
    println!("c = 1/(32 e^2) = {:.9}", hinrichs_constant());
    println!("{:>8} {:>4} {:>12} {:>12}", "eps", "d", "d/eps", "c d/eps");
    for eps in [1e-3, 1e-4] {
        for d in [10, 100] {
            println!(
                "{eps:>8} {d:>4} {:>12.1} {:>12.1}",
                inverse_n0_lower(eps, d)?,
                hinrichs_n_lower(eps, d)?
            );
        }
    }
    // outside (0, c) the discrepancy bound is refused rather than extrapolated
    if let Err(e) = hinrichs_n_lower(0.01, 10) {
        println!("eps = 0.01: {e}");
    }

    println!();
    println!("not evaluated (unknown constants):");
    for c in UPPER_BOUND_CITATIONS {
        println!("  {c}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
