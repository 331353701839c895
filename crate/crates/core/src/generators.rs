//! Reproducible point sets.
//!
//! Random sets use ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`; each coordinate is one `f64` draw from
//! rand's `Standard` distribution (53 random mantissa bits), row by row.
//! The stream is fixed by the algorithm, not by the platform.
//!
//! Lattice-type sets (grid, Fibonacci, equispaced) are built from integer
//! ratios, so in exact mode they are exact rationals rather than rounded
//! floats.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::torus::PointSet;

/// Largest grid [`gen_grid`] will build.
pub const MAX_GRID_POINTS: u128 = 10_000_000;

/// Serializable description of a generated point set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GeneratorSpec {
    Random {
        n: usize,
        d: usize,
        seed: u64,
    },
    Grid {
        m: usize,
        d: usize,
    },
    Kronecker {
        n: usize,
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<Vec<f64>>,
    },
    Fibonacci {
        n: usize,
    },
    #[serde(rename = "equispaced-1d")]
    Equispaced1d {
        n: usize,
    },
}

impl GeneratorSpec {
    pub fn generate<T: Scalar>(&self) -> Result<PointSet<T>> {
        match self {
            GeneratorSpec::Random { n, d, seed } => gen_random(*n, *d, *seed),
            GeneratorSpec::Grid { m, d } => gen_grid(*m, *d),
            GeneratorSpec::Kronecker { n, d, alpha } => gen_kronecker(*n, *d, alpha.as_deref()),
            GeneratorSpec::Fibonacci { n } => gen_fibonacci(*n),
            GeneratorSpec::Equispaced1d { n } => gen_equispaced_1d(*n),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GeneratorSpec::Random { .. } => "random",
            GeneratorSpec::Grid { .. } => "grid",
            GeneratorSpec::Kronecker { .. } => "kronecker",
            GeneratorSpec::Fibonacci { .. } => "fibonacci",
            GeneratorSpec::Equispaced1d { .. } => "equispaced-1d",
        }
    }
}

fn positive(what: &'static str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::OutOfRange {
            what,
            detail: "must be at least 1".into(),
        });
    }
    Ok(())
}

/// `n` i.i.d. uniform points from ChaCha8 seeded with `seed`.
pub fn gen_random<T: Scalar>(n: usize, d: usize, seed: u64) -> Result<PointSet<T>> {
    positive("dimension", d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            (0..d)
                .map(|_| T::from_f64(rng.gen::<f64>()).expect("uniform draws are finite"))
                .collect()
        })
        .collect();
    PointSet::from_scalars(d, points)
}

/// The lattice `{0, 1/m, …, (m-1)/m}^d`, last coordinate varying fastest.
pub fn gen_grid<T: Scalar>(m: usize, d: usize) -> Result<PointSet<T>> {
    positive("grid size", m)?;
    positive("dimension", d)?;
    let total = (m as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if total > MAX_GRID_POINTS {
        return Err(Error::BudgetExceeded {
            required: total,
            budget: MAX_GRID_POINTS,
        });
    }
    let levels: Vec<T> = (0..m).map(|i| T::from_ratio(i as u64, m as u64)).collect();
    let mut points = Vec::with_capacity(total as usize);
    let mut digits = vec![0usize; d];
    for _ in 0..total {
        points.push(digits.iter().map(|&i| levels[i].clone()).collect());
        for digit in digits.iter_mut().rev() {
            *digit += 1;
            if *digit < m {
                break;
            }
            *digit = 0;
        }
    }
    PointSet::from_scalars(d, points)
}

/// Fractional parts of the square roots of the first `d` primes.
pub fn default_kronecker_alpha(d: usize) -> Vec<f64> {
    primes(d).into_iter().map(|p| (p as f64).sqrt().fract()).collect()
}

fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= candidate).all(|&p| !candidate.is_multiple_of(p)) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// `{ i·alpha mod 1 : i = 0..n-1 }`, evaluated in binary64.
pub fn gen_kronecker<T: Scalar>(n: usize, d: usize, alpha: Option<&[f64]>) -> Result<PointSet<T>> {
    positive("n", n)?;
    positive("dimension", d)?;
    let alpha = match alpha {
        Some(a) => {
            if a.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: a.len(),
                });
            }
            if let Some(bad) = a.iter().find(|v| !v.is_finite()) {
                return Err(Error::InvalidInput(format!("non-finite direction {bad}")));
            }
            a.to_vec()
        }
        None => default_kronecker_alpha(d),
    };
    let points = (0..n)
        .map(|i| {
            alpha
                .iter()
                .map(|a| T::from_f64((i as f64 * a).rem_euclid(1.0)).expect("finite"))
                .collect()
        })
        .collect();
    PointSet::from_scalars(d, points)
}

/// Two-dimensional rank-1 lattice `(i/n, i·g/n mod 1)` with `g` the integer
/// nearest to `n/φ`. For a Fibonacci number `n = F_k` this is `g = F_{k-1}`,
/// the classical Fibonacci lattice.
pub fn gen_fibonacci<T: Scalar>(n: usize) -> Result<PointSet<T>> {
    positive("n", n)?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let g = (n as f64 / phi).round() as u64;
    let n64 = n as u64;
    let points = (0..n64)
        .map(|i| {
            vec![
                T::from_ratio(i, n64),
                T::from_ratio((i as u128 * g as u128 % n64 as u128) as u64, n64),
            ]
        })
        .collect();
    PointSet::from_scalars(2, points)
}

/// `{ i/n : 0 <= i < n }` in one dimension.
pub fn gen_equispaced_1d<T: Scalar>(n: usize) -> Result<PointSet<T>> {
    positive("n", n)?;
    let points = (0..n as u64).map(|i| vec![T::from_ratio(i, n as u64)]).collect();
    PointSet::from_scalars(1, points)
}
