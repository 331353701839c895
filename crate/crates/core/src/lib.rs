//! Dispersion of finite point sets: the volume of the largest empty box.
//!
//! Two range families are supported. Periodic boxes live on the torus
//! `[0,1)^d` and may wrap around in every coordinate; ordinary boxes are
//! axis-parallel boxes inside the unit cube. For both, [`exact`] computes
//! the dispersion exactly by candidate enumeration, and [`witness`] builds
//! an empty periodic box of volume at least `min{1, d/n}` in near-linear
//! time.
//!
//! ```
//! use torus_dispersion::{exact, witness, PointSet};
//!
//! let set = PointSet::canonicalize(&[[0.1, 0.3], [0.3, 0.7], [0.6, 0.2], [0.8, 0.9]], None)?;
//! let best = exact::exact_dispersion_periodic(&set, &Default::default())?;
//! let cheap = witness::witness_theorem1(&set, &Default::default())?;
//! assert!(cheap.volume <= best.volume);
//! assert_eq!(cheap.volume, 0.5);
//! # Ok::<(), torus_dispersion::Error>(())
//! ```
//!
//! All geometry is generic over [`Scalar`]; use [`Exact`] for rational
//! arithmetic.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod exact;
pub mod generators;
pub mod scalar;
pub mod torus;
pub mod witness;

pub use error::{Error, Result};
pub use exact::{DispersionResult, Method, SampleOptions, SearchOptions, Witness};
pub use generators::GeneratorSpec;
pub use scalar::{Exact, Scalar};
pub use torus::{AnchoredBox, PeriodicBox, PeriodicInterval, PointSet};
pub use witness::{WitnessCase, WitnessOptions, WitnessResult};
