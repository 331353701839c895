//! Closed-form bounds used to cross-check computed dispersions.
//!
//! Only lower bounds with explicit constants are evaluated. The known upper
//! bounds (`C^d / n` for the minimal dispersion of ordinary boxes, and
//! `C d ε^-2` for the inverse of the discrepancy) carry an unspecified
//! constant `C` and are listed by [`UPPER_BOUND_CITATIONS`] only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symbolic upper bounds that are reported but never evaluated.
pub const UPPER_BOUND_CITATIONS: [&str; 2] = [
    "inf over n-point sets of disp(P, boxes) <= C^d / n for some constant C (Larcher)",
    "N(eps, boxes) <= C d / eps^2 for some constant C (Heinrich, Novak, Wasilkowski, Wozniakowski)",
];

/// `1 / (32 e²)`, the constant in the `c d / ε` lower bound for the inverse
/// star discrepancy. Kept as an expression so the validity threshold is not
/// rounded through a decimal.
pub fn hinrichs_constant() -> f64 {
    1.0 / (32.0 * std::f64::consts::E * std::f64::consts::E)
}

/// `min{1, d/n}`, or 1 for the empty set.
pub fn theorem1_bound(n: usize, d: usize) -> Result<f64> {
    check_d(d, 1)?;
    Ok(if n <= d { 1.0 } else { d as f64 / n as f64 })
}

/// [`theorem1_bound`] in any arithmetic mode; exact for rationals.
pub fn theorem1_bound_in<T: Scalar>(n: usize, d: usize) -> Result<T> {
    check_d(d, 1)?;
    Ok(if n <= d {
        T::one()
    } else {
        T::from_ratio(d as u64, n as u64)
    })
}

/// `d / ε`: lower bound on the number of points needed for periodic
/// dispersion at most `ε`, and hence also for periodic discrepancy at most `ε`.
pub fn inverse_n0_lower(eps: f64, d: usize) -> Result<f64> {
    check_d(d, 1)?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::OutOfRange {
            what: "epsilon",
            detail: format!("{eps} not in (0, 1)"),
        });
    }
    Ok(d as f64 / eps)
}

/// `log₂ d / (4 (n + log₂ d))`, a lower bound on the smallest dispersion of
/// any `n`-point set over ordinary boxes.
pub fn ahr_lower_bound(n: usize, d: usize) -> Result<f64> {
    check_d(d, 2)?;
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "at least one point is required".into(),
        });
    }
    let l = (d as f64).log2();
    Ok(l / (4.0 * (n as f64 + l)))
}

/// `c d / ε` with `c = 1 / (32 e²)`, valid for `0 < ε < c`.
pub fn hinrichs_n_lower(eps: f64, d: usize) -> Result<f64> {
    check_d(d, 1)?;
    let c = hinrichs_constant();
    if !(eps > 0.0 && eps < c) {
        return Err(Error::OutOfRange {
            what: "epsilon",
            detail: format!("{eps} not in (0, 1/(32 e^2)) = (0, {c:.6}); the bound only holds there"),
        });
    }
    Ok(c * d as f64 / eps)
}

/// `1 / (n + 1)`: one of `n + 1` equal slabs of the cube is always empty.
pub fn split_cube_bound(n: usize) -> f64 {
    1.0 / (n as f64 + 1.0)
}

fn check_d(d: usize, min: usize) -> Result<()> {
    if d < min {
        return Err(Error::OutOfRange {
            what: "dimension",
            detail: format!("d = {d}, expected d >= {min}"),
        });
    }
    Ok(())
}

/// All bounds for one `(n, d)` pair; `None` where a formula is outside its
/// domain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub theorem1: f64,
    pub split_cube: f64,
    pub ahr_lower: Option<f64>,
    pub epsilon: Option<f64>,
    pub hinrichs_n_lower: Option<f64>,
    pub n0_lower: Option<f64>,
    pub hinrichs_constant: f64,
    pub upper_bounds: Vec<&'static str>,
}

impl BoundReport {
    pub fn new(n: usize, d: usize, eps: Option<f64>) -> Result<Self> {
        Ok(Self {
            n,
            d,
            theorem1: theorem1_bound(n, d)?,
            split_cube: split_cube_bound(n),
            ahr_lower: ahr_lower_bound(n, d).ok(),
            epsilon: eps,
            hinrichs_n_lower: eps.and_then(|e| hinrichs_n_lower(e, d).ok()),
            n0_lower: eps.and_then(|e| inverse_n0_lower(e, d).ok()),
            hinrichs_constant: hinrichs_constant(),
            upper_bounds: UPPER_BOUND_CITATIONS.to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    #[test]
    fn theorem1_values() {
        assert_eq!(theorem1_bound(4, 2).unwrap(), 0.5);
        assert_eq!(theorem1_bound(3, 5).unwrap(), 1.0);
        assert_eq!(theorem1_bound(1000, 10).unwrap(), 0.01);
        assert_eq!(theorem1_bound(0, 1).unwrap(), 1.0);
        assert!(theorem1_bound(3, 0).is_err());
        assert_eq!(theorem1_bound_in::<Exact>(6, 4).unwrap(), Exact::from_ratio(2, 3));
    }

    #[test]
    fn theorem1_monotone() {
        for d in 1..6 {
            for n in 0..40 {
                assert!(theorem1_bound(n + 1, d).unwrap() <= theorem1_bound(n, d).unwrap());
                assert!(theorem1_bound(n, d + 1).unwrap() >= theorem1_bound(n, d).unwrap());
            }
        }
    }

    #[test]
    fn inverse_bounds() {
        assert_eq!(inverse_n0_lower(0.1, 5).unwrap(), 50.0);
        assert_eq!(inverse_n0_lower(0.5, 1).unwrap(), 2.0);
        assert!((inverse_n0_lower(1.0 - 1e-12, 7).unwrap() - 7.0).abs() < 1e-9);
        assert!(inverse_n0_lower(1.0, 3).is_err());
        assert!(inverse_n0_lower(0.0, 3).is_err());
    }

    #[test]
    fn ahr_values() {
        assert_eq!(ahr_lower_bound(1, 2).unwrap(), 0.125);
        assert_eq!(ahr_lower_bound(7, 2).unwrap(), 0.03125);
        assert_eq!(ahr_lower_bound(1, 16).unwrap(), 0.2);
        assert!(ahr_lower_bound(1, 1).is_err());
        assert!(ahr_lower_bound(0, 4).is_err());
    }

    #[test]
    fn hinrichs_values() {
        let c = hinrichs_constant();
        assert!(c >= 0.004229);
        assert!((c - 0.004229228).abs() < 1e-9);
        let v = hinrichs_n_lower(0.001, 10).unwrap();
        assert!((v - 42.29228).abs() < 1e-4);
        let err = hinrichs_n_lower(0.005, 10).unwrap_err().to_string();
        assert!(err.contains("0.004229"), "{err}");
        for eps in [1e-6, 1e-4, 0.001, 0.004] {
            for d in [1, 2, 10, 100] {
                assert!(hinrichs_n_lower(eps, d).unwrap() < inverse_n0_lower(eps, d).unwrap());
            }
        }
    }

    #[test]
    fn split_cube_values() {
        assert_eq!(split_cube_bound(0), 1.0);
        assert_eq!(split_cube_bound(3), 0.25);
    }

    #[test]
    fn report() {
        let r = BoundReport::new(4, 2, Some(0.001)).unwrap();
        assert_eq!(r.theorem1, 0.5);
        assert_eq!(r.ahr_lower, Some(0.05));
        assert_eq!(r.n0_lower, Some(2000.0));
        assert!(r.hinrichs_n_lower.is_some());
        let r = BoundReport::new(4, 1, Some(0.5)).unwrap();
        assert_eq!(r.ahr_lower, None);
        assert_eq!(r.hinrichs_n_lower, None);
    }
}
