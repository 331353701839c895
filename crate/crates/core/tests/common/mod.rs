//! Brute-force oracles shared by the integration tests.
//!
//! These do not call into the search code. Membership follows the textbook
//! rule `(z - anchor) mod 1 ∈ (0, length)` evaluated in rationals, and every
//! box of the candidate product is checked without pruning.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use torus_dispersion::{Exact, PointSet};

fn frac(q: &Exact) -> Exact {
    q - q.floor()
}

fn distinct(values: impl Iterator<Item = Exact>) -> Vec<Exact> {
    let mut v: Vec<Exact> = values.collect();
    v.sort();
    v.dedup();
    v
}

/// Per-axis `(anchor, length)` arcs between distinct coordinates.
fn periodic_sides(points: &[Vec<Exact>], axis: usize) -> Vec<(Exact, Exact)> {
    let values = distinct(points.iter().map(|p| p[axis].clone()));
    let mut sides = Vec::new();
    for a in &values {
        for b in &values {
            let len = if a == b { Exact::one() } else { frac(&(b - a)) };
            sides.push((a.clone(), len));
        }
    }
    sides
}

fn in_arc(z: &Exact, anchor: &Exact, len: &Exact) -> bool {
    let offset = frac(&(z - anchor));
    offset > Exact::zero() && &offset < len
}

fn product_max<S>(
    points: &[Vec<Exact>],
    sides: &[Vec<S>],
    len: impl Fn(&S) -> Exact,
    inside: impl Fn(&Exact, &S) -> bool,
) -> Exact {
    let d = sides.len();
    let mut best = Exact::zero();
    let mut idx = vec![0usize; d];
    loop {
        let empty = !points
            .iter()
            .any(|p| (0..d).all(|k| inside(&p[k], &sides[k][idx[k]])));
        if empty {
            let vol = (0..d).fold(Exact::one(), |acc, k| acc * len(&sides[k][idx[k]]));
            if vol > best {
                best = vol;
            }
        }
        let mut k = 0;
        loop {
            if k == d {
                return best;
            }
            idx[k] += 1;
            if idx[k] < sides[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Largest empty periodic box, by exhaustive enumeration.
pub fn brute_periodic(set: &PointSet<Exact>) -> Exact {
    if set.is_empty() {
        return Exact::one();
    }
    let points = set.points();
    let sides: Vec<_> = (0..set.dim()).map(|k| periodic_sides(points, k)).collect();
    product_max(points, &sides, |s| s.1.clone(), |z, s| in_arc(z, &s.0, &s.1))
}

/// Largest empty ordinary box, by exhaustive enumeration.
pub fn brute_boxes(set: &PointSet<Exact>) -> Exact {
    let points = set.points();
    let sides: Vec<Vec<(Exact, Exact)>> = (0..set.dim())
        .map(|k| {
            let mut ends = vec![Exact::zero()];
            ends.extend(points.iter().map(|p| p[k].clone()));
            ends.push(Exact::one());
            let ends = distinct(ends.into_iter());
            let mut out = Vec::new();
            for (i, lo) in ends.iter().enumerate() {
                for hi in &ends[i + 1..] {
                    out.push((lo.clone(), hi.clone()));
                }
            }
            out
        })
        .collect();
    product_max(points, &sides, |s| &s.1 - &s.0, |z, s| &s.0 < z && z < &s.1)
}

/// Largest cyclic gap of a 1-D set by sorting.
pub fn brute_gap(values: &[Exact]) -> Exact {
    let v = distinct(values.iter().cloned());
    if v.len() <= 1 {
        return Exact::one();
    }
    let mut best = Exact::one() - &v[v.len() - 1] + &v[0];
    for w in v.windows(2) {
        let g = &w[1] - &w[0];
        if g > best {
            best = g;
        }
    }
    best
}

pub fn q(num: u64, den: u64) -> Exact {
    Exact::new(BigInt::from(num), BigInt::from(den))
}

pub fn exact_f64(v: f64) -> Exact {
    Exact::from_float(v).unwrap()
}

/// `min{1, d/n}` as a rational, computed here rather than via the bounds module.
pub fn theorem1(n: usize, d: usize) -> Exact {
    if n <= d {
        Exact::one()
    } else {
        q(d as u64, n as u64)
    }
}

pub fn worked_set() -> PointSet {
    PointSet::canonicalize(&[[0.1, 0.3], [0.3, 0.7], [0.6, 0.2], [0.8, 0.9]], None).unwrap()
}
