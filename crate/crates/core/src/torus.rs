//! Point sets on the torus and the two range families.
//!
//! A [`PeriodicBox`] is a product of open arcs `(x_i, x_i + y_i) mod 1`;
//! an [`AnchoredBox`] is an ordinary open box inside the unit cube. All
//! boxes are open, so a point on a face never blocks a box.
//!
//! Arcs are stored by their two endpoints rather than by anchor and length.
//! Membership then reduces to comparisons between coordinates, which are
//! exact in either arithmetic mode even when the length itself is rounded.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{arc_length, product, Exact, Scalar};

/// `n` points in `[0,1)^d`, counted with multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet<T = f64> {
    dim: usize,
    points: Vec<Vec<T>>,
}

impl PointSet<f64> {
    /// Maps raw `f64` vectors onto the torus. Each coordinate is replaced by
    /// its fractional part, so `1.0` becomes `0.0` and `-0.25` becomes `0.75`.
    ///
    /// `dim` is required when `raw` is empty and checked otherwise.
    pub fn canonicalize<R: AsRef<[f64]>>(raw: &[R], dim: Option<usize>) -> Result<Self> {
        Self::canonicalize_in(raw, dim)
    }
}

impl<T: Scalar> PointSet<T> {
    /// [`PointSet::canonicalize`] into any arithmetic mode. Conversion from
    /// `f64` into [`Exact`] is exact.
    pub fn canonicalize_in<R: AsRef<[f64]>>(raw: &[R], dim: Option<usize>) -> Result<Self> {
        let dim = infer_dim(raw.iter().map(|r| r.as_ref().len()), dim)?;
        let points = raw
            .iter()
            .map(|row| {
                row.as_ref()
                    .iter()
                    .map(|&c| {
                        T::from_f64(c)
                            .map(|v| v.fract_unit())
                            .ok_or_else(|| Error::InvalidInput(format!("non-finite coordinate {c}")))
                    })
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim, points })
    }

    /// Builds a set from coordinates already in the target scalar type,
    /// reducing each modulo 1.
    pub fn from_scalars(dim: usize, raw: Vec<Vec<T>>) -> Result<Self> {
        let dim = infer_dim(raw.iter().map(Vec::len), Some(dim))?;
        let points = raw
            .into_iter()
            .map(|p| p.iter().map(Scalar::fract_unit).collect())
            .collect();
        Ok(Self { dim, points })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::from_scalars(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &[T] {
        &self.points[index]
    }

    /// Coordinates of every point along one axis (0-based), in point order.
    pub fn axis_values(&self, axis: usize) -> Vec<T> {
        self.points.iter().map(|p| p[axis].clone()).collect()
    }

    /// Sorted distinct coordinates along one axis (0-based).
    pub fn distinct_axis_values(&self, axis: usize) -> Vec<T> {
        let mut values = self.axis_values(axis);
        values.sort_by(T::total_cmp);
        values.dedup_by(|a, b| a.total_cmp(b) == Ordering::Equal);
        values
    }

    /// Keeps the first `k` coordinates of every point.
    pub fn project(&self, k: usize) -> Result<Self> {
        if k < 1 || k > self.dim {
            return Err(Error::OutOfRange {
                what: "projection dimension",
                detail: format!("k = {k}, expected 1 <= k <= {}", self.dim),
            });
        }
        Ok(Self {
            dim: k,
            points: self.points.iter().map(|p| p[..k].to_vec()).collect(),
        })
    }

    /// Adds `shift` to every point modulo 1.
    pub fn translate(&self, shift: &[T]) -> Result<Self> {
        check_dim(self.dim, shift.len())?;
        Ok(Self {
            dim: self.dim,
            points: self.points.iter().map(|p| translate_point(p, shift)).collect(),
        })
    }

    /// Reorders coordinates: axis `i` of the result is axis `perm[i]` of `self`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.dim, perm)?;
        Ok(Self {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| perm.iter().map(|&a| p[a].clone()).collect())
                .collect(),
        })
    }

    /// The same set with one more point appended.
    pub fn with_point(&self, point: Vec<T>) -> Result<Self> {
        check_dim(self.dim, point.len())?;
        let mut points = self.points.clone();
        points.push(point.iter().map(Scalar::fract_unit).collect());
        Ok(Self { dim: self.dim, points })
    }

    pub fn to_f64(&self) -> PointSet<f64> {
        PointSet {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(Scalar::to_f64).collect())
                .collect(),
        }
    }
}

impl PointSet<f64> {
    /// Exact rational copy of a float set; every `f64` is a dyadic rational.
    pub fn to_exact(&self) -> PointSet<Exact> {
        PointSet {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&c| <Exact as Scalar>::from_f64(c).expect("canonical coordinates are finite"))
                        .collect()
                })
                .collect(),
        }
    }
}

fn infer_dim(mut lens: impl Iterator<Item = usize>, declared: Option<usize>) -> Result<usize> {
    let dim = match (declared, lens.next()) {
        (Some(d), first) => {
            if let Some(f) = first {
                check_dim(d, f)?;
            }
            d
        }
        (None, Some(f)) => f,
        (None, None) => {
            return Err(Error::InvalidInput(
                "cannot infer the dimension of an empty point set".into(),
            ))
        }
    };
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    for len in lens {
        check_dim(dim, len)?;
    }
    Ok(dim)
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn check_permutation(dim: usize, perm: &[usize]) -> Result<()> {
    check_dim(dim, perm.len())?;
    let mut seen = vec![false; dim];
    for &a in perm {
        if a >= dim || std::mem::replace(&mut seen[a], true) {
            return Err(Error::InvalidInput(format!("{perm:?} is not a permutation of 0..{dim}")));
        }
    }
    Ok(())
}

fn translate_point<T: Scalar>(p: &[T], shift: &[T]) -> Vec<T> {
    p.iter().zip(shift).map(|(c, s)| c.add(s).fract_unit()).collect()
}

fn in_unit<T: Scalar>(v: &T) -> bool {
    T::zero().le(v) && v.lt(&T::one())
}

/// Open arc on the unit circle, starting at `anchor` and running forward.
///
/// An arc whose end coincides with its anchor has length 1: the whole circle
/// minus the anchor.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicInterval<T = f64> {
    anchor: T,
    end: T,
}

impl<T: Scalar> PeriodicInterval<T> {
    /// The arc `(anchor, anchor + length) mod 1`.
    pub fn new(anchor: T, length: T) -> Result<Self> {
        if !in_unit(&anchor) {
            return Err(Error::OutOfRange {
                what: "interval anchor",
                detail: format!("{anchor:?} not in [0,1)"),
            });
        }
        if !(T::zero().lt(&length) && length.le(&T::one())) {
            return Err(Error::OutOfRange {
                what: "interval length",
                detail: format!("{length:?} not in (0,1]"),
            });
        }
        let end = if length == T::one() {
            anchor.clone()
        } else {
            anchor.add(&length).fract_unit()
        };
        Ok(Self { anchor, end })
    }

    /// The arc from `anchor` forward to `end`; equal endpoints give the full
    /// circle minus that point.
    pub fn from_endpoints(anchor: T, end: T) -> Result<Self> {
        for v in [&anchor, &end] {
            if !in_unit(v) {
                return Err(Error::OutOfRange {
                    what: "interval endpoint",
                    detail: format!("{v:?} not in [0,1)"),
                });
            }
        }
        Ok(Self { anchor, end })
    }

    /// Full circle minus `anchor`.
    pub fn full(anchor: T) -> Result<Self> {
        Self::from_endpoints(anchor.clone(), anchor)
    }

    pub fn anchor(&self) -> &T {
        &self.anchor
    }

    pub fn end(&self) -> &T {
        &self.end
    }

    pub fn length(&self) -> T {
        arc_length(&self.anchor, &self.end)
    }

    pub fn is_full(&self) -> bool {
        self.anchor.total_cmp(&self.end) == Ordering::Equal
    }

    /// True iff `(z - anchor) mod 1` lies strictly inside `(0, length)`.
    pub fn contains(&self, z: &T) -> bool {
        if self.anchor.lt(&self.end) {
            self.anchor.lt(z) && z.lt(&self.end)
        } else {
            // wrapping arc, or the full circle minus the anchor
            self.anchor.lt(z) || z.lt(&self.end)
        }
    }

    pub fn translate(&self, shift: &T) -> Self {
        Self {
            anchor: self.anchor.add(shift).fract_unit(),
            end: self.end.add(shift).fract_unit(),
        }
    }

    /// Orders arcs by `(anchor, length)`.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.anchor
            .total_cmp(&other.anchor)
            .then_with(|| self.length().total_cmp(&other.length()))
    }
}

/// Product of periodic intervals; a range on the torus.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicBox<T = f64> {
    intervals: Vec<PeriodicInterval<T>>,
}

impl<T: Scalar> PeriodicBox<T> {
    pub fn new(intervals: Vec<PeriodicInterval<T>>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::InvalidInput("a box needs at least one side".into()));
        }
        Ok(Self { intervals })
    }

    /// The box with every side a full circle minus `anchors[i]`. Volume 1.
    pub fn full(anchors: Vec<T>) -> Result<Self> {
        Self::new(anchors.into_iter().map(PeriodicInterval::full).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[PeriodicInterval<T>] {
        &self.intervals
    }

    pub fn volume(&self) -> T {
        let lengths = self.lengths();
        product(&lengths)
    }

    pub fn lengths(&self) -> Vec<T> {
        self.intervals.iter().map(PeriodicInterval::length).collect()
    }

    pub fn anchors(&self) -> Vec<T> {
        self.intervals.iter().map(|i| i.anchor.clone()).collect()
    }

    pub fn contains(&self, p: &[T]) -> Result<bool> {
        check_dim(self.dim(), p.len())?;
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &[T]) -> bool {
        self.intervals.iter().zip(p).all(|(i, c)| i.contains(c))
    }

    /// True iff no point of `set` lies in the box.
    pub fn is_empty_for(&self, set: &PointSet<T>) -> Result<bool> {
        check_dim(self.dim(), set.dim())?;
        Ok(!set.points().iter().any(|p| self.contains_unchecked(p)))
    }

    /// Keeps the first `k` sides.
    pub fn project(&self, k: usize) -> Result<Self> {
        if k < 1 || k > self.dim() {
            return Err(Error::OutOfRange {
                what: "projection dimension",
                detail: format!("k = {k}, expected 1 <= k <= {}", self.dim()),
            });
        }
        Self::new(self.intervals[..k].to_vec())
    }

    pub fn translate(&self, shift: &[T]) -> Result<Self> {
        check_dim(self.dim(), shift.len())?;
        Self::new(self.intervals.iter().zip(shift).map(|(i, s)| i.translate(s)).collect())
    }

    /// Side `i` of the result is side `perm[i]` of `self`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.dim(), perm)?;
        Self::new(perm.iter().map(|&a| self.intervals[a].clone()).collect())
    }

    /// Lexicographic order on the `(anchor, length)` vector.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.intervals
            .iter()
            .zip(&other.intervals)
            .map(|(a, b)| a.cmp_key(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

/// Open axis-parallel box `(lower, upper)` inside `[0,1]^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnchoredBox<T = f64> {
    lower: Vec<T>,
    upper: Vec<T>,
}

impl<T: Scalar> AnchoredBox<T> {
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        check_dim(lower.len(), upper.len())?;
        if lower.is_empty() {
            return Err(Error::InvalidInput("a box needs at least one side".into()));
        }
        for (l, u) in lower.iter().zip(&upper) {
            if !(T::zero().le(l) && l.lt(u) && u.le(&T::one())) {
                return Err(Error::OutOfRange {
                    what: "box side",
                    detail: format!("({l:?}, {u:?}) is not a nonempty subinterval of [0,1]"),
                });
            }
        }
        Ok(Self { lower, upper })
    }

    /// `(0,1)^d`.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(vec![T::zero(); dim], vec![T::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn lengths(&self) -> Vec<T> {
        self.lower.iter().zip(&self.upper).map(|(l, u)| u.sub(l)).collect()
    }

    pub fn volume(&self) -> T {
        let lengths = self.lengths();
        product(&lengths)
    }

    pub fn contains(&self, p: &[T]) -> Result<bool> {
        check_dim(self.dim(), p.len())?;
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &[T]) -> bool {
        self.lower
            .iter()
            .zip(&self.upper)
            .zip(p)
            .all(|((l, u), c)| l.lt(c) && c.lt(u))
    }

    pub fn is_empty_for(&self, set: &PointSet<T>) -> Result<bool> {
        check_dim(self.dim(), set.dim())?;
        Ok(!set.points().iter().any(|p| self.contains_unchecked(p)))
    }

    /// The same box viewed as a periodic range. An upper face at 1 becomes an
    /// arc ending at 0; the unit box becomes the full-circle sides anchored at
    /// 0, which additionally exclude the anchor hyperplanes.
    pub fn to_periodic(&self) -> PeriodicBox<T> {
        let intervals = self
            .lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| PeriodicInterval {
                anchor: l.clone(),
                end: u.fract_unit(),
            })
            .collect();
        PeriodicBox { intervals }
    }

    /// Lexicographic order on the `(lower, length)` vector.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        let (la, lb) = (self.lengths(), other.lengths());
        self.lower
            .iter()
            .zip(&la)
            .zip(other.lower.iter().zip(&lb))
            .map(|((a, al), (b, bl))| a.total_cmp(b).then_with(|| al.total_cmp(bl)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}
