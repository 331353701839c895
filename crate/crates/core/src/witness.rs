//! Constructive lower bound `disp(P, periodic boxes) >= min{1, d/n}`.
//!
//! For `n <= d` every point gets its own excluded hyperplane and the box is
//! the whole torus minus those hyperplanes. For `n > d` the longest arc on
//! the first axis holding at most `d - 1` points is taken as a one-sided
//! box and then lifted one axis at a time; each lift appends a full circle
//! whose missing point is a coordinate of one of the points still inside.
//! Lifting never changes the volume, so the witness has the length of the
//! arc, which is at least `d/n`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{arc_length, Scalar};
use crate::torus::{check_dim, PeriodicBox, PeriodicInterval, PointSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// `n <= d`: volume exactly 1.
    FullVolume,
    /// `n > d`: arc on one axis, lifted through the other axes.
    WindowLift,
}

impl WitnessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessCase::FullVolume => "full-volume",
            WitnessCase::WindowLift => "window-lift",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessResult<T = f64> {
    pub witness: PeriodicBox<T>,
    pub volume: T,
    pub case: WitnessCase,
    /// Points whose coordinates anchor an excluding full-circle side.
    pub excluded_points: Vec<usize>,
    /// Axis (0-based) carrying the arc.
    pub window_axis: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WitnessOptions {
    /// Try the arc on every axis and keep the longest instead of always
    /// using the first axis.
    pub best_axis: bool,
}

/// The box with every side a full circle, the `i`-th side anchored at the
/// `i`-th coordinate of the `i`-th point (the last point repeats once the
/// points run out). For `n = 0` all anchors are 0.
pub fn witness_full_volume<T: Scalar>(set: &PointSet<T>) -> Result<WitnessResult<T>> {
    let (n, d) = (set.len(), set.dim());
    if n > d {
        return Err(Error::WrongCase(format!(
            "the full-volume witness needs n <= d, got n = {n}, d = {d}"
        )));
    }
    let mut anchors = Vec::with_capacity(d);
    let mut excluded = Vec::with_capacity(n);
    for axis in 0..d {
        if n == 0 {
            anchors.push(T::zero());
        } else {
            let owner = axis.min(n - 1);
            anchors.push(set.point(owner)[axis].clone());
            if axis < n {
                excluded.push(owner);
            }
        }
    }
    let witness = PeriodicBox::full(anchors)?;
    finish(set, witness, WitnessCase::FullVolume, excluded, 0)
}

/// Longest arc spanning `d` consecutive gaps of the cyclically sorted
/// values, together with the indices of the values strictly inside it.
///
/// The `n` such windows together cover every gap `d` times, so their
/// lengths sum to `d` and the longest is at least `d/n`. Ties go to the
/// window that starts first in sorted order.
pub fn max_window<T: Scalar>(values: &[T], d: usize) -> Result<(PeriodicInterval<T>, Vec<usize>)> {
    let windows = cyclic_windows(values, d)?;
    let mut best: Option<&Window<T>> = None;
    for w in &windows {
        if best.is_none_or(|b| b.length.lt(&w.length)) {
            best = Some(w);
        }
    }
    let best = best.expect("n > d >= 1 gives at least one window");
    let arc = PeriodicInterval::from_endpoints(best.start.clone(), best.end.clone())?;
    let inside = values
        .iter()
        .enumerate()
        .filter(|(_, v)| arc.contains(v))
        .map(|(i, _)| i)
        .collect();
    Ok((arc, inside))
}

/// One window of [`cyclic_windows`]: the open arc from `start` forward over
/// `d` gaps to `end`.
#[derive(Clone, Debug, PartialEq)]
pub struct Window<T> {
    pub start: T,
    pub end: T,
    /// Zero when `d` coincident values span the window without wrapping.
    pub length: T,
}

/// All `n` windows of `d` consecutive gaps, one per sorted start position.
pub fn cyclic_windows<T: Scalar>(values: &[T], d: usize) -> Result<Vec<Window<T>>> {
    let n = values.len();
    if d < 1 || n <= d {
        return Err(Error::WrongCase(format!(
            "windows of d gaps need n > d >= 1, got n = {n}, d = {d}"
        )));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(T::total_cmp);
    Ok((0..n)
        .map(|s| {
            let (start, end) = (sorted[s].clone(), sorted[(s + d) % n].clone());
            let coincident = s + d < n && start.total_cmp(&end) == Ordering::Equal;
            let length = if coincident {
                T::zero()
            } else {
                arc_length(&start, &end)
            };
            Window { start, end, length }
        })
        .collect())
}

/// Appends a full-circle side anchored at the last coordinate of `t`.
/// The volume is unchanged and the new box does not contain `t`.
pub fn lift_box<T: Scalar>(base: &PeriodicBox<T>, t: &[T]) -> Result<PeriodicBox<T>> {
    check_dim(base.dim() + 1, t.len())?;
    let mut intervals = base.intervals().to_vec();
    intervals.push(PeriodicInterval::full(t[t.len() - 1].clone())?);
    PeriodicBox::new(intervals)
}

/// Empty periodic box of volume at least `min{1, d/n}`.
pub fn witness_theorem1<T: Scalar>(set: &PointSet<T>, opts: &WitnessOptions) -> Result<WitnessResult<T>> {
    if set.len() <= set.dim() {
        return witness_full_volume(set);
    }
    let axes: Vec<usize> = if opts.best_axis {
        (0..set.dim()).collect()
    } else {
        vec![0]
    };
    let mut best: Option<WitnessResult<T>> = None;
    for axis in axes {
        let candidate = window_lift(set, axis)?;
        if best.as_ref().is_none_or(|b| b.volume.lt(&candidate.volume)) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("at least one axis"))
}

/// Arc on `axis`, lifted through the remaining axes in increasing order.
fn window_lift<T: Scalar>(set: &PointSet<T>, axis: usize) -> Result<WitnessResult<T>> {
    let d = set.dim();
    // the window axis goes first, the others keep their relative order
    let order: Vec<usize> = std::iter::once(axis)
        .chain((0..d).filter(|&a| a != axis))
        .collect();
    let (arc, inside) = max_window(&set.axis_values(axis), d)?;
    if inside.len() > d - 1 {
        return Err(Error::InvariantViolation(format!(
            "window holds {} points, at most {} can be excluded",
            inside.len(),
            d - 1
        )));
    }

    let mut lifted = PeriodicBox::new(vec![arc])?;
    let mut last: Option<usize> = None;
    for k in 1..d {
        // k-th lift excludes the k-th inside point; spare lifts reuse the last
        let owner = inside.get(k - 1).copied().or(last);
        let t: Vec<T> = order[..=k]
            .iter()
            .map(|&a| owner.map_or_else(T::zero, |p| set.point(p)[a].clone()))
            .collect();
        lifted = lift_box(&lifted, &t)?;
        last = owner;
    }

    // back from window-first order to the original axis order
    let mut inverse = vec![0; d];
    for (pos, &a) in order.iter().enumerate() {
        inverse[a] = pos;
    }
    let witness = lifted.permute_axes(&inverse)?;
    finish(set, witness, WitnessCase::WindowLift, inside, axis)
}

fn finish<T: Scalar>(
    set: &PointSet<T>,
    witness: PeriodicBox<T>,
    case: WitnessCase,
    excluded_points: Vec<usize>,
    window_axis: usize,
) -> Result<WitnessResult<T>> {
    if let Some(p) = set.points().iter().position(|p| witness.contains_unchecked(p)) {
        return Err(Error::InvariantViolation(format!(
            "constructed witness contains point {p}"
        )));
    }
    Ok(WitnessResult {
        volume: witness.volume(),
        witness,
        case,
        excluded_points,
        window_axis,
    })
}
