//! Largest empty box by candidate enumeration.
//!
//! Every inclusion-maximal empty box has each side blocked on both ends by
//! point coordinates (or, for ordinary boxes, by the cube faces), because a
//! side that is not blocked can be grown without hitting a point. For the
//! periodic family a side that can be grown all the way around becomes the
//! full circle minus one point, and anchoring it at a point coordinate only
//! removes more points. The supremum over all boxes is therefore a maximum
//! over the finite product of per-axis candidate sides, which the search
//! below enumerates depth-first:
//!
//! * axes are visited in ascending order of candidate count,
//! * candidates on an axis are tried in descending order of length,
//! * a partial product that is already below the incumbent (the best volume
//!   found by any worker) prunes the subtree,
//! * once no point survives the sides chosen so far, the remaining axes take
//!   their longest side and the subtree is closed.
//!
//! Ties between equal volumes go to the lexicographically smallest
//! `(anchor, length)` vector, so the answer does not depend on the order of
//! exploration or on how the first axis is split between workers.

use std::cmp::Ordering;
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{product, Scalar};
use crate::torus::{check_dim, AnchoredBox, PeriodicBox, PeriodicInterval, PointSet};

/// Default cap on the size of the candidate product.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ExactEnumeration,
    GapScan1d,
    Sampling,
    WitnessConstruction,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactEnumeration => "exact-enumeration",
            Method::GapScan1d => "gap-scan-1d",
            Method::Sampling => "sampling",
            Method::WitnessConstruction => "witness-construction",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness<T = f64> {
    Periodic(PeriodicBox<T>),
    Anchored(AnchoredBox<T>),
}

impl<T: Scalar> Witness<T> {
    pub fn volume(&self) -> T {
        match self {
            Witness::Periodic(b) => b.volume(),
            Witness::Anchored(b) => b.volume(),
        }
    }

    pub fn is_empty_for(&self, set: &PointSet<T>) -> Result<bool> {
        match self {
            Witness::Periodic(b) => b.is_empty_for(set),
            Witness::Anchored(b) => b.is_empty_for(set),
        }
    }

    /// The witness as a periodic box; anchored boxes are converted.
    pub fn to_periodic(&self) -> PeriodicBox<T> {
        match self {
            Witness::Periodic(b) => b.clone(),
            Witness::Anchored(b) => b.to_periodic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DispersionResult<T = f64> {
    pub volume: T,
    /// `None` only when sampling found no empty box.
    pub witness: Option<Witness<T>>,
    pub method: Method,
    /// Number of candidate boxes covered: the full candidate product for the
    /// exact search, the number of draws for sampling.
    pub candidates_examined: u128,
    /// Search-tree nodes actually visited; depends on partitioning.
    pub nodes_visited: u64,
    pub exact: bool,
}

impl<T: Scalar> DispersionResult<T> {
    fn from_witness(witness: Witness<T>, method: Method, examined: u128, nodes: u64, exact: bool) -> Self {
        Self {
            volume: witness.volume(),
            witness: Some(witness),
            method,
            candidates_examined: examined,
            nodes_visited: nodes,
            exact,
        }
    }

    /// Result for the empty point set: the whole torus minus the anchor
    /// hyperplanes through the origin.
    fn empty_set_periodic(dim: usize, method: Method) -> Result<Self> {
        let b = PeriodicBox::full(vec![T::zero(); dim])?;
        Ok(Self::from_witness(Witness::Periodic(b), method, 1, 0, true))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum candidate product the search may cover.
    pub budget: u128,
    /// Worker threads; candidates of the first search axis are dealt out
    /// among them round-robin.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

/// Candidate sides for one axis (0-based) of a periodic box: every arc
/// between two distinct axis coordinates, in both directions, plus the full
/// circle minus each coordinate. With `m` distinct coordinates there are
/// exactly `m²` candidates.
pub fn axis_candidates<T: Scalar>(set: &PointSet<T>, axis: usize) -> Result<Vec<PeriodicInterval<T>>> {
    check_axis(set, axis)?;
    if set.is_empty() {
        return Err(Error::InvalidInput("axis candidates need at least one point".into()));
    }
    let values = set.distinct_axis_values(axis);
    let mut out = Vec::with_capacity(values.len() * values.len());
    for a in &values {
        for b in &values {
            out.push(PeriodicInterval::from_endpoints(a.clone(), b.clone())?);
        }
    }
    Ok(out)
}

/// Candidate sides `(lower, upper)` for one axis of an ordinary box, drawn
/// from `{0} ∪ coordinates ∪ {1}` with `lower < upper`.
pub fn box_axis_candidates<T: Scalar>(set: &PointSet<T>, axis: usize) -> Result<Vec<(T, T)>> {
    check_axis(set, axis)?;
    let mut ends = vec![T::zero()];
    ends.extend(set.distinct_axis_values(axis).into_iter().filter(|v| !v.is_zero()));
    ends.push(T::one());
    let mut out = Vec::with_capacity(ends.len() * (ends.len() - 1) / 2);
    for (i, lo) in ends.iter().enumerate() {
        for hi in &ends[i + 1..] {
            out.push((lo.clone(), hi.clone()));
        }
    }
    Ok(out)
}

fn check_axis<T: Scalar>(set: &PointSet<T>, axis: usize) -> Result<()> {
    if axis >= set.dim() {
        return Err(Error::OutOfRange {
            what: "axis",
            detail: format!("axis {axis} for a {}-dimensional set", set.dim()),
        });
    }
    Ok(())
}

/// Exact dispersion over periodic boxes.
pub fn exact_dispersion_periodic<T: Scalar>(set: &PointSet<T>, opts: &SearchOptions) -> Result<DispersionResult<T>> {
    if set.is_empty() {
        return DispersionResult::empty_set_periodic(set.dim(), Method::ExactEnumeration);
    }
    let candidates = (0..set.dim())
        .map(|axis| axis_candidates(set, axis))
        .collect::<Result<Vec<_>>>()?;
    let found = search(set, candidates, opts)?;
    let b = PeriodicBox::new(found.sides)?;
    Ok(DispersionResult::from_witness(
        Witness::Periodic(b),
        Method::ExactEnumeration,
        found.examined,
        found.nodes,
        true,
    ))
}

/// Exact dispersion over ordinary axis-parallel boxes inside the unit cube.
pub fn exact_dispersion_boxes<T: Scalar>(set: &PointSet<T>, opts: &SearchOptions) -> Result<DispersionResult<T>> {
    let candidates = (0..set.dim())
        .map(|axis| {
            Ok(box_axis_candidates(set, axis)?
                .into_iter()
                .map(|(lower, upper)| Span { lower, upper })
                .collect())
        })
        .collect::<Result<Vec<Vec<Span<T>>>>>()?;
    let found = search(set, candidates, opts)?;
    let (lower, upper) = found.sides.into_iter().map(|s| (s.lower, s.upper)).unzip();
    let b = AnchoredBox::new(lower, upper)?;
    Ok(DispersionResult::from_witness(
        Witness::Anchored(b),
        Method::ExactEnumeration,
        found.examined,
        found.nodes,
        true,
    ))
}

/// Largest cyclic gap of a one-dimensional set, in `O(n log n)`.
pub fn cyclic_gap_dispersion_1d<T: Scalar>(set: &PointSet<T>) -> Result<DispersionResult<T>> {
    if set.dim() != 1 {
        return Err(Error::WrongCase(format!(
            "the cyclic gap scan needs d = 1, got d = {}",
            set.dim()
        )));
    }
    if set.is_empty() {
        return DispersionResult::empty_set_periodic(1, Method::GapScan1d);
    }
    let values = set.distinct_axis_values(0);
    let m = values.len();
    let mut best: Option<PeriodicInterval<T>> = None;
    for (i, start) in values.iter().enumerate() {
        let gap = PeriodicInterval::from_endpoints(start.clone(), values[(i + 1) % m].clone())?;
        // strict: the first (smallest anchor) gap wins ties
        if best.as_ref().is_none_or(|b| b.length().lt(&gap.length())) {
            best = Some(gap);
        }
    }
    let b = PeriodicBox::new(vec![best.expect("at least one gap")])?;
    Ok(DispersionResult::from_witness(
        Witness::Periodic(b),
        Method::GapScan1d,
        m as u128,
        m as u64,
        true,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub trials: u64,
    pub seed: u64,
}

/// Random lower bound: draws boxes uniformly from the per-axis periodic
/// candidates and keeps the best empty one. Draws come from ChaCha8 seeded
/// with `seed`, so runs are reproducible on every platform.
pub fn sampled_dispersion_lower_bound<T: Scalar>(set: &PointSet<T>, opts: &SampleOptions) -> Result<DispersionResult<T>> {
    check_trials(opts)?;
    if set.is_empty() {
        let mut r = DispersionResult::empty_set_periodic(set.dim(), Method::Sampling)?;
        r.exact = false;
        return Ok(r);
    }
    let candidates = (0..set.dim())
        .map(|axis| axis_candidates(set, axis))
        .collect::<Result<Vec<_>>>()?;
    let best = sample(set, &candidates, opts);
    finish_sample(best.map(PeriodicBox::new).transpose()?.map(Witness::Periodic), opts)
}

/// [`sampled_dispersion_lower_bound`] for ordinary boxes.
pub fn sampled_dispersion_lower_bound_boxes<T: Scalar>(set: &PointSet<T>, opts: &SampleOptions) -> Result<DispersionResult<T>> {
    check_trials(opts)?;
    let candidates = (0..set.dim())
        .map(|axis| {
            Ok(box_axis_candidates(set, axis)?
                .into_iter()
                .map(|(lower, upper)| Span { lower, upper })
                .collect())
        })
        .collect::<Result<Vec<Vec<Span<T>>>>>()?;
    let best = sample(set, &candidates, opts);
    let witness = best
        .map(|sides| {
            let (lower, upper) = sides.into_iter().map(|s| (s.lower, s.upper)).unzip();
            AnchoredBox::new(lower, upper)
        })
        .transpose()?
        .map(Witness::Anchored);
    finish_sample(witness, opts)
}

fn check_trials(opts: &SampleOptions) -> Result<()> {
    if opts.trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            detail: "at least one trial is required".into(),
        });
    }
    Ok(())
}

fn finish_sample<T: Scalar>(witness: Option<Witness<T>>, opts: &SampleOptions) -> Result<DispersionResult<T>> {
    Ok(match witness {
        Some(w) => DispersionResult::from_witness(w, Method::Sampling, opts.trials as u128, opts.trials, false),
        None => DispersionResult {
            volume: T::zero(),
            witness: None,
            method: Method::Sampling,
            candidates_examined: opts.trials as u128,
            nodes_visited: opts.trials,
            exact: false,
        },
    })
}

fn sample<T: Scalar, S: Side<T>>(set: &PointSet<T>, candidates: &[Vec<S>], opts: &SampleOptions) -> Option<Vec<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<(T, Vec<S>)> = None;
    for _ in 0..opts.trials {
        let sides: Vec<S> = candidates
            .iter()
            .map(|c| c[rng.gen_range(0..c.len())].clone())
            .collect();
        let empty = !set
            .points()
            .iter()
            .any(|p| sides.iter().zip(p).all(|(s, c)| s.contains(c)));
        if empty {
            let volume = volume_of(&sides);
            if better(&volume, &sides, best.as_ref()) {
                best = Some((volume, sides));
            }
        }
    }
    best.map(|(_, sides)| sides)
}

/// One side of a candidate box.
trait Side<T>: Clone + Send + Sync {
    fn length(&self) -> T;
    fn contains(&self, z: &T) -> bool;
    fn cmp_key(&self, other: &Self) -> Ordering;
}

impl<T: Scalar> Side<T> for PeriodicInterval<T> {
    fn length(&self) -> T {
        PeriodicInterval::length(self)
    }

    fn contains(&self, z: &T) -> bool {
        PeriodicInterval::contains(self, z)
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        PeriodicInterval::cmp_key(self, other)
    }
}

#[derive(Clone, Debug)]
struct Span<T> {
    lower: T,
    upper: T,
}

impl<T: Scalar> Side<T> for Span<T> {
    fn length(&self) -> T {
        self.upper.sub(&self.lower)
    }

    fn contains(&self, z: &T) -> bool {
        self.lower.lt(z) && z.lt(&self.upper)
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.lower
            .total_cmp(&other.lower)
            .then_with(|| self.length().total_cmp(&other.length()))
    }
}

fn volume_of<T: Scalar, S: Side<T>>(sides: &[S]) -> T {
    let lengths: Vec<T> = sides.iter().map(Side::length).collect();
    product(&lengths)
}

fn cmp_sides<T: Scalar, S: Side<T>>(a: &[S], b: &[S]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp_key(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Larger volume wins; equal volumes go to the smaller key.
fn better<T: Scalar, S: Side<T>>(volume: &T, sides: &[S], incumbent: Option<&(T, Vec<S>)>) -> bool {
    match incumbent {
        None => true,
        Some((v, s)) => match volume.total_cmp(v) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => cmp_sides(sides, s) == Ordering::Less,
        },
    }
}

struct AxisCandidates<T, S> {
    axis: usize,
    sides: Vec<S>,
    lengths: Vec<T>,
}

struct Found<S> {
    /// Sides in axis order.
    sides: Vec<S>,
    examined: u128,
    nodes: u64,
}

fn search<T: Scalar, S: Side<T>>(set: &PointSet<T>, candidates: Vec<Vec<S>>, opts: &SearchOptions) -> Result<Found<S>> {
    check_dim(set.dim(), candidates.len())?;
    let examined = candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if examined > opts.budget {
        return Err(Error::BudgetExceeded {
            required: examined,
            budget: opts.budget,
        });
    }

    let mut axes: Vec<AxisCandidates<T, S>> = candidates
        .into_iter()
        .enumerate()
        .map(|(axis, mut sides)| {
            // longest first; equal lengths in key order
            sides.sort_by(|a, b| b.length().total_cmp(&a.length()).then_with(|| a.cmp_key(b)));
            let lengths = sides.iter().map(Side::length).collect();
            AxisCandidates { axis, sides, lengths }
        })
        .collect();
    axes.sort_by_key(|a| (a.sides.len(), a.axis));

    let first_len = axes[0].sides.len();
    let workers = opts.workers.clamp(1, first_len.max(1));
    let all: Vec<usize> = (0..set.len()).collect();
    // best volume found by any worker; only used to prune
    let shared: Mutex<Option<T>> = Mutex::new(None);

    let run = |stripe: Stripe| {
        let mut state = SearchState {
            set,
            axes: &axes,
            best: None,
            floor: None,
            shared: (workers > 1).then_some(&shared),
            chosen: Vec::with_capacity(axes.len()),
            nodes: 0,
        };
        state.descend(0, T::one(), &all, Some(stripe));
        (state.best, state.nodes)
    };

    let partials: Vec<(Option<Incumbent<T, S>>, u64)> = if workers == 1 {
        vec![run(Stripe { start: 0, step: 1 })]
    } else {
        std::thread::scope(|scope| {
            // interleaved, so every worker gets long and short first sides
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let run = &run;
                    scope.spawn(move || run(Stripe { start: w, step: workers }))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let mut best: Option<(T, Vec<S>)> = None;
    let mut nodes = 0;
    for (candidate, n) in partials {
        nodes += n;
        if let Some((volume, sides)) = candidate {
            if better(&volume, &sides, best.as_ref()) {
                best = Some((volume, sides));
            }
        }
    }
    let (_, sides) = best.ok_or_else(|| {
        Error::InvariantViolation("exhaustive search found no empty candidate box".into())
    })?;
    Ok(Found { sides, examined, nodes })
}

type Incumbent<T, S> = (T, Vec<S>);

struct SearchState<'a, T, S> {
    set: &'a PointSet<T>,
    axes: &'a [AxisCandidates<T, S>],
    best: Option<(T, Vec<S>)>,
    /// Last seen value of `shared`.
    floor: Option<T>,
    shared: Option<&'a Mutex<Option<T>>>,
    /// Candidate index chosen at each depth so far.
    chosen: Vec<usize>,
    nodes: u64,
}

impl<T: Scalar, S: Side<T>> SearchState<'_, T, S> {
    fn descend(&mut self, depth: usize, partial: T, alive: &[usize], stripe: Option<Stripe>) {
        if alive.is_empty() {
            // Nothing left to exclude: every remaining axis takes its first
            // (longest, then smallest) candidate.
            let filled = self.chosen.len();
            self.chosen.extend(std::iter::repeat_n(0, self.axes.len() - depth));
            self.offer();
            self.chosen.truncate(filled);
            return;
        }
        if depth == self.axes.len() {
            return;
        }
        let axis = &self.axes[depth];
        let stripe = stripe.unwrap_or(Stripe { start: 0, step: 1 });
        let mut next_alive = Vec::with_capacity(alive.len());
        for idx in (stripe.start..axis.sides.len()).step_by(stripe.step) {
            if depth < 2 {
                self.refresh_floor();
            }
            let next = partial.mul(&axis.lengths[idx]);
            let beaten = |bound: Option<&T>| bound.is_some_and(|b| next.certainly_below(b));
            if beaten(self.best.as_ref().map(|b| &b.0)) || beaten(self.floor.as_ref()) {
                // sorted by length: every later candidate is shorter
                break;
            }
            self.nodes += 1;
            let side = &axis.sides[idx];
            next_alive.clear();
            next_alive.extend(
                alive
                    .iter()
                    .copied()
                    .filter(|&p| side.contains(&self.set.point(p)[axis.axis])),
            );
            self.chosen.push(idx);
            let survivors = std::mem::take(&mut next_alive);
            self.descend(depth + 1, next, &survivors, None);
            next_alive = survivors;
            self.chosen.pop();
        }
    }

    fn offer(&mut self) {
        let mut sides: Vec<Option<S>> = vec![None; self.axes.len()];
        for (axis, &idx) in self.axes.iter().zip(&self.chosen) {
            sides[axis.axis] = Some(axis.sides[idx].clone());
        }
        let sides: Vec<S> = sides.into_iter().map(|s| s.expect("every axis chosen")).collect();
        let volume = volume_of(&sides);
        if better(&volume, &sides, self.best.as_ref()) {
            if let Some(shared) = self.shared {
                let mut top = shared.lock().expect("search worker panicked");
                if top.as_ref().is_none_or(|t| t.lt(&volume)) {
                    *top = Some(volume.clone());
                }
            }
            self.best = Some((volume, sides));
        }
    }

    fn refresh_floor(&mut self) {
        if let Some(shared) = self.shared {
            self.floor = shared.lock().expect("search worker panicked").clone();
        }
    }
}

/// Every `step`-th candidate of the first search axis, from `start`.
#[derive(Clone, Copy)]
struct Stripe {
    start: usize,
    step: usize,
}
