//! Exhaustive enumeration of weight data up to symmetry.
//!
//! Candidates are generated directly in sorted form (weights ascending in a
//! point, points in lexicographic order), so point and weight permutations
//! never produce duplicates. Global negation is handled by keeping a
//! candidate only if it is not larger than its sorted negation.
//!
//! When the suite contains the pairing check, generation is pairing-first:
//! only globally negation-symmetric weight multisets are distributed to
//! points. Every skipped candidate would fail pairing, so the survivor set is
//! the same as with free generation and post-hoc filtering.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use crate::data::{sorted_points, CanonicalForm, FixedPointData};
use crate::error::{Error, Result};
use crate::scalar::{self, IntScalar};
use crate::suite::{CheckKind, Suite};

pub const DEFAULT_CANDIDATE_CAP: u64 = 1_000_000_000;

/// Subtrees handed to the worker pool per round.
const BATCH: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub complex_dimension: usize,
    pub num_points: usize,
    /// All weights satisfy `1 <= |w| <= max_weight`.
    pub max_weight: u32,
    pub suite: Suite,
    /// Keep only data whose weights have greatest common divisor 1.
    pub gcd_normalize: bool,
    /// Pairing-first generation with cheap-first pruning. When off, every
    /// sorted candidate is generated and judged by a full suite run.
    pub staged: bool,
    pub candidate_cap: u64,
    /// Worker threads; 0 uses the global rayon pool.
    pub workers: usize,
}

impl SearchSpec {
    pub fn new(complex_dimension: usize, num_points: usize, max_weight: u32) -> Self {
        Self {
            complex_dimension,
            num_points,
            max_weight,
            suite: Suite::paper(),
            gcd_normalize: false,
            staged: true,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
            workers: 0,
        }
    }

    pub fn with_suite(mut self, suite: Suite) -> Self {
        self.suite = suite;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(msg.to_string()));
        if self.complex_dimension == 0 {
            return bad("complex dimension must be at least 1");
        }
        if self.num_points == 0 {
            return bad("point count must be at least 1");
        }
        if self.max_weight == 0 {
            return bad("weight bound must be at least 1");
        }
        if self.suite.is_empty() {
            return bad("filter list is empty");
        }
        Ok(())
    }

    fn pairing_first(&self) -> bool {
        self.staged && self.suite.contains(CheckKind::Pairing)
    }
}

/// `generated = duplicates + gcd_rejected + Σ pruned + survivors`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchCounters {
    pub generated: u64,
    /// Candidates skipped because their negation sorts lower.
    pub duplicates: u64,
    pub gcd_rejected: u64,
    /// Rejections keyed by the first failing check.
    pub pruned: BTreeMap<CheckKind, u64>,
    pub survivors: u64,
}

impl SearchCounters {
    fn absorb(&mut self, other: &SearchCounters) {
        self.generated += other.generated;
        self.duplicates += other.duplicates;
        self.gcd_rejected += other.gcd_rejected;
        for (k, v) in &other.pruned {
            *self.pruned.entry(*k).or_default() += v;
        }
        self.survivors += other.survivors;
    }

    pub fn is_consistent(&self) -> bool {
        self.generated == self.duplicates + self.gcd_rejected + self.pruned.values().sum::<u64>() + self.survivors
    }
}

enum Subtree {
    /// Multiset of absolute values, ascending; each appears as `+v` and `-v`.
    Symmetric(Vec<i64>),
    /// Index of the first (smallest) point in the table of all points.
    FirstPoint(usize),
}

struct SubtreeResult<T> {
    survivors: Vec<CanonicalForm<T>>,
    counters: SearchCounters,
    aborted: bool,
}

struct Visitor<'a, T> {
    spec: &'a SearchSpec,
    budget: u64,
    counters: SearchCounters,
    survivors: Vec<CanonicalForm<T>>,
    aborted: bool,
}

impl<T: IntScalar> Visitor<'_, T> {
    /// Returns `false` once the budget is exhausted.
    fn visit(&mut self, points: &[Vec<i64>]) -> Result<bool> {
        self.counters.generated += 1;
        if self.counters.generated > self.budget {
            self.aborted = true;
            return Ok(false);
        }
        let negated = sorted_points(points.iter().map(|p| p.iter().map(|w| -w).collect::<Vec<_>>()));
        if negated.as_slice() < points {
            self.counters.duplicates += 1;
            return Ok(true);
        }
        if self.spec.gcd_normalize {
            let g = points.iter().flatten().fold(0i64, |g, w| g.gcd(w));
            if g != 1 {
                self.counters.gcd_rejected += 1;
                return Ok(true);
            }
        }
        let converted = points
            .iter()
            .map(|p| p.iter().map(|&w| scalar::from_i64::<T>(w)).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        let data = FixedPointData::from_weights_unchecked(self.spec.complex_dimension, converted);
        let failure = if self.spec.staged {
            self.spec.suite.first_failure(&data)?
        } else {
            self.spec
                .suite
                .run(&data)?
                .results
                .into_iter()
                .find(|r| r.status.is_failure())
                .map(|r| r.kind)
        };
        match failure {
            Some(kind) => *self.counters.pruned.entry(kind).or_default() += 1,
            None => {
                self.counters.survivors += 1;
                let (n, pts) = (self.spec.complex_dimension, data.weight_lists());
                self.survivors.push(CanonicalForm::from_sorted_unchecked(n, pts));
            }
        }
        Ok(true)
    }
}

/// All nondecreasing sequences of length `len` over `values`.
fn multisets(values: &[i64], len: usize) -> Vec<Vec<i64>> {
    fn rec(values: &[i64], start: usize, len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, i, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, 0, len, &mut Vec::new(), &mut out);
    out
}

fn signed_values(max_weight: u32) -> Vec<i64> {
    let w = i64::from(max_weight);
    (-w..=-1).chain(1..=w).collect()
}

fn subtrees(spec: &SearchSpec) -> Vec<Subtree> {
    if spec.pairing_first() {
        let total = spec.complex_dimension * spec.num_points;
        if total % 2 == 1 {
            return Vec::new();
        }
        let abs: Vec<i64> = (1..=i64::from(spec.max_weight)).collect();
        multisets(&abs, total / 2).into_iter().map(Subtree::Symmetric).collect()
    } else {
        let count = multisets(&signed_values(spec.max_weight), spec.complex_dimension).len();
        (0..count).map(Subtree::FirstPoint).collect()
    }
}

fn run_subtree<T: IntScalar>(
    spec: &SearchSpec,
    all_points: &[Vec<i64>],
    subtree: &Subtree,
    budget: u64,
) -> Result<SubtreeResult<T>> {
    let mut v = Visitor {
        spec,
        budget,
        counters: SearchCounters::default(),
        survivors: Vec::new(),
        aborted: false,
    };
    match subtree {
        Subtree::Symmetric(abs) => {
            // pool of (signed value, remaining count), ascending by value
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &a in abs {
                *counts.entry(a).or_default() += 1;
                *counts.entry(-a).or_default() += 1;
            }
            let mut pool: Vec<(i64, usize)> = counts.into_iter().collect();
            let mut chosen = Vec::with_capacity(spec.num_points);
            distribute(&mut v, &mut pool, &mut chosen, &mut Vec::new(), 0)?;
        }
        Subtree::FirstPoint(first) => {
            let mut chosen = vec![*first];
            free_tuples(&mut v, all_points, &mut chosen)?;
        }
    }
    Ok(SubtreeResult {
        survivors: v.survivors,
        counters: v.counters,
        aborted: v.aborted,
    })
}

/// Fills points one weight at a time from `pool`. Weights within a point
/// are drawn in ascending pool order; each completed point must be
/// lexicographically `>=` the previous one.
fn distribute<T: IntScalar>(
    v: &mut Visitor<'_, T>,
    pool: &mut [(i64, usize)],
    chosen: &mut Vec<Vec<i64>>,
    current: &mut Vec<i64>,
    start: usize,
) -> Result<bool> {
    let n = v.spec.complex_dimension;
    if current.len() == n {
        if chosen.last().is_some_and(|prev| prev > current) {
            return Ok(true);
        }
        chosen.push(std::mem::take(current));
        let keep_going = if chosen.len() == v.spec.num_points {
            v.visit(chosen)?
        } else {
            distribute(v, pool, chosen, current, 0)?
        };
        *current = chosen.pop().expect("just pushed");
        return Ok(keep_going);
    }
    // prune: the partial point is already below the previous point
    if let Some(prev) = chosen.last() {
        if current.as_slice() < &prev[..current.len()] {
            return Ok(true);
        }
    }
    for i in start..pool.len() {
        if pool[i].1 == 0 {
            continue;
        }
        pool[i].1 -= 1;
        current.push(pool[i].0);
        let keep_going = distribute(v, pool, chosen, current, i)?;
        current.pop();
        pool[i].1 += 1;
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

fn free_tuples<T: IntScalar>(v: &mut Visitor<'_, T>, all_points: &[Vec<i64>], chosen: &mut Vec<usize>) -> Result<bool> {
    if chosen.len() == v.spec.num_points {
        let pts: Vec<Vec<i64>> = chosen.iter().map(|&i| all_points[i].clone()).collect();
        return v.visit(&pts);
    }
    let last = *chosen.last().expect("first point fixed");
    for i in last..all_points.len() {
        chosen.push(i);
        let keep_going = free_tuples(v, all_points, chosen)?;
        chosen.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Streams one canonical representative of every surviving class to
/// `sink`, in a deterministic order independent of the worker count.
///
/// If the candidate cap is hit, the survivors of every fully explored
/// subtree before the cut have already been emitted and
/// [`Error::Truncated`] carries the counters for exactly that prefix.
pub fn enumerate<T, F>(spec: &SearchSpec, mut sink: F) -> Result<SearchCounters>
where
    T: IntScalar,
    F: FnMut(&CanonicalForm<T>),
{
    spec.validate()?;
    let all_points = Arc::new(if spec.pairing_first() {
        Vec::new()
    } else {
        multisets(&signed_values(spec.max_weight), spec.complex_dimension)
    });
    let trees = subtrees(spec);

    let pool = if spec.workers > 0 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(spec.workers)
                .build()
                .map_err(|e| Error::InvalidSpec(format!("worker pool: {e}")))?,
        )
    } else {
        None
    };

    let mut totals = SearchCounters::default();
    for batch in trees.chunks(BATCH) {
        let budget = spec.candidate_cap - totals.generated;
        let work = || -> Vec<Result<SubtreeResult<T>>> {
            batch
                .par_iter()
                .map(|t| run_subtree::<T>(spec, &all_points, t, budget))
                .collect()
        };
        let results = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        for r in results {
            let r = r?;
            if r.aborted || totals.generated + r.counters.generated > spec.candidate_cap {
                return Err(Error::Truncated {
                    cap: spec.candidate_cap,
                    partial: Box::new(totals),
                });
            }
            for s in &r.survivors {
                sink(s);
            }
            totals.absorb(&r.counters);
        }
    }
    debug_assert!(totals.is_consistent());
    Ok(totals)
}

pub fn enumerate_collect<T: IntScalar>(spec: &SearchSpec) -> Result<(Vec<CanonicalForm<T>>, SearchCounters)> {
    let mut out = Vec::new();
    let counters = enumerate(spec, |s: &CanonicalForm<T>| out.push(s.clone()))?;
    Ok((out, counters))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPointRow<T> {
    pub complex_dimension: usize,
    pub survivors: Vec<CanonicalForm<T>>,
    pub counters: SearchCounters,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPointReport<T> {
    pub max_weight: u32,
    pub rows: Vec<TwoPointRow<T>>,
}

impl<T> TwoPointReport<T> {
    pub fn dims_with_survivors(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| !r.survivors.is_empty())
            .map(|r| r.complex_dimension)
            .collect()
    }
}

/// Two fixed points, complex dimensions 1 through 4, paper suite.
pub fn enumerate_two_point_dims<T: IntScalar>(max_weight: u32, workers: usize) -> Result<TwoPointReport<T>> {
    let rows = (1..=4)
        .map(|n| {
            let mut spec = SearchSpec::new(n, 2, max_weight);
            spec.workers = workers;
            let (survivors, counters) = enumerate_collect(&spec)?;
            Ok(TwoPointRow {
                complex_dimension: n,
                survivors,
                counters,
            })
        })
        .collect::<Result<_>>()?;
    Ok(TwoPointReport { max_weight, rows })
}
