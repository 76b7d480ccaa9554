//! Combinatorial constraints on weight data: pairing of opposite weights
//! across distinct points, equal weight sums, and the count rule for
//! actions whose weights are all `±1`.

use std::collections::{BTreeMap, VecDeque};

use crate::data::FixedPointData;
use crate::error::Result;
use crate::scalar::{self, IntScalar};

/// One weight occurrence, identified by its point index and value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence<T> {
    pub point: usize,
    pub weight: T,
}

/// A perfect matching of all weight occurrences into pairs `(w, -w)` whose
/// members sit at different points. The first member carries the positive
/// weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingWitness<T> {
    pub pairs: Vec<(Occurrence<T>, Occurrence<T>)>,
}

impl<T: IntScalar> PairingWitness<T> {
    /// Re-checks the witness against `data` without trusting how it was built.
    pub fn is_valid_for(&self, data: &FixedPointData<T>) -> bool {
        let mut expected: BTreeMap<(usize, T), usize> = BTreeMap::new();
        for (i, p) in data.points().iter().enumerate() {
            for w in p.weights() {
                *expected.entry((i, w.clone())).or_default() += 1;
            }
        }
        let mut seen: BTreeMap<(usize, T), usize> = BTreeMap::new();
        for (a, b) in &self.pairs {
            if a.point == b.point || a.point >= data.num_points() || b.point >= data.num_points() {
                return false;
            }
            match a.weight.checked_negate() {
                Some(neg) if neg == b.weight => {}
                _ => return false,
            }
            *seen.entry((a.point, a.weight.clone())).or_default() += 1;
            *seen.entry((b.point, b.weight.clone())).or_default() += 1;
        }
        seen == expected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingObstruction<T> {
    /// The total number of weights is odd.
    OddWeightCount(usize),
    /// `+value` and `-value` occur a different number of times.
    Unbalanced { value: T, positive: usize, negative: usize },
    /// Counts balance but some point holds too many occurrences of `±value`
    /// to match them all with occurrences elsewhere.
    NoCrossMatching { value: T, matched: usize, needed: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingOutcome<T> {
    Feasible(PairingWitness<T>),
    Infeasible(PairingObstruction<T>),
}

impl<T> PairingOutcome<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(_))
    }
}

/// Counts of `+v` and `-v` per point.
type SignedCounts = (Vec<usize>, Vec<usize>);

/// Per absolute value `v`: how many `+v` and `-v` sit at each point.
fn occurrence_table<T: IntScalar>(data: &FixedPointData<T>) -> Result<BTreeMap<T, SignedCounts>> {
    let k = data.num_points();
    let mut table: BTreeMap<T, SignedCounts> = BTreeMap::new();
    for (i, p) in data.points().iter().enumerate() {
        for w in p.weights() {
            let entry = table.entry(scalar::abs(w)?).or_insert_with(|| (vec![0; k], vec![0; k]));
            if w.is_positive() {
                entry.0[i] += 1;
            } else {
                entry.1[i] += 1;
            }
        }
    }
    Ok(table)
}

/// Hall-type counting criterion: for every `v`, the `+v` and `-v` totals
/// agree (call it `t`) and no point holds more than `t` occurrences of `±v`.
/// Equivalent to existence of a pairing; [`check_pairing`] stays the
/// authoritative decision and the one that produces witnesses.
pub fn pairing_counting_criterion<T: IntScalar>(data: &FixedPointData<T>) -> Result<bool> {
    for (plus, minus) in occurrence_table(data)?.values() {
        let total: usize = plus.iter().sum();
        if total != minus.iter().sum::<usize>() {
            return Ok(false);
        }
        if plus.iter().zip(minus).any(|(a, b)| a + b > total) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether the weights split into opposite pairs at distinct points,
/// one absolute value at a time, via maximum flow on the bipartite graph of
/// `+v` and `-v` occurrences with same-point edges removed.
pub fn check_pairing<T: IntScalar>(data: &FixedPointData<T>) -> Result<PairingOutcome<T>> {
    let count = data.num_points() * data.complex_dimension();
    if count % 2 == 1 {
        return Ok(PairingOutcome::Infeasible(PairingObstruction::OddWeightCount(count)));
    }
    let k = data.num_points();
    let mut pairs = Vec::new();
    for (value, (plus, minus)) in occurrence_table(data)? {
        let positive: usize = plus.iter().sum();
        let negative: usize = minus.iter().sum();
        if positive != negative {
            return Ok(PairingOutcome::Infeasible(PairingObstruction::Unbalanced {
                value,
                positive,
                negative,
            }));
        }
        // source = 0, plus side 1..=k, minus side k+1..=2k, sink = 2k+1
        let (source, sink) = (0, 2 * k + 1);
        let mut net = FlowNetwork::new(2 * k + 2);
        for i in 0..k {
            net.add_capacity(source, 1 + i, plus[i]);
            net.add_capacity(1 + k + i, sink, minus[i]);
            for j in 0..k {
                if i != j && plus[i] > 0 && minus[j] > 0 {
                    net.add_capacity(1 + i, 1 + k + j, positive);
                }
            }
        }
        let matched = net.max_flow(source, sink);
        if matched < positive {
            return Ok(PairingOutcome::Infeasible(PairingObstruction::NoCrossMatching {
                value,
                matched,
                needed: positive,
            }));
        }
        let neg_value = scalar::neg(&value)?;
        for i in 0..k {
            for j in 0..k {
                for _ in 0..net.flow(1 + i, 1 + k + j) {
                    pairs.push((
                        Occurrence {
                            point: i,
                            weight: value.clone(),
                        },
                        Occurrence {
                            point: j,
                            weight: neg_value.clone(),
                        },
                    ));
                }
            }
        }
    }
    Ok(PairingOutcome::Feasible(PairingWitness { pairs }))
}

/// Dense Edmonds–Karp; the graphs here have at most `2k + 2` nodes.
struct FlowNetwork {
    capacity: Vec<Vec<usize>>,
    residual: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            capacity: vec![vec![0; nodes]; nodes],
            residual: vec![vec![0; nodes]; nodes],
        }
    }

    fn add_capacity(&mut self, from: usize, to: usize, cap: usize) {
        self.capacity[from][to] += cap;
        self.residual[from][to] += cap;
    }

    fn flow(&self, from: usize, to: usize) -> usize {
        self.capacity[from][to].saturating_sub(self.residual[from][to])
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let nodes = self.residual.len();
        let mut total = 0;
        loop {
            let mut parent = vec![usize::MAX; nodes];
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                for v in 0..nodes {
                    if parent[v] == usize::MAX && self.residual[u][v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return total;
            }
            let mut bottleneck = usize::MAX;
            let mut v = sink;
            while v != source {
                let u = parent[v];
                bottleneck = bottleneck.min(self.residual[u][v]);
                v = u;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v];
                self.residual[u][v] -= bottleneck;
                self.residual[v][u] += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumClass<T> {
    pub sum: T,
    pub points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualSumsReport<T> {
    /// Whether the point count is below `n + 1`, i.e. at most `n`.
    pub applicable: bool,
    /// Points grouped by weight sum, ascending by sum.
    pub classes: Vec<SumClass<T>>,
}

impl<T> EqualSumsReport<T> {
    pub fn passed(&self) -> bool {
        !self.applicable || self.classes.iter().all(|c| c.points.len() >= 2)
    }

    /// Points whose weight sum no other point shares.
    pub fn lonely_points(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.points.len() == 1)
            .map(|c| c.points[0])
            .collect()
    }
}

/// With at most `n` fixed points, every weight sum must be shared by at
/// least two points. With more points the condition is vacuous.
pub fn check_equal_sums<T: IntScalar>(data: &FixedPointData<T>) -> Result<EqualSumsReport<T>> {
    let mut by_sum: BTreeMap<T, Vec<usize>> = BTreeMap::new();
    for (i, p) in data.points().iter().enumerate() {
        by_sum.entry(p.weight_sum()?).or_default().push(i);
    }
    Ok(EqualSumsReport {
        applicable: data.num_points() <= data.complex_dimension(),
        classes: by_sum
            .into_iter()
            .map(|(sum, points)| SumClass { sum, points })
            .collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pm1Verdict {
    /// Some weight is not `±1`.
    Vacuous,
    /// All weights are `±1` and there are exactly `2^n` points.
    Pass,
    /// All weights are `±1` but the point count is not `2^n`.
    Fail,
}

/// Actions with all weights `±1` have exactly `2^n` fixed points.
pub fn check_pm1<T: IntScalar>(data: &FixedPointData<T>) -> Pm1Verdict {
    let all_unit = data.all_weights().all(|w| w.abs().is_one());
    if !all_unit {
        return Pm1Verdict::Vacuous;
    }
    let n = data.complex_dimension();
    let k = data.num_points();
    let matches = u32::try_from(n)
        .ok()
        .and_then(|n| 1usize.checked_shl(n))
        .is_some_and(|expected| expected == k);
    if matches {
        Pm1Verdict::Pass
    } else {
        Pm1Verdict::Fail
    }
}
