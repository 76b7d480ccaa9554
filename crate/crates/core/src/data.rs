//! Fixed-point weight data, validation and canonical forms.

use std::fmt;

use crate::error::Result;
use crate::scalar::{self, IntScalar};

/// One isolated fixed point: an optional label and its tangent weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPoint<T> {
    pub label: Option<String>,
    weights: Vec<T>,
}

impl<T: IntScalar> FixedPoint<T> {
    pub(crate) fn with_weights(label: Option<String>, weights: Vec<T>) -> Self {
        Self { label, weights }
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight_sum(&self) -> Result<T> {
        self.weights.iter().try_fold(T::zero(), |acc, w| scalar::add(&acc, w))
    }

    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|w| w.is_negative()).count()
    }
}

/// Complex dimension `n` plus `k >= 1` fixed points carrying `n` nonzero
/// weights each. Construct through [`validate`] or [`FixedPointData::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPointData<T> {
    n: usize,
    points: Vec<FixedPoint<T>>,
}

/// Unchecked input as it arrives from a file or a caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawData<T> {
    pub complex_dimension: i64,
    pub points: Vec<RawPoint<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPoint<T> {
    pub label: Option<String>,
    pub weights: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    NonPositiveDimension(i64),
    NoPoints,
    ZeroWeight {
        point: usize,
        position: usize,
    },
    Arity {
        point: usize,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositiveDimension(n) => {
                write!(f, "complex dimension must be positive, got {n}")
            }
            Self::NoPoints => f.write_str("no points: at least one fixed point is required"),
            Self::ZeroWeight { point, position } => {
                write!(f, "zero weight at point {point}, position {position}")
            }
            Self::Arity { point, expected, found } => {
                write!(f, "arity: point {point} has {found} weights, expected {expected}")
            }
        }
    }
}

/// Every violation found in one input, in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationErrors(pub Vec<ValidationError>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationErrors {}

/// Accepts `raw` iff every invariant of [`FixedPointData`] holds. Never
/// repairs input; all violations are reported together.
pub fn validate<T: IntScalar>(raw: RawData<T>) -> Result<FixedPointData<T>, ValidationErrors> {
    let mut errors = Vec::new();
    if raw.complex_dimension < 1 {
        errors.push(ValidationError::NonPositiveDimension(raw.complex_dimension));
    }
    if raw.points.is_empty() {
        errors.push(ValidationError::NoPoints);
    }
    let n = usize::try_from(raw.complex_dimension).unwrap_or(0);
    for (i, p) in raw.points.iter().enumerate() {
        if n >= 1 && p.weights.len() != n {
            errors.push(ValidationError::Arity {
                point: i,
                expected: n,
                found: p.weights.len(),
            });
        }
        for (j, w) in p.weights.iter().enumerate() {
            if w.is_zero() {
                errors.push(ValidationError::ZeroWeight { point: i, position: j });
            }
        }
    }
    if !errors.is_empty() {
        return Err(ValidationErrors(errors));
    }
    Ok(FixedPointData {
        n,
        points: raw
            .points
            .into_iter()
            .map(|p| FixedPoint {
                label: p.label,
                weights: p.weights,
            })
            .collect(),
    })
}

impl<T: IntScalar> FixedPointData<T> {
    /// Unlabelled data from plain weight lists.
    pub fn new(n: usize, points: Vec<Vec<T>>) -> Result<Self, ValidationErrors> {
        validate(RawData {
            complex_dimension: i64::try_from(n).unwrap_or(-1),
            points: points
                .into_iter()
                .map(|weights| RawPoint { label: None, weights })
                .collect(),
        })
    }

    /// Convenience for literals in tests and builtin datasets.
    pub fn from_i64(n: usize, points: &[&[i64]]) -> Result<Self, ValidationErrors> {
        let converted = points
            .iter()
            .map(|p| p.iter().map(|&w| T::from_i64(w).expect("weight fits")).collect())
            .collect();
        Self::new(n, converted)
    }

    /// Builds data whose invariants the caller has already established.
    pub(crate) fn from_parts_unchecked(n: usize, points: Vec<FixedPoint<T>>) -> Self {
        debug_assert!(n >= 1 && !points.is_empty());
        debug_assert!(points
            .iter()
            .all(|p| p.weights.len() == n && p.weights.iter().all(|w| !w.is_zero())));
        Self { n, points }
    }

    pub(crate) fn from_weights_unchecked(n: usize, points: Vec<Vec<T>>) -> Self {
        Self::from_parts_unchecked(
            n,
            points
                .into_iter()
                .map(|weights| FixedPoint { label: None, weights })
                .collect(),
        )
    }

    pub fn complex_dimension(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[FixedPoint<T>] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn all_weights(&self) -> impl Iterator<Item = &T> {
        self.points.iter().flat_map(|p| p.weights.iter())
    }

    pub fn max_abs_weight(&self) -> Result<T> {
        let mut best = T::zero();
        for w in self.all_weights() {
            let a = scalar::abs(w)?;
            if a > best {
                best = a;
            }
        }
        Ok(best)
    }

    pub fn total_weight_sum(&self) -> Result<T> {
        self.all_weights().try_fold(T::zero(), |acc, w| scalar::add(&acc, w))
    }

    /// The conjugate action: every weight negated, labels kept.
    pub fn negated(&self) -> Result<Self> {
        self.map_weights(scalar::neg)
    }

    /// Every weight multiplied by `d` (composition with a `d`-fold cover).
    pub fn scaled(&self, d: &T) -> Result<Self> {
        self.map_weights(|w| scalar::mul(w, d))
    }

    fn map_weights(&self, f: impl Fn(&T) -> Result<T>) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| {
                Ok(FixedPoint {
                    label: p.label.clone(),
                    weights: p.weights.iter().map(&f).collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { n: self.n, points })
    }

    /// Points reordered by `point_order`; the weights of the `i`-th new point
    /// reordered by `weight_orders[i]`.
    pub fn permuted(&self, point_order: &[usize], weight_orders: &[Vec<usize>]) -> Self {
        let points = point_order
            .iter()
            .zip(weight_orders)
            .map(|(&i, order)| FixedPoint {
                label: self.points[i].label.clone(),
                weights: order.iter().map(|&j| self.points[i].weights[j].clone()).collect(),
            })
            .collect();
        Self { n: self.n, points }
    }

    pub fn weight_lists(&self) -> Vec<Vec<T>> {
        self.points.iter().map(|p| p.weights.clone()).collect()
    }
}

/// Orbit representative of weight data under point permutation, weight
/// permutation within a point, and global negation. Labels are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm<T> {
    n: usize,
    points: Vec<Vec<T>>,
}

impl<T: IntScalar> CanonicalForm<T> {
    pub fn complex_dimension(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn to_data(&self) -> FixedPointData<T> {
        FixedPointData::from_weights_unchecked(self.n, self.points.clone())
    }

    pub(crate) fn from_sorted_unchecked(n: usize, points: Vec<Vec<T>>) -> Self {
        Self { n, points }
    }
}

/// Weights ascending within each point, points in lexicographic order.
pub(crate) fn sorted_points<T: Ord + Clone>(points: impl IntoIterator<Item = Vec<T>>) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = points
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            p
        })
        .collect();
    out.sort_unstable();
    out
}

/// The lexicographically smaller of the sorted data and its sorted negation.
pub fn canonicalize<T: IntScalar>(data: &FixedPointData<T>) -> Result<CanonicalForm<T>> {
    let plain = sorted_points(data.weight_lists());
    let negated = sorted_points(
        plain
            .iter()
            .map(|p| p.iter().map(scalar::neg).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?,
    );
    Ok(CanonicalForm {
        n: data.n,
        points: plain.min(negated),
    })
}
