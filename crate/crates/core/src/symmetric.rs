//! Elementary symmetric polynomials and integer partitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, IntScalar};

/// A weakly decreasing tuple of positive integers, indexing the Chern
/// monomial `c_{p_1} c_{p_2} ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `d`, each exactly once, in reverse lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every degree `0..=max_degree`, grouped by ascending degree.
pub fn partitions_up_to(max_degree: usize) -> Vec<Partition> {
    (0..=max_degree).flat_map(partitions).collect()
}

/// `e_0, e_1, ..., e_len` of the given weights.
pub fn elem_sym_all<T: IntScalar>(weights: &[T]) -> Result<Vec<T>> {
    let mut e = vec![T::zero(); weights.len() + 1];
    e[0] = T::one();
    for (i, w) in weights.iter().enumerate() {
        // e_j <- e_j + w * e_{j-1}, descending so e_{j-1} is still the old value
        for j in (1..=i + 1).rev() {
            let term = scalar::mul(w, &e[j - 1])?;
            e[j] = scalar::add(&e[j], &term)?;
        }
    }
    Ok(e)
}

/// The `k`-th elementary symmetric polynomial of `weights`.
pub fn elem_sym<T: IntScalar>(k: usize, weights: &[T]) -> Result<T> {
    if k > weights.len() {
        return Err(Error::ElemSymIndex { k, len: weights.len() });
    }
    let mut e = elem_sym_all(weights)?;
    Ok(e.swap_remove(k))
}
