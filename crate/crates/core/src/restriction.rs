//! Restriction to fixed submanifolds of finite cyclic subgroups.
//!
//! For a modulus `m >= 2`, the points of the cyclic subgroup of order `m`
//! that are fixed by the whole circle split into components of `M^{Z/m}`.
//! At each fixed point the weights divisible by `m` span the tangent space of
//! its component, and the remaining weights, reduced mod `m`, describe the
//! normal representation, which is constant along a component. The circle
//! modulo `Z/m` acts on each component with weights `w / m`, so the restricted
//! data must itself satisfy every condition of the suite.
//!
//! Weight data alone does not fix which points share a component, so a
//! modulus is feasible iff *some* grouping of points with equal signatures
//! into blocks of size `>= 2` makes every block pass the suite.

use std::collections::{BTreeMap, HashMap};

use crate::data::{FixedPoint, FixedPointData};
use crate::error::{Error, Result};
use crate::scalar::{self, IntScalar};
use crate::suite::Suite;

/// Largest signature class the grouping search accepts (bitmask width).
pub const MAX_GROUPING_CLASS: usize = 16;

/// Invariant of a fixed point relative to `Z/m`: the number of weights
/// divisible by `m` and the multiset of the other weights' residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueSignature<T> {
    pub m: T,
    /// Complex dimension of the `Z/m`-fixed component through the point.
    pub divisible: usize,
    /// Residues in `1..m`, ascending.
    pub residues: Vec<T>,
}

fn check_modulus<T: IntScalar>(m: &T) -> Result<()> {
    let two = T::one() + T::one();
    if *m < two {
        return Err(Error::BadModulus(m.to_string()));
    }
    Ok(())
}

pub fn residue_signature<T: IntScalar>(weights: &[T], m: &T) -> Result<ResidueSignature<T>> {
    check_modulus(m)?;
    let mut divisible = 0;
    let mut residues = Vec::new();
    for w in weights {
        let r = w.mod_floor(m);
        if r.is_zero() {
            divisible += 1;
        } else {
            residues.push(r);
        }
    }
    residues.sort_unstable();
    Ok(ResidueSignature {
        m: m.clone(),
        divisible,
        residues,
    })
}

/// Weight data of the quotient circle on the component through `group`:
/// each point keeps its `m`-divisible weights, divided by `m`.
pub fn restrict_group<T: IntScalar>(group: &[&FixedPoint<T>], m: &T) -> Result<FixedPointData<T>> {
    let first = group.first().ok_or(Error::EmptyGroup)?;
    let signature = residue_signature(first.weights(), m)?;
    for p in &group[1..] {
        if residue_signature(p.weights(), m)? != signature {
            return Err(Error::SignatureMismatch { m: m.to_string() });
        }
    }
    if signature.divisible == 0 {
        return Err(Error::EmptyRestriction { m: m.to_string() });
    }
    let points = group
        .iter()
        .map(|p| {
            let weights = p
                .weights()
                .iter()
                .filter(|w| w.mod_floor(m).is_zero())
                .map(|w| w.div_floor(m))
                .collect();
            FixedPoint::with_weights(p.label.clone(), weights)
        })
        .collect();
    Ok(FixedPointData::from_parts_unchecked(signature.divisible, points))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    /// Point indices into the original data, ascending.
    pub points: Vec<usize>,
    /// Complex dimension of the component (0 for isolated `Z/m`-fixed points).
    pub dimension: usize,
}

/// An admissible assignment of fixed points to components of `M^{Z/m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGrouping {
    pub groups: Vec<ComponentGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RestrictionFailure {
    /// This point is the only one with its signature but has `m`-divisible
    /// weights, so its component would carry a single fixed point.
    ForcedSingleton { point: usize, dimension: usize },
    /// No split of these same-signature points into blocks of size `>= 2`
    /// makes every block pass the suite.
    NoAdmissibleGrouping { points: Vec<usize>, dimension: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionOutcome<T> {
    pub m: T,
    pub signatures: Vec<ResidueSignature<T>>,
    pub result: std::result::Result<ComponentGrouping, RestrictionFailure>,
}

impl<T> RestrictionOutcome<T> {
    pub fn is_feasible(&self) -> bool {
        self.result.is_ok()
    }
}

/// Searches for a grouping of points into `Z/m`-fixed components under
/// which every positive-dimensional component passes `suite`.
pub fn check_restriction<T: IntScalar>(
    data: &FixedPointData<T>,
    m: &T,
    suite: &Suite,
) -> Result<RestrictionOutcome<T>> {
    let signatures = data
        .points()
        .iter()
        .map(|p| residue_signature(p.weights(), m))
        .collect::<Result<Vec<_>>>()?;

    let mut classes: BTreeMap<&ResidueSignature<T>, Vec<usize>> = BTreeMap::new();
    let mut groups = Vec::new();
    for (i, sig) in signatures.iter().enumerate() {
        if sig.divisible == 0 {
            groups.push(ComponentGroup {
                points: vec![i],
                dimension: 0,
            });
        } else {
            classes.entry(sig).or_default().push(i);
        }
    }

    for (sig, members) in &classes {
        let dimension = sig.divisible;
        if members.len() == 1 {
            return Ok(RestrictionOutcome {
                m: m.clone(),
                result: Err(RestrictionFailure::ForcedSingleton {
                    point: members[0],
                    dimension,
                }),
                signatures: signatures.clone(),
            });
        }
        match group_class(data, members, m, suite)? {
            Some(blocks) => groups.extend(blocks.into_iter().map(|points| ComponentGroup { points, dimension })),
            None => {
                return Ok(RestrictionOutcome {
                    m: m.clone(),
                    result: Err(RestrictionFailure::NoAdmissibleGrouping {
                        points: members.clone(),
                        dimension,
                    }),
                    signatures: signatures.clone(),
                })
            }
        }
    }
    groups.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(RestrictionOutcome {
        m: m.clone(),
        result: Ok(ComponentGrouping { groups }),
        signatures,
    })
}

/// Set-partition search over one signature class, memoized on bitmasks.
/// Blocks are tried largest-first, so the single all-points component is
/// preferred when it works.
fn group_class<T: IntScalar>(
    data: &FixedPointData<T>,
    members: &[usize],
    m: &T,
    suite: &Suite,
) -> Result<Option<Vec<Vec<usize>>>> {
    if members.len() > MAX_GROUPING_CLASS {
        return Err(Error::GroupTooLarge {
            size: members.len(),
            limit: MAX_GROUPING_CLASS,
        });
    }

    struct Search<'a, T> {
        data: &'a FixedPointData<T>,
        members: &'a [usize],
        m: &'a T,
        suite: &'a Suite,
        block_ok: HashMap<u32, bool>,
        solved: HashMap<u32, Option<u32>>,
    }

    impl<T: IntScalar> Search<'_, T> {
        fn block_passes(&mut self, block: u32) -> Result<bool> {
            if let Some(&ok) = self.block_ok.get(&block) {
                return Ok(ok);
            }
            let pts: Vec<&FixedPoint<T>> = (0..self.members.len())
                .filter(|b| block & (1 << b) != 0)
                .map(|b| &self.data.points()[self.members[b]])
                .collect();
            let restricted = restrict_group(&pts, self.m)?;
            let ok = self.suite.passes(&restricted)?;
            self.block_ok.insert(block, ok);
            Ok(ok)
        }

        /// Returns the first block of a successful split of `mask`.
        fn solve(&mut self, mask: u32) -> Result<Option<u32>> {
            if mask == 0 {
                return Ok(Some(0));
            }
            if let Some(&r) = self.solved.get(&mask) {
                return Ok(r);
            }
            let low = mask & mask.wrapping_neg();
            let rest = mask & !low;
            let mut found = None;
            let mut sub = rest;
            while sub != 0 {
                let block = low | sub;
                if self.block_passes(block)? && self.solve(mask & !block)?.is_some() {
                    found = Some(block);
                    break;
                }
                sub = (sub - 1) & rest;
            }
            self.solved.insert(mask, found);
            Ok(found)
        }
    }

    let mut search = Search {
        data,
        members,
        m,
        suite,
        block_ok: HashMap::new(),
        solved: HashMap::new(),
    };
    let full = (1u32 << members.len()) - 1;
    if search.solve(full)?.is_none() {
        return Ok(None);
    }
    let mut blocks = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let block = search.solve(mask)?.expect("solved above");
        blocks.push(
            (0..members.len())
                .filter(|b| block & (1 << b) != 0)
                .map(|b| members[b])
                .collect(),
        );
        mask &= !block;
    }
    Ok(Some(blocks))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllRestrictionsReport<T> {
    /// Outcomes for every modulus at which some point has a divisible
    /// weight, ascending, stopping at the first infeasible one. Moduli
    /// dividing no weight are feasible with all points isolated.
    pub outcomes: Vec<RestrictionOutcome<T>>,
    pub first_failing: Option<T>,
}

impl<T> AllRestrictionsReport<T> {
    pub fn passed(&self) -> bool {
        self.first_failing.is_none()
    }
}

/// Runs [`check_restriction`] for every `m` in `2..=max|w|`.
pub fn check_all_restrictions<T: IntScalar>(
    data: &FixedPointData<T>,
    suite: &Suite,
) -> Result<AllRestrictionsReport<T>> {
    let max = data.max_abs_weight()?;
    let mut outcomes = Vec::new();
    let mut m = T::one() + T::one();
    while m <= max {
        let touches = data.all_weights().any(|w| w.mod_floor(&m).is_zero());
        if touches {
            let outcome = check_restriction(data, &m, suite)?;
            let feasible = outcome.is_feasible();
            outcomes.push(outcome);
            if !feasible {
                return Ok(AllRestrictionsReport {
                    outcomes,
                    first_failing: Some(m),
                });
            }
        }
        m = scalar::add(&m, &T::one())?;
    }
    Ok(AllRestrictionsReport {
        outcomes,
        first_failing: None,
    })
}
