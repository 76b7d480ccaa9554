//! Named checks and the suite that runs them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::data::FixedPointData;
use crate::error::Result;
use crate::localization::{
    self, check_integrality, check_kosniowski, check_parity, check_vanishing, chi_y_profile, ChiYProfile,
    IntegralityReport, VanishingReport,
};
use crate::restriction::{check_all_restrictions, AllRestrictionsReport};
use crate::scalar::IntScalar;
use crate::structural::{
    check_equal_sums, check_pairing, check_pm1, pairing_counting_criterion, EqualSumsReport, PairingOutcome, Pm1Verdict,
};

/// Declaration order is the reporting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Validate,
    Parity,
    Pm1,
    EqualSums,
    Pairing,
    Vanishing,
    Integrality,
    Restrictions,
    Kosniowski,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Validate,
        CheckKind::Parity,
        CheckKind::Pm1,
        CheckKind::EqualSums,
        CheckKind::Pairing,
        CheckKind::Vanishing,
        CheckKind::Integrality,
        CheckKind::Restrictions,
        CheckKind::Kosniowski,
    ];

    /// Cheap-first evaluation order used for short-circuiting and pruning.
    pub const STAGED: [CheckKind; 9] = [
        CheckKind::Validate,
        CheckKind::Parity,
        CheckKind::Kosniowski,
        CheckKind::Pm1,
        CheckKind::EqualSums,
        CheckKind::Pairing,
        CheckKind::Vanishing,
        CheckKind::Integrality,
        CheckKind::Restrictions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Validate => "validate",
            CheckKind::Parity => "parity",
            CheckKind::Pm1 => "pm1",
            CheckKind::EqualSums => "equal-sums",
            CheckKind::Pairing => "pairing",
            CheckKind::Vanishing => "vanishing",
            CheckKind::Integrality => "integrality",
            CheckKind::Restrictions => "restrictions",
            CheckKind::Kosniowski => "kosniowski",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown check '{}'", self.0)
    }
}

impl std::error::Error for UnknownCheck {}

impl FromStr for CheckKind {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// A set of enabled checks. Restricted data is judged by the same suite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Suite {
    checks: BTreeSet<CheckKind>,
}

impl Suite {
    pub fn new(checks: impl IntoIterator<Item = CheckKind>) -> Self {
        Self {
            checks: checks.into_iter().collect(),
        }
    }

    /// Every condition the non-existence argument uses; no χ_y symmetry.
    pub fn paper() -> Self {
        Self::new(CheckKind::ALL.into_iter().filter(|k| *k != CheckKind::Kosniowski))
    }

    pub fn all() -> Self {
        Self::new(CheckKind::ALL)
    }

    pub fn with(mut self, kind: CheckKind) -> Self {
        self.checks.insert(kind);
        self
    }

    pub fn contains(&self, kind: CheckKind) -> bool {
        self.checks.contains(&kind)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// Enabled checks in reporting order.
    pub fn checks(&self) -> impl Iterator<Item = CheckKind> + '_ {
        self.checks.iter().copied()
    }

    /// Enabled checks in cheap-first order.
    pub fn staged(&self) -> impl Iterator<Item = CheckKind> + '_ {
        CheckKind::STAGED.into_iter().filter(|k| self.contains(*k))
    }

    /// Whether `data` passes one check, without building a witness where
    /// that can be avoided.
    pub fn check_passes<T: IntScalar>(&self, kind: CheckKind, data: &FixedPointData<T>) -> Result<bool> {
        Ok(match kind {
            CheckKind::Validate => true,
            CheckKind::Parity => check_parity(data),
            CheckKind::Kosniowski => check_kosniowski(data),
            CheckKind::Pm1 => check_pm1(data) != Pm1Verdict::Fail,
            CheckKind::EqualSums => check_equal_sums(data)?.passed(),
            CheckKind::Pairing => pairing_counting_criterion(data)? && check_pairing(data)?.is_feasible(),
            CheckKind::Vanishing => check_vanishing(data)?.passed(),
            CheckKind::Integrality => localization::integral_chern_numbers(data)?,
            CheckKind::Restrictions => check_all_restrictions(data, self)?.passed(),
        })
    }

    /// Short-circuiting verdict over all enabled checks.
    pub fn passes<T: IntScalar>(&self, data: &FixedPointData<T>) -> Result<bool> {
        for kind in self.staged() {
            if !self.check_passes(kind, data)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First enabled check (cheap-first order) that rejects `data`.
    pub fn first_failure<T: IntScalar>(&self, data: &FixedPointData<T>) -> Result<Option<CheckKind>> {
        for kind in self.staged() {
            if !self.check_passes(kind, data)? {
                return Ok(Some(kind));
            }
        }
        Ok(None)
    }

    pub fn evaluate<T: IntScalar>(&self, kind: CheckKind, data: &FixedPointData<T>) -> Result<CheckResult<T>> {
        let detail = match kind {
            CheckKind::Validate => CheckDetail::Validate,
            CheckKind::Parity => CheckDetail::Parity {
                points: data.num_points(),
                complex_dimension: data.complex_dimension(),
                allowed: check_parity(data),
            },
            CheckKind::Pm1 => CheckDetail::Pm1(check_pm1(data)),
            CheckKind::EqualSums => CheckDetail::EqualSums(check_equal_sums(data)?),
            CheckKind::Pairing => CheckDetail::Pairing(check_pairing(data)?),
            CheckKind::Vanishing => CheckDetail::Vanishing(check_vanishing(data)?),
            CheckKind::Integrality => CheckDetail::Integrality(check_integrality(data)?),
            CheckKind::Restrictions => CheckDetail::Restrictions(check_all_restrictions(data, self)?),
            CheckKind::Kosniowski => CheckDetail::Kosniowski(chi_y_profile(data)),
        };
        Ok(CheckResult {
            kind,
            status: detail.status(),
            detail,
        })
    }

    /// Runs every enabled check (no short-circuit) in reporting order.
    pub fn run<T: IntScalar>(&self, data: &FixedPointData<T>) -> Result<SuiteReport<T>> {
        let results = self.checks().map(|k| self.evaluate(k, data)).collect::<Result<_>>()?;
        Ok(SuiteReport { results })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Hypothesis of the check not met; nothing to verify.
    Vacuous,
    /// No witness exists (pairing).
    Infeasible,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Infeasible)
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Infeasible => "infeasible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckDetail<T: IntScalar> {
    Validate,
    Parity {
        points: usize,
        complex_dimension: usize,
        allowed: bool,
    },
    Pm1(Pm1Verdict),
    EqualSums(EqualSumsReport<T>),
    Pairing(PairingOutcome<T>),
    Vanishing(VanishingReport<T>),
    Integrality(IntegralityReport<T>),
    Restrictions(AllRestrictionsReport<T>),
    Kosniowski(ChiYProfile),
}

impl<T: IntScalar> CheckDetail<T> {
    fn status(&self) -> Status {
        let pass_or_fail = |ok: bool| if ok { Status::Pass } else { Status::Fail };
        match self {
            CheckDetail::Validate => Status::Pass,
            CheckDetail::Parity { allowed, .. } => pass_or_fail(*allowed),
            CheckDetail::Pm1(Pm1Verdict::Pass) => Status::Pass,
            CheckDetail::Pm1(Pm1Verdict::Fail) => Status::Fail,
            CheckDetail::Pm1(Pm1Verdict::Vacuous) => Status::Vacuous,
            CheckDetail::EqualSums(r) if !r.applicable => Status::Vacuous,
            CheckDetail::EqualSums(r) => pass_or_fail(r.passed()),
            CheckDetail::Pairing(PairingOutcome::Feasible(_)) => Status::Pass,
            CheckDetail::Pairing(PairingOutcome::Infeasible(_)) => Status::Infeasible,
            CheckDetail::Vanishing(r) => pass_or_fail(r.passed()),
            CheckDetail::Integrality(r) => pass_or_fail(r.passed()),
            CheckDetail::Restrictions(r) if r.outcomes.is_empty() => Status::Vacuous,
            CheckDetail::Restrictions(r) => pass_or_fail(r.passed()),
            CheckDetail::Kosniowski(p) => pass_or_fail(p.is_palindromic()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult<T: IntScalar> {
    pub kind: CheckKind,
    pub status: Status,
    pub detail: CheckDetail<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport<T: IntScalar> {
    pub results: Vec<CheckResult<T>>,
}

impl<T: IntScalar> SuiteReport<T> {
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|r| r.status.is_failure())
    }

    pub fn get(&self, kind: CheckKind) -> Option<&CheckResult<T>> {
        self.results.iter().find(|r| r.kind == kind)
    }
}
