//! Exact necessary conditions on the fixed-point weights of almost complex
//! circle actions with isolated fixed points, and a bounded exhaustive
//! search over weight data that survives them.
//!
//! Everything is generic over an integer scalar ([`IntScalar`]): `BigInt`
//! for arbitrary precision, or `i32`/`i64`/`i128` with overflow reported as
//! an error. The aliases below fix the arbitrary-precision choice used by
//! the command-line tool.

pub mod data;
pub mod error;
pub mod localization;
pub mod restriction;
pub mod scalar;
pub mod search;
pub mod structural;
pub mod suite;
pub mod symmetric;

pub use data::{
    canonicalize, validate, CanonicalForm, FixedPoint, FixedPointData, RawData, RawPoint, ValidationError,
    ValidationErrors,
};
pub use error::{Error, Result};
pub use localization::{
    check_integrality, check_kosniowski, check_parity, check_vanishing, chern_table, chi_y_profile, localization_sum,
    ChernTable, ChiYProfile,
};
pub use restriction::{check_all_restrictions, check_restriction, residue_signature, restrict_group, ResidueSignature};
pub use scalar::IntScalar;
pub use search::{enumerate, enumerate_collect, enumerate_two_point_dims, SearchCounters, SearchSpec};
pub use structural::{check_equal_sums, check_pairing, check_pm1, PairingOutcome, PairingWitness};
pub use suite::{CheckKind, Status, Suite, SuiteReport};
pub use symmetric::{elem_sym, partitions, Partition};

pub use num_bigint::BigInt;

/// Arbitrary-precision rational; all localized sums live here.
pub type ExactRational = num_rational::BigRational;
pub type WeightData = FixedPointData<BigInt>;
pub type Canonical = CanonicalForm<BigInt>;
pub type BigChernTable = ChernTable<BigInt>;
pub type BigSuiteReport = SuiteReport<BigInt>;

/// Fixed-width variants, useful for fast exploratory runs.
pub type WeightData64 = FixedPointData<i64>;
pub type Rational64 = num_rational::Rational64;
