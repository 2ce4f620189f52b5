//! Ideal lattices of finite commutative unitary rings and the algebras of
//! logic they carry.
//!
//! Every finite commutative unitary ring is a product
//! `Z_{p1^a1} x ... x Z_{pr^ar}` of prime-power cyclic rings. Its ideals form
//! a residuated lattice under intersection, sum, product and quotient, and
//! that lattice is always an MV-algebra (a Boolean algebra exactly when every
//! exponent is 1). This crate builds those lattices, runs exhaustive axiom
//! suites over them, generates the binary block codes they induce, and
//! classifies the finite MV-algebras of a given size via ring constructions.
//!
//! The main entry points:
//!
//! - [`RingSpec`]: a ring named by its prime-power factors, parsed from text
//!   such as `Z6` or `Z2xZ4` (composite moduli are split by the Chinese
//!   remainder theorem).
//! - [`IdealIndex`] / [`ExplicitIdeal`]: an ideal as an exponent vector with
//!   closed-form operations, and as a literal element set used as the
//!   brute-force oracle for those closed forms.
//! - [`FiniteAlgebraTable`]: the ideal lattice as Cayley tables, consumed by
//!   [`check_suite`] (residuated / BCK / MV / Wajsberg / Heyting / Boolean
//!   axiom suites with counterexample witnesses).
//! - [`membership_code`] / [`reduced_code`]: the binary block codes attached
//!   to the lattice, with Hamming-distance classification.
//! - [`classify_all`]: all MV-algebras with `n` elements, one per
//!   multiplicative partition of `n`, verified pairwise non-isomorphic.

pub mod algebra;
pub mod classify;
pub mod code;
pub mod ideal;
pub mod render;
pub mod report;
pub mod ring;
pub mod suites;

pub use algebra::{canonical_labels, DerivedOp, FiniteAlgebraTable, LatticeClass};
pub use classify::{
    chain_mv, classify_all, is_isomorphic, multiplicative_partitions, ring_for_partition,
    Classification, MultiplicativePartition, MvAlgebra, Provenance, Representative,
};
pub use code::{
    classify_code, cut_subset, membership_code, min_distance, reduced_code, BlockCode, CodeClass,
    Codeword,
};
pub use ideal::{ExplicitIdeal, IdealIndex, IdealOpKind};
pub use render::OutputFormat;
pub use report::{report_tables, Report, ReportKind};
pub use ring::{PrimePower, RingElement, RingSpec};
pub use suites::{check_suite, Condition, SuiteId, SuiteReport, Witness};

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    ParseSpec(String),
    #[error("{what} requires {limit} or fewer, got {actual}")]
    SizeBound {
        what: &'static str,
        limit: u128,
        actual: u128,
    },
    #[error("operands belong to different ring specs")]
    MismatchedSpecs,
    #[error("element does not belong to the ring")]
    InvalidElement,
    #[error("exponent vector does not index an ideal of the ring")]
    InvalidIdealIndex,
    #[error("unknown suite id `{0}`")]
    UnknownSuite(String),
    #[error("carrier index out of range")]
    IndexOutOfRange,
    #[error("a code needs at least two words to have a minimum distance")]
    TooFewWords,
    #[error("table violates the {suite} suite: {detail}")]
    SuiteViolation { suite: SuiteId, detail: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("malformed algebra table: {0}")]
    MalformedTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
