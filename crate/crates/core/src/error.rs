//! Error type shared by every module of the core crate.

use alloc::string::String;

/// Errors reported by the algebra, subspace, group and Lie-algebra routines.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GaError {
    /// The requested signature is empty or exceeds the configured limit.
    #[error("invalid signature ({p},{q},{r}): {reason}")]
    InvalidSignature {
        /// Number of generators squaring to +1.
        p: usize,
        /// Number of generators squaring to -1.
        q: usize,
        /// Number of generators squaring to 0.
        r: usize,
        /// Human-readable cause.
        reason: String,
    },
    /// A blade index does not belong to the algebra.
    #[error("blade mask {mask:#b} is outside an algebra with {n} generators")]
    BladeOutOfRange {
        /// Offending mask.
        mask: u32,
        /// Number of generators of the algebra.
        n: usize,
    },
    /// The element has no two-sided inverse.
    #[error("element is not invertible")]
    NotInvertible,
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A name does not denote a known subspace, target or group.
    #[error("unknown name: {0}")]
    UnknownName(String),
    /// The target is outside the list of closed forms available.
    #[error("no closed form in paper for {0}")]
    NoClosedForm(String),
    /// Two pieces of a direct sum share a blade, or two table rows match.
    #[error("overlap: {0}")]
    Overlap(String),
    /// The operation needs at least one degenerate generator.
    #[error("operation requires r >= 1")]
    RequiresDegenerate,
    /// The element is not a member of the group it was claimed to belong to.
    #[error("element is not a member of {0}")]
    NotAMember(String),
    /// A construction produced a result violating its stated postcondition.
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    /// No tabulated Lie algebra covers this group and signature.
    #[error("no table row for {0}")]
    NoTableRow(String),
    /// The requested mode or form does not exist for this object.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, GaError>;
