//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by classification, enumeration and parsing routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The input matrix is not a member of the expected matrix group
    /// within the residual tolerance.
    #[error("matrix is not in {group} within tolerance (residual {residual:.3e})")]
    NotInGroup { group: &'static str, residual: f64 },

    /// A Lorentz matrix with negative upper-left entry was passed where a
    /// proper (time-orientation preserving) one is required.
    #[error("Lorentz matrix is not proper (upper-left entry {entry:.6})")]
    NotProper { entry: f64 },

    /// The iterative eigensolver did not converge within its iteration cap.
    #[error("eigensolver failed to converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    /// A restricted bilinear form is singular within tolerance, so the
    /// requested orthonormalization (or chain separation) is impossible.
    #[error("degenerate span: {context}")]
    DegenerateSpan { context: &'static str },

    /// The requested dimension is outside the validity range of the space.
    #[error("unsupported dimension n = {n} for {space}")]
    UnsupportedDimension { space: &'static str, n: i64 },

    /// A Segre string does not conform to the grammar.
    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },

    /// A symbol (or other structured value) violates its type invariants.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// A degree or index argument is out of range.
    #[error("range error: {0}")]
    RangeError(String),

    /// No enumerated symbol matches the supplied dimension vectors.
    #[error("no symbol matches the supplied dimension vectors")]
    NoMatch,

    /// More than one enumerated symbol matches the supplied dimension
    /// vectors. Never expected; raised defensively if injectivity fails.
    #[error("ambiguous match: {count} symbols share the supplied dimension vectors")]
    AmbiguousMatch { count: usize },

    /// An internal consistency check failed (usually a sign that the
    /// tolerances are mis-set for the given input).
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
