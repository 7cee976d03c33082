//! Shared error type for every module in the crate.

use thiserror::Error;

/// Errors surfaced by the lattice, root-datum, Galois, and duality layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A lattice quotient expected to be finite has positive free rank.
    #[error("quotient has free rank {free_rank}, not a finite group")]
    NonFiniteQuotient { free_rank: usize },

    /// Requested a family/rank/isogeny combination that is not implemented.
    #[error("unsupported root-datum type: {0}")]
    UnsupportedType(String),

    /// A supplied regular vector pairs to zero with a root.
    #[error("vector is not regular: kills root #{root}")]
    NotRegular { root: usize },

    /// An enumeration guard tripped.
    #[error("instance too large: {0}")]
    TooLarge(String),

    /// A root index set is not closed or not symmetric.
    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    /// A generator does not preserve the root datum.
    #[error("matrix is not a root-datum automorphism (fails on root #{root})")]
    NotAutomorphism { root: usize },

    /// Group closure exceeded the guard; the generators do not generate a
    /// small finite group.
    #[error("generated group exceeds {limit} elements")]
    NotFinite { limit: usize },

    /// A subsystem is not stable under the Galois action.
    #[error("subsystem is not stable under the Galois action")]
    NotStable,

    /// A subsystem fails the Levi test.
    #[error("subsystem is not a Levi subsystem")]
    NotLevi,

    /// A point fails the closed-alcove inequalities.
    #[error("point is not alcove-normalized: {0}")]
    NotNormalized(String),

    /// The norm of the input cocharacter pairs nonzero with a root, so the
    /// realization construction does not apply.
    #[error("action is not elliptic for this cocharacter: norm pairs nonzero with root #{root}")]
    NotElliptic { root: usize },

    /// The averaged cocharacter vanished while the target subsystem is proper.
    #[error("averaged cocharacter is zero but the target subsystem is proper")]
    DegenerateMu,

    /// Casebook lookup failure.
    #[error("unknown case id: {0}")]
    UnknownCase(String),

    /// Malformed input (dimension mismatches, bad shorthand, bad rationals).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
