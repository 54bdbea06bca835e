//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// All library functions are total on valid inputs; errors arise only from
/// violated preconditions (non-dominant sequences, length mismatches, ...)
/// or from parsing text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input did not match the grammar. `pos` is a 0-based byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A part list was not weakly decreasing.
    #[error("parts must be weakly decreasing: part {offender} follows {previous}")]
    Monotonicity { offender: u32, previous: u32 },

    /// A +/- sequence was required to be dominant and is not.
    #[error("sequence {0:?} is not dominant")]
    NotDominant(String),

    /// Two objects that must have equal length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A bipartition was required to be regular and is not.
    #[error("bipartition {0} is not regular for r = {1}")]
    NotRegular(String, i64),

    /// `restrict_all` was called on a bipartition that is not i-restrictable.
    #[error("bipartition {bipartition} is not {residue}-restrictable")]
    NotRestrictable { bipartition: String, residue: String },

    /// Per-node residues are only defined when -Q is a power of q.
    #[error("per-node residues are not defined in generic regimes")]
    GenericResidue,
}

pub type Result<T> = std::result::Result<T, Error>;
