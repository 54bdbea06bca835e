//! Exact combinatorics for classifying irreducible Specht modules of
//! Iwahori-Hecke algebras of type B.
//!
//! Specht modules of the type-B algebra with parameters (Q, q) are labelled
//! by bipartitions.  This crate decides irreducibility of the label in every
//! regime where the question has a complete combinatorial answer:
//!
//! * q of infinite order, -Q not a power of q: always irreducible.
//! * q of infinite order, Q = -q^r: a run-shape test on the r-signature, the
//!   +/- sequence read off the symmetric difference of two charged beta-sets
//!   ([`decomp_inf`]).  Composition factors and the Specht modules containing
//!   a given simple come from the same signature calculus ([`mod@signature`],
//!   [`pm`]).
//! * q = -1, Q not +/-1: Morita split; irreducible exactly when both
//!   components are 2-irreducible in type A.
//! * q = -1, Q = +/-1: alternating restrictable reductions ([`e2`]) hand the
//!   question to a pluggable type-A oracle ([`typea`]); in characteristic 0
//!   the oracle computes canonical bases of the e = 2 Fock space.
//!
//! Root-of-unity orders 2 < e < infinity are out of scope.
//!
//! All arithmetic is exact; all values are immutable after construction and
//! all operations are pure functions, so everything is safe to share across
//! threads (the canonical-basis memo behind [`typea::canonical_basis_memoized`]
//! is a locked single-writer cache).

pub mod abacus;
pub mod beta;
pub mod bipartition;
pub mod classify;
pub mod decomp_inf;
pub mod e2;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod params;
pub mod partition;
pub mod pm;
pub mod signature;
pub mod typea;
pub mod verdict;

pub use abacus::{abacus_render, natural_window};
pub use beta::BetaSet;
pub use bipartition::{bipartitions_of, Bipartition, Component, Node};
pub use classify::{classify, is_irreducible_e2, is_irreducible_split, SplitOrder};
pub use decomp_inf::{
    is_inf_irreducible_all_parity, is_inf_irreducible_all_parity_windowed, is_irreducible_inf,
    shape_predicate, simples_spechts_inf, specht_constituents_inf, DecompRow, Orientation, Parity,
    ShapeDecomposition, ShapeReport,
};
pub use e2::{
    is_i_restrictable, is_restrictable, reduction_chain, restrict_all, ChainEnd, ChainOutcome,
    ChainStep,
};
pub use error::{Error, Result};
pub use fock::{f_divided, FockVector};
pub use laurent::LaurentPoly;
pub use params::{
    block_label, e2_residue, residue, residue_multiset, same_block, HeckeParams, Regime, Residue,
    Sign,
};
pub use partition::{partitions_of, Dominance, Partition};
pub use pm::{
    apply_perm, compatible_involutions, iota_s, is_dominant, suitable_pairs, Involution,
    PmSequence, SuitablePair,
};
pub use signature::{
    is_regular_inf, is_regular_inf_direct, signature, signature_with_charge, InfQ,
    SignatureContext,
};
pub use typea::{
    canonical_basis, canonical_basis_memoized, is_2irreducible_char0, is_2regular, CanonicalBasis,
    CharTable, OracleAnswer, StandardOracle, TypeA2Oracle,
};
pub use verdict::{Verdict, VerdictValue, Witness};
