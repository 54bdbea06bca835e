//! Classification verdicts and their witnesses.

use std::fmt;

use crate::decomp_inf::ShapeReport;
use crate::e2::ChainOutcome;

/// The answer of a classification query.
///
/// `Unknown` only arises from oracle gaps (characteristic p without a lookup
/// table); `Unsupported` only for root-of-unity orders strictly between 2 and
/// infinity, which this library does not treat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictValue {
    Irreducible,
    Reducible,
    Unknown(String),
    Unsupported(String),
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictValue::Irreducible => write!(f, "Irreducible"),
            VerdictValue::Reducible => write!(f, "Reducible"),
            VerdictValue::Unknown(reason) => write!(f, "Unknown ({reason})"),
            VerdictValue::Unsupported(regime) => write!(f, "Unsupported ({regime})"),
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An e=2 reduction chain.
    Chain(ChainOutcome),
    /// An e=infinity signature shape report.
    Shape(ShapeReport),
}

/// A verdict with optional witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: VerdictValue,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn bare(value: VerdictValue) -> Self {
        Verdict { value, witness: None }
    }

    pub fn irreducible() -> Self {
        Verdict::bare(VerdictValue::Irreducible)
    }

    pub fn reducible() -> Self {
        Verdict::bare(VerdictValue::Reducible)
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Verdict::bare(VerdictValue::Unknown(reason.into()))
    }

    pub fn unsupported(regime: impl Into<String>) -> Self {
        Verdict::bare(VerdictValue::Unsupported(regime.into()))
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_irreducible(&self) -> bool {
        self.value == VerdictValue::Irreducible
    }

    pub fn is_reducible(&self) -> bool {
        self.value == VerdictValue::Reducible
    }
}
