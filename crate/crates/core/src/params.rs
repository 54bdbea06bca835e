//! Hecke algebra parameters and node residues.
//!
//! The parameter pair (Q, q) enters the combinatorics only through the regime:
//! whether q has infinite order or order 2, and whether -Q is a power of q.
//! In the power regimes every residue is a power of q, so we store exponents
//! (e = infinity) or signs (e = 2) exactly.  Generic regimes never expose a
//! per-node residue; they only produce component-tagged residue multisets,
//! since a first-component residue -Qq^a can never equal a second-component
//! residue q^b there.

use std::fmt;

use crate::bipartition::{Bipartition, Component, Node};
use crate::error::{Error, Result};

/// A sign, used both for e=2 residues and for +/- sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// The sign of (-1)^k.
    pub fn of_parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The parameter regime of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// e = infinity, -Q not a power of q.
    InfGeneric,
    /// e = infinity, Q = -q^r.
    InfPower { r: i64 },
    /// q = -1, Q different from +1 and -1.
    TwoGeneric,
    /// q = -1, Q = (-1)^{r+1} with r in {0, 1}.
    TwoPower { r: u8 },
}

impl Regime {
    pub fn two_power(r: u8) -> Regime {
        assert!(r <= 1, "TwoPower takes r in {{0, 1}}");
        Regime::TwoPower { r }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::InfGeneric => write!(f, "inf-generic"),
            Regime::InfPower { r } => write!(f, "inf:r={r}"),
            Regime::TwoGeneric => write!(f, "two-generic"),
            Regime::TwoPower { r } => write!(f, "two:r={r}"),
        }
    }
}

/// Regime plus the characteristic of the ground field.  The characteristic
/// is consulted only by the type-A oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeParams {
    pub regime: Regime,
    /// 0 or a prime.
    pub char_p: u32,
}

impl HeckeParams {
    pub fn new(regime: Regime, char_p: u32) -> Self {
        HeckeParams { regime, char_p }
    }
}

/// The residue of a node, in the exact form appropriate to the regime.
///
/// `Exp(a)` stands for q^a (with -Q = q^r already folded into component-1
/// exponents); `Sgn(s)` stands for the field element s = +/-1.  The tagged
/// forms appear only in residue multisets for generic regimes, where values
/// from different components are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Residue {
    Exp(i64),
    Sgn(Sign),
    TaggedExp { component: Component, exp: i64 },
    TaggedSgn { component: Component, sign: Sign },
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Exp(a) => write!(f, "q^{a}"),
            Residue::Sgn(Sign::Plus) => write!(f, "+1"),
            Residue::Sgn(Sign::Minus) => write!(f, "-1"),
            Residue::TaggedExp { component, exp } => {
                write!(f, "q^{exp}@{}", component.index())
            }
            Residue::TaggedSgn { component, sign } => {
                write!(f, "{sign}1@{}", component.index())
            }
        }
    }
}

/// The e=2 residue sign of a node when Q = (-1)^{r+1}: (-1)^{r + col - row}
/// in component 1, (-1)^{col - row} in component 2.
pub fn e2_residue(node: &Node, r: u8) -> Sign {
    match node.component {
        Component::First => Sign::of_parity(r as i64 + node.content()),
        Component::Second => Sign::of_parity(node.content()),
    }
}

/// Residue of a node in a power regime.  Generic regimes are rejected: they
/// have no single-valued residue representation (see `residue_multiset`).
pub fn residue(node: &Node, params: &HeckeParams) -> Result<Residue> {
    match params.regime {
        Regime::InfPower { r } => Ok(Residue::Exp(match node.component {
            Component::First => r + node.content(),
            Component::Second => node.content(),
        })),
        Regime::TwoPower { r } => Ok(Residue::Sgn(e2_residue(node, r))),
        Regime::InfGeneric | Regime::TwoGeneric => Err(Error::GenericResidue),
    }
}

fn all_nodes(b: &Bipartition) -> Vec<Node> {
    let mut nodes = Vec::new();
    for (c, p) in [(Component::First, &b.first), (Component::Second, &b.second)] {
        for (i, &len) in p.parts().iter().enumerate() {
            for j in 1..=len {
                nodes.push(Node::new(c, i as u32 + 1, j));
            }
        }
    }
    nodes
}

/// The multiset of residues over all nodes of `b`, as a sorted vector.
/// Defined in every regime; generic regimes yield component-tagged values.
pub fn residue_multiset(b: &Bipartition, params: &HeckeParams) -> Vec<Residue> {
    let mut residues: Vec<Residue> = all_nodes(b)
        .iter()
        .map(|node| match params.regime {
            Regime::InfPower { .. } | Regime::TwoPower { .. } => {
                residue(node, params).expect("power regime")
            }
            Regime::InfGeneric => Residue::TaggedExp {
                component: node.component,
                exp: node.content(),
            },
            Regime::TwoGeneric => Residue::TaggedSgn {
                component: node.component,
                sign: Sign::of_parity(node.content()),
            },
        })
        .collect();
    residues.sort();
    residues
}

/// Two Specht modules lie in the same block exactly when their labels have
/// the same residue multiset (sizes agree automatically then).
pub fn same_block(a: &Bipartition, b: &Bipartition, params: &HeckeParams) -> bool {
    residue_multiset(a, params) == residue_multiset(b, params)
}

/// Render a residue multiset as a block label, e.g. `{-1 x 2, +1 x 3}`.
pub fn block_label(residues: &[Residue]) -> String {
    let mut pieces = Vec::new();
    let mut idx = 0;
    while idx < residues.len() {
        let run = residues[idx..].iter().take_while(|&&x| x == residues[idx]).count();
        pieces.push(format!("{} x {}", residues[idx], run));
        idx += run;
    }
    format!("{{{}}}", pieces.join(", "))
}
