//! Restrictable reductions at q = -1 and the alternating reduction chain.
//!
//! A bipartition is i-restrictable (i = +/-1) when it has at least one
//! removable i-node and no addable i-node; removing *all* removable i-nodes
//! then preserves irreducibility in both directions.  The reduction chain
//! strips alternating residues, starting from a chosen initial residue, until
//! a component empties (terminal handoff to the type-A question) or the
//! expected residue is blocked (stuck).

use std::fmt;

use crate::bipartition::{Bipartition, Component, Node};
use crate::error::{Error, Result};
use crate::params::{e2_residue, Sign};

/// Does `b` have at least one removable i-node and no addable i-nodes?
pub fn is_i_restrictable(b: &Bipartition, i: Sign, r: u8) -> bool {
    let no_addable = b.addable_nodes().iter().all(|nd| e2_residue(nd, r) != i);
    let some_removable = b.removable_nodes().iter().any(|nd| e2_residue(nd, r) == i);
    no_addable && some_removable
}

/// Restrictable for either residue.
pub fn is_restrictable(b: &Bipartition, r: u8) -> bool {
    is_i_restrictable(b, Sign::Plus, r) || is_i_restrictable(b, Sign::Minus, r)
}

/// `(l, m)^-_i`: remove all removable i-nodes at once.
pub fn restrict_all(b: &Bipartition, i: Sign, r: u8) -> Result<Bipartition> {
    if !is_i_restrictable(b, i, r) {
        return Err(Error::NotRestrictable {
            bipartition: b.to_string(),
            residue: format!("{}1", i.as_char()),
        });
    }
    let nodes: Vec<Node> = b
        .removable_nodes()
        .into_iter()
        .filter(|nd| e2_residue(nd, r) == i)
        .collect();
    Ok(b.remove_nodes(&nodes))
}

/// One executed reduction step: the residue removed and the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub removed: Sign,
    pub result: Bipartition,
}

/// How a reduction chain ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainEnd {
    /// A component emptied; the other component is handed to the type-A
    /// oracle.  For the empty bipartition the side defaults to the first.
    Terminal { partition: crate::partition::Partition, side: Component },
    /// Both components nonempty but the expected residue is not
    /// restrictable.
    Stuck { at: Bipartition },
}

/// A full chain record: start, steps in order, and the ending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainOutcome {
    pub start: Bipartition,
    pub steps: Vec<ChainStep>,
    pub end: ChainEnd,
}

impl ChainOutcome {
    pub fn is_terminal(&self) -> bool {
        matches!(self.end, ChainEnd::Terminal { .. })
    }

    /// The bipartitions visited, starting with `start`.
    pub fn path(&self) -> Vec<Bipartition> {
        let mut path = vec![self.start.clone()];
        path.extend(self.steps.iter().map(|s| s.result.clone()));
        path
    }
}

impl fmt::Display for ChainOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for step in &self.steps {
            write!(f, " -[{}1]-> {}", step.removed.as_char(), step.result)?;
        }
        match &self.end {
            ChainEnd::Terminal { partition, side } => {
                write!(f, " : terminal {} (component {})", partition, side.index())
            }
            ChainEnd::Stuck { at } => write!(f, " : stuck at {at}"),
        }
    }
}

/// Run the alternating reduction chain from `b`, expecting residue `i0`
/// first.  Deterministic: stop with Terminal as soon as a component is
/// empty; otherwise reduce by the expected residue if possible, flipping the
/// expectation; otherwise stop Stuck.
pub fn reduction_chain(b: &Bipartition, i0: Sign, r: u8) -> ChainOutcome {
    let mut current = b.clone();
    let mut expected = i0;
    let mut steps = Vec::new();
    loop {
        if current.first.is_empty() || current.second.is_empty() {
            let (partition, side) = if current.second.is_empty() {
                (current.first.clone(), Component::First)
            } else {
                (current.second.clone(), Component::Second)
            };
            return ChainOutcome {
                start: b.clone(),
                steps,
                end: ChainEnd::Terminal { partition, side },
            };
        }
        match restrict_all(&current, expected, r) {
            Ok(next) => {
                steps.push(ChainStep { removed: expected, result: next.clone() });
                current = next;
                expected = expected.flip();
            }
            Err(_) => {
                return ChainOutcome {
                    start: b.clone(),
                    steps,
                    end: ChainEnd::Stuck { at: current },
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn bip(text: &str) -> Bipartition {
        text.parse().unwrap()
    }

    #[test]
    fn restrictable_examples() {
        assert!(is_i_restrictable(&bip("4,3,3,1|2,1"), Sign::Minus, 0));
        assert!(!is_i_restrictable(&bip("4,3,3,1|2,1"), Sign::Plus, 0));
        // Addable -1-nodes at (1,2) of each component block restriction.
        assert!(!is_i_restrictable(&bip("1,1|1,1"), Sign::Minus, 0));
        assert!(!is_i_restrictable(&bip("1,1|1,1"), Sign::Plus, 0));
        assert!(!is_i_restrictable(&bip("-|-"), Sign::Plus, 0));
        assert!(!is_i_restrictable(&bip("-|-"), Sign::Minus, 0));
    }

    #[test]
    fn restrict_all_examples() {
        assert_eq!(
            restrict_all(&bip("4,3,3,1|2,1"), Sign::Minus, 0).unwrap(),
            bip("3,3,3|1")
        );
        assert_eq!(
            restrict_all(&bip("3,3,3|1"), Sign::Plus, 0).unwrap(),
            bip("3,3,2|-")
        );
        assert_eq!(restrict_all(&bip("1|1"), Sign::Plus, 0).unwrap(), bip("-|-"));
        assert!(restrict_all(&bip("1,1|1,1"), Sign::Minus, 0).is_err());
    }

    #[test]
    fn chain_worked_example() {
        let chain = reduction_chain(&bip("4,3,3,1|2,1"), Sign::Minus, 0);
        assert_eq!(
            chain.steps,
            vec![
                ChainStep { removed: Sign::Minus, result: bip("3,3,3|1") },
                ChainStep { removed: Sign::Plus, result: bip("3,3,2|-") },
            ]
        );
        assert_eq!(
            chain.end,
            ChainEnd::Terminal {
                partition: Partition::of(&[3, 3, 2]),
                side: Component::First
            }
        );
    }

    #[test]
    fn chain_stuck_and_trivial() {
        let stuck = reduction_chain(&bip("1,1|1,1"), Sign::Plus, 0);
        assert_eq!(stuck.end, ChainEnd::Stuck { at: bip("1,1|1,1") });
        assert!(stuck.steps.is_empty());
        let stuck = reduction_chain(&bip("1,1|1,1"), Sign::Minus, 0);
        assert!(!stuck.is_terminal());

        let trivial = reduction_chain(&bip("5|-"), Sign::Plus, 0);
        assert!(trivial.steps.is_empty());
        assert_eq!(
            trivial.end,
            ChainEnd::Terminal { partition: Partition::of(&[5]), side: Component::First }
        );

        let empty = reduction_chain(&bip("-|-"), Sign::Minus, 1);
        assert_eq!(
            empty.end,
            ChainEnd::Terminal { partition: Partition::empty(), side: Component::First }
        );
    }

    #[test]
    fn chain_to_empty_pair() {
        let chain = reduction_chain(&bip("1|1"), Sign::Plus, 0);
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(
            chain.end,
            ChainEnd::Terminal { partition: Partition::empty(), side: Component::First }
        );
    }

    #[test]
    fn alternation_is_recorded() {
        let chain = reduction_chain(&bip("4,3,3,1|2,1"), Sign::Minus, 0);
        for pair in chain.steps.windows(2) {
            assert_eq!(pair[1].removed, pair[0].removed.flip());
        }
    }
}
