//! Bipartitions, their Young diagrams, and node combinatorics.
//!
//! A bipartition is an ordered pair of partitions; it labels a Specht module
//! for the type-B Hecke algebra.  Nodes of the pair diagram carry a component
//! tag, and addable/removable node lists are ordered by (component, row) so
//! outputs are deterministic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Dominance, Partition};

/// Which component of a bipartition a node lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub fn index(self) -> u8 {
        match self {
            Component::First => 1,
            Component::Second => 2,
        }
    }
}

/// A node `(row, col)` in the given component, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub component: Component,
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(component: Component, row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { component, row, col }
    }

    /// `col - row`, the content of the node within its component.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.row, self.col, self.component.index())
    }
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    /// Literal helper for tests and examples.
    pub fn of(first: &[u32], second: &[u32]) -> Self {
        Bipartition::new(Partition::of(first), Partition::of(second))
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn size(&self) -> u64 {
        self.first.size() + self.second.size()
    }

    pub fn component(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    /// Addable nodes of the pair diagram, ordered by (component, row).
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for (c, p) in [(Component::First, &self.first), (Component::Second, &self.second)] {
            for row in p.addable_rows() {
                nodes.push(Node::new(c, row as u32, p.part(row) + 1));
            }
        }
        nodes
    }

    /// Removable nodes of the pair diagram, ordered by (component, row).
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut nodes = Vec::new();
        for (c, p) in [(Component::First, &self.first), (Component::Second, &self.second)] {
            for row in p.removable_rows() {
                nodes.push(Node::new(c, row as u32, p.part(row)));
            }
        }
        nodes
    }

    /// Remove a set of removable nodes, one per row at most.
    pub fn remove_nodes(&self, nodes: &[Node]) -> Bipartition {
        let mut result = self.clone();
        for node in nodes {
            match node.component {
                Component::First => result.first = result.first.remove_node(node.row as usize),
                Component::Second => result.second = result.second.remove_node(node.row as usize),
            }
        }
        result
    }

    /// The label of the dual Specht module: `(l, m) -> (m', l')`.
    pub fn dual(&self) -> Bipartition {
        Bipartition::new(self.second.conjugate(), self.first.conjugate())
    }

    /// Dominance comparison: first components by prefix sums, then
    /// `|l| + m_1 + ... + m_i` against the same for the other pair.
    pub fn dominance(&self, other: &Bipartition) -> Dominance {
        if self == other {
            return Dominance::Equal;
        }
        let (mut ge, mut le) = (true, true);
        match self.first.dominance(&other.first) {
            Dominance::Dominates => le = false,
            Dominance::DominatedBy => ge = false,
            Dominance::Incomparable => return Dominance::Incomparable,
            Dominance::Equal => {}
        }
        let rows = self.second.rows().max(other.second.rows());
        let mut a = self.first.size();
        let mut b = other.first.size();
        for i in 1..=rows.max(1) {
            a += self.second.part(i) as u64;
            b += other.second.part(i) as u64;
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, false) => Dominance::Dominates,
            (false, true) => Dominance::DominatedBy,
            (false, false) => Dominance::Incomparable,
            (true, true) => Dominance::Equal,
        }
    }

    pub fn dominates(&self, other: &Bipartition) -> bool {
        matches!(
            self.dominance(other),
            Dominance::Dominates | Dominance::Equal
        )
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Grammar: `PARTITION "|" PARTITION`, e.g. `4,3,3,1|2,1` or `-|3`.
    fn from_str(s: &str) -> Result<Self> {
        let bar = s.find('|').ok_or_else(|| Error::Parse {
            pos: s.len(),
            msg: "expected '|' separating the two components".into(),
        })?;
        let first: Partition = s[..bar].parse()?;
        let second: Partition = s[bar + 1..].parse().map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + bar + 1, msg },
            other => other,
        })?;
        Ok(Bipartition::new(first, second))
    }
}

/// All bipartitions of `n`, ordered lexicographically on the pair of part
/// sequences (first component, then second).
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for first in partitions_of(k) {
            for second in partitions_of(n - k) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_lists_of_four_four_two() {
        // (4,4,2) with empty second component: removable nodes are (2,4) and
        // (3,2), addable nodes (1,5), (3,3), (4,1).
        let b = Bipartition::of(&[4, 4, 2], &[]);
        assert_eq!(
            b.removable_nodes(),
            vec![
                Node::new(Component::First, 2, 4),
                Node::new(Component::First, 3, 2),
            ]
        );
        let addable: Vec<Node> = b
            .addable_nodes()
            .into_iter()
            .filter(|nd| nd.component == Component::First)
            .collect();
        assert_eq!(
            addable,
            vec![
                Node::new(Component::First, 1, 5),
                Node::new(Component::First, 3, 3),
                Node::new(Component::First, 4, 1),
            ]
        );
        assert!(Bipartition::empty().removable_nodes().is_empty());
        // The empty diagram still has the two origin nodes addable.
        assert_eq!(Bipartition::empty().addable_nodes().len(), 2);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            Bipartition::of(&[2], &[1, 1]).dual(),
            Bipartition::of(&[2], &[1, 1])
        );
        assert_eq!(
            Bipartition::of(&[], &[3]).dual(),
            Bipartition::of(&[1, 1, 1], &[])
        );
        let b = Bipartition::of(&[4, 3, 3, 1], &[2, 1]);
        assert_eq!(b.dual().dual(), b);
    }

    #[test]
    fn dominance_on_bipartitions() {
        // ((2),(1,1)) vs ((1,1),(2)): the first condition holds but the
        // offset prefix sums cross (2+1 < 2+2), so they are incomparable.
        let a = Bipartition::of(&[2], &[1, 1]);
        let b = Bipartition::of(&[1, 1], &[2]);
        assert_eq!(a.dominance(&b), Dominance::Incomparable);

        // The constituent/subject pair from the worked e=infinity example.
        let factor = Bipartition::of(&[4, 4, 3, 3, 3], &[4, 4, 1]);
        let subject = Bipartition::of(&[3, 3, 3, 1], &[5, 5, 3, 3]);
        assert_eq!(factor.dominance(&subject), Dominance::Dominates);
        assert_eq!(subject.dominance(&factor), Dominance::DominatedBy);

        assert_eq!(a.dominance(&a), Dominance::Equal);
        assert_eq!(
            Bipartition::of(&[1], &[1]).dominance(&Bipartition::of(&[], &[2])),
            Dominance::Dominates
        );
    }

    #[test]
    fn parse_and_display() {
        let b: Bipartition = "4,3,3,1|2,1".parse().unwrap();
        assert_eq!(b, Bipartition::of(&[4, 3, 3, 1], &[2, 1]));
        assert_eq!(b.to_string(), "4,3,3,1|2,1");
        let e: Bipartition = "-|3".parse().unwrap();
        assert_eq!(e, Bipartition::of(&[], &[3]));
        assert_eq!(e.to_string(), "-|3");
        assert!("2,3|1".parse::<Bipartition>().is_err());
        assert!("1,1".parse::<Bipartition>().is_err());
    }

    #[test]
    fn enumeration() {
        // #bipartitions of n = sum_k p(k) p(n-k)
        assert_eq!(bipartitions_of(0).len(), 1);
        assert_eq!(bipartitions_of(1).len(), 2);
        assert_eq!(bipartitions_of(2).len(), 5);
        assert_eq!(bipartitions_of(3).len(), 10);
        assert_eq!(bipartitions_of(4).len(), 20);
        let two: Vec<String> = bipartitions_of(2).iter().map(|b| b.to_string()).collect();
        assert_eq!(two, ["-|1,1", "-|2", "1|1", "1,1|-", "2|-"]);
    }
}
