//! Partitions: weakly decreasing sequences of positive integers.
//!
//! A partition of `n` is stored as its list of nonzero parts; trailing zeroes
//! are implicit, and the empty list is the unique partition of 0.  The text
//! form is comma-separated parts, with `-` for the empty partition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, implicit trailing zeroes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from a part list, checking monotonicity.  Trailing zeroes are
    /// stripped; a zero followed by a positive part is a monotonicity error.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(Error::Monotonicity {
                    offender: w[1],
                    previous: w[0],
                });
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    /// The nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The k-th part (1-based), zero beyond the stored parts.
    pub fn part(&self, k: usize) -> u32 {
        if k >= 1 && k <= self.parts.len() {
            self.parts[k - 1]
        } else {
            0
        }
    }

    /// Number of nonzero parts (= first column length).
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The largest part, 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.part(1)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |lambda|, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate partition: `conj_i = #{j : lambda_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= i).count() as u32);
        }
        Partition { parts }
    }

    /// Drop the first part: `(l2, l3, ...)`.
    pub fn remove_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Rows carrying a removable node, i.e. rows strictly longer than the
    /// next one.  Returns 1-based row indices; the node is `(i, part(i))`.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.rows())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Rows where a node can be added, i.e. rows strictly shorter than the
    /// previous one (row 1 is always addable).  The node is `(i, part(i)+1)`.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.rows() + 1)
            .filter(|&i| i == 1 || self.part(i) < self.part(i - 1))
            .collect()
    }

    /// Remove the node at the end of `row` (1-based).  The caller must pass a
    /// removable row.
    pub fn remove_node(&self, row: usize) -> Partition {
        debug_assert!(self.part(row) > self.part(row + 1));
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts).expect("removal of a removable node keeps monotonicity")
    }

    /// Add a node at the end of `row` (1-based).  The caller must pass an
    /// addable row.
    pub fn add_node(&self, row: usize) -> Partition {
        debug_assert!(row == 1 || self.part(row) < self.part(row - 1));
        let mut parts = self.parts.clone();
        if row - 1 < parts.len() {
            parts[row - 1] += 1;
        } else {
            parts.push(1);
        }
        Partition::new(parts).expect("addition of an addable node keeps monotonicity")
    }

    /// Dominance comparison by prefix sums.
    pub fn dominance(&self, other: &Partition) -> Dominance {
        if self == other {
            return Dominance::Equal;
        }
        let rows = self.rows().max(other.rows());
        let (mut a, mut b) = (0u64, 0u64);
        let (mut ge, mut le) = (true, true);
        for i in 1..=rows {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
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

    /// `self` dominates `other` (weakly).
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            self.dominance(other),
            Dominance::Dominates | Dominance::Equal
        )
    }
}

/// Outcome of a dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Dominates,
    DominatedBy,
    Equal,
    Incomparable,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Grammar: `"-"` or `int("," int)*` with weakly decreasing positive ints.
    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty partition must be written \"-\"".into(),
            });
        }
        let mut parts = Vec::new();
        let mut pos = 0usize;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let val: u32 = trimmed.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a positive integer, found {trimmed:?}"),
            })?;
            if val == 0 {
                return Err(Error::Parse {
                    pos,
                    msg: "parts must be positive".into(),
                });
            }
            parts.push(val);
            pos += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in lexicographically increasing order of their part
/// sequences, e.g. for n = 4: (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for next in (1..=remaining.min(max_part)).rev() {
            prefix.push(next);
            descend(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    descend(n, n.max(1), &mut Vec::new(), &mut out);
    // Generated largest-first-part first; lexicographic order is the reverse.
    out.reverse();
    out
}
