//! Beta-sets (one-runner abacuses) in canonical charged form.
//!
//! The beta-set of a partition `l` with charge `i` is the co-finite set
//! `{ l_j + i - j : j >= 1 }`.  We never materialize the infinite set: a
//! `BetaSet` stores exactly the pair (charge, partition) and answers all set
//! queries by the defining formula.  The inverse direction -- recovering the
//! charge and partition from an explicit co-finite set of beads -- is
//! `BetaSet::from_cofinite`.

use std::fmt;

use crate::partition::Partition;

/// The beta-set `B^charge(shape)`, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    charge: i64,
    shape: Partition,
}

impl BetaSet {
    /// `B^i(l) = { l_j + i - j : j >= 1 }`.
    pub fn new(shape: Partition, charge: i64) -> Self {
        BetaSet { charge, shape }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// The inverse of `new`: the unique (partition, charge) pair.
    pub fn decompose(&self) -> (Partition, i64) {
        (self.shape.clone(), self.charge)
    }

    /// Every integer <= this bound lies in the set; all beads above it are
    /// the finitely many `l_j + charge - j` with `j <= rows`.
    pub fn tail_bound(&self) -> i64 {
        self.charge - self.shape.rows() as i64 - 1
    }

    /// The largest element of the set.
    pub fn max_bead(&self) -> i64 {
        self.shape.first_part() as i64 + self.charge - 1
    }

    pub fn contains(&self, m: i64) -> bool {
        if m <= self.tail_bound() {
            return true;
        }
        (1..=self.shape.rows())
            .any(|j| self.shape.part(j) as i64 + self.charge - j as i64 == m)
    }

    /// All elements >= `floor`, in decreasing order.
    pub fn beads_down_to(&self, floor: i64) -> Vec<i64> {
        let mut beads = Vec::new();
        for j in 1..=self.shape.rows() {
            let bead = self.shape.part(j) as i64 + self.charge - j as i64;
            if bead >= floor {
                beads.push(bead);
            }
        }
        let mut tail = self.tail_bound();
        while tail >= floor {
            beads.push(tail);
            tail -= 1;
        }
        beads
    }

    /// Rebuild the canonical form from an explicit co-finite set: all
    /// integers <= `tail_bound` plus the given beads, which must be distinct
    /// and strictly greater than `tail_bound`.
    pub fn from_cofinite(tail_bound: i64, beads: &[i64]) -> Self {
        let mut beads: Vec<i64> = beads.to_vec();
        beads.sort_unstable_by(|a, b| b.cmp(a));
        beads.dedup();
        assert!(
            beads.iter().all(|&b| b > tail_bound),
            "beads must lie above the co-finite tail"
        );
        let k = beads.len() as i64;
        let charge = tail_bound + 1 + k;
        let mut parts = Vec::with_capacity(beads.len());
        for (idx, &bead) in beads.iter().enumerate() {
            let j = idx as i64 + 1;
            let part = bead + j - charge;
            debug_assert!(part >= 0, "beads above the tail give non-negative parts");
            parts.push(part as u32);
        }
        let shape = Partition::new(parts).expect("strictly decreasing beads give a partition");
        BetaSet { charge, shape }
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B^{}({})", self.charge, self.shape)
    }
}
