//! The r-signature of a bipartition and reconstruction from involutions.
//!
//! For a bipartition (l, m) and an integer r, build the beta-sets
//! B1 = B^{r+i}(l) and B2 = B^i(m) for an internal charge i, list the
//! symmetric difference as b_1 < ... < b_n, and mark each point + if it came
//! from B1 and - if from B2.  The resulting sign sequence does not depend on
//! i (a tested invariant); we store everything at i = 0.
//!
//! An involution of {1, ..., n} redistributes the symmetric-difference points
//! between the two beta-sets; converting back through the canonical beta-set
//! encoding yields the bipartition `(l, m)^iota`.

use crate::beta::BetaSet;
use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::params::Sign;
use crate::partition::Partition;
use crate::pm::{is_dominant, Involution, PmSequence};

/// Everything needed to rebuild bipartitions from sign rearrangements: the
/// ordered symmetric-difference points, their signs, the common co-finite
/// set, and the two charges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureContext {
    points: Vec<i64>,
    signs: PmSequence,
    common: BetaSet,
    charges: (i64, i64),
}

impl SignatureContext {
    /// Points of the symmetric difference in increasing order.
    pub fn points(&self) -> &[i64] {
        &self.points
    }

    /// Sign at each point: + for the first-component beta-set.
    pub fn signs(&self) -> &PmSequence {
        &self.signs
    }

    /// The intersection of the two beta-sets, canonically encoded.
    pub fn common(&self) -> &BetaSet {
        &self.common
    }

    /// Charges of (first, second) beta-sets, i.e. (r + i, i).
    pub fn charges(&self) -> (i64, i64) {
        self.charges
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rebuild the bipartition whose first-component beta-set takes the
    /// points marked + in `signs` (and the second the points marked -),
    /// on top of the common set.
    pub fn rebuild_with_signs(&self, signs: &PmSequence) -> Result<Bipartition> {
        if signs.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: signs.len(),
                right: self.len(),
            });
        }
        let floor = self.common.tail_bound();
        let common_beads: Vec<i64> = self
            .common
            .beads_down_to(floor + 1)
            .into_iter()
            .filter(|&b| b > floor)
            .collect();
        let build = |want: Sign, charge: i64| -> Partition {
            let mut beads = common_beads.clone();
            for (k, &sign) in signs.signs().iter().enumerate() {
                if sign == want {
                    beads.push(self.points[k]);
                }
            }
            let beta = BetaSet::from_cofinite(floor, &beads);
            let (shape, rebuilt_charge) = beta.decompose();
            debug_assert_eq!(rebuilt_charge, charge, "charge is preserved by redistribution");
            shape
        };
        let first = build(Sign::Plus, self.charges.0);
        let second = build(Sign::Minus, self.charges.1);
        Ok(Bipartition::new(first, second))
    }

    /// `(l, m)^iota`: reassign point `b_{iota(k)}` to the beta-set that owned
    /// `b_k`, then convert both beta-sets back to partitions.
    pub fn apply_involution(&self, iota: &Involution) -> Result<Bipartition> {
        if iota.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: iota.len(),
                right: self.len(),
            });
        }
        // Point b_j lands in the first set iff s_{iota(j)} = +, so the
        // redistributed configuration is exactly the rebuild along s^iota.
        let permuted = crate::pm::apply_perm(&self.signs, iota)?;
        self.rebuild_with_signs(&permuted)
    }
}

/// The r-signature context of `b`, computed at the internal charge i = 0.
pub fn signature(b: &Bipartition, r: i64) -> SignatureContext {
    signature_with_charge(b, r, 0)
}

/// Same, at an explicit internal charge (used to verify independence of i).
pub fn signature_with_charge(b: &Bipartition, r: i64, i: i64) -> SignatureContext {
    let b1 = BetaSet::new(b.first.clone(), r + i);
    let b2 = BetaSet::new(b.second.clone(), i);
    let floor = b1.tail_bound().min(b2.tail_bound());

    let beads1 = b1.beads_down_to(floor);
    let beads2 = b2.beads_down_to(floor);
    let mut points = Vec::new();
    let mut signs = Vec::new();
    let mut common = Vec::new();
    // Both lists are sorted decreasing; merge them.
    let (mut p1, mut p2) = (0usize, 0usize);
    while p1 < beads1.len() || p2 < beads2.len() {
        let x = beads1.get(p1).copied();
        let y = beads2.get(p2).copied();
        match (x, y) {
            (Some(x), Some(y)) if x == y => {
                common.push(x);
                p1 += 1;
                p2 += 1;
            }
            (Some(x), y) if y.is_none_or(|y| x > y) => {
                points.push(x);
                signs.push(Sign::Plus);
                p1 += 1;
            }
            _ => {
                points.push(y.expect("one side must remain"));
                signs.push(Sign::Minus);
                p2 += 1;
            }
        }
    }
    points.reverse();
    signs.reverse();

    // Everything at or below `floor - 1` lies in both sets.
    let common_floor = floor - 1;
    let common_beads: Vec<i64> = common.into_iter().filter(|&c| c > common_floor).collect();
    SignatureContext {
        points,
        signs: PmSequence::new(signs),
        common: BetaSet::from_cofinite(common_floor, &common_beads),
        charges: (r + i, i),
    }
}

/// Regularity at e = infinity with -Q = q^r: the signature is dominant.
pub fn is_regular_inf(b: &Bipartition, r: i64) -> bool {
    is_dominant(signature(b, r).signs())
}

/// How Q relates to q at e = infinity, for the direct regularity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfQ {
    /// -Q is not a power of q.
    Generic,
    /// Q = -q^r.
    Power(i64),
}

/// The direct three-case regularity test.  Generic Q: always regular.
/// Q = -q^r with r >= 0: requires l_i >= m_i - r for all i.  With r <= 0:
/// requires l_i >= m_{i + |r|} for all i (parts beyond the end are zero).
pub fn is_regular_inf_direct(b: &Bipartition, q: InfQ) -> bool {
    match q {
        InfQ::Generic => true,
        InfQ::Power(r) if r >= 0 => (1..=b.second.rows()).all(|i| {
            b.first.part(i) as i64 >= b.second.part(i) as i64 - r
        }),
        InfQ::Power(r) => {
            let shift = (-r) as usize;
            (1..=b.second.rows()).all(|i| b.first.part(i) >= b.second.part(i + shift))
        }
    }
}
