//! The level-1 Fock space at e = 2: partitions as basis vectors, with
//! v-deformed divided powers of the node-adding operators.
//!
//! The residue of a node (row, col) is (col - row) mod 2.  Applying the
//! divided power `f_i^(k)` to a partition sums over all ways to add k
//! addable i-nodes; the added configuration is weighted by
//!
//!   v ^ sum over added nodes A of
//!       (#addable i-nodes of the result strictly above A)
//!     - (#removable i-nodes of the source strictly above A)
//!
//! where "above" means in earlier rows.  Counting above rather than below is
//! what makes the canonical basis come out unitriangular with off-diagonal
//! entries in `v * Z_{>=0}[v]`; the choice is pinned by those assertions in
//! the test suite.

use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// e=2 residue of the node at (row, col), both 1-based.
pub fn node_residue_mod2(row: usize, col: u32) -> u8 {
    ((col as i64 - row as i64).rem_euclid(2)) as u8
}

/// Rows of `p` with an addable node of the given residue (1-based rows).
fn addable_rows_with_residue(p: &Partition, residue: u8) -> Vec<usize> {
    p.addable_rows()
        .into_iter()
        .filter(|&row| node_residue_mod2(row, p.part(row) + 1) == residue)
        .collect()
}

/// Rows of `p` with a removable node of the given residue.
fn removable_rows_with_residue(p: &Partition, residue: u8) -> Vec<usize> {
    p.removable_rows()
        .into_iter()
        .filter(|&row| node_residue_mod2(row, p.part(row)) == residue)
        .collect()
}

/// A sparse vector in the Fock space: partition -> Laurent coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector of a single partition.
    pub fn basis(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, LaurentPoly::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> LaurentPoly {
        self.terms.get(p).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn add_scaled(&mut self, p: Partition, scale: &LaurentPoly) {
        if scale.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(scale);
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    /// `self - scale * other`.
    pub fn sub_scaled(&mut self, other: &FockVector, scale: &LaurentPoly) {
        for (p, c) in other.terms() {
            self.add_scaled(p.clone(), &scale.mul(c).neg());
        }
    }

    /// Map every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> FockVector {
        let mut out = FockVector::zero();
        for (p, c) in self.terms() {
            out.add_scaled(p.clone(), &f(c));
        }
        out
    }
}

fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            cur.push(items[idx]);
            rec(items, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The divided power `f_i^(k)` applied to each basis partition of `x`,
/// extended linearly.  `k = 0` is the identity.
pub fn f_divided(x: &FockVector, i: u8, k: usize) -> FockVector {
    assert!(i <= 1, "e = 2 residues are 0 or 1");
    if k == 0 {
        return x.clone();
    }
    let mut out = FockVector::zero();
    for (p, coeff) in x.terms() {
        let addable = addable_rows_with_residue(p, i);
        if addable.len() < k {
            continue;
        }
        let removable = removable_rows_with_residue(p, i);
        for subset in k_subsets(&addable, k) {
            let mut grown = p.clone();
            for &row in &subset {
                grown = grown.add_node(row);
            }
            let grown_addable = addable_rows_with_residue(&grown, i);
            let mut weight: i64 = 0;
            for &row in &subset {
                weight += grown_addable.iter().filter(|&&a| a < row).count() as i64;
                weight -= removable.iter().filter(|&&b| b < row).count() as i64;
            }
            out.add_scaled(grown, &coeff.shift(weight));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn v_pow(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, 1)
    }

    #[test]
    fn residues_mod_two() {
        assert_eq!(node_residue_mod2(1, 1), 0);
        assert_eq!(node_residue_mod2(1, 2), 1);
        assert_eq!(node_residue_mod2(2, 1), 1);
        assert_eq!(node_residue_mod2(3, 1), 0);
    }

    #[test]
    fn single_node_on_vacuum() {
        let x = f_divided(&FockVector::basis(Partition::empty()), 0, 1);
        assert_eq!(x, FockVector::basis(pt(&[1])));
        // No addable 1-node on the empty partition.
        assert!(f_divided(&FockVector::basis(Partition::empty()), 1, 1).is_zero());
    }

    #[test]
    fn two_addable_nodes_weighting() {
        // f_1 on (1): adds (1,2) with weight 0 and (2,1) with weight 1.
        let x = f_divided(&FockVector::basis(pt(&[1])), 1, 1);
        assert_eq!(x.coefficient(&pt(&[2])), LaurentPoly::one());
        assert_eq!(x.coefficient(&pt(&[1, 1])), v_pow(1));
        assert_eq!(x.terms().count(), 2);
    }

    #[test]
    fn divided_square_on_hook() {
        // (2,1) has three addable 0-nodes; choosing two gives three results,
        // with the dominance-largest one v-free.
        let x = f_divided(&FockVector::basis(pt(&[2, 1])), 0, 2);
        assert_eq!(x.coefficient(&pt(&[3, 2])), LaurentPoly::one());
        assert_eq!(x.coefficient(&pt(&[3, 1, 1])), v_pow(1));
        assert_eq!(x.coefficient(&pt(&[2, 2, 1])), v_pow(2));
        assert_eq!(x.terms().count(), 3);
    }

    #[test]
    fn divided_power_agrees_with_iterated_quotient() {
        // Independent route: f^(k) = f^k / [k]!, with exact Laurent division.
        let starts = [
            FockVector::basis(Partition::empty()),
            FockVector::basis(pt(&[2, 1])),
            FockVector::basis(pt(&[3, 1, 1])),
            FockVector::basis(pt(&[2, 2])),
        ];
        for x in &starts {
            for i in [0u8, 1u8] {
                for k in 1..=4usize {
                    let direct = f_divided(x, i, k);
                    let mut iterated = x.clone();
                    for _ in 0..k {
                        iterated = f_divided(&iterated, i, 1);
                    }
                    let fact = LaurentPoly::quantum_factorial(k as u32);
                    let quotient = iterated.map_coeffs(|c| {
                        c.div_exact(&fact)
                            .expect("iterated f-power is divisible by [k]!")
                    });
                    assert_eq!(direct, quotient, "mismatch at i={i}, k={k}");
                }
            }
        }
    }
}
