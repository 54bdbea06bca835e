//! The pluggable type-A oracle: is the type-A Specht module S^nu irreducible
//! at q = -1?
//!
//! In characteristic 0 the answer is computed exactly: the canonical basis of
//! the level-1 Fock space at e = 2 encodes the decomposition numbers, and
//! S^nu is irreducible exactly when its row sums to 1 at v = 1.  The columns
//! are built by the ladder construction -- apply the divided powers dictated
//! by the ladders of a 2-regular partition to the vacuum, then peel off
//! lower canonical vectors until every off-diagonal entry lies in
//! `v * Z_{>=0}[v]`.
//!
//! In characteristic p no algorithm is shipped; a user-supplied lookup table
//! may answer individual partitions, and everything else is honestly Unknown.
//! The one-row, one-column and empty partitions are one-dimensional and are
//! answered Irreducible in every characteristic.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::fock::{f_divided, FockVector};
use crate::laurent::LaurentPoly;
use crate::partition::{partitions_of, Partition};

/// No repeated nonzero part.
pub fn is_2regular(p: &Partition) -> bool {
    p.parts().windows(2).all(|w| w[0] != w[1])
}

/// Ladder counts of a partition: for each anti-diagonal `row + col = l`
/// (increasing l from 2), the number of nodes on it and their common residue
/// `l mod 2`.
fn ladder_sequence(p: &Partition) -> Vec<(u8, usize)> {
    let max_ladder = p.rows() as u32 + p.first_part();
    let mut out = Vec::new();
    for ladder in 2..=max_ladder {
        let count = (1..=p.rows())
            .filter(|&row| {
                let col = ladder as i64 - row as i64;
                col >= 1 && col <= p.part(row) as i64
            })
            .count();
        if count > 0 {
            out.push(((ladder % 2) as u8, count));
        }
    }
    out
}

/// The canonical basis of the degree-n part of the Fock space: one column
/// G(mu) per 2-regular mu of n.
#[derive(Debug, Clone)]
pub struct CanonicalBasis {
    n: u32,
    columns: BTreeMap<Partition, FockVector>,
}

impl CanonicalBasis {
    pub fn degree(&self) -> u32 {
        self.n
    }

    /// The 2-regular column labels, in increasing lexicographic order.
    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.columns.keys()
    }

    pub fn column(&self, mu: &Partition) -> Option<&FockVector> {
        self.columns.get(mu)
    }

    /// The decomposition entry d_{lambda,mu}(v).
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        self.columns
            .get(mu)
            .map(|col| col.coefficient(lambda))
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Number of composition factors of S^lambda in characteristic 0:
    /// the row sum at v = 1.
    pub fn composition_length(&self, lambda: &Partition) -> i64 {
        self.columns
            .values()
            .map(|col| col.coefficient(lambda).eval_at_one())
            .sum()
    }
}

/// Compute the canonical basis at degree n by ladder induction plus
/// triangular correction.
pub fn canonical_basis(n: u32) -> CanonicalBasis {
    let regulars: Vec<Partition> = partitions_of(n).into_iter().filter(is_2regular).collect();
    let mut columns: BTreeMap<Partition, FockVector> = BTreeMap::new();

    // Ascending order guarantees that every correction column is ready.
    for mu in &regulars {
        let mut vector = FockVector::basis(Partition::empty());
        for (residue, count) in ladder_sequence(mu) {
            vector = f_divided(&vector, residue, count);
        }
        debug_assert_eq!(
            vector.coefficient(mu),
            LaurentPoly::one(),
            "ladder induction must reach {mu} with coefficient 1"
        );
        // Peel lower canonical columns, largest label first, until every
        // remaining regular entry below mu has strictly positive valuation.
        for nu in regulars.iter().rev() {
            if nu >= mu {
                continue;
            }
            let c = vector.coefficient(nu);
            if c.is_zero() {
                continue;
            }
            let mut correction = LaurentPoly::monomial(0, c.coefficient(0));
            for (e, coeff) in c.terms() {
                if e < 0 {
                    correction = correction
                        .add(&LaurentPoly::monomial(e, coeff))
                        .add(&LaurentPoly::monomial(-e, coeff));
                }
            }
            if !correction.is_zero() {
                let lower = columns.get(nu).expect("ascending processing order");
                vector.sub_scaled(lower, &correction);
            }
        }
        columns.insert(mu.clone(), vector);
    }
    CanonicalBasis { n, columns }
}

/// Memoized access to canonical bases; classify sweeps hit the same degree
/// repeatedly.  Single global lock, computed at most once per degree.
pub fn canonical_basis_memoized(n: u32) -> Arc<CanonicalBasis> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<CanonicalBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().expect("canonical basis cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(canonical_basis(n)))
        .clone()
}

/// The oracle's three-valued answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleAnswer {
    Irreducible,
    Reducible,
    Unknown,
}

/// Decision procedure for 2-irreducibility of type-A Specht modules.
pub trait TypeA2Oracle {
    fn query(&self, nu: &Partition, char_p: u32) -> OracleAnswer;
}

/// Characteristic-0 answer straight from the canonical basis.
pub fn is_2irreducible_char0(nu: &Partition) -> OracleAnswer {
    let basis = canonical_basis_memoized(nu.size() as u32);
    if basis.composition_length(nu) == 1 {
        OracleAnswer::Irreducible
    } else {
        OracleAnswer::Reducible
    }
}

/// A user-supplied answer table for positive characteristic.
///
/// File format: one entry per line, `p;PARTITION;irr` or `p;PARTITION;red`,
/// with `#`-comments and blank lines ignored.  Unknown entries are absent.
#[derive(Debug, Clone, Default)]
pub struct CharTable {
    entries: BTreeMap<(u32, Partition), bool>,
}

impl CharTable {
    pub fn parse(text: &str) -> Result<CharTable> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split(';');
            let (p, partition, verdict) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
                (Some(p), Some(nu), Some(verdict), None) => (p, nu, verdict),
                _ => {
                    return Err(Error::Parse {
                        pos: lineno,
                        msg: "expected `p;PARTITION;irr|red`".into(),
                    })
                }
            };
            let p: u32 = p.trim().parse().map_err(|_| Error::Parse {
                pos: lineno,
                msg: format!("bad characteristic {p:?}"),
            })?;
            let nu: Partition = partition.trim().parse()?;
            let irreducible = match verdict.trim() {
                "irr" => true,
                "red" => false,
                other => {
                    return Err(Error::Parse {
                        pos: lineno,
                        msg: format!("expected `irr` or `red`, found {other:?}"),
                    })
                }
            };
            entries.insert((p, nu), irreducible);
        }
        Ok(CharTable { entries })
    }

    pub fn lookup(&self, p: u32, nu: &Partition) -> Option<bool> {
        self.entries.get(&(p, nu.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The shipped oracle: canonical basis in characteristic 0, optional table
/// in characteristic p, one-dimensional modules short-circuited everywhere.
#[derive(Debug, Clone, Default)]
pub struct StandardOracle {
    pub table: Option<CharTable>,
}

impl StandardOracle {
    pub fn new() -> Self {
        StandardOracle { table: None }
    }

    pub fn with_table(table: CharTable) -> Self {
        StandardOracle { table: Some(table) }
    }
}

impl TypeA2Oracle for StandardOracle {
    fn query(&self, nu: &Partition, char_p: u32) -> OracleAnswer {
        // S^(n), S^(1^n) and S^empty are one-dimensional in every
        // characteristic.
        if nu.rows() <= 1 || nu.first_part() <= 1 {
            return OracleAnswer::Irreducible;
        }
        if char_p == 0 {
            return is_2irreducible_char0(nu);
        }
        match self.table.as_ref().and_then(|t| t.lookup(char_p, nu)) {
            Some(true) => OracleAnswer::Irreducible,
            Some(false) => OracleAnswer::Reducible,
            None => OracleAnswer::Unknown,
        }
    }
}
