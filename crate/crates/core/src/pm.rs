//! +/- sequences, dominance, the canonical involution, and suitable pairs.
//!
//! A sequence is dominant when every initial segment is minus-heavy or every
//! final segment is plus-heavy.  Each dominant sequence `s` carries a unique
//! involution `iota_s` pairing minuses with pluses (computed here by a
//! left-to-right stack match, with the defining properties asserted in debug
//! builds rather than trusted).  Involutions agreeing with `iota_s` on every
//! point up to fixing are the compatible ones; a dominant `s` with a
//! compatible `iota` such that `s^iota = t` is a suitable pair for `t`.
//!
//! `suitable_pairs` is a deliberately exhaustive oracle: it enumerates the
//! full multiset-permutation class of `t` (at most C(n, k) sequences times
//! 2^(n/2) involutions), which is what the closed-form classifier is tested
//! against.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::params::Sign;

/// A finite string over {+, -}.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PmSequence {
    signs: Vec<Sign>,
}

impl PmSequence {
    pub fn new(signs: Vec<Sign>) -> Self {
        PmSequence { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.signs.iter().filter(|&&s| s == sign).count()
    }

    /// Excess of plus signs over minus signs.
    pub fn plus_excess(&self) -> i64 {
        self.count(Sign::Plus) as i64 - self.count(Sign::Minus) as i64
    }

    /// True when all signs are equal (or the sequence is empty).
    pub fn is_single_run(&self) -> bool {
        self.signs.windows(2).all(|w| w[0] == w[1])
    }

    /// Run-length encoding, e.g. `--+++-+` gives [(-,2), (+,3), (-,1), (+,1)].
    pub fn runs(&self) -> Vec<(Sign, usize)> {
        let mut runs: Vec<(Sign, usize)> = Vec::new();
        for &s in &self.signs {
            match runs.last_mut() {
                Some((sign, len)) if *sign == s => *len += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for PmSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for PmSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(text.len());
        for (pos, c) in text.chars().enumerate() {
            match c {
                '+' => signs.push(Sign::Plus),
                '-' => signs.push(Sign::Minus),
                other => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected '+' or '-', found {other:?}"),
                    })
                }
            }
        }
        Ok(PmSequence::new(signs))
    }
}

/// Dominance test: every prefix minus-heavy, or every suffix plus-heavy.
pub fn is_dominant(s: &PmSequence) -> bool {
    let mut balance = 0i64; // #minus - #plus so far
    let mut prefix_ok = true;
    for &sign in s.signs() {
        balance += if sign == Sign::Minus { 1 } else { -1 };
        if balance < 0 {
            prefix_ok = false;
            break;
        }
    }
    if prefix_ok {
        return true;
    }
    let mut balance = 0i64; // #plus - #minus from the right
    for &sign in s.signs().iter().rev() {
        balance += if sign == Sign::Plus { 1 } else { -1 };
        if balance < 0 {
            return false;
        }
    }
    true
}

/// A self-inverse permutation of {1, ..., n}, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution { map: (0..n).collect() }
    }

    /// Build from 1-based two-cycles, e.g. `from_pairs(7, &[(1,4),(2,3)])`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        for &(a, b) in pairs {
            assert!(a != b && 1 <= a && a <= n && 1 <= b && b <= n);
            map[a - 1] = b - 1;
            map[b - 1] = a - 1;
        }
        Involution { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of the 1-based point `k`.
    pub fn image(&self, k: usize) -> usize {
        self.map[k - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The two-cycles as 1-based pairs (a, b) with a < b, sorted by a.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        let mut cycles = Vec::new();
        for (i, &j) in self.map.iter().enumerate() {
            if j > i {
                cycles.push((i + 1, j + 1));
            }
        }
        cycles
    }

    /// 1-based fixed points.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The image list [iota(1), ..., iota(n)], 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&j| j + 1).collect()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.two_cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for (a, b) in cycles {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// The canonical involution of a dominant sequence: scan left to right,
/// matching each + to the nearest unmatched - on its left; leftovers fix.
pub fn iota_s(s: &PmSequence) -> Result<Involution> {
    if !is_dominant(s) {
        return Err(Error::NotDominant(s.to_string()));
    }
    let mut map: Vec<usize> = (0..s.len()).collect();
    let mut open_minus: Vec<usize> = Vec::new();
    for (k, &sign) in s.signs().iter().enumerate() {
        match sign {
            Sign::Minus => open_minus.push(k),
            Sign::Plus => {
                if let Some(m) = open_minus.pop() {
                    map[m] = k;
                    map[k] = m;
                }
            }
        }
    }
    let iota = Involution { map };
    debug_assert!(
        satisfies_iota_properties(s, &iota),
        "stack matching violated the defining properties on {s}"
    );
    Ok(iota)
}

/// Check the four defining properties of the canonical involution literally:
/// fixed points share a sign; pairs run (-, +) left to right; no fixed point
/// inside a pair; no crossing pairs.
pub fn satisfies_iota_properties(s: &PmSequence, iota: &Involution) -> bool {
    if iota.len() != s.len() {
        return false;
    }
    let fixed = iota.fixed_points();
    let fixed_signs: Vec<Sign> = fixed.iter().map(|&k| s.signs()[k - 1]).collect();
    if fixed_signs.windows(2).any(|w| w[0] != w[1]) {
        return false;
    }
    let pairs = iota.two_cycles();
    for &(a, b) in &pairs {
        if s.signs()[a - 1] != Sign::Minus || s.signs()[b - 1] != Sign::Plus {
            return false;
        }
        if fixed.iter().any(|&j| a < j && j < b) {
            return false;
        }
    }
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            if a < c && c < b && b < d {
                return false;
            }
        }
    }
    true
}

/// All involutions compatible with `s`: those agreeing with `iota_s` up to
/// fixing individual two-cycles.  Exactly 2^c entries for c two-cycles,
/// ordered by ascending inclusion bitmask over the cycles sorted by their
/// smaller element.
pub fn compatible_involutions(s: &PmSequence) -> Result<Vec<Involution>> {
    let canonical = iota_s(s)?;
    let cycles = canonical.two_cycles();
    let mut out = Vec::with_capacity(1 << cycles.len());
    for mask in 0u64..(1u64 << cycles.len()) {
        let chosen: Vec<(usize, usize)> = cycles
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        out.push(Involution::from_pairs(s.len(), &chosen));
    }
    Ok(out)
}

/// `s^iota`: position k of the result carries the sign of `s` at `iota(k)`.
pub fn apply_perm(s: &PmSequence, iota: &Involution) -> Result<PmSequence> {
    if s.len() != iota.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: iota.len(),
        });
    }
    let signs = (1..=s.len()).map(|k| s.signs()[iota.image(k) - 1]).collect();
    Ok(PmSequence::new(signs))
}

/// A dominant sequence with a compatible involution carrying it to a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitablePair {
    pub sequence: PmSequence,
    pub involution: Involution,
}

/// All pairs (s, iota) suitable for `t`, by exhaustive enumeration: every
/// rearrangement of `t`'s sign multiset, filtered for dominance, then every
/// compatible involution, kept when `s^iota = t`.  Ordered by the rearranged
/// sequence (lexicographically in its rendered form) and then by the
/// compatible-involution bitmask.
pub fn suitable_pairs(t: &PmSequence) -> Vec<SuitablePair> {
    let mut out = Vec::new();
    let mut signs = t.signs().to_vec();
    signs.sort(); // Plus sorts before Minus, matching '+' < '-' in text.
    loop {
        let s = PmSequence::new(signs.clone());
        if is_dominant(&s) {
            for iota in compatible_involutions(&s).expect("dominance checked") {
                let image = apply_perm(&s, &iota).expect("lengths agree");
                if image == *t {
                    out.push(SuitablePair {
                        sequence: s.clone(),
                        involution: iota,
                    });
                }
            }
        }
        if !next_permutation(&mut signs) {
            break;
        }
    }
    out
}

/// Advance to the next lexicographic permutation; false when wrapped.
fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
