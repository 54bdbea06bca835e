//! Text rendering of beta-sets as one-runner abacus diagrams.
//!
//! Output format: a ruler line of positions followed by one line per
//! beta-set, with `o` for a bead and `.` for a gap.  Columns are aligned on
//! the widest position label, so the rendering is deterministic.

use std::ops::RangeInclusive;

use crate::beta::BetaSet;

/// Render `rows` over the closed position window.
pub fn abacus_render(rows: &[BetaSet], window: RangeInclusive<i64>) -> String {
    let (lo, hi) = (*window.start(), *window.end());
    assert!(lo <= hi, "window must be non-empty");
    let width = (lo..=hi).map(|p| p.to_string().len()).max().unwrap_or(1);

    let mut out = String::new();
    for p in lo..=hi {
        out.push_str(&format!(" {:>width$}", p));
    }
    out.push('\n');
    for b in rows {
        for p in lo..=hi {
            let glyph = if b.contains(p) { 'o' } else { '.' };
            out.push_str(&format!(" {:>width$}", glyph));
        }
        out.push('\n');
    }
    out
}

/// A window that comfortably shows every bead-vs-gap distinction of the given
/// rows: from one position below all tails to one past the largest bead.
pub fn natural_window(rows: &[BetaSet]) -> RangeInclusive<i64> {
    let lo = rows.iter().map(|b| b.tail_bound()).min().unwrap_or(0) - 1;
    let hi = rows.iter().map(|b| b.max_bead()).max().unwrap_or(0) + 1;
    lo..=hi.max(lo)
}
