//! The splice surgery on a pair of column words of different lengths.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnMode {
    /// `w_1 > w_2 > ... > w_m`
    StrictDecreasing,
    /// `w_1 <= w_2 <= ... <= w_m`
    WeakIncreasing,
}

impl ColumnMode {
    fn name(self) -> &'static str {
        match self {
            ColumnMode::StrictDecreasing => "strictly decreasing",
            ColumnMode::WeakIncreasing => "weakly increasing",
        }
    }

    fn holds(self, lower: u32, upper: u32) -> bool {
        match self {
            ColumnMode::StrictDecreasing => lower > upper,
            ColumnMode::WeakIncreasing => lower <= upper,
        }
    }
}

/// Entries of one column read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnWord {
    entries: Vec<u32>,
    mode: ColumnMode,
}

impl ColumnWord {
    pub fn new(entries: Vec<u32>, mode: ColumnMode) -> Result<Self> {
        let ordered = entries.windows(2).all(|w| mode.holds(w[0], w[1]));
        if !ordered || entries.contains(&0) {
            return Err(Error::ColumnWordMode {
                entries,
                mode: mode.name(),
            });
        }
        Ok(Self { entries, mode })
    }

    pub fn strict(entries: Vec<u32>) -> Result<Self> {
        Self::new(entries, ColumnMode::StrictDecreasing)
    }

    pub fn weak(entries: Vec<u32>) -> Result<Self> {
        Self::new(entries, ColumnMode::WeakIncreasing)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn mode(&self) -> ColumnMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Splices strictly decreasing columns with `len(F) < len(G)`, using `f_0 = ∞`.
pub fn splice_dec(f: &ColumnWord, g: &ColumnWord) -> Result<(ColumnWord, ColumnWord)> {
    splice_columns(f, g, ColumnMode::StrictDecreasing)
}

/// Splices weakly increasing columns with `len(F) < len(G)`, using `f_0 = 0`.
pub fn splice_inc(f: &ColumnWord, g: &ColumnWord) -> Result<(ColumnWord, ColumnWord)> {
    splice_columns(f, g, ColumnMode::WeakIncreasing)
}

/// Finds the least `m` with `f_{a-m}` above `g_{a-m+1}` in the column order,
/// then exchanges the tails after position `a - m`.
pub(crate) fn splice_columns(
    f: &ColumnWord,
    g: &ColumnWord,
    mode: ColumnMode,
) -> Result<(ColumnWord, ColumnWord)> {
    if f.mode != mode || g.mode != mode {
        return Err(Error::Precondition(format!(
            "splice expects {} column words",
            mode.name()
        )));
    }
    let (a, b) = (f.len(), g.len());
    if a >= b {
        return Err(Error::Precondition(format!(
            "splice needs len(F) < len(G), got {a} and {b}"
        )));
    }
    // 1-based accessors; position 0 of F is the sentinel.
    let fv = |k: usize| f.entries[k - 1];
    let gv = |k: usize| g.entries[k - 1];
    let m = (0..=a)
        .find(|&j| j == a || mode.holds(fv(a - j), gv(a - j + 1)))
        .expect("j = a always qualifies");
    let cut = a - m;
    let f_new: Vec<u32> = f.entries[..cut]
        .iter()
        .chain(&g.entries[cut..])
        .copied()
        .collect();
    let g_new: Vec<u32> = g.entries[..cut]
        .iter()
        .chain(&f.entries[cut..])
        .copied()
        .collect();
    Ok((
        ColumnWord::new(f_new, mode).expect("splice preserves the column order"),
        ColumnWord::new(g_new, mode).expect("splice preserves the column order"),
    ))
}
