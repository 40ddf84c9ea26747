//! Dyck paths, their cell statistics, the reversal and zeta maps, and the
//! `inv`/`dinv` statistics of words placed on a path.
//!
//! Cells use 1-based north-east-corner coordinates: the cell `(x, y)` spans
//! `[x-1, x] x [y-1, y]`. Cells above the diagonal have `y > x`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::North => Step::East,
            Step::East => Step::North,
        }
    }
}

/// A cell in north-east-corner coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((x, y): (usize, usize)) -> Self {
        Self { x, y }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Reading labels of the boxes right of each north step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingLabels {
    /// `label_of_row[r - 1]` is the label of the box in row `r`.
    pub label_of_row: Vec<usize>,
    /// Labels read column by column, bottom to top, leftmost column first.
    pub sigma: Vec<usize>,
}

impl ReadingLabels {
    /// Row (1-based) carrying each label; the inverse of `label_of_row`.
    pub fn row_of_label(&self) -> Vec<usize> {
        let mut rows = vec![0; self.label_of_row.len()];
        for (r, &label) in self.label_of_row.iter().enumerate() {
            rows[label - 1] = r + 1;
        }
        rows
    }
}

/// A word of positive integers, one letter per row of a path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLetter { pos });
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(w ∘ perm)_i = w_{perm_i}` for a 1-based permutation `perm`.
    pub fn compose(&self, perm: &[usize]) -> Word {
        Word(perm.iter().map(|&p| self.0[p - 1]).collect())
    }
}

pub fn parse_path(text: &str) -> Result<DyckPath> {
    text.parse()
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts either the `N`/`E` alphabet or the `1`/`0` alphabet, not a mix.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let binary = text.starts_with(['0', '1']);
        let mut steps = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().enumerate() {
            let step = match (ch, binary) {
                ('N', false) | ('1', true) => Step::North,
                ('E', false) | ('0', true) => Step::East,
                _ => return Err(Error::IllegalStep { ch, pos }),
            };
            steps.push(step);
        }
        DyckPath::from_steps(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::North => "N",
                Step::East => "E",
            })?;
        }
        Ok(())
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl DyckPath {
    /// Checks the step counts first, then that no prefix dips below the diagonal.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let north = steps.iter().filter(|s| **s == Step::North).count();
        if 2 * north != steps.len() {
            return Err(Error::Unbalanced {
                north,
                east: steps.len() - north,
            });
        }
        let mut level = 0i64;
        for (pos, s) in steps.iter().enumerate() {
            level += if *s == Step::North { 1 } else { -1 };
            if level < 0 {
                return Err(Error::BelowDiagonal { pos });
            }
        }
        Ok(Self { steps })
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    /// `N^n E^n`.
    pub fn full(n: usize) -> Self {
        Self::from_blocks(&[n])
    }

    /// `(NE)^n`.
    pub fn staircase(n: usize) -> Self {
        Self::from_blocks(&vec![1; n])
    }

    /// `N^{l_1} E^{l_1} ... N^{l_k} E^{l_k}`; zero-length blocks are skipped.
    pub fn from_blocks(blocks: &[usize]) -> Self {
        let mut steps = Vec::with_capacity(2 * blocks.iter().sum::<usize>());
        for &b in blocks {
            steps.extend(std::iter::repeat_n(Step::North, b));
            steps.extend(std::iter::repeat_n(Step::East, b));
        }
        Self { steps }
    }

    /// Builds the path whose `i`-th east step sits at height `heights[i - 1]`.
    pub fn from_east_heights(heights: &[usize]) -> Result<Self> {
        let n = heights.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut current = 0;
        for (i, &h) in heights.iter().enumerate() {
            if h < current || h > n {
                return Err(Error::Precondition(format!(
                    "east-step heights {heights:?} are not weakly increasing within 0..={n}"
                )));
            }
            steps.extend(std::iter::repeat_n(Step::North, h - current));
            current = h;
            steps.push(Step::East);
            if h < i + 1 {
                return Err(Error::BelowDiagonal {
                    pos: steps.len() - 1,
                });
            }
        }
        if current != n {
            return Err(Error::Unbalanced {
                north: current,
                east: n,
            });
        }
        Ok(Self { steps })
    }

    /// The unique path of semilength `n` with the given area, if one exists.
    pub fn from_area(n: usize, area: &BTreeSet<Cell>) -> Result<Self> {
        let mut heights: Vec<usize> = (1..=n).collect();
        for c in area {
            if c.x == 0 || c.x > n || c.y > n || c.y <= c.x {
                return Err(Error::Precondition(format!(
                    "cell ({}, {}) is not above the diagonal of an {n}x{n} grid",
                    c.x, c.y
                )));
            }
            heights[c.x - 1] = heights[c.x - 1].max(c.y);
        }
        let path = Self::from_east_heights(&heights)?;
        if path.area_cells() != *area {
            return Err(Error::Precondition(
                "cell set is not the area of a Dyck path".into(),
            ));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Step word in the `1`/`0` encoding.
    pub fn to_bits(&self) -> String {
        self.steps
            .iter()
            .map(|s| if *s == Step::North { '1' } else { '0' })
            .collect()
    }

    /// Number of north steps before each east step.
    pub fn east_heights(&self) -> Vec<usize> {
        let mut north = 0;
        let mut out = Vec::with_capacity(self.semilength());
        for s in &self.steps {
            match s {
                Step::North => north += 1,
                Step::East => out.push(north),
            }
        }
        out
    }

    pub fn area_cells(&self) -> BTreeSet<Cell> {
        self.east_heights()
            .into_iter()
            .enumerate()
            .flat_map(|(i, h)| (i + 2..=h).map(move |y| Cell::new(i + 1, y)))
            .collect()
    }

    pub fn area(&self) -> usize {
        self.east_heights()
            .into_iter()
            .enumerate()
            .map(|(i, h)| h - (i + 1))
            .sum()
    }

    /// One corner per `EN` factor of the step word.
    pub fn corners(&self) -> BTreeSet<Cell> {
        self.corner_positions()
            .into_iter()
            .map(|(_, c)| c)
            .collect()
    }

    /// Index of the `E` of each `EN` factor together with its corner cell.
    fn corner_positions(&self) -> Vec<(usize, Cell)> {
        let (mut north, mut east) = (0, 0);
        let mut out = Vec::new();
        for (p, pair) in self.steps.windows(2).enumerate() {
            if pair == [Step::East, Step::North] {
                out.push((p, Cell::new(east + 1, north + 1)));
            }
            match pair[0] {
                Step::North => north += 1,
                Step::East => east += 1,
            }
        }
        out
    }

    /// `x_i`: the x-coordinate of the cell right of the `i`-th north step.
    pub fn x_coords(&self) -> Vec<usize> {
        let mut east = 0;
        let mut out = Vec::with_capacity(self.semilength());
        for s in &self.steps {
            match s {
                Step::North => out.push(east + 1),
                Step::East => east += 1,
            }
        }
        out
    }

    /// Diagonal index `r - x_r` of the box right of each north step.
    fn diagonals(&self) -> Vec<usize> {
        self.x_coords()
            .into_iter()
            .enumerate()
            .map(|(r, x)| r + 1 - x)
            .collect()
    }

    /// Read right to left, swapping `N` and `E`.
    pub fn reverse(&self) -> DyckPath {
        DyckPath {
            steps: self.steps.iter().rev().map(|s| s.flipped()).collect(),
        }
    }

    pub fn reading_labels(&self) -> ReadingLabels {
        let xs = self.x_coords();
        let diag = self.diagonals();
        let n = xs.len();
        let mut rows: Vec<usize> = (0..n).collect();
        rows.sort_by_key(|&r| (diag[r], xs[r]));
        let mut label_of_row = vec![0; n];
        for (idx, &r) in rows.iter().enumerate() {
            label_of_row[r] = idx + 1;
        }
        let mut by_column: Vec<usize> = (0..n).collect();
        by_column.sort_by_key(|&r| (xs[r], r));
        let sigma = by_column.into_iter().map(|r| label_of_row[r]).collect();
        ReadingLabels {
            label_of_row,
            sigma,
        }
    }

    /// Pairs `(i, j)` of reading labels where box `i` dinv-attacks box `j`.
    pub fn dinv_pairs(&self) -> BTreeSet<(usize, usize)> {
        let labels = self.reading_labels();
        let xs = self.x_coords();
        let diag = self.diagonals();
        let rows = labels.row_of_label();
        let n = xs.len();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            let a = rows[i - 1] - 1;
            for j in i + 1..=n {
                let b = rows[j - 1] - 1;
                let same = diag[a] == diag[b];
                let above_left = diag[b] == diag[a] + 1 && xs[b] < xs[a];
                if same || above_left {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// The path whose area is the dinv-attack relation of `self`.
    pub fn zeta(&self) -> DyckPath {
        let cells = self
            .dinv_pairs()
            .into_iter()
            .map(Cell::from)
            .collect::<BTreeSet<_>>();
        DyckPath::from_area(self.semilength(), &cells)
            .expect("dinv-attack pairs always form the area of a Dyck path")
    }

    /// Inverse of [`DyckPath::zeta`], read from a per-semilength table of all paths.
    pub fn zeta_inverse(&self) -> DyckPath {
        zeta_inverse_table(self.semilength())
            .get(self)
            .cloned()
            .expect("zeta is a bijection on paths of each semilength")
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.semilength() {
            return Err(Error::LengthMismatch {
                expected: self.semilength(),
                found: w.len(),
            });
        }
        Ok(())
    }

    /// `#{(i, j) in Area | w_i > w_j}`.
    pub fn inv_stat(&self, w: &Word) -> Result<usize> {
        self.check_word(w)?;
        let l = w.letters();
        Ok(self
            .area_cells()
            .into_iter()
            .filter(|c| l[c.x - 1] > l[c.y - 1])
            .count())
    }

    /// Counts dinv-attack pairs `i -> j` whose rows carry letters `w_row(i) > w_row(j)`.
    ///
    /// The word is indexed by rows (north steps), so that
    /// `inv(zeta(pi), w ∘ sigma^{-1}) = dinv(pi, w)`.
    pub fn dinv_stat(&self, w: &Word) -> Result<usize> {
        self.check_word(w)?;
        let rows = self.reading_labels().row_of_label();
        let l = w.letters();
        Ok(self
            .dinv_pairs()
            .into_iter()
            .filter(|&(i, j)| l[rows[i - 1] - 1] > l[rows[j - 1] - 1])
            .count())
    }

    /// Turns the `EN` factor of each selected corner into `NE`.
    pub fn flip_corners(&self, selected: &BTreeSet<Cell>) -> Result<DyckPath> {
        let positions = self.corner_positions();
        let mut steps = self.steps.clone();
        for cell in selected {
            let (p, _) = positions
                .iter()
                .find(|(_, c)| c == cell)
                .ok_or(Error::NotACorner(*cell))?;
            steps[*p] = Step::North;
            steps[*p + 1] = Step::East;
        }
        Ok(DyckPath { steps })
    }

    /// Block lengths if the path factors as `N^{l_1} E^{l_1} ... N^{l_k} E^{l_k}`.
    pub fn balanced_blocks(&self) -> Option<Vec<usize>> {
        let mut blocks = Vec::new();
        let mut rest = &self.steps[..];
        while !rest.is_empty() {
            let k = rest.iter().take_while(|s| **s == Step::North).count();
            if rest.len() < 2 * k || rest[k..2 * k].iter().any(|s| *s != Step::East) {
                return None;
            }
            if rest.get(2 * k) == Some(&Step::East) {
                return None;
            }
            blocks.push(k);
            rest = &rest[2 * k..];
        }
        Some(blocks)
    }
}

/// All Dyck paths of semilength `n` in lexicographic order (`N < E`).
pub fn all_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, north: usize, east: usize, buf: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if east == n {
            out.push(DyckPath { steps: buf.clone() });
            return;
        }
        if north < n {
            buf.push(Step::North);
            go(n, north + 1, east, buf, out);
            buf.pop();
        }
        if east < north {
            buf.push(Step::East);
            go(n, north, east + 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

type ZetaTable = HashMap<DyckPath, DyckPath>;

fn zeta_inverse_table(n: usize) -> Arc<ZetaTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<ZetaTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(table) = tables.read().expect("zeta table lock poisoned").get(&n) {
        return Arc::clone(table);
    }
    let mut table = ZetaTable::new();
    for path in all_paths(n) {
        let image = path.zeta();
        let previous = table.insert(image, path);
        assert!(
            previous.is_none(),
            "zeta is not injective on semilength {n}"
        );
    }
    let table = Arc::new(table);
    let mut guard = tables.write().expect("zeta table lock poisoned");
    Arc::clone(guard.entry(n).or_insert(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn cells(pairs: &[(usize, usize)]) -> BTreeSet<Cell> {
        pairs.iter().copied().map(Cell::from).collect()
    }

    const SAMPLE: &str = "NNENEENNENEE";

    #[test]
    fn parse_both_alphabets() {
        assert_eq!(p(SAMPLE), p("110100110100"));
        assert_eq!(p(SAMPLE).semilength(), 6);
        assert_eq!(p("").semilength(), 0);
        assert_eq!(p(SAMPLE).to_string(), SAMPLE);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            parse_path("NEE"),
            Err(Error::Unbalanced { north: 1, east: 2 })
        ));
        assert!(matches!(
            parse_path("NNE"),
            Err(Error::Unbalanced { north: 2, east: 1 })
        ));
        assert!(matches!(
            parse_path("ENNE"),
            Err(Error::BelowDiagonal { pos: 0 })
        ));
        assert!(matches!(
            parse_path("NXE"),
            Err(Error::IllegalStep { ch: 'X', pos: 1 })
        ));
        assert!(matches!(parse_path("1E"), Err(Error::IllegalStep { .. })));
    }

    #[test]
    fn sample_path_statistics() {
        let pi = p(SAMPLE);
        assert_eq!(pi.area_cells(), cells(&[(1, 2), (2, 3), (4, 5), (5, 6)]));
        assert_eq!(pi.corners(), cells(&[(1, 3), (3, 4), (4, 6)]));
        assert_eq!(pi.x_coords(), vec![1, 1, 2, 4, 4, 5]);
    }

    #[test]
    fn simple_areas() {
        assert!(DyckPath::staircase(4).area_cells().is_empty());
        assert_eq!(
            DyckPath::full(3).area_cells(),
            cells(&[(1, 2), (1, 3), (2, 3)])
        );
        assert!(DyckPath::full(4).corners().is_empty());
        assert_eq!(DyckPath::staircase(3).x_coords(), vec![1, 2, 3]);
        assert_eq!(DyckPath::full(3).x_coords(), vec![1, 1, 1]);
    }

    #[test]
    fn reversal() {
        assert_eq!(p("NENNENEE").reverse(), p("NNENEENE"));
        assert_eq!(DyckPath::staircase(5).reverse(), DyckPath::staircase(5));
        assert_eq!(DyckPath::full(5).reverse(), DyckPath::full(5));
    }

    #[test]
    fn reading_labels_of_sample() {
        let labels = p(SAMPLE).reading_labels();
        assert_eq!(labels.sigma, vec![1, 3, 4, 2, 5, 6]);
        assert_eq!(labels.label_of_row, vec![1, 3, 4, 2, 5, 6]);
        assert_eq!(
            DyckPath::staircase(4).reading_labels().sigma,
            vec![1, 2, 3, 4]
        );
        let full = DyckPath::full(2).reading_labels();
        assert_eq!(full.sigma, vec![1, 2]);
        assert_eq!(full.label_of_row, vec![1, 2]);
    }

    #[test]
    fn zeta_of_sample() {
        let z = p(SAMPLE).zeta();
        assert_eq!(z, p("NNENNENNEEEE"));
        assert_eq!(z.corners(), cells(&[(1, 3), (2, 5)]));
        let pairs: BTreeSet<Cell> = p(SAMPLE).dinv_pairs().into_iter().map(Cell::from).collect();
        assert_eq!(pairs, z.area_cells());
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn zeta_trivial_cases() {
        for n in 0..6 {
            assert_eq!(DyckPath::staircase(n).zeta(), DyckPath::full(n));
            assert_eq!(DyckPath::full(n).zeta(), DyckPath::staircase(n));
            assert!(DyckPath::full(n).dinv_pairs().is_empty());
            let all: BTreeSet<_> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            assert_eq!(DyckPath::staircase(n).dinv_pairs(), all);
        }
    }

    #[test]
    fn zeta_inverse_examples() {
        assert_eq!(p("NNENNENNEEEE").zeta_inverse(), p(SAMPLE));
        assert_eq!(DyckPath::staircase(4).zeta_inverse(), DyckPath::full(4));
        assert_eq!(DyckPath::full(4).zeta_inverse(), DyckPath::staircase(4));
        assert_eq!(p("NE").zeta_inverse(), p("NE"));
        assert_eq!(DyckPath::empty().zeta_inverse(), DyckPath::empty());
    }

    #[test]
    fn word_statistics() {
        let w = Word::new(vec![2, 1, 1, 3, 2, 1]).unwrap();
        assert_eq!(p(SAMPLE).inv_stat(&w).unwrap(), 3);
        let constant = Word::new(vec![4; 6]).unwrap();
        assert_eq!(p(SAMPLE).inv_stat(&constant).unwrap(), 0);
        assert_eq!(p(SAMPLE).dinv_stat(&constant).unwrap(), 0);
        let w21 = Word::new(vec![2, 1]).unwrap();
        assert_eq!(DyckPath::full(2).inv_stat(&w21).unwrap(), 1);
        assert_eq!(DyckPath::staircase(2).dinv_stat(&w21).unwrap(), 1);
        assert_eq!(
            DyckPath::full(2).inv_stat(&Word::new(vec![1]).unwrap()),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            Word::new(vec![1, 0]),
            Err(Error::ZeroLetter { pos: 1 })
        ));
    }

    #[test]
    fn corner_flips() {
        let flipped = DyckPath::staircase(2)
            .flip_corners(&cells(&[(1, 2)]))
            .unwrap();
        assert_eq!(flipped, DyckPath::full(2));
        let pi = p(SAMPLE);
        assert_eq!(pi.flip_corners(&BTreeSet::new()).unwrap(), pi);
        let all = pi.flip_corners(&pi.corners()).unwrap();
        assert_eq!(all.area(), 7);
        assert_eq!(
            pi.flip_corners(&cells(&[(1, 2)])),
            Err(Error::NotACorner(Cell::new(1, 2)))
        );
    }

    #[test]
    fn block_factorisation() {
        assert_eq!(p("NENNEENNEE").balanced_blocks(), Some(vec![1, 2, 2]));
        assert_eq!(p("NNENEE").balanced_blocks(), None);
        assert_eq!(DyckPath::full(3).balanced_blocks(), Some(vec![3]));
        assert_eq!(DyckPath::empty().balanced_blocks(), Some(vec![]));
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| all_paths(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn area_round_trip() {
        for n in 0..=6 {
            for pi in all_paths(n) {
                assert_eq!(DyckPath::from_area(n, &pi.area_cells()).unwrap(), pi);
            }
        }
        assert!(DyckPath::from_area(3, &cells(&[(1, 3)])).is_err());
    }
}
