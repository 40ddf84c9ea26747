//! Integer partitions, the inversion/quinversion reading orders with their
//! attack relations, the three partition-indexed Dyck paths, and the `α`
//! normalisation exponents.
//!
//! Boxes are addressed as `(row, col)`, 1-based, with row 1 the longest row.
//! `leg` counts boxes in the same column in shorter rows and `coleg` counts
//! boxes in the same column in longer rows, so the boxes with `coleg = 0` form
//! the first row and the boxes with `leg = 0` are the column ends.
//!
//! Both reading orders start at the shortest row and finish with row 1. The
//! "row above" of row `r` in the attack relations is row `r - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::dyck::{Cell, DyckPath, Step};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Multiplicity `m_i` of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Boxes in row-major order, row 1 first.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    pub fn arm_leg_coleg(&self, row: usize, col: usize) -> Result<ArmLeg> {
        if !self.contains_box(row, col) {
            return Err(Error::BoxOutside { row, col });
        }
        let column_height = self.0.iter().filter(|&&p| p >= col).count();
        Ok(ArmLeg {
            arm: self.part(row) - col,
            leg: column_height - row,
            coleg: row - 1,
        })
    }

    pub fn reading_order(&self, order: ReadingOrder) -> LabeledDiagram {
        let mut boxes = Vec::with_capacity(self.size());
        for row in (1..=self.length()).rev() {
            let len = self.part(row);
            match order {
                ReadingOrder::Inversion => boxes.extend((1..=len).map(|c| (row, c))),
                ReadingOrder::Quinversion => boxes.extend((1..=len).rev().map(|c| (row, c))),
            }
        }
        LabeledDiagram {
            shape: self.clone(),
            order,
            boxes,
        }
    }

    pub fn inv_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.reading_order(ReadingOrder::Inversion).attack_pairs()
    }

    pub fn quinv_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.reading_order(ReadingOrder::Quinversion).attack_pairs()
    }

    /// `N^{λ_ℓ} (EN)^{λ_ℓ} N^{λ_{ℓ-1}-λ_ℓ} (EN)^{λ_{ℓ-1}} ... (EN)^{λ_2} N^{λ_1-λ_2} E^{λ_1}`.
    pub fn path_inv(&self) -> DyckPath {
        let l = self.length();
        let mut steps = Vec::with_capacity(2 * self.size());
        push(&mut steps, Step::North, self.part(l));
        for k in (2..=l).rev() {
            push_en(&mut steps, self.part(k));
            push(&mut steps, Step::North, self.part(k - 1) - self.part(k));
        }
        push(&mut steps, Step::East, self.part(1));
        DyckPath::from_steps(steps).expect("inversion path is a Dyck path")
    }

    /// `N^{λ_ℓ} N^{λ_{ℓ-1}-λ_ℓ} (EN)^{λ_ℓ} ... N^{λ_1-λ_2} (EN)^{λ_2} E^{λ_1}`.
    pub fn path_quinv(&self) -> DyckPath {
        let l = self.length();
        let mut steps = Vec::with_capacity(2 * self.size());
        push(&mut steps, Step::North, self.part(l));
        for k in (2..=l).rev() {
            push(&mut steps, Step::North, self.part(k - 1) - self.part(k));
            push_en(&mut steps, self.part(k));
        }
        push(&mut steps, Step::East, self.part(1));
        DyckPath::from_steps(steps).expect("quinversion path is a Dyck path")
    }

    /// Blocks `N^c E^c` over the columns `c` of the conjugate, shortest first.
    pub fn path_balanced(&self) -> DyckPath {
        let mut columns = self.conjugate().0;
        columns.reverse();
        DyckPath::from_blocks(&columns)
    }

    fn arm_sum(&self, keep: impl Fn(&ArmLeg) -> bool) -> usize {
        self.boxes()
            .map(|(r, c)| self.arm_leg_coleg(r, c).expect("box of the diagram"))
            .filter(|a| keep(a))
            .map(|a| a.arm)
            .sum()
    }

    /// Sum of arms over boxes with nonzero coleg.
    pub fn alpha_inv(&self) -> usize {
        self.arm_sum(|a| a.coleg != 0)
    }

    /// Sum of arms over boxes with nonzero leg.
    pub fn alpha_quinv(&self) -> usize {
        self.arm_sum(|a| a.leg != 0)
    }

    /// `Σ_{i > j} m_i m_j`.
    pub fn mult_inversion_sum(&self) -> usize {
        let largest = self.part(1);
        let m: Vec<usize> = (0..=largest).map(|i| self.multiplicity(i)).collect();
        (1..=largest)
            .flat_map(|i| (1..i).map(move |j| (i, j)))
            .map(|(i, j)| m[i] * m[j])
            .sum()
    }

    /// Number of position pairs `p < q` with distinct parts.
    pub fn distinct_pair_count(&self) -> usize {
        let n = self.0.len();
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .filter(|&(p, q)| self.0[p] != self.0[q])
            .count()
    }

    /// `|λ| - λ_1`.
    pub fn corner_count(&self) -> usize {
        self.size() - self.part(1)
    }
}

fn push(steps: &mut Vec<Step>, s: Step, k: usize) {
    steps.extend(std::iter::repeat_n(s, k));
}

fn push_en(steps: &mut Vec<Step>, k: usize) {
    for _ in 0..k {
        steps.push(Step::East);
        steps.push(Step::North);
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(buf.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            buf.push(p);
            go(rest - p, p, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing positive integers, e.g. `3,2`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
    pub coleg: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingOrder {
    /// Left to right within each row.
    Inversion,
    /// Right to left within each row.
    Quinversion,
}

/// A partition diagram with its boxes labelled `1..=|λ|` in a reading order.
#[derive(Clone, Debug)]
pub struct LabeledDiagram {
    shape: Partition,
    order: ReadingOrder,
    /// `boxes[label - 1]` is the `(row, col)` carrying `label`.
    boxes: Vec<(usize, usize)>,
}

impl LabeledDiagram {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn box_of(&self, label: usize) -> (usize, usize) {
        self.boxes[label - 1]
    }

    pub fn label_of(&self, row: usize, col: usize) -> Option<usize> {
        self.boxes
            .iter()
            .position(|&b| b == (row, col))
            .map(|i| i + 1)
    }

    /// Labels in display form: one row per entry, shortest row first.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.shape.length())
            .rev()
            .map(|r| {
                (1..=self.shape.part(r))
                    .map(|c| self.label_of(r, c).expect("box of the diagram"))
                    .collect()
            })
            .collect()
    }

    fn attacks(&self, (r, c): (usize, usize), (r2, c2): (usize, usize)) -> bool {
        match self.order {
            ReadingOrder::Inversion => (r2 == r && c2 > c) || (r2 + 1 == r && c2 < c),
            ReadingOrder::Quinversion => (r2 == r && c2 < c) || (r2 + 1 == r && c2 > c),
        }
    }

    /// Pairs `(i, j)` such that box `i` attacks box `j`.
    pub fn attack_pairs(&self) -> BTreeSet<(usize, usize)> {
        let n = self.boxes.len();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.attacks(self.box_of(i), self.box_of(j)) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Cells `(i, up(i))` where box `up(i)` sits in the next longer row, same column.
    pub fn up_pairs(&self) -> BTreeSet<Cell> {
        self.boxes
            .iter()
            .enumerate()
            .filter(|(_, &(r, _))| r > 1)
            .map(|(i, &(r, c))| {
                let up = self.label_of(r - 1, c).expect("column continues upward");
                Cell::new(i + 1, up)
            })
            .collect()
    }
}
