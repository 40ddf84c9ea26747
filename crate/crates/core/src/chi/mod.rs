//! The characteristic functions `χ(π, q, t)` and `χ̄(π, q, t) = χ(ζ(π), q, t)`
//! with constant corner weight `t`, their extreme `t`-slices, and the
//! partition-indexed `q`-Whittaker and modified Hall-Littlewood formulas.
//!
//! Everything is computed by summing over words. Since `χ` is symmetric, the
//! coefficient of `m_μ` is the sum over words of content exactly `μ` on the
//! alphabet `1..=ℓ(μ)`, so each content class is enumerated on its own.

mod splice;
pub mod verify;

use std::collections::HashMap;

pub use splice::{splice_dec, splice_inc, ColumnMode, ColumnWord};

use crate::algebra::LaurentQT;
use crate::dyck::DyckPath;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Chi,
    ChiBar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub path: DyckPath,
    /// Monomial-basis expansion.
    pub func: SymFunc,
    pub flavor: Flavor,
}

/// Calls `visit` on every word with content exactly `content`, i.e. letter
/// `i` appears `content[i - 1]` times.
pub fn for_each_word_with_content(content: &[usize], mut visit: impl FnMut(&[u32])) {
    fn go(pos: usize, counts: &mut [usize], word: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if pos == word.len() {
            visit(word);
            return;
        }
        for letter in 0..counts.len() {
            if counts[letter] > 0 {
                counts[letter] -= 1;
                word[pos] = letter as u32 + 1;
                go(pos + 1, counts, word, visit);
                counts[letter] += 1;
            }
        }
    }
    let n = content.iter().sum();
    go(0, &mut content.to_vec(), &mut vec![0; n], &mut visit);
}

/// `Σ_w q^a t^b m_{content(w)}` over all words of length `n` for which
/// `weight(w) = Some((a, b))`.
pub fn sum_over_words(n: usize, mut weight: impl FnMut(&[u32]) -> Option<(i32, i32)>) -> SymFunc {
    let mut out = SymFunc::zero(n, Basis::Monomial);
    for mu in partitions_of(n) {
        let mut counts: HashMap<(i32, i32), i64> = HashMap::new();
        for_each_word_with_content(mu.parts(), |w| {
            if let Some(exp) = weight(w) {
                *counts.entry(exp).or_default() += 1;
            }
        });
        let coeff = LaurentQT::from_terms(counts.into_iter().map(|((a, b), c)| (a, b, c)));
        out.add_term(mu, &coeff)
            .expect("content partitions have size n");
    }
    out
}

/// Zero-based `(i, j)` index pairs of the area cells.
fn area_pairs(path: &DyckPath) -> Vec<(usize, usize)> {
    path.area_cells()
        .into_iter()
        .map(|c| (c.x - 1, c.y - 1))
        .collect()
}

fn corner_pairs(path: &DyckPath) -> Vec<(usize, usize)> {
    path.corners()
        .into_iter()
        .map(|c| (c.x - 1, c.y - 1))
        .collect()
}

/// Dinv-attack pairs translated to zero-based row indices.
pub(crate) fn dinv_row_pairs(path: &DyckPath) -> Vec<(usize, usize)> {
    let rows = path.reading_labels().row_of_label();
    path.dinv_pairs()
        .into_iter()
        .map(|(i, j)| (rows[i - 1] - 1, rows[j - 1] - 1))
        .collect()
}

/// Zero-based rows `r` with `x_r = x_{r+1}`.
fn same_column_rows(path: &DyckPath) -> Vec<usize> {
    let xs = path.x_coords();
    (0..xs.len().saturating_sub(1))
        .filter(|&r| xs[r] == xs[r + 1])
        .collect()
}

fn count_greater(pairs: &[(usize, usize)], w: &[u32]) -> i32 {
    pairs.iter().filter(|&&(i, j)| w[i] > w[j]).count() as i32
}

fn count_weak_rises(pairs: &[(usize, usize)], w: &[u32]) -> i32 {
    pairs.iter().filter(|&&(i, j)| w[i] <= w[j]).count() as i32
}

/// `Σ_w q^{inv(π, w)} t^{#{(i,j) ∈ c(π) : w_i ≤ w_j}} x_w`.
pub fn chi(path: &DyckPath) -> ChiResult {
    let area = area_pairs(path);
    let corners = corner_pairs(path);
    let func = sum_over_words(path.semilength(), |w| {
        Some((count_greater(&area, w), count_weak_rises(&corners, w)))
    });
    ChiResult {
        path: path.clone(),
        func,
        flavor: Flavor::Chi,
    }
}

/// `χ(ζ(π), q, t)`.
pub fn chi_bar(path: &DyckPath) -> ChiResult {
    ChiResult {
        path: path.clone(),
        func: chi(&path.zeta()).func,
        flavor: Flavor::ChiBar,
    }
}

/// `Σ_w q^{dinv(π, w)} t^{#{r : x_r = x_{r+1}, w_r ≤ w_{r+1}}} x_w`, without
/// going through the zeta map.
pub fn chi_bar_direct(path: &DyckPath) -> SymFunc {
    let dinv = dinv_row_pairs(path);
    let rises: Vec<(usize, usize)> = same_column_rows(path)
        .into_iter()
        .map(|r| (r, r + 1))
        .collect();
    sum_over_words(path.semilength(), |w| {
        Some((count_greater(&dinv, w), count_weak_rises(&rises, w)))
    })
}

/// `χ(π, q, 0)` summed over words with `w_i > w_j` on every corner `(i, j)`.
pub fn chi_slice_bottom(path: &DyckPath) -> SymFunc {
    let area = area_pairs(path);
    let corners = corner_pairs(path);
    sum_over_words(path.semilength(), |w| {
        corners
            .iter()
            .all(|&(i, j)| w[i] > w[j])
            .then(|| (count_greater(&area, w), 0))
    })
}

/// Coefficient of `t^{#c(π)}`, summed over words with `w_i ≤ w_j` on every corner.
pub fn chi_slice_top(path: &DyckPath) -> SymFunc {
    let area = area_pairs(path);
    let corners = corner_pairs(path);
    sum_over_words(path.semilength(), |w| {
        corners
            .iter()
            .all(|&(i, j)| w[i] <= w[j])
            .then(|| (count_greater(&area, w), 0))
    })
}

/// `χ̄(π, q, 0)` summed over fillings whose columns strictly decrease upward.
pub fn chi_bar_slice_bottom(path: &DyckPath) -> SymFunc {
    let dinv = dinv_row_pairs(path);
    let rows = same_column_rows(path);
    sum_over_words(path.semilength(), |w| {
        rows.iter()
            .all(|&r| w[r] > w[r + 1])
            .then(|| (count_greater(&dinv, w), 0))
    })
}

/// Top `t`-slice of `χ̄`, summed over fillings whose columns weakly increase upward.
pub fn chi_bar_slice_top(path: &DyckPath) -> SymFunc {
    let dinv = dinv_row_pairs(path);
    let rows = same_column_rows(path);
    sum_over_words(path.semilength(), |w| {
        rows.iter()
            .all(|&r| w[r] <= w[r + 1])
            .then(|| (count_greater(&dinv, w), 0))
    })
}

fn slice_exponent(path: &DyckPath) -> i32 {
    path.corners().len() as i32
}

/// `q^{-α_Inv(λ)} χ(π_λ^Inv, q, 0)` in the Schur basis.
pub fn q_whittaker_inv(lambda: &Partition) -> SymFunc {
    let bottom = chi(&lambda.path_inv()).func.t_slice(0);
    bottom
        .scale_monomial(-(lambda.alpha_inv() as i32), 0)
        .to_schur()
}

/// `q^{-α_Quinv(λ)} χ(π_λ^Quinv, q, 0)` in the Schur basis.
pub fn q_whittaker_quinv(lambda: &Partition) -> SymFunc {
    let bottom = chi(&lambda.path_quinv()).func.t_slice(0);
    bottom
        .scale_monomial(-(lambda.alpha_quinv() as i32), 0)
        .to_schur()
}

/// Top `t`-slice of `χ(π_λ^Inv, q, t)` in the Schur basis.
pub fn modified_hl_inv(lambda: &Partition) -> SymFunc {
    let path = lambda.path_inv();
    chi(&path).func.t_slice(slice_exponent(&path)).to_schur()
}

/// Top `t`-slice of `χ(π_λ^Quinv, q, t)` in the Schur basis.
pub fn modified_hl_quinv(lambda: &Partition) -> SymFunc {
    let path = lambda.path_quinv();
    chi(&path).func.t_slice(slice_exponent(&path)).to_schur()
}
