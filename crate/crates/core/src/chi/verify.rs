//! Exact checks of the identities relating `χ`, `χ̄`, the zeta and reversal
//! maps, and the partition-indexed paths. Each check returns a [`Report`] that
//! carries a JSON counterexample on failure.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use super::{
    chi, chi_bar, chi_bar_direct, chi_bar_slice_bottom, chi_bar_slice_top, chi_slice_bottom,
    chi_slice_top, dinv_row_pairs, splice::splice_columns, ColumnMode, ColumnWord,
};
use crate::algebra::LaurentQT;
use crate::dyck::{all_paths, Cell, DyckPath};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{syt_stats, Basis, Positivity, SymFunc};

/// Alphabet `{1..=4}` used for the per-word splice checks.
pub const SPLICE_ALPHABET: u32 = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub instance: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl Report {
    fn new(check: &str, instance: Value, failure: Option<Value>) -> Self {
        Self {
            check: check.to_string(),
            instance,
            pass: failure.is_none(),
            counterexample: failure,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable value")
}

fn mismatch(what: &str, lhs: &SymFunc, rhs: &SymFunc) -> Value {
    json!({ "step": what, "lhs": to_json(lhs), "rhs": to_json(rhs) })
}

/// Returns the first failing comparison among `(name, lhs, rhs)` triples.
fn first_mismatch<'a>(
    checks: impl IntoIterator<Item = (&'a str, SymFunc, SymFunc)>,
) -> Option<Value> {
    checks
        .into_iter()
        .find(|(_, l, r)| l != r)
        .map(|(name, l, r)| mismatch(name, &l, &r))
}

fn path_instance(path: &DyckPath) -> Value {
    json!(path.to_string())
}

/// `χ(π) = χ(rev(π))`.
pub fn verify_rev_invariance(path: &DyckPath) -> Report {
    let lhs = chi(path).func;
    let rhs = chi(&path.reverse()).func;
    let failure = (lhs != rhs).then(|| mismatch("chi(rev(pi))", &lhs, &rhs));
    Report::new("rev-invariance", path_instance(path), failure)
}

/// The dinv-word expansion of `χ̄(π)` agrees with `χ(ζ(π))`.
pub fn verify_chi_bar_routes(path: &DyckPath) -> Report {
    let direct = chi_bar_direct(path);
    let via_zeta = chi_bar(path).func;
    let failure = (direct != via_zeta).then(|| mismatch("chi_bar", &direct, &via_zeta));
    Report::new("chi-bar-routes", path_instance(path), failure)
}

/// Extreme `t`-slices from restricted word sets agree with slices of the full expansion.
pub fn verify_slices(path: &DyckPath) -> Report {
    let full = chi(path).func;
    let top = path.corners().len() as i32;
    let bar = chi_bar(path).func;
    let bar_top = path.zeta().corners().len() as i32;
    let failure = first_mismatch([
        ("chi bottom", chi_slice_bottom(path), full.t_slice(0)),
        ("chi top", chi_slice_top(path), full.t_slice(top)),
        ("chi_bar bottom", chi_bar_slice_bottom(path), bar.t_slice(0)),
        ("chi_bar top", chi_bar_slice_top(path), bar.t_slice(bar_top)),
    ]);
    Report::new("slices", path_instance(path), failure)
}

/// Sums over every word on `{1..=n}` and checks that the coefficient of `x^α`
/// only depends on the sorted content of `α`.
pub fn verify_symmetry(path: &DyckPath) -> Report {
    let n = path.semilength();
    let area: Vec<(usize, usize)> = path
        .area_cells()
        .iter()
        .map(|c| (c.x - 1, c.y - 1))
        .collect();
    let corners: Vec<(usize, usize)> = path.corners().iter().map(|c| (c.x - 1, c.y - 1)).collect();
    let mut by_exponent: BTreeMap<Vec<usize>, LaurentQT> = BTreeMap::new();
    let mut word = vec![1u32; n];
    loop {
        let inv = area.iter().filter(|&&(i, j)| word[i] > word[j]).count() as i32;
        let rises = corners.iter().filter(|&&(i, j)| word[i] <= word[j]).count() as i32;
        let mut alpha = vec![0; n];
        for &l in &word {
            alpha[l as usize - 1] += 1;
        }
        by_exponent
            .entry(alpha)
            .or_default()
            .add_term((inv, rises), BigInt::one());
        // odometer increment over {1..=n}^n
        let Some(pos) = word.iter().rposition(|&l| (l as usize) < n) else {
            break;
        };
        word[pos] += 1;
        for l in &mut word[pos + 1..] {
            *l = 1;
        }
    }
    let func = chi(path).func;
    let failure = by_exponent.into_iter().find_map(|(alpha, c)| {
        let mut parts: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mu = Partition::new(parts).expect("sorted positive parts");
        let expected = func.coeff(&mu);
        (expected != c).then(|| {
            json!({ "exponent": alpha, "coefficient": to_json(&c), "sorted": to_json(&expected) })
        })
    });
    Report::new("symmetry", path_instance(path), failure)
}

fn multinomial(n: usize, parts: &[usize]) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    parts.iter().fold(fact(n), |acc, &p| acc / fact(p))
}

/// `χ(π, 1, 1) = s_1^n`: each `m_μ` coefficient is the multinomial `n! / Π μ_i!`.
pub fn verify_multinomial(path: &DyckPath) -> Report {
    let n = path.semilength();
    let func = chi(path).func;
    let one = BigRational::one();
    let failure = partitions_of(n).into_iter().find_map(|mu| {
        let got = func
            .coeff(&mu)
            .evaluate(&one, &one)
            .expect("evaluation at 1 never divides by zero");
        let want = BigRational::from_integer(multinomial(n, mu.parts()));
        (got != want).then(|| json!({ "index": to_json(&mu), "got": got.to_string(), "expected": want.to_string() }))
    });
    Report::new("multinomial", path_instance(path), failure)
}

pub fn verify_schur_positivity(path: &DyckPath) -> Report {
    let failure = match chi(path).func.is_schur_positive() {
        Positivity::Positive => None,
        Positivity::Negative {
            index,
            exponent,
            coeff,
        } => Some(json!({
            "index": to_json(&index),
            "q": exponent.0,
            "t": exponent.1,
            "coeff": coeff.to_string(),
        })),
    };
    Report::new("schur-positivity", path_instance(path), failure)
}

fn subsets(cells: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
    let items: Vec<Cell> = cells.iter().copied().collect();
    (0..1usize << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, c)| *c)
                .collect()
        })
        .collect()
}

/// `(q-1)^{#c} χ(π,q,t) = Σ_{S ⊆ c(π)} (qt-1)^{#c-#S} (1-t)^{#S} χ(π_S,q,1)`.
pub fn verify_corner_flip(path: &DyckPath) -> Report {
    let corners = path.corners();
    let c = corners.len() as u32;
    let q_minus_one = LaurentQT::from_terms([(1, 0, 1), (0, 0, -1)]);
    let qt_minus_one = LaurentQT::from_terms([(1, 1, 1), (0, 0, -1)]);
    let one_minus_t = LaurentQT::from_terms([(0, 0, 1), (0, 1, -1)]);
    let lhs = chi(path).func.mul_scalar(&q_minus_one.pow(c));
    let mut rhs = SymFunc::zero(path.semilength(), Basis::Monomial);
    for s in subsets(&corners) {
        let flipped = path.flip_corners(&s).expect("subset of the corners");
        let k = s.len() as u32;
        let weight = qt_minus_one.pow(c - k) * one_minus_t.pow(k);
        let term = chi(&flipped).func.at_t_one().mul_scalar(&weight);
        rhs = rhs.add(&term).expect("same degree");
    }
    let failure = (lhs != rhs).then(|| mismatch("corner-flip expansion", &lhs, &rhs));
    Report::new("corner-flip", path_instance(path), failure)
}

/// `ω̄ χ(π) = (-1)^n q^{-#Area(π)} t^{-#c(π)} χ(π)`.
pub fn verify_omega_bar(path: &DyckPath) -> Report {
    let schur = chi(path).func.to_schur();
    let lhs = schur.omega_bar();
    let mut rhs = schur.scale_monomial(-(path.area() as i32), -(path.corners().len() as i32));
    if path.semilength() % 2 == 1 {
        rhs = rhs.neg();
    }
    let failure = (lhs != rhs).then(|| mismatch("omega_bar", &lhs, &rhs));
    Report::new("omega-bar", path_instance(path), failure)
}

/// `Σ_λ s_λ Σ_{T ∈ SYT(λ)} q^{a(T)} t^{b(T)}` for a per-tableau exponent map.
fn syt_generating(n: usize, exps: impl Fn(usize, usize) -> (i32, i32)) -> SymFunc {
    let mut out = SymFunc::zero(n, Basis::Schur);
    for lam in partitions_of(n) {
        let coeff = LaurentQT::from_terms(syt_stats(&lam).into_iter().map(|s| {
            let (a, b) = exps(s.des, s.maj);
            (a, b, 1)
        }));
        out.add_term(lam, &coeff).expect("partition of n");
    }
    out
}

/// Closed forms of `χ((NE)^n)` and `χ(N^n E^n)`, plus the `s_(n)` and
/// `s_(1^n)` coefficients of `χ(π)` for every path of semilength `n`.
pub fn verify_closed_forms(n: usize) -> Vec<Report> {
    let stair = DyckPath::staircase(n);
    let des_form = syt_generating(n, |des, _| (0, (n - 1 - des) as i32));
    let stair_chi = chi(&stair).func.to_schur();
    let stair_failure =
        (stair_chi != des_form).then(|| mismatch("chi((NE)^n)", &stair_chi, &des_form));

    let full = DyckPath::full(n);
    let maj_form = syt_generating(n, |_, maj| (maj as i32, 0));
    let full_chi = chi(&full).func.to_schur();
    let full_failure =
        (full_chi != maj_form).then(|| mismatch("chi(N^nE^n)", &full_chi, &maj_form));

    let row = Partition::new(vec![n]).expect("positive part");
    let column = row.conjugate();
    let hook_failure = all_paths(n).into_iter().find_map(|path| {
        let schur = chi(&path).func.to_schur();
        let want_row = LaurentQT::monomial(1, 0, path.corners().len() as i32);
        let want_col = LaurentQT::monomial(1, path.area() as i32, 0);
        let got_row = schur.coeff(&row);
        let got_col = schur.coeff(&column);
        (got_row != want_row || got_col != want_col).then(|| {
            json!({
                "path": path.to_string(),
                "row": to_json(&got_row),
                "expected_row": to_json(&want_row),
                "column": to_json(&got_col),
                "expected_column": to_json(&want_col),
            })
        })
    });

    vec![
        Report::new("closed-form-staircase", json!(n), stair_failure),
        Report::new("closed-form-full", json!(n), full_failure),
        Report::new("hook-coefficients", json!(n), hook_failure),
    ]
}

/// The blocks with positions `i` and `i + 1` (1-based) exchanged.
fn swapped(blocks: &[usize], i: usize) -> Vec<usize> {
    let mut out = blocks.to_vec();
    out.swap(i - 1, i);
    out
}

/// All column fillings of a balanced path in the given mode over `1..=alphabet`.
fn column_fillings(blocks: &[usize], mode: ColumnMode, alphabet: u32) -> Vec<Vec<ColumnWord>> {
    fn columns(len: usize, mode: ColumnMode, alphabet: u32) -> Vec<ColumnWord> {
        fn go(
            len: usize,
            mode: ColumnMode,
            alphabet: u32,
            buf: &mut Vec<u32>,
            out: &mut Vec<ColumnWord>,
        ) {
            if buf.len() == len {
                if let Ok(w) = ColumnWord::new(buf.clone(), mode) {
                    out.push(w);
                }
                return;
            }
            for v in 1..=alphabet {
                buf.push(v);
                if ColumnWord::new(buf.clone(), mode).is_ok() {
                    go(len, mode, alphabet, buf, out);
                }
                buf.pop();
            }
        }
        let mut out = Vec::new();
        go(len, mode, alphabet, &mut Vec::new(), &mut out);
        out
    }
    let mut tuples: Vec<Vec<ColumnWord>> = vec![Vec::new()];
    for &len in blocks {
        let options = columns(len, mode, alphabet);
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |c| {
                    let mut next = t.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    tuples
}

fn flatten(columns: &[ColumnWord]) -> Vec<u32> {
    columns
        .iter()
        .flat_map(|c| c.entries().iter().copied())
        .collect()
}

fn dinv_of(pairs: &[(usize, usize)], w: &[u32]) -> i64 {
    pairs.iter().filter(|&&(a, b)| w[a] > w[b]).count() as i64
}

/// Applies the splice to columns `i`, `i + 1` of every filling of `π` and
/// checks the dinv change and that the map is a bijection onto the fillings of `π'`.
fn splice_failure(blocks: &[usize], i: usize, mode: ColumnMode, alphabet: u32) -> Option<Value> {
    let after = swapped(blocks, i);
    let pairs_before = dinv_row_pairs(&DyckPath::from_blocks(blocks));
    let pairs_after = dinv_row_pairs(&DyckPath::from_blocks(&after));
    let expected_delta = match mode {
        ColumnMode::StrictDecreasing => 1,
        ColumnMode::WeakIncreasing => 0,
    };
    let mut images = HashSet::new();
    let fillings = column_fillings(blocks, mode, alphabet);
    for cols in &fillings {
        let (f, g) = splice_columns(&cols[i - 1], &cols[i], mode).expect("len(F) < len(G)");
        let mut spliced = cols.clone();
        spliced[i - 1] = f;
        spliced[i] = g;
        let w = flatten(cols);
        let w2 = flatten(&spliced);
        let delta = dinv_of(&pairs_after, &w2) - dinv_of(&pairs_before, &w);
        if delta != expected_delta {
            return Some(json!({
                "mode": format!("{mode:?}"), "word": w, "spliced": w2, "dinv_delta": delta,
            }));
        }
        if !images.insert(w2.clone()) {
            return Some(json!({ "mode": format!("{mode:?}"), "not_injective_at": w2 }));
        }
    }
    let targets: HashSet<Vec<u32>> = column_fillings(&after, mode, alphabet)
        .iter()
        .map(|c| flatten(c))
        .collect();
    (targets != images).then(|| {
        json!({ "mode": format!("{mode:?}"), "image_size": images.len(), "target_size": targets.len() })
    })
}

/// Swapping blocks `i < i + 1` with `ℓ_i < ℓ_{i+1}` multiplies `χ̄(·, q, 0)` by `q`
/// and keeps the top slice; the splice maps realise this word by word.
pub fn verify_block_swap(blocks: &[usize], i: usize) -> Result<Report> {
    verify_block_swap_with_alphabet(blocks, i, SPLICE_ALPHABET)
}

pub fn verify_block_swap_with_alphabet(
    blocks: &[usize],
    i: usize,
    alphabet: u32,
) -> Result<Report> {
    if blocks.contains(&0) {
        return Err(Error::Precondition("block lengths must be positive".into()));
    }
    if i == 0 || i >= blocks.len() {
        return Err(Error::Precondition(format!(
            "swap index {i} out of range for {} blocks",
            blocks.len()
        )));
    }
    if blocks[i - 1] >= blocks[i] {
        return Err(Error::Precondition(format!(
            "block swap needs l_{i} < l_{}, got {} and {}",
            i + 1,
            blocks[i - 1],
            blocks[i]
        )));
    }
    let instance = json!({ "blocks": blocks, "i": i });
    let failure = block_swap_slices(blocks, i)
        .or_else(|| splice_failure(blocks, i, ColumnMode::StrictDecreasing, alphabet))
        .or_else(|| splice_failure(blocks, i, ColumnMode::WeakIncreasing, alphabet));
    Ok(Report::new("block-swap", instance, failure))
}

/// Compares the bottom and top `χ̄` slices across one swap.
fn block_swap_slices(blocks: &[usize], i: usize) -> Option<Value> {
    let before = DyckPath::from_blocks(blocks);
    let after = DyckPath::from_blocks(&swapped(blocks, i));
    let bar_before = chi_bar(&before).func;
    let bar_after = chi_bar(&after).func;
    let top_before = before.zeta().corners().len() as i32;
    let top_after = after.zeta().corners().len() as i32;
    first_mismatch([
        (
            "chi_bar(pi', q, 0) = q chi_bar(pi, q, 0)",
            bar_after.t_slice(0),
            bar_before.t_slice(0).scale_monomial(1, 0),
        ),
        (
            "top slices of chi_bar",
            bar_after.t_slice(top_after),
            bar_before.t_slice(top_before),
        ),
    ])
}

/// Every block sequence with total at most `max_total` and every index `i`
/// with `ℓ_i < ℓ_{i+1}`.
pub fn block_swap_instances(max_total: usize) -> Vec<(Vec<usize>, usize)> {
    fn compositions(n: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(buf.clone());
            return;
        }
        for first in 1..=n {
            buf.push(first);
            compositions(n - first, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_total {
        let mut comps = Vec::new();
        compositions(total, &mut Vec::new(), &mut comps);
        for c in comps {
            for i in 1..c.len() {
                if c[i - 1] < c[i] {
                    out.push((c.clone(), i));
                }
            }
        }
    }
    out
}

/// Result of [`verify_main_theorem`] together with the `q` exponent picked up
/// while sorting the blocks of the balanced path.
#[derive(Clone, Debug, PartialEq)]
pub struct MainTheoremOutcome {
    pub report: Report,
    pub q_shift: usize,
}

/// The Inv and Quinv formulas for `W_λ(q)` and `H̃_{λ'}(q)` agree, together
/// with every intermediate step: reversal invariance, the path identities,
/// the block-swap `q` shifts along a bubble sort of `λ'`, and the exponent
/// bookkeeping.
pub fn verify_main_theorem(lambda: &Partition) -> MainTheoremOutcome {
    let inv_path = lambda.path_inv();
    let quinv_path = lambda.path_quinv();
    let alpha_inv = lambda.alpha_inv() as i32;
    let alpha_quinv = lambda.alpha_quinv() as i32;
    let chi_inv = chi(&inv_path).func;
    let chi_quinv = chi(&quinv_path).func;
    let top = lambda.corner_count() as i32;

    let mut failure = first_mismatch([
        (
            "q-Whittaker",
            chi_quinv.t_slice(0).scale_monomial(-alpha_quinv, 0),
            chi_inv.t_slice(0).scale_monomial(-alpha_inv, 0),
        ),
        (
            "modified Hall-Littlewood",
            chi_quinv.t_slice(top),
            chi_inv.t_slice(top),
        ),
        (
            "chi(rev(pi_inv))",
            chi(&inv_path.reverse()).func,
            chi_inv.clone(),
        ),
    ]);

    let balanced = lambda.path_balanced();
    let chain = inv_path.reverse().zeta_inverse();
    let round_trip = chain.reverse().zeta().reverse();
    if failure.is_none() && (chain != balanced || round_trip != quinv_path) {
        failure = Some(json!({
            "step": "path chain",
            "zeta_inverse_rev_inv": chain.to_string(),
            "balanced": balanced.to_string(),
            "rev_zeta_rev_zeta_inverse_rev_inv": round_trip.to_string(),
            "quinv": quinv_path.to_string(),
        }));
    }

    let mut blocks: Vec<usize> = lambda.conjugate().parts().to_vec();
    blocks.reverse();
    let start_bar = chi_bar(&DyckPath::from_blocks(&blocks)).func;
    let mut current_bar = start_bar.clone();
    let mut swaps = 0;
    while let Some(i) = (1..blocks.len()).find(|&i| blocks[i - 1] < blocks[i]) {
        let next = swapped(&blocks, i);
        let next_bar = chi_bar(&DyckPath::from_blocks(&next)).func;
        if failure.is_none() {
            let top_now = DyckPath::from_blocks(&blocks).zeta().corners().len() as i32;
            let top_next = DyckPath::from_blocks(&next).zeta().corners().len() as i32;
            failure = first_mismatch([
                (
                    "block swap bottom slice",
                    next_bar.t_slice(0),
                    current_bar.t_slice(0).scale_monomial(1, 0),
                ),
                (
                    "block swap top slice",
                    next_bar.t_slice(top_next),
                    current_bar.t_slice(top_now),
                ),
            ])
            .map(|mut v| {
                v["blocks"] = json!(blocks);
                v["i"] = json!(i);
                v
            });
        }
        blocks = next;
        current_bar = next_bar;
        swaps += 1;
    }

    let pair_sum = lambda.conjugate().mult_inversion_sum();
    if failure.is_none() && (swaps != pair_sum || (alpha_quinv - alpha_inv) as usize != pair_sum) {
        failure = Some(json!({
            "step": "exponent bookkeeping",
            "swaps": swaps,
            "mult_inversion_sum": pair_sum,
            "alpha_difference": alpha_quinv - alpha_inv,
        }));
    }
    if failure.is_none() {
        let shift = swaps as i32;
        failure = first_mismatch([
            (
                "chi_bar(rev(pi_lambda), q, 0) = q^shift chi_bar(pi_lambda, q, 0)",
                current_bar.t_slice(0),
                start_bar.t_slice(0).scale_monomial(shift, 0),
            ),
            (
                "chi(pi_quinv, q, 0) = q^shift chi(pi_inv, q, 0)",
                chi_quinv.t_slice(0),
                chi_inv.t_slice(0).scale_monomial(shift, 0),
            ),
        ]);
    }

    MainTheoremOutcome {
        report: Report::new("main-theorem", to_json(lambda), failure),
        q_shift: swaps,
    }
}

/// Path identities for `λ`: the area and corner descriptions of `π_λ^Inv` and
/// `π_λ^Quinv`, the zeta images of the balanced path and its reversal, the
/// composite map from `π_λ^Inv` to `π_λ^Quinv`, and the block shape of `π_λ`.
pub fn verify_zeta_conjugation(lambda: &Partition) -> Report {
    use crate::partition::ReadingOrder;

    let inv_path = lambda.path_inv();
    let quinv_path = lambda.path_quinv();
    let balanced = lambda.path_balanced();
    let as_cells = |pairs: BTreeSet<(usize, usize)>| -> BTreeSet<Cell> {
        pairs.into_iter().map(Cell::from).collect()
    };
    let mut increasing = lambda.conjugate().parts().to_vec();
    increasing.reverse();

    let checks: Vec<(&str, bool)> = vec![
        (
            "area(pi_inv) = Inv",
            inv_path.area_cells() == as_cells(lambda.inv_pairs()),
        ),
        (
            "area(pi_quinv) = Quinv",
            quinv_path.area_cells() == as_cells(lambda.quinv_pairs()),
        ),
        (
            "corners(pi_inv) = up pairs",
            inv_path.corners() == lambda.reading_order(ReadingOrder::Inversion).up_pairs(),
        ),
        (
            "corners(pi_quinv) = up pairs",
            quinv_path.corners() == lambda.reading_order(ReadingOrder::Quinversion).up_pairs(),
        ),
        (
            "corner counts",
            inv_path.corners().len() == lambda.corner_count()
                && quinv_path.corners().len() == lambda.corner_count(),
        ),
        (
            "rev(zeta(pi_lambda)) = pi_inv",
            balanced.zeta().reverse() == inv_path,
        ),
        (
            "rev(zeta(rev(pi_lambda))) = pi_quinv",
            balanced.reverse().zeta().reverse() == quinv_path,
        ),
        (
            "rev zeta rev zeta^-1 rev (pi_inv) = pi_quinv",
            inv_path.reverse().zeta_inverse().reverse().zeta().reverse() == quinv_path,
        ),
        (
            "blocks(pi_lambda)",
            balanced.balanced_blocks() == Some(increasing),
        ),
    ];
    let failure = checks.into_iter().find(|(_, ok)| !ok).map(|(name, _)| {
        json!({
            "step": name,
            "pi_inv": inv_path.to_string(),
            "pi_quinv": quinv_path.to_string(),
            "pi_lambda": balanced.to_string(),
        })
    });
    Report::new("zeta-conjugation", to_json(lambda), failure)
}

/// `ζ` is injective on the paths of semilength `n` and `ζ^{-1}` inverts it.
pub fn verify_zeta_bijection(n: usize) -> Report {
    let paths = all_paths(n);
    let mut images = HashSet::new();
    let failure = paths.iter().find_map(|p| {
        let z = p.zeta();
        if z.semilength() != n || !images.insert(z.clone()) {
            return Some(json!({ "step": "injective", "path": p.to_string() }));
        }
        (z.zeta_inverse() != *p || p.zeta_inverse().zeta() != *p)
            .then(|| json!({ "step": "inverse", "path": p.to_string() }))
    });
    Report::new("zeta-bijection", json!(n), failure)
}

/// `α_Quinv(λ) - α_Inv(λ) = Σ_{i>j} m'_i m'_j`, which also counts the pairs of
/// positions of `λ'` holding distinct parts.
pub fn verify_alpha(lambda: &Partition) -> Report {
    let conj = lambda.conjugate();
    let diff = lambda.alpha_quinv() as i64 - lambda.alpha_inv() as i64;
    let pair_sum = conj.mult_inversion_sum();
    let distinct = conj.distinct_pair_count();
    let ok = diff == pair_sum as i64 && pair_sum == distinct;
    let failure = (!ok).then(|| {
        json!({
            "alpha_inv": lambda.alpha_inv(),
            "alpha_quinv": lambda.alpha_quinv(),
            "mult_inversion_sum": pair_sum,
            "distinct_pairs": distinct,
        })
    });
    Report::new("alpha", to_json(lambda), failure)
}

/// The `t`-degree of `χ(π_λ^Inv)` is `|λ| - λ_1` and its `t^0` slice starts at
/// `q^{α_Inv(λ)}`; likewise for Quinv.
pub fn verify_degree_bounds(lambda: &Partition) -> Report {
    let expect_top = lambda.corner_count() as i32;
    let check = |path: DyckPath, alpha: usize| -> Option<Value> {
        let func = chi(&path).func;
        let top = func.max_t_degree();
        let low_q = func.t_slice(0).min_q_degree();
        (top != Some(expect_top) || low_q != Some(alpha as i32)).then(|| {
            json!({
                "path": path.to_string(),
                "t_degree": top,
                "expected_t_degree": expect_top,
                "min_q_degree": low_q,
                "alpha": alpha,
            })
        })
    };
    let failure = check(lambda.path_inv(), lambda.alpha_inv())
        .or_else(|| check(lambda.path_quinv(), lambda.alpha_quinv()));
    Report::new("degree-bounds", to_json(lambda), failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn main_theorem_three_two() {
        let out = verify_main_theorem(&part("3,2"));
        assert!(out.report.pass, "{:?}", out.report.counterexample);
        assert_eq!(out.q_shift, 2);
    }

    #[test]
    fn main_theorem_single_row() {
        for n in 1..=5 {
            let lam = Partition::new(vec![n]).unwrap();
            assert_eq!(lam.path_inv(), lam.path_quinv());
            let out = verify_main_theorem(&lam);
            assert!(out.report.pass);
            assert_eq!(out.q_shift, 0);
        }
    }

    #[test]
    fn block_swap_examples() {
        assert!(verify_block_swap(&[1, 2], 1).unwrap().pass);
        assert!(verify_block_swap(&[2, 3], 1).unwrap().pass);
        assert!(matches!(
            verify_block_swap(&[1, 1], 1),
            Err(Error::Precondition(_))
        ));
        assert!(verify_block_swap(&[2, 1], 1).is_err());
        assert!(verify_block_swap(&[1, 2], 2).is_err());
    }

    #[test]
    fn corner_flip_examples() {
        assert!(verify_corner_flip(&DyckPath::full(3)).pass);
        assert!(verify_corner_flip(&DyckPath::staircase(2)).pass);
    }

    #[test]
    fn omega_bar_examples() {
        assert!(verify_omega_bar(&DyckPath::full(2)).pass);
        assert!(verify_omega_bar(&DyckPath::staircase(1)).pass);
    }

    #[test]
    fn closed_forms_small() {
        for report in verify_closed_forms(2) {
            assert!(report.pass, "{report:?}");
        }
    }

    #[test]
    fn report_json_shape() {
        let r = verify_rev_invariance(&DyckPath::staircase(2));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            json!({"check": "rev-invariance", "instance": "NENE", "pass": true, "counterexample": null})
        );
    }

    #[test]
    fn broken_identity_is_reported() {
        // Multiplying by q instead of q^{-1} must be caught by the comparison helper.
        let f = chi(&DyckPath::full(2)).func.to_schur();
        let wrong = f.scale_monomial(1, 0);
        let failure = first_mismatch([("probe", f.omega_bar(), wrong)]);
        assert!(failure.is_some());
    }

    #[test]
    fn block_swap_instance_list() {
        let inst = block_swap_instances(3);
        assert_eq!(inst, vec![(vec![1, 2], 1)]);
        assert!(block_swap_instances(6)
            .iter()
            .all(|(b, i)| b[i - 1] < b[*i]));
    }
}
