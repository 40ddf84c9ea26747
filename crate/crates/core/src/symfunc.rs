//! Homogeneous symmetric functions with [`LaurentQT`] coefficients in the
//! monomial or Schur basis.
//!
//! The change of basis uses `s_λ = Σ_μ K_{λμ} m_μ`. Kostka numbers are
//! counted by peeling horizontal strips off the shape, and the monomial to
//! Schur direction is a back-substitution over partitions in decreasing
//! lexicographic order, which extends dominance order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Exponent, LaurentQT};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, LaurentQT>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, LaurentQT)>,
    {
        let mut out = Self::zero(degree, basis);
        for (index, coeff) in terms {
            out.add_term(index, &coeff)?;
        }
        Ok(out)
    }

    /// A single basis element `b_λ` of degree `|λ|`.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let degree = index.size();
        let mut out = Self::zero(degree, basis);
        out.coeffs.insert(index, LaurentQT::one());
        out
    }

    pub fn add_term(&mut self, index: Partition, coeff: &LaurentQT) -> Result<()> {
        if index.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: index.size(),
            });
        }
        let slot = self.coeffs.entry(index.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the basis element indexed by `index`, in the stored basis.
    pub fn coeff(&self, index: &Partition) -> LaurentQT {
        self.coeffs.get(index).cloned().unwrap_or_default()
    }

    /// Nonzero terms in decreasing lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentQT)> + '_ {
        self.coeffs.iter().rev()
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentQT) -> LaurentQT) -> SymFunc {
        let mut out = Self::zero(self.degree, self.basis);
        for (index, c) in &self.coeffs {
            let mapped = f(c);
            if !mapped.is_zero() {
                out.coeffs.insert(index.clone(), mapped);
            }
        }
        out
    }

    pub fn scale_monomial(&self, e_q: i32, e_t: i32) -> SymFunc {
        self.map_coeffs(|c| c.scale_monomial(e_q, e_t))
    }

    pub fn mul_scalar(&self, s: &LaurentQT) -> SymFunc {
        self.map_coeffs(|c| c * s)
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }

    pub fn t_slice(&self, k: i32) -> SymFunc {
        self.map_coeffs(|c| c.t_slice(k))
    }

    pub fn at_t_one(&self) -> SymFunc {
        self.map_coeffs(LaurentQT::at_t_one)
    }

    /// Largest `t` exponent over all coefficients.
    pub fn max_t_degree(&self) -> Option<i32> {
        self.coeffs
            .values()
            .filter_map(|c| c.t_degrees())
            .map(|d| d.1)
            .max()
    }

    pub fn min_q_degree(&self) -> Option<i32> {
        self.coeffs
            .values()
            .filter_map(|c| c.q_degrees())
            .map(|d| d.0)
            .min()
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = self.align(other)?;
        let mut out = self.clone();
        for (index, c) in &other.coeffs {
            out.add_term(index.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.neg())
    }

    fn align(&self, other: &SymFunc) -> Result<SymFunc> {
        if other.degree != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(other.to_basis(self.basis))
    }

    pub fn to_basis(&self, basis: Basis) -> SymFunc {
        match (self.basis, basis) {
            (Basis::Monomial, Basis::Schur) => self.to_schur(),
            (Basis::Schur, Basis::Monomial) => self.to_monomial(),
            _ => self.clone(),
        }
    }

    /// Triangular solve of `a_μ = Σ_λ c_λ K_{λμ}` for the Schur coefficients `c`.
    pub fn to_schur(&self) -> SymFunc {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let kostka = KostkaMatrix::for_degree(self.degree);
        let mut solved: Vec<(usize, LaurentQT)> = Vec::new();
        let mut out = Self::zero(self.degree, Basis::Schur);
        for (mu_idx, mu) in kostka.partitions.iter().enumerate() {
            let mut c = self.coeff(mu);
            for (lam_idx, c_lam) in &solved {
                let k = kostka.entry(*lam_idx, mu_idx);
                if k != 0 {
                    c -= &c_lam.scale(&BigInt::from(k));
                }
            }
            if !c.is_zero() {
                out.coeffs.insert(mu.clone(), c.clone());
                solved.push((mu_idx, c));
            }
        }
        out
    }

    pub fn to_monomial(&self) -> SymFunc {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let kostka = KostkaMatrix::for_degree(self.degree);
        let mut out = Self::zero(self.degree, Basis::Monomial);
        for (lam, c) in &self.coeffs {
            let lam_idx = kostka.index_of(lam);
            for (mu_idx, mu) in kostka.partitions.iter().enumerate() {
                let k = kostka.entry(lam_idx, mu_idx);
                if k != 0 {
                    out.add_term(mu.clone(), &c.scale(&BigInt::from(k)))
                        .expect("same degree");
                }
            }
        }
        out
    }

    /// Coefficient of `s_λ`, converting to the Schur basis if needed.
    pub fn schur_coefficient(&self, index: &Partition) -> Result<LaurentQT> {
        if index.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: index.size(),
            });
        }
        Ok(self.to_schur().coeff(index))
    }

    pub fn is_schur_positive(&self) -> Positivity {
        let schur = self.to_schur();
        for (index, c) in schur.terms() {
            if let Some((exponent, coeff)) = c.first_negative() {
                return Positivity::Negative {
                    index: index.clone(),
                    exponent,
                    coeff,
                };
            }
        }
        Positivity::Positive
    }

    /// `F[X] -> F̄[-X]`: conjugate coefficients, transpose Schur indices, sign `(-1)^n`.
    pub fn omega_bar(&self) -> SymFunc {
        let schur = self.to_schur();
        let negate = self.degree % 2 == 1;
        let mut out = Self::zero(self.degree, Basis::Schur);
        for (index, c) in &schur.coeffs {
            let c = c.conj_qt();
            out.coeffs
                .insert(index.conjugate(), if negate { -c } else { c });
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let prefix = match self.basis {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        };
        for (idx, (index, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let label: String = index.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "({c}){prefix}_{label}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    /// A Schur coefficient with a negative term.
    Negative {
        index: Partition,
        exponent: Exponent,
        coeff: BigInt,
    },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<u64> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: content.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(count_ssyt(shape.parts(), content.parts(), &mut memo))
}

/// Removes the entries equal to the largest letter, which form a horizontal strip.
fn count_ssyt(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut inner = shape.to_vec();
    let mut total = 0;
    strips(shape, 0, last, &mut inner, &mut |nu| {
        total += count_ssyt(nu, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerates `ν` with `shape / ν` a horizontal strip of `size` boxes.
fn strips(
    shape: &[usize],
    row: usize,
    size: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if size == 0 {
            let trimmed: Vec<usize> = inner.iter().copied().filter(|&p| p > 0).collect();
            visit(&trimmed);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - floor).min(size);
    for take in 0..=max_take {
        inner[row] = shape[row] - take;
        strips(shape, row + 1, size - take, inner, visit);
    }
    inner[row] = shape[row];
}

/// `λ ⊵ μ`: every partial sum of `λ` is at least the matching partial sum of `μ`.
pub fn dominates(lam: &Partition, mu: &Partition) -> bool {
    if lam.size() != mu.size() {
        return false;
    }
    let len = lam.length().max(mu.length());
    let (mut a, mut b) = (0, 0);
    for i in 1..=len {
        a += lam.part(i);
        b += mu.part(i);
        if a < b {
            return false;
        }
    }
    true
}

struct KostkaMatrix {
    partitions: Vec<Partition>,
    entries: Vec<u64>,
}

impl KostkaMatrix {
    fn for_degree(n: usize) -> Arc<KostkaMatrix> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().expect("kostka cache lock poisoned");
        Arc::clone(guard.entry(n).or_insert_with(|| {
            let partitions = partitions_of(n);
            let mut entries = Vec::with_capacity(partitions.len() * partitions.len());
            for lam in &partitions {
                for mu in &partitions {
                    entries.push(kostka(lam, mu).expect("same size"));
                }
            }
            Arc::new(KostkaMatrix {
                partitions,
                entries,
            })
        }))
    }

    fn entry(&self, lam: usize, mu: usize) -> u64 {
        self.entries[lam * self.partitions.len() + mu]
    }

    fn index_of(&self, lam: &Partition) -> usize {
        self.partitions
            .iter()
            .position(|p| p == lam)
            .expect("partition of the matrix degree")
    }
}

/// Descent count and major index of one standard Young tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SytStat {
    pub shape: Partition,
    pub des: usize,
    pub maj: usize,
}

/// One record per standard Young tableau of the shape. A descent is an `i`
/// whose successor `i + 1` sits in a strictly lower row (English notation,
/// i.e. a larger row index).
pub fn syt_stats(shape: &Partition) -> Vec<SytStat> {
    fn go(
        shape: &[usize],
        filled: &mut Vec<usize>,
        rows: &mut Vec<usize>,
        out: &mut Vec<(usize, usize)>,
    ) {
        if rows.len() == shape.iter().sum::<usize>() {
            let descents = rows
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[1] > w[0])
                .map(|(i, _)| i + 1);
            let (des, maj) = descents.fold((0, 0), |(d, m), i| (d + 1, m + i));
            out.push((des, maj));
            return;
        }
        for r in 0..shape.len() {
            let fits = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if fits {
                filled[r] += 1;
                rows.push(r);
                go(shape, filled, rows, out);
                rows.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut raw = Vec::new();
    go(
        shape.parts(),
        &mut vec![0; shape.length()],
        &mut Vec::new(),
        &mut raw,
    );
    raw.into_iter()
        .map(|(des, maj)| SytStat {
            shape: shape.clone(),
            des,
            maj,
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    index: Vec<usize>,
    coeff: LaurentQT,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    degree: usize,
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncRepr {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms()
                .map(|(index, coeff)| TermRepr {
                    index: index.parts().to_vec(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| Partition::new(t.index).map(|p| (p, t.coeff)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SymFunc::from_terms(repr.degree, repr.basis, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn lp(terms: &[(i32, i32, i64)]) -> LaurentQT {
        LaurentQT::from_terms(terms.iter().copied())
    }

    fn sf(basis: Basis, degree: usize, terms: &[(&str, LaurentQT)]) -> SymFunc {
        SymFunc::from_terms(
            degree,
            basis,
            terms.iter().map(|(p, c)| (part(p), c.clone())),
        )
        .unwrap()
    }

    /// Brute-force SSYT count: fill rows left to right with letters, checking
    /// weak rows and strict columns, then compare content.
    fn ssyt_oracle(shape: &[usize], content: &[usize]) -> u64 {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
            .collect();
        let letters = content.len();
        let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
        fn go(
            k: usize,
            cells: &[(usize, usize)],
            letters: usize,
            grid: &mut Vec<Vec<usize>>,
            content: &[usize],
        ) -> u64 {
            if k == cells.len() {
                let mut counts = vec![0; letters];
                for row in grid.iter() {
                    for &v in row.iter().filter(|&&v| v > 0) {
                        counts[v - 1] += 1;
                    }
                }
                return u64::from(counts == content);
            }
            let (r, c) = cells[k];
            let mut total = 0;
            for v in 1..=letters {
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                total += go(k + 1, cells, letters, grid, content);
                grid[r][c] = 0;
            }
            total
        }
        go(0, &cells, letters, &mut grid, content)
    }

    #[test]
    fn kostka_examples() {
        for n in 1..=5 {
            let row = Partition::new(vec![n]).unwrap();
            for mu in partitions_of(n) {
                assert_eq!(kostka(&row, &mu).unwrap(), 1);
                assert_eq!(kostka(&mu, &mu).unwrap(), 1);
            }
        }
        assert_eq!(kostka(&part("2,1"), &part("1,1,1")).unwrap(), 2);
        assert!(kostka(&part("2"), &part("1")).is_err());
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let k = kostka(&lam, &mu).unwrap();
                    assert_eq!(k, ssyt_oracle(lam.parts(), mu.parts()), "{lam} {mu}");
                    if k != 0 {
                        assert!(dominates(&lam, &mu));
                    }
                }
            }
        }
    }

    #[test]
    fn basis_changes() {
        let chi_full2 = sf(
            Basis::Monomial,
            2,
            &[
                ("2", LaurentQT::one()),
                ("1,1", lp(&[(0, 0, 1), (1, 0, 1)])),
            ],
        );
        let expected = sf(
            Basis::Schur,
            2,
            &[("2", LaurentQT::one()), ("1,1", LaurentQT::q())],
        );
        assert_eq!(chi_full2.to_schur(), expected);

        let m2 = SymFunc::basis_element(Basis::Monomial, part("2"));
        let expected = sf(
            Basis::Schur,
            2,
            &[("2", LaurentQT::one()), ("1,1", LaurentQT::constant(-1))],
        );
        assert_eq!(m2.to_schur(), expected);

        let s21 = SymFunc::basis_element(Basis::Schur, part("2,1"));
        let expected = sf(
            Basis::Monomial,
            3,
            &[("2,1", LaurentQT::one()), ("1,1,1", LaurentQT::constant(2))],
        );
        assert_eq!(s21.to_monomial(), expected);
    }

    #[test]
    fn positivity() {
        let good = sf(
            Basis::Schur,
            2,
            &[("2", LaurentQT::one()), ("1,1", LaurentQT::q())],
        );
        assert!(good.is_schur_positive().is_positive());
        let bad = SymFunc::basis_element(Basis::Monomial, part("2"));
        assert_eq!(
            bad.is_schur_positive(),
            Positivity::Negative {
                index: part("1,1"),
                exponent: (0, 0),
                coeff: BigInt::from(-1),
            }
        );
    }

    #[test]
    fn omega_bar_examples() {
        let f = sf(
            Basis::Schur,
            2,
            &[("2", LaurentQT::q()), ("1,1", LaurentQT::t())],
        );
        let expected = sf(
            Basis::Schur,
            2,
            &[
                ("1,1", LaurentQT::monomial(1, -1, 0)),
                ("2", LaurentQT::monomial(1, 0, -1)),
            ],
        );
        assert_eq!(f.omega_bar(), expected);
        assert_eq!(f.omega_bar().omega_bar(), f);
        let s1 = SymFunc::basis_element(Basis::Schur, part("1"));
        assert_eq!(s1.omega_bar(), s1.neg());
    }

    #[test]
    fn syt_examples() {
        let mut stats: Vec<(usize, usize)> = syt_stats(&part("2,1"))
            .into_iter()
            .map(|s| (s.des, s.maj))
            .collect();
        stats.sort();
        assert_eq!(stats, vec![(1, 1), (1, 2)]);
        for n in 1..=6 {
            let row = Partition::new(vec![n]).unwrap();
            let stats = syt_stats(&row);
            assert_eq!(stats.len(), 1);
            assert_eq!((stats[0].des, stats[0].maj), (0, 0));
            let column = row.conjugate();
            let stats = syt_stats(&column);
            assert_eq!(stats.len(), 1);
            assert_eq!((stats[0].des, stats[0].maj), (n - 1, n * (n - 1) / 2));
        }
    }

    #[test]
    fn syt_squares_sum_to_factorial() {
        let mut factorial = 1;
        for n in 1..=7 {
            factorial *= n;
            let total: usize = partitions_of(n)
                .iter()
                .map(|l| syt_stats(l).len().pow(2))
                .sum();
            assert_eq!(total, factorial);
        }
    }

    #[test]
    fn json_schema() {
        let f = sf(
            Basis::Schur,
            2,
            &[("1,1", LaurentQT::q()), ("2", LaurentQT::one())],
        );
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "degree": 2,
                "basis": "schur",
                "terms": [
                    {"index": [2], "coeff": {"terms": [{"q": 0, "t": 0, "c": 1}]}},
                    {"index": [1, 1], "coeff": {"terms": [{"q": 1, "t": 0, "c": 1}]}}
                ]
            })
        );
        let back: SymFunc = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn schur_coefficient_size_check() {
        let f = SymFunc::basis_element(Basis::Schur, part("2"));
        assert!(f.schur_coefficient(&part("1")).is_err());
        assert_eq!(f.schur_coefficient(&part("2")).unwrap(), LaurentQT::one());
    }

    fn random_symfunc(degree: usize) -> impl Strategy<Value = SymFunc> {
        let parts = partitions_of(degree);
        let count = parts.len();
        prop::collection::vec(
            (
                0..count,
                prop::collection::vec((-2i32..3, 0i32..3, -4i64..5), 0..3),
            ),
            0..5,
        )
        .prop_map(move |terms| {
            SymFunc::from_terms(
                degree,
                Basis::Monomial,
                terms
                    .into_iter()
                    .map(|(i, c)| (parts[i].clone(), LaurentQT::from_terms(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn basis_round_trip(f in (1usize..=7).prop_flat_map(random_symfunc)) {
            prop_assert_eq!(f.to_schur().to_monomial(), f.clone());
            let g = f.to_schur();
            prop_assert_eq!(g.to_monomial().to_schur(), g);
        }
    }
}
