//! Partitions, compositions, standard Young tableaux and Kostka numbers.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition stored without trailing zeros.
///
/// The derived order is lexicographic on the parts, so iterating a
/// `BTreeMap<Partition, _>` in reverse gives reverse-lex output.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k)`; the empty partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        Self::from_multiset(vec![k])
    }

    /// `(1^k)`
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// `(k, 1^{n-k})`
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(1 <= k && k <= n);
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// Union of parts, as in `e_λ e_μ = e_{λ∪μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_multiset(parts)
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, mu: &Partition) -> bool {
        if self.size() != mu.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(mu.len()) {
            a += self.part(i);
            b += mu.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of standard Young tableaux of this shape, by the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
                num /= hook as u128;
            }
        }
        num
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions (positive parts) of `n`; `n = 0` yields the empty one.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak composition `α` and its row diagram `D(α) = {(i, j) : j ≤ α_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    /// Cells of `D(α)` as 1-based `(row, column)` pairs in row-major order.
    pub fn diagram(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| (1..=a).map(move |j| (i + 1, j)))
            .collect()
    }
}

/// Standard Young tableau in English notation: `rows[0]` is the top row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syt {
    rows: Vec<Vec<usize>>,
}

impl Syt {
    pub fn empty() -> Self {
        Syt { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape.clone())?;
        let n: usize = shape.iter().sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidFilling(format!("entries of {rows:?} are not 1..{n}")));
                }
                if j > 0 && row[j - 1] >= x || i > 0 && rows[i - 1][j] >= x {
                    return Err(Error::InvalidFilling(format!("{rows:?} is not standard")));
                }
            }
        }
        Ok(Syt { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    /// 1-based column holding `x`.
    pub fn column_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().find_map(|r| r.iter().position(|&y| y == x).map(|j| j + 1))
    }

    /// Largest entry in each column (1-based index `c` at position `c - 1`).
    pub fn column_maxima(&self) -> Vec<usize> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j)).copied().max().unwrap())
            .collect()
    }

    /// Appends `size + 1` at the bottom of column `c` (1-based).
    ///
    /// Panics if the result would not be a partition shape.
    pub fn with_cell_in_column(&self, c: usize) -> Syt {
        let next = self.size() + 1;
        let mut rows = self.rows.clone();
        let r = rows.iter().take_while(|row| row.len() >= c).count();
        assert!(
            r == rows.len() && c == 1 || r < rows.len() && rows[r].len() == c - 1,
            "column {c} cannot be extended"
        );
        if r == rows.len() {
            rows.push(vec![next]);
        } else {
            rows[r].push(next);
        }
        Syt { rows }
    }

    /// Removes the largest entry.
    pub fn without_max(&self) -> Syt {
        let n = self.size();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&n) {
                row.pop();
            }
        }
        rows.retain(|r| !r.is_empty());
        Syt { rows }
    }
}

impl fmt::Display for Syt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// All standard Young tableaux of shape `λ`, sorted by rows.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Syt> {
    fn go(shape: &mut Vec<usize>, n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Syt>) {
        // Fill entries 1..n in increasing order, each at an addable cell.
        let placed: usize = acc.iter().map(Vec::len).sum();
        if placed == n {
            out.push(Syt { rows: acc.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = acc[i].len();
            if len < shape[i] && (i == 0 || acc[i - 1].len() > len) {
                acc[i].push(placed + 1);
                go(shape, n, acc, out);
                acc[i].pop();
            }
        }
    }
    let mut shape = lambda.parts().to_vec();
    let mut acc = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    go(&mut shape, lambda.size(), &mut acc, &mut out);
    out.sort();
    out
}

/// Standard tableaux of shape `λ` whose largest entry lies in column `k`.
pub fn syt_k(lambda: &Partition, k: usize) -> Vec<Syt> {
    let n = lambda.size();
    enumerate_syt(lambda).into_iter().filter(|t| t.column_of(n) == Some(k)).collect()
}

type KostkaCache = HashMap<(Vec<usize>, Vec<usize>), u64>;

thread_local! {
    static KOSTKA: RefCell<KostkaCache> = RefCell::new(HashMap::new());
}

/// Number of semistandard tableaux of shape `λ` and content `α`.
pub fn kostka(lambda: &Partition, alpha: &[usize]) -> Result<u64> {
    let total: usize = alpha.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but |α| = {total}", lambda.size())));
    }
    let mut sorted: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(kostka_sorted(lambda.parts(), &sorted))
}

fn kostka_sorted(lambda: &[usize], alpha: &[usize]) -> u64 {
    let Some((&last, rest)) = alpha.split_last() else {
        return u64::from(lambda.is_empty());
    };
    if lambda.len() > alpha.len() {
        return 0;
    }
    let key = (lambda.to_vec(), alpha.to_vec());
    if let Some(v) = KOSTKA.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    // The largest letter occupies a horizontal strip of size `last`.
    let mut total = 0;
    for mu in horizontal_strips_removed(lambda, last) {
        total += kostka_sorted(&mu, rest);
    }
    KOSTKA.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// Partitions `μ ⊆ λ` with `λ/μ` a horizontal strip of exactly `size` cells.
fn horizontal_strips_removed(lambda: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(lambda: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lambda.len() {
            if rem == 0 {
                let mut mu = cur.clone();
                while mu.last() == Some(&0) {
                    mu.pop();
                }
                out.push(mu);
            }
            return;
        }
        let next = lambda.get(i + 1).copied().unwrap_or(0);
        // Row i may lose cells down to the length of row i+1.
        for take in 0..=(lambda[i] - next).min(rem) {
            cur.push(lambda[i] - take);
            go(lambda, i + 1, rem - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊆ λ` such that `λ/μ` is a vertical strip, including `μ = λ`.
pub fn vertical_strips(lambda: &Partition) -> Vec<Partition> {
    let conj = lambda.conjugate();
    let mut out: Vec<Partition> = (0..=lambda.size())
        .flat_map(|s| horizontal_strips_removed(conj.parts(), s))
        .map(|mu| Partition(mu).conjugate())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&p(&[2]), &[1, 1]).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), 0);
        assert!(matches!(kostka(&p(&[2]), &[1]), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn syt_small() {
        assert_eq!(enumerate_syt(&p(&[4])).len(), 1);
        let t = enumerate_syt(&p(&[2, 1]));
        assert_eq!(t.len(), 2);
        let k2 = syt_k(&p(&[2, 1]), 2);
        assert_eq!(k2, vec![Syt::from_rows(vec![vec![1, 3], vec![2]]).unwrap()]);
        assert!(syt_k(&p(&[2, 2]), 3).is_empty());
    }

    #[test]
    fn strips() {
        assert_eq!(vertical_strips(&p(&[1])), vec![p(&[1]), Partition::empty()]);
        let mut got = vertical_strips(&p(&[2, 1]));
        got.sort();
        let mut want = vec![p(&[2, 1]), p(&[1, 1]), p(&[2]), p(&[1])];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(vertical_strips(&Partition::empty()), vec![Partition::empty()]);
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 0..=7 {
            for lambda in partitions(n) {
                let all = enumerate_syt(&lambda);
                assert_eq!(all.len() as u128, lambda.hook_count(), "{lambda}");
                let by_col: usize = (1..=lambda.part(0)).map(|k| syt_k(&lambda, k).len()).sum();
                if n > 0 {
                    assert_eq!(by_col, all.len());
                }
            }
        }
    }

    #[test]
    fn kostka_triangularity() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                assert_eq!(kostka(&lambda, lambda.parts()).unwrap(), 1);
                for mu in partitions(n) {
                    let k = kostka(&lambda, mu.parts()).unwrap();
                    if !lambda.dominates(&mu) {
                        assert_eq!(k, 0, "K[{lambda},{mu}]");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_counts_ssyt() {
        // Independent count: number of SYT equals K_{λ,1^n}.
        for lambda in partitions(6) {
            assert_eq!(kostka(&lambda, &[1; 6]).unwrap() as u128, lambda.hook_count());
        }
    }

    /// Counts SSYT letter by letter in the given content order, with no sorting.
    fn kostka_in_order(lambda: &[usize], alpha: &[usize]) -> u64 {
        match alpha.split_last() {
            None => u64::from(lambda.is_empty()),
            Some((&last, rest)) => horizontal_strips_removed(lambda, last)
                .iter()
                .map(|mu| kostka_in_order(mu, rest))
                .sum(),
        }
    }

    #[test]
    fn kostka_permutation_invariant() {
        fn perms(v: &[usize]) -> Vec<Vec<usize>> {
            if v.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.to_vec();
                let x = rest.remove(i);
                for mut p in perms(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out.sort();
            out.dedup();
            out
        }
        for n in 1..=6 {
            for lambda in partitions(n) {
                for mu in partitions(n) {
                    let k = kostka(&lambda, mu.parts()).unwrap();
                    for alpha in perms(mu.parts()) {
                        assert_eq!(kostka_in_order(lambda.parts(), &alpha), k);
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions(4).len(), 8);
    }

    proptest! {
        #[test]
        fn conjugate_involution(parts in prop::collection::vec(1usize..8, 0..8)) {
            let lambda = Partition::from_multiset(parts);
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
        }
    }
}
