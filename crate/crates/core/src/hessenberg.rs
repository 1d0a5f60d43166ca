//! Hessenberg functions and the unit interval orders they encode.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly increasing `m: [n] → [n]` with `i ≤ m(i)`.
///
/// All public indices are 1-based to match the usual notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessFn {
    values: Vec<usize>,
}

/// Outcome of [`HessFn::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Component sizes, left to right.
    UnionOfPaths(Vec<usize>),
    Flat { alpha: usize, beta: usize },
    NonFlat { alpha: usize, beta: usize },
}

impl HessFn {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let bad = |reason: String| Err(Error::InvalidHessenberg { values: values.clone(), reason });
        if n == 0 {
            return bad("length must be at least 1".into());
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v < i || v > n {
                return bad(format!("m({i}) = {v} is outside [{i}, {n}]"));
            }
            if idx > 0 && values[idx - 1] > v {
                return bad(format!("m({}) > m({i})", i - 1));
            }
        }
        Ok(HessFn { values })
    }

    /// `p_n = (2, 3, ..., n, n)`; `p_1 = (1)`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        HessFn { values: (1..=n).map(|i| (i + 1).min(n)).collect() }
    }

    /// `(n, n, ..., n)`, the complete graph.
    pub fn complete(n: usize) -> Self {
        HessFn { values: vec![n; n] }
    }

    /// `(1, 2, ..., n)`, the edgeless graph.
    pub fn diagonal(n: usize) -> Self {
        HessFn { values: (1..=n).collect() }
    }

    /// `p_{n_1} + p_{n_2} + ...` in the given order.
    pub fn from_paths(lengths: &[usize]) -> Self {
        let mut iter = lengths.iter().map(|&l| HessFn::path(l));
        let first = iter.next().expect("at least one path");
        iter.fold(first, |acc, p| acc.sum(&p))
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `m(i)` for `1 ≤ i ≤ n`; `m(0) = 0` by convention.
    pub fn m(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.values[i - 1]
        }
    }

    pub fn area(&self) -> usize {
        self.values.iter().enumerate().map(|(idx, &v)| v - idx - 1).sum()
    }

    /// Whether `{i, j}` is an edge of the incomparability graph.
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a != b && b <= self.m(a)
    }

    /// Edges `(i, j)` with `i < j ≤ m(i)`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).flat_map(|i| (i + 1..=self.m(i)).map(move |j| (i, j))).collect()
    }

    /// `i <_m j` iff `m(i) < j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.m(i) < j
    }

    pub fn poset_less(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.n();
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange(format!("({i}, {j}) for n = {n}")));
        }
        Ok(self.less(i, j))
    }

    /// Disjoint union `m_1 + m_2`.
    pub fn sum(&self, other: &HessFn) -> HessFn {
        let n1 = self.n();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|v| v + n1));
        HessFn { values }
    }

    /// `m_1 ∨ m_2`: glue the last vertex of `m_1` to the first of `m_2`.
    pub fn wedge(&self, other: &HessFn) -> HessFn {
        let n1 = self.n();
        let mut values = self.values[..n1 - 1].to_vec();
        values.extend(other.values.iter().map(|v| v + n1 - 1));
        HessFn { values }
    }

    /// Component sizes if every component is a path.
    pub fn is_union_of_paths(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if (1..=n).any(|i| self.m(i) > i + 1) {
            return None;
        }
        Some(self.component_sizes())
    }

    /// Sizes of the connected components, left to right.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        let mut start = 1;
        for i in 1..=self.n() {
            if self.m(i) == i {
                sizes.push(i + 1 - start);
                start = i + 1;
            }
        }
        sizes
    }

    pub fn preimage(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.m(i) == v).collect()
    }

    /// Distinguishes unions of paths from the flat and non-flat cases used
    /// by the modular-law reduction.
    pub fn classify(&self) -> Shape {
        if let Some(parts) = self.is_union_of_paths() {
            return Shape::UnionOfPaths(parts);
        }
        let n = self.n();
        for alpha in (1..n).rev() {
            if !self.preimage(alpha).is_empty() {
                continue;
            }
            let Some(&beta) = self.preimage(alpha + 1).first() else {
                continue;
            };
            if beta >= alpha {
                continue;
            }
            if self.m(alpha) == self.m(alpha + 1) {
                return Shape::Flat { alpha, beta };
            }
            assert_eq!(
                self.m(alpha + 1),
                self.m(alpha) + 1,
                "non-flat {self} must satisfy m(α+1) = m(α)+1 at α = {alpha}"
            );
            return Shape::NonFlat { alpha, beta };
        }
        panic!("{self} is not a union of paths but has no α");
    }

    /// Copy with `m(i)` replaced, validated.
    pub fn with_value(&self, i: usize, v: usize) -> Result<HessFn> {
        let mut values = self.values.clone();
        values[i - 1] = v;
        HessFn::new(values)
    }
}

impl TryFrom<Vec<usize>> for HessFn {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        HessFn::new(v)
    }
}

impl From<HessFn> for Vec<usize> {
    fn from(m: HessFn) -> Self {
        m.values
    }
}

impl FromStr for HessFn {
    type Err = Error;
    /// Parses comma-separated values such as `2,3,5,5,5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        HessFn::new(values)
    }
}

impl fmt::Display for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All of `H_n` in lexicographic order.
pub fn enumerate_hess(n: usize) -> Vec<HessFn> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessFn>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(HessFn { values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            cur.push(v);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// `H_1 ∪ ... ∪ H_{n_max}`.
pub fn enumerate_hess_upto(n_max: usize) -> Vec<HessFn> {
    (1..=n_max).flat_map(enumerate_hess).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(HessFn::new(vec![1, 1]).is_err());
        assert!(HessFn::new(vec![3, 2, 3]).is_err());
        assert!(HessFn::new(vec![2, 4, 3]).is_err());
        assert!(HessFn::new(vec![]).is_err());
        assert_eq!("2,3,5,5,5".parse::<HessFn>().unwrap(), h(&[2, 3, 5, 5, 5]));
        assert!("2,x".parse::<HessFn>().is_err());
    }

    #[test]
    fn areas() {
        assert_eq!(h(&[1, 2, 3]).area(), 0);
        assert_eq!(h(&[2, 3, 5, 5, 5]).area(), 5);
        for n in 1..7 {
            assert_eq!(HessFn::complete(n).area(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn edges_and_order() {
        let m = h(&[2, 3, 5, 5, 5]);
        assert_eq!(m.edges(), vec![(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert!(m.poset_less(1, 3).unwrap());
        assert!(m.poset_less(1, 1).is_err());
        assert!(m.poset_less(1, 6).is_err());
        assert!(HessFn::diagonal(4).edges().is_empty());
        for i in 1..=5 {
            for j in 1..=5 {
                if i != j {
                    let comparable = m.less(i, j) || m.less(j, i);
                    assert_ne!(comparable, m.is_edge(i, j), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn sums_and_wedges() {
        assert_eq!(HessFn::path(1).sum(&HessFn::path(2)), h(&[1, 3, 3]));
        assert_eq!(h(&[2, 2]).wedge(&HessFn::path(2)), HessFn::path(3));
        for n in 1..8 {
            assert_eq!(h(&[2, 2]).wedge(&HessFn::path(n)), HessFn::path(n + 1));
        }
        let m = h(&[2, 3, 3]);
        assert_eq!(m.sum(&h(&[1])), h(&[2, 3, 3, 4]));
        let (a, b) = (h(&[2, 2]), h(&[3, 3, 3]));
        let mut want = a.edges();
        want.extend(b.edges().into_iter().map(|(i, j)| (i + 2, j + 2)));
        assert_eq!(a.sum(&b).edges(), want);
    }

    #[test]
    fn paths() {
        assert_eq!(HessFn::path(5), h(&[2, 3, 4, 5, 5]));
        assert_eq!(HessFn::path(1), h(&[1]));
        assert_eq!(h(&[1, 3, 3]).is_union_of_paths(), Some(vec![1, 2]));
        assert_eq!(h(&[3, 3, 3]).is_union_of_paths(), None);
        assert_eq!(HessFn::from_paths(&[2, 1, 3]), h(&[2, 2, 3, 5, 6, 6]));
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_hess(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        assert_eq!(enumerate_hess(1), vec![h(&[1])]);
    }

    #[test]
    fn classification() {
        assert_eq!(h(&[2, 4, 4, 4]).classify(), Shape::Flat { alpha: 3, beta: 2 });
        assert_eq!(h(&[2, 4, 4, 5, 5]).classify(), Shape::NonFlat { alpha: 3, beta: 2 });
        assert_eq!(HessFn::path(5).classify(), Shape::UnionOfPaths(vec![5]));
        for n in 1..=8 {
            for m in enumerate_hess(n) {
                let is_paths = matches!(m.classify(), Shape::UnionOfPaths(_));
                assert_eq!(is_paths, m.is_union_of_paths().is_some());
            }
        }
    }
}
