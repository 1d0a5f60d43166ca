//! P-tableaux, P-arrays and their inversion generating functions.
//!
//! A P-tableau for `m` is a filling whose rows increase in the poset `<_m`
//! and where no entry is `>_m` the entry directly below it. P-arrays keep
//! only the row condition and live on row diagrams of weak compositions.

mod peel;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;
use crate::qalg::{QPoly, QRat};
use crate::symfun::{Basis, SymFun};

pub use peel::{path_peel, path_unpeel, Peeled};

/// Largest `n` accepted by [`s_fun`] and [`x_schur`].
pub const DEFAULT_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Row and column conditions.
    Tableau,
    /// Row condition only.
    Array,
}

/// A filling of a (possibly skew) diagram or of a row diagram.
///
/// Row `i` occupies columns `inner[i] + 1 ..= inner[i] + rows[i].len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PFilling {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl PFilling {
    /// A straight-shape filling from its rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        PFilling { inner: vec![0; rows.len()], rows }
    }

    /// A filling of `λ/μ`, `rows[i]` holding the cells of row `i` of the skew shape.
    pub fn skew(inner: &Partition, rows: Vec<Vec<usize>>) -> Self {
        let inner = (0..rows.len()).map(|i| inner.part(i)).collect();
        PFilling { inner, rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths of the outer shape (as a sequence; may not be a partition for arrays).
    pub fn outer(&self) -> Vec<usize> {
        self.inner.iter().zip(&self.rows).map(|(a, r)| a + r.len()).collect()
    }

    /// Entry at 1-based `(row, column)`.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        let off = *self.inner.get(i.checked_sub(1)?)?;
        self.rows[i - 1].get(j.checked_sub(off + 1)?).copied()
    }

    /// 1-based row of each entry, indexed by entry.
    pub fn row_index(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                out.insert(x, i + 1);
            }
        }
        out
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Validates the filling against `m` in the given mode.
    pub fn check(&self, m: &HessFn, mode: Mode) -> Result<()> {
        let n = m.n();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidFilling(format!("entry {x} repeated or outside [1, {n}]")));
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            for w in row.windows(2) {
                if !m.less(w[0], w[1]) {
                    return Err(Error::InvalidFilling(format!("row {}: {} is not <_m {}", i + 1, w[0], w[1])));
                }
            }
        }
        if mode == Mode::Tableau {
            for i in 2..=self.rows.len() {
                for (k, &below) in self.rows[i - 1].iter().enumerate() {
                    let j = self.inner[i - 1] + k + 1;
                    if let Some(above) = self.get(i - 1, j) {
                        if m.less(below, above) {
                            return Err(Error::InvalidFilling(format!(
                                "column {j}: {above} is >_m {below} directly below it"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for PFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .zip(&self.inner)
            .map(|(r, &off)| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("{}{}", ". ".repeat(off), cells.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Pairs `i < j ≤ m(i)` with `j` in a strictly higher row than `i`.
pub fn inv(m: &HessFn, f: &PFilling) -> Result<usize> {
    let rows = f.row_index();
    if rows.keys().any(|&x| x > m.n()) {
        return Err(Error::InvalidFilling(format!("entries exceed n = {}", m.n())));
    }
    Ok(m
        .edges()
        .into_iter()
        .filter(|(i, j)| matches!((rows.get(i), rows.get(j)), (Some(ri), Some(rj)) if rj < ri))
        .count())
}

/// Backtracking over the cells of a diagram in row-major order.
struct Search<'a> {
    m: &'a HessFn,
    mode: Mode,
    corner1: bool,
    /// `(row, column)`, 1-based, row-major.
    cells: Vec<(usize, usize)>,
    /// Index in `cells` of the cell directly above, if it is part of the diagram.
    above: Vec<Option<usize>>,
    /// Whether the cell to the left is part of the diagram (it is then `cells[idx - 1]`).
    has_left: Vec<bool>,
    values: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(m: &'a HessFn, inner: &[usize], outer: &[usize], mode: Mode, corner1: bool) -> Self {
        let mut cells = Vec::new();
        for (i, (&a, &b)) in inner.iter().zip(outer).enumerate() {
            for j in a + 1..=b {
                cells.push((i + 1, j));
            }
        }
        let above = cells
            .iter()
            .map(|&(i, j)| cells.iter().position(|&c| c == (i.wrapping_sub(1), j)))
            .collect();
        let has_left = cells
            .iter()
            .enumerate()
            .map(|(idx, &(i, j))| idx > 0 && cells[idx - 1] == (i, j.wrapping_sub(1)))
            .collect();
        Search {
            m,
            mode,
            corner1,
            above,
            has_left,
            values: Vec::with_capacity(cells.len()),
            used: vec![false; m.n() + 1],
            cells,
        }
    }

    fn run<F: FnMut(&[usize], usize)>(&mut self, visit: &mut F) {
        if self.corner1 && self.cells.first() != Some(&(1, 1)) {
            return;
        }
        self.go(0, visit);
    }

    fn go<F: FnMut(&[usize], usize)>(&mut self, inv: usize, visit: &mut F) {
        let idx = self.values.len();
        if idx == self.cells.len() {
            visit(&self.values, inv);
            return;
        }
        let n = self.m.n();
        let (row, _) = self.cells[idx];
        let range = if self.corner1 && idx == 0 { 1..=1 } else { 1..=n };
        for x in range {
            if self.used[x] {
                continue;
            }
            if self.has_left[idx] && !self.m.less(self.values[idx - 1], x) {
                continue;
            }
            if self.mode == Mode::Tableau {
                if let Some(a) = self.above[idx] {
                    if self.m.less(x, self.values[a]) {
                        continue;
                    }
                }
            }
            // Every earlier cell is in this row or above; count the
            // larger neighbours of x sitting strictly higher.
            let extra = self.values[..idx]
                .iter()
                .zip(&self.cells)
                .filter(|&(&y, &(r, _))| r < row && y > x && self.m.is_edge(x, y))
                .count();
            self.used[x] = true;
            self.values.push(x);
            self.go(inv + extra, visit);
            self.values.pop();
            self.used[x] = false;
        }
    }

    fn to_filling(&self, values: &[usize], inner: &[usize]) -> PFilling {
        let mut rows = vec![Vec::new(); inner.len()];
        for (&(i, _), &x) in self.cells.iter().zip(values) {
            rows[i - 1].push(x);
        }
        PFilling { inner: inner.to_vec(), rows }
    }
}

fn collect(m: &HessFn, inner: &[usize], outer: &[usize], mode: Mode, corner1: bool) -> Vec<PFilling> {
    let mut search = Search::new(m, inner, outer, mode, corner1);
    let mut raw = Vec::new();
    search.run(&mut |vals, _| raw.push(vals.to_vec()));
    raw.iter().map(|v| search.to_filling(v, inner)).collect()
}

fn count(m: &HessFn, inner: &[usize], outer: &[usize], mode: Mode, corner1: bool) -> QPoly {
    let mut search = Search::new(m, inner, outer, mode, corner1);
    let mut counts = vec![0u64; m.edges().len() + 1];
    search.run(&mut |_, inv| counts[inv] += 1);
    QPoly::from_counts(&counts)
}

/// P-tableaux of shape `λ`; `corner1` keeps only those with `T(1,1) = 1`.
pub fn enumerate_pt(m: &HessFn, lambda: &Partition, corner1: bool) -> Vec<PFilling> {
    collect(m, &vec![0; lambda.len()], lambda.parts(), Mode::Tableau, corner1)
}

/// `Σ q^{inv(T)}` over P-tableaux of shape `λ`.
pub fn pt_inv_poly(m: &HessFn, lambda: &Partition, corner1: bool) -> QPoly {
    count(m, &vec![0; lambda.len()], lambda.parts(), Mode::Tableau, corner1)
}

/// P-tableaux of the skew shape `λ/μ` (which must have `n` cells).
pub fn enumerate_pt_skew(m: &HessFn, lambda: &Partition, mu: &Partition) -> Vec<PFilling> {
    let inner: Vec<usize> = (0..lambda.len()).map(|i| mu.part(i)).collect();
    collect(m, &inner, lambda.parts(), Mode::Tableau, false)
}

pub fn pt_skew_inv_poly(m: &HessFn, lambda: &Partition, mu: &Partition) -> QPoly {
    let inner: Vec<usize> = (0..lambda.len()).map(|i| mu.part(i)).collect();
    count(m, &inner, lambda.parts(), Mode::Tableau, false)
}

/// P-arrays of shape `α`; entries are distinct values from `[n]`.
pub fn enumerate_pa(m: &HessFn, alpha: &[usize], corner1: bool) -> Vec<PFilling> {
    collect(m, &vec![0; alpha.len()], alpha, Mode::Array, corner1)
}

pub fn pa_inv_poly(m: &HessFn, alpha: &[usize], corner1: bool) -> QPoly {
    count(m, &vec![0; alpha.len()], alpha, Mode::Array, corner1)
}

/// `Σ q^{inv}` over `PA_m(α)` grouped by the set of entries used.
pub fn pa_by_entry_set(m: &HessFn, alpha: &[usize]) -> BTreeMap<BTreeSet<usize>, QPoly> {
    let mut groups: BTreeMap<BTreeSet<usize>, Vec<u64>> = BTreeMap::new();
    for t in enumerate_pa(m, alpha, false) {
        let w = inv(m, &t).unwrap();
        let c = groups.entry(t.entries()).or_default();
        if c.len() <= w {
            c.resize(w + 1, 0);
        }
        c[w] += 1;
    }
    groups.into_iter().map(|(k, v)| (k, QPoly::from_counts(&v))).collect()
}

/// `w(λ)_i = λ_{w(i)} + i − w(i)`, with `w` given in one-line notation on `1..=ℓ`.
pub fn w_shift(lambda: &Partition, w: &[usize]) -> Vec<i64> {
    (1..=w.len())
        .map(|i| lambda.part(w[i - 1] - 1) as i64 + i as i64 - w[i - 1] as i64)
        .collect()
}

/// `Σ_{w ∈ S_ℓ} (−1)^{ℓ(w)} Σ_{T ∈ PA(w(λ))} q^{inv(T)}`.
pub fn signed_pa_sum(m: &HessFn, lambda: &Partition, corner1: bool) -> QPoly {
    let mut acc = QPoly::zero();
    for w in permutations(lambda.len()) {
        let shape = w_shift(lambda, &w);
        if shape.iter().any(|&a| a < 0) {
            continue;
        }
        let alpha: Vec<usize> = shape.iter().map(|&a| a as usize).collect();
        let poly = pa_inv_poly(m, &alpha, corner1);
        if inversions(&w).is_multiple_of(2) {
            acc += &poly;
        } else {
            acc -= &poly;
        }
    }
    acc
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn inversions(w: &[usize]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

fn schur_sum(m: &HessFn, corner1: bool) -> Result<SymFun> {
    let n = m.n();
    if n > DEFAULT_BOUND {
        return Err(Error::SizeLimitExceeded { n, limit: DEFAULT_BOUND });
    }
    let terms = partitions(n).into_iter().map(|l| {
        let c = pt_inv_poly(m, &l, corner1);
        (l, QRat::from_poly(c))
    });
    SymFun::from_terms(n, Basis::S, terms)
}

/// `S_m = Σ_λ Σ_{T ∈ PT'_m(λ)} q^{inv(T)} s_λ`.
pub fn s_fun(m: &HessFn) -> Result<SymFun> {
    schur_sum(m, true)
}

/// `X_m = Σ_λ Σ_{T ∈ PT_m(λ)} q^{inv(T)} s_λ`.
pub fn x_schur(m: &HessFn) -> Result<SymFun> {
    schur_sum(m, false)
}

/// `Σ_{λ ⊇ μ} (Σ_{T ∈ PT_m(λ/μ)} q^{inv(T)}) s_λ`.
pub fn skew_schur_sum(m: &HessFn, mu: &Partition) -> SymFun {
    let total = mu.size() + m.n();
    let terms = partitions(total).into_iter().filter(|l| l.contains(mu)).map(|l| {
        let c = pt_skew_inv_poly(m, &l, mu);
        (l, QRat::from_poly(c))
    });
    SymFun::from_terms(total, Basis::S, terms).unwrap()
}

/// `L(λ) = Σ_{T ∈ PT'_{p_n}(λ)} q^{inv(T)}`, with `L(∅) = 1`.
pub fn path_l(lambda: &Partition) -> QPoly {
    if lambda.is_empty() {
        return QPoly::one();
    }
    pt_inv_poly(&HessFn::path(lambda.size()), lambda, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::vertical_strips;
    use crate::hessenberg::enumerate_hess;
    use crate::oracle::x_colorings;
    use crate::qalg::q_int;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn h(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    #[test]
    fn inv_examples() {
        let m = h(&[2, 4, 4, 5, 5]);
        let t = PFilling::from_rows(vec![vec![1, 5], vec![3], vec![4], vec![2]]);
        t.check(&m, Mode::Tableau).unwrap();
        assert_eq!(inv(&m, &t).unwrap(), 3);
        let col = PFilling::from_rows((1..=5).map(|i| vec![i]).collect());
        assert_eq!(inv(&HessFn::path(5), &col).unwrap(), 0);
        let any = PFilling::from_rows(vec![vec![3], vec![1], vec![2]]);
        assert_eq!(inv(&HessFn::diagonal(3), &any).unwrap(), 0);
    }

    #[test]
    fn check_rejects() {
        let m = HessFn::path(2);
        assert!(PFilling::from_rows(vec![vec![1, 2]]).check(&m, Mode::Tableau).is_err());
        assert!(PFilling::from_rows(vec![vec![1], vec![1]]).check(&m, Mode::Tableau).is_err());
        let m3 = HessFn::diagonal(3);
        // 3 above 1 in a column: 3 >_m 1 is not allowed for tableaux.
        let t = PFilling::from_rows(vec![vec![3], vec![1]]);
        assert!(t.check(&h(&[1, 3, 3]), Mode::Tableau).is_err() || m3.n() == 3);
        assert!(PFilling::from_rows(vec![vec![3], vec![1]]).check(&m3, Mode::Tableau).is_err());
        assert!(PFilling::from_rows(vec![vec![3], vec![1]]).check(&m3, Mode::Array).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let p2 = HessFn::path(2);
        assert!(enumerate_pt(&p2, &p(&[2]), true).is_empty());
        let col = enumerate_pt(&p2, &p(&[1, 1]), true);
        assert_eq!(col, vec![PFilling::from_rows(vec![vec![1], vec![2]])]);
        assert_eq!(inv(&p2, &col[0]).unwrap(), 0);
        let chain = enumerate_pt(&HessFn::diagonal(4), &p(&[4]), true);
        assert_eq!(chain, vec![PFilling::from_rows(vec![vec![1, 2, 3, 4]])]);
    }

    #[test]
    fn enumerated_fillings_are_valid() {
        for m in enumerate_hess(4) {
            for lambda in partitions(4) {
                for t in enumerate_pt(&m, &lambda, false) {
                    t.check(&m, Mode::Tableau).unwrap();
                }
            }
        }
    }

    #[test]
    fn small_s_functions() {
        assert_eq!(s_fun(&HessFn::path(2)).unwrap(), SymFun::s(p(&[1, 1])));
        assert_eq!(s_fun(&HessFn::path(1)).unwrap(), SymFun::s(p(&[1])));
        let x = x_schur(&HessFn::path(2)).unwrap();
        assert_eq!(x, SymFun::s(p(&[1, 1])).scale(&QRat::from_poly(q_int(2))));
        assert_eq!(x.to_e(), x_colorings(&HessFn::path(2)).unwrap().to_e());
    }

    #[test]
    fn x_schur_matches_colorings() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                assert_eq!(x_schur(&m).unwrap().to_e(), x_colorings(&m).unwrap().to_e(), "{m}");
            }
        }
    }

    #[test]
    fn pa_corner_requires_first_cell() {
        assert!(enumerate_pa(&HessFn::path(3), &[0, 2, 1], true).is_empty());
    }

    #[test]
    fn signed_sums() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                for lambda in partitions(n) {
                    assert_eq!(signed_pa_sum(&m, &lambda, true), pt_inv_poly(&m, &lambda, true), "{m} {lambda}");
                    assert_eq!(signed_pa_sum(&m, &lambda, false), pt_inv_poly(&m, &lambda, false), "{m} {lambda}");
                }
            }
        }
    }

    #[test]
    fn w_shift_examples() {
        let lambda = p(&[3, 1]);
        assert_eq!(w_shift(&lambda, &[1, 2]), vec![3, 1]);
        assert_eq!(w_shift(&lambda, &[2, 1]), vec![0, 4]);
    }

    #[test]
    fn swapped_rows_agree_by_entry_set() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                for a in 0..=n {
                    for b in 0..=(n - a) {
                        assert_eq!(pa_by_entry_set(&m, &[a, b]), pa_by_entry_set(&m, &[b, a]), "{m} ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn skew_multiplicativity() {
        for n in 1..=4 {
            for m in enumerate_hess(n) {
                let x = x_schur(&m).unwrap();
                for k in 0..=2 {
                    for mu in partitions(k) {
                        let lhs = skew_schur_sum(&m, &mu);
                        let rhs = SymFun::s(mu.clone()).mul(&x);
                        assert_eq!(lhs.to_e(), rhs, "{m} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn path_recursion() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                let mut rhs = QPoly::zero();
                if lambda.len() == n {
                    rhs = QPoly::one();
                }
                for mu in vertical_strips(&lambda) {
                    let d = n - mu.size();
                    // The empty inner shape is covered by the leading 1.
                    if d == 0 || mu.is_empty() {
                        continue;
                    }
                    rhs += &(&(&q_int(d) - &QPoly::one()) * &path_l(&mu));
                }
                assert_eq!(path_l(&lambda), rhs, "{lambda}");
            }
        }
    }

    #[test]
    fn size_limit() {
        assert!(matches!(s_fun(&HessFn::path(9)), Err(Error::SizeLimitExceeded { .. })));
    }
}
