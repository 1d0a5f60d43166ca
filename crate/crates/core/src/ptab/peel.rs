//! Peeling a vertical strip off a path P-tableau, and putting it back.
//!
//! For `p_n`, `i <_m j` iff `j ≥ i + 2`. Every `T ∈ PT'_{p_n}(λ)` other than
//! the single column `1, 2, ..., n` is obtained from a smaller tableau `T'`
//! of shape `μ` (with `λ/μ` a vertical strip) and a number
//! `1 ≤ j < |λ/μ|`, and `inv(T) = inv(T') + j`.

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;

use super::{Mode, PFilling};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    /// The tableau left after removing the strip; never empty.
    pub rest: PFilling,
    pub j: usize,
    /// Shape of the original tableau.
    pub shape: Partition,
}

fn straight_rows(t: &PFilling) -> Result<Vec<Vec<usize>>> {
    if t.inner().iter().any(|&a| a != 0) {
        return Err(Error::InvalidFilling("expected a straight shape".into()));
    }
    let mut rows = t.rows().to_vec();
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    Ok(rows)
}

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(Vec::len).collect())
        .map_err(|_| Error::InvalidFilling("row lengths do not form a partition".into()))
}

fn check_path_tableau(rows: &[Vec<usize>]) -> Result<usize> {
    let n: usize = rows.iter().map(Vec::len).sum();
    shape_of(rows)?;
    PFilling::from_rows(rows.to_vec()).check(&HessFn::path(n), Mode::Tableau)?;
    if n > 0 && rows[0][0] != 1 {
        return Err(Error::InvalidFilling("top-left entry must be 1".into()));
    }
    Ok(n)
}

/// Splits `T ∈ PT'_{p_n}(λ)` into `(T', j)`.
pub fn path_peel(t: &PFilling) -> Result<Peeled> {
    let rows = straight_rows(t)?;
    let n = check_path_tableau(&rows)?;
    let shape = shape_of(&rows)?;
    // row_of[x] and whether x ends its row.
    let mut row_of = vec![0; n + 1];
    let mut is_last = vec![false; n + 1];
    for (i, row) in rows.iter().enumerate() {
        for (k, &x) in row.iter().enumerate() {
            row_of[x] = i;
            is_last[x] = k + 1 == row.len();
        }
    }
    let below = |a: usize, b: usize| row_of[a] > row_of[b];
    let top = (2..=n).rev().find(|&x| below(x - 1, x)).ok_or(Error::IsBaseTableau)?;

    let strip_ok = |ell: usize| {
        let seq: Vec<usize> = (top + 1..=n).rev().chain(ell..=top).collect();
        if seq.windows(2).any(|w| row_of[w[1]] >= row_of[w[0]]) || seq.iter().any(|&x| !is_last[x]) {
            return false;
        }
        let mut lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        for &x in &seq {
            lens[row_of[x]] -= 1;
        }
        lens.windows(2).all(|w| w[0] >= w[1])
    };
    let ell = (2..=top)
        .find(|&l| strip_ok(l))
        .ok_or_else(|| Error::InvalidFilling("no removable strip".into()))?;
    let j = (ell..=top).filter(|&i| below(i - 1, i)).count();

    let mut rest: Vec<Vec<usize>> =
        rows.iter().map(|r| r.iter().copied().filter(|&x| x < ell).collect()).collect();
    while rest.last().is_some_and(Vec::is_empty) {
        rest.pop();
    }
    Ok(Peeled { rest: PFilling::from_rows(rest), j, shape })
}

/// Rebuilds `T` of shape `λ` from `T' ∈ PT'_{p_k}(μ)` and `j`.
pub fn path_unpeel(rest: &PFilling, lambda: &Partition, j: usize) -> Result<PFilling> {
    let mut rows = straight_rows(rest)?;
    let k = check_path_tableau(&rows)?;
    let mu = shape_of(&rows)?;
    if k == 0 {
        return Err(Error::InvalidFilling("the remaining tableau must be nonempty".into()));
    }
    if !lambda.contains(&mu) || (0..lambda.len()).any(|i| lambda.part(i) > mu.part(i) + 1) {
        return Err(Error::InvalidFilling(format!("{lambda}/{mu} is not a vertical strip")));
    }
    // 0-based rows holding a strip cell, top to bottom.
    let strip: Vec<usize> = (0..lambda.len()).filter(|&i| lambda.part(i) > mu.part(i)).collect();
    if strip.len() < 2 || j == 0 || j >= strip.len() {
        return Err(Error::IndexOutOfRange(format!("j = {j} for a strip of size {}", strip.len())));
    }
    let k_row = rows.iter().position(|r| r.contains(&k)).unwrap();
    let c = strip.iter().rev().copied().find(|&i| i <= k_row).unwrap_or(strip[0]);
    let labeled: Vec<usize> = strip.iter().copied().filter(|&i| i != c).collect();
    let target = labeled[j - 1];
    let mut order: Vec<usize> = strip.iter().rev().copied().filter(|&i| i <= target).collect();
    order.extend(strip.iter().copied().filter(|&i| i > target));

    rows.resize(lambda.len(), Vec::new());
    for (offset, &i) in order.iter().enumerate() {
        rows[i].push(k + 1 + offset);
    }
    Ok(PFilling::from_rows(rows))
}
