//! Transition probabilities on standard Young tableaux and the e-expansion
//! they produce.
//!
//! A tableau grows one entry at a time. Before inserting the next entry a
//! threshold `r` marks the columns that contain something larger than `r`;
//! the runs of marked and unmarked columns decide where the new entry may go
//! and with what weight. Multiplying the weights along the growth history of
//! `T` gives `p_m(T; q)`.

use std::collections::BTreeMap;

use crate::combinat::{enumerate_syt, partitions, Partition, Syt};
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;
use crate::qalg::{exact_div, q_fact, q_int, QPoly, QRat};
use crate::symfun::{Basis, SymFun};

/// Largest `n` accepted by the table builders.
pub const DEFAULT_BOUND: usize = 10;

/// 0/1 vector marking the columns that hold an entry above the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaVec {
    bits: Vec<bool>,
}

/// `δ = (1^{b_0}, 0^{a_1}, 1^{b_1}, ..., 0^{a_l}, 1^{b_l}, 0^{a_{l+1}})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Runs {
    /// `a_1, ..., a_{l+1}`
    a: Vec<usize>,
    /// `b_0, ..., b_l`
    b: Vec<usize>,
}

impl DeltaVec {
    pub fn new(bits: Vec<bool>) -> Self {
        DeltaVec { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn runs(&self) -> Runs {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut iter = self.bits.iter().peekable();
        let count = |want: bool, iter: &mut std::iter::Peekable<std::slice::Iter<bool>>| {
            let mut c = 0;
            while iter.next_if(|&&x| x == want).is_some() {
                c += 1;
            }
            c
        };
        b.push(count(true, &mut iter));
        loop {
            let zeros = count(false, &mut iter);
            a.push(zeros);
            if iter.peek().is_none() {
                break;
            }
            b.push(count(true, &mut iter));
        }
        Runs { a, b }
    }
}

impl Runs {
    /// Builds the runs directly; `a` has `l + 1` entries and `b` has `l + 1`.
    pub fn new(b0: usize, ab: &[(usize, usize)], a_last: usize) -> Self {
        let mut a: Vec<usize> = ab.iter().map(|&(a, _)| a).collect();
        a.push(a_last);
        let mut b = vec![b0];
        b.extend(ab.iter().map(|&(_, b)| b));
        Runs { a, b }
    }

    /// Number of admissible insertions minus one.
    pub fn l(&self) -> usize {
        self.b.len() - 1
    }

    /// `a_i` for `1 ≤ i ≤ l + 1`.
    pub fn a(&self, i: usize) -> usize {
        self.a[i - 1]
    }

    /// `b_i` for `0 ≤ i ≤ l`.
    pub fn b(&self, i: usize) -> usize {
        self.b[i]
    }

    fn a_sum(&self, from: usize, to: usize) -> usize {
        (from..=to).map(|i| self.a(i)).sum()
    }

    fn b_sum(&self, from: usize, to: usize) -> usize {
        (from..=to).map(|i| self.b(i)).sum()
    }

    /// Column receiving the new entry under the `k`-th insertion.
    pub fn insertion_column(&self, k: usize) -> usize {
        self.a_sum(1, k) + self.b_sum(0, k) + 1
    }

    pub fn to_delta(&self) -> DeltaVec {
        let mut bits = vec![true; self.b(0)];
        for i in 1..=self.l() {
            bits.extend(std::iter::repeat_n(false, self.a(i)));
            bits.extend(std::iter::repeat_n(true, self.b(i)));
        }
        bits.extend(std::iter::repeat_n(false, self.a(self.l() + 1)));
        DeltaVec { bits }
    }

    /// The product of q-integer ratios shared by `ψ_k` and `φ_k`.
    fn ratio(&self, k: usize) -> QRat {
        let l = self.l();
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for i in 1..=k {
            num = &num * &q_int(self.a_sum(i + 1, k) + self.b_sum(i, k));
            den = &den * &q_int(self.a_sum(i, k) + self.b_sum(i, k));
        }
        for i in k + 1..=l {
            num = &num * &q_int(self.a_sum(k + 1, i) + self.b_sum(k + 1, i - 1));
            den = &den * &q_int(self.a_sum(k + 1, i) + self.b_sum(k + 1, i));
        }
        QRat::new(num, den).expect("denominators are products of positive q-integers")
    }

    /// Weight `ψ_k` of the `k`-th insertion.
    pub fn psi(&self, k: usize) -> Result<QRat> {
        self.check_k(k)?;
        let e = self.b_sum(k + 1, self.l());
        Ok(&QRat::q_pow(e as i64) * &self.ratio(k))
    }

    /// The unmodified weight `φ_k`, which carries `q^{a_1 + ... + a_k}` instead.
    pub fn phi(&self, k: usize) -> Result<QRat> {
        self.check_k(k)?;
        let e = self.a_sum(1, k);
        Ok(&QRat::q_pow(e as i64) * &self.ratio(k))
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.l() {
            return Err(Error::IndexOutOfRange(format!("k = {k} but l = {}", self.l())));
        }
        Ok(())
    }

    /// Exponent `e` in `ψ_k = q^e φ_k`.
    pub fn psi_phi_exponent(&self, k: usize) -> i64 {
        self.b_sum(k + 1, self.l()) as i64 - self.a_sum(1, k) as i64
    }
}

/// `δ^{(r)}(T)`, of length `|T|`: bit `i` is set iff column `i` holds an entry `> r`.
pub fn delta_vec(t: &Syt, r: usize) -> DeltaVec {
    let mut bits: Vec<bool> = t.column_maxima().into_iter().map(|x| x > r).collect();
    bits.resize(t.size(), false);
    DeltaVec { bits }
}

/// All insertions `f_k^{(r)}(T)` for `k = 0..=l`.
pub fn insertions(t: &Syt, r: usize) -> Vec<(usize, Syt)> {
    let runs = delta_vec(t, r).runs();
    (0..=runs.l()).map(|k| (k, t.with_cell_in_column(runs.insertion_column(k)))).collect()
}

pub fn psi(t: &Syt, k: usize, r: usize) -> Result<QRat> {
    delta_vec(t, r).runs().psi(k)
}

pub fn phi(t: &Syt, k: usize, r: usize) -> Result<QRat> {
    delta_vec(t, r).runs().phi(k)
}

/// Threshold used when inserting entry `i` (1-based) for `m ∈ H_n`.
pub fn threshold(m: &HessFn, i: usize) -> usize {
    m.n() - m.m(m.n() + 1 - i)
}

/// `p_m(T; q)` for every tableau it does not vanish on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbTable {
    m: HessFn,
    entries: BTreeMap<Syt, QRat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Weight {
    Psi,
    Phi,
}

impl ProbTable {
    pub fn m(&self) -> &HessFn {
        &self.m
    }

    pub fn entries(&self) -> &BTreeMap<Syt, QRat> {
        &self.entries
    }

    pub fn get(&self, t: &Syt) -> QRat {
        self.entries.get(t).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn total(&self) -> QRat {
        self.entries.values().fold(QRat::zero(), |acc, p| &acc + p)
    }

    /// `∏[λ_i]_q! · Σ_{T ∈ SYT_k(λ)} p_m(T; q)`, which must be a polynomial.
    pub fn c_lambda_k(&self, lambda: &Partition, k: usize) -> Result<QPoly> {
        let n = self.m.n();
        let sum = self
            .entries
            .iter()
            .filter(|(t, _)| t.shape() == *lambda && t.column_of(n) == Some(k))
            .fold(QRat::zero(), |acc, (_, p)| &acc + p);
        (&sum * &row_factorials(lambda)).to_poly()
    }

    /// `E_{m,k} = Σ_λ c_{λ,k}(m; q) / [k]_q · e_λ`.
    pub fn e_part(&self, k: usize) -> Result<SymFun> {
        let n = self.m.n();
        let mut terms = Vec::new();
        for lambda in partitions(n).into_iter().filter(|l| l.part(0) >= k) {
            let c = self.c_lambda_k(&lambda, k)?;
            terms.push((lambda, QRat::from_poly(exact_div(&c, &q_int(k))?)));
        }
        SymFun::from_terms(n, Basis::E, terms)
    }

    pub fn e_total(&self) -> Result<SymFun> {
        let n = self.m.n();
        let mut acc = SymFun::zero(n, Basis::E);
        for k in 1..=n {
            acc = acc.checked_add(&self.e_part(k)?)?;
        }
        Ok(acc)
    }

    /// `Σ_λ ∏[λ_i]_q! Σ_{T ∈ SYT(λ)} p_m(T; q) · e_λ`.
    pub fn x(&self) -> Result<SymFun> {
        let n = self.m.n();
        let mut by_shape: BTreeMap<Partition, QRat> = BTreeMap::new();
        for (t, p) in &self.entries {
            let e = by_shape.entry(t.shape()).or_insert_with(QRat::zero);
            *e = &*e + p;
        }
        let terms = by_shape
            .into_iter()
            .map(|(lambda, s)| {
                let c = (&s * &row_factorials(&lambda)).to_poly()?;
                Ok((lambda, QRat::from_poly(c)))
            })
            .collect::<Result<Vec<_>>>()?;
        SymFun::from_terms(n, Basis::E, terms)
    }
}

fn row_factorials(lambda: &Partition) -> QPoly {
    lambda.parts().iter().fold(QPoly::one(), |acc, &p| &acc * &q_fact(p))
}

fn build(m: &HessFn, weight: Weight, limit: usize) -> Result<ProbTable> {
    let n = m.n();
    if n > limit {
        return Err(Error::SizeLimitExceeded { n, limit });
    }
    let mut layer: BTreeMap<Syt, QRat> = BTreeMap::from([(Syt::empty(), QRat::one())]);
    for i in 1..=n {
        let r = threshold(m, i);
        let mut next = BTreeMap::new();
        for (t, p) in &layer {
            let runs = delta_vec(t, r).runs();
            for k in 0..=runs.l() {
                let w = match weight {
                    Weight::Psi => runs.psi(k)?,
                    Weight::Phi => runs.phi(k)?,
                };
                let child = t.with_cell_in_column(runs.insertion_column(k));
                next.insert(child, p * &w);
            }
        }
        layer = next;
    }
    Ok(ProbTable { m: m.clone(), entries: layer })
}

/// The table of `p_m(T; q)`, built forward from the empty tableau.
pub fn p_table(m: &HessFn) -> Result<ProbTable> {
    build(m, Weight::Psi, DEFAULT_BOUND)
}

/// Same recursion with the unmodified weights `φ`.
pub fn p_bar_table(m: &HessFn) -> Result<ProbTable> {
    build(m, Weight::Phi, DEFAULT_BOUND)
}

/// Checks `p_m(T) = q^{area(m) - Σ_j C(λ_j, 2)} p̄_m(T)` for every tableau.
pub fn check_area_relation(m: &HessFn) -> Result<bool> {
    let p = p_table(m)?;
    let pbar = p_bar_table(m)?;
    if p.entries.len() != pbar.entries.len() {
        return Ok(false);
    }
    let area = m.area() as i64;
    for (t, v) in &p.entries {
        let rows: i64 = t.shape().parts().iter().map(|&l| (l * (l.saturating_sub(1)) / 2) as i64).sum();
        let expected = &QRat::q_pow(area - rows) * &pbar.get(t);
        if *v != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn c_lambda_k(m: &HessFn, lambda: &Partition, k: usize) -> Result<QPoly> {
    p_table(m)?.c_lambda_k(lambda, k)
}

pub fn e_part(m: &HessFn, k: usize) -> Result<SymFun> {
    p_table(m)?.e_part(k)
}

pub fn e_total(m: &HessFn) -> Result<SymFun> {
    p_table(m)?.e_total()
}

pub fn x_hikita(m: &HessFn) -> Result<SymFun> {
    p_table(m)?.x()
}

/// One edge of the growth tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceNode {
    pub step: usize,
    pub parent: Syt,
    pub child: Syt,
    pub k: usize,
    pub r: usize,
    pub weight: QRat,
    pub prob: QRat,
}

/// The full growth tree with per-edge weights and running products.
pub fn transition_tree(m: &HessFn) -> Result<Vec<TraceNode>> {
    let n = m.n();
    if n > DEFAULT_BOUND {
        return Err(Error::SizeLimitExceeded { n, limit: DEFAULT_BOUND });
    }
    let mut out = Vec::new();
    let mut layer: BTreeMap<Syt, QRat> = BTreeMap::from([(Syt::empty(), QRat::one())]);
    for i in 1..=n {
        let r = threshold(m, i);
        let mut next = BTreeMap::new();
        for (t, p) in &layer {
            let runs = delta_vec(t, r).runs();
            for k in 0..=runs.l() {
                let w = runs.psi(k)?;
                let child = t.with_cell_in_column(runs.insertion_column(k));
                let prob = p * &w;
                out.push(TraceNode {
                    step: i,
                    parent: t.clone(),
                    child: child.clone(),
                    k,
                    r,
                    weight: w,
                    prob: prob.clone(),
                });
                next.insert(child, prob);
            }
        }
        layer = next;
    }
    Ok(out)
}

/// All standard tableaux of size `n`.
pub fn all_syt(n: usize) -> Vec<Syt> {
    partitions(n).iter().flat_map(enumerate_syt).collect()
}
