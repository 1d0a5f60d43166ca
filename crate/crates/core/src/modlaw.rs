//! Modular triples, the restricted modular law, and reduction of any
//! Hessenberg function to a combination of disjoint unions of paths.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfun::{path_g_closed, PermStats};
use crate::hessenberg::{enumerate_hess, HessFn, Shape};
use crate::qalg::{qr_int, QPoly, QRat};
use crate::symfun::{Basis, SymFun};
use crate::{hikita, ptab};

/// Largest `n` accepted by [`reduce`].
pub const DEFAULT_BOUND: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleKind {
    TypeI,
    /// Type II at any index, including `i = 1`.
    TypeII,
    /// Type II with `i ≠ 1`.
    RestrictedTypeII,
}

/// `(m, m′, m″)` with the law `(1+q) f(m′) = q f(m) + f(m″)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularTriple {
    pub m: HessFn,
    pub m1: HessFn,
    pub m2: HessFn,
    pub kind: TripleKind,
    pub index: usize,
}

impl fmt::Display for ModularTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at i = {}: {} {} {}", self.kind, self.index, self.m, self.m1, self.m2)
    }
}

fn agree_except(a: &HessFn, b: &HessFn, skip: &[usize]) -> bool {
    a.n() == b.n() && (1..=a.n()).all(|j| skip.contains(&j) || a.m(j) == b.m(j))
}

/// The type I conditions at index `i`.
pub fn is_type_one(m: &HessFn, m1: &HessFn, m2: &HessFn, i: usize) -> bool {
    let n = m1.n();
    if i == 0 || i >= n || m.n() != n || m2.n() != n {
        return false;
    }
    let v = m1.m(i);
    m.m(i) + 1 == v
        && m2.m(i) == v + 1
        && m1.m(i - 1) < v
        && v < m1.m(i + 1)
        && agree_except(m, m1, &[i])
        && agree_except(m2, m1, &[i])
        && v < n
        && m1.m(v) == m1.m(v + 1)
}

/// The type II conditions at index `i` (no restriction on `i`).
pub fn is_type_two(m: &HessFn, m1: &HessFn, m2: &HessFn, i: usize) -> bool {
    let n = m1.n();
    if i == 0 || i >= n || m.n() != n || m2.n() != n {
        return false;
    }
    m1.m(i) + 1 == m1.m(i + 1)
        && m.m(i) == m1.m(i)
        && m2.m(i) == m1.m(i) + 1
        && m.m(i + 1) + 1 == m1.m(i + 1)
        && m2.m(i + 1) == m1.m(i + 1)
        && agree_except(m, m1, &[i, i + 1])
        && agree_except(m2, m1, &[i, i + 1])
        && m1.preimage(i).is_empty()
}

impl ModularTriple {
    pub fn is_valid(&self) -> bool {
        let i = self.index;
        match self.kind {
            TripleKind::TypeI => is_type_one(&self.m, &self.m1, &self.m2, i),
            TripleKind::TypeII => is_type_two(&self.m, &self.m1, &self.m2, i),
            TripleKind::RestrictedTypeII => i != 1 && is_type_two(&self.m, &self.m1, &self.m2, i),
        }
    }

    /// `(1+q) f(m′) − q f(m) − f(m″)`.
    pub fn defect(&self, f: &impl Fn(&HessFn) -> SymFun) -> SymFun {
        law_defect(&f(&self.m), &f(&self.m1), &f(&self.m2))
    }
}

fn law_defect(fm: &SymFun, fm1: &SymFun, fm2: &SymFun) -> SymFun {
    let one_q = QRat::from_poly(QPoly::from_ints(&[1, 1]));
    let lhs = fm1.scale(&one_q);
    let rhs = &fm.scale(&QRat::q_pow(1)) + fm2;
    (&lhs - &rhs).to_e()
}

/// All triples of the given kind in `H_n`, by scanning `(m′, i)`.
pub fn enumerate_triples(n: usize, kind: TripleKind) -> Vec<ModularTriple> {
    let mut out = Vec::new();
    for m1 in enumerate_hess(n) {
        for i in 1..n {
            let pair = match kind {
                TripleKind::TypeI => type_one_at(&m1, i),
                TripleKind::TypeII => type_two_at(&m1, i),
                TripleKind::RestrictedTypeII if i != 1 => type_two_at(&m1, i),
                TripleKind::RestrictedTypeII => None,
            };
            if let Some((m, m2)) = pair {
                let t = ModularTriple { m, m1: m1.clone(), m2, kind, index: i };
                debug_assert!(t.is_valid());
                out.push(t);
            }
        }
    }
    out
}

fn type_one_at(m1: &HessFn, i: usize) -> Option<(HessFn, HessFn)> {
    let v = m1.m(i);
    let m = m1.with_value(i, v.checked_sub(1)?).ok()?;
    let m2 = m1.with_value(i, v + 1).ok()?;
    is_type_one(&m, m1, &m2, i).then_some((m, m2))
}

fn type_two_at(m1: &HessFn, i: usize) -> Option<(HessFn, HessFn)> {
    let m = m1.with_value(i + 1, m1.m(i + 1).checked_sub(1)?).ok()?;
    let m2 = m1.with_value(i, m1.m(i) + 1).ok()?;
    is_type_two(&m, m1, &m2, i).then_some((m, m2))
}

/// Outcome of checking the law over a family of triples.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LawReport {
    pub checked: usize,
    pub violations: Vec<ModularTriple>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `f` once per Hessenberg function of size `n` and checks every given triple.
pub fn check_triples<F>(f: F, n: usize, triples: &[ModularTriple]) -> LawReport
where
    F: Fn(&HessFn) -> SymFun + Sync,
{
    let values: HashMap<HessFn, SymFun> =
        enumerate_hess(n).into_par_iter().map(|m| (m.clone(), f(&m))).collect();
    let violations = triples
        .par_iter()
        .filter(|t| !law_defect(&values[&t.m], &values[&t.m1], &values[&t.m2]).is_zero())
        .cloned()
        .collect();
    LawReport { checked: triples.len(), violations }
}

/// Type I and restricted type II triples of size `n`.
pub fn restricted_triples(n: usize) -> Vec<ModularTriple> {
    let mut t = enumerate_triples(n, TripleKind::TypeI);
    t.extend(enumerate_triples(n, TripleKind::RestrictedTypeII));
    t
}

pub fn check_restricted_modular_law<F>(f: F, n: usize) -> LawReport
where
    F: Fn(&HessFn) -> SymFun + Sync,
{
    check_triples(f, n, &restricted_triples(n))
}

/// `(m_0, m_1)` for flat `m`: lower `m(β)` by 2 and by 1.
pub fn split_flat(m: &HessFn) -> Result<(HessFn, HessFn)> {
    let Shape::Flat { beta, .. } = m.classify() else {
        return Err(Error::NotFlat(m.values().to_vec()));
    };
    let v = m.m(beta);
    Ok((m.with_value(beta, v - 2)?, m.with_value(beta, v - 1)?))
}

/// The four functions produced from a non-flat `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonFlatSplit {
    /// `m` with `m(α+1)` lowered by 1.
    pub m0: HessFn,
    /// `m` with `m(α)` raised by 1.
    pub m2: HessFn,
    /// `m2` with `m2(β)` lowered by 2.
    pub m0_1: HessFn,
    /// `m2` with `m2(β)` lowered by 1; same area as `m`.
    pub m_1: HessFn,
}

pub fn split_nonflat(m: &HessFn) -> Result<NonFlatSplit> {
    let Shape::NonFlat { alpha, beta } = m.classify() else {
        return Err(Error::NotNonFlat(m.values().to_vec()));
    };
    let m0 = m.with_value(alpha + 1, m.m(alpha + 1) - 1)?;
    let m2 = m.with_value(alpha, m.m(alpha) + 1)?;
    let v = m2.m(beta);
    let m0_1 = m2.with_value(beta, v - 2)?;
    let m_1 = m2.with_value(beta, v - 1)?;
    Ok(NonFlatSplit { m0, m2, m0_1, m_1 })
}

/// `Σ c · f(p_{n_1} + ... + p_{n_d})`, keyed by path lengths in left-to-right order.
///
/// The order matters: `E` of a disjoint union is `E` of the first component
/// times `X` of the others, so it is not symmetric under swapping components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCombination {
    n: usize,
    terms: BTreeMap<Vec<usize>, QRat>,
}

impl PathCombination {
    pub fn single(paths: Vec<usize>) -> Self {
        let n = paths.iter().sum();
        PathCombination { n, terms: BTreeMap::from([(paths, QRat::one())]) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, QRat> {
        &self.terms
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<usize>, QRat)>) -> Result<Self> {
        let mut out = PathCombination { n, terms: BTreeMap::new() };
        for (paths, c) in terms {
            let size: usize = paths.iter().sum();
            if size != n || paths.contains(&0) {
                return Err(Error::SizeMismatch(format!("paths {paths:?} for n = {n}")));
            }
            out.add_term(paths, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, paths: Vec<usize>, c: &QRat) {
        let entry = self.terms.entry(paths).or_insert_with(QRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn add_scaled(&mut self, other: &PathCombination, c: &QRat) {
        for (paths, v) in &other.terms {
            self.add_term(paths.clone(), &(v * c));
        }
    }

    /// `Σ c · base(paths)`.
    pub fn evaluate<F>(&self, degree: usize, mut base: F) -> Result<SymFun>
    where
        F: FnMut(&[usize]) -> Result<SymFun>,
    {
        if degree != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: degree });
        }
        let mut acc = SymFun::zero(self.n, Basis::E);
        for (paths, c) in &self.terms {
            let v = base(paths)?;
            acc = acc.checked_add(&v.to_e().scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for PathCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let p: Vec<String> = p.iter().map(ToString::to_string).collect();
                format!("[{}]: {c}", p.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Memoized reduction, recording every function visited.
#[derive(Debug, Default)]
pub struct Reducer {
    memo: HashMap<HessFn, PathCombination>,
    max_depth: usize,
}

impl Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reduce(&mut self, m: &HessFn) -> Result<PathCombination> {
        if m.n() > DEFAULT_BOUND {
            return Err(Error::SizeLimitExceeded { n: m.n(), limit: DEFAULT_BOUND });
        }
        Ok(self.go(m, 0))
    }

    /// Longest chain of reduction steps seen so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// Every function the reduction passed through.
    pub fn visited(&self) -> BTreeSet<HessFn> {
        self.memo.keys().cloned().collect()
    }

    /// Visited functions that are unions of paths.
    pub fn leaves(&self) -> BTreeSet<HessFn> {
        self.memo.keys().filter(|m| m.is_union_of_paths().is_some()).cloned().collect()
    }

    fn go(&mut self, m: &HessFn, depth: usize) -> PathCombination {
        self.max_depth = self.max_depth.max(depth);
        if let Some(c) = self.memo.get(m) {
            return c.clone();
        }
        let one_q = QRat::from_poly(QPoly::from_ints(&[1, 1]));
        let q = QRat::q_pow(1);
        let mut out = PathCombination { n: m.n(), terms: BTreeMap::new() };
        match m.classify() {
            Shape::UnionOfPaths(parts) => out = PathCombination::single(parts),
            Shape::Flat { beta, .. } => {
                let (m0, m1) = split_flat(m).unwrap();
                let t = ModularTriple { m: m0.clone(), m1: m1.clone(), m2: m.clone(), kind: TripleKind::TypeI, index: beta };
                assert!(t.is_valid(), "flat step produced an invalid triple: {t}");
                // f(m) = (1+q) f(m_1) − q f(m_0)
                out.add_scaled(&self.go(&m1, depth + 1), &one_q);
                out.add_scaled(&self.go(&m0, depth + 1), &-&q);
            }
            Shape::NonFlat { alpha, beta } => {
                let s = split_nonflat(m).unwrap();
                let t2 = ModularTriple {
                    m: s.m0.clone(),
                    m1: m.clone(),
                    m2: s.m2.clone(),
                    kind: TripleKind::RestrictedTypeII,
                    index: alpha,
                };
                let t1 = ModularTriple {
                    m: s.m0_1.clone(),
                    m1: s.m_1.clone(),
                    m2: s.m2.clone(),
                    kind: TripleKind::TypeI,
                    index: beta,
                };
                assert!(t2.is_valid() && t1.is_valid(), "non-flat step produced invalid triples: {t2}; {t1}");
                // f(m) = f(m^(1)) + q/(1+q) (f(m_0) − f(m_0^(1)))
                let r = &q * &one_q.invert().unwrap();
                out.add_scaled(&self.go(&s.m_1, depth + 1), &QRat::one());
                out.add_scaled(&self.go(&s.m0, depth + 1), &r);
                out.add_scaled(&self.go(&s.m0_1, depth + 1), &-&r);
            }
        }
        self.memo.insert(m.clone(), out.clone());
        out
    }
}

pub fn reduce(m: &HessFn) -> Result<PathCombination> {
    Reducer::new().reduce(m)
}

/// Functions with a built-in value on unions of paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseFn {
    E,
    G,
    S,
}

impl BaseFn {
    /// The value on `m` computed directly from its defining model.
    pub fn direct(self, m: &HessFn) -> Result<SymFun> {
        match self {
            BaseFn::E => hikita::e_total(m),
            BaseFn::G => Ok(PermStats::new(m).g_total()),
            BaseFn::S => Ok(ptab::s_fun(m)?.to_e()),
        }
    }

    /// The value on `p_{n_1} + ... + p_{n_d}`.
    pub fn on_paths(self, paths: &[usize]) -> Result<SymFun> {
        self.direct(&HessFn::from_paths(paths))
    }
}

/// The closed form for `E` on `p_{n_1} + ... + p_{n_d}`.
///
/// `E` of a disjoint union is `E` of the first component times `X` of the
/// rest; on a path, `E_{p_n,k} = e_k g_{p_n,n−k}` and `X = Σ_k [k]_q E_{p_n,k}`.
pub fn path_closed_e(paths: &[usize]) -> SymFun {
    let on_path = |n: usize, weighted: bool| {
        (1..=n).fold(SymFun::zero(n, Basis::E), |s, k| {
            let w = if weighted { qr_int(k) } else { QRat::one() };
            &s + &SymFun::e_k(k).mul(&path_g_closed(n - k)).scale(&w)
        })
    };
    paths
        .iter()
        .enumerate()
        .fold(SymFun::one(), |acc, (i, &n)| acc.mul(&on_path(n, i > 0)))
}

pub fn evaluate(c: &PathCombination, base: BaseFn) -> Result<SymFun> {
    c.evaluate(c.n(), |p| base.on_paths(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfun::g_cap;

    fn h(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    #[test]
    fn no_triples_for_two() {
        for kind in [TripleKind::TypeI, TripleKind::TypeII, TripleKind::RestrictedTypeII] {
            assert!(enumerate_triples(2, kind).is_empty());
        }
    }

    #[test]
    fn drawn_triples_validate() {
        let (m, m1, m2) = (h(&[2, 3, 5, 6, 6, 7, 7]), h(&[2, 4, 5, 6, 6, 7, 7]), h(&[2, 5, 5, 6, 6, 7, 7]));
        assert!(is_type_one(&m, &m1, &m2, 2));
        assert!(enumerate_triples(7, TripleKind::TypeI).iter().any(|t| t.m1 == m1 && t.index == 2));
        let (m, m1, m2) = (h(&[2, 4, 5, 5, 6, 7, 7]), h(&[2, 4, 5, 6, 6, 7, 7]), h(&[2, 4, 6, 6, 6, 7, 7]));
        assert!(is_type_two(&m, &m1, &m2, 3));
        let t = ModularTriple { m, m1, m2, kind: TripleKind::RestrictedTypeII, index: 3 };
        assert!(t.is_valid());
    }

    #[test]
    fn restricted_excludes_first_index() {
        for n in 3..=6 {
            let full = enumerate_triples(n, TripleKind::TypeII);
            let restricted = enumerate_triples(n, TripleKind::RestrictedTypeII);
            assert!(restricted.iter().all(|t| t.index != 1));
            assert_eq!(full.iter().filter(|t| t.index != 1).count(), restricted.len());
            assert!(full.iter().any(|t| t.index == 1));
        }
    }

    #[test]
    fn flat_split_example() {
        let m = h(&[2, 4, 4, 4]);
        let (m0, m1) = split_flat(&m).unwrap();
        assert_eq!((m0.clone(), m1.clone()), (h(&[2, 2, 4, 4]), h(&[2, 3, 4, 4])));
        assert!(is_type_one(&m0, &m1, &m, 2));
        // Area is not modular.
        let area = |x: &HessFn| SymFun::scalar(QRat::from_int(x.area() as i64));
        assert!(!law_defect(&area(&m0), &area(&m1), &area(&m)).is_zero());
        assert_eq!(split_flat(&h(&[2, 4, 4, 5, 5])), Err(Error::NotFlat(vec![2, 4, 4, 5, 5])));
    }

    #[test]
    fn nonflat_split_example() {
        let m = h(&[2, 4, 4, 5, 5]);
        let s = split_nonflat(&m).unwrap();
        assert_eq!(s.m0, h(&[2, 4, 4, 4, 5]));
        assert_eq!(s.m2, h(&[2, 4, 5, 5, 5]));
        assert_eq!(s.m0_1, h(&[2, 2, 5, 5, 5]));
        assert_eq!(s.m_1, h(&[2, 3, 5, 5, 5]));
        assert!(s.m0.area() < m.area() && s.m0_1.area() < m.area());
        assert_eq!(s.m_1.area(), m.area());
        assert!(is_type_two(&s.m0, &m, &s.m2, 3));
        assert!(is_type_one(&s.m0_1, &s.m_1, &s.m2, 2));
        assert!(split_nonflat(&h(&[2, 4, 4, 4])).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&HessFn::path(3)).unwrap(), PathCombination::single(vec![3]));
        assert_eq!(reduce(&h(&[2, 3, 4, 5, 5])).unwrap().to_string(), "{[5]: 1}");
        let m = h(&[2, 4, 4, 4]);
        let (m0, m1) = split_flat(&m).unwrap();
        let mut want = PathCombination { n: 4, ..Default::default() };
        want.add_scaled(&reduce(&m1).unwrap(), &QRat::from_poly(QPoly::from_ints(&[1, 1])));
        want.add_scaled(&reduce(&m0).unwrap(), &-&QRat::q_pow(1));
        assert_eq!(reduce(&m).unwrap(), want);
    }

    #[test]
    fn reduction_tree_leaves() {
        let mut r = Reducer::new();
        let cert = r.reduce(&h(&[3, 4, 4, 5, 5])).unwrap();
        let drawn: BTreeSet<HessFn> = [
            [2, 3, 4, 5, 5],
            [2, 3, 3, 5, 5],
            [2, 2, 4, 5, 5],
            [2, 3, 4, 4, 5],
            [1, 3, 4, 5, 5],
            [2, 2, 3, 5, 5],
            [2, 2, 4, 4, 5],
            [1, 3, 3, 5, 5],
            [1, 2, 4, 5, 5],
            [1, 3, 4, 4, 5],
            [1, 2, 3, 5, 5],
            [1, 2, 4, 4, 5],
        ]
        .iter()
        .map(|v| h(v))
        .collect();
        assert_eq!(r.leaves(), drawn);
        for paths in cert.terms().keys() {
            assert!(drawn.contains(&HessFn::from_paths(paths)));
        }
    }

    #[test]
    fn evaluation_matches_direct() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                let c = reduce(&m).unwrap();
                assert_eq!(evaluate(&c, BaseFn::E).unwrap(), BaseFn::E.direct(&m).unwrap(), "{m}");
            }
        }
    }

    #[test]
    fn closed_form_base() {
        for parts in [vec![1], vec![4], vec![2, 3], vec![3, 1, 2]] {
            assert_eq!(path_closed_e(&parts), BaseFn::E.on_paths(&parts).unwrap(), "{parts:?}");
        }
        let e22 = SymFun::e(crate::Partition::new(vec![2, 2]).unwrap());
        assert_eq!(SymFun::e_k(2).mul(&path_g_closed(2)), e22.scale(&QRat::q_pow(1)));
    }

    #[test]
    fn degree_mismatch() {
        let c = reduce(&HessFn::path(3)).unwrap();
        assert!(matches!(c.evaluate(4, |p| BaseFn::E.on_paths(p)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn laws_hold_small() {
        for n in 3..=4 {
            assert!(check_restricted_modular_law(|m| hikita::e_total(m).unwrap(), n).passed());
            for k in 1..=n {
                assert!(check_restricted_modular_law(|m| g_cap(m, k), n).passed());
            }
        }
    }
}
