//! Homogeneous symmetric functions over ℚ(q) in the e, h, m and s bases.
//!
//! The elementary basis is canonical: products are unions of partitions
//! there, and the other bases are reached through Kostka matrices.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Signed;

use crate::combinat::{kostka, partitions, Partition};
use crate::error::{Error, Result};
use crate::qalg::QRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E,
    H,
    M,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }

    pub fn from_letter(s: &str) -> Result<Self> {
        match s {
            "e" | "E" => Ok(Basis::E),
            "h" | "H" => Ok(Basis::H),
            "m" | "M" => Ok(Basis::M),
            "s" | "S" => Ok(Basis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, QRat>,
}

impl SymFun {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFun { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The scalar `c` as a degree-0 function.
    pub fn scalar(c: QRat) -> Self {
        Self::from_terms(0, Basis::E, [(Partition::empty(), c)]).unwrap()
    }

    pub fn one() -> Self {
        Self::scalar(QRat::one())
    }

    /// The basis element `b_λ`.
    pub fn basis_elem(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        Self::from_terms(degree, basis, [(lambda, QRat::one())]).unwrap()
    }

    pub fn e(lambda: Partition) -> Self {
        Self::basis_elem(Basis::E, lambda)
    }

    /// `e_k`; `e_0 = 1`.
    pub fn e_k(k: usize) -> Self {
        Self::e(Partition::row(k))
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_elem(Basis::S, lambda)
    }

    /// Builds from `(λ, c)` pairs, merging repeated keys and dropping zeros.
    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, QRat)>,
    {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.size() });
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: &QRat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
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

    pub fn coeff(&self, lambda: &Partition) -> QRat {
        self.coeffs.get(lambda).cloned().unwrap_or_else(QRat::zero)
    }

    /// Terms in lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &QRat)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        if c.is_zero() {
            return out;
        }
        out.coeffs = self.coeffs.iter().map(|(l, a)| (l.clone(), a * c)).collect();
        out
    }

    pub fn map_coeffs<F: FnMut(&QRat) -> QRat>(&self, mut f: F) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), &f(a));
        }
        out
    }

    pub fn checked_add(&self, other: &SymFun) -> Result<SymFun> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in other.coeffs {
            out.add_term(l, &c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFun) -> Result<SymFun> {
        self.checked_add(&-other)
    }

    /// Product, computed in the e basis and returned there.
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let a = self.to_e();
        let b = other.to_e();
        let mut out = Self::zero(a.degree + b.degree, Basis::E);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                out.add_term(la.union(lb), &(ca * cb));
            }
        }
        out
    }

    pub fn to_basis(&self, basis: Basis) -> SymFun {
        if basis == self.basis {
            return self.clone();
        }
        let e = self.to_e();
        match basis {
            Basis::E => e,
            Basis::S => e_to_schur(&e),
            Basis::M => schur_to_monomial(&e_to_schur(&e)),
            Basis::H => e_to_h(&e),
        }
    }

    pub fn to_e(&self) -> SymFun {
        match self.basis {
            Basis::E => self.clone(),
            Basis::S => schur_to_e(self),
            Basis::M => schur_to_e(&monomial_to_schur(self)),
            Basis::H => h_basis_to_e(self),
        }
    }

    pub fn to_schur(&self) -> SymFun {
        self.to_basis(Basis::S)
    }

    pub fn to_monomial(&self) -> SymFun {
        self.to_basis(Basis::M)
    }

    /// The involution `ω`, returned in the e basis.
    pub fn omega(&self) -> SymFun {
        // ω(Σ c_λ e_λ) = Σ c_λ h_λ; reading the e-coefficients as
        // h-coefficients and expanding does exactly that.
        let e = self.to_e();
        let as_h = SymFun { degree: e.degree, basis: Basis::H, coeffs: e.coeffs };
        h_basis_to_e(&as_h)
    }

    /// Coefficients specialized at `q = q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BTreeMap<Partition, BigRational>> {
        self.coeffs.iter().map(|(l, c)| Ok((l.clone(), c.eval_at(q0)?))).collect()
    }

    /// True when every e-coefficient is nonnegative at `q = 1`.
    pub fn is_e_positive_at_one(&self) -> Result<bool> {
        let one = BigRational::from_integer(1.into());
        Ok(self.to_e().eval_at(&one)?.values().all(|c| !c.is_negative()))
    }

    /// Applies `q ↦ q0` to every coefficient, keeping the result in ℚ(q).
    pub fn specialize(&self, q0: &BigRational) -> Result<SymFun> {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), &QRat::from_rational(c.eval_at(q0)?));
        }
        Ok(out)
    }
}

/// `s`-coefficient of `λ` is `Σ_μ c_μ K_{λ',μ}`.
fn e_to_schur(f: &SymFun) -> SymFun {
    let mut out = SymFun::zero(f.degree, Basis::S);
    for lambda in partitions(f.degree) {
        let conj = lambda.conjugate();
        let mut acc = QRat::zero();
        for (mu, c) in &f.coeffs {
            let k = kostka(&conj, mu.parts()).unwrap();
            if k != 0 {
                acc += &(c * &QRat::from_int(k as i64));
            }
        }
        out.add_term(lambda, &acc);
    }
    out
}

/// Inverts [`e_to_schur`] by back-substitution in lex-ascending order.
pub fn schur_to_e(f: &SymFun) -> SymFun {
    assert_eq!(f.basis, Basis::S);
    let mut parts = partitions(f.degree);
    parts.reverse();
    let mut solved: Vec<(Partition, QRat)> = Vec::new();
    for nu in parts {
        let mut c = f.coeff(&nu.conjugate());
        for (mu, cm) in &solved {
            let k = kostka(&nu, mu.parts()).unwrap();
            if k != 0 {
                c -= &(cm * &QRat::from_int(k as i64));
            }
        }
        solved.push((nu, c));
    }
    SymFun::from_terms(f.degree, Basis::E, solved).unwrap()
}

fn schur_to_monomial(f: &SymFun) -> SymFun {
    let mut out = SymFun::zero(f.degree, Basis::M);
    for nu in partitions(f.degree) {
        let mut acc = QRat::zero();
        for (lambda, a) in &f.coeffs {
            let k = kostka(lambda, nu.parts()).unwrap();
            if k != 0 {
                acc += &(a * &QRat::from_int(k as i64));
            }
        }
        out.add_term(nu, &acc);
    }
    out
}

/// Inverts [`schur_to_monomial`] in lex-descending order.
fn monomial_to_schur(f: &SymFun) -> SymFun {
    let mut solved: Vec<(Partition, QRat)> = Vec::new();
    for nu in partitions(f.degree) {
        let mut a = f.coeff(&nu);
        for (lambda, al) in &solved {
            let k = kostka(lambda, nu.parts()).unwrap();
            if k != 0 {
                a -= &(al * &QRat::from_int(k as i64));
            }
        }
        solved.push((nu, a));
    }
    SymFun::from_terms(f.degree, Basis::S, solved).unwrap()
}

thread_local! {
    static H_PRODUCTS: RefCell<HashMap<Partition, SymFun>> = RefCell::new(HashMap::new());
}

/// e-expansion of `h_n` from `h_n = Σ_{i=1}^n (-1)^{i-1} e_i h_{n-i}`.
pub fn h_to_e(n: usize) -> SymFun {
    h_product_to_e(&Partition::row(n))
}

/// e-expansion of `h_λ`.
fn h_product_to_e(lambda: &Partition) -> SymFun {
    if let Some(f) = H_PRODUCTS.with(|m| m.borrow().get(lambda).cloned()) {
        return f;
    }
    let f = match lambda.parts() {
        [] => SymFun::one(),
        [n] => {
            let n = *n;
            let mut acc = SymFun::zero(n, Basis::E);
            for i in 1..=n {
                let sign = if i % 2 == 1 { QRat::one() } else { QRat::from_int(-1) };
                let term = SymFun::e_k(i).mul(&h_to_e(n - i)).scale(&sign);
                acc = acc.checked_add(&term).unwrap();
            }
            acc
        }
        [first, rest @ ..] => {
            let rest = Partition::new(rest.to_vec()).unwrap();
            h_to_e(*first).mul(&h_product_to_e(&rest))
        }
    };
    H_PRODUCTS.with(|m| m.borrow_mut().insert(lambda.clone(), f.clone()));
    f
}

fn h_basis_to_e(f: &SymFun) -> SymFun {
    let mut out = SymFun::zero(f.degree, Basis::E);
    for (lambda, c) in &f.coeffs {
        for (mu, d) in &h_product_to_e(lambda).coeffs {
            out.add_term(mu.clone(), &(c * d));
        }
    }
    out
}

/// `ω` swaps e and h, so `e_λ = Σ D_{λμ} h_μ` whenever `h_λ = Σ D_{λμ} e_μ`.
fn e_to_h(f: &SymFun) -> SymFun {
    let mut out = SymFun::zero(f.degree, Basis::H);
    for (lambda, c) in &f.coeffs {
        for (mu, d) in &h_product_to_e(lambda).coeffs {
            out.add_term(mu.clone(), &(c * d));
        }
    }
    out
}

impl Add<&SymFun> for &SymFun {
    type Output = SymFun;
    /// Panics on a degree mismatch; see [`SymFun::checked_add`].
    fn add(self, rhs: &SymFun) -> SymFun {
        self.checked_add(rhs).expect("adding symmetric functions of different degrees")
    }
}

impl Sub<&SymFun> for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        self.checked_sub(rhs).expect("subtracting symmetric functions of different degrees")
    }
}

impl Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        self.map_coeffs(|c| -c)
    }
}

impl Mul<&SymFun> for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        SymFun::mul(self, rhs)
    }
}

impl fmt::Display for SymFun {
    /// One `b[λ]: coeff` line per term, partitions in reverse lexicographic
    /// order. Degree 0 prints the bare scalar and zero prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.coeff(&Partition::empty()));
        }
        let b = self.basis.letter();
        for (i, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{b}{lambda}: {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::QPoly;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn e(v: &[usize]) -> SymFun {
        SymFun::e(p(v))
    }

    fn s(v: &[usize]) -> SymFun {
        SymFun::s(p(v))
    }

    fn lin(basis: Basis, terms: &[(&[usize], i64)]) -> SymFun {
        let deg = terms[0].0.iter().sum();
        SymFun::from_terms(deg, basis, terms.iter().map(|(l, c)| (p(l), QRat::from_int(*c)))).unwrap()
    }

    #[test]
    fn e_to_schur_examples() {
        assert_eq!(e(&[2]).to_schur(), s(&[1, 1]));
        assert_eq!(e(&[1, 1]).to_schur(), lin(Basis::S, &[(&[2], 1), (&[1, 1], 1)]));
        assert!(SymFun::zero(3, Basis::E).to_schur().is_zero());
    }

    #[test]
    fn schur_to_e_examples() {
        assert_eq!(s(&[1, 1]).to_e(), e(&[2]));
        assert_eq!(s(&[2]).to_e(), lin(Basis::E, &[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(s(&[1, 1, 1, 1]).to_e(), e(&[4]));
    }

    #[test]
    fn h_expansions() {
        assert_eq!(h_to_e(0), SymFun::one());
        assert_eq!(h_to_e(1), e(&[1]));
        assert_eq!(h_to_e(2), lin(Basis::E, &[(&[1, 1], 1), (&[2], -1)]));
        // h_n = s_(n)
        for n in 1..=6 {
            assert_eq!(h_to_e(n), s(&[n]).to_e());
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(e(&[1]).omega(), e(&[1]));
        assert_eq!(e(&[2]).omega(), lin(Basis::E, &[(&[1, 1], 1), (&[2], -1)]));
        // ω(s_λ) = s_λ'
        for lambda in partitions(5) {
            assert_eq!(SymFun::s(lambda.clone()).omega(), SymFun::s(lambda.conjugate()).to_e());
        }
    }

    #[test]
    fn products() {
        assert_eq!(e(&[2]).mul(&e(&[2, 1])), e(&[2, 2, 1]));
        assert_eq!(e(&[3, 1]).mul(&SymFun::one()), e(&[3, 1]));
        assert_eq!(e(&[1]).mul(&e(&[1])).to_schur(), lin(Basis::S, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(e(&[2]).to_monomial(), SymFun::basis_elem(Basis::M, p(&[1, 1])));
        assert_eq!(s(&[2]).to_monomial(), lin(Basis::M, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(e(&[1]).to_monomial(), SymFun::basis_elem(Basis::M, p(&[1])));
    }

    #[test]
    fn round_trips() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                let f = SymFun::e(lambda.clone());
                assert_eq!(f.to_schur().to_e(), f);
                assert_eq!(f.to_monomial().to_e(), f);
                assert_eq!(f.to_basis(Basis::H).to_e(), f);
                let g = SymFun::s(lambda);
                assert_eq!(g.to_e().to_schur(), g);
            }
        }
    }

    #[test]
    fn e_positivity() {
        assert!(e(&[2, 1]).is_e_positive_at_one().unwrap());
        assert!(!s(&[2]).is_e_positive_at_one().unwrap());
        // (q - 1) e_2 vanishes at q = 1
        let f = e(&[2]).scale(&QRat::from_poly(QPoly::from_ints(&[-1, 1])));
        assert!(f.is_e_positive_at_one().unwrap());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        assert_eq!(e(&[1]).checked_add(&e(&[2])), Err(Error::DegreeMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn display_order() {
        let f = lin(Basis::E, &[(&[1, 1], 1), (&[2], -1)]);
        assert_eq!(f.to_string(), "e[2]: -1\ne[1,1]: 1");
        assert_eq!(SymFun::one().to_string(), "1");
        assert_eq!(SymFun::zero(2, Basis::S).to_string(), "0");
    }

    fn arb_symfun(max_deg: usize) -> impl Strategy<Value = SymFun> {
        (0..=max_deg).prop_flat_map(|d| {
            let parts = partitions(d);
            let n = parts.len();
            prop::collection::vec((-3i64..4, 0usize..3), n).prop_map(move |cs| {
                let terms = parts.iter().cloned().zip(cs).map(|(l, (c, e))| {
                    (l, QRat::from_poly(QPoly::monomial(BigRational::from_integer(c.into()), e)))
                });
                SymFun::from_terms(d, Basis::E, terms).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn omega_involution(f in arb_symfun(5)) {
            prop_assert_eq!(f.omega().omega(), f);
        }

        #[test]
        fn omega_is_multiplicative(f in arb_symfun(3), g in arb_symfun(3)) {
            prop_assert_eq!(f.mul(&g).omega(), f.omega().mul(&g.omega()));
        }

        #[test]
        fn mul_commutes_and_associates(f in arb_symfun(4), g in arb_symfun(4), h in arb_symfun(4)) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }
    }
}
