//! Reference computation of `X_m(x; q)` straight from proper colorings.
//!
//! Nothing here touches the tableau, permutation or transition models, so
//! it serves as the independent check for all of them.

use rayon::prelude::*;

use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;
use crate::qalg::{QPoly, QRat};
use crate::symfun::{Basis, SymFun};

pub const DEFAULT_BOUND: usize = 7;

/// Number of edges `i < j ≤ m(i)` with `κ(i) > κ(j)`.
pub fn inv_coloring(m: &HessFn, kappa: &[usize]) -> Result<usize> {
    if kappa.len() != m.n() {
        return Err(Error::SizeMismatch(format!("coloring of length {} for n = {}", kappa.len(), m.n())));
    }
    let mut inv = 0;
    for (i, j) in m.edges() {
        let (a, b) = (kappa[i - 1], kappa[j - 1]);
        if a == b {
            return Err(Error::NotProper(i, j));
        }
        if a > b {
            inv += 1;
        }
    }
    Ok(inv)
}

/// `Σ q^inv` over proper colorings using color `c + 1` exactly `content[c]` times.
pub fn monomial_coefficient(m: &HessFn, content: &[usize]) -> Result<QPoly> {
    let total: usize = content.iter().sum();
    if total != m.n() {
        return Err(Error::SizeMismatch(format!("content of size {total} for n = {}", m.n())));
    }
    let mut counts = vec![0u64; m.edges().len() + 1];
    let mut remaining = content.to_vec();
    let mut kappa = Vec::with_capacity(m.n());
    fill(m, &mut remaining, &mut kappa, 0, &mut counts);
    Ok(QPoly::from_counts(&counts))
}

fn fill(m: &HessFn, remaining: &mut [usize], kappa: &mut Vec<usize>, inv: usize, counts: &mut [u64]) {
    let i = kappa.len() + 1;
    if i > m.n() {
        counts[inv] += 1;
        return;
    }
    for c in 0..remaining.len() {
        if remaining[c] == 0 {
            continue;
        }
        let mut extra = 0;
        let mut proper = true;
        // Earlier neighbours of i are the j < i with m(j) ≥ i.
        for j in (1..i).rev() {
            if m.m(j) < i {
                break;
            }
            let kj = kappa[j - 1];
            if kj == c {
                proper = false;
                break;
            }
            if kj > c {
                extra += 1;
            }
        }
        if !proper {
            continue;
        }
        remaining[c] -= 1;
        kappa.push(c);
        fill(m, remaining, kappa, inv + extra, counts);
        kappa.pop();
        remaining[c] += 1;
    }
}

/// `X_m` in the monomial basis, for `n ≤ DEFAULT_BOUND`.
pub fn x_colorings(m: &HessFn) -> Result<SymFun> {
    x_colorings_bounded(m, DEFAULT_BOUND)
}

pub fn x_colorings_bounded(m: &HessFn, limit: usize) -> Result<SymFun> {
    let n = m.n();
    if n > limit {
        return Err(Error::SizeLimitExceeded { n, limit });
    }
    let terms = partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let c = monomial_coefficient(m, lambda.parts())?;
            Ok((lambda, QRat::from_poly(c)))
        })
        .collect::<Result<Vec<(Partition, QRat)>>>()?;
    SymFun::from_terms(n, Basis::M, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_hess;
    use crate::qalg::q_int;

    #[test]
    fn inversions() {
        let p2 = HessFn::path(2);
        assert_eq!(inv_coloring(&p2, &[2, 1]).unwrap(), 1);
        assert_eq!(inv_coloring(&p2, &[1, 2]).unwrap(), 0);
        assert_eq!(inv_coloring(&p2, &[1, 1]), Err(Error::NotProper(1, 2)));
        let k5 = HessFn::complete(5);
        assert_eq!(inv_coloring(&k5, &[1, 2, 3, 4, 5]).unwrap(), 0);
    }

    #[test]
    fn small_cases() {
        assert_eq!(x_colorings(&HessFn::path(1)).unwrap(), SymFun::basis_elem(Basis::M, Partition::row(1)));
        let x2 = x_colorings(&HessFn::path(2)).unwrap();
        assert_eq!(x2.to_e(), SymFun::e_k(2).scale(&QRat::from_poly(q_int(2))));
        let e1 = SymFun::e_k(1);
        let cube = e1.mul(&e1).mul(&e1);
        assert_eq!(x_colorings(&HessFn::diagonal(3)).unwrap(), cube.to_monomial());
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            x_colorings(&HessFn::path(8)),
            Err(Error::SizeLimitExceeded { n: 8, limit: DEFAULT_BOUND })
        );
    }

    #[test]
    fn coefficient_is_symmetric() {
        // Different orderings of the same content give the same count.
        let contents: [&[usize]; 3] = [&[2, 1, 1, 1], &[3, 2], &[2, 2, 1]];
        for m in enumerate_hess(5) {
            for c in contents {
                let sorted = c.to_vec();
                let mut rev = c.to_vec();
                rev.reverse();
                let mut rot = c.to_vec();
                rot.rotate_left(1);
                let a = monomial_coefficient(&m, &sorted).unwrap();
                assert_eq!(monomial_coefficient(&m, &rev).unwrap(), a, "{m} {c:?}");
                assert_eq!(monomial_coefficient(&m, &rot).unwrap(), a, "{m} {c:?}");
            }
        }
    }

    #[test]
    fn multiplicative() {
        for n1 in 1..=3 {
            for n2 in 1..=3 {
                for a in enumerate_hess(n1) {
                    for b in enumerate_hess(n2) {
                        let lhs = x_colorings(&a.sum(&b)).unwrap().to_e();
                        let rhs = x_colorings(&a).unwrap().mul(&x_colorings(&b).unwrap());
                        assert_eq!(lhs, rhs, "{a} + {b}");
                    }
                }
            }
        }
    }
}
