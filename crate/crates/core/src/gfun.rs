//! The g-functions: signed, q-weighted sums over permutations bounded by `m`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::combinat::{compositions, Partition};
use crate::hessenberg::HessFn;
use crate::qalg::{q_int, QPoly, QRat};
use crate::symfun::{h_to_e, Basis, SymFun};

/// All `σ` with `σ(i) ≤ m(i)`, in lexicographic order of one-line notation.
pub fn hess_permutations(m: &HessFn) -> Vec<Vec<usize>> {
    fn go(m: &HessFn, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len() + 1;
        if i > m.n() {
            out.push(cur.clone());
            return;
        }
        for v in 1..=m.m(i) {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(m, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut vec![false; m.n() + 1], &mut Vec::new(), &mut out);
    out
}

/// A permutation written as its cycles, each led by its minimum, with
/// cycles ordered by increasing minima, then concatenated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWord {
    pub perm: Vec<usize>,
    pub word: Vec<usize>,
    pub cycle_sizes: Vec<usize>,
}

/// `σ` in one-line notation (values `1..=n`).
pub fn cycle_word(sigma: &[usize]) -> CycleWord {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    let mut word = Vec::with_capacity(n);
    let mut cycle_sizes = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let before = word.len();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            word.push(x);
            x = sigma[x - 1];
        }
        cycle_sizes.push(word.len() - before);
    }
    CycleWord { perm: sigma.to_vec(), word, cycle_sizes }
}

/// Pairs `i < j ≤ m(i)` with `j` before `i` in the cycle word.
pub fn wt(m: &HessFn, sigma: &[usize]) -> usize {
    wt_of_word(m, &cycle_word(sigma).word)
}

fn wt_of_word(m: &HessFn, word: &[usize]) -> usize {
    let mut pos = vec![0; word.len() + 1];
    for (p, &x) in word.iter().enumerate() {
        pos[x] = p;
    }
    m.edges().into_iter().filter(|&(i, j)| pos[j] < pos[i]).count()
}

thread_local! {
    static RHO: RefCell<HashMap<usize, SymFun>> = RefCell::new(HashMap::new());
    static OMEGA_RHO: RefCell<HashMap<Partition, SymFun>> = RefCell::new(HashMap::new());
}

/// `ρ_k` from `[k]_q h_k = Σ_{i=1}^k h_{k-i} ρ_i`, with `ρ_0 = 1`.
pub fn rho(k: usize) -> SymFun {
    if let Some(f) = RHO.with(|c| c.borrow().get(&k).cloned()) {
        return f;
    }
    let f = if k == 0 {
        SymFun::one()
    } else {
        let mut acc = h_to_e(k).scale(&QRat::from_poly(q_int(k)));
        for i in 1..k {
            acc = &acc - &h_to_e(k - i).mul(&rho(i));
        }
        acc
    };
    RHO.with(|c| c.borrow_mut().insert(k, f.clone()));
    f
}

/// `ω(ρ_λ) = ω(ρ_{λ_1} ρ_{λ_2} ...)`.
pub fn omega_rho(lambda: &Partition) -> SymFun {
    if let Some(f) = OMEGA_RHO.with(|c| c.borrow().get(lambda).cloned()) {
        return f;
    }
    let f = lambda.parts().iter().fold(SymFun::one(), |acc, &p| acc.mul(&rho(p))).omega();
    OMEGA_RHO.with(|c| c.borrow_mut().insert(lambda.clone(), f.clone()));
    f
}

/// The q-counts `Σ q^{wt(σ)}` grouped by (size of the cycle through 1,
/// sorted sizes of the other cycles).
#[derive(Clone, Debug)]
pub struct PermStats {
    n: usize,
    groups: BTreeMap<(usize, Partition), Vec<u64>>,
}

impl PermStats {
    pub fn new(m: &HessFn) -> Self {
        let mut groups: BTreeMap<(usize, Partition), Vec<u64>> = BTreeMap::new();
        for sigma in hess_permutations(m) {
            let cw = cycle_word(&sigma);
            let w = wt_of_word(m, &cw.word);
            let first = cw.cycle_sizes[0];
            let rest = Partition::from_multiset(cw.cycle_sizes[1..].to_vec());
            let counts = groups.entry((first, rest)).or_default();
            if counts.len() <= w {
                counts.resize(w + 1, 0);
            }
            counts[w] += 1;
        }
        PermStats { n: m.n(), groups }
    }

    /// `g_{m,k}` for `0 ≤ k < n`.
    pub fn g(&self, k: usize) -> SymFun {
        let n = self.n;
        assert!(k < n, "g_{{m,k}} needs k < n");
        let mut acc = SymFun::zero(k, Basis::E);
        for ((t1, rest), counts) in &self.groups {
            if t1 + k < n {
                continue;
            }
            let d = t1 + k - n;
            let sign = if d.is_multiple_of(2) { 1 } else { -1 };
            let coeff = &QRat::from_poly(QPoly::from_counts(counts)) * &QRat::from_int(sign);
            let term = h_to_e(d).mul(&omega_rho(rest)).scale(&coeff);
            acc = &acc + &term;
        }
        acc
    }

    /// `Σ_σ q^{wt(σ)} ω(ρ_{type(σ)})`.
    pub fn x(&self) -> SymFun {
        let mut acc = SymFun::zero(self.n, Basis::E);
        for ((t1, rest), counts) in &self.groups {
            let full = rest.union(&Partition::row(*t1));
            let coeff = QRat::from_poly(QPoly::from_counts(counts));
            acc = &acc + &omega_rho(&full).scale(&coeff);
        }
        acc
    }

    /// `G_{m,k} = e_k g_{m,n-k}` for `1 ≤ k ≤ n`.
    pub fn g_cap(&self, k: usize) -> SymFun {
        assert!(1 <= k && k <= self.n);
        SymFun::e_k(k).mul(&self.g(self.n - k))
    }

    pub fn g_total(&self) -> SymFun {
        (1..=self.n).fold(SymFun::zero(self.n, Basis::E), |acc, k| &acc + &self.g_cap(k))
    }
}

pub fn g(m: &HessFn, k: usize) -> SymFun {
    PermStats::new(m).g(k)
}

pub fn g_cap(m: &HessFn, k: usize) -> SymFun {
    PermStats::new(m).g_cap(k)
}

pub fn g_total(m: &HessFn) -> SymFun {
    PermStats::new(m).g_total()
}

pub fn x_an(m: &HessFn) -> SymFun {
    PermStats::new(m).x()
}

/// `Σ_{α ⊨ j} e_α ∏([α_i]_q − 1)`, the value of `g_{p_n, j}` on paths.
pub fn path_g_closed(j: usize) -> SymFun {
    let mut acc = SymFun::zero(j, Basis::E);
    for alpha in compositions(j) {
        let coeff = alpha.iter().fold(QPoly::one(), |c, &a| &c * &(&q_int(a) - &QPoly::one()));
        if coeff.is_zero() {
            continue;
        }
        let term = SymFun::e(Partition::from_multiset(alpha)).scale(&QRat::from_poly(coeff));
        acc = &acc + &term;
    }
    acc
}
