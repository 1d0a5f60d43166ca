//! Acyclic orientations of the incomparability graph of `m`, their sinks
//! and ascents, and the sink counts read off `e`-expansions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, Partition};
use crate::error::{Error, Result};
use crate::hessenberg::HessFn;
use crate::oracle::x_colorings;
use crate::ptab::{enumerate_pt, s_fun, Mode, PFilling};
use crate::qalg::{QPoly, QRat};
use crate::symfun::SymFun;

/// Largest `n` for which orientations are enumerated.
pub const DEFAULT_BOUND: usize = 7;

/// A direction for every edge `i < j ≤ m(i)`, in the order of [`HessFn::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Orientation {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `true` when the edge points toward its larger endpoint.
    toward_larger: Vec<bool>,
}

impl Orientation {
    pub fn new(m: &HessFn, toward_larger: Vec<bool>) -> Result<Self> {
        let edges = m.edges();
        if edges.len() != toward_larger.len() {
            return Err(Error::SizeMismatch(format!("{} directions for {} edges", toward_larger.len(), edges.len())));
        }
        let o = Orientation { n: m.n(), edges, toward_larger };
        if !o.is_acyclic() {
            return Err(Error::InvalidFilling("orientation has a directed cycle".into()));
        }
        Ok(o)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(from, to)` for each edge.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.toward_larger)
            .map(|(&(i, j), &up)| if up { (i, j) } else { (j, i) })
            .collect()
    }

    fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0; self.n + 1];
        let mut out = vec![Vec::new(); self.n + 1];
        for (a, b) in self.arcs() {
            indeg[b] += 1;
            out[a].push(b);
        }
        let mut stack: Vec<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == self.n
    }

    /// Edges `i < j` directed toward `j`.
    pub fn asc(&self) -> usize {
        self.toward_larger.iter().filter(|&&b| b).count()
    }

    /// Vertices with no outgoing arc.
    pub fn sinks(&self) -> BTreeSet<usize> {
        let sources: BTreeSet<usize> = self.arcs().into_iter().map(|(a, _)| a).collect();
        (1..=self.n).filter(|v| !sources.contains(v)).collect()
    }

    pub fn restrict_sinks(&self, keep: &BTreeSet<usize>) -> BTreeSet<usize> {
        let sources: BTreeSet<usize> =
            self.arcs().into_iter().filter(|(a, b)| keep.contains(a) && keep.contains(b)).map(|(a, _)| a).collect();
        keep.iter().copied().filter(|v| !sources.contains(v)).collect()
    }
}

/// All acyclic orientations; `require_1_sink` keeps those where vertex 1 is a sink.
pub fn enumerate_ao(m: &HessFn, require_1_sink: bool) -> Vec<Orientation> {
    let edges = m.edges();
    let n = m.n();
    // Each acyclic orientation comes from orienting along some linear order.
    let mut found = BTreeSet::new();
    let mut order: Vec<usize> = (1..=n).collect();
    permute(&mut order, 0, &mut |pos_of: &[usize]| {
        let dirs: Vec<bool> = edges.iter().map(|&(i, j)| pos_of[i] < pos_of[j]).collect();
        found.insert(dirs);
    });
    found
        .into_iter()
        .map(|toward_larger| Orientation { n, edges: edges.clone(), toward_larger })
        .filter(|o| !require_1_sink || n == 0 || o.sinks().contains(&1))
        .collect()
}

/// Walks every ordering of `order[k..]`, passing the position of each value.
fn permute<F: FnMut(&[usize])>(order: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == order.len() {
        let mut pos = vec![0; order.len() + 1];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        visit(&pos);
        return;
    }
    for i in k..order.len() {
        order.swap(k, i);
        permute(order, k + 1, visit);
        order.swap(k, i);
    }
}

/// The sink that is smallest under `<_m`.
pub fn smallest_sink(m: &HessFn, theta: &Orientation) -> usize {
    min_under(m, &theta.sinks())
}

fn min_under(m: &HessFn, set: &BTreeSet<usize>) -> usize {
    let v: Vec<usize> = set.iter().copied().collect();
    for w in v.windows(2) {
        assert!(m.less(w[0], w[1]), "sinks {} and {} of {m} are incomparable", w[0], w[1]);
    }
    // Pairwise comparable, so the numerically smallest is the `<_m`-minimum.
    v[0]
}

/// Directs each edge toward the endpoint lying in the higher row of `T`.
pub fn theta_of(m: &HessFn, t: &PFilling) -> Result<Orientation> {
    t.check(m, Mode::Tableau)?;
    if t.size() != m.n() {
        return Err(Error::InvalidFilling(format!("{} cells for n = {}", t.size(), m.n())));
    }
    let rows = t.row_index();
    let edges = m.edges();
    let toward_larger = edges.iter().map(|(i, j)| rows[j] < rows[i]).collect();
    Ok(Orientation { n: m.n(), edges, toward_larger })
}

/// `ζ(e_i) = t`: coefficients of `ζ(f)` by power of `t`.
pub fn zeta(f: &SymFun) -> BTreeMap<usize, QRat> {
    let mut out: BTreeMap<usize, QRat> = BTreeMap::new();
    for (lambda, c) in f.to_e().terms() {
        *out.entry(lambda.len()).or_insert_with(QRat::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Σ_{k ≥ ℓ} (−1)^{k−ℓ} C(k−1, ℓ−1) a_{(k,1^{n−k})}` from the Schur coefficients of `f`.
pub fn hook_sink_formula(f: &SymFun) -> BTreeMap<usize, QRat> {
    let s = f.to_schur();
    let n = f.degree();
    let mut out = BTreeMap::new();
    for l in 1..=n {
        let mut acc = QRat::zero();
        for k in l..=n {
            let a = s.coeff(&Partition::hook(n, k));
            let c = QRat::from_int(binomial(k - 1, l - 1) as i64);
            let term = &a * &c;
            if (k - l) % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        if !acc.is_zero() {
            out.insert(l, acc);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SinkSource {
    /// `X_m` with all acyclic orientations.
    X,
    /// `S_m` with orientations where vertex 1 is a sink.
    S,
}

/// `ℓ ↦ Σ_{ℓ(λ)=ℓ} c_λ` read off the `e`-expansion of `X_m` or `S_m`.
pub fn sink_distribution(m: &HessFn, source: SinkSource) -> Result<BTreeMap<usize, QRat>> {
    if m.n() > DEFAULT_BOUND {
        return Err(Error::SizeLimitExceeded { n: m.n(), limit: DEFAULT_BOUND });
    }
    let f = match source {
        SinkSource::X => x_colorings(m)?,
        SinkSource::S => s_fun(m)?,
    };
    Ok(zeta(&f))
}

/// `ℓ ↦ Σ q^{asc(θ)}` over orientations with `ℓ` sinks.
pub fn sink_distribution_ao(m: &HessFn, source: SinkSource) -> Result<BTreeMap<usize, QRat>> {
    if m.n() > DEFAULT_BOUND {
        return Err(Error::SizeLimitExceeded { n: m.n(), limit: DEFAULT_BOUND });
    }
    let mut counts: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for theta in enumerate_ao(m, source == SinkSource::S) {
        let c = counts.entry(theta.sinks().len()).or_default();
        let a = theta.asc();
        if c.len() <= a {
            c.resize(a + 1, 0);
        }
        c[a] += 1;
    }
    Ok(counts.into_iter().map(|(l, c)| (l, QRat::from_poly(QPoly::from_counts(&c)))).collect())
}

/// Number of `T ∈ PT'_m((i, 1^{n−i}))` with `θ(T) = θ`.
pub fn sink_subset_count(m: &HessFn, theta: &Orientation, i: usize) -> usize {
    enumerate_pt(m, &Partition::hook(m.n(), i), true)
        .iter()
        .filter(|t| theta_of(m, t).as_ref() == Ok(theta))
        .count()
}

/// The tableau built from a set `A ∋ 1` of sinks: `A` in the first row, the
/// rest below it, each the smallest sink of what remains.
pub fn tableau_from_sinks(m: &HessFn, theta: &Orientation, a: &BTreeSet<usize>) -> PFilling {
    let mut rows = vec![a.iter().copied().collect::<Vec<_>>()];
    let mut rest: BTreeSet<usize> = (1..=m.n()).filter(|v| !a.contains(v)).collect();
    while !rest.is_empty() {
        let b = min_under(m, &theta.restrict_sinks(&rest));
        rest.remove(&b);
        rows.push(vec![b]);
    }
    PFilling::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions;
    use crate::hessenberg::enumerate_hess;
    use crate::ptab::inv;

    fn h(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_orientations() {
        let p2 = HessFn::path(2);
        let all = enumerate_ao(&p2, false);
        assert_eq!(all.len(), 2);
        let prime = enumerate_ao(&p2, true);
        assert_eq!(prime.len(), 1);
        assert_eq!(prime[0].arcs(), vec![(2, 1)]);
        assert_eq!(prime[0].asc(), 0);
        assert_eq!(prime[0].sinks(), BTreeSet::from([1]));
        let up = Orientation::new(&p2, vec![true]).unwrap();
        assert_eq!((up.asc(), up.sinks()), (1, BTreeSet::from([2])));

        let empty = enumerate_ao(&HessFn::diagonal(4), false);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].sinks().len(), 4);
        assert_eq!(smallest_sink(&HessFn::diagonal(4), &empty[0]), 1);
        assert_eq!(enumerate_ao(&HessFn::complete(5), false).len(), 120);
    }

    #[test]
    fn cycles_rejected() {
        let k3 = HessFn::complete(3);
        // edges (1,2), (1,3), (2,3): 1→2, 3→1, 2→3 is a cycle.
        assert!(Orientation::new(&k3, vec![true, false, true]).is_err());
    }

    #[test]
    fn drawn_orientation() {
        let m = h(&[2, 4, 4, 5, 5]);
        let t = PFilling::from_rows(vec![vec![1, 5], vec![3], vec![4], vec![2]]);
        let theta = theta_of(&m, &t).unwrap();
        assert_eq!(theta.arcs(), vec![(2, 1), (2, 3), (2, 4), (4, 3), (4, 5)]);
        assert_eq!(theta.asc(), 3);
    }

    #[test]
    fn theta_matches_inv() {
        for n in 1..=5 {
            for m in enumerate_hess(n) {
                for lambda in partitions(n) {
                    for t in enumerate_pt(&m, &lambda, false) {
                        let theta = theta_of(&m, &t).unwrap();
                        assert!(theta.is_acyclic());
                        assert_eq!(theta.asc(), inv(&m, &t).unwrap());
                        if t.get(1, 1) == Some(1) {
                            assert!(theta.sinks().contains(&1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(&SymFun::e_k(4)), BTreeMap::from([(1, QRat::one())]));
        let s2 = SymFun::s(Partition::row(2));
        assert_eq!(zeta(&s2), BTreeMap::from([(1, QRat::from_int(-1)), (2, QRat::one())]));
        for n in 1..=6 {
            for k in 1..=n.min(4) {
                let z = zeta(&SymFun::s(Partition::hook(n, k)));
                let want: BTreeMap<usize, QRat> = (1..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        (i, QRat::from_int(sign * binomial(k - 1, i - 1) as i64))
                    })
                    .collect();
                assert_eq!(z, want, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn hook_formula_on_bases() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let s = SymFun::s(lambda.clone());
                assert_eq!(hook_sink_formula(&s), zeta(&s), "s{lambda}");
                let e = SymFun::e(lambda.clone());
                assert_eq!(hook_sink_formula(&e), zeta(&e), "e{lambda}");
            }
        }
    }

    #[test]
    fn sink_theorems_small() {
        let p2 = HessFn::path(2);
        assert_eq!(sink_distribution(&p2, SinkSource::S).unwrap(), BTreeMap::from([(1, QRat::one())]));
        assert_eq!(sink_distribution_ao(&p2, SinkSource::S).unwrap(), BTreeMap::from([(1, QRat::one())]));
        let d = HessFn::diagonal(3);
        assert_eq!(sink_distribution(&d, SinkSource::X).unwrap(), BTreeMap::from([(3, QRat::one())]));
        let m = h(&[2, 3, 5, 5, 5]);
        for source in [SinkSource::X, SinkSource::S] {
            assert_eq!(sink_distribution(&m, source).unwrap(), sink_distribution_ao(&m, source).unwrap());
        }
    }

    #[test]
    fn sink_subsets() {
        let m = h(&[2, 3, 5, 5, 5]);
        for theta in enumerate_ao(&m, true) {
            let l = theta.sinks().len();
            for i in 1..=l {
                assert_eq!(sink_subset_count(&m, &theta, i) as u64, binomial(l - 1, i - 1));
            }
            let t = tableau_from_sinks(&m, &theta, &BTreeSet::from([1]));
            assert_eq!(theta_of(&m, &t).unwrap(), theta);
        }
    }
}
