//! Exhaustive verification suites over all Hessenberg functions up to a size.
//!
//! Each suite is a list of [`Check`]s; a check records how many instances
//! it looked at and a witness string for every failure.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, partitions, vertical_strips, Partition, Syt};
use crate::error::{Error, Result};
use crate::gfun::{path_g_closed, PermStats};
use crate::hessenberg::{enumerate_hess, HessFn};
use crate::hikita::{self, all_syt, delta_vec, DeltaVec};
use crate::modlaw::{self, BaseFn, LawReport, ModularTriple, TripleKind};
use crate::oracle::x_colorings_bounded;
use crate::orientations::{self, SinkSource};
use crate::ptab::{self, enumerate_pt, inv, path_l, path_peel, path_unpeel};
use crate::qalg::{q_int, qr_int, QPoly, QRat};
use crate::symfun::{Basis, SymFun};

/// Largest size any suite accepts.
pub const HARD_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Egs,
    XAll,
    Modlaw,
    Sink,
    Appendix,
    Paths,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Egs, Suite::XAll, Suite::Modlaw, Suite::Sink, Suite::Appendix, Suite::Paths];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Egs => "egs",
            Suite::XAll => "x-all",
            Suite::Modlaw => "modlaw",
            Suite::Sink => "sink",
            Suite::Appendix => "appendix",
            Suite::Paths => "paths",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Size the check ran at, when it is per-size.
    pub n: Option<usize>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>, n: Option<usize>) -> Self {
        Check { name: name.into(), n, checked: 0, failures: Vec::new() }
    }

    fn from_results(name: impl Into<String>, n: Option<usize>, results: Vec<Option<String>>) -> Self {
        let checked = results.len();
        let failures = results.into_iter().flatten().collect();
        Check { name: name.into(), n, checked, failures }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}: {} checked", self.name, self.checked)?;
        for w in &self.failures {
            write!(f, "\n    {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Informational findings that do not affect `passed`.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, n_max: usize, checks: Vec<Check>, notes: Vec<String>) -> Self {
        let passed = checks.iter().all(Check::passed);
        SuiteReport { suite, n_max, passed, checks, notes }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

pub fn run_suite(suite: Suite, n_max: usize) -> Result<SuiteReport> {
    if n_max > HARD_CAP {
        return Err(Error::SizeLimitExceeded { n: n_max, limit: HARD_CAP });
    }
    let sizes = 1..=n_max;
    Ok(match suite {
        Suite::Egs => {
            let mut checks: Vec<Check> = sizes.clone().map(egs).collect();
            checks.extend(sizes.map(divisibility));
            SuiteReport::new(suite, n_max, checks, Vec::new())
        }
        Suite::XAll => SuiteReport::new(suite, n_max, sizes.map(|n| x_all(n, true)).collect(), Vec::new()),
        Suite::Modlaw => {
            let mut checks = Vec::new();
            let mut notes = Vec::new();
            for n in sizes {
                checks.extend(restricted_law(n));
                checks.push(reduction(n));
                if let Some(t) = unrestricted_s_violation(n).first() {
                    notes.push(format!("S violates the unrestricted law at {t}"));
                }
            }
            SuiteReport::new(suite, n_max, checks, notes)
        }
        Suite::Sink => {
            let mut checks = Vec::new();
            for n in sizes {
                checks.extend([sink_theorem(n, SinkSource::X), sink_theorem(n, SinkSource::S), sink_subsets(n), theta_inv(n)]);
            }
            SuiteReport::new(suite, n_max, checks, Vec::new())
        }
        Suite::Appendix => {
            let mut checks = Vec::new();
            for n in sizes {
                checks.extend([psi_phi(n), area_relation(n), psi_sum(n), p_sum(n)]);
            }
            SuiteReport::new(suite, n_max, checks, Vec::new())
        }
        Suite::Paths => {
            let mut checks = Vec::new();
            for n in sizes {
                checks.extend([path_closed_form(n), path_recursion(n), peel_round_trip(n), path_s_equals_e(n)]);
            }
            SuiteReport::new(suite, n_max, checks, Vec::new())
        }
    })
}

fn par_over_hess<F>(n: usize, f: F) -> Vec<Option<String>>
where
    F: Fn(&HessFn) -> Option<String> + Sync + Send,
{
    enumerate_hess(n).par_iter().map(f).collect()
}

fn sum_e(parts: &[SymFun], n: usize) -> SymFun {
    parts.iter().fold(SymFun::zero(n, Basis::E), |acc, f| &acc + f)
}

/// `E = G = S` and `E_{m,k} = G_{m,k}` for every `m ∈ H_n`.
pub fn egs(n: usize) -> Check {
    let results = par_over_hess(n, |m| {
        let table = match hikita::p_table(m) {
            Ok(t) => t,
            Err(e) => return Some(format!("{m}: {e}")),
        };
        let stats = PermStats::new(m);
        let mut e_parts = Vec::new();
        for k in 1..=n {
            let e = match table.e_part(k) {
                Ok(e) => e,
                Err(err) => return Some(format!("{m}, k = {k}: {err}")),
            };
            if e != stats.g_cap(k) {
                return Some(format!("{m}: E_k != G_k at k = {k}"));
            }
            e_parts.push(e);
        }
        let e = sum_e(&e_parts, n);
        let s = match ptab::s_fun(m) {
            Ok(s) => s.to_e(),
            Err(err) => return Some(format!("{m}: {err}")),
        };
        if e != stats.g_total() || e != s {
            return Some(format!("{m}: E, G, S disagree"));
        }
        None
    });
    Check::from_results("E = G = S and E_k = G_k", Some(n), results)
}

/// Every `c_{λ,k}(m)` is divisible by `[k]_q`.
pub fn divisibility(n: usize) -> Check {
    let results = par_over_hess(n, |m| {
        let table = hikita::p_table(m).ok()?;
        for lambda in partitions(n) {
            for k in 1..=lambda.part(0) {
                match table.c_lambda_k(&lambda, k) {
                    Ok(c) if crate::qalg::exact_div(&c, &q_int(k)).is_ok() => {}
                    Ok(_) => return Some(format!("{m}: c_{{{lambda},{k}}} not divisible by [{k}]_q")),
                    Err(e) => return Some(format!("{m}: c_{{{lambda},{k}}}: {e}")),
                }
            }
        }
        None
    });
    Check::from_results("c_{λ,k} / [k]_q exact", Some(n), results)
}

/// `x_colorings = x_hikita = Σ [k]_q G_{m,k} = x_schur`; the last two only when `all`.
pub fn x_all(n: usize, all: bool) -> Check {
    let results = par_over_hess(n, |m| {
        let run = || -> Result<Option<String>> {
            let x = x_colorings_bounded(m, HARD_CAP)?.to_e();
            if hikita::x_hikita(m)? != x {
                return Ok(Some(format!("{m}: colorings != transition model")));
            }
            if all {
                let stats = PermStats::new(m);
                let g = (1..=n).fold(SymFun::zero(n, Basis::E), |acc, k| &acc + &stats.g_cap(k).scale(&qr_int(k)));
                if g != x {
                    return Ok(Some(format!("{m}: colorings != Σ [k] G_k")));
                }
                if ptab::x_schur(m)?.to_e() != x {
                    return Ok(Some(format!("{m}: colorings != P-tableaux")));
                }
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(format!("{m}: {e}")))
    });
    let name = if all { "X: colorings = transitions = Σ [k] G_k = P-tableaux" } else { "X: colorings = transitions" };
    Check::from_results(name, Some(n), results)
}

/// `g_{m,k}(x; 1)` is e-positive for `0 ≤ k < n`.
pub fn g_positivity(n: usize) -> Check {
    let results = par_over_hess(n, |m| {
        let stats = PermStats::new(m);
        (0..n).find_map(|k| match stats.g(k).is_e_positive_at_one() {
            Ok(true) => None,
            Ok(false) => Some(format!("{m}: g_{k} not e-positive at q = 1")),
            Err(e) => Some(format!("{m}: g_{k}: {e}")),
        })
    });
    Check::from_results("g_{m,k}(x;1) e-positive", Some(n), results)
}

/// All the values the modular-law checks need, per Hessenberg function.
struct LawValues {
    e_parts: Vec<SymFun>,
    g: Vec<SymFun>,
    g_caps: Vec<SymFun>,
    s: SymFun,
}

fn law_values(n: usize) -> HashMap<HessFn, LawValues> {
    enumerate_hess(n)
        .into_par_iter()
        .map(|m| {
            let table = hikita::p_table(&m).expect("n within bound");
            let stats = PermStats::new(&m);
            let v = LawValues {
                e_parts: (1..=n).map(|k| table.e_part(k).expect("divisible")).collect(),
                g: (0..n).map(|k| stats.g(k)).collect(),
                g_caps: (1..=n).map(|k| stats.g_cap(k)).collect(),
                s: ptab::s_fun(&m).expect("n within bound").to_e(),
            };
            (m, v)
        })
        .collect()
}

fn law_check(name: String, n: usize, triples: &[ModularTriple], f: impl Fn(&HessFn) -> SymFun + Sync) -> Check {
    let LawReport { checked, violations } = modlaw::check_triples(f, n, triples);
    Check { name, n: Some(n), checked, failures: violations.iter().map(ToString::to_string).collect() }
}

/// The restricted modular law for `E_{m,k}`, `g_{m,k}`, `G_{m,k}` and `S_m`.
pub fn restricted_law(n: usize) -> Vec<Check> {
    let triples = modlaw::restricted_triples(n);
    let values = law_values(n);
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(law_check(format!("restricted law for E_k, k = {k}"), n, &triples, |m| values[m].e_parts[k - 1].clone()));
        out.push(law_check(format!("restricted law for G_k, k = {k}"), n, &triples, |m| values[m].g_caps[k - 1].clone()));
    }
    for k in 0..n {
        out.push(law_check(format!("restricted law for g_k, k = {k}"), n, &triples, |m| values[m].g[k].clone()));
    }
    out.push(law_check("restricted law for S".into(), n, &triples, |m| values[m].s.clone()));
    out
}

/// Type II triples at `i = 1` where `S` breaks the law.
pub fn unrestricted_s_violation(n: usize) -> Vec<ModularTriple> {
    let first: Vec<ModularTriple> =
        modlaw::enumerate_triples(n, TripleKind::TypeII).into_iter().filter(|t| t.index == 1).collect();
    if first.is_empty() {
        return Vec::new();
    }
    modlaw::check_triples(|m| ptab::s_fun(m).expect("n within bound").to_e(), n, &first).violations
}

/// `evaluate(reduce(m), base)` equals the direct value for `E`, `G`, `S`.
pub fn reduction(n: usize) -> Check {
    let results = par_over_hess(n, |m| {
        let run = || -> Result<Option<String>> {
            let cert = modlaw::reduce(m)?;
            for base in [BaseFn::E, BaseFn::G, BaseFn::S] {
                if modlaw::evaluate(&cert, base)? != base.direct(m)? {
                    return Ok(Some(format!("{m}: reduction disagrees for {base:?}")));
                }
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(format!("{m}: {e}")))
    });
    Check::from_results("evaluate(reduce(m)) = direct for E, G, S", Some(n), results)
}

/// The reduction terminates; records the deepest chain seen.
pub fn reduction_terminates(n: usize) -> Check {
    let results = par_over_hess(n, |m| {
        let mut r = modlaw::Reducer::new();
        match r.reduce(m) {
            Ok(c) if c.n() == n => None,
            Ok(_) => Some(format!("{m}: certificate of wrong size")),
            Err(e) => Some(format!("{m}: {e}")),
        }
    });
    Check::from_results("reduce terminates", Some(n), results)
}

/// Sink counts from the `e`-expansion agree with acyclic orientations.
pub fn sink_theorem(n: usize, source: SinkSource) -> Check {
    let results = par_over_hess(n, |m| {
        let lhs = orientations::sink_distribution(m, source);
        let rhs = orientations::sink_distribution_ao(m, source);
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(_), Ok(_)) => Some(format!("{m}: sink distributions differ")),
            (Err(e), _) | (_, Err(e)) => Some(format!("{m}: {e}")),
        }
    });
    let name = match source {
        SinkSource::X => "sinks of X vs all acyclic orientations",
        SinkSource::S => "sinks of S vs orientations with sink 1",
    };
    Check::from_results(name, Some(n), results)
}

/// `#{T ∈ PT'((i,1^{n−i})) : θ(T) = θ} = C(ℓ−1, i−1)`.
pub fn sink_subsets(n: usize) -> Check {
    let results: Vec<Vec<Option<String>>> = enumerate_hess(n)
        .par_iter()
        .map(|m| {
            // Group the hook tableaux by orientation once, rather than per θ.
            let mut counts: Vec<HashMap<orientations::Orientation, u64>> = Vec::new();
            for i in 1..=n {
                let mut c = HashMap::new();
                for t in enumerate_pt(m, &Partition::hook(n, i), true) {
                    *c.entry(orientations::theta_of(m, &t).unwrap()).or_insert(0) += 1;
                }
                counts.push(c);
            }
            let mut out = Vec::new();
            for theta in orientations::enumerate_ao(m, true) {
                let l = theta.sinks().len();
                for i in 1..=l {
                    let got = counts[i - 1].get(&theta).copied().unwrap_or(0);
                    let want = binomial(l - 1, i - 1);
                    out.push((got != want).then(|| format!("{m}, θ = {:?}, i = {i}: {got} != {want}", theta.arcs())));
                }
            }
            out
        })
        .collect();
    Check::from_results("hook tableaux per orientation = C(ℓ−1, i−1)", Some(n), results.into_iter().flatten().collect())
}

/// `asc(θ(T)) = inv(T)`, and vertex 1 is a sink when `T(1,1) = 1`.
pub fn theta_inv(n: usize) -> Check {
    let results: Vec<Option<String>> = enumerate_hess(n)
        .par_iter()
        .flat_map_iter(|m| {
            partitions(n).into_iter().flat_map(move |lambda| {
                enumerate_pt(m, &lambda, false).into_iter().map(move |t| {
                    let theta = orientations::theta_of(m, &t).ok()?;
                    let ok = theta.asc() == inv(m, &t).ok()?
                        && (t.get(1, 1) != Some(1) || theta.sinks().contains(&1));
                    (!ok).then(|| format!("{m}, T = {t}"))
                })
            })
        })
        .collect();
    Check::from_results("asc(θ(T)) = inv(T)", Some(n), results)
}

/// Every `(T, r)` with `|T| = n` and `0 ≤ r ≤ n`.
fn tableau_deltas(n: usize) -> Vec<(Syt, usize, DeltaVec)> {
    all_syt(n)
        .into_iter()
        .flat_map(|t| (0..=n).map(move |r| (t.clone(), r, delta_vec(&t, r))))
        .collect()
}

/// The reversed complement `(1^{a_{l+1}}, 0^{b_l}, ..., 0^{b_0})`.
pub fn reverse_complement(d: &DeltaVec) -> DeltaVec {
    DeltaVec::new(d.bits().iter().rev().map(|b| !b).collect())
}

/// `ψ_k = q^{Σ_{i>k} b_i − Σ_{i≤k} a_i} φ_k` and `ψ_k(δ) = φ_{l−k}(δ̄)`.
pub fn psi_phi(n: usize) -> Check {
    let mut check = Check::new("ψ/φ relations on tableau δ-vectors", Some(n));
    for (t, r, d) in tableau_deltas(n) {
        let runs = d.runs();
        let bar = reverse_complement(&d).runs();
        for k in 0..=runs.l() {
            let psi = runs.psi(k).unwrap();
            let shifted = &QRat::q_pow(runs.psi_phi_exponent(k)) * &runs.phi(k).unwrap();
            let mirrored = bar.phi(runs.l() - k);
            check.record(psi == shifted && mirrored.as_ref() == Ok(&psi), || format!("T = {t}, r = {r}, k = {k}"));
        }
    }
    check
}

pub fn psi_sum(n: usize) -> Check {
    let mut check = Check::new("Σ_k ψ_k = 1 on tableau δ-vectors", Some(n));
    for (t, r, d) in tableau_deltas(n) {
        let runs = d.runs();
        let total = (0..=runs.l()).fold(QRat::zero(), |acc, k| &acc + &runs.psi(k).unwrap());
        check.record(total.is_one(), || format!("T = {t}, r = {r}"));
    }
    check
}

pub fn area_relation(n: usize) -> Check {
    let results = par_over_hess(n, |m| match hikita::check_area_relation(m) {
        Ok(true) => None,
        Ok(false) => Some(format!("{m}")),
        Err(e) => Some(format!("{m}: {e}")),
    });
    Check::from_results("p = q^{area − Σ C(λ_j,2)} p̄", Some(n), results)
}

pub fn p_sum(n: usize) -> Check {
    let results = par_over_hess(n, |m| match hikita::p_table(m) {
        Ok(t) if t.total().is_one() => None,
        Ok(t) => Some(format!("{m}: total {}", t.total())),
        Err(e) => Some(format!("{m}: {e}")),
    });
    Check::from_results("Σ_T p_m(T) = 1", Some(n), results)
}

/// `E_{p_n,k} = e_k Σ_{α ⊨ n−k} e_α ∏([α_i]_q − 1)` against the transition model.
pub fn path_closed_form(n: usize) -> Check {
    let mut check = Check::new("E_{p_n,k} closed form", Some(n));
    let table = hikita::p_table(&HessFn::path(n));
    for k in 1..=n {
        let direct = table.as_ref().map_err(Clone::clone).and_then(|t| t.e_part(k));
        let closed = SymFun::e_k(k).mul(&path_g_closed(n - k));
        check.record(direct.as_ref() == Ok(&closed), || format!("p_{n}, k = {k}"));
    }
    check
}

/// `L(λ) = [λ = (1^n)] + Σ_{μ ≠ ∅} ([|λ/μ|]_q − 1) L(μ)`.
pub fn path_recursion(n: usize) -> Check {
    let mut check = Check::new("path recursion for Σ_{PT'} q^inv", Some(n));
    let memo: BTreeMap<Partition, QPoly> =
        (1..=n).flat_map(partitions).collect::<Vec<_>>().into_par_iter().map(|l| {
            let v = path_l(&l);
            (l, v)
        }).collect();
    for lambda in partitions(n) {
        let mut rhs = if lambda.len() == n { QPoly::one() } else { QPoly::zero() };
        for mu in vertical_strips(&lambda) {
            let d = n - mu.size();
            if d > 0 && !mu.is_empty() {
                rhs += &(&(&q_int(d) - &QPoly::one()) * &memo[&mu]);
            }
        }
        check.record(memo[&lambda] == rhs, || format!("λ = {lambda}"));
    }
    check
}

/// Peel then unpeel every `T ∈ PT'_{p_n}(λ)`, and the reverse direction.
pub fn peel_round_trip(n: usize) -> Check {
    let mut check = Check::new("peel/unpeel bijection with inv(T) = inv(T') + j", Some(n));
    let m = HessFn::path(n);
    let mut images: BTreeSet<(Partition, ptab::PFilling, usize)> = BTreeSet::new();
    let mut total = 0;
    for lambda in partitions(n) {
        for t in enumerate_pt(&m, &lambda, true) {
            let Ok(p) = path_peel(&t) else {
                check.record(lambda == Partition::column(n), || format!("T = {t} has no peel"));
                continue;
            };
            let k = p.rest.size();
            let inv_ok = inv(&m, &t).ok() == inv(&HessFn::path(k), &p.rest).ok().map(|i| i + p.j);
            let back = path_unpeel(&p.rest, &lambda, p.j);
            check.record(inv_ok && back.as_ref() == Ok(&t) && p.j >= 1 && p.j < n - k, || format!("T = {t}"));
            images.insert((lambda.clone(), p.rest, p.j));
            total += 1;
        }
    }
    // Injective, and every admissible (T', j) is hit.
    let mut domain = 0;
    for lambda in partitions(n) {
        for mu in vertical_strips(&lambda) {
            let d = n - mu.size();
            if d >= 2 && !mu.is_empty() {
                domain += enumerate_pt(&HessFn::path(mu.size()), &mu, true).len() * (d - 1);
            }
        }
    }
    check.record(images.len() == total && total == domain, || format!("{total} tableaux, {} images, {domain} pairs", images.len()));
    check
}

/// `S_{p_n} = E_{p_n}`.
pub fn path_s_equals_e(n: usize) -> Check {
    let mut check = Check::new("S = E on paths", Some(n));
    let p = HessFn::path(n);
    let ok = match (ptab::s_fun(&p), hikita::e_total(&p)) {
        (Ok(s), Ok(e)) => s.to_e() == e,
        _ => false,
    };
    check.record(ok, || format!("p_{n}"));
    check
}

/// `E`, `G`, `S` of `m1 + m2` factor as `f(m1) X(m2)` (and `E_k`, `G_k` likewise).
pub fn multiplicativity(n1: usize, n2: usize) -> Check {
    let pairs: Vec<(HessFn, HessFn)> = enumerate_hess(n1)
        .into_iter()
        .flat_map(|a| enumerate_hess(n2).into_iter().map(move |b| (a.clone(), b)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|(a, b)| {
            let run = || -> Result<bool> {
                let m = a.sum(b);
                let x2 = x_colorings_bounded(b, HARD_CAP)?.to_e();
                let (ta, tm) = (hikita::p_table(a)?, hikita::p_table(&m)?);
                let (sa, sm) = (PermStats::new(a), PermStats::new(&m));
                let mut ok = tm.e_total()? == ta.e_total()?.mul(&x2)
                    && sm.g_total() == sa.g_total().mul(&x2)
                    && ptab::s_fun(&m)?.to_e() == ptab::s_fun(a)?.to_e().mul(&x2);
                for k in 1..=n1 {
                    ok &= tm.e_part(k)? == ta.e_part(k)?.mul(&x2) && sm.g_cap(k) == sa.g_cap(k).mul(&x2);
                }
                Ok(ok)
            };
            match run() {
                Ok(true) => None,
                Ok(false) => Some(format!("{a} + {b}")),
                Err(e) => Some(format!("{a} + {b}: {e}")),
            }
        })
        .collect();
    Check::from_results(format!("multiplicativity n1 = {n1}, n2 = {n2}"), Some(n1 + n2), results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(serde_json::to_value(Suite::XAll).unwrap(), serde_json::json!("x-all"));
    }

    #[test]
    fn cap() {
        assert!(matches!(run_suite(Suite::Egs, 9), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn egs_counts() {
        let r = run_suite(Suite::Egs, 4).unwrap();
        assert!(r.passed);
        let counts: Vec<usize> = r.checks.iter().filter(|c| c.name.starts_with("E = G")).map(|c| c.checked).collect();
        assert_eq!(counts, vec![1, 2, 5, 14]);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = run_suite(s, 4).unwrap();
            assert!(r.passed, "{s}:\n{r}");
        }
    }

    #[test]
    fn reverse_complement_example() {
        let d = DeltaVec::new(vec![true, false, false, true]);
        assert_eq!(reverse_complement(&d).bits(), &[false, true, true, false]);
    }
}
