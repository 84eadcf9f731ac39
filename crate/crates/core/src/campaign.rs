//! Exhaustive verification over the connected-graph census.
//!
//! Each selected check runs on every connected graph of order `1..=n_max`.
//! Failures are recorded as data (graph6 plus the check name), never as
//! errors. Graphs are processed in parallel but merged in census order,
//! so a report is a pure function of its inputs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    blowup, diameter_transfer_check, duplicate_peeling_check, is_canonical,
    multiplicity_transfer_check, quotient, rho_partition, BlowupSpec,
};
use crate::classify::{
    certificate_check, classify_minus_one, extremal_eigenvalue_check, Classification,
};
use crate::enumerate::{connected_graphs_with_override, ENUMERATION_CAP, ENUMERATION_HARD_CAP};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, diameter, parse_graph6, write_graph6, Graph};
use crate::linalg::{eigenprojection, rational_from_i64, IntMatrix, Rational};
use crate::spectra::{
    distinct_eigenvalue_count, extremality_check, interlacing_check, max_multiplicity,
    multiplicity, pendant_nullity_check, rank_monotonicity_check,
};
use crate::star::{
    dominating_check, find_star_sets, is_star_complement, projection_identity_check,
    star_set_basis_check, star_subset_check,
};

/// Integer test points used by the subgraph and star-set checks.
pub const TEST_EIGENVALUES: [i64; 5] = [-2, -1, 0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// graph6 write/parse round trip and canonical-form stability.
    Codec,
    /// `e(G) >= d + 1` and every multiplicity is at most `n - d`.
    Bounds,
    /// Structural classification agrees with `m_G(-1) = n - d`, and
    /// every extremal certificate re-validates.
    MinusOne,
    /// Non-paths reach `n - d` only at 0 and -1; paths are compared with
    /// the cosine formula for their spectrum instead.
    ExtremalEigenvalue,
    /// Vertex-deletion interlacing, pendant deletion, rank monotonicity.
    Subgraphs,
    /// Star sets exist and satisfy the domination, basis, subset and
    /// projection properties.
    Star,
    /// Quotient idempotence, blowup inverse, diameter and `-1`
    /// multiplicity transfer.
    Quotient,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Codec,
        Check::Bounds,
        Check::MinusOne,
        Check::ExtremalEigenvalue,
        Check::Subgraphs,
        Check::Star,
        Check::Quotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Codec => "codec",
            Check::Bounds => "bounds",
            Check::MinusOne => "minus-one",
            Check::ExtremalEigenvalue => "extremal-eigenvalue",
            Check::Subgraphs => "subgraphs",
            Check::Star => "star",
            Check::Quotient => "quotient",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown check {s:?}; expected one of {} or all",
                    known.join(", ")
                ))
            })
    }
}

/// Parse `all` or a comma-separated list of check names.
pub fn parse_checks(text: &str) -> Result<BTreeSet<Check>> {
    let text = text.trim();
    if text == "all" {
        return Ok(Check::ALL.into_iter().collect());
    }
    let checks = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(Check::from_str)
        .collect::<Result<BTreeSet<_>>>()?;
    if checks.is_empty() {
        return Err(Error::InvalidParameter("no checks selected".into()));
    }
    Ok(checks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

/// Outcome of [`run_campaign`]. Wall-clock time is kept out of the
/// serialized form so that reports compare byte for byte.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub counts: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn graphs(&self) -> usize {
        self.counts.get("graphs").copied().unwrap_or(0)
    }
}

pub fn run_campaign(n_max: usize, checks: &BTreeSet<Check>) -> Result<VerificationReport> {
    run_campaign_with_override(n_max, checks, false)
}

/// [`run_campaign`], with `allow_large` passed through to the enumerator.
pub fn run_campaign_with_override(
    n_max: usize,
    checks: &BTreeSet<Check>,
    allow_large: bool,
) -> Result<VerificationReport> {
    let cap = if allow_large {
        ENUMERATION_HARD_CAP
    } else {
        ENUMERATION_CAP
    };
    if n_max == 0 || n_max > cap {
        return Err(Error::InvalidParameter(format!(
            "campaign order {n_max} outside 1..={cap}"
        )));
    }
    let start = Instant::now();
    let mut counts = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for n in 1..=n_max {
        let census = connected_graphs_with_override(n, allow_large)?;
        log::info!("n={n}: {} connected graphs", census.len());
        *counts.entry("graphs".to_string()).or_insert(0) += census.len();
        counts.insert(format!("graphs:n={n}"), census.len());
        let outcomes: Vec<Outcome> = census.par_iter().map(|g| verify_graph(g, checks)).collect();
        for outcome in outcomes {
            for (key, k) in outcome.counts {
                *counts.entry(key).or_insert(0) += k;
            }
            counterexamples.extend(outcome.failures);
        }
    }
    Ok(VerificationReport {
        n: n_max,
        counts,
        counterexamples,
        elapsed: start.elapsed(),
    })
}

/// Counters and failures from checking one graph.
#[derive(Debug, Default)]
pub struct Outcome {
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<Counterexample>,
}

impl Outcome {
    fn bump(&mut self, key: impl Into<String>) {
        *self.counts.entry(key.into()).or_insert(0) += 1;
    }
}

/// Run the selected checks on one graph.
pub fn verify_graph(g: &Graph, checks: &BTreeSet<Check>) -> Outcome {
    let mut out = Outcome::default();
    let graph6 = write_graph6(g);
    for &check in checks {
        let mut failures = Vec::new();
        match run_check(g, check, &mut out, &mut failures) {
            Ok(Ran::Evaluated) => out.bump(check.name()),
            Ok(Ran::Vacuous) => out.bump(format!("vacuous:{check}")),
            Err(e) => failures.push(format!("error: {e}")),
        }
        for detail in failures {
            out.failures.push(Counterexample {
                graph6: graph6.clone(),
                check: check.name().into(),
                detail,
            });
        }
    }
    out
}

enum Ran {
    Evaluated,
    Vacuous,
}

fn run_check(g: &Graph, check: Check, out: &mut Outcome, fail: &mut Vec<String>) -> Result<Ran> {
    match check {
        Check::Codec => codec(g, fail),
        Check::Bounds => bounds(g, fail),
        Check::MinusOne => minus_one(g, out, fail),
        Check::ExtremalEigenvalue => extremal_eigenvalue(g, out, fail),
        Check::Subgraphs => subgraphs(g, fail),
        Check::Star => stars(g, fail),
        Check::Quotient => quotients(g, fail),
    }
}

fn codec(g: &Graph, fail: &mut Vec<String>) -> Result<Ran> {
    let text = write_graph6(g);
    let back = parse_graph6(&text)?;
    if &back != g {
        fail.push(format!("parsed back as {back}"));
    }
    if write_graph6(&back) != text {
        fail.push("re-encoding differs".into());
    }
    if g.order() <= crate::graph::CANONICAL_LIMIT {
        let canon = crate::graph::canonical_form(g)?;
        if crate::graph::canonical_form(&parse_graph6(&canon)?)? != canon {
            fail.push("canonical form is not a fixed point".into());
        }
    }
    Ok(Ran::Evaluated)
}

fn bounds(g: &Graph, fail: &mut Vec<String>) -> Result<Ran> {
    let d = diameter(g).finite().ok_or(Error::Disconnected)?;
    let e = distinct_eigenvalue_count(g);
    if e < d + 1 {
        fail.push(format!("{e} distinct eigenvalues with diameter {d}"));
    }
    let (top, _) = max_multiplicity(g);
    if top + d > g.order() {
        fail.push(format!(
            "multiplicity {top} exceeds n - d = {}",
            g.order() - d
        ));
    }
    Ok(Ran::Evaluated)
}

fn minus_one(g: &Graph, out: &mut Outcome, fail: &mut Vec<String>) -> Result<Ran> {
    if g.order() < 2 {
        return Ok(Ran::Vacuous);
    }
    let class = classify_minus_one(g)?;
    out.bump(format!("minus-one:{}", class.label()));
    let spectral = extremality_check(g, &rational_from_i64(-1))?;
    if class.is_extremal() != spectral {
        fail.push(format!(
            "classified {} but m(-1) = {} with n - d = {}",
            class.label(),
            multiplicity(g, &rational_from_i64(-1)),
            g.order() - diameter(g).finite().unwrap_or(0)
        ));
    }
    if !matches!(class, Classification::NotExtremal { .. }) && !certificate_check(g, &class)? {
        fail.push(format!(
            "certificate for {} does not re-validate",
            class.label()
        ));
    }
    Ok(Ran::Evaluated)
}

/// `2cos(iπ/(n+1))` equals `mu` for some `1 <= i <= n`, for `mu` in
/// `{-1, 0, 1}`; `None` for other `mu`.
pub fn path_admits_eigenvalue(n: usize, mu: i64) -> Option<bool> {
    // 2cos(θ) = -1, 0, 1 exactly at θ = 2π/3, π/2, π/3 on (0, π)
    let sixths = match mu {
        -1 => 4,
        0 => 3,
        1 => 2,
        _ => return None,
    };
    Some((1..=n).any(|i| 6 * i == sixths * (n + 1)))
}

fn extremal_eigenvalue(g: &Graph, out: &mut Outcome, fail: &mut Vec<String>) -> Result<Ran> {
    if !g.is_path() {
        if !extremal_eigenvalue_check(g)? {
            let (top, factors) = max_multiplicity(g);
            let shown: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
            fail.push(format!(
                "multiplicity {top} attained by [{}]",
                shown.join(", ")
            ));
        }
        return Ok(Ran::Evaluated);
    }
    out.bump("extremal-eigenvalue:path");
    let n = g.order();
    for mu in [-1, 0, 1] {
        let expected = path_admits_eigenvalue(n, mu).expect("mu in range");
        let m = multiplicity(g, &rational_from_i64(mu));
        if (m == 1) != expected || m > 1 {
            fail.push(format!(
                "P_{n} has m({mu}) = {m}, cosine formula says {expected}"
            ));
        }
    }
    Ok(Ran::Evaluated)
}

fn subgraphs(g: &Graph, fail: &mut Vec<String>) -> Result<Ran> {
    let n = g.order();
    for mu_i in TEST_EIGENVALUES {
        let mu = rational_from_i64(mu_i);
        if n >= 2 {
            for v in 0..n {
                if !interlacing_check(g, v, &mu)? {
                    fail.push(format!("interlacing fails at vertex {v}, mu = {mu_i}"));
                }
            }
        }
        for mask in 1u64..(1 << n) - 1 {
            let keep: Vec<usize> = crate::graph::bits(mask).collect();
            if !rank_monotonicity_check(g, &keep, &mu)? {
                fail.push(format!(
                    "rank grows on induced subgraph {keep:?}, mu = {mu_i}"
                ));
            }
        }
    }
    if n >= 3 {
        for x in (0..n).filter(|&x| g.degree(x) == 1) {
            if !pendant_nullity_check(g, x)? {
                fail.push(format!("pendant deletion at {x} changes the nullity"));
            }
        }
    }
    Ok(Ran::Evaluated)
}

fn stars(g: &Graph, fail: &mut Vec<String>) -> Result<Ran> {
    for mu_i in TEST_EIGENVALUES {
        let mu = rational_from_i64(mu_i);
        if !projection_identity_check(g, &mu) {
            fail.push(format!("projection identity fails at mu = {mu_i}"));
        }
        let m = multiplicity(g, &mu);
        let p = eigenprojection(&IntMatrix::adjacency(g), &mu)?;
        if p.rank() != m {
            fail.push(format!(
                "eigenprojection rank {} but multiplicity {m} at mu = {mu_i}",
                p.rank()
            ));
        }
        if m == 0 {
            continue;
        }
        let sets = find_star_sets(g, &mu, usize::MAX)?;
        if sets.is_empty() {
            fail.push(format!("no star set for mu = {mu_i}"));
        }
        for dec in &sets {
            star_set_properties(g, &mu, mu_i, dec, fail)?;
        }
    }
    Ok(Ran::Evaluated)
}

fn star_set_properties(
    g: &Graph,
    mu: &Rational,
    mu_i: i64,
    dec: &crate::star::StarDecomposition,
    fail: &mut Vec<String>,
) -> Result<()> {
    let x = &dec.star_set;
    if !is_star_complement(g, mu, &dec.complement)? {
        fail.push(format!(
            "{x:?} returned but is not a star set for mu = {mu_i}"
        ));
        return Ok(());
    }
    // K_1 at mu = 0 has an empty star complement, which dominates nothing
    if !dec.complement.is_empty() && !dominating_check(g, &dec.complement) {
        fail.push(format!(
            "complement of {x:?} is not dominating, mu = {mu_i}"
        ));
    }
    if !star_set_basis_check(g, dec)? {
        fail.push(format!("projections of {x:?} are dependent, mu = {mu_i}"));
    }
    if x.len() >= 2 {
        for &u in x {
            if !star_subset_check(g, mu, x, &[u])? {
                fail.push(format!(
                    "removing {u} from {x:?} breaks the star set, mu = {mu_i}"
                ));
            }
        }
    }
    Ok(())
}

/// Deterministic clique sizes `1, 2, 3, 1, 2, 3, ...` used to blow up
/// canonical graphs.
pub fn cycling_sizes(n: usize) -> Vec<usize> {
    (0..n).map(|v| 1 + v % 3).collect()
}

fn quotients(g: &Graph, fail: &mut Vec<String>) -> Result<Ran> {
    let (gc, part) = quotient(g);
    if !is_canonical(&gc) {
        fail.push(format!("quotient {gc} still has twins"));
    }
    let (gcc, _) = quotient(&gc);
    if gcc != gc {
        fail.push("quotient is not idempotent".into());
    }
    let rebuilt = blowup(&BlowupSpec::new(gc.clone(), part.sizes())?)?;
    if !are_isomorphic(&rebuilt, g) {
        fail.push("blowing the quotient back up does not recover the graph".into());
    }
    if is_canonical(g) {
        let sizes = cycling_sizes(g.order());
        let big = blowup(&BlowupSpec::new(g.clone(), sizes.clone())?)?;
        let (back, back_part) = quotient(&big);
        if !are_isomorphic(&back, g) {
            fail.push(format!("quotient of the {sizes:?} blowup is {back}"));
        }
        let (mut want, mut got) = (sizes, back_part.sizes());
        want.sort_unstable();
        got.sort_unstable();
        if want != got {
            fail.push(format!("blowup class sizes {got:?} expected {want:?}"));
        }
    }
    if !diameter_transfer_check(g)? {
        fail.push(format!(
            "quotient diameter {} differs from {}",
            diameter(&gc),
            diameter(g)
        ));
    }
    if g.order() >= 2 {
        if !multiplicity_transfer_check(g)? {
            fail.push("-1 multiplicity does not transfer to the quotient".into());
        }
        let part = rho_partition(g);
        for u in (0..g.order()).filter(|&u| part.classes()[part.class_of(u)].len() > 1) {
            if !duplicate_peeling_check(g, u)? {
                fail.push(format!("removing twin {u} does not lower m(-1) by one"));
            }
        }
    }
    Ok(Ran::Evaluated)
}

/// Multiplicity of `mu` read off the characteristic polynomial, the
/// second pipeline compared against the rank computation.
pub fn multiplicity_by_char_poly(g: &Graph, mu: &Rational) -> usize {
    crate::linalg::eval_multiplicity(&crate::spectra::char_poly(g), mu)
        .expect("characteristic polynomials are nonzero")
}
