//! Verification suites: each one computes a group of quantities on a single
//! graph and checks the inequalities and identities that relate them.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::content::{
    dirichlet_content_exact, hardy_path, isoperimetric_exact, level_set_quotient, neumann_content_exact,
    neumann_content_sweep, ContentResult,
};
use crate::error::{Error, Result};
use crate::graph::{pinch, VertexSet, WeightedGraph};
use crate::resistance::effective_resistance;
use crate::rng::Rng;
use crate::spectral::{dirichlet_eigenvalue, neumann_eigenvalue, SpectralResult};

use super::report::{Check, GraphSummary, Real, Relation, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Dirichlet,
    Neumann,
    Cheeger,
    Pinch,
    ResSum,
    PathReduction,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Dirichlet,
        Suite::Neumann,
        Suite::Cheeger,
        Suite::Pinch,
        Suite::ResSum,
        Suite::PathReduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dirichlet => "dirichlet",
            Suite::Neumann => "neumann",
            Suite::Cheeger => "cheeger",
            Suite::Pinch => "pinch",
            Suite::ResSum => "ressum",
            Suite::PathReduction => "path-reduction",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOptions {
    /// Boundary for the Dirichlet and path-reduction suites; `{v0}` if unset.
    pub boundary: Option<VertexSet>,
    pub suites: Vec<Suite>,
    pub tolerance: f64,
    pub seed: u64,
    /// Random potentials pinched by the pinch suite.
    pub pinch_samples: usize,
    /// Random pinches drawn by the resistance-sum suite.
    pub ressum_samples: usize,
    /// Bound on the relative eigen-residual `‖Lx − λMx‖ / ‖Lx‖`.
    pub residual_tolerance: f64,
    /// Fill `timing_ms`. Off by default so that reports are reproducible.
    pub record_timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            boundary: None,
            suites: Suite::ALL.to_vec(),
            tolerance: 1e-9,
            seed: 0,
            pinch_samples: 50,
            ressum_samples: 100,
            residual_tolerance: 1e-9,
            record_timing: false,
        }
    }
}

/// What one suite contributes to a report.
#[derive(Default)]
struct Section {
    quantities: Vec<(String, f64)>,
    checks: Vec<Check>,
    witnesses: Vec<(String, Vec<String>)>,
    timing: Vec<(String, f64)>,
}

impl Section {
    fn quantity(&mut self, name: &str, value: f64) {
        self.quantities.push((name.to_string(), value));
    }

    fn witness(&mut self, graph: &WeightedGraph, name: &str, set: &VertexSet) {
        self.witnesses
            .push((name.to_string(), set.iter().map(|v| graph.label(v)).collect()));
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

/// Results shared between suites, computed once up front.
struct Shared {
    boundary: VertexSet,
    neumann: Option<Result<SpectralResult>>,
    psi2: Option<Result<ContentResult>>,
    dirichlet: Option<Result<SpectralResult>>,
    timing: Vec<(String, f64)>,
}

impl Shared {
    fn compute(graph: &WeightedGraph, opts: &SuiteOptions) -> Self {
        let wants = |list: &[Suite]| opts.suites.iter().any(|s| list.contains(s));
        let boundary = opts.boundary.clone().unwrap_or_else(|| VertexSet::singleton(0));
        let mut timing = Vec::new();
        let mut run = |name: &str, on: bool, f: &dyn Fn() -> Result<_>| {
            on.then(|| {
                let (r, ms) = timed(f);
                timing.push((name.to_string(), ms));
                r
            })
        };
        let neumann = run(
            "lambda2",
            wants(&[Suite::Neumann, Suite::Cheeger, Suite::Pinch]),
            &|| neumann_eigenvalue(graph),
        );
        let dirichlet = run(
            "lambda_dirichlet",
            wants(&[Suite::Dirichlet, Suite::PathReduction]),
            &|| dirichlet_eigenvalue(graph, &boundary),
        );
        let (psi2, ms) = timed(|| wants(&[Suite::Neumann, Suite::Cheeger]).then(|| neumann_content_exact(graph)));
        if psi2.is_some() {
            timing.push(("psi2".to_string(), ms));
        }
        Self {
            boundary,
            neumann,
            psi2,
            dirichlet,
            timing,
        }
    }
}

fn get<T>(slot: &Option<Result<T>>) -> std::result::Result<&T, String> {
    match slot {
        Some(Ok(value)) => Ok(value),
        Some(Err(e)) => Err(e.to_string()),
        None => Err("not computed".to_string()),
    }
}

/// Runs the requested suites and assembles a report.
///
/// Suites run in parallel; their sections are merged in the canonical suite
/// order, and every random draw comes from a generator seeded with
/// `opts.seed` inside its own suite, so the report is a function of the
/// inputs alone. Computations that fail become failed checks carrying the
/// error message.
pub fn run_suite(graph: &WeightedGraph, opts: &SuiteOptions) -> VerificationReport {
    let shared = Shared::compute(graph, opts);
    let mut suites = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let sections: Vec<Section> = suites
        .par_iter()
        .map(|&suite| {
            let ctx = Ctx { graph, opts, shared: &shared };
            match suite {
                Suite::Dirichlet => ctx.dirichlet(),
                Suite::Neumann => ctx.neumann(),
                Suite::Cheeger => ctx.cheeger(),
                Suite::Pinch => ctx.pinch(),
                Suite::ResSum => ctx.ressum(),
                Suite::PathReduction => ctx.path_reduction(),
            }
        })
        .collect();

    let mut report = empty_report(graph, opts.seed, opts.tolerance);
    for section in sections {
        report
            .quantities
            .extend(section.quantities.into_iter().map(|(k, v)| (k, Real(v))));
        report.checks.extend(section.checks);
        report.witnesses.extend(section.witnesses);
        if opts.record_timing {
            report
                .timing_ms
                .extend(section.timing.into_iter().map(|(k, v)| (k, Real(v))));
        }
    }
    if opts.record_timing {
        report
            .timing_ms
            .extend(shared.timing.iter().map(|(k, v)| (k.clone(), Real(*v))));
    }
    report
}

fn empty_report(graph: &WeightedGraph, seed: u64, tolerance: f64) -> VerificationReport {
    VerificationReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        tolerance: Real(tolerance),
        graph_summary: GraphSummary {
            n: graph.vertex_count(),
            edge_count: graph.edge_count(),
            mass_total: Real(graph.total_mass()),
        },
        quantities: BTreeMap::new(),
        checks: Vec::new(),
        witnesses: BTreeMap::new(),
        timing_ms: BTreeMap::new(),
    }
}

/// Quantities only, no checks: `λ₂`, `Ψ₂`, `H₂`, the sweep bound and `Φ`,
/// plus `λ(G, S)`, `Ψ(G, S)` and `H(G, S)` when a boundary is given.
/// Quantities that cannot be computed are returned as `(name, error)`.
pub fn analyze(graph: &WeightedGraph, boundary: Option<&VertexSet>) -> (VerificationReport, Vec<(String, Error)>) {
    let mut report = empty_report(graph, 0, 0.0);
    let mut errors = Vec::new();
    let mut put = |name: &str, r: Result<f64>| match r {
        Ok(v) => {
            report.quantities.insert(name.to_string(), Real(v));
        }
        Err(e) => errors.push((name.to_string(), e)),
    };
    put("lambda2", neumann_eigenvalue(graph).map(|r| r.eigenvalue));
    match neumann_content_exact(graph) {
        Ok(r) => {
            put("psi2", Ok(r.value));
            put("h2", Ok(r.hardy()));
        }
        Err(e) => put("psi2", Err(e)),
    }
    put("psi2_sweep", neumann_content_sweep(graph).map(|r| r.value));
    put("phi", isoperimetric_exact(graph).map(|r| r.value));
    if let Some(s) = boundary {
        put("lambda_dirichlet", dirichlet_eigenvalue(graph, s).map(|r| r.eigenvalue));
        match dirichlet_content_exact(graph, s) {
            Ok(r) => {
                put("psi_dirichlet", Ok(r.value));
                put("h_dirichlet", Ok(r.hardy()));
            }
            Err(e) => put("psi_dirichlet", Err(e)),
        }
    }
    (report, errors)
}

/// Zeroes entries negligible against the largest one, so that rounding
/// noise on a nodal vertex does not create a spurious sign.
fn quantize(x: &[f64]) -> Vec<f64> {
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    x.iter()
        .map(|&v| if v.abs() <= 1e-12 * scale { 0.0 } else { v })
        .collect()
}

/// A potential with both signs: Gaussian-like draws minus their mean.
pub fn random_mixed_potential(rng: &mut Rng, n: usize) -> Vec<f64> {
    loop {
        let mut f: Vec<f64> = (0..n).map(|_| rng.gaussian_like()).collect();
        let mean = f.iter().sum::<f64>() / n as f64;
        for x in &mut f {
            *x -= mean;
        }
        if f.iter().any(|&x| x > 0.0) && f.iter().any(|&x| x < 0.0) {
            return f;
        }
    }
}

/// A uniformly random nonempty subset of `set`.
pub fn random_subset(rng: &mut Rng, set: &VertexSet) -> VertexSet {
    loop {
        let picked: Vec<_> = set.iter().filter(|_| rng.bernoulli(0.5)).collect();
        if !picked.is_empty() {
            return VertexSet::new(picked, set.bound()).expect("subset of a valid set");
        }
    }
}

/// `max(λ(G', F≤0), λ(G', F≥0))` for the pinch of `graph` at `f`.
pub fn pinch_max_eigenvalue(graph: &WeightedGraph, f: &[f64]) -> Result<f64> {
    let p = pinch(graph, f)?;
    let below = dirichlet_eigenvalue(&p.graph, &p.nonpositive)?;
    let above = dirichlet_eigenvalue(&p.graph, &p.nonnegative)?;
    Ok(below.eigenvalue.max(above.eigenvalue))
}

/// One random resistance-sum instance: returns
/// `(R'(A, F₀) + R'(B, F₀), R'(A, B))`.
pub fn resistance_sum_sample(graph: &WeightedGraph, rng: &mut Rng) -> Result<(f64, f64)> {
    let f = random_mixed_potential(rng, graph.vertex_count());
    let p = pinch(graph, &f)?;
    let a = random_subset(rng, &p.negative());
    let b = random_subset(rng, &p.positive());
    let lhs = effective_resistance(&p.graph, &a, &p.zero_set)? + effective_resistance(&p.graph, &b, &p.zero_set)?;
    Ok((lhs, effective_resistance(&p.graph, &a, &b)?))
}

struct Ctx<'a> {
    graph: &'a WeightedGraph,
    opts: &'a SuiteOptions,
    shared: &'a Shared,
}

impl Ctx<'_> {
    fn cmp(&self, name: &str, lhs: f64, relation: Relation, rhs: f64) -> Check {
        Check::compare(name, lhs, relation, rhs, self.opts.tolerance)
    }

    fn dirichlet(&self) -> Section {
        let mut out = Section::default();
        let s = &self.shared.boundary;
        let lambda = get(&self.shared.dirichlet);
        let (psi, ms) = timed(|| dirichlet_content_exact(self.graph, s));
        out.timing.push(("psi_dirichlet".into(), ms));
        if let Ok(l) = lambda {
            out.quantity("lambda_dirichlet", l.eigenvalue);
        }
        if let Ok(p) = &psi {
            out.quantity("psi_dirichlet", p.value);
            out.quantity("h_dirichlet", p.hardy());
            out.witness(self.graph, "psi_dirichlet", &p.witness_a);
        }
        match (lambda.clone(), &psi) {
            (Ok(l), Ok(p)) => {
                out.checks.push(self.cmp("dirichlet_lower", p.value / 4.0, Relation::Le, l.eigenvalue));
                out.checks.push(self.cmp("dirichlet_upper", l.eigenvalue, Relation::Le, p.value));
            }
            (Err(reason), _) => {
                out.checks.push(Check::failed("dirichlet_lower", Relation::Le, reason.clone()));
                out.checks.push(Check::failed("dirichlet_upper", Relation::Le, reason));
            }
            (_, Err(e)) => {
                out.checks.push(Check::failed("dirichlet_lower", Relation::Le, e.to_string()));
                out.checks.push(Check::failed("dirichlet_upper", Relation::Le, e.to_string()));
            }
        }
        if let Ok(l) = lambda {
            out.checks.push(self.cmp(
                "dirichlet_residual",
                l.relative_residual(self.graph),
                Relation::Le,
                self.opts.residual_tolerance,
            ));
        }
        if *s == VertexSet::singleton(0) {
            match (hardy_path(self.graph), &psi) {
                (Err(Error::NotAPath), _) => {}
                (Ok(fast), Ok(exact)) => {
                    let mut check = self.cmp("hardy_path", fast.value, Relation::Eq, exact.value);
                    if fast.witness_a != exact.witness_a {
                        check.holds = false;
                        check = check.with_reason(format!(
                            "witness {} differs from {}",
                            fast.witness_a, exact.witness_a
                        ));
                    }
                    out.checks.push(check);
                }
                (Err(e), _) => out.checks.push(Check::failed("hardy_path", Relation::Eq, e.to_string())),
                (_, Err(e)) => out.checks.push(Check::failed("hardy_path", Relation::Eq, e.to_string())),
            }
        }
        out
    }

    fn neumann(&self) -> Section {
        let mut out = Section::default();
        let (sweep, ms) = timed(|| neumann_content_sweep(self.graph));
        out.timing.push(("psi2_sweep".into(), ms));
        let lambda = get(&self.shared.neumann);
        let psi2 = get(&self.shared.psi2);
        if let Ok(l) = lambda {
            out.quantity("lambda2", l.eigenvalue);
        }
        if let Ok(p) = psi2 {
            out.quantity("psi2", p.value);
            out.quantity("h2", p.hardy());
            out.witness(self.graph, "psi2_a", &p.witness_a);
            if let Some(b) = &p.witness_b {
                out.witness(self.graph, "psi2_b", b);
            }
        }
        if let Ok(w) = &sweep {
            out.quantity("psi2_sweep", w.value);
        }
        match (lambda.clone(), psi2.clone()) {
            (Ok(l), Ok(p)) => {
                out.checks.push(self.cmp("neumann_lower", p.value / 4.0, Relation::Le, l.eigenvalue));
                out.checks.push(self.cmp("neumann_upper", l.eigenvalue, Relation::Le, p.value));
            }
            (Err(reason), _) | (_, Err(reason)) => {
                out.checks.push(Check::failed("neumann_lower", Relation::Le, reason.clone()));
                out.checks.push(Check::failed("neumann_upper", Relation::Le, reason));
            }
        }
        match (&sweep, psi2.clone()) {
            (Ok(w), Ok(p)) => out.checks.push(self.cmp("sweep_soundness", w.value, Relation::Ge, p.value)),
            (Err(e), _) => out.checks.push(Check::failed("sweep_soundness", Relation::Ge, e.to_string())),
            (_, Err(reason)) => out.checks.push(Check::failed("sweep_soundness", Relation::Ge, reason)),
        }
        if let Ok(l) = lambda {
            out.checks.push(self.cmp(
                "neumann_residual",
                l.relative_residual(self.graph),
                Relation::Le,
                self.opts.residual_tolerance,
            ));
        }
        out
    }

    fn cheeger(&self) -> Section {
        let mut out = Section::default();
        let (phi, ms) = timed(|| isoperimetric_exact(self.graph));
        out.timing.push(("phi".into(), ms));
        let lambda = get(&self.shared.neumann);
        if let Ok(p) = &phi {
            out.quantity("phi", p.value);
            out.witness(self.graph, "phi", &p.witness_a);
        }
        match (lambda.clone(), &phi) {
            (Ok(l), Ok(p)) => {
                let ratio = (0..self.graph.vertex_count())
                    .map(|v| self.graph.degree(v) / self.graph.mass(v))
                    .fold(0.0f64, f64::max);
                let bound = (2.0 * l.eigenvalue * ratio).sqrt();
                out.quantity("cheeger_bound", bound);
                out.checks.push(self.cmp("cheeger_lower", l.eigenvalue / 2.0, Relation::Le, p.value));
                out.checks.push(self.cmp("cheeger_upper", p.value, Relation::Le, bound));
            }
            (Err(reason), _) => {
                out.checks.push(Check::failed("cheeger_lower", Relation::Le, reason.clone()));
                out.checks.push(Check::failed("cheeger_upper", Relation::Le, reason));
            }
            (_, Err(e)) => {
                out.checks.push(Check::failed("cheeger_lower", Relation::Le, e.to_string()));
                out.checks.push(Check::failed("cheeger_upper", Relation::Le, e.to_string()));
            }
        }
        match (get(&self.shared.psi2), &phi) {
            (Ok(p2), Ok(p)) => out.checks.push(self.cmp("phi_vs_psi2", p2.value / 2.0, Relation::Le, p.value)),
            (Err(reason), _) => out.checks.push(Check::failed("phi_vs_psi2", Relation::Le, reason)),
            (_, Err(e)) => out.checks.push(Check::failed("phi_vs_psi2", Relation::Le, e.to_string())),
        }
        out
    }

    fn pinch(&self) -> Section {
        let mut out = Section::default();
        let lambda = match get(&self.shared.neumann) {
            Ok(l) => l,
            Err(reason) => {
                for name in ["pinch_eigenvector", "pinch_energy"] {
                    out.checks.push(Check::failed(name, Relation::Eq, reason.clone()));
                }
                out.checks.push(Check::failed("pinch_random", Relation::Ge, reason));
                return out;
            }
        };
        let f = quantize(&lambda.eigenvector);
        match pinch(self.graph, &f) {
            Ok(p) => {
                match pinch_max_eigenvalue(self.graph, &f) {
                    Ok(m) => {
                        out.quantity("pinch_lambda_max", m);
                        out.checks.push(self.cmp("pinch_eigenvector", m, Relation::Eq, lambda.eigenvalue));
                    }
                    Err(e) => out.checks.push(Check::failed("pinch_eigenvector", Relation::Eq, e.to_string())),
                }
                out.checks.push(self.cmp(
                    "pinch_energy",
                    p.graph.energy(&p.f_extended),
                    Relation::Eq,
                    self.graph.energy(&f),
                ));
            }
            Err(e) => {
                out.checks.push(Check::failed("pinch_eigenvector", Relation::Eq, e.to_string()));
                out.checks.push(Check::failed("pinch_energy", Relation::Eq, e.to_string()));
            }
        }

        let (worst, ms) = timed(|| {
            let mut rng = Rng::new(self.opts.seed);
            let mut worst = f64::INFINITY;
            for _ in 0..self.opts.pinch_samples {
                let f = random_mixed_potential(&mut rng, self.graph.vertex_count());
                worst = worst.min(pinch_max_eigenvalue(self.graph, &f)?);
            }
            Ok::<_, Error>(worst)
        });
        out.timing.push(("pinch_random".into(), ms));
        match worst {
            Ok(w) if self.opts.pinch_samples > 0 => {
                out.quantity("pinch_random_min", w);
                out.checks.push(self.cmp("pinch_random", w, Relation::Ge, lambda.eigenvalue));
            }
            Ok(_) => {}
            Err(e) => out.checks.push(Check::failed("pinch_random", Relation::Ge, e.to_string())),
        }
        out
    }

    fn ressum(&self) -> Section {
        let mut out = Section::default();
        let (worst, ms) = timed(|| {
            let mut rng = Rng::new(self.opts.seed);
            let mut worst: Option<Check> = None;
            for _ in 0..self.opts.ressum_samples {
                let (lhs, rhs) = resistance_sum_sample(self.graph, &mut rng)?;
                let check = self.cmp("resistance_sum", lhs, Relation::Le, rhs);
                let slack = |c: &Check| c.slack.map_or(f64::NEG_INFINITY, |s| s.0);
                if worst.as_ref().is_none_or(|w| slack(&check) < slack(w)) {
                    worst = Some(check);
                }
            }
            Ok::<_, Error>(worst)
        });
        out.timing.push(("resistance_sum".into(), ms));
        match worst {
            Ok(Some(check)) => out.checks.push(check),
            Ok(None) => {}
            Err(e) => out.checks.push(Check::failed("resistance_sum", Relation::Le, e.to_string())),
        }
        out
    }

    fn path_reduction(&self) -> Section {
        let mut out = Section::default();
        let names = [
            ("level_set_quotient", Relation::Eq),
            ("split_edge_energy", Relation::Eq),
            ("quotient_energy", Relation::Eq),
        ];
        let result = get(&self.shared.dirichlet).and_then(|l| {
            let q = level_set_quotient(self.graph, &self.shared.boundary, &l.eigenvector).map_err(|e| e.to_string())?;
            let reduced = dirichlet_eigenvalue(&q.path, &VertexSet::singleton(0)).map_err(|e| e.to_string())?;
            Ok((l, q, reduced))
        });
        let (l, q, reduced) = match result {
            Ok(r) => r,
            Err(reason) => {
                for (name, rel) in names {
                    out.checks.push(Check::failed(name, rel, reason.clone()));
                }
                return out;
            }
        };
        out.quantity("lambda_quotient", reduced.eigenvalue);
        out.checks.push(self.cmp("level_set_quotient", reduced.eigenvalue, Relation::Eq, l.eigenvalue));

        let stepped: Vec<f64> = q.vertex_level.iter().map(|&i| q.levels[i]).collect();
        let original = self.graph.energy(&stepped[..self.graph.vertex_count()]);
        out.checks.push(self.cmp("split_edge_energy", q.split_graph.energy(&stepped), Relation::Eq, original));
        out.checks.push(self.cmp("quotient_energy", q.path.energy(&q.levels), Relation::Eq, original));
        out
    }
}
