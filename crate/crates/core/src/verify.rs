//! Family sweeps and the random-graph suite behind `chainres verify`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chain::{ChainCycle, Parity};
use crate::corpus::random_corpus;
use crate::graph::Graph;
use crate::report::{labeled_edges, Check, InvariantReport, ReportError};
use crate::resolving::claims::{claimed_representations, ClaimStatus};
use crate::resolving::{metric_dimension_exact, partition_dimension_chain, partition_dimension_exact, MAX_EXACT_VERTICES};
use crate::strong::{
    min_vertex_cover, paper_cover, paper_cover_literal, predicted_srg, predicted_srg_odd_literal, sdim_formula,
    strong_metric_dimension, strong_resolving_graph, uncovered_edges, SdimMethod, MAX_BRUTE_FORCE_VERTICES,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("invalid range: {0}")]
    Range(String),
    #[error(transparent)]
    Report(#[from] ReportError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub family: Parity,
    pub n_values: Vec<usize>,
    pub m_values: Vec<usize>,
    pub seed: u64,
    /// Number of random connected graphs (at most 9 vertices) to check.
    pub corpus: usize,
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n_values.is_empty() || self.m_values.is_empty() {
            return Err(VerifyError::Range("need at least one n_i and one m".into()));
        }
        for &n in &self.n_values {
            match self.family {
                Parity::Even if n % 2 != 0 || n < 4 => {
                    return Err(VerifyError::Range(format!("even family needs even n_i >= 4, got {n}")))
                }
                Parity::Odd if n % 2 == 0 || n < 5 => {
                    return Err(VerifyError::Range(format!("odd family needs odd n_i >= 5 (below the odd-family hypothesis), got {n}")))
                }
                _ => {}
            }
        }
        if let Some(&m) = self.m_values.iter().find(|&&m| m < 2) {
            return Err(VerifyError::Range(format!("m must be at least 2, got {m}")));
        }
        Ok(())
    }

    /// Every length sequence in `n_values^m` for each `m`, in lexicographic order.
    pub fn instances(&self) -> Vec<Vec<usize>> {
        let mut ns = self.n_values.clone();
        ns.sort_unstable();
        ns.dedup();
        let mut ms = self.m_values.clone();
        ms.sort_unstable();
        ms.dedup();
        ms.iter().flat_map(|&m| std::iter::repeat_n(ns.clone(), m).multi_cartesian_product()).collect()
    }
}

/// Runs every theorem-level check on one chain cycle.
pub fn verify_chain(cc: &ChainCycle) -> Result<InvariantReport, ReportError> {
    let lg = cc.labeled();
    let g = cc.graph();
    let n = g.vertex_count();
    let mut r = InvariantReport::skeleton(cc.spec_string(), lg)?;

    match partition_dimension_chain(cc) {
        Ok(cert) => {
            r.pd = Some(cert.value);
            r.checks.push(Check::new("paper_partition_resolving", true));
        }
        Err(crate::resolving::ResolveError::WitnessFails(c)) => {
            r.checks.push(Check::with_detail("paper_partition_resolving", false, c.to_string()));
        }
        Err(e) => return Err(e.into()),
    }
    r.checks.push(Check::new("not_a_path", !g.is_path_graph()?));
    if n <= MAX_EXACT_VERTICES {
        let dm = g.distance_matrix();
        let exact = partition_dimension_exact(g, &dm, 3)?.map(|c| c.value);
        r.pd_exact = exact;
        r.checks.push(Check::new("exact_pd_is_3", exact == Some(3)));
    }

    let srg = strong_resolving_graph(g).map_err(ReportError::from)?;
    let predicted = predicted_srg(cc).map_err(ReportError::from)?;
    let srg = srg.with_prediction(predicted);
    let diff = srg.diff.as_ref().expect("prediction attached");
    let detail = format!("{} missing, {} extra", diff.missing.len(), diff.extra.len());
    r.checks.push(Check::with_detail("srg_prediction_exact", diff.is_empty(), detail));
    let cut_isolated = cc.cut_vertices().iter().all(|v| srg.isolated_vertices.contains(v));
    r.checks.push(Check::new("cut_vertices_isolated_in_srg", cut_isolated));

    let alpha = min_vertex_cover(&srg.graph()).size;
    r.alpha = Some(alpha);
    let formula = sdim_formula(cc.parity(), cc.cycle_lengths()).map_err(ReportError::from)?;
    r.sdim_formula = Some(formula);
    r.sdim = Some(alpha);
    r.checks.push(Check::new("formula_equals_alpha", formula == alpha));
    match paper_cover(cc) {
        Ok(c) => {
            r.paper_cover = Some(c.size);
            r.checks.push(Check::new("paper_cover_size_equals_formula", c.size == formula));
        }
        Err(e) => r.checks.push(Check::with_detail("paper_cover_size_equals_formula", false, e.to_string())),
    }
    if n <= MAX_BRUTE_FORCE_VERTICES {
        let brute = strong_metric_dimension(g, SdimMethod::BruteForce).map_err(ReportError::from)?.value;
        r.sdim_brute = Some(brute);
        r.checks.push(Check::new("brute_force_equals_alpha", brute == alpha));
    }

    if cc.parity() == Parity::Odd {
        let literal = srg.clone().with_prediction(predicted_srg_odd_literal(cc).map_err(ReportError::from)?);
        let d = literal.diff.expect("prediction attached");
        if !d.is_empty() {
            let extra: Vec<String> = labeled_edges(lg, &d.extra).iter().map(|[a, b]| format!("{a}-{b}")).collect();
            r.notes.push(format!("literal odd edge sets: {} extra [{}], {} missing", d.extra.len(), extra.join(" "), d.missing.len()));
        }
    }
    let literal_cover = paper_cover_literal(cc).map_err(ReportError::from)?;
    let missed = uncovered_edges(&srg.computed_edges, &literal_cover);
    if !missed.is_empty() {
        let first: Vec<String> = labeled_edges(lg, &missed).iter().take(3).map(|[a, b]| format!("{a}-{b}")).collect();
        r.notes.push(format!(
            "literal cover selection has {} vertices and misses {} edges (e.g. {})",
            literal_cover.len(),
            missed.len(),
            first.join(" ")
        ));
    }
    let claims = claimed_representations(cc);
    r.notes.push(format!(
        "representation claims: {} mismatching claims, {} vertices uncovered, {} conflicting, {} dangling references",
        claims.mismatches().len(),
        claims.count(ClaimStatus::Uncovered),
        claims.count(ClaimStatus::Conflict),
        claims.dangling.len()
    ));
    Ok(r)
}

/// Checks on one random graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomRecord {
    pub index: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub sdim_brute: usize,
    pub alpha: usize,
    pub independence: usize,
    pub pd: usize,
    pub dim: usize,
    pub checks: Vec<Check>,
}

impl RandomRecord {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Largest independent set size by subset enumeration.
fn independence_exhaustive(g: &Graph) -> usize {
    let n = g.vertex_count();
    let masks: Vec<u32> = (0..n).map(|v| g.edges().iter().fold(0, |m, &(a, b)| if a == v { m | 1 << b } else if b == v { m | 1 << a } else { m })).collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s & (1 << v) == 0 || masks[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn verify_random(index: usize, g: &Graph) -> Result<RandomRecord, ReportError> {
    let srg = strong_resolving_graph(g)?.graph();
    let cover = min_vertex_cover(&srg);
    let brute = strong_metric_dimension(g, SdimMethod::BruteForce)?.value;
    let independence = independence_exhaustive(&srg);
    let dm = g.distance_matrix();
    let pd = partition_dimension_exact(g, &dm, g.vertex_count())?.ok_or(ReportError::NoPartition)?.value;
    let dim = metric_dimension_exact(g, &dm)?;
    let n = g.vertex_count();
    Ok(RandomRecord {
        index,
        vertex_count: n,
        edge_count: g.edge_count(),
        sdim_brute: brute,
        alpha: cover.size,
        independence,
        pd,
        dim,
        checks: vec![
            Check::new("brute_force_equals_alpha", brute == cover.size),
            Check::new("alpha_plus_beta_is_n", cover.size + independence == n),
            Check::new("pd_at_most_dim_plus_one", pd <= dim + 1),
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub random_graphs: usize,
    pub random_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRun {
    pub family: Parity,
    pub n_values: Vec<usize>,
    pub m_values: Vec<usize>,
    pub seed: u64,
    pub instances: Vec<InvariantReport>,
    pub random: Vec<RandomRecord>,
    pub summary: Summary,
}

impl VerificationRun {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.random_failed == 0
    }

    /// Short plain-text account of the run, naming every failed check.
    pub fn human_summary(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "{} chains, n_i in {:?}, m in {:?}: {} instances, {} passed, {} failed\n",
            self.family, self.n_values, self.m_values, s.instances, s.passed, s.failed
        );
        for r in self.instances.iter().filter(|r| !r.passed()) {
            let names: Vec<&str> = r.failures().map(|c| c.name).collect();
            out.push_str(&format!("  FAIL {}: {}\n", r.instance, names.join(", ")));
        }
        if s.random_graphs > 0 {
            out.push_str(&format!("random corpus (seed {}): {} graphs, {} failed\n", self.seed, s.random_graphs, s.random_failed));
            for r in self.random.iter().filter(|r| !r.passed()) {
                let names: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
                out.push_str(&format!("  FAIL graph #{}: {}\n", r.index, names.join(", ")));
            }
        }
        out
    }
}

/// Sweeps every instance of the configured family in parallel; results keep
/// the deterministic instance order.
pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationRun, VerifyError> {
    cfg.validate()?;
    let instances: Vec<InvariantReport> = cfg
        .instances()
        .par_iter()
        .map(|ns| {
            let cc = ChainCycle::new(cfg.family, ns).map_err(|e| VerifyError::Range(e.to_string()))?;
            Ok(verify_chain(&cc)?)
        })
        .collect::<Result<_, VerifyError>>()?;
    let corpus = random_corpus(cfg.seed, cfg.corpus, 9);
    let random: Vec<RandomRecord> =
        corpus.par_iter().enumerate().map(|(i, g)| verify_random(i, g)).collect::<Result<_, ReportError>>()?;
    let passed = instances.iter().filter(|r| r.passed()).count();
    let summary = Summary {
        instances: instances.len(),
        passed,
        failed: instances.len() - passed,
        random_graphs: random.len(),
        random_failed: random.iter().filter(|r| !r.passed()).count(),
    };
    Ok(VerificationRun {
        family: cfg.family,
        n_values: cfg.n_values.clone(),
        m_values: cfg.m_values.clone(),
        seed: cfg.seed,
        instances,
        random,
        summary,
    })
}
