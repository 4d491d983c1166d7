//! JSON-ready reports over a single instance.

use serde::Serialize;
use thiserror::Error;

use crate::chain::{ChainCycle, LabeledGraph};
use crate::graph::{GraphError, Vertex};
use crate::instance::Instance;
use crate::resolving::{partition_dimension_chain, partition_dimension_exact, LowerBound, ResolveError};
use crate::strong::{
    min_vertex_cover, paper_cover, predicted_srg, sdim_formula, strong_metric_dimension, strong_resolving_graph, Edge,
    SdimCertificate, SdimMethod, SdimRoute, SrgReport, StrongError,
};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{0} needs a chain-cycle instance (even:... or odd:...)")]
    NotAChain(&'static str),
    #[error("no resolving partition found")]
    NoPartition,
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Strong(#[from] StrongError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PdMethod {
    Chain,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdimChoice {
    Cover,
    Brute,
    Formula,
}

/// A named pass/fail assertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &'static str, passed: bool) -> Self {
        Check { name, passed, detail: None }
    }

    pub fn with_detail(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name, passed, detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub instance: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub diameter: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_method: Option<PdMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_lower_bound: Option<LowerBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_witness: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_exact: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdim_route: Option<SdimRoute>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdim_certificate: Option<Vec<String>>,
    /// Minimum vertex cover of the computed strong resolving graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdim_formula: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_cover: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdim_brute: Option<usize>,
    /// Observations that are reported but never fail the run.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub(crate) fn skeleton(name: String, lg: &LabeledGraph) -> Result<Self, ReportError> {
        let g = lg.graph();
        Ok(InvariantReport {
            instance: name,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            diameter: g.diameter()?,
            ..Default::default()
        })
    }
}

pub(crate) fn labels(lg: &LabeledGraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| lg.label_of(v).to_string()).collect()
}

/// Computes pd and sdim by the requested methods and cross-checks whatever
/// else is cheap: `alpha` against the chosen sdim value, and for chain
/// cycles the closed form when its hypotheses hold.
///
/// `pd_method` defaults to `Chain` on chain cycles, `Exact` otherwise.
pub fn invariants(inst: &Instance, pd_method: Option<PdMethod>, sdim: SdimChoice) -> Result<InvariantReport, ReportError> {
    let lg = inst.labeled();
    let g = lg.graph();
    let mut r = InvariantReport::skeleton(inst.name(), lg)?;

    let pd_method = pd_method.unwrap_or(if inst.chain().is_some() { PdMethod::Chain } else { PdMethod::Exact });
    let cert = match pd_method {
        PdMethod::Chain => partition_dimension_chain(inst.chain().ok_or(ReportError::NotAChain("--pd-method chain"))?)?,
        PdMethod::Exact => {
            let dm = g.distance_matrix();
            partition_dimension_exact(g, &dm, g.vertex_count())?.ok_or(ReportError::NoPartition)?
        }
    };
    r.pd = Some(cert.value);
    r.pd_method = Some(pd_method);
    r.pd_lower_bound = Some(cert.lower_bound_reason);
    r.pd_witness = Some(cert.witness.blocks().iter().map(|b| labels(lg, b)).collect());

    let alpha_result = strong_metric_dimension(g, SdimMethod::CoverOfSrg)?;
    let alpha = alpha_result.value;
    r.alpha = Some(alpha);
    let formula = inst.chain().map(|cc| sdim_formula(cc.parity(), cc.cycle_lengths()));

    match sdim {
        SdimChoice::Cover => {
            r.sdim = Some(alpha);
            r.sdim_route = Some(SdimRoute::CoverOfSrg);
            if let SdimCertificate::Cover(c) = &alpha_result.certificate {
                r.sdim_certificate = Some(labels(lg, &c.cover));
            }
        }
        SdimChoice::Brute => {
            let brute = strong_metric_dimension(g, SdimMethod::BruteForce)?;
            if let SdimCertificate::StrongResolvingSet(s) = &brute.certificate {
                r.sdim_certificate = Some(labels(lg, s));
            }
            r.sdim = Some(brute.value);
            r.sdim_brute = Some(brute.value);
            r.sdim_route = Some(SdimRoute::BruteForce);
            r.checks.push(Check::new("brute_force_equals_alpha", brute.value == alpha));
        }
        SdimChoice::Formula => {
            let value = formula.clone().ok_or(ReportError::NotAChain("--sdim-method formula"))??;
            r.sdim = Some(value);
            r.sdim_route = Some(SdimRoute::ClosedForm);
        }
    }
    if let Some(Ok(value)) = formula {
        r.sdim_formula = Some(value);
        r.checks.push(Check::new("formula_equals_alpha", value == alpha));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledDiff {
    pub missing: Vec<[String; 2]>,
    pub extra: Vec<[String; 2]>,
}

/// Strong resolving graph in label form, edges sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SrgJson {
    pub computed_edges: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_edges: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<LabeledDiff>,
    pub isolated_vertices: Vec<String>,
    pub cover: Vec<String>,
    pub alpha: usize,
}

pub(crate) fn labeled_edges<'a>(lg: &LabeledGraph, edges: impl IntoIterator<Item = &'a Edge>) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = edges
        .into_iter()
        .map(|&(u, v)| {
            let (a, b) = (lg.label_of(u).to_string(), lg.label_of(v).to_string());
            if a <= b { [a, b] } else { [b, a] }
        })
        .collect();
    out.sort();
    out
}

pub fn srg_json(lg: &LabeledGraph, report: &SrgReport) -> SrgJson {
    let cover = min_vertex_cover(&report.graph());
    let mut cover_labels = labels(lg, &cover.cover);
    cover_labels.sort();
    let mut isolated = labels(lg, &report.isolated_vertices);
    isolated.sort();
    SrgJson {
        computed_edges: labeled_edges(lg, &report.computed_edges),
        predicted_edges: report.predicted_edges.as_ref().map(|p| labeled_edges(lg, p)),
        diff: report.diff.as_ref().map(|d| LabeledDiff { missing: labeled_edges(lg, &d.missing), extra: labeled_edges(lg, &d.extra) }),
        isolated_vertices: isolated,
        cover: cover_labels,
        alpha: cover.size,
    }
}

/// Computed strong resolving graph, with the closed-form prediction attached
/// for chain cycles whose hypotheses it covers.
pub fn srg_for(inst: &Instance) -> Result<SrgJson, ReportError> {
    let mut report = strong_resolving_graph(inst.graph())?;
    if let Some(cc) = inst.chain() {
        match predicted_srg(cc) {
            Ok(p) => report = report.with_prediction(p),
            Err(StrongError::Hypothesis(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(srg_json(inst.labeled(), &report))
}

/// Labels of the constructed closed-form cover.
pub fn paper_cover_labels(cc: &ChainCycle) -> Result<Vec<String>, ReportError> {
    let c = paper_cover(cc)?;
    Ok(labels(cc.labeled(), &c.cover))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_route_on_even_example() {
        let inst = Instance::parse("even:8,10,8").unwrap();
        let r = invariants(&inst, None, SdimChoice::Formula).unwrap();
        assert_eq!(r.sdim, Some(11));
        assert_eq!(r.alpha, Some(11));
        assert_eq!(r.pd, Some(3));
        assert!(r.passed());
    }

    #[test]
    fn exact_pd_gate() {
        let inst = Instance::parse("even:8,10,8").unwrap();
        let err = invariants(&inst, Some(PdMethod::Exact), SdimChoice::Cover).unwrap_err();
        assert!(err.to_string().contains("size gate"));
    }

    #[test]
    fn plain_graph_rejects_chain_methods() {
        let inst = Instance::parse("cycle:6").unwrap();
        assert!(matches!(invariants(&inst, Some(PdMethod::Chain), SdimChoice::Cover), Err(ReportError::NotAChain(_))));
        let r = invariants(&inst, None, SdimChoice::Brute).unwrap();
        assert_eq!((r.pd, r.sdim), (Some(3), Some(3)));
    }

    #[test]
    fn srg_json_for_small_chain() {
        let inst = Instance::parse("even:4,4").unwrap();
        let j = srg_for(&inst).unwrap();
        assert_eq!(j.computed_edges.len(), 3);
        assert_eq!(j.alpha, 3);
        assert!(j.diff.unwrap().missing.is_empty());
    }
}
