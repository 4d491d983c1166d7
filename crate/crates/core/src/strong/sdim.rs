use itertools::Itertools;
use serde::Serialize;

use super::cover::{min_vertex_cover, uncovered_edges, CoverMethod, CoverResult};
use super::mmd::resolves_unchecked;
use super::predicted::{odd_far_path, predicted_srg, strong_resolving_graph};
use super::StrongError;
use crate::chain::{ChainCycle, Parity};
use crate::graph::{Graph, GraphError, Vertex};

/// Largest graph the subset search accepts.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdimMethod {
    CoverOfSrg,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdimRoute {
    CoverOfSrg,
    BruteForce,
    ClosedForm,
}

impl From<SdimMethod> for SdimRoute {
    fn from(m: SdimMethod) -> Self {
        match m {
            SdimMethod::CoverOfSrg => SdimRoute::CoverOfSrg,
            SdimMethod::BruteForce => SdimRoute::BruteForce,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdimCertificate {
    StrongResolvingSet(Vec<Vertex>),
    Cover(CoverResult),
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdimResult {
    pub value: usize,
    pub route: SdimRoute,
    pub certificate: SdimCertificate,
}

pub fn strong_metric_dimension(g: &Graph, method: SdimMethod) -> Result<SdimResult, StrongError> {
    match method {
        SdimMethod::CoverOfSrg => {
            let srg = strong_resolving_graph(g)?;
            let cover = min_vertex_cover(&srg.graph());
            Ok(SdimResult { value: cover.size, route: SdimRoute::CoverOfSrg, certificate: SdimCertificate::Cover(cover) })
        }
        SdimMethod::BruteForce => {
            let set = brute_force_basis(g)?;
            Ok(SdimResult { value: set.len(), route: SdimRoute::BruteForce, certificate: SdimCertificate::StrongResolvingSet(set) })
        }
    }
}

/// Lexicographically least strong resolving set of minimum size.
fn brute_force_basis(g: &Graph) -> Result<Vec<Vertex>, StrongError> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(StrongError::SizeGate { n, max: MAX_BRUTE_FORCE_VERTICES });
    }
    let dm = g.distance_matrix();
    if !dm.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    // for each pair, the vertices that strongly resolve it
    let masks: Vec<u16> = (0..n)
        .tuple_combinations()
        .map(|(u, v)| (0..n).filter(|&w| resolves_unchecked(&dm, w, u, v)).fold(0u16, |m, w| m | 1 << w))
        .collect();
    for k in 1..=n {
        for set in (0..n).combinations(k) {
            let bits = set.iter().fold(0u16, |m, &w| m | 1 << w);
            if masks.iter().all(|&m| m & bits != 0) {
                return Ok(set);
            }
        }
    }
    unreachable!("the full vertex set strongly resolves every pair")
}

/// Closed-form `sdim` of a chain cycle.
///
/// Even: `1 + sum (n_i - 2)/2`. Odd: `m - 1 + floor(n_1/2) + floor(n_m/2) + sum_{1<i<m} floor((n_i - 2)/2)`.
pub fn sdim_formula(parity: Parity, ns: &[usize]) -> Result<usize, StrongError> {
    let m = ns.len();
    if m < 2 {
        return Err(StrongError::Hypothesis(format!("need at least 2 cycles, got {m}")));
    }
    match parity {
        Parity::Even => {
            if let Some(&n) = ns.iter().find(|&&n| n % 2 != 0 || n < 4) {
                return Err(StrongError::Hypothesis(format!("even family needs even n_i >= 4, got {n}")));
            }
            Ok(1 + ns.iter().map(|n| (n - 2) / 2).sum::<usize>())
        }
        Parity::Odd => {
            if let Some(&n) = ns.iter().find(|&&n| n % 2 == 0 || n < 5) {
                return Err(StrongError::Hypothesis(format!("odd family needs odd n_i >= 5, got {n}")));
            }
            let middle: usize = ns[1..m - 1].iter().map(|n| (n - 2) / 2).sum();
            Ok(m - 1 + ns[0] / 2 + ns[m - 1] / 2 + middle)
        }
    }
}

fn check_odd_hypothesis(cc: &ChainCycle) -> Result<(), StrongError> {
    if let Some(&n) = cc.cycle_lengths().iter().find(|&&n| n < 5) {
        return Err(StrongError::Hypothesis(format!("odd family needs n_i >= 5, got {n}")));
    }
    Ok(())
}

fn even_cover(cc: &ChainCycle) -> Vec<Vertex> {
    let mut s = vec![cc.at(1, 1)];
    for i in 1..=cc.m() {
        s.extend((2..=cc.n(i) / 2).map(|j| cc.at(i, j)));
    }
    s
}

/// Every other vertex of each far path, offset so that the path endpoints
/// already chosen are reused. `with_second` adds `v^1_2`; `middle_end` is the
/// last middle cycle that gets its path stride.
fn odd_cover(cc: &ChainCycle, with_second: bool, middle_end: usize) -> Vec<Vertex> {
    let m = cc.m();
    let mut s = vec![cc.at(1, 1)];
    if with_second {
        s.push(cc.at(1, 2));
    }
    s.extend((2..m).map(|i| cc.at(i, 2)));
    let stride = |path: Vec<Vertex>, from: usize, to: usize| path.into_iter().enumerate().filter(move |&(t, _)| t >= from && t <= to && (t - from).is_multiple_of(2)).map(|(_, v)| v);
    s.extend(stride(odd_far_path(cc, 1), 2, cc.n(1) - 3));
    s.extend(stride(odd_far_path(cc, m), 0, cc.n(m) - 3));
    for i in 2..=middle_end.min(m - 1) {
        s.extend(stride(odd_far_path(cc, i), 2, cc.n(i) - 3));
    }
    s
}

fn finish(mut s: Vec<Vertex>) -> Vec<Vertex> {
    s.sort_unstable();
    s.dedup();
    s
}

/// The cover built in the closed-form argument, checked against both the
/// computed and the predicted strong resolving graph.
pub fn paper_cover(cc: &ChainCycle) -> Result<CoverResult, StrongError> {
    let cover = match cc.parity() {
        Parity::Even => even_cover(cc),
        Parity::Odd => {
            check_odd_hypothesis(cc)?;
            odd_cover(cc, true, cc.m() - 1)
        }
    };
    let cover = finish(cover);
    let computed = strong_resolving_graph(cc.graph())?.computed_edges;
    let predicted = predicted_srg(cc)?;
    if let Some(&(u, v)) = uncovered_edges(computed.iter().chain(&predicted), &cover).first() {
        return Err(StrongError::UncoveredEdge(u, v));
    }
    Ok(CoverResult::new(cover, cc.graph().vertex_count(), CoverMethod::PaperConstruction))
}

/// The cover with the odd-case selection read word for word: no `v^1_2` in
/// the seed set and middle strides only up to cycle `m - 2`. Not verified;
/// for odd chains it leaves edges uncovered.
pub fn paper_cover_literal(cc: &ChainCycle) -> Result<Vec<Vertex>, StrongError> {
    Ok(finish(match cc.parity() {
        Parity::Even => even_cover(cc),
        Parity::Odd => {
            check_odd_hypothesis(cc)?;
            odd_cover(cc, false, cc.m().saturating_sub(2))
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_even_chain_cycle, build_odd_chain_cycle};

    #[test]
    fn cycles_by_both_routes() {
        for n in 4..=11 {
            let g = Graph::cycle(n).unwrap();
            let want = n.div_ceil(2);
            assert_eq!(strong_metric_dimension(&g, SdimMethod::CoverOfSrg).unwrap().value, want, "C_{n}");
            assert_eq!(strong_metric_dimension(&g, SdimMethod::BruteForce).unwrap().value, want, "C_{n}");
        }
    }

    #[test]
    fn paths_have_sdim_one() {
        let g = Graph::path(6).unwrap();
        let r = strong_metric_dimension(&g, SdimMethod::BruteForce).unwrap();
        assert_eq!(r.certificate, SdimCertificate::StrongResolvingSet(vec![0]));
    }

    #[test]
    fn brute_force_gate() {
        let g = Graph::cycle(13).unwrap();
        assert!(matches!(strong_metric_dimension(&g, SdimMethod::BruteForce), Err(StrongError::SizeGate { n: 13, max: 12 })));
    }

    #[test]
    fn formula_values() {
        assert_eq!(sdim_formula(Parity::Even, &[8, 10, 8]).unwrap(), 11);
        assert_eq!(sdim_formula(Parity::Even, &[4, 4]).unwrap(), 3);
        assert_eq!(sdim_formula(Parity::Odd, &[5, 7, 5]).unwrap(), 8);
        assert_eq!(sdim_formula(Parity::Odd, &[5, 5]).unwrap(), 5);
        assert!(sdim_formula(Parity::Odd, &[3, 5]).is_err());
        assert!(sdim_formula(Parity::Even, &[6]).is_err());
        assert!(sdim_formula(Parity::Even, &[6, 7]).is_err());
    }

    #[test]
    fn small_chains_agree() {
        let c44 = build_even_chain_cycle(&[4, 4]).unwrap();
        let c55 = build_odd_chain_cycle(&[5, 5]).unwrap();
        for (cc, want) in [(c44, 3), (c55, 5)] {
            for method in [SdimMethod::CoverOfSrg, SdimMethod::BruteForce] {
                assert_eq!(strong_metric_dimension(cc.graph(), method).unwrap().value, want);
            }
            assert_eq!(paper_cover(&cc).unwrap().size, want);
        }
    }

    #[test]
    fn constructed_covers_match_formula() {
        for ns in [[8, 10, 8], [4, 6, 4]] {
            let cc = build_even_chain_cycle(&ns).unwrap();
            assert_eq!(paper_cover(&cc).unwrap().size, sdim_formula(Parity::Even, &ns).unwrap());
        }
        for ns in [vec![5, 7, 5], vec![7, 5, 9, 5]] {
            let cc = build_odd_chain_cycle(&ns).unwrap();
            assert_eq!(paper_cover(&cc).unwrap().size, sdim_formula(Parity::Odd, &ns).unwrap());
        }
    }

    #[test]
    fn literal_odd_cover_misses_edges() {
        let cc = build_odd_chain_cycle(&[5, 5]).unwrap();
        let literal = paper_cover_literal(&cc).unwrap();
        assert_eq!(literal.len(), 4);
        let computed = strong_resolving_graph(cc.graph()).unwrap().computed_edges;
        let missed = uncovered_edges(&computed, &literal);
        let e = super::super::edge(cc.resolve_label(1, 2).unwrap(), cc.resolve_label(2, 4).unwrap());
        assert!(missed.contains(&e));
    }
}
