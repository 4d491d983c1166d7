//! Closed-form representations of the chain-cycle partitions, checked against
//! BFS.
//!
//! Each case below transcribes one piecewise branch of the representation
//! formulas for the three-block partition of [`super::paper`], including the
//! index ranges and the constants exactly as written. Cases are evaluated,
//! never trusted; the report lists every vertex with its computed
//! representation, the claims that cover it, and formula references that name
//! a position outside its cycle.

use std::collections::BTreeMap;

use serde::Serialize;

use super::paper::paper_partition;
use super::partition::representation_unchecked;
use super::Representation;
use crate::chain::{position_label, ChainCycle, Parity};
use crate::graph::Vertex;

/// One formula's value for one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimedValue {
    pub case: &'static str,
    /// The position as the formula names it (may be an alias of the canonical label).
    pub written: String,
    pub claimed: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    /// Every claim equals the computed representation.
    Match,
    /// The claims agree with each other but not with the computed value.
    Mismatch,
    /// Claims disagree with each other.
    Conflict,
    /// No formula covers the vertex.
    Uncovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClaims {
    pub vertex: Vertex,
    pub label: String,
    pub computed: Representation,
    pub claims: Vec<ClaimedValue>,
    pub status: ClaimStatus,
}

/// A formula instance whose vertex index falls outside `1..=n_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DanglingReference {
    pub case: &'static str,
    pub cycle: usize,
    pub index: i64,
    pub claimed: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub instance: String,
    pub vertices: Vec<VertexClaims>,
    pub dangling: Vec<DanglingReference>,
}

/// A claim that disagrees with the computed representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub vertex: Vertex,
    pub label: String,
    pub case: &'static str,
    pub claimed: Vec<i64>,
    pub computed: Representation,
}

impl DiscrepancyReport {
    pub fn mismatches(&self) -> Vec<Mismatch> {
        self.vertices
            .iter()
            .flat_map(|entry| {
                entry.claims.iter().filter(|c| !agrees(&c.claimed, &entry.computed)).map(move |c| Mismatch {
                    vertex: entry.vertex,
                    label: entry.label.clone(),
                    case: c.case,
                    claimed: c.claimed.clone(),
                    computed: entry.computed.clone(),
                })
            })
            .collect()
    }

    pub fn uncovered(&self) -> impl Iterator<Item = &VertexClaims> {
        self.vertices.iter().filter(|e| e.status == ClaimStatus::Uncovered)
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.vertices.iter().filter(|e| e.status == status).count()
    }
}

fn agrees(claimed: &[i64], computed: &Representation) -> bool {
    claimed.len() == computed.0.len() && claimed.iter().zip(&computed.0).all(|(&a, &b)| a == i64::from(b))
}

fn status_of(claims: &[ClaimedValue], computed: &Representation) -> ClaimStatus {
    let Some(first) = claims.first() else {
        return ClaimStatus::Uncovered;
    };
    if claims.iter().any(|c| c.claimed != first.claimed) {
        ClaimStatus::Conflict
    } else if agrees(&first.claimed, computed) {
        ClaimStatus::Match
    } else {
        ClaimStatus::Mismatch
    }
}

struct Collector<'a> {
    cc: &'a ChainCycle,
    claims: BTreeMap<Vertex, Vec<ClaimedValue>>,
    dangling: Vec<DanglingReference>,
}

impl Collector<'_> {
    fn claim(&mut self, case: &'static str, i: usize, j: i64, value: [i64; 3]) {
        let n = self.cc.n(i) as i64;
        if (1..=n).contains(&j) {
            let v = self.cc.at(i, j as usize);
            self.claims.entry(v).or_default().push(ClaimedValue {
                case,
                written: position_label(i, j as usize),
                claimed: value.to_vec(),
            });
        } else {
            self.dangling.push(DanglingReference { case, cycle: i, index: j, claimed: value.to_vec() });
        }
    }
}

/// Integer helpers over cycle lengths, all 1-based in the cycle index.
struct Lengths<'a>(&'a ChainCycle);

impl Lengths<'_> {
    fn n(&self, i: usize) -> i64 {
        self.0.n(i) as i64
    }
    fn floor_half(&self, i: usize) -> i64 {
        self.n(i) / 2
    }
    fn ceil_half(&self, i: usize) -> i64 {
        (self.n(i) + 1) / 2
    }
    /// `ceil(n_i / 4)`
    fn quarter(&self, i: usize) -> i64 {
        (self.n(i) + 3) / 4
    }
    /// `ceil(3 n_i / 4)`
    fn three_quarters(&self, i: usize) -> i64 {
        (3 * self.n(i) + 3) / 4
    }
    /// `sum_{k=from}^{to} floor(n_k / 2)`, zero when empty.
    fn sum_floor(&self, from: usize, to: usize) -> i64 {
        (from..=to).map(|k| self.floor_half(k)).sum()
    }
    fn sum_ceil(&self, from: usize, to: usize) -> i64 {
        (from..=to).map(|k| self.ceil_half(k)).sum()
    }
}

fn even_cases(c: &mut Collector<'_>) {
    let l = Lengths(c.cc);
    let m = c.cc.m();
    let (n1, h1) = (l.n(1), l.floor_half(1));
    let (nm, hm) = (l.n(m), l.floor_half(m));
    let (n2, h2) = (l.n(2), l.floor_half(2));

    c.claim("c1-half", 1, h1, [1, 2, 0]);
    c.claim("c1-attach", 1, h1 + 1, [1, 1, 0]);
    c.claim("last-end", m, nm, [l.sum_floor(2, m) + 2, 0, 1]);
    for j in 1..=h1 - 1 {
        c.claim("c1-low", 1, j, [0, n1 - j - 1, n1 - j - 3]);
    }
    for j in h1 + 2..=n1 {
        c.claim("c1-high", 1, j, [0, j - h1, j - h1 - 1]);
    }
    for j in 1..=l.quarter(2) {
        c.claim("c2-low", 2, j, [j, j, 0]);
    }
    for j in l.quarter(2) + 1..=h2 {
        c.claim("c2-mid", 2, j, [j, h2 - j + 2, 0]);
    }
    let tail = l.sum_floor(3, m);
    for i in 3..=m {
        let hi = l.floor_half(i);
        for j in 1..=l.quarter(i) {
            c.claim("ci-low", i, j, [tail + j, j, 0]);
        }
        for j in l.quarter(i) + 1..=hi {
            c.claim("ci-mid", i, j, [tail + j, hi - j + 2, 0]);
        }
    }
    let inner = l.sum_floor(2, m - 1);
    for i in 2..m {
        c.claim("middle-offset", i, l.floor_half(i) + 2, [inner, 1, 0]);
    }
    // Vertex written as v^m_{n_m/2 + j} with j itself ranging over n_m/2+1..n_m-1.
    for j in hm + 1..=nm - 1 {
        c.claim("last-offset", m, hm + j, [inner + nm - j + 2, nm - j, 0]);
    }
    for j in h2 + 3..=l.three_quarters(2) + 1 {
        c.claim("c2-high", 2, j, [n2 + 2 - j, 0, j - h2 - 2]);
    }
    for j in l.three_quarters(2) + 2..=n2 {
        c.claim("c2-top", 2, j, [n2 + 2 - j, 0, n2 + 1 - j]);
    }
    for i in 3..=m {
        let (ni, hi) = (l.n(i), l.floor_half(i));
        for j in hi + 3..=l.three_quarters(i) + 1 {
            c.claim("ci-high", i, j, [tail + ni - j, 0, j - hi - 2]);
        }
        for j in l.three_quarters(i) + 2..=ni {
            c.claim("ci-top", i, j, [tail + ni - j, 0, ni + 1 - j]);
        }
    }
}

fn odd_cases(c: &mut Collector<'_>) {
    let l = Lengths(c.cc);
    let m = c.cc.m();
    let (n1, c1, f1) = (l.n(1), l.ceil_half(1), l.floor_half(1));
    let (nm, cm) = (l.n(m), l.ceil_half(m));
    let (n2, c2) = (l.n(2), l.ceil_half(2));

    c.claim("c1-half", 1, c1, [1, 2, 0]);
    c.claim("c1-attach", 1, c1 + 1, [1, 1, 0]);
    c.claim("last-end", m, nm, [l.sum_floor(2, m) + 2, 0, 1]);
    c.claim("c1-first", 1, 1, [0, n1 - f1, n1 - f1 - 1]);
    for j in 2..=c1 - 1 {
        c.claim("c1-low", 1, j, [0, n1 - j - 1, n1 - j - 3]);
    }
    for j in c1 + 2..=n1 {
        c.claim("c1-high", 1, j, [0, j - c1, j - c1 - 1]);
    }
    for j in 1..=l.quarter(2) + 1 {
        c.claim("c2-low", 2, j, [j, j, 0]);
    }
    for j in l.quarter(2) + 2..=c2 + 1 {
        c.claim("c2-mid", 2, j, [j, c2 - j + 3, 0]);
    }
    let tail = l.sum_floor(3, m);
    for i in 3..=m {
        let ci = l.ceil_half(i);
        for j in 1..=l.quarter(i) + 1 {
            c.claim("ci-low", i, j, [tail + j, j, 0]);
        }
        for j in l.quarter(i) + 2..=ci + 1 {
            c.claim("ci-mid", i, j, [tail + j, ci - j + 3, 0]);
        }
    }
    // `n_i/2` in the offset cases is fractional for odd n_i; read as ceil(n_i/2).
    let inner = l.sum_floor(2, m - 1);
    for i in 2..m {
        c.claim("middle-offset", i, l.ceil_half(i) + 2, [inner, 1, 0]);
    }
    for j in cm + 2..=nm - 1 {
        c.claim("last-offset", m, cm + j, [inner + nm - j + 2, nm - j, 0]);
    }
    for j in c2 + 3..=l.three_quarters(2) + 1 {
        c.claim("c2-high", 2, j, [n2 + 2 - j, 0, j - c2 - 2]);
    }
    for j in l.three_quarters(2) + 2..=n2 {
        c.claim("c2-top", 2, j, [n2 + 2 - j, 0, n2 + 1 - j]);
    }
    let tail_up = l.sum_ceil(3, m);
    for i in 3..=m {
        let (ni, ci) = (l.n(i), l.ceil_half(i));
        for j in ci + 3..=l.three_quarters(i) + 1 {
            c.claim("ci-high", i, j, [tail_up + ni - j, 0, j - ci - 2]);
        }
        for j in l.three_quarters(i) + 2..=ni {
            c.claim("ci-top", i, j, [tail_up + ni - j, 0, ni + 1 - j]);
        }
    }
}

/// Evaluates every formula case for the chain's family against the
/// representations under [`paper_partition`].
pub fn claimed_representations(cc: &ChainCycle) -> DiscrepancyReport {
    let mut collector = Collector { cc, claims: BTreeMap::new(), dangling: Vec::new() };
    match cc.parity() {
        Parity::Even => even_cases(&mut collector),
        Parity::Odd => odd_cases(&mut collector),
    }
    let partition = paper_partition(cc);
    let dm = cc.graph().distance_matrix();
    let vertices = cc
        .vertices_in_order()
        .into_iter()
        .map(|v| {
            let computed = representation_unchecked(&dm, &partition, v);
            let claims = collector.claims.remove(&v).unwrap_or_default();
            let status = status_of(&claims, &computed);
            VertexClaims { vertex: v, label: cc.labeled().label_of(v).to_string(), computed, claims, status }
        })
        .collect();
    DiscrepancyReport { instance: cc.spec_string(), vertices, dangling: collector.dangling }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_even_chain_cycle, build_odd_chain_cycle};

    fn entry<'a>(report: &'a DiscrepancyReport, label: &str) -> &'a VertexClaims {
        report.vertices.iter().find(|e| e.label == label).unwrap()
    }

    #[test]
    fn half_vertex_formula_matches() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let report = claimed_representations(&cc);
        let e = entry(&report, "v1_4");
        assert_eq!(e.computed, Representation(vec![1, 2, 0]));
        assert_eq!(e.status, ClaimStatus::Match);
    }

    #[test]
    fn last_vertex_formula_is_flagged() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let report = claimed_representations(&cc);
        let e = entry(&report, "v3_8");
        assert_eq!(e.computed, Representation(vec![7, 0, 1]));
        assert!(e.claims.iter().any(|c| c.case == "last-end" && c.claimed == vec![11, 0, 1]));
        assert_ne!(e.status, ClaimStatus::Match);
        assert!(report.mismatches().iter().any(|m| m.label == "v3_8" && m.case == "last-end"));
    }

    #[test]
    fn cut_vertex_claims_use_alias_names() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let report = claimed_representations(&cc);
        let e = entry(&report, "v1_5");
        let written: Vec<&str> = e.claims.iter().map(|c| c.written.as_str()).collect();
        assert!(written.contains(&"v1_5") && written.contains(&"v2_1"));
        assert_eq!(e.status, ClaimStatus::Match);
    }

    #[test]
    fn offset_case_for_last_cycle_dangles() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let report = claimed_representations(&cc);
        let dangling: Vec<i64> =
            report.dangling.iter().filter(|d| d.case == "last-offset").map(|d| d.index).collect();
        assert_eq!(dangling, vec![9, 10, 11]);
        assert_eq!(entry(&report, "v3_5").status, ClaimStatus::Uncovered);
    }

    #[test]
    fn every_vertex_is_reported_once() {
        for cc in [build_even_chain_cycle(&[8, 10, 8]).unwrap(), build_odd_chain_cycle(&[5, 7, 5]).unwrap()] {
            let report = claimed_representations(&cc);
            assert_eq!(report.vertices.len(), cc.graph().vertex_count());
            let total = [ClaimStatus::Match, ClaimStatus::Mismatch, ClaimStatus::Conflict, ClaimStatus::Uncovered]
                .iter()
                .map(|&s| report.count(s))
                .sum::<usize>();
            assert_eq!(total, report.vertices.len());
        }
    }

    #[test]
    fn odd_first_vertex_formula() {
        let cc = build_odd_chain_cycle(&[5, 7, 5]).unwrap();
        let report = claimed_representations(&cc);
        let e = entry(&report, "v1_1");
        assert_eq!(e.computed, Representation(vec![0, 3, 2]));
        assert_eq!(e.claims[0].claimed, vec![0, 3, 2]);
    }
}
