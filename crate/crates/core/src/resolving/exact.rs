//! Exhaustive partition dimension and metric dimension for small graphs.
//!
//! Partitions with exactly `k` blocks are enumerated as restricted growth
//! strings in lexicographic order. A candidate is only judged once every vertex
//! has a block: growing a block can shrink distances to it, so a collision
//! between partial representations says nothing about the completed partition.

use itertools::Itertools;

use super::{LowerBound, Partition, PdCertificate, ResolveError};
use crate::graph::{DistanceMatrix, Graph, GraphError, Vertex};

/// Vertex budget for the exhaustive solvers.
pub const MAX_EXACT_VERTICES: usize = 16;

/// Restricted growth strings `a` of length `n` with `a[0] = 0`,
/// `a[i] <= max(a[..i]) + 1` and exactly `k` distinct values, in lexicographic order.
#[derive(Debug, Clone)]
pub struct KBlockPartitions {
    n: usize,
    k: usize,
    a: Vec<usize>,
    started: bool,
    done: bool,
}

impl KBlockPartitions {
    pub fn new(n: usize, k: usize) -> Self {
        KBlockPartitions { n, k, a: vec![0; n], started: false, done: k == 0 || k > n }
    }

    /// Moves to the next string and returns it.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_suffix(0, 0);
            return Some(&self.a);
        }
        let mut prefix_max = vec![0; self.n];
        for i in 1..self.n {
            prefix_max[i] = prefix_max[i - 1].max(self.a[i - 1]);
        }
        for i in (1..self.n).rev() {
            let candidate = self.a[i] + 1;
            if candidate > prefix_max[i] + 1 || candidate >= self.k {
                continue;
            }
            let top = prefix_max[i].max(candidate);
            if self.k - 1 - top <= self.n - 1 - i {
                self.a[i] = candidate;
                self.fill_suffix(i + 1, top);
                return Some(&self.a);
            }
        }
        self.done = true;
        None
    }

    /// Smallest completion of `a[from..]` given the current block maximum `top`.
    fn fill_suffix(&mut self, from: usize, top: usize) {
        let missing = self.k - 1 - top;
        let tail_start = self.n - missing;
        for i in from..tail_start {
            self.a[i] = 0;
        }
        for (offset, i) in (tail_start..self.n).enumerate() {
            self.a[i] = top + 1 + offset;
        }
    }
}

impl Iterator for KBlockPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

fn check_exact_input(g: &Graph, dm: &DistanceMatrix) -> Result<(), ResolveError> {
    let n = g.vertex_count();
    if n > MAX_EXACT_VERTICES {
        return Err(ResolveError::SizeGate { n, max: MAX_EXACT_VERTICES });
    }
    if dm.vertex_count() != n {
        return Err(ResolveError::SizeMismatch { partition: n, graph: dm.vertex_count() });
    }
    if !dm.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(())
}

/// Resolving test specialised for the enumeration loop. With `n <= 16` every
/// distance fits in four bits, so a representation packs into one `u64`.
struct PackedChecker<'a> {
    dm: &'a DistanceMatrix,
    masks: Vec<u32>,
    seen: Vec<u64>,
}

impl<'a> PackedChecker<'a> {
    fn new(dm: &'a DistanceMatrix, k: usize) -> Self {
        PackedChecker { dm, masks: vec![0; k], seen: Vec::with_capacity(dm.vertex_count()) }
    }

    fn resolves(&mut self, assignment: &[usize]) -> bool {
        self.masks.iter_mut().for_each(|m| *m = 0);
        for (v, &b) in assignment.iter().enumerate() {
            self.masks[b] |= 1 << v;
        }
        self.seen.clear();
        for v in 0..assignment.len() {
            let row = self.dm.row(v);
            let mut packed = 0u64;
            for &mask in &self.masks {
                let mut bits = mask;
                let mut best = u32::MAX;
                while bits != 0 {
                    let q = bits.trailing_zeros() as usize;
                    best = best.min(row[q]);
                    bits &= bits - 1;
                }
                packed = (packed << 4) | u64::from(best);
            }
            if self.seen.contains(&packed) {
                return false;
            }
            self.seen.push(packed);
        }
        true
    }
}

/// Smallest `k <= k_max` admitting a resolving `k`-partition, with the
/// lexicographically first witness. `Ok(None)` when no `k <= k_max` works.
pub fn partition_dimension_exact(
    g: &Graph,
    dm: &DistanceMatrix,
    k_max: usize,
) -> Result<Option<PdCertificate>, ResolveError> {
    if k_max < 1 {
        return Err(ResolveError::ZeroBlocks);
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooSmall(n).into());
    }
    check_exact_input(g, dm)?;
    for k in 1..=k_max.min(n) {
        let mut checker = PackedChecker::new(dm, k);
        let mut strings = KBlockPartitions::new(n, k);
        while let Some(a) = strings.advance() {
            if checker.resolves(a) {
                let witness = Partition::from_assignment(a)?;
                return Ok(Some(PdCertificate { value: k, lower_bound_reason: LowerBound::ExhaustiveNoK, witness }));
            }
        }
    }
    Ok(None)
}

/// A minimum resolving set: ascending size, lexicographic subsets within a size.
pub fn metric_basis_exact(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<Vertex>, ResolveError> {
    check_exact_input(g, dm)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(Vec::new());
    }
    for size in 1..=n {
        for subset in (0..n).combinations(size) {
            if super::is_resolving_set(dm, &subset)? {
                return Ok(subset);
            }
        }
    }
    unreachable!("the full vertex set always resolves")
}

pub fn metric_dimension_exact(g: &Graph, dm: &DistanceMatrix) -> Result<usize, ResolveError> {
    metric_basis_exact(g, dm).map(|b| b.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stirling2(n: usize, k: usize) -> usize {
        match (n, k) {
            (0, 0) => 1,
            (_, 0) | (0, _) => 0,
            _ => k * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
        }
    }

    #[test]
    fn enumeration_counts_match_stirling_numbers() {
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(KBlockPartitions::new(n, k).count(), stirling2(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(KBlockPartitions::new(3, 4).count(), 0);
        assert_eq!(KBlockPartitions::new(3, 0).count(), 0);
    }

    #[test]
    fn enumeration_is_lexicographic_and_valid() {
        let all: Vec<Vec<usize>> = KBlockPartitions::new(6, 3).collect();
        assert_eq!(all[0], vec![0, 0, 0, 0, 1, 2]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for a in &all {
            let mut top = 0;
            assert_eq!(a[0], 0);
            for &x in &a[1..] {
                assert!(x <= top + 1);
                top = top.max(x);
            }
            assert_eq!(top, 2);
        }
    }

    #[test]
    fn small_partition_dimensions() {
        let p5 = Graph::path(5).unwrap();
        let cert = partition_dimension_exact(&p5, &p5.distance_matrix(), 5).unwrap().unwrap();
        assert_eq!(cert.value, 2);
        let c5 = Graph::cycle(5).unwrap();
        let cert = partition_dimension_exact(&c5, &c5.distance_matrix(), 5).unwrap().unwrap();
        assert_eq!(cert.value, 3);
        assert!(super::super::is_resolving_partition(&c5.distance_matrix(), &cert.witness).unwrap());
        assert_eq!(partition_dimension_exact(&c5, &c5.distance_matrix(), 2).unwrap(), None);
    }

    #[test]
    fn exact_solver_gates() {
        let big = Graph::cycle(17).unwrap();
        let dm = big.distance_matrix();
        assert_eq!(partition_dimension_exact(&big, &dm, 3), Err(ResolveError::SizeGate { n: 17, max: 16 }));
        assert!(matches!(metric_dimension_exact(&big, &dm), Err(ResolveError::SizeGate { .. })));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(partition_dimension_exact(&c4, &c4.distance_matrix(), 0), Err(ResolveError::ZeroBlocks));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(partition_dimension_exact(&split, &split.distance_matrix(), 3).is_err());
    }

    #[test]
    fn metric_dimensions() {
        for n in 2..8 {
            let p = Graph::path(n).unwrap();
            assert_eq!(metric_dimension_exact(&p, &p.distance_matrix()).unwrap(), 1);
        }
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(metric_basis_exact(&c6, &c6.distance_matrix()).unwrap(), vec![0, 1]);
    }
}
