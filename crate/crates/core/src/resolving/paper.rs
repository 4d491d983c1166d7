//! The explicit 3-partitions that certify `pd = 3` on both chain-cycle families.
//!
//! With `h_i = ceil(n_i / 2)` (which is `n_i / 2` for even cycles):
//! `Q_1` is cycle 1 without `v^1_{h_1}` and `v^1_{h_1+1}`, `Q_2` collects
//! `v^i_{h_i+3}..v^i_{n_i}` over the middle cycles plus `v^m_{n_m}`, and `Q_3`
//! is everything else.

use std::collections::BTreeSet;

use super::{find_collision, LowerBound, Partition, PdCertificate, ResolveError};
use crate::chain::{ChainCycle, Parity};
use crate::graph::Vertex;

fn half_up(n: usize) -> usize {
    n.div_ceil(2)
}

fn three_blocks(cc: &ChainCycle) -> Partition {
    let m = cc.m();
    let n1 = cc.n(1);
    let h1 = half_up(n1);
    let q1: BTreeSet<Vertex> =
        (1..=n1).filter(|&j| j != h1 && j != h1 + 1).map(|j| cc.at(1, j)).collect();
    let mut q2: BTreeSet<Vertex> = BTreeSet::new();
    for i in 2..m {
        let n = cc.n(i);
        q2.extend((half_up(n) + 3..=n).map(|j| cc.at(i, j)));
    }
    q2.insert(cc.at(m, cc.n(m)));
    let q3: Vec<Vertex> =
        (0..cc.graph().vertex_count()).filter(|v| !q1.contains(v) && !q2.contains(v)).collect();
    Partition::new(cc.graph().vertex_count(), vec![q1.into_iter().collect(), q2.into_iter().collect(), q3])
        .expect("the three blocks partition the chain")
}

pub fn paper_partition_even(cc: &ChainCycle) -> Result<Partition, ResolveError> {
    if cc.parity() != Parity::Even {
        return Err(ResolveError::ParityMismatch(Parity::Even));
    }
    Ok(three_blocks(cc))
}

pub fn paper_partition_odd(cc: &ChainCycle) -> Result<Partition, ResolveError> {
    if cc.parity() != Parity::Odd {
        return Err(ResolveError::ParityMismatch(Parity::Odd));
    }
    Ok(three_blocks(cc))
}

/// The construction matching the chain's parity.
pub fn paper_partition(cc: &ChainCycle) -> Partition {
    three_blocks(cc)
}

/// `pd = 3`: the chain is not a path, and the constructed 3-partition is
/// re-verified as resolving.
pub fn partition_dimension_chain(cc: &ChainCycle) -> Result<PdCertificate, ResolveError> {
    let witness = paper_partition(cc);
    let dm = cc.graph().distance_matrix();
    if let Some(collision) = find_collision(&dm, &witness)? {
        return Err(ResolveError::WitnessFails(collision));
    }
    debug_assert!(!cc.graph().is_path_graph()?);
    Ok(PdCertificate { value: 3, lower_bound_reason: LowerBound::NotAPath, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_even_chain_cycle, build_odd_chain_cycle};

    fn ids(cc: &ChainCycle, positions: &[(usize, usize)]) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = positions.iter().map(|&(i, j)| cc.resolve_label(i, j).unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn even_example_blocks() {
        let cc = build_even_chain_cycle(&[8, 10, 8]).unwrap();
        let p = paper_partition_even(&cc).unwrap();
        assert_eq!(p.blocks()[0], ids(&cc, &[(1, 1), (1, 2), (1, 3), (1, 6), (1, 7), (1, 8)]));
        assert_eq!(p.blocks()[1], ids(&cc, &[(2, 8), (2, 9), (2, 10), (3, 8)]));
        assert_eq!(p.blocks()[2].len(), 24 - 10);
    }

    #[test]
    fn odd_example_blocks() {
        let cc = build_odd_chain_cycle(&[5, 7, 5]).unwrap();
        let p = paper_partition_odd(&cc).unwrap();
        assert_eq!(p.blocks()[0], ids(&cc, &[(1, 1), (1, 2), (1, 5)]));
        assert_eq!(p.blocks()[1], ids(&cc, &[(2, 7), (3, 5)]));
        assert_eq!(p.blocks()[2].len(), 10);
    }

    #[test]
    fn two_cycle_chains_have_singleton_second_block() {
        let cc = build_even_chain_cycle(&[4, 4]).unwrap();
        assert_eq!(paper_partition(&cc).blocks()[1], ids(&cc, &[(2, 4)]));
        let cc = build_odd_chain_cycle(&[5, 5]).unwrap();
        assert_eq!(paper_partition(&cc).blocks()[1], ids(&cc, &[(2, 5)]));
    }

    #[test]
    fn parity_is_checked() {
        let cc = build_odd_chain_cycle(&[5, 5]).unwrap();
        assert_eq!(paper_partition_even(&cc), Err(ResolveError::ParityMismatch(Parity::Even)));
        let cc = build_even_chain_cycle(&[4, 4]).unwrap();
        assert_eq!(paper_partition_odd(&cc), Err(ResolveError::ParityMismatch(Parity::Odd)));
    }

    #[test]
    fn chain_certificates() {
        for cc in [
            build_even_chain_cycle(&[8, 10, 8]).unwrap(),
            build_odd_chain_cycle(&[5, 7, 5]).unwrap(),
            build_even_chain_cycle(&[4, 4]).unwrap(),
        ] {
            let cert = partition_dimension_chain(&cc).unwrap();
            assert_eq!(cert.value, 3);
            assert_eq!(cert.witness.k(), 3);
            assert_eq!(cert.lower_bound_reason, LowerBound::NotAPath);
        }
    }
}
