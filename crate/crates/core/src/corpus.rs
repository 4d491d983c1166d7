//! Seeded random connected graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// A random spanning tree (each vertex joins a uniformly chosen earlier one)
/// plus every remaining pair independently with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("tree edges are in range")
}

/// `count` connected graphs with `2..=max_n` vertices and edge density drawn
/// from `[0.1, 0.7)`, reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let p = rng.gen_range(0.1..0.7);
            random_connected_graph(&mut rng, n, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_connected_and_reproducible() {
        let a = random_corpus(7, 50, 9);
        assert!(a.iter().all(|g| g.is_connected() && g.vertex_count() <= 9));
        assert_eq!(a, random_corpus(7, 50, 9));
        assert_ne!(a, random_corpus(8, 50, 9));
    }
}
