use std::collections::BTreeSet;

use super::{Edge, StrongError};
use crate::graph::{DistanceMatrix, Graph, GraphError, Vertex};

/// `u MD v`: no neighbour of `u` is farther from `v` than `u` is.
pub fn is_maximally_distant(dm: &DistanceMatrix, g: &Graph, u: Vertex, v: Vertex) -> Result<bool, StrongError> {
    dm.check_vertex(u)?;
    dm.check_vertex(v)?;
    if !dm.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(md(dm, g, u, v))
}

fn md(dm: &DistanceMatrix, g: &Graph, u: Vertex, v: Vertex) -> bool {
    let duv = dm.get(u, v);
    g.adj(u).iter().all(|&w| dm.get(v, w) <= duv)
}

/// All unordered pairs `{u, v}`, `u != v`, with `u MD v` and `v MD u`.
pub fn mmd_pairs(dm: &DistanceMatrix, g: &Graph) -> Result<BTreeSet<Edge>, StrongError> {
    if !dm.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let n = g.vertex_count();
    let mut pairs = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if md(dm, g, u, v) && md(dm, g, v, u) {
                pairs.insert((u, v));
            }
        }
    }
    Ok(pairs)
}

/// `w` strongly resolves `{u, v}` when one of them lies on a shortest path from `w` to the other.
pub fn strongly_resolves(dm: &DistanceMatrix, w: Vertex, u: Vertex, v: Vertex) -> Result<bool, StrongError> {
    for x in [w, u, v] {
        dm.check_vertex(x)?;
    }
    if u == v {
        return Err(StrongError::SameVertex(u));
    }
    Ok(resolves_unchecked(dm, w, u, v))
}

pub(crate) fn resolves_unchecked(dm: &DistanceMatrix, w: Vertex, u: Vertex, v: Vertex) -> bool {
    let (wu, wv, uv) = (dm.get(w, u), dm.get(w, v), dm.get(u, v));
    wu == wv + uv || wv == wu + uv
}

pub fn is_strong_resolving_set(dm: &DistanceMatrix, set: &[Vertex]) -> Result<bool, StrongError> {
    if set.is_empty() {
        return Err(StrongError::EmptySet);
    }
    for &w in set {
        dm.check_vertex(w)?;
    }
    let n = dm.vertex_count();
    Ok((0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| resolves_unchecked(dm, w, u, v)))))
}
