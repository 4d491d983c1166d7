use std::collections::HashMap;
use std::fmt;

use super::ResolveError;
use crate::graph::{DistanceMatrix, Vertex};

/// An ordered partition `{Q_1, .., Q_k}` of the vertex set. Block order matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<Vertex>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Validates that `blocks` are non-empty, disjoint and cover `0..n`.
    /// Vertices inside a block are sorted; block order is preserved.
    pub fn new(n: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, ResolveError> {
        if blocks.is_empty() {
            return Err(ResolveError::NoBlocks);
        }
        let mut block_of = vec![usize::MAX; n];
        let mut blocks = blocks;
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(ResolveError::EmptyBlock(b));
            }
            block.sort_unstable();
            for &v in block.iter() {
                let slot = block_of.get_mut(v).ok_or(ResolveError::VertexOutOfRange { v, n })?;
                if *slot != usize::MAX {
                    return Err(ResolveError::Overlap(v));
                }
                *slot = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(ResolveError::Uncovered(v));
        }
        Ok(Partition { blocks, block_of })
    }

    /// Builds a partition from a block index per vertex (`assignment[v] < k`).
    pub fn from_assignment(assignment: &[usize]) -> Result<Self, ResolveError> {
        let k = assignment.iter().max().map_or(0, |&b| b + 1);
        let mut blocks = vec![Vec::new(); k];
        for (v, &b) in assignment.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition::new(assignment.len(), blocks)
    }

    /// Every vertex in its own block.
    pub fn discrete(n: usize) -> Self {
        Partition::new(n, (0..n).map(|v| vec![v]).collect()).expect("discrete partition is valid")
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    /// One line per block, comma-separated labels.
    pub fn to_text(&self, label: impl Fn(Vertex) -> String) -> String {
        let mut out = String::new();
        for block in &self.blocks {
            let names: Vec<String> = block.iter().map(|&v| label(v)).collect();
            out.push_str(&names.join(","));
            out.push('\n');
        }
        out
    }

    /// Inverse of [`Partition::to_text`]. Blank lines are skipped.
    pub fn parse_text(
        text: &str,
        n: usize,
        lookup: impl Fn(&str) -> Option<Vertex>,
    ) -> Result<Self, ResolveError> {
        let mut blocks = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let block = line
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|name| lookup(name).ok_or_else(|| ResolveError::UnknownLabel(name.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
        }
        Partition::new(n, blocks)
    }

    fn check_against(&self, dm: &DistanceMatrix) -> Result<(), ResolveError> {
        if self.vertex_count() != dm.vertex_count() {
            return Err(ResolveError::SizeMismatch { partition: self.vertex_count(), graph: dm.vertex_count() });
        }
        Ok(())
    }
}

/// Distance vector of a vertex to the blocks of a partition or to a landmark list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation(pub Vec<u32>);

impl Representation {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl serde::Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub(crate) fn representation_unchecked(dm: &DistanceMatrix, p: &Partition, v: Vertex) -> Representation {
    let row = dm.row(v);
    Representation(
        p.blocks.iter().map(|block| block.iter().map(|&q| row[q]).min().expect("blocks are non-empty")).collect(),
    )
}

/// `r(v | Π) = (d(v, Q_1), .., d(v, Q_k))`.
pub fn partition_representation(dm: &DistanceMatrix, p: &Partition, v: Vertex) -> Result<Representation, ResolveError> {
    p.check_against(dm)?;
    dm.check_vertex(v)?;
    Ok(representation_unchecked(dm, p, v))
}

/// Two distinct vertices sharing one representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub first: Vertex,
    pub second: Vertex,
    pub representation: Representation,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {} and {} share {}", self.first, self.second, self.representation)
    }
}

fn first_collision(reps: impl Iterator<Item = Representation>) -> Option<Collision> {
    let mut seen: HashMap<Representation, Vertex> = HashMap::new();
    for (v, r) in reps.enumerate() {
        if let Some(&u) = seen.get(&r) {
            return Some(Collision { first: u, second: v, representation: r });
        }
        seen.insert(r, v);
    }
    None
}

/// The lowest-indexed pair of vertices with equal representations, if any.
pub fn find_collision(dm: &DistanceMatrix, p: &Partition) -> Result<Option<Collision>, ResolveError> {
    p.check_against(dm)?;
    Ok(first_collision((0..dm.vertex_count()).map(|v| representation_unchecked(dm, p, v))))
}

pub fn is_resolving_partition(dm: &DistanceMatrix, p: &Partition) -> Result<bool, ResolveError> {
    find_collision(dm, p).map(|c| c.is_none())
}

/// `r(v | W) = (d(v, w_1), .., d(v, w_t))`.
pub fn set_representation(dm: &DistanceMatrix, landmarks: &[Vertex], v: Vertex) -> Result<Representation, ResolveError> {
    dm.check_vertex(v)?;
    for &w in landmarks {
        dm.check_vertex(w)?;
    }
    Ok(Representation(landmarks.iter().map(|&w| dm.get(v, w)).collect()))
}

pub fn is_resolving_set(dm: &DistanceMatrix, landmarks: &[Vertex]) -> Result<bool, ResolveError> {
    if landmarks.is_empty() {
        return Err(ResolveError::EmptyLandmarks);
    }
    for &w in landmarks {
        dm.check_vertex(w)?;
    }
    let reps = (0..dm.vertex_count()).map(|v| Representation(landmarks.iter().map(|&w| dm.get(v, w)).collect()));
    Ok(first_collision(reps).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn partition_validation() {
        assert_eq!(Partition::new(3, vec![]), Err(ResolveError::NoBlocks));
        assert_eq!(Partition::new(3, vec![vec![0, 1], vec![]]), Err(ResolveError::EmptyBlock(1)));
        assert_eq!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]), Err(ResolveError::Overlap(1)));
        assert_eq!(Partition::new(3, vec![vec![0, 1]]), Err(ResolveError::Uncovered(2)));
        assert!(matches!(Partition::new(2, vec![vec![0, 5]]), Err(ResolveError::VertexOutOfRange { v: 5, .. })));
        let p = Partition::new(3, vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(p.blocks()[0], vec![0, 2]);
        assert_eq!(p.block_of(1), 1);
    }

    #[test]
    fn own_block_coordinate_is_zero() {
        let g = Graph::cycle(6).unwrap();
        let dm = g.distance_matrix();
        let p = Partition::new(6, vec![vec![0, 1], vec![2, 3, 4], vec![5]]).unwrap();
        for v in 0..6 {
            let r = partition_representation(&dm, &p, v).unwrap();
            assert_eq!(r.0[p.block_of(v)], 0);
            assert_eq!(r.0.iter().filter(|&&c| c == 0).count(), 1);
        }
    }

    #[test]
    fn trivial_partitions() {
        let dm = Graph::cycle(5).unwrap().distance_matrix();
        let single = Partition::new(5, vec![(0..5).collect()]).unwrap();
        let c = find_collision(&dm, &single).unwrap().unwrap();
        assert_eq!((c.first, c.second), (0, 1));
        assert!(is_resolving_partition(&dm, &Partition::discrete(5)).unwrap());
        let wrong = Partition::discrete(4);
        assert!(matches!(is_resolving_partition(&dm, &wrong), Err(ResolveError::SizeMismatch { .. })));
    }

    #[test]
    fn resolving_sets_on_c4() {
        let dm = Graph::cycle(4).unwrap().distance_matrix();
        assert!(is_resolving_set(&dm, &[0, 1]).unwrap());
        assert!(!is_resolving_set(&dm, &[0]).unwrap());
        assert!(is_resolving_set(&dm, &[0, 1, 2, 3]).unwrap());
        assert_eq!(is_resolving_set(&dm, &[]), Err(ResolveError::EmptyLandmarks));
        assert!(is_resolving_set(&dm, &[7]).is_err());
        assert_eq!(set_representation(&dm, &[0, 1], 2).unwrap(), Representation(vec![2, 1]));
    }

    #[test]
    fn text_format_round_trip() {
        let p = Partition::new(4, vec![vec![3], vec![0, 1], vec![2]]).unwrap();
        let text = p.to_text(|v| format!("x{v}"));
        assert_eq!(text, "x3\nx0,x1\nx2\n");
        let back = Partition::parse_text(&text, 4, |s| s.strip_prefix('x')?.parse().ok()).unwrap();
        assert_eq!(back, p);
        let err = Partition::parse_text("x0,x9\n", 4, |s| if s == "x9" { None } else { Some(0) }).unwrap_err();
        assert_eq!(err, ResolveError::UnknownLabel("x9".into()));
    }

    #[test]
    fn representation_display() {
        assert_eq!(Representation(vec![0, 5, 3]).to_string(), "(0,5,3)");
    }
}
