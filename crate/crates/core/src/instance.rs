//! Instance spec strings: `even:8,10,8`, `odd:5,7,5`, `cycle:6`, `path:4`, `file:PATH`.

use std::fmt;

use thiserror::Error;

use crate::chain::{build_cycle, ChainCycle, ChainError, LabeledGraph, Parity};
use crate::graph::Graph;
use crate::io::{parse_edge_list, IoError};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("unrecognised instance {0:?}; expected even:..., odd:..., cycle:N, path:N or file:PATH")]
    Kind(String),
    #[error("bad number {0:?} in instance spec")]
    Number(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: IoError },
}

#[derive(Debug, Clone)]
pub enum Instance {
    Chain(ChainCycle),
    Plain { name: String, graph: LabeledGraph },
}

fn numbers(list: &str) -> Result<Vec<usize>, InstanceError> {
    list.split(',').map(|t| t.trim().parse().map_err(|_| InstanceError::Number(t.to_string()))).collect()
}

fn single(list: &str) -> Result<usize, InstanceError> {
    list.trim().parse().map_err(|_| InstanceError::Number(list.to_string()))
}

impl Instance {
    pub fn parse(spec: &str) -> Result<Self, InstanceError> {
        let (kind, rest) = spec.split_once(':').ok_or_else(|| InstanceError::Kind(spec.to_string()))?;
        match kind {
            "even" => Ok(Instance::Chain(ChainCycle::new(Parity::Even, &numbers(rest)?)?)),
            "odd" => Ok(Instance::Chain(ChainCycle::new(Parity::Odd, &numbers(rest)?)?)),
            "cycle" => Ok(Instance::Plain { name: spec.to_string(), graph: build_cycle(single(rest)?)? }),
            "path" => {
                let n = single(rest)?;
                let g = Graph::path(n).map_err(ChainError::from)?;
                Ok(Instance::Plain { name: spec.to_string(), graph: LabeledGraph::new(g, |v| format!("v{}", v + 1))? })
            }
            "file" => {
                let text = std::fs::read_to_string(rest).map_err(|source| InstanceError::Read { path: rest.to_string(), source })?;
                let g = parse_edge_list(&text).map_err(|source| InstanceError::Parse { path: rest.to_string(), source })?;
                Ok(Instance::Plain { name: spec.to_string(), graph: LabeledGraph::numbered(g) })
            }
            _ => Err(InstanceError::Kind(spec.to_string())),
        }
    }

    pub fn labeled(&self) -> &LabeledGraph {
        match self {
            Instance::Chain(cc) => cc.labeled(),
            Instance::Plain { graph, .. } => graph,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.labeled().graph()
    }

    pub fn chain(&self) -> Option<&ChainCycle> {
        match self {
            Instance::Chain(cc) => Some(cc),
            Instance::Plain { .. } => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Instance::Chain(cc) => cc.spec_string(),
            Instance::Plain { name, .. } => name.clone(),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_kinds() {
        let e = Instance::parse("even:8,10,8").unwrap();
        assert_eq!(e.graph().vertex_count(), 24);
        assert_eq!(e.name(), "even:8,10,8");
        assert_eq!(Instance::parse("cycle:5").unwrap().graph().edge_count(), 5);
        assert!(Instance::parse("path:4").unwrap().graph().is_path_graph().unwrap());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(Instance::parse("even:5,6"), Err(InstanceError::Chain(ChainError::Parity { .. }))));
        assert!(matches!(Instance::parse("tree:4"), Err(InstanceError::Kind(_))));
        assert!(matches!(Instance::parse("cycle:x"), Err(InstanceError::Number(_))));
        assert!(Instance::parse("even").is_err());
        assert!(Instance::parse("file:/nonexistent/graph.txt").is_err());
    }
}
