//! JSON graph files: `{"n": 3, "edges": [[1, 2, 0], [2, 3, -1], [3, 3, 2]]}`
//! with 1-based vertices. Gains on a simple-graph file are not allowed,
//! and edges there are pairs.

use std::fs;
use std::path::Path;

use gainchrom_core::combinatorics::SimpleGraph;
use gainchrom_core::IntegralGainGraph;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GainGraphFile {
    pub n: usize,
    pub edges: Vec<[i64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleGraphFile {
    pub n: usize,
    pub edges: Vec<[i64; 2]>,
}

fn vertex(v: i64, n: usize) -> Result<usize, CliError> {
    if v < 1 || v as u64 > n as u64 {
        return Err(CliError::Usage(format!("vertex {} outside 1..={}", v, n)));
    }
    Ok(v as usize - 1)
}

impl GainGraphFile {
    /// Canonical graph (links oriented upward, loop gains made nonnegative).
    pub fn to_graph(&self) -> Result<IntegralGainGraph, CliError> {
        let edges = self
            .edges
            .iter()
            .map(|&[t, h, g]| Ok((vertex(t, self.n)?, vertex(h, self.n)?, g)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(IntegralGainGraph::new(self.n, edges)?)
    }

    pub fn from_graph(g: &IntegralGainGraph) -> Self {
        let edges = g.edges().iter().map(|e| [e.tail as i64 + 1, e.head as i64 + 1, e.gain]).collect();
        Self { n: g.n(), edges }
    }
}

impl SimpleGraphFile {
    pub fn to_graph(&self) -> Result<SimpleGraph, CliError> {
        let edges = self
            .edges
            .iter()
            .map(|&[u, v]| Ok((vertex(u, self.n)?, vertex(v, self.n)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(SimpleGraph::new(self.n, edges)?)
    }
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))
}

pub fn read_gain_graph(path: &Path) -> Result<IntegralGainGraph, CliError> {
    read::<GainGraphFile>(path)?.to_graph()
}

pub fn read_simple_graph(path: &Path) -> Result<SimpleGraph, CliError> {
    read::<SimpleGraphFile>(path)?.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<IntegralGainGraph, CliError> {
        serde_json::from_str::<GainGraphFile>(text).map_err(|e| CliError::Usage(e.to_string()))?.to_graph()
    }

    #[test]
    fn canonicalizes_on_load() {
        let g = parse(r#"{"n": 3, "edges": [[2, 1, 4], [3, 3, -2]]}"#).unwrap();
        assert_eq!(GainGraphFile::from_graph(&g).edges, vec![[1, 2, -4], [3, 3, 2]]);
    }

    #[test]
    fn rejects_bad_vertices_and_fields() {
        assert!(parse(r#"{"n": 2, "edges": [[0, 1, 0]]}"#).is_err());
        assert!(parse(r#"{"n": 2, "edges": [[1, 3, 0]]}"#).is_err());
        assert!(parse(r#"{"n": 2, "edges": [[1, 2]]}"#).is_err());
        assert!(parse(r#"{"n": 2, "edges": [], "m": 1}"#).is_err());
    }

    #[test]
    fn round_trip() {
        let g = parse(r#"{"n": 4, "edges": [[1, 2, 0], [1, 4, 3], [2, 2, 1]]}"#).unwrap();
        assert_eq!(GainGraphFile::from_graph(&g).to_graph().unwrap(), g);
    }

    #[test]
    fn simple_graph_file() {
        let text = r#"{"n": 3, "edges": [[1, 2], [3, 2]]}"#;
        let g = serde_json::from_str::<SimpleGraphFile>(text).unwrap().to_graph().unwrap();
        assert_eq!(g.num_edges(), 2);
        assert!(g.has_edge(1, 2));
        let loop_file = serde_json::from_str::<SimpleGraphFile>(r#"{"n": 2, "edges": [[1, 1]]}"#).unwrap();
        assert!(loop_file.to_graph().is_err());
    }
}
