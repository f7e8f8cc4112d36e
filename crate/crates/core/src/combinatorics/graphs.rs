use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; the smaller root survives. Returns
    /// `false` if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Component label (least vertex of the component) of every vertex of the
/// spanning subgraph with the given edges.
pub fn components(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for (u, v) in edges {
        uf.union(u, v);
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// Simple graph on `{0, .., n-1}`: no loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adjacency: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge {}-{} outside 1..={}", u + 1, v + 1, n)));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at {} in a simple graph", u + 1)));
            }
            adjacency.insert((u.min(v), u.max(v)));
        }
        Ok(Self { n, adjacency })
    }

    pub fn edgeless(n: usize) -> Self {
        Self { n, adjacency: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.contains(&(u.min(v), u.max(v)))
    }

    /// Edges as `(i, j)` with `i < j`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.len()
    }

    pub fn complement(&self) -> Self {
        let adjacency = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|e| !self.adjacency.contains(e))
            .collect();
        Self { n: self.n, adjacency }
    }
}

/// Undirected multigraph on `{0, .., n-1}` with loops allowed. Each edge is
/// stored as `(u, v)` with `u <= v`; order of the list is preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge {}-{} outside 1..={}", u + 1, v + 1, n)));
            }
            out.push((u.min(v), u.max(v)));
        }
        Ok(Self { n, edges: out })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(u, v)| u == v)
    }

    /// Drops duplicate parallel edges (loops included), keeping first occurrences.
    pub fn simplify(&self) -> Self {
        let mut seen = BTreeSet::new();
        let edges = self.edges.iter().copied().filter(|e| seen.insert(*e)).collect();
        Self { n: self.n, edges }
    }

    /// Subgraph induced on `vertices` (sorted, distinct), relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut position = alloc::vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| position[*u] != usize::MAX && position[*v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]))
            .collect();
        Self { n: vertices.len(), edges }
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        Self { n: g.n, edges: g.edges().collect() }
    }
}
