//! Overlap graphs of set partitions and their lower-degree sequences.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{SetPartition, SimpleGraph};
use crate::error::{Error, Result};

/// A sequence of lower degrees `(d_1, .., d_k)`, stored 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn sorted(&self) -> Self {
        let mut d = self.0.clone();
        d.sort_unstable();
        Self(d)
    }

    /// Leading zero and steps of at most one upwards.
    fn has_lds_shape(&self) -> bool {
        self.0.first().is_none_or(|&d| d == 0) && self.0.windows(2).all(|w| w[1] <= w[0] + 1)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(d: Vec<usize>) -> Self {
        Self(d)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", d)?;
        }
        f.write_str(")")
    }
}

/// The interval graph of `[min X_i, max X_i]` over the blocks of a partition,
/// one vertex per block in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapGraph {
    pub graph: SimpleGraph,
    pub intervals: Vec<(usize, usize)>,
}

pub fn overlap_graph(p: &SetPartition) -> OverlapGraph {
    let intervals: Vec<(usize, usize)> =
        p.blocks().iter().map(|b| (b[0], *b.last().expect("nonempty block"))).collect();
    let k = intervals.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (ai, bi) = intervals[i];
            let (aj, bj) = intervals[j];
            if ai.max(aj) <= bi.min(bj) {
                edges.push((i, j));
            }
        }
    }
    let graph = SimpleGraph::new(k, edges).expect("overlap edges are in range");
    OverlapGraph { graph, intervals }
}

/// `d_i` = number of earlier blocks overlapping block `i`.
pub fn lower_degrees(p: &SetPartition) -> DegreeSequence {
    let og = overlap_graph(p);
    let k = p.len();
    DegreeSequence((0..k).map(|i| (0..i).filter(|&j| og.graph.has_edge(i, j)).count()).collect())
}

/// 0-based positions `i` with `d[i+1] > d[i]`.
pub fn ascents(d: &DegreeSequence) -> Vec<usize> {
    d.0.windows(2).enumerate().filter(|(_, w)| w[1] > w[0]).map(|(i, _)| i).collect()
}

/// Whether `d` is the vertex-order lower-degree sequence of some partition of
/// an `n`-set: leading zero, unit upward steps, and `n >= k + #ascents`.
pub fn is_vertex_order_lds(d: &DegreeSequence, n: usize) -> bool {
    if d.is_empty() {
        return n == 0;
    }
    d.has_lds_shape() && n >= d.len() + ascents(d).len()
}

/// Whether `d` is the sorted lower-degree sequence of some partition of an
/// `n`-set: nondecreasing, leading zero, unit steps, and `n >= k + d_k`.
pub fn is_increasing_lds(d: &DegreeSequence, n: usize) -> bool {
    if d.is_empty() {
        return n == 0;
    }
    d.0.windows(2).all(|w| w[0] <= w[1]) && d.has_lds_shape() && n >= d.len() + d.max_degree()
}

/// Builds a partition of `[k + #ascents]` whose vertex-order lower-degree
/// sequence is `d`. Every block has at most two elements.
pub fn realize_lds(d: &DegreeSequence) -> Result<SetPartition> {
    if !d.has_lds_shape() {
        return Err(Error::InvalidSequence(format!("{} must start at 0 and rise by at most 1 per step", d)));
    }
    let k = d.len();
    // 1-based copy with the sentinels d_0 = d_{k+1} = 0
    let mut dd = vec![0i64; k + 2];
    for (i, &v) in d.0.iter().enumerate() {
        dd[i + 1] = v as i64;
    }
    let ascent = |i: usize| (1..k).contains(&i) && dd[i + 1] > dd[i];
    let mut t = vec![0i64; k + 1];
    for i in 1..=k {
        t[i] = t[i - 1] + ascent(i) as i64;
    }
    let n_d = k + t[k] as usize;
    let mut blocks = Vec::with_capacity(k);
    for i in 1..=k {
        let m = (i..=k).find(|&j| dd[j + 1] <= dd[i]).expect("d_{k+1} = 0 terminates the search");
        let a = i as i64 + t[i - 1] - dd[i];
        let b = m as i64 + t[m] - dd[i];
        if a < 1 || b < 1 {
            return Err(Error::InvalidSequence(format!("{} produced a nonpositive element", d)));
        }
        let (a, b) = (a as usize - 1, b as usize - 1);
        blocks.push(if a == b { vec![a] } else { vec![a, b] });
    }
    SetPartition::from_blocks(n_d, blocks)
        .map_err(|e| Error::InvalidSequence(format!("{}: construction failed ({})", d, e)))
}
