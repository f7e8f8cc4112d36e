use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::partition::set_partitions;
use super::SimpleGraph;

/// Whether the block, listed in decreasing order, is a path of `g`.
/// Singletons always qualify.
pub fn is_descending_path(g: &SimpleGraph, block: &[usize]) -> bool {
    let mut sorted = block.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// `p[r]` = number of partitions of the vertex set into `r` blocks, each the
/// vertex set of a descending path of `g`. The vector has length `n + 1`.
pub fn descending_path_partitions(g: &SimpleGraph) -> Vec<BigInt> {
    let n = g.n();
    let mut counts = vec![BigInt::zero(); n + 1];
    let mut feasible: BTreeMap<Vec<usize>, bool> = BTreeMap::new();
    for p in set_partitions(n) {
        let ok = p.blocks().iter().all(|b| *feasible.entry(b.clone()).or_insert_with(|| is_descending_path(g, b)));
        if ok {
            counts[p.len()] += 1;
        }
    }
    counts
}
