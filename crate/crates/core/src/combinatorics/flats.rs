//! Closed edge sets (flats) of a multigraph and the Möbius function of their
//! lattice. Edge sets are sorted lists of edge indices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::graphs::components;
use super::partition::set_partitions;
use super::Multigraph;

/// All edges whose endpoints lie in one component of `(V, s)`. Loops are
/// always included.
pub fn closure(g: &Multigraph, s: &[usize]) -> Vec<usize> {
    let comp = components(g.n(), s.iter().map(|&e| g.edges()[e]));
    g.edges().iter().enumerate().filter(|(_, &(u, v))| comp[u] == comp[v]).map(|(i, _)| i).collect()
}

pub fn is_closed(g: &Multigraph, s: &[usize]) -> bool {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    closure(g, &sorted) == sorted
}

/// Every flat of `g`, smallest first. A flat is the set of edges inside the
/// blocks of a partition whose blocks each induce a connected subgraph.
pub fn closed_sets(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut flats: Vec<Vec<usize>> = set_partitions(g.n())
        .filter_map(|p| {
            let idx = p.block_index();
            let inside: Vec<usize> = (0..g.edges().len())
                .filter(|&e| {
                    let (u, v) = g.edges()[e];
                    idx[u] == idx[v]
                })
                .collect();
            let comp = components(g.n(), inside.iter().map(|&e| g.edges()[e]));
            let connected = p.blocks().iter().all(|b| b.iter().all(|&x| comp[x] == comp[b[0]]));
            connected.then_some(inside)
        })
        .collect();
    flats.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    flats
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let b: BTreeSet<_> = b.iter().collect();
    a.iter().all(|x| b.contains(x))
}

/// `mu(lower, upper)` in the lattice of flats, computed as the alternating sum
/// of `(-1)^|T|` over `T ⊆ upper \ lower` with `closure(lower ∪ T) = upper`.
/// Zero when `lower` is not closed (in particular `mu(∅, ·) = 0` in a graph
/// with loops) or when `lower ⊄ upper`.
pub fn mobius_flats(g: &Multigraph, lower: &[usize], upper: &[usize]) -> BigInt {
    if !is_closed(g, lower) || !is_closed(g, upper) || !is_subset(lower, upper) {
        return BigInt::zero();
    }
    let lower_set: BTreeSet<usize> = lower.iter().copied().collect();
    let free: Vec<usize> = upper.iter().copied().filter(|e| !lower_set.contains(e)).collect();
    let mut target = upper.to_vec();
    target.sort_unstable();
    assert!(free.len() < 64, "interval too large for subset expansion");
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << free.len()) {
        let mut s: Vec<usize> = lower.to_vec();
        s.extend((0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]));
        if closure(g, &s) == target {
            if mask.count_ones() % 2 == 0 {
                total += 1;
            } else {
                total -= 1;
            }
        }
    }
    total
}

/// `mu(lower, upper)` from the defining recursion
/// `mu(x,x) = 1`, `mu(x,y) = -sum_{x <= w < y} mu(x,w)` over the flats.
pub fn mobius_flats_by_lattice(g: &Multigraph, lower: &[usize], upper: &[usize]) -> BigInt {
    if !is_closed(g, lower) || !is_closed(g, upper) || !is_subset(lower, upper) {
        return BigInt::zero();
    }
    let interval: Vec<Vec<usize>> =
        closed_sets(g).into_iter().filter(|f| is_subset(lower, f) && is_subset(f, upper)).collect();
    // flats are sorted by size, so every w < y precedes y
    let mut mu: Vec<BigInt> = Vec::with_capacity(interval.len());
    for (i, y) in interval.iter().enumerate() {
        let value = if i == 0 {
            BigInt::one()
        } else {
            -(0..i).filter(|&j| is_subset(&interval[j], y)).map(|j| mu[j].clone()).fold(BigInt::zero(), |a, b| a + b)
        };
        mu.push(value);
    }
    mu.pop().unwrap_or_default()
}
