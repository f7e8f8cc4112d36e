use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::numbers::factorial;
use super::Multigraph;
use crate::error::{Error, Result};

/// A partition of `{0, .., n-1}` with blocks sorted internally and ordered by
/// least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes block order and validates that the blocks are disjoint,
    /// nonempty and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x >= n {
                    return Err(Error::InvalidPartition(format!("element {} outside ground set", x + 1)));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {} appears twice", x + 1)));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("element {} is not covered", missing + 1)));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// Partition from a block label per element (any labels; equal labels share a block).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index_of: Vec<(usize, usize)> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match index_of.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, i)) => blocks[i].push(x),
                None => {
                    index_of.push((l, blocks.len()));
                    blocks.push(vec![x]);
                }
            }
        }
        Self { n: labels.len(), blocks }
    }

    pub fn singletons(n: usize) -> Self {
        Self { n, blocks: (0..n).map(|x| vec![x]).collect() }
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing each element.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                idx[x] = i;
            }
        }
        idx
    }
}

/// Iterator over all partitions of `{0, .., n-1}` via restricted growth strings.
pub struct SetPartitions {
    growth: Vec<usize>,
    done: bool,
}

pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions { growth: vec![0; n], done: false }
}

impl SetPartitions {
    fn advance(&mut self) {
        let n = self.growth.len();
        // prefix maxima determine how far each position may grow
        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.growth[i - 1]);
        }
        for i in (1..n).rev() {
            if self.growth[i] <= prefix_max[i] {
                self.growth[i] += 1;
                for g in &mut self.growth[i + 1..] {
                    *g = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_labels(&self.growth);
        self.advance();
        Some(current)
    }
}

/// Partitions of the vertex set whose every block is stable (induces no edge,
/// loops included).
pub fn stable_partitions(g: &Multigraph) -> impl Iterator<Item = SetPartition> + '_ {
    set_partitions(g.n()).filter(move |p| {
        let idx = p.block_index();
        g.edges().iter().all(|&(u, v)| idx[u] != idx[v])
    })
}

/// `mu(0, pi)` in the partition lattice: the product over blocks of
/// `(-1)^(|B|-1) (|B|-1)!`.
pub fn mobius_partition(p: &SetPartition) -> BigInt {
    let mut acc = BigInt::one();
    for b in p.blocks() {
        let size = b.len() as u32;
        acc *= factorial(size - 1);
        if size.is_multiple_of(2) {
            acc = -acc;
        }
    }
    acc
}
