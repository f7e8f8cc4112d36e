//! Set partitions, Stirling numbers, lattices of flats, descending-path
//! partitions and lower-degree sequences of overlap graphs.
//!
//! Vertices and partition elements are 0-based throughout; conversion to the
//! 1-based notation of the CLI happens at the IO boundary.

mod flats;
mod graphs;
mod lds;
mod numbers;
mod partition;
mod paths;

pub use flats::{closed_sets, closure, is_closed, mobius_flats, mobius_flats_by_lattice};
pub use graphs::{components, Multigraph, SimpleGraph, UnionFind};
pub use lds::{
    ascents, is_increasing_lds, is_vertex_order_lds, lower_degrees, overlap_graph, realize_lds, DegreeSequence,
    OverlapGraph,
};
pub use numbers::{bell, binomial, cycle_count, factorial, stirling1_signed, stirling2};
pub use partition::{mobius_partition, set_partitions, stable_partitions, SetPartition, SetPartitions};
pub use paths::{descending_path_partitions, is_descending_path};
