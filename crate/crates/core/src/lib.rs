//! Exact chromatic functions of gain graphs over the integers and Z_m.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chromatic;
pub mod combinatorics;
pub mod error;
pub mod families;
pub mod gain_graph;
pub mod identities;
pub mod poly;

pub use error::{Error, Result};
pub use gain_graph::{Edge, GainGraph, IntegralGainGraph, ModularGainGraph, SwitchingFunction};
pub use poly::{Poly1, Poly2};
