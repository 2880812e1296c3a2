//! Constructive tools for forbidden induced patterns in 3-uniform
//! hypergraphs.
//!
//! * [`stepup`]: step-up colourings, their δ-sequences and preorders,
//!   monochromatic clique search and the pattern census.
//! * [`extraction`]: Zarankiewicz-style `K_{s,t}` extraction and the chained
//!   `K_{s,s,s}` pipeline.
//! * [`density`]: bi-/tri-density checkers, the vertex-by-vertex embedding
//!   algorithm, parameter calculators and the embed-or-extract driver.
//! * [`constructions`]: lifts of random graphs, the tight 5-cycle and
//!   balanced tripartite search.
//! * [`oracles`]: deliberately naive brute-force ground truth.
//!
//! The crate is `no_std` and needs only `alloc`; file formats, threads and
//! clocks live in the `ehyper` companion crate.
#![no_std]

extern crate alloc;

pub mod bipartite;
pub mod budget;
pub mod colouring;
pub mod combin;
pub mod constructions;
pub mod density;
pub mod error;
pub mod extraction;
pub mod hypergraph;
pub mod oracles;
pub mod rational;
pub mod rng;
pub mod stepup;

pub use bipartite::{BipartiteGraph, TripartiteKind, TripartiteSystem, TripartiteWitness};
pub use budget::SearchBudget;
pub use colouring::{EdgeColouring, BLUE, RED};
pub use error::{Error, Result};
pub use hypergraph::{TupleColouring, UniformHypergraph};

/// Size reported for a clique when no edge of the colour exists: any
/// `uniformity - 1` vertices form a clique vacuously.
pub fn vacuous_clique_size(uniformity: usize, n: u32) -> usize {
    (uniformity - 1).min(n as usize)
}
