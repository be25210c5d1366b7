//! Graph coloring toolkit for conflict-free, odd, and dynamic colorings.
//!
//! The crate provides:
//! - an immutable simple-graph type with the structural queries the
//!   coloring engines need ([`graph`]),
//! - coloring values and verifiers for proper / odd / h-conflict-free /
//!   h-dynamic colorings ([`coloring`]),
//! - structural decompositions: ear decompositions, chordal certificates,
//!   local clique cover numbers, star-freeness ([`structure`]),
//! - constructive proper h-CF coloring engines ([`pcf`]),
//! - odd-coloring engines driven by clique peeling ([`odd`]),
//! - brute-force exact oracles for all chromatic parameters ([`exact`]),
//! - graph family generators including the orthogonal-Latin-square
//!   extremal construction ([`gen`]),
//! - DIMACS `.col` and edge-list I/O ([`io`]).

pub mod coloring;
pub mod error;
pub mod exact;
pub mod gen;
pub mod graph;
pub mod io;
pub mod odd;
pub mod pcf;
pub mod structure;

pub use coloring::{designated_odd_color, unique_colors, verify, Color, Coloring, ColoringReport};
pub use error::Error;
pub use graph::{CyclePath, Graph, VertexId};
