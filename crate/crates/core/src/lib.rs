//! Four induced subgraph families of the hypercube and the machinery to
//! verify their enumerative and metric structure.
//!
//! Vertices are binary strings. The families, selected by [`Family`], are
//! the full hypercube, Fibonacci strings (no `11` factor), Lucas strings
//! (no `11` cyclically), run-constrained strings (every run of 1s is
//! immediately followed by a strictly longer run of 0s), and
//! run-constrained-circularly strings (the same condition read cyclically,
//! the vertex set of the associated Mersenne graph).
//!
//! The crate is organized around closed forms and brute-force oracles for
//! the same quantities: vertex counts against Fibonacci/Lucas/associated
//! Mersenne numbers, edge counts against recursions and `n·L(n-3)`,
//! radius/diameter/center/periphery against their predicted values, and
//! partial-cube/median checks. The `verify` module drives all of these and
//! the `cli` module exposes them as subcommands.

pub mod bitstring;
pub mod cli;
pub mod cube_props;
pub mod error;
pub mod explore;
pub mod families;
pub mod graph;
pub mod metrics;
pub mod sequences;
pub mod verify;

pub use bitstring::{BitString, Family, Run};
pub use error::{Error, Result};
pub use families::VertexSet;
pub use graph::Graph;
