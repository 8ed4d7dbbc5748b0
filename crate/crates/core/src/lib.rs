//! Exact computation of graph isolation parameters.
//!
//! The crate covers the domination number, the `F`-isolation number for
//! single patterns, named generator families, the family of all cycles and
//! `t` disjoint copies of any of those, hitting (and decycling) numbers and
//! packing numbers. Every solver is exact: when the configured search budget
//! runs out it reports [`Error::ResourceExhausted`] instead of an estimate.
//!
//! Around the solvers live the graph constructions the isolation results are
//! stated for (rooted-copy attachment, Cartesian products, subdivisions and
//! the two extremal gadgets for `tK_k`), a seeded random regular graph
//! sampler, exhaustive enumeration of small non-isomorphic graphs and a
//! [`verify`] module that turns each statement into a structured
//! [`verify::CheckReport`].
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod constructions;
pub mod enumerate;
mod error;
pub mod family;
pub mod graph;
pub mod regular;
pub mod solver;
mod subgraph;
pub mod verify;

pub use error::{Error, Result};
pub use family::{BaseFamily, FamilySpec, GeneratorKind};
pub use graph::{DegreeProfile, Graph, InducedSubgraph, VertexSet};
pub use solver::{Engine, Limits, Packing, Solver, SolverOutcome};
