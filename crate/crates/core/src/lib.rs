//! Sparing numbers of graphs and corona products.
//!
//! The sparing number of a graph is the least number of mono-indexed edges
//! (edges whose sum-set label is a singleton) over all weak integer additive
//! set-indexers of the graph. This crate computes it exactly, builds explicit
//! labelings that attain it, evaluates the known closed-form values for
//! coronas of paths, cycles, complete and bipartite graphs, and checks those
//! closed forms against the exact solvers.

pub mod cli;
pub mod dimacs;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod setlab;
pub mod solver;
pub mod spec_string;

pub use graph::{build_family, corona, CoronaLayout, FamilySpec, Graph, GraphError};
pub use setlab::{
    build_witness, count_mono_edges, scale, sidon_prefix, sumset, validate_labeling, Assignment,
    IndexSet, Labeling, Mark, ValidationReport,
};
pub use solver::{
    sparing_bruteforce, sparing_corona, sparing_mwis, Method, SolverConfig, SparingResult,
};
