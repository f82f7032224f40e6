//! Spectra of graph matrices and machine-checked eigenvalue-sum bounds.
//!
//! The crate computes eigenvalues of the adjacency matrix `A`, the
//! combinatorial Laplacian `H = Deg − A` and the renormalized Laplacian
//! `Ĥ = Deg^{-1/2} H Deg^{-1/2}` of finite simple graphs, evaluates a catalogue
//! of inequalities for partial sums of those eigenvalues as [`BoundReport`]s,
//! and certifies necessary conditions for a graph to sit inside the cubic
//! lattice `ℤ^ν`.

pub mod averaged;
pub mod basis;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod lattice_bounds;
pub mod matrix;
pub mod report;
pub mod rng;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{Graph, LatticeEmbedding};
pub use matrix::SymMatrix;
pub use report::{BoundName, BoundReport, Params, Relation, Selection, Tolerance, Verdict};
pub use spectra::{Solver, Spectrum, SpectrumKind};
