//! Theta numbers of pure simplicial complexes.
//!
//! A pure `k`-dimensional simplicial complex generalizes a graph (the case
//! `k = 1`). Its independence number — the largest vertex set containing no
//! maximal face — is NP-hard to compute, but it admits an efficiently
//! computable semidefinite upper bound built from the down-Laplacian of the
//! complete complex, in the same way the Lovász theta number of a graph is
//! built from the all-ones matrix.
//!
//! The crate provides:
//!
//! - [`complex`]: pure complexes, faces, incidence signs, links, independence;
//! - [`chain`]: coboundary/boundary operators, up/down Laplacians, adjacency,
//!   spectra and Betti numbers;
//! - [`linalg`]: self-contained dense symmetric eigendecomposition (cyclic
//!   Jacobi), PSD projection and Cholesky solves;
//! - [`sdp`]: a small deterministic ADMM solver for equality-constrained
//!   semidefinite programs with one or more PSD blocks, plus a dual
//!   eigenvalue-certificate evaluator;
//! - [`theta`]: the theta number of a complex, the graph theta number, the
//!   Hoffman ratio bound, the degree/eigenvalue bound, the link bound, and the
//!   hierarchy of strengthened theta numbers reaching the independence number;
//! - [`combinatorics`]: exact independence number, weak chromatic number,
//!   orientation-respecting homomorphisms and the associated chromatic number;
//! - [`random`]: Linial–Meshulam random complexes, Erdős–Rényi graphs and
//!   seeded scaling experiments.

pub mod chain;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod sdp;
pub mod theta;

pub use complex::{epsilon, incidence, Complex, Face, FaceIndex};
pub use error::{ComplexError, LinalgError, SdpError, SearchError};
pub use graph::Graph;
pub use matrix::SymMatrix;
pub use sdp::{SolveReport, SolveStatus, SolverParams};
