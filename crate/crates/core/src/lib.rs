//! Laplacian eigenvalues of vertex- and edge-weighted graphs and the
//! resistance-based content quantities that bound them.
//!
//! For a connected graph with vertex masses `μ` and edge conductances `κ`,
//! this crate computes
//!
//! * the Neumann eigenvalue `λ₂` and Dirichlet eigenvalues `λ(G, S)` of
//!   `Lx = λMx` ([`spectral`]),
//! * effective resistances between vertex sets ([`resistance`]),
//! * the Dirichlet content `Ψ`, Neumann content `Ψ₂` and isoperimetric
//!   constant `Φ` ([`content`]),
//!
//! and checks the inequalities relating them on concrete graphs
//! ([`harness`]):
//!
//! ```text
//! Ψ/4 ≤ λ(G, S) ≤ Ψ        Ψ₂/4 ≤ λ₂ ≤ Ψ₂        λ₂/2 ≤ Φ ≤ √(2 λ₂ max dᵢ/μᵢ)
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod content;
pub mod error;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod resistance;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Edge, VertexId, VertexSet, WeightedGraph};
