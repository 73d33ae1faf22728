//! Spectral and degree-based centralization indices of undirected graphs.
//!
//! The central quantity is the von Neumann Theil index `T_Q = ln n - H(G)`,
//! where `H(G)` is the von Neumann entropy of the trace-normalized Laplacian
//! `L / 2m`. It is compared against the Theil index of degree powers
//! `T_{d,k}`, its Renyi generalization, the Jain fairness index and the
//! Freeman degree and betweenness centralizations.
//!
//! All entropic quantities are in nats.

pub mod cli;
pub mod experiments;
pub mod graph;
pub mod indices;
pub mod linalg;
pub mod spectral;
pub mod verify;

pub use graph::{CatalogId, DegreeVector, Graph, GraphError};
pub use indices::{
    centralization_report, classify_theorem_case, degree_theil, von_neumann_theil,
    CentralizationReport, IndexError, ReportConfig, TheoremCase,
};
