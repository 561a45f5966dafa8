//! Subgraph isomorphism on graph classes that exclude a fixed linear forest
//! as a minor.
//!
//! The crate bundles four specialised solvers ([`solver::p4free`],
//! [`solver::vi`], [`solver::hitting`], [`solver::nd`]), a backtracking
//! oracle, the structural recognisers they depend on, generators for the
//! NP-hardness reductions, and a small harness (dispatch, corpora, bench).
//!
//! Every "yes" answer carries an [`Embedding`] that can be checked with
//! [`graph::verify_embedding`].

pub mod budget;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ilp;
pub mod matching;
pub mod recognize;
pub mod reduce;
pub mod solver;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{ComponentKind, Embedding, Family, Graph};
