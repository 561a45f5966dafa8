//! Subgraph isomorphism solvers. Each returns `Ok(Some(embedding))` for
//! "yes", `Ok(None)` for "no" (or, for the randomized solver, "none
//! found"), and an error for class violations or exhausted budgets.

pub mod oracle;
pub mod p4free;

pub use oracle::solve_backtracking;
pub use p4free::solve_p4free;
pub mod vi;

pub use vi::{fits, solve_p4_union_kp3, solve_vi, solve_vi_with_certificate, ComponentType, TypeMultiset};
pub mod hitting;

pub use hitting::{enumerate_leftover_histograms, solve_hitting};
pub mod nd;

pub use nd::solve_nd;
