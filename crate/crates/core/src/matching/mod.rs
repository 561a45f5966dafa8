//! Bipartite matching: Hopcroft-Karp for plain maximum matchings and a
//! randomized algebraic test for perfect matchings of an exact
//! histogram-valued weight.

mod bipartite;
mod exact;
mod field;
mod histogram;

pub use bipartite::{max_bipartite_matching, Matching};
pub use exact::{
    achievable_weights, exact_weight_perfect_matching, has_perfect_matching, WeightedBipartiteMultigraph,
    WeightedEdge, MAX_GRID_POINTS,
};
pub use histogram::{histogram_add, ColorHistogram};
