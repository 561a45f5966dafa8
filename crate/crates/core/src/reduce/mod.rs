//! Generators for three NP-hardness reductions to subgraph isomorphism,
//! together with exhaustive solvers for the source problems and builders
//! that turn a source solution into an explicit embedding.

mod sat21;
mod three_partition;
mod x3c;

pub use sat21::{
    build_sat21_witness, is_double_star_forest_after, parse_sat21, pendant_count, reduce_sat21, reduce_sat21_with_layout, solve_sat21, Literal, Sat21Formula,
    Sat21Layout, MAX_SAT21_VARIABLES,
};
pub use three_partition::{
    build_3partition_witness, parse_3partition, reduce_3partition, solve_3partition, PartitionMode,
    ThreePartitionInstance, MAX_3PARTITION_M,
};
pub use x3c::{build_x3c_witness, parse_x3c, reduce_x3c, reduce_x3c_with_layout, solve_x3c, X3cInstance, X3cLayout, MAX_X3C_UNIVERSE};

use crate::error::Error;
use crate::graph::Graph;

/// Incremental edge-list builder used by the gadget constructions.
#[derive(Default)]
pub(crate) struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(crate) fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Adds `count` new vertices adjacent to `center` and returns them.
    pub(crate) fn pendants(&mut self, center: usize, count: usize) -> Vec<usize> {
        (0..count)
            .map(|_| {
                let v = self.vertex();
                self.edge(center, v);
                v
            })
            .collect()
    }

    pub(crate) fn finish(self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("gadget edges are simple")
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines<'a>(text: &'a str, comment: &'a [char]) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with(comment)).then_some((i + 1, t))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, Error> {
    tok.parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a number, found {tok:?}") })
}
