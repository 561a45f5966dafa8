use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Descriptor of a named graph family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Path on `n` vertices.
    Path(usize),
    Clique(usize),
    /// `K_{1,l}`; the center is vertex 0.
    Star(usize),
    /// Two stars `K_{1,a}`, `K_{1,b}` with adjacent centers 0 and 1.
    DoubleStar(usize, usize),
    Cycle(usize),
    DisjointUnion(Vec<Family>),
    Complement(Box<Family>),
}

pub fn make_family(spec: &Family) -> Result<Graph> {
    fn positive(what: &str, n: usize) -> Result<()> {
        if n == 0 {
            Err(Error::invalid(format!("{what} needs a positive size")))
        } else {
            Ok(())
        }
    }
    match *spec {
        Family::Path(n) => {
            positive("path", n)?;
            Ok(Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i))))
        }
        Family::Clique(n) => {
            positive("clique", n)?;
            Ok(Graph::from_edges_dedup(
                n,
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
            ))
        }
        Family::Star(l) => {
            positive("star", l)?;
            Ok(Graph::from_edges_dedup(l + 1, (1..=l).map(|i| (0, i))))
        }
        Family::DoubleStar(a, b) => {
            positive("double star", a)?;
            positive("double star", b)?;
            let edges = std::iter::once((0, 1))
                .chain((0..a).map(|i| (0, 2 + i)))
                .chain((0..b).map(|i| (1, 2 + a + i)));
            Ok(Graph::from_edges_dedup(a + b + 2, edges))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::invalid("cycle needs at least 3 vertices"));
            }
            Ok(Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n))))
        }
        Family::DisjointUnion(ref parts) => {
            let graphs = parts.iter().map(make_family).collect::<Result<Vec<_>>>()?;
            Ok(Graph::disjoint_union(&graphs).0)
        }
        Family::Complement(ref inner) => Ok(make_family(inner)?.complement()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::components;

    #[test]
    fn path_counts() {
        let g = make_family(&Family::Path(5)).unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
    }

    #[test]
    fn double_star_shape() {
        let g = make_family(&Family::DoubleStar(2, 3)).unwrap();
        assert_eq!((g.n(), g.m()), (7, 6));
        let big: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
        assert_eq!(big.len(), 2);
        assert!(g.has_edge(big[0], big[1]));
    }

    #[test]
    fn union_relabels() {
        let g = make_family(&Family::DisjointUnion(vec![Family::Clique(3), Family::Star(2)])).unwrap();
        assert_eq!((g.n(), g.m()), (6, 5));
        assert_eq!(components(&g).len(), 2);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(make_family(&Family::Path(0)).is_err());
        assert!(make_family(&Family::Star(0)).is_err());
        assert!(make_family(&Family::DoubleStar(0, 2)).is_err());
        assert!(make_family(&Family::DisjointUnion(vec![Family::Clique(0)])).is_err());
    }

    #[test]
    fn complement_of_clique_is_edgeless() {
        let g = make_family(&Family::Complement(Box::new(Family::Clique(4)))).unwrap();
        assert_eq!((g.n(), g.m()), (4, 0));
    }
}
