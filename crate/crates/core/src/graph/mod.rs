//! Simple undirected graphs over dense vertex ids, the named families used
//! throughout the crate, component analysis and witness checking.

mod canon;
mod family;
pub mod io;
mod paths;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, CanonicalForm};
pub use family::{make_family, Family};
pub use paths::{contains_disjoint_p5, contains_disjoint_paths, contains_path_subgraph, find_path};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, which makes `has_edge` a binary search
/// and gives every derived listing a deterministic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {})", w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeated edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut twice = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    adj[i].push(local[w]);
                }
            }
            adj[i].sort_unstable();
            twice += adj[i].len();
        }
        Graph { adj, m: twice / 2 }
    }

    /// Deletes the vertices flagged in `removed`. Returns the remaining graph
    /// and, for each of its vertices, the original id.
    pub fn remove_vertices(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !removed[v]).collect();
        (self.induced(&kept), kept)
    }

    /// Disjoint union with consecutive relabelling. Returns the union and the
    /// offset at which each part starts.
    pub fn disjoint_union(parts: &[Graph]) -> (Graph, Vec<usize>) {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut adj = Vec::new();
        let mut m = 0;
        for g in parts {
            let off = adj.len();
            offsets.push(off);
            adj.extend(g.adj.iter().map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()));
            m += g.m;
        }
        (Graph { adj, m }, offsets)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut twice = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if it.peek() == Some(&&v) {
                    it.next();
                } else if v != u {
                    list.push(v);
                }
            }
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        Graph::from_edges_dedup(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Injective map from pattern vertices to host vertices: `map[u]` is the
/// host vertex assigned to pattern vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// True iff `e` is injective into `g` and maps every edge of `q` onto an
/// edge of `g`.
pub fn verify_embedding(q: &Graph, g: &Graph, e: &Embedding) -> bool {
    if e.len() != q.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in e.as_slice() {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    q.edges().all(|(u, v)| g.has_edge(e.0[u], e.0[v]))
}

/// Shape of a connected component, as far as the P4-free solvers care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    Singleton,
    Triangle,
    /// `K_{1,l}` with `l >= 1` leaves. `K2` is `Star(1)`.
    Star(usize),
    Other,
}

/// Connected components, each sorted, listed by their minimum vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    components_masked(g, None)
}

/// Components of the subgraph induced by the vertices not flagged in
/// `removed`.
pub fn components_masked(g: &Graph, removed: Option<&[bool]>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = match removed {
        Some(r) => r.to_vec(),
        None => vec![false; n],
    };
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classifies a connected component as `K1`, `K3`, a star, or something
/// else. `comp` must be a full component of `g`, so degrees in `g` are
/// degrees inside the component.
pub fn classify_component(g: &Graph, comp: &[usize]) -> ComponentKind {
    let size = comp.len();
    match size {
        0 => ComponentKind::Other,
        1 => ComponentKind::Singleton,
        _ => {
            let twice: usize = comp.iter().map(|&v| g.degree(v)).sum();
            let edges = twice / 2;
            if size == 3 && edges == 3 {
                ComponentKind::Triangle
            } else if edges == size - 1 && comp.iter().any(|&v| g.degree(v) == size - 1) {
                ComponentKind::Star(size - 1)
            } else {
                ComponentKind::Other
            }
        }
    }
}

/// True iff every component is `K1`, `K3` or a star, i.e. the graph has no
/// `P4` subgraph. Linear time.
pub fn is_p4_free(g: &Graph) -> bool {
    components(g)
        .iter()
        .all(|c| classify_component(g, c) != ComponentKind::Other)
}

/// Largest component order (0 for the empty graph).
pub fn max_component_order(g: &Graph, removed: Option<&[bool]>) -> usize {
    components_masked(g, removed).iter().map(Vec::len).max().unwrap_or(0)
}

/// Breadth-first order of the component containing `start`, restricted to
/// vertices that are not flagged in `removed`.
pub(crate) fn bfs_order(g: &Graph, start: usize, removed: &[bool], limit: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = vec![start];
    seen[start] = true;
    let mut head = 0;
    while head < order.len() && order.len() < limit {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w] && !removed[w] {
                seen[w] = true;
                order.push(w);
                if order.len() == limit {
                    break;
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        make_family(&Family::Path(n)).unwrap()
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn components_examples() {
        assert!(components(&Graph::empty(0)).is_empty());
        let two_triangles = make_family(&Family::DisjointUnion(vec![Family::Clique(3), Family::Clique(3)])).unwrap();
        let comps = components(&two_triangles);
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let star = make_family(&Family::Star(4)).unwrap();
        assert_eq!(components(&star).len(), 1);
        assert_eq!(components(&star)[0].len(), 5);
    }

    #[test]
    fn classify_examples() {
        let k3 = make_family(&Family::Clique(3)).unwrap();
        assert_eq!(classify_component(&k3, &[0, 1, 2]), ComponentKind::Triangle);
        let star = make_family(&Family::Star(4)).unwrap();
        assert_eq!(classify_component(&star, &[0, 1, 2, 3, 4]), ComponentKind::Star(4));
        let p4 = path(4);
        assert_eq!(classify_component(&p4, &[0, 1, 2, 3]), ComponentKind::Other);
        let k2 = path(2);
        assert_eq!(classify_component(&k2, &[0, 1]), ComponentKind::Star(1));
        let p3 = path(3);
        assert_eq!(classify_component(&p3, &[0, 1, 2]), ComponentKind::Star(2));
        assert_eq!(classify_component(&Graph::empty(1), &[0]), ComponentKind::Singleton);
    }

    #[test]
    fn verify_embedding_examples() {
        let k1 = Graph::empty(1);
        assert!(verify_embedding(&k1, &k1, &Embedding(vec![0])));
        let k2 = path(2);
        assert!(!verify_embedding(&k2, &Graph::empty(2), &Embedding(vec![0, 1])));
        let k3 = make_family(&Family::Clique(3)).unwrap();
        assert!(verify_embedding(&path(3), &k3, &Embedding(vec![0, 1, 2])));
        // not injective
        assert!(!verify_embedding(&Graph::empty(2), &k3, &Embedding(vec![1, 1])));
        // wrong length
        assert!(!verify_embedding(&Graph::empty(2), &k3, &Embedding(vec![1])));
    }

    #[test]
    fn complement_and_union() {
        let c4 = make_family(&Family::Cycle(4)).unwrap();
        let co = c4.complement();
        assert_eq!(co.m(), 2);
        let (u, off) = Graph::disjoint_union(&[c4.clone(), co]);
        assert_eq!(off, vec![0, 4]);
        assert_eq!(u.m(), 6);
        assert_eq!(components(&u).len(), 3);
    }

    #[test]
    fn induced_keeps_order() {
        let p = path(5);
        let h = p.induced(&[4, 3, 0]);
        assert_eq!(h.n(), 3);
        assert!(h.has_edge(0, 1));
        assert!(!h.has_edge(1, 2));
    }
}
