use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};

/// Graph class an instance generator samples from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassSpec {
    P4Free,
    /// Vertex integrity at most `k`.
    Vi(usize),
    /// `P4`-hitting number at most `k`.
    Hitting(usize),
    /// Neighborhood diversity at most `k`.
    Nd(usize),
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::P4Free => write!(f, "p4free"),
            ClassSpec::Vi(k) => write!(f, "vi:{k}"),
            ClassSpec::Hitting(k) => write!(f, "hitting:{k}"),
            ClassSpec::Nd(k) => write!(f, "nd:{k}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = Error;

    /// Accepts `p4free`, `vi:3`, `vi(3)`, `hitting:2`, `nd:4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "p4free" {
            return Ok(ClassSpec::P4Free);
        }
        let (name, arg) = s
            .split_once(':')
            .or_else(|| s.strip_suffix(')').and_then(|t| t.split_once('(')))
            .ok_or_else(|| Error::invalid(format!("unknown class `{s}`")))?;
        let k: usize = arg.trim().parse().map_err(|_| Error::invalid(format!("bad class parameter in `{s}`")))?;
        if k == 0 {
            return Err(Error::invalid("class parameter must be positive"));
        }
        match name.trim() {
            "vi" => Ok(ClassSpec::Vi(k)),
            "hitting" => Ok(ClassSpec::Hitting(k)),
            "nd" => Ok(ClassSpec::Nd(k)),
            other => Err(Error::invalid(format!("unknown class `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub host: Graph,
    pub pattern: Graph,
    /// `Some(true)` for planted instances; otherwise unknown.
    pub expected: Option<bool>,
}

/// Samples a host of order `size` inside `class`. A planted pattern is a
/// random subgraph of the host; otherwise the pattern is an independent
/// sample from the same class of order between `size/2` and `size`.
pub fn generate<R: Rng + ?Sized>(class: ClassSpec, size: usize, rng: &mut R, planted: bool) -> Generated {
    let (host, classes) = sample(class, size, rng);
    if planted {
        let pattern = match class {
            ClassSpec::Nd(_) => nd_subgraph(&host, &classes, rng),
            _ => random_subgraph(&host, rng),
        };
        Generated { host, pattern, expected: Some(true) }
    } else {
        let order = rng.gen_range(size / 2..=size).max(size.min(1));
        let (pattern, _) = sample(class, order, rng);
        Generated { host, pattern, expected: None }
    }
}

/// Host graph plus, for `nd`, the class of each vertex.
fn sample<R: Rng + ?Sized>(class: ClassSpec, n: usize, rng: &mut R) -> (Graph, Vec<usize>) {
    match class {
        ClassSpec::P4Free => (relabel(&p4free(n, rng), rng), Vec::new()),
        ClassSpec::Vi(k) => (relabel(&vi(n, k, rng), rng), Vec::new()),
        ClassSpec::Hitting(k) => (relabel(&hitting(n, k, rng), rng), Vec::new()),
        ClassSpec::Nd(k) => nd(n, k, rng),
    }
}

fn relabel<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

/// Union of singletons, triangles and stars.
fn p4free<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    let mut next = 0;
    let max_leaves = (n / 4).max(1);
    while next < n {
        let left = n - next;
        let roll: f64 = rng.gen();
        if roll < 0.2 || left == 1 {
            next += 1;
        } else if roll < 0.45 && left >= 3 {
            edges.extend([(next, next + 1), (next + 1, next + 2), (next, next + 2)]);
            next += 3;
        } else {
            let leaves = rng.gen_range(1..=max_leaves.min(left - 1));
            edges.extend((1..=leaves).map(|i| (next, next + i)));
            next += leaves + 1;
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// Random connected graph on `offset..offset+size`: a random tree plus
/// extra edges.
fn connected<R: Rng + ?Sized>(offset: usize, size: usize, rng: &mut R, edges: &mut Vec<(usize, usize)>) {
    for i in 1..size {
        let parent = rng.gen_range(0..i);
        edges.push((offset + parent, offset + i));
        for j in 0..i {
            if j != parent && rng.gen_bool(0.25) {
                edges.push((offset + j, offset + i));
            }
        }
    }
}

/// Vertices `0..s` are the deletion set, adjacent at random to everything.
fn attach_core<R: Rng + ?Sized>(s: usize, n: usize, rng: &mut R, edges: &mut Vec<(usize, usize)>) {
    for u in 0..s {
        for v in u + 1..n {
            let p = if v < s { 0.5 } else { 0.3 };
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
}

fn vi<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let s = rng.gen_range(0..k).min(n);
    let b = k - s;
    let mut edges = Vec::new();
    let mut next = s;
    while next < n {
        let size = rng.gen_range(1..=b.min(n - next));
        connected(next, size, rng, &mut edges);
        next += size;
    }
    attach_core(s, n, rng, &mut edges);
    Graph::from_edges(n, &edges).expect("simple")
}

fn hitting<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let s = rng.gen_range(0..=k).min(n);
    let rest = p4free(n - s, rng);
    let mut edges: Vec<(usize, usize)> = rest.edges().map(|(u, v)| (u + s, v + s)).collect();
    attach_core(s, n, rng, &mut edges);
    Graph::from_edges(n, &edges).expect("simple")
}

fn nd<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> (Graph, Vec<usize>) {
    let c = k.min(n);
    let mut class: Vec<usize> = (0..n).map(|v| if v < c { v } else { rng.gen_range(0..c) }).collect();
    class.shuffle(rng);
    let clique: Vec<bool> = (0..c).map(|_| rng.gen_bool(0.5)).collect();
    let mut adj = vec![vec![false; c]; c];
    for i in 0..c {
        for j in i + 1..c {
            let a = rng.gen_bool(0.5);
            adj[i][j] = a;
            adj[j][i] = a;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (class[u], class[v]);
            if (a == b && clique[a]) || (a != b && adj[a][b]) {
                edges.push((u, v));
            }
        }
    }
    (Graph::from_edges(n, &edges).expect("simple"), class)
}

/// Random subgraph: each vertex kept with probability 3/4 (at least one),
/// each surviving edge with probability 4/5, then randomly relabelled.
pub fn random_subgraph<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let keep = keep_vertices(g.n(), rng);
    let h = g.induced(&keep);
    let edges: Vec<(usize, usize)> = h.edges().filter(|_| rng.gen_bool(0.8)).collect();
    relabel(&Graph::from_edges(h.n(), &edges).expect("simple"), rng)
}

fn keep_vertices<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.75)).collect();
    if keep.is_empty() && n > 0 {
        keep.push(rng.gen_range(0..n));
    }
    keep
}

/// Induced subgraph followed by deletions that keep twin classes intact:
/// emptying a class or dropping all edges between two classes.
fn nd_subgraph<R: Rng + ?Sized>(g: &Graph, class: &[usize], rng: &mut R) -> Graph {
    let keep = keep_vertices(g.n(), rng);
    let h = g.induced(&keep);
    let c = class.iter().max().map_or(0, |&m| m + 1);
    let mut cut = vec![vec![false; c]; c];
    for i in 0..c {
        for j in i..c {
            let d = rng.gen_bool(0.2);
            cut[i][j] = d;
            cut[j][i] = d;
        }
    }
    let edges: Vec<(usize, usize)> = h.edges().filter(|&(u, v)| !cut[class[keep[u]]][class[keep[v]]]).collect();
    relabel(&Graph::from_edges(h.n(), &edges).expect("simple"), rng)
}

/// Every graph on at most `max_n` vertices, one per isomorphism class,
/// ordered by order, size and canonical form.
pub fn enumerate_small_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 6, "exhaustive enumeration is meant for tiny graphs");
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut forms = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).expect("simple");
            forms.insert((g.m(), canonical_form(&g, &vec![0; n]).0));
        }
        out.extend(forms.into_iter().map(|(_, f)| f.to_graph().0));
    }
    out
}
