//! Path subgraph detection and vertex-disjoint path packing.
//!
//! For linear forests minor containment and subgraph containment coincide,
//! so these routines double as minor tests for `P_k` and `p P_k`.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{components_masked, Graph};

/// Returns a path on `k` vertices (as a vertex sequence) in the subgraph
/// induced by the vertices not flagged in `removed`, if one exists.
///
/// Tree components are answered exactly through their longest path; other
/// components fall back to a depth-capped DFS over simple paths.
pub fn find_path(g: &Graph, k: usize, removed: Option<&[bool]>) -> Option<Vec<usize>> {
    let alive = |v: usize| removed.is_none_or(|r| !r[v]);
    if k == 0 {
        return Some(Vec::new());
    }
    for comp in components_masked(g, removed) {
        if comp.len() < k {
            continue;
        }
        if k == 1 {
            return Some(vec![comp[0]]);
        }
        let twice: usize = comp
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| alive(w)).count())
            .sum();
        if twice / 2 + 1 == comp.len() {
            let longest = longest_tree_path(g, comp[0], removed);
            if longest.len() >= k {
                return Some(longest[..k].to_vec());
            }
            continue;
        }
        let mut on_path = vec![false; g.n()];
        let mut path = Vec::with_capacity(k);
        for &s in &comp {
            if dfs_path(g, s, k, removed, &mut on_path, &mut path) {
                return Some(path);
            }
        }
    }
    None
}

fn dfs_path(
    g: &Graph,
    v: usize,
    k: usize,
    removed: Option<&[bool]>,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
) -> bool {
    on_path[v] = true;
    path.push(v);
    if path.len() == k {
        return true;
    }
    for &w in g.neighbors(v) {
        if !on_path[w] && removed.is_none_or(|r| !r[w]) && dfs_path(g, w, k, removed, on_path, path) {
            return true;
        }
    }
    on_path[v] = false;
    path.pop();
    false
}

fn bfs_farthest(g: &Graph, start: usize, removed: Option<&[bool]>) -> (usize, Vec<usize>) {
    let mut parent = HashMap::new();
    parent.insert(start, usize::MAX);
    let mut queue = VecDeque::from([start]);
    let mut last = start;
    while let Some(v) = queue.pop_front() {
        last = v;
        for &w in g.neighbors(v) {
            if removed.is_none_or(|r| !r[w]) && !parent.contains_key(&w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![last];
    let mut cur = last;
    while parent[&cur] != usize::MAX {
        cur = parent[&cur];
        path.push(cur);
    }
    (last, path)
}

fn longest_tree_path(g: &Graph, start: usize, removed: Option<&[bool]>) -> Vec<usize> {
    let (far, _) = bfs_farthest(g, start, removed);
    bfs_farthest(g, far, removed).1
}

/// True iff `g` contains a path on `k` vertices as a subgraph.
pub fn contains_path_subgraph(g: &Graph, k: usize) -> bool {
    find_path(g, k, None).is_some()
}

/// True iff `g` contains `p` vertex-disjoint `P5` subgraphs.
pub fn contains_disjoint_p5(g: &Graph, p: usize) -> bool {
    contains_disjoint_paths(g, 5, p)
}

/// True iff `g` contains `count` vertex-disjoint paths on `len` vertices.
///
/// Exact. Twin classes are first truncated to the number of vertices a
/// packing can use from them; then a small hitting set certifies "no" when
/// one exists, and otherwise a branching search decides: for a found path
/// `P`, some solution either avoids `P` (and `P` may replace any of its
/// paths) or meets it, so some solution path passes through a vertex of `P`.
pub fn contains_disjoint_paths(g: &Graph, len: usize, count: usize) -> bool {
    if count == 0 || len == 0 {
        return true;
    }
    if len == 1 {
        return g.n() >= count;
    }
    if g.n() < len * count {
        return false;
    }
    let removed = truncate_twins(g, len, count);
    if has_small_hitting_set(g, len, count - 1, &mut removed.clone()) {
        return false;
    }
    pack(g, len, count, &mut removed.clone())
}

fn truncate_twins(g: &Graph, len: usize, count: usize) -> Vec<bool> {
    let mut removed = vec![false; g.n()];
    let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        open.entry(g.neighbors(v)).or_default().push(v);
        let mut nb = g.neighbors(v).to_vec();
        let pos = nb.binary_search(&v).unwrap_err();
        nb.insert(pos, v);
        closed.entry(nb).or_default().push(v);
    }
    let cap = len * count;
    for (nb, class) in open {
        let keep = class.len().min(2 * nb.len()).min(cap);
        for &v in &class[keep..] {
            removed[v] = true;
        }
    }
    for class in closed.into_values() {
        if class.len() > cap {
            for &v in &class[cap..] {
                removed[v] = true;
            }
        }
    }
    removed
}

fn has_small_hitting_set(g: &Graph, len: usize, budget: usize, removed: &mut Vec<bool>) -> bool {
    let Some(path) = find_path(g, len, Some(&removed[..])) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for v in path {
        removed[v] = true;
        let ok = has_small_hitting_set(g, len, budget - 1, removed);
        removed[v] = false;
        if ok {
            return true;
        }
    }
    false
}

fn pack(g: &Graph, len: usize, count: usize, removed: &mut Vec<bool>) -> bool {
    if count == 0 {
        return true;
    }
    let Some(path) = find_path(g, len, Some(&removed[..])) else {
        return false;
    };
    let mut tried: HashSet<Vec<usize>> = HashSet::new();
    for &v in &path {
        for set in path_sets_through(g, v, len, removed) {
            if !tried.insert(set.clone()) {
                continue;
            }
            for &w in &set {
                removed[w] = true;
            }
            let ok = pack(g, len, count - 1, removed);
            for &w in &set {
                removed[w] = false;
            }
            if ok {
                return true;
            }
        }
    }
    false
}

/// Vertex sets of all `len`-vertex paths through `v`, sorted and deduplicated.
fn path_sets_through(g: &Graph, v: usize, len: usize, removed: &[bool]) -> Vec<Vec<usize>> {
    let mut arms: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut cur = vec![v];
    on_path[v] = true;
    collect_arms(g, len - 1, removed, &mut on_path, &mut cur, &mut arms);
    let mut out: HashSet<Vec<usize>> = HashSet::new();
    for a in &arms {
        for b in &arms {
            if a.len() + b.len() - 1 != len {
                continue;
            }
            if a[1..].iter().any(|x| b[1..].contains(x)) {
                continue;
            }
            let mut set: Vec<usize> = a.iter().chain(b[1..].iter()).copied().collect();
            set.sort_unstable();
            out.insert(set);
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    out
}

fn collect_arms(
    g: &Graph,
    max_edges: usize,
    removed: &[bool],
    on_path: &mut [bool],
    cur: &mut Vec<usize>,
    arms: &mut Vec<Vec<usize>>,
) {
    arms.push(cur.clone());
    if cur.len() > max_edges {
        return;
    }
    let last = *cur.last().unwrap();
    for &w in g.neighbors(last) {
        if !on_path[w] && !removed[w] {
            on_path[w] = true;
            cur.push(w);
            collect_arms(g, max_edges, removed, on_path, cur, arms);
            cur.pop();
            on_path[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn is_path(g: &Graph, p: &[usize]) -> bool {
        let distinct: HashSet<_> = p.iter().collect();
        distinct.len() == p.len() && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn path_examples() {
        assert!(contains_path_subgraph(&fam(Family::Clique(3)), 3));
        assert!(!contains_path_subgraph(&fam(Family::Star(10)), 4));
        assert!(contains_path_subgraph(&fam(Family::DoubleStar(1, 1)), 4));
        assert!(!contains_path_subgraph(&fam(Family::DoubleStar(5, 7)), 5));
    }

    #[test]
    fn found_paths_are_paths() {
        let g = fam(Family::Cycle(7));
        let p = find_path(&g, 7, None).unwrap();
        assert!(is_path(&g, &p));
        let t = fam(Family::DoubleStar(3, 4));
        let p = find_path(&t, 4, None).unwrap();
        assert!(is_path(&t, &p));
    }

    #[test]
    fn disjoint_p5_examples() {
        assert!(contains_disjoint_p5(&fam(Family::Path(10)), 2));
        assert!(!contains_disjoint_p5(&fam(Family::Path(9)), 2));
        assert!(!contains_disjoint_p5(&fam(Family::Star(100)), 1));
        assert!(contains_disjoint_p5(&fam(Family::Clique(15)), 3));
        assert!(!contains_disjoint_p5(&fam(Family::Clique(14)), 3));
    }

    #[test]
    fn pendant_twins_are_truncated_safely() {
        // two hubs sharing many pendant leaves; P5 = leaf-hub-leaf-hub-leaf
        let mut edges = vec![];
        for leaf in 2..40 {
            edges.push((0, leaf));
            edges.push((1, leaf));
        }
        let g = Graph::from_edges(40, &edges).unwrap();
        assert!(contains_disjoint_paths(&g, 5, 1));
        assert!(!contains_disjoint_paths(&g, 5, 2));
        assert!(contains_disjoint_paths(&g, 3, 2));
        assert!(!contains_disjoint_paths(&g, 3, 3));
    }
}
