//! Recognisers for the parameterised classes and the structural
//! certificates the solvers consume: vertex-integrity deletion sets,
//! `P4`-hitting sets and twin partitions.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::graph::{bfs_order, components_masked, find_path, Graph};

/// A set `S` with `|S| <= k` such that every component of `G - S` has order
/// at most `k - |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViCertificate {
    pub k: usize,
    pub deletion_set: Vec<usize>,
}

impl ViCertificate {
    pub fn is_valid(&self, g: &Graph) -> bool {
        is_vi_set(g, self.k, &self.deletion_set)
    }
}

/// Checks the vi(k) condition for `s` directly.
pub fn is_vi_set(g: &Graph, k: usize, s: &[usize]) -> bool {
    if s.len() > k || s.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut removed = vec![false; g.n()];
    for &v in s {
        if removed[v] {
            return false;
        }
        removed[v] = true;
    }
    components_masked(g, Some(&removed))
        .iter()
        .all(|c| c.len() + s.len() <= k)
}

/// Branches on connected `(l+1)`-vertex prefixes of an oversized component,
/// where `l = k - |S|`. Calls `leaf` on every valid set reached; stops early
/// once `leaf` returns true.
fn vi_branch(
    g: &Graph,
    k: usize,
    removed: &mut Vec<bool>,
    s: &mut Vec<usize>,
    leaf: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let allowed = k - s.len();
    let oversized = components_masked(g, Some(&removed[..]))
        .into_iter()
        .find(|c| c.len() > allowed);
    let Some(comp) = oversized else {
        return leaf(s);
    };
    if s.len() == k {
        return false;
    }
    for x in bfs_order(g, comp[0], removed, allowed + 1) {
        removed[x] = true;
        s.push(x);
        let stop = vi_branch(g, k, removed, s, leaf);
        s.pop();
        removed[x] = false;
        if stop {
            return true;
        }
    }
    false
}

pub fn find_vi_set(g: &Graph, k: usize) -> Option<ViCertificate> {
    let mut found = None;
    let mut removed = vec![false; g.n()];
    vi_branch(g, k, &mut removed, &mut Vec::new(), &mut |s| {
        let mut set = s.to_vec();
        set.sort_unstable();
        found = Some(set);
        true
    });
    found.map(|deletion_set| ViCertificate { k, deletion_set })
}

/// Smallest `k <= max_k` for which a vi(k) set exists.
pub fn vertex_integrity(g: &Graph, max_k: usize) -> Option<usize> {
    (0..=max_k).find(|&k| find_vi_set(g, k).is_some())
}

/// All inclusion-minimal vi(k) sets, sorted.
///
/// Every minimal set is a leaf of the branching tree; the leaves are then
/// filtered by testing all proper subsets, since vi(k) validity is not
/// monotone under removing a single vertex.
pub fn enumerate_minimal_vi_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut leaves: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut removed = vec![false; g.n()];
    vi_branch(g, k, &mut removed, &mut Vec::new(), &mut |s| {
        let mut set = s.to_vec();
        set.sort_unstable();
        leaves.insert(set);
        false
    });
    leaves
        .into_iter()
        .filter(|s| is_minimal_vi_set(g, k, s))
        .collect()
}

fn is_minimal_vi_set(g: &Graph, k: usize, s: &[usize]) -> bool {
    let full = (1usize << s.len()) - 1;
    (0..full).all(|mask| {
        let sub: Vec<usize> = (0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
        !is_vi_set(g, k, &sub)
    })
}

/// A minimum-size set `T` with `|T| <= k` whose removal leaves no `P4`
/// subgraph, found by iterative deepening over four-way branching on `P4`s.
pub fn find_p4_hitting_set(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut removed = vec![false; g.n()];
    for depth in 0..=k {
        let mut set = Vec::new();
        if hit_branch(g, depth, &mut removed, &mut set) {
            set.sort_unstable();
            return Some(set);
        }
    }
    None
}

fn hit_branch(g: &Graph, depth: usize, removed: &mut Vec<bool>, set: &mut Vec<usize>) -> bool {
    let Some(p4) = find_path(g, 4, Some(&removed[..])) else {
        return true;
    };
    if depth == 0 {
        return false;
    }
    for v in p4 {
        removed[v] = true;
        set.push(v);
        if hit_branch(g, depth - 1, removed, set) {
            return true;
        }
        set.pop();
        removed[v] = false;
    }
    false
}

pub fn p4_hitting_number(g: &Graph, max_k: usize) -> Option<usize> {
    find_p4_hitting_set(g, max_k).map(|t| t.len())
}

/// Greedily deletes up to `k - 1` vertex-disjoint `P3`s. If what remains has
/// components of order at most 2 the deleted vertices form a vi(3k-1) set;
/// otherwise the graph contains `k P3` and `None` is returned.
pub fn kp3_free_vi_bound(g: &Graph, k: usize) -> Option<ViCertificate> {
    assert!(k >= 1);
    let mut removed = vec![false; g.n()];
    let mut set = Vec::new();
    for _ in 0..k - 1 {
        match find_path(g, 3, Some(&removed)) {
            Some(p3) => {
                for v in p3 {
                    removed[v] = true;
                    set.push(v);
                }
            }
            None => break,
        }
    }
    let largest = components_masked(g, Some(&removed)).iter().map(Vec::len).max().unwrap_or(0);
    if largest > 2 {
        return None;
    }
    set.sort_unstable();
    Some(ViCertificate {
        k: 3 * k - 1,
        deletion_set: set,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    Complete,
    Independent,
}

/// Partition of the vertex set into classes of pairwise twins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<Vec<usize>>,
    /// Singleton classes are tagged `Independent`.
    pub kinds: Vec<ClassKind>,
    /// `adjacency[i][j]` for `i != j`: all cross pairs are edges. The
    /// diagonal is false; internal edges are described by `kinds`.
    pub adjacency: Vec<Vec<bool>>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut of = vec![0; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                of[v] = i;
            }
        }
        of
    }
}

/// The coarsest twin partition.
///
/// Twins are vertices with equal open neighbourhoods (false twins) or equal
/// closed neighbourhoods (true twins). A vertex cannot have both a false
/// twin and a true twin, so grouping by the two keys yields the classes
/// directly.
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        open.entry(g.neighbors(v)).or_default().push(v);
        let mut nb = g.neighbors(v).to_vec();
        let pos = nb.binary_search(&v).unwrap_err();
        nb.insert(pos, v);
        closed.entry(nb).or_default().push(v);
    }
    let mut assigned = vec![false; n];
    let mut found: Vec<(Vec<usize>, ClassKind)> = Vec::new();
    for class in open.into_values().filter(|c| c.len() >= 2) {
        for &v in &class {
            assigned[v] = true;
        }
        found.push((class, ClassKind::Independent));
    }
    for class in closed.into_values().filter(|c| c.len() >= 2) {
        debug_assert!(class.iter().all(|&v| !assigned[v]));
        for &v in &class {
            assigned[v] = true;
        }
        found.push((class, ClassKind::Complete));
    }
    for v in 0..n {
        if !assigned[v] {
            found.push((vec![v], ClassKind::Independent));
        }
    }
    for (c, _) in found.iter_mut() {
        c.sort_unstable();
    }
    found.sort_by_key(|(c, _)| c[0]);
    let reps: Vec<usize> = found.iter().map(|(c, _)| c[0]).collect();
    let adjacency = (0..reps.len())
        .map(|i| {
            (0..reps.len())
                .map(|j| i != j && g.has_edge(reps[i], reps[j]))
                .collect()
        })
        .collect();
    let (classes, kinds) = found.into_iter().unzip();
    TwinPartition { classes, kinds, adjacency }
}
