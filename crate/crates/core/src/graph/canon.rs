use super::Graph;

/// Canonical encoding of a small vertex-coloured graph. Two coloured graphs
/// get equal forms iff some isomorphism between them preserves colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    colors: Vec<u64>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.colors.len()
    }

    /// The coloured graph in canonical labelling.
    pub fn to_graph(&self) -> (Graph, Vec<u64>) {
        let n = self.colors.len();
        let edges = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| self.rows[i] >> j & 1 == 1).map(move |j| (i, j)));
        (Graph::from_edges_dedup(n, edges), self.colors.clone())
    }
}

/// Computes the canonical form of `g` with per-vertex `colors`, together with
/// the canonical labelling (`labelling[i]` is the vertex placed at position
/// `i`).
///
/// Vertices are split into cells by colour refinement; the orders inside
/// each cell are then tried exhaustively, except that twins in the same cell
/// are never permuted among themselves (swapping them is an automorphism).
/// Meant for graphs with a handful of vertices.
pub fn canonical_form(g: &Graph, colors: &[u64]) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    assert!(n <= 64, "canonical_form is for small graphs");
    assert_eq!(colors.len(), n);
    let rank = refine(g, colors);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (rank[v], v));
    let mut cells: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && rank[order[j]] == rank[order[i]] {
            j += 1;
        }
        cells.push(twin_groups(g, &order[i..j]));
        i = j;
    }
    let color_seq: Vec<u64> = order.iter().map(|&v| colors[v]).collect();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let mut current = Vec::with_capacity(n);
    permute_cells(g, &cells, 0, &mut current, &mut best);
    let (rows, labelling) = best.unwrap_or_default();
    (CanonicalForm { colors: color_seq, rows }, labelling)
}

/// Colour refinement; returns a stable rank per vertex that depends only on
/// the isomorphism class of the coloured graph.
fn refine(g: &Graph, colors: &[u64]) -> Vec<usize> {
    let n = g.n();
    let mut rank = rerank(&(0..n).map(|v| (colors[v], g.degree(v), Vec::<usize>::new())).collect::<Vec<_>>());
    let mut classes = count_distinct(&rank);
    loop {
        let sig: Vec<(u64, usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| rank[w]).collect();
                nb.sort_unstable();
                (rank[v] as u64, 0, nb)
            })
            .collect();
        let next = rerank(&sig);
        let next_classes = count_distinct(&next);
        rank = next;
        if next_classes == classes {
            return rank;
        }
        classes = next_classes;
    }
}

fn rerank<T: Ord>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<&T> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(&k).unwrap()).collect()
}

fn count_distinct(rank: &[usize]) -> usize {
    let mut r = rank.to_vec();
    r.sort_unstable();
    r.dedup();
    r.len()
}

/// Splits a cell into groups of mutual twins.
fn twin_groups(g: &Graph, cell: &[usize]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in cell {
        let twin_of = groups.iter_mut().find(|grp| {
            let u = grp[0];
            let strip = |x: usize, y: usize| -> Vec<usize> { g.neighbors(x).iter().copied().filter(|&w| w != y).collect() };
            strip(u, v) == strip(v, u)
        });
        match twin_of {
            Some(grp) => grp.push(v),
            None => groups.push(vec![v]),
        }
    }
    groups
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1u64 << pos[w])))
        .collect()
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<Vec<usize>>],
    idx: usize,
    current: &mut Vec<usize>,
    best: &mut Option<(Vec<u64>, Vec<usize>)>,
) {
    if idx == cells.len() {
        let rows = encode(g, current);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, current.clone()));
        }
        return;
    }
    let groups = &cells[idx];
    let mut taken = vec![0usize; groups.len()];
    let size: usize = groups.iter().map(Vec::len).sum();
    arrange(g, cells, idx, groups, &mut taken, size, current, best);
}

/// Distinct arrangements of the twin groups of one cell.
#[allow(clippy::too_many_arguments)]
fn arrange(
    g: &Graph,
    cells: &[Vec<Vec<usize>>],
    idx: usize,
    groups: &[Vec<usize>],
    taken: &mut [usize],
    left: usize,
    current: &mut Vec<usize>,
    best: &mut Option<(Vec<u64>, Vec<usize>)>,
) {
    if left == 0 {
        permute_cells(g, cells, idx + 1, current, best);
        return;
    }
    for gi in 0..groups.len() {
        if taken[gi] == groups[gi].len() {
            continue;
        }
        current.push(groups[gi][taken[gi]]);
        taken[gi] += 1;
        arrange(g, cells, idx, groups, taken, left - 1, current, best);
        taken[gi] -= 1;
        current.pop();
    }
}
