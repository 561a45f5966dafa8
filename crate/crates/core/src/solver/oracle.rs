//! Backtracking subgraph isomorphism for arbitrary graphs.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{components, Embedding, Graph};
use crate::recognize::twin_partition;

/// Pattern vertex order: components largest first; inside a component start
/// at a vertex of maximum degree and continue breadth-first, visiting
/// neighbours by decreasing degree.
fn pattern_order(q: &Graph) -> Vec<usize> {
    let mut comps = components(q);
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(q.n());
    let mut seen = vec![false; q.n()];
    for comp in comps {
        let start = *comp.iter().max_by_key(|&&v| (q.degree(v), std::cmp::Reverse(v))).unwrap();
        seen[start] = true;
        let head = order.len();
        order.push(start);
        let mut i = head;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let mut nb: Vec<usize> = q.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
            nb.sort_by_key(|&w| (std::cmp::Reverse(q.degree(w)), w));
            for w in nb {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    q: &'a Graph,
    order: Vec<usize>,
    /// For each position, an already-placed neighbour to draw candidates from.
    anchor: Vec<Option<usize>>,
    host_class: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    budget: &'a Budget,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> Result<bool> {
        self.budget.tick()?;
        if pos == self.order.len() {
            return Ok(true);
        }
        let u = self.order[pos];
        let candidates: Vec<usize> = match self.anchor[pos] {
            Some(a) => self.g.neighbors(self.map[a]).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        // host twins are interchangeable while both are unused
        let mut tried_classes: Vec<usize> = Vec::new();
        for h in candidates {
            if self.used[h] || self.g.degree(h) < self.q.degree(u) {
                continue;
            }
            if tried_classes.contains(&self.host_class[h]) {
                continue;
            }
            let consistent = self
                .q
                .neighbors(u)
                .iter()
                .all(|&w| self.map[w] == usize::MAX || self.g.has_edge(h, self.map[w]));
            if !consistent {
                continue;
            }
            tried_classes.push(self.host_class[h]);
            self.map[u] = h;
            self.used[h] = true;
            if self.run(pos + 1)? {
                return Ok(true);
            }
            self.used[h] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}

/// Finds an embedding of `q` into `g` by depth-first search with degree and
/// adjacency pruning. Every search node costs one budget tick.
pub fn solve_backtracking(g: &Graph, q: &Graph, budget: &Budget) -> Result<Option<Embedding>> {
    if q.n() > g.n() || q.m() > g.m() {
        return Ok(None);
    }
    let order = pattern_order(q);
    let mut pos_of = vec![0; q.n()];
    for (i, &u) in order.iter().enumerate() {
        pos_of[u] = i;
    }
    let anchor = order
        .iter()
        .enumerate()
        .map(|(i, &u)| q.neighbors(u).iter().copied().find(|&w| pos_of[w] < i))
        .collect();
    let host_class = twin_partition(g).class_of(g.n());
    let mut s = Search {
        g,
        q,
        order,
        anchor,
        host_class,
        map: vec![usize::MAX; q.n()],
        used: vec![false; g.n()],
        budget,
    };
    if s.run(0)? {
        Ok(Some(Embedding(s.map)))
    } else {
        Ok(None)
    }
}
