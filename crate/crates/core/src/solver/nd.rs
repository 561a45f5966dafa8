//! Embedding parameterized by neighbourhood diversity.
//!
//! With twin classes `R_1..R_r` of the pattern and `T_1..T_t` of the host,
//! an embedding is described up to twin swaps by the numbers `x[i][j]` of
//! vertices of `R_i` sent into `T_j`. Which cells may be nonzero together is
//! governed by three pairwise rules:
//!
//! * nonzero `x[i][j]`, `x[i'][j']` with `R_i`, `R_i'` adjacent need `T_j`,
//!   `T_j'` adjacent (or `T_j` complete when `j = j'`);
//! * the same inside a complete class `R_i` spread over two host classes;
//! * `x[i][j] >= 2` for complete `R_i` needs `T_j` complete.
//!
//! Since the rules only forbid pairs of nonzero cells, it suffices to try the
//! maximal compatible supports and let the integer program choose which of
//! their cells stay zero.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{verify_embedding, Embedding, Graph};
use crate::ilp::{self, IlpInstance, Relation};
use crate::recognize::{twin_partition, ClassKind, TwinPartition};

fn complete(tp: &TwinPartition, i: usize) -> bool {
    tp.kinds[i] == ClassKind::Complete && tp.classes[i].len() >= 2
}

/// Whether pattern class pair `(a, b)` needs edges between its images.
fn pattern_needs_edges(rq: &TwinPartition, a: usize, b: usize) -> bool {
    if a == b {
        complete(rq, a)
    } else {
        rq.adjacency[a][b]
    }
}

fn host_has_edges(tg: &TwinPartition, a: usize, b: usize) -> bool {
    if a == b {
        tg.kinds[a] == ClassKind::Complete
    } else {
        tg.adjacency[a][b]
    }
}

/// Cells `(i, j)` and `(i2, j2)` can both be nonzero.
fn compatible(rq: &TwinPartition, tg: &TwinPartition, (i, j): (usize, usize), (i2, j2): (usize, usize)) -> bool {
    !pattern_needs_edges(rq, i, i2) || host_has_edges(tg, j, j2)
}

/// Maximal cliques of the compatibility graph (Bron-Kerbosch with pivot).
fn maximal_supports(adj: &[Vec<bool>], budget: &Budget, out: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    fn bk(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        budget: &Budget,
        out: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        budget.tick()?;
        if p.is_empty() && x.is_empty() {
            return out(r);
        }
        let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
        let mut p = p;
        let mut x = x;
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            if bk(adj, r, np, nx, budget, out)? {
                return Ok(true);
            }
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
        Ok(false)
    }
    bk(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), budget, out)
}

/// Decides `q ⪯ g` by guessing over twin-class supports.
pub fn solve_nd(g: &Graph, q: &Graph, budget: &Budget) -> Result<Option<Embedding>> {
    if q.n() > g.n() || q.m() > g.m() {
        return Ok(None);
    }
    let tg = twin_partition(g);
    let rq = twin_partition(q);
    let (r, t) = (rq.len(), tg.len());
    let cells: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..t).map(move |j| (i, j))).collect();
    let adj: Vec<Vec<bool>> = cells
        .iter()
        .map(|&a| cells.iter().map(|&b| a != b && compatible(&rq, &tg, a, b)).collect())
        .collect();
    let mut found = None;
    maximal_supports(&adj, budget, &mut |support| {
        let mut p = IlpInstance::new();
        let vars: Vec<(usize, usize)> = support.iter().map(|&c| cells[c]).collect();
        for &(i, j) in &vars {
            let cap = tg.classes[j].len().min(rq.classes[i].len());
            // two vertices of a complete class cannot share an independent class
            let cap = if complete(&rq, i) && tg.kinds[j] == ClassKind::Independent { cap.min(1) } else { cap };
            p.add_var(0, Some(cap as i64));
        }
        for i in 0..r {
            let terms: Vec<(usize, i64)> = vars.iter().enumerate().filter(|(_, c)| c.0 == i).map(|(v, _)| (v, 1)).collect();
            p.add_constraint(&terms, Relation::Eq, rq.classes[i].len() as i64);
        }
        for j in 0..t {
            let terms: Vec<(usize, i64)> = vars.iter().enumerate().filter(|(_, c)| c.1 == j).map(|(v, _)| (v, 1)).collect();
            if !terms.is_empty() {
                p.add_constraint(&terms, Relation::Le, tg.classes[j].len() as i64);
            }
        }
        let Some(x) = ilp::feasible(&p)? else {
            return Ok(false);
        };
        let mut map = vec![usize::MAX; q.n()];
        let mut next_in_row = vec![0usize; r];
        let mut next_in_col = vec![0usize; t];
        for (v, &(i, j)) in vars.iter().enumerate() {
            for _ in 0..x[v] {
                map[rq.classes[i][next_in_row[i]]] = tg.classes[j][next_in_col[j]];
                next_in_row[i] += 1;
                next_in_col[j] += 1;
            }
        }
        let e = Embedding(map);
        assert!(verify_embedding(q, g, &e), "neighbourhood-diversity witness does not verify");
        found = Some(e);
        Ok(true)
    })?;
    Ok(found)
}

/// Recounts `x[i][j] = |eta(R_i) ∩ T_j|` for an embedding.
pub fn class_counts(g: &Graph, q: &Graph, e: &Embedding) -> Vec<Vec<usize>> {
    let tg = twin_partition(g);
    let rq = twin_partition(q);
    let host_class = tg.class_of(g.n());
    let mut x = vec![vec![0; tg.len()]; rq.len()];
    for (i, class) in rq.classes.iter().enumerate() {
        for &u in class {
            x[i][host_class[e.0[u]]] += 1;
        }
    }
    x
}

/// Checks the three pairwise rules and both constraint families on `x`.
pub fn counts_respect_rules(g: &Graph, q: &Graph, x: &[Vec<usize>]) -> bool {
    let tg = twin_partition(g);
    let rq = twin_partition(q);
    let nonzero: Vec<(usize, usize)> = (0..rq.len())
        .flat_map(|i| (0..tg.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| x[i][j] > 0)
        .collect();
    let pairs_ok = nonzero
        .iter()
        .all(|&a| nonzero.iter().all(|&b| a == b || compatible(&rq, &tg, a, b)));
    let doubles_ok = nonzero
        .iter()
        .all(|&(i, j)| x[i][j] < 2 || !complete(&rq, i) || tg.kinds[j] == ClassKind::Complete);
    let rows_ok = (0..rq.len()).all(|i| x[i].iter().sum::<usize>() == rq.classes[i].len());
    let cols_ok = (0..tg.len()).all(|j| x.iter().map(|row| row[j]).sum::<usize>() <= tg.classes[j].len());
    pairs_ok && doubles_ok && rows_ok && cols_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::solver::oracle::solve_backtracking;

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn agree(g: &Graph, q: &Graph) -> bool {
        let got = solve_nd(g, q, &Budget::unlimited()).unwrap();
        if let Some(e) = &got {
            assert!(counts_respect_rules(g, q, &class_counts(g, q, e)));
        }
        let want = solve_backtracking(g, q, &Budget::unlimited()).unwrap().is_some();
        assert_eq!(got.is_some(), want, "g={g:?} q={q:?}");
        want
    }

    #[test]
    fn examples() {
        assert!(agree(&Graph::empty(1), &Graph::empty(1)));
        assert!(agree(&fam(Family::Cycle(4)), &fam(Family::Path(4))));
        let two_k3 = fam(Family::DisjointUnion(vec![Family::Clique(3), Family::Clique(3)]));
        assert!(!agree(&two_k3, &fam(Family::Clique(4))));
    }

    #[test]
    fn complete_multipartite_hosts() {
        let g = fam(Family::Complement(Box::new(Family::DisjointUnion(vec![
            Family::Clique(3),
            Family::Clique(2),
            Family::Clique(4),
        ]))));
        assert!(agree(&g, &fam(Family::Clique(3))));
        assert!(!agree(&g, &fam(Family::Clique(4))));
        assert!(agree(&g, &fam(Family::Cycle(8))));
    }
}
