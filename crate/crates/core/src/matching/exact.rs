//! Perfect matchings of prescribed histogram weight.
//!
//! The Edmonds matrix entry for `(x, r)` is `sum_e rho_e * prod_C y_C^{w_e(C)}`
//! over the parallel edges `e` between `x` and `r`, with random `rho_e`. Its
//! determinant is a polynomial in the `y_C` whose monomial with exponent
//! vector `t` has a nonzero coefficient (with high probability) iff some
//! perfect matching has weight exactly `t`. The polynomial is recovered by
//! evaluating the determinant on a grid `prod_C {0..=D_C}`, where `D_C`
//! bounds the degree in `y_C`, followed by tensor-product interpolation.
//!
//! When every edge total splits as a row potential plus a column potential,
//! all perfect matchings have the same total weight and one variable is
//! dropped (set to 1) and its exponent recovered from the others.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;

use super::bipartite::max_bipartite_matching;
use super::field;
use super::histogram::ColorHistogram;
use crate::error::{Error, Result};

/// Largest interpolation grid evaluated before giving up with
/// [`Error::BudgetExceeded`].
pub const MAX_GRID_POINTS: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedEdge {
    pub left: usize,
    pub right: usize,
    pub weight: ColorHistogram,
    /// Caller data, e.g. an index into a table of embedding recipes.
    pub payload: usize,
}

/// Bipartite multigraph `(X, Y + Z)`; the last `dummy_count` right vertices
/// form `Z`.
#[derive(Clone, Debug)]
pub struct WeightedBipartiteMultigraph {
    pub left_count: usize,
    pub right_count: usize,
    pub dummy_count: usize,
    pub q: usize,
    /// Componentwise bound on every weight and on the target.
    pub weight_cap: u64,
    pub edges: Vec<WeightedEdge>,
}

impl WeightedBipartiteMultigraph {
    pub fn new(left_count: usize, right_count: usize, dummy_count: usize, q: usize, weight_cap: u64) -> Self {
        WeightedBipartiteMultigraph { left_count, right_count, dummy_count, q, weight_cap, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, left: usize, right: usize, weight: ColorHistogram, payload: usize) {
        self.edges.push(WeightedEdge { left, right, weight, payload });
    }

    fn validate(&self) -> Result<()> {
        if self.left_count != self.right_count {
            return Err(Error::invalid(format!(
                "{} left vertices but {} right vertices",
                self.left_count, self.right_count
            )));
        }
        if self.dummy_count > self.right_count {
            return Err(Error::invalid("more dummy vertices than right vertices"));
        }
        let mut seen = HashSet::new();
        for e in &self.edges {
            if e.left >= self.left_count || e.right >= self.right_count {
                return Err(Error::invalid("edge endpoint out of range"));
            }
            if e.weight.q() != self.q {
                return Err(Error::invalid("edge weight over the wrong number of roots"));
            }
            if e.weight.counts().iter().any(|&c| c > self.weight_cap) {
                return Err(Error::invalid("edge weight exceeds the cap"));
            }
            if !seen.insert((e.left, e.right, &e.weight)) {
                return Err(Error::invalid("parallel edges must carry distinct weights"));
            }
        }
        Ok(())
    }
}

/// True iff some perfect matching exists, ignoring weights.
pub fn has_perfect_matching(b: &WeightedBipartiteMultigraph) -> bool {
    if b.left_count != b.right_count {
        return false;
    }
    let mut adj = vec![Vec::new(); b.left_count];
    for e in &b.edges {
        adj[e.left].push(e.right);
    }
    max_bipartite_matching(&adj, b.right_count).saturates_left()
}

/// A sub-instance: the listed edges restricted to `rows x cols`.
struct Sub<'a> {
    b: &'a WeightedBipartiteMultigraph,
    rows: Vec<usize>,
    cols: Vec<usize>,
    edges: Vec<usize>,
}

impl<'a> Sub<'a> {
    fn full(b: &'a WeightedBipartiteMultigraph) -> Self {
        Sub {
            b,
            rows: (0..b.left_count).collect(),
            cols: (0..b.right_count).collect(),
            edges: (0..b.edges.len()).collect(),
        }
    }

    fn without(&self, edge: usize) -> Sub<'a> {
        let e = &self.b.edges[edge];
        Sub {
            b: self.b,
            rows: self.rows.iter().copied().filter(|&x| x != e.left).collect(),
            cols: self.cols.iter().copied().filter(|&r| r != e.right).collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&i| self.b.edges[i].left != e.left && self.b.edges[i].right != e.right)
                .collect(),
        }
    }

    fn has_perfect_matching(&self) -> bool {
        let row_ix: HashMap<usize, usize> = self.rows.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let col_ix: HashMap<usize, usize> = self.cols.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut adj = vec![Vec::new(); self.rows.len()];
        for &i in &self.edges {
            let e = &self.b.edges[i];
            adj[row_ix[&e.left]].push(col_ix[&e.right]);
        }
        max_bipartite_matching(&adj, self.cols.len()).saturates_left()
    }

    /// Nonzero monomials of the determinant, for one random choice of
    /// `rho`, keyed by exponent vector (as a histogram).
    fn monomials(&self, rng: &mut impl Rng) -> Result<HashMap<ColorHistogram, u64>> {
        let q = self.b.q;
        let colors = 1usize << q;
        let n = self.rows.len();
        let mut out = HashMap::new();
        if n != self.cols.len() {
            return Ok(out);
        }
        if n == 0 {
            out.insert(ColorHistogram::zero(q), 1);
            return Ok(out);
        }
        let row_ix: HashMap<usize, usize> = self.rows.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let col_ix: HashMap<usize, usize> = self.cols.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let edges: Vec<(usize, usize, &ColorHistogram)> = self
            .edges
            .iter()
            .map(|&i| {
                let e = &self.b.edges[i];
                (row_ix[&e.left], col_ix[&e.right], &e.weight)
            })
            .collect();

        // degree bounds
        let mut row_max = vec![vec![0u64; colors]; n];
        let mut row_has = vec![false; n];
        for &(x, _, w) in &edges {
            row_has[x] = true;
            for c in 0..colors {
                row_max[x][c] = row_max[x][c].max(w.get(c));
            }
        }
        if row_has.iter().any(|h| !h) {
            return Ok(out);
        }
        let degree: Vec<u64> = (0..colors).map(|c| row_max.iter().map(|r| r[c]).sum()).collect();

        let dropped = (0..colors)
                .filter(|&c| degree[c] > 0)
                .max_by_key(|&c| (degree[c], std::cmp::Reverse(c))).zip(constant_total(n, &edges));
        let dims: Vec<usize> = (0..colors)
            .filter(|&c| degree[c] > 0 && dropped.is_none_or(|(d, _)| d != c))
            .collect();
        let sizes: Vec<usize> = dims.iter().map(|&c| degree[c] as usize + 1).collect();
        let points = sizes.iter().try_fold(1u64, |acc, &s| acc.checked_mul(s as u64));
        let points = match points {
            Some(p) if p <= MAX_GRID_POINTS => p as usize,
            _ => return Err(Error::BudgetExceeded(MAX_GRID_POINTS)),
        };

        let rho: Vec<u64> = edges.iter().map(|_| rng.gen_range(1..field::P)).collect();
        // pw[d][value][exp]
        let pw: Vec<Vec<Vec<u64>>> = sizes
            .iter()
            .map(|&s| {
                (0..s as u64)
                    .map(|v| {
                        let mut row = vec![1u64; s];
                        for e in 1..s {
                            row[e] = field::mul(row[e - 1], v);
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        let exps: Vec<Vec<usize>> = edges
            .iter()
            .map(|&(_, _, w)| dims.iter().map(|&c| w.get(c) as usize).collect())
            .collect();

        let mut values = vec![0u64; points];
        let mut digits = vec![0usize; dims.len()];
        let mut matrix = vec![0u64; n * n];
        for (idx, slot) in values.iter_mut().enumerate() {
            let mut rem = idx;
            for (d, &s) in sizes.iter().enumerate() {
                digits[d] = rem % s;
                rem /= s;
            }
            matrix.iter_mut().for_each(|m| *m = 0);
            for (ei, &(x, r, _)) in edges.iter().enumerate() {
                let mut term = rho[ei];
                for (d, &e) in exps[ei].iter().enumerate() {
                    if e > 0 {
                        term = field::mul(term, pw[d][digits[d]][e]);
                    }
                }
                matrix[x * n + r] = field::add(matrix[x * n + r], term);
            }
            *slot = field::det(&mut matrix, n);
        }

        // tensor-product interpolation, one dimension at a time
        let mut stride = 1;
        for &s in &sizes {
            let iv = field::inverse_vandermonde(s - 1);
            let block = stride * s;
            let mut fiber = vec![0u64; s];
            for base in (0..points).step_by(block) {
                for off in 0..stride {
                    for (j, f) in fiber.iter_mut().enumerate() {
                        *f = values[base + off + j * stride];
                    }
                    for i in 0..s {
                        let mut acc = 0u64;
                        for j in 0..s {
                            acc = field::add(acc, field::mul(iv[i * s + j], fiber[j]));
                        }
                        values[base + off + i * stride] = acc;
                    }
                }
            }
            stride = block;
        }

        for (idx, &coeff) in values.iter().enumerate() {
            if coeff == 0 {
                continue;
            }
            let mut counts = vec![0u64; colors];
            let mut rem = idx;
            for (d, &s) in sizes.iter().enumerate() {
                counts[dims[d]] = (rem % s) as u64;
                rem /= s;
            }
            if let Some((c, total)) = dropped {
                let rest: u64 = counts.iter().sum();
                match total.checked_sub(rest) {
                    Some(v) if v <= degree[c] => counts[c] = v,
                    _ => continue,
                }
            }
            out.insert(ColorHistogram::from_counts(q, counts)?, coeff);
        }
        Ok(out)
    }
}

/// If every edge total equals `a[row] + b[col]` for some potentials, the
/// common total weight of all perfect matchings.
fn constant_total(n: usize, edges: &[(usize, usize, &ColorHistogram)]) -> Option<u64> {
    // vertices 0..n rows, n..2n cols; potentials as i64
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); 2 * n];
    for &(x, r, w) in edges {
        let t = w.total() as i64;
        adj[x].push((n + r, t));
        adj[n + r].push((x, t));
    }
    let mut pot: Vec<Option<i64>> = vec![None; 2 * n];
    for s in 0..2 * n {
        if pot[s].is_some() {
            continue;
        }
        pot[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let pv = pot[v].unwrap();
            for &(w, t) in &adj[v] {
                let want = t - pv;
                match pot[w] {
                    None => {
                        pot[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(p) if p != want => return None,
                    _ => {}
                }
            }
        }
    }
    let total: i64 = pot.iter().map(|p| p.unwrap()).sum();
    u64::try_from(total).ok()
}

fn check_target(b: &WeightedBipartiteMultigraph, target: &ColorHistogram) -> Result<()> {
    if target.q() != b.q {
        return Err(Error::invalid("target over the wrong number of roots"));
    }
    if target.counts().iter().any(|&c| c > b.weight_cap) {
        return Err(Error::invalid("target exceeds the cap"));
    }
    Ok(())
}

fn detect(sub: &Sub, target: &ColorHistogram, rng: &mut impl Rng, repeats: usize) -> Result<bool> {
    if !sub.has_perfect_matching() {
        return Ok(false);
    }
    for _ in 0..repeats.max(1) {
        if sub.monomials(rng)?.contains_key(target) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Searches for a perfect matching whose weights sum to `target`.
///
/// Returns edge indices (one per left vertex, in left order). No false
/// positives: every returned matching is rechecked. A matching that exists
/// is missed only if all `repeats` random trials fail.
pub fn exact_weight_perfect_matching(
    b: &WeightedBipartiteMultigraph,
    target: &ColorHistogram,
    rng: &mut impl Rng,
    repeats: usize,
) -> Result<Option<Vec<usize>>> {
    b.validate()?;
    check_target(b, target)?;
    let mut sub = Sub::full(b);
    if !detect(&sub, target, rng, repeats)? {
        return Ok(None);
    }
    // self-reduction: fix one edge per row
    let mut chosen = vec![usize::MAX; b.left_count];
    let mut remaining = target.clone();
    while let Some(&x) = sub.rows.first() {
        let candidates: Vec<usize> = sub.edges.iter().copied().filter(|&i| b.edges[i].left == x).collect();
        let mut fixed = false;
        for i in candidates {
            let Some(rest) = remaining.checked_sub(&b.edges[i].weight) else {
                continue;
            };
            let next = sub.without(i);
            if detect(&next, &rest, rng, repeats)? {
                chosen[x] = i;
                remaining = rest;
                sub = next;
                fixed = true;
                break;
            }
        }
        if !fixed {
            return Ok(None);
        }
    }
    let mut sum = ColorHistogram::zero(b.q);
    let mut used = vec![false; b.right_count];
    for &i in &chosen {
        let e = &b.edges[i];
        assert!(!used[e.right], "matching reuses a right vertex");
        used[e.right] = true;
        sum.add_assign(&e.weight);
    }
    assert_eq!(&sum, target, "matching weight does not recheck");
    Ok(Some(chosen))
}

/// Weights of all perfect matchings detected over `repeats` random trials,
/// sorted.
pub fn achievable_weights(
    b: &WeightedBipartiteMultigraph,
    rng: &mut impl Rng,
    repeats: usize,
) -> Result<Vec<ColorHistogram>> {
    b.validate()?;
    let sub = Sub::full(b);
    let mut found = HashSet::new();
    if sub.has_perfect_matching() {
        for _ in 0..repeats.max(1) {
            found.extend(sub.monomials(rng)?.into_keys());
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort();
    Ok(out)
}
