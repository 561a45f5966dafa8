//! Independent brute-force references shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use subiso::graph::verify_embedding;
use subiso::ilp::{IlpInstance, Relation};
use subiso::matching::{ColorHistogram, WeightedBipartiteMultigraph};
use subiso::reduce::{Literal, Sat21Formula, ThreePartitionInstance, X3cInstance};
use subiso::{Embedding, Graph};

/// Tries every injection of pattern vertices into host vertices.
pub fn naive_si(g: &Graph, q: &Graph) -> bool {
    fn go(g: &Graph, q: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let u = map.len();
        if u == q.n() {
            return verify_embedding(q, g, &Embedding(map.clone()));
        }
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            used[v] = true;
            map.push(v);
            if go(g, q, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    q.n() <= g.n() && go(g, q, &mut Vec::new(), &mut vec![false; g.n()])
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && naive_si(a, b)
}

pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Exhaustive feasibility over the box given by the variable bounds.
pub fn ilp_brute_force(p: &IlpInstance) -> bool {
    let n = p.var_count();
    let mut x: Vec<i64> = p.lower.clone();
    loop {
        if p.is_satisfied_by(&x) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if x[i] < p.upper[i].unwrap() {
                x[i] += 1;
                break;
            }
            x[i] = p.lower[i];
            i += 1;
        }
    }
}

pub fn random_ilp<R: Rng + ?Sized>(rng: &mut R, max_points: u64) -> IlpInstance {
    let mut p = IlpInstance::new();
    let vars = rng.gen_range(1..=5);
    let mut points = 1u64;
    for _ in 0..vars {
        let lo = rng.gen_range(-3..=3);
        let width = loop {
            let w = rng.gen_range(0..=12u64);
            if points * (w + 1) <= max_points {
                break w;
            }
        };
        points *= width + 1;
        p.add_var(lo, Some(lo + width as i64));
    }
    for _ in 0..rng.gen_range(1..=4) {
        let terms: Vec<(usize, i64)> = (0..vars).map(|v| (v, rng.gen_range(-4..=4))).collect();
        let rel = [Relation::Eq, Relation::Le, Relation::Ge][rng.gen_range(0..3)];
        p.add_constraint(&terms, rel, rng.gen_range(-15..=15));
    }
    p
}

/// Achievable perfect-matching weights by DP over subsets of right
/// vertices.
pub fn matching_weights_dp(b: &WeightedBipartiteMultigraph) -> Vec<ColorHistogram> {
    use std::collections::BTreeSet;
    let n = b.left_count;
    let mut layer: Vec<BTreeSet<ColorHistogram>> = vec![BTreeSet::new(); 1 << n];
    layer[0].insert(ColorHistogram::zero(b.q));
    for row in 0..n {
        let mut next: Vec<BTreeSet<ColorHistogram>> = vec![BTreeSet::new(); 1 << n];
        for mask in 0..1usize << n {
            if mask.count_ones() as usize != row || layer[mask].is_empty() {
                continue;
            }
            for e in b.edges.iter().filter(|e| e.left == row && mask >> e.right & 1 == 0) {
                for w in &layer[mask] {
                    let mut s = w.clone();
                    s.add_assign(&e.weight);
                    next[mask | 1 << e.right].insert(s);
                }
            }
        }
        layer = next;
    }
    layer[(1 << n) - 1].iter().cloned().collect()
}

pub fn random_multigraph<R: Rng + ?Sized>(rng: &mut R, n: usize, q: usize) -> WeightedBipartiteMultigraph {
    let mut b = WeightedBipartiteMultigraph::new(n, n, 0, q, 2 * n as u64 + 2);
    let mut payload = 0;
    for l in 0..n {
        for r in 0..n {
            let mut seen: Vec<Vec<u64>> = Vec::new();
            for _ in 0..rng.gen_range(0..=2) {
                let counts: Vec<u64> = (0..1usize << q).map(|_| rng.gen_range(0..=1)).collect();
                if seen.contains(&counts) {
                    continue;
                }
                seen.push(counts.clone());
                b.add_edge(l, r, ColorHistogram::from_counts(q, counts).unwrap(), payload);
                payload += 1;
            }
        }
    }
    b
}

/// Random valid 3-SAT(2,1) formula on `n` variables.
pub fn random_sat21<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Sat21Formula {
    let lits: Vec<Literal> = (0..n)
        .flat_map(|v| {
            [
                Literal { var: v, positive: true },
                Literal { var: v, positive: true },
                Literal { var: v, positive: false },
            ]
        })
        .collect();
    loop {
        let mut l = lits.clone();
        l.shuffle(rng);
        let mut clauses = Vec::new();
        let mut i = 0;
        while i < l.len() {
            let left = l.len() - i;
            let size = match left {
                2 | 3 => left,
                4 => 2,
                _ => rng.gen_range(2..=3),
            };
            clauses.push(l[i..i + size].to_vec());
            i += size;
        }
        if let Ok(f) = Sat21Formula::new(n, clauses) {
            return f;
        }
    }
}

pub fn random_x3c<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> X3cInstance {
    let mut sets = Vec::new();
    // half of the instances get a planted cover
    if rng.gen_bool(0.5) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        sets.extend(perm.chunks(3).map(|c| [c[0], c[1], c[2]]));
    } else {
        for _ in 0..n / 3 {
            sets.push(random_triple(n, rng));
        }
    }
    for _ in 0..extra {
        sets.push(random_triple(n, rng));
    }
    sets.shuffle(rng);
    X3cInstance::new(n, sets).unwrap()
}

fn random_triple<R: Rng + ?Sized>(n: usize, rng: &mut R) -> [usize; 3] {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    [v[0], v[1], v[2]]
}

/// Every 3-Partition instance (values sorted) with the given `m` and `b`.
pub fn all_3partition(m: usize, b: u64) -> Vec<ThreePartitionInstance> {
    let allowed: Vec<u64> = (1..b).filter(|&a| 4 * a > b && 2 * a < b).collect();
    let mut out = Vec::new();
    fn go(allowed: &[u64], start: usize, left: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..allowed.len() {
            cur.push(allowed[i]);
            go(allowed, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    go(&allowed, 0, 3 * m, &mut Vec::new(), &mut all);
    for values in all {
        if let Ok(inst) = ThreePartitionInstance::new(values, b) {
            out.push(inst);
        }
    }
    out
}
