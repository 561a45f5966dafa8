//! Randomized embedding between graphs with a small `P4`-hitting set.
//!
//! Let `T` be a `P4`-hitting set of the host. A guess fixes the used part
//! `R` of `T`, its preimage `S` and the bijection `S -> R`; the rest of the
//! pattern then has to go into `G - T`, whose components are single
//! vertices, triangles and stars. Vertices are coloured by their adjacency
//! to `R` (host) and `S` (pattern). Non-singleton pattern components are
//! assigned to host components through a perfect matching in a bipartite
//! multigraph whose edge weights are colour histograms of the vertices left
//! over; the histogram of all unused vertices must then admit the pattern
//! singletons.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{components_masked, is_p4_free, verify_embedding, Embedding, Graph};
use crate::matching::{
    achievable_weights, exact_weight_perfect_matching, has_perfect_matching, max_bipartite_matching, ColorHistogram,
    WeightedBipartiteMultigraph,
};
use crate::recognize::find_p4_hitting_set;

/// One way of embedding a pattern component into a host component: the
/// histogram of host vertices left over and a realizing map as
/// `(pattern vertex, host vertex)` pairs.
pub type Leftover = (ColorHistogram, Vec<(usize, usize)>);

fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// All distinct leftover histograms of colour-respecting embeddings of the
/// pattern component `pc` (of `q`) into the host component `hc` (of `g`),
/// each with one realizing map. Both components must be single vertices,
/// triangles or stars.
pub fn enumerate_leftover_histograms(
    g: &Graph,
    hc: &[usize],
    hcol: &[u64],
    q: &Graph,
    pc: &[usize],
    pcol: &[u64],
    colors: usize,
) -> Vec<Leftover> {
    let mut found: HashMap<ColorHistogram, Vec<(usize, usize)>> = HashMap::new();
    if pc.len() > hc.len() {
        return Vec::new();
    }
    if hc.len() <= 3 {
        exhaustive(g, hc, hcol, q, pc, pcol, colors, &mut found);
    } else {
        star_into_star(g, hc, hcol, q, pc, pcol, colors, &mut found);
    }
    let mut out: Vec<Leftover> = found.into_iter().collect();
    out.sort();
    out
}

fn leftover(hc: &[usize], hcol: &[u64], used: &[usize], colors: usize) -> ColorHistogram {
    ColorHistogram::from_colors(colors, hc.iter().filter(|v| !used.contains(v)).map(|&v| hcol[v] as usize))
}

#[allow(clippy::too_many_arguments)]
fn exhaustive(
    g: &Graph,
    hc: &[usize],
    hcol: &[u64],
    q: &Graph,
    pc: &[usize],
    pcol: &[u64],
    colors: usize,
    found: &mut HashMap<ColorHistogram, Vec<(usize, usize)>>,
) {
    fn rec(
        g: &Graph,
        hc: &[usize],
        hcol: &[u64],
        q: &Graph,
        pc: &[usize],
        pcol: &[u64],
        colors: usize,
        map: &mut Vec<usize>,
        found: &mut HashMap<ColorHistogram, Vec<(usize, usize)>>,
    ) {
        let i = map.len();
        if i == pc.len() {
            let h = leftover(hc, hcol, map, colors);
            found.entry(h).or_insert_with(|| pc.iter().copied().zip(map.iter().copied()).collect());
            return;
        }
        let u = pc[i];
        for &v in hc {
            if map.contains(&v) || !subset(pcol[u], hcol[v]) {
                continue;
            }
            if (0..i).any(|j| q.has_edge(pc[j], u) && !g.has_edge(map[j], v)) {
                continue;
            }
            map.push(v);
            rec(g, hc, hcol, q, pc, pcol, colors, map, found);
            map.pop();
        }
    }
    rec(g, hc, hcol, q, pc, pcol, colors, &mut Vec::new(), found);
}

/// Vertex of largest degree inside `comp`; edges leaving `comp` do not count.
fn center_of(graph: &Graph, comp: &[usize]) -> usize {
    let degree = |v: usize| graph.neighbors(v).iter().filter(|w| comp.contains(w)).count();
    *comp.iter().max_by_key(|&&v| degree(v)).unwrap()
}

/// Host component is a star with at least three leaves, so the pattern
/// component is a star (or `K2`) whose center goes to the host center, or a
/// `K2` with one end on the host center. Leaves are distributed by colour
/// counts.
#[allow(clippy::too_many_arguments)]
fn star_into_star(
    g: &Graph,
    hc: &[usize],
    hcol: &[u64],
    q: &Graph,
    pc: &[usize],
    pcol: &[u64],
    colors: usize,
    found: &mut HashMap<ColorHistogram, Vec<(usize, usize)>>,
) {
    let hcenter = center_of(g, hc);
    let hleaves: Vec<usize> = hc.iter().copied().filter(|&v| v != hcenter).collect();
    let orientations: Vec<usize> = match pc.len() {
        1 => return,
        2 => pc.to_vec(),
        _ => {
            if pc.len() == 3 && q.has_edge(pc[0], pc[1]) && q.has_edge(pc[1], pc[2]) && q.has_edge(pc[0], pc[2]) {
                return;
            }
            vec![center_of(q, pc)]
        }
    };
    // host leaves grouped by colour
    let mut by_color: HashMap<u64, Vec<usize>> = HashMap::new();
    for &v in &hleaves {
        by_color.entry(hcol[v]).or_default().push(v);
    }
    let mut host_colors: Vec<u64> = by_color.keys().copied().collect();
    host_colors.sort_unstable();
    for pcenter in orientations {
        if !subset(pcol[pcenter], hcol[hcenter]) {
            continue;
        }
        let pleaves: Vec<usize> = pc.iter().copied().filter(|&u| u != pcenter).collect();
        let mut groups: HashMap<u64, Vec<usize>> = HashMap::new();
        for &u in &pleaves {
            groups.entry(pcol[u]).or_default().push(u);
        }
        let mut pat_colors: Vec<u64> = groups.keys().copied().collect();
        pat_colors.sort_unstable();
        let mut remaining: Vec<usize> = host_colors.iter().map(|c| by_color[c].len()).collect();
        let mut plan: Vec<(u64, u64, usize)> = Vec::new();
        transport(&pat_colors, &groups, &host_colors, 0, 0, groups.get(&pat_colors[0]).map_or(0, Vec::len), &mut remaining, &mut plan, &mut |plan| {
            // realize the plan
            let mut map = vec![(pcenter, hcenter)];
            let mut next: HashMap<u64, usize> = HashMap::new();
            let mut taken: HashMap<u64, usize> = HashMap::new();
            for &(pcolor, hcolor, count) in plan.iter() {
                let from = next.entry(pcolor).or_insert(0);
                let to = taken.entry(hcolor).or_insert(0);
                for _ in 0..count {
                    map.push((groups[&pcolor][*from], by_color[&hcolor][*to]));
                    *from += 1;
                    *to += 1;
                }
            }
            let used: Vec<usize> = map.iter().map(|&(_, v)| v).collect();
            let h = leftover(hc, hcol, &used, colors);
            found.entry(h).or_insert(map);
        });
    }
}

/// Distributes pattern leaves of each colour over compatible host leaf
/// colours, calling `done` once per distinct distribution.
#[allow(clippy::too_many_arguments)]
fn transport(
    pat_colors: &[u64],
    groups: &HashMap<u64, Vec<usize>>,
    host_colors: &[u64],
    pi: usize,
    hi: usize,
    need: usize,
    remaining: &mut [usize],
    plan: &mut Vec<(u64, u64, usize)>,
    done: &mut dyn FnMut(&[(u64, u64, usize)]),
) {
    if need == 0 {
        if pi + 1 == pat_colors.len() {
            done(plan);
        } else {
            let next = groups[&pat_colors[pi + 1]].len();
            transport(pat_colors, groups, host_colors, pi + 1, 0, next, remaining, plan, done);
        }
        return;
    }
    if hi == host_colors.len() {
        return;
    }
    let pc = pat_colors[pi];
    let hcolor = host_colors[hi];
    let max = if subset(pc, hcolor) { need.min(remaining[hi]) } else { 0 };
    for take in (0..=max).rev() {
        remaining[hi] -= take;
        if take > 0 {
            plan.push((pc, hcolor, take));
        }
        transport(pat_colors, groups, host_colors, pi, hi + 1, need - take, remaining, plan, done);
        if take > 0 {
            plan.pop();
        }
        remaining[hi] += take;
    }
}

struct Prepared {
    t: Vec<usize>,
    host_comps: Vec<Vec<usize>>,
}

/// Decides `q ⪯ g` for hosts with a `P4`-hitting set of at most `k`
/// vertices. "No" answers may be false negatives with probability at most
/// `2^-repeats`; "yes" answers always carry a verified embedding.
///
/// All randomness derives from `seed`: guess `i` uses stream `i` of a
/// ChaCha generator seeded with `seed`.
pub fn solve_hitting(g: &Graph, q: &Graph, k: usize, seed: u64, repeats: usize, budget: &Budget) -> Result<Option<Embedding>> {
    let t = find_p4_hitting_set(g, k).ok_or_else(|| Error::class(format!("host has P4-hitting number above {k}")))?;
    if q.n() > g.n() || q.m() > g.m() {
        return Ok(None);
    }
    let mut in_t = vec![false; g.n()];
    for &v in &t {
        in_t[v] = true;
    }
    let host_comps = components_masked(g, Some(&in_t));
    let prep = Prepared { t, host_comps };
    let mut guess_id = 0u64;
    let tn = prep.t.len();
    // subsets R of T by increasing size
    let mut masks: Vec<u32> = (0..1u32 << tn).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let r: Vec<usize> = (0..tn).filter(|&i| mask >> i & 1 == 1).map(|i| prep.t[i]).collect();
        let mut s = Vec::with_capacity(r.len());
        let mut in_s = vec![false; q.n()];
        if let Some(e) = guess_s(g, q, &prep, &r, &mut s, &mut in_s, seed, repeats, budget, &mut guess_id)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn guess_s(
    g: &Graph,
    q: &Graph,
    prep: &Prepared,
    r: &[usize],
    s: &mut Vec<usize>,
    in_s: &mut Vec<bool>,
    seed: u64,
    repeats: usize,
    budget: &Budget,
    guess_id: &mut u64,
) -> Result<Option<Embedding>> {
    let i = s.len();
    if i == r.len() {
        budget.tick()?;
        let (rest, _) = q.remove_vertices(in_s);
        if !is_p4_free(&rest) {
            return Ok(None);
        }
        *guess_id += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(*guess_id);
        return evaluate(g, q, prep, r, s, in_s, &mut rng, repeats);
    }
    for u in 0..q.n() {
        if in_s[u] {
            continue;
        }
        if (0..i).any(|j| q.has_edge(s[j], u) && !g.has_edge(r[j], r[i])) {
            continue;
        }
        s.push(u);
        in_s[u] = true;
        let found = guess_s(g, q, prep, r, s, in_s, seed, repeats, budget, guess_id)?;
        in_s[u] = false;
        s.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn colors_of(graph: &Graph, roots: &[usize]) -> Vec<u64> {
    let mut col = vec![0u64; graph.n()];
    for (i, &r) in roots.iter().enumerate() {
        for &w in graph.neighbors(r) {
            col[w] |= 1 << i;
        }
    }
    col
}

/// Whether the pattern singletons (by colour) can be placed on a vertex
/// multiset with histogram `h`.
fn singletons_fit(singleton_colors: &[u64], h: &ColorHistogram) -> bool {
    let slots: Vec<u64> = (0..h.counts().len())
        .flat_map(|c| std::iter::repeat_n(c as u64, h.get(c) as usize))
        .collect();
    if singleton_colors.len() > slots.len() {
        return false;
    }
    let adj: Vec<Vec<usize>> = singleton_colors
        .iter()
        .map(|&cu| (0..slots.len()).filter(|&j| subset(cu, slots[j])).collect())
        .collect();
    max_bipartite_matching(&adj, slots.len()).saturates_left()
}

#[allow(clippy::too_many_arguments)]
fn evaluate(
    g: &Graph,
    q: &Graph,
    prep: &Prepared,
    r: &[usize],
    s: &[usize],
    in_s: &[bool],
    rng: &mut ChaCha8Rng,
    repeats: usize,
) -> Result<Option<Embedding>> {
    let qn = r.len();
    let hcol = colors_of(g, r);
    let pcol = colors_of(q, s);
    let pattern_comps = components_masked(q, Some(in_s));
    let (singletons, big): (Vec<Vec<usize>>, Vec<Vec<usize>>) = pattern_comps.into_iter().partition(|c| c.len() == 1);
    let singleton_colors: Vec<u64> = singletons.iter().map(|c| pcol[c[0]]).collect();
    let xs = &prep.host_comps;
    if big.len() > xs.len() {
        return Ok(None);
    }
    let dummies = xs.len() - big.len();
    let mut b = WeightedBipartiteMultigraph::new(xs.len(), xs.len(), dummies, qn, g.n() as u64);
    let mut recipes: Vec<Vec<(usize, usize)>> = Vec::new();
    for (x, hc) in xs.iter().enumerate() {
        debug_assert!(is_p4_free(&g.induced(hc)));
        for (y, pc) in big.iter().enumerate() {
            for (h, map) in enumerate_leftover_histograms(g, hc, &hcol, q, pc, &pcol, qn) {
                b.add_edge(x, y, h, recipes.len());
                recipes.push(map);
            }
        }
        let whole = ColorHistogram::from_colors(qn, hc.iter().map(|&v| hcol[v] as usize));
        for z in 0..dummies {
            b.add_edge(x, big.len() + z, whole.clone(), usize::MAX);
        }
    }
    if !has_perfect_matching(&b) {
        return Ok(None);
    }
    for _ in 0..repeats.max(1) {
        let weights = achievable_weights(&b, rng, 1)?;
        let Some(target) = weights.into_iter().find(|w| singletons_fit(&singleton_colors, w)) else {
            continue;
        };
        let Some(matching) = exact_weight_perfect_matching(&b, &target, rng, repeats)? else {
            continue;
        };
        let mut map = vec![usize::MAX; q.n()];
        for (i, &u) in s.iter().enumerate() {
            map[u] = r[i];
        }
        let mut used = vec![false; g.n()];
        for &ei in &matching {
            let payload = b.edges[ei].payload;
            if payload == usize::MAX {
                continue;
            }
            for &(u, v) in &recipes[payload] {
                map[u] = v;
                used[v] = true;
            }
        }
        let free: Vec<usize> = xs.iter().flatten().copied().filter(|&v| !used[v]).collect();
        let adj: Vec<Vec<usize>> = singletons
            .iter()
            .map(|c| (0..free.len()).filter(|&j| subset(pcol[c[0]], hcol[free[j]])).collect())
            .collect();
        let m = max_bipartite_matching(&adj, free.len());
        assert!(m.saturates_left(), "singleton placement must succeed on the matched histogram");
        for (i, c) in singletons.iter().enumerate() {
            map[c[0]] = free[m.left[i].unwrap()];
        }
        let e = Embedding(map);
        assert!(verify_embedding(q, g, &e), "hitting-set witness does not verify");
        return Ok(Some(e));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};
    use crate::solver::oracle::solve_backtracking;

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn agree(g: &Graph, q: &Graph, k: usize) -> bool {
        let got = solve_hitting(g, q, k, 7, 10, &Budget::unlimited()).unwrap();
        let want = solve_backtracking(g, q, &Budget::unlimited()).unwrap().is_some();
        assert_eq!(got.is_some(), want, "g={g:?} q={q:?}");
        want
    }

    #[test]
    fn examples() {
        assert!(agree(&Graph::empty(1), &Graph::empty(1), 0));
        let g = fam(Family::DisjointUnion(vec![Family::Path(4), Family::Star(2)]));
        let q = fam(Family::DisjointUnion(vec![Family::Path(4), Family::Path(2)]));
        assert!(agree(&g, &q, 1));
        let g = fam(Family::DisjointUnion(vec![Family::Path(4), Family::Path(4)]));
        assert!(!agree(&g, &fam(Family::Path(5)), 2));
    }

    #[test]
    fn class_violation() {
        let g = fam(Family::DisjointUnion(vec![Family::Path(4), Family::Path(4)]));
        assert!(matches!(solve_hitting(&g, &Graph::empty(1), 1, 0, 1, &Budget::unlimited()), Err(Error::ClassViolation(_))));
    }

    #[test]
    fn leftover_examples() {
        let k3 = fam(Family::Clique(3));
        let zero = vec![0u64; 3];
        let out = enumerate_leftover_histograms(&k3, &[0, 1, 2], &zero, &k3, &[0, 1, 2], &zero, 0);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0.total(), 0);

        let star = fam(Family::Star(2));
        let k2 = fam(Family::Path(2));
        let out = enumerate_leftover_histograms(&star, &[0, 1, 2], &zero, &k2, &[0, 1], &zero, 0);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0.total(), 1);
    }

    #[test]
    fn big_star_transport_matches_exhaustive() {
        // host star with 5 leaves of mixed colours, pattern star with 3 leaves
        let host = fam(Family::Star(5));
        let hcol = vec![0, 1, 0, 1, 0, 0];
        let pat = fam(Family::Star(3));
        let pcol = vec![0, 1, 0, 0];
        let fast = enumerate_leftover_histograms(&host, &[0, 1, 2, 3, 4, 5], &hcol, &pat, &[0, 1, 2, 3], &pcol, 1);
        let mut slow = HashMap::new();
        exhaustive_any(&host, &hcol, &pat, &pcol, &mut slow);
        let mut want: Vec<ColorHistogram> = slow.into_keys().collect();
        want.sort();
        assert_eq!(fast.into_iter().map(|x| x.0).collect::<Vec<_>>(), want);
    }

    fn exhaustive_any(g: &Graph, hcol: &[u64], q: &Graph, pcol: &[u64], found: &mut HashMap<ColorHistogram, Vec<(usize, usize)>>) {
        let hc: Vec<usize> = (0..g.n()).collect();
        let pc: Vec<usize> = (0..q.n()).collect();
        exhaustive(g, &hc, hcol, q, &pc, pcol, 1, found);
    }
}
