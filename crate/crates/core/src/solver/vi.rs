//! Embedding between graphs of bounded vertex integrity.
//!
//! With `T` a vi(k) set of the host, some minimal vi(k) set `S` of the
//! pattern is mapped into `T` by every embedding. For each guess of `S` and
//! of its image `R`, the pattern components of `Q - S` have to be packed
//! into `G - R`. Vertices of `T - R` are covered one at a time by a
//! connected "piece" of at most `k - |S|` vertices (or left unused); after
//! that, every host part (a piece, or what is left of a component of
//! `G - T`) has at most `k - |S|` vertices. Parts and pattern components are
//! typed by their canonical form coloured with adjacency to `R` and `S`, and
//! an integer program decides whether the typed pattern components can be
//! distributed over the typed host parts.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, components_masked, find_path, is_p4_free, CanonicalForm, Embedding, Graph};
use crate::ilp::{self, IlpInstance, Relation};
use crate::recognize::{enumerate_minimal_vi_sets, find_vi_set, is_vi_set, kp3_free_vi_bound};
use crate::solver::p4free::solve_p4free;

/// Isomorphism class of a small component together with the root set each
/// of its vertices is adjacent to (bit `i` = adjacent to root `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentType(pub CanonicalForm);

impl ComponentType {
    /// Type of `g[vertices]` with root signatures `signature[v]`. Also
    /// returns the canonical labelling in terms of `vertices`.
    pub fn of(g: &Graph, vertices: &[usize], signature: &[u64]) -> (ComponentType, Vec<usize>) {
        let sub = g.induced(vertices);
        let colors: Vec<u64> = vertices.iter().map(|&v| signature[v]).collect();
        let (form, labelling) = canonical_form(&sub, &colors);
        (ComponentType(form), labelling.into_iter().map(|i| vertices[i]).collect())
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }
}

/// A multiset of component types.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TypeMultiset {
    pub counts: BTreeMap<ComponentType, usize>,
    pub total_order: usize,
}

impl TypeMultiset {
    pub fn insert(&mut self, t: ComponentType) {
        self.total_order += t.order();
        *self.counts.entry(t).or_insert(0) += 1;
    }
}

/// Colour-respecting embedding of small graphs: pattern vertex `u` may go
/// to host vertex `v` only if `allowed(u, v)`.
pub(crate) fn embed_small(q: &Graph, g: &Graph, allowed: &dyn Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    if q.n() > g.n() {
        return None;
    }
    let mut order: Vec<usize> = Vec::with_capacity(q.n());
    let mut seen = vec![false; q.n()];
    let mut by_degree: Vec<usize> = (0..q.n()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(q.degree(v)));
    for s in by_degree {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let head = order.len();
        order.push(s);
        let mut i = head;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in q.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; q.n()];
    let mut used = vec![false; g.n()];
    fn rec(
        q: &Graph,
        g: &Graph,
        allowed: &dyn Fn(usize, usize) -> bool,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(pos) else {
            return true;
        };
        for v in 0..g.n() {
            if used[v] || g.degree(v) < q.degree(u) || !allowed(u, v) {
                continue;
            }
            if q.neighbors(u).iter().any(|&w| map[w] != usize::MAX && !g.has_edge(v, map[w])) {
                continue;
            }
            map[u] = v;
            used[v] = true;
            if rec(q, g, allowed, order, pos + 1, map, used) {
                return true;
            }
            used[v] = false;
            map[u] = usize::MAX;
        }
        false
    }
    rec(q, g, allowed, &order, 0, &mut map, &mut used).then_some(map)
}

/// Joint injective, edge-preserving map of the disjoint union of `parts`
/// into `d` such that vertex `u` of part `i` only goes to a vertex `v` with
/// `matches(i, u, v)`. Returns one vertex map per part.
pub fn fits(parts: &[Graph], d: &Graph, matches: &dyn Fn(usize, usize, usize) -> bool) -> Option<Vec<Vec<usize>>> {
    let (union, offsets) = Graph::disjoint_union(parts);
    let mut owner = Vec::with_capacity(union.n());
    for (i, p) in parts.iter().enumerate() {
        owner.extend((0..p.n()).map(|u| (i, u)));
    }
    let map = embed_small(&union, d, &|u, v| {
        let (i, local) = owner[u];
        matches(i, local, v)
    })?;
    Some(
        parts
            .iter()
            .enumerate()
            .map(|(i, p)| map[offsets[i]..offsets[i] + p.n()].to_vec())
            .collect(),
    )
}

/// Colour of every vertex: bit `i` set iff adjacent to `roots[i]`.
fn root_colors(g: &Graph, roots: &[usize]) -> Vec<u64> {
    let mut col = vec![0u64; g.n()];
    for (i, &r) in roots.iter().enumerate() {
        for &w in g.neighbors(r) {
            col[w] |= 1 << i;
        }
    }
    col
}

/// Interns component types so that multisets are small vectors of ids.
#[derive(Default)]
struct Types {
    ids: HashMap<ComponentType, usize>,
    list: Vec<ComponentType>,
    fit_memo: HashMap<(Vec<(usize, usize)>, usize), bool>,
}

impl Types {
    fn id(&mut self, t: ComponentType) -> usize {
        if let Some(&i) = self.ids.get(&t) {
            return i;
        }
        self.list.push(t.clone());
        self.ids.insert(t, self.list.len() - 1);
        self.list.len() - 1
    }

    /// Whether the pattern multiset `(type, multiplicity)` fits host type `host`.
    fn fits(&mut self, multiset: &[(usize, usize)], host: usize) -> bool {
        let key = (multiset.to_vec(), host);
        if let Some(&b) = self.fit_memo.get(&key) {
            return b;
        }
        let (hg, hc) = self.list[host].0.to_graph();
        let mut parts = Vec::new();
        let mut colors = Vec::new();
        for &(t, m) in multiset {
            let (pg, pc) = self.list[t].0.to_graph();
            for _ in 0..m {
                parts.push(pg.clone());
                colors.push(pc.clone());
            }
        }
        let ok = fits(&parts, &hg, &|i, u, v| colors[i][u] & !hc[v] == 0).is_some();
        self.fit_memo.insert(key, ok);
        ok
    }
}

struct PatternSide {
    s: Vec<usize>,
    col: Vec<u64>,
    comps: Vec<Vec<usize>>,
    /// Type id per component.
    comp_type: Vec<usize>,
    /// Distinct type ids with multiplicity.
    census: Vec<(usize, usize)>,
}

struct HostSide<'a> {
    g: &'a Graph,
    t: Vec<usize>,
    in_t: Vec<bool>,
    comps: Vec<Vec<usize>>,
    comp_of: Vec<usize>,
    /// Symmetry class of each component of `G - T` (type relative to `T`).
    sym_class: Vec<usize>,
}

struct Solver<'a> {
    q: &'a Graph,
    host: HostSide<'a>,
    k: usize,
    budget: &'a Budget,
    types: Types,
}

/// Mutable state of one guess `(S, R)`.
struct Guess<'p> {
    pat: &'p PatternSide,
    r: Vec<usize>,
    col: Vec<u64>,
    bound: usize,
    blocked: Vec<bool>,
    pieces: Vec<Vec<usize>>,
    touched: Vec<bool>,
    whole_type: HashMap<usize, usize>,
}

impl Solver<'_> {
    fn pattern_side(&mut self, s: Vec<usize>) -> PatternSide {
        let col = root_colors(self.q, &s);
        let mut removed = vec![false; self.q.n()];
        for &v in &s {
            removed[v] = true;
        }
        let comps = components_masked(self.q, Some(&removed));
        let comp_type: Vec<usize> = comps
            .iter()
            .map(|c| {
                let t = ComponentType::of(self.q, c, &col).0;
                self.types.id(t)
            })
            .collect();
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in &comp_type {
            *census.entry(t).or_insert(0) += 1;
        }
        PatternSide { s, col, comps, comp_type, census: census.into_iter().collect() }
    }

    fn run(&mut self) -> Result<Option<Embedding>> {
        let mut memo_seen: HashSet<(Vec<usize>, Vec<(usize, usize)>)> = HashSet::new();
        for s in enumerate_minimal_vi_sets(self.q, self.k) {
            if s.len() > self.host.t.len() {
                continue;
            }
            let pat = self.pattern_side(s);
            let mut maximal: HashMap<usize, Vec<Vec<(usize, usize)>>> = HashMap::new();
            let mut image = Vec::with_capacity(pat.s.len());
            let mut used = vec![false; self.host.t.len()];
            if let Some(e) = self.injections(&pat, &mut image, &mut used, &mut memo_seen, &mut maximal)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    fn injections(
        &mut self,
        pat: &PatternSide,
        image: &mut Vec<usize>,
        used: &mut [bool],
        seen: &mut HashSet<(Vec<usize>, Vec<(usize, usize)>)>,
        maximal: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>,
    ) -> Result<Option<Embedding>> {
        let i = image.len();
        if i == pat.s.len() {
            self.budget.tick()?;
            return self.guess(pat, image.clone(), seen, maximal);
        }
        for j in 0..self.host.t.len() {
            if used[j] {
                continue;
            }
            let r = self.host.t[j];
            // edges inside S must survive
            let consistent = (0..i).all(|a| !self.q.has_edge(pat.s[a], pat.s[i]) || self.host.g.has_edge(image[a], r));
            if !consistent {
                continue;
            }
            used[j] = true;
            image.push(r);
            let found = self.injections(pat, image, used, seen, maximal)?;
            image.pop();
            used[j] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn guess(
        &mut self,
        pat: &PatternSide,
        r: Vec<usize>,
        seen: &mut HashSet<(Vec<usize>, Vec<(usize, usize)>)>,
        maximal: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>,
    ) -> Result<Option<Embedding>> {
        let g = self.host.g;
        if pat.comps.is_empty() {
            let mut map = vec![usize::MAX; self.q.n()];
            for (a, &v) in pat.s.iter().enumerate() {
                map[v] = r[a];
            }
            return Ok(Some(Embedding(map)));
        }
        let col = root_colors(g, &r);
        let mut blocked = vec![false; g.n()];
        for &v in &r {
            blocked[v] = true;
        }
        let mut st = Guess {
            pat,
            r,
            col,
            bound: self.k - pat.s.len(),
            blocked,
            pieces: Vec::new(),
            touched: vec![false; self.host.comps.len()],
            whole_type: HashMap::new(),
        };
        self.cover(&mut st, 0, seen, maximal)
    }

    /// Decides the piece of every vertex of `T - R` from position `idx` on.
    fn cover(
        &mut self,
        st: &mut Guess,
        idx: usize,
        seen: &mut HashSet<(Vec<usize>, Vec<(usize, usize)>)>,
        maximal: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>,
    ) -> Result<Option<Embedding>> {
        let next = (idx..self.host.t.len()).find(|&i| !st.blocked[self.host.t[i]]);
        let Some(i) = next else {
            self.budget.tick()?;
            return self.evaluate(st, seen, maximal);
        };
        let root = self.host.t[i];
        // all connected sets through `root` in the unblocked host
        let mut sets: Vec<Vec<usize>> = Vec::new();
        self.connected_sets(st, root, &mut sets);
        for piece in sets {
            let newly: Vec<usize> = self.newly_touched(st, &piece);
            for &v in &piece {
                st.blocked[v] = true;
            }
            for &c in &newly {
                st.touched[c] = true;
            }
            st.pieces.push(piece);
            let found = self.cover(st, i + 1, seen, maximal)?;
            let piece = st.pieces.pop().unwrap();
            for &c in &newly {
                st.touched[c] = false;
            }
            for &v in &piece {
                st.blocked[v] = false;
            }
            if found.is_some() {
                return Ok(found);
            }
        }
        // leave `root` unused
        st.blocked[root] = true;
        let found = self.cover(st, i + 1, seen, maximal)?;
        st.blocked[root] = false;
        Ok(found)
    }

    fn newly_touched(&self, st: &Guess, piece: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = piece
            .iter()
            .filter(|&&v| !self.host.in_t[v])
            .map(|&v| self.host.comp_of[v])
            .filter(|&c| !st.touched[c])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether touching `newly` keeps every symmetry class filled from its
    /// lowest-index untouched components.
    fn symmetric_ok(&self, st: &Guess, newly: &[usize]) -> bool {
        let mut per_class: HashMap<usize, usize> = HashMap::new();
        for &c in newly {
            *per_class.entry(self.host.sym_class[c]).or_insert(0) += 1;
        }
        per_class.into_iter().all(|(class, count)| {
            let lowest: Vec<usize> = (0..self.host.comps.len())
                .filter(|&c| self.host.sym_class[c] == class && !st.touched[c])
                .take(count)
                .collect();
            newly.iter().filter(|&&c| self.host.sym_class[c] == class).eq(lowest.iter())
        })
    }

    /// Rank of component `c` among untouched components of its class.
    fn untouched_rank(&self, st: &Guess, c: usize) -> usize {
        let class = self.host.sym_class[c];
        (0..c)
            .filter(|&d| self.host.sym_class[d] == class && !st.touched[d])
            .count()
    }

    fn connected_sets(&self, st: &Guess, root: usize, out: &mut Vec<Vec<usize>>) {
        let g = self.host.g;
        let bound = st.bound;
        if bound == 0 {
            return;
        }
        let allowed = |w: usize| -> bool {
            if st.blocked[w] {
                return false;
            }
            if self.host.in_t[w] {
                return true;
            }
            let c = self.host.comp_of[w];
            st.touched[c] || self.untouched_rank(st, c) < bound
        };
        let mut visited = vec![false; g.n()];
        visited[root] = true;
        let mut ext = Vec::new();
        for &w in g.neighbors(root) {
            if !visited[w] && allowed(w) {
                visited[w] = true;
                ext.push(w);
            }
        }
        let mut set = vec![root];
        let mut emit = |set: &[usize]| {
            let newly = self.newly_touched(st, set);
            if self.symmetric_ok(st, &newly) {
                let mut s = set.to_vec();
                s.sort_unstable();
                out.push(s);
            }
        };
        extend(g, bound, &allowed, &mut set, ext, &mut visited, &mut emit);
    }

    fn evaluate(
        &mut self,
        st: &mut Guess,
        seen: &mut HashSet<(Vec<usize>, Vec<(usize, usize)>)>,
        maximal: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>,
    ) -> Result<Option<Embedding>> {
        let g = self.host.g;
        let mut parts: Vec<Vec<usize>> = st.pieces.clone();
        let mut part_type: Vec<usize> = Vec::new();
        for p in &st.pieces {
            let t = ComponentType::of(g, p, &st.col).0;
            part_type.push(self.types.id(t));
        }
        for (c, comp) in self.host.comps.iter().enumerate() {
            if st.touched[c] {
                let rest: Vec<usize> = comp.iter().copied().filter(|&v| !st.blocked[v]).collect();
                if !rest.is_empty() {
                    let t = ComponentType::of(g, &rest, &st.col).0;
                    part_type.push(self.types.id(t));
                    parts.push(rest);
                }
            } else {
                let t = match st.whole_type.get(&c) {
                    Some(&t) => t,
                    None => {
                        let t = ComponentType::of(g, comp, &st.col).0;
                        let t = self.types.id(t);
                        st.whole_type.insert(c, t);
                        t
                    }
                };
                part_type.push(t);
                parts.push(comp.clone());
            }
        }
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in &part_type {
            *census.entry(t).or_insert(0) += 1;
        }
        let census: Vec<(usize, usize)> = census.into_iter().collect();
        if !seen.insert((st.pat.s.clone(), census.clone())) {
            return Ok(None);
        }
        let Some(plan) = self.solve_census(st.pat, &census, maximal)? else {
            return Ok(None);
        };
        self.realize(st, &parts, &part_type, &plan)
    }

    /// Maximal pattern multisets (within the pattern census) that fit `host`.
    fn maximal_multisets(&mut self, pat: &PatternSide, host: usize) -> Vec<Vec<(usize, usize)>> {
        let cap = self.types.list[host].order();
        let mut all: Vec<Vec<usize>> = Vec::new();
        let mut cur = vec![0usize; pat.census.len()];
        self.grow(pat, host, cap, 0, &mut cur, &mut all);
        let dominated = |a: &Vec<usize>, b: &Vec<usize>| a != b && a.iter().zip(b).all(|(x, y)| x <= y);
        let maximal: Vec<&Vec<usize>> = all
            .iter()
            .filter(|a| a.iter().any(|&m| m > 0) && !all.iter().any(|b| dominated(a, b)))
            .collect();
        maximal
            .into_iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(i, &c)| (pat.census[i].0, c))
                    .collect()
            })
            .collect()
    }

    fn grow(&mut self, pat: &PatternSide, host: usize, cap: usize, i: usize, cur: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if i == pat.census.len() {
            all.push(cur.clone());
            return;
        }
        let (t, avail) = pat.census[i];
        let used: usize = cur.iter().enumerate().map(|(j, &m)| m * self.types.list[pat.census[j].0].order()).sum();
        let size = self.types.list[t].order();
        let mut m = 0;
        loop {
            self.grow(pat, host, cap, i + 1, cur, all);
            if m == avail || used + (m + 1) * size > cap {
                break;
            }
            cur[i] = m + 1;
            let ms: Vec<(usize, usize)> = cur
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(j, &c)| (pat.census[j].0, c))
                .collect();
            if !self.types.fits(&ms, host) {
                break;
            }
            m += 1;
        }
        cur[i] = 0;
    }

    /// Integer program over `x[multiset, host type]`: at most `n'_tau`
    /// multisets per host type, and every pattern type covered at least
    /// `n_sigma` times (surplus copies are simply dropped).
    fn solve_census(
        &mut self,
        pat: &PatternSide,
        census: &[(usize, usize)],
        maximal: &mut HashMap<usize, Vec<Vec<(usize, usize)>>>,
    ) -> Result<Option<Vec<(usize, Vec<(usize, usize)>, i64)>>> {
        let mut vars: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
        for &(tau, _) in census {
            maximal.entry(tau).or_insert_with(|| {
                
                self.maximal_multisets(pat, tau)
            });
            for ms in &maximal[&tau] {
                vars.push((tau, ms.clone()));
            }
        }
        for &(sigma, _) in &pat.census {
            if !vars.iter().any(|(_, ms)| ms.iter().any(|&(t, _)| t == sigma)) {
                return Ok(None);
            }
        }
        let mut p = IlpInstance::new();
        let count_of: HashMap<usize, usize> = census.iter().copied().collect();
        for (tau, _) in &vars {
            p.add_var(0, Some(count_of[tau] as i64));
        }
        for &(tau, n_tau) in census {
            let terms: Vec<(usize, i64)> = vars.iter().enumerate().filter(|(_, v)| v.0 == tau).map(|(i, _)| (i, 1)).collect();
            if !terms.is_empty() {
                p.add_constraint(&terms, Relation::Le, n_tau as i64);
            }
        }
        for &(sigma, n_sigma) in &pat.census {
            let terms: Vec<(usize, i64)> = vars
                .iter()
                .enumerate()
                .filter_map(|(i, (_, ms))| ms.iter().find(|&&(t, _)| t == sigma).map(|&(_, m)| (i, m as i64)))
                .collect();
            p.add_constraint(&terms, Relation::Ge, n_sigma as i64);
        }
        let Some(x) = ilp::feasible(&p)? else {
            return Ok(None);
        };
        Ok(Some(
            vars.into_iter()
                .zip(x)
                .filter(|(_, c)| *c > 0)
                .map(|((tau, ms), c)| (tau, ms, c))
                .collect(),
        ))
    }

    fn realize(
        &self,
        st: &Guess,
        parts: &[Vec<usize>],
        part_type: &[usize],
        plan: &[(usize, Vec<(usize, usize)>, i64)],
    ) -> Result<Option<Embedding>> {
        let g = self.host.g;
        let pat = st.pat;
        let mut queues: HashMap<usize, Vec<usize>> = HashMap::new();
        for (ci, &t) in pat.comp_type.iter().enumerate().rev() {
            queues.entry(t).or_default().push(ci);
        }
        let mut free_parts: HashMap<usize, Vec<usize>> = HashMap::new();
        for (pi, &t) in part_type.iter().enumerate().rev() {
            free_parts.entry(t).or_default().push(pi);
        }
        let mut map = vec![usize::MAX; self.q.n()];
        for (a, &v) in pat.s.iter().enumerate() {
            map[v] = st.r[a];
        }
        for (tau, ms, count) in plan {
            for _ in 0..*count {
                let pi = free_parts.get_mut(tau).and_then(Vec::pop).expect("part count respected");
                let mut chosen: Vec<usize> = Vec::new();
                for &(sigma, m) in ms {
                    let q = queues.entry(sigma).or_default();
                    for _ in 0..m {
                        if let Some(ci) = q.pop() {
                            chosen.push(ci);
                        }
                    }
                }
                if chosen.is_empty() {
                    continue;
                }
                let part = &parts[pi];
                let host = g.induced(part);
                let graphs: Vec<Graph> = chosen.iter().map(|&ci| self.q.induced(&pat.comps[ci])).collect();
                let maps = fits(&graphs, &host, &|i, u, v| {
                    let pu = pat.comps[chosen[i]][u];
                    pat.col[pu] & !st.col[part[v]] == 0
                })
                .expect("same types fit");
                for (i, m) in maps.iter().enumerate() {
                    for (u, &v) in m.iter().enumerate() {
                        map[pat.comps[chosen[i]][u]] = part[v];
                    }
                }
            }
        }
        debug_assert!(queues.values().all(Vec::is_empty));
        let e = Embedding(map);
        assert!(crate::graph::verify_embedding(self.q, g, &e), "realized witness does not verify");
        Ok(Some(e))
    }
}

/// Enumerates every connected set containing `set[0]` of at most `bound`
/// vertices, each exactly once.
fn extend(
    g: &Graph,
    bound: usize,
    allowed: &dyn Fn(usize) -> bool,
    set: &mut Vec<usize>,
    mut ext: Vec<usize>,
    visited: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    emit(set);
    if set.len() == bound {
        return;
    }
    while let Some(v) = ext.pop() {
        let mut added = Vec::new();
        for &w in g.neighbors(v) {
            if !visited[w] && allowed(w) {
                visited[w] = true;
                added.push(w);
            }
        }
        let mut next = ext.clone();
        next.extend(&added);
        set.push(v);
        extend(g, bound, allowed, set, next, visited, emit);
        set.pop();
        for w in added {
            visited[w] = false;
        }
    }
}

/// Decides `q ⪯ g` for graphs of vertex integrity at most `k`.
pub fn solve_vi(g: &Graph, q: &Graph, k: usize, budget: &Budget) -> Result<Option<Embedding>> {
    let cert = find_vi_set(g, k).ok_or_else(|| Error::class(format!("host vertex integrity exceeds {k}")))?;
    solve_vi_with_certificate(g, q, k, &cert.deletion_set, budget)
}

/// As [`solve_vi`], with a vi(k) set `t` of the host supplied by the caller.
pub fn solve_vi_with_certificate(g: &Graph, q: &Graph, k: usize, t: &[usize], budget: &Budget) -> Result<Option<Embedding>> {
    if !is_vi_set(g, k, t) {
        return Err(Error::invalid(format!("supplied set is not a vi({k}) set of the host")));
    }
    if find_vi_set(q, k).is_none() {
        return Err(Error::class(format!("pattern vertex integrity exceeds {k}")));
    }
    if q.n() > g.n() || q.m() > g.m() {
        return Ok(None);
    }
    let mut in_t = vec![false; g.n()];
    for &v in t {
        in_t[v] = true;
    }
    let comps = components_masked(g, Some(&in_t));
    let mut comp_of = vec![usize::MAX; g.n()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let t_col = root_colors(g, t);
    let mut sym_ids: HashMap<ComponentType, usize> = HashMap::new();
    let sym_class = comps
        .iter()
        .map(|c| {
            let ty = ComponentType::of(g, c, &t_col).0;
            let next = sym_ids.len();
            *sym_ids.entry(ty).or_insert(next)
        })
        .collect();
    let mut solver = Solver {
        q,
        host: HostSide { g, t: t.to_vec(), in_t, comps, comp_of, sym_class },
        k,
        budget,
        types: Types::default(),
    };
    solver.run()
}

/// Decides `q ⪯ g` for a host without `P4 + kP3` subgraph.
///
/// If the host has no `P4`, the pattern must not have one either and the
/// `P4`-free solver answers. Otherwise a `P4` of the host plus a greedy `P3`
/// packing of the rest is a vi(3k+3) set, and the pattern must have vertex
/// integrity at most `3k + 3` as well.
pub fn solve_p4_union_kp3(g: &Graph, q: &Graph, k: usize, budget: &Budget) -> Result<Option<Embedding>> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if is_p4_free(g) {
        return if is_p4_free(q) { solve_p4free(g, q) } else { Ok(None) };
    }
    let bound = 3 * k + 3;
    let t = p4_kp3_certificate(g, k).ok_or_else(|| Error::class(format!("host contains P4 + {k}P3")))?;
    let pattern_ok = p4_kp3_certificate(q, k).is_some_and(|s| is_vi_set(q, bound, &s)) || find_vi_set(q, bound).is_some();
    if !pattern_ok {
        return Ok(None);
    }
    solve_vi_with_certificate(g, q, bound, &t, budget)
}

/// A `P4` plus a greedy `P3` packing of the remainder, if that leaves only
/// components of order at most 2.
fn p4_kp3_certificate(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let Some(p4) = find_path(g, 4, None) else {
        let cert = kp3_free_vi_bound(g, k)?;
        return Some(cert.deletion_set);
    };
    let mut removed = vec![false; g.n()];
    for &v in &p4 {
        removed[v] = true;
    }
    let (rest, kept) = g.remove_vertices(&removed);
    let cert = kp3_free_vi_bound(&rest, k)?;
    let mut t: Vec<usize> = p4.into_iter().chain(cert.deletion_set.into_iter().map(|v| kept[v])).collect();
    t.sort_unstable();
    debug_assert!(is_vi_set(g, 3 * k + 3, &t));
    Some(t)
}
