use serde::{Deserialize, Serialize};

use super::{content_lines, parse_num, Builder};
use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};

/// Largest universe accepted by [`solve_x3c`].
pub const MAX_X3C_UNIVERSE: usize = 9;

/// A universe `{0..n}` and a family of 3-subsets, each stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3cInstance {
    pub universe: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(universe: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        let mut inst = X3cInstance { universe, sets };
        for s in &mut inst.sets {
            s.sort_unstable();
        }
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.universe == 0 || !self.universe.is_multiple_of(3) {
            return Err(Error::invalid("universe size must be a positive multiple of 3"));
        }
        for s in &self.sets {
            if s[0] == s[1] || s[1] == s[2] || s[0] == s[2] || s.iter().any(|&e| e >= self.universe) {
                return Err(Error::invalid(format!("{s:?} is not a 3-subset of the universe")));
            }
        }
        Ok(())
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![false; self.universe];
        chosen.len() * 3 == self.universe
            && chosen.iter().all(|&c| {
                c < self.sets.len() && self.sets[c].iter().all(|&e| !std::mem::replace(&mut hit[e], true))
            })
    }
}

/// Reads `n` on the first line, then one 3-set (0-based elements) per line.
pub fn parse_x3c(text: &str) -> Result<X3cInstance> {
    let mut lines = content_lines(text, &['#']);
    let Some((line, first)) = lines.next() else {
        return Err(Error::Parse { line: 1, msg: "missing universe size".into() });
    };
    let universe = parse_num::<usize>(first, line)?;
    let mut sets = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(Error::Parse { line, msg: format!("expected 3 elements, found {}", toks.len()) });
        }
        let mut s = [0; 3];
        for (slot, tok) in s.iter_mut().zip(&toks) {
            *slot = parse_num(tok, line)?;
        }
        sets.push(s);
    }
    X3cInstance::new(universe, sets)
}

/// Where each gadget ended up in the reduced graphs.
#[derive(Clone, Debug, Default)]
pub struct X3cLayout {
    /// Per set: the central vertex of its tree.
    pub centers: Vec<usize>,
    /// Per set: the `4n` leaves of the central star that carry no pendants.
    pub free_leaves: Vec<Vec<usize>>,
    /// Per set, per element in increasing order: the `(leaf, pendants)` pair
    /// with `n+i` pendants and then the one with `3n-i` pendants.
    pub hubs: Vec<Vec<(usize, Vec<usize>)>>,
    /// Pattern stars `K_{1,4n}` as `(center, leaves)`.
    pub short_stars: Vec<(usize, Vec<usize>)>,
    /// Pattern stars `K_{1,4n+6}`.
    pub full_stars: Vec<(usize, Vec<usize>)>,
    /// Per element `i`: the stars `K_{1,n+i}` and `K_{1,3n-i}`.
    pub element_stars: Vec<[(usize, Vec<usize>); 2]>,
}

fn star(b: &mut Builder, leaves: usize) -> (usize, Vec<usize>) {
    let c = b.vertex();
    (c, b.pendants(c, leaves))
}

/// Returns `(host, pattern)`. The host is a forest of one `16n+7`-vertex
/// tree per set; the pattern is a union of stars.
pub fn reduce_x3c(inst: &X3cInstance) -> Result<(Graph, Graph)> {
    reduce_x3c_with_layout(inst).map(|(g, q, _)| (g, q))
}

pub fn reduce_x3c_with_layout(inst: &X3cInstance) -> Result<(Graph, Graph, X3cLayout)> {
    inst.validate()?;
    let n = inst.universe;
    if inst.sets.len() < n / 3 {
        return Err(Error::invalid("fewer sets than n/3"));
    }
    let mut layout = X3cLayout::default();
    let mut host = Builder::default();
    for set in &inst.sets {
        let (center, leaves) = star(&mut host, 4 * n + 6);
        let mut hubs = Vec::new();
        for (slot, &e) in set.iter().enumerate() {
            for (k, count) in [n + e, 3 * n - e].into_iter().enumerate() {
                let leaf = leaves[2 * slot + k];
                hubs.push((leaf, host.pendants(leaf, count)));
            }
        }
        layout.centers.push(center);
        layout.free_leaves.push(leaves[6..].to_vec());
        layout.hubs.push(hubs);
    }
    let mut pattern = Builder::default();
    for _ in 0..n / 3 {
        layout.short_stars.push(star(&mut pattern, 4 * n));
    }
    for _ in n / 3..inst.sets.len() {
        layout.full_stars.push(star(&mut pattern, 4 * n + 6));
    }
    for i in 0..n {
        let a = star(&mut pattern, n + i);
        let b = star(&mut pattern, 3 * n - i);
        layout.element_stars.push([a, b]);
    }
    Ok((host.finish(), pattern.finish(), layout))
}

/// Exact cover by backtracking on the smallest uncovered element. Returns
/// the chosen set indices in increasing order.
pub fn solve_x3c(inst: &X3cInstance) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    if inst.universe > MAX_X3C_UNIVERSE {
        return Err(Error::invalid(format!("exhaustive search is capped at n = {MAX_X3C_UNIVERSE}")));
    }
    let mut covered = vec![false; inst.universe];
    let mut chosen = Vec::new();
    if cover(inst, &mut covered, &mut chosen) {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn cover(inst: &X3cInstance, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(e) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for (idx, s) in inst.sets.iter().enumerate() {
        if !s.contains(&e) || s.iter().any(|&x| covered[x]) {
            continue;
        }
        s.iter().for_each(|&x| covered[x] = true);
        chosen.push(idx);
        if cover(inst, covered, chosen) {
            return true;
        }
        chosen.pop();
        s.iter().for_each(|&x| covered[x] = false);
    }
    false
}

/// Embedding of the reduced pattern into the reduced host obtained from an
/// exact cover: short stars go to the cover's trees together with the
/// element stars, full stars take the remaining trees.
pub fn build_x3c_witness(inst: &X3cInstance, cover: &[usize]) -> Result<Embedding> {
    if !inst.is_cover(cover) {
        return Err(Error::invalid("not an exact cover"));
    }
    let (_, q, layout) = reduce_x3c_with_layout(inst)?;
    let mut map = vec![usize::MAX; q.n()];
    let mut place = |(pc, pl): &(usize, Vec<usize>), hc: usize, hl: &[usize]| {
        map[*pc] = hc;
        for (&p, &h) in pl.iter().zip(hl) {
            map[p] = h;
        }
    };
    let mut in_cover = vec![false; inst.sets.len()];
    for (s, &c) in layout.short_stars.iter().zip(cover) {
        in_cover[c] = true;
        place(s, layout.centers[c], &layout.free_leaves[c]);
        for (slot, &e) in inst.sets[c].iter().enumerate() {
            for k in 0..2 {
                let (hub, pend) = &layout.hubs[c][2 * slot + k];
                place(&layout.element_stars[e][k], *hub, pend);
            }
        }
    }
    let rest = (0..inst.sets.len()).filter(|&c| !in_cover[c]);
    for (s, c) in layout.full_stars.iter().zip(rest) {
        let leaves: Vec<usize> = layout.hubs[c].iter().map(|h| h.0).chain(layout.free_leaves[c].iter().copied()).collect();
        place(s, layout.centers[c], &leaves);
    }
    debug_assert!(map.iter().all(|&v| v != usize::MAX));
    Ok(Embedding(map))
}
