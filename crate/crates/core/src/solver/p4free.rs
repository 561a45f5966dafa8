//! Linear-time embedding between graphs without `P4` subgraphs, whose
//! components are all single vertices, triangles or stars.

use crate::error::{Error, Result};
use crate::graph::{classify_component, components, ComponentKind, Embedding, Graph};

struct Shapes {
    isolated: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    /// (leaf count, center, leaves)
    stars: Vec<(usize, usize, Vec<usize>)>,
}

fn shapes(g: &Graph, which: &str) -> Result<Shapes> {
    let mut s = Shapes { isolated: Vec::new(), triangles: Vec::new(), stars: Vec::new() };
    for comp in components(g) {
        match classify_component(g, &comp) {
            ComponentKind::Singleton => s.isolated.push(comp[0]),
            ComponentKind::Triangle => s.triangles.push([comp[0], comp[1], comp[2]]),
            ComponentKind::Star(l) => {
                let center = *comp.iter().find(|&&v| g.degree(v) == l).unwrap();
                let leaves = comp.into_iter().filter(|&v| v != center).collect();
                s.stars.push((l, center, leaves));
            }
            ComponentKind::Other => {
                return Err(Error::class(format!("{which} contains a P4 subgraph")));
            }
        }
    }
    Ok(s)
}

/// Stable counting sort of star indices by leaf count.
fn bucket_sort(stars: &[(usize, usize, Vec<usize>)], max: usize) -> Vec<usize> {
    let mut buckets = vec![Vec::new(); max + 1];
    for (i, s) in stars.iter().enumerate() {
        buckets[s.0].push(i);
    }
    buckets.into_iter().flatten().collect()
}

/// Decides `q ⪯ g` when neither graph has a `P4` subgraph.
///
/// Pattern triangles take host triangles; the remaining host triangles act
/// as `K_{1,2}`. Pattern stars are then taken in increasing size, each by the
/// smallest unused host star that is large enough. Isolated pattern vertices
/// go to whatever host vertices are left.
pub fn solve_p4free(g: &Graph, q: &Graph) -> Result<Option<Embedding>> {
    let hs = shapes(g, "host")?;
    let ps = shapes(q, "pattern")?;
    if q.n() > g.n() || ps.triangles.len() > hs.triangles.len() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; q.n()];
    let mut used = vec![false; g.n()];
    let mut place = |map: &mut Vec<usize>, u: usize, v: usize| {
        map[u] = v;
        used[v] = true;
    };
    for (pt, ht) in ps.triangles.iter().zip(&hs.triangles) {
        for i in 0..3 {
            place(&mut map, pt[i], ht[i]);
        }
    }
    let mut host_stars = hs.stars;
    for t in &hs.triangles[ps.triangles.len()..] {
        host_stars.push((2, t[0], vec![t[1], t[2]]));
    }
    let max = host_stars.iter().chain(&ps.stars).map(|s| s.0).max().unwrap_or(0);
    let host_order = bucket_sort(&host_stars, max);
    let mut next = 0;
    for pi in bucket_sort(&ps.stars, max) {
        let (size, center, leaves) = &ps.stars[pi];
        while next < host_order.len() && host_stars[host_order[next]].0 < *size {
            next += 1;
        }
        let Some(&hi) = host_order.get(next) else {
            return Ok(None);
        };
        next += 1;
        let (_, hc, hl) = &host_stars[hi];
        place(&mut map, *center, *hc);
        for (u, v) in leaves.iter().zip(hl) {
            place(&mut map, *u, *v);
        }
    }
    let mut free = (0..g.n()).filter(|&v| !used[v]);
    for &u in &ps.isolated {
        map[u] = free.next().expect("vertex count was checked");
    }
    Ok(Some(Embedding(map)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::graph::{make_family, verify_embedding, Family};
    use crate::solver::oracle::solve_backtracking;

    fn fam(f: Family) -> Graph {
        make_family(&f).unwrap()
    }

    fn check(g: &Graph, q: &Graph) -> bool {
        let got = solve_p4free(g, q).unwrap();
        if let Some(e) = &got {
            assert!(verify_embedding(q, g, e));
        }
        let want = solve_backtracking(g, q, &Budget::unlimited()).unwrap().is_some();
        assert_eq!(got.is_some(), want);
        want
    }

    #[test]
    fn examples() {
        assert_eq!(solve_p4free(&Graph::empty(1), &Graph::empty(1)).unwrap(), Some(Embedding(vec![0])));
        let g = fam(Family::DisjointUnion(vec![Family::Clique(3), Family::Star(3)]));
        let q = fam(Family::DisjointUnion(vec![Family::Star(2), Family::Star(2)]));
        assert!(check(&g, &q));
        let g = fam(Family::DisjointUnion(vec![Family::Clique(3), Family::Clique(3)]));
        assert!(!check(&g, &fam(Family::Star(3))));
    }

    #[test]
    fn rejects_p4() {
        assert!(matches!(
            solve_p4free(&fam(Family::Path(4)), &Graph::empty(1)),
            Err(Error::ClassViolation(_))
        ));
    }

    #[test]
    fn paths_of_three_pack_into_triangles_and_stars() {
        let g = fam(Family::DisjointUnion(vec![Family::Clique(3), Family::Star(1), Family::Star(5)]));
        let q = fam(Family::DisjointUnion(vec![Family::Path(3), Family::Path(3), Family::Path(2), Family::Path(1)]));
        assert!(check(&g, &q));
    }
}
