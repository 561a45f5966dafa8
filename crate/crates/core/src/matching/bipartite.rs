use std::collections::VecDeque;

/// A matching between `left` and right vertices; `left[x]` is the partner of
/// left vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left.iter().flatten().count()
    }

    pub fn saturates_left(&self) -> bool {
        self.left.iter().all(Option::is_some)
    }
}

/// Maximum matching by Hopcroft-Karp. `adjacency[x]` lists the right
/// neighbours of left vertex `x`; right ids must be below `right_count`.
pub fn max_bipartite_matching(adjacency: &[Vec<usize>], right_count: usize) -> Matching {
    let n = adjacency.len();
    let mut ml: Vec<Option<usize>> = vec![None; n];
    let mut mr: Vec<Option<usize>> = vec![None; right_count];
    let mut dist = vec![usize::MAX; n];
    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for x in 0..n {
            if ml[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                match mr[y] {
                    None => found = true,
                    Some(x2) if dist[x2] == usize::MAX => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; n];
        for x in 0..n {
            if ml[x].is_none() {
                augment(x, adjacency, &mut ml, &mut mr, &mut dist, &mut next);
            }
        }
    }
    Matching { left: ml, right: mr }
}

fn augment(
    x: usize,
    adjacency: &[Vec<usize>],
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[x] < adjacency[x].len() {
        let y = adjacency[x][next[x]];
        next[x] += 1;
        let ok = match mr[y] {
            None => true,
            Some(x2) => dist[x2] == dist[x] + 1 && augment(x2, adjacency, ml, mr, dist, next),
        };
        if ok {
            ml[x] = Some(y);
            mr[y] = Some(x);
            return true;
        }
    }
    dist[x] = usize::MAX;
    false
}
