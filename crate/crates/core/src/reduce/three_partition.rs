use serde::{Deserialize, Serialize};

use super::{content_lines, parse_num, Builder};
use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};

/// Largest `m` accepted by [`solve_3partition`].
pub const MAX_3PARTITION_M: usize = 3;

/// `3m` positive integers with `B/4 < a_i < B/2` summing to `mB`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub values: Vec<u64>,
    pub bound: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionMode {
    /// Host `m P_B`, pattern `P_{a_1} + ... + P_{a_3m}`.
    LinearForest,
    /// Host `m K_B`, pattern `K_{a_1} + ... + K_{a_3m}`.
    Cluster,
}

impl ThreePartitionInstance {
    pub fn new(values: Vec<u64>, bound: u64) -> Result<Self> {
        let inst = ThreePartitionInstance { values, bound };
        inst.validate()?;
        Ok(inst)
    }

    pub fn m(&self) -> usize {
        self.values.len() / 3
    }

    pub fn validate(&self) -> Result<()> {
        let b = self.bound;
        if self.values.is_empty() || !self.values.len().is_multiple_of(3) {
            return Err(Error::invalid("need a positive multiple of three values"));
        }
        if let Some(a) = self.values.iter().find(|&&a| 4 * a <= b || 2 * a >= b) {
            return Err(Error::invalid(format!("value {a} is not strictly between B/4 and B/2 for B = {b}")));
        }
        let sum: u64 = self.values.iter().sum();
        if sum != self.m() as u64 * b {
            return Err(Error::invalid(format!("values sum to {sum}, expected m*B = {}", self.m() as u64 * b)));
        }
        Ok(())
    }
}

/// Reads `B` followed by the values, all whitespace separated. Lines
/// starting with `#` are ignored.
pub fn parse_3partition(text: &str) -> Result<ThreePartitionInstance> {
    let mut nums = Vec::new();
    let mut last = 0;
    for (line, l) in content_lines(text, &['#']) {
        last = line;
        for tok in l.split_whitespace() {
            nums.push(parse_num::<u64>(tok, line)?);
        }
    }
    let Some((&bound, values)) = nums.split_first() else {
        return Err(Error::Parse { line: last.max(1), msg: "missing target B".into() });
    };
    ThreePartitionInstance::new(values.to_vec(), bound)
}

fn add_block(b: &mut Builder, size: usize, mode: PartitionMode) {
    let vs: Vec<usize> = (0..size).map(|_| b.vertex()).collect();
    match mode {
        PartitionMode::LinearForest => {
            for w in vs.windows(2) {
                b.edge(w[0], w[1]);
            }
        }
        PartitionMode::Cluster => {
            for i in 0..size {
                for j in i + 1..size {
                    b.edge(vs[i], vs[j]);
                }
            }
        }
    }
}

/// Returns `(host, pattern)`. Both have `mB` vertices; block `t` of the
/// host occupies ids `tB..(t+1)B` and the pattern components appear in
/// input order.
pub fn reduce_3partition(inst: &ThreePartitionInstance, mode: PartitionMode) -> Result<(Graph, Graph)> {
    inst.validate()?;
    let mut host = Builder::default();
    for _ in 0..inst.m() {
        add_block(&mut host, inst.bound as usize, mode);
    }
    let mut pattern = Builder::default();
    for &a in &inst.values {
        add_block(&mut pattern, a as usize, mode);
    }
    Ok((host.finish(), pattern.finish()))
}

/// Exhaustive search for a partition into triples of sum `B`, as index
/// triples. Rejects instances with `m > MAX_3PARTITION_M`.
pub fn solve_3partition(inst: &ThreePartitionInstance) -> Result<Option<Vec<[usize; 3]>>> {
    inst.validate()?;
    if inst.m() > MAX_3PARTITION_M {
        return Err(Error::invalid(format!("exhaustive search is capped at m = {MAX_3PARTITION_M}")));
    }
    let mut used = vec![false; inst.values.len()];
    let mut out = Vec::new();
    Ok(search(inst, &mut used, &mut out).then_some(out))
}

fn search(inst: &ThreePartitionInstance, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
    let Some(i) = used.iter().position(|&u| !u) else {
        return true;
    };
    let n = used.len();
    used[i] = true;
    for j in i + 1..n {
        if used[j] {
            continue;
        }
        used[j] = true;
        for k in j + 1..n {
            if used[k] || inst.values[i] + inst.values[j] + inst.values[k] != inst.bound {
                continue;
            }
            used[k] = true;
            out.push([i, j, k]);
            if search(inst, used, out) {
                return true;
            }
            out.pop();
            used[k] = false;
        }
        used[j] = false;
    }
    used[i] = false;
    false
}

/// Packs the pattern components of triple `t` side by side into host block
/// `t`.
pub fn build_3partition_witness(inst: &ThreePartitionInstance, triples: &[[usize; 3]]) -> Result<Embedding> {
    inst.validate()?;
    let n = inst.values.len();
    let mut seen = vec![false; n];
    for t in triples {
        for &i in t {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::invalid("triples must partition the values"));
            }
        }
        if t.iter().map(|&i| inst.values[i]).sum::<u64>() != inst.bound {
            return Err(Error::invalid("a triple does not sum to B"));
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::invalid("triples must partition the values"));
    }
    let mut offset = vec![0usize; n];
    let mut acc = 0;
    for (i, &a) in inst.values.iter().enumerate() {
        offset[i] = acc;
        acc += a as usize;
    }
    let mut map = vec![0; acc];
    let b = inst.bound as usize;
    for (t, triple) in triples.iter().enumerate() {
        let mut pos = t * b;
        for &i in triple {
            for x in 0..inst.values[i] as usize {
                map[offset[i] + x] = pos;
                pos += 1;
            }
        }
    }
    Ok(Embedding(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_embedding;

    #[test]
    fn rejects_values_outside_the_open_window() {
        assert!(ThreePartitionInstance::new(vec![2, 3, 3], 8).is_err());
        assert!(ThreePartitionInstance::new(vec![1, 1, 2], 4).is_err());
        assert!(ThreePartitionInstance::new(vec![1, 1, 1], 3).is_ok());
    }

    #[test]
    fn parse_and_solve() {
        let inst = parse_3partition("# demo\n7\n2 2 3\n2 2 3\n").unwrap();
        assert_eq!(inst.bound, 7);
        let triples = solve_3partition(&inst).unwrap().unwrap();
        for mode in [PartitionMode::LinearForest, PartitionMode::Cluster] {
            let (g, q) = reduce_3partition(&inst, mode).unwrap();
            assert_eq!(g.n(), q.n());
            let e = build_3partition_witness(&inst, &triples).unwrap();
            assert!(verify_embedding(&q, &g, &e));
        }
    }

    #[test]
    fn parse_error_reports_line() {
        match parse_3partition("7\n2 x 3") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }
}
