use serde::{Deserialize, Serialize};

use super::{content_lines, parse_num, Builder};
use crate::error::{Error, Result};
use crate::graph::{components, Embedding, Graph};

/// Largest variable count accepted by [`solve_sat21`].
pub const MAX_SAT21_VARIABLES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// CNF where every clause has two or three distinct literals and every
/// variable occurs exactly twice positively and once negatively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sat21Formula {
    pub variables: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl Sat21Formula {
    pub fn new(variables: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let f = Sat21Formula { variables, clauses };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let mut occ = vec![(0usize, 0usize); self.variables];
        for (j, c) in self.clauses.iter().enumerate() {
            if !(2..=3).contains(&c.len()) {
                return Err(Error::invalid(format!("clause {j} has {} literals", c.len())));
            }
            for (x, l) in c.iter().enumerate() {
                if l.var >= self.variables {
                    return Err(Error::invalid(format!("clause {j} mentions unknown variable {}", l.var)));
                }
                if c[..x].contains(l) {
                    return Err(Error::invalid(format!("clause {j} repeats a literal")));
                }
                if l.positive {
                    occ[l.var].0 += 1;
                } else {
                    occ[l.var].1 += 1;
                }
            }
        }
        if let Some(v) = occ.iter().position(|&o| o != (2, 1)) {
            return Err(Error::invalid(format!(
                "variable {} occurs {} times positively and {} times negatively",
                v + 1,
                occ[v].0,
                occ[v].1
            )));
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variables && self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// `(positive clauses in increasing order, negative clause)` of `var`.
    fn occurrences(&self, var: usize) -> ([usize; 2], usize) {
        let mut pos = Vec::new();
        let mut neg = 0;
        for (j, c) in self.clauses.iter().enumerate() {
            for l in c.iter().filter(|l| l.var == var) {
                if l.positive {
                    pos.push(j);
                } else {
                    neg = j;
                }
            }
        }
        ([pos[0], pos[1]], neg)
    }
}

/// DIMACS-style input: `c` comment lines, an optional `p cnf <vars>
/// <clauses>` header, then clauses of signed 1-based literals, each line
/// optionally terminated by `0`.
pub fn parse_sat21(text: &str) -> Result<Sat21Formula> {
    let mut declared = None;
    let mut clauses = Vec::new();
    let mut max_var = 0;
    for (line, l) in content_lines(text, &['c', '%']) {
        if let Some(rest) = l.strip_prefix('p') {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 || toks[0] != "cnf" {
                return Err(Error::Parse { line, msg: "malformed header, expected `p cnf <vars> <clauses>`".into() });
            }
            declared = Some(parse_num::<usize>(toks[1], line)?);
            continue;
        }
        let mut clause = Vec::new();
        for tok in l.split_whitespace() {
            let lit: i64 = parse_num(tok, line)?;
            if lit == 0 {
                break;
            }
            let var = lit.unsigned_abs() as usize;
            max_var = max_var.max(var);
            clause.push(Literal { var: var - 1, positive: lit > 0 });
        }
        if !clause.is_empty() {
            clauses.push(clause);
        }
    }
    let variables = declared.unwrap_or(max_var);
    if max_var > variables {
        return Err(Error::invalid(format!("literal {max_var} exceeds the declared {variables} variables")));
    }
    Sat21Formula::new(variables, clauses)
}

/// Number of pendants attached to `c` (and half the number on `c'`).
pub fn pendant_count(n: usize) -> usize {
    4 * n * n * n + 2 * n + 2
}

/// One star of a host double star, as `(center, leaves)`.
type Star = (usize, Vec<usize>);

/// Where each gadget ended up in the reduced graphs.
#[derive(Clone, Debug, Default)]
pub struct Sat21Layout {
    pub c: usize,
    pub c_prime: usize,
    /// Per variable: the two sides of `D_i` (`(n+i)n` leaves, then
    /// `(3n-i)n` leaves).
    pub positive: Vec<[Star; 2]>,
    /// Per variable: the two sides of the negated gadget.
    pub negative: Vec<[Star; 2]>,
    /// Per clause: the host stars assigned to it, as `(literal, side)`.
    pub slots: Vec<Vec<(Literal, usize)>>,
    pub c_pendants: Vec<usize>,
    pub c_prime_pendants: Vec<usize>,
    pub d: usize,
    pub d_prime: usize,
    /// Per variable: the pattern double star, same side order as the host.
    pub pattern_double_stars: Vec<[Star; 2]>,
    /// Per clause: the star's center, its leaves adjacent to `d`, and its
    /// leaves adjacent to `d'`.
    pub clause_stars: Vec<(usize, Vec<usize>, Vec<usize>)>,
    pub d_pendants: Vec<usize>,
    pub d_prime_pendants: Vec<usize>,
}

impl Sat21Layout {
    fn host_star(&self, lit: Literal, side: usize) -> &Star {
        let gadget = if lit.positive { &self.positive } else { &self.negative };
        &gadget[lit.var][side]
    }
}

fn double_star(b: &mut Builder, a: usize, c: usize) -> [Star; 2] {
    let x = b.vertex();
    let y = b.vertex();
    b.edge(x, y);
    let lx = b.pendants(x, a);
    let ly = b.pendants(y, c);
    [(x, lx), (y, ly)]
}

/// Returns `(host, pattern)`. Needs at least four variables, since the
/// smallest gadget star must hold the `4n` leaves wired to `c` and `c'`.
pub fn reduce_sat21(f: &Sat21Formula) -> Result<(Graph, Graph)> {
    reduce_sat21_with_layout(f).map(|(g, q, _)| (g, q))
}

pub fn reduce_sat21_with_layout(f: &Sat21Formula) -> Result<(Graph, Graph, Sat21Layout)> {
    f.validate()?;
    let n = f.variables;
    if n < 4 {
        return Err(Error::invalid("the construction needs at least 4 variables"));
    }
    let mut lay = Sat21Layout::default();
    let mut host = Builder::default();
    for i in 0..n {
        lay.positive.push(double_star(&mut host, (n + i) * n, (3 * n - i) * n));
        lay.negative.push(double_star(&mut host, (n + i) * n, (3 * n - i) * n));
    }
    lay.c = host.vertex();
    lay.c_prime = host.vertex();
    lay.slots = vec![Vec::new(); f.clauses.len()];
    for i in 0..n {
        let (pos, neg) = f.occurrences(i);
        // the two positive clauses take the sides of D_i in clause order;
        // the negative clause takes the larger side of the negated gadget
        lay.slots[pos[0]].push((Literal { var: i, positive: true }, 0));
        lay.slots[pos[1]].push((Literal { var: i, positive: true }, 1));
        lay.slots[neg].push((Literal { var: i, positive: false }, 1));
    }
    for (h, slots) in lay.slots.iter().enumerate() {
        for &(lit, side) in slots {
            let leaves = &lay.host_star(lit, side).1;
            for &v in &leaves[..n + h] {
                host.edge(lay.c, v);
            }
            for &v in &leaves[n + h..4 * n] {
                host.edge(lay.c_prime, v);
            }
        }
    }
    let big = pendant_count(n);
    lay.c_pendants = host.pendants(lay.c, big);
    lay.c_prime_pendants = host.pendants(lay.c_prime, 2 * big);

    let mut pattern = Builder::default();
    for i in 0..n {
        lay.pattern_double_stars.push(double_star(&mut pattern, (n + i) * n, (3 * n - i) * n));
    }
    lay.d = pattern.vertex();
    lay.d_prime = pattern.vertex();
    for j in 0..f.clauses.len() {
        let center = pattern.vertex();
        let leaves = pattern.pendants(center, 4 * n);
        for &v in &leaves[..n + j] {
            pattern.edge(lay.d, v);
        }
        for &v in &leaves[n + j..] {
            pattern.edge(lay.d_prime, v);
        }
        lay.clause_stars.push((center, leaves[..n + j].to_vec(), leaves[n + j..].to_vec()));
    }
    lay.d_pendants = pattern.pendants(lay.d, big);
    lay.d_prime_pendants = pattern.pendants(lay.d_prime, 2 * big);
    Ok((host.finish(), pattern.finish(), lay))
}

/// Exhaustive search over assignments, first variable most significant
/// with `false` before `true`.
pub fn solve_sat21(f: &Sat21Formula) -> Result<Option<Vec<bool>>> {
    f.validate()?;
    let n = f.variables;
    if n > MAX_SAT21_VARIABLES {
        return Err(Error::invalid(format!("exhaustive search is capped at {MAX_SAT21_VARIABLES} variables")));
    }
    Ok((0u32..1 << n)
        .map(|bits| (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect::<Vec<bool>>())
        .find(|a| f.is_satisfied_by(a)))
}

/// Embedding obtained from a satisfying assignment: `d -> c`, `d' -> c'`,
/// each pattern double star onto the gadget of the false literal, and each
/// clause star onto a star of a true literal assigned to that clause.
pub fn build_sat21_witness(f: &Sat21Formula, assignment: &[bool]) -> Result<Embedding> {
    if !f.is_satisfied_by(assignment) {
        return Err(Error::invalid("assignment does not satisfy the formula"));
    }
    let (_, q, lay) = reduce_sat21_with_layout(f)?;
    let mut map = vec![usize::MAX; q.n()];
    map[lay.d] = lay.c;
    map[lay.d_prime] = lay.c_prime;
    for (p, h) in [(&lay.d_pendants, &lay.c_pendants), (&lay.d_prime_pendants, &lay.c_prime_pendants)] {
        for (&a, &b) in p.iter().zip(h) {
            map[a] = b;
        }
    }
    for (i, pattern) in lay.pattern_double_stars.iter().enumerate() {
        let target = if assignment[i] { &lay.negative[i] } else { &lay.positive[i] };
        for ((pc, pl), (hc, hl)) in pattern.iter().zip(target) {
            map[*pc] = *hc;
            for (&a, &b) in pl.iter().zip(hl) {
                map[a] = b;
            }
        }
    }
    let n = f.variables;
    for (j, (center, to_d, to_dp)) in lay.clause_stars.iter().enumerate() {
        let &(lit, side) = lay.slots[j]
            .iter()
            .find(|(lit, _)| lit.holds(assignment))
            .expect("satisfied clause has a true literal");
        let (hc, hl) = lay.host_star(lit, side);
        map[*center] = *hc;
        for (&a, &b) in to_d.iter().chain(to_dp).zip(&hl[..4 * n]) {
            map[a] = b;
        }
    }
    debug_assert!(map.iter().all(|&v| v != usize::MAX));
    Ok(Embedding(map))
}

/// True iff deleting `removed` from `g` leaves only stars, double stars and
/// isolated vertices.
pub fn is_double_star_forest_after(g: &Graph, removed: &[usize]) -> bool {
    let mut mask = vec![false; g.n()];
    for &v in removed {
        mask[v] = true;
    }
    let (h, _) = g.remove_vertices(&mask);
    components(&h).iter().all(|comp| {
        let edges = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        // in a tree the non-leaves induce a subtree, so at most two of them
        // means star or double star
        edges + 1 == comp.len() && comp.iter().filter(|&&v| h.degree(v) >= 2).count() <= 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contains_disjoint_p5, verify_embedding};

    fn lit(x: i64) -> Literal {
        Literal { var: x.unsigned_abs() as usize - 1, positive: x > 0 }
    }

    fn formula(n: usize, clauses: &[&[i64]]) -> Sat21Formula {
        Sat21Formula::new(n, clauses.iter().map(|c| c.iter().map(|&x| lit(x)).collect()).collect()).unwrap()
    }

    fn four_vars() -> Sat21Formula {
        formula(4, &[&[1, 2, -3], &[1, -2, 4], &[2, 3, -4], &[3, 4, -1]])
    }

    #[test]
    fn occurrence_rule_is_enforced() {
        assert!(Sat21Formula::new(1, vec![vec![lit(1), lit(-1)]]).is_err());
        let f = parse_sat21("c t\np cnf 2 3\n1 -1 0\n2 -2 0\n1 2 0\n").unwrap();
        assert_eq!(f.clauses.len(), 3);
        assert!(solve_sat21(&f).unwrap().is_some());
    }

    #[test]
    fn pendant_formula() {
        assert_eq!(pendant_count(3), 116);
    }

    #[test]
    fn gadget_sizes_and_structure() {
        let f = four_vars();
        let (g, q, lay) = reduce_sat21_with_layout(&f).unwrap();
        let n = 4;
        for ds in lay.positive.iter().chain(&lay.negative) {
            assert_eq!(2 + ds[0].1.len() + ds[1].1.len(), 4 * n * n + 2);
        }
        assert_eq!(lay.c_pendants.len(), pendant_count(n));
        assert_eq!(lay.c_prime_pendants.len(), 2 * pendant_count(n));
        assert!(is_double_star_forest_after(&g, &[lay.c, lay.c_prime]));
        assert!(is_double_star_forest_after(&q, &[lay.d, lay.d_prime]));
        assert!(!contains_disjoint_p5(&g, 3));
    }

    #[test]
    fn satisfying_assignment_embeds() {
        let f = four_vars();
        let a = solve_sat21(&f).unwrap().unwrap();
        let (g, q) = reduce_sat21(&f).unwrap();
        let e = build_sat21_witness(&f, &a).unwrap();
        assert!(verify_embedding(&q, &g, &e));
    }

    #[test]
    fn too_few_variables_rejected() {
        let f = formula(2, &[&[1, -1], &[2, -2], &[1, 2]]);
        assert!(reduce_sat21(&f).is_err());
    }
}
