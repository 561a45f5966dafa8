//! Feasibility of small bounded integer linear programs by interval
//! propagation and depth-first branching.
//!
//! The search is complete: every variable has a finite domain once bounds
//! have been propagated, and branching enumerates each domain value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpInstance {
    pub lower: Vec<i64>,
    /// `None` means "derive from the constraints".
    pub upper: Vec<Option<i64>>,
    pub constraints: Vec<Constraint>,
}

impl IlpInstance {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a variable and returns its index.
    pub fn add_var(&mut self, lower: i64, upper: Option<i64>) -> usize {
        self.lower.push(lower);
        self.upper.push(upper);
        for c in &mut self.constraints {
            c.coeffs.push(0);
        }
        self.lower.len() - 1
    }

    pub fn var_count(&self) -> usize {
        self.lower.len()
    }

    /// Adds `sum coeffs[i] * x[i] (rel) rhs` given as sparse `(var, coeff)`.
    pub fn add_constraint(&mut self, terms: &[(usize, i64)], relation: Relation, rhs: i64) {
        let mut coeffs = vec![0; self.var_count()];
        for &(v, c) in terms {
            coeffs[v] += c;
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        if x.len() != self.var_count() {
            return false;
        }
        let in_bounds = x.iter().enumerate().all(|(i, &v)| {
            v >= self.lower[i] && self.upper[i].is_none_or(|u| v <= u)
        });
        in_bounds
            && self.constraints.iter().all(|c| {
                let lhs: i128 = c.coeffs.iter().zip(x).map(|(&a, &v)| a as i128 * v as i128).sum();
                let rhs = c.rhs as i128;
                match c.relation {
                    Relation::Eq => lhs == rhs,
                    Relation::Le => lhs <= rhs,
                    Relation::Ge => lhs >= rhs,
                }
            })
    }
}

type Bounds = Vec<(i128, Option<i128>)>;

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// Tightens `bounds` in place. Returns false when some domain becomes empty.
fn propagate(p: &IlpInstance, bounds: &mut Bounds) -> bool {
    for _round in 0..64 {
        let mut changed = false;
        for c in &p.constraints {
            // `sum a_i x_i <= rhs` and/or `>= rhs`
            let le = matches!(c.relation, Relation::Le | Relation::Eq);
            let ge = matches!(c.relation, Relation::Ge | Relation::Eq);
            let rhs = c.rhs as i128;
            // activity range; None = unbounded in that direction
            let mut min_act: Option<i128> = Some(0);
            let mut max_act: Option<i128> = Some(0);
            for (i, &a) in c.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as i128;
                let (lo, hi) = bounds[i];
                let (mn, mx) = if a > 0 {
                    (Some(a * lo), hi.map(|h| a * h))
                } else {
                    (hi.map(|h| a * h), Some(a * lo))
                };
                min_act = min_act.zip(mn).map(|(x, y)| x + y);
                max_act = max_act.zip(mx).map(|(x, y)| x + y);
            }
            if le && min_act.is_some_and(|m| m > rhs) {
                return false;
            }
            if ge && max_act.is_some_and(|m| m < rhs) {
                return false;
            }
            for (i, &a) in c.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as i128;
                let (lo, hi) = bounds[i];
                let own_min = if a > 0 { Some(a * lo) } else { hi.map(|h| a * h) };
                let own_max = if a > 0 { hi.map(|h| a * h) } else { Some(a * lo) };
                // a x_i <= rhs - (min activity of the others)
                if le {
                    if let (Some(total), Some(own)) = (min_act, own_min) {
                        let cap = rhs - (total - own);
                        if a > 0 {
                            let new_hi = div_floor(cap, a);
                            if hi.is_none_or(|h| new_hi < h) {
                                bounds[i].1 = Some(new_hi);
                                changed = true;
                            }
                        } else {
                            let new_lo = div_ceil(cap, a);
                            if new_lo > bounds[i].0 {
                                bounds[i].0 = new_lo;
                                changed = true;
                            }
                        }
                    }
                }
                // a x_i >= rhs - (max activity of the others)
                if ge {
                    if let (Some(total), Some(own)) = (max_act, own_max) {
                        let floor = rhs - (total - own);
                        if a > 0 {
                            let new_lo = div_ceil(floor, a);
                            if new_lo > bounds[i].0 {
                                bounds[i].0 = new_lo;
                                changed = true;
                            }
                        } else {
                            let new_hi = div_floor(floor, a);
                            if bounds[i].1.is_none_or(|h| new_hi < h) {
                                bounds[i].1 = Some(new_hi);
                                changed = true;
                            }
                        }
                    }
                }
                if bounds[i].1.is_some_and(|h| h < bounds[i].0) {
                    return false;
                }
            }
        }
        if !changed {
            break;
        }
    }
    true
}

/// Finds an integer assignment satisfying every constraint, or `None` if
/// there is none. Fails with [`Error::InvalidInput`] when some variable has
/// no finite upper bound after propagation.
pub fn feasible(p: &IlpInstance) -> Result<Option<Vec<i64>>> {
    let n = p.var_count();
    if p.upper.len() != n || p.constraints.iter().any(|c| c.coeffs.len() != n) {
        return Err(Error::invalid("coefficient vectors must have one entry per variable"));
    }
    let mut bounds: Bounds = (0..n)
        .map(|i| (p.lower[i] as i128, p.upper[i].map(|u| u as i128)))
        .collect();
    if !propagate(p, &mut bounds) {
        return Ok(None);
    }
    if let Some(i) = bounds.iter().position(|b| b.1.is_none()) {
        return Err(Error::invalid(format!("variable {i} is unbounded")));
    }
    Ok(search(p, bounds))
}

fn search(p: &IlpInstance, bounds: Bounds) -> Option<Vec<i64>> {
    // most constrained first, ties by index
    let pick = bounds
        .iter()
        .enumerate()
        .filter(|(_, b)| b.1.unwrap() > b.0)
        .min_by_key(|(i, b)| (b.1.unwrap() - b.0, *i))
        .map(|(i, _)| i);
    let Some(var) = pick else {
        let x: Vec<i64> = bounds.iter().map(|b| b.0 as i64).collect();
        return p.is_satisfied_by(&x).then_some(x);
    };
    let (lo, hi) = (bounds[var].0, bounds[var].1.unwrap());
    for value in lo..=hi {
        let mut next = bounds.clone();
        next[var] = (value, Some(value));
        if propagate(p, &mut next) {
            if let Some(x) = search(p, next) {
                return Some(x);
            }
        }
    }
    None
}
