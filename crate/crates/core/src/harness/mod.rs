//! Algorithm selection, result reporting, instance generation and
//! benchmarking shared by the command-line tool and the FFI layer.

mod bench;
mod dispatch;
mod generate;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{is_p4_free, verify_embedding, Embedding, Graph};
use crate::recognize::{p4_hitting_number, vertex_integrity};
use crate::solver;

pub use bench::{bench, load_corpus, BenchReport, BenchRow, CorpusEntry};
pub use dispatch::{dispatch, parse_forbidden, Route};
pub use generate::{enumerate_small_graphs, generate, random_subgraph, ClassSpec, Generated};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    /// Process exit code: 0 yes, 1 no, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
            Answer::Unknown => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Auto,
    P4free,
    P4kp3,
    Vi,
    Hitting,
    Nd,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Auto,
        Algorithm::P4free,
        Algorithm::P4kp3,
        Algorithm::Vi,
        Algorithm::Hitting,
        Algorithm::Nd,
        Algorithm::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::P4free => "p4free",
            Algorithm::P4kp3 => "p4kp3",
            Algorithm::Vi => "vi",
            Algorithm::Hitting => "hitting",
            Algorithm::Nd => "nd",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Class parameter; when absent `vi` and `hitting` compute the host's
    /// own value, `p4kp3` requires it.
    pub param: Option<usize>,
    /// Forbidden linear forest as path orders, used by `auto`.
    pub forbidden: Option<Vec<usize>>,
    pub seed: u64,
    pub repeats: usize,
    pub budget: u64,
    /// Let `auto` fall back to the oracle on unresolved cases.
    pub fallback: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            param: None,
            forbidden: None,
            seed: 0,
            repeats: 10,
            budget: Budget::DEFAULT_LIMIT,
            fallback: false,
        }
    }
}

/// Outcome of one solver run. `embedding` is present iff the answer is yes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub answer: Answer,
    /// Host vertex per pattern vertex, 0-based.
    pub embedding: Option<Vec<usize>>,
    pub algorithm: String,
    pub parameters: BTreeMap<String, u64>,
    pub seed: Option<u64>,
    pub elapsed_millis: f64,
    pub guesses_explored: u64,
    /// Routing notes, hardness warnings, reasons for "unknown".
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl SolveResult {
    fn new(algorithm: Algorithm) -> Self {
        SolveResult {
            answer: Answer::Unknown,
            embedding: None,
            algorithm: algorithm.name().to_string(),
            parameters: BTreeMap::new(),
            seed: None,
            elapsed_millis: 0.0,
            guesses_explored: 0,
            notes: Vec::new(),
        }
    }

    pub fn unknown(algorithm: Algorithm, note: impl Into<String>) -> Self {
        let mut r = SolveResult::new(algorithm);
        r.notes.push(note.into());
        r
    }

    pub fn embedding(&self) -> Option<Embedding> {
        self.embedding.clone().map(Embedding)
    }
}

/// Runs one concrete solver. Budget exhaustion becomes an "unknown" answer;
/// class violations and malformed input are errors.
pub fn run(algorithm: Algorithm, g: &Graph, q: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    if algorithm == Algorithm::Auto {
        return match &opts.forbidden {
            Some(h) => dispatch(g, q, h, opts),
            None => {
                let algo = if is_p4_free(g) { Algorithm::P4free } else { Algorithm::Oracle };
                let mut r = run(algo, g, q, opts)?;
                r.notes.insert(0, format!("no forbidden minor given, selected {algo}"));
                Ok(r)
            }
        };
    }
    let start = Instant::now();
    let budget = Budget::new(opts.budget);
    let mut res = SolveResult::new(algorithm);
    let outcome = match algorithm {
        Algorithm::P4free => solver::solve_p4free(g, q),
        Algorithm::P4kp3 => {
            let k = opts.param.ok_or_else(|| Error::invalid("p4kp3 needs --param k"))?;
            res.parameters.insert("k".into(), k as u64);
            solver::solve_p4_union_kp3(g, q, k, &budget)
        }
        Algorithm::Vi => {
            let k = match opts.param {
                Some(k) => k,
                None => vertex_integrity(g, g.n()).unwrap_or(0).max(vertex_integrity(q, q.n()).unwrap_or(0)),
            };
            res.parameters.insert("k".into(), k as u64);
            solver::solve_vi(g, q, k, &budget)
        }
        Algorithm::Hitting => {
            let k = match opts.param {
                Some(k) => k,
                None => p4_hitting_number(g, g.n()).unwrap_or(g.n()),
            };
            res.parameters.insert("k".into(), k as u64);
            res.parameters.insert("repeats".into(), opts.repeats as u64);
            res.seed = Some(opts.seed);
            solver::solve_hitting(g, q, k, opts.seed, opts.repeats, &budget)
        }
        Algorithm::Nd => solver::solve_nd(g, q, &budget),
        Algorithm::Oracle => solver::solve_backtracking(g, q, &budget),
        Algorithm::Auto => unreachable!(),
    };
    res.guesses_explored = budget.used();
    match outcome {
        Ok(Some(e)) => {
            assert!(verify_embedding(q, g, &e), "{algorithm} produced an invalid embedding");
            res.answer = Answer::Yes;
            res.embedding = Some(e.0);
        }
        Ok(None) => res.answer = Answer::No,
        Err(Error::BudgetExceeded(limit)) => {
            res.notes.push(format!("search budget of {limit} exhausted"));
        }
        Err(e) => return Err(e),
    }
    res.elapsed_millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(res)
}
