use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run, Algorithm, Answer, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::io::read_graph_file;
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub host: Graph,
    pub pattern: Graph,
}

/// Loads every `<id>.host` / `<id>.pattern` pair in `dir`, sorted by id.
/// A host file without its pattern is an error.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut ids = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "host") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                ids.push(stem.to_string());
            }
        }
    }
    ids.sort();
    ids.into_iter()
        .map(|id| {
            let pattern_path = dir.join(format!("{id}.pattern"));
            if !pattern_path.exists() {
                return Err(Error::invalid(format!("{id}.host has no matching {id}.pattern")));
            }
            let host = read_graph_file(&dir.join(format!("{id}.host")))?;
            let pattern = read_graph_file(&pattern_path)?;
            Ok(CorpusEntry { id, host, pattern })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub id: String,
    pub algorithm: String,
    /// Absent when the solver raised an error.
    pub answer: Option<Answer>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Vec<usize>>,
    pub seed: u64,
    pub guesses_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_millis: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmSummary {
    pub algorithm: String,
    pub instances: usize,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
    pub class_violations: usize,
    pub other_errors: usize,
    /// Definitive answers that match the instance consensus.
    pub agreements: usize,
    pub disagreements: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub total_millis: Option<f64>,
}

impl AlgorithmSummary {
    pub fn agreement_rate(&self) -> Option<f64> {
        let total = self.agreements + self.disagreements;
        (total > 0).then(|| self.agreements as f64 / total as f64)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub seed: u64,
    pub repeats: usize,
    pub rows: Vec<BenchRow>,
    pub summary: Vec<AlgorithmSummary>,
}

/// Runs every algorithm on every instance. Rows come out ordered by
/// instance and then by the order of `algorithms`, whatever order they
/// finish in. Instance `i` gets the seed drawn from stream `i` of a
/// generator seeded with `opts.seed`. Wall-clock fields are filled only
/// when `timings` is set, so that untimed reports are reproducible byte for
/// byte.
pub fn bench(corpus: &[CorpusEntry], algorithms: &[Algorithm], opts: &SolveOptions, timings: bool) -> BenchReport {
    let jobs: Vec<(usize, Algorithm)> =
        (0..corpus.len()).flat_map(|i| algorithms.iter().map(move |&a| (i, a))).collect();
    let rows: Vec<BenchRow> = jobs
        .par_iter()
        .map(|&(i, algo)| {
            let inst = &corpus[i];
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(i as u64);
            let seed = rng.next_u64();
            let o = SolveOptions { seed, ..opts.clone() };
            let mut row = BenchRow {
                id: inst.id.clone(),
                algorithm: algo.name().to_string(),
                answer: None,
                error: None,
                embedding: None,
                seed,
                guesses_explored: 0,
                elapsed_millis: None,
            };
            match run(algo, &inst.host, &inst.pattern, &o) {
                Ok(r) => {
                    row.answer = Some(r.answer);
                    row.embedding = r.embedding;
                    row.guesses_explored = r.guesses_explored;
                    row.elapsed_millis = timings.then_some(r.elapsed_millis);
                }
                Err(e) => row.error = Some(error_label(&e)),
            }
            row
        })
        .collect();
    let summary = summarize(corpus, algorithms, &rows, timings);
    BenchReport { seed: opts.seed, repeats: opts.repeats, rows, summary }
}

fn error_label(e: &Error) -> String {
    match e {
        Error::ClassViolation(msg) => format!("ClassViolation: {msg}"),
        other => format!("Error: {other}"),
    }
}

fn summarize(corpus: &[CorpusEntry], algorithms: &[Algorithm], rows: &[BenchRow], timings: bool) -> Vec<AlgorithmSummary> {
    // a verified "yes" settles an instance; otherwise any "no" stands
    let mut consensus: BTreeMap<&str, Answer> = BTreeMap::new();
    for r in rows {
        match r.answer {
            Some(Answer::Yes) => {
                consensus.insert(&r.id, Answer::Yes);
            }
            Some(Answer::No) => {
                consensus.entry(&r.id).or_insert(Answer::No);
            }
            _ => {}
        }
    }
    algorithms
        .iter()
        .map(|a| {
            let mut s = AlgorithmSummary {
                algorithm: a.name().to_string(),
                instances: corpus.len(),
                yes: 0,
                no: 0,
                unknown: 0,
                class_violations: 0,
                other_errors: 0,
                agreements: 0,
                disagreements: 0,
                total_millis: timings.then_some(0.0),
            };
            for r in rows.iter().filter(|r| r.algorithm == a.name()) {
                if let (Some(t), Some(e)) = (s.total_millis.as_mut(), r.elapsed_millis) {
                    *t += e;
                }
                match (r.answer, &r.error) {
                    (Some(Answer::Unknown), _) => s.unknown += 1,
                    (Some(ans), _) => {
                        if ans == Answer::Yes {
                            s.yes += 1;
                        } else {
                            s.no += 1;
                        }
                        if consensus.get(r.id.as_str()) == Some(&ans) {
                            s.agreements += 1;
                        } else {
                            s.disagreements += 1;
                        }
                    }
                    (None, Some(e)) if e.starts_with("ClassViolation") => s.class_violations += 1,
                    (None, _) => s.other_errors += 1,
                }
            }
            s
        })
        .collect()
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned per-algorithm table.
    pub fn to_text(&self) -> String {
        let header = ["algorithm", "instances", "yes", "no", "unknown", "class-viol", "errors", "agree"];
        let mut table: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for s in &self.summary {
            let mut row = vec![
                s.algorithm.clone(),
                s.instances.to_string(),
                s.yes.to_string(),
                s.no.to_string(),
                s.unknown.to_string(),
                s.class_violations.to_string(),
                s.other_errors.to_string(),
                s.agreement_rate().map_or("-".into(), |r| format!("{:.1}%", 100.0 * r)),
            ];
            if let Some(t) = s.total_millis {
                row.push(format!("{t:.1}ms"));
            }
            table.push(row);
        }
        if self.summary.iter().any(|s| s.total_millis.is_some()) {
            table[0].push("time".into());
        }
        let cols = table.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> =
            (0..cols).map(|c| table.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &table {
            let line: Vec<String> = row.iter().enumerate().map(|(c, cell)| format!("{cell:>w$}", w = widths[c])).collect();
            let _ = writeln!(out, "{}", line.join("  "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    use crate::harness::{generate, ClassSpec};

    #[test]
    fn empty_corpus_gives_empty_report() {
        let r = bench(&[], &[Algorithm::Oracle], &SolveOptions::default(), false);
        assert!(r.rows.is_empty());
        assert_eq!(r.summary[0].instances, 0);
    }

    #[test]
    fn planted_p4free_agree_and_class_violations_are_separate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut corpus: Vec<CorpusEntry> = (0..10)
            .map(|i| {
                let x = generate(ClassSpec::P4Free, 20, &mut rng, true);
                CorpusEntry { id: format!("p{i:02}"), host: x.host, pattern: x.pattern }
            })
            .collect();
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        corpus.push(CorpusEntry { id: "z".into(), host: p5.clone(), pattern: p5 });
        let r = bench(&corpus, &[Algorithm::P4free, Algorithm::Oracle], &SolveOptions::default(), false);
        let p4 = &r.summary[0];
        assert_eq!((p4.yes, p4.class_violations, p4.disagreements), (10, 1, 0));
        assert_eq!(r.summary[1].agreement_rate(), Some(1.0));
        assert_eq!(r.to_json(), bench(&corpus, &[Algorithm::P4free, Algorithm::Oracle], &SolveOptions::default(), false).to_json());
    }
}
