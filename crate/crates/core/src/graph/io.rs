//! Text formats for graphs and embeddings.
//!
//! Graphs:
//!
//! ```text
//! c optional comments
//! p si <n> <m>
//! e <u> <v>        (m lines, 1-based endpoints)
//! ```
//!
//! Embeddings: one line `v <patternId> <hostId>` per pattern vertex, 1-based.

use std::fmt::Write as _;
use std::path::Path;

use super::{Embedding, Graph};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad {what}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if toks.next() != Some("si") {
                    return Err(parse_err(lineno, "expected `p si <n> <m>`"));
                }
                let n = parse_num(toks.next(), lineno, "vertex count")?;
                let m = parse_num(toks.next(), lineno, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                let u = parse_num(toks.next(), lineno, "endpoint")?;
                let v = parse_num(toks.next(), lineno, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) => return Err(parse_err(lineno, format!("unknown line type `{tok}`"))),
            None => {}
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::InvalidInput(msg) => parse_err(0, msg),
        other => other,
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "p si {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph_file(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, write_graph(g))?;
    Ok(())
}

pub fn parse_embedding(text: &str) -> Result<Embedding> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        if toks.next() != Some("v") {
            return Err(parse_err(lineno, "expected `v <patternId> <hostId>`"));
        }
        let p = parse_num(toks.next(), lineno, "pattern id")?;
        let h = parse_num(toks.next(), lineno, "host id")?;
        if p == 0 || h == 0 {
            return Err(parse_err(lineno, "ids are 1-based"));
        }
        pairs.push((p - 1, h - 1));
    }
    let n = pairs.len();
    let mut map = vec![usize::MAX; n];
    for (p, h) in pairs {
        if p >= n || map[p] != usize::MAX {
            return Err(parse_err(0, format!("pattern id {} repeated or out of range", p + 1)));
        }
        map[p] = h;
    }
    Ok(Embedding(map))
}

pub fn write_embedding(e: &Embedding) -> String {
    let mut out = String::new();
    for (p, &h) in e.as_slice().iter().enumerate() {
        let _ = writeln!(out, "v {} {}", p + 1, h + 1);
    }
    out
}
