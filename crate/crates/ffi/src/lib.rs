//! C ABI over the `subiso` solvers.
//!
//! Graphs and results are opaque heap objects owned by the caller and
//! released with their `*_free` function. Fallible calls return an
//! [`SiStatus`]; on failure a description is available from
//! [`si_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use subiso::graph::io::{parse_graph, read_graph_file, write_graph};
use subiso::graph::{is_p4_free, verify_embedding};
use subiso::harness::{run, Algorithm, Answer, SolveOptions, SolveResult};
use subiso::recognize::{p4_hitting_number, twin_partition, vertex_integrity};
use subiso::{Budget, Embedding, Error, Graph};

/// Opaque graph handle.
pub struct SiGraph(Graph);

/// Opaque solve result handle.
pub struct SiResult(SolveResult);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiStatus {
    Ok = 0,
    /// A required pointer was null or a value was out of range.
    InvalidArgument = 1,
    Parse = 2,
    InvalidInput = 3,
    /// An input lies outside the class the chosen solver handles.
    ClassViolation = 4,
    Io = 5,
    /// A bug inside the library; the message carries the panic text.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiAnswer {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiAlgorithm {
    Auto = 0,
    P4free = 1,
    P4kp3 = 2,
    Vi = 3,
    Hitting = 4,
    Nd = 5,
    Oracle = 6,
}

/// Solver options. Obtain defaults from [`si_solve_options_default`].
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct SiSolveOptions {
    pub algorithm: SiAlgorithm,
    /// Class parameter, or -1 for none.
    pub param: i64,
    pub seed: u64,
    pub repeats: u32,
    pub budget: u64,
    /// Let `auto` fall back to the oracle on unresolved cases.
    pub fallback: bool,
    /// Forbidden linear forest as path orders; may be null when
    /// `forbidden_len` is 0.
    pub forbidden: *const usize,
    pub forbidden_len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SiStatus, msg: impl Into<String>) -> SiStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> SiStatus {
    match e {
        Error::ClassViolation(_) => SiStatus::ClassViolation,
        Error::BudgetExceeded(_) | Error::InvalidInput(_) => SiStatus::InvalidInput,
        Error::Parse { .. } => SiStatus::Parse,
        Error::Io(_) => SiStatus::Io,
    }
}

/// Runs `f`, turning library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), SiStatus>) -> SiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SiStatus::Ok,
        Ok(Err(s)) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(SiStatus::Internal, msg)
        }
    }
}

fn lib<T>(r: subiso::Result<T>) -> Result<T, SiStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn as_str<'a>(s: *const c_char) -> Result<&'a str, SiStatus> {
    if s.is_null() {
        return Err(fail(SiStatus::InvalidArgument, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(SiStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn graph<'a>(g: *const SiGraph) -> Result<&'a Graph, SiStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| fail(SiStatus::InvalidArgument, "null graph"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), SiStatus> {
    if out.is_null() {
        return Err(fail(SiStatus::InvalidArgument, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn si_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (0-based endpoints).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_graph_new(n: usize, edges: *const usize, edge_count: usize, out: *mut *mut SiGraph) -> SiStatus {
    guard(|| {
        if edges.is_null() && edge_count > 0 {
            return Err(fail(SiStatus::InvalidArgument, "null edge array"));
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = lib(Graph::from_edges(n, &pairs))?;
        put(out, SiGraph(g))
    })
}

/// Parses a graph in the `p si <n> <m>` / `e <u> <v>` text format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_graph_parse(text: *const c_char, out: *mut *mut SiGraph) -> SiStatus {
    guard(|| {
        let g = lib(parse_graph(as_str(text)?))?;
        put(out, SiGraph(g))
    })
}

/// Reads a graph file in the text format.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn si_graph_read_file(path: *const c_char, out: *mut *mut SiGraph) -> SiStatus {
    guard(|| {
        let g = lib(read_graph_file(std::path::Path::new(as_str(path)?)))?;
        put(out, SiGraph(g))
    })
}

/// # Safety
/// `g` must come from this library and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn si_graph_free(g: *mut SiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn si_graph_vertex_count(g: *const SiGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn si_graph_edge_count(g: *const SiGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// The graph in text format; free with [`si_string_free`]. Null on a null
/// handle.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn si_graph_to_string(g: *const SiGraph) -> *mut c_char {
    g.as_ref().map_or(ptr::null_mut(), |g| owned_string(write_graph(&g.0)))
}

/// # Safety
/// `s` must come from this library and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn si_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn si_solve_options_default() -> SiSolveOptions {
    let d = SolveOptions::default();
    SiSolveOptions {
        algorithm: SiAlgorithm::Auto,
        param: -1,
        seed: d.seed,
        repeats: d.repeats as u32,
        budget: Budget::DEFAULT_LIMIT,
        fallback: d.fallback,
        forbidden: ptr::null(),
        forbidden_len: 0,
    }
}

fn algorithm(a: SiAlgorithm) -> Algorithm {
    match a {
        SiAlgorithm::Auto => Algorithm::Auto,
        SiAlgorithm::P4free => Algorithm::P4free,
        SiAlgorithm::P4kp3 => Algorithm::P4kp3,
        SiAlgorithm::Vi => Algorithm::Vi,
        SiAlgorithm::Hitting => Algorithm::Hitting,
        SiAlgorithm::Nd => Algorithm::Nd,
        SiAlgorithm::Oracle => Algorithm::Oracle,
    }
}

/// Decides whether `pattern` is a subgraph of `host`. Budget exhaustion is
/// not an error: the result answers [`SiAnswer::Unknown`].
///
/// # Safety
/// `host` and `pattern` must be live graph handles, `options` null or a
/// valid options struct whose `forbidden` array is readable, and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn si_solve(
    host: *const SiGraph,
    pattern: *const SiGraph,
    options: *const SiSolveOptions,
    out: *mut *mut SiResult,
) -> SiStatus {
    guard(|| {
        let g = graph(host)?;
        let q = graph(pattern)?;
        let o = options.as_ref().copied().unwrap_or_else(|| si_solve_options_default());
        if o.forbidden.is_null() && o.forbidden_len > 0 {
            return Err(fail(SiStatus::InvalidArgument, "null forbidden array"));
        }
        let forbidden =
            (o.forbidden_len > 0).then(|| std::slice::from_raw_parts(o.forbidden, o.forbidden_len).to_vec());
        let opts = SolveOptions {
            param: usize::try_from(o.param).ok(),
            forbidden,
            seed: o.seed,
            repeats: o.repeats as usize,
            budget: o.budget,
            fallback: o.fallback,
        };
        let r = lib(run(algorithm(o.algorithm), g, q, &opts))?;
        put(out, SiResult(r))
    })
}

/// # Safety
/// `r` must be a live result handle or null (answers unknown).
#[no_mangle]
pub unsafe extern "C" fn si_result_answer(r: *const SiResult) -> SiAnswer {
    match r.as_ref().map(|r| r.0.answer) {
        Some(Answer::Yes) => SiAnswer::Yes,
        Some(Answer::No) => SiAnswer::No,
        _ => SiAnswer::Unknown,
    }
}

/// Copies up to `capacity` host vertices of the embedding (one per pattern
/// vertex, 0-based) into `buf` and returns the embedding length, which is 0
/// unless the answer is yes.
///
/// # Safety
/// `r` must be a live result handle or null; `buf` must have room for
/// `capacity` values (may be null when `capacity` is 0).
#[no_mangle]
pub unsafe extern "C" fn si_result_embedding(r: *const SiResult, buf: *mut usize, capacity: usize) -> usize {
    let Some(e) = r.as_ref().and_then(|r| r.0.embedding.as_ref()) else {
        return 0;
    };
    if !buf.is_null() {
        let k = capacity.min(e.len());
        ptr::copy_nonoverlapping(e.as_ptr(), buf, k);
    }
    e.len()
}

/// # Safety
/// `r` must be a live result handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn si_result_guesses_explored(r: *const SiResult) -> u64 {
    r.as_ref().map_or(0, |r| r.0.guesses_explored)
}

/// The result as JSON; free with [`si_string_free`].
///
/// # Safety
/// `r` must be a live result handle or null (returns null).
#[no_mangle]
pub unsafe extern "C" fn si_result_to_json(r: *const SiResult) -> *mut c_char {
    r.as_ref()
        .and_then(|r| serde_json::to_string(&r.0).ok())
        .map_or(ptr::null_mut(), owned_string)
}

/// # Safety
/// `r` must come from this library and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn si_result_free(r: *mut SiResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// True iff `map` (one host vertex per pattern vertex) is an injective,
/// edge-preserving map from `pattern` into `host`.
///
/// # Safety
/// Handles must be live or null (returns false); `map` must hold `len`
/// readable values.
#[no_mangle]
pub unsafe extern "C" fn si_verify_embedding(
    host: *const SiGraph,
    pattern: *const SiGraph,
    map: *const usize,
    len: usize,
) -> bool {
    let (Some(g), Some(q)) = (host.as_ref(), pattern.as_ref()) else {
        return false;
    };
    if map.is_null() && len > 0 {
        return false;
    }
    let m = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(map, len).to_vec() };
    verify_embedding(&q.0, &g.0, &Embedding(m))
}

/// # Safety
/// `g` must be a live graph handle or null (returns false).
#[no_mangle]
pub unsafe extern "C" fn si_is_p4_free(g: *const SiGraph) -> bool {
    g.as_ref().is_some_and(|g| is_p4_free(&g.0))
}

/// Vertex integrity if it is at most `max_k`, else -1.
///
/// # Safety
/// `g` must be a live graph handle or null (returns -1).
#[no_mangle]
pub unsafe extern "C" fn si_vertex_integrity(g: *const SiGraph, max_k: usize) -> i64 {
    g.as_ref().and_then(|g| vertex_integrity(&g.0, max_k)).map_or(-1, |k| k as i64)
}

/// Size of a smallest `P4`-hitting set if it is at most `max_k`, else -1.
///
/// # Safety
/// `g` must be a live graph handle or null (returns -1).
#[no_mangle]
pub unsafe extern "C" fn si_p4_hitting_number(g: *const SiGraph, max_k: usize) -> i64 {
    g.as_ref().and_then(|g| p4_hitting_number(&g.0, max_k)).map_or(-1, |k| k as i64)
}

/// Number of twin classes.
///
/// # Safety
/// `g` must be a live graph handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn si_neighborhood_diversity(g: *const SiGraph) -> usize {
    g.as_ref().map_or(0, |g| twin_partition(&g.0).len())
}
