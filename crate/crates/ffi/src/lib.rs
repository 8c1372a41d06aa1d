//! C ABI over `dcc-spectral`.
//!
//! Graphs cross the boundary as the opaque `DccGraph` handle. Every fallible
//! call returns a `DccStatus`; on failure the thread-local message from
//! `dcc_last_error_message` says what went wrong. Strings handed out by the
//! library are NUL-terminated, owned by the caller and released with
//! `dcc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use dcc_spectral::cycles::{find_chorded_cycle, find_dcc, find_dcc1, find_k1_join_p4, CycleWitness, Target};
use dcc_spectral::families::{build_family, FamilyName, FamilySpec};
use dcc_spectral::search::{canonical_form, verify_edge_lemma, verify_theorem, TheoremId};
use dcc_spectral::spectral::spectral_radius;
use dcc_spectral::{graph6_decode, graph6_encode, Error, Graph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DccStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// graph6 input could not be decoded.
    Parse = 3,
    /// An argument was outside its domain (vertex, tolerance, family parameter, order).
    InvalidArgument = 4,
    /// The graph does not meet a precondition (empty, acyclic, disconnected).
    InvalidGraph = 5,
    /// A numerical routine failed to converge or find a root.
    Numerical = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DccTarget {
    Chorded = 0,
    Dcc = 1,
    Dcc1 = 2,
    K1p4 = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DccTheorem {
    Dcc = 0,
    Dcc1 = 1,
    K1p4 = 2,
    LemmaEdgeDcc = 3,
    LemmaEdgeDcc1 = 4,
}

/// Opaque graph handle.
pub struct DccGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DccStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Graph6 { .. } => DccStatus::Parse,
            Error::Acyclic | Error::Disconnected | Error::EmptyGraph => DccStatus::InvalidGraph,
            Error::NoConvergence { .. } | Error::NoRealRoot => DccStatus::Numerical,
            _ => DccStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, turning errors and panics into a status plus a message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DccStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            DccStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            DccStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(DccStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn graph_ref<'a>(g: *const DccGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(DccStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn write_string(out: *mut *mut c_char, s: String, what: &str) -> Result<(), Failure> {
    write_out(out, c_string(s), what)
}

unsafe fn write_graph(out: *mut *mut DccGraph, g: Graph) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(DccGraph { inner: g })));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call into the library on the same
/// thread; do not free.
#[no_mangle]
pub extern "C" fn dcc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dcc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dcc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decodes a graph6 string (at most 64 vertices).
///
/// # Safety
/// `graph6` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_from_graph6(graph6: *const c_char, out: *mut *mut DccGraph) -> DccStatus {
    guard(|| {
        let s = str_arg(graph6, "graph6")?;
        write_graph(out, graph6_decode(s.trim())?)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries). `edges` may be NULL when
/// `edge_count` is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut DccGraph,
) -> DccStatus {
    guard(|| {
        let flat = match (edges.is_null(), edge_count) {
            (_, 0) => &[][..],
            (true, _) => return Err(null("edges")),
            (false, m) => std::slice::from_raw_parts(edges, 2 * m),
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        write_graph(out, Graph::from_edges(n, &pairs)?)
    })
}

/// Builds a named family member. Parameters equal to 0 are treated as
/// unset. `name` takes the same spellings as the command line (`K11m`,
/// `Hnr`, `K1_rK3`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_family_build(
    name: *const c_char,
    n: usize,
    r: usize,
    t: usize,
    k: usize,
    out: *mut *mut DccGraph,
) -> DccStatus {
    guard(|| {
        let name: FamilyName = str_arg(name, "name")?.parse()?;
        let set = |v: usize| (v > 0).then_some(v);
        let spec = FamilySpec { name, n: set(n), r: set(r), t: set(t), k: set(k) };
        write_graph(out, build_family(&spec)?)
    })
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_free(g: *mut DccGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_order(g: *const DccGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_edge_count(g: *const DccGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// graph6 encoding of `g`. Free with `dcc_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_to_graph6(g: *const DccGraph, out: *mut *mut c_char) -> DccStatus {
    guard(|| write_string(out, graph6_encode(graph_ref(g)?), "out"))
}

/// Canonical graph6 form: equal for two graphs exactly when they are
/// isomorphic. Free with `dcc_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_canonical_form(g: *const DccGraph, out: *mut *mut c_char) -> DccStatus {
    guard(|| write_string(out, canonical_form(graph_ref(g)?).into_string(), "out"))
}

/// Spectral radius of the adjacency matrix, to tolerance `tol`.
///
/// # Safety
/// `g` must be a live handle; `rho` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_spectral_radius(g: *const DccGraph, tol: f64, rho: *mut f64) -> DccStatus {
    guard(|| {
        let r = spectral_radius(graph_ref(g)?, tol)?;
        write_out(rho, r.rho, "rho")
    })
}

/// Perron vector of a connected graph, written into `buf` of length `len`
/// (at least the order of `g`).
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_perron_vector(g: *const DccGraph, tol: f64, buf: *mut f64, len: usize) -> DccStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        if len < g.n() {
            return Err(Failure(DccStatus::InvalidArgument, format!("buffer holds {len} values, graph has {}", g.n())));
        }
        let x = spectral_radius(g, tol)?.perron.ok_or(Error::Disconnected)?;
        std::slice::from_raw_parts_mut(buf, x.len()).copy_from_slice(&x);
        Ok(())
    })
}

fn witness(g: &Graph, target: DccTarget) -> Option<String> {
    let json = |w: CycleWitness| serde_json::to_string(&w).expect("witness serializes");
    match target {
        DccTarget::Chorded => find_chorded_cycle(g).map(json),
        DccTarget::Dcc => find_dcc(g).map(json),
        DccTarget::Dcc1 => find_dcc1(g).map(json),
        DccTarget::K1p4 => find_k1_join_p4(g).map(|[hub, a, b, c, d]| {
            serde_json::json!({ "hub": hub, "path": [a, b, c, d] }).to_string()
        }),
    }
}

/// Searches `g` for `target`. `found` receives 1 or 0. When `witness_json`
/// is non-NULL it receives the witness as JSON (free with
/// `dcc_string_free`), or NULL when nothing was found. Cycle targets give
/// `{"cycle":[...],"chords":[[u,v],...]}`; `DCC_TARGET_K1P4` gives
/// `{"hub":h,"path":[a,b,c,d]}`.
///
/// # Safety
/// `g` must be a live handle; `found` must be writable; `witness_json` must
/// be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_graph_detect(
    g: *const DccGraph,
    target: DccTarget,
    found: *mut i32,
    witness_json: *mut *mut c_char,
) -> DccStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if found.is_null() {
            return Err(null("found"));
        }
        if witness_json.is_null() {
            let t = match target {
                DccTarget::Chorded => Target::Chorded,
                DccTarget::Dcc => Target::Dcc,
                DccTarget::Dcc1 => Target::Dcc1,
                DccTarget::K1p4 => Target::K1p4,
            };
            found.write(i32::from(t.occurs_in(g)));
        } else {
            let w = witness(g, target);
            found.write(i32::from(w.is_some()));
            witness_json.write(w.map_or(ptr::null_mut(), c_string));
        }
        Ok(())
    })
}

/// Runs the exhaustive check for `theorem` at order `n` with `jobs` worker
/// threads (0 picks the default). `verified` receives 1 or 0; when
/// `report_json` is non-NULL it receives the full report as JSON.
///
/// # Safety
/// `verified` must be writable; `report_json` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn dcc_verify_theorem(
    theorem: DccTheorem,
    n: usize,
    jobs: usize,
    verified: *mut i32,
    report_json: *mut *mut c_char,
) -> DccStatus {
    guard(|| {
        if verified.is_null() {
            return Err(null("verified"));
        }
        let id = match theorem {
            DccTheorem::Dcc => TheoremId::ThmDcc,
            DccTheorem::Dcc1 => TheoremId::ThmDcc1,
            DccTheorem::K1p4 => TheoremId::ThmK1p4,
            DccTheorem::LemmaEdgeDcc => TheoremId::LemmaEdgeDcc,
            DccTheorem::LemmaEdgeDcc1 => TheoremId::LemmaEdgeDcc1,
        };
        let jobs = (jobs > 0).then_some(jobs);
        let report = match theorem {
            DccTheorem::LemmaEdgeDcc | DccTheorem::LemmaEdgeDcc1 => verify_edge_lemma(id, n, jobs)?,
            _ => verify_theorem(id, n, jobs)?,
        };
        verified.write(i32::from(report.verified()));
        if !report_json.is_null() {
            report_json.write(c_string(serde_json::to_string(&report).expect("report serializes")));
        }
        Ok(())
    })
}
