//! C ABI over the construction, certification, and bound routines.
//!
//! Conventions, which the generated header restates per function:
//!
//! * Handles are opaque. Every handle or string handed out through an out
//!   parameter is owned by the caller and released with the matching free
//!   function. No function returns a borrowed pointer.
//! * Fallible functions return a DdStatus. On any status other than ok
//!   the thread keeps a human-readable message, readable through
//!   dd_last_error_message until the next failing call on that thread.
//! * Bound values can exceed 64 bits, so they come back as decimal strings
//!   (rationals as "p/q" when not integral).
//! * Panics never cross the boundary: they are caught and reported as the
//!   panic status.
//!
//! Pointer arguments must be either null (caught, reported as the null
//! argument status) or valid for their type; a dangling non-null pointer is
//! undefined behaviour, as in any C interface.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use degdiam::bounds::{
    arboricity_upper, avg_degree_upper, format_rational, min_degree_upper, moore_bound,
    separation_upper,
};
use degdiam::certify::arboricity::arboricity_exact;
use degdiam::certify::report::certify_result;
use degdiam::constructions::{
    arboricity_diam2_family, arboricity_family, avg_degree_family, de_bruijn_family,
    three_colourable_debruijn, treewidth_even_family, treewidth_odd_family,
    triangle_free_debruijn, zp2_family, zp3_family, ConstructionResult, FamilyError,
};
use degdiam::fileio::{metadata_json, parse_edge_list, write_edge_list};
use degdiam::graph::{Diameter, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Outcome of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DdStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A numeric argument lies outside the function's domain.
    InvalidArgument = 2,
    /// A construction's parameter inequality does not hold.
    Precondition = 3,
    /// The construction would exceed the vertex budget.
    BudgetExceeded = 4,
    /// Text input does not parse; the message names line and defect.
    ParseError = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Graph handle. Create with dd_graph_parse or dd_construction_graph,
/// release with dd_graph_free.
pub struct DdGraph(Graph);

/// A constructed graph together with its claims and witnesses. Release
/// with dd_construction_free.
pub struct DdConstruction(ConstructionResult);

type Fail = (DdStatus, String);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean = msg.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).expect("nul stripped"));
}

/// Message for the most recent failing call on this thread, empty if none
/// failed yet. The pointer stays valid until the next failing call on the
/// same thread; do not free it.
#[no_mangle]
pub unsafe extern "C" fn dd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

fn guarded(f: impl FnOnce() -> Result<(), Fail>) -> DdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DdStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic with a non-string payload".to_string());
            set_error(&msg);
            DdStatus::Panic
        }
    }
}

unsafe fn require_ref<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or((DdStatus::NullArgument, format!("{name} must not be null")))
}

unsafe fn require_out<'a, T>(p: *mut T, name: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or((DdStatus::NullArgument, format!("{name} must not be null")))
}

unsafe fn require_str<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err((DdStatus::NullArgument, format!("{name} must not be null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (DdStatus::InvalidArgument, format!("{name} must be valid UTF-8")))
}

fn give_string(out: &mut *mut c_char, s: String) {
    let clean = s.replace('\0', " ");
    *out = CString::new(clean).expect("nul stripped").into_raw();
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an edge list ("n m" header, one "u v" line per edge) into a new
/// graph handle.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_parse(
    text: *const c_char,
    out: *mut *mut DdGraph,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let text = require_str(text, "text")?;
        let g = parse_edge_list(text)
            .map_err(|e| (DdStatus::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(DdGraph(g)));
        Ok(())
    })
}

/// Releases a graph handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_free(g: *mut DdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes the graph back out in canonical edge-list form.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_edge_list(
    g: *const DdGraph,
    out: *mut *mut c_char,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let g = require_ref(g, "g")?;
        give_string(out, write_edge_list(&g.0));
        Ok(())
    })
}

/// Number of vertices; 0 if the handle is null.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_vertex_count(g: *const DdGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.vertex_count() as u64)
}

/// Number of edges; 0 if the handle is null.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_edge_count(g: *const DdGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.edge_count() as u64)
}

/// Largest vertex degree; 0 if the handle is null.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_max_degree(g: *const DdGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.max_degree() as u64)
}

/// Smallest vertex degree; 0 if the handle is null.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_min_degree(g: *const DdGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.min_degree() as u64)
}

/// Writes the diameter to `out`, or -1 when the graph is disconnected (or
/// empty) and has no finite diameter.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_diameter(g: *const DdGraph, out: *mut i64) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let g = require_ref(g, "g")?;
        *out = match g.0.diameter() {
            Diameter::Finite(d) => d as i64,
            Diameter::Infinite => -1,
        };
        Ok(())
    })
}

/// True iff every vertex pair lies within distance `k`. Cheaper than
/// computing the diameter when only a threshold matters.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_diameter_at_most(
    g: *const DdGraph,
    k: u32,
    out: *mut bool,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let g = require_ref(g, "g")?;
        *out = g.0.diameter_at_most(k);
        Ok(())
    })
}

/// True iff the graph contains a triangle.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_has_triangle(
    g: *const DdGraph,
    out: *mut bool,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let g = require_ref(g, "g")?;
        *out = g.0.has_triangle().is_some();
        Ok(())
    })
}

/// Exact arboricity, by matroid-partition search. Cost grows with the
/// densest subgraph, so expect seconds on graphs past a few thousand
/// vertices.
#[no_mangle]
pub unsafe extern "C" fn dd_graph_arboricity(
    g: *const DdGraph,
    out: *mut u64,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let g = require_ref(g, "g")?;
        *out = arboricity_exact(&g.0) as u64;
        Ok(())
    })
}

unsafe fn construct_with(
    out: *mut *mut DdConstruction,
    build: impl FnOnce() -> Result<ConstructionResult, FamilyError>,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let res = build().map_err(|e| {
            let status = match &e {
                FamilyError::Precondition(_) => DdStatus::Precondition,
                FamilyError::BudgetExceeded { .. } => DdStatus::BudgetExceeded,
            };
            (status, e.to_string())
        })?;
        *out = Box::into_raw(Box::new(DdConstruction(res)));
        Ok(())
    })
}

/// Word graph on r symbols and words of length k: r^k vertices, degree at
/// most 2r, diameter exactly k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_debruijn(
    r: u64,
    k: u32,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || de_bruijn_family(r, k, max_vertices))
}

/// Average degree at most d, maximum degree at most delta, diameter at
/// most k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_avg_degree(
    d: u64,
    k: u32,
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || avg_degree_family(d, k, delta, max_vertices))
}

/// Arboricity at most b (with a star-forest witness), maximum degree at
/// most delta, diameter at most the even k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_arboricity(
    b: u64,
    k: u32,
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || arboricity_family(b, k, delta, max_vertices))
}

/// Arboricity at most b and diameter at most 2.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_arboricity_diam2(
    b: u64,
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || arboricity_diam2_family(b, delta, max_vertices))
}

/// Treewidth at most t (with an elimination-order witness) and odd
/// diameter at most k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_treewidth_odd(
    t: u64,
    k: u32,
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || treewidth_odd_family(t, k, delta, max_vertices))
}

/// Treewidth at most t (with an elimination-order witness) and even
/// diameter at most k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_treewidth_even(
    t: u64,
    k: u32,
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || treewidth_even_family(t, k, delta, max_vertices))
}

/// Properly 3-colourable family of maximum degree at most delta and
/// diameter at most k.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_three_colourable(
    delta: u64,
    k: u32,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || three_colourable_debruijn(delta, k, max_vertices))
}

/// Triangle-free 3-colourable family of maximum degree at most delta and
/// diameter at most k (k at least 4).
#[no_mangle]
pub unsafe extern "C" fn dd_construct_triangle_free(
    delta: u64,
    k: u32,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || triangle_free_debruijn(delta, k, max_vertices))
}

/// Triangle-free modular-shift family of diameter exactly 2.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_zp2(
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || zp2_family(delta, max_vertices))
}

/// Triangle-free modular-shift family of diameter exactly 3.
#[no_mangle]
pub unsafe extern "C" fn dd_construct_zp3(
    delta: u64,
    max_vertices: u64,
    out: *mut *mut DdConstruction,
) -> DdStatus {
    construct_with(out, || zp3_family(delta, max_vertices))
}

/// Releases a construction handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dd_construction_free(res: *mut DdConstruction) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Copies the constructed graph into a new independent handle.
#[no_mangle]
pub unsafe extern "C" fn dd_construction_graph(
    res: *const DdConstruction,
    out: *mut *mut DdGraph,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let res = require_ref(res, "res")?;
        *out = Box::into_raw(Box::new(DdGraph(res.0.graph.clone())));
        Ok(())
    })
}

fn witness_kinds(res: &ConstructionResult) -> Vec<&'static str> {
    let mut kinds = Vec::new();
    if res.coloring.is_some() {
        kinds.push("coloring");
    }
    if res.forest.is_some() {
        kinds.push("forest");
    }
    if res.chordal.is_some() {
        kinds.push("chordal");
    }
    if res.cover.is_some() {
        kinds.push("cover");
    }
    kinds
}

/// JSON object with the construction's family name, parameters, sizes,
/// claims, and the kinds of witnesses it carries.
#[no_mangle]
pub unsafe extern "C" fn dd_construction_metadata_json(
    res: *const DdConstruction,
    out: *mut *mut c_char,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let res = require_ref(res, "res")?;
        let meta = metadata_json(&res.0, &witness_kinds(&res.0));
        give_string(out, meta.to_string());
        Ok(())
    })
}

/// Re-derives every claim from the graph alone and writes the verdict to
/// `out_pass`. When the verdict is false the failing checks are listed in
/// the last-error message; the call itself still returns ok.
#[no_mangle]
pub unsafe extern "C" fn dd_construction_certify(
    res: *const DdConstruction,
    out_pass: *mut bool,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out_pass, "out_pass")?;
        let res = require_ref(res, "res")?;
        let report = certify_result(&res.0);
        if !report.pass {
            let failed: Vec<String> = report
                .lines
                .iter()
                .filter(|l| !l.pass)
                .map(|l| format!("{}: {}", l.name, l.detail))
                .collect();
            set_error(&failed.join("; "));
        }
        *out = report.pass;
        Ok(())
    })
}

/// Full certification report as JSON: overall pass flag plus one
/// name/pass/detail record per check.
#[no_mangle]
pub unsafe extern "C" fn dd_construction_certify_json(
    res: *const DdConstruction,
    out: *mut *mut c_char,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let res = require_ref(res, "res")?;
        let report = certify_result(&res.0);
        let checks: Vec<serde_json::Value> = report
            .lines
            .iter()
            .map(|l| {
                serde_json::json!({"name": l.name, "pass": l.pass, "detail": l.detail})
            })
            .collect();
        let doc = serde_json::json!({"pass": report.pass, "checks": checks});
        give_string(out, doc.to_string());
        Ok(())
    })
}

type BoundFn = dyn FnOnce() -> Result<BigInt, degdiam::bounds::BoundError>;

unsafe fn bound_with(out: *mut *mut c_char, eval: Box<BoundFn>) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        let v = eval().map_err(|e| (DdStatus::InvalidArgument, e.to_string()))?;
        give_string(out, v.to_string());
        Ok(())
    })
}

/// Largest vertex count any graph of maximum degree delta (at least 3) and
/// diameter k can have, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn dd_bound_moore(
    delta: u64,
    k: u32,
    out: *mut *mut c_char,
) -> DdStatus {
    bound_with(out, Box::new(move || moore_bound(delta, k)))
}

/// Vertex-count bound for graphs of minimum degree at least min_degree,
/// maximum degree delta, diameter k.
#[no_mangle]
pub unsafe extern "C" fn dd_bound_min_degree(
    min_degree: u64,
    delta: u64,
    k: u32,
    out: *mut *mut c_char,
) -> DdStatus {
    bound_with(out, Box::new(move || min_degree_upper(min_degree, delta, k)))
}

/// Vertex-count bound for graphs of average degree at most num/den,
/// maximum degree delta, diameter k. The value is a rational, formatted
/// "p/q" when not integral.
#[no_mangle]
pub unsafe extern "C" fn dd_bound_avg_degree(
    num: u64,
    den: u64,
    delta: u64,
    k: u32,
    out: *mut *mut c_char,
) -> DdStatus {
    guarded(|| {
        let out = require_out(out, "out")?;
        if den == 0 {
            return Err((DdStatus::InvalidArgument, "den must not be zero".to_string()));
        }
        let d = BigRational::new(BigInt::from(num), BigInt::from(den));
        let v = avg_degree_upper(&d, delta, k)
            .map_err(|e| (DdStatus::InvalidArgument, e.to_string()))?;
        give_string(out, format_rational(&v));
        Ok(())
    })
}

/// Vertex-count bound for graphs of arboricity at most b, diameter k,
/// maximum degree delta.
#[no_mangle]
pub unsafe extern "C" fn dd_bound_arboricity(
    b: u64,
    k: u32,
    delta: u64,
    out: *mut *mut c_char,
) -> DdStatus {
    bound_with(out, Box::new(move || arboricity_upper(b, k, delta)))
}

/// Vertex-count bound for graphs in which every subgraph has a balanced
/// separator of at most s vertices, with maximum degree delta and
/// diameter k.
#[no_mangle]
pub unsafe extern "C" fn dd_bound_separation(
    s: u64,
    delta: u64,
    k: u32,
    out: *mut *mut c_char,
) -> DdStatus {
    bound_with(out, Box::new(move || separation_upper(s, delta, k)))
}
