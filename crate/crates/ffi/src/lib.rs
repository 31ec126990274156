//! C ABI over the `twofold` library.
//!
//! Graphs are opaque `TfGraph` handles created by `tf_graph_new`,
//! `tf_graph_parse`, `tf_graph_fixture` or a cover constructor, and released
//! with `tf_graph_free`. Every fallible call returns a `TfStatus`; the message
//! of the most recent failure on the calling thread is available from
//! `tf_last_error`. Strings returned by the library are released with
//! `tf_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twofold::atrails::arc_classes;
use twofold::covers::{adc, cdc, idc};
use twofold::format::{parse_mg, write_mg};
use twofold::recon::count_reconstructions;
use twofold::tfiso::{find_tf_isomorphism, is_stable};
use twofold::{fixtures, Arc, Error, MixedGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidVertex = 2,
    Parse = 3,
    UnknownFixture = 4,
    InvalidParameter = 5,
    SizeMismatch = 6,
    CapExceeded = 7,
    NotAGraph = 8,
    NotBipartite = 9,
    NotConnected = 10,
    BufferTooSmall = 11,
    InvalidUtf8 = 12,
    Failed = 13,
    Panic = 14,
}

/// Opaque graph handle.
pub struct TfGraph {
    graph: MixedGraph,
}

/// Group orders of a stability report; orders saturate at `UINT64_MAX`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TfStabilityReport {
    pub stable: bool,
    pub aut_order: u64,
    pub tf_aut_order: u64,
    pub cdc_aut_order: u64,
    pub index: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> TfStatus {
    match e {
        Error::InvalidVertex { .. } => TfStatus::InvalidVertex,
        Error::Parse { .. } => TfStatus::Parse,
        Error::UnknownFixture(_) => TfStatus::UnknownFixture,
        Error::InvalidParameter(_) => TfStatus::InvalidParameter,
        Error::SizeMismatch { .. } => TfStatus::SizeMismatch,
        Error::CapExceeded { .. } => TfStatus::CapExceeded,
        Error::NotAGraph => TfStatus::NotAGraph,
        Error::NotBipartite | Error::Bipartite => TfStatus::NotBipartite,
        Error::NotConnected => TfStatus::NotConnected,
        _ => TfStatus::Failed,
    }
}

/// Runs `f`, recording failures and converting panics into `Panic`.
fn guard<F: FnOnce() -> Result<(), (TfStatus, String)>>(f: F) -> TfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TfStatus::Panic
        }
    }
}

fn lib<T>(r: twofold::Result<T>) -> Result<T, (TfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (TfStatus, String) {
    (TfStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const TfGraph) -> Result<&'a MixedGraph, (TfStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(null)
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, (TfStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (TfStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn emit(out: *mut *mut TfGraph, graph: MixedGraph) -> Result<(), (TfStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(TfGraph { graph }));
    Ok(())
}

fn saturate(x: u128) -> u64 {
    u64::try_from(x).unwrap_or(u64::MAX)
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn tf_status_message(status: TfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TfStatus::Ok => c"ok",
        TfStatus::NullPointer => c"null pointer argument",
        TfStatus::InvalidVertex => c"vertex out of range",
        TfStatus::Parse => c"malformed graph text",
        TfStatus::UnknownFixture => c"unknown fixture name",
        TfStatus::InvalidParameter => c"invalid parameter",
        TfStatus::SizeMismatch => c"size mismatch",
        TfStatus::CapExceeded => c"enumeration cap exceeded",
        TfStatus::NotAGraph => c"input is not a graph",
        TfStatus::NotBipartite => c"bipartiteness precondition violated",
        TfStatus::NotConnected => c"input is not connected",
        TfStatus::BufferTooSmall => c"output buffer too small",
        TfStatus::InvalidUtf8 => c"string is not valid UTF-8",
        TfStatus::Failed => c"operation failed",
        TfStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failure on this thread; empty if none. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Edgeless graph on `n` vertices.
#[no_mangle]
pub extern "C" fn tf_graph_new(n: usize) -> *mut TfGraph {
    Box::into_raw(Box::new(TfGraph {
        graph: MixedGraph::empty(n),
    }))
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_free(g: *mut TfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds the arc `(tail, head)`; adding an existing arc is a no-op.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_add_arc(g: *mut TfGraph, tail: usize, head: usize) -> TfStatus {
    guard(|| {
        let h = g.as_mut().ok_or_else(null)?;
        let arcs = h.graph.arcs().iter().copied().chain([Arc::new(tail, head)]);
        h.graph = lib(MixedGraph::new(h.graph.vertex_count(), arcs))?;
        Ok(())
    })
}

/// Parses `mg v1` text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_parse(text: *const c_char, out: *mut *mut TfGraph) -> TfStatus {
    guard(|| {
        let g = lib(parse_mg(c_str(text)?))?;
        emit(out, g)
    })
}

/// Named fixture such as `petersen` or `cycle(6)`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_fixture(name: *const c_char, out: *mut *mut TfGraph) -> TfStatus {
    guard(|| {
        let g = lib(fixtures::fixture(c_str(name)?))?;
        emit(out, g)
    })
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_vertex_count(g: *const TfGraph) -> usize {
    graph_ref(g).map_or(0, MixedGraph::vertex_count)
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_arc_count(g: *const TfGraph) -> usize {
    graph_ref(g).map_or(0, MixedGraph::arc_count)
}

/// Whether `(tail, head)` is an arc; false for a null handle.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_has_arc(g: *const TfGraph, tail: usize, head: usize) -> bool {
    graph_ref(g).is_ok_and(|g| tail < g.vertex_count() && head < g.vertex_count() && g.has_arc(tail, head))
}

/// Canonical `mg v1` text; release with `tf_string_free`. Null on failure.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_to_string(g: *const TfGraph) -> *mut c_char {
    let mut out = ptr::null_mut();
    guard(|| {
        let text = write_mg(graph_ref(g)?);
        out = CString::new(text).map_err(|_| (TfStatus::Failed, "interior NUL".into()))?.into_raw();
        Ok(())
    });
    out
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Incidence double cover (`2n` vertices, side `s` vertex `u` at `s*n + u`).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_idc(g: *const TfGraph, out: *mut *mut TfGraph) -> TfStatus {
    guard(|| emit(out, idc(graph_ref(g)?).graph().clone()))
}

/// Alternating double cover with isolated cover vertices removed.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_adc(g: *const TfGraph, out: *mut *mut TfGraph) -> TfStatus {
    guard(|| emit(out, adc(graph_ref(g)?).as_mixed().clone()))
}

/// Canonical double cover.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_graph_cdc(g: *const TfGraph, out: *mut *mut TfGraph) -> TfStatus {
    guard(|| emit(out, cdc(graph_ref(g)?)))
}

/// Searches for a TF-isomorphism. On success `*found` says whether one
/// exists; if so, `alpha` and `beta` (each of length `len`, at least the
/// vertex count) receive the two maps as image arrays.
///
/// # Safety
/// Handles must be live; `alpha` and `beta` must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn tf_find_tf_isomorphism(
    g: *const TfGraph,
    h: *const TfGraph,
    alpha: *mut usize,
    beta: *mut usize,
    len: usize,
    found: *mut bool,
) -> TfStatus {
    guard(|| {
        let (g, h) = (graph_ref(g)?, graph_ref(h)?);
        if found.is_null() || alpha.is_null() || beta.is_null() {
            return Err(null());
        }
        if len < g.vertex_count() {
            return Err((TfStatus::BufferTooSmall, format!("need {} slots", g.vertex_count())));
        }
        match lib(find_tf_isomorphism(g, h))? {
            Some(m) => {
                ptr::copy_nonoverlapping(m.alpha.images().as_ptr(), alpha, m.degree());
                ptr::copy_nonoverlapping(m.beta.images().as_ptr(), beta, m.degree());
                *found = true;
            }
            None => *found = false,
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_is_stable(g: *const TfGraph, out: *mut TfStabilityReport) -> TfStatus {
    guard(|| {
        let r = lib(is_stable(graph_ref(g)?))?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = TfStabilityReport {
            stable: r.stable,
            aut_order: saturate(r.aut_order),
            tf_aut_order: saturate(r.tf_aut_order),
            cdc_aut_order: saturate(r.cdc_aut_order),
            index: saturate(r.index),
        };
        Ok(())
    })
}

/// Graphs sharing the neighbourhood family of a connected non-bipartite
/// graph, counted up to isomorphism.
///
/// # Safety
/// `g` must be a live handle; `total` and `including_self` writable.
#[no_mangle]
pub unsafe extern "C" fn tf_count_reconstructions(
    g: *const TfGraph,
    total: *mut usize,
    including_self: *mut bool,
) -> TfStatus {
    guard(|| {
        let r = lib(count_reconstructions(graph_ref(g)?))?;
        *total.as_mut().ok_or_else(null)? = r.total;
        *including_self.as_mut().ok_or_else(null)? = r.including_self;
        Ok(())
    })
}

/// Number of classes of the arc relation and of frontier vertices.
///
/// # Safety
/// `g` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn tf_arc_classes(
    g: *const TfGraph,
    class_count: *mut usize,
    frontier_count: *mut usize,
) -> TfStatus {
    guard(|| {
        let p = arc_classes(graph_ref(g)?);
        *class_count.as_mut().ok_or_else(null)? = p.class_count();
        *frontier_count.as_mut().ok_or_else(null)? = p.frontier_count();
        Ok(())
    })
}
