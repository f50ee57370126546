//! C ABI over the cce-graphs toolkit.
//!
//! Digraphs travel as opaque `CceDigraph*` handles created by
//! [`cce_digraph_parse`], [`cce_digraph_from_arcs`], or [`cce_synthesize`]
//! and released with [`cce_digraph_free`]. Strings returned by the
//! `*_text` functions are owned by the caller and must be released with
//! [`cce_string_free`]. Fallible calls return a [`CceStatus`]; on any
//! non-OK status, [`cce_last_error_message`] describes the failure for
//! the current thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use cce_graphs::{
    cce, competition, is_minimal, recognize_22, recognize_22_interval, synth::RecognitionReason,
    synthesize, to_spec, ComponentSpec, DegreeBound, Digraph, Error,
};

/// Opaque digraph handle.
pub struct CceDigraph {
    inner: Digraph,
}

/// Outcome of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CceStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    NotRealizable = 5,
    PreconditionFailed = 6,
}

/// Why a component multiset was accepted or rejected.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CceReason {
    AllGood = 0,
    SingleNontrivialPath = 1,
    NotPathsAndCycles = 2,
    HoleForbidden = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let stored = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn status_of(err: &Error) -> CceStatus {
    match err {
        Error::Parse { .. } => CceStatus::ParseError,
        Error::NotRealizable(_) => CceStatus::NotRealizable,
        Error::NotBounded(_, _) | Error::NotBoundedAcyclic(_) => CceStatus::PreconditionFailed,
        _ => CceStatus::InvalidInput,
    }
}

fn fail(err: Error) -> CceStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

fn fail_null() -> CceStatus {
    set_error("null pointer argument");
    CceStatus::NullPointer
}

unsafe fn read_utf8<'a>(ptr: *const c_char) -> Result<&'a str, CceStatus> {
    if ptr.is_null() {
        return Err(fail_null());
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        CceStatus::InvalidUtf8
    })
}

fn to_handle(d: Digraph) -> *mut CceDigraph {
    Box::into_raw(Box::new(CceDigraph { inner: d }))
}

unsafe fn borrow<'a>(ptr: *const CceDigraph) -> Option<&'a Digraph> {
    ptr.as_ref().map(|h| &h.inner)
}

fn export_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Message for the most recent failure on this thread, or NULL when the
/// last call succeeded. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn cce_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Parses the digraph text format (`digraph <n>` header, one `<u> <v>`
/// arc per line) into a new handle stored in `*out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_parse(
    text: *const c_char,
    out: *mut *mut CceDigraph,
) -> CceStatus {
    if out.is_null() {
        return fail_null();
    }
    let text = match read_utf8(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match Digraph::from_text(text) {
        Ok(d) => {
            *out = to_handle(d);
            CceStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds a digraph on vertices `1..=n` from `count` arcs given as
/// parallel tail/head arrays.
///
/// # Safety
/// `tails` and `heads` must point to `count` readable u32 values each
/// (or be NULL when `count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_from_arcs(
    n: u32,
    tails: *const u32,
    heads: *const u32,
    count: usize,
    out: *mut *mut CceDigraph,
) -> CceStatus {
    if out.is_null() || (count > 0 && (tails.is_null() || heads.is_null())) {
        return fail_null();
    }
    let mut arcs = Vec::with_capacity(count);
    for i in 0..count {
        arcs.push((*tails.add(i), *heads.add(i)));
    }
    match Digraph::new(n, arcs) {
        Ok(d) => {
            *out = to_handle(d);
            CceStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a handle returned by this library. NULL is a no-op.
///
/// # Safety
/// `d` must be a pointer previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_free(d: *mut CceDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_vertex_count(d: *const CceDigraph) -> u32 {
    borrow(d).map_or(0, |d| d.vertex_count())
}

/// Number of arcs, or 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_arc_count(d: *const CceDigraph) -> usize {
    borrow(d).map_or(0, |d| d.arc_count())
}

/// The digraph in its text format. Free with [`cce_string_free`];
/// NULL on NULL input.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_to_text(d: *const CceDigraph) -> *mut c_char {
    match borrow(d) {
        Some(d) => export_string(d.to_text()),
        None => std::ptr::null_mut(),
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be a string previously returned by this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn cce_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes into `*out` whether every vertex satisfies the degree caps.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_is_bounded(
    d: *const CceDigraph,
    max_in: u32,
    max_out: u32,
    out: *mut bool,
) -> CceStatus {
    let (Some(d), false) = (borrow(d), out.is_null()) else {
        return fail_null();
    };
    *out = d.is_bounded(DegreeBound::new(max_in, max_out));
    CceStatus::Ok
}

/// Writes into `*out` whether the digraph has no directed cycle.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_is_acyclic(
    d: *const CceDigraph,
    out: *mut bool,
) -> CceStatus {
    let (Some(d), false) = (borrow(d), out.is_null()) else {
        return fail_null();
    };
    *out = d.is_acyclic();
    CceStatus::Ok
}

/// Writes into `*out` whether no single-arc deletion preserves the CCE
/// graph. Fails with `PRECONDITION_FAILED` unless the digraph is acyclic
/// with in/outdegrees at most 2.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_is_minimal(
    d: *const CceDigraph,
    out: *mut bool,
) -> CceStatus {
    let (Some(d), false) = (borrow(d), out.is_null()) else {
        return fail_null();
    };
    match is_minimal(d) {
        Ok(v) => {
            *out = v;
            CceStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// A new handle for the digraph with every arc reversed; NULL on NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_reverse(d: *const CceDigraph) -> *mut CceDigraph {
    match borrow(d) {
        Some(d) => to_handle(d.reverse()),
        None => std::ptr::null_mut(),
    }
}

/// A new handle for the disjoint union; the second block is relabeled
/// past the first. NULL if either input is NULL.
///
/// # Safety
/// `a` and `b` must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn cce_digraph_disjoint_union(
    a: *const CceDigraph,
    b: *const CceDigraph,
) -> *mut CceDigraph {
    match (borrow(a), borrow(b)) {
        (Some(a), Some(b)) => to_handle(a.disjoint_union(b)),
        _ => std::ptr::null_mut(),
    }
}

/// The CCE graph in the undirected text format (`graph <n>` header).
/// Free with [`cce_string_free`]; NULL on NULL input.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_cce_graph_text(d: *const CceDigraph) -> *mut c_char {
    match borrow(d) {
        Some(d) => export_string(cce(d).to_text()),
        None => std::ptr::null_mut(),
    }
}

/// The competition graph in the undirected text format.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_competition_graph_text(d: *const CceDigraph) -> *mut c_char {
    match borrow(d) {
        Some(d) => export_string(competition(d).to_text()),
        None => std::ptr::null_mut(),
    }
}

/// The component multiset of the CCE graph, e.g. `C3 + 6xP1`. NULL (with
/// an error message) when some component is neither a path nor a cycle.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cce_cce_spec_text(d: *const CceDigraph) -> *mut c_char {
    let Some(d) = borrow(d) else {
        return std::ptr::null_mut();
    };
    match to_spec(&cce(d)) {
        Ok(spec) => export_string(spec.to_string()),
        Err(e) => {
            fail(e);
            std::ptr::null_mut()
        }
    }
}

/// Decides whether the multiset written in `spec` (grammar `C3 + 6xP1`)
/// is realizable as the CCE graph of a digraph with in/outdegrees at most
/// 2; with `interval`, additionally requires an interval realization.
/// Writes the verdict and its reason.
///
/// # Safety
/// `spec` must be NUL-terminated; `answer` and `reason` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cce_recognize(
    spec: *const c_char,
    interval: bool,
    answer: *mut bool,
    reason: *mut CceReason,
) -> CceStatus {
    if answer.is_null() || reason.is_null() {
        return fail_null();
    }
    let text = match read_utf8(spec) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed: ComponentSpec = match text.parse() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let result = if interval {
        recognize_22_interval(&parsed)
    } else {
        recognize_22(&parsed)
    };
    *answer = result.answer;
    *reason = match result.reason {
        RecognitionReason::AllGood => CceReason::AllGood,
        RecognitionReason::SingleNontrivialPath => CceReason::SingleNontrivialPath,
        RecognitionReason::NotPathsAndCycles => CceReason::NotPathsAndCycles,
        RecognitionReason::HoleForbidden => CceReason::HoleForbidden,
    };
    CceStatus::Ok
}

/// Builds a witness digraph whose CCE graph realizes the multiset in
/// `spec` exactly; `NOT_REALIZABLE` when the multiset is rejected.
///
/// # Safety
/// `spec` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cce_synthesize(
    spec: *const c_char,
    out: *mut *mut CceDigraph,
) -> CceStatus {
    if out.is_null() {
        return fail_null();
    }
    let text = match read_utf8(spec) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed: ComponentSpec = match text.parse() {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match synthesize(&parsed) {
        Ok(d) => {
            *out = to_handle(d);
            CceStatus::Ok
        }
        Err(e) => fail(e),
    }
}
