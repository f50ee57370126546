//! Exercises the C ABI the way a foreign caller would: through raw
//! pointers and the generated status codes.

use std::ffi::{CStr, CString};
use std::ptr;

use cce_graphs_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut std::os::raw::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    cce_string_free(ptr);
    s
}

const TRIANGLE_WITNESS: &str = "digraph 9\n1 4\n1 6\n2 4\n2 5\n3 5\n3 6\n7 1\n7 2\n8 2\n8 3\n9 1\n9 3\n";

#[test]
fn parse_inspect_and_round_trip() {
    unsafe {
        let mut d: *mut CceDigraph = ptr::null_mut();
        let text = c(TRIANGLE_WITNESS);
        assert_eq!(cce_digraph_parse(text.as_ptr(), &mut d), CceStatus::Ok);
        assert_eq!(cce_digraph_vertex_count(d), 9);
        assert_eq!(cce_digraph_arc_count(d), 12);

        assert_eq!(take_string(cce_digraph_to_text(d)), TRIANGLE_WITNESS);
        assert_eq!(
            take_string(cce_cce_graph_text(d)),
            "graph 9\n1 2\n1 3\n2 3\n"
        );
        assert_eq!(take_string(cce_cce_spec_text(d)), "C3 + 6xP1");

        let mut flag = false;
        assert_eq!(cce_digraph_is_bounded(d, 2, 2, &mut flag), CceStatus::Ok);
        assert!(flag);
        assert_eq!(cce_digraph_is_acyclic(d, &mut flag), CceStatus::Ok);
        assert!(flag);
        assert_eq!(cce_digraph_is_minimal(d, &mut flag), CceStatus::Ok);
        assert!(flag);

        let reversed = cce_digraph_reverse(d);
        assert_eq!(take_string(cce_cce_spec_text(reversed)), "C3 + 6xP1");

        let union = cce_digraph_disjoint_union(d, reversed);
        assert_eq!(cce_digraph_vertex_count(union), 18);
        assert_eq!(take_string(cce_cce_spec_text(union)), "2xC3 + 12xP1");

        cce_digraph_free(union);
        cce_digraph_free(reversed);
        cce_digraph_free(d);
    }
}

#[test]
fn from_arcs_builds_the_same_digraph() {
    unsafe {
        let tails = [1u32, 2];
        let heads = [3u32, 3];
        let mut d: *mut CceDigraph = ptr::null_mut();
        assert_eq!(
            cce_digraph_from_arcs(3, tails.as_ptr(), heads.as_ptr(), 2, &mut d),
            CceStatus::Ok
        );
        assert_eq!(
            take_string(cce_competition_graph_text(d)),
            "graph 3\n1 2\n"
        );
        cce_digraph_free(d);

        // a loop is rejected
        let tails = [1u32];
        let heads = [1u32];
        assert_eq!(
            cce_digraph_from_arcs(2, tails.as_ptr(), heads.as_ptr(), 1, &mut d),
            CceStatus::InvalidInput
        );
        assert!(!cce_last_error_message().is_null());
    }
}

#[test]
fn recognition_and_synthesis() {
    unsafe {
        let mut answer = true;
        let mut reason = CceReason::AllGood;
        let spec = c("P2");
        assert_eq!(
            cce_recognize(spec.as_ptr(), false, &mut answer, &mut reason),
            CceStatus::Ok
        );
        assert!(!answer);
        assert_eq!(reason, CceReason::SingleNontrivialPath);

        let spec = c("C4 + P1");
        assert_eq!(
            cce_recognize(spec.as_ptr(), true, &mut answer, &mut reason),
            CceStatus::Ok
        );
        assert!(!answer);
        assert_eq!(reason, CceReason::HoleForbidden);

        let mut witness: *mut CceDigraph = ptr::null_mut();
        let spec = c("C3 + 6xP1");
        assert_eq!(cce_synthesize(spec.as_ptr(), &mut witness), CceStatus::Ok);
        assert_eq!(take_string(cce_cce_spec_text(witness)), "C3 + 6xP1");
        let mut bounded = false;
        assert_eq!(
            cce_digraph_is_bounded(witness, 2, 2, &mut bounded),
            CceStatus::Ok
        );
        assert!(bounded);
        cce_digraph_free(witness);

        let spec = c("P5 + C3");
        assert_eq!(
            cce_synthesize(spec.as_ptr(), &mut witness),
            CceStatus::NotRealizable
        );

        let spec = c("C2");
        assert_eq!(
            cce_synthesize(spec.as_ptr(), &mut witness),
            CceStatus::InvalidInput
        );
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut d: *mut CceDigraph = ptr::null_mut();
        assert_eq!(
            cce_digraph_parse(ptr::null(), &mut d),
            CceStatus::NullPointer
        );

        let bad = c("graph 3\n1 2\n");
        assert_eq!(cce_digraph_parse(bad.as_ptr(), &mut d), CceStatus::ParseError);
        let msg = CStr::from_ptr(cce_last_error_message()).to_str().unwrap();
        assert!(msg.contains("line 1"), "unexpected message: {}", msg);

        let not_utf8 = [b'd' as std::os::raw::c_char, -1i8 as std::os::raw::c_char, 0];
        assert_eq!(
            cce_digraph_parse(not_utf8.as_ptr(), &mut d),
            CceStatus::InvalidUtf8
        );

        // precondition: minimality needs an acyclic digraph
        let two_cycle = c("digraph 2\n1 2\n2 1\n");
        assert_eq!(cce_digraph_parse(two_cycle.as_ptr(), &mut d), CceStatus::Ok);
        let mut flag = false;
        assert_eq!(
            cce_digraph_is_minimal(d, &mut flag),
            CceStatus::PreconditionFailed
        );
        cce_digraph_free(d);

        assert_eq!(cce_digraph_vertex_count(ptr::null()), 0);
        assert!(cce_cce_graph_text(ptr::null()).is_null());
        cce_digraph_free(ptr::null_mut());
        cce_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_every_exported_function() {
    let header = include_str!("../include/cce_graphs.h");
    let source = include_str!("../src/lib.rs");
    for line in source.lines() {
        let Some(rest) = line
            .trim()
            .strip_prefix("pub unsafe extern \"C\" fn ")
            .or_else(|| line.trim().strip_prefix("pub extern \"C\" fn "))
        else {
            continue;
        };
        let name = rest.split('(').next().unwrap().trim();
        assert!(
            header.contains(&format!("{}(", name)),
            "function {} missing from include/cce_graphs.h",
            name
        );
    }
    assert!(header.contains("typedef struct CceDigraph CceDigraph;"));
    assert!(header.contains("CCE_STATUS_NOT_REALIZABLE"));
}
