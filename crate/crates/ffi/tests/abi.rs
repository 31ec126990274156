use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use twofold_ffi::*;

fn fixture(name: &str) -> *mut TfGraph {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { tf_graph_fixture(name.as_ptr(), &mut g) }, TfStatus::Ok);
    g
}

#[test]
fn build_and_print() {
    unsafe {
        let g = tf_graph_new(3);
        assert_eq!(tf_graph_add_arc(g, 0, 1), TfStatus::Ok);
        assert_eq!(tf_graph_add_arc(g, 1, 0), TfStatus::Ok);
        assert_eq!(tf_graph_add_arc(g, 1, 2), TfStatus::Ok);
        assert_eq!(tf_graph_add_arc(g, 1, 2), TfStatus::Ok);
        assert_eq!((tf_graph_vertex_count(g), tf_graph_arc_count(g)), (3, 3));
        assert!(tf_graph_has_arc(g, 1, 2) && !tf_graph_has_arc(g, 2, 1) && !tf_graph_has_arc(g, 9, 0));
        let s = tf_graph_to_string(g);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "n 3\ne 0 1\na 1 2\n");
        tf_string_free(s);
        assert_eq!(tf_graph_add_arc(g, 0, 3), TfStatus::InvalidVertex);
        assert!(!CStr::from_ptr(tf_last_error()).to_bytes().is_empty());
        tf_graph_free(g);
    }
}

#[test]
fn parse_errors_are_reported() {
    unsafe {
        let text = CString::new("n 2\nq 0 1\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(tf_graph_parse(text.as_ptr(), &mut g), TfStatus::Parse);
        assert!(g.is_null());
        let msg = CStr::from_ptr(tf_last_error()).to_str().unwrap();
        assert!(msg.contains("line 2"), "{msg}");
        assert_eq!(tf_graph_parse(ptr::null(), &mut g), TfStatus::NullPointer);
        let bad = CString::new("heawood").unwrap();
        assert_eq!(tf_graph_fixture(bad.as_ptr(), &mut g), TfStatus::UnknownFixture);
        assert_eq!(
            CStr::from_ptr(tf_status_message(TfStatus::CapExceeded)).to_str().unwrap(),
            "enumeration cap exceeded"
        );
    }
}

#[test]
fn two_fold_isomorphism_through_buffers() {
    unsafe {
        let (p, l) = (fixture("petersen"), fixture("lambda_cousin"));
        let (mut alpha, mut beta) = ([0usize; 10], [0usize; 10]);
        let mut found = false;
        let status = tf_find_tf_isomorphism(p, l, alpha.as_mut_ptr(), beta.as_mut_ptr(), 10, &mut found);
        assert_eq!(status, TfStatus::Ok);
        assert!(found);
        let a = twofold::Permutation::from_images(alpha.to_vec()).unwrap();
        let b = twofold::Permutation::from_images(beta.to_vec()).unwrap();
        let (pg, lg) = (twofold::fixtures::petersen(), twofold::fixtures::lambda_cousin());
        assert!(twofold::tfiso::is_tf_map(&pg, &lg, &a, &b).unwrap());
        let status = tf_find_tf_isomorphism(p, l, alpha.as_mut_ptr(), beta.as_mut_ptr(), 5, &mut found);
        assert_eq!(status, TfStatus::BufferTooSmall);
        let (k3, dc) = (fixture("complete(3)"), fixture("directed_cycle(3)"));
        let (mut a3, mut b3) = ([0usize; 3], [0usize; 3]);
        assert_eq!(tf_find_tf_isomorphism(k3, dc, a3.as_mut_ptr(), b3.as_mut_ptr(), 3, &mut found), TfStatus::Ok);
        assert!(!found);
        for g in [p, l, k3, dc] {
            tf_graph_free(g);
        }
    }
}

#[test]
fn stability_and_reconstruction() {
    unsafe {
        let l = fixture("lambda");
        let mut r = TfStabilityReport::default();
        assert_eq!(tf_is_stable(l, &mut r), TfStatus::Ok);
        assert_eq!(
            r,
            TfStabilityReport { stable: false, aut_order: 12, tf_aut_order: 120, cdc_aut_order: 240, index: 20 }
        );
        let (mut total, mut own) = (0usize, false);
        assert_eq!(tf_count_reconstructions(l, &mut total, &mut own), TfStatus::Ok);
        assert_eq!((total, own), (2, true));
        let c4 = fixture("cycle(4)");
        assert_eq!(tf_count_reconstructions(c4, &mut total, &mut own), TfStatus::NotBipartite);
        let path = fixture("directed_path(2)");
        assert_eq!(tf_is_stable(path, &mut r), TfStatus::NotAGraph);
        for g in [l, c4, path] {
            tf_graph_free(g);
        }
    }
}

#[test]
fn covers_and_classes() {
    unsafe {
        let k3 = fixture("complete(3)");
        let (mut i, mut a, mut c) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(tf_graph_idc(k3, &mut i), TfStatus::Ok);
        assert_eq!(tf_graph_adc(k3, &mut a), TfStatus::Ok);
        assert_eq!(tf_graph_cdc(k3, &mut c), TfStatus::Ok);
        assert_eq!((tf_graph_vertex_count(i), tf_graph_arc_count(i)), (6, 12));
        assert_eq!((tf_graph_vertex_count(a), tf_graph_arc_count(a)), (6, 6));
        assert_eq!(tf_graph_arc_count(c), 12);
        let (mut classes, mut frontier) = (0usize, 0usize);
        assert_eq!(tf_arc_classes(k3, &mut classes, &mut frontier), TfStatus::Ok);
        assert_eq!((classes, frontier), (1, 0));
        assert_eq!(tf_arc_classes(ptr::null(), &mut classes, &mut frontier), TfStatus::NullPointer);
        for g in [k3, i, a, c] {
            tf_graph_free(g);
        }
        tf_graph_free(ptr::null_mut());
    }
}

fn compiler_accepts(compiler: &str, lang: &str) -> Option<bool> {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/twofold.h");
    let out = Command::new(compiler)
        .args(["-x", lang, "-fsyntax-only", "-Wall", "-Werror"])
        .arg(&header)
        .output()
        .ok()?;
    Some(out.status.success())
}

#[test]
fn generated_header_compiles_as_c_and_cpp() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/twofold.h");
    let text = std::fs::read_to_string(header).unwrap();
    for symbol in ["tf_graph_new", "tf_find_tf_isomorphism", "TF_STATUS_CAP_EXCEEDED", "typedef struct TfGraph TfGraph"] {
        assert!(text.contains(symbol), "{symbol}");
    }
    if let Some(ok) = compiler_accepts("cc", "c") {
        assert!(ok, "header rejected by the C compiler");
    }
    if let Some(ok) = compiler_accepts("c++", "c++") {
        assert!(ok, "header rejected by the C++ compiler");
    }
}
