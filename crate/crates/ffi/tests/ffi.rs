use std::ffi::{CStr, CString};
use std::ptr;

use ccx_ffi::*;

fn parse(text: &str) -> *mut CcxComplex {
    let src = CString::new(text).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ccx_complex_parse(src.as_ptr(), &mut c) },
        CcxStatus::Ok
    );
    assert!(!c.is_null());
    c
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ccx_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn cube_distance_and_validation() {
    let c = parse("ccx 1\ncube 000 001 010 011 100 101 110 111\n");
    let (mut n, mut ok, mut d) = (0usize, false, 0usize);
    let (u, v) = (CString::new("000").unwrap(), CString::new("111").unwrap());
    unsafe {
        assert_eq!(ccx_complex_vertex_count(c, &mut n), CcxStatus::Ok);
        assert_eq!(ccx_complex_validate(c, &mut ok), CcxStatus::Ok);
        assert_eq!(
            ccx_complex_distance(c, u.as_ptr(), v.as_ptr(), &mut d),
            CcxStatus::Ok
        );
        ccx_complex_free(c);
    }
    assert_eq!((n, ok, d), (8, true, 3));
}

#[test]
fn emit_round_trips() {
    let c = parse("ccx 1\ncube b a\n");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(ccx_complex_emit(c, &mut s), CcxStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        ccx_string_free(s);
        let again = parse(&text);
        let mut s2 = ptr::null_mut();
        ccx_complex_emit(again, &mut s2);
        assert_eq!(CStr::from_ptr(s2).to_str().unwrap(), text);
        ccx_string_free(s2);
        ccx_complex_free(again);
        ccx_complex_free(c);
    }
}

#[test]
fn edge_swap_is_an_inversion_and_subdivision_fixes_it() {
    let c = parse("ccx 1\ncube a b\n");
    let aut = CString::new("aut 1\na -> b\nb -> a\n").unwrap();
    let mut m = ptr::null_mut();
    let mut verdict = CcxVerdict::Indeterminate;
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(ccx_map_parse(c, aut.as_ptr(), &mut m), CcxStatus::Ok);
        assert_eq!(
            ccx_classify(c, m, 0, &mut verdict, &mut report),
            CcxStatus::Ok
        );
        let text = CStr::from_ptr(report).to_str().unwrap().to_owned();
        ccx_string_free(report);
        assert_eq!(verdict, CcxVerdict::Inversion);
        assert!(text.starts_with("inversion along wall 0 at power 1"));

        let mut s = ptr::null_mut();
        assert_eq!(ccx_complex_subdivide(c, &mut s), CcxStatus::Ok);
        let aut2 = CString::new("aut 1\na -> b\nb -> a\na+b -> a+b\n").unwrap();
        let mut m2 = ptr::null_mut();
        assert_eq!(ccx_map_parse(s, aut2.as_ptr(), &mut m2), CcxStatus::Ok);
        assert_eq!(
            ccx_classify(s, m2, 0, &mut verdict, ptr::null_mut()),
            CcxStatus::Ok
        );
        assert_eq!(verdict, CcxVerdict::Elliptic);
        // a map parsed against another complex is rejected
        assert_eq!(
            ccx_classify(c, m2, 0, &mut verdict, ptr::null_mut()),
            CcxStatus::InvalidMap
        );
        ccx_map_free(m2);
        ccx_map_free(m);
        ccx_complex_free(s);
        ccx_complex_free(c);
    }
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("ccx 1\ncube a b c\n").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { ccx_complex_parse(bad.as_ptr(), &mut c) },
        CcxStatus::Parse
    );
    assert!(c.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(
        unsafe { ccx_complex_parse(ptr::null(), &mut c) },
        CcxStatus::NullArgument
    );

    let x = parse("ccx 1\ncube a b\n");
    let (u, z) = (CString::new("a").unwrap(), CString::new("zz").unwrap());
    let mut d = 0;
    assert_eq!(
        unsafe { ccx_complex_distance(x, u.as_ptr(), z.as_ptr(), &mut d) },
        CcxStatus::UnknownVertex
    );
    assert!(last_error().contains("zz"));
    let mut n = 0;
    assert_eq!(
        unsafe { ccx_complex_vertex_count(x, &mut n) },
        CcxStatus::Ok
    );
    assert!(last_error().is_empty());

    let notbij = CString::new("aut 1\na -> a\nb -> a\n").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { ccx_map_parse(x, notbij.as_ptr(), &mut m) },
        CcxStatus::InvalidMap
    );
    unsafe { ccx_complex_free(x) };
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/ccx.h");
    for name in [
        "ccx_last_error",
        "ccx_string_free",
        "ccx_complex_parse",
        "ccx_complex_free",
        "ccx_complex_vertex_count",
        "ccx_complex_validate",
        "ccx_complex_distance",
        "ccx_complex_emit",
        "ccx_complex_subdivide",
        "ccx_map_parse",
        "ccx_map_free",
        "ccx_classify",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name}");
    }
}
