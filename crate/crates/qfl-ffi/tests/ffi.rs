//! Exercise the C ABI from Rust, including the ownership contract.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use qfl_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { qfl_string_free(p) };
    s
}

#[test]
fn build_eval_roundtrip() {
    let kind = CString::new("fib").unwrap();
    let mut poly: *mut QflPoly = ptr::null_mut();
    let code = unsafe { qfl_family_build(kind.as_ptr(), 7, ptr::null(), &mut poly) };
    assert_eq!(code, QFL_OK);
    assert!(!poly.is_null());

    let one = CString::new("1").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe {
        qfl_poly_eval(poly, one.as_ptr(), one.as_ptr(), one.as_ptr(), &mut out)
    };
    assert_eq!(code, QFL_OK);
    assert_eq!(take_string(out), "13");

    let mut json: *mut c_char = ptr::null_mut();
    let code = unsafe { qfl_poly_to_json(poly, &mut json) };
    assert_eq!(code, QFL_OK);
    let json = take_string(json);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(parsed.is_array());

    unsafe { qfl_poly_free(poly) };
}

#[test]
fn fixed_base_family_uses_q() {
    let kind = CString::new("rfib").unwrap();
    let q = CString::new("1/2").unwrap();
    let mut poly: *mut QflPoly = ptr::null_mut();
    let code = unsafe { qfl_family_build(kind.as_ptr(), 2, q.as_ptr(), &mut poly) };
    assert_eq!(code, QFL_OK);
    // r_2 = x^2 + 1/((1+q)(1+q^2)) = x^2 + 8/15 at q = 1/2
    let zero = CString::new("0").unwrap();
    let one = CString::new("1").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe {
        qfl_poly_eval(poly, zero.as_ptr(), zero.as_ptr(), one.as_ptr(), &mut out)
    };
    assert_eq!(code, QFL_OK);
    assert_eq!(take_string(out), "8/15");
    unsafe { qfl_poly_free(poly) };
}

#[test]
fn error_codes() {
    let mut poly: *mut QflPoly = ptr::null_mut();
    // null kind
    assert_eq!(
        unsafe { qfl_family_build(ptr::null(), 1, ptr::null(), &mut poly) },
        QFL_ERR_NULL
    );
    // unknown kind
    let bad = CString::new("nonsense").unwrap();
    assert_eq!(
        unsafe { qfl_family_build(bad.as_ptr(), 1, ptr::null(), &mut poly) },
        QFL_ERR_DOMAIN
    );
    // null out pointer
    let kind = CString::new("fib").unwrap();
    assert_eq!(
        unsafe { qfl_family_build(kind.as_ptr(), 1, ptr::null(), ptr::null_mut()) },
        QFL_ERR_NULL
    );
    // frees tolerate null
    unsafe {
        qfl_poly_free(ptr::null_mut());
        qfl_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_suite_passes_and_reports() {
    let suite = CString::new("qcore").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe { qfl_verify_suite(suite.as_ptr(), 8, 32, 1e-8, &mut out) };
    assert_eq!(code, QFL_OK);
    let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert!(report["identities"].as_array().unwrap().len() >= 4);

    let bad = CString::new("nope").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { qfl_verify_suite(bad.as_ptr(), 8, 32, 1e-8, &mut out) },
        QFL_ERR_DOMAIN
    );
}

#[test]
fn fourier_check_roundtrip() {
    let kind = CString::new("qfib").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe {
        qfl_fourier_check(kind.as_ptr(), 1, 1.0, 1.0, 0.5, 0.0, 96, 1e-8, &mut out)
    };
    assert_eq!(code, QFL_OK);
    let result: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert!(result["rel_err"].as_f64().unwrap() < 1e-8);

    // q outside (0,1) is a domain error
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { qfl_fourier_check(kind.as_ptr(), 1, 1.0, 1.0, 2.0, 0.0, 96, 1e-8, &mut out) },
        QFL_ERR_DOMAIN
    );
}
