//! The C interface exercised from Rust.

use std::ffi::{CStr, CString};
use std::ptr;

use qtheta_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(qt_last_error()) }.to_string_lossy().into_owned()
}

fn expand(src: &str, steps: i64) -> *mut QtSeries {
    let src = CString::new(src).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qt_series_expand(src.as_ptr(), steps, &mut s) }, QtStatus::Ok, "{}", last_error());
    s
}

fn take(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { qt_string_free(p) };
    s
}

#[test]
fn series_round_trip() {
    let phi = expand("phi", 6);
    let square = {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { qt_series_mul(phi, phi, &mut out) }, QtStatus::Ok);
        out
    };
    let mut listing = ptr::null_mut();
    assert_eq!(unsafe { qt_series_to_string(square, &mut listing) }, QtStatus::Ok);
    assert!(take(listing).starts_with("0: 1, 1: 4, 2: 4, 4: 4, 5: 8"));

    let direct = expand("phi^2", 6);
    let mut equal = false;
    assert_eq!(unsafe { qt_series_equal(square, direct, &mut equal) }, QtStatus::Ok);
    assert!(equal);

    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qt_series_coefficient(direct, 5, 1, &mut c) }, QtStatus::Ok);
    assert_eq!(take(c), "8");
    assert_eq!(unsafe { qt_series_coefficient(direct, 500, 1, &mut c) }, QtStatus::Domain);
    assert!(c.is_null() && !last_error().is_empty());
    assert_eq!(unsafe { qt_series_coefficient(direct, 1, 0, &mut c) }, QtStatus::InvalidArgument);

    let mut n = 0usize;
    assert_eq!(unsafe { qt_series_term_count(direct, &mut n) }, QtStatus::Ok);
    assert_eq!(n, 5);
    unsafe {
        qt_series_free(phi);
        qt_series_free(square);
        qt_series_free(direct);
    }
}

#[test]
fn null_pointers_are_reported() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qt_series_expand(ptr::null(), 3, &mut s) }, QtStatus::NullPointer);
    assert!(last_error().contains("expression"));
    let src = CString::new("eta(1)").unwrap();
    assert_eq!(unsafe { qt_series_expand(src.as_ptr(), 3, ptr::null_mut()) }, QtStatus::NullPointer);
    assert_eq!(unsafe { qt_series_term_count(ptr::null(), &mut 0) }, QtStatus::NullPointer);
    unsafe {
        qt_series_free(ptr::null_mut());
        qt_report_free(ptr::null_mut());
        qt_string_free(ptr::null_mut());
    }
}

#[test]
fn numeric_values() {
    let tau = QtComplex { re: 0.0, im: 1.0 };
    let mut v = QtComplex::default();
    assert_eq!(unsafe { qt_theta(1, QtComplex::default(), tau, &mut v) }, QtStatus::Ok);
    assert!(v.re.abs() < 1e-15 && v.im.abs() < 1e-15);
    assert_eq!(unsafe { qt_theta(5, QtComplex::default(), tau, &mut v) }, QtStatus::InvalidArgument);
    let lower = QtComplex { re: 0.0, im: -1.0 };
    assert_eq!(unsafe { qt_eta(lower, &mut v) }, QtStatus::Domain);
    assert!(last_error().contains("upper half-plane"));

    // η(i) = Γ(1/4) / (2 π^{3/4})
    assert_eq!(unsafe { qt_eta(tau, &mut v) }, QtStatus::Ok);
    assert!((v.re - 0.768_225_422_326_056_7).abs() < 1e-12);
    assert_eq!(unsafe { qt_wp(QtComplex { re: 0.7, im: 0.1 }, tau, &mut v) }, QtStatus::Ok);
    assert_eq!(unsafe { qt_wp(QtComplex::default(), tau, &mut v) }, QtStatus::Domain);
}

#[test]
fn registry_and_reports() {
    let n = qt_registry_len();
    assert!(n >= 100);
    let first = unsafe { CStr::from_ptr(qt_registry_id(0)) }.to_str().unwrap().to_string();
    assert!(!first.is_empty());
    assert!(qt_registry_id(n).is_null());

    let id = CString::new("triple_product").unwrap();
    let mut verdict = QtVerdict::Error;
    assert_eq!(unsafe { qt_verify(id.as_ptr(), 20, 42, 0.0, &mut verdict) }, QtStatus::Ok);
    assert_eq!(verdict, QtVerdict::Pass);
    let unknown = CString::new("no_such_id").unwrap();
    assert_eq!(unsafe { qt_verify(unknown.as_ptr(), 0, 42, 0.0, &mut verdict) }, QtStatus::UnknownId);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { qt_verify_all(42, 0.0, &mut report) }, QtStatus::Ok);
    let mut rows = 0usize;
    let mut ok = false;
    assert_eq!(unsafe { qt_report_len(report, &mut rows) }, QtStatus::Ok);
    assert_eq!(unsafe { qt_report_succeeded(report, &mut ok) }, QtStatus::Ok);
    assert_eq!(rows, n);
    assert!(ok);
    assert_eq!(unsafe { qt_report_verdict(report, rows, &mut verdict) }, QtStatus::InvalidArgument);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qt_report_json(report, &mut json) }, QtStatus::Ok);
    let parsed: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(parsed["seed"], 42);
    assert_eq!(parsed["results"].as_array().unwrap().len(), n);
    unsafe { qt_report_free(report) };
}
