//! C interface to `qtheta`.
//!
//! Every function returns a [`QtStatus`]; on failure the message is kept per
//! thread and read with [`qt_last_error`]. Objects cross the boundary as
//! opaque handles that the caller releases with the matching `*_free`.
//! Strings returned as `char *` are owned by the caller and released with
//! [`qt_string_free`]; `const char *` results stay owned by the library.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use qtheta::numeric::{self, EvalConfig, EvalPoint, C64};
use qtheta::registry::{self, Filter, Overrides, Status};
use qtheta::report::Report;
use qtheta::{expr, QExp, QSeries};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Domain = 4,
    UnknownId = 5,
    Panic = 6,
}

/// Verdict of one identity.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtVerdict {
    Pass = 0,
    Fail = 1,
    Evidence = 2,
    Error = 3,
}

impl From<Status> for QtVerdict {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => QtVerdict::Pass,
            Status::Fail => QtVerdict::Fail,
            Status::Evidence => QtVerdict::Evidence,
            Status::Error => QtVerdict::Error,
        }
    }
}

/// Complex number passed by value.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QtComplex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for QtComplex {
    fn from(c: C64) -> Self {
        QtComplex { re: c.re, im: c.im }
    }
}

impl From<QtComplex> for C64 {
    fn from(c: QtComplex) -> Self {
        C64::new(c.re, c.im)
    }
}

/// Exact truncated q-series.
pub struct QtSeries(QSeries);

/// Result of a verification run.
pub struct QtReport(Report);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(QtStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(QtStatus::NullPointer, format!("{what} is null"))
    }

    fn arg(msg: impl Into<String>) -> Self {
        Failure(QtStatus::InvalidArgument, msg.into())
    }
}

/// Run `body`, turning errors and panics into a status and a stored message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            QtStatus::Ok
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
            set_error(format!("internal panic: {msg}"));
            QtStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::arg(format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure::null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure(QtStatus::Domain, e.to_string())
}

/// Message of the last failed call on this thread, or "" after a success.
#[no_mangle]
pub extern "C" fn qt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, e.g. "0.1.0".
#[no_mangle]
pub extern "C" fn qt_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION.get_or_init(|| CString::new(qtheta::VERSION).unwrap_or_default()).as_ptr()
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ------------------------------------------------------------------ series

/// Expand `expression` through `steps` powers of q past its leading term.
///
/// # Safety
/// `expression` must be a NUL-terminated string; `out_series` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_expand(
    expression: *const c_char,
    steps: i64,
    out_series: *mut *mut QtSeries,
) -> QtStatus {
    guard(|| {
        let src = text(expression, "expression")?;
        let slot = out(out_series, "out_series")?;
        *slot = ptr::null_mut();
        if steps < 0 {
            return Err(Failure::arg("steps must be non-negative"));
        }
        let e = expr::parse(src).map_err(|e| Failure(QtStatus::Parse, e.to_string()))?;
        let s = expr::expand_relative(&e, steps).map_err(domain)?;
        *slot = Box::into_raw(Box::new(QtSeries(s)));
        Ok(())
    })
}

/// Product of two series, known to the smaller of their orders.
///
/// # Safety
/// `a` and `b` must be live series handles; `out_series` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_mul(
    a: *const QtSeries,
    b: *const QtSeries,
    out_series: *mut *mut QtSeries,
) -> QtStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        let slot = out(out_series, "out_series")?;
        *slot = Box::into_raw(Box::new(QtSeries(&a.0 * &b.0)));
        Ok(())
    })
}

/// Whether `a` and `b` agree up to the smaller of their orders.
///
/// # Safety
/// `a` and `b` must be live series handles; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_equal(a: *const QtSeries, b: *const QtSeries, equal: *mut bool) -> QtStatus {
    guard(|| {
        let (a, b) = (handle(a, "a")?, handle(b, "b")?);
        *out(equal, "equal")? = a.0.compare(&b.0).is_equal();
        Ok(())
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `s` must be a live series handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_term_count(s: *const QtSeries, count: *mut usize) -> QtStatus {
    guard(|| {
        let s = handle(s, "series")?;
        *out(count, "count")? = s.0.terms().count();
        Ok(())
    })
}

/// Coefficient of `q^(num/den)` as a reduced fraction string such as "-24"
/// or "3/5". Fails when the exponent lies at or beyond the known order.
///
/// # Safety
/// `s` must be a live series handle; `coefficient` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_coefficient(
    s: *const QtSeries,
    num: i64,
    den: i64,
    coefficient: *mut *mut c_char,
) -> QtStatus {
    guard(|| {
        let s = handle(s, "series")?;
        let slot = out(coefficient, "coefficient")?;
        *slot = ptr::null_mut();
        if den <= 0 {
            return Err(Failure::arg("denominator must be positive"));
        }
        let c = s.0.coefficient(QExp::new(num, den)).map_err(domain)?;
        *slot = owned_string(c.to_string());
        Ok(())
    })
}

/// Terms as "e: c, e: c, ...", or "0" for the zero series.
///
/// # Safety
/// `s` must be a live series handle; `listing` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_series_to_string(s: *const QtSeries, listing: *mut *mut c_char) -> QtStatus {
    guard(|| {
        let s = handle(s, "series")?;
        *out(listing, "listing")? = owned_string(expr::listing(&s.0));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qt_series_free(s: *mut QtSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

// ----------------------------------------------------------------- numeric

fn eval(slot: *mut QtComplex, f: impl FnOnce(&EvalConfig) -> Result<C64, numeric::NumericError>) -> QtStatus {
    guard(|| {
        let slot = unsafe { out(slot, "value")? };
        *slot = f(&EvalConfig::default()).map_err(domain)?.into();
        Ok(())
    })
}

/// `θj(z | τ)` for `j` in 1..=4.
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_theta(j: u8, z: QtComplex, tau: QtComplex, value: *mut QtComplex) -> QtStatus {
    if !(1..=4).contains(&j) {
        set_error(format!("theta index {j} is not in 1..=4"));
        return QtStatus::InvalidArgument;
    }
    eval(value, |cfg| numeric::theta(j, EvalPoint::new(z.into(), tau.into()), cfg))
}

/// `η(τ)`.
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_eta(tau: QtComplex, value: *mut QtComplex) -> QtStatus {
    eval(value, |cfg| numeric::eta(tau.into(), cfg))
}

/// `℘(z | τ)`.
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_wp(z: QtComplex, tau: QtComplex, value: *mut QtComplex) -> QtStatus {
    eval(value, |cfg| numeric::wp(EvalPoint::new(z.into(), tau.into()), cfg))
}

/// Rogers–Ramanujan continued fraction `R(τ)`.
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_rrcf(tau: QtComplex, value: *mut QtComplex) -> QtStatus {
    eval(value, |cfg| numeric::rrcf(tau.into(), cfg))
}

// ---------------------------------------------------------------- registry

fn ids() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| registry::registry().iter().map(|r| CString::new(r.id).unwrap_or_default()).collect())
}

/// Number of identities in the catalog.
#[no_mangle]
pub extern "C" fn qt_registry_len() -> usize {
    ids().len()
}

/// Id of catalog entry `index`, or null when out of range.
#[no_mangle]
pub extern "C" fn qt_registry_id(index: usize) -> *const c_char {
    ids().get(index).map_or(ptr::null(), |s| s.as_ptr())
}

fn config(seed: u64, tolerance: f64) -> Result<EvalConfig, Failure> {
    let mut cfg = EvalConfig { seed, ..EvalConfig::default() };
    if tolerance > 0.0 {
        cfg.comparison_tolerance = tolerance;
    }
    cfg.validate().map_err(|e| Failure::arg(e.to_string()))?;
    Ok(cfg)
}

/// Verify one identity. `order <= 0` keeps the record's default order and
/// `tolerance <= 0` the default tolerance.
///
/// # Safety
/// `id` must be a NUL-terminated string; `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_verify(
    id: *const c_char,
    order: i64,
    seed: u64,
    tolerance: f64,
    verdict: *mut QtVerdict,
) -> QtStatus {
    guard(|| {
        let id = text(id, "id")?;
        let slot = out(verdict, "verdict")?;
        let overrides = Overrides { order: (order > 0).then_some(order), ..Overrides::default() };
        let v = registry::verify_identity(id, &overrides, &config(seed, tolerance)?)
            .map_err(|e| Failure(QtStatus::UnknownId, e.to_string()))?;
        *slot = v.status.into();
        Ok(())
    })
}

/// Verify the whole catalog with default orders. Timings are zeroed, so the
/// JSON form depends only on `seed` and `tolerance`.
///
/// # Safety
/// `out_report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_verify_all(seed: u64, tolerance: f64, out_report: *mut *mut QtReport) -> QtStatus {
    guard(|| {
        let slot = out(out_report, "out_report")?;
        *slot = ptr::null_mut();
        let report =
            registry::verify_all(&Filter::all(), &Overrides::default(), &config(seed, tolerance)?).without_timings();
        *slot = Box::into_raw(Box::new(QtReport(report)));
        Ok(())
    })
}

/// Number of rows in a report.
///
/// # Safety
/// `report` must be a live report handle; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_report_len(report: *const QtReport, count: *mut usize) -> QtStatus {
    guard(|| {
        let r = handle(report, "report")?;
        *out(count, "count")? = r.0.results.len();
        Ok(())
    })
}

/// Verdict of row `index`.
///
/// # Safety
/// `report` must be a live report handle; `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_report_verdict(report: *const QtReport, index: usize, verdict: *mut QtVerdict) -> QtStatus {
    guard(|| {
        let r = handle(report, "report")?;
        let row = r.0.results.get(index).ok_or_else(|| Failure::arg(format!("row {index} out of range")))?;
        *out(verdict, "verdict")? = row.status.into();
        Ok(())
    })
}

/// Whether every row passed or counts as evidence.
///
/// # Safety
/// `report` must be a live report handle; `succeeded` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_report_succeeded(report: *const QtReport, succeeded: *mut bool) -> QtStatus {
    guard(|| {
        let r = handle(report, "report")?;
        *out(succeeded, "succeeded")? = r.0.succeeded();
        Ok(())
    })
}

/// The report as pretty-printed JSON.
///
/// # Safety
/// `report` must be a live report handle; `json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qt_report_json(report: *const QtReport, json: *mut *mut c_char) -> QtStatus {
    guard(|| {
        let r = handle(report, "report")?;
        *out(json, "json")? = owned_string(r.0.to_json());
        Ok(())
    })
}

/// # Safety
/// `report` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qt_report_free(report: *mut QtReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
