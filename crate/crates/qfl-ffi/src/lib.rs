//! C ABI over the qfl core: opaque polynomial handles, integer error codes
//! and JSON strings for structured results.
//!
//! The companion header `include/qfl.h` is maintained by hand and must stay
//! in sync with the signatures here. Ownership rules: every `QflPoly*` is
//! released with `qfl_poly_free`, every `char*` returned through an out
//! parameter with `qfl_string_free`.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::str::FromStr;

use qfl::families::{self, FamilyKind};
use qfl::fourier::{self, FourierCase, QuadratureRule};
use qfl::rational::{self, parse_rational};
use qfl::suites::{self, SuiteOptions};
use qfl::MPoly;

pub const QFL_OK: i32 = 0;
/// Invalid argument: unknown kind/suite, unparsable rational, bad base.
pub const QFL_ERR_DOMAIN: i32 = 1;
/// The requested verification ran and found a failing identity.
pub const QFL_ERR_VERIFY: i32 = 2;
/// A required pointer argument was null.
pub const QFL_ERR_NULL: i32 = 3;
/// A string argument was not valid UTF-8.
pub const QFL_ERR_UTF8: i32 = 4;

/// Opaque polynomial handle.
pub struct QflPoly(MPoly);

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, i32> {
    if p.is_null() {
        return Err(QFL_ERR_NULL);
    }
    CStr::from_ptr(p).to_str().map_err(|_| QFL_ERR_UTF8)
}

fn give_string(s: String, out: *mut *mut c_char) -> i32 {
    // interior NUL cannot occur in our JSON/rational output
    let c = CString::new(s).expect("no interior NUL");
    unsafe { *out = c.into_raw() };
    QFL_OK
}

/// Build family member `n`. `kind` is the family name as used by the CLI
/// (e.g. "fib", "qlucas", "rfib"); `q` is an exact rational "p/q" used only
/// by the fixed-base kinds and may be null otherwise. On success writes a
/// new handle to `out`.
///
/// # Safety
/// `kind` must be a valid NUL-terminated string, `q` null or likewise, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qfl_family_build(
    kind: *const c_char,
    n: u32,
    q: *const c_char,
    out: *mut *mut QflPoly,
) -> i32 {
    if out.is_null() {
        return QFL_ERR_NULL;
    }
    let kind = match read_str(kind).map(FamilyKind::from_str) {
        Ok(Ok(k)) => k,
        Ok(Err(_)) => return QFL_ERR_DOMAIN,
        Err(code) => return code,
    };
    let q0 = if q.is_null() {
        rational::rat(1, 2)
    } else {
        match read_str(q).map(parse_rational) {
            Ok(Ok(v)) => v,
            Ok(Err(_)) => return QFL_ERR_DOMAIN,
            Err(code) => return code,
        }
    };
    use FamilyKind::*;
    let poly = match kind {
        Fib | Lucas | MonicFib | MonicLucas | ChebU | ChebT => {
            Ok(families::classical_explicit(kind, n))
        }
        QFib | QLucas => Ok(families::q_family_explicit(kind, n)),
        QFibInv | QLucasInv => Ok(families::q_family_inverted(kind, n)),
        RFib | RLucas | SU | ST => families::r_s_family(kind, n, &q0),
        LittleQJacobi => return QFL_ERR_DOMAIN,
    };
    match poly {
        Ok(p) => {
            *out = Box::into_raw(Box::new(QflPoly(p)));
            QFL_OK
        }
        Err(_) => QFL_ERR_DOMAIN,
    }
}

/// Release a polynomial handle; null is a no-op.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qfl_poly_free(p: *mut QflPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Exact evaluation at rational (x, s, q), each written "p/q". The result
/// string (also "p/q") is written to `out`.
///
/// # Safety
/// `poly` must be a live handle; strings NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qfl_poly_eval(
    poly: *const QflPoly,
    x: *const c_char,
    s: *const c_char,
    q: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    if poly.is_null() || out.is_null() {
        return QFL_ERR_NULL;
    }
    let parse = |p: *const c_char| -> Result<qfl::Rational, i32> {
        read_str(p).and_then(|s| parse_rational(s).map_err(|_| QFL_ERR_DOMAIN))
    };
    let (x, s, q) = match (parse(x), parse(s), parse(q)) {
        (Ok(x), Ok(s), Ok(q)) => (x, s, q),
        (Err(c), _, _) | (_, Err(c), _) | (_, _, Err(c)) => return c,
    };
    match (*poly).0.eval(&x, &s, &q) {
        Ok(v) => give_string(rational::display(&v), out),
        Err(_) => QFL_ERR_DOMAIN,
    }
}

/// Serialize the polynomial's term table as JSON.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qfl_poly_to_json(poly: *const QflPoly, out: *mut *mut c_char) -> i32 {
    if poly.is_null() || out.is_null() {
        return QFL_ERR_NULL;
    }
    give_string(serde_json::to_string(&(*poly).0).unwrap(), out)
}

/// Run a verification suite (names as in the CLI). Writes the JSON report
/// to `out` whenever the suite itself could run. Returns QFL_OK when every
/// identity passed, QFL_ERR_VERIFY when some failed.
///
/// # Safety
/// `suite` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qfl_verify_suite(
    suite: *const c_char,
    n_max: u32,
    nodes: usize,
    tol: f64,
    out: *mut *mut c_char,
) -> i32 {
    if out.is_null() {
        return QFL_ERR_NULL;
    }
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let opts = SuiteOptions {
        n_max,
        nodes,
        tol,
        ..Default::default()
    };
    match suites::run_suite(suite, &opts) {
        Ok(result) => {
            let passed = result.all_passed();
            let code = give_string(serde_json::to_string(&result).unwrap(), out);
            if code != QFL_OK {
                code
            } else if passed {
                QFL_OK
            } else {
                QFL_ERR_VERIFY
            }
        }
        Err(_) => QFL_ERR_DOMAIN,
    }
}

/// Check one Fourier transform case; `kind` is "qfib" or "qlucas". Writes
/// the FourierResult JSON to `out` whether or not the check passes.
///
/// # Safety
/// `kind` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qfl_fourier_check(
    kind: *const c_char,
    n: u32,
    a: f64,
    s: f64,
    q: f64,
    y: f64,
    nodes: usize,
    tol: f64,
    out: *mut *mut c_char,
) -> i32 {
    if out.is_null() {
        return QFL_ERR_NULL;
    }
    let kind = match read_str(kind).map(FamilyKind::from_str) {
        Ok(Ok(k)) => k,
        Ok(Err(_)) => return QFL_ERR_DOMAIN,
        Err(code) => return code,
    };
    let case = match FourierCase::new(kind, n, a, s, q, y) {
        Ok(c) => c,
        Err(_) => return QFL_ERR_DOMAIN,
    };
    let rule = QuadratureRule::gauss_hermite(nodes.max(2));
    match fourier::verify_fourier_theorem(&case, &rule, tol) {
        Ok(result) => give_string(serde_json::to_string(&result).unwrap(), out),
        Err(qfl::Error::TheoremViolation(result)) => {
            let code = give_string(serde_json::to_string(&result).unwrap(), out);
            if code == QFL_OK {
                QFL_ERR_VERIFY
            } else {
                code
            }
        }
        Err(_) => QFL_ERR_DOMAIN,
    }
}

/// Release a string produced by this library; null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn qfl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
