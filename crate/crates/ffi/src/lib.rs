//! C ABI for `cyclounits`.
//!
//! Every fallible function returns a [`CuStatus`] and writes results through
//! out-pointers. On failure a message is available from
//! [`cu_last_error_message`] on the same thread. Polynomials and
//! classifications are opaque handles released with their `_free` function.
//! Integers that may exceed 64 bits (resultants, bounds) are returned as
//! decimal strings released with [`cu_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclounits::classify::{self, Classification};
use cyclounits::cyclo;
use cyclounits::{Error, IntPoly};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    SizeLimit = 5,
    Arithmetic = 6,
    Internal = 7,
    Panic = 8,
}

/// Which of the four shapes a classification has.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuClassKind {
    /// Every `n`.
    All = 0,
    /// No `n`.
    Empty = 1,
    /// Infinitely many `n`: residues modulo a fixed modulus.
    Infinite = 2,
    /// Finitely many `n`: a bound plus the members found by scanning.
    Finite = 3,
}

/// Opaque integer polynomial.
pub struct CuPoly {
    inner: IntPoly,
}

/// Opaque result of [`cu_classify`].
pub struct CuClassification {
    inner: Classification,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CuStatus {
    match e {
        Error::Parse { .. } => CuStatus::Parse,
        Error::InvalidInput(_) | Error::ShapeNotCyclotomic => CuStatus::InvalidInput,
        Error::SizeLimit(_) | Error::DegreeLimit { .. } => CuStatus::SizeLimit,
        Error::DivisionByZero | Error::BothZero => CuStatus::Arithmetic,
        Error::OracleMismatch { .. } => CuStatus::Internal,
    }
}

struct Fail(CuStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CuStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, records any failure and never lets a panic cross the boundary.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CuStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CuStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CuStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn boxed_poly(p: IntPoly) -> *mut CuPoly {
    Box::into_raw(Box::new(CuPoly { inner: p }))
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next `cu_` call on this thread.
#[no_mangle]
pub extern "C" fn cu_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cu_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cu_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression such as `x^2-x+1` or `coeffs: 1,-1,1`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_parse(text: *const c_char, out: *mut *mut CuPoly) -> CuStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Fail(CuStatus::InvalidUtf8, e.to_string()))?;
        let p = cyclounits::parse_poly(s)?;
        write(out, boxed_poly(p), "out")
    })
}

/// Builds a polynomial from `len` coefficients, constant term first.
///
/// # Safety
/// `coeffs` must point to `len` readable values (or be null with `len == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_from_coeffs(
    coeffs: *const i64,
    len: usize,
    out: *mut *mut CuPoly,
) -> CuStatus {
    guard(|| {
        let slice = if len == 0 {
            &[][..]
        } else if coeffs.is_null() {
            return Err(null("coeffs"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        write(out, boxed_poly(IntPoly::from_i64s(slice)), "out")
    })
}

/// The `m`-th cyclotomic polynomial.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_cyclotomic(m: u64, out: *mut *mut CuPoly) -> CuStatus {
    guard(|| write(out, boxed_poly(cyclo::cyclotomic(m)?), "out"))
}

/// Releases a polynomial. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_free(p: *mut CuPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of `p`, or -1 for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_degree(p: *const CuPoly, out: *mut i64) -> CuStatus {
    guard(|| {
        let p = deref(p, "poly")?;
        write(out, p.inner.degree().map_or(-1, |d| d as i64), "out")
    })
}

/// Canonical text form, e.g. `1-x+x^2`. Free with [`cu_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_poly_to_string(p: *const CuPoly, out: *mut *mut c_char) -> CuStatus {
    guard(|| {
        let p = deref(p, "poly")?;
        write(out, to_c_string(p.inner.to_string()), "out")
    })
}

/// Decides whether `f` evaluated at an `n`-th root of `a` is a unit.
/// `resultant_out` may be null; otherwise it receives the decimal norm.
///
/// # Safety
/// `f` must be a live handle; `is_unit` must be writable; `resultant_out`
/// must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cu_check_units(
    f: *const CuPoly,
    n: u64,
    a: i64,
    is_unit: *mut bool,
    resultant_out: *mut *mut c_char,
) -> CuStatus {
    guard(|| {
        let f = deref(f, "f")?;
        let v = cyclounits::defines_units_on_roots(&f.inner, n, a, false)?;
        write(is_unit, v.is_unit, "is_unit")?;
        if !resultant_out.is_null() {
            resultant_out.write(to_c_string(v.resultant.to_string()));
        }
        Ok(())
    })
}

/// Bezout certificate `p*f + q*(x^n - a) = 1`. When `f` is not a unit,
/// `is_unit` is false and both outputs are set to null.
///
/// # Safety
/// `f` must be a live handle; the three out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_certificate(
    f: *const CuPoly,
    n: u64,
    a: i64,
    is_unit: *mut bool,
    p_out: *mut *mut CuPoly,
    q_out: *mut *mut CuPoly,
) -> CuStatus {
    guard(|| {
        let f = deref(f, "f")?;
        if is_unit.is_null() || p_out.is_null() || q_out.is_null() {
            return Err(null("output"));
        }
        let v = cyclounits::defines_units_on_roots(&f.inner, n, a, true)?;
        is_unit.write(v.is_unit);
        match v.certificate {
            Some(c) => {
                p_out.write(boxed_poly(c.p));
                q_out.write(boxed_poly(c.q));
            }
            None => {
                p_out.write(ptr::null_mut());
                q_out.write(ptr::null_mut());
            }
        }
        Ok(())
    })
}

/// Whether `f` defines generic units. When it does, `modulus` receives the
/// lcm of the cyclotomic indices; otherwise 0.
///
/// # Safety
/// `f` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_is_generic(
    f: *const CuPoly,
    generic: *mut bool,
    modulus: *mut u64,
) -> CuStatus {
    guard(|| {
        let f = deref(f, "f")?;
        let v = classify::is_generic(&f.inner)?;
        write(generic, v.generic, "generic")?;
        write(modulus, v.modulus.filter(|_| v.generic).unwrap_or(0), "modulus")
    })
}

/// Decides `Φ_m(a) = 1` and `Φ_m(a) = -1` without evaluating.
///
/// # Safety
/// Both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_phi_class(
    m: u64,
    a: i64,
    plus_one: *mut bool,
    minus_one: *mut bool,
) -> CuStatus {
    guard(|| {
        let c = cyclo::phi_is_pm1(m, a)?;
        write(plus_one, c.value_is_plus_one, "plus_one")?;
        write(minus_one, c.value_is_minus_one, "minus_one")
    })
}

/// Upper bound on the number of `n` when that set is finite, as a decimal
/// string. Free with [`cu_string_free`].
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_bound(f: *const CuPoly, a: i64, out: *mut *mut c_char) -> CuStatus {
    guard(|| {
        let f = deref(f, "f")?;
        let b = classify::compute_bound(&f.inner, a)?;
        write(out, to_c_string(b.to_string()), "out")
    })
}

/// Classifies all `n` at once. Finite sets are scanned over `1..=scan_limit`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classify(
    f: *const CuPoly,
    a: i64,
    scan_limit: u64,
    out: *mut *mut CuClassification,
) -> CuStatus {
    guard(|| {
        let f = deref(f, "f")?;
        let c = classify::classify_roots(&f.inner, a, scan_limit)?;
        write(out, Box::into_raw(Box::new(CuClassification { inner: c })), "out")
    })
}

/// Releases a classification. Null is ignored.
///
/// # Safety
/// `c` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_free(c: *mut CuClassification) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Shape of the classification.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_kind(
    c: *const CuClassification,
    out: *mut CuClassKind,
) -> CuStatus {
    guard(|| {
        let kind = match deref(c, "classification")?.inner {
            Classification::All => CuClassKind::All,
            Classification::Empty => CuClassKind::Empty,
            Classification::Infinite(_) => CuClassKind::Infinite,
            Classification::Finite { .. } => CuClassKind::Finite,
        };
        write(out, kind, "out")
    })
}

/// Residue modulus for `Infinite`, 0 otherwise.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_modulus(
    c: *const CuClassification,
    out: *mut u64,
) -> CuStatus {
    guard(|| {
        let m = match &deref(c, "classification")?.inner {
            Classification::Infinite(s) => s.modulus,
            _ => 0,
        };
        write(out, m, "out")
    })
}

/// Residues for `Infinite`, scanned members for `Finite`, empty otherwise.
/// The array is owned by the handle and lives as long as it does.
///
/// # Safety
/// `c` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_values(
    c: *const CuClassification,
    values: *mut *const u64,
    len: *mut usize,
) -> CuStatus {
    guard(|| {
        let slice: &[u64] = match &deref(c, "classification")?.inner {
            Classification::Infinite(s) => &s.residues,
            Classification::Finite { members, .. } => members,
            _ => &[],
        };
        write(values, slice.as_ptr(), "values")?;
        write(len, slice.len(), "len")
    })
}

/// Count bound for `Finite` as a decimal string, null otherwise.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_bound(
    c: *const CuClassification,
    out: *mut *mut c_char,
) -> CuStatus {
    guard(|| {
        let s = match &deref(c, "classification")?.inner {
            Classification::Finite { bound, .. } => to_c_string(bound.to_string()),
            _ => ptr::null_mut(),
        };
        write(out, s, "out")
    })
}

/// Whether `n` is in the set. For `Finite` this reflects the scan only.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cu_classification_contains(
    c: *const CuClassification,
    n: u64,
    out: *mut bool,
) -> CuStatus {
    guard(|| {
        let hit = match &deref(c, "classification")?.inner {
            Classification::All => true,
            Classification::Empty => false,
            Classification::Infinite(s) => s.contains(n),
            Classification::Finite { members, .. } => members.contains(&n),
        };
        write(out, hit, "out")
    })
}
