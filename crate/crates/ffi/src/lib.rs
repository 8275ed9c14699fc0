//! C ABI over `tree-descent`.
//!
//! Every fallible call returns a [`TdStatus`]. On failure the message is kept
//! per thread and read with [`td_last_error_message`]. Handles come from a
//! constructor and are released with the matching `_free`. Strings returned
//! through `char **` are owned by the caller and released with
//! [`td_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use tree_descent::poly::{
    compute, log_concavity_violation, symmetry_violation, unimodality_violation, Algorithm,
};
use tree_descent::stats::{closed_form_moments, rational_to_f64, variance_lower_bound};
use tree_descent::{generate_family, DescentPolynomial, Error, RootedForest, TreeFamilySpec};

/// Opaque rooted forest.
pub struct TdForest(RootedForest);

/// Opaque descent polynomial.
pub struct TdPolynomial(DescentPolynomial);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    OutOfRange = 4,
    Overflow = 5,
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdAlgorithm {
    Auto = 0,
    Brute = 1,
    Deletion = 2,
    RankDp = 3,
}

impl From<TdAlgorithm> for Algorithm {
    fn from(a: TdAlgorithm) -> Self {
        match a {
            TdAlgorithm::Auto => Algorithm::Auto,
            TdAlgorithm::Brute => Algorithm::Brute,
            TdAlgorithm::Deletion => Algorithm::Deletion,
            TdAlgorithm::RankDp => Algorithm::RankDp,
        }
    }
}

/// First violation index for each property, or -1 when it holds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TdChecks {
    pub symmetry_violation: i64,
    pub unimodality_violation: i64,
    pub log_concavity_violation: i64,
}

/// Closed-form moments in double precision.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TdMoments {
    pub mean: f64,
    pub variance: f64,
    /// NaN unless the input is a tree on at least two vertices.
    pub variance_lower_bound: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn status_of(e: &Error) -> TdStatus {
    match e {
        Error::CapExceeded { .. } | Error::MemoExhausted { .. } => TdStatus::CapExceeded,
        _ => TdStatus::InvalidInput,
    }
}

/// Runs `body`, recording any error or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), (TdStatus, String)>) -> TdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            TdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TdStatus::Internal
        }
    }
}

fn lift(e: Error) -> (TdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TdStatus, String) {
    (TdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TdStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (TdStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior nul").into_raw();
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn td_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn td_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn td_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn forest_from(
    text: *const c_char,
    out: *mut *mut TdForest,
    parse: impl FnOnce(&str) -> tree_descent::Result<RootedForest>,
) -> TdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let text = read_str(text, "input")?;
        put(out, TdForest(parse(text).map_err(lift)?));
        Ok(())
    })
}

/// Parses a parent array such as `"5 5 4 6 6 0"`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_forest_from_parents(text: *const c_char, out: *mut *mut TdForest) -> TdStatus {
    forest_from(text, out, RootedForest::parse_parent_array)
}

/// Parses nested parentheses such as `"((()())(()))"`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_forest_from_nested(text: *const c_char, out: *mut *mut TdForest) -> TdStatus {
    forest_from(text, out, RootedForest::parse_nested)
}

/// Builds a family member from a spec such as `"dary:2:127"`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_forest_from_family(spec: *const c_char, out: *mut *mut TdForest) -> TdStatus {
    forest_from(spec, out, |s| generate_family(&s.parse::<TreeFamilySpec>()?))
}

/// # Safety
/// `f` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn td_forest_free(f: *mut TdForest) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn td_forest_size(f: *const TdForest) -> usize {
    f.as_ref().map_or(0, |f| f.0.size())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn td_forest_edge_count(f: *const TdForest) -> usize {
    f.as_ref().map_or(0, |f| f.0.edge_count())
}

/// Nested-parentheses form of the forest.
///
/// # Safety
/// `f` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_forest_to_nested(f: *const TdForest, out: *mut *mut c_char) -> TdStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("forest"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, f.0.serialize_nested());
        Ok(())
    })
}

/// Computes the descent polynomial. `brute_cap` bounds the brute-force engine
/// and is ignored by the others.
///
/// # Safety
/// `f` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_descent_poly(
    f: *const TdForest,
    algorithm: TdAlgorithm,
    brute_cap: usize,
    out: *mut *mut TdPolynomial,
) -> TdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let f = f.as_ref().ok_or_else(|| null("forest"))?;
        let p = compute(&f.0, algorithm.into(), brute_cap).map_err(lift)?;
        put(out, TdPolynomial(p));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn td_poly_free(p: *mut TdPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of coefficients (edges + 1), or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn td_poly_len(p: *const TdPolynomial) -> usize {
    p.as_ref().map_or(0, |p| p.0.coeffs().len())
}

unsafe fn coeff<'a>(p: *const TdPolynomial, k: usize) -> Result<&'a num_bigint::BigUint, (TdStatus, String)> {
    let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
    p.0.coeffs()
        .get(k)
        .ok_or_else(|| (TdStatus::OutOfRange, format!("index {k} outside 0..{}", p.0.coeffs().len())))
}

/// Coefficient `k` as a `uint64_t`; `Overflow` when it does not fit.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_poly_coeff_u64(p: *const TdPolynomial, k: usize, out: *mut u64) -> TdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = coeff(p, k)?;
        *out = c.to_u64().ok_or_else(|| (TdStatus::Overflow, format!("coefficient {k} exceeds 64 bits")))?;
        Ok(())
    })
}

/// Coefficient `k` in decimal.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_poly_coeff_string(p: *const TdPolynomial, k: usize, out: *mut *mut c_char) -> TdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, coeff(p, k)?.to_string());
        Ok(())
    })
}

/// JSON document `{"n":..,"edges":..,"coeffs":[..]}`; `n` is the vertex count.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_poly_to_json(p: *const TdPolynomial, n: usize, out: *mut *mut c_char) -> TdStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = serde_json::to_string(&p.0.to_json(n)).map_err(|e| (TdStatus::Internal, e.to_string()))?;
        put_string(out, json);
        Ok(())
    })
}

/// Symmetry, unimodality and log-concavity of the coefficients.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_poly_check(p: *const TdPolynomial, out: *mut TdChecks) -> TdStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let idx = |v: Option<usize>| v.map_or(-1, |k| k as i64);
        let c = p.0.coeffs();
        *out = TdChecks {
            symmetry_violation: idx(symmetry_violation(c)),
            unimodality_violation: idx(unimodality_violation(c)),
            log_concavity_violation: idx(log_concavity_violation(c)),
        };
        Ok(())
    })
}

/// Closed-form mean, variance and variance lower bound.
///
/// # Safety
/// `f` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_moments(f: *const TdForest, out: *mut TdMoments) -> TdStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("forest"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = closed_form_moments(&f.0);
        let bound = if f.0.is_tree() && f.0.size() >= 2 {
            rational_to_f64(&variance_lower_bound(f.0.size(), f.0.max_down_degree()).map_err(lift)?)
        } else {
            f64::NAN
        };
        *out = TdMoments {
            mean: rational_to_f64(&m.mean),
            variance: rational_to_f64(&m.variance),
            variance_lower_bound: bound,
        };
        Ok(())
    })
}

/// Exact closed-form variance as `"num/den"` (or an integer).
///
/// # Safety
/// `f` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn td_variance_exact(f: *const TdForest, out: *mut *mut c_char) -> TdStatus {
    guard(|| {
        let f = f.as_ref().ok_or_else(|| null("forest"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, closed_form_moments(&f.0).variance.to_string());
        Ok(())
    })
}
