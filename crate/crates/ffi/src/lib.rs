//! C interface to the eqcob engine.
//!
//! Every function returns an [`EqcobStatus`]. On failure the message is
//! available from [`eqcob_last_error_message`] on the same thread. Handles
//! and strings handed out must be released with the matching `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eqcob::cli::{build_action, parse_hom, recheck_certificate_json, CertifyJson};
use eqcob::criteria::{certify_action, is_nonbounding, SearchPolicy, Verdict};
use eqcob::milnor::MilnorAction;
use eqcob::repring::RepElement;
use eqcob::{Certificate, CoefficientKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqcobStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    Inconclusive = 3,
    ComputationFailed = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqcobKind {
    /// Coefficient of `b_k`.
    Single = 0,
    /// Coefficient of `b_{k-1} b_1`.
    Split = 1,
}

/// A Milnor manifold class with its η-image.
pub struct EqcobClass {
    action: MilnorAction,
    eta: RepElement,
}

/// A proven indecomposability certificate.
pub struct EqcobCertificate {
    cert: Certificate,
    json: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior NUL"));
}

fn fail(status: EqcobStatus, msg: impl Into<String>) -> EqcobStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> EqcobStatus) -> EqcobStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(EqcobStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, EqcobStatus> {
    if p.is_null() {
        return Err(fail(EqcobStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(EqcobStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn out_string(s: String, out: *mut *mut c_char) -> EqcobStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null first.
            unsafe { *out = c.into_raw() };
            EqcobStatus::Ok
        }
        Err(_) => fail(EqcobStatus::ComputationFailed, "string contains NUL"),
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(EqcobStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn eqcob_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eqcob_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds `H(m, n)`. `hom` is null for the standard `(Z_2)^n` action or a
/// subset list such as `"1;2;3,4"`; `rank` is 0 to infer it.
///
/// # Safety
/// `hom` is null or a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_new(
    m: u32,
    n: u32,
    hom: *const c_char,
    rank: u32,
    out: *mut *mut EqcobClass,
) -> EqcobStatus {
    non_null!(out);
    *out = ptr::null_mut();
    guard(|| {
        let subsets = if hom.is_null() {
            None
        } else {
            let text = match str_arg(hom, "hom") {
                Ok(t) => t,
                Err(s) => return s,
            };
            match parse_hom(text) {
                Ok(v) => Some(v),
                Err(e) => return fail(EqcobStatus::InvalidArgument, e.to_string()),
            }
        };
        let rank = (rank != 0).then_some(rank as usize);
        let action = match build_action(m as usize, n as usize, subsets.as_deref(), rank) {
            Ok(a) => a,
            Err(e) => return fail(EqcobStatus::InvalidArgument, e.to_string()),
        };
        let eta = match action.eta() {
            Ok(e) => e,
            Err(e) => return fail(EqcobStatus::InvalidArgument, e.to_string()),
        };
        *out = Box::into_raw(Box::new(EqcobClass { action, eta }));
        EqcobStatus::Ok
    })
}

/// # Safety
/// `handle` is null or came from [`eqcob_class_new`] and is not used again.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_free(handle: *mut EqcobClass) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Degree `m + n - 1` of the class.
///
/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_degree(handle: *const EqcobClass, out: *mut u32) -> EqcobStatus {
    non_null!(handle, out);
    *out = (*handle).action.dimension() as u32;
    EqcobStatus::Ok
}

/// Rank of the acting group.
///
/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_rank(handle: *const EqcobClass, out: *mut u32) -> EqcobStatus {
    non_null!(handle, out);
    *out = (*handle).action.rank() as u32;
    EqcobStatus::Ok
}

/// Number of monomials in η.
///
/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_monomial_count(
    handle: *const EqcobClass,
    out: *mut usize,
) -> EqcobStatus {
    non_null!(handle, out);
    *out = (*handle).eta.len();
    EqcobStatus::Ok
}

/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_is_nonbounding(
    handle: *const EqcobClass,
    out: *mut bool,
) -> EqcobStatus {
    non_null!(handle, out);
    *out = is_nonbounding(&(*handle).eta);
    EqcobStatus::Ok
}

/// η as text, e.g. `Y{1}Y{2}Y{3}+...`. Free with [`eqcob_string_free`].
///
/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_class_to_string(
    handle: *const EqcobClass,
    out: *mut *mut c_char,
) -> EqcobStatus {
    non_null!(handle, out);
    *out = ptr::null_mut();
    out_string((*handle).eta.to_string(), out)
}

/// Searches for a certificate. With `k_min = k_max = 0` the default policy
/// is used; otherwise every `k` in `k_min..=k_max`. Returns
/// `EQCOB_STATUS_INCONCLUSIVE` with `*out = NULL` if none fires.
///
/// # Safety
/// `handle` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certify(
    handle: *const EqcobClass,
    k_min: u32,
    k_max: u32,
    out: *mut *mut EqcobCertificate,
) -> EqcobStatus {
    non_null!(handle, out);
    *out = ptr::null_mut();
    let class = &*handle;
    guard(|| {
        let d = class.action.dimension();
        let policy = match (k_min, k_max) {
            (0, 0) => SearchPolicy::default_for(class.action.m(), d),
            (lo, hi) if lo <= hi => SearchPolicy::range(lo, hi),
            (lo, hi) => {
                return fail(EqcobStatus::InvalidArgument, format!("empty k range {lo}..={hi}"))
            }
        };
        let verdict = match certify_action(&class.action, &policy) {
            Ok(v) => v,
            Err(e @ eqcob::criteria::CriteriaError::CandidateTooSmall { .. }) => {
                return fail(EqcobStatus::InvalidArgument, e.to_string())
            }
            Err(e) => return fail(EqcobStatus::ComputationFailed, e.to_string()),
        };
        let json = CertifyJson::new(&class.action, &class.eta, &verdict).to_json();
        match verdict {
            Verdict::Proven(cert) => {
                *out = Box::into_raw(Box::new(EqcobCertificate { cert, json }));
                EqcobStatus::Ok
            }
            Verdict::Inconclusive => {
                set_error("no candidate coefficient is nonzero");
                EqcobStatus::Inconclusive
            }
        }
    })
}

/// # Safety
/// `cert` is null or came from [`eqcob_certify`] and is not used again.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certificate_free(cert: *mut EqcobCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certificate_k(cert: *const EqcobCertificate, out: *mut u32) -> EqcobStatus {
    non_null!(cert, out);
    *out = (*cert).cert.k;
    EqcobStatus::Ok
}

/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certificate_kind(
    cert: *const EqcobCertificate,
    out: *mut EqcobKind,
) -> EqcobStatus {
    non_null!(cert, out);
    *out = match (*cert).cert.kind {
        CoefficientKind::Single => EqcobKind::Single,
        CoefficientKind::Split => EqcobKind::Split,
    };
    EqcobStatus::Ok
}

/// The witness coefficient as `numerator / (form)...`. Free with
/// [`eqcob_string_free`].
///
/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certificate_witness(
    cert: *const EqcobCertificate,
    out: *mut *mut c_char,
) -> EqcobStatus {
    non_null!(cert, out);
    *out = ptr::null_mut();
    out_string((*cert).cert.witness.to_string(), out)
}

/// The certificate document in the CLI JSON schema. Free with
/// [`eqcob_string_free`].
///
/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_certificate_to_json(
    cert: *const EqcobCertificate,
    out: *mut *mut c_char,
) -> EqcobStatus {
    non_null!(cert, out);
    *out = ptr::null_mut();
    out_string((*cert).json.clone(), out)
}

/// Recomputes the witness of a JSON certificate. `*out` is false when the
/// document parses but does not check out.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn eqcob_recheck_json(json: *const c_char, out: *mut bool) -> EqcobStatus {
    non_null!(out);
    *out = false;
    guard(|| {
        let doc = match str_arg(json, "json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match recheck_certificate_json(doc) {
            Ok(ok) => {
                *out = ok;
                EqcobStatus::Ok
            }
            Err(e) => fail(EqcobStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `s` is null or a string returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn eqcob_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
