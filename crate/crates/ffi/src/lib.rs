//! C interface to `lchi`.
//!
//! Objects are opaque handles created by `*_new`/`*_parse` and released by the
//! matching `*_free`. Every fallible call returns an [`LchiStatus`]; on failure
//! [`lchi_last_error`] describes the problem. Strings handed out by the
//! library must be released with [`lchi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lchi::congruence::{congruence_scan, terms_needed};
use lchi::exact::{format_rational, QPoly};
use lchi::numeric::{continuation_eval, ComplexVal, ContinuationPlan};
use lchi::special::{l_negative, LValueRequest};
use lchi::{psi_table, Error, ErrorClass, PeriodicFunction, PsiTable};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LchiStatus {
    Ok = 0,
    Parse = 1,
    Domain = 2,
    Budget = 3,
    NullArgument = 4,
    Panic = 5,
}

/// A periodic function.
pub struct LchiChi(PeriodicFunction);

/// Table of `Psi_chi(X^m)`, `m = 0..=max_degree`.
pub struct LchiPsiTable(PsiTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(e: &Error) -> LchiStatus {
    set_last_error(&e.to_string());
    match e.class() {
        ErrorClass::Parse => LchiStatus::Parse,
        ErrorClass::Domain => LchiStatus::Domain,
        ErrorClass::Budget => LchiStatus::Budget,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LchiStatus>) -> LchiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            LchiStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            LchiStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, LchiStatus> {
    if p.is_null() {
        set_last_error("null string argument");
        return Err(LchiStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error("argument is not valid UTF-8");
        LchiStatus::Parse
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, LchiStatus> {
    p.as_ref().ok_or_else(|| {
        set_last_error("null handle");
        LchiStatus::NullArgument
    })
}

fn check_out<T>(p: *mut T) -> Result<(), LchiStatus> {
    if p.is_null() {
        set_last_error("null output pointer");
        return Err(LchiStatus::NullArgument);
    }
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lchi_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lchi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `chi3`, `chi4`, `one` or `period=N;values=v1,...,vN`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_chi_parse(text: *const c_char, out: *mut *mut LchiChi) -> LchiStatus {
    guard(|| {
        check_out(out)?;
        let chi = PeriodicFunction::parse(read_str(text)?).map_err(|e| fail(&e))?;
        *out = Box::into_raw(Box::new(LchiChi(chi)));
        Ok(())
    })
}

/// # Safety
/// `chi` must come from [`lchi_chi_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lchi_chi_free(chi: *mut LchiChi) {
    if !chi.is_null() {
        drop(Box::from_raw(chi));
    }
}

/// # Safety
/// `chi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_psi_table_new(
    chi: *const LchiChi,
    max_degree: usize,
    out: *mut *mut LchiPsiTable,
) -> LchiStatus {
    guard(|| {
        check_out(out)?;
        let chi = deref(chi)?;
        *out = Box::into_raw(Box::new(LchiPsiTable(psi_table(&chi.0, max_degree))));
        Ok(())
    })
}

/// # Safety
/// `table` must come from [`lchi_psi_table_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lchi_psi_table_free(table: *mut LchiPsiTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// `Psi_chi(X^m)` as `num/den`; release with [`lchi_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_psi_moment(table: *const LchiPsiTable, m: usize, out: *mut *mut c_char) -> LchiStatus {
    guard(|| {
        check_out(out)?;
        let value = deref(table)?.0.moment(m).map_err(|e| fail(&e))?;
        *out = into_c_string(format_rational(value));
        Ok(())
    })
}

/// Exact `L_{A,chi,P}(1 - m)` as `num/den`; `poly` lists coefficients
/// lowest degree first, e.g. `"0,1,1"`.
///
/// # Safety
/// `chi` must be a live handle, `poly` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_l_negative(
    chi: *const LchiChi,
    poly: *const c_char,
    offset_a: u64,
    m: u32,
    out: *mut *mut c_char,
) -> LchiStatus {
    guard(|| {
        check_out(out)?;
        let chi = &deref(chi)?.0;
        let poly = QPoly::parse_coeffs(read_str(poly)?).map_err(|e| fail(&e))?;
        let table = psi_table(chi, poly.degree().unwrap_or(0) * m as usize);
        let req = LValueRequest::new(chi.clone(), poly, m).with_offset(offset_a);
        let value = l_negative(&req, &table).map_err(|e| fail(&e))?;
        *out = into_c_string(format_rational(&value));
        Ok(())
    })
}

/// Numeric `L_{chi,P}(s)`. `eps` and `max_terms` bound the remainder sum.
///
/// # Safety
/// `chi` must be a live handle, `poly` NUL-terminated, `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_eval(
    chi: *const LchiChi,
    poly: *const c_char,
    s_re: f64,
    s_im: f64,
    eps: f64,
    max_terms: u64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> LchiStatus {
    guard(|| {
        check_out(out_re)?;
        check_out(out_im)?;
        let chi = &deref(chi)?.0;
        let poly = QPoly::parse_coeffs(read_str(poly)?).map_err(|e| fail(&e))?;
        if eps.is_nan() || eps <= 0.0 || max_terms == 0 {
            return Err(fail(&Error::Domain("eps and max_terms must be positive".into())));
        }
        let plan = ContinuationPlan::from_poly(chi, &poly).map_err(|e| fail(&e))?.with_tolerance(eps, max_terms);
        let v = continuation_eval(&plan, ComplexVal::new(s_re, s_im)).map_err(|e| fail(&e))?;
        *out_re = v.re;
        *out_im = v.im;
        Ok(())
    })
}

/// Congruence scan for the family `Psi_chi((X(X+u))^m) / m` modulo `p`,
/// returned as a JSON object; release with [`lchi_string_free`].
///
/// # Safety
/// `chi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lchi_congruence_json(
    chi: *const LchiChi,
    p: u64,
    periods: usize,
    out: *mut *mut c_char,
) -> LchiStatus {
    guard(|| {
        check_out(out)?;
        let chi = &deref(chi)?.0;
        if p < 5 || periods == 0 {
            return Err(fail(&Error::Domain("need a prime p > 3 and periods >= 1".into())));
        }
        let table = psi_table(chi, 2 * terms_needed(p, periods));
        let report = congruence_scan(chi, p, periods, &table).map_err(|e| fail(&e))?;
        let json = serde_json::to_string(&report).expect("report serializes");
        *out = into_c_string(json);
        Ok(())
    })
}
