//! C interface to `d21`.
//!
//! Objects cross the boundary as opaque heap handles released with the
//! matching `*_free`. Every fallible call returns a `D21Status`; on failure
//! `d21_last_error` describes the error on the calling thread. Strings
//! handed out by the library are released with `d21_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use d21::cohomology::{self, BlockSpec, Cochain1, Complex};
use d21::deform;
use d21::{quantize, report, Error, Symbol, Target};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum D21Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Semantic = 4,
    DivisionByZero = 5,
    Pole = 6,
    MixedParity = 7,
    BlockViolation = 8,
    UnknownName = 9,
    Io = 10,
    Json = 11,
    Internal = 12,
    Panic = 13,
}

/// A symbol in `P(4)` (possibly carrying `beta`, `h`).
pub struct D21Symbol(Symbol);

/// A 1-cochain of the embedding with its block.
pub struct D21Cochain(Cochain1);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> D21Status {
    match e {
        Error::DivisionByZero => D21Status::DivisionByZero,
        Error::Pole { .. } => D21Status::Pole,
        Error::MixedParity => D21Status::MixedParity,
        Error::Syntax { .. } => D21Status::Syntax,
        Error::Semantic(_) => D21Status::Semantic,
        Error::BlockViolation(_) => D21Status::BlockViolation,
        Error::UnknownName(_) => D21Status::UnknownName,
        Error::Internal(_) => D21Status::Internal,
        Error::Io(_) => D21Status::Io,
        Error::Json(_) => D21Status::Json,
    }
}

enum Fail {
    Status(D21Status, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> D21Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => D21Status::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside d21");
            D21Status::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(D21Status::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(D21Status::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::Status(D21Status::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail::Status(D21Status::NullPointer, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

/// Message of the last failed call on this thread; valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn d21_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn d21_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `src` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_parse(src: *const c_char, out: *mut *mut D21Symbol) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let s = d21::parse::parse_symbol(str_arg(src, "src")?)?;
        *out = Box::into_raw(Box::new(D21Symbol(s)));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_free(s: *mut D21Symbol) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Canonical text of a symbol; free with `d21_string_free`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_to_string(s: *const D21Symbol, out: *mut *mut c_char) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(ref_arg(s, "symbol")?.0.to_string());
        Ok(())
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_poisson(a: *const D21Symbol, b: *const D21Symbol, out: *mut *mut D21Symbol) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let r = ref_arg(a, "a")?.0.poisson(&ref_arg(b, "b")?.0);
        *out = Box::into_raw(Box::new(D21Symbol(r)));
        Ok(())
    })
}

/// The `h`-bracket `(A o B - (-1)^{|A||B|} B o A) / h`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_h_bracket(a: *const D21Symbol, b: *const D21Symbol, out: *mut *mut D21Symbol) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let r = quantize::h_bracket(&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0)?;
        *out = Box::into_raw(Box::new(D21Symbol(r)));
        Ok(())
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_symbol_equal(a: *const D21Symbol, b: *const D21Symbol, out: *mut bool) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ref_arg(a, "a")?.0 == ref_arg(b, "b")?.0;
        Ok(())
    })
}

/// One of `theta1`, `theta2`, `theta`, `rho2`, `thetabar1`, `rho2h`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_cochain_named(name: *const c_char, out: *mut *mut D21Cochain) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let c = cohomology::named_cocycle(str_arg(name, "name")?)?;
        *out = Box::into_raw(Box::new(D21Cochain(c)));
        Ok(())
    })
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_cochain_from_json(json: *const c_char, out: *mut *mut D21Cochain) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let v: serde_json::Value = serde_json::from_str(str_arg(json, "json")?).map_err(Error::from)?;
        *out = Box::into_raw(Box::new(D21Cochain(report::cochain_from_json(&v)?)));
        Ok(())
    })
}

/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_cochain_to_json(c: *const D21Cochain, out: *mut *mut c_char) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(report::cochain_to_json(&ref_arg(c, "cochain")?.0).to_string());
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn d21_cochain_free(c: *mut D21Cochain) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Whether `d1(c) = 0` in the cochain's complex.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_cochain_is_cocycle(c: *const D21Cochain, out: *mut bool) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let c = &ref_arg(c, "cochain")?.0;
        let cx = Complex::for_block(&c.block);
        c.validate(cx)?;
        *out = cohomology::d1(cx, c)?.is_zero();
        Ok(())
    })
}

/// Dimension of the first cohomology of block `(k, n)` with values in
/// `target` (`"P"`, `"P+"`, `"K4"`, `"K4'"`); `h_depth > 0` selects the
/// quantized complex.
///
/// # Safety
/// `target` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_h1_dim(k: i32, n: i32, target: *const c_char, h_depth: u32, out: *mut usize) -> D21Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let target: Target = str_arg(target, "target")?.parse()?;
        let block = BlockSpec { k, n, target, weight_zero: true, h_depth };
        *out = cohomology::h1_block(&block)?.dim_h1;
        Ok(())
    })
}

/// Verify one of the deformations `cor42`, `thm43`, `thm45`.
///
/// # Safety
/// `which` must be a NUL-terminated string and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn d21_deform_verify(which: *const c_char, passed: *mut bool) -> D21Status {
    guard(|| {
        let passed = out_arg(passed, "passed")?;
        *passed = match str_arg(which, "which")? {
            "cor42" => deform::verify_homomorphism(&deform::k4_deformation()?)?.passed(),
            "thm43" => deform::verify_homomorphism(&deform::pplus_deformation()?)?.passed(),
            "thm45" => deform::verify_quantized()?.passed(),
            other => return Err(Error::UnknownName(other.to_string()).into()),
        };
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn parse_and_bracket() {
        unsafe {
            let (mut a, mut b, mut r) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
            assert_eq!(d21_symbol_parse(cs("t^2").as_ptr(), &mut a), D21Status::Ok);
            assert_eq!(d21_symbol_parse(cs("tau^2").as_ptr(), &mut b), D21Status::Ok);
            assert_eq!(d21_symbol_poisson(a, b, &mut r), D21Status::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(d21_symbol_to_string(r, &mut s), D21Status::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "-4*t*tau");
            d21_string_free(s);
            for p in [a, b, r] {
                d21_symbol_free(p);
            }
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let mut a = ptr::null_mut();
            assert_eq!(d21_symbol_parse(cs("xi1^2").as_ptr(), &mut a), D21Status::Semantic);
            assert!(a.is_null());
            assert!(!CStr::from_ptr(d21_last_error()).to_bytes().is_empty());
            assert_eq!(d21_symbol_parse(cs("t +* tau").as_ptr(), &mut a), D21Status::Syntax);
            assert_eq!(d21_symbol_parse(ptr::null(), &mut a), D21Status::NullPointer);
            assert_eq!(d21_symbol_parse(cs("t").as_ptr(), ptr::null_mut()), D21Status::NullPointer);
            let mut c = ptr::null_mut();
            assert_eq!(d21_cochain_named(cs("nope").as_ptr(), &mut c), D21Status::UnknownName);
        }
    }

    #[test]
    fn cochains_and_cohomology() {
        unsafe {
            let mut c = ptr::null_mut();
            assert_eq!(d21_cochain_named(cs("theta").as_ptr(), &mut c), D21Status::Ok);
            let mut closed = false;
            assert_eq!(d21_cochain_is_cocycle(c, &mut closed), D21Status::Ok);
            assert!(closed);
            let mut js = ptr::null_mut();
            assert_eq!(d21_cochain_to_json(c, &mut js), D21Status::Ok);
            let mut back = ptr::null_mut();
            assert_eq!(d21_cochain_from_json(js, &mut back), D21Status::Ok);
            assert_eq!((*back).0, (*c).0);
            d21_string_free(js);
            d21_cochain_free(back);
            d21_cochain_free(c);
            let mut dim = 0usize;
            assert_eq!(d21_h1_dim(0, 0, cs("P").as_ptr(), 0, &mut dim), D21Status::Ok);
            assert_eq!(dim, 2);
            assert_eq!(d21_h1_dim(0, 0, cs("K4").as_ptr(), 0, &mut dim), D21Status::BlockViolation);
            let mut ok = false;
            assert_eq!(d21_deform_verify(cs("thm43").as_ptr(), &mut ok), D21Status::Ok);
            assert!(ok);
        }
    }
}
