//! C ABI over `ccx-core`.
//!
//! Complexes and maps are opaque heap handles released with their `_free`
//! functions. Every fallible call returns a [`CcxStatus`]; on failure
//! [`ccx_last_error`] describes the problem until the next call on the same
//! thread. Strings returned through out-parameters belong to the caller and
//! are released with [`ccx_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ccx_core::automorphism::{
    classify, parse_aut, Automorphism, ClassifyParams, FiniteCubing, Verdict,
};
use ccx_core::complex::{emit_ccx, parse_ccx, validate, CubeComplex};
use ccx_core::error::Error;
use ccx_core::metric::distance;
use ccx_core::subdivision::subdivide;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcxStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownVertex = 4,
    NotCubing = 5,
    InvalidMap = 6,
    Failed = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcxVerdict {
    Elliptic = 0,
    Hyperbolic = 1,
    Inversion = 2,
    Indeterminate = 3,
}

/// A finite cube complex.
pub struct CcxComplex {
    inner: CubeComplex,
}

/// An automorphism of a particular complex.
pub struct CcxMap {
    inner: Automorphism,
    vertices: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> CcxStatus {
    match e {
        Error::Parse { .. } | Error::DuplicateCorner { .. } => CcxStatus::Parse,
        Error::UnknownVertex(_) => CcxStatus::UnknownVertex,
        Error::NotBijection(_) | Error::EdgeNotPreserved(..) | Error::SquareNotPreserved(_) => {
            CcxStatus::InvalidMap
        }
        Error::Precondition(_) => CcxStatus::NotCubing,
        _ => CcxStatus::Failed,
    }
}

/// Runs `f`, recording errors and panics.
fn guard(f: impl FnOnce() -> Result<(), (CcxStatus, String)>) -> CcxStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcxStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CcxStatus::Panic
        }
    }
}

fn core<T>(r: ccx_core::error::Result<T>) -> Result<T, (CcxStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (CcxStatus, String) {
    (CcxStatus::NullArgument, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CcxStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CcxStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CcxStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (CcxStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ccx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ccx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a CCX document.
///
/// # Safety
/// `ccx` must be a NUL-terminated string and `out_complex` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_parse(
    ccx: *const c_char,
    out_complex: *mut *mut CcxComplex,
) -> CcxStatus {
    guard(|| {
        let slot = out(out_complex, "out_complex")?;
        *slot = ptr::null_mut();
        let x = core(parse_ccx(text(ccx, "ccx")?))?;
        *slot = Box::into_raw(Box::new(CcxComplex { inner: x }));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_free(c: *mut CcxComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out_count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_vertex_count(
    c: *const CcxComplex,
    out_count: *mut usize,
) -> CcxStatus {
    guard(|| {
        *out(out_count, "out_count")? = handle(c, "complex")?.inner.vertex_count();
        Ok(())
    })
}

/// Sets `*out_is_cubing` to whether all cubing checks pass.
///
/// # Safety
/// `c` must be a live handle and `out_is_cubing` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_validate(
    c: *const CcxComplex,
    out_is_cubing: *mut bool,
) -> CcxStatus {
    guard(|| {
        *out(out_is_cubing, "out_is_cubing")? = validate(&handle(c, "complex")?.inner).is_cubing();
        Ok(())
    })
}

/// Edge-path distance between two vertices named by token.
///
/// # Safety
/// `c` must be a live handle, `u` and `v` NUL-terminated strings and
/// `out_distance` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_distance(
    c: *const CcxComplex,
    u: *const c_char,
    v: *const c_char,
    out_distance: *mut usize,
) -> CcxStatus {
    guard(|| {
        let x = &handle(c, "complex")?.inner;
        let slot = out(out_distance, "out_distance")?;
        let a = core(x.vertex(text(u, "u")?))?;
        let b = core(x.vertex(text(v, "v")?))?;
        *slot = core(distance(x, a, b))?;
        Ok(())
    })
}

/// Canonical CCX text; free with [`ccx_string_free`].
///
/// # Safety
/// `c` must be a live handle and `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_emit(
    c: *const CcxComplex,
    out_text: *mut *mut c_char,
) -> CcxStatus {
    guard(|| {
        *out(out_text, "out_text")? = c_string(emit_ccx(&handle(c, "complex")?.inner));
        Ok(())
    })
}

/// The cubical subdivision as a new handle.
///
/// # Safety
/// `c` must be a live handle and `out_complex` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_complex_subdivide(
    c: *const CcxComplex,
    out_complex: *mut *mut CcxComplex,
) -> CcxStatus {
    guard(|| {
        let slot = out(out_complex, "out_complex")?;
        *slot = ptr::null_mut();
        let s = core(subdivide(&handle(c, "complex")?.inner))?;
        *slot = Box::into_raw(Box::new(CcxComplex {
            inner: s.subdivided,
        }));
        Ok(())
    })
}

/// Parses an AUT document against `c`.
///
/// # Safety
/// `c` must be a live handle, `aut` a NUL-terminated string and `out_map`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ccx_map_parse(
    c: *const CcxComplex,
    aut: *const c_char,
    out_map: *mut *mut CcxMap,
) -> CcxStatus {
    guard(|| {
        let slot = out(out_map, "out_map")?;
        *slot = ptr::null_mut();
        let x = &handle(c, "complex")?.inner;
        let f = core(parse_aut(x, text(aut, "aut")?))?;
        *slot = Box::into_raw(Box::new(CcxMap {
            inner: f,
            vertices: x.vertex_count(),
        }));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ccx_map_free(m: *mut CcxMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Classifies `m` acting on `c`. `max_power = 0` checks inversions up to
/// the order of the map. `out_report` may be null; otherwise it receives the
/// verdict line and certificate, one fact per line.
///
/// # Safety
/// `c` and `m` must be live handles, `m` parsed against `c`; `out_verdict`
/// must be valid and `out_report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn ccx_classify(
    c: *const CcxComplex,
    m: *const CcxMap,
    max_power: usize,
    out_verdict: *mut CcxVerdict,
    out_report: *mut *mut c_char,
) -> CcxStatus {
    guard(|| {
        let x = &handle(c, "complex")?.inner;
        let f = handle(m, "map")?;
        let verdict_slot = out(out_verdict, "out_verdict")?;
        if f.vertices != x.vertex_count() {
            return Err((
                CcxStatus::InvalidMap,
                "map belongs to a different complex".into(),
            ));
        }
        let g = core(FiniteCubing::new(x.clone()))?;
        let params = ClassifyParams {
            max_power: (max_power > 0).then_some(max_power),
            ..ClassifyParams::default()
        };
        let cl = core(classify(&g, &f.inner, &params))?;
        let t = |v| x.token(v).to_owned();
        let (verdict, line) = match &cl.verdict {
            Verdict::Elliptic { fixed } => (
                CcxVerdict::Elliptic,
                format!("elliptic: fixes {}", t(*fixed)),
            ),
            Verdict::Hyperbolic { delta, witness, .. } => (
                CcxVerdict::Hyperbolic,
                format!("hyperbolic: delta {delta}, witness {}", t(*witness)),
            ),
            Verdict::InversionFound { wall, power } => (
                CcxVerdict::Inversion,
                format!("inversion along wall {wall} at power {power}"),
            ),
            Verdict::Indeterminate { radius, .. } => (
                CcxVerdict::Indeterminate,
                format!("indeterminate within radius {radius}"),
            ),
        };
        *verdict_slot = verdict;
        if let Some(slot) = out_report.as_mut() {
            let mut lines = vec![line];
            lines.extend(cl.certificate);
            *slot = c_string(lines.join("\n"));
        }
        Ok(())
    })
}
