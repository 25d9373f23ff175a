//! C ABI over `vcirc-core`.
//!
//! Fields and codes are opaque heap handles created by `*_new` functions and
//! released with the matching `*_free`. Every fallible call returns a
//! [`VcStatus`]; on failure [`vc_last_error_message`] describes the error
//! for the calling thread. Field elements travel as `uint8_t` indices in the
//! polynomial basis (for GF(4): 0, 1, a = 2, a^2 = 3); matrices are
//! row-major `n * n` byte arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use vcirc_core::addcode::{classify, vc_code, AdditiveCode, CodeClass};
use vcirc_core::gf::{Elem, Field, FieldRef};
use vcirc_core::polyring::{quotient_mul, QuotientElement};
use vcirc_core::search::{self, default_table, verify_table, SearchConfig};
use vcirc_core::veccirc::{
    companion_matrix, is_companion_invertible, is_vector_circulant, vec_circulant,
    vector_cyclic_shift, FieldMatrix, FieldVector, ShiftVector,
};
use vcirc_core::Error;

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    LengthMismatch = 4,
    FieldMismatch = 5,
    NotVectorCirculant = 6,
    TrivialCode = 7,
    EnumerationGuard = 8,
    SearchGuard = 9,
    BufferTooSmall = 10,
    Internal = 11,
    Panic = 12,
}

/// Singleton-bound class of a half-rate code.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VcCodeClass {
    Extremal = 0,
    NearExtremal = 1,
    Ordinary = 2,
    BoundViolating = 3,
}

impl From<CodeClass> for VcCodeClass {
    fn from(c: CodeClass) -> Self {
        match c {
            CodeClass::Extremal => VcCodeClass::Extremal,
            CodeClass::NearExtremal => VcCodeClass::NearExtremal,
            CodeClass::Ordinary => VcCodeClass::Ordinary,
            CodeClass::BoundViolating => VcCodeClass::BoundViolating,
        }
    }
}

/// Opaque finite field handle.
pub struct VcField {
    inner: FieldRef,
}

/// Opaque additive code handle.
pub struct VcCode {
    inner: AdditiveCode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> VcStatus {
    match e {
        Error::ElementOutOfRange { .. } | Error::ZeroInverse => VcStatus::OutOfRange,
        Error::LengthMismatch { .. } | Error::DimensionMismatch(_) => VcStatus::LengthMismatch,
        Error::FieldMismatch | Error::ContextMismatch | Error::NotF4 => VcStatus::FieldMismatch,
        Error::NotVectorCirculant => VcStatus::NotVectorCirculant,
        Error::TrivialCode => VcStatus::TrivialCode,
        Error::EnumerationGuard { .. } => VcStatus::EnumerationGuard,
        Error::SearchGuard { .. } => VcStatus::SearchGuard,
        Error::Internal(_) => VcStatus::Internal,
        _ => VcStatus::InvalidArgument,
    }
}

struct Fail(VcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(VcStatus::NullPointer, format!("{what} is NULL"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> VcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            VcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside vcirc");
            VcStatus::Panic
        }
    }
}

unsafe fn input<'a>(p: *const u8, len: usize, what: &str) -> Result<&'a [u8], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn output<'a>(p: *mut u8, len: usize, what: &str) -> Result<&'a mut [u8], Fail> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts_mut(p, len))
}

unsafe fn field_ref<'a>(f: *const VcField) -> Result<&'a FieldRef, Fail> {
    f.as_ref().map(|f| &f.inner).ok_or_else(|| null("field"))
}

unsafe fn code_ref<'a>(c: *const VcCode) -> Result<&'a AdditiveCode, Fail> {
    c.as_ref().map(|c| &c.inner).ok_or_else(|| null("code"))
}

fn pair(field: &FieldRef, lambda: &[u8], v: &[u8]) -> Result<(ShiftVector, FieldVector), Fail> {
    Ok((
        ShiftVector::from_indices(field.clone(), lambda)?,
        FieldVector::from_indices(field.clone(), v)?,
    ))
}

fn write_elems(dst: &mut [u8], src: &[Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = s.0;
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next vcirc call on the same thread.
#[no_mangle]
pub extern "C" fn vc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Creates GF(p^m) with the built-in reduction polynomial.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn vc_field_new(p: u32, m: u32, out: *mut *mut VcField) -> VcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let field = Field::new(p, m, None)?;
        *out = Box::into_raw(Box::new(VcField {
            inner: field.into(),
        }));
        Ok(())
    })
}

/// Creates GF(p^m) with an explicit monic reduction polynomial of `m + 1`
/// coefficients, lowest degree first.
///
/// # Safety
/// `modulus` must point to `m + 1` readable bytes; `out` as in [`vc_field_new`].
#[no_mangle]
pub unsafe extern "C" fn vc_field_new_with_modulus(
    p: u32,
    m: u32,
    modulus: *const u8,
    out: *mut *mut VcField,
) -> VcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let coeffs = input(modulus, m as usize + 1, "modulus")?;
        let field = Field::new(p, m, Some(coeffs))?;
        *out = Box::into_raw(Box::new(VcField {
            inner: field.into(),
        }));
        Ok(())
    })
}

/// Releases a field handle. NULL is ignored.
///
/// # Safety
/// `field` must come from a vcirc constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vc_field_free(field: *mut VcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Field order q, or 0 for NULL.
///
/// # Safety
/// `field` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vc_field_order(field: *const VcField) -> u32 {
    field.as_ref().map_or(0, |f| f.inner.order() as u32)
}

/// `*out = a + b`.
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_field_add(
    field: *const VcField,
    a: u8,
    b: u8,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let r = f.checked_add(Elem(a), Elem(b))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.0;
        Ok(())
    })
}

/// `*out = a * b`.
///
/// # Safety
/// As [`vc_field_add`].
#[no_mangle]
pub unsafe extern "C" fn vc_field_mul(
    field: *const VcField,
    a: u8,
    b: u8,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let r = f.checked_mul(Elem(a), Elem(b))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.0;
        Ok(())
    })
}

/// `*out = 1 / a`; `VC_STATUS_OUT_OF_RANGE` for `a = 0`.
///
/// # Safety
/// As [`vc_field_add`].
#[no_mangle]
pub unsafe extern "C" fn vc_field_inv(field: *const VcField, a: u8, out: *mut u8) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let r = f.inv(Elem(a))?;
        *out.as_mut().ok_or_else(|| null("out"))? = r.0;
        Ok(())
    })
}

/// One lambda-vector-cyclic shift of `v` into `out` (all of length `n`).
///
/// # Safety
/// `lambda`, `v` readable and `out` writable for `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn vc_vector_cyclic_shift(
    field: *const VcField,
    lambda: *const u8,
    v: *const u8,
    n: usize,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let (l, v) = pair(f, input(lambda, n, "lambda")?, input(v, n, "v")?)?;
        let r = vector_cyclic_shift(&l, &v)?;
        write_elems(output(out, n, "out")?, r.coords());
        Ok(())
    })
}

/// `cir_lambda(v)` into the row-major `n * n` buffer `out`.
///
/// # Safety
/// `lambda`, `v` readable for `n` bytes; `out` writable for `n * n` bytes.
#[no_mangle]
pub unsafe extern "C" fn vc_vec_circulant(
    field: *const VcField,
    lambda: *const u8,
    v: *const u8,
    n: usize,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let (l, v) = pair(f, input(lambda, n, "lambda")?, input(v, n, "v")?)?;
        let m = vec_circulant(&l, &v)?;
        write_elems(output(out, n * n, "out")?, m.entries());
        Ok(())
    })
}

/// `T_lambda` into the row-major `n * n` buffer `out`.
///
/// # Safety
/// `lambda` readable for `n` bytes; `out` writable for `n * n` bytes.
#[no_mangle]
pub unsafe extern "C" fn vc_companion_matrix(
    field: *const VcField,
    lambda: *const u8,
    n: usize,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let l = ShiftVector::from_indices(f.clone(), input(lambda, n, "lambda")?)?;
        write_elems(output(out, n * n, "out")?, companion_matrix(&l).entries());
        Ok(())
    })
}

/// Whether `T_lambda` is invertible.
///
/// # Safety
/// `lambda` readable for `n` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_is_companion_invertible(
    field: *const VcField,
    lambda: *const u8,
    n: usize,
    out: *mut bool,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let l = ShiftVector::from_indices(f.clone(), input(lambda, n, "lambda")?)?;
        *out.as_mut().ok_or_else(|| null("out"))? = is_companion_invertible(&l);
        Ok(())
    })
}

/// Whether the row-major `n * n` matrix is lambda-vector-circulant.
///
/// # Safety
/// `lambda` readable for `n` bytes, `matrix` for `n * n`; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_is_vector_circulant(
    field: *const VcField,
    lambda: *const u8,
    n: usize,
    matrix: *const u8,
    out: *mut bool,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let l = ShiftVector::from_indices(f.clone(), input(lambda, n, "lambda")?)?;
        let data = input(matrix, n * n, "matrix")?
            .iter()
            .map(|&x| Elem(x))
            .collect();
        let m = FieldMatrix::new(f.clone(), n, n, data)?;
        *out.as_mut().ok_or_else(|| null("out"))? = is_vector_circulant(&l, &m)?;
        Ok(())
    })
}

/// Product of two residues in `F[x] / <x^n - lambda(x)>`. Residues are
/// coefficient vectors of length `n`, lowest degree first.
///
/// # Safety
/// `lambda`, `a`, `b` readable and `out` writable for `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn vc_quotient_mul(
    field: *const VcField,
    lambda: *const u8,
    n: usize,
    a: *const u8,
    b: *const u8,
    out: *mut u8,
) -> VcStatus {
    guard(|| {
        let f = field_ref(field)?;
        let l = ShiftVector::from_indices(f.clone(), input(lambda, n, "lambda")?)?;
        let fa = FieldVector::from_indices(f.clone(), input(a, n, "a")?)?;
        let fb = FieldVector::from_indices(f.clone(), input(b, n, "b")?)?;
        let qa = QuotientElement::from_vector(l.clone(), &fa)?;
        let qb = QuotientElement::from_vector(l, &fb)?;
        let prod = quotient_mul(&qa, &qb)?;
        write_elems(output(out, n, "out")?, prod.to_vector().coords());
        Ok(())
    })
}

/// The additive code over GF(4) generated by `cir_lambda(v)`.
///
/// # Safety
/// `lambda`, `v` readable for `n` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_code_new(
    lambda: *const u8,
    v: *const u8,
    n: usize,
    out: *mut *mut VcCode,
) -> VcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let (l, v) = pair(
            &Field::gf4(),
            input(lambda, n, "lambda")?,
            input(v, n, "v")?,
        )?;
        let code = vc_code(&l, &v)?;
        *out = Box::into_raw(Box::new(VcCode { inner: code }));
        Ok(())
    })
}

/// The additive span of the rows of a row-major `rows * cols` GF(4) matrix.
///
/// # Safety
/// `data` readable for `rows * cols` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_code_from_generator(
    data: *const u8,
    rows: usize,
    cols: usize,
    out: *mut *mut VcCode,
) -> VcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let entries = input(data, rows * cols, "data")?
            .iter()
            .map(|&x| Elem(x))
            .collect();
        let g = FieldMatrix::new(Field::gf4(), rows, cols, entries)?;
        let code = AdditiveCode::from_generator(g)?;
        *out = Box::into_raw(Box::new(VcCode { inner: code }));
        Ok(())
    })
}

/// Releases a code handle. NULL is ignored.
///
/// # Safety
/// `code` must come from a vcirc constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vc_code_free(code: *mut VcCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Code length n (0 for NULL).
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vc_code_length(code: *const VcCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.len())
}

/// Binary dimension k (0 for NULL).
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vc_code_dimension(code: *const VcCode) -> usize {
    code.as_ref().map_or(0, |c| c.inner.dimension())
}

/// Minimum distance; `VC_STATUS_TRIVIAL_CODE` when k = 0.
///
/// # Safety
/// `code` live, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_code_min_distance(code: *const VcCode, out: *mut usize) -> VcStatus {
    guard(|| {
        let d = code_ref(code)?.min_distance()?;
        *out.as_mut().ok_or_else(|| null("out"))? = d;
        Ok(())
    })
}

/// Weight distribution `W[0..=n]` into `out`, which must hold `len >= n + 1`
/// entries.
///
/// # Safety
/// `code` live, `out` writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn vc_code_weight_distribution(
    code: *const VcCode,
    out: *mut u64,
    len: usize,
) -> VcStatus {
    guard(|| {
        let c = code_ref(code)?;
        let w = c.weight_distribution()?;
        if len < w.len() {
            return Err(Fail(
                VcStatus::BufferTooSmall,
                format!("buffer holds {len} entries, {} needed", w.len()),
            ));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        slice::from_raw_parts_mut(out, w.len()).copy_from_slice(w);
        Ok(())
    })
}

/// Position of an `(n, 2^k, d)` code relative to `d <= floor(n/2) + 1`.
#[no_mangle]
pub extern "C" fn vc_classify(n: usize, k: usize, d: usize) -> VcCodeClass {
    classify(n, k, d).class.into()
}

/// Recomputes the built-in table of best vector-circulant codes.
///
/// # Safety
/// `passed` and `total` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_verify_default_table(
    passed: *mut usize,
    total: *mut usize,
) -> VcStatus {
    guard(|| {
        let report = verify_table(&default_table())?;
        *passed.as_mut().ok_or_else(|| null("passed"))? = report.passed;
        *total.as_mut().ok_or_else(|| null("total"))? = report.total;
        Ok(())
    })
}

/// Runs a search and returns its JSON record in `*out_json`, to be released
/// with [`vc_string_free`]. `mode` is `"exhaustive"` or `"random"`.
///
/// # Safety
/// `mode` must be a NUL-terminated string; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn vc_search_json(
    n: usize,
    mode: *const c_char,
    seed: u64,
    budget: u64,
    workers: usize,
    allow_large: bool,
    out_json: *mut *mut c_char,
) -> VcStatus {
    guard(|| {
        if mode.is_null() {
            return Err(null("mode"));
        }
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let mode = CStr::from_ptr(mode)
            .to_str()
            .map_err(|_| Fail(VcStatus::InvalidArgument, "mode is not UTF-8".into()))?
            .parse()?;
        let mut cfg = match mode {
            search::SearchMode::Exhaustive => SearchConfig::exhaustive(n),
            search::SearchMode::Random => SearchConfig::random(n, seed, budget),
        }
        .with_workers(workers.max(1));
        if allow_large {
            cfg = cfg.unguarded();
        }
        let json = search::search(&cfg)?.to_json();
        *out_json = CString::new(json)
            .map_err(|_| Fail(VcStatus::Internal, "interior NUL in JSON".into()))?
            .into_raw();
        Ok(())
    })
}

/// Releases a string returned by vcirc. NULL is ignored.
///
/// # Safety
/// `s` must come from a vcirc function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
