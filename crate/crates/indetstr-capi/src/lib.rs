//! C ABI for the indetstr library: opaque handles, integer status codes,
//! and a thread-local message for the last error. The generated header
//! lives in `include/indetstr.h`.
//!
//! Ownership rules: every `*_new`/`*_parse` output must be released with
//! the matching `*_free`; strings returned through `char**` belong to the
//! caller until passed to `indetstr_text_free`; byte buffers likewise pair
//! with `indetstr_bytes_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use indetstr::palindrome::{any_string_from_mp, construct, expand, mp_array, PalindromeArray};
use indetstr::regularity::regular_check;
use indetstr::{codec, Alphabet, IndetString};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndetstrStatus {
    IndetstrOk = 0,
    /// A required pointer argument was null.
    IndetstrNullArgument = 1,
    /// A text argument was not valid UTF-8.
    IndetstrInvalidUtf8 = 2,
    /// The input text could not be parsed; see the last error message.
    IndetstrParseError = 3,
    /// Structurally invalid input (bad alphabet, malformed data, ...).
    IndetstrInvalidInput = 4,
    /// More distinct indeterminate letters than the alphabet allows.
    IndetstrCapacityExceeded = 5,
    /// The palindrome array violates a feasibility condition.
    IndetstrInfeasible = 6,
    /// An output buffer is too small; nothing was written.
    IndetstrBufferTooSmall = 7,
    /// An internal invariant failed; see the last error message.
    IndetstrInternalError = 8,
}

use IndetstrStatus::*;

/// Opaque alphabet handle.
pub struct IndetstrAlphabet {
    inner: Alphabet,
}

/// Opaque string handle.
pub struct IndetstrString {
    inner: IndetString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl std::fmt::Display) {
    let text = CString::new(msg.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(err: &indetstr::Error) -> IndetstrStatus {
    use indetstr::Error::*;
    match err {
        Parse { .. } | EmptyString => IndetstrParseError,
        CapacityExceeded { .. } => IndetstrCapacityExceeded,
        Infeasible(_) => IndetstrInfeasible,
        _ => IndetstrInvalidInput,
    }
}

fn fail(err: indetstr::Error) -> IndetstrStatus {
    let status = status_of(&err);
    set_error(err);
    status
}

/// Wraps a body so that a panic can never unwind across the ABI.
fn guarded(body: impl FnOnce() -> IndetstrStatus) -> IndetstrStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            IndetstrInternalError
        }
    }
}

/// Message describing the most recent error on this thread, or null.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn indetstr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn indetstr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, IndetstrStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(IndetstrNullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        IndetstrInvalidUtf8
    })
}

/// Builds an alphabet from UTF-8 characters in rank order.
/// `code_width_bits` 0 means the 8-bit default; `sigma_star` `UINT32_MAX`
/// means the largest capacity the width allows.
///
/// # Safety
/// `characters` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn indetstr_alphabet_new(
    characters: *const c_char,
    code_width_bits: u8,
    sigma_star: u32,
    out: *mut *mut IndetstrAlphabet,
) -> IndetstrStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return IndetstrNullArgument;
        }
        let chars = match utf8_arg(characters) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let width = if code_width_bits == 0 { 8 } else { code_width_bits };
        let capacity = (sigma_star != u32::MAX).then_some(sigma_star);
        match Alphabet::with_config(chars.chars(), width, capacity) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(IndetstrAlphabet { inner }));
                IndetstrOk
            }
            Err(e) => fail(e),
        }
    })
}

/// The `a,c,g,t` preset with half-byte codes.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn indetstr_alphabet_dna(out: *mut *mut IndetstrAlphabet) -> IndetstrStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return IndetstrNullArgument;
        }
        *out = Box::into_raw(Box::new(IndetstrAlphabet {
            inner: Alphabet::dna(),
        }));
        IndetstrOk
    })
}

/// # Safety
/// `alphabet` must come from an `indetstr_alphabet_*` constructor and not
/// have been freed already; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn indetstr_alphabet_free(alphabet: *mut IndetstrAlphabet) {
    if !alphabet.is_null() {
        drop(Box::from_raw(alphabet));
    }
}

/// Number of base characters, or 0 for null.
#[no_mangle]
pub extern "C" fn indetstr_alphabet_sigma(alphabet: *const IndetstrAlphabet) -> u32 {
    if alphabet.is_null() {
        return 0;
    }
    unsafe { (*alphabet).inner.sigma() }
}

/// Parses the text format (`a{a,c}b`, `*` for the don't-care).
///
/// # Safety
/// `alphabet` must be a live alphabet handle, `text` a valid NUL-terminated
/// string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_parse(
    alphabet: *const IndetstrAlphabet,
    text: *const c_char,
    out: *mut *mut IndetstrString,
) -> IndetstrStatus {
    guarded(|| {
        if alphabet.is_null() || out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let text = match utf8_arg(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match IndetString::parse(text, &(*alphabet).inner) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(IndetstrString { inner }));
                IndetstrOk
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_free(s: *mut IndetstrString) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of letters, or 0 for null.
#[no_mangle]
pub extern "C" fn indetstr_string_len(s: *const IndetstrString) -> usize {
    if s.is_null() {
        return 0;
    }
    unsafe { (*s).inner.len() }
}

/// Maximum letter scope of the string, or 0 for null.
#[no_mangle]
pub extern "C" fn indetstr_string_scope(s: *const IndetstrString) -> u32 {
    if s.is_null() {
        return 0;
    }
    unsafe { (*s).inner.scope() }
}

/// Renders the text format into a newly allocated string.
///
/// # Safety
/// `s` must be a live string handle and `out` a valid pointer; release the
/// result with `indetstr_text_free`.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_to_text(
    s: *const IndetstrString,
    out: *mut *mut c_char,
) -> IndetstrStatus {
    guarded(|| {
        if s.is_null() || out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        match CString::new((*s).inner.to_text()) {
            Ok(text) => {
                *out = text.into_raw();
                IndetstrOk
            }
            Err(_) => {
                set_error("text contains an interior NUL");
                IndetstrInternalError
            }
        }
    })
}

/// # Safety
/// `text` must come from this library and not have been freed; null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn indetstr_text_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Copies the integer codes (0 = don't-care, 1..sigma = regular, above
/// sigma = indeterminate-table entries) into `out`.
///
/// # Safety
/// `s` must be a live handle and `out` point to at least `out_len` writable
/// `uint32_t`s.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_codes(
    s: *const IndetstrString,
    out: *mut u32,
    out_len: usize,
) -> IndetstrStatus {
    guarded(|| {
        if s.is_null() || out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let codes = &(*s).inner.encoding().codes;
        if out_len < codes.len() {
            set_error(format!("need room for {} codes", codes.len()));
            return IndetstrBufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(codes.as_ptr(), out, codes.len());
        IndetstrOk
    })
}

/// Serializes to the binary file format into a newly allocated buffer.
///
/// # Safety
/// `s` must be a live handle; `out` and `out_len` must be valid pointers;
/// release the buffer with `indetstr_bytes_free`.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_to_bytes(
    s: *const IndetstrString,
    out: *mut *mut u8,
    out_len: *mut usize,
) -> IndetstrStatus {
    guarded(|| {
        if s.is_null() || out.is_null() || out_len.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let bytes = codec::to_bytes(&(*s).inner).into_boxed_slice();
        *out_len = bytes.len();
        *out = Box::into_raw(bytes) as *mut u8;
        IndetstrOk
    })
}

/// # Safety
/// `(data, len)` must be exactly what `indetstr_string_to_bytes` returned.
#[no_mangle]
pub unsafe extern "C" fn indetstr_bytes_free(data: *mut u8, len: usize) {
    if !data.is_null() {
        drop(Box::from_raw(std::ptr::slice_from_raw_parts_mut(data, len)));
    }
}

/// Deserializes the binary file format.
///
/// # Safety
/// `alphabet` must be a live handle, `data` readable for `len` bytes, and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn indetstr_string_from_bytes(
    alphabet: *const IndetstrAlphabet,
    data: *const u8,
    len: usize,
    out: *mut *mut IndetstrString,
) -> IndetstrStatus {
    guarded(|| {
        if alphabet.is_null() || data.is_null() || out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let bytes = std::slice::from_raw_parts(data, len);
        match codec::from_bytes(&(*alphabet).inner, bytes) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(IndetstrString { inner }));
                IndetstrOk
            }
            Err(e) => fail(e),
        }
    })
}

/// Decides regularity. `is_regular` always receives the verdict; when the
/// string is regular and `witness` is non-null it receives the lex-least
/// scope-1 string (`indetstr_string_len` values), and `sigma_prime`, when
/// non-null, the number of classes.
///
/// # Safety
/// `s` must be a live handle and `is_regular` valid; `witness`, when
/// non-null, must point to at least `indetstr_string_len(s)` writable
/// `uint32_t`s.
#[no_mangle]
pub unsafe extern "C" fn indetstr_regular_check(
    s: *const IndetstrString,
    is_regular: *mut bool,
    witness: *mut u32,
    sigma_prime: *mut u32,
) -> IndetstrStatus {
    guarded(|| {
        if s.is_null() || is_regular.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        match regular_check(&(*s).inner) {
            Some(w) => {
                *is_regular = true;
                if !witness.is_null() {
                    std::ptr::copy_nonoverlapping(w.y.as_ptr(), witness, w.y.len());
                }
                if !sigma_prime.is_null() {
                    *sigma_prime = w.sigma_prime;
                }
            }
            None => *is_regular = false,
        }
        IndetstrOk
    })
}

/// Writes the maximal palindrome array of the expanded string; the buffer
/// needs `2 * indetstr_string_len(s) + 1` entries.
///
/// # Safety
/// `s` must be a live handle and `out` point to `out_len` writable
/// `uint32_t`s.
#[no_mangle]
pub unsafe extern "C" fn indetstr_mp(
    s: *const IndetstrString,
    out: *mut u32,
    out_len: usize,
) -> IndetstrStatus {
    guarded(|| {
        if s.is_null() || out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let arr = mp_array(&expand(&(*s).inner));
        if out_len < arr.len() {
            set_error(format!("need room for {} values", arr.len()));
            return IndetstrBufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(arr.values().as_ptr(), out, arr.len());
        IndetstrOk
    })
}

/// Checks the feasibility conditions of a palindrome array. Returns Ok,
/// Infeasible (the last error message names the violated condition), or an
/// argument error.
///
/// # Safety
/// `values` must be readable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn indetstr_mp_feasible(values: *const u32, len: usize) -> IndetstrStatus {
    guarded(|| {
        if values.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let arr = PalindromeArray::new(std::slice::from_raw_parts(values, len).to_vec());
        match arr.check_feasible() {
            Ok(()) => IndetstrOk,
            Err(v) => {
                set_error(v);
                IndetstrInfeasible
            }
        }
    })
}

/// Reverse engineers a feasible palindrome array. On success `text_out`
/// receives the string in the integer text format (`#1#{2,3}#...#`),
/// `regular_out` whether a scope-1 realization exists (the output is then
/// the lex-least one), and `sigma_out` the number of characters used.
///
/// # Safety
/// `values` must be readable for `len` entries; the three output pointers
/// must be valid; release `text_out` with `indetstr_text_free`.
#[no_mangle]
pub unsafe extern "C" fn indetstr_construct(
    values: *const u32,
    len: usize,
    strict: bool,
    text_out: *mut *mut c_char,
    regular_out: *mut bool,
    sigma_out: *mut u32,
) -> IndetstrStatus {
    guarded(|| {
        if values.is_null() || text_out.is_null() || regular_out.is_null() || sigma_out.is_null()
        {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let arr = PalindromeArray::new(std::slice::from_raw_parts(values, len).to_vec());
        match construct(&arr, strict) {
            Ok(c) => match CString::new(c.star.to_int_text()) {
                Ok(text) => {
                    *text_out = text.into_raw();
                    *regular_out = c.regular;
                    *sigma_out = c.sigma;
                    IndetstrOk
                }
                Err(_) => {
                    set_error("text contains an interior NUL");
                    IndetstrInternalError
                }
            },
            Err(e) => fail(e),
        }
    })
}

/// Produces some string realizing a feasible palindrome array, in the
/// integer text format.
///
/// # Safety
/// `values` must be readable for `len` entries and `text_out` valid;
/// release the text with `indetstr_text_free`.
#[no_mangle]
pub unsafe extern "C" fn indetstr_any_string(
    values: *const u32,
    len: usize,
    text_out: *mut *mut c_char,
) -> IndetstrStatus {
    guarded(|| {
        if values.is_null() || text_out.is_null() {
            set_error("null argument");
            return IndetstrNullArgument;
        }
        let arr = PalindromeArray::new(std::slice::from_raw_parts(values, len).to_vec());
        match any_string_from_mp(&arr) {
            Ok(star) => match CString::new(star.to_int_text()) {
                Ok(text) => {
                    *text_out = text.into_raw();
                    IndetstrOk
                }
                Err(_) => {
                    set_error("text contains an interior NUL");
                    IndetstrInternalError
                }
            },
            Err(e) => fail(e),
        }
    })
}
