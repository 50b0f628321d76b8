//! C interface to `thompson-strands`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `_free` function. Every fallible call returns a
//! [`TsStatus`] and writes its result through an out pointer. After a
//! failure, [`ts_last_error_message`] describes it; the message belongs to
//! the library and stays valid until the next call on the same thread.
//!
//! Strings returned through `char **` are owned by the caller and must be
//! released with [`ts_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use thompson_strands::config::{config_map, is_in_cf, is_in_df, Configuration};
use thompson_strands::diagram::StrandDiagram;
use thompson_strands::format::{emit_diagram, parse_configuration, parse_diagram, parse_generalized, parse_word};
use thompson_strands::generalized::GeneralizedStrandDiagram;
use thompson_strands::rational::format_tuple;
use thompson_strands::thompson::FElement;
use thompson_strands::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    Panic = 5,
}

/// A strand diagram.
pub struct TsDiagram {
    inner: StrandDiagram,
}

/// A point of CF.
pub struct TsConfiguration {
    inner: Configuration,
}

/// A generalized strand diagram.
pub struct TsGeneralized {
    inner: GeneralizedStrandDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(status: TsStatus, message: &str) -> TsStatus {
    set_error(message);
    status
}

impl From<Error> for TsStatus {
    fn from(e: Error) -> Self {
        let status = if e.is_parse() {
            TsStatus::ParseError
        } else {
            TsStatus::DomainError
        };
        fail(status, &e.to_string())
    }
}

/// Runs `body`, turning panics into `TsStatus::Panic`.
fn guard(body: impl FnOnce() -> Result<(), TsStatus>) -> TsStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TsStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(TsStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TsStatus> {
    if s.is_null() {
        return Err(fail(TsStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TsStatus::InvalidUtf8, "string argument is not valid UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, TsStatus> {
    p.as_ref().ok_or_else(|| fail(TsStatus::NullArgument, "null handle argument"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), TsStatus> {
    if out.is_null() {
        return Err(fail(TsStatus::NullArgument, "null out pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Result<(), TsStatus> {
    if out.is_null() {
        return Err(fail(TsStatus::NullArgument, "null out pointer"));
    }
    *out = value;
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), TsStatus> {
    if out.is_null() {
        return Err(fail(TsStatus::NullArgument, "null out pointer"));
    }
    *out = CString::new(s).expect("library output has no NUL bytes").into_raw();
    Ok(())
}

/// Description of the last failure on this thread; empty after a success.
#[no_mangle]
pub extern "C" fn ts_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the `diagram <m>` / `S i` / `M i` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_parse(text: *const c_char, out: *mut *mut TsDiagram) -> TsStatus {
    guard(|| {
        let d = parse_diagram(read_str(text)?)?;
        put(out, TsDiagram { inner: d })
    })
}

/// The reduced `(1, 1)` diagram of a word in `a`, `A`, `b`, `B`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_from_word(word: *const c_char, out: *mut *mut TsDiagram) -> TsStatus {
    guard(|| {
        let letters = parse_word(read_str(word)?)?;
        put(out, TsDiagram {
            inner: FElement::from_word(&letters).diagram().clone(),
        })
    })
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_reduce(d: *const TsDiagram, out: *mut *mut TsDiagram) -> TsStatus {
    guard(|| {
        let d = handle(d)?;
        put(out, TsDiagram { inner: d.inner.reduce() })
    })
}

/// Stacks `a` on top of `b` and reduces.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_multiply(
    a: *const TsDiagram,
    b: *const TsDiagram,
    out: *mut *mut TsDiagram,
) -> TsStatus {
    guard(|| {
        let product = handle(a)?.inner.multiply(&handle(b)?.inner)?;
        put(out, TsDiagram { inner: product })
    })
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_invert(d: *const TsDiagram, out: *mut *mut TsDiagram) -> TsStatus {
    guard(|| {
        let d = handle(d)?;
        put(out, TsDiagram { inner: d.inner.invert() })
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_equivalent(a: *const TsDiagram, b: *const TsDiagram, out: *mut bool) -> TsStatus {
    guard(|| {
        let same = handle(a)?.inner.equivalent(&handle(b)?.inner);
        put_value(out, same)
    })
}

/// # Safety
/// `d` must be a live handle; `sources` and `sinks` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_shape(d: *const TsDiagram, sources: *mut usize, sinks: *mut usize) -> TsStatus {
    guard(|| {
        let d = handle(d)?;
        put_value(sources, d.inner.sources())?;
        put_value(sinks, d.inner.sinks())
    })
}

/// The diagram in the text format it is parsed from.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_to_string(d: *const TsDiagram, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let d = handle(d)?;
        put_string(out, emit_diagram(&d.inner))
    })
}

/// The canonical encoding of the reduced diagram, e.g. `(1,2):S1`.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_encoding(d: *const TsDiagram, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let d = handle(d)?;
        put_string(out, d.inner.canonical_encoding().to_string())
    })
}

/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_diagram_free(d: *mut TsDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Whitespace-separated rationals (`p/q` or decimals) forming a CF tuple.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_parse(text: *const c_char, out: *mut *mut TsConfiguration) -> TsStatus {
    guard(|| {
        let c = Configuration::new(parse_configuration(read_str(text)?)?)?;
        put(out, TsConfiguration { inner: c })
    })
}

/// Whether a tuple lies in CF. An unparsable or empty tuple is an error.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_tuple_in_cf(text: *const c_char, out: *mut bool) -> TsStatus {
    guard(|| {
        let inside = is_in_cf(&parse_configuration(read_str(text)?)?)?;
        put_value(out, inside)
    })
}

/// Whether a tuple lies in DF.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_tuple_in_df(text: *const c_char, out: *mut bool) -> TsStatus {
    guard(|| {
        let t = parse_configuration(read_str(text)?)?;
        if t.is_empty() {
            return Err(Error::EmptyConfiguration.into());
        }
        put_value(out, is_in_df(&t))
    })
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_retract(
    c: *const TsConfiguration,
    out: *mut *mut TsConfiguration,
) -> TsStatus {
    guard(|| {
        let c = handle(c)?;
        let r = c.inner.retract().to_configuration();
        put(out, TsConfiguration { inner: r })
    })
}

/// Duplicates collapsed.
///
/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_canonicalize(
    c: *const TsConfiguration,
    out: *mut *mut TsConfiguration,
) -> TsStatus {
    guard(|| {
        let c = handle(c)?;
        let r = c.inner.canonicalize().representative().clone();
        put(out, TsConfiguration { inner: r })
    })
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_len(c: *const TsConfiguration, out: *mut usize) -> TsStatus {
    guard(|| {
        let c = handle(c)?;
        put_value(out, c.inner.len())
    })
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_to_string(c: *const TsConfiguration, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        let c = handle(c)?;
        put_string(out, format_tuple(c.inner.entries()))
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_configuration_free(c: *mut TsConfiguration) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// A diagram block followed by a `forest <l>` block.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_generalized_parse(text: *const c_char, out: *mut *mut TsGeneralized) -> TsStatus {
    guard(|| {
        let g = parse_generalized(read_str(text)?)?;
        put(out, TsGeneralized { inner: g })
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ts_generalized_config_map(
    g: *const TsGeneralized,
    out: *mut *mut TsConfiguration,
) -> TsStatus {
    guard(|| {
        let g = handle(g)?;
        put(out, TsConfiguration { inner: config_map(&g.inner) })
    })
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_generalized_free(g: *mut TsGeneralized) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}
