//! C ABI over the toolkit: opaque handles for clause sets and automata,
//! status codes for every fallible call, and a thread-local message for the
//! last error. Strings returned by `*_print` functions are owned by the
//! caller and released with [`bnftree_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use bnftree::automata::{is_empty, validate_automaton, BuchiTreeAutomaton};
use bnftree::bnf::{renormalize, ClauseSet};
use bnftree::encode::{characteristic_clause_set, TranMode};
use bnftree::tableau::{augment, build_tableau, extract_automaton};
use bnftree::text;

/// Outcome of a call across the boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnftreeStatus {
    Ok = 0,
    /// The decision procedure answered "no"; not an error.
    Unsatisfiable = 1,
    ParseError = 2,
    InvalidInput = 3,
    NullPointer = 4,
}

/// An owned clause set behind an opaque pointer.
pub struct BnftreeClauseSet {
    inner: ClauseSet,
}

/// An owned automaton behind an opaque pointer.
pub struct BnftreeAutomaton {
    inner: BuchiTreeAutomaton,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(message).expect("nul bytes stripped");
    });
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bnftree_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Crate version as a static string.
#[no_mangle]
pub extern "C" fn bnftree_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Frees a string returned by one of the `*_print` functions.
///
/// # Safety
/// `s` must have been returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn bnftree_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(src: *const c_char) -> Result<&'a str, BnftreeStatus> {
    if src.is_null() {
        set_error("null input pointer");
        return Err(BnftreeStatus::NullPointer);
    }
    CStr::from_ptr(src).to_str().map_err(|e| {
        set_error(format!("input is not UTF-8: {e}"));
        BnftreeStatus::InvalidInput
    })
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes stripped")
        .into_raw()
}

/// Parses a clause document into a new handle.
///
/// # Safety
/// `src` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_clause_set_parse(
    src: *const c_char,
    out: *mut *mut BnftreeClauseSet,
) -> BnftreeStatus {
    if out.is_null() {
        set_error("null output pointer");
        return BnftreeStatus::NullPointer;
    }
    let text = match read_str(src) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text::parse_clauses(text) {
        Ok(cs) => {
            *out = Box::into_raw(Box::new(BnftreeClauseSet { inner: cs }));
            BnftreeStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            BnftreeStatus::ParseError
        }
    }
}

/// Prints a clause set; the caller owns the returned string.
///
/// # Safety
/// `cs` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bnftree_clause_set_print(cs: *const BnftreeClauseSet) -> *mut c_char {
    if cs.is_null() {
        set_error("null clause set");
        return ptr::null_mut();
    }
    give_string(text::print_clauses(&(*cs).inner))
}

/// Releases a clause-set handle.
///
/// # Safety
/// `cs` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn bnftree_clause_set_free(cs: *mut BnftreeClauseSet) {
    if !cs.is_null() {
        drop(Box::from_raw(cs));
    }
}

/// Decides satisfiability of a clause set; writes the verdict to `out`.
///
/// # Safety
/// `cs` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_clause_set_is_satisfiable(
    cs: *const BnftreeClauseSet,
    out: *mut bool,
) -> BnftreeStatus {
    if cs.is_null() || out.is_null() {
        set_error("null pointer");
        return BnftreeStatus::NullPointer;
    }
    *out = bnftree::tableau::is_satisfiable(&(*cs).inner);
    BnftreeStatus::Ok
}

/// Builds the automaton of a satisfiable clause set. Returns
/// `Unsatisfiable` (with `out` null) when the reduced tableau has no state
/// satisfying the initial clauses.
///
/// # Safety
/// `cs` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_clause_set_to_automaton(
    cs: *const BnftreeClauseSet,
    out: *mut *mut BnftreeAutomaton,
) -> BnftreeStatus {
    if cs.is_null() || out.is_null() {
        set_error("null pointer");
        return BnftreeStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let aug = augment(&renormalize(&(*cs).inner));
    let reduced = build_tableau(&aug.clauses).reduce();
    if reduced.initial_states().is_empty() {
        set_error("unsatisfiable: the reduced tableau has no initial state");
        return BnftreeStatus::Unsatisfiable;
    }
    match extract_automaton(&reduced, &aug.clauses) {
        Ok(a) => {
            *out = Box::into_raw(Box::new(BnftreeAutomaton { inner: a }));
            BnftreeStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            BnftreeStatus::Unsatisfiable
        }
    }
}

/// Parses an automaton document into a new handle.
///
/// # Safety
/// `src` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_automaton_parse(
    src: *const c_char,
    out: *mut *mut BnftreeAutomaton,
) -> BnftreeStatus {
    if out.is_null() {
        set_error("null output pointer");
        return BnftreeStatus::NullPointer;
    }
    let text = match read_str(src) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match text::parse_automaton(text) {
        Ok(a) => {
            let report = validate_automaton(&a);
            if !report.is_clean() {
                set_error(report.to_string());
                *out = ptr::null_mut();
                return BnftreeStatus::InvalidInput;
            }
            *out = Box::into_raw(Box::new(BnftreeAutomaton { inner: a }));
            BnftreeStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            BnftreeStatus::ParseError
        }
    }
}

/// Prints an automaton; the caller owns the returned string.
///
/// # Safety
/// `a` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bnftree_automaton_print(a: *const BnftreeAutomaton) -> *mut c_char {
    if a.is_null() {
        set_error("null automaton");
        return ptr::null_mut();
    }
    give_string(text::print_automaton(&(*a).inner))
}

/// Releases an automaton handle.
///
/// # Safety
/// `a` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn bnftree_automaton_free(a: *mut BnftreeAutomaton) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Decides language emptiness; writes the verdict to `out`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_automaton_is_empty(
    a: *const BnftreeAutomaton,
    out: *mut bool,
) -> BnftreeStatus {
    if a.is_null() || out.is_null() {
        set_error("null pointer");
        return BnftreeStatus::NullPointer;
    }
    *out = is_empty(&(*a).inner);
    BnftreeStatus::Ok
}

/// Translates an automaton into its characteristic clause set. `mode` 0
/// assigns indices per distinct successor, 1 per tuple position.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bnftree_automaton_to_clause_set(
    a: *const BnftreeAutomaton,
    mode: c_int,
    out: *mut *mut BnftreeClauseSet,
) -> BnftreeStatus {
    if a.is_null() || out.is_null() {
        set_error("null pointer");
        return BnftreeStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let mode = match mode {
        0 => TranMode::Successor,
        1 => TranMode::Positional,
        _ => {
            set_error(format!("unknown translation mode {mode}"));
            return BnftreeStatus::InvalidInput;
        }
    };
    match characteristic_clause_set(&(*a).inner, mode) {
        Ok(encoded) => {
            *out = Box::into_raw(Box::new(BnftreeClauseSet { inner: encoded.clauses }));
            BnftreeStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            BnftreeStatus::InvalidInput
        }
    }
}
