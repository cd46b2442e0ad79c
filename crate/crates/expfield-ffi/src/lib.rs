//! C ABI for the expfield workbench: opaque document handles, integer
//! status codes matching the CLI exit conventions (0 computed, 2 input
//! error, 3 resource limit), and a thread-local last-error message.
//!
//! The matching declarations ship in include/expfield.h.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::ptr;

use expfield_core::cli::{execute, exit_code, Options};
use expfield_core::doc::{parse, Document};

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: String) {
    let sanitized = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = sanitized);
}

/// Opaque parsed document handle.
pub struct ExpfieldDoc {
    doc: Document,
}

/// The last error message recorded on this thread, as a NUL-terminated
/// string owned by the library. Valid until the next failing call on
/// the same thread.
#[no_mangle]
pub extern "C" fn expfield_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse an .efd document. On success writes a handle to `out` and
/// returns 0; on failure returns 2 and records the error.
///
/// # Safety
/// `src` must be a valid NUL-terminated string and `out` a valid
/// pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn expfield_doc_parse(
    src: *const c_char,
    out: *mut *mut ExpfieldDoc,
) -> c_int {
    if src.is_null() || out.is_null() {
        set_error("null pointer argument".into());
        return 2;
    }
    let text = match CStr::from_ptr(src).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("source is not valid UTF-8".into());
            return 2;
        }
    };
    match parse(text) {
        Ok(doc) => {
            *out = Box::into_raw(Box::new(ExpfieldDoc { doc }));
            0
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            2
        }
    }
}

/// Release a document handle. A null handle is ignored.
///
/// # Safety
/// `doc` must be a handle returned by `expfield_doc_parse` that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn expfield_doc_free(doc: *mut ExpfieldDoc) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Run one command against a parsed document. `args` is an array of
/// `nargs` NUL-terminated strings (field name first); `over` may be
/// null for the default relativization. On success writes a
/// heap-allocated JSON report to `out_json` (release it with
/// `expfield_string_free`) and returns 0; otherwise returns 2 for input
/// errors or 3 when a resource budget was exhausted.
///
/// # Safety
/// All pointers must be valid; `args` must point to `nargs` valid
/// strings.
#[no_mangle]
pub unsafe extern "C" fn expfield_run(
    doc: *const ExpfieldDoc,
    command: *const c_char,
    args: *const *const c_char,
    nargs: c_int,
    over: *const c_char,
    bound: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    if doc.is_null() || command.is_null() || out_json.is_null() || nargs < 0 {
        set_error("null pointer or negative argument count".into());
        return 2;
    }
    *out_json = ptr::null_mut();
    let cstr = |p: *const c_char| -> Option<String> {
        CStr::from_ptr(p).to_str().ok().map(|s| s.to_string())
    };
    let Some(command) = cstr(command) else {
        set_error("command is not valid UTF-8".into());
        return 2;
    };
    let mut arg_list = Vec::with_capacity(nargs as usize);
    for i in 0..nargs as usize {
        let p = *args.add(i);
        if p.is_null() {
            set_error(format!("argument {} is null", i));
            return 2;
        }
        let Some(s) = cstr(p) else {
            set_error(format!("argument {} is not valid UTF-8", i));
            return 2;
        };
        arg_list.push(s);
    }
    let over = if over.is_null() { None } else { cstr(over) };
    let opts = Options {
        bound: bound.max(0) as u32,
        over,
        ..Options::default()
    };
    let result = execute(&command, &(*doc).doc, &arg_list, &opts);
    let code = exit_code(&result, None);
    match result {
        Ok(report) => {
            let json = serde_json::to_string(&report).unwrap();
            *out_json = CString::new(json).unwrap().into_raw();
            code
        }
        Err(e) => {
            set_error(e.to_string());
            code
        }
    }
}

/// Release a string returned by `expfield_run`. A null pointer is
/// ignored.
///
/// # Safety
/// `s` must be a string returned by this library that has not been
/// freed already.
#[no_mangle]
pub unsafe extern "C" fn expfield_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
