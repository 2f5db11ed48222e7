//! C ABI over the `osculate` library.
//!
//! Every entry point returns an [`OscStatus`]. On any status other than
//! `OSC_STATUS_OK` (and `OSC_STATUS_VERIFICATION_FAILED`, which still
//! fills its outputs), a message is available from
//! [`osc_last_error_message`] on the same thread.
//!
//! Strings handed out by this library are NUL-terminated, owned by the
//! caller, and must be released with [`osc_string_free`]. Tables are
//! opaque and released with [`osc_table_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use osculate::enumerator::{enumerate_dp_with, CountKey, CountTable, DpOptions, Mode};
use osculate::run::{
    evaluate_series, render_outcomes, run_checks, walker_system, CheckName, CheckOutcome, Format,
    SeriesKind,
};
use osculate::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OscStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// An argument could not be parsed or is out of range.
    InvalidArgument = 2,
    /// The start gaps are not allowed for the requested computation.
    BadStart = 3,
    /// A verification ran and at least one identity failed.
    VerificationFailed = 4,
    /// Internal error or caught panic.
    Internal = 5,
}

/// Enumeration result. Opaque to C.
pub struct OscTable {
    table: CountTable,
    rows: Vec<(CountKey, String)>,
}

/// One row of an [`OscTable`]. `gap2` is 0 for two walkers and `anchor`
/// is -1 unless the table was built with `positioned`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OscEntry {
    pub n: u32,
    pub gap1: u32,
    pub gap2: u32,
    pub osc: u32,
    pub anchor: i64,
    /// The count, saturated at `UINT64_MAX`; see `count_exact`.
    pub count: u64,
    /// False when the count did not fit in 64 bits.
    pub count_exact: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: OscStatus, msg: impl Into<String>) -> OscStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> OscStatus {
    let status = match e {
        Error::BadStart { .. } => OscStatus::BadStart,
        Error::Invalid(_) => OscStatus::InvalidArgument,
        _ => OscStatus::Internal,
    };
    fail(status, e.to_string())
}

fn guarded(f: impl FnOnce() -> OscStatus) -> OscStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(OscStatus::Internal, format!("internal panic: {msg}"))
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, OscStatus> {
    if p.is_null() {
        return Err(fail(OscStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(OscStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn read_start<'a>(start: *const u32, len: usize) -> Result<&'a [u32], OscStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if start.is_null() {
        return Err(fail(OscStatus::NullPointer, "start is NULL"));
    }
    Ok(std::slice::from_raw_parts(start, len))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior NUL")
        .into_raw()
}

unsafe fn write_out<T>(out: *mut T, value: T) {
    *out = value;
}

/// Counts configurations of the walker system with the given start gaps
/// (`start_len` 2 for three walkers, 1 for two) up to length `n_max`.
///
/// `mode` is one of "non-crossing", "osculating", "vicious",
/// "quasi-vicious". On success `*out` receives a table to be released
/// with [`osc_table_free`].
///
/// # Safety
/// `mode` must be a NUL-terminated string, `start` must point to
/// `start_len` values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn osc_enumerate(
    mode: *const c_char,
    start: *const u32,
    start_len: usize,
    n_max: u32,
    positioned: bool,
    out: *mut *mut OscTable,
) -> OscStatus {
    guarded(|| {
        if out.is_null() {
            return fail(OscStatus::NullPointer, "out is NULL");
        }
        write_out(out, ptr::null_mut());
        let mode: Mode = match read_str(mode, "mode").map(str::parse) {
            Ok(Ok(m)) => m,
            Ok(Err(e)) => return fail(OscStatus::InvalidArgument, e.to_string()),
            Err(s) => return s,
        };
        let start = match read_start(start, start_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let system = match walker_system(start, mode) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        let table = enumerate_dp_with(
            system,
            n_max,
            DpOptions {
                positioned,
                parallel: false,
            },
        );
        let rows = table.iter().map(|(k, c)| (*k, c.to_string())).collect();
        write_out(out, Box::into_raw(Box::new(OscTable { table, rows })));
        OscStatus::Ok
    })
}

/// Releases a table. NULL is ignored.
///
/// # Safety
/// `table` must come from [`osc_enumerate`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn osc_table_free(table: *mut OscTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of nonzero cells; 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live table.
#[no_mangle]
pub unsafe extern "C" fn osc_table_len(table: *const OscTable) -> usize {
    table.as_ref().map_or(0, |t| t.rows.len())
}

/// Copies cell `index` (in row order: length, gaps, osculations) to `*entry`.
///
/// # Safety
/// `table` must be a live table and `entry` writable.
#[no_mangle]
pub unsafe extern "C" fn osc_table_entry(
    table: *const OscTable,
    index: usize,
    entry: *mut OscEntry,
) -> OscStatus {
    guarded(|| {
        let (Some(t), false) = (table.as_ref(), entry.is_null()) else {
            return fail(OscStatus::NullPointer, "table or entry is NULL");
        };
        let Some((k, count)) = t.rows.get(index) else {
            return fail(
                OscStatus::InvalidArgument,
                format!("index {index} out of range (len {})", t.rows.len()),
            );
        };
        let exact: Option<u64> = count.parse().ok();
        write_out(
            entry,
            OscEntry {
                n: k.n,
                gap1: k.gaps.get(0),
                gap2: if k.gaps.as_slice().len() > 1 {
                    k.gaps.get(1)
                } else {
                    0
                },
                osc: k.osc,
                anchor: k.anchor.map_or(-1, i64::from),
                count: exact.unwrap_or(u64::MAX),
                count_exact: exact.is_some(),
            },
        );
        OscStatus::Ok
    })
}

/// Exact decimal count of cell `index`, or NULL if out of range.
///
/// # Safety
/// `table` must be NULL or a live table.
#[no_mangle]
pub unsafe extern "C" fn osc_table_count_string(
    table: *const OscTable,
    index: usize,
) -> *mut c_char {
    match table.as_ref().and_then(|t| t.rows.get(index)) {
        Some((_, c)) => to_c_string(c.clone()),
        None => ptr::null_mut(),
    }
}

/// The table as CSV with a header row, or NULL for a NULL table.
///
/// # Safety
/// `table` must be NULL or a live table.
#[no_mangle]
pub unsafe extern "C" fn osc_table_to_csv(table: *const OscTable) -> *mut c_char {
    table
        .as_ref()
        .map_or(ptr::null_mut(), |t| to_c_string(t.table.to_csv()))
}

/// The table as JSON (counts as decimal strings), or NULL for a NULL table.
///
/// # Safety
/// `table` must be NULL or a live table.
#[no_mangle]
pub unsafe extern "C" fn osc_table_to_json(table: *const OscTable) -> *mut c_char {
    table
        .as_ref()
        .map_or(ptr::null_mut(), |t| to_c_string(t.table.to_json()))
}

/// Evaluates a named series (as accepted by `osculate series`) through
/// `t^order` and writes its JSON form to `*out`.
///
/// # Safety
/// `kind` must be a NUL-terminated string, `start` must point to
/// `start_len` values (may be NULL when `start_len` is 0), `out` writable.
#[no_mangle]
pub unsafe extern "C" fn osc_series_json(
    kind: *const c_char,
    start: *const u32,
    start_len: usize,
    order: usize,
    out: *mut *mut c_char,
) -> OscStatus {
    guarded(|| {
        if out.is_null() {
            return fail(OscStatus::NullPointer, "out is NULL");
        }
        write_out(out, ptr::null_mut());
        let kind: SeriesKind = match read_str(kind, "kind").map(str::parse) {
            Ok(Ok(k)) => k,
            Ok(Err(e)) => return fail(OscStatus::InvalidArgument, e.to_string()),
            Err(s) => return s,
        };
        let start = match read_start(start, start_len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match evaluate_series(kind, start, order) {
            Ok(v) => {
                write_out(out, to_c_string(v.to_json_value().to_string()));
                OscStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs a named check (or "all") from start `(i, j)`. `order` 0 selects each
/// check's default. `*report_json` receives `{"passed": ..., "reports": [...]}`
/// whenever the checks ran, including when they failed.
///
/// # Safety
/// `check` must be a NUL-terminated string and `report_json` writable.
#[no_mangle]
pub unsafe extern "C" fn osc_verify(
    check: *const c_char,
    i: u32,
    j: u32,
    order: usize,
    report_json: *mut *mut c_char,
) -> OscStatus {
    guarded(|| {
        if report_json.is_null() {
            return fail(OscStatus::NullPointer, "report_json is NULL");
        }
        write_out(report_json, ptr::null_mut());
        let name = match read_str(check, "check") {
            Ok(n) => n,
            Err(s) => return s,
        };
        let (checks, skip) = if name == "all" {
            (CheckName::ALL.to_vec(), true)
        } else {
            match name.parse::<CheckName>() {
                Ok(c) => (vec![c], false),
                Err(e) => return fail(OscStatus::InvalidArgument, e),
            }
        };
        let order = (order > 0).then_some(order);
        match run_checks(&checks, i, j, order, Some(1), skip) {
            Ok(outcomes) => {
                write_out(
                    report_json,
                    to_c_string(render_outcomes(&outcomes, Format::Json)),
                );
                if outcomes.iter().all(CheckOutcome::passed) {
                    OscStatus::Ok
                } else {
                    fail(
                        OscStatus::VerificationFailed,
                        "at least one identity failed",
                    )
                }
            }
            Err(e) => from_error(e),
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn osc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn osc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn osc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
