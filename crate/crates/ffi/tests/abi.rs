use std::ffi::{c_char, CStr, CString};
use std::ptr;

use osculate_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { osc_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = osc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn enumerate(mode: &str, start: &[u32], n: u32, positioned: bool) -> (OscStatus, *mut OscTable) {
    let mode = CString::new(mode).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe {
        osc_enumerate(
            mode.as_ptr(),
            start.as_ptr(),
            start.len(),
            n,
            positioned,
            &mut out,
        )
    };
    (status, out)
}

#[test]
fn enumerate_and_read_rows() {
    let (status, table) = enumerate("osculating", &[1, 1], 2, false);
    assert_eq!(status, OscStatus::Ok);
    let len = unsafe { osc_table_len(table) };
    assert!(len > 1);
    let mut total = 0;
    let mut entry = OscEntry::default();
    for k in 0..len {
        assert_eq!(
            unsafe { osc_table_entry(table, k, &mut entry) },
            OscStatus::Ok
        );
        assert!(entry.count_exact);
        assert_eq!(entry.anchor, -1);
        if entry.n == 2 {
            total += entry.count;
        }
    }
    assert_eq!(total, 40);
    unsafe { osc_table_entry(table, 0, &mut entry) };
    assert_eq!(
        (entry.n, entry.gap1, entry.gap2, entry.osc, entry.count),
        (0, 1, 1, 0, 1)
    );
    assert_eq!(take(unsafe { osc_table_count_string(table, 0) }), "1");

    assert_eq!(
        unsafe { osc_table_entry(table, len, &mut entry) },
        OscStatus::InvalidArgument
    );
    assert!(last_error().contains("out of range"));
    assert!(unsafe { osc_table_count_string(table, len) }.is_null());

    let csv = take(unsafe { osc_table_to_csv(table) });
    assert!(csv.starts_with("n,gap1,gap2,osc,count\n0,1,1,0,1\n"));
    let json: serde_json::Value =
        serde_json::from_str(&take(unsafe { osc_table_to_json(table) })).unwrap();
    assert_eq!(json["mode"], "osculating");
    unsafe { osc_table_free(table) };
}

#[test]
fn positioned_two_walker_table() {
    let (status, table) = enumerate("vicious", &[2], 3, true);
    assert_eq!(status, OscStatus::Ok);
    let mut entry = OscEntry::default();
    unsafe { osc_table_entry(table, 0, &mut entry) };
    assert_eq!((entry.gap1, entry.gap2, entry.anchor), (2, 0, 0));
    unsafe { osc_table_free(table) };
}

#[test]
fn enumerate_errors() {
    let (status, table) = enumerate("vicious", &[0, 1], 3, false);
    assert_eq!(status, OscStatus::BadStart);
    assert!(table.is_null());
    assert!(!last_error().is_empty());

    let (status, _) = enumerate("sideways", &[1, 1], 3, false);
    assert_eq!(status, OscStatus::InvalidArgument);

    let mut out = ptr::null_mut();
    let status = unsafe { osc_enumerate(ptr::null(), [1u32].as_ptr(), 1, 2, false, &mut out) };
    assert_eq!(status, OscStatus::NullPointer);
    let mode = CString::new("osculating").unwrap();
    let status = unsafe { osc_enumerate(mode.as_ptr(), ptr::null(), 2, 2, false, &mut out) };
    assert_eq!(status, OscStatus::NullPointer);
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        osc_table_free(ptr::null_mut());
        osc_string_free(ptr::null_mut());
        assert_eq!(osc_table_len(ptr::null()), 0);
        assert!(osc_table_to_csv(ptr::null()).is_null());
        assert!(osc_table_to_json(ptr::null()).is_null());
    }
}

#[test]
fn series_as_json() {
    let kind = CString::new("T").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { osc_series_json(kind.as_ptr(), ptr::null(), 0, 4, &mut out) };
    assert_eq!(status, OscStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(v.to_string().contains("224"));

    let kind = CString::new("osculating-length").unwrap();
    let status = unsafe { osc_series_json(kind.as_ptr(), [0u32, 0].as_ptr(), 2, 4, &mut out) };
    assert_eq!(status, OscStatus::BadStart);
    assert!(out.is_null());
}

#[test]
fn verify_reports() {
    let check = CString::new("main-eq").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { osc_verify(check.as_ptr(), 1, 1, 5, &mut out) };
    assert_eq!(status, OscStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["check_name"], "main-eq");

    let status = unsafe { osc_verify(check.as_ptr(), 0, 0, 5, &mut out) };
    assert_eq!(status, OscStatus::BadStart);
    assert!(last_error().contains("(0,0)"));

    let bogus = CString::new("everything").unwrap();
    assert_eq!(
        unsafe { osc_verify(bogus.as_ptr(), 1, 1, 0, &mut out) },
        OscStatus::InvalidArgument
    );
}

#[test]
fn success_clears_the_error() {
    let (status, _) = enumerate("sideways", &[1, 1], 1, false);
    assert_eq!(status, OscStatus::InvalidArgument);
    let (status, table) = enumerate("osculating", &[1, 1], 1, false);
    assert_eq!(status, OscStatus::Ok);
    assert!(osc_last_error_message().is_null());
    unsafe { osc_table_free(table) };
}

#[test]
fn version_is_the_package_version() {
    let v = unsafe { CStr::from_ptr(osc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
