//! Exercises the C ABI from Rust: status codes, handle lifecycle, and the
//! generated header.

use std::ffi::{CStr, CString};
use std::path::Path;

use ghzbell_ffi::*;

fn render_to_string(report: *const GhzbellReport) -> String {
    let ptr = unsafe { ghzbell_report_render(report) };
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { ghzbell_string_free(ptr) };
    text
}

#[test]
fn version_is_a_static_string() {
    let ptr = ghzbell_version();
    assert!(!ptr.is_null());
    let version = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn verify_ghz_round_trip() {
    let mut report: *mut GhzbellReport = std::ptr::null_mut();
    let status = unsafe { ghzbell_verify_ghz(&mut report) };
    assert_eq!(status, GhzbellStatus::Ok);
    assert!(!report.is_null());
    assert_eq!(unsafe { ghzbell_report_passed(report) }, 1);
    assert!(unsafe { ghzbell_report_check_count(report) } >= 8);
    let text = render_to_string(report);
    assert!(text.contains("result: pass"));
    assert!(text.contains("eigenvalue A4"));
    unsafe { ghzbell_report_free(report) };
}

#[test]
fn scan_counterfactuals_round_trip() {
    let mut report: *mut GhzbellReport = std::ptr::null_mut();
    assert_eq!(
        unsafe { ghzbell_scan_counterfactuals(&mut report) },
        GhzbellStatus::Ok
    );
    let text = render_to_string(report);
    assert!(text.contains("satisfying the three product constraints"));
    unsafe { ghzbell_report_free(report) };
}

#[test]
fn null_out_pointer_is_rejected() {
    unsafe {
        assert_eq!(
            ghzbell_verify_ghz(std::ptr::null_mut()),
            GhzbellStatus::NullArgument
        );
        assert_eq!(ghzbell_report_passed(std::ptr::null()), -1);
        assert_eq!(ghzbell_report_check_count(std::ptr::null()), 0);
        assert!(ghzbell_report_render(std::ptr::null()).is_null());
    }
    unsafe {
        ghzbell_report_free(std::ptr::null_mut());
        ghzbell_string_free(std::ptr::null_mut());
    }
}

#[test]
fn measure_is_deterministic_through_the_abi() {
    let sequence = CString::new("A1:spin,A2").unwrap();
    let run = || {
        let mut report: *mut GhzbellReport = std::ptr::null_mut();
        let status = unsafe {
            ghzbell_measure(
                sequence.as_ptr(),
                GhzbellMeasureMode::Product,
                300,
                11,
                &mut report,
            )
        };
        assert_eq!(status, GhzbellStatus::Ok);
        let text = render_to_string(report);
        unsafe { ghzbell_report_free(report) };
        text
    };
    assert_eq!(run(), run());
}

#[test]
fn measure_rejects_bad_sequences() {
    let sequence = CString::new("A9").unwrap();
    let mut report: *mut GhzbellReport = std::ptr::null_mut();
    let status = unsafe {
        ghzbell_measure(
            sequence.as_ptr(),
            GhzbellMeasureMode::Product,
            10,
            1,
            &mut report,
        )
    };
    assert_eq!(status, GhzbellStatus::InvalidArgument);
    assert!(report.is_null());
}

#[test]
fn bell_sim_reports_the_expected_violation() {
    let angles = [0.0f64, 60.0, 120.0];
    let mut report: *mut GhzbellReport = std::ptr::null_mut();
    let status = unsafe {
        ghzbell_bell_sim(
            angles.as_ptr(),
            angles.len(),
            GhzbellSimMode::Independent,
            2000,
            7,
            &mut report,
        )
    };
    assert_eq!(status, GhzbellStatus::Ok);
    assert_eq!(unsafe { ghzbell_report_passed(report) }, 1);
    let text = render_to_string(report);
    assert!(text.contains("bell3 violated (expected)"));
    unsafe { ghzbell_report_free(report) };
}

#[test]
fn bell_sim_rejects_wrong_angle_counts() {
    let angles = [0.0f64, 60.0];
    let mut report: *mut GhzbellReport = std::ptr::null_mut();
    let status = unsafe {
        ghzbell_bell_sim(
            angles.as_ptr(),
            angles.len(),
            GhzbellSimMode::Independent,
            100,
            7,
            &mut report,
        )
    };
    assert_eq!(status, GhzbellStatus::InvalidArgument);
}

#[test]
fn bell3_data_saturates_on_adversarial_arrays() {
    // b = a, c = -a gives lhs = rhs = 2
    let a = [1i32, -1, 1, 1];
    let c = [-1i32, 1, -1, -1];
    let (mut lhs, mut rhs, mut satisfied) = (0.0f64, 0.0f64, -1i32);
    let status = unsafe {
        ghzbell_bell3_data(
            a.as_ptr(),
            a.as_ptr(),
            c.as_ptr(),
            a.len(),
            &mut lhs,
            &mut rhs,
            &mut satisfied,
        )
    };
    assert_eq!(status, GhzbellStatus::Ok);
    assert_eq!(lhs, 2.0);
    assert_eq!(rhs, 2.0);
    assert_eq!(satisfied, 1);
}

#[test]
fn bell3_data_rejects_non_pm1_values() {
    let a = [1i32, 0, 1];
    let status = unsafe {
        ghzbell_bell3_data(
            a.as_ptr(),
            a.as_ptr(),
            a.as_ptr(),
            a.len(),
            std::ptr::null_mut(),
            std::ptr::null_mut(),
            std::ptr::null_mut(),
        )
    };
    assert_eq!(status, GhzbellStatus::InvalidArgument);

    let status = unsafe {
        ghzbell_bell3_data(
            std::ptr::null(),
            a.as_ptr(),
            a.as_ptr(),
            a.len(),
            std::ptr::null_mut(),
            std::ptr::null_mut(),
            std::ptr::null_mut(),
        )
    };
    assert_eq!(status, GhzbellStatus::NullArgument);
}

#[test]
fn chsh_data_keeps_common_index_arrays_bounded() {
    let a = [1i32, 1, -1, -1, 1];
    let a2 = [-1i32, 1, 1, -1, -1];
    let b = [1i32, -1, -1, 1, 1];
    let b2 = [-1i32, -1, 1, 1, -1];
    let (mut lhs, mut satisfied) = (0.0f64, -1i32);
    let status = unsafe {
        ghzbell_chsh_data(
            a.as_ptr(),
            a2.as_ptr(),
            b.as_ptr(),
            b2.as_ptr(),
            a.len(),
            &mut lhs,
            std::ptr::null_mut(),
            &mut satisfied,
        )
    };
    assert_eq!(status, GhzbellStatus::Ok);
    assert!(lhs <= 2.0);
    assert_eq!(satisfied, 1);
}

#[test]
fn cross_correlation_and_singlet_scalars() {
    let a = [1i32, -1, 1, -1];
    let mut value = 0.0f64;
    let status = unsafe { ghzbell_cross_correlation(a.as_ptr(), a.as_ptr(), a.len(), &mut value) };
    assert_eq!(status, GhzbellStatus::Ok);
    assert_eq!(value, 1.0);

    let mut corr = 0.0f64;
    let status = unsafe { ghzbell_singlet_correlation(30.0, 30.0, 500, 3, &mut corr) };
    assert_eq!(status, GhzbellStatus::Ok);
    assert_eq!(corr, -1.0);

    let status = unsafe { ghzbell_singlet_correlation(0.0, 60.0, 20_000, 3, &mut corr) };
    assert_eq!(status, GhzbellStatus::Ok);
    assert!((corr + 0.5).abs() < 0.03);
}

#[test]
fn generated_header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("ghzbell.h");
    let text = std::fs::read_to_string(&header).expect("build script wrote the header");
    for symbol in [
        "GHZBELL_H",
        "GhzbellStatus",
        "GhzbellReport",
        "ghzbell_version",
        "ghzbell_verify_ghz",
        "ghzbell_scan_counterfactuals",
        "ghzbell_measure",
        "ghzbell_bell_sim",
        "ghzbell_bell3_data",
        "ghzbell_chsh_data",
        "ghzbell_cross_correlation",
        "ghzbell_singlet_correlation",
        "ghzbell_report_render",
        "ghzbell_report_free",
        "ghzbell_string_free",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
}
