//! C ABI for the ghzbell verification library.
//!
//! Conventions: every fallible call returns a [`GhzbellStatus`]; results come
//! back through out-pointers. Reports are opaque handles freed with
//! [`ghzbell_report_free`]; strings returned by this library are freed with
//! [`ghzbell_string_free`]. All functions catch panics and turn them into
//! `GHZBELL_STATUS_INTERNAL` instead of unwinding across the boundary.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use ghzbell::bell::{
    bell3_evaluate, chsh_evaluate, cross_correlation, singlet_sample, OutcomeDataset,
};
use ghzbell::cli::{run, Cli, Command, MeasureMode, SimMode};
use ghzbell::report::Report;

/// Result of every fallible call in this API.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhzbellStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    InvalidUtf8 = 3,
    Internal = 4,
}

/// How a measured observable's value is extracted.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhzbellMeasureMode {
    Product = 0,
    Spin = 1,
}

/// Which inequality experiment `ghzbell_bell_sim` runs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhzbellSimMode {
    /// Separate singlet runs per correlation; violation expected.
    Independent = 0,
    /// One common run of the hidden-direction model; satisfaction expected.
    LhvCommon = 1,
}

/// Opaque report handle.
pub struct GhzbellReport {
    inner: Report,
}

fn guarded(f: impl FnOnce() -> GhzbellStatus) -> GhzbellStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(GhzbellStatus::Internal)
}

fn finish(out_report: *mut *mut GhzbellReport, report: Report) -> GhzbellStatus {
    unsafe { *out_report = Box::into_raw(Box::new(GhzbellReport { inner: report })) };
    GhzbellStatus::Ok
}

fn run_command(command: Command, trials: u64, seed: u64) -> Result<Report, GhzbellStatus> {
    let cli = Cli {
        command,
        seed: Some(seed),
        trials: Some(trials),
        out: None,
    };
    run(&cli).map_err(|_| GhzbellStatus::InvalidArgument)
}

unsafe fn dataset_from_raw(
    label: &str,
    values: *const i32,
    len: usize,
) -> Result<OutcomeDataset, GhzbellStatus> {
    if values.is_null() {
        return Err(GhzbellStatus::NullArgument);
    }
    if len == 0 {
        return Err(GhzbellStatus::InvalidArgument);
    }
    let slice = std::slice::from_raw_parts(values, len);
    let mut out = Vec::with_capacity(len);
    for &v in slice {
        match v {
            1 => out.push(1i8),
            -1 => out.push(-1i8),
            _ => return Err(GhzbellStatus::InvalidArgument),
        }
    }
    OutcomeDataset::new(label, out).map_err(|_| GhzbellStatus::InvalidArgument)
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn ghzbell_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Verifies the GHZ operator identities, eigenvalue relations, and
/// product-basis expansion, producing a report handle.
///
/// # Safety
/// `out_report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_verify_ghz(out_report: *mut *mut GhzbellReport) -> GhzbellStatus {
    guarded(|| {
        if out_report.is_null() {
            return GhzbellStatus::NullArgument;
        }
        match run_command(Command::VerifyGhz, 1, 42) {
            Ok(report) => finish(out_report, report),
            Err(status) => status,
        }
    })
}

/// Exhaustively scans the 64 hidden-value assignments.
///
/// # Safety
/// `out_report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_scan_counterfactuals(
    out_report: *mut *mut GhzbellReport,
) -> GhzbellStatus {
    guarded(|| {
        if out_report.is_null() {
            return GhzbellStatus::NullArgument;
        }
        match run_command(Command::ScanCounterfactuals, 1, 42) {
            Ok(report) => finish(out_report, report),
            Err(status) => status,
        }
    })
}

/// Runs a measurement sequence such as "A1,A2,A1" (a token may carry a
/// ":spin" or ":product" suffix) for `trials` seeded repetitions.
///
/// # Safety
/// `sequence` must point to a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_measure(
    sequence: *const c_char,
    mode: GhzbellMeasureMode,
    trials: u64,
    seed: u64,
    out_report: *mut *mut GhzbellReport,
) -> GhzbellStatus {
    guarded(|| {
        if sequence.is_null() || out_report.is_null() {
            return GhzbellStatus::NullArgument;
        }
        let sequence = match unsafe { CStr::from_ptr(sequence) }.to_str() {
            Ok(s) => s.to_string(),
            Err(_) => return GhzbellStatus::InvalidUtf8,
        };
        let mode = match mode {
            GhzbellMeasureMode::Product => MeasureMode::Product,
            GhzbellMeasureMode::Spin => MeasureMode::Spin,
        };
        match run_command(Command::Measure { sequence, mode }, trials, seed) {
            Ok(report) => finish(out_report, report),
            Err(status) => status,
        }
    })
}

/// Runs an inequality experiment over `angle_count` analyzer angles in
/// degrees: three angles select the three-dataset form, four the CHSH form.
///
/// # Safety
/// `angles_deg` must point to `angle_count` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_bell_sim(
    angles_deg: *const f64,
    angle_count: usize,
    mode: GhzbellSimMode,
    trials: u64,
    seed: u64,
    out_report: *mut *mut GhzbellReport,
) -> GhzbellStatus {
    guarded(|| {
        if angles_deg.is_null() || out_report.is_null() {
            return GhzbellStatus::NullArgument;
        }
        if angle_count == 0 {
            return GhzbellStatus::InvalidArgument;
        }
        let angles = unsafe { std::slice::from_raw_parts(angles_deg, angle_count) };
        if angles.iter().any(|a| !a.is_finite()) {
            return GhzbellStatus::InvalidArgument;
        }
        let angles = angles
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mode = match mode {
            GhzbellSimMode::Independent => SimMode::Independent,
            GhzbellSimMode::LhvCommon => SimMode::LhvCommon,
        };
        match run_command(
            Command::BellSim {
                angles,
                mode,
                dump: None,
            },
            trials,
            seed,
        ) {
            Ok(report) => finish(out_report, report),
            Err(status) => status,
        }
    })
}

/// Evaluates |⟨ab⟩ − ⟨ac⟩| ≤ 1 − ⟨bc⟩ on three caller-supplied ±1 arrays of
/// common length. `out_satisfied` receives 1 or 0.
///
/// # Safety
/// `a`, `b`, `c` must point to `len` readable int32 values; outputs must be
/// writable or NULL (NULL outputs are skipped).
#[no_mangle]
pub unsafe extern "C" fn ghzbell_bell3_data(
    a: *const i32,
    b: *const i32,
    c: *const i32,
    len: usize,
    out_lhs: *mut f64,
    out_rhs: *mut f64,
    out_satisfied: *mut i32,
) -> GhzbellStatus {
    guarded(|| {
        let eval = match (|| -> Result<_, GhzbellStatus> {
            let a = unsafe { dataset_from_raw("a", a, len) }?;
            let b = unsafe { dataset_from_raw("b", b, len) }?;
            let c = unsafe { dataset_from_raw("c", c, len) }?;
            bell3_evaluate(&a, &b, &c).map_err(|_| GhzbellStatus::InvalidArgument)
        })() {
            Ok(eval) => eval,
            Err(status) => return status,
        };
        unsafe {
            if !out_lhs.is_null() {
                *out_lhs = eval.lhs;
            }
            if !out_rhs.is_null() {
                *out_rhs = eval.rhs;
            }
            if !out_satisfied.is_null() {
                *out_satisfied = eval.satisfied as i32;
            }
        }
        GhzbellStatus::Ok
    })
}

/// Evaluates the CHSH combination |⟨ab⟩ + ⟨ab₂⟩ + ⟨a₂b⟩ − ⟨a₂b₂⟩| ≤ 2 on four
/// caller-supplied ±1 arrays of common length.
///
/// # Safety
/// As for [`ghzbell_bell3_data`], with four input arrays.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_chsh_data(
    a: *const i32,
    a2: *const i32,
    b: *const i32,
    b2: *const i32,
    len: usize,
    out_lhs: *mut f64,
    out_rhs: *mut f64,
    out_satisfied: *mut i32,
) -> GhzbellStatus {
    guarded(|| {
        let eval = match (|| -> Result<_, GhzbellStatus> {
            let a = unsafe { dataset_from_raw("a", a, len) }?;
            let a2 = unsafe { dataset_from_raw("a2", a2, len) }?;
            let b = unsafe { dataset_from_raw("b", b, len) }?;
            let b2 = unsafe { dataset_from_raw("b2", b2, len) }?;
            chsh_evaluate(&a, &a2, &b, &b2).map_err(|_| GhzbellStatus::InvalidArgument)
        })() {
            Ok(eval) => eval,
            Err(status) => return status,
        };
        unsafe {
            if !out_lhs.is_null() {
                *out_lhs = eval.lhs;
            }
            if !out_rhs.is_null() {
                *out_rhs = eval.rhs;
            }
            if !out_satisfied.is_null() {
                *out_satisfied = eval.satisfied as i32;
            }
        }
        GhzbellStatus::Ok
    })
}

/// Mean per-index product of two ±1 arrays sharing a common index.
///
/// # Safety
/// `a` and `b` must point to `len` readable int32 values.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_cross_correlation(
    a: *const i32,
    b: *const i32,
    len: usize,
    out_value: *mut f64,
) -> GhzbellStatus {
    guarded(|| {
        if out_value.is_null() {
            return GhzbellStatus::NullArgument;
        }
        let est = match (|| -> Result<_, GhzbellStatus> {
            let a = unsafe { dataset_from_raw("a", a, len) }?;
            let b = unsafe { dataset_from_raw("b", b, len) }?;
            cross_correlation(&a, &b).map_err(|_| GhzbellStatus::InvalidArgument)
        })() {
            Ok(est) => est,
            Err(status) => return status,
        };
        unsafe { *out_value = est.value };
        GhzbellStatus::Ok
    })
}

/// Samples seeded singlet pairs at the two analyzer angles (degrees) and
/// writes the estimated correlation; equal angles give exactly −1.
///
/// # Safety
/// `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_singlet_correlation(
    theta1_deg: f64,
    theta2_deg: f64,
    pairs: u64,
    seed: u64,
    out_value: *mut f64,
) -> GhzbellStatus {
    guarded(|| {
        if out_value.is_null() {
            return GhzbellStatus::NullArgument;
        }
        let value = match singlet_sample(theta1_deg, theta2_deg, pairs, seed, 0)
            .and_then(|(p1, p2)| cross_correlation(&p1, &p2))
        {
            Ok(est) => est.value,
            Err(_) => return GhzbellStatus::InvalidArgument,
        };
        unsafe { *out_value = value };
        GhzbellStatus::Ok
    })
}

/// 1 if every check in the report passed, 0 if any failed, −1 on NULL.
///
/// # Safety
/// `report` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_report_passed(report: *const GhzbellReport) -> i32 {
    if report.is_null() {
        return -1;
    }
    let report = unsafe { &*report };
    report.inner.passed() as i32
}

/// Number of checks carried by the report; 0 on NULL.
///
/// # Safety
/// `report` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_report_check_count(report: *const GhzbellReport) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { &*report }.inner.checks.len()
}

/// Renders the report to its deterministic textual form. Returns NULL on
/// NULL input; free the result with [`ghzbell_string_free`].
///
/// # Safety
/// `report` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_report_render(report: *const GhzbellReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    let text = unsafe { &*report }.inner.render();
    CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Frees a report handle; NULL is a no-op.
///
/// # Safety
/// `report` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_report_free(report: *mut GhzbellReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Frees a string returned by this library; NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
