use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use neartrig_ffi::*;

fn last_error() -> String {
    let mut buf = [0 as c_char; 128];
    let n = unsafe { nt_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn values_match_the_library() {
    let mut v = f64::NAN;
    assert_eq!(unsafe { nt_cos_m(3.0, 2.0, &mut v) }, NtStatus::Ok);
    assert_eq!(v, neartrig::ntf::cos_m_eval(neartrig::ntf::Order::new(3.0).unwrap(), 2.0).unwrap());
    let (mut re, mut im) = (0.0, 0.0);
    assert_eq!(unsafe { nt_exp_m(0.0, 1.0, &mut re, &mut im) }, NtStatus::Ok);
    assert!((re - 1f64.cos()).abs() < 1e-15 && (im - 1f64.sin()).abs() < 1e-15);
    assert_eq!(unsafe { nt_e_m(0.0, 1.5, &mut v) }, NtStatus::Ok);
    assert!((v - (-2.25f64).exp()).abs() < 1e-15);
    assert_eq!(unsafe { nt_cos_m_deriv(0.0, 1, 0.7, &mut v) }, NtStatus::Ok);
    assert!((v + 0.7f64.sin()).abs() < 1e-15);
    assert_eq!(nt_fel_gain(-2.0), -nt_fel_gain(2.0));
}

#[test]
fn errors_map_to_status_codes() {
    let mut v = 7.0;
    assert_eq!(unsafe { nt_cos_m(-1.5, 1.0, &mut v) }, NtStatus::Domain);
    assert_eq!(v, 7.0, "output untouched on failure");
    assert!(last_error().contains("domain"));
    assert_eq!(unsafe { nt_cos_m(400.0, 1000.0, &mut v) }, NtStatus::NonConvergence);
    assert_eq!(unsafe { nt_e_half(0.0, 50.0, &mut v) }, NtStatus::Domain);
    assert_eq!(unsafe { nt_sin_m(1.0, 1.0, ptr::null_mut()) }, NtStatus::NullPointer);
    nt_clear_error();
    assert_eq!(unsafe { nt_last_error_message(ptr::null_mut(), 0) }, 0);
}

#[test]
fn last_error_truncates() {
    let mut v = 0.0;
    unsafe { nt_os(1.0, -1.0, 0.0, &mut v) };
    let full = unsafe { nt_last_error_message(ptr::null_mut(), 0) };
    let mut buf = [1 as c_char; 5];
    assert_eq!(unsafe { nt_last_error_message(buf.as_mut_ptr(), buf.len()) }, full);
    assert_eq!(buf[4], 0);
}

#[test]
fn handles() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { nt_lorentzian_power_new(2.0, 1.5, &mut h) }, NtStatus::Ok);
    let (mut a, mut b) = (0.0, 0.0);
    assert_eq!(unsafe { nt_lorentzian_power_integrate(h, &mut a) }, NtStatus::Ok);
    assert_eq!(unsafe { nt_os_integral(2.0, 1.5, &mut b) }, NtStatus::Ok);
    assert!((a - b).abs() <= 1e-6 * b);
    assert_eq!(unsafe { nt_lorentzian_power_eval(h, 0.0, &mut a) }, NtStatus::Ok);
    assert_eq!(a, 1.0);
    unsafe { nt_lorentzian_power_free(h) };
    unsafe { nt_lorentzian_power_free(ptr::null_mut()) };
    assert_eq!(unsafe { nt_lorentzian_power_eval(ptr::null(), 0.0, &mut a) }, NtStatus::NullPointer);

    let mut c = ptr::null_mut();
    assert_eq!(unsafe { nt_convolution_new(2.0, 1.0, &mut c) }, NtStatus::Ok);
    assert_eq!(unsafe { nt_convolution_eval(c, 0.5, 1, &mut a) }, NtStatus::Ok);
    assert_eq!(unsafe { nt_convolution_eval(c, 0.5, 0, &mut b) }, NtStatus::Ok);
    assert!((a - b).abs() <= 1e-8 * b.abs());
    unsafe { nt_convolution_free(c) };
    assert_eq!(unsafe { nt_convolution_new(2.0, -1.0, &mut c) }, NtStatus::Domain);
}

#[test]
fn version_is_the_package_version() {
    let v = unsafe { CStr::from_ptr(nt_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles the C smoke program against the generated header and the static
/// library built alongside this test.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libneartrig_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("neartrig_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .expect("cc runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke exit {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("ok\n"));
}
