//! C ABI for neartrig.
//!
//! Every fallible function returns an [`NtStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. The message of
//! the most recent failure on the calling thread is available from
//! [`nt_last_error_message`]. Handles are opaque; each `*_new` pairs with a
//! `*_free` that accepts null.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use neartrig::cli::suites::oscillatory_spec;
use neartrig::core_math::TruncationPolicy;
use neartrig::gaussian_family::{e_half_eval, e_m_eval, os_eval, os_integral, LorentzianPower, PowerOrder};
use neartrig::ntf::{cos_m_deriv, cos_m_eval, exp_m_eval, sin_m_deriv, sin_m_eval, DerivOrder, Order};
use neartrig::transforms::{
    convolve_gauss_direct, convolve_gauss_hermite, fel_gain_curve, try_integrate_improper, GaussianKernel,
    QuadratureSpec,
};
use neartrig::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NtStatus {
    Ok = 0,
    Domain = 1,
    Pole = 2,
    UnsupportedIndex = 3,
    NonConvergence = 4,
    Cancellation = 5,
    Quadrature = 6,
    Io = 7,
    NullPointer = 8,
    Panic = 9,
}

impl From<&Error> for NtStatus {
    fn from(e: &Error) -> NtStatus {
        match e {
            Error::Domain(_) => NtStatus::Domain,
            Error::Pole(_) => NtStatus::Pole,
            Error::UnsupportedIndex(_) => NtStatus::UnsupportedIndex,
            Error::NonConvergence { .. } => NtStatus::NonConvergence,
            Error::Cancellation { .. } => NtStatus::Cancellation,
            Error::Quadrature(_) => NtStatus::Quadrature,
            Error::Io(_) => NtStatus::Io,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `f`, stores its value through `out` on success and records the
/// message on failure. Panics never cross the boundary.
fn call<T>(out: *mut T, f: impl FnOnce() -> neartrig::Result<T>) -> NtStatus {
    if out.is_null() {
        set_last_error("null output pointer".into());
        return NtStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: non-null and, per the API contract, valid for writes.
            unsafe { out.write(v) };
            NtStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            NtStatus::from(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            NtStatus::Panic
        }
    }
}

/// Copies the last error message of this thread, NUL-terminated and truncated
/// to `len` bytes, into `buf`. Returns the full message length excluding the
/// terminator; 0 when no error has been recorded. `buf` may be null to query
/// the length.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn nt_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            // SAFETY: caller guarantees `len` writable bytes; n + 1 ≤ len.
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
                *buf.add(n) = 0;
            }
        }
        bytes.len()
    })
}

/// Clears the last error of this thread.
#[no_mangle]
pub extern "C" fn nt_clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// `cos_m(x)` for `m > −1`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_cos_m(m: f64, x: f64, out: *mut f64) -> NtStatus {
    call(out, || cos_m_eval(Order::new(m)?, x))
}

/// `sin_m(x)` for `m > −1`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_sin_m(m: f64, x: f64, out: *mut f64) -> NtStatus {
    call(out, || sin_m_eval(Order::new(m)?, x))
}

/// `exp_m(x) = cos_m(x) + i sin_m(x)`; the parts go to `re` and `im`.
///
/// # Safety
/// `re` and `im` must each be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_exp_m(m: f64, x: f64, re: *mut f64, im: *mut f64) -> NtStatus {
    if im.is_null() {
        set_last_error("null output pointer".into());
        return NtStatus::NullPointer;
    }
    let mut z = None;
    let status = call(re, || {
        let v = exp_m_eval(Order::new(m)?, x)?;
        z = Some(v);
        Ok(v.re)
    });
    if let Some(z) = z {
        // SAFETY: checked non-null above.
        unsafe { im.write(z.im) };
    }
    status
}

/// k-th derivative of `cos_m`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_cos_m_deriv(m: f64, k: u32, x: f64, out: *mut f64) -> NtStatus {
    call(out, || cos_m_deriv(Order::new(m)?, DerivOrder::new(k)?, x))
}

/// k-th derivative of `sin_m`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_sin_m_deriv(m: f64, k: u32, x: f64, out: *mut f64) -> NtStatus {
    call(out, || sin_m_deriv(Order::new(m)?, DerivOrder::new(k)?, x))
}

/// Gaussian-like `e_m(x)`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_e_m(m: f64, x: f64, out: *mut f64) -> NtStatus {
    call(out, || e_m_eval(Order::new(m)?, x))
}

/// Half-index Gaussian `e_m^{(1/2)}(x)`, `|x| ≤ 40`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_e_half(m: f64, x: f64, out: *mut f64) -> NtStatus {
    call(out, || e_half_eval(Order::new(m)?, x))
}

/// Lorentzian-power function `os_{m,ν}(x)`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_os(m: f64, nu: f64, x: f64, out: *mut f64) -> NtStatus {
    call(out, || os_eval(Order::new(m)?, PowerOrder::new(nu)?, x))
}

/// Closed-form whole-line integral of `os_{m,ν}`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_os_integral(m: f64, nu: f64, out: *mut f64) -> NtStatus {
    call(out, || os_integral(Order::new(m)?, PowerOrder::new(nu)?))
}

/// Small-signal gain curve; total on finite input.
#[no_mangle]
pub extern "C" fn nt_fel_gain(x: f64) -> f64 {
    fel_gain_curve(x)
}

/// Opaque `os_{m,ν}` instance.
pub struct NtLorentzianPower(LorentzianPower);

/// Creates an `os_{m,ν}` handle in `*out`; release it with
/// [`nt_lorentzian_power_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_lorentzian_power_new(m: f64, nu: f64, out: *mut *mut NtLorentzianPower) -> NtStatus {
    call(out, || {
        let f = LorentzianPower::new(Order::new(m)?, PowerOrder::new(nu)?);
        Ok(Box::into_raw(Box::new(NtLorentzianPower(f))))
    })
}

/// # Safety
/// `h` must be null or a live handle from [`nt_lorentzian_power_new`];
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_lorentzian_power_eval(h: *const NtLorentzianPower, x: f64, out: *mut f64) -> NtStatus {
    // SAFETY: caller guarantees a live handle or null.
    let Some(h) = (unsafe { h.as_ref() }) else {
        set_last_error("null handle".into());
        return NtStatus::NullPointer;
    };
    call(out, || h.0.eval(x))
}

/// Whole-line integral of the handle's function by quadrature (tolerance
/// 1e-9), for comparison with [`nt_os_integral`].
///
/// # Safety
/// As for [`nt_lorentzian_power_eval`].
#[no_mangle]
pub unsafe extern "C" fn nt_lorentzian_power_integrate(h: *const NtLorentzianPower, out: *mut f64) -> NtStatus {
    // SAFETY: caller guarantees a live handle or null.
    let Some(h) = (unsafe { h.as_ref() }) else {
        set_last_error("null handle".into());
        return NtStatus::NullPointer;
    };
    call(out, || {
        let spec = oscillatory_spec().with_tolerances(1e-9, 1e-9)?;
        try_integrate_improper(|x| h.0.eval(x), &spec)
    })
}

/// # Safety
/// `h` must be null or a handle from [`nt_lorentzian_power_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nt_lorentzian_power_free(h: *mut NtLorentzianPower) {
    if !h.is_null() {
        // SAFETY: allocated by Box::into_raw in nt_lorentzian_power_new.
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Opaque Gaussian-smoothed `cos_m`: order plus kernel width.
pub struct NtConvolution {
    order: Order,
    kernel: GaussianKernel,
}

/// Creates a handle for `(cos_m ∗ g_α)`; release it with [`nt_convolution_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_convolution_new(m: f64, alpha: f64, out: *mut *mut NtConvolution) -> NtStatus {
    call(out, || {
        let c = NtConvolution { order: Order::new(m)?, kernel: GaussianKernel::new(alpha)? };
        Ok(Box::into_raw(Box::new(c)))
    })
}

/// Convolution at `x` from the Hermite series (`hermite != 0`) or by direct
/// quadrature.
///
/// # Safety
/// `h` must be null or a live handle from [`nt_convolution_new`]; `out` must
/// be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nt_convolution_eval(h: *const NtConvolution, x: f64, hermite: i32, out: *mut f64) -> NtStatus {
    // SAFETY: caller guarantees a live handle or null.
    let Some(h) = (unsafe { h.as_ref() }) else {
        set_last_error("null handle".into());
        return NtStatus::NullPointer;
    };
    call(out, || {
        if hermite != 0 {
            convolve_gauss_hermite(h.order, h.kernel, x, &TruncationPolicy::default())
        } else {
            convolve_gauss_direct(h.order, h.kernel, x, &QuadratureSpec::default())
        }
    })
}

/// # Safety
/// `h` must be null or a handle from [`nt_convolution_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nt_convolution_free(h: *mut NtConvolution) {
    if !h.is_null() {
        // SAFETY: allocated by Box::into_raw in nt_convolution_new.
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn nt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
