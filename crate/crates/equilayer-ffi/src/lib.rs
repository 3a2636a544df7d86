//! C ABI for the equilayer library: opaque handles, integer status codes,
//! and decimal-string outputs for arbitrary-precision counts. The header
//! `include/equilayer.h` is generated by cbindgen at build time.
//!
//! Conventions: every function returns an [`EqlStatus`]; results travel
//! through out-pointers; every handle allocated by `*_new` must be released
//! with the matching `*_free`. All strings are NUL-terminated UTF-8 in
//! caller-provided buffers.

use std::os::raw::c_char;

use equilayer::equimap::{full_basis, verify_basis_equivariance, BasisMatrix};
use equilayer::error::Error;
use equilayer::quiver::hom_dim;
use equilayer::setpart::restricted_bell;

/// Status codes returned by every FFI entry point.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    BufferTooSmall = 4,
    IndexOutOfRange = 5,
    VerificationFailed = 6,
}

fn status_of(e: &Error) -> EqlStatus {
    match e {
        Error::CapExceeded { .. } | Error::TransitionCap { .. } => EqlStatus::CapExceeded,
        _ => EqlStatus::InvalidArgument,
    }
}

/// An opaque full standard basis for one layer shape.
pub struct EqlBasis {
    n: u64,
    k: usize,
    l: usize,
    matrices: Vec<BasisMatrix>,
}

fn write_string(s: &str, buf: *mut c_char, buf_len: usize) -> EqlStatus {
    if buf.is_null() {
        return EqlStatus::NullPointer;
    }
    let bytes = s.as_bytes();
    if bytes.len() + 1 > buf_len {
        return EqlStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, bytes.len());
        *buf.add(bytes.len()) = 0;
    }
    EqlStatus::Ok
}

/// Writes the n-restricted Bell number of `m` as a decimal string.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn eql_restricted_bell(
    m: u64,
    n: u64,
    buf: *mut c_char,
    buf_len: usize,
) -> EqlStatus {
    write_string(&restricted_bell(m as usize, n).to_string(), buf, buf_len)
}

/// Writes the dimension of the space of equivariant maps from the k-th to
/// the l-th tensor power as a decimal string.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn eql_hom_dim(
    n: u64,
    k: u64,
    l: u64,
    buf: *mut c_char,
    buf_len: usize,
) -> EqlStatus {
    match hom_dim(n, k as usize, l as usize) {
        Ok(d) => write_string(&d.to_string(), buf, buf_len),
        Err(e) => status_of(&e),
    }
}

/// Builds the full standard basis for the layer shape and hands back an
/// opaque handle through `out`.
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released
/// with [`eql_basis_free`].
#[no_mangle]
pub unsafe extern "C" fn eql_basis_new(
    n: u64,
    k: u64,
    l: u64,
    out: *mut *mut EqlBasis,
) -> EqlStatus {
    if out.is_null() {
        return EqlStatus::NullPointer;
    }
    match full_basis(n, k as usize, l as usize) {
        Ok(matrices) => {
            let handle = Box::new(EqlBasis {
                n,
                k: k as usize,
                l: l as usize,
                matrices,
            });
            *out = Box::into_raw(handle);
            EqlStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a handle returned by [`eql_basis_new`]. Passing null is a no-op.
///
/// # Safety
/// `basis` must be null or a handle from [`eql_basis_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_free(basis: *mut EqlBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Writes the number of matrices in the basis.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_count(basis: *const EqlBasis, out: *mut usize) -> EqlStatus {
    if basis.is_null() || out.is_null() {
        return EqlStatus::NullPointer;
    }
    *out = (*basis).matrices.len();
    EqlStatus::Ok
}

/// Writes the shape of every matrix in the basis.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_shape(
    basis: *const EqlBasis,
    rows: *mut usize,
    cols: *mut usize,
) -> EqlStatus {
    if basis.is_null() || rows.is_null() || cols.is_null() {
        return EqlStatus::NullPointer;
    }
    if let Some(b) = (*basis).matrices.first() {
        *rows = b.rows;
        *cols = b.cols;
    } else {
        *rows = 0;
        *cols = 0;
    }
    EqlStatus::Ok
}

/// Writes the entry count of matrix `index`.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_entry_count(
    basis: *const EqlBasis,
    index: usize,
    out: *mut usize,
) -> EqlStatus {
    if basis.is_null() || out.is_null() {
        return EqlStatus::NullPointer;
    }
    match (&*basis).matrices.get(index) {
        Some(b) => {
            *out = b.entries.len();
            EqlStatus::Ok
        }
        None => EqlStatus::IndexOutOfRange,
    }
}

/// Copies the entries of matrix `index` as row/col pairs into two caller
/// buffers of capacity `cap` each; writes the copied count to `written`.
///
/// # Safety
/// `rows_buf` and `cols_buf` must hold at least `cap` elements each.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_entries(
    basis: *const EqlBasis,
    index: usize,
    rows_buf: *mut u64,
    cols_buf: *mut u64,
    cap: usize,
    written: *mut usize,
) -> EqlStatus {
    if basis.is_null() || rows_buf.is_null() || cols_buf.is_null() || written.is_null() {
        return EqlStatus::NullPointer;
    }
    let b = match (&*basis).matrices.get(index) {
        Some(b) => b,
        None => return EqlStatus::IndexOutOfRange,
    };
    if b.entries.len() > cap {
        return EqlStatus::BufferTooSmall;
    }
    for (i, &(r, c)) in b.entries.iter().enumerate() {
        *rows_buf.add(i) = r as u64;
        *cols_buf.add(i) = c as u64;
    }
    *written = b.entries.len();
    EqlStatus::Ok
}

/// Writes the source set partition of matrix `index` in block notation,
/// e.g. `{1, 3 | 2, 4}`.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_partition(
    basis: *const EqlBasis,
    index: usize,
    buf: *mut c_char,
    buf_len: usize,
) -> EqlStatus {
    if basis.is_null() {
        return EqlStatus::NullPointer;
    }
    match (&*basis).matrices.get(index) {
        Some(b) => write_string(&b.source_partition.to_string(), buf, buf_len),
        None => EqlStatus::IndexOutOfRange,
    }
}

/// Runs the exact equivariance verifier over the whole basis: the fixed
/// generator set plus `trials` permutations drawn from `seed`. Returns
/// `EQL_STATUS_OK` when every matrix passes.
///
/// # Safety
/// `basis` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn eql_basis_verify(
    basis: *const EqlBasis,
    trials: usize,
    seed: u64,
) -> EqlStatus {
    if basis.is_null() {
        return EqlStatus::NullPointer;
    }
    let b = &*basis;
    match verify_basis_equivariance(&b.matrices, b.n, b.k, b.l, trials, seed) {
        Ok(None) => EqlStatus::Ok,
        Ok(Some(_)) => EqlStatus::VerificationFailed,
        Err(e) => status_of(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_strings() {
        let mut buf = [0 as c_char; 64];
        unsafe {
            assert_eq!(
                eql_restricted_bell(4, 2, buf.as_mut_ptr(), buf.len()),
                EqlStatus::Ok
            );
            let s = std::ffi::CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
            assert_eq!(s, "8");

            assert_eq!(
                eql_hom_dim(6, 2, 2, buf.as_mut_ptr(), buf.len()),
                EqlStatus::Ok
            );
            let s = std::ffi::CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
            assert_eq!(s, "15");

            assert_eq!(
                eql_restricted_bell(20, 20, buf.as_mut_ptr(), 2),
                EqlStatus::BufferTooSmall
            );
        }
    }

    #[test]
    fn basis_lifecycle() {
        unsafe {
            let mut handle: *mut EqlBasis = std::ptr::null_mut();
            assert_eq!(eql_basis_new(4, 1, 1, &mut handle), EqlStatus::Ok);
            assert!(!handle.is_null());

            let mut count = 0usize;
            assert_eq!(eql_basis_count(handle, &mut count), EqlStatus::Ok);
            assert_eq!(count, 2);

            let (mut rows, mut cols) = (0usize, 0usize);
            assert_eq!(eql_basis_shape(handle, &mut rows, &mut cols), EqlStatus::Ok);
            assert_eq!((rows, cols), (4, 4));

            let mut n = 0usize;
            assert_eq!(eql_basis_entry_count(handle, 0, &mut n), EqlStatus::Ok);
            assert_eq!(n, 4);
            assert_eq!(
                eql_basis_entry_count(handle, 9, &mut n),
                EqlStatus::IndexOutOfRange
            );

            let mut rbuf = [0u64; 16];
            let mut cbuf = [0u64; 16];
            let mut written = 0usize;
            assert_eq!(
                eql_basis_entries(
                    handle,
                    0,
                    rbuf.as_mut_ptr(),
                    cbuf.as_mut_ptr(),
                    16,
                    &mut written
                ),
                EqlStatus::Ok
            );
            assert_eq!(written, 4);
            assert_eq!(&rbuf[..4], &[0, 1, 2, 3]);
            assert_eq!(&cbuf[..4], &[0, 1, 2, 3]);
            assert_eq!(
                eql_basis_entries(
                    handle,
                    1,
                    rbuf.as_mut_ptr(),
                    cbuf.as_mut_ptr(),
                    2,
                    &mut written
                ),
                EqlStatus::BufferTooSmall
            );

            let mut sbuf = [0 as c_char; 64];
            assert_eq!(
                eql_basis_partition(handle, 0, sbuf.as_mut_ptr(), sbuf.len()),
                EqlStatus::Ok
            );
            let s = std::ffi::CStr::from_ptr(sbuf.as_ptr()).to_str().unwrap();
            assert_eq!(s, "{1, 2}");

            assert_eq!(eql_basis_verify(handle, 10, 7), EqlStatus::Ok);

            eql_basis_free(handle);
            eql_basis_free(std::ptr::null_mut());
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            assert_eq!(
                eql_basis_new(10, 4, 4, std::ptr::null_mut()),
                EqlStatus::NullPointer
            );
            let mut handle: *mut EqlBasis = std::ptr::null_mut();
            assert_eq!(eql_basis_new(10, 4, 4, &mut handle), EqlStatus::CapExceeded);
            assert_eq!(
                eql_basis_new(0, 1, 1, &mut handle),
                EqlStatus::InvalidArgument
            );
        }
    }
}
