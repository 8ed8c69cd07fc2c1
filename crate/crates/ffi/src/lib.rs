//! C ABI over `epsnet`.
//!
//! Objects are opaque heap handles released with their `_free` function.
//! Every fallible call returns an [`EpsnetStatus`]; on failure the message
//! is available from [`epsnet_last_error`] on the same thread until the next
//! call. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use epsnet::builders;
use epsnet::generators::{self, GeneratorInstance};
use epsnet::geom::{Point, PointSet};
use epsnet::oracle::verify::verify_lower_bound_with_budget;
use epsnet::oracle::{oracle_report, Mode};
use epsnet::{io, Error, Net};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsnetStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed input, bad parameters or mismatched dimensions.
    InvalidInput = 2,
    /// Degenerate geometry the requested operation cannot handle.
    Degenerate = 3,
    BudgetExceeded = 4,
    /// A result does not fit the output type or buffer.
    Overflow = 5,
    /// An internal consistency check failed.
    Internal = 6,
    Panic = 7,
}

/// Opaque point set.
pub struct EpsnetPointSet(PointSet);

/// Opaque strong net.
pub struct EpsnetNet(Net);

/// Opaque lower-bound instance.
pub struct EpsnetInstance(GeneratorInstance);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> EpsnetStatus {
    match e {
        Error::Collinear
        | Error::Cocircular(..)
        | Error::Degenerate(_)
        | Error::DuplicateCoordinates { .. } => EpsnetStatus::Degenerate,
        Error::BudgetExceeded { .. } => EpsnetStatus::BudgetExceeded,
        Error::SelfCheck(_) | Error::Defect(_) => EpsnetStatus::Internal,
        _ => EpsnetStatus::InvalidInput,
    }
}

/// Runs `f`, recording its error or panic.
fn guard(f: impl FnOnce() -> Result<(), (EpsnetStatus, String)>) -> EpsnetStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EpsnetStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside epsnet".into());
            EpsnetStatus::Panic
        }
    }
}

fn lib<T>(r: epsnet::Result<T>) -> Result<T, (EpsnetStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (EpsnetStatus, String) {
    (EpsnetStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, (EpsnetStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (EpsnetStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (EpsnetStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), (EpsnetStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into the library.
#[no_mangle]
pub extern "C" fn epsnet_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Point set from `n * dim` integer coordinates, point by point.
///
/// # Safety
/// `coords` must point to `n * dim` readable values and `out` to writable
/// storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn epsnet_pointset_new(
    dim: usize,
    coords: *const i64,
    n: usize,
    out: *mut *mut EpsnetPointSet,
) -> EpsnetStatus {
    guard(|| {
        if coords.is_null() && n > 0 {
            return Err(null("coords"));
        }
        let len = n
            .checked_mul(dim)
            .ok_or((EpsnetStatus::Overflow, "n * dim overflows".into()))?;
        let flat = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(coords, len)
        };
        let pts = flat
            .chunks(dim.max(1))
            .take(n)
            .map(Point::from_ints)
            .collect();
        let ps = lib(PointSet::new(dim, pts))?;
        put(out, EpsnetPointSet(ps))
    })
}

/// Point set from its JSON encoding, or the points of an instance.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_pointset_from_json(
    json: *const c_char,
    out: *mut *mut EpsnetPointSet,
) -> EpsnetStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(json, "json")?)
            .map_err(|e| (EpsnetStatus::InvalidInput, e.to_string()))?;
        let ps = match v.get("point_set") {
            Some(inner) => lib(io::pointset_from_json(inner))?,
            None => lib(io::pointset_from_json(&v))?,
        };
        put(out, EpsnetPointSet(ps))
    })
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `ps` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epsnet_pointset_len(ps: *const EpsnetPointSet) -> usize {
    ps.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `ps` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epsnet_pointset_free(ps: *mut EpsnetPointSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsnetBuilder {
    /// One point; `param` is ignored.
    BoxCenterpoint = 0,
    /// Boxes in the plane with at most `param` points.
    Rect = 1,
    /// Halfplanes with at most `param` points.
    HullWalk = 2,
    /// Disks with two points; `param` is ignored.
    Disk2 = 3,
}

/// Builds a strong net.
///
/// # Safety
/// `ps` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_build(
    ps: *const EpsnetPointSet,
    builder: EpsnetBuilder,
    param: usize,
    out: *mut *mut EpsnetNet,
) -> EpsnetStatus {
    guard(|| {
        let ps = &borrow(ps, "point set")?.0;
        let net = lib(match builder {
            EpsnetBuilder::BoxCenterpoint => builders::build_box_strong_centerpoint(ps, ps.dim()),
            EpsnetBuilder::Rect => builders::build_rect_net(ps, param),
            EpsnetBuilder::HullWalk => builders::build_halfspace_net(ps, param),
            EpsnetBuilder::Disk2 => builders::build_disk_net2(ps),
        })?;
        put(out, EpsnetNet(net))
    })
}

/// Number of net points, or 0 for a null handle.
///
/// # Safety
/// `net` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epsnet_net_size(net: *const EpsnetNet) -> usize {
    net.as_ref().map_or(0, |n| n.0.size())
}

/// Copies the member indices into `buf` (capacity `cap`).
///
/// # Safety
/// `net` must be a live handle and `buf` writable for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn epsnet_net_indices(
    net: *const EpsnetNet,
    buf: *mut usize,
    cap: usize,
) -> EpsnetStatus {
    guard(|| {
        let net = &borrow(net, "net")?.0;
        let idx = net
            .indices()
            .ok_or((EpsnetStatus::InvalidInput, "net is weak".into()))?;
        if idx.len() > cap {
            return Err((
                EpsnetStatus::Overflow,
                format!("need room for {} indices", idx.len()),
            ));
        }
        if !idx.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(idx.as_ptr(), buf, idx.len());
        }
        Ok(())
    })
}

/// Claimed epsilon as a reduced fraction.
///
/// # Safety
/// `net` must be a live handle; `num` and `den` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_net_claimed_eps(
    net: *const EpsnetNet,
    num: *mut i64,
    den: *mut i64,
) -> EpsnetStatus {
    guard(|| {
        let eps = &borrow(net, "net")?.0.claimed_eps;
        if num.is_null() || den.is_null() {
            return Err(null("output pointer"));
        }
        let overflow = || {
            (
                EpsnetStatus::Overflow,
                "epsilon does not fit 64 bits".to_string(),
            )
        };
        *num = eps.numer().to_i64().ok_or_else(overflow)?;
        *den = eps.denom().to_i64().ok_or_else(overflow)?;
        Ok(())
    })
}

/// # Safety
/// `net` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epsnet_net_free(net: *mut EpsnetNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// Largest number of points in a range of the net's family that avoids it.
///
/// # Safety
/// Both handles must be live and `max_count` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_max_avoiding(
    ps: *const EpsnetPointSet,
    net: *const EpsnetNet,
    max_count: *mut usize,
) -> EpsnetStatus {
    guard(|| {
        let r = lib(oracle_report(
            &borrow(ps, "point set")?.0,
            &borrow(net, "net")?.0,
        ))?;
        if max_count.is_null() {
            return Err(null("max_count"));
        }
        *max_count = r.max_count;
        Ok(())
    })
}

/// A generator by name (`box-lb`, `rect2-lb`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_generate(
    name: *const c_char,
    d: usize,
    k: usize,
    i: usize,
    out: *mut *mut EpsnetInstance,
) -> EpsnetStatus {
    guard(|| {
        let g = lib(generators::by_name(text(name, "name")?, d, k, i))?;
        put(out, EpsnetInstance(g))
    })
}

/// Copy of the instance's points.
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_pointset(
    inst: *const EpsnetInstance,
    out: *mut *mut EpsnetPointSet,
) -> EpsnetStatus {
    guard(|| {
        let g = &borrow(inst, "instance")?.0;
        put(out, EpsnetPointSet(g.point_set.clone()))
    })
}

/// Net size the instance's bound is about, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_net_size(inst: *const EpsnetInstance) -> usize {
    inst.as_ref().map_or(0, |g| g.0.net_size)
}

/// Worst-case count every net of that size must leave.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_required_count(inst: *const EpsnetInstance) -> usize {
    inst.as_ref().map_or(0, |g| g.0.required_count())
}

/// Exhaustive minimum over strong nets of the instance's size.
///
/// # Safety
/// `inst` must be a live handle and `max_count` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_verify(
    inst: *const EpsnetInstance,
    budget: u64,
    max_count: *mut usize,
) -> EpsnetStatus {
    guard(|| {
        let g = &borrow(inst, "instance")?.0;
        let mode = if g.point_set.labels().is_some() {
            Mode::Clustered
        } else {
            Mode::Exhaustive
        };
        let r = lib(verify_lower_bound_with_budget(
            &g.point_set,
            g.family,
            g.net_size,
            mode,
            budget,
        ))?;
        if max_count.is_null() {
            return Err(null("max_count"));
        }
        *max_count = r.max_count;
        Ok(())
    })
}

/// JSON encoding of the instance; release with [`epsnet_string_free`].
///
/// # Safety
/// `inst` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_to_json(
    inst: *const EpsnetInstance,
    out: *mut *mut c_char,
) -> EpsnetStatus {
    guard(|| {
        let g = &borrow(inst, "instance")?.0;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let c = CString::new(io::to_text(&g.to_json()))
            .map_err(|e| (EpsnetStatus::Internal, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `inst` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epsnet_instance_free(inst: *mut EpsnetInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epsnet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
