//! C interface to `feasichar`.
//!
//! Objects are opaque handles created by `fc_*_new`/`fc_*_load`/`fc_solve`
//! and released with the matching `fc_*_free`. Every fallible call returns an
//! [`FcStatus`]; on failure `fc_last_error()` describes the problem until the
//! next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use feasichar::brauer::{parse_table, BrauerTable};
use feasichar::cli::{build_result_table, levi_embeddable, load_table, render_table, ResultTable};
use feasichar::error::Error;
use feasichar::feasible::{feasible_characters, Flag, GroupContext, ModuleSelection, SolveOptions};
use feasichar::rootsystem::{build_root_system, LieType, RootSystem};
use feasichar::torsion::count_classes;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidTable = 4,
    Unsupported = 5,
    Io = 6,
    OutOfRange = 7,
    Config = 8,
    Panic = 9,
}

/// Bit flags selecting modules for [`fc_solve`].
pub const FC_MODULE_ADJOINT: u32 = 1;
pub const FC_MODULE_MINIMAL: u32 = 2;

/// Filter outcomes reported by [`fc_result_set_flags`].
pub const FC_FLAG_NO: i32 = 0;
pub const FC_FLAG_YES: i32 = 1;
pub const FC_FLAG_UNKNOWN: i32 = -1;

pub struct FcRootSystem(RootSystem);

pub struct FcBrauerTable(BrauerTable);

pub struct FcResultSet(ResultTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FcStatus {
    match e {
        Error::Parse { .. } | Error::BadCyclotomic(_) | Error::MalformedPoint(_) => FcStatus::Parse,
        Error::Invalid { .. } => FcStatus::InvalidTable,
        Error::UnknownType(_) | Error::UnsupportedGroup(_) | Error::NoWeylData { .. } => FcStatus::Unsupported,
        Error::Io { .. } => FcStatus::Io,
        Error::IndexOutOfRange { .. } | Error::WrongLength { .. } => FcStatus::OutOfRange,
        _ => FcStatus::Config,
    }
}

fn guard(f: impl FnOnce() -> Result<(), FcStatus>) -> FcStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(Ok(())) => FcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            FcStatus::Panic
        }
    }
}

fn fail(e: Error) -> FcStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, FcStatus> {
    if p.is_null() {
        set_error("null string argument".into());
        return Err(FcStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8".into());
        FcStatus::InvalidUtf8
    })
}

fn check_out<T>(p: *mut T) -> Result<(), FcStatus> {
    if p.is_null() {
        set_error("null output pointer".into());
        return Err(FcStatus::NullPointer);
    }
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, FcStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle".into());
        FcStatus::NullPointer
    })
}

fn parse_type(s: &str) -> Result<LieType, FcStatus> {
    s.parse::<LieType>().map_err(fail)
}

/// Message for the most recent failure on this thread; empty if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn fc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_root_system_new(name: *const c_char, out: *mut *mut FcRootSystem) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let t = parse_type(read_str(name)?)?;
        *out = Box::into_raw(Box::new(FcRootSystem(build_root_system(t))));
        Ok(())
    })
}

/// # Safety
/// `rs` must come from [`fc_root_system_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_root_system_free(rs: *mut FcRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// # Safety
/// `rs` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_root_system_rank(rs: *const FcRootSystem, out: *mut usize) -> FcStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(rs)?.0.rank;
        Ok(())
    })
}

/// # Safety
/// `rs` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_root_system_positive_root_count(rs: *const FcRootSystem, out: *mut usize) -> FcStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(rs)?.0.positive_roots.len();
        Ok(())
    })
}

/// Cartan matrix entry `<alpha_i, alpha_j^vee>`, 1-based indices.
///
/// # Safety
/// `rs` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_root_system_cartan_entry(
    rs: *const FcRootSystem,
    i: usize,
    j: usize,
    out: *mut i64,
) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let rs = &handle(rs)?.0;
        for k in [i, j] {
            if k == 0 || k > rs.rank {
                return Err(fail(Error::IndexOutOfRange { index: k, rank: rs.rank }));
            }
        }
        *out = rs.cartan[i - 1][j - 1];
        Ok(())
    })
}

/// Number of conjugacy classes of elements of exact order `order` in the
/// simply connected group of type `group`.
///
/// # Safety
/// `group` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_class_count(group: *const c_char, order: u32, out: *mut u64) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let t = parse_type(read_str(group)?)?;
        if !t.is_exceptional_target() {
            return Err(fail(Error::UnsupportedGroup(t.to_string())));
        }
        if order == 0 {
            return Err(fail(Error::Config("order must be positive".into())));
        }
        *out = count_classes(&build_root_system(t), order);
        Ok(())
    })
}

/// Parse a Brauer table from text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_brauer_table_parse(text: *const c_char, out: *mut *mut FcBrauerTable) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let t = parse_table(read_str(text)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcBrauerTable(t)));
        Ok(())
    })
}

/// Load a Brauer table from a path, or by name from the bundled data.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_brauer_table_load(name: *const c_char, out: *mut *mut FcBrauerTable) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let t = load_table(read_str(name)?).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcBrauerTable(t)));
        Ok(())
    })
}

/// # Safety
/// `t` must come from a table constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_brauer_table_free(t: *mut FcBrauerTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_brauer_table_shape(
    t: *const FcBrauerTable,
    classes: *mut usize,
    irreducibles: *mut usize,
) -> FcStatus {
    guard(|| {
        check_out(classes)?;
        check_out(irreducibles)?;
        let t = &handle(t)?.0;
        *classes = t.classes.len();
        *irreducibles = t.irreducibles.len();
        Ok(())
    })
}

/// Feasible characters of the table's group inside `group`.
/// `modules` is a combination of `FC_MODULE_ADJOINT` and `FC_MODULE_MINIMAL`;
/// elements of order above `max_order` make the call fail.
///
/// # Safety
/// `group` must be a NUL-terminated string, `t` a live handle, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn fc_solve(
    group: *const c_char,
    t: *const FcBrauerTable,
    modules: u32,
    max_order: u32,
    out: *mut *mut FcResultSet,
) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let g = parse_type(read_str(group)?)?;
        let t = &handle(t)?.0;
        let sel =
            ModuleSelection { adjoint: modules & FC_MODULE_ADJOINT != 0, minimal: modules & FC_MODULE_MINIMAL != 0 };
        if !sel.adjoint && !sel.minimal {
            return Err(fail(Error::Config("no module selected".into())));
        }
        if t.max_class_order() > max_order {
            return Err(fail(Error::Config(format!(
                "{} has elements of order {}, above the order cap {max_order}",
                t.name,
                t.max_class_order()
            ))));
        }
        let ctx = GroupContext::new(g).map_err(fail)?;
        let opts = SolveOptions { modules: sel, levi_embeddable: levi_embeddable(g, &t.name, t.p).map_err(fail)? };
        let chars = feasible_characters(t, &ctx, &opts).map_err(fail)?;
        *out = Box::into_raw(Box::new(FcResultSet(build_result_table(t, &ctx, sel, &chars))));
        Ok(())
    })
}

/// # Safety
/// `r` must come from [`fc_solve`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_result_set_free(r: *mut FcResultSet) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_result_set_len(r: *const FcResultSet, out: *mut usize) -> FcStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(r)?.0.rows.len();
        Ok(())
    })
}

/// Copy the multiplicities of row `row` on one module (`FC_MODULE_ADJOINT`
/// or `FC_MODULE_MINIMAL`) into `buf`. `*len` holds the capacity on entry
/// and the number of columns on return; a short buffer yields
/// `OutOfRange` with `*len` set to the size needed.
///
/// # Safety
/// `r` must be a live handle, `len` valid, `buf` valid for `*len` writes.
#[no_mangle]
pub unsafe extern "C" fn fc_result_set_multiplicities(
    r: *const FcResultSet,
    row: usize,
    module: u32,
    buf: *mut u32,
    len: *mut usize,
) -> FcStatus {
    guard(|| {
        check_out(len)?;
        let table = &handle(r)?.0;
        let Some(entry) = table.rows.get(row) else {
            return Err(row_out_of_range(row, table.rows.len()));
        };
        let vals = match module {
            FC_MODULE_ADJOINT => entry.adjoint.as_ref(),
            FC_MODULE_MINIMAL => entry.minimal.as_ref(),
            _ => None,
        };
        let Some(vals) = vals else {
            return Err(fail(Error::Config(format!("module {module} not present in this result"))));
        };
        let cap = *len;
        *len = vals.len();
        if cap < vals.len() {
            set_error(format!("buffer holds {cap} entries, {} needed", vals.len()));
            return Err(FcStatus::OutOfRange);
        }
        check_out(buf)?;
        ptr::copy_nonoverlapping(vals.as_ptr(), buf, vals.len());
        Ok(())
    })
}

fn row_out_of_range(row: usize, len: usize) -> FcStatus {
    set_error(format!("row {row} out of range for {len} rows"));
    FcStatus::OutOfRange
}

fn flag_code(f: Flag) -> i32 {
    match f {
        Flag::Yes => FC_FLAG_YES,
        Flag::No => FC_FLAG_NO,
        Flag::Unknown => FC_FLAG_UNKNOWN,
    }
}

/// # Safety
/// `r` must be a live handle and the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn fc_result_set_flags(
    r: *const FcResultSet,
    row: usize,
    possprim: *mut i32,
    nongcr: *mut i32,
) -> FcStatus {
    guard(|| {
        check_out(possprim)?;
        check_out(nongcr)?;
        let table = &handle(r)?.0;
        let Some(entry) = table.rows.get(row) else {
            return Err(row_out_of_range(row, table.rows.len()));
        };
        *possprim = flag_code(entry.possprim);
        *nongcr = flag_code(entry.nongcr);
        Ok(())
    })
}

/// Render the result as the text table printed by the command-line tool.
/// Release the string with [`fc_string_free`].
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_result_set_render(r: *const FcResultSet, out: *mut *mut c_char) -> FcStatus {
    guard(|| {
        check_out(out)?;
        let text = render_table(&handle(r)?.0);
        *out = CString::new(text).map_err(|_| FcStatus::Panic)?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
