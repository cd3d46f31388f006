use std::ffi::{CStr, CString};
use std::ptr;

use feasichar_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fc_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn root_system_handle() {
    let mut rs = ptr::null_mut();
    unsafe {
        assert_eq!(fc_root_system_new(c("F4").as_ptr(), &mut rs), FcStatus::Ok);
        let mut rank = 0;
        assert_eq!(fc_root_system_rank(rs, &mut rank), FcStatus::Ok);
        assert_eq!(rank, 4);
        let mut n = 0;
        fc_root_system_positive_root_count(rs, &mut n);
        assert_eq!(n, 24);
        let mut e = 0;
        assert_eq!(fc_root_system_cartan_entry(rs, 2, 3, &mut e), FcStatus::Ok);
        assert_eq!(e, -2);
        assert_eq!(fc_root_system_cartan_entry(rs, 5, 1, &mut e), FcStatus::OutOfRange);
        fc_root_system_free(rs);
    }
}

#[test]
fn bad_arguments_report_errors() {
    let mut rs = ptr::null_mut();
    unsafe {
        assert_eq!(fc_root_system_new(c("H3").as_ptr(), &mut rs), FcStatus::Unsupported);
        assert!(last_error().contains("H3"));
        assert_eq!(fc_root_system_new(ptr::null(), &mut rs), FcStatus::NullPointer);
        assert_eq!(fc_root_system_new(c("E8").as_ptr(), ptr::null_mut()), FcStatus::NullPointer);
        let mut n = 0;
        assert_eq!(fc_root_system_rank(ptr::null(), &mut n), FcStatus::NullPointer);
        let mut count = 0;
        assert_eq!(fc_class_count(c("A3").as_ptr(), 2, &mut count), FcStatus::Unsupported);
        let mut t = ptr::null_mut();
        assert_eq!(fc_brauer_table_parse(c("group X p 0 exponent 1\nbogus").as_ptr(), &mut t), FcStatus::Parse);
        assert!(last_error().contains("line 2"));
        assert_eq!(fc_brauer_table_load(c("/nonexistent/table.bct").as_ptr(), &mut t), FcStatus::Io);
    }
}

#[test]
fn class_counts() {
    let mut n = 0;
    unsafe {
        assert_eq!(fc_class_count(c("F4").as_ptr(), 2, &mut n), FcStatus::Ok);
        assert_eq!(n, 2);
        fc_class_count(c("E8").as_ptr(), 1, &mut n);
        assert_eq!(n, 1);
    }
}

#[test]
fn solve_alt5_in_f4() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(fc_brauer_table_load(c("a5_p0.bct").as_ptr(), &mut t), FcStatus::Ok, "{}", last_error());
        let (mut nc, mut ni) = (0, 0);
        fc_brauer_table_shape(t, &mut nc, &mut ni);
        assert_eq!((nc, ni), (5, 5));

        let mut r = ptr::null_mut();
        assert_eq!(fc_solve(c("F4").as_ptr(), t, 0, 37, &mut r), FcStatus::Config);
        assert_eq!(fc_solve(c("F4").as_ptr(), t, FC_MODULE_ADJOINT | FC_MODULE_MINIMAL, 3, &mut r), FcStatus::Config);
        assert!(last_error().contains("order cap"));
        let st = fc_solve(c("F4").as_ptr(), t, FC_MODULE_ADJOINT | FC_MODULE_MINIMAL, 37, &mut r);
        assert_eq!(st, FcStatus::Ok, "{}", last_error());
        let mut len = 0;
        fc_result_set_len(r, &mut len);
        assert_eq!(len, 11);

        let mut buf = [0u32; 5];
        let mut cap = 2usize;
        assert_eq!(
            fc_result_set_multiplicities(r, 1, FC_MODULE_ADJOINT, buf.as_mut_ptr(), &mut cap),
            FcStatus::OutOfRange
        );
        assert_eq!(cap, 5);
        assert_eq!(fc_result_set_multiplicities(r, 1, FC_MODULE_ADJOINT, buf.as_mut_ptr(), &mut cap), FcStatus::Ok);
        assert_eq!(buf, [0, 3, 5, 2, 4]);
        fc_result_set_multiplicities(r, 1, FC_MODULE_MINIMAL, buf.as_mut_ptr(), &mut cap);
        assert_eq!(buf, [0, 1, 0, 2, 3]);

        let (mut pp, mut ng) = (9, 9);
        fc_result_set_flags(r, 1, &mut pp, &mut ng);
        assert_eq!((pp, ng), (FC_FLAG_YES, FC_FLAG_NO));
        assert_eq!(fc_result_set_flags(r, 99, &mut pp, &mut ng), FcStatus::OutOfRange);

        let mut s = ptr::null_mut();
        assert_eq!(fc_result_set_render(r, &mut s), FcStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        assert!(text.starts_with("group Alt5 in F4 p 0\n"));
        assert!(text.contains("2) 0 3 5 2 4 | 0 1 0 2 3 | possprim=1 nongcr=0"));
        fc_string_free(s);
        fc_result_set_free(r);
        fc_brauer_table_free(t);
    }
}

#[test]
fn freeing_null_is_harmless() {
    unsafe {
        fc_root_system_free(ptr::null_mut());
        fc_brauer_table_free(ptr::null_mut());
        fc_result_set_free(ptr::null_mut());
        fc_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/feasichar.h")).unwrap();
    for name in [
        "fc_last_error",
        "fc_root_system_new",
        "fc_class_count",
        "fc_brauer_table_load",
        "fc_solve",
        "fc_result_set_multiplicities",
        "fc_string_free",
        "FC_STATUS_OK",
        "typedef struct FcResultSet FcResultSet",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    let version = unsafe { CStr::from_ptr(fc_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}
