use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use epsnet_ffi::*;

fn last_error() -> String {
    let p = epsnet_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn pointset(coords: &[i64]) -> *mut EpsnetPointSet {
    let mut ps = ptr::null_mut();
    assert_eq!(
        epsnet_pointset_new(2, coords.as_ptr(), coords.len() / 2, &mut ps),
        EpsnetStatus::Ok
    );
    ps
}

#[test]
fn build_and_measure_a_net() {
    unsafe {
        let coords: Vec<i64> = (0..30).flat_map(|k| [k, (k * 7) % 30]).collect();
        let ps = pointset(&coords);
        assert_eq!(epsnet_pointset_len(ps), 30);

        let mut net = ptr::null_mut();
        assert_eq!(
            epsnet_build(ps, EpsnetBuilder::BoxCenterpoint, 0, &mut net),
            EpsnetStatus::Ok
        );
        assert_eq!(epsnet_net_size(net), 1);
        let (mut p, mut q) = (0, 0);
        assert_eq!(
            epsnet_net_claimed_eps(net, &mut p, &mut q),
            EpsnetStatus::Ok
        );
        assert_eq!((p, q), (3, 4));
        let mut idx = [usize::MAX; 1];
        assert_eq!(
            epsnet_net_indices(net, idx.as_mut_ptr(), 1),
            EpsnetStatus::Ok
        );
        assert!(idx[0] < 30);
        assert_eq!(
            epsnet_net_indices(net, idx.as_mut_ptr(), 0),
            EpsnetStatus::Overflow
        );

        let mut worst = 0;
        assert_eq!(epsnet_max_avoiding(ps, net, &mut worst), EpsnetStatus::Ok);
        assert!(worst * 4 <= 3 * 30 + 5);
        epsnet_net_free(net);

        for (b, param) in [
            (EpsnetBuilder::Rect, 3),
            (EpsnetBuilder::HullWalk, 2),
            (EpsnetBuilder::Disk2, 0),
        ] {
            let mut net = ptr::null_mut();
            assert_eq!(
                epsnet_build(ps, b, param, &mut net),
                EpsnetStatus::Ok,
                "{b:?}: {}",
                last_error()
            );
            assert!(epsnet_net_size(net) <= param.max(2));
            epsnet_net_free(net);
        }
        epsnet_pointset_free(ps);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut ps = ptr::null_mut();
        assert_eq!(
            epsnet_pointset_new(2, ptr::null(), 3, &mut ps),
            EpsnetStatus::NullPointer
        );
        assert!(last_error().contains("coords"));
        assert_eq!(
            epsnet_pointset_new(0, [1i64].as_ptr(), 1, &mut ps),
            EpsnetStatus::InvalidInput
        );

        let line = pointset(&[0, 0, 1, 1, 2, 2, 3, 3]);
        let mut net = ptr::null_mut();
        assert_eq!(
            epsnet_build(line, EpsnetBuilder::Disk2, 0, &mut net),
            EpsnetStatus::Degenerate
        );
        assert!(net.is_null());
        assert_eq!(
            epsnet_build(ptr::null(), EpsnetBuilder::Rect, 1, &mut net),
            EpsnetStatus::NullPointer
        );
        epsnet_pointset_free(line);

        let bad = CString::new("{\"dim\": 2, \"points\": [[1]]}").unwrap();
        assert_eq!(
            epsnet_pointset_from_json(bad.as_ptr(), &mut ps),
            EpsnetStatus::InvalidInput
        );
        let good = CString::new("{\"dim\": 2, \"points\": [[1, 2], [3, 4]]}").unwrap();
        assert_eq!(
            epsnet_pointset_from_json(good.as_ptr(), &mut ps),
            EpsnetStatus::Ok
        );
        assert!(epsnet_last_error().is_null());
        assert_eq!(epsnet_pointset_len(ps), 2);
        epsnet_pointset_free(ps);

        let name = CString::new("rect9-lb").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            epsnet_generate(name.as_ptr(), 2, 1, 1, &mut g),
            EpsnetStatus::InvalidInput
        );

        epsnet_pointset_free(ptr::null_mut());
        epsnet_net_free(ptr::null_mut());
        epsnet_instance_free(ptr::null_mut());
        epsnet_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_instances_meet_their_bound() {
    unsafe {
        let name = CString::new("rect5-lb").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            epsnet_generate(name.as_ptr(), 2, 2, 5, &mut g),
            EpsnetStatus::Ok
        );
        assert_eq!(epsnet_instance_net_size(g), 5);
        let need = epsnet_instance_required_count(g);
        let mut worst = 0;
        assert_eq!(
            epsnet_instance_verify(g, 10, &mut worst),
            EpsnetStatus::BudgetExceeded
        );
        assert_eq!(
            epsnet_instance_verify(g, u64::MAX, &mut worst),
            EpsnetStatus::Ok
        );
        assert!(worst >= need);

        let mut ps = ptr::null_mut();
        assert_eq!(epsnet_instance_pointset(g, &mut ps), EpsnetStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(epsnet_instance_to_json(g, &mut json), EpsnetStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(epsnet_pointset_from_json(json, &mut back), EpsnetStatus::Ok);
        assert_eq!(epsnet_pointset_len(back), epsnet_pointset_len(ps));

        epsnet_string_free(json);
        epsnet_pointset_free(back);
        epsnet_pointset_free(ps);
        epsnet_instance_free(g);
    }
}

#[test]
fn header_declares_the_abi() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/epsnet.h");
    let text = std::fs::read_to_string(header).unwrap();
    for f in [
        "epsnet_pointset_new",
        "epsnet_build",
        "epsnet_last_error",
        "epsnet_instance_verify",
        "EPSNET_STATUS_PANIC",
    ] {
        assert!(text.contains(f), "{f}");
    }
    let Ok(o) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", header])
        .output()
    else {
        return;
    };
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
