use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use vcirc::*;

fn gf4() -> *mut VcField {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { vc_field_new(2, 2, &mut f) }, VcStatus::Ok);
    f
}

fn last_error() -> String {
    let p = vc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn field_arithmetic() {
    let f = gf4();
    let mut r = 0u8;
    unsafe {
        assert_eq!(vc_field_order(f), 4);
        assert_eq!(vc_field_add(f, 2, 3, &mut r), VcStatus::Ok);
        assert_eq!(r, 1);
        assert_eq!(vc_field_mul(f, 2, 2, &mut r), VcStatus::Ok);
        assert_eq!(r, 3);
        assert_eq!(vc_field_inv(f, 3, &mut r), VcStatus::Ok);
        assert_eq!(r, 2);
        assert_eq!(vc_field_inv(f, 0, &mut r), VcStatus::OutOfRange);
        assert_eq!(vc_field_mul(f, 4, 1, &mut r), VcStatus::OutOfRange);
        vc_field_free(f);
    }
}

#[test]
fn field_construction_errors() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(vc_field_new(6, 1, &mut f), VcStatus::InvalidArgument);
        assert!(f.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(vc_field_new(2, 2, ptr::null_mut()), VcStatus::NullPointer);
        // x^2 + 1 is reducible over GF(2)
        let reducible = [1u8, 0, 1];
        assert_eq!(
            vc_field_new_with_modulus(2, 2, reducible.as_ptr(), &mut f),
            VcStatus::InvalidArgument
        );
        let aes = [1u8, 1, 0, 1, 1, 0, 0, 0, 1];
        assert_eq!(
            vc_field_new_with_modulus(2, 8, aes.as_ptr(), &mut f),
            VcStatus::Ok
        );
        let mut r = 0u8;
        assert_eq!(vc_field_mul(f, 0x53, 0xca, &mut r), VcStatus::Ok);
        assert_eq!(r, 1);
        vc_field_free(f);
        vc_field_free(ptr::null_mut());
    }
}

#[test]
fn shift_and_circulant() {
    let f = gf4();
    let lambda = [2u8, 0, 0, 1];
    let v = [1u8, 2, 0, 2];
    let mut row = [0u8; 4];
    let mut m = [0u8; 16];
    let mut flag = false;
    unsafe {
        assert_eq!(
            vc_vector_cyclic_shift(f, lambda.as_ptr(), v.as_ptr(), 4, row.as_mut_ptr()),
            VcStatus::Ok
        );
        assert_eq!(row, [3, 1, 2, 2]);
        assert_eq!(
            vc_vec_circulant(f, lambda.as_ptr(), v.as_ptr(), 4, m.as_mut_ptr()),
            VcStatus::Ok
        );
        assert_eq!(m, [1, 2, 0, 2, 3, 1, 2, 2, 3, 3, 1, 0, 0, 3, 3, 1]);
        assert_eq!(
            vc_is_vector_circulant(f, lambda.as_ptr(), 4, m.as_ptr(), &mut flag),
            VcStatus::Ok
        );
        assert!(flag);
        m[5] = 0;
        assert_eq!(
            vc_is_vector_circulant(f, lambda.as_ptr(), 4, m.as_ptr(), &mut flag),
            VcStatus::Ok
        );
        assert!(!flag);

        let mut t = [0u8; 16];
        assert_eq!(
            vc_companion_matrix(f, lambda.as_ptr(), 4, t.as_mut_ptr()),
            VcStatus::Ok
        );
        assert_eq!(t, [0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 1]);
        assert_eq!(
            vc_is_companion_invertible(f, lambda.as_ptr(), 4, &mut flag),
            VcStatus::Ok
        );
        assert!(flag);
        let singular = [0u8, 1, 1];
        assert_eq!(
            vc_is_companion_invertible(f, singular.as_ptr(), 3, &mut flag),
            VcStatus::Ok
        );
        assert!(!flag);

        let bad = [1u8, 5, 0, 0];
        assert_eq!(
            vc_vector_cyclic_shift(f, lambda.as_ptr(), bad.as_ptr(), 4, row.as_mut_ptr()),
            VcStatus::OutOfRange
        );
        assert_eq!(
            vc_vector_cyclic_shift(f, ptr::null(), v.as_ptr(), 4, row.as_mut_ptr()),
            VcStatus::NullPointer
        );
        vc_field_free(f);
    }
}

#[test]
fn quotient_product_matches_circulant_square() {
    // (1 + a x)^2 mod x^3 - (1 + x^2) = 1 + a2 x^2
    let f = gf4();
    let lambda = [1u8, 0, 1];
    let a = [1u8, 2, 0];
    let mut out = [0u8; 3];
    unsafe {
        assert_eq!(
            vc_quotient_mul(
                f,
                lambda.as_ptr(),
                3,
                a.as_ptr(),
                a.as_ptr(),
                out.as_mut_ptr()
            ),
            VcStatus::Ok
        );
        vc_field_free(f);
    }
    assert_eq!(out, [1, 0, 3]);
}

#[test]
fn code_parameters() {
    let lambda = [1u8, 0, 0, 0, 0, 0, 0, 2];
    let v = [0u8, 2, 3, 3, 1, 1, 1, 1];
    let mut code = ptr::null_mut();
    let mut d = 0usize;
    unsafe {
        assert_eq!(
            vc_code_new(lambda.as_ptr(), v.as_ptr(), 8, &mut code),
            VcStatus::Ok
        );
        assert_eq!(vc_code_length(code), 8);
        assert_eq!(vc_code_dimension(code), 8);
        assert_eq!(vc_code_min_distance(code, &mut d), VcStatus::Ok);
        assert_eq!(d, 4);
        let mut wd = [0u64; 9];
        assert_eq!(
            vc_code_weight_distribution(code, wd.as_mut_ptr(), 4),
            VcStatus::BufferTooSmall
        );
        assert_eq!(
            vc_code_weight_distribution(code, wd.as_mut_ptr(), 9),
            VcStatus::Ok
        );
        assert_eq!(wd.iter().sum::<u64>(), 256);
        assert_eq!(wd[..4], [1, 0, 0, 0]);
        assert!(wd[4] > 0);
        vc_code_free(code);
    }
    assert_eq!(vc_classify(8, 8, 4), VcCodeClass::NearExtremal);
    assert_eq!(vc_classify(4, 4, 3), VcCodeClass::Extremal);
    assert_eq!(vc_classify(4, 4, 4), VcCodeClass::BoundViolating);
    assert_eq!(vc_classify(4, 3, 3), VcCodeClass::Ordinary);
}

#[test]
fn trivial_code_and_generator_input() {
    let zero = [0u8, 0];
    let lambda = [1u8, 0];
    let mut code = ptr::null_mut();
    let mut d = 0usize;
    unsafe {
        assert_eq!(
            vc_code_new(lambda.as_ptr(), zero.as_ptr(), 2, &mut code),
            VcStatus::Ok
        );
        assert_eq!(vc_code_dimension(code), 0);
        assert_eq!(vc_code_min_distance(code, &mut d), VcStatus::TrivialCode);
        vc_code_free(code);

        // rows (1, 0), (a, 0), (a2, 0): binary dimension 2
        let g = [1u8, 0, 2, 0, 3, 0];
        assert_eq!(
            vc_code_from_generator(g.as_ptr(), 3, 2, &mut code),
            VcStatus::Ok
        );
        assert_eq!(vc_code_dimension(code), 2);
        assert_eq!(vc_code_min_distance(code, &mut d), VcStatus::Ok);
        assert_eq!(d, 1);
        vc_code_free(code);
    }
}

#[test]
fn default_table_verifies() {
    let (mut passed, mut total) = (0usize, 0usize);
    assert_eq!(
        unsafe { vc_verify_default_table(&mut passed, &mut total) },
        VcStatus::Ok
    );
    assert_eq!((passed, total), (12, 12));
}

#[test]
fn search_json_and_guard() {
    let mode = CString::new("exhaustive").unwrap();
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(
            vc_search_json(3, mode.as_ptr(), 0, 0, 2, false, &mut json),
            VcStatus::Ok
        );
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        vc_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["d"], 2);
        assert_eq!(v["candidates_examined"], 4096);

        assert_eq!(
            vc_search_json(9, mode.as_ptr(), 0, 0, 1, false, &mut json),
            VcStatus::SearchGuard
        );
        assert!(last_error().contains("refused"));

        let bogus = CString::new("greedy").unwrap();
        assert_eq!(
            vc_search_json(3, bogus.as_ptr(), 0, 0, 1, false, &mut json),
            VcStatus::InvalidArgument
        );

        let random = CString::new("random").unwrap();
        let mut a = ptr::null_mut();
        let mut b = ptr::null_mut();
        assert_eq!(
            vc_search_json(6, random.as_ptr(), 9, 300, 1, false, &mut a),
            VcStatus::Ok
        );
        assert_eq!(
            vc_search_json(6, random.as_ptr(), 9, 300, 3, false, &mut b),
            VcStatus::Ok
        );
        assert_eq!(CStr::from_ptr(a), CStr::from_ptr(b));
        vc_string_free(a);
        vc_string_free(b);
    }
}

#[test]
fn success_clears_last_error() {
    let mut f = ptr::null_mut();
    unsafe {
        assert_ne!(vc_field_new(4, 1, &mut f), VcStatus::Ok);
        assert!(!vc_last_error_message().is_null());
        assert_eq!(vc_field_new(3, 1, &mut f), VcStatus::Ok);
        assert!(vc_last_error_message().is_null());
        vc_field_free(f);
    }
}

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/vcirc.h")).unwrap();
    let source = std::fs::read_to_string(manifest_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .filter_map(|rest| rest.split('(').next())
        .collect();
    assert!(exports.len() > 20);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct VcField VcField;"));
    assert!(header.contains("VC_STATUS_SEARCH_GUARD = 9"));
}

/// Directory holding `libvcirc.a`, next to this test executable.
fn lib_dir() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?.to_path_buf();
    dir.join("libvcirc.a").exists().then_some(dir)
}

#[test]
fn c_program_links_against_static_library() {
    let (Some(lib), Ok(cc)) = (lib_dir(), which_cc()) else {
        eprintln!("skipping: no C compiler or static library");
        return;
    };
    let tmp = tempfile::tempdir().unwrap();
    let exe = tmp.path().join("smoke");
    let status = Command::new(cc)
        .arg(manifest_dir().join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(lib.join("libvcirc.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc)
        .arg("--version")
        .output()
        .map(|_| cc)
        .map_err(|_| ())
}
