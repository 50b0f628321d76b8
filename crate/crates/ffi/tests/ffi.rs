use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use thompson_strands_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ts_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ts_last_error_message()) }.to_str().unwrap().to_owned()
}

fn parse(text: &str) -> *mut TsDiagram {
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ts_diagram_parse(c(text).as_ptr(), &mut d) }, TsStatus::Ok);
    d
}

#[test]
fn reduce_multiply_invert() {
    unsafe {
        let caret = parse("diagram 1\nS 1\n");
        let mut inv = ptr::null_mut();
        assert_eq!(ts_diagram_invert(caret, &mut inv), TsStatus::Ok);
        let mut product = ptr::null_mut();
        assert_eq!(ts_diagram_multiply(caret, inv, &mut product), TsStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(ts_diagram_to_string(product, &mut text), TsStatus::Ok);
        assert_eq!(take_string(text), "diagram 1\n");

        let (mut m, mut n) = (0usize, 0usize);
        assert_eq!(ts_diagram_shape(inv, &mut m, &mut n), TsStatus::Ok);
        assert_eq!((m, n), (2, 1));

        let redex = parse("diagram 1\nS 1\nM 1\n");
        let mut reduced = ptr::null_mut();
        assert_eq!(ts_diagram_reduce(redex, &mut reduced), TsStatus::Ok);
        let mut same = false;
        assert_eq!(ts_diagram_equivalent(reduced, product, &mut same), TsStatus::Ok);
        assert!(same);

        for d in [caret, inv, product, redex, reduced] {
            ts_diagram_free(d);
        }
    }
}

#[test]
fn words_and_encodings() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(ts_diagram_from_word(c("a A").as_ptr(), &mut d), TsStatus::Ok);
        let mut enc = ptr::null_mut();
        assert_eq!(ts_diagram_encoding(d, &mut enc), TsStatus::Ok);
        assert_eq!(take_string(enc), "(1,1):id");
        ts_diagram_free(d);

        assert_eq!(ts_diagram_from_word(c("a z").as_ptr(), &mut d), TsStatus::ParseError);
        assert!(last_error().contains("unknown generator"));
    }
}

#[test]
fn error_statuses() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(ts_diagram_parse(ptr::null(), &mut d), TsStatus::NullArgument);
        assert_eq!(ts_diagram_parse(c("diagram 1\nM 1\n").as_ptr(), &mut d), TsStatus::ParseError);
        assert!(last_error().contains("line 2"));
        assert_eq!(ts_diagram_parse(c("diagram 1\n").as_ptr(), ptr::null_mut()), TsStatus::NullArgument);

        let one = parse("diagram 1\n");
        let two = parse("diagram 2\n");
        assert_eq!(ts_diagram_multiply(one, two, &mut d), TsStatus::DomainError);
        assert!(last_error().contains("cannot compose"));
        assert_eq!(ts_diagram_reduce(one, &mut d), TsStatus::Ok);
        assert_eq!(last_error(), "");
        ts_diagram_free(d);
        ts_diagram_free(one);
        ts_diagram_free(two);
        ts_diagram_free(ptr::null_mut());
        ts_string_free(ptr::null_mut());
    }
}

#[test]
fn configurations() {
    unsafe {
        let mut inside = false;
        assert_eq!(ts_tuple_in_cf(c("1 1 2").as_ptr(), &mut inside), TsStatus::Ok);
        assert!(inside);
        assert_eq!(ts_tuple_in_cf(c("1 1 3/2").as_ptr(), &mut inside), TsStatus::Ok);
        assert!(!inside);
        assert_eq!(ts_tuple_in_cf(c("").as_ptr(), &mut inside), TsStatus::DomainError);
        assert_eq!(ts_tuple_in_df(c("1 3/2 5/2").as_ptr(), &mut inside), TsStatus::Ok);
        assert!(inside);

        let mut cfg = ptr::null_mut();
        assert_eq!(ts_configuration_parse(c("1 1 3/2").as_ptr(), &mut cfg), TsStatus::DomainError);
        assert_eq!(ts_configuration_parse(c("3 7").as_ptr(), &mut cfg), TsStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(ts_configuration_retract(cfg, &mut r), TsStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ts_configuration_to_string(r, &mut s), TsStatus::Ok);
        assert_eq!(take_string(s), "1 2");
        let mut len = 0usize;
        assert_eq!(ts_configuration_len(r, &mut len), TsStatus::Ok);
        assert_eq!(len, 2);
        ts_configuration_free(cfg);
        ts_configuration_free(r);
    }
}

#[test]
fn configuration_map() {
    unsafe {
        let mut g = ptr::null_mut();
        let text = c("diagram 1\nforest 1\nS 2/7\n");
        assert_eq!(ts_generalized_parse(text.as_ptr(), &mut g), TsStatus::Ok);
        let mut cfg = ptr::null_mut();
        assert_eq!(ts_generalized_config_map(g, &mut cfg), TsStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ts_configuration_to_string(cfg, &mut s), TsStatus::Ok);
        assert_eq!(take_string(s), "1 9/7");

        let mut canon = ptr::null_mut();
        let mut dup = ptr::null_mut();
        assert_eq!(ts_configuration_parse(c("1 1 2").as_ptr(), &mut dup), TsStatus::Ok);
        assert_eq!(ts_configuration_canonicalize(dup, &mut canon), TsStatus::Ok);
        assert_eq!(ts_configuration_to_string(canon, &mut s), TsStatus::Ok);
        assert_eq!(take_string(s), "1 2");
        ts_configuration_free(canon);
        ts_configuration_free(dup);
        ts_configuration_free(cfg);
        ts_generalized_free(g);
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/thompson_strands.h")).unwrap();
    for name in [
        "ts_last_error_message",
        "ts_string_free",
        "ts_diagram_parse",
        "ts_diagram_from_word",
        "ts_diagram_reduce",
        "ts_diagram_multiply",
        "ts_diagram_invert",
        "ts_diagram_equivalent",
        "ts_diagram_shape",
        "ts_diagram_to_string",
        "ts_diagram_encoding",
        "ts_diagram_free",
        "ts_configuration_parse",
        "ts_tuple_in_cf",
        "ts_tuple_in_df",
        "ts_configuration_retract",
        "ts_configuration_canonicalize",
        "ts_configuration_len",
        "ts_configuration_to_string",
        "ts_configuration_free",
        "ts_generalized_parse",
        "ts_generalized_config_map",
        "ts_generalized_free",
        "typedef struct TsDiagram TsDiagram",
        "TS_STATUS_DOMAIN_ERROR = 4",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    if !have_cc() {
        eprintln!("cc not found; skipping");
        return;
    }
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(manifest_dir().join("include/thompson_strands.h"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

/// The static library sits next to the test binary's `deps` directory.
fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libthompson_strands_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = static_lib().filter(|_| have_cc()) else {
        eprintln!("cc or static library not found; skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("ts-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let source = dir.join("main.c");
    std::fs::write(
        &source,
        r#"
#include <stdio.h>
#include <string.h>
#include "thompson_strands.h"

int main(void) {
    TsDiagram *x0 = NULL, *inv = NULL, *id = NULL;
    if (ts_diagram_from_word("a", &x0) != TS_STATUS_OK) return 1;
    if (ts_diagram_invert(x0, &inv) != TS_STATUS_OK) return 2;
    if (ts_diagram_multiply(x0, inv, &id) != TS_STATUS_OK) return 3;
    char *enc = NULL;
    if (ts_diagram_encoding(id, &enc) != TS_STATUS_OK) return 4;
    printf("%s\n", enc);
    ts_string_free(enc);
    TsConfiguration *c = NULL;
    if (ts_configuration_parse("1 1 3/2", &c) != TS_STATUS_DOMAIN_ERROR) return 5;
    printf("%s\n", ts_last_error_message());
    ts_diagram_free(x0);
    ts_diagram_free(inv);
    ts_diagram_free(id);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("main");
    let status = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("(1,1):id\n"), "{stdout}");
    assert!(stdout.contains("not a point of CF"));
    let _ = std::fs::remove_dir_all(Path::new(&dir));
}
