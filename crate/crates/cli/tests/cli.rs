use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mgcm_core::session::parse_session;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn mgcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mgcm")).current_dir(root()).env_remove("MGCM_CACHE_DIR").args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn corpus_files_round_trip() {
    let mut n = 0;
    for e in std::fs::read_dir(root().join("corpus")).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "mgcm") {
            let s = parse_session(&std::fs::read_to_string(&p).unwrap()).unwrap();
            let printed = s.to_string();
            assert_eq!(parse_session(&printed).unwrap(), s, "{}", p.display());
            let out = mgcm(&["parse", p.to_str().unwrap()]);
            assert_eq!(String::from_utf8(out.stdout).unwrap(), printed);
            n += 1;
        }
    }
    assert!(n >= 20);
}

#[test]
fn malformed_file_lists_every_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.mgcm",
        "ring A = poly(char=0; a, b : deg=(0));\nideal I = (a, );\nmodule N = free(A; (0,0));\nverify lem41 Q;\n",
    );
    let out = mgcm(&["run", &f]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("empty generator at line 2"), "{err}");
    assert!(err.contains("3:") && err.contains("rank 1"), "{err}");
    assert!(err.contains("unknown identifier `Q`"), "{err}");
}

#[test]
fn exit_codes_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "p1.mgcm",
        "ring S = poly(char=32003; x, y : deg=(1));\nmodule O = ring(S);\nmodule E = cyclic(S; x^2, x*y);\nverify thm31 O;\n",
    );
    let out = mgcm(&["run", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["pass"], 1);
    assert_eq!(v["entries"][0]["theorem"], "thm31");

    let out = mgcm(&["--format", "csv", "verify", "thm31", &f, "E"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("object,check,i,degree,value,expected,verdict,mode,window\n"));
    assert!(csv.lines().skip(1).all(|l| l.starts_with("E,")));

    let out = mgcm(&["--format", "xml", "run", &f]);
    assert_eq!(out.status.code(), Some(2));

    let out = mgcm(&["verify", "lem41", &f]);
    assert_eq!(out.status.code(), Some(2));

    let out = mgcm(&["--window", "(-1)..(1)", "--char", "0", "verify", "thm31", &f, "O"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"][0]["characteristic"], 0);
    assert_eq!(v["entries"][0]["window"], "[(-1),(1)]");
}

#[test]
fn empty_and_mixed_corpora() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "empty.json", "[]");
    let out = mgcm(&["corpus", &m]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"entries":[],"summary":{"fail":0,"pass":0}}"#);

    write(dir.path(), "bad.mgcm", "ring S = poly(char=32003; x : deg=(1));\nideal I = (x, );\n");
    write(dir.path(), "good.mgcm", "ring S = poly(char=32003; x, y : deg=(1));\nmodule O = ring(S);\ncheck invariants O;\n");
    let m = write(dir.path(), "mixed.json", r#"[{"path":"good.mgcm","expected":"pass"},{"path":"bad.mgcm","expected":"pass"}]"#);
    let out = mgcm(&["corpus", &m]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"][0]["verdict"], "pass");
    assert_eq!(v["entries"][1]["verdict"], "input-error");
    assert_eq!(v["summary"]["fail"], 1);
}
