use std::path::Path;
use std::process::{Command, Output};

fn vnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn compute_path_all_methods() {
    let out = vnum(&["compute", "--family", "path", "--n", "6", "--method", "all"]);
    let v = json_of(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["formula"]["value"], 3);
    assert_eq!(v["formula"]["exact"], true);
    assert_eq!(v["witness"]["degree"], 3);
    assert_eq!(v["witness"]["certified"], true);
}

#[test]
fn compute_cycle_and_monomial() {
    let v = json_of(&vnum(&["compute", "--family", "cycle", "--n", "4"]));
    assert_eq!(v["value"], 2);
    let v = json_of(&vnum(&[
        "compute", "--family", "hkm", "--k", "2", "--m", "3", "--ideal", "monomial",
    ]));
    assert_eq!(v["monomial"]["value"], 2);
}

#[test]
fn compute_rational_confirmation() {
    let v = json_of(&vnum(&[
        "compute", "--family", "path", "--n", "4", "--field", "qq",
    ]));
    for local in v["oracle"]["locals"].as_array().unwrap() {
        if !local["value"].is_null() {
            assert_eq!(local["certified_qq"], true);
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |out: &Output| {
        let mut v = json_of(out);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    let args = ["compute", "--family", "cycle", "--n", "5", "--method", "all"];
    assert_eq!(strip(&vnum(&args)), strip(&vnum(&args)));
}

#[test]
fn reg_subcommand() {
    let v = json_of(&vnum(&["reg", "--family", "path", "--n", "5", "--ideal", "monomial"]));
    assert_eq!(v["reg"], 2);
    let v = json_of(&vnum(&["reg", "--family", "complete", "--n", "4"]));
    assert_eq!(v["reg"], 1);
}

#[test]
fn verify_roundtrip_and_tamper() {
    let dir = std::env::temp_dir().join("vnum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("p6.json");
    let out = vnum(&[
        "compute", "--family", "path", "--n", "6", "--method", "witness",
        "--out", report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let cert = dir.join("cert.json");
    std::fs::write(&cert, serde_json::to_string(&v["witness"]["certificate"]).unwrap()).unwrap();
    let ok = vnum(&["verify", cert.to_str().unwrap()]);
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));
    // flip a coefficient: verification must reject and name a generator
    let mut c: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    c["witness"][0]["coeff"] = "7".into();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&c).unwrap()).unwrap();
    let rej = vnum(&["verify", bad.to_str().unwrap()]);
    assert_eq!(rej.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&rej.stdout).contains("FAIL"));
}

#[test]
fn construct_and_graph6_input() {
    let v = json_of(&vnum(&["construct", "--family", "cycle", "--n", "5"]));
    let g6 = v["graph6"].as_str().unwrap().to_string();
    assert_eq!(v["n"], 5);
    let dir = std::env::temp_dir().join("vnum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    std::fs::write(&path, g6 + "\n").unwrap();
    let v = json_of(&vnum(&["compute", "--graph", path.to_str().unwrap()]));
    assert_eq!(v["value"], 3);
}

#[test]
fn scan_clique_paths() {
    let out = vnum(&[
        "scan", "--family", "clique-path", "--max-t", "3", "--max-vertices", "6",
    ]);
    let rows = json_of(&out);
    assert!(rows.as_array().unwrap().iter().all(|r| r["ok"] == true));
}

#[test]
fn error_exit_codes() {
    let out = vnum(&["compute", "--family", "nosuch", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = Path::new("/definitely/not/here.json");
    let out = vnum(&["compute", "--graph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
