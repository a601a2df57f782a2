use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn matgor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matgor"))
        .args(args)
        .env_remove("MATGOR_BIG")
        .env_remove("MATGOR_GUARD_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn claim<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no claim {name}"))
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("matgor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn five_vector_algebra() {
    let out = matgor(&["algebra", "--builtin", "fivevec"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(claim(&r, "hilbert_ann")["computed"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(claim(&r, "hilbert_jm")["computed"], serde_json::json!([1, 5, 6, 1]));
    assert_eq!(claim(&r, "hilbert_jm")["source"], "both");
    assert_eq!(claim(&r, "hilbert_jm")["agree"], true);
    assert_eq!(claim(&r, "gorenstein_ann")["source"], "computed");
    assert_eq!(claim(&r, "hessian_factorisation")["computed"], true);
    assert_eq!(r["results"]["report"]["extra_generators"]["2"][0], "x1*x3 - x1*x5 - x3*x4 + x4*x5");
}

#[test]
fn report_all_on_the_projective_line() {
    let spec = temp("pg22.json");
    std::fs::write(&spec, r#"{"type":"pg","q":2,"n":2}"#).unwrap();
    let out = matgor(&["report-all", "--matroid", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(claim(&r, "hilbert_ann")["computed"], serde_json::json!([1, 3, 1]));
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn report_all_five_vector_verdicts() {
    let out = matgor(&["report-all", "--builtin", "fivevec"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(claim(&r, "ann_equals_jm")["computed"], false);
    assert_eq!(claim(&r, "gorenstein_jm")["computed"], false);
    assert_eq!(claim(&r, "modular")["computed"], false);
    assert_eq!(claim(&r, "sperner")["computed"], true);
    assert_eq!(claim(&r, "fan_jm_counts")["computed"], serde_json::json!({"rays": 7, "maximal": 12}));
    assert_eq!(claim(&r, "fan_ann_counts")["agree"], true);
}

#[test]
fn reports_are_deterministic() {
    let a = matgor(&["report-all", "--builtin", "m22", "--seed", "3"]);
    let b = matgor(&["report-all", "--builtin", "m22", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("timings_ms").is_none());
    let t = json(&matgor(&["algebra", "--builtin", "m22", "--timings"]));
    assert!(t["timings_ms"]["algebra"].is_u64());
}

#[test]
fn empty_bases_are_invalid() {
    let spec = temp("empty.json");
    std::fs::write(&spec, r#"{"type":"bases","ground":[1,2],"bases":[]}"#).unwrap();
    let out = matgor(&["algebra", "--matroid", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "invalid_input");
    assert_eq!(json(&out)["error"]["check"], "algebra");
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(matgor(&["algebra"]).status.code(), Some(2));
    assert_eq!(matgor(&["algebra", "--builtin", "nosuch"]).status.code(), Some(2));
    let wrong_len = matgor(&["lefschetz", "--builtin", "m22", "--point", "1,2"]);
    assert_eq!(wrong_len.status.code(), Some(2));
}

#[test]
fn large_fans_need_big() {
    let out = matgor(&["fan", "--builtin", "m23"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["error"]["kind"], "guard_exceeded");
}

#[test]
fn fan_file_schema() {
    let path = temp("fan.json");
    let off = temp("delta.off");
    let out = matgor(&[
        "fan",
        "--ideal",
        "jm",
        "--builtin",
        "m22",
        "--out",
        path.to_str().unwrap(),
        "--off",
        off.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let fan: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(fan["ambient"], "H");
    assert_eq!(fan["rays"], serde_json::json!([[-2, 1, 1], [1, -2, 1], [1, 1, -2]]));
    assert_eq!(fan["counts"], serde_json::json!({"rays": 3, "maximal": 3}));
    assert_eq!(fan["maximal_cones"].as_array().unwrap().len(), 3);
    assert!(std::fs::read_to_string(&off).unwrap().starts_with("nOFF\n3\n3 0 0\n"));
}

#[test]
fn lefschetz_and_sperner_methods() {
    let r = json(&matgor(&["lefschetz", "--builtin", "fivevec", "--point", "1,2,3,-1,5"]));
    assert_eq!(r["pass"], false);
    let r = json(&matgor(&["lefschetz", "--builtin", "boolean:3", "--method", "rank", "--ideal", "jm"]));
    assert_eq!(r["pass"], true);
    let s = json(&matgor(&["sperner", "--builtin", "boolean:4", "--method", "both"]));
    assert_eq!(s["results"]["sperner"]["method_agreement"], true);
    assert_eq!(s["results"]["sperner"]["max_antichain"], 6);
    let f = json(&matgor(&["sperner", "--builtin", "fivevec"]));
    assert!(f["results"]["sperner"]["method_agreement"].is_null());
}

#[test]
fn tropical_identities() {
    let out = matgor(&["tropical", "--builtin", "m22", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(claim(&r, "vtrop_phi_rays")["agree"], true);
    assert_eq!(r["results"]["identities"]["id3"], true);
}
