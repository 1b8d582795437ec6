use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sscat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sscat"))
        .args(args)
        .env_remove("SSCAT_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn sscat_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sscat"))
        .args(args)
        .env_remove("SSCAT_MAX_ENUM")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn segal_check_of_the_spine() {
    let out = sscat(&["check", "segal", "spine2"]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    assert_eq!(r["counts"]["level2"], serde_json::json!([7, 8]));
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["verdict"], false);

    let out = sscat(&["check", "segal", "G2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["counts"]["level2"], serde_json::json!([7, 8]));
}

#[test]
fn completeness_of_e1() {
    let out = sscat(&["check", "complete", "E1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["counts"]["level0"], serde_json::json!([2, 4]));
    assert_eq!(code(&sscat(&["check", "complete", "I1"])), 0);
}

#[test]
fn delta_is_not_kan_through_a_pipe() {
    let built = sscat(&["build", "delta", "2", "--trunc", "3"]);
    assert_eq!(code(&built), 0);
    let out = sscat_stdin(&["check", "kan", "--upto", "2"], &built.stdout);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    let w = &r["kan_witness"];
    assert_eq!(w["shape"], "horn(2,0)");
    // edges 0→1 and 0→2 are mapped, but the missing edge 1→2 would run backwards
    let top = &w["top"]["0"];
    let v: Vec<u32> = ["0", "1", "2"].iter().map(|k| top[k].as_str().unwrap().parse().unwrap()).collect();
    assert!(v[0] <= v[1] && v[0] <= v[2] && v[1] > v[2], "{top}");

    let nerve = sscat(&["compute", "nerve", "I1"]);
    let out = sscat_stdin(&["check", "kan"], &nerve.stdout);
    assert_eq!(code(&out), 0);
}

#[test]
fn export_round_trips_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["isoarrow", "horn3_1", "E1", "galois", "rep-B2-{a}", "classifying-Z2"] {
        let path = dir.path().join(format!("{name}.json"));
        let p = path.to_str().unwrap();
        assert_eq!(code(&sscat(&["build", name, "--out", p])), 0);
        let first = std::fs::read(&path).unwrap();
        let again = sscat(&["export", "json", p]);
        assert_eq!(code(&again), 0);
        assert_eq!(again.stdout, first, "{name}");
        assert_eq!(code(&sscat(&["validate", p])), 0);
    }
}

#[test]
fn parse_errors_carry_positions() {
    let out = sscat_stdin(&["validate"], b"{\"objects\": [\"a\",\n  ]}");
    assert_eq!(code(&out), 1);
    let msg = json(&out)["errors"][0].as_str().unwrap().to_string();
    assert!(msg.contains("line 2"), "{msg}");
}

#[test]
fn category_violations_have_witnesses() {
    let doc = br#"{"objects":["a"],
        "morphisms":[{"id":"1","src":"a","tgt":"a"},{"id":"e","src":"a","tgt":"a"}],
        "identities":{"a":"1"}}"#;
    let out = sscat_stdin(&["check", "category"], doc);
    assert_eq!(code(&out), 1);
    let v = &json(&out)["report"]["violations"][0];
    assert_eq!(v["axiom"], "missing_composite");
    assert_eq!((v["g"].as_str(), v["f"].as_str()), (Some("e"), Some("e")));
    assert_eq!(code(&sscat_stdin(&["validate"], doc)), 1);
}

#[test]
fn bounds_and_regimes_have_their_own_codes() {
    let out = sscat(&["check", "segal", "classifying-Z2", "--max-enum", "10"]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["error"]["kind"], "enumeration_bound");
    let out = Command::new(env!("CARGO_BIN_EXE_sscat"))
        .args(["check", "kan", "nerve-B2"])
        .env("SSCAT_MAX_ENUM", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert_eq!(code(&sscat(&["check", "segal", "G2", "--trunc", "1"])), 4);
    assert_eq!(code(&sscat(&["build", "horn", "2", "7"])), 2);
    assert_eq!(code(&sscat(&["check", "segal", "no-such-thing"])), 2);
}

#[test]
fn adjoints_of_the_galois_connection() {
    let out = sscat(&["compute", "adjoint", "galois"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["adjoint"]["obMap"], serde_json::json!({"0": "0", "1": "2"}));
    assert!(r["naturality_checks"].as_u64().unwrap() > 0);

    // [0] → [1] hitting 1 has no right adjoint
    let f = br#"{"domain":"point","codomain":"poset1","obMap":{"0":"1"}}"#;
    let out = sscat_stdin(&["compute", "adjoint"], f);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["no_universal_arrow_at"], "0");
}

#[test]
fn pushout_in_b2() {
    let span = br#"{"domain":"span","codomain":"B2",
        "obMap":{"o":"{}","a":"{a}","b":"{b}"},
        "morMap":{"o-a":"{}-{a}","o-b":"{}-{b}"}}"#;
    let out = sscat_stdin(&["compute", "colimit"], span);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["colimit"]["vertex"], "{a,b}");

    // the identity of a category without a final object
    let pair = br#"{"domain":"parallel","codomain":"parallel","obMap":{"x":"x","y":"y"},"morMap":{"u":"u","v":"v"}}"#;
    let out = sscat_stdin(&["compute", "colimit"], pair);
    assert_eq!(code(&out), 1);
}

#[test]
fn fibration_checks() {
    assert_eq!(code(&sscat(&["check", "cocart", "galois"])), 0);
    assert_eq!(code(&sscat(&["check", "cofibered", "galois"])), 1);
    assert_eq!(code(&sscat(&["check", "leftfib", "galois"])), 1);
    let proj = sscat(&["compute", "grothendieck", "rep-poset2-0"]);
    assert_eq!(code(&proj), 0);
    assert_eq!(code(&sscat_stdin(&["check", "cofibered"], &proj.stdout)), 0);
    assert_eq!(code(&sscat_stdin(&["check", "leftfib"], &proj.stdout)), 0);
}

#[test]
fn homotopy_categories_and_dot() {
    let cd = sscat(&["compute", "classify", "isoarrow", "--trunc", "2", "--vtrunc", "1"]);
    assert_eq!(code(&cd), 0);
    let ho = sscat_stdin(&["compute", "ho"], &cd.stdout);
    assert_eq!(code(&ho), 0);
    let c: Value = json(&ho);
    assert_eq!(c["objects"].as_array().unwrap().len(), 3);
    assert_eq!(c["morphisms"].as_array().unwrap().len(), 7);

    let dot = sscat(&["export", "dot", "poset2", "--generators"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("digraph \"poset2\" {"));
    assert_eq!(text.matches("->").count(), 2);
    assert_eq!(code(&sscat(&["compute", "initial", "B2"])), 0);
    assert_eq!(code(&sscat(&["compute", "initial", "Z2"])), 1);
}
