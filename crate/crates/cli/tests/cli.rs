use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn jamesloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jamesloop")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = jamesloop(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    jamesloop(args).status.code().unwrap()
}

#[test]
fn homology_of_circle() {
    assert_eq!(stdout(&["homology", &data("circle.json"), "--field", "q"]), r#"{"dims":{"0":1,"1":1}}"#);
    assert_eq!(
        stdout(&["homology", &data("wedge.json"), "--field", "zp:2", "--reduced"]),
        r#"{"dims":{"0":0,"1":2}}"#
    );
}

#[test]
fn loop_homology_of_torus() {
    assert_eq!(
        stdout(&["loop-homology", &data("torus.json"), "--field", "q", "--degree", "5"]),
        r#"{"series":[1,2,5,12,29,70]}"#
    );
}

#[test]
fn suspension_of_circle_is_a_sphere() {
    let out = stdout(&["suspension", &data("circle.json")]);
    assert!(out.ends_with(r#""homology":{"dims":{"0":1,"1":0,"2":1}}}"#), "{out}");
}

#[test]
fn sec_of_beta_prime_word() {
    let w = data("wedge_word.json");
    let c = data("wedge.json");
    let loop_text = stdout(&["path", "beta", &w, "--complex", &c]);
    let p = scratch("beta_loop.json", &loop_text);
    assert_eq!(
        stdout(&["sec", &p, "--complex", &c]),
        r#"[{"cube":"e","coords":["1/3"]},{"cube":"f","coords":["3/4"]}]"#
    );
    assert_eq!(loop_text, std::fs::read_to_string(data("wedge_loop.json")).unwrap().trim_end());
}

#[test]
fn straighten_reports_word() {
    let out = stdout(&["straighten", &data("wedge_loop.json"), "--complex", &data("wedge.json"), "--samples", "3", "--contract"]);
    assert!(out.contains(r#""sec":[{"cube":"e","coords":["1/3"]},{"cube":"f","coords":["3/4"]}]"#));
    assert!(out.contains(r#""contraction":["#));
    let last = out.rsplit(r#"{"segments":"#).next().unwrap();
    assert!(last.starts_with(r#"[{"kind":"star","#) && !last.contains("track"), "{out}");
}

#[test]
fn path_operations() {
    let (p, c) = (data("wedge_loop.json"), data("wedge.json"));
    assert_eq!(stdout(&["path", "eval", &p, "--complex", &c, "--at", "1"]), r#"{"h":"0","cube":"e","coords":["1/3"]}"#);
    assert_eq!(
        stdout(&["path", "verify", &p, "--complex", &c]),
        r#"{"duration":"5","loop":true,"directed":true,"strictly_increasing":true}"#
    );
    let phi = stdout(&["path", "phi", &p, "--complex", &c, "--sign", "minus", "--t", "1"]);
    assert!(phi.starts_with(r#"{"segments":[{"kind":"star","dur":"1"},{"kind":"track","dur":"1","h":["-1","1"]"#), "{phi}");
    let inc = stdout(&["path", "increase", &p, "--complex", &c, "--epsilon", "1/2"]);
    let inc_file = scratch("increased.json", &inc);
    assert!(stdout(&["path", "verify", &inc_file, "--complex", &c]).contains(r#""strictly_increasing":true"#));
    assert_eq!(
        stdout(&["path", "classify", &scratch("half.json", &stdout(&["path", "truncate", &p, "--complex", &c, "--at", "1/10"])), "--complex", &c]),
        r#"{"class":"minus","in_minus":true,"in_plus":false,"end":{"h":"-1/2","cube":"e","coords":["1/3"]}}"#
    );
    assert_eq!(stdout(&["path", "trim", &p, "--complex", &c, "--near", "1/2"]), stdout(&["path", "trim", &p, "--complex", &c, "--near", "1/2"]));
}

#[test]
fn outputs_round_trip() {
    let c = data("torus.json");
    let text = std::fs::read_to_string(&c).unwrap();
    assert_eq!(stdout(&["standard", "torus"]), text.trim_end());
    let (p, w) = (data("wedge_loop.json"), data("wedge.json"));
    let again = scratch("again.json", &stdout(&["path", "truncate", &p, "--complex", &w, "--at", "1"]));
    assert_eq!(std::fs::read_to_string(again).unwrap(), std::fs::read_to_string(&p).unwrap().trim_end());
}

#[test]
fn validate_reports_violations() {
    assert_eq!(
        stdout(&["validate", &data("square.json")]),
        r#"{"valid":true,"counts":[4,4,1],"violations":[]}"#
    );
    let bad = stdout(&["standard", "square"]).replace(r#"{"id":"left","dim":1,"faces":{"d0_1":{"base":"v00""#, r#"{"id":"left","dim":1,"faces":{"d0_1":{"base":"v10""#);
    let f = scratch("bad_square.json", &bad);
    let out = jamesloop(&["validate", &f]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains(r#""valid":false"#));
}

#[test]
fn exit_codes() {
    let (p, c) = (data("wedge_loop.json"), data("wedge.json"));
    assert_eq!(code(&["homology", &data("no_such_file.json")]), 2);
    let dangling = scratch(
        "dangling.json",
        r#"{"basepoint":"v","cubes":[{"id":"e","dim":1,"faces":{"d0_1":{"base":"w","degens":[]},"d1_1":{"base":"v","degens":[]}}}]}"#,
    );
    assert_eq!(code(&["homology", &dangling]), 2);
    assert_eq!(code(&["path", "eval", &p, "--complex", &c, "--at", "1/x"]), 2);
    assert_eq!(code(&["homology", &c, "--field", "zp:4"]), 1);
    assert_eq!(code(&["path", "phi", &p, "--complex", &c, "--sign", "plus", "--t", "2"]), 1);
    assert_eq!(code(&["contract", &p, "--complex", &data("two-components.json")]), 2);
    let two = scratch("two_loop.json", r#"{"segments":[{"kind":"track","dur":"2","h":["-1","1"],"cube":"e","c0":["1/2"],"c1":["1/2"]}]}"#);
    assert_eq!(code(&["contract", &two, "--complex", &data("two-components.json")]), 1);
    let err = jamesloop(&["path", "increase", &p, "--complex", &c, "--epsilon", "1"]);
    assert_eq!(err.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&err.stderr).lines().count(), 1);
}

#[test]
fn selftest_passes() {
    let out = jamesloop(&["selftest", "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(r#""passed":true"#).count(), 10);
}
