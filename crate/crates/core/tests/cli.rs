use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn setsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn dim_of_fixture() {
    let l = fixture("pair-L.json");
    let o = setsys(&["dim", l.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");

    let o = setsys(&["--json", "dim", "--witness", l.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn ramsey_verify() {
    let o = setsys(&["ramsey", "verify", "3", "3", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "holds");
    let o = setsys(&["ramsey", "verify", "3", "3", "5"]);
    assert!(stdout(&o).starts_with("fails"));
    let o = setsys(&["ramsey", "verify", "3", "3", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_suite_exit_codes() {
    let o = setsys(&["check", "repre", "--max-size", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("suite repre: ok"));
    let o = setsys(&["check", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_json_is_deterministic() {
    let args = ["--json", "check", "trace-laws", "--seed", "9", "--trials", "50"];
    let (a, b) = (setsys(&args), setsys(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 9);
    assert!(v.get("ms").is_none());
    let timed = setsys(&["--json", "--timing", "check", "coatomic", "--max-size", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(v["ms"].is_u64());
}

#[test]
fn malformed_input_names_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"universe": ["0"], "sets": [["0"], [{"pair": 3}]]}"#).unwrap();
    let o = setsys(&["dim", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("sets[1][0]"), "{err}");
}

#[test]
fn strict_rejects_unclosed_orders() {
    let q = fixture("chain3.json");
    let q = q.to_str().unwrap();
    assert_eq!(stdout(&setsys(&["otp", q])).trim(), "3");
    assert_eq!(setsys(&["--strict", "otp", q]).status.code(), Some(2));
}

#[test]
fn dim_respects_max_universe() {
    let l = fixture("pair-L.json");
    let o = setsys(&["--max-universe", "2", "dim", l.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn operations_and_traces() {
    let (l, m) = (fixture("pair-L.json"), fixture("pair-M.json"));
    let (l, m) = (l.to_str().unwrap(), m.to_str().unwrap());
    let o = setsys(&["--json", "op", "intersect", l, m]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sets"].as_array().unwrap().len(), 4);
    assert_eq!(setsys(&["op", "bang", l, m]).status.code(), Some(2));

    let t = fixture("swap.json");
    let t = t.to_str().unwrap();
    let o = setsys(&["--json", "trace", "classify", t]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["branching_degree"], 2);
    let o = setsys(&["--json", "trace", "apply", t, "0"]);
    assert_eq!(stdout(&o).trim(), r#"["1"]"#);
    assert_eq!(setsys(&["trace", "compose", t, t]).status.code(), Some(0));
    assert_eq!(setsys(&["trace", "image", t, l]).status.code(), Some(0));
}

#[test]
fn lang_and_chain() {
    let f = fixture("words-ab.json");
    let f = f.to_str().unwrap();
    let o = setsys(&["--json", "lang", "shuffle", f]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["max_len"], 4);
    let o = setsys(&["lang", "closure", f, "--max-len", "2"]);
    assert!(stdout(&o).contains("ab ba"));
    let o = setsys(&["--json", "chain", "--family", "dcl", "--length", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
    let o = setsys(&["chain", "--family", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn single_bound_checks() {
    let (l, m) = (fixture("pair-L.json"), fixture("pair-M.json"));
    let o = setsys(&["check", "union", l.to_str().unwrap(), m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let (x, y) = (fixture("peak0.json"), fixture("peak1.json"));
    let o = setsys(&["--json", "check", "wqo", x.to_str().unwrap(), y.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["otp_meet"], 3);
}
