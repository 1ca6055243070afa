use std::process::{Command, Output};

fn igq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_igq")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn identical_invocations_give_identical_json() {
    let args = ["qh", "--n", "3", "--format", "json"];
    let (a, b) = (igq(&args), igq(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["rows"].as_array().unwrap().len() >= 7);
    // wall clock stays on stderr
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timings"));
    assert!(String::from_utf8_lossy(&a.stderr).contains("# timings"));

    let d = ["dcat", "--k", "3", "--space", "igr"];
    assert_eq!(igq(&d).stdout, igq(&d).stdout);
}

#[test]
fn single_checks() {
    let v = json(&igq(&["qh", "--n", "2", "--check", "spectrum"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["computed"], "(4, 0, 1, 3, 3)");
    assert_eq!(rows[0]["status"], "PASS");
    assert_eq!(v["invocation"]["checks"], serde_json::json!(["spectrum"]));

    let v = json(&igq(&["dcat", "--k", "2", "--space", "igr", "--check", "lefschetz"]));
    assert_eq!(v["rows"][0]["computed"], "4 objects, 0 failures");

    let v = json(&igq(&["dcat", "--k", "3", "--space", "igr", "--check", "keyext"]));
    assert_eq!(v["rows"][0]["computed"], "1 in degree 3");
}

#[test]
fn symbolic_lemma() {
    let v = json(&igq(&["qh", "--n", "3", "--check", "lemma", "--q-mode", "symbolic"]));
    assert_eq!(v["rows"][0]["computed"], "-q");
    assert_eq!(v["summary"]["pass"], 2);
}

#[test]
fn guards_and_errors() {
    let out = igq(&["qh", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside [2, 5]"));
    assert!(out.stdout.is_empty());
    let out = igq(&["qh", "--n", "6", "--max-n", "6", "--check", "regularity"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["rows"][0]["computed"], "1");
    assert_eq!(igq(&["dcat", "--k", "5", "--space", "gr"]).status.code(), Some(2));
    assert!(!igq(&["qh", "--n", "3", "--check", "nonsense"]).status.success());
}

#[test]
fn markdown() {
    let out = igq(&["dcat", "--k", "2", "--space", "gr", "--format", "md"]);
    assert!(out.status.success());
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.starts_with("# igq dcat k=2 space=gr"));
    assert!(md.contains("| claim | computed | expected | status |"));
    assert!(md.contains("| residual.G(2,4).i=2.j=1 | 0 | 0 | PASS |"));
}

#[test]
fn dump_writes_presentations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out");
    let out = igq(&["qh", "--n", "3", "--check", "dims", "--dump", path.to_str().unwrap()]);
    assert!(out.status.success());
    let mut names: Vec<String> =
        std::fs::read_dir(&path).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 8);
    assert!(names.contains(&"ig2-6-quantum_i-q1.gb.txt".to_string()));
    let text = std::fs::read_to_string(path.join("ig2-6-classical_ii.txt")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# IG(2,6) variant=CLASSICAL_II q=none"));
    assert_eq!(lines.next(), Some("# ring: a1,a2,b1 order=Grevlex"));
}
