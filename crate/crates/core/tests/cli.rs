use std::fs;
use std::process::{Command, Output};

fn chardeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chardeg"))
        .env_remove("CHARDEG_CACHE_DIR")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_writes_cdset() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a5.cdset");
    let out = chardeg(&["compute", "--group", "A", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("CDSET 1\ngroup=A\nn=5\ncount=4\nmultiplicity=0\n1\n3\n4\n5\nsha256="));
    let set = chardeg::cdset::read(&path).unwrap();
    assert_eq!(set.len(), 4);
}

#[test]
fn queries_print_plain_values() {
    let out = chardeg(&["member", "--group", "A", "--n", "14", "--value", "7280"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "false\n");
    let out = chardeg(&["member", "--group", "A", "--n", "14", "--value", "560"]);
    assert_eq!(stdout(&out), "true\n");
    let out = chardeg(&["mindeg", "--group", "A", "--n", "14", "--k", "4"]);
    assert_eq!(stdout(&out), "13\n77\n78\n273\n");
    let out = chardeg(&["quotient-set", "--n", "14", "--index", "1716"]);
    assert_eq!(stdout(&out), "1\n7\n9\n20\n28\n");
    let out = chardeg(&["spin", "--group", "2A", "--n", "5", "--multiplicity"]);
    assert_eq!(stdout(&out), "2 2\n4 1\n6 1\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(chardeg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(chardeg(&["compute", "--group", "B", "--n", "5"]).status.code(), Some(2));
    assert_eq!(chardeg(&["compute", "--group", "A", "--n", "81"]).status.code(), Some(2));
    assert_eq!(chardeg(&["report", "--n-cap", "10"]).status.code(), Some(2));
    assert_eq!(chardeg(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(chardeg(&["spin", "--group", "A", "--n", "5"]).status.code(), Some(2));
    assert_eq!(chardeg(&["--workers", "0", "mindeg", "--group", "A", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = chardeg(&["verify", "--check", "lemma33", "--n-max", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("lemma33 n_min=4,n_max=42 PASS 24\n"), "{text}");
    assert!(text.ends_with("TOTAL pass=1 fail=0 skipped=0\n"));

    let out = chardeg(&["verify", "--check", "lemma31", "--n-min", "10", "--n-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("SKIPPED"));
}

#[test]
fn outputs_do_not_depend_on_workers() {
    let run = |w: &str| stdout(&chardeg(&["--workers", w, "compute", "--group", "S", "--n", "22", "--multiplicity"]));
    assert_eq!(run("1"), run("3"));
}

#[test]
fn corrupted_cache_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let file = dir.path().join("A_14.cdset");
    let out = chardeg(&["compute", "--group", "A", "--n", "14", "--out", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = chardeg(&["--cache-dir", cache, "verify", "--check", "theorem43", "--n-max", "16"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let text = fs::read_to_string(&file).unwrap();
    fs::write(&file, text.replace("\n7280\n", "\n").replace("\n560\n", "\n7280\n")).unwrap();
    let out = chardeg(&["--cache-dir", cache, "verify", "--check", "theorem43", "--n-max", "16"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains(" FAIL "), "{report}");
    assert!(report.contains("corrupt cache"), "{report}");

    let out = chardeg(&["--cache-dir", cache, "member", "--group", "A", "--n", "14", "--value", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt cache"));

    let out = chardeg(&["--cache-dir", cache, "--no-cache", "member", "--group", "A", "--n", "14", "--value", "560"]);
    assert_eq!(stdout(&out), "true\n");
}

#[test]
fn report_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = chardeg(&["report", "--n-cap", "16", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.contains("lemma33 n_min=4,n_max=16 PASS"), "{text}");
    assert!(text.lines().last().unwrap().starts_with("TOTAL pass="));
    assert!(text.contains("fail=0"));
}
