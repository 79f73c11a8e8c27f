mod common;

use std::io::Write;

use predicates::prelude::*;
use serde_json::Value;
use sfword::parse_word;

use common::{assert_golden, assert_schema, run, sfword, stdout};

const TABLE1: [u64; 28] = [
    1, 0, 0, 1, 0, 1, 1, 1, 3, 0, 3, 4, 4, 7, 9, 7, 12, 12, 16, 18, 23, 24, 34, 36, 48, 55, 69, 78,
];

fn json_lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn json_doc(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn assert_reparses(text: &str) {
    for token in text.split_whitespace() {
        if token.chars().all(|c| c.is_ascii_digit()) && token.chars().all(|c| "012".contains(c)) {
            parse_word(token).unwrap();
        }
    }
}

#[test]
fn help_and_version() {
    sfword().arg("--help").assert().success();
    sfword().arg("--version").assert().success();
}

#[test]
fn check_square_free_word() {
    sfword()
        .args(["check", "010212010"])
        .assert()
        .code(0)
        .stdout("square-free\n");
}

#[test]
fn check_word_with_square() {
    sfword()
        .args(["check", "0101"])
        .assert()
        .code(1)
        .stdout("square 0101 at 0 (half-length 2)\n");
}

#[test]
fn check_batch_from_stdin() {
    sfword()
        .arg("check")
        .write_stdin("010212010\n00\n\n0120\n")
        .assert()
        .code(1)
        .stdout("010212010\tsquare-free\n00\tsquare 00 at 0 (half-length 1)\n0120\tsquare-free\n");
}

#[test]
fn check_json_lines() {
    let out = run(&["check", "--json", "010212010", "01212"]);
    assert_eq!(out.status.code(), Some(1));
    let lines = json_lines(&stdout(&out));
    assert_eq!(lines.len(), 2);
    for v in &lines {
        assert_schema("check", v);
    }
    assert_eq!(lines[0]["square_free"], true);
    assert_eq!(lines[1]["square"]["start"], 1);
    assert_eq!(lines[1]["square"]["half_length"], 2);
}

#[test]
fn invalid_word_is_usage_error() {
    sfword()
        .args(["check", "0130"])
        .assert()
        .code(2)
        .stdout("")
        .stderr(predicate::str::contains("error:").and(predicate::str::contains("hint:")));
}

#[test]
fn unknown_flag_is_usage_error() {
    sfword().args(["check", "--bogus", "010"]).assert().code(2);
    sfword().args(["frobnicate"]).assert().code(2);
}

#[test]
fn exclusive_output_flags() {
    sfword()
        .args(["census", "--from", "3", "--to", "4", "--json", "--table"])
        .assert()
        .code(2);
    sfword()
        .args(["census", "--from", "3", "--to", "4", "--csv", "--json"])
        .assert()
        .code(2);
    sfword()
        .args(["verify-paper", "--json", "--table"])
        .assert()
        .code(2);
    sfword()
        .args(["morphism", "--builtin", "phi", "--spec", "x", "align"])
        .assert()
        .code(2);
}

#[test]
fn delete_prints_remaining_word() {
    sfword()
        .args(["delete", "010212010", "--start", "4", "--length", "1"])
        .assert()
        .code(0)
        .stdout("01022010\n");
    let out = run(&["delete", "010212010", "--start", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_doc(&stdout(&out));
    assert_schema("delete", &v);
    assert_eq!(v["result"], "01012010");
    assert_eq!(v["square_free"], false);
}

#[test]
fn delete_rejects_boundary_site() {
    sfword()
        .args(["delete", "010212010", "--start", "0"])
        .assert()
        .code(1)
        .stderr(predicate::str::starts_with("error:"));
    sfword()
        .args(["delete", "010212010", "--start", "7", "--length", "2"])
        .assert()
        .code(1);
}

#[test]
fn irreducible_verdicts() {
    sfword()
        .args(["irreducible", "010212010"])
        .assert()
        .code(0)
        .stdout("irreducibly square-free\n");
    let out = run(&["irreducible", "0102"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("not irreducibly square-free"));
    assert_reparses(&text);
}

#[test]
fn irreducible_errors() {
    sfword().args(["irreducible", "0101"]).assert().code(1);
    sfword().args(["irreducible", "01"]).assert().code(1);
    sfword()
        .args(["irreducible", "0101", "010"])
        .assert()
        .code(1)
        .stdout("010\tirreducibly square-free\n")
        .stderr(predicate::str::contains("0101"));
}

#[test]
fn irreducible_json_schema() {
    let out = run(&[
        "irreducible",
        "--json",
        "010212010",
        "0102",
        "01202120102120210",
    ]);
    let lines = json_lines(&stdout(&out));
    assert_eq!(lines.len(), 3);
    for v in &lines {
        assert_schema("irreducibility-report", v);
    }
    assert_eq!(lines[0]["verdict"], true);
    assert_eq!(lines[1]["verdict"], false);
    assert_eq!(lines[2]["verdict"], true);
}

#[test]
fn k_irreducible() {
    let tau5_1 = sfword()
        .args(["morphism", "--builtin", "tau", "power", "5"])
        .output()
        .unwrap();
    let text = stdout(&tau5_1);
    let img1 = text
        .lines()
        .find_map(|l| l.strip_prefix("1 -> "))
        .unwrap()
        .to_string();
    let w = format!("{img1}012021");
    sfword()
        .args(["k-irreducible", "-k", "2", &w])
        .assert()
        .code(0);
    let out = run(&["k-irreducible", "--k", "2", "--json", &w]);
    assert_schema("irreducibility-report", &json_doc(&stdout(&out)));
    sfword()
        .args(["k-irreducible", "-k", "0", "010"])
        .assert()
        .code(2);
}

#[test]
fn enumerate_streams_and_counts() {
    let out = run(&["enumerate", "--length", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let words: Vec<&str> = text.lines().collect();
    assert_eq!(words.len(), 30);
    assert_eq!(words[0], "01020");
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
    assert_reparses(&text);
    sfword()
        .args(["enumerate", "--length", "12", "--count"])
        .assert()
        .success()
        .stdout("264\n");
}

#[test]
fn census_csv_matches_golden() {
    let out = run(&["census", "--from", "3", "--to", "30", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 28);
    let counts: Vec<u64> = rows
        .iter()
        .map(|r| r.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(counts, TABLE1);
    assert_golden("table1.csv", &text);
}

#[test]
fn census_default_is_csv() {
    let a = stdout(&run(&["census", "--from", "3", "--to", "12"]));
    let b = stdout(&run(&["census", "--from", "3", "--to", "12", "--csv"]));
    assert_eq!(a, b);
    assert!(a.starts_with("length,square_free,irreducible_raw,irreducible_canonical\n"));
}

#[test]
fn census_json_and_representatives() {
    let out = run(&[
        "census",
        "--from",
        "8",
        "--to",
        "11",
        "--json",
        "--representatives",
    ]);
    let v = json_doc(&stdout(&out));
    assert_schema("census", &v);
    assert_eq!(v[1]["length"], 9);
    assert_eq!(v[1]["representatives"], serde_json::json!(["010212010"]));
    let plain = run(&["census", "--from", "9", "--to", "9", "--representatives"]);
    assert_eq!(stdout(&plain), "010212010\n");
    let v = json_doc(&stdout(&run(&[
        "census", "--from", "3", "--to", "5", "--json",
    ])));
    assert_schema("census", &v);
    assert!(v[0].get("representatives").is_none());
}

#[test]
fn census_table_output() {
    let out = run(&["census", "--from", "3", "--to", "5", "--table"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text
        .lines()
        .next()
        .unwrap()
        .contains("irreducible_canonical"));
}

#[test]
fn census_rejects_bad_range() {
    sfword()
        .args(["census", "--from", "2", "--to", "5"])
        .assert()
        .code(1);
    sfword()
        .args(["census", "--from", "6", "--to", "5"])
        .assert()
        .code(1);
}

#[test]
fn census_independent_of_threads() {
    let args = [
        "census",
        "--from",
        "3",
        "--to",
        "24",
        "--json",
        "--representatives",
    ];
    let one = stdout(&run(&[&args[..], &["--threads", "1"]].concat()));
    let four = stdout(&run(&[&args[..], &["--threads", "4"]].concat()));
    let env = sfword()
        .args(args)
        .env("SFWORD_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(one, four);
    assert_eq!(one, stdout(&env));
}

#[test]
fn construct_examples() {
    sfword()
        .args(["construct", "--length", "12"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("12"));
    sfword()
        .args(["construct", "--length", "9"])
        .assert()
        .code(0)
        .stdout("010212010\n");
    let out = run(&["construct", "--length", "18", "--json"]);
    let v = json_doc(&stdout(&out));
    assert_schema("construction-trace", &v);
    assert_eq!(v["branch"], "special-prefix");
    assert_eq!(v["result"].as_str().unwrap().len(), 18);
}

#[test]
fn constructed_words_reparse_and_verify() {
    for n in [3, 17, 34, 100, 299] {
        let word = stdout(&run(&["construct", "--length", &n.to_string()]));
        let word = word.trim();
        assert_eq!(parse_word(word).unwrap().len(), n);
        sfword().args(["irreducible", word]).assert().code(0);
    }
}

#[test]
fn morphism_builtin_ops() {
    sfword()
        .args(["morphism", "--builtin", "tau", "apply", "010"])
        .assert()
        .success()
        .stdout("01202012\n");
    sfword()
        .args(["morphism", "--builtin", "tau", "fixpoint", "--length", "14"])
        .assert()
        .success()
        .stdout("01202101210201\n");
    sfword()
        .args(["morphism", "--builtin", "tau", "power", "2"])
        .assert()
        .success()
        .stdout("0 -> 012021\n1 -> 0121\n2 -> 02\n");
    sfword()
        .args(["morphism", "--builtin", "tau", "power", "0"])
        .assert()
        .code(1);
    sfword()
        .args([
            "morphism",
            "--builtin",
            "tau",
            "fixpoint",
            "--seed",
            "1",
            "--length",
            "5",
        ])
        .assert()
        .code(1);
    sfword()
        .args([
            "morphism",
            "--builtin",
            "tau",
            "fixpoint",
            "--seed",
            "x",
            "--length",
            "5",
        ])
        .assert()
        .code(2);
    sfword()
        .args(["morphism", "--builtin", "sigma", "align"])
        .assert()
        .code(2);
    sfword().args(["morphism", "align"]).assert().code(2);
}

#[test]
fn morphism_tests_and_schemas() {
    let out = run(&["morphism", "--builtin", "phi", "crochemore", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_schema("crochemore", &json_doc(&stdout(&out)));

    let out = run(&["morphism", "--builtin", "tau", "crochemore", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_doc(&stdout(&out));
    assert_schema("crochemore", &v);
    assert_eq!(v["witness"]["input"], "010");

    let out = run(&["morphism", "--builtin", "tau", "align", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_schema("alignment", &json_doc(&stdout(&out)));

    let out = run(&["morphism", "--builtin", "phi", "align", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_schema("alignment", &json_doc(&stdout(&out)));

    let out = run(&[
        "morphism",
        "--builtin",
        "alpha3",
        "procedure1",
        "-k",
        "3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_doc(&stdout(&out));
    assert_schema("certificate", &v);
    assert_eq!(v["procedure_pass"], true);

    sfword()
        .args(["morphism", "--builtin", "phi", "procedure1"])
        .assert()
        .code(0)
        .stdout(predicate::str::ends_with("procedure: pass\n"));
    sfword()
        .args(["morphism", "--builtin", "tau", "procedure1"])
        .assert()
        .code(1);
}

#[test]
fn morphism_spec_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# the Thue morphism\n0 -> 012\n\n1 -> 02\n2 -> 1").unwrap();
    let path = file.path().to_str().unwrap();
    sfword()
        .args(["morphism", "--spec", path, "apply", "012"])
        .assert()
        .success()
        .stdout("012021\n");
    sfword()
        .args(["morphism", "apply", "2", "--spec", path])
        .assert()
        .success()
        .stdout("1\n");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "0 -> 012\n1 -> 0x\n2 -> 1").unwrap();
    sfword()
        .args(["morphism", "--spec", bad.path().to_str().unwrap(), "align"])
        .assert()
        .code(1)
        .stderr(predicate::str::contains("line 2"));

    sfword()
        .args(["morphism", "--spec", "/nonexistent/spec.txt", "align"])
        .assert()
        .code(2);
}

#[test]
fn verify_paper_matches_golden() {
    let out = run(&["verify-paper", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let v = json_doc(&text);
    assert_schema("claims", &v);
    assert!(v.as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
    assert_golden("verify-paper.json", &text);
}

#[test]
fn verify_paper_table() {
    let out = run(&["verify-paper", "--depth", "500", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("aggregate: pass\n"));
    assert!(text.lines().any(|l| l.starts_with("table1 ")));
}

#[test]
fn verify_paper_independent_of_threads() {
    let one = stdout(&run(&[
        "verify-paper",
        "--json",
        "--depth",
        "300",
        "--threads",
        "1",
    ]));
    let four = stdout(&run(&[
        "verify-paper",
        "--json",
        "--depth",
        "300",
        "--threads",
        "4",
    ]));
    assert_eq!(one, four);
}
