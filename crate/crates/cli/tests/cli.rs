//! End-to-end tests of the `overcrank` binary: exact output bytes, exit
//! codes, and determinism across repeated runs and thread counts.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overcrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("no signal")
}

#[test]
fn counts_crank1_of_three() {
    assert_eq!(
        stdout(&["counts", "--n", "3", "--stat", "crank1", "--format", "json"]),
        "{\"-3\":1,\"-2\":1,\"-1\":1,\"0\":2,\"1\":1,\"2\":1,\"3\":1}\n"
    );
}

#[test]
fn counts_defaults_to_json() {
    assert_eq!(stdout(&["counts", "--n", "0", "--stat", "crank1"]), "{\"0\":1}\n");
}

#[test]
fn counts_m2crank_of_four() {
    assert_eq!(
        stdout(&["counts", "--n", "4", "--stat", "m2crank"]),
        "{\"-2\":1,\"0\":1,\"2\":1}\n"
    );
}

#[test]
fn counts_tsv_format() {
    assert_eq!(
        stdout(&["counts", "--n", "4", "--stat", "m2crank", "--format", "tsv"]),
        "-2\t1\n0\t1\n2\t1\n"
    );
}

#[test]
fn counts_rejects_unknown_statistic() {
    let out = run(&["counts", "--n", "3", "--stat", "blorp"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn counts_requires_arguments() {
    assert_eq!(exit_code(&["counts"]), 2);
}

#[test]
fn table_one_matches_the_worked_example() {
    let expected = "\
overpartition\tpi1\tlambda(pi1)\tpi2\tcrank(pi2)\tcrank1
3\t∅\t\t3\t3\t3
3~\t3\t1\t∅\t\t1
2+1\t∅\t\t2+1\t0\t0
2~+1\t2\t\t1\t-1\t-1
2+1~\t1\t\t2\t2\t2
2~+1~\t2+1\t0\t∅\t\t0
1+1+1\t∅\t\t1+1+1\t-3\t-3
1~+1+1\t1\t\t1+1\t-2\t-2
";
    assert_eq!(stdout(&["table", "--paper", "1"]), expected);
}

#[test]
fn table_two_excludes_the_adjusted_row_and_footnotes_it() {
    let expected = "\
overpartition\tcrank(pi2)
3\t3
3~\t0
2+1\t0
2+1~\t2
2~+1~\t0
1+1+1\t-3
1~+1+1\t-2
# adjustment: 2~+1 contributes -1 to m=0 and +1 to m=-1 and m=+1
";
    assert_eq!(stdout(&["table", "--paper", "2"]), expected);
}

#[test]
fn table_three_matches_the_worked_example() {
    let expected = "\
overpartition\tpi1\tkappa(pi1)\tpi2\tcrank(pi2/2)\tcrank2
4\t∅\t\t4\t2\t2
4~\t4\t1\t∅\t\t1
3+1\t∅\t\t∅\t\t0
3~+1\t3\t1\t∅\t\t1
3+1~\t1\t0\t∅\t\t0
3~+1~\t3+1\t0\t∅\t\t0
2+2\t∅\t\t2+2\t-2\t-2
2~+2\t2\t1\t2\t-1\t-1
2+1+1\t∅\t\t2\t-1\t-1
2~+1+1\t2\t1\t∅\t\t1
2+1~+1\t1\t0\t2\t-1\t-1
2~+1~+1\t2+1\t0\t∅\t\t0
1+1+1+1\t∅\t\t∅\t\t0
1~+1+1+1\t1\t0\t∅\t\t0
";
    assert_eq!(stdout(&["table", "--paper", "3"]), expected);
}

#[test]
fn table_rejects_out_of_range_numbers() {
    assert_eq!(exit_code(&["table", "--paper", "4"]), 2);
}

#[test]
fn series_c_text() {
    assert_eq!(
        stdout(&["series", "--name", "C", "--order", "1"]),
        "q^0\t[(0,1)]\nq^1\t[(-1,1),(0,-1),(1,1)]\n"
    );
}

#[test]
fn series_c_json() {
    assert_eq!(
        stdout(&["series", "--name", "C", "--order", "1", "--format", "json"]),
        "{\"name\":\"C\",\"order\":1,\"coefficients\":[[[0,1]],[[-1,1],[0,-1],[1,1]]]}\n"
    );
}

#[test]
fn series_psi_starts_at_zero() {
    assert_eq!(stdout(&["series", "--name", "psi", "--order", "0"]), "q^0\t[]\n");
}

#[test]
fn series_cbar2_q4_coefficient() {
    let out = stdout(&["series", "--name", "Cbar2", "--order", "4"]);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "q^4\t[(-2,1),(-1,3),(0,6),(1,3),(2,1)]");
}

#[test]
fn series_rejects_unknown_name() {
    assert_eq!(exit_code(&["series", "--name", "zeta", "--order", "3"]), 2);
}

#[test]
fn verify_one_identity() {
    assert_eq!(
        stdout(&["verify", "--id", "thm-M1", "--order", "8"]),
        "{\"id\":\"thm-M1\",\"order\":8,\"holds\":true,\"first_mismatch\":null}\n"
    );
}

#[test]
fn verify_all_reports_in_registry_order() {
    let out = stdout(&["verify", "--all", "--order", "2"]);
    let ids: Vec<String> = out
        .lines()
        .map(|line| {
            let v: serde_json::Value = serde_json::from_str(line).expect("JSON line");
            assert_eq!(v["holds"], serde_json::Value::Bool(true), "{line}");
            assert_eq!(v["order"], serde_json::json!(2));
            assert!(v["first_mismatch"].is_null());
            v["id"].as_str().unwrap().to_owned()
        })
        .collect();
    assert_eq!(
        ids,
        [
            "thm-M1",
            "thm-M2",
            "thm-M2crank",
            "blo-equivalence",
            "fifth-order-chi0",
            "tenth-phi",
            "tenth-psi",
            "crankdiff-3phi",
            "crankdiff-3psi",
            "m2rank-X",
            "m2rank-chi",
            "m2-combo-X",
            "m2-combo-chi",
        ]
    );
}

#[test]
fn verify_parallel_output_is_identical() {
    let serial = stdout(&["verify", "--all", "--order", "3", "--jobs", "1"]);
    let parallel = stdout(&["verify", "--all", "--order", "3", "--jobs", "4"]);
    assert_eq!(serial, parallel);
}

#[test]
fn verify_unknown_id_is_a_usage_error() {
    let out = run(&["verify", "--id", "thm-M99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("thm-M99"));
}

#[test]
fn verify_rejects_zero_jobs() {
    assert_eq!(exit_code(&["verify", "--all", "--order", "2", "--jobs", "0"]), 2);
}

#[test]
fn verify_needs_id_or_all_but_not_both() {
    assert_eq!(exit_code(&["verify"]), 2);
    assert_eq!(exit_code(&["verify", "--id", "thm-M1", "--all"]), 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["counts", "--n", "7", "--stat", "rank_over"][..],
        &["series", "--name", "N2", "--order", "6", "--format", "json"][..],
        &["verify", "--id", "tenth-phi", "--order", "4"][..],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}
