//! End-to-end tests against the compiled binary: exit codes, output
//! formats, and the file formats of the export subcommand.

use std::process::{Command, Output};

use unitgraph_core::report::{CheckStatus, ReportRecord};

fn ugc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ugc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn analyze_json_reports_and_exits_zero() {
    let out = ugc(&["analyze", "--n", "15", "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let rec = ReportRecord::from_json_line(stdout(&out).trim()).unwrap();
    assert_eq!((rec.n, rec.q), (15, 2));
    assert!(rec.elapsed_ms.is_some());
    assert!(rec.failed_checks().is_empty());
    assert_eq!(rec.checks.len(), 14);
}

#[test]
fn analyze_honors_explicit_field() {
    let out = ugc(&["analyze", "--n", "8", "--q", "3", "--format", "json"]);
    assert!(out.status.success());
    let rec = ReportRecord::from_json_line(stdout(&out).trim()).unwrap();
    assert_eq!(rec.q, 3);
    let check = rec.checks.iter().find(|c| c.name == "code_distance").unwrap();
    assert_eq!(check.status, CheckStatus::Pass);
    assert_eq!(check.detail, "computed 4, predicted 4");
}

#[test]
fn analyze_text_format_is_human_readable() {
    let out = ugc(&["analyze", "--n", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("G(Z_9) over F_2  shape ODD_PRIME_POWER"));
    assert!(text.contains("PASS"));
    assert!(text.contains("code            [24, 8, 5]"));
    assert!(text.contains("elapsed:"));
}

#[test]
fn analyze_csv_has_one_row_per_check() {
    let out = ugc(&["analyze", "--n", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "n,q,shape,check,status,detail");
    assert_eq!(lines.len(), 1 + 14);
    assert!(lines[1].starts_with("12,3,TWO_WITH_EVEN,connected,PASS,"));
    // Details containing commas stay quoted.
    assert!(lines[2].contains("\"computed 24, predicted 24\""));
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", "--n", "1"],
        vec!["analyze", "--n", "0"],
        vec!["analyze", "--n", "10", "--q", "4"],
        vec!["analyze"],
        vec!["sweep", "--from", "1", "--to", "5"],
        vec!["nonsense"],
    ];
    for args in cases {
        let out = ugc(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
    }
    let out = ugc(&["analyze", "--n", "1"]);
    assert!(stderr(&out).contains("n must be ≥ 2"));
}

#[test]
fn sweep_writes_ordered_json_lines_and_summary() {
    let dir = std::env::temp_dir().join("ugc-cli-test-sweep");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("records.jsonl");
    let path_str = path.to_str().unwrap();
    let out = ugc(&[
        "sweep", "--from", "2", "--to", "12", "--jobs", "3", "--out", path_str,
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("11 records, 0 failed"));
    let body = std::fs::read_to_string(&path).unwrap();
    let ns: Vec<u64> = body
        .lines()
        .map(|l| ReportRecord::from_json_line(l).unwrap())
        .inspect(|rec| assert_eq!(rec.elapsed_ms, None))
        .map(|rec| rec.n)
        .collect();
    assert_eq!(ns, (2..=12).collect::<Vec<u64>>());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn sweep_defaults_to_stdout() {
    let out = ugc(&["sweep", "--from", "2", "--to", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim().lines().count(), 5);
}

#[test]
fn export_graph_lists_edges() {
    let out = ugc(&["export", "graph", "--n", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n 8 16"));
    // K_{4,4}: evens adjacent to odds.
    assert_eq!(lines.next(), Some("0 1"));
    assert_eq!(text.trim().lines().count(), 17);
}

#[test]
fn export_matrices_use_the_header_format() {
    let out = ugc(&["export", "incidence", "--n", "4", "--q", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("q 3 rows 4 cols 4\n"));

    let out = ugc(&["export", "generator", "--n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("q 3 rows 3 cols 4\n"));

    let out = ugc(&["export", "paritycheck", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text, "q 3 rows 1 cols 4\n1 2 2 1\n");
}

#[test]
fn export_respects_the_size_guard() {
    let out = ugc(&["export", "incidence", "--n", "101", "--max-cells", "100"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("export too large"));

    let out = ugc(&["export", "paritycheck", "--n", "101", "--max-cells", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_writes_files() {
    let dir = std::env::temp_dir().join("ugc-cli-test-export");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.txt");
    let path_str = path.to_str().unwrap();
    let out = ugc(&["export", "graph", "--n", "5", "--out", path_str]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("n 5 8\n"));
    std::fs::remove_file(&path).unwrap();
}
