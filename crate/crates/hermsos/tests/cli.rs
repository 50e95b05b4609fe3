//! The `hermsos` binary: outputs and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hermsos(args: &[&str], stdin: &str) -> Output {
    hermsos_with_env(args, stdin, &[])
}

fn hermsos_with_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hermsos"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn pfister_doc(n: &str, d: &str, norm: bool) -> String {
    let mut args = vec!["pfister", "--n", n, "--d", d];
    if norm {
        args.push("--norm");
    }
    let o = hermsos(&args, "");
    assert_eq!(code(&o), 0);
    stdout(&o)
}

#[test]
fn rank_examples() {
    let o = hermsos(&["rank"], &pfister_doc("1", "3", false));
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "4\n"));
    let o = hermsos(&["rank"], r#"{"nvars":2,"terms":[]}"#);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "0\n"));
    let o = hermsos(&["rank"], &pfister_doc("2", "2", true));
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "3\n"));
    let o = hermsos(&["rank", "--input-format", "text"], "z1^2 zb1^2 + 2 z1 z2 zb1 zb2 + z2^2 zb2^2");
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn rank_reads_files() {
    let path = std::env::temp_dir().join(format!("hermsos-cli-{}.json", std::process::id()));
    std::fs::write(&path, pfister_doc("3", "2", false)).unwrap();
    let o = hermsos(&["rank", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o), "10\n");
    let o = hermsos(&["rank", "/nonexistent/hermsos.json"], "");
    assert_eq!(code(&o), 2);
}

#[test]
fn decompose_examples() {
    let o = hermsos(&["decompose"], &pfister_doc("2", "1", false));
    assert_eq!(code(&o), 0);
    let cert = hermsos::json::parse_cert(stdout(&o).trim(), hermsos::json::Mode::Strict).unwrap();
    assert_eq!(cert.weights.len(), 3);
    assert!(cert.weights.iter().all(|w| w == &num_rational::BigRational::from_integer(1.into())));
    let polys: Vec<String> = cert.polys.iter().map(ToString::to_string).collect();
    assert_eq!(polys, ["1", "z1", "z2"]);
    assert_eq!(cert.reconstruct(), hermsos_core::poly::pfister_base(2, 1));

    let o = hermsos(&["decompose"], "1 - z1 zb1");
    assert_eq!((code(&o), stdout(&o).as_str()), (3, "NOT_PSD\n"));
    let o = hermsos(&["decompose"], "z1 + zb2");
    assert_eq!((code(&o), stdout(&o).as_str()), (3, "NOT_HERMITIAN\n"));
    let o = hermsos(&["decompose", "--format", "text"], "1 + 2 z1 zb1 + z1^2 zb1^2");
    assert_eq!(stdout(&o), "1 |1|^2\n2 |z1|^2\n1 |z1^2|^2\n");
}

#[test]
fn parse_errors_exit_2_with_positions() {
    let o = hermsos(&["rank"], "1 + z1 zq1");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 1, column 9"), "{}", stderr(&o));
    let o = hermsos(&["rank"], "{\"nvars\": 1,\n \"terms\": [}");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2, column 12"), "{}", stderr(&o));
    let dup = r#"{"nvars":1,"terms":[{"alpha":[1],"beta":[1],"re":[1,1],"im":[0,1]},{"alpha":[1],"beta":[1],"re":[1,1],"im":[0,1]}]}"#;
    assert_eq!(code(&hermsos(&["rank"], dup)), 0);
    let o = hermsos(&["rank", "--strict"], dup);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("terms[1]: duplicate monomial"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&hermsos(&["verify", "nope"], "")), 2);
    assert_eq!(code(&hermsos(&["frobnicate"], "")), 2);
    assert_eq!(code(&hermsos(&["rank", "--format", "xml"], "")), 2);
    assert_eq!(code(&hermsos(&["divide"], "1")), 2);
    assert_eq!(code(&hermsos(&["verify", "pfister", "--exhaustive"], "")), 2);
    assert_eq!(code(&hermsos(&["--help"], "")), 0);
}

#[test]
fn math_errors_exit_3() {
    let path = std::env::temp_dir().join(format!("hermsos-zero-{}.txt", std::process::id()));
    std::fs::write(&path, "0").unwrap();
    let o = hermsos(&["divide", "--by", path.to_str().unwrap()], "1");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    assert_eq!(code(&hermsos(&["slices"], "0")), 3);
}

#[test]
fn verify_examples() {
    let o = hermsos(&["verify", "pfister", "--n", "1", "--d", "4", "--trials", "200", "--seed", "7"], "");
    assert_eq!(code(&o), 0);
    let lines: Vec<hermsos::report::ReportLine> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 200);
    assert!(lines.iter().all(|l| l.pass));
    assert!(lines.iter().filter(|l| !l.skipped).all(|l| l.bound == 5 && l.observed >= 5));
    assert!(stderr(&o).contains("200 trials, 0 violations: PASS"));

    let o = hermsos(&["verify", "lprime", "--max", "9", "--format", "table"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("45 trials, 0 violations: PASS"));

    let o = hermsos(&["verify", "prop21", "--n", "1", "--trials", "100"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.contains(r#""bound":1"#) || l.contains(r#""skipped":true"#)));
}

#[test]
fn verify_reports_are_byte_identical_across_threads() {
    let args = ["verify", "slices", "--n", "3", "--d", "2", "--trials", "60", "--seed", "99"];
    let one = hermsos_with_env(&args, "", &[("HERMSOS_THREADS", "1")]);
    let again = hermsos_with_env(&args, "", &[("HERMSOS_THREADS", "1")]);
    let four = hermsos_with_env(&args, "", &[("HERMSOS_THREADS", "4")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("hermsos-report-{}.jsonl", std::process::id()));
    let o = hermsos(&["verify", "huang", "--n", "2", "--d", "1", "--trials", "20", "--exhaustive", "--out", path.to_str().unwrap()], "");
    let report = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(report.lines().count(), 21);
    assert!(report.lines().last().unwrap().contains("witnesses=0"));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn other_commands() {
    let o = hermsos(&["slices"], "1 + z1 zb2");
    assert_eq!(stdout(&o), "(0, 0): 1\n(1, -1): 1\nextremal bound: 1\n");
    let o = hermsos(&["matrix"], "1 + z1 zb1");
    assert_eq!(stdout(&o), "    1  zb1\n 1  1    0\nz1  0    1\nrank: 2\n");
    let o = hermsos(&["divide", "--pfister", "1", "--format", "text"], &pfister_doc("1", "3", false));
    assert_eq!(stdout(&o), "quotient: nvars=1; 1 + 2 z1 zb1 + z1^2 zb1^2\nremainder: nvars=1; 0\n");
    let o = hermsos(&["divide", "--norm", "1"], "z1 zb1 + 1");
    assert!(stdout(&o).ends_with("\"divisible\":false}\n"), "{}", stdout(&o));
    let o = hermsos(&["convert", "--format", "text"], &pfister_doc("2", "1", false));
    assert_eq!(stdout(&o), "nvars=2; 1 + z2 zb2 + z1 zb1\n");
    let o = hermsos(&["convert"], "nvars=2; 1 + z2 zb2 + z1 zb1");
    assert_eq!(stdout(&o), pfister_doc("2", "1", false));
}
