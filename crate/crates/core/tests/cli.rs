use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ufgdepth::cli::{EXIT_INVALID, EXIT_IO, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_TIE, EXIT_TOO_LARGE, EXIT_USAGE};

fn worked_csv() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/worked_suite.csv")
}

fn ufgdepth<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_ufgdepth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const TIED: &str = "test_function,optimizer,criterion,direction,value\n\
                    f,a,loss,min,1\nf,b,loss,min,1\n";

#[test]
fn ufg_prints_sets_weights_and_normalizer() {
    let o = ufgdepth(["ufg".as_ref(), "--input".as_ref(), worked_csv().as_os_str(), "--ties".as_ref(), "error".as_ref()]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = stdout(&o);
    assert!(text.contains("{0,1}\t1/9\t0.11111111111111111"), "{text}");
    assert!(text.contains("{1,2}\t1/9"));
    assert!(text.contains("sets 3\tc_n 3\t3"));
}

#[test]
fn depth_of_query_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    // SGD < MOM and SGD < ADAM
    let query = write(dir.path(), "q.txt", "# star\nSGD<MOM\nSGD < ADAM\n");
    let o = ufgdepth([
        "depth".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--ties".as_ref(),
        "error".as_ref(),
        "--query".as_ref(),
        query.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&o), "2/3\t0.66666666666666667\n");

    let cyclic = write(dir.path(), "c.txt", "SGD<MOM\nMOM<SGD\n");
    let o = ufgdepth([
        "depth".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--ties".as_ref(),
        "error".as_ref(),
        "--query".as_ref(),
        cyclic.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_INVALID));

    let garbled = write(dir.path(), "g.txt", "SGD MOM\n");
    let o = ufgdepth([
        "depth".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--ties".as_ref(),
        "error".as_ref(),
        "--query".as_ref(),
        garbled.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
}

#[test]
fn hasse_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t3.dot");
    let o = ufgdepth([
        "hasse".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--function".as_ref(),
        "t3".as_ref(),
        "--out".as_ref(),
        out.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let dot = std::fs::read_to_string(&out).unwrap();
    assert!(dot.contains("rankdir=BT"));
    assert!(dot.contains("\"SGD\" -> \"ADAM\""), "{dot}");
    assert!(dot.contains("\"MOM\" -> \"SGD\""));
    assert!(!dot.contains("\"MOM\" -> \"ADAM\""), "transitive edge drawn");

    let o = ufgdepth([
        "hasse".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--function".as_ref(),
        "nope".as_ref(),
        "--out".as_ref(),
        out.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_INVALID));
}

#[test]
fn analyze_writes_report_and_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let hasse = dir.path().join("hasse");
    let o = ufgdepth([
        "analyze".as_ref(),
        "--input".as_ref(),
        worked_csv().as_os_str(),
        "--ties".as_ref(),
        "error".as_ref(),
        "--out-report".as_ref(),
        report.as_os_str(),
        "--out-hasse-dir".as_ref(),
        hasse.as_os_str(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(json["family_size"], 3);
    assert_eq!(json["normalizer"]["exact"], "3");
    let depths: Vec<&str> = json["posets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["depth"]["exact"].as_str().unwrap())
        .collect();
    assert_eq!(depths, ["2/3", "1", "2/3"]);
    assert_eq!(json["functions"][0]["function"], "t2");
    assert_eq!(json["functions"][0]["rank"], 1);
    assert_eq!(json["deepest_posets"], serde_json::json!([1]));
    assert_eq!(std::fs::read_dir(&hasse).unwrap().count(), 3);
}

#[test]
fn tie_exit_code_and_drop() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tied.csv", TIED);
    let out = dir.path().join("r.json");
    let base = |ties: &str| {
        ufgdepth([
            "analyze".as_ref(),
            "--input".as_ref(),
            input.as_os_str(),
            "--ties".as_ref(),
            ties.as_ref(),
            "--out-report".as_ref(),
            out.as_os_str(),
        ])
    };
    assert_eq!(base("error").status.code(), Some(EXIT_TIE));
    // the only function is dropped, leaving nothing to analyze
    assert_eq!(base("drop").status.code(), Some(EXIT_INVALID));
    assert!(!out.exists());
}

#[test]
fn parse_io_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.csv", "function,opt\nx,y\n");
    let o = ufgdepth(["ufg".as_ref(), "--input".as_ref(), bad.as_os_str(), "--ties".as_ref(), "drop".as_ref()]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));

    let missing = dir.path().join("missing.csv");
    let o = ufgdepth(["ufg".as_ref(), "--input".as_ref(), missing.as_os_str(), "--ties".as_ref(), "drop".as_ref()]);
    assert_eq!(o.status.code(), Some(EXIT_IO));

    assert_eq!(ufgdepth(["ufg"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(ufgdepth(["frobnicate"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(ufgdepth(["--help"]).status.code(), Some(EXIT_OK));
}

#[test]
fn oracle_check_agrees_and_enforces_caps() {
    let o = ufgdepth(["oracle-check".as_ref(), "--input".as_ref(), worked_csv().as_os_str()]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_ne!(o.status.code(), Some(EXIT_MISMATCH));
    let text = stdout(&o);
    assert!(text.contains("ok   ufg sets (3)"));
    assert!(text.contains("ok   depth over all 19 posets"));

    let dir = tempfile::tempdir().unwrap();
    let mut csv = String::from("test_function,optimizer,criterion,direction,value\n");
    for opt in 0..5 {
        csv.push_str(&format!("f,o{opt},loss,min,{opt}\n"));
    }
    let wide = write(dir.path(), "wide.csv", &csv);
    let o = ufgdepth(["oracle-check".as_ref(), "--input".as_ref(), wide.as_os_str()]);
    assert_eq!(o.status.code(), Some(EXIT_TOO_LARGE));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["ufgdepth".into(), "ufg".into(), "--input".into(), worked_csv().into_os_string(), "--ties".into(), "error".into()];
    let code = ufgdepth::cli::run(args.clone(), &mut out, &mut err);
    assert_eq!(code, EXIT_OK);
    let o = ufgdepth(&args[1..]);
    assert_eq!(out, o.stdout);
}
