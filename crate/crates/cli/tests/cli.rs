use std::path::Path;
use std::process::Command;

use proptest::prelude::*;
use terracini::commands::{check_report, family_descriptor, scan_csv, scan_rows, Mode};
use terracini::formats::{parse_point_set, write_point_set, PointSet};
use terracini::report::RunReport;
use terracini_core::{ProjPoint, Scalar};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_terracini"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const ALIGNED: &str = r#"{"schema_version":1,"n":2,"points":[{"coords":["1","0","0"]},{"coords":["1","1","0"]},{"coords":["1","2","0"]}]}"#;

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "aligned.json", ALIGNED);
    let (code, out, _) = run(&["check", &f, "-d", "3"]);
    assert_eq!(code, 10);
    assert!(out.contains("defect 2"), "{out}");

    let (code, out, _) = run(&["check", "--family", "ci-cubics", "-r", "9", "--seed", "4", "-d", "6"]);
    assert_eq!(code, 10);
    assert!(out.contains("h0(I_2S(6)) = 3"), "{out}");

    let (code, out, _) = run(&["check", "--family", "general", "-r", "6", "--seed", "1", "-d", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("evidence meta(2)"), "{out}");
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["check", "-d", "3"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["check", "--family", "general", "-r", "3", "-d", "3"]).0, 64);
    assert_eq!(run(&["check", "--family", "7-on-ellipse", "-r", "7", "--seed", "1", "-d", "3"]).0, 64);
    assert_eq!(run(&["check", "/nonexistent/file.json", "-d", "3"]).0, 66);
    let bad = write(dir.path(), "bad.json", "{\n \"schema_version\": 1,\n \"n\": 2,\n \"points\": [\n  {\"coords\": [\"1\", \"x\", \"0\"]}\n ]\n}\n");
    let (code, _, err) = run(&["check", &bad, "-d", "3"]);
    assert_eq!(code, 65);
    assert!(err.contains("line 5"), "{err}");
    assert_eq!(run(&["strata", "-d", "9"]).0, 65);
    assert_eq!(run(&["strata", "-n", "3", "-d", "5"]).0, 65);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn json_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "aligned.json", ALIGNED);
    let out = dir.path().join("report.json");
    let (code, stdout, _) = run(&["check", &f, "-d", "5", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let on_disk = std::fs::read_to_string(&out).unwrap();
    assert_eq!(on_disk, stdout);
    let report = RunReport::from_json(&on_disk).unwrap();
    assert_eq!(report.schema_version, 1);
    assert_eq!(RunReport::from_json(&report.to_json()).unwrap(), report);
    assert_eq!(report.input.points[1], vec!["1", "1", "0"]);
}

#[test]
fn modular_mode_is_labeled() {
    let (code, out, _) = run(&["check", "--family", "6-on-conic", "-r", "7", "--seed", "2", "-d", "5", "--mode", "modular", "--primes", "1", "--format", "json"]);
    assert_eq!(code, 10);
    let report = RunReport::from_json(&out).unwrap();
    let json = report.to_json();
    assert!(json.contains("\"unverified\""), "{json}");
    let (_, out, _) = run(&["check", "--family", "6-on-conic", "-r", "7", "--seed", "2", "-d", "5", "--mode", "modular", "--format", "json"]);
    assert!(out.contains("\"confirmed\""), "{out}");
}

#[test]
fn dagger_table() {
    let (code, out, _) = run(&["dagger", "--family", "general", "-r", "4", "--seed", "1", "-d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with("\tyes")).count(), 4);
    assert!(out.contains("dagger: holds"));
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let (c1, one, _) = run(&["scan", "-d", "5", "-r", "7", "--family", "6-on-conic", "--count", "30", "--seed", "9", "--jobs", "1"]);
    let (c3, three, _) = run(&["scan", "-d", "5", "-r", "7", "--family", "6-on-conic", "--count", "30", "--seed", "9", "--jobs", "3"]);
    assert_eq!((c1, c3), (0, 0));
    assert_eq!(one, three);
    assert!(one.contains("# members=30/30"), "{one}");
    let (_, general, _) = run(&["scan", "-d", "5", "-r", "7", "--count", "30", "--seed", "9"]);
    assert!(general.contains("# members=0/30"), "{general}");
    let (_, ah, _) = run(&["scan", "-d", "4", "-r", "5", "--count", "30", "--seed", "9", "--jobs", "2"]);
    assert!(ah.contains("# members=30/30"), "{ah}");
}

#[test]
fn scan_rows_library() {
    let desc = family_descriptor("4-aligned+general", 2, 5).unwrap();
    let rows = scan_rows(&desc, 5, 10, 1, 1000, 2).unwrap();
    assert!(rows.iter().all(|r| r.member && r.defect > 0));
    let csv = scan_csv(&desc, 5, 1, &rows);
    assert!(csv.starts_with("sample,seed,member,defect,h0,evidence\n"));
}

#[test]
fn strata_tables() {
    let (code, out, _) = run(&["strata", "-d", "5"]);
    assert_eq!(code, 0);
    let codims: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(codims, ["empty", "2", "2", "1", "1"]);
    let (_, six, _) = run(&["strata", "-d", "6", "--format", "csv"]);
    assert!(six.contains("9,ci-cubics,16,2,true"), "{six}");
    let (_, three, _) = run(&["strata", "-d", "3", "--format", "json"]);
    assert!(three.contains("\"3-on-line\""), "{three}");
}

#[test]
fn generate_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pts.json");
    let (code, _, _) = run(&["generate", "--family", "6-on-conic+general", "-r", "7", "--seed", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let set = parse_point_set(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(set.points.len(), 7);
    assert_eq!(run(&["check", out.to_str().unwrap(), "-d", "5"]).0, 10);
}

#[test]
fn segre_command() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["segre", "--family", "all", "--seed", "2"]);
    assert_eq!(code, 10);
    assert!(out.contains("drop 4"), "{out}");
    assert_eq!(run(&["segre", "--family", "random", "--seed", "2"]).0, 0);
    let emitted = dir.path().join("s.json");
    assert_eq!(run(&["segre", "--family", "random", "--shape", "1,1,1", "-r", "2", "--seed", "2", "--emit", emitted.to_str().unwrap()]).0, 0);
    let (code, out, _) = run(&["segre", emitted.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let report = RunReport::from_json(&out).unwrap();
    assert_eq!(report.segre.unwrap().rank, 8);
}

#[test]
fn exact_report_from_library() {
    let set = parse_point_set(ALIGNED).unwrap();
    let r = check_report(&set, "inline".into(), 3, Mode::Exact, 2, None).unwrap();
    let sys = r.system.unwrap();
    assert_eq!((sys.h0, sys.defect), (3, 2));
    assert!(r.verdict.unwrap().member);
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-10_000_000_000i64..10_000_000_000, 1i64..1_000_000_000)
        .prop_map(|(p, q)| Scalar::new(p.into(), q.into()))
}

proptest! {
    #[test]
    fn point_files_round_trip(raw in prop::collection::vec(prop::collection::vec(rational(), 4), 1..8)) {
        let mut points: Vec<ProjPoint> = raw.into_iter().filter_map(|c| ProjPoint::new(c).ok()).collect();
        points.sort();
        points.dedup();
        prop_assume!(!points.is_empty());
        let set = PointSet::reduced(3, points);
        let text = write_point_set(&set);
        prop_assert_eq!(parse_point_set(&text).unwrap(), set);
    }

    #[test]
    fn reports_round_trip(raw in prop::collection::vec(prop::collection::vec(rational(), 3), 1..5), d in 1u32..5) {
        let mut points: Vec<ProjPoint> = raw.into_iter().filter_map(|c| ProjPoint::new(c).ok()).collect();
        points.sort();
        points.dedup();
        prop_assume!(!points.is_empty());
        let set = PointSet::reduced(2, points);
        let report = check_report(&set, "prop".into(), d, Mode::Exact, 2, Some(1)).unwrap();
        prop_assert_eq!(RunReport::from_json(&report.to_json()).unwrap(), report);
    }
}
