use std::path::{Path, PathBuf};
use std::process::Command;

use effdom::Status;
use effdom_cli::report::{to_line, Item, RunReport, WeightCheck};
use effdom_cli::{run, Outcome};
use proptest::prelude::*;
use tempfile::TempDir;

const P4: &str = "p graph 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const C4: &str = "p graph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn effdom(args: &[&str]) -> Outcome {
    run(std::iter::once("effdom").chain(args.iter().copied()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_report(out: &Outcome) -> RunReport {
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn solve_ed_on_a_path() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4", P4);
    let out = effdom(&["solve", "ed", "--json", s(&p4)]);
    assert_eq!(out.code, 0, "{out:?}");
    let r = json_report(&out);
    assert_eq!(r.status, Status::Solution);
    assert_eq!(r.certificate, Some(vec![Item::Index(1), Item::Index(4)]));
    assert_eq!(r.weight_check, Some(WeightCheck { sum: 4, target: 4 }));
    assert_eq!(r.problem, "ed");
}

#[test]
fn forced_dc_on_a_cycle_is_inapplicable() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4", C4);
    let out = effdom(&["solve", "ed", "--method", "dc", s(&c4)]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("not dually chordal"));
    let out = effdom(&["solve", "ed", s(&c4)]);
    assert_eq!(out.code, 1);
}

#[test]
fn exact_cover_example() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h", "p hypergraph 3 2\nh 1 2\nh 3\n");
    let out = effdom(&["solve", "xc", "--json", s(&h)]);
    assert_eq!(out.code, 0);
    let r = json_report(&out);
    assert_eq!(r.certificate, Some(vec![Item::Index(1), Item::Index(2)]));
    assert_eq!(r.weight_check, Some(WeightCheck { sum: 3, target: 3 }));
    // Forced square-based methods never fall back.
    assert_eq!(effdom(&["solve", "xc", "--method", "dc", s(&h)]).code, 3);
    // Exact cover needs a hypergraph.
    let p4 = write(&dir, "p4", P4);
    assert_eq!(effdom(&["solve", "xc", s(&p4)]).code, 2);
}

#[test]
fn recognize_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4", C4);
    let out = effdom(&["recognize", "--class", "chordal", s(&c4)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("chordless cycle"));

    let h = write(&dir, "h", "p hypergraph 3 2\nh 1 2\nh 2 3\n");
    assert_eq!(
        effdom(&["recognize", "--class", "hypertree", s(&h)]).code,
        0
    );

    let truncated = write(&dir, "t", "p graph 4 3\ne 1 2\n");
    let out = effdom(&["recognize", "--class", "dually-chordal", s(&truncated)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("declared 3 edges"));

    let bad_line = write(&dir, "b", "p graph 3 2\ne 1 2\ne 2 9\n");
    let out = effdom(&["recognize", "--class", "chordal", s(&bad_line)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains(":3:"), "{}", out.stderr);

    assert_eq!(effdom(&["recognize", "--class", "chordal", s(&h)]).code, 2);
    for class in ["helly", "conformal", "alpha-acyclic", "hypertree"] {
        assert_eq!(
            effdom(&["recognize", "--class", class, s(&h)]).code,
            0,
            "{class}"
        );
    }
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4", P4);
    let cert = write(&dir, "cert", "1 4\n");
    assert_eq!(
        effdom(&["verify", "ed", "--certificate", s(&cert), s(&p4)]).code,
        0
    );
    let cert = write(&dir, "cert", "2\n");
    assert_eq!(
        effdom(&["verify", "ed", "--certificate", s(&cert), s(&p4)]).code,
        1
    );

    let h = write(&dir, "h", "p hypergraph 3 2\nh 1 2\nh 2 3\n");
    let overlapping = write(&dir, "xc", "1 2\n");
    assert_eq!(
        effdom(&["verify", "xc", "--certificate", s(&overlapping), s(&h)]).code,
        1
    );

    let eed = write(&dir, "eed", "2-3\n");
    assert_eq!(
        effdom(&["verify", "eed", "--certificate", s(&eed), s(&p4)]).code,
        0
    );
    let not_edge = write(&dir, "ne", "1-3\n");
    assert_eq!(
        effdom(&["verify", "eed", "--certificate", s(&not_edge), s(&p4)]).code,
        2
    );
    let garbage = write(&dir, "g", "x\n");
    assert_eq!(
        effdom(&["verify", "ed", "--certificate", s(&garbage), s(&p4)]).code,
        2
    );
}

#[test]
fn generate_examples() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("ht");
    let out = effdom(&[
        "generate",
        "hypertree",
        "--n",
        "5",
        "--m",
        "3",
        "--seed",
        "42",
        "-o",
        s(&out_path),
    ]);
    assert_eq!(out.code, 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text, "p hypergraph 5 3\nh 5\nh 4\nh 1 2\n");
    assert_eq!(
        effdom(&["recognize", "--class", "hypertree", s(&out_path)]).code,
        0
    );

    let out = effdom(&["generate", "chordal", "--n", "1", "--seed", "7"]);
    assert_eq!(out.stdout, "p graph 1 0\n");
    assert_eq!(
        effdom(&["generate", "bogus", "--n", "3", "--seed", "1"]).code,
        2
    );
    assert_eq!(
        effdom(&["generate", "hypertree", "--n", "0", "--seed", "1"]).code,
        2
    );
}

#[test]
fn duplicate_edges_are_reported_as_warnings() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "p graph 2 2\ne 1 2\ne 1 2\n");
    let r = json_report(&effdom(&["solve", "ed", "--json", s(&g)]));
    assert_eq!(r.warnings.len(), 1);
}

/// Every polynomial cell: generate, solve through the CLI, write the
/// certificate, verify it through the CLI.
#[test]
fn generate_solve_verify_round_trip() {
    let cells: &[(&str, &[&str])] = &[
        ("chordal", &["eed", "mim"]),
        ("dually-chordal", &["ed", "eed"]),
        ("alpha-acyclic", &["eed", "mim"]),
        ("hypertree", &["ed", "xc"]),
    ];
    let dir = TempDir::new().unwrap();
    let mut solved = 0;
    for (class, problems) in cells {
        for seed in 0..15u64 {
            let inst = dir.path().join(format!("{class}-{seed}"));
            let n = (3 + seed * 2).to_string();
            let seed_s = seed.to_string();
            let out = effdom(&[
                "generate",
                class,
                "--n",
                &n,
                "--m",
                &n,
                "--seed",
                &seed_s,
                "-o",
                s(&inst),
            ]);
            assert_eq!(out.code, 0, "{out:?}");
            for problem in *problems {
                let cert = dir.path().join("cert");
                let _ = std::fs::remove_file(&cert);
                let out = effdom(&[
                    "solve",
                    problem,
                    "--json",
                    "--write-certificate",
                    s(&cert),
                    s(&inst),
                ]);
                let r = json_report(&out);
                assert_ne!(r.method, "brute", "{class}/{problem}");
                assert_ne!(r.status, Status::ResourceLimited);
                assert_eq!(r.certificate.is_some(), r.status == Status::Solution);
                if let Some(c) = &r.certificate {
                    assert_eq!(
                        std::fs::read_to_string(&cert).unwrap().trim_end(),
                        to_line(c)
                    );
                    let v = effdom(&["verify", problem, "--certificate", s(&cert), s(&inst)]);
                    assert_eq!(v.code, 0, "{class}/{problem} seed {seed}: {v:?}");
                    solved += 1;
                }
            }
        }
    }
    assert!(solved > 20, "only {solved} solvable instances");
}

#[test]
fn directory_batch_with_jobs() {
    let dir = TempDir::new().unwrap();
    write(&dir, "a", P4);
    write(&dir, "b", C4);
    write(&dir, "c", "p graph 2 1\n");
    let out = effdom(&["solve", "ed", "--json", "--jobs", "3", s(dir.path())]);
    assert_eq!(out.code, 2);
    let entries: Vec<serde_json::Value> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0]["status"], "solution");
    assert_eq!(entries[1]["status"], "infeasible");
    assert_eq!(entries[2]["exit_code"], 2);
    assert!(entries[0]["file"].as_str().unwrap().ends_with('a'));
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4", P4);
    let c4 = write(&dir, "c4", C4);
    let bin = env!("CARGO_BIN_EXE_effdom");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["solve", "ed", s(&p4)]), Some(0));
    assert_eq!(code(&["solve", "eed", s(&p4)]), Some(0));
    assert_eq!(code(&["solve", "ed", s(&c4)]), Some(1));
    assert_eq!(code(&["solve", "ed", "--method", "dc", s(&c4)]), Some(3));
    assert_eq!(code(&["solve", "ed", "missing-file"]), Some(2));
    assert_eq!(code(&["solve", "ed", "--method", "fast", s(&p4)]), Some(2));
    let out = Command::new(bin)
        .args(["solve", "ed", s(&p4)])
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("certificate (2): 1 4"));
}

fn item() -> impl Strategy<Value = Item> {
    prop_oneof![
        (1usize..1000).prop_map(Item::Index),
        (1usize..1000, 1usize..1000).prop_map(|(u, v)| Item::Edge([u, v])),
    ]
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Solution),
        Just(Status::Infeasible),
        Just(Status::ResourceLimited)
    ]
}

proptest! {
    #[test]
    fn reports_round_trip_through_json(
        status in status(),
        items in proptest::collection::vec(item(), 0..6),
        check in proptest::option::of((0u64..100, 0u64..100)),
        time in 0.0f64..1e6,
        warnings in proptest::collection::vec("[a-z ]{0,12}", 0..3),
    ) {
        let r = RunReport {
            problem: "eed".into(),
            status,
            certificate: (status == Status::Solution).then_some(items),
            method: "dc".into(),
            weight_check: check.map(|(sum, target)| WeightCheck { sum, target }),
            time_ms: time,
            warnings,
        };
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<RunReport>(&json).unwrap(), r);
    }
}
