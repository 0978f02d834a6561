use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_partdeg"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

#[test]
fn prehom_reports_dense_orbit() {
    let o = run(&["prehom", "2", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "prehomogeneous: true\n");
    let o = run(&["prehom", "2", "3", "3"]);
    assert_eq!(stdout(&o), "prehomogeneous: false\n");
}

#[test]
fn verify_strassen_fixture() {
    let o = run(&["verify", &fixture("strassen_q4.cert.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["d: 1", "e: 1", "partial: true", "rank_A1: 3"] {
        assert!(s.lines().any(|l| l == line), "{s}");
    }
}

#[test]
fn tampered_fixture_fails() {
    let o = run(&["verify", &fixture("negative/tampered.cert.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn every_certificate_fixture_verifies() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let o = run(&["verify", path.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 4);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["prehom", "2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["zoo", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &fixture("tensors/w.json")]).status.code(), Some(2));
}

#[test]
fn zoo_output_matches_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let o = run(&["zoo", "w", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(fixtures().join("tensors/w.json")).unwrap());
    assert_eq!(stdout(&run(&["zoo", "w"])).as_bytes(), std::fs::read(&out).unwrap());
}

#[test]
fn interpolation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (cert, method) in [("w.cert.json", "unit-e"), ("w.cert.json", "unit-2d"), ("strassen_q4.cert.json", "aided-d"), ("strassen_q4.cert.json", "aided-e")] {
        let out = dir.path().join(format!("{method}.json"));
        let o = run(&["interpolate", &fixture(cert), "--method", method, "-o", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{method}: {}", String::from_utf8_lossy(&o.stderr));
        let v = run(&["verify", out.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0));
        assert!(stdout(&v).contains("kind: restriction"));
    }
    let o = run(&["interpolate", &fixture("w.cert.json"), "--method", "aided-d"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn degrees_and_json_flag() {
    let o = run(&["--json", "degrees", &fixture("w.cert.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["d"], 1);
    assert_eq!(v["e"], 2);
    assert_eq!(v["is_partial"], false);
}

#[test]
fn teleport_unit_to_w() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = run(&["teleport", &fixture("tensors/unit2.json"), &fixture("tensors/w.json"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["verify", out.to_str().unwrap()]).status.code(), Some(0));
    // W has a larger first flattening rank than ⟨1⟩
    let one = dir.path().join("one.json");
    run(&["zoo", "unit", "1", "-o", one.to_str().unwrap()]);
    let o = run(&["teleport", one.to_str().unwrap(), &fixture("tensors/w.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn aided_rank_commands() {
    let o = run(&["aided-rank", "cw-lower", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lower_bound: 7"));
    let o = run(&["aided-rank", "verify", &fixture("cw_q2_p2.spanning.json")]);
    assert!(stdout(&o).contains("r: 5"));
    let dir = tempfile::tempdir().unwrap();
    let w2 = dir.path().join("w2.json");
    let o = run(&["aided-rank", "cw2-upper", "2", "3", "-o", w2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&run(&["aided-rank", "verify", w2.to_str().unwrap()])).contains("r: 17"));
    let o = run(&["aided-rank", "obstruction", &fixture("tensors/w.json"), "1"]);
    assert_eq!((o.status.code(), stdout(&o).lines().next().map(str::to_string)), (Some(0), Some("obstruction: true".into())));
    assert_eq!(run(&["aided-rank", "obstruction", &fixture("tensors/w.json"), "2"]).status.code(), Some(1));
    assert_eq!(run(&["aided-rank", "cw-upper", "2", "1"]).status.code(), Some(2));
}

#[test]
fn orbit_dimension_of_seeded_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    run(&["--seed", "3", "zoo", "compressible-233", "-o", t.to_str().unwrap()]);
    let o = run(&["orbit-dim", t.to_str().unwrap(), "--group", "123"]);
    assert!(stdout(&o).contains("dimension: 37"));
    let o = run(&["orbit-dim", &fixture("tensors/w.json"), "--group", "23"]);
    assert!(stdout(&o).contains("dimension: "));
    assert_eq!(run(&["orbit-dim", &fixture("tensors/w.json"), "--group", "x"]).status.code(), Some(2));
}

#[test]
fn seeded_reports_are_reproducible() {
    let a = run(&["--seed", "7", "cert-zoo", "random-partial", "3"]);
    let b = run(&["--seed", "7", "cert-zoo", "random-partial", "3"]);
    let c = run(&["--seed", "8", "cert-zoo", "random-partial", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn suite_passes_and_is_deterministic() {
    let a = run(&["suite", "--seed", "2"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let s = stdout(&a);
    assert_eq!(s.lines().filter(|l| l.starts_with("criterion") && l.contains("PASS")).count(), 11);
    assert_eq!(a.stdout, run(&["suite", "--seed", "2"]).stdout);
}
