use std::path::Path;
use std::process::{Command, Output};
use veerlat_cli::{BundleFile, CheckReport};

fn veerlat(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veerlat")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn build(dir: &Path, word: &str) -> String {
    let o = veerlat(&["bundle", "build", "--lr", word, "--out-dir", "b"], dir);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let stem: String = word.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
    format!("b/{stem}.bundle.json")
}

#[test]
fn build_prints_the_orbit_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = veerlat(&["bundle", "build", "--lr", "RL", "--out-dir", "b"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("|F| 2"));
    let b = BundleFile::load(&dir.path().join("b/RL.bundle.json")).unwrap();
    assert_eq!(b.complex().unwrap().tetrahedra_per_period(), 2);
}

#[test]
fn matrix_matches_its_word() {
    let dir = tempfile::tempdir().unwrap();
    let o = veerlat(&["bundle", "build", "--matrix", "2", "1", "1", "1", "--out-dir", "b"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("monodromy RL") && stdout(&o).contains("|F| 2"));
}

#[test]
fn build_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&veerlat(&["bundle", "build", "--lr", "RRRR"], dir.path())), 2);
    let script = serde_json::to_string(&veerlat::veering::fixtures::unveerable_script()).unwrap();
    std::fs::write(dir.path().join("bad.json"), script).unwrap();
    assert_eq!(code(&veerlat(&["bundle", "build", "--script", "bad.json"], dir.path())), 3);
    std::fs::write(dir.path().join("junk.json"), "{\"initial\": 3}").unwrap();
    assert_eq!(code(&veerlat(&["bundle", "build", "--script", "junk.json"], dir.path())), 4);
    assert_eq!(code(&veerlat(&["bundle", "frobnicate"], dir.path())), 64);
}

#[test]
fn swap_script_builds() {
    let dir = tempfile::tempdir().unwrap();
    let script = serde_json::to_string(&veerlat::veering::fixtures::swap_script().unwrap()).unwrap();
    std::fs::write(dir.path().join("swap.json"), script).unwrap();
    let o = veerlat(&["bundle", "build", "--script", "swap.json", "--out-dir", "b"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("components 2"));
}

#[test]
fn corrupted_bundle_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "RRL");
    let full = dir.path().join(&path);
    let text = std::fs::read_to_string(&full).unwrap();
    std::fs::write(&full, text.replacen("RRL", "RLL", 1)).unwrap();
    assert_eq!(code(&veerlat(&["verify", &path, "--suite", "lattice"], dir.path())), 5);
}

#[test]
fn verify_writes_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "RL");
    let run = |out: &str| {
        let o = veerlat(&["verify", &path, "--suite", "lattice", "--seed", "7", "--out-dir", out], dir.path());
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        let text = std::fs::read_to_string(dir.path().join(out).join("report-lattice-seed7.json")).unwrap();
        serde_json::from_str::<CheckReport>(&text).unwrap()
    };
    let (a, b) = (run("r1"), run("r2"));
    assert!(a.passed() && a.summary.pass > 0);
    assert_eq!(a.without_timestamps().to_json(), b.without_timestamps().to_json());
}

#[test]
fn theorem_suite_passes_on_r6l() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "R^6L");
    let o = veerlat(&["verify", &path, "--suite", "theorems"], dir.path());
    assert_eq!(code(&o), 0);
    let r: CheckReport = serde_json::from_str(&stdout(&o)).unwrap();
    let main: Vec<_> = r.records.iter().filter(|x| x.check_id.ends_with("/main-bound")).collect();
    assert_eq!(main.len(), 7);
    assert!(main.iter().all(|x| x.lhs.unwrap() < x.rhs.unwrap()));
}

#[test]
fn pocket_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "R^6L");
    let o = veerlat(&["pocket", &path, "--slope", "1/1"], dir.path());
    assert_eq!(code(&o), 0);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["lambda_distance"], 2);
    assert_eq!(r["band_distance"], 3);
    assert_eq!(r["maximal"]["tetrahedra"], 1);
    assert_eq!(r["overlap_index"], 1);

    let o = veerlat(&["pocket", &path, "--slope", "0/1"], dir.path());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["lambda_distance"], 9);
    assert_eq!(r["band_distance"], 9);
    assert_eq!(r["maximal"]["tetrahedra"], 7);

    let o = veerlat(&["pocket", &path, "--slope", "17/5"], dir.path());
    assert_eq!(code(&o), 6);
    assert!(stdout(&o).contains("pivot slopes: -5/4, -4/3, -3/2, -2/1, 1/0, 0/1, 1/1"));
}

#[test]
fn crossing_boundary_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "RL");
    std::fs::write(
        dir.path().join("edges.json"),
        r#"{"boundary": [{"orbit": 0, "level": 0}, {"orbit": 1, "level": -2}]}"#,
    )
    .unwrap();
    let o = veerlat(&["pocket", &path, "--boundary", "edges.json"], dir.path());
    assert_eq!(code(&o), 65);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cross"));
}

#[test]
fn sections_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), "R^6L");
    let o = veerlat(&["sections", "sweep", &path, "--from", "-1", "--to", "1"], dir.path());
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = veerlat(&["sections", "top", &path, "--edges", "e5@-1"], dir.path());
    assert!(stdout(&o).starts_with("<6>"));
    let o = veerlat(&["sections", "bottom", &path, "--edges", "e5@-1"], dir.path());
    assert!(stdout(&o).starts_with("<-1>"));
}

#[test]
fn schema_covers_every_file_kind() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/veerlat.schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    for kind in ["bundle", "report", "pocket_report", "boundary_file"] {
        assert!(schema["$defs"][kind].is_object(), "{kind}");
    }
}
