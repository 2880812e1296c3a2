use std::path::Path;
use std::process::{Command, Output};

fn ehyper(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehyper"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn tight_cycle_has_clique_number_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = ehyper(dir.path(), &["construct", "tc5", "-o", "h.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = ehyper(dir.path(), &["oracle", "clique", "h.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("size 3\n"), "{}", stdout(&o));
}

#[test]
fn bound_check_reports_a_below_b() {
    let dir = tempfile::tempdir().unwrap();
    let o = ehyper(dir.path(), &["stepup", "bound-check", "--k", "3", "--h", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("A < B: true"));
}

#[test]
fn params_give_the_pattern_density() {
    let dir = tempfile::tempdir().unwrap();
    let o = ehyper(dir.path(), &["density", "params", "--t", "3", "--n", "1000000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("δH = 1/495"), "{}", stdout(&o));
}

#[test]
fn randomized_commands_need_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let o = ehyper(dir.path(), &["construct", "gn", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--seed"));
    let o = ehyper(dir.path(), &["construct", "gn", "--n", "6", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "# header\n3 4 2\n0 1 2\n0 1 9\n").unwrap();
    let o = ehyper(dir.path(), &["oracle", "clique", "bad.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn config_file_supplies_arguments() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("run.cfg"), "command = stepup bound-check\nk = 3\nh = 8\n").unwrap();
    let o = ehyper(dir.path(), &["--config", "run.cfg", "--record", "out.jsonl"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let line = std::fs::read_to_string(dir.path().join("out.jsonl")).unwrap();
    let rec: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(rec["command"], "stepup bound-check");
    assert_eq!(rec["verdict"], "positive");
    assert!(rec.get("elapsed_ms").is_none());
}

#[test]
fn same_seed_same_instance() {
    let dir = tempfile::tempdir().unwrap();
    let a = ehyper(dir.path(), &["construct", "lift", "--n", "12", "--seed", "7"]);
    let b = ehyper(dir.path(), &["construct", "lift", "--n", "12", "--seed", "7", "--threads", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn embedding_certificates_and_copies_exit_by_verdict() {
    let dir = tempfile::tempdir().unwrap();
    ehyper(dir.path(), &["construct", "tc5", "-o", "tc5.txt"]);
    ehyper(dir.path(), &["construct", "lift", "--n", "20", "--seed", "3", "-o", "lift.txt"]);
    let o = ehyper(dir.path(), &["density", "embed", "lift.txt", "--pattern", "tc5.txt", "--rho", "1/5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stdout(&o).contains("failed vertex"));
    let o = ehyper(dir.path(), &["density", "embed", "lift.txt", "--pattern", "tc5.txt", "--rho", "1/5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extraction_witness_is_printed() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.txt"), "bipartite 3 3 7\n0 3\n0 4\n0 5\n1 3\n1 4\n2 3\n2 4\n").unwrap();
    let o = ehyper(dir.path(), &["extract", "kst", "g.txt", "--s", "3", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 1 2\n3 4\n"), "{}", stdout(&o));
    let o = ehyper(dir.path(), &["extract", "kst", "g.txt", "--s", "3", "--t", "3"]);
    assert_eq!(o.status.code(), Some(1));
}
