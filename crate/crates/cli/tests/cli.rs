use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn madness(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_madness"))
        .args(args)
        .env_remove("MADNESS_CACHE_DIR")
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = madness(&all);
    serde_json::from_slice(&out.stdout).expect("json output should parse")
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn solve_interior_example() {
    let v = json(&[
        "solve",
        "--target",
        "Ba",
        "--cubes",
        "Ac,Ad,Ae,Af,Cb,Db,Eb,Fb",
        "--interior",
    ]);
    let p = &v["payload"];
    assert_eq!(p["solution_number"], 16);
    assert_eq!(p["permanent"], 16);
    assert_eq!(p["prime_scan"], 16);
    assert_eq!(p["interior_matching_count"], 2);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["cube_data_hash"].as_str().unwrap().len(), 64);
    assert_eq!(v["command"]["name"], "solve");
}

#[test]
fn solve_other_examples() {
    let v = json(&[
        "solve",
        "--target",
        "Ba",
        "--cubes",
        "Bc,Ad,Ae,Af,Cb,Db,Eb,Fb",
    ]);
    assert_eq!(v["payload"]["solution_number"], 0);
    let v = json(&[
        "solve",
        "--target",
        "Cd",
        "--cubes",
        "Ac,Af,Ba,Bf,Ea,Ef,Fa,Fc",
    ]);
    assert_eq!(v["payload"]["solution_number"], 4);
}

#[test]
fn solve_lists_arrangements() {
    let dir = tempfile::tempdir().unwrap();
    let out = madness(&[
        "solve",
        "--target",
        "De",
        "--cubes",
        "Ac,Af,Ba,Bf,Ea,Ef,Fa,Fc",
        "--arrangements",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("arrangement "))
            .count(),
        2
    );
    let csv = read(dir.path(), "arrangements.csv");
    assert_eq!(csv.lines().count(), 1 + 2 * 8);
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &[
            "solve",
            "--target",
            "Ba",
            "--cubes",
            "Ac,Ac,Ae,Af,Cb,Db,Eb,Fb",
        ][..],
        &[
            "solve",
            "--target",
            "Zz",
            "--cubes",
            "Ac,Ad,Ae,Af,Cb,Db,Eb,Fb",
        ],
        &["solve", "--target", "Ba", "--cubes", "Ac,Ad"],
        &[
            "solve",
            "--target",
            "Ba",
            "--cubes",
            "Ac,Ad,Ae,Af,Cb,Db,Eb,Xx",
        ],
        &["--format", "yaml", "cubes"],
        &["figure7", "--k", "12"],
        &["sample", "--n", "0"],
        &["sample", "--k", "7"],
    ] {
        let out = madness(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn cubes_table() {
    let out = madness(&["--format", "csv", "cubes"]);
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 30);
    let fb = rows.iter().find(|r| &r[0] == "Fb").unwrap();
    assert_eq!(&fb[7], "124 146 152 165 234 253 356 364");
    let fe = rows.iter().find(|r| &r[0] == "Fe").unwrap();
    assert!(fe[7].split(' ').any(|c| c == "456"));
}

#[test]
fn table1_rows_and_published_check() {
    let v = json(&["table1", "--target", "Ba"]);
    let rows = v["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(v["payload"]["total"], 133_680);
    // the published table has the 4/6/8 columns permuted; --check reports it
    let out = madness(&["table1", "--check"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn table2_matches_published_values() {
    let dir = tempfile::tempdir().unwrap();
    let out = madness(&["table2", "--check", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let csv = read(dir.path(), "table2.csv");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "buildable_targets,collections,proportion");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "0,2774940,0.4741");
    assert_eq!(lines[6], "5,360,0.0001");
}

#[test]
fn five_targets_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = madness(&[
        "five-targets",
        "--verify",
        "--check",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(read(dir.path(), "five_targets.csv").lines().count(), 361);
    let v: Value = serde_json::from_str(&read(dir.path(), "five_targets.json")).unwrap();
    assert_eq!(v["payload"].as_array().unwrap().len(), 360);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn universal_and_figure7_checks_pass() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(
        madness(&["universal", "--check", "--out", d]).status.code(),
        Some(0)
    );
    let v: Value = serde_json::from_str(&read(dir.path(), "universal.json")).unwrap();
    let sets = v["payload"]["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 10);
    assert!(sets
        .iter()
        .all(|s| s["buildable_count"] == 30 && s["stabilizer_order"] == 72));

    assert_eq!(
        madness(&["figure7", "--check", "--out", d]).status.code(),
        Some(0)
    );
    assert_eq!(
        read(dir.path(), "figure7_k11.csv"),
        "buildable_count,subsets\n18,12\n"
    );
    assert_eq!(
        read(dir.path(), "figure7_k8.csv"),
        "buildable_count,subsets\n0,441\n1,18\n3,36\n"
    );
}

#[test]
fn sample_files_identical_across_thread_counts() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, threads) in [(&a, "1"), (&b, "3")] {
        let out = madness(&[
            "sample",
            "--k",
            "10",
            "--n",
            "3000",
            "--seed",
            "9",
            "--threads",
            threads,
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    for name in ["sample_k10.csv", "sample.json"] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
    let csv = read(a.path(), "sample_k10.csv");
    assert!(csv.starts_with("# k=10,n=3000,seed=9,"));
    assert_eq!(csv.lines().count(), 2 + 3000);
}

#[test]
fn cached_and_fresh_reports_agree() {
    let cache = tempfile::tempdir().unwrap();
    let c = cache.path().to_str().unwrap();
    let fresh = madness(&["--format", "csv", "sample", "--k", "9", "--n", "500"]);
    let first = madness(&[
        "--format",
        "csv",
        "--cache-dir",
        c,
        "sample",
        "--k",
        "9",
        "--n",
        "500",
    ]);
    let second = madness(&[
        "--format",
        "csv",
        "--cache-dir",
        c,
        "sample",
        "--k",
        "9",
        "--n",
        "500",
    ]);
    assert_eq!(stdout(&fresh), stdout(&first));
    assert_eq!(stdout(&first), stdout(&second));

    // corrupt every entry: warned about, recomputed, same result
    for entry in fs::read_dir(cache.path()).unwrap() {
        fs::write(entry.unwrap().path(), "{ not json").unwrap();
    }
    let third = madness(&[
        "--format",
        "csv",
        "--cache-dir",
        c,
        "sample",
        "--k",
        "9",
        "--n",
        "500",
    ]);
    assert!(third.status.success());
    assert!(String::from_utf8_lossy(&third.stderr).contains("corrupt"));
    assert_eq!(stdout(&third), stdout(&fresh));
}

#[test]
fn cache_dir_from_environment() {
    let cache = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_madness"))
        .args(["table1", "--target", "Cd"])
        .env("MADNESS_CACHE_DIR", cache.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(fs::read_dir(cache.path()).unwrap().count(), 1);
}

#[test]
fn search_budget_exhaustion_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("scan.ckpt");
    let ckpt = ckpt.to_str().unwrap();
    let out = madness(&["search", "--budget", "5000", "--checkpoint", ckpt]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains(ckpt));
    let v = json(&["search", "--budget", "5000", "--checkpoint", ckpt]);
    assert_eq!(v["payload"]["next_rank"], 10_000);
    assert_eq!(v["payload"]["scanned_this_run"], 5_000);
    assert_eq!(v["status"], "incomplete");
}

#[test]
fn census_of_eight_subsets_matches_table2() {
    let dir = tempfile::tempdir().unwrap();
    let out = madness(&[
        "census",
        "--k",
        "8",
        "--check",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let csv = read(dir.path(), "census_k8.csv");
    assert_eq!(csv.lines().nth(1), Some("0,2774940"));
    assert_eq!(csv.lines().last(), Some("5,360"));
    assert_eq!(madness(&["census", "--k", "31"]).status.code(), Some(2));
}
