use std::process::{Command, Output};

use ggadget::export::read_json;
use ggadget_core::build_g;
use serde_json::Value;

fn ggadget(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggadget"))
        .args(args)
        .env_remove("GGADGET_MAX_ELL")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn without_metadata(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("metadata");
    v
}

#[test]
fn build_formats() {
    let out = ggadget(&["build", "--ell", "1", "--format", "edgelist"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 73);

    let out = ggadget(&["build", "--ell", "1", "--format", "json"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"num_vertices\": 45"));
    assert_eq!(
        read_json(out.stdout.as_slice()).unwrap(),
        build_g(1).unwrap()
    );

    let out = ggadget(&["build", "--ell", "1", "--format", "dot"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("kind=rib, rank=1, color=green"));
}

#[test]
fn build_to_file_round_trips() {
    let path = std::env::temp_dir().join(format!("ggadget-g2-{}.json", std::process::id()));
    let out = ggadget(&["build", "--ell", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let g = read_json(std::fs::File::open(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(g, build_g(2).unwrap());
}

#[test]
fn exit_statuses() {
    assert_eq!(ggadget(&["build", "--ell", "0"]).status.code(), Some(2));
    assert_eq!(ggadget(&["build", "--ell", "4"]).status.code(), Some(3));
    assert_eq!(
        ggadget(&["coloring", "--ell", "1", "--r-max", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ggadget(&["verify", "--ell", "1", "--checks", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ggadget(&["frobnicate"]).status.code(), Some(2));
    let bad_dir = ggadget(&["build", "--ell", "1", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(bad_dir.status.code(), Some(1));
}

#[test]
fn guard_override_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ggadget"))
        .args(["stats", "--ell", "2"])
        .env("GGADGET_MAX_ELL", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_ggadget"))
        .args(["stats", "--ell", "1"])
        .env("GGADGET_MAX_ELL", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let out = ggadget(&["verify", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["all_passed"], true);
    assert_eq!(r["checks"].as_array().unwrap().len(), 7);

    let out = ggadget(&["verify", "--ell", "2", "--checks", "degeneracy,coloring"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["checks"][0]["measured"]["degeneracy"], 2);

    let r = report(&ggadget(&[
        "verify",
        "--ell",
        "2",
        "--checks",
        "special-sources",
    ]));
    assert_eq!(r["checks"][0]["status"], "skipped");
}

#[test]
fn induced_path_reports() {
    let r = report(&ggadget(&["induced-path", "--ell", "1", "--mode", "exact"]));
    assert_eq!(r["checks"][0]["measured"]["status"], "exact");
    assert_eq!(r["checks"][0]["measured"]["order"], 21);

    let r = report(&ggadget(&[
        "induced-path",
        "--ell",
        "1",
        "--mode",
        "exact",
        "--budget",
        "10",
    ]));
    assert_eq!(r["checks"][0]["measured"]["status"], "budget_exhausted");

    let args = [
        "induced-path",
        "--ell",
        "2",
        "--mode",
        "heuristic",
        "--seeds",
        "1000",
        "--rng-seed",
        "7",
    ];
    let a = without_metadata(report(&ggadget(&args)));
    let b = without_metadata(report(&ggadget(&args)));
    assert_eq!(a, b);
    assert!(a["checks"][0]["measured"]["order"].as_u64().unwrap() >= 2);
}

#[test]
fn coloring_and_stats_reports() {
    let r = report(&ggadget(&["coloring", "--ell", "1", "--r-max", "10"]));
    let rows = r["checks"][0]["measured"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|row| row["pass"] == true));
    let r = report(&ggadget(&["coloring", "--ell", "2", "--r-max", "5"]));
    assert_eq!(
        r["checks"][0]["measured"]["rows"].as_array().unwrap().len(),
        5
    );

    let m = report(&ggadget(&["stats", "--ell", "1"]))["checks"][0]["measured"].clone();
    assert_eq!(
        (m["vertices"].as_u64(), m["rib_edges"].as_u64()),
        (Some(45), Some(16))
    );
    assert_eq!(
        m["sources_per_rank"],
        serde_json::json!([{"rank": 1, "count": 1}])
    );
    let m = report(&ggadget(&["stats", "--ell", "2"]))["checks"][0]["measured"].clone();
    assert_eq!(m["rib_edges"], 800);
    assert_eq!(
        m["sources_per_rank"],
        serde_json::json!([{"rank": 1, "count": 18}, {"rank": 2, "count": 1}])
    );
}

#[test]
fn identical_flags_give_identical_output() {
    for args in [
        &["build", "--ell", "2", "--format", "json"][..],
        &["build", "--ell", "2", "--format", "dot"][..],
    ] {
        assert_eq!(ggadget(args).stdout, ggadget(args).stdout);
    }
    let args = ["verify", "--ell", "1"];
    assert_eq!(
        without_metadata(report(&ggadget(&args))),
        without_metadata(report(&ggadget(&args)))
    );
}
