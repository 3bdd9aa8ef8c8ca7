use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn epwlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epwlab")).args(args).env_remove("EPWLAB_THREADS").output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("epwlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_writes_lagrangian_with_requested_ell() {
    for (ell, name) in [("0", "g0.json"), ("1", "g1.json")] {
        let path = scratch(name);
        let out = epwlab(&["gen", "--seed", "42", "--ell", ell, "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(file["ell"].to_string(), ell);
        assert_eq!(file["seed"], 42);
        assert!(file["decomposable_search"].is_string());
        assert_eq!(report(&out)["manifest"]["command"], "gen");
    }
    let out = epwlab(&["gen", "--ell", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn planted_point_lands_in_second_stratum() {
    let path = scratch("planted.json");
    let out = epwlab(&["gen", "--plant", "y2:1,0,0,0,0,0", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = epwlab(&["stratum", "-i", path.to_str().unwrap(), "--which", "y", "--point", "1,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(report(&out)["result"]["ell"].as_u64().unwrap() >= 2);
}

#[test]
fn z_degree_on_generated_file() {
    let path = scratch("gz.json");
    assert_eq!(epwlab(&["gen", "--seed", "3", "--ell", "1", "-o", path.to_str().unwrap()]).status.code(), Some(0));
    let out = epwlab(&["degree", "--seed", "3", "-i", path.to_str().unwrap(), "--which", "z"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["degree"], 4);
    let digest = r["manifest"]["inputs"][path.to_str().unwrap()].as_str().unwrap();
    assert_eq!(digest.len(), 64);
}

#[test]
fn reports_are_deterministic() {
    let path = scratch("det.json");
    assert_eq!(epwlab(&["gen", "--seed", "9", "--ell", "1", "-o", path.to_str().unwrap()]).status.code(), Some(0));
    let run = || {
        let out = epwlab(&["degree", "--seed", "5", "-i", path.to_str().unwrap(), "--which", "ydual"]);
        let mut r = report(&out);
        r["manifest"].as_object_mut().unwrap().remove("wall_time_ms");
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
    let a = epwlab(&["gen", "--seed", "11", "--ell", "2"]);
    let b = epwlab(&["gen", "--seed", "11", "--ell", "2", "--threads", "1"]);
    assert_eq!(report(&a)["result"], report(&b)["result"]);
}

#[test]
fn table_and_lattice_reports_pass() {
    for args in [
        vec!["lattice", "--report", "gm6"],
        vec!["lattice", "--report", "gm4"],
        vec!["lattice", "--report", "catalog"],
        vec!["bbw", "--verify", "a1", "--m", "5"],
        vec!["bbw", "--verify", "a2"],
        vec!["bbw", "--verify", "b-table"],
        vec!["bbw", "--verify", "b-vanishing"],
        vec!["hodge"],
    ] {
        let out = epwlab(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
    let r = report(&epwlab(&["bbw", "--verify", "a2"]));
    assert_eq!(r["result"]["match"], true);
    let r = report(&epwlab(&["lattice", "--report", "gm6"]));
    assert_eq!(r["result"]["invariants_match"], true);
}

#[test]
fn bbw_single_term_and_usage_errors() {
    let out = epwlab(&["bbw", "--grass", "2,4", "--u-weight", "0,-2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["pushforward"]["degree"], 0);
    assert_eq!(r["result"]["rank"], "10");
    // 𝒰 itself has no cohomology on Gr(2, 4).
    let r = report(&epwlab(&["bbw", "--grass", "2,4", "--u-weight", "1,0"]));
    assert_eq!(r["result"]["pushforward"]["kind"], "vanishes");
    assert_eq!(epwlab(&["bbw", "--grass", "2,4", "--u-weight", "0,1"]).status.code(), Some(2));
    assert_eq!(epwlab(&["bbw", "--verify", "c"]).status.code(), Some(2));
    assert_eq!(epwlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn quadric_count_over_f5_and_q() {
    let out = epwlab(&["quadric-count", "--k", "1", "--spec", r#"{"p": 5, "gram": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out)["result"].clone();
    assert_eq!(r["families"], 2);
    assert_eq!(r["count"], 12);
    assert_eq!(r["dim_estimate"], 1);
    let r = report(&epwlab(&["quadric-count", "--k", "1", "--spec", r#"{"p": "Q", "gram": [[1,0,0],[0,-1,0],[0,0,0]]}"#]))["result"].clone();
    assert_eq!(r["corank"], 1);
    assert_eq!(r["discriminant"], "0");
}

#[test]
fn pencil_on_planted_pair() {
    let out = epwlab(&["pencil", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out)["result"].clone();
    assert_eq!(r["b_dim"], 8);
    assert!(r["witness"]["ell_at_t"].as_u64().unwrap() >= 2);
    assert_eq!(r["planted_member_located"], true);
}

#[test]
fn sigma_kernel_on_ell_two() {
    let path = scratch("g2.json");
    assert_eq!(epwlab(&["gen", "--seed", "8", "--ell", "2", "-o", path.to_str().unwrap()]).status.code(), Some(0));
    let out = epwlab(&["sigma", "-i", path.to_str().unwrap(), "--locus", "kernel"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out)["result"].clone();
    assert_eq!(r["conic"]["span_dim"], 3);
    assert_eq!(r["all_pass"], true);
}
