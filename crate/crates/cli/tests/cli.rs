use std::process::Command;

use qdouble::grid::{plan, Job};
use qdouble::sampling::{random_pairs, sample_points};
use qdouble::{run_suite, Mode, SuiteConfig, EXIT_CONFIG, EXIT_PASS};
use qdouble_core::scalar::is_root_of_unity_risk;
use qdouble_core::{Field, Rat};
use serde_json::Value;

fn qdouble(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qdouble"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

#[test]
fn spectrum_report_carries_the_character() {
    let (code, out) = qdouble(&["--suite", "spectrum", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["values"]["chi"], "(q^2+1)/(q^5)");
    assert_eq!(recs[0]["wall_time"], Value::Null);
}

#[test]
fn top_level_keys_are_in_fixed_order() {
    let (_, out) = qdouble(&["--suite", "braiding", "--n", "2"]);
    let keys = [
        "\"schema\"",
        "\"suite\"",
        "\"config\"",
        "\"conventions\"",
        "\"records\"",
        "\"summary\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
}

#[test]
fn capelli_report_names_the_identity() {
    let (code, out) = qdouble(&["--suite", "capelli", "--n", "2", "--k", "2"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    for r in v["records"].as_array().unwrap() {
        assert_eq!(r["anchor"], "matrix Capelli identity");
        assert_eq!(r["passed"], true);
    }
}

#[test]
fn large_n_sampled_braiding_smoke_test() {
    let (code, out) = qdouble(&["--suite", "braiding", "--n", "5", "--mode", "sampled", "--samples", "2"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["checks"], 6);
}

#[test]
fn bad_configurations_exit_with_status_three() {
    for args in [
        &["--suite", "nonsense"][..],
        &["--mode", "fast"],
        &["--suite", "spectrum", "--n", "2", "--lambda", "1,1,1"],
        &["--suite", "spectrum", "--lambda", "2,x"],
        &["--suite", "capelli", "--lambda", "2"],
        &["--n", "2"],
        &["--suite", "braiding", "--n", "0"],
        &["--samples", "0"],
    ] {
        let (code, _) = qdouble(args);
        assert_eq!(code, EXIT_CONFIG, "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let path = std::env::temp_dir().join(format!("qdouble-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _) = qdouble(&["--suite", "guard", "--seed", "3", "--out", p]);
    assert_eq!(code, EXIT_PASS);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let (_, stdout) = qdouble(&["--suite", "guard", "--seed", "3"]);
    assert_eq!(written, stdout);
}

#[test]
fn timings_fill_wall_time() {
    let mut cfg = SuiteConfig::new("braiding", Mode::Exact);
    cfg.n = Some(2);
    cfg.timings = true;
    let v: Value = serde_json::from_str(&run_suite(&cfg).unwrap().to_json()).unwrap();
    assert!(v["records"][0]["wall_time"].is_f64());
}

#[test]
fn sample_points_are_seeded_and_safe() {
    let a = sample_points(11, 8);
    assert_eq!(a, sample_points(11, 8));
    assert_ne!(a, sample_points(12, 8));
    for (i, p) in a.iter().enumerate() {
        assert!(!p.is_zero() && !p.abs().is_one() && !is_root_of_unity_risk(p, 8));
        assert!(!a[..i].contains(p));
    }
}

#[test]
fn random_pairs_are_seeded_and_nonzero() {
    let a = random_pairs::<Rat>(5, 20, 3);
    assert_eq!(a, random_pairs::<Rat>(5, 20, 3));
    assert!(a
        .iter()
        .all(|(x, y)| !x.is_zero() && !y.is_zero() && x.degree() <= 3 && y.degree() <= 3));
}

#[test]
fn exact_grid_samples_only_the_large_cayley_hamilton_case() {
    let cfg = SuiteConfig::new("cayley-hamilton", Mode::Exact);
    let tasks = plan(&cfg).unwrap();
    assert_eq!(tasks.len(), 1 + cfg.samples);
    assert!(tasks[0].point.is_none() && tasks[0].job == Job::CayleyHamilton { n: 2 });
    assert!(tasks[1..]
        .iter()
        .all(|t| t.point.is_some() && t.job == Job::CayleyHamilton { n: 3 }));
}

#[test]
fn sampled_mode_keeps_symbolic_only_checks_exact() {
    let cfg = SuiteConfig::new("u2h", Mode::Sampled);
    let tasks = plan(&cfg).unwrap();
    assert_eq!(tasks.iter().filter(|t| t.point.is_some()).count(), cfg.samples);
    assert!(tasks
        .iter()
        .any(|t| matches!(t.job, Job::U2hLimit { .. }) && t.point.is_none()));
}
