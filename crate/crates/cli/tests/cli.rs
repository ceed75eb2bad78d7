use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;
use zariski_cli::{run, run_to_outcome, without_timings, Mode, RunConfig};
use zariski_core::{factor_degrees_mod, IntPolynomial};
use zariski_oracle::is_prime_trial;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn zariski(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zariski")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn poly_from_json(v: &Value) -> IntPolynomial {
    IntPolynomial::new(
        v.as_array()
            .unwrap()
            .iter()
            .map(|c| match c {
                Value::Number(n) => n.as_i64().unwrap().into(),
                Value::String(s) => s.parse().unwrap(),
                _ => panic!("bad coefficient {c}"),
            })
            .collect(),
    )
}

/// Checks every `(prime, degrees)` witness below `verdict` against `poly`.
fn check_witnesses(poly: &IntPolynomial, verdict: &Value) -> usize {
    let mut checked = 0;
    for w in verdict["witnesses"].as_array().unwrap() {
        let q = w["prime"].as_u64().unwrap();
        assert!(is_prime_trial(q));
        let degrees: Vec<usize> = w["degrees"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d.as_u64().unwrap() as usize)
            .collect();
        assert_eq!(factor_degrees_mod(poly, q).unwrap().degrees(), &degrees[..]);
        checked += 1;
    }
    if let Some(trace) = verdict.get("trace") {
        checked += check_witnesses(&poly_from_json(&trace["polynomial"]), &trace["verdict"]);
    }
    checked
}

#[test]
fn exit_codes_on_fixture_corpus() {
    let cases = [
        ("sl2_modular.json", "weyl", 0),
        ("sl2_modular.json", "adjoint", 0),
        ("sl3_heisenberg.json", "weyl", 1),
        ("sl3_heisenberg.json", "adjoint", 1),
        ("sl2_commuting.json", "weyl", 1),
        ("sp4_block_diagonal.json", "weyl", 1),
        ("sl2_big_entries.json", "weyl", 0),
        ("sp3_odd.json", "weyl", 2),
        ("malformed.json", "weyl", 2),
        ("missing.json", "weyl", 2),
        ("cubic_s3.txt", "galois", 0),
        ("cubic_c3.txt", "galois", 1),
        ("x2_plus_1.txt", "galois", 0),
        ("quartic_hyperoctahedral.json", "galois", 0),
        ("cyclotomic_5.json", "galois", 1),
        ("x4_plus_1.json", "galois", 1),
        ("cubic_s3.txt", "weyl", 2),
        ("sl2_modular.json", "galois", 2),
    ];
    for (file, mode, expected) in cases {
        let path = fixture(file);
        let (code, stdout, _) = zariski(&["--mode", mode, "--seed", "42", path.to_str().unwrap()]);
        assert_eq!(code, expected, "{file} in {mode} mode");
        let doc: Value = serde_json::from_str(&stdout).expect("stdout is one JSON document");
        if expected == 2 {
            assert!(doc["error"].is_string());
        }
    }
}

#[test]
fn weyl_report_on_modular_group() {
    let cfg = RunConfig {
        seed: 42,
        ..RunConfig::new(fixture("sl2_modular.json"), Mode::Weyl)
    };
    let out = run(&cfg).unwrap();
    assert_eq!(out.exit_code, 0);
    let r = &out.report;
    assert_eq!(r["verdict"], "dense");
    assert_eq!(r["certainty"], "certain");
    let trail = r["trials"][0]["result"]["trail"].as_array().unwrap();
    let charpolys: Vec<IntPolynomial> = trail
        .iter()
        .filter(|s| s["step"] == "word")
        .map(|s| poly_from_json(&s["charpoly"]))
        .collect();
    let galois: Vec<&Value> = trail.iter().filter(|s| s["step"] == "galois").collect();
    assert_eq!(galois.len(), 2);
    for (g, poly) in galois.iter().zip(&charpolys) {
        assert_eq!(g["verdict"]["answer"], "confirmed_sn");
        assert!(check_witnesses(poly, &g["verdict"]) > 0);
    }
}

#[test]
fn heisenberg_report_shows_unipotent_charpoly() {
    let cfg = RunConfig {
        seed: 42,
        ..RunConfig::new(fixture("sl3_heisenberg.json"), Mode::Weyl)
    };
    let out = run(&cfg).unwrap();
    assert_eq!(out.exit_code, 1);
    let trail = out.report["trials"][0]["result"]["trail"].as_array().unwrap();
    for step in trail.iter().filter(|s| s["step"] == "word") {
        assert_eq!(poly_from_json(&step["charpoly"]), IntPolynomial::from_i64(&[-1, 3, -3, 1]));
    }
    let commute = trail.iter().any(|s| s["step"] == "commutation" && s["commute"] == true);
    let not_generic = trail
        .iter()
        .any(|s| s["step"] == "galois" && s["verdict"]["answer"] == "not_generic");
    assert!(commute || not_generic);
}

#[test]
fn galois_witnesses_reproduce() {
    for file in ["cubic_s3.txt", "cubic_c3.txt", "quartic_hyperoctahedral.json", "x4_plus_1.json"] {
        let cfg = RunConfig {
            seed: 5,
            ..RunConfig::new(fixture(file), Mode::Galois)
        };
        let out = run(&cfg).unwrap();
        let poly = poly_from_json(&out.report["input"]["poly"]);
        let verdict = &out.report["trials"][0]["result"]["verdict"];
        assert!(check_witnesses(&poly, verdict) > 0, "{file}");
    }
}

#[test]
fn repeated_trials_tighten_the_bound() {
    let cfg = RunConfig {
        trials: 3,
        epsilon: 0.01,
        ..RunConfig::new(fixture("sl3_heisenberg.json"), Mode::Adjoint)
    };
    let out = run(&cfg).unwrap();
    assert_eq!(out.report["trials_run"], 3);
    let bound = out.report["error_bound"].as_f64().unwrap();
    assert!((bound - 1e-6).abs() < 1e-18);
    let seeds: Vec<u64> = out.report["trials"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["seed"].as_u64().unwrap())
        .collect();
    assert_eq!(seeds, (0..3).map(|i| cfg.trial_seed(i).value()).collect::<Vec<_>>());
}

#[test]
fn first_positive_trial_ends_the_run() {
    let cfg = RunConfig {
        trials: 8,
        ..RunConfig::new(fixture("sl2_modular.json"), Mode::Adjoint)
    };
    let out = run(&cfg).unwrap();
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.report["trials_run"], 1);
    assert_eq!(out.report["error_bound"], 0.0);
}

#[test]
fn reports_are_reproducible_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let input = fixture("sp4_standard.json");
    for (path, extra) in [(&a, "--sequential"), (&b, "--quiet")] {
        let (_, stdout, _) = zariski(&[
            input.to_str().unwrap(),
            "--seed",
            "7",
            "--word-length",
            "40",
            "--trials",
            "2",
            "--report",
            path.to_str().unwrap(),
            extra,
        ]);
        if extra == "--quiet" {
            assert!(stdout.is_empty());
        }
    }
    let read = |p: &PathBuf| -> Value { serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap() };
    let (ra, rb) = (read(&a), read(&b));
    assert!(ra["timings"].is_object());
    assert_eq!(
        serde_json::to_string(&without_timings(&ra)).unwrap(),
        serde_json::to_string(&without_timings(&rb)).unwrap()
    );
}

#[test]
fn invalid_flags_exit_with_two() {
    let input = fixture("sl2_modular.json");
    let p = input.to_str().unwrap();
    assert_eq!(zariski(&[p, "--epsilon", "1.5"]).0, 2);
    assert_eq!(zariski(&[p, "--prime-bits", "21,20"]).0, 2);
    assert_eq!(zariski(&[p, "--trials", "0"]).0, 2);
    assert_eq!(zariski(&[p, "--mode", "bogus"]).0, 2);
    assert_eq!(zariski(&[p, "--epsilon", "1/1000", "--quiet"]).0, 0);
    let cfg = RunConfig {
        word_constant: 0.0,
        ..RunConfig::new(input.clone(), Mode::Weyl)
    };
    assert_eq!(run_to_outcome(&cfg).exit_code, 2);
}
