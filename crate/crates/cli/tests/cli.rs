use std::collections::BTreeSet;
use std::process::Command;

use grassmann_cli::export::{export, resolve, Doc, ExportError};
use grassmann_cli::{run_suite, ConfigError, Format, SuiteConfig};

fn only(names: &[&str]) -> BTreeSet<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grassmann"))
}

fn matrix(id: &str) -> Vec<Vec<String>> {
    match resolve(id).unwrap() {
        Doc::Matrix(m) => m.entries,
        Doc::Matrices(ms) => ms[0].entries.clone(),
        _ => panic!("{id} is not a matrix"),
    }
}

#[test]
fn qkz_export_is_byte_stable() {
    let a = export("qkz:3:2:1", Format::Json).unwrap();
    let b = export("qkz:3:2:1", Format::Json).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["size"], 3);
    assert_eq!(v["basis"][1]["I1"], serde_json::json!([1, 3]));
    let want = serde_json::json!([["z1*p1 - z3*p1", "p1", "0"], ["0", "z1*p1 - z2*p1", "p1"], ["p2", "0", "0"]]);
    assert_eq!(v["entries"], want);
    let out = bin().args(["export", "qkz:3:2:1"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), a);
}

#[test]
fn stokes_export_is_upper_unitriangular() {
    let s1 = matrix("stokes:1:3");
    for (i, row) in s1.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if i == j {
                assert_eq!(e, "1");
            } else if i > j {
                assert_eq!(e, "0");
            } else {
                assert_ne!(e, "0");
            }
        }
    }
}

#[test]
fn kapranov_gram_on_g23() {
    let g = matrix("gram:kapranov:2:3");
    assert_eq!(g.len(), 3);
    for (i, row) in g.iter().enumerate() {
        assert_eq!(row.len(), 3);
        assert_eq!(row[i], "1");
        for e in &row[..i] {
            assert_eq!(e, "0");
        }
    }
}

#[test]
fn unknown_ids() {
    assert_eq!(resolve("kqz:3:2:1"), Err(ExportError::UnknownId("kqz:3:2:1".into())));
    assert!(matches!(resolve("qkz:3:x:1"), Err(ExportError::UnknownId(_))));
    assert!(matches!(resolve("qkz:3:5:1"), Err(ExportError::Compute(_))));
    let out = bin().args(["export", "nothing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format() {
    let t = export("dyn:3:1:1", Format::Text).unwrap();
    assert!(t.starts_with("dyn X1 (k=1, n=3)"));
    assert!(t.contains("p1^-1*p2"));
}

#[test]
fn markov_filter_selects_exactly_the_diophantine_checks() {
    let cfg = SuiteConfig { which: only(&["markov"]), ..SuiteConfig::default() };
    let r = run_suite(&cfg).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks.len(), 24);
    assert!(r.checks.iter().all(|c| c.suite == "markov" && c.anchor.contains("markov")));
}

#[test]
fn smaller_max_n_is_a_passing_subset() {
    let names = ["qkz-examples", "compat", "satake", "cohomology", "markov", "spectrum"];
    let small = run_suite(&SuiteConfig { max_n: 2, which: only(&names), ..SuiteConfig::default() }).unwrap();
    let big = run_suite(&SuiteConfig { max_n: 4, which: only(&names), ..SuiteConfig::default() }).unwrap();
    assert!(small.passed() && big.passed());
    assert!(small.checks.len() < big.checks.len());
    let ids: BTreeSet<(String, String)> = big.checks.iter().map(|c| (c.suite.clone(), c.id.clone())).collect();
    assert!(small.checks.iter().all(|c| ids.contains(&(c.suite.clone(), c.id.clone()))));
}

#[test]
fn reports_are_reproducible_across_worker_counts() {
    let base = SuiteConfig { max_n: 3, which: only(&["numerics", "compat"]), seed: 11, ..SuiteConfig::default() };
    let one = run_suite(&SuiteConfig { workers: Some(1), ..base.clone() }).unwrap();
    let four = run_suite(&SuiteConfig { workers: Some(4), ..base.clone() }).unwrap();
    assert_eq!(one.to_json(), four.to_json());
    let other = run_suite(&SuiteConfig { seed: 12, ..base }).unwrap();
    assert_ne!(one.samples, other.samples);
    let ids: Vec<_> = one.checks.iter().map(|c| (c.suite.clone(), c.id.clone())).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(one.checks.iter().all(|c| !c.anchor.is_empty()));
}

#[test]
fn config_errors() {
    assert_eq!(run_suite(&SuiteConfig { max_n: 6, ..SuiteConfig::default() }).unwrap_err(), ConfigError::MaxN(6));
    assert_eq!(
        run_suite(&SuiteConfig { which: only(&["bogus"]), ..SuiteConfig::default() }).unwrap_err(),
        ConfigError::UnknownSuite("bogus".into())
    );
    let mut cfg = SuiteConfig::default();
    cfg.tol.hrr = -1.0;
    assert_eq!(run_suite(&cfg).unwrap_err(), ConfigError::Tolerance(-1.0));
    assert_eq!(run_suite(&SuiteConfig { workers: Some(0), ..SuiteConfig::default() }).unwrap_err(), ConfigError::Workers);
}

#[test]
fn exit_codes() {
    let ok = bin().args(["--format", "text", "suite", "--only", "spectrum,markov"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().contains("87 checks, 0 failed"));
    // an unattainable tolerance must turn the exit code red
    let strict = bin().args(["detprop", "--n", "3", "--k", "2", "--z", "0.31,-0.57,0.11", "--tol", "1e-300"]).output().unwrap();
    assert_eq!(strict.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&strict.stdout).unwrap();
    assert_eq!(v[0]["passed"], false);
    assert_eq!(v[0]["anchor"], "detprop");
    let bad = bin().args(["suite", "--max-n", "9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let workers = bin().env(grassmann_cli::WORKERS_VAR, "0").args(["suite", "--only", "spectrum"]).output().unwrap();
    assert_eq!(workers.status.code(), Some(2));
}

#[test]
fn numeric_subcommands() {
    let out = bin().args(["detprop", "--n", "3", "--k", "2", "--z", "0.31,-0.57,0.11", "--branch", "-1"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v[0]["max_rel_err"].as_f64().unwrap() < 1e-8);
    assert_eq!(v[0]["lhs"].as_array().unwrap().len(), 3);
    for args in [
        vec!["bcheck", "--n", "3", "--k", "2", "--class", "2"],
        vec!["hrr", "--n", "3", "--k", "1", "--class", "3", "--seed", "4"],
        vec!["hrr", "--n", "3", "--k", "2", "--class", "1", "--with", "3", "--twisted"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn algebraic_subcommands() {
    for args in [
        vec!["verify-compat", "--n", "3", "--k", "1"],
        vec!["verify-compat", "--n", "5", "--k", "2", "--pair", "1,2"],
        vec!["satake-check", "--n", "4", "--k", "2"],
        vec!["schubert", "--n", "4", "--k", "2", "--lambda", "2,1"],
        vec!["quantum-matrix", "--n", "4", "--k", "2", "--basis", "stab"],
        vec!["pairing-table", "--n", "3", "--k", "1", "--basis", "schubert"],
        vec!["gram", "--n", "4", "--k", "2", "--basis", "qdoubleprime", "--ell", "-1"],
        vec!["stokes", "--n", "3", "--k", "2", "--kind", "doubleprime"],
        vec!["mutate", "--braid", "t1 t2^-1"],
        vec!["canonical-check", "--n", "3", "--k", "2"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let _: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    }
    let out = bin().args(["pairing-table", "--n", "3", "--k", "1", "--basis", "schubert"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"], serde_json::json!([["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]));
}
