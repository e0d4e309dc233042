use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use singular_gt::error::Result;
use singular_gt::exact_arith::{Rational, RationalFunction1};
use singular_gt::generic_module::GenericModule;
use singular_gt::gt_formulas::coeff_e;
use singular_gt::singular_module::SingularModule;
use singular_gt::tableaux::{SingularFrame, Tableau};
use singular_gt::verify::commutators::bracket_sweep;
use singular_gt::verify::export::{export_action, write_export, ExportedAction, Operator};
use singular_gt::verify::report::{Tally, VerificationReport};
use singular_gt::verify::{run_suite, window_shifts, Config};

fn configs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn hypothesis_frame() -> SingularFrame {
    SingularFrame::new(2, 1, 2, "(0,2/5,9/7|1/3,1/3|1/11)".parse().unwrap()).unwrap()
}

/// The standard coefficients with the sign of `e_23` flipped.
fn corrupted(r: usize, s: usize, w: &Tableau) -> Result<RationalFunction1> {
    let c = coeff_e(r, s, w)?;
    Ok(if (r, s) == (2, 3) { -&c } else { c })
}

#[test]
fn corrupted_sign_is_caught_on_the_singular_module() {
    let m = SingularModule::with_rule(hypothesis_frame(), corrupted);
    let mut t = Tally::new("mutation", "", 1, 0);
    bracket_sweep(&mut t, &m, &m.window_symbols(1));
    let r = t.finish();
    assert!(r.failed > 0);
    assert!(!r.exemplars.is_empty());
    assert!(r.exemplars[0].input.contains("E_23"), "{:?}", r.exemplars[0]);
    assert_ne!(r.exemplars[0].lhs, r.exemplars[0].rhs);
}

#[test]
fn corrupted_sign_is_caught_on_the_generic_module() {
    let m = GenericModule::with_rule("(0,1/3,2/3|1/5,1/7|1/2)".parse().unwrap(), corrupted).unwrap();
    let mut t = Tally::new("mutation", "", 1, 0);
    bracket_sweep(&mut t, &m, &window_shifts(3, 1));
    assert!(!t.finish().passes());
}

#[test]
fn reports_are_reproducible() {
    let cfg = Config::load(&configs().join("hypothesis.toml")).unwrap();
    for suite in ["gamma", "witnesses"] {
        let a = run_suite(suite, &cfg).unwrap().without_timing();
        let b = run_suite(suite, &cfg).unwrap().without_timing();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(a.seed, cfg.seed);
    }
    let mut other = cfg.clone();
    other.seed += 1;
    let a = run_suite("gamma", &cfg).unwrap();
    let b = run_suite("gamma", &other).unwrap();
    assert_eq!(b.seed, cfg.seed + 1);
    assert!(a.passes() && b.passes());
}

fn verify() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verify"))
}

#[test]
fn cli_runs_a_suite_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let out = verify()
        .args(["gamma", "--window", "1", "--no-timing", "--config"])
        .arg(configs().join("all_equal.toml"))
        .arg("--json")
        .arg(&json)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    let text = std::fs::read_to_string(&json).unwrap();
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!((report.suite.as_str(), report.window, report.failed), ("gamma", 1, 0));
    assert_eq!(report.elapsed_ms, None);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["suite", "frame", "window", "checked", "passed", "failed", "exemplars", "seed", "elapsed_ms"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }

    // same inputs, same bytes
    let again = dir.path().join("again.json");
    let out = verify()
        .args(["gamma", "--window", "1", "--no-timing", "--config"])
        .arg(configs().join("all_equal.toml"))
        .arg("--json")
        .arg(&again)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read(&json).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn cli_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "n = 3\nframe = [2,1,2]\nvbar = \"(0,0,0|0,1/2|0)\"\n").unwrap();
    let out = verify().args(["commutators", "--config"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = verify().args(["n3", "--config"]).arg(configs().join("hypothesis.toml")).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "n3 needs the all-equal frame");

    let out = verify().args(["gamma", "--config", "/nonexistent.toml"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_all_uses_the_config_suite_list() {
    let out = verify()
        .args(["all", "--window", "1", "--config"])
        .arg(configs().join("generic.toml"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().filter(|l| l.ends_with("PASS")).collect();
    assert_eq!(lines.len(), 3, "{stdout}");
}

#[test]
fn export_round_trip_and_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let out = verify()
        .args(["export", "--window", "1", "--config"])
        .arg(configs().join("hypothesis.toml"))
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path = dir.path().join("matrices.json");
    let first = ExportedAction::read(&path).unwrap();
    assert_eq!(first.basis.len(), 27);
    assert!(first.matrices.iter().all(|m| m.entries.iter().all(|e| e.value.contains('/'))));

    // re-export of the imported data is byte-identical
    let again = tempfile::tempdir().unwrap();
    let path2 = write_export(&first, again.path()).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&path2).unwrap());
    assert_eq!(ExportedAction::read(&path2).unwrap(), first);
}

#[test]
fn e11_is_diagonal_on_the_generic_window() {
    let m = GenericModule::new("(0,1/3,2/3|1/5,1/7|1/2)".parse().unwrap()).unwrap();
    let basis = window_shifts(3, 1);
    let ex = export_action(&m, "generic".into(), 1, &basis, &[Operator::Generator(1, 1)]).unwrap();
    let e11 = ex.matrix("E_11").unwrap();
    assert_eq!(e11.dropped, 0);
    assert_eq!(e11.entries.len(), basis.len());
    assert!(e11.entries.iter().all(|e| e.row == e.col));
}

#[test]
fn c22_is_block_diagonal_with_jordan_pairs() {
    let m = SingularModule::new(hypothesis_frame());
    let basis = m.window_symbols(1);
    let ex = export_action(&m, "hypothesis".into(), 1, &basis, &[Operator::Casimir(2, 2)]).unwrap();
    let c22 = ex.matrix("c_22").unwrap().to_map().unwrap();

    // group basis positions by character
    let mut classes: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (idx, b) in basis.iter().enumerate() {
        classes.entry(m.character(&b.z).unwrap()).or_default().push(idx);
    }
    let class_of: BTreeMap<usize, &Vec<Rational>> =
        classes.iter().flat_map(|(c, members)| members.iter().map(move |&i| (i, c))).collect();
    for &(row, col) in c22.keys() {
        assert_eq!(class_of[&row], class_of[&col], "c_22 mixes characters at ({row},{col})");
    }
    let mut jordan = 0;
    for members in classes.values() {
        assert!(members.len() <= 2);
        if let [a, b] = members[..] {
            let off = c22.get(&(a, b)).or_else(|| c22.get(&(b, a)));
            assert!(off.is_some(), "pair without Jordan coupling");
            assert_eq!(c22.get(&(a, a)), c22.get(&(b, b)));
            assert!(!(c22.contains_key(&(a, b)) && c22.contains_key(&(b, a))));
            jordan += 1;
        }
    }
    assert!(jordan > 0);
}
