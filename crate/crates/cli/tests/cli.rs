//! End-to-end checks of the `oddform` binary: exit codes, file outputs,
//! and byte reproducibility.

use oddform_cli::formfile::{Backend, FormFile, ScalarKind, SystemFile, TermRecord};
use oddform_cli::solve::report_path;
use oddform_core::solver::SolveReport;
use std::fs;
use std::path::Path;
use std::process::Command;

fn oddform() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oddform"))
}

fn fourier_term(k: &[i64], index_set: &[usize], re: &str, im: &str) -> TermRecord {
    TermRecord {
        k: Some(k.to_vec()),
        alpha: None,
        index_set: index_set.to_vec(),
        re: Some(oddform_cli::formfile::ScalarRepr::Str(re.into())),
        im: Some(oddform_cli::formfile::ScalarRepr::Str(im.into())),
        coeff: None,
    }
}

fn empty_form(n: usize, q: i64) -> FormFile {
    FormFile { n, q, backend: Backend::Fourier, scalar: ScalarKind::Rational, terms: vec![] }
}

/// The order-3 system with data f = i·e^{i(x₁+x₂)}(dx¹+dx²), g = 0.
fn worked_system() -> SystemFile {
    SystemFile {
        n: 2,
        q: 0,
        m: 1,
        f: FormFile {
            n: 2,
            q: 1,
            backend: Backend::Fourier,
            scalar: ScalarKind::Rational,
            terms: vec![
                fourier_term(&[1, 1], &[1], "0", "1"),
                fourier_term(&[1, 1], &[2], "0", "1"),
            ],
        },
        g: empty_form(2, -1),
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) {
    fs::write(path, serde_json::to_string_pretty(value).unwrap()).unwrap();
}

#[test]
fn solve_worked_example_writes_half_rational() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("system.json");
    let output = dir.path().join("v.json");
    write_json(&input, &worked_system());

    let status = oddform()
        .args(["solve", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(&output)
        .status()
        .unwrap();
    assert!(status.success());

    let solution: FormFile = serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(solution.q, 0);
    assert_eq!(solution.terms.len(), 1);
    let term = &solution.terms[0];
    assert_eq!(term.k.as_deref(), Some(&[1i64, 1][..]));
    assert_eq!(term.re, Some(oddform_cli::formfile::ScalarRepr::Str("1/2".into())));
    assert_eq!(term.im, Some(oddform_cli::formfile::ScalarRepr::Str("0".into())));

    let report: SolveReport =
        serde_json::from_str(&fs::read_to_string(report_path(&output)).unwrap()).unwrap();
    assert!(report.ok);
    assert_eq!(report.residual_primal, 0.0);
    assert_eq!(report.residual_dual, 0.0);
}

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let output = dir.path().join("v.json");

    // malformed JSON → parse exit code 3
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let status = oddform().args(["solve", "--input"]).arg(&bad).arg("--output").arg(&output).status().unwrap();
    assert_eq!(status.code(), Some(3));

    // constant mode → kernel exit code 5
    let mut kernel_system = worked_system();
    kernel_system.f.terms.push(fourier_term(&[0, 0], &[1], "1", "0"));
    let kernel_path = dir.path().join("kernel.json");
    write_json(&kernel_path, &kernel_system);
    let status =
        oddform().args(["solve", "--input"]).arg(&kernel_path).arg("--output").arg(&output).status().unwrap();
    assert_eq!(status.code(), Some(5));

    // df ≠ 0 → incompatible-data exit code 4
    let mut incompatible = worked_system();
    incompatible.f.terms = vec![fourier_term(&[1, 0], &[2], "1", "0")];
    let incompatible_path = dir.path().join("incompatible.json");
    write_json(&incompatible_path, &incompatible);
    let status = oddform()
        .args(["solve", "--input"])
        .arg(&incompatible_path)
        .arg("--output")
        .arg(&output)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(4));

    // unknown flag → clap usage exit code 2
    let status = oddform().args(["solve", "--no-such-flag"]).status().unwrap();
    assert_eq!(status.code(), Some(2));

    // bad degree range for experiments → usage exit code 2
    let out = dir.path().join("r.csv");
    let status = oddform()
        .args(["ratio", "--n", "2", "--q", "5", "--trials", "1", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn exceptional_degree_warns_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("system.json");
    let output = dir.path().join("v.json");
    // n=2, q=1: f is a 2-form (closed automatically), g a 0-form.
    let system = SystemFile {
        n: 2,
        q: 1,
        m: 0,
        f: FormFile {
            n: 2,
            q: 2,
            backend: Backend::Fourier,
            scalar: ScalarKind::Rational,
            terms: vec![fourier_term(&[1, 0], &[1, 2], "1", "0")],
        },
        g: empty_form(2, 0),
    };
    write_json(&input, &system);
    let out = oddform()
        .args(["solve", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(&output)
        .output()
        .unwrap();
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("q = n−1"), "stderr was: {stderr}");
}

#[test]
fn ratio_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = |path: &Path| {
        let mut cmd = oddform();
        cmd.args([
            "ratio", "--n", "2", "--q", "0", "--m", "1", "--bandwidth", "2", "--trials", "6",
            "--seed", "9", "--format", "csv", "--output",
        ])
        .arg(path);
        cmd
    };
    let first = dir.path().join("a.csv");
    let second = dir.path().join("b.csv");
    assert!(args(&first).status().unwrap().success());
    assert!(args(&second).status().unwrap().success());
    let a = fs::read(&first).unwrap();
    assert_eq!(a, fs::read(&second).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with(
        "seed,n,q,m,bandwidth,norm_f_l1,norm_g_l1,norm_v_sobolev,ratio,flag_q1,flag_qn1\n"
    ));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn ratio_minimal_invocation_yields_one_finite_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one.csv");
    let status = oddform()
        .args([
            "ratio", "--n", "2", "--q", "0", "--m", "0", "--bandwidth", "1", "--trials", "1",
            "--seed", "1", "--output",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    lines.next(); // header
    let row = lines.next().unwrap();
    assert!(lines.next().is_none());
    let ratio: f64 = row.split(',').nth(8).unwrap().parse().unwrap();
    assert!(ratio.is_finite() && ratio > 0.0);
}

#[test]
fn pairing_json_and_csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("p.csv");
    let status = oddform()
        .args([
            "pairing", "--n", "2", "--q", "0", "--bandwidth", "2", "--trials", "4", "--seed",
            "3", "--variant", "ll", "--format", "csv", "--output",
        ])
        .arg(&csv_path)
        .status()
        .unwrap();
    assert!(status.success());
    let text = fs::read_to_string(&csv_path).unwrap();
    assert!(text.starts_with(
        "seed,n,q,variant,bandwidth,pairing_abs,norm_f_l1,norm_dstar_h_ln,norm_grad_h_ln,rhs,empirical_constant\n"
    ));
    assert!(text.lines().nth(1).unwrap().contains(",LL,"));

    let json_path = dir.path().join("p.json");
    let status = oddform()
        .args([
            "pairing", "--n", "2", "--q", "0", "--bandwidth", "2", "--trials", "4", "--seed",
            "3", "--variant", "ll", "--format", "json", "--output",
        ])
        .arg(&json_path)
        .status()
        .unwrap();
    assert!(status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(parsed["records"].as_array().unwrap().len(), 4);
    assert!(parsed["summary"]["sup_constant_ll"].as_f64().unwrap() >= 0.0);
}

#[test]
fn extremize_writes_nondecreasing_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("climb.csv");
    let status = oddform()
        .args([
            "extremize", "--n", "2", "--q", "0", "--m", "0", "--bandwidth", "1", "--steps",
            "10", "--seed", "4", "--output",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = fs::read_to_string(&out).unwrap();
    let ratios: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|line| line.split(',').nth(8).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 10);
    assert!(ratios.windows(2).all(|w| w[1] >= w[0]));
}

#[test]
fn verify_passes_on_small_configuration() {
    let out = oddform()
        .args(["verify", "--n", "2", "--max-m", "2", "--trials", "5", "--seed", "12"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("all identities hold exactly"));
    assert!(stdout.contains("s(n=2, q):"));
}

#[test]
fn verify_zero_trials_vacuous() {
    let status = oddform().args(["verify", "--n", "2", "--trials", "0"]).status().unwrap();
    assert!(status.success());
}
