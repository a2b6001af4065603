use beurling_cli::{run, Outcome, ReportEnvelope};
use serde_json::Value;

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("beurling").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> ReportEnvelope {
    let out = call(args);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn status(env: &ReportEnvelope) -> &str {
    env.result["verdict"]["status"].as_str().unwrap()
}

#[test]
fn su2_central_exponential_point_is_in() {
    let env = ok(&["spectrum", "su2", "--weight", "lenexp(beta=2)", "--point", "diag:1.5,0.6667"]);
    assert_eq!(status(&env), "in");
    assert_eq!(env.result["cross_check"]["status"], "in");
    assert_eq!(env.command[0], "spectrum");
}

#[test]
fn su3_dimension_weight_passes_window_8() {
    let env = ok(&["weight-check", "su3", "--weight", "dim(alpha=1)", "--window", "8"]);
    assert_eq!(env.result["passed"], true);
    assert!(env.result["submultiplicativity"]["checked"].as_u64().unwrap() > 0);
}

#[test]
fn e2_laplacian_point_is_in() {
    let env = ok(&["spectrum", "e2", "--weight", "e2lap(t=1)", "--point", "0.5i,0.5i,e^0.5"]);
    assert_eq!(status(&env), "in");
    assert_eq!(env.result["cross_check"]["status"], "in");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["spectrum", "su2", "--weight", "lenexp(beta=2", "--point", "diag:1,1"]).code, 2);
    assert_eq!(call(&["spectrum", "su3", "--weight", "lapexp(beta=2)", "--point", "diag:2,1,0.5"]).code, 2);
    assert_eq!(call(&["spectrum", "su2", "--weight", "lenexp(beta=2)", "--point", "diag:1.5,0.6"]).code, 2);
    assert_eq!(call(&["nonsense"]).code, 2);
    let edge = ["spectrum", "z1", "--weight", "polyw(s=2)", "--point", "1.0005"];
    assert_eq!(call(&edge).code, 0);
    let mut strict = edge.to_vec();
    strict.push("--strict");
    assert_eq!(call(&strict).code, 3);
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn det_tolerance_is_a_flag() {
    let args = ["spectrum", "su2", "--weight", "lenexp(beta=2)", "--point", "diag:1.5,0.6667"];
    let mut tight = args.to_vec();
    tight.extend(["--det-tol", "1e-10"]);
    assert_eq!(call(&tight).code, 2);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let cases: &[&[&str]] = &[
        &["spectrum", "su2", "--weight", "lenexp(beta=2)", "--point", "diag:1.5,0.6667"],
        &["spectrum", "heis", "--weight", "abelexp(beta1=2,beta2=3)", "--point", "0.2i,0.5i,1", "--jobs", "3"],
        &["regularity", "--weight", "shilov()", "--point", "1.02"],
        &["fourier", "heis", "--a", "-0.5", "--basis", "4"],
        &["fusion", "su3", "--a", "1,1", "--branch"],
        &["fusion", "rheis", "--left", "pi^3", "--right", "chi(1,2)"],
        &["tableaux", "su3", "--lambda", "2,1", "--point", "diag:2,1,0.5"],
        &["norm", "su4", "--a", "1,0,2", "--point", "diag:2,1i,-1,0.5i"],
    ];
    for args in cases {
        let a = call(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a, call(args), "{args:?}");
        let env: ReportEnvelope = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(env.to_json(), a.stdout);
        assert!(!a.stdout.contains("NaN") && !a.stdout.contains("inf"));
    }
}

#[test]
fn csv_output_lists_leaves() {
    let out = call(&["fusion", "su2", "--a", "2", "--b", "1", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("path,value"));
    assert!(out.stdout.contains("result.components.1.label,SU(2)[3]"));
    assert!(out.stdout.contains("result.total_dimension,6"));
}

#[test]
fn fusion_rules() {
    let env = ok(&["fusion", "su2", "--a", "3", "--b", "2"]);
    let labels: Vec<&str> = env.result["components"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["SU(2)[1]", "SU(2)[3]", "SU(2)[5]"]);
    let env = ok(&["fusion", "rheis", "--left", "pi^2", "--right", "pi^-2"]);
    assert_eq!(env.result["label"], "pi^0");
    assert_eq!(env.result["plancherel_atom"], Value::Null);
    let env = ok(&["fusion", "e2", "--r", "1", "--s", "2.5"]);
    assert_eq!(env.result["direct_integral_over"], serde_json::json!([1.5, 3.5]));
}

#[test]
fn binary_exit_code_matches_run() {
    let bin = env!("CARGO_BIN_EXE_beurling");
    let status = std::process::Command::new(bin)
        .args(["spectrum", "z1", "--weight", "polyw(s=2)", "--point", "1.0005", "--strict"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    let out = std::process::Command::new(bin).args(["tableaux", "su2", "--a", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let env: ReportEnvelope = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(env.result["count"], 3);
}
