use std::process::{Command, Output};

use serde_json::Value;

fn qmock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args(args)
        .env_remove("QMOCK_DEFAULT_ORDER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn expand_omega_text() {
    let o = qmock(&["expand", "omega", "--order", "8"]);
    assert!(o.status.success());
    let want = "(1)*q^0\n(2)*q^1\n(3)*q^2\n(4)*q^3\n(6)*q^4\n(8)*q^5\n(10)*q^6\n(14)*q^7\n(18)*q^8\nO(q^9)\n";
    assert_eq!(stdout(&o), want);
}

#[test]
fn expand_json_round_trips_through_the_library() {
    let o = qmock(&[
        "expand", "nu_tri", "--args", "a=a,z=z", "--order", "6", "--format", "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schema"], "qmock/1");
    let s = qmock::ring::QSeries::from_json(&v["series"]).unwrap();
    let direct = qmock::mock::MockSpec::new(
        qmock::mock::Family::NuTri,
        vec![qmock::ring::Monomial::a(), qmock::ring::Monomial::z()],
    )
    .build(6)
    .unwrap();
    assert_eq!(s, direct);
}

#[test]
fn expand_at_minus_q_matches_q_negation() {
    let plus = qmock(&["expand", "nu", "--order", "12"]);
    let minus = qmock(&["expand", "nu", "--order", "12", "--qsign", "-1"]);
    let p: qmock::ring::QSeries = stdout(&plus).parse().unwrap();
    let m: qmock::ring::QSeries = stdout(&minus).parse().unwrap();
    assert_eq!(p.q_negate(), m);
}

#[test]
fn expand_classical_prints_both_sides() {
    let o = qmock(&[
        "expand", "euler", "--args", "z=z", "--order", "6", "--format", "json",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["lhs"], v["rhs"]);
}

#[test]
fn exit_codes() {
    assert_eq!(qmock(&["expand", "bogus"]).status.code(), Some(2));
    assert_eq!(
        qmock(&["expand", "omega_bi", "--args", "z=2*"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qmock(&["expand", "g3", "--args", "x=z"]).status.code(),
        Some(3)
    );
    assert_eq!(
        qmock(&["verify", "--id", "THM3", "--order", "5"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(qmock(&["verify", "--id", "NOPE"]).status.code(), Some(2));
    assert_eq!(qmock(&["verify"]).status.code(), Some(2));
    assert_eq!(qmock(&["enumerate", "p_bogus", "3"]).status.code(), Some(2));
    assert_eq!(
        qmock(&["verify", "--id", "PW", "--order", "10", "--perturb", "PW:4"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_single_entries() {
    let o = qmock(&["verify", "--id", "THM3", "--order", "40", "--stable"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("THM3"));
    let o = qmock(&[
        "verify",
        "--id",
        "JTP_PRINTED",
        "--order",
        "10",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let r = &json(&o)["reports"][0];
    assert_eq!(r["status"], "expected-fail");
    assert_eq!(r["first_mismatch"]["q_exp"], 2);
    assert!(r["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_is_deterministic_across_worker_counts() {
    let one = qmock(&[
        "verify",
        "--all",
        "--order",
        "12",
        "--workers",
        "1",
        "--format",
        "json",
        "--stable",
    ]);
    let eight = qmock(&[
        "verify",
        "--all",
        "--order",
        "12",
        "--workers",
        "8",
        "--format",
        "json",
        "--stable",
    ]);
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
    let v = json(&one);
    let ids: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    let want: Vec<&str> = qmock::registry::catalog().iter().map(|e| e.id).collect();
    assert_eq!(ids, want);
    let text1 = qmock(&["verify", "--all", "--order", "12", "--stable"]);
    let text4 = qmock(&[
        "verify",
        "--all",
        "--order",
        "12",
        "--workers",
        "4",
        "--stable",
    ]);
    assert_eq!(text1.stdout, text4.stdout);
}

#[test]
fn default_order_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args(["expand", "omega"])
        .env("QMOCK_DEFAULT_ORDER", "3")
        .output()
        .unwrap();
    assert!(stdout(&o).ends_with("O(q^4)\n"));
    let o = Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args(["verify", "--id", "PW", "--format", "json"])
        .env("QMOCK_DEFAULT_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(json(&o)["reports"][0]["order"], 7);
    let o = Command::new(env!("CARGO_BIN_EXE_qmock"))
        .args(["expand", "omega"])
        .env("QMOCK_DEFAULT_ORDER", "x")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_and_crosscheck() {
    let o = qmock(&["enumerate", "p_star", "5", "--list"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p_star(5) = 17");
    assert_eq!(lines.len(), 18);
    assert!(lines.contains(&"5~"));
    assert!(lines.contains(&"3+1+1+0~"));
    assert_eq!(
        stdout(&qmock(&["enumerate", "p_prime", "5"])),
        "p_prime(5) = 4\n"
    );
    let o = qmock(&[
        "enumerate",
        "overpartitions",
        "3",
        "--list",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["count"], 8);
    assert_eq!(v["items"].as_array().unwrap().len(), 8);
    assert!(qmock(&["crosscheck", "p_omega", "--max-n", "25"])
        .status
        .success());
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("qmock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.json");
    let o = qmock(&["catalog", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v, qmock::registry::full_catalog());
    std::fs::remove_dir_all(&dir).unwrap();
}
