use std::process::Command;

use proptest::prelude::*;
use snk1_cli::{parse_element, run, EXIT_COMPUTATION, EXIT_OK, EXIT_USER};
use snk1_core::algebra::{to_split, SnElement, SnMonomial};
use snk1_core::{QElement, Scalar, Q};

fn snk1(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["snk1"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_normal_form() {
    let (code, out, _) = snk1(&["eval", "--n", "2", "y1*x1*E(2;0,0)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1 - x2*y2");
    let e = parse_element("E(2;0,0)", Some(2)).unwrap();
    assert_eq!(out.trim(), e.to_string());
}

#[test]
fn syntax_errors_report_offsets() {
    let (code, _, err) = snk1(&["eval", "x1^2*"]);
    assert_eq!(code, EXIT_USER);
    assert!(err.contains("offset 5"), "{err}");
}

#[test]
fn k1_congruence_report() {
    let (code, out, _) = snk1(&["k1", "--n", "3", "--support", "1,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next().unwrap(), "Z^1 x (K*)^2");
    let (_, out, _) = snk1(&["k1", "--n", "4"]);
    assert_eq!(out.lines().next().unwrap(), "K*");
    let (_, out, _) = snk1(&["--json", "k1", "--n", "6"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generator_count"], 49);
}

#[test]
fn verify_paper_passes() {
    let (code, out, _) = snk1(&["verify-paper"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().filter(|l| l.starts_with("pass")).count() >= 20);
    assert!(!out.contains("FAIL"));
    let (_, json, _) = snk1(&["--json", "verify-paper"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v.as_array().unwrap().iter().all(|c| c["status"] == "pass" && c["equation_label"].is_string()));
}

#[test]
fn homomorphism_commands() {
    let (_, out, _) = snk1(&["detI", "--set", "1,3", "1 + 4*e(1,3)"]);
    assert_eq!(out.trim(), "5");
    let (_, out, _) = snk1(&["deg", "--n", "4", "--set", "2,4", "--j", "1", "1 + (x1 - 1)*e(2,4)"]);
    assert_eq!(out.trim(), "1");
    let (_, out, _) = snk1(&["bdet", r#"{"n": 3, "entries": [{"row": 0, "col": 0, "value": "7"}, {"row": 0, "col": 1, "value": "x1"}]}"#]);
    assert_eq!(out.trim(), "7");
    let (_, out, _) = snk1(&["level", "e(1,2)*x3"]);
    assert_eq!(out.trim(), "2");
    let (_, out, _) = snk1(&["laurent", "--drop", "1", "y1^2 + e(1)"]);
    assert_eq!(out.trim(), "x1^-2");
    let (_, out, _) = snk1(&["split", "x1*y1^2"]);
    assert_eq!(out.trim(), "y1 - E(1;0,1)");
    let (_, out, _) = snk1(&["mul", "y1", "x1^2"]);
    assert_eq!(out.trim(), "x1");
    let (_, out, _) = snk1(&["mu", "--n", "2", "--set", "2", "-1/2"]);
    assert_eq!(out.trim(), parse_element("1 - 3/2*e(2)", Some(2)).unwrap().to_string());
    let (_, out, _) = snk1(&["theta", "--n", "2", "--set", "1,2", "1", "2"]);
    assert_eq!(parse_element(out.trim(), Some(2)).unwrap(), snk1_core::group::gen_theta(2, 1, 2, &[1, 2].into()).unwrap());
}

#[test]
fn decomposition_commands() {
    let word = "(1 + 4*e(1,3))";
    let (code, out, _) = snk1(&["decompose", "--support", "1,2", word]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda_1 = 5") && out.contains("elementary = false"), "{out}");
    let (_, json, _) = snk1(&["--json", "decompose", "--support", "1,2", word]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["is_elementary"], false);
    assert_eq!(v["lambda"][0]["value"], "5");
    let (_, out, _) = snk1(&["is-elementary", "--support", "1", "1 + x2*e(1,3)*E(3;0,1)"]);
    assert_eq!(out.trim(), "true");
    let (code, _, _) = snk1(&["decompose", "--support", "1", "1 + e(1)"]);
    assert_eq!(code, EXIT_COMPUTATION);
}

#[test]
fn factor_theta_reports_check() {
    let (code, out, _) = snk1(&["factor-theta", "--n", "4", "--set", "1,2,3", "3", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("check: pass"));
    assert!(!out.contains("theta") && !out.contains("mu"));
}

#[test]
fn user_errors() {
    assert_eq!(snk1(&["eval", "--n", "1", "x2"]).0, EXIT_USER);
    assert_eq!(snk1(&["frobnicate"]).0, EXIT_USER);
    assert_eq!(snk1(&["theta", "--n", "3", "--set", "1,2", "1", "1"]).0, EXIT_USER);
    assert_eq!(snk1(&["bdet", "{"]).0, EXIT_USER);
    assert_eq!(snk1(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_snk1");
    let ok = Command::new(bin).args(["k1", "--n", "3", "--support", "1,2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().next(), Some("Z^1 x (K*)^2"));
    let bad = Command::new(bin).args(["eval", "x1^2*"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let comp = Command::new(bin).args(["bdet", "--n", "2", "1 + x1*E(2;0,0)"]).output().unwrap();
    assert_eq!(comp.status.code(), Some(2));
}

fn scalar() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Q::ratio(p, q))
}

fn element() -> impl Strategy<Value = QElement> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(
            (prop::collection::vec(0u32..=3, n), prop::collection::vec(0u32..=3, n), scalar()),
            0..=5,
        )
        .prop_map(move |ts| {
            ts.into_iter().fold(SnElement::zero(n), |acc, (a, b, c)| {
                &acc + &SnElement::monomial(SnMonomial::new(&a, &b), c)
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_then_parse_is_identity(a in element()) {
        prop_assert_eq!(parse_element(&a.to_string(), Some(a.n())).unwrap(), a.clone());
        let split = to_split(&a).to_string();
        prop_assert_eq!(parse_element(&split, Some(a.n())).unwrap(), a);
    }
}
