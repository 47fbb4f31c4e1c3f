mod common;

use std::process::Command;

use common::{errors, schema, validate};

fn fmethod(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_fmethod"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn algebra_text() {
    let (out, code) = fmethod(&["algebra", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("so(7): dim 21, rank 3, positive roots 9, Jacobi OK"), "{out}");
    let (out, code) = fmethod(&["algebra", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim 10"));
}

#[test]
fn algebra_json_validates() {
    let (out, code) = fmethod(&["algebra", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v = validate("structure", &out);
    assert_eq!(v["dim"], 21);
    let (out, _) = fmethod(&["algebra", "--g2", "--format", "json"]);
    let v = validate("structure", &out);
    assert_eq!(v["dim"], 14);
    assert_eq!(v["roots"][5], serde_json::json!([3, 2]));
}

#[test]
fn embedding_commands() {
    let (out, code) = fmethod(&["embedding", "verify"]);
    assert_eq!(code, 0);
    assert!(out.contains("image dim 14, homomorphism OK, lattice 20 arrows match the diagram"));
    let (out, _) = fmethod(&["embedding", "verify", "--format", "json"]);
    validate("embedding", &out);
    let (out, code) = fmethod(&["embedding", "lattice", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("->").count(), 20);
    assert!(out.contains("\"p'(1,0)\" -> \"p(1,0,1)\""));
    let (out, _) = fmethod(&["embedding", "lattice", "--format", "json"]);
    let v = validate("lattice", &out);
    assert_eq!(v["cross_checks"].as_array().unwrap().len(), 4);
    let (out, code) = fmethod(&["embedding", "project", "--weight", "eps1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("psi1"));
    let (out, _) = fmethod(&["embedding", "inject", "--weight", "alpha1", "--format", "json"]);
    let v = validate("weight", &out);
    assert_eq!(v["output"], "eps1 - eps2 + 2*eps3");
}

#[test]
fn parabolic_command() {
    let (out, code) = fmethod(&["parabolic", "--mask", "1,0,0", "--format", "json"]);
    assert_eq!(code, 0);
    let v = validate("parabolic", &out);
    assert_eq!(v["intersection"], "p'(1,0)");
    assert_eq!(v["opposite_commutative"], true);
    let (_, code) = fmethod(&["parabolic", "--mask", "1,2,0"]);
    assert_eq!(code, 3);
}

#[test]
fn hilbert_command() {
    let (out, code) = fmethod(&["hilbert", "--max-degree", "6"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("series vs closed form: MATCH\n"));
    let (out, _) = fmethod(&["hilbert", "--max-degree", "2", "--t", "0"]);
    assert!(out.starts_with("b(0,0) = 1\nb(1,0) = 1\nb(2,0) = 2\n"));
    let (out, _) = fmethod(&["hilbert", "--max-degree", "0", "--format", "json"]);
    let v = validate("hilbert", &out);
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
    assert_eq!(v["entries"][0]["b"], 1);
    let (out, _) = fmethod(&["hilbert", "--max-degree", "3", "--format", "latex"]);
    assert!(out.contains("\\begin{tabular}"));
}

#[test]
fn singular_certificate() {
    let (out, code) = fmethod(&["singular", "--homogeneity", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v = validate("certificate", &out);
    assert_eq!(v["lambda"], "-1/2");
    assert_eq!(v["coefficients"], serde_json::json!(["1", "8", "16"]));
    for k in ["p_prime_singular", "so7_singular", "nonstandard_so7", "nonstandard_g2"] {
        assert_eq!(v["checks"][k], true, "{k}");
    }
    assert_eq!(v["checks"]["weight_eps1"], "-9/2");
}

#[test]
fn singular_odd_is_no_result() {
    let (out, code) = fmethod(&["singular", "--homogeneity", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("no singular vector of homogeneity 3"));
    let (out, code) = fmethod(&["singular", "--homogeneity", "5", "--format", "json"]);
    assert_eq!(code, 1);
    let v = validate("odd", &out);
    assert_eq!(v["found"], false);
}

#[test]
fn singular_scan() {
    let (out, code) = fmethod(&["singular", "--scan", "--max-degree", "8"]);
    assert_eq!(code, 0);
    let expected = "degree 1: lambda none\ndegree 2: lambda -3/2\ndegree 3: lambda none\ndegree 4: lambda -1/2\n\
                    degree 5: lambda none\ndegree 6: lambda 1/2\ndegree 7: lambda none\ndegree 8: lambda 3/2\n";
    assert_eq!(out, expected);
    let (out, _) = fmethod(&["singular", "--scan", "--max-degree", "4", "--format", "json"]);
    validate("scan", &out);
}

#[test]
fn singular_show_operator_and_latex() {
    let (out, _) = fmethod(&["singular", "--homogeneity", "2", "--show-operator"]);
    assert!(out.starts_with("P(lam) = "));
    assert!(out.contains("lam*d1"));
    let (out, _) = fmethod(&["singular", "--homogeneity", "2", "--format", "latex"]);
    assert!(out.contains("4\\xi_{1}\\xi_{4} + 4\\xi_{2}\\xi_{5} + \\xi_{3}^{2}"), "{out}");
}

#[test]
fn oracle_and_verdict() {
    let (out, code) = fmethod(&["oracle", "--degree", "2", "--lambda", "-3/2", "--format", "json"]);
    assert_eq!(code, 0);
    let v = validate("oracle", &out);
    assert_eq!(v["dimension"], 1);
    let (_, code) = fmethod(&["oracle", "--degree", "2", "--lambda", "1/3"]);
    assert_eq!(code, 1);
    let (out, code) = fmethod(&["verdict", "--lambda", "-3/2", "--format", "json"]);
    assert_eq!(code, 0);
    let v = validate("verdict", &out);
    assert_eq!(v["so7_difference"], "2*eps1 - eps3");
    let (_, code) = fmethod(&["verdict", "--lambda", "-3"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_command() {
    let (out, code) = fmethod(&["verify", "--max-n", "2", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let v = validate("verify", &out);
    assert_eq!(v["passed"], true);
}

#[test]
fn malformed_input_is_rejected() {
    assert_eq!(fmethod(&["oracle", "--degree", "2", "--lambda", "0.5"]).1, 3);
    assert_eq!(fmethod(&["oracle", "--degree", "2", "--lambda", "1/0"]).1, 3);
    assert_eq!(fmethod(&["algebra", "--n", "x"]).1, 3);
    assert_eq!(fmethod(&["algebra", "--n", "1"]).1, 3);
    assert_eq!(fmethod(&["embedding", "project", "--weight", "eps9"]).1, 3);
    assert_eq!(fmethod(&["algebra", "--format", "latex"]).1, 3);
}

#[test]
fn output_is_deterministic_and_out_flag_writes_file() {
    let args = ["singular", "--scan", "--max-degree", "6", "--format", "json"];
    let (a, _) = fmethod(&args);
    let (b, _) = fmethod(&args);
    assert_eq!(a, b);
    let dir = std::env::temp_dir().join(format!("fmethod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.json");
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    with_out.extend(["--out", &p]);
    let (stdout, code) = fmethod(&with_out);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn schemas_reject_bad_documents() {
    let (out, code) = fmethod(&["--format", "json", "singular", "--homogeneity", "2"]);
    assert_eq!(code, 0);
    let good: serde_json::Value = serde_json::from_str(&out).unwrap();
    let s = schema("certificate");
    assert!(errors(&s, &good, "").is_empty());

    let mut float_lambda = good.clone();
    float_lambda["lambda"] = serde_json::json!(-0.5);
    assert!(!errors(&s, &float_lambda, "").is_empty());

    let mut decimal_string = good.clone();
    decimal_string["lambda"] = serde_json::json!("-0.5");
    assert!(!errors(&s, &decimal_string, "").is_empty());

    let mut extra = good.clone();
    extra["note"] = serde_json::json!("x");
    assert!(!errors(&s, &extra, "").is_empty());

    let mut missing = good;
    missing.as_object_mut().unwrap().remove("verma_vector");
    assert!(!errors(&s, &missing, "").is_empty());
}
