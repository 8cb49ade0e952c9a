use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclotome"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn describe_a1() {
    let out = run(&["describe", "--type", "A1"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("h=2"));
    assert!(s.contains("|σÎ|=2"));
    assert!(s.contains("K'1   1            L(S1; σS1,σΣS1)"));
}

#[test]
fn lift_recovers_projective() {
    let out = run(&["lift", "--type", "A2", "--wtilde", "sigma(P2)=1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(S1; σS1,σS2)");
}

#[test]
fn verify_all_passes_on_a2() {
    let out = run(&["verify", "all", "--type", "A2", "--orientation", "alternating"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().last().unwrap().ends_with("checks passed"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn json_outputs_carry_schema() {
    for args in [
        &["describe", "--type", "D4", "--json"][..],
        &["verify", "serre", "--type", "A3", "--json"],
        &["enumerate", "--type", "A2", "--w", "σS1,σΣS1", "--json"],
        &["serre-dims", "--type", "A2", "--maxdeg", "3", "--json"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["schema"], 1, "{args:?}");
    }
}

#[test]
fn enumerate_cartan_weight() {
    let out = run(&["enumerate", "--type", "A1", "--w", "σS1,σΣS1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["v"], serde_json::json!(["0", "S1", "ΣS1"]));
}

#[test]
fn forms_on_generators() {
    let out = run(&[
        "forms",
        "--type",
        "A2",
        "--pair",
        "ΣS1,ΣP2; σS1,σΣS1",
        "--pair",
        "0; σS1",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["l_dominant"], serde_json::json!([true, true]));
}

#[test]
fn dot_outputs_are_graphs() {
    let ar = stdout(&run(&["ar-quiver", "--type", "A3", "--dot"]));
    assert!(ar.starts_with("digraph ar {") && ar.contains("style=dashed"));
    let rep = stdout(&run(&["rep-space", "--type", "A2", "--v", "S1", "--w", "σS1,σS2", "--dot"]));
    assert!(rep.starts_with("digraph rep {") && rep.contains("label=\"α\""));
}

#[test]
fn orientation_from_file() {
    let dir = std::env::temp_dir().join(format!("cyclotome-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.quiver");
    let spec = cyclotome::DynkinQuiver::from_arrows(3, vec![(0, 1), (2, 1)]).unwrap().to_spec();
    std::fs::write(&path, spec).unwrap();
    let arg = format!("file:{}", path.display());
    let out = run(&["describe", "--orientation", &arg]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("type: A3"));
    let wrong = run(&["describe", "--type", "D4", "--orientation", &arg]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["describe", "--type", "A2", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["describe", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(run(&["describe"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--type", "A2", "--w", "S1"]).status.code(), Some(2));
    assert_eq!(run(&["forms", "--type", "A2", "--pair", "0; σS1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "ek", "--type", "D4", "--markdown"]);
    let b = run(&["verify", "ek", "--type", "D4", "--markdown"]);
    assert_eq!(a.stdout, b.stdout);
}
