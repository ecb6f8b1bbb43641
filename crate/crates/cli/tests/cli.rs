use std::process::{Command, Output};

use serde_json::Value;

const TYPE_TWO_WORD: &str =
    "s1 s2 s5 s4 s3 s5 s2 s3 s1 s2 s2 s3 s4 s5 s5 s4^2 s5 s3 s4^2 s3 s4 s2 s3 s4^2 s3";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidmon")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).expect("json report");
    (v, o.status.code().unwrap())
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn eval_generic_triangle_is_full_twist() {
    let (v, code) = json(&["eval", "-n", "3", "Z[1,2]^2 Zb[1,3]^2 Z[2,3]^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["normal_form"], "D^2");
    assert_eq!(v["result"]["exponent_sum"], 6);
    assert_eq!(v["operation"], "eval");
    assert!(v["timing_ms"].is_f64());
}

#[test]
fn eval_conjugated_half_twist() {
    let (v, code) = json(&["eval", "-n", "4", "Z[1,2]^{Z[2,4]^2 Z[2,3]^2}"]);
    assert_eq!(code, 0);
    let letters: Vec<i64> =
        v["result"]["reduced"]["letters"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(letters, vec![-2, -3, -3, -2, 1, 2, 3, 3, 2]);
}

#[test]
fn eval_empty_is_identity() {
    let (v, code) = json(&["eval", "-n", "3", ""]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["normal_form"], "D^0");
    assert_eq!(v["result"]["permutation"], "(1)(2)(3)");
}

#[test]
fn closure_of_hopf_square() {
    let (v, code) = json(&["closure", "-n", "2", "s1 s1 s1 s1"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["component_count"], 2);
    assert_eq!(r["linking_matrix"][0][1], 2);
    assert!(r["atlas_match"].as_str().unwrap().contains("L4a1"));
    let text = stdout(&run(&["closure", "-n", "2", "s1^4"]));
    assert!(text.contains("L4a1"), "{text}");
}

#[test]
fn engines_agree_on_jones() {
    let word = "s1^3 s2^-1 s1 s2^2 s1^-1 s2";
    let (a, code) = json(&["jones", "-n", "3", word]);
    assert_eq!(code, 0);
    let (b, _) = json(&["jones", "-n", "3", word, "--engine", "state-sum"]);
    assert!(a["result"]["jones"].as_object().is_some_and(|m| !m.is_empty()));
    assert_eq!(a["result"]["jones"], b["result"]["jones"]);
}

#[test]
fn closure_of_two_diagonal_word() {
    let (v, code) = json(&["closure", "-n", "6", TYPE_TWO_WORD]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["component_count"], 4);
}

#[test]
fn eq_exit_codes() {
    assert_eq!(run(&["eq", "-n", "3", "s1 s2 s1", "s2 s1 s2"]).status.code(), Some(0));
    assert_eq!(run(&["eq", "-n", "3", "s1 s2 s1", "s2 s1 s2", "--method", "artin"]).status.code(), Some(0));
    assert_eq!(run(&["eq", "-n", "3", "s1", "s2"]).status.code(), Some(1));
    assert_eq!(run(&["eq", "-n", "3", "s1", "s1", "--method", "guess"]).status.code(), Some(2));
}

#[test]
fn cable_reports_blackboard_framing() {
    let (v, code) = json(&["cable", "-n", "2", "s1^4", "--component", "1", "--twists", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["word"]["strands"], 3);
    assert_eq!(v["result"]["summary"]["component_count"], 2);
    assert_eq!(run(&["cable", "-n", "2", "s1^4", "--component", "3"]).status.code(), Some(2));
}

#[test]
fn suite_filter_selects_rows() {
    let (v, code) = json(&["suite", "--filter", "conic-line"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 2);
    let (v, code) = json(&["suite", "--filter", "none-matching"]);
    assert_eq!(code, 0);
    assert!(v["result"]["rows"].as_array().unwrap().is_empty());
}

#[test]
fn suite_order_does_not_depend_on_jobs() {
    let (one, _) = json(&["suite", "--filter", "product", "--jobs", "1"]);
    let (four, _) = json(&["suite", "--filter", "product", "--jobs", "4"]);
    assert_eq!(one["result"], four["result"]);
}

#[test]
fn regen_builtins() {
    let (v, code) = json(&["regen", "2pt-A"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["stated_product_equal"], true);
    assert_eq!(v["result"]["summary"]["component_count"], 2);
    let (v, code) = json(&["regen", "3pt-type2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["exponent_sum"], 28);
    assert_eq!(v["result"]["stated_product_equal"], false);
    assert_eq!(v["result"]["summary"]["component_count"], 4);
}

#[test]
fn regen_files() {
    let dir = std::env::temp_dir().join(format!("braidmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let five = dir.join("five.json");
    std::fs::write(
        &five,
        r#"{"name":"five","strands":5,
            "components":[{"kind":"line","label":"a","strands":[1]},{"kind":"line","label":"b","strands":[2]},
                          {"kind":"line","label":"c","strands":[3]},{"kind":"line","label":"d","strands":[4]},
                          {"kind":"line","label":"e","strands":[5]}],
            "singularities":[{"type":"multipoint","k":5,"incident":["a","b","c","d","e"],"expr":"Z[1,2,3,4,5]^2"}]}"#,
    )
    .unwrap();
    let (v, code) = json(&["regen", five.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "unsupported");

    let diagram = dir.join("diagram.json");
    std::fs::write(
        &diagram,
        r#"{"vertices":[[0,0],[1,0],[2,0],[0,1],[1,1],[2,1]],"edges":[[0,4,"diag"],[1,4,"vert"],[1,5,"diag"]]}"#,
    )
    .unwrap();
    let (v, code) = json(&["regen", diagram.to_str().unwrap()]);
    assert_eq!(code, 0);
    let configs: Vec<&str> =
        v["result"]["vertices"].as_array().unwrap().iter().filter_map(|r| r["configuration"].as_str()).collect();
    assert_eq!(configs, vec!["2pt-B", "2pt-A"]);

    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{ not json").unwrap();
    assert_eq!(run(&["regen", broken.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["nf", "-n", "3", "s1 s9"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "-n", "3", "Z[1,2"]).status.code(), Some(2));
    assert_eq!(run(&["regen", "no-such-configuration"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["eval", "-n", "4", "Z[1 1',2 2']^2"],
        vec!["closure", "-n", "3", "s1^3 s2^-1 s1 s2^2"],
        vec!["regen", "two-conics-A"],
    ] {
        let (a, _) = json(&args);
        let (b, _) = json(&args);
        assert_eq!(strip_timing(a), strip_timing(b));
    }
}
