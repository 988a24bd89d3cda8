use std::process::{Command, Output};

use serde_json::Value;
use superqa::scalar::LaurentInt;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superqa"))
        .args(args)
        .env_remove("SUPERQA_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_rank_two() {
    let v = json(&["classify", "--r", "2", "--J", "1,2", "--N", "4"]);
    assert_eq!(v["report"]["ribbon_count"], 4);
    assert_eq!(v["ribbon_pairs"].as_array().unwrap().len(), 4);
    let v = json(&["classify", "--r", "3", "--J", "1", "--N", "4"]);
    assert_eq!(v["report"]["ribbon_count"], 0);
}

#[test]
fn trefoil_invariant() {
    let o = run(&["invariant", "--knot", "3_1"]);
    assert_eq!(o.status.code(), Some(0));
    let value: LaurentInt = stdout(&o).trim().parse().unwrap();
    assert_eq!(value, "2*q^2+4*q+3".parse().unwrap());
    assert_eq!(
        stdout(&run(&["invariant", "--knot", "trefoil"])),
        stdout(&o)
    );
    let v = json(&["invariant", "--knot", "3_1"]);
    assert_eq!(v["matches"], true);
    let o = run(&["--format", "latex", "invariant", "--knot", "3_1"]);
    assert_eq!(stdout(&o).trim(), "2q^{2}+4q+3");
}

#[test]
fn invariant_of_braid_word() {
    let o = run(&["invariant", "--braid", "-1,-1,-1", "--strands", "2"]);
    let value: LaurentInt = stdout(&o).trim().parse().unwrap();
    assert_eq!(value, "3+4q^-1+2q^-2".parse().unwrap());
    let o = run(&[
        "invariant",
        "--braid",
        "1,-2,1,-2",
        "--strands",
        "3",
        "--cut",
        "2",
    ]);
    let value: LaurentInt = stdout(&o).trim().parse().unwrap();
    assert_eq!(value, "6q+13+6q^-1".parse().unwrap());
}

#[test]
fn invariant_at_root_of_unity() {
    for n in ["8", "12"] {
        let v = json(&[
            "invariant",
            "--knot",
            "4_1",
            "--backend",
            "root-of-unity",
            "--N",
            n,
        ]);
        assert_eq!(v["matches"], true);
        assert_eq!(v["invariant"], v["expected"]);
    }
}

#[test]
fn fundamental_simple_module() {
    let v = json(&["module", "--simple", "1,0", "--N", "4"]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["qdim"], "-1");
    assert_eq!(v["character"].as_array().unwrap().len(), 3);
    let o = run(&["module", "--simple", "1,0", "--N", "4"]);
    let text = stdout(&o);
    assert!(text.contains("dim 3"));
    assert!(text.contains("qdim -1"));
}

#[test]
fn default_order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_superqa"))
        .args(["--format", "json", "module", "--simple", "1,0"])
        .env("SUPERQA_N", "4")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["N"], 4);
    assert_eq!(json(&["module", "--simple", "1,0"])["N"], 8);
}

#[test]
fn grothendieck_and_tensor_agree() {
    let g = json(&["grothendieck", "l10", "l30", "--N", "4"]);
    assert_eq!(g["product"], "l00 + 2l03t + l02t^2 + l00t^8");
    let t = json(&["tensor", "L(1,0)", "L(3,0)", "--N", "4"]);
    assert_eq!(t["symbol"], g["product"]);
    assert_eq!(t["dim"], 21);
}

#[test]
fn standard_module_composition() {
    let v = json(&["module", "--standard", "1,0", "--N", "4"]);
    assert_eq!(v["dim"], 16);
    assert_eq!(v["composition_factors"].as_array().unwrap().len(), 4);
}

#[test]
fn rmatrix_shapes() {
    for backend in ["symbolic", "root-of-unity"] {
        let v = json(&["rmatrix", "--backend", backend]);
        assert_eq!(v["braiding"].as_array().unwrap().len(), 9);
        assert_eq!(v["twist_first"], "1");
        let v = json(&["rmatrix", "--first", "w", "--backend", backend]);
        assert_eq!(v["braiding"].as_array().unwrap().len(), 16);
        assert_eq!(v["twist_first"], "-1");
    }
    let v = json(&["rmatrix", "--backend", "symbolic"]);
    assert_eq!(v["braiding"][1][1], "-1+1*q^-1");
    let v = json(&[
        "rmatrix",
        "--first",
        "L(1,0)",
        "--second",
        "L(0,1)",
        "--backend",
        "root-of-unity",
        "--N",
        "4",
    ]);
    assert_eq!(v["dims"], serde_json::json!([3, 3]));
}

#[test]
fn skein_summary() {
    let v = json(&["skein", "--max-b", "8", "--direct-b", "4"]);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["report"]["end_dim"], 3);
    assert_eq!(v["torus"].as_array().unwrap().len(), 8);
}

#[test]
fn knot_table_matches() {
    let o = run(&["knot-table"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["knot-table"]);
    assert_eq!(v["evaluated"], 19);
    assert_eq!(v["matched"], 19);
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn knot_table_reports_mismatch() {
    let dir = std::env::temp_dir().join(format!("superqa-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("golden.json");
    std::fs::write(
        &path,
        r#"[{"name": "3_1", "aliases": [], "strands": 2, "word": [1, 1, 1], "expected": "1", "status": "table"}]"#,
    )
    .unwrap();
    let o = run(&["knot-table", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("mismatch"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["module", "--simple", "1,0", "--N", "5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["invariant", "--braid", "1,x", "--strands", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["invariant", "--knot", "no_such_knot"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["classify", "--bogus"]).status.code(), Some(1));
    assert_eq!(
        run(&["knot-table", "--golden", "/nonexistent/golden.json"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["invariant", "--tangle", "/nonexistent/t.json"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn json_round_trips() {
    for args in [
        &["classify", "--N", "6"][..],
        &["module", "--standard", "0,1", "--N", "4"],
        &["invariant", "--knot", "5_2"],
        &["grothendieck", "l20", "l03", "--N", "4"],
    ] {
        let v = json(args);
        let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(back, v);
    }
}

#[test]
fn tangle_file_invariant() {
    let dir = std::env::temp_dir().join(format!("superqa-tangle-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let curl = dir.join("curl.json");
    std::fs::write(
        &curl,
        r#"[[{"id": "up"}, {"cup": "coev"}],
            [{"x": "pos", "orient": ["up", "up"]}, {"id": "down"}],
            [{"id": "up"}, {"cap": "ev_right"}]]"#,
    )
    .unwrap();
    let o = run(&["invariant", "--tangle", curl.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"[[{"id": "up"}, {"id": "up"}]]"#).unwrap();
    assert_eq!(
        run(&["invariant", "--tangle", bad.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
