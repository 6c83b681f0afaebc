//! Black-box tests of the command-line interface: output formats, the
//! stdin/stdout graph6 pipeline, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn trifree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn trifree_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    stdout_of(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

#[test]
fn construct_prints_graph6() {
    let out = trifree(&["construct", "chain:2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "Dhc");
    let out = trifree(&["construct", "w13"]);
    assert!(out.status.success());
    let line = stdout_of(&out);
    let g = trifree::graph6::decode(line.trim()).unwrap();
    assert_eq!(g.vertex_count(), 13);
    assert_eq!(g.edge_count(), 26);
}

#[test]
fn construct_rejects_bad_parameters() {
    let out = trifree(&["construct", "bicycle:3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trifree(&["construct", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trifree(&["construct", "loopchain:4:1:blob"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_reports_invariants() {
    let out = trifree_with_stdin(&["analyze"], "Dhc\n");
    assert!(out.status.success());
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0]["n"], 5);
    assert_eq!(docs[0]["e"], 5);
    assert_eq!(docs[0]["alpha"], 2);
    assert_eq!(docs[0]["t"], 1);
    assert_eq!(docs[0]["q"], 0);
    assert_eq!(docs[0]["girth"], 5);
    assert_eq!(docs[0]["delta"], 2);
    assert_eq!(docs[0]["triangle_free"], true);
    assert_eq!(docs[0]["components"], 1);
    assert_eq!(docs[0]["degree_histogram"]["2"], 5);
}

#[test]
fn analyze_w13_values() {
    let w13 = stdout_of(&trifree(&["construct", "w13"]));
    let out = trifree_with_stdin(&["analyze"], &w13);
    let docs = json_lines(&out);
    assert_eq!(docs[0]["t"], 0);
    assert_eq!(docs[0]["q"], 1);
    assert_eq!(docs[0]["alpha"], 4);
}

#[test]
fn analyze_flags_bad_lines_but_continues() {
    let out = trifree_with_stdin(&["analyze"], "Dhc\n~~~broken\n@\n");
    assert_eq!(out.status.code(), Some(1));
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 3);
    assert!(docs[1]["error"].is_string());
    assert_eq!(docs[1]["line"], 2);
    assert_eq!(docs[2]["n"], 1);
}

#[test]
fn classify_pipeline() {
    let bicycle = stdout_of(&trifree(&["construct", "bicycle:4"]));
    let out = trifree_with_stdin(&["classify"], &bicycle);
    assert!(out.status.success());
    let docs = json_lines(&out);
    assert_eq!(docs[0]["class"], "Gamma");
    assert_eq!(docs[0]["components"][0]["verdict"], "Bicycle");
    assert_eq!(docs[0]["components"][0]["params"]["k"], 4);
    assert_eq!(docs[0]["theorem_consistent"], true);

    let lc = stdout_of(&trifree(&["construct", "loopchain:4:2:star"]));
    let out = trifree_with_stdin(&["classify"], &lc);
    let docs = json_lines(&out);
    assert_eq!(docs[0]["class"], "GammaPrime");
    assert_eq!(docs[0]["components"][0]["verdict"], "LoopChain");
    assert_eq!(docs[0]["components"][0]["params"]["attachment"], "star");

    // the Petersen graph is triangle-free but in neither class
    let petersen = trifree::graph6::encode(
        &trifree::graph::Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap(),
    )
    .unwrap();
    let out = trifree_with_stdin(&["classify"], &format!("{petersen}\n"));
    let docs = json_lines(&out);
    assert_eq!(docs[0]["class"], "Neither");
    assert_eq!(docs[0]["t"], 7);
    assert_eq!(docs[0]["theorem_consistent"], true);

    // triangles are per-line errors
    let k3 = trifree::graph6::encode(
        &trifree::graph::Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
    )
    .unwrap();
    let out = trifree_with_stdin(&["classify"], &format!("{k3}\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(json_lines(&out)[0]["error"].is_string());
}

#[test]
fn destabilizer_catalogs() {
    let w13 = stdout_of(&trifree(&["construct", "w13"]));
    let out = trifree(&["destabilizers", w13.trim(), "--max-size", "4"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["sets"].as_array().unwrap().len(), 0);

    let bc4 = stdout_of(&trifree(&["construct", "bicycle:4"]));
    let out = trifree(&["destabilizers", bc4.trim(), "--max-size", "4"]);
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["sets"].as_array().unwrap().len(), 16);
    assert_eq!(doc["max_size"], 4);

    let ch4 = stdout_of(&trifree(&["construct", "chain:4"]));
    let out = trifree(&["destabilizers", ch4.trim(), "--max-size", "3"]);
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["sets"].as_array().unwrap().len(), 4);
}

#[test]
fn generate_streams_graph6() {
    let out = trifree(&["generate", "--n", "5", "--workers", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 14);
    for line in &lines {
        let g = trifree::graph6::decode(line).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(g.is_triangle_free());
    }
    let constrained = trifree(&[
        "generate",
        "--n",
        "5",
        "--alpha-less-than",
        "3",
        "--workers",
        "1",
    ]);
    assert_eq!(stdout_of(&constrained).lines().count(), 1);
}

#[test]
fn enumber_reports() {
    let out = trifree(&["enumber", "--j", "5", "--n", "12", "--workers", "1"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["finite"], true);
    assert_eq!(doc["value"], 20);
    // the 4-bicycle is one of the extremal graphs
    let bc4 = trifree::families::bicycle(4).unwrap();
    let hit = doc["realisers"].as_array().unwrap().iter().any(|r| {
        let g = trifree::graph6::decode(r.as_str().unwrap()).unwrap();
        trifree::are_isomorphic(&g, &bc4)
    });
    assert!(hit);

    let out = trifree(&["enumber", "--j", "4", "--n", "9", "--workers", "1"]);
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["finite"], false);
    assert!(doc["value"].is_null());
}

#[test]
fn verify_commands() {
    let out = trifree(&["verify", "t-nonneg", "--n-max", "7", "--workers", "1"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["check"], "t-nonneg");
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["min_t"], 0);

    let out = trifree(&["verify", "theorem3", "--n-max", "6", "--workers", "1"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["pass"], true);
    // C5 is the only hypothesis-satisfying graph this far down
    assert_eq!(doc["gamma_prime"].as_array().unwrap().len(), 1);

    let out = trifree(&["verify", "lemmas", "--k-max", "4"]);
    assert!(out.status.success());
    let doc = &json_lines(&out)[0];
    assert_eq!(doc["check"], "lemmas");
    assert_eq!(doc["pass"], true);
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join("trifree-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Dhc\nD??\n").unwrap();
    let out = trifree(&["analyze", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let docs = json_lines(&out);
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["e"], 5);
    assert_eq!(docs[1]["e"], 0);
}
