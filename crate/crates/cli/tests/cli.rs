//! End-to-end tests of the binary surface and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cfkit"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cfkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn gen_color_verify_pipeline() {
    let graph = tmp("w5.col");
    let coloring = tmp("w5-coloring.json");
    let out = run(&["gen", "wheel:5", "-o", graph.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&[
        "color",
        graph.to_str().unwrap(),
        "--h",
        "2",
        "-o",
        coloring.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&[
        "verify",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
        "--h",
        "2",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["proper"], true);
    assert_eq!(report["hcf_ok"], true);
}

#[test]
fn verify_rejects_bad_coloring_with_exit_2() {
    let graph = tmp("p3.col");
    let coloring = tmp("p3-bad.txt");
    assert!(run(&["gen", "path:3", "-o", graph.to_str().unwrap()]).status.success());
    std::fs::write(&coloring, "1 2 2\n").unwrap();
    let out = run(&[
        "verify",
        graph.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
        "--h",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_c5_decisions() {
    let graph = tmp("c5.col");
    assert!(run(&["gen", "cycle:5", "-o", graph.to_str().unwrap()]).status.success());
    let out = run(&["exact", graph.to_str().unwrap(), "--mode", "hcf", "--h", "1", "--k", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decision"], "unsatisfiable");
    let out = run(&["exact", graph.to_str().unwrap(), "--mode", "odd", "--minimize"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 5);
}

#[test]
fn exact_budget_exhaustion_is_exit_3() {
    let graph = tmp("dense.col");
    assert!(run(&["gen", "rand:14:9:80:3", "-o", graph.to_str().unwrap()]).status.success());
    let out = run(&[
        "exact",
        graph.to_str().unwrap(),
        "--mode",
        "hcf",
        "--h",
        "2",
        "--k",
        "12",
        "--budget-nodes",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decision"], "budget-exceeded");
}

#[test]
fn bench_remaining_tasks_run_clean() {
    for (task, gens, extra) in [
        ("thm14", vec!["ktrees:6:2:20:0"], vec!["--h", "2"]),
        ("thm15", vec!["lg-rands:5:8:3:60:0"], vec!["--ell", "2"]),
        ("thm16", vec!["lg-rands:5:8:3:60:5"], vec!["--ell", "2"]),
        ("thm17", vec!["lg-rands:5:8:3:60:9"], vec![]),
        ("cor15", vec!["rands:5:9:5:60:1"], vec![]),
    ] {
        let out_path = tmp(&format!("bench-{task}.csv"));
        let mut args = vec!["bench", "--task", task];
        for g in &gens {
            args.push("--gen");
            args.push(g);
        }
        args.extend(extra);
        args.push("-o");
        args.push(out_path.to_str().unwrap());
        let r = run(&args);
        assert!(
            r.status.success(),
            "task {task}: {}",
            String::from_utf8_lossy(&r.stderr)
        );
        let text = std::fs::read_to_string(&out_path).unwrap();
        assert!(text.lines().count() >= 2, "task {task} produced no rows");
        assert!(!text.contains(",false,"), "task {task} has failing rows:\n{text}");
    }
}

#[test]
fn missing_file_is_input_error_4() {
    let out = run(&["analyze", "/nonexistent/graph.col"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn malformed_graph_is_input_error_4() {
    let path = tmp("broken.col");
    std::fs::write(&path, "e 1 2\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bench_is_deterministic_modulo_wall_time() {
    let out_a = tmp("bench-a.csv");
    let out_b = tmp("bench-b.csv");
    for out in [&out_a, &out_b] {
        let r = run(&[
            "bench",
            "--task",
            "thm13",
            "--gen",
            "rands:12:8:4:55:0",
            "--gen",
            "cycle:6",
            "--h",
            "1",
            "-o",
            out.to_str().unwrap(),
        ]);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    }
    let strip = |p: &PathBuf| -> Vec<String> {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| l.rsplitn(2, ',').nth(1).unwrap().to_string())
            .collect()
    };
    assert_eq!(strip(&out_a), strip(&out_b));
}

#[test]
fn bench_chain_task_runs_clean() {
    let out = tmp("chain.csv");
    let r = run(&[
        "bench",
        "--task",
        "chain",
        "--gen",
        "rands:10:7:4:50:3",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().count() == 11);
    assert!(text.contains("|pcf="));
}

#[test]
fn gen_latin_writes_label_sidecar() {
    let graph = tmp("g3.col");
    let labels = tmp("g3-labels.json");
    let r = run(&[
        "gen",
        "latin:3",
        "-o",
        graph.to_str().unwrap(),
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&labels).unwrap()).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["labels"].as_array().unwrap().len(), 21);
    assert_eq!(v["labels"][0], "v_1_1");
}

#[test]
fn odd_color_claw_rejects_claw_with_4() {
    let graph = tmp("claw.col");
    assert!(run(&["gen", "star:3", "-o", graph.to_str().unwrap()]).status.success());
    let out = run(&["odd-color", graph.to_str().unwrap(), "--claw"]);
    assert_eq!(out.status.code(), Some(4));
}
