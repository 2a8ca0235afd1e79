//! End-to-end tests running the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use semipair::graph::{emit_edge_list, Graph};
use semipair::reductions::{gp4, gp5};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semipair"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semipair-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn graph_file(name: &str, g: &Graph) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, emit_edge_list(g)).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited")
}

#[test]
fn solve_prints_the_size_and_writes_the_solution() {
    let input = graph_file("p2.graph", &Graph::path(2));
    let out = bin().arg("solve").arg(&input).output().unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), "gamma_pr2 2\n");
    let sol = std::fs::read_to_string(input.with_extension("sol")).unwrap();
    assert_eq!(sol, "1\n0 1\n");
}

#[test]
fn solve_handles_a_branch_gadget_tree() {
    let gg = gp5(&Graph::path(2)).unwrap();
    let input = graph_file("gp5p2.graph", &gg.graph);
    let out = bin().arg("solve").arg(&input).output().unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), "gamma_pr2 6\n");
}

#[test]
fn solve_rejects_non_block_graphs_toward_exact() {
    let input = graph_file("c4.graph", &Graph::cycle(4));
    let out = bin().arg("solve").arg(&input).output().unwrap();
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("exact"), "{}", stderr(&out));
}

#[test]
fn solve_reports_parse_errors() {
    let path = scratch("broken.graph");
    std::fs::write(&path, "3 1\n0 3\n").unwrap();
    let out = bin().arg("solve").arg(&path).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn exact_matches_known_minimums() {
    let p6 = graph_file("p6.graph", &Graph::path(6));
    let out = bin()
        .args(["exact", "--problem", "dom"])
        .arg(&p6)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("size 2\nset "), "{}", stdout(&out));

    let c5 = graph_file("c5.graph", &Graph::cycle(5));
    let out = bin()
        .args(["exact", "--problem", "vc"])
        .arg(&c5)
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("size 3\n"), "{}", stdout(&out));

    let gadget = graph_file("gp4c4.graph", &gp4(&Graph::cycle(4)).unwrap().graph);
    let out = bin()
        .args(["exact", "--problem", "spd"])
        .arg(&gadget)
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("size 8\npairs "), "{}", stdout(&out));
}

#[test]
fn exact_stops_at_the_vertex_budget() {
    let p6 = graph_file("p6b.graph", &Graph::path(6));
    let out = bin()
        .args(["exact", "--problem", "dom", "--budget-n", "4"])
        .arg(&p6)
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("cap"), "{}", stderr(&out));
}

#[test]
fn check_accepts_solver_output_and_flags_bad_pairs() {
    let input = graph_file("p4.graph", &Graph::path(4));
    let sol = scratch("p4.check.sol");
    let out = bin()
        .arg("solve")
        .arg(&input)
        .args(["--out".as_ref(), sol.as_os_str()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let out = bin().arg("check").arg(&input).arg(&sol).output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "valid\n");

    let bad = scratch("p4.bad.sol");
    std::fs::write(&bad, "1\n0 3\n").unwrap();
    let out = bin().arg("check").arg(&input).arg(&bad).output().unwrap();
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid:"), "{}", stdout(&out));
}

#[test]
fn tree_prints_one_line_per_vertex() {
    let input = graph_file("p4t.graph", &Graph::path(4));
    let out = bin().arg("tree").arg(&input).output().unwrap();
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let mut saw_root = false;
    for (v, line) in lines.iter().enumerate() {
        let fields: Vec<usize> = line
            .split_whitespace()
            .map(|w| w.parse().unwrap())
            .collect();
        assert_eq!(fields[0], v);
        assert_eq!(fields.len(), 3);
        if fields[0] == fields[1] {
            assert_eq!(fields[2], 0);
            saw_root = true;
        }
    }
    assert!(saw_root);
}

#[test]
fn gen_writes_gadget_and_role_files() {
    let input = graph_file("c4g.graph", &Graph::cycle(4));
    let prefix = scratch("gp4-of-c4");
    let out = bin()
        .args(["gen", "gp4", "--input"])
        .arg(&input)
        .args(["--out".as_ref(), prefix.as_os_str()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), "20 20\n");
    let graph_text =
        std::fs::read_to_string(PathBuf::from(format!("{}.graph", prefix.display()))).unwrap();
    assert!(graph_text.starts_with("20 20\n"));
    let roles =
        std::fs::read_to_string(PathBuf::from(format!("{}.roles", prefix.display()))).unwrap();
    assert!(roles.lines().any(|l| l == "w 0 4"));
}

#[test]
fn gen_random_is_seed_stable() {
    let a = scratch("rb-a");
    let b = scratch("rb-b");
    for prefix in [&a, &b] {
        let out = bin()
            .args(["gen", "random-block", "--n", "30", "--seed", "11"])
            .args(["--out", &prefix.display().to_string()])
            .output()
            .unwrap();
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }
    let ga = std::fs::read(format!("{}.graph", a.display())).unwrap();
    let gb = std::fs::read(format!("{}.graph", b.display())).unwrap();
    assert_eq!(ga, gb);
}

#[test]
fn gen_rejects_out_of_class_inputs() {
    let input = graph_file("star4g.graph", &Graph::star(4));
    let out = bin()
        .args(["gen", "apx4", "--input"])
        .arg(&input)
        .args(["--out".as_ref(), scratch("never").as_os_str()])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("degree"), "{}", stderr(&out));
}

#[test]
fn harness_reports_every_property_and_passes() {
    let out = bin()
        .args(["harness", "--trials", "3", "--n-max", "8", "--format", "lines"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}\n{}", stdout(&out), stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("prop ")).count(), 10);
    assert!(text.lines().all(|l| !l.contains(" fail ")));
    assert!(text.trim_end().ends_with("verdict pass"));
}

#[test]
fn harness_zero_trials_warns_and_passes() {
    let out = bin().args(["harness", "--trials", "0"]).output().unwrap();
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("0 trials"), "{}", stderr(&out));
}

#[test]
fn harness_surfaces_an_injected_pairing_fault() {
    let out = bin()
        .args([
            "harness",
            "--trials",
            "3",
            "--n-max",
            "8",
            "--fault",
            "corrupt-pairing",
        ])
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(
        text.contains("FAIL solutions-verify"),
        "expected the structural property to fail:\n{text}"
    );
    assert!(text.contains("witness:"), "{text}");
}

#[test]
fn bench_emits_one_timing_row_per_size() {
    let out = bin()
        .args(["bench", "--sizes", "100,1000"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    for (row, want_n) in rows.iter().zip([100usize, 1000]) {
        let fields: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0].parse::<usize>().unwrap(), want_n);
        assert!(fields[1].parse::<usize>().unwrap() >= want_n - 1);
        assert!(fields[2].parse::<f64>().unwrap() >= 0.0);
    }
}
