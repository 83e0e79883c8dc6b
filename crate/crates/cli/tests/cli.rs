use std::io::Write;
use std::process::{Command, Output, Stdio};

use cyclesat::constructions::{build_h1, build_wheel};
use cyclesat::graph::graph6_encode;
use cyclesat::saturation::{verify, Mode};
use cyclesat::Graph;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclesat"));
    cmd.args(args)
        .env_remove("CYCLESAT_BUDGET_SECONDS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn construct_prints_one_graph6_line() {
    let o = run(&["construct", "--family", "h1", "--k", "7", "--n", "9", "--format", "graph6"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(out.trim(), graph6_encode(build_h1(7, 9).unwrap().graph()));
}

#[test]
fn verify_writes_a_certificate_that_certifies() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("h1.cert");
    let g6 = graph6_encode(build_h1(7, 9).unwrap().graph());
    let o = run(
        &["verify", "--k", "7", "--mode", "saturated", "--cert", cert.to_str().unwrap()],
        Some(&g6),
    );
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "SATURATED");

    let graph = dir.path().join("h1.g6");
    std::fs::write(&graph, &g6).unwrap();
    let args = ["certify", "--cert", cert.to_str().unwrap(), "--in", graph.to_str().unwrap()];
    let o = run(&args, None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("VALID"));

    // The same certificate does not fit a graph with one edge fewer.
    let g = build_h1(7, 9).unwrap().labeled.into_graph();
    let (u, v) = g.edges()[0];
    std::fs::write(&graph, graph6_encode(&g.without_edge(u, v).unwrap())).unwrap();
    let o = run(&args, None);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("INVALID"));
}

#[test]
fn verify_exit_status_matches_the_library() {
    let mut corpus: Vec<(Graph, usize)> = Vec::new();
    for k in 4..=7 {
        corpus.push((build_wheel(k, 2).unwrap().labeled.into_graph(), k));
        corpus.push((Graph::cycle(k + 1), k));
        corpus.push((Graph::star(k + 2), k));
        corpus.push((Graph::path(k), k));
        corpus.push((Graph::complete(k), k));
    }
    corpus.push((build_h1(8, 11).unwrap().labeled.into_graph(), 8));
    for (g, k) in &corpus {
        for mode in [Mode::Saturated, Mode::Semisaturated] {
            let holds = verify(g, *k, mode).unwrap().holds();
            let o = run(
                &["verify", "--k", &k.to_string(), "--mode", &mode.to_string()],
                Some(&graph6_encode(g)),
            );
            assert_eq!(code(&o), if holds { 0 } else { 1 }, "{} k={k} {mode}", graph6_encode(g));
            assert_eq!(stdout(&o).starts_with("NOT"), !holds);
        }
    }
}

#[test]
fn verify_reads_edge_lists() {
    let o = run(&["verify", "--k", "4", "--mode", "ssat"], Some("4\n0 1\n1 2\n2 3\n"));
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("adding (0, 2)"));
}

#[test]
fn bounds_table_and_csv() {
    let o = run(&["bounds", "--k", "6", "--n", "20"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let row = |name: &str| out.lines().find(|l| l.starts_with(name)).unwrap().to_string();
    assert!(row("ssat-lower ").split_whitespace().any(|w| w == "20"));
    assert!(row("ssat-upper ").split_whitespace().any(|w| w == "35"));

    let o = run(&["bounds", "--k", "6", "--range", "10..12", "--csv"], None);
    let out = stdout(&o);
    assert!(out.starts_with("n,name,kind,numerator,denominator,applicable\n"));
    assert!(out.contains("12,ssat-c6-upper,upper,16,1,true"));
}

#[test]
fn seeded_output_is_byte_identical() {
    let args = ["construct", "--family", "greedy", "--k", "5", "--n", "11", "--seed", "42", "--format", "edgelist"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let g = cyclesat::graph::parse_graph(&stdout(&a)).unwrap();
    assert!(verify(&g, 5, Mode::Saturated).unwrap().holds());
    // Omitting the seed uses a fixed default.
    let d1 = run(&["construct", "--family", "greedy", "--k", "5", "--n", "11"], None);
    let d2 = run(&["construct", "--family", "greedy", "--k", "5", "--n", "11"], None);
    assert_eq!(d1.stdout, d2.stdout);
}

#[test]
fn labels_sidecar_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("h2.labels");
    let o = run(
        &["construct", "--family", "h2", "--k", "7", "--t", "2", "--labels", labels.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&labels).unwrap();
    assert!(text.contains("a1=0\n") && text.contains("R2="));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["verify"],
        &["bounds", "--k", "6"],
        &["construct", "--family", "h1", "--k", "7", "--n", "8"],
        &["construct", "--family", "h1", "--k", "7"],
        &["oracle", "--k", "5", "--n", "30", "--mode", "sat"],
    ] {
        assert_eq!(code(&run(args, None)), 2, "{args:?}");
    }
}

#[test]
fn missing_and_malformed_inputs_are_distinguished() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.g6");
    let o = run(&["verify", "--k", "5", "--in", missing.to_str().unwrap()], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not found"));

    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "D~~~~~~").unwrap();
    let o = run(&["verify", "--k", "5", "--in", bad.to_str().unwrap()], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
}

#[test]
fn oracle_appends_golden_rows() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("oracle_values.csv");
    for _ in 0..2 {
        let o = run(
            &["oracle", "--k", "5", "--n", "7", "--mode", "ssat", "--golden", golden.to_str().unwrap()],
            None,
        );
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).starts_with("ssat(7, C5) = 9\n"));
    }
    let text = std::fs::read_to_string(&golden).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "n,k,mode,value,witness");
    assert_eq!(lines[1], lines[2]);
    assert!(lines[1].starts_with("7,5,ssat,9,"));
}

#[test]
fn exhausted_budget_exits_three() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclesat"));
    let o = cmd
        .args(["oracle", "--k", "5", "--n", "9", "--mode", "ssat"])
        .env("CYCLESAT_BUDGET_SECONDS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("ssat(9, C5) >= "));

    let o = run(&["mine-suitable", "--k", "6", "--max-seconds", "0"], None);
    assert_eq!(code(&o), 3);
}

#[test]
fn mine_suitable_reports_labels() {
    let o = run(&["mine-suitable", "--k", "5"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["s(5) = 7 [k-suitable]", "DF{", "a1=0 a2=3"]);
}
