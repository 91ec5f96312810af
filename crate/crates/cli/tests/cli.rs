use std::process::{Command, Output};

const SEVEN_HALVES: [&str; 4] = ["--alpha", "2/7", "--beta", "7/2"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abshift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_seven_halves(args: &[&str]) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    all.extend(SEVEN_HALVES);
    run(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn expand_prints_expansion_of_one() {
    let o = run_seven_halves(&["expand", "--which", "one", "--digits", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3,3,0,1,2,3,0,3,0,2\n");
}

#[test]
fn expand_json_carries_orbit_and_parameters() {
    let o = run_seven_halves(&["expand", "--which", "one", "--digits", "3", "--json"]);
    let v = json(&o);
    assert_eq!(v["alpha"], "2/7");
    assert_eq!(v["beta"], "7/2");
    assert_eq!(v["main_mode"], true);
    assert_eq!(v["digits"], serde_json::json!([3, 3, 0]));
    assert_eq!(v["orbit"][0], "1/1");
    assert_eq!(v["orbit"][1], "11/14");
}

#[test]
fn lang_check_reports_false_with_success() {
    let o = run_seven_halves(&["lang", "check", "--word", "3,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "false\n");
    let o = run_seven_halves(&["lang", "check", "--word", "3,3,0,1"]);
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn lang_enum_and_count_agree() {
    let o = run_seven_halves(&["lang", "enum", "--length", "4"]);
    let lines = stdout(&o).lines().count();
    let o = run_seven_halves(&["lang", "count", "--length", "4"]);
    assert_eq!(stdout(&o).trim().parse::<usize>().unwrap(), lines);
    let o = run_seven_halves(&["lang", "enum", "--length", "1", "--csv"]);
    assert_eq!(stdout(&o), "word\n\"0\"\n\"1\"\n\"2\"\n\"3\"\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["expand", "--which", "one"]).status.code(), Some(2));
    assert_eq!(
        run(&["expand", "--alpha", "0.3", "--beta", "7/2", "--which", "one"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run_seven_halves(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run_seven_halves(&["expand", "--which", "point"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run_seven_halves(&["graph", "--depth", "3", "--csv"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_1() {
    let o = run_seven_halves(&["surgery", "hat", "--word", "3,3,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not admissible"));
    let o = run(&[
        "surgery", "check", "--alpha", "1/2", "--beta", "2", "--max-n", "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha = 1/beta"));
    let o = run(&["expand", "--alpha", "0", "--beta", "1/2", "--which", "one"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run_seven_halves(&["lang", "check", "--word", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn surgery_check_passes_with_all_flags_true() {
    let o = run_seven_halves(&["surgery", "check", "--max-n", "10", "--seed", "7"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v = json(&o);
    assert_eq!(v["all_passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert_eq!(v["config"]["random"]["seed"], 7);
}

#[test]
fn surgery_word_commands() {
    assert_eq!(
        stdout(&run_seven_halves(&["surgery", "tilde", "--word", "0,3,3"])),
        "0,3,2\n"
    );
    assert_eq!(
        stdout(&run_seven_halves(&["surgery", "g", "--word", "3,3"])),
        "0\n"
    );
    let v = json(&run_seven_halves(&[
        "surgery", "hat", "--word", "0,3,3", "--json",
    ]));
    assert_eq!(v["class"], "b");
    assert_eq!(v["hamming"], 1);
}

#[test]
fn graph_outputs() {
    let o = run_seven_halves(&["graph", "--depth", "4", "--dot", "-"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph follower_graph {"));
    assert!(dot.contains("\"[0,0]\" -> \"[0,1]\" [label=\"3\"];"));
    let v = json(&run_seven_halves(&[
        "graph", "--depth", "6", "--stats", "--json",
    ]));
    assert_eq!(v["depth"], 6);
    let hist: u64 = v["out_degree_histogram"]
        .as_object()
        .unwrap()
        .values()
        .map(|n| n.as_u64().unwrap())
        .sum();
    assert_eq!(hist, v["vertex_count"].as_u64().unwrap());
}

#[test]
fn criterion_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.csv");
    let o = run_seven_halves(&[
        "criterion",
        "--horizon",
        "6",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,zbar,ratio_num,ratio_den"));
    assert_eq!(lines.next(), Some("1,0,0,1"));
    assert_eq!(lines.nth(2), Some("4,2,1,2"));
}

#[test]
fn pressure_and_gibbs_reports() {
    let dir = tempfile::tempdir().unwrap();
    let phi = dir.path().join("phi.json");
    std::fs::write(&phi, r#"{"range": 2, "table": {"3,3": 0.5, "0,1": -0.25}}"#).unwrap();
    let phi = phi.to_str().unwrap();
    let v = json(&run_seven_halves(&[
        "pressure",
        "--n",
        "3",
        "--phi",
        phi,
        "--restricted",
        "--m",
        "8",
    ]));
    assert_eq!(v["centred"]["length"], 7);
    assert_eq!(v["restricted"]["method"], "restricted");
    assert_eq!(v["total_oscillation"], 1.0);
    let o = run_seven_halves(&[
        "gibbs",
        "--word",
        "3,3",
        "--n",
        "4",
        "--epsilon",
        "0.05",
        "--min-m",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["word"], "3,3");
    assert_eq!(v["pressure_is_estimate"], true);
    assert!(v["bounds"]["k_minus"].as_f64().unwrap() <= v["bounds"]["k_plus"].as_f64().unwrap());
    assert!(v.get("curve").is_none());
    let v = json(&run_seven_halves(&[
        "gibbs",
        "--word",
        "3,3",
        "--n",
        "4",
        "--epsilon",
        "0.05",
        "--curve",
    ]));
    let curve = v["curve"].as_array().unwrap();
    assert_eq!(curve.len(), 4);
    assert_eq!(curve[3]["n"], 4);
    assert_eq!(curve[3]["nu_hat"], v["nu_hat"]);
    assert_eq!(
        run_seven_halves(&["pressure", "--n", "2", "--phi", "/nonexistent"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_output_is_byte_identical_and_digested() {
    let dir = tempfile::tempdir().unwrap();
    let m1 = dir.path().join("m1.json");
    let m2 = dir.path().join("m2.json");
    let args = ["pressure", "--n", "4", "--manifest"];
    let mut a1: Vec<&str> = args.to_vec();
    a1.push(m1.to_str().unwrap());
    let mut a2: Vec<&str> = args.to_vec();
    a2.push(m2.to_str().unwrap());
    let o1 = run_seven_halves(&a1);
    let o2 = run_seven_halves(&a2);
    assert_eq!(o1.stdout, o2.stdout);
    let man1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&m1).unwrap()).unwrap();
    let man2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&m2).unwrap()).unwrap();
    assert_eq!(man1["output_digest"], man2["output_digest"]);
    assert_eq!(man1["output_digest"].as_str().unwrap().len(), 64);
    assert_eq!(man1["subcommand"], "pressure");
    assert_eq!(man1["alpha"], "2/7");
}
