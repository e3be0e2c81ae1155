use std::process::{Command, Output};

fn aztec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aztec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("aztec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn count_small_orders() {
    let o = aztec(&["count", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "64 (= 2^6)");
    assert!(stdout(&aztec(&["count", "--n", "6"])).contains("(= 2^21)"));
}

#[test]
fn bad_order_is_a_usage_error() {
    assert_eq!(aztec(&["count", "--n", "0"]).status.code(), Some(2));
    assert_eq!(aztec(&["count"]).status.code(), Some(2));
}

#[test]
fn coupling_prints_exact_and_approximate() {
    let o = aztec(&["coupling", "--n", "1", "--white", "1,1", "--black", "1,1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("-1 / 2^1"));
    assert_eq!(lines.next(), Some("~ -0.5"));
    let o = aztec(&["coupling", "--n", "3", "--white", "2,2", "--black", "3,1", "--signed"]);
    assert!(o.status.success() && stdout(&o).contains(" / 2^3\n"));
}

#[test]
fn coupling_out_of_range_exits_2() {
    let o = aztec(&["coupling", "--n", "2", "--white", "9,9", "--black", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn empty_pattern_has_probability_one() {
    let p = temp_file("empty.json", r#"{"format": 1, "n": 3, "dominoes": []}"#);
    let o = aztec(&["prob", "--pattern", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1/1"));
}

#[test]
fn malformed_pattern_reports_line() {
    let p = temp_file("bad.json", "{\n  \"format\": 1,\n  \"n\": 3,\n  \"dominoes\": [[[\"W\", 1, 1]\n}\n");
    let o = aztec(&["prob", "--pattern", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn verify_quick_and_mutations() {
    assert_eq!(aztec(&["verify", "--level", "quick"]).status.code(), Some(0));
    for m in ["transposed", "off-by-one", "dropped-negation"] {
        let o = aztec(&["verify", "--level", "quick", "--mutate", m]);
        assert_eq!(o.status.code(), Some(1), "{m}");
        assert!(stdout(&o).contains("FAIL"), "{m}");
    }
}

#[test]
fn heatmap_guard_and_determinism() {
    let o = aztec(&["heatmap", "--n", "201", "--d0", "1", "--d1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let run = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_aztec"))
            .args(["heatmap", "--n", "12", "--d0", "-1", "--d1", "2"])
            .env("AZTEC_THREADS", t)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("3"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("w0,w1,numerator,scale,approx\n"));
}

#[test]
fn heatmap_writes_file() {
    let dir = std::env::temp_dir().join(format!("aztec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("h.csv");
    let o = aztec(&["heatmap", "--n", "5", "--d0", "1", "--d1", "1", "--output", p.to_str().unwrap()]);
    assert!(o.status.success());
    let body = std::fs::read_to_string(&p).unwrap();
    assert_eq!(body.lines().count(), 1 + 5 * 5);
}
