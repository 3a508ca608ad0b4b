use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_midlevels"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn germ_listings() {
    assert_eq!(stdout(&["germs", "--k", "3"]), "0 00\n1 01\n2 10\n3 11\n4 12\n");
    assert_eq!(stdout(&["germs", "--k", "4", "--count-only"]), "14\n");
    assert_eq!(
        stdout(&["germs", "--k", "3", "--rgs", "--format", "csv"]),
        "m,rgs\n0,0\n1,1\n2,10\n3,11\n4,12\n"
    );
    let json = stdout(&["germs", "--k", "2", "--format", "json-lines"]);
    assert_eq!(json, "{\"m\":0,\"germ\":\"0\"}\n{\"m\":1,\"germ\":\"1\"}\n");
    let bad = run(&["germs", "--k", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    let big = run(&["germs", "--k", "17"]);
    assert!(!big.status.success());
    assert!(String::from_utf8_lossy(&big.stderr).contains("--unsafe-large"));
}

#[test]
fn codec_commands() {
    let enc = stdout(&["encode", "110"]);
    assert!(enc.contains("code 013*24***\n"));
    assert!(enc.contains("theta 000100111\n"));
    assert!(enc.contains("aleph 000110111\n"));
    assert!(stdout(&["encode", "10", "--k", "3"]).contains("theta 0001011\n"));
    assert!(stdout(&["encode", "12", "--dot"]).starts_with("digraph tree"));
    assert_eq!(stdout(&["decode", "04*3*2*1*"]), "123\n");
    let trace = stdout(&["decode", "04*3*2*1*", "--trace"]);
    assert_eq!(trace.lines().count(), 7);
    assert!(trace.lines().last() == Some("123"));
    let bad = run(&["decode", "0*1234***"]);
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("prefix discipline violated"));
}

#[test]
fn graph_exports() {
    let dot = stdout(&["graph", "--k", "2", "--which", "rk", "--dot"]);
    let nodes = dot
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains(" -- "))
        .count();
    assert_eq!(nodes, 2);
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
    let loops = edges
        .iter()
        .filter(|l| {
            let mut ends = l.split_whitespace();
            ends.next() == ends.nth(1)
        })
        .count();
    assert_eq!((edges.len() - loops, loops), (1, 4));
    assert!(stdout(&["graph", "--k", "2", "--which", "mk"]).starts_with("M2: 20 vertices, 30 edges"));
    let csv = stdout(&["graph", "--k", "1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1 + 12);
    assert!(stdout(&["graph", "--k", "9"]).starts_with("M9: 184756 vertices, 923780 edges"));
    let over = run(&["graph", "--k", "10"]);
    assert!(!over.status.success());
}

#[test]
fn tables_and_sequences() {
    assert_eq!(stdout(&["cat", "--k", "4"]), include_str!("../golden/table5.txt"));
    let json = stdout(&["cat", "--k", "2", "--format", "json-lines"]);
    assert_eq!(json.lines().count(), 2);
    assert_eq!(
        stdout(&["seq", "--s0", "--count", "14"]),
        "0 1 3 2 4 7 9 5 8 6 12 11 10 13\n"
    );
    assert_eq!(
        stdout(&["seq", "--s1", "--count", "14"]),
        "1 0 0 3 1 0 1 8 7 12 3 2 9 4\n"
    );
    assert_eq!(
        stdout(&["seq", "--s0", "--count", "5", "--blocks"]),
        "0 1 | 3 2 4\n"
    );
}

#[test]
fn hamilton_and_verify() {
    assert_eq!(
        stdout(&["hamilton", "--k", "5", "--verify"]),
        "k=5: certificate of length 924 accepted (6 cycles glued with 5 six-cycles)\n"
    );
    let dir = std::env::temp_dir().join(format!("midlevels-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k3.txt");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["hamilton", "--k", "3", "--out", p]), "");
    let cert = std::fs::read_to_string(&path).unwrap();
    assert_eq!(cert.lines().count(), 71);
    assert_eq!(cert, stdout(&["hamilton", "--k", "3"]), "output is deterministic");
    let report = stdout(&[
        "verify",
        "--k",
        "3",
        "--tables",
        "--certificate",
        p,
        "--jobs",
        "2",
    ]);
    assert!(report.lines().all(|l| !l.starts_with("FAIL")));
    assert!(report.contains("certificate"));
    let broken: String = cert.lines().skip(1).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, broken).unwrap();
    assert!(!run(&["verify", "--k", "1", "--certificate", p]).status.success());
    assert!(!run(&["hamilton", "--k", "8"]).status.success());
    std::fs::remove_dir_all(&dir).ok();
}
