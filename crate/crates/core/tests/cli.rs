use std::path::Path;
use std::process::{Command, Output};

fn neppoll(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neppoll"))
        .args(args)
        .current_dir(dir)
        .env("RUST_LOG", "off")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_star(dir: &Path) {
    std::fs::write(dir.join("star.edges"), "# star\n0 1\n0 2\n0 3\n1 0\n").unwrap();
    std::fs::write(dir.join("star.labels"), "0 1\n1 0\n2 0\n3 0\n").unwrap();
}

#[test]
fn generate_then_report_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = neppoll(
        &[
            "generate", "--model", "config", "--n", "800", "--alpha", "2.4", "--k-min", "2",
            "--rkk", "0.1", "--rho", "0.1", "--seed", "7", "--out", "g",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let value = |key: &str| -> f64 {
        let line = text.lines().find(|l| l.starts_with(key)).unwrap();
        line.split_whitespace().nth(1).unwrap().parse().unwrap()
    };
    assert!((value("r_kk:") - 0.1).abs() <= 0.02, "{text}");
    assert!((value("rho_kf:") - 0.1).abs() <= 0.02, "{text}");
    assert!(dir.path().join("g.edges").exists() && dir.path().join("g.labels").exists());

    let report = neppoll(
        &["report", "--graph", "g.edges", "--labels", "g.labels"],
        dir.path(),
    );
    assert!(report.status.success(), "{}", stderr(&report));
    let text = stdout(&report);
    for key in [
        "nodes:",
        "mean_degree_friend_of_node:",
        "r_kk:",
        "rho_kf:",
        "lambda2:",
        "budget_threshold:",
        "RW:",
    ] {
        assert!(text.contains(key), "missing {key} in\n{text}");
    }

    let check = neppoll(
        &["check", "--graph", "g.edges", "--labels", "g.labels"],
        dir.path(),
    );
    assert!(check.status.success(), "{}", stdout(&check));
    assert!(!stdout(&check).contains("FAIL"));
}

#[test]
fn report_on_star() {
    let dir = tempfile::tempdir().unwrap();
    write_star(dir.path());
    let out = neppoll(
        &["report", "--graph", "star.edges", "--labels", "star.labels"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "mean_degree_node: 1.500000",
        "mean_degree_friend: 2.000000",
        "mean_degree_friend_of_node: 2.500000",
        "r_kk: -1.000000",
        "rho_kf: 1.000000",
        "lambda2: 1.000000",
        "rw_applicable: false",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "missing {line:?} in\n{text}"
        );
    }
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    write_star(dir.path());
    std::fs::write(
        dir.path().join("exp.toml"),
        "seed = 3\nreplications = 40\nbudgets = [1, 4]\nestimators = [\"IP\", \"UN\", \"FN\"]\n[graph]\npath = \"star.edges\"\n[labels]\npath = \"star.labels\"\n",
    )
    .unwrap();
    let out = neppoll(
        &["sweep", "--config", "exp.toml", "--out", "r.csv"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("estimator,budget,emp_bias,emp_var,emp_mse,exact_bias,exact_var,exact_mse")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[2].starts_with("UN,1,"));
    let exact_bias: f64 = rows[2].split(',').nth(5).unwrap().parse().unwrap();
    assert!((exact_bias - 0.5).abs() < 1e-12);
}

#[test]
fn walk_rows_leave_exact_columns_blank_on_bipartite_input() {
    let dir = tempfile::tempdir().unwrap();
    write_star(dir.path());
    std::fs::write(
        dir.path().join("exp.toml"),
        "seed = 3\nreplications = 10\nbudgets = [2]\nestimators = [\"RW\"]\n[graph]\npath = \"star.edges\"\n[labels]\npath = \"star.labels\"\n",
    )
    .unwrap();
    let out = neppoll(&["sweep", "--config", "exp.toml"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with(",,,"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write_star(dir.path());

    let out = neppoll(&["report", "--no-such-flag"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    std::fs::write(
        dir.path().join("bad.toml"),
        "seed = 1\nunknown_key = 3\n[graph]\npath = \"star.edges\"\n[labels]\np = 0.3\n",
    )
    .unwrap();
    let out = neppoll(&["sweep", "--config", "bad.toml"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).starts_with("error: usage:"),
        "{}",
        stderr(&out)
    );

    std::fs::write(dir.path().join("loop.edges"), "0 1\n1 1\n").unwrap();
    let out = neppoll(&["report", "--graph", "loop.edges"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: data:"), "{}", stderr(&out));

    let out = neppoll(&["report", "--graph", "missing.edges"], dir.path());
    assert_eq!(out.status.code(), Some(1));

    // random-walk polling on a disconnected graph is a data error
    std::fs::write(dir.path().join("two.edges"), "0 1\n1 2\n2 0\n3 4\n").unwrap();
    std::fs::write(
        dir.path().join("rw.toml"),
        "seed = 1\nreplications = 5\nbudgets = [1]\nestimators = [\"RW\"]\n[graph]\npath = \"two.edges\"\n[labels]\np = 0.5\n",
    )
    .unwrap();
    let out = neppoll(&["sweep", "--config", "rw.toml"], dir.path());
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
}
