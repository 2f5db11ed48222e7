use std::process::{Command, Output};

fn osculate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osculate"))
        .args(args)
        .env_remove("OSCULATE_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_csv_rows() {
    let out = osculate(&[
        "enumerate",
        "--mode",
        "osculating",
        "--start",
        "1,1",
        "--n",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,gap1,gap2,osc,count"));
    assert_eq!(lines.next(), Some("0,1,1,0,1"));
    let total: u64 = text
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("2,"))
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 40);
}

#[test]
fn enumerate_json_is_parseable() {
    let out = osculate(&[
        "enumerate",
        "--mode",
        "vicious",
        "--start",
        "1,1",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mode"], "vicious");
    assert_eq!(v["walkers"], 3);
    let at1: u64 = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["n"] == 1)
        .map(|r| r["count"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(at1, 4);
}

#[test]
fn enumerate_is_deterministic_across_jobs() {
    let args = [
        "enumerate",
        "--mode",
        "osculating",
        "--start",
        "2,1",
        "--n",
        "9",
        "--format",
        "csv",
    ];
    let serial = stdout(&osculate(&args));
    let mut parallel_args = args.to_vec();
    parallel_args.extend(["--jobs", "4"]);
    assert_eq!(serial, stdout(&osculate(&parallel_args)));
    assert_eq!(serial, stdout(&osculate(&args)));
}

#[test]
fn vicious_with_zero_gap_is_a_usage_error() {
    let out = osculate(&[
        "enumerate",
        "--mode",
        "vicious",
        "--start",
        "0,1",
        "--n",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_mode_and_format_are_usage_errors() {
    assert_eq!(
        osculate(&[
            "enumerate",
            "--mode",
            "bouncy",
            "--start",
            "1,1",
            "--n",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        osculate(&["series", "T", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(osculate(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn series_text_values() {
    let cases: [(&[&str], &str); 3] = [
        (&["series", "T", "--order", "4"], "0, 2, 8, 40, 224"),
        (
            &[
                "series",
                "osculating-length",
                "--start",
                "1,1",
                "--order",
                "2",
            ],
            "1, 8, 40",
        ),
        (
            &["series", "baxter", "--order", "6"],
            "1, 2, 6, 22, 92, 422",
        ),
    ];
    for (args, expected) in cases {
        let out = osculate(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(
            stdout(&out).trim().replace(' ', ""),
            expected.replace(' ', ""),
            "{args:?}"
        );
    }
}

#[test]
fn series_json() {
    let out = osculate(&["series", "X", "--order", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let _: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
}

#[test]
fn verify_triple_contact_is_refused() {
    let out = osculate(&["verify", "prop1", "--start", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(i,j) != (0,0)"));
}

#[test]
fn verify_json_report() {
    let out = osculate(&[
        "verify", "main-eq", "--start", "1,1", "--order", "5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    let rep = &v["reports"][0];
    assert_eq!(rep["check_name"], "main-eq");
    assert_eq!(rep["i"], 1);
    assert_eq!(rep["order"], 5);
    assert!(rep["first_failure"].is_null());
}

#[test]
fn verify_all_skips_determinants_for_zero_gaps() {
    let out = osculate(&["verify", "all", "--start", "0,1", "--order", "6"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("PASS quasivicious (0,1)"));
    assert!(text.contains("SKIP gv"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("osculate-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.txt");
    let out = osculate(&[
        "series",
        "T",
        "--order",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with('0'));
    std::fs::remove_dir_all(&dir).unwrap();
}
