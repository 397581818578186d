use std::process::{Command, Output};

use gwspectra::spectra::gw_dq_spectrum;
use gwspectra::WheelParams;
use gwspectra_cli::record::{ClassifyRecord, EnumerateRecord, SpectrumRecord, VerifyRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwspectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn dq_spectrum_of_k5_wheel_on_c4() {
    let text = stdout(&[
        "spectrum", "--a", "1", "--m", "5", "--n", "4", "--matrix", "dq", "--format", "json",
    ]);
    let rec: SpectrumRecord = serde_json::from_str(&text).unwrap();
    let spec = rec.exact_spectrum().unwrap().unwrap();
    assert!(spec.is_integral());
    let ints: Vec<i64> = rec
        .eigenvalues
        .unwrap()
        .iter()
        .map(|e| e.value.unwrap())
        .collect();
    assert!(ints.contains(&17) && ints.contains(&8));
}

#[test]
fn dl_spectrum_of_k4() {
    let text = stdout(&[
        "spectrum", "--a", "1", "--m", "1", "--n", "3", "--matrix", "dl", "--format", "json",
    ]);
    assert_eq!(
        text.trim(),
        r#"{"order":4,"graph":{"a":1,"m":1,"n":3},"matrix":"dl","eigenvalues":[{"kind":"integer","value":4,"multiplicity":3},{"kind":"integer","value":0,"multiplicity":1}]}"#
    );
}

#[test]
fn both_mode_reports_deviation() {
    let text = stdout(&[
        "spectrum", "--a", "1", "--m", "1", "--n", "5", "--matrix", "dq", "--mode", "both",
        "--format", "json",
    ]);
    let rec: SpectrumRecord = serde_json::from_str(&text).unwrap();
    assert!(rec.max_deviation.unwrap() < 1e-7);
    let table = stdout(&[
        "spectrum", "--a", "1", "--m", "1", "--n", "5", "--matrix", "dq", "--mode", "both",
    ]);
    assert!(table.contains("max deviation:"));
}

#[test]
fn json_round_trips() {
    for matrix in ["adj", "dist", "dl", "dq"] {
        for (a, m, n) in [("2", "3", "7"), ("1", "4", "9"), ("3", "2", "6")] {
            let text = stdout(&[
                "spectrum", "--a", a, "--m", m, "--n", n, "--matrix", matrix, "--mode", "both",
                "--format", "json",
            ]);
            let rec: SpectrumRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string(&rec).unwrap(), text.trim());
            let back: SpectrumRecord =
                serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
            assert_eq!(back, rec);
        }
    }
    let text = stdout(&[
        "spectrum", "--a", "2", "--m", "3", "--n", "7", "--format", "json",
    ]);
    let rec: SpectrumRecord = serde_json::from_str(&text).unwrap();
    let p = WheelParams::new(2, 3, 7).unwrap();
    assert_eq!(
        rec.exact_spectrum().unwrap().unwrap(),
        gw_dq_spectrum(p).unwrap()
    );

    for args in [
        vec![
            "classify", "--a", "2", "--m", "8", "--n", "6", "--format", "json",
        ],
        vec![
            "classify", "--a", "2", "--m", "2", "--n", "5", "--format", "json",
        ],
    ] {
        let text = stdout(&args);
        let rec: ClassifyRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&rec).unwrap(), text.trim());
    }
    let text = stdout(&[
        "enumerate",
        "--a-max",
        "11",
        "--m-max",
        "35",
        "--format",
        "json",
    ]);
    let rec: EnumerateRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), text.trim());
    let text = stdout(&["verify", "--suite", "bounds", "--format", "json"]);
    let rec: VerifyRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), text.trim());
}

#[test]
fn classify_examples() {
    let text = stdout(&["classify", "--a", "2", "--m", "8", "--n", "6"]);
    assert!(text.contains("dq: integral, t=784, c=28"), "{text}");
    assert!(text.contains("case \"(2,8,6) ∈ S\""), "{text}");
    let text = stdout(&["classify", "--a", "1", "--m", "9", "--n", "6"]);
    assert!(
        text.contains("dq: integral") && text.contains("c=15"),
        "{text}"
    );
    let text = stdout(&[
        "classify", "--a", "3", "--m", "3", "--n", "4", "--which", "dl",
    ]);
    assert_eq!(text, "GW(3,3,4)\ndl: integral (n=4)\n");
    let text = stdout(&[
        "classify", "--a", "1", "--m", "6", "--n", "4", "--which", "dq",
    ]);
    assert!(text.contains("dq: not integral, t=96"), "{text}");
}

#[test]
fn enumerate_full_grid_csv() {
    let text = stdout(&[
        "enumerate",
        "--which",
        "dq",
        "--a-max",
        "11",
        "--m-max",
        "35",
        "--n-values",
        "3,4,6",
        "--format",
        "csv",
    ]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,m,n,t,c,verdict,case"));
    assert_eq!(
        lines.next(),
        Some(r#"1,*,3,,,integral,"a=1,n=3,m>=1 family""#)
    );
    let triples: Vec<String> = lines
        .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    let expected = [
        "1,5,4", "1,5,6", "1,9,6", "1,16,6", "1,35,6", "2,1,3", "2,1,4", "2,3,6", "2,8,6", "3,1,4",
        "3,4,4", "3,9,6", "4,1,6", "4,2,4", "4,2,6", "5,1,6", "5,3,6", "6,1,4", "11,1,6",
    ];
    assert_eq!(triples, expected);
    assert!(text.contains(r#"6,1,4,196,14,integral,"(6,1,4) ∉ S, sporadic""#));
}

#[test]
fn enumerate_n4() {
    let text = stdout(&[
        "enumerate",
        "--which",
        "dq",
        "--a-max",
        "5",
        "--m-max",
        "8",
        "--n-values",
        "4",
        "--format",
        "csv",
    ]);
    let triples: Vec<String> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(triples, ["1,5,4", "2,1,4", "3,1,4", "3,4,4", "4,2,4"]);
}

#[test]
fn enumerate_dl() {
    let text = stdout(&[
        "enumerate",
        "--which",
        "dl",
        "--a-max",
        "2",
        "--m-max",
        "2",
        "--n-values",
        "3,4,5,6",
        "--format",
        "csv",
    ]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows
        .iter()
        .all(|r| !r.starts_with("1,1,5") && r.split(',').nth(2) != Some("5")));
}

#[test]
fn alpha_and_scan_output_identical_rows() {
    for args in [
        ["--a-max", "11", "--m-max", "35"],
        ["--a-max", "40", "--m-max", "10"],
    ] {
        let scan = stdout(
            &[
                &["enumerate", "--format", "csv", "--method", "scan"][..],
                &args[..],
            ]
            .concat(),
        );
        let alpha = stdout(
            &[
                &["enumerate", "--format", "csv", "--method", "alpha"][..],
                &args[..],
            ]
            .concat(),
        );
        assert_eq!(scan, alpha);
    }
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "gw-dq", "--max-order", "14"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("[PASS]")).count() >= 5);
    assert!(!text.contains("[FAIL]"));

    let text = stdout(&["verify", "--suite", "classification", "--max-order", "0"]);
    assert!(text.contains("19 found, 19 expected"), "{text}");
    assert!(text.contains("17 of 17"), "{text}");

    let text = stdout(&["verify", "--suite", "parity"]);
    assert!(text.contains("1000000 random triples"), "{text}");

    for suite in ["join-dq", "join-dl", "gw-dl", "alpha-equiv", "bounds"] {
        let out = run(&[
            "verify",
            "--suite",
            suite,
            "--max-order",
            "12",
            "--seed",
            "3",
        ]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["verify", "--suite", "nonsense"]), Some(1));
    assert_eq!(
        code(&["verify", "--suite", "gw-dq", "--max-order", "3"]),
        Some(1)
    );
    assert_eq!(
        code(&[
            "enumerate",
            "--a-max",
            "1",
            "--m-max",
            "5",
            "--method",
            "alpha"
        ]),
        Some(1)
    );
    assert_eq!(
        code(&[
            "enumerate",
            "--which",
            "dl",
            "--a-max",
            "3",
            "--m-max",
            "5",
            "--method",
            "alpha"
        ]),
        Some(1)
    );
    assert_eq!(
        code(&[
            "enumerate",
            "--a-max",
            "3",
            "--m-max",
            "5",
            "--n-values",
            "2"
        ]),
        Some(1)
    );
    assert_eq!(
        code(&["spectrum", "--a", "0", "--m", "1", "--n", "3"]),
        Some(1)
    );
    assert_eq!(
        code(&["spectrum", "--a", "1", "--m", "1", "--n", "2"]),
        Some(1)
    );
    assert_eq!(code(&["spectrum", "--a", "1", "--m", "1"]), Some(1));
    assert_eq!(
        code(&["spectrum", "--a", "1", "--m", "1", "--n", "3", "--matrix", "lap"]),
        Some(1)
    );
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
    assert_eq!(
        code(&["classify", "--a", "2", "--m", "2", "--n", "5"]),
        Some(0)
    );
}

#[test]
fn csv_and_table_formats() {
    let text = stdout(&[
        "spectrum", "--a", "1", "--m", "1", "--n", "5", "--format", "csv",
    ]);
    assert!(text.starts_with("kind,expression,value,multiplicity\n"));
    assert!(text.contains("cosine,5-2cos(2π·1/5),"), "{text}");
    let text = stdout(&[
        "spectrum", "--a", "1", "--m", "1", "--n", "5", "--mode", "numeric",
    ]);
    assert!(text.contains("numeric eigenvalues"));
    let text = stdout(&[
        "classify", "--a", "2", "--m", "8", "--n", "6", "--format", "csv",
    ]);
    assert_eq!(
        text,
        "matrix,a,m,n,t,c,verdict,case\ndq,2,8,6,784,28,integral,\"(2,8,6) ∈ S\"\ndl,2,8,6,,,integral,\n"
    );
    let text = stdout(&["verify", "--suite", "bounds", "--format", "csv"]);
    assert!(text.starts_with("suite,check,passed,detail\n"));
}
