use std::process::{Command, Output};

fn gradedtor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradedtor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const Y: &str = "c1^2*x2 + c1*x1*x2 - x1^2*x2 - c2*x2 + x2^2 + 2*x1*x3 - 2*x4";

#[test]
fn member_reports_the_order_two_element() {
    let o = gradedtor(&["member", "--entry", "BGU(2,1)", "--no-closure", "--poly", Y]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "InClosure(2)\n");
    let o = gradedtor(&["member", "--entry", "BGU(2,1)", "--poly", Y]);
    assert_eq!(stdout(&o), "InIdeal\n");
    let o = gradedtor(&[
        "member", "--entry", "BGU(2,1)", "--poly", "c1^2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["membership"], "Outside");
    assert!(v["multiplier"].is_null());
}

#[test]
fn scan_so3_table() {
    let o = gradedtor(&["scan", "--entry", "SO3", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let ranks: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| {
            let cols: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(cols.len(), 4, "torsion column should be empty: {l}");
            cols[3]
        })
        .collect();
    assert_eq!(ranks, ["1", "1", "2", "2", "3"]);
}

#[test]
fn formats_carry_the_same_numbers() {
    let args = [
        "scan",
        "--entry",
        "BGU(2,1)",
        "--max-degree",
        "10",
        "--no-closure",
    ];
    let csv = stdout(&gradedtor(&[&args[..], &["--format", "csv"]].concat()));
    let json: serde_json::Value =
        serde_json::from_slice(&gradedtor(&[&args[..], &["--format", "json"]].concat()).stdout)
            .unwrap();
    let from_json: Vec<String> = json["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| {
            let t: Vec<String> = d["torsion"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect();
            format!(
                "{},{},{},{},{}",
                d["degree"],
                d["ambient_rank"],
                d["ideal_rank"],
                d["quotient_rank"],
                t.join(";")
            )
        })
        .collect();
    let from_csv: Vec<String> = csv.lines().skip(1).map(str::to_string).collect();
    assert_eq!(from_csv, from_json);
    assert!(from_csv[4].ends_with(",2"));
    assert_eq!(json["closure"], false);
}

#[test]
fn json_schema_keys() {
    let o = gradedtor(&[
        "verify",
        "--entry",
        "loopU(3)",
        "--max-degree",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut expected = [
        "entry",
        "max_degree",
        "closure",
        "degrees",
        "expected_series",
        "series_match",
        "claims",
        "meta",
    ];
    expected.sort();
    assert_eq!(keys, expected);
    assert_eq!(v["series_match"], true);
    assert_eq!(v["claims"][0]["id"], "torsion:loopU(3)");
    assert!(v["meta"]["runtime_ms"].is_u64());
    assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
    let d = &v["degrees"][0];
    let mut dk: Vec<&str> = d.as_object().unwrap().keys().map(String::as_str).collect();
    dk.sort();
    assert_eq!(
        dk,
        [
            "ambient_rank",
            "degree",
            "ideal_rank",
            "quotient_rank",
            "torsion"
        ]
    );
}

#[test]
fn exit_codes() {
    let expected_fail = gradedtor(&[
        "verify",
        "--claim",
        "torsion:BGU(2,1):no-closure",
        "--max-degree",
        "8",
    ]);
    assert_eq!(expected_fail.status.code(), Some(0));
    assert!(stdout(&expected_fail).contains("expected_fail"));
    let by_design = gradedtor(&[
        "verify",
        "--entry",
        "BGU(2,1)",
        "--no-closure",
        "--max-degree",
        "8",
    ]);
    assert_eq!(by_design.status.code(), Some(0));
    // Below degree 8 the unclosed ideal has no torsion, so the expected failure does not happen.
    let fail = gradedtor(&[
        "verify",
        "--claim",
        "torsion:BGU(2,1):no-closure",
        "--max-degree",
        "6",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).starts_with("entry claims"));
    for bad in [
        vec!["scan", "--entry", "SO3", "--max-degree", "7"],
        vec!["scan", "--entry", "SO3", "--max-degree", "42"],
        vec!["scan", "--entry", "SO7"],
        vec!["scan"],
        vec!["verify"],
        vec!["verify", "--claim", "nonsense"],
        vec!["member", "--entry", "SO3", "--poly", "x1 +"],
        vec![
            "scan",
            "--entry",
            "SO3",
            "--no-closure",
            "--close-after-plain",
        ],
        vec!["frobnicate"],
    ] {
        let o = gradedtor(&bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty(), "{bad:?}");
        assert!(!o.stderr.is_empty(), "{bad:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_gradedtor"))
        .args(["list"])
        .env("GRADEDTOR_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = gradedtor(&[
        "scan",
        "--entry",
        "loopU(2)",
        "--max-degree",
        "6",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "degree,ambient_rank,ideal_rank,quotient_rank,torsion\n0,1,0,1,\n2,1,0,1,\n4,2,1,1,\n6,3,2,1,\n"
    );
}

#[test]
fn poincare_and_list() {
    let o = gradedtor(&["poincare", "--entry", "SO4", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("match\n"));
    let o = gradedtor(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["name"] == "SO4" && e["default_max_degree"] == 16));
}

#[test]
fn in_process_runner() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gradedtor_cli::run(
        ["gradedtor", "scan", "--entry", "SO3", "--max-degree", "3"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 2);
    assert!(String::from_utf8(err).unwrap().contains("even"));
}
