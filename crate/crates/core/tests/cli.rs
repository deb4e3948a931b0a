use std::path::PathBuf;
use std::process::{Command, Output};

fn bhdof(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhdof"))
        .args(args)
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "testdata", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_ehc_verdicts() {
    let full = bhdof(&["check-ehc", "--topology", &data("full_k4.json")]);
    assert_eq!(full.status.code(), Some(0));
    assert!(stdout(&full).starts_with("# seed=42\nEHC: HOLDS\n"));

    let id = bhdof(&["check-ehc", "--topology", &data("identity_k4.json")]);
    assert_eq!(id.status.code(), Some(1));
    let text = stdout(&id);
    assert!(
        text.contains("EHC: FAILS") && text.contains("max PIS size: 4"),
        "{text}"
    );

    let bad = bhdof(&["check-ehc", "--topology", &data("malformed.json")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 5 column 1"));

    let missing = bhdof(&["check-ehc", "--topology", &data("no_such_file.json")]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn tradeoff_csv_rows() {
    let k2 = stdout(&bhdof(&[
        "tradeoff",
        "--K",
        "2",
        "--M",
        "1",
        "--alpha-max",
        "2",
        "--steps",
        "3",
    ]));
    assert_eq!(
        k2,
        "alpha,dof_lower,dof_upper\n0.0,0.5,0.5\n1.0,1.0,1.0\n2.0,1.0,1.0\n"
    );

    let k3 = stdout(&bhdof(&[
        "tradeoff",
        "--K",
        "3",
        "--M",
        "1",
        "--alpha-max",
        "1",
        "--steps",
        "2",
    ]));
    assert_eq!(k3.lines().nth(1), Some("0.0,0.5,0.666667"));

    let k4 = stdout(&bhdof(&[
        "tradeoff",
        "--K",
        "4",
        "--M",
        "2",
        "--alpha-max",
        "3",
        "--steps",
        "4",
    ]));
    assert_eq!(k4.lines().nth(1), Some("0.0,1.0,1.0"));
    for row in k4.lines().skip(1) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[1], cols[2]);
    }

    let seeded = bhdof(&[
        "tradeoff",
        "--K",
        "2",
        "--M",
        "1",
        "--alpha-max",
        "2",
        "--seed",
        "7",
    ]);
    assert!(String::from_utf8_lossy(&seeded.stderr).contains("seed=7"));

    for bad in [
        vec![
            "tradeoff",
            "--K",
            "2",
            "--M",
            "1",
            "--alpha-max",
            "2",
            "--steps",
            "1",
        ],
        vec!["tradeoff", "--K", "2", "--M", "1", "--alpha-max", "-1"],
        vec!["tradeoff", "--K", "2", "--M", "1"],
    ] {
        assert_eq!(bhdof(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn feasibility_verdicts() {
    let star = bhdof(&[
        "feasibility",
        "--backhaul",
        &data("star_k5.json"),
        "--mode",
        "finite",
    ]);
    assert_eq!(star.status.code(), Some(0));
    assert!(stdout(&star).contains("FEASIBLE witness=0"));

    let ring = bhdof(&["feasibility", "--backhaul", &data("ring_k5.json")]);
    assert_eq!(ring.status.code(), Some(1));
    assert!(stdout(&ring).contains("INFEASIBLE"));

    let loose = bhdof(&[
        "feasibility",
        "--backhaul",
        &data("ring_k5.json"),
        "--mode",
        "asymptotic",
        "--epsilon",
        "0.5",
    ]);
    assert!(stdout(&loose).contains("FEASIBLE witness=0"));
}

#[test]
fn verify_conditions_triple() {
    let full = bhdof(&["verify-conditions", "--topology", &data("full_k4.json")]);
    assert_eq!(full.status.code(), Some(0));
    assert!(stdout(&full).contains("a=HOLDS b=HOLDS c=HOLDS CONSISTENT"));

    let id = bhdof(&[
        "verify-conditions",
        "--topology",
        &data("identity_k4.json"),
        "--trials",
        "3",
    ]);
    assert_eq!(id.status.code(), Some(1));
    assert!(stdout(&id).contains("a=FAILS b=FAILS c=FAILS CONSISTENT"));
}

#[test]
fn simulate_csv_is_stable() {
    let args = [
        "simulate",
        "--topology",
        &data("full_k3_m2.json"),
        "--scheme",
        "qf",
        "--seed",
        "3",
    ];
    let first = stdout(&bhdof(&args));
    assert_eq!(first, stdout(&bhdof(&args)));
    let mut lines = first.lines();
    assert_eq!(
        lines.next(),
        Some("P,rate_user_0,rate_user_1,rate_user_2,slope_fit")
    );
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0][0], 1000.0);
    assert!((rows[0][4] - 2.0).abs() < 0.1);

    let zf = bhdof(&[
        "simulate",
        "--topology",
        &data("full_k4.json"),
        "--grid",
        "1e2,1e4,1e6",
    ]);
    assert_eq!(zf.status.code(), Some(0));
    assert_eq!(stdout(&zf).lines().count(), 4);

    let narrow = bhdof(&[
        "simulate",
        "--topology",
        &data("full_k4.json"),
        "--grid",
        "1e3,2e3,3e3",
    ]);
    assert_eq!(narrow.status.code(), Some(2));
}

#[test]
fn partition_converse_report() {
    let out = bhdof(&[
        "partition-converse",
        "--topology",
        &data("full_k4.json"),
        "--backhaul",
        &data("complete_k4.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("alpha=1.5") && text.contains("converse_dof=1.0"),
        "{text}"
    );

    let mismatch = bhdof(&[
        "partition-converse",
        "--topology",
        &data("full_k4.json"),
        "--backhaul",
        &data("star_k5.json"),
    ]);
    assert_eq!(mismatch.status.code(), Some(2));
}
