use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hrglab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hrglab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

#[test]
fn gen_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let model = [
        "--model", "hrg", "--n", "1500", "--alpha", "0.75", "--C", "-0.5", "--seed", "9",
    ];
    let mut args = vec!["gen"];
    args.extend(model);
    args.extend(["--out", "coords.txt", "--edges-out", "edges.txt"]);
    assert_eq!(hrglab(&args, dir.path()).status.code(), Some(0));

    let mut args = vec!["analyze"];
    args.extend(model);
    args.extend([
        "--coords",
        "coords.txt",
        "--edges",
        "edges.txt",
        "--analyses",
        "degeneracy,colouring,clique-extend,inner-degrees,separator",
        "--out",
        "one.csv",
        "--colouring-out",
        "colours.txt",
        "--ordering-out",
        "order.txt",
    ]);
    let out = hrglab(&args, dir.path());
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let csv = fs::read_to_string(dir.path().join("one.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
    let colours = fs::read_to_string(dir.path().join("colours.txt")).unwrap();
    assert_eq!(colours.lines().count(), 1500);
    let mut order: Vec<u32> = fs::read_to_string(dir.path().join("order.txt"))
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    order.sort_unstable();
    assert_eq!(order, (0..1500).collect::<Vec<u32>>());

    assert_eq!(
        hrglab(&["validate", "one.csv"], dir.path()).status.code(),
        Some(0)
    );
}

#[test]
fn sweep_is_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("sweep.conf"),
        "model = hrg\nn = 600,900\nalpha = 0.6,0.9\nbase_seed = 3\nreps = 2\n",
    )
    .unwrap();
    for (threads, out) in [("1", "a.csv"), ("2", "b.csv")] {
        let status = hrglab(
            &[
                "sweep",
                "--config",
                "sweep.conf",
                "--threads",
                threads,
                "--out",
                out,
            ],
            dir.path(),
        )
        .status;
        assert_eq!(status.code(), Some(0));
    }
    let a = fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.csv")).unwrap());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 2 + 8);
}

#[test]
fn invalid_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| hrglab(args, dir.path()).status.code();
    assert_eq!(
        code(&["sweep", "--model", "hrg", "--n", "100", "--alpha", "1.0"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "gen",
            "--model",
            "girg",
            "--n",
            "10",
            "--alpha",
            "0.7",
            "--C",
            "1",
            "--out",
            "x",
            "--edges-out",
            "y"
        ]),
        Some(2)
    );
    assert_eq!(code(&["validate", "missing.csv"]), Some(2));
    assert_eq!(code(&["bogus"]), Some(2));
}

#[test]
fn validate_flags_chain_violations() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        hrglab(
            &["sweep", "--model", "girg", "--n", "500", "--alpha", "0.7", "--out", "s.csv"],
            dir.path()
        )
        .status
        .code(),
        Some(0)
    );
    let text = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut fields: Vec<String> = lines[2].split(',').map(String::from).collect();
    // colours_greedy far above kappa + 1
    fields[12] = "100000".into();
    lines[2] = fields.join(",");
    fs::write(dir.path().join("bad.csv"), lines.join("\n") + "\n").unwrap();
    let out = hrglab(&["validate", "bad.csv"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colours"));
}
