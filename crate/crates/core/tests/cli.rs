use std::process::Command;

fn arena(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramsey-arena"))
        .args(args)
        .output()
        .expect("run binary");
    (
        out.status.success(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn bound_prints_all_three_quantities() {
    let (ok, out, _) = arena(&["bound", "--n", "9", "--m", "9"]);
    assert!(ok);
    assert!(out.contains("lower_bound(9,9) = 22"), "{out}");
    assert!(out.contains("= 33 with k = 6"), "{out}");
    assert!(out.contains("21 <= r <= 23"), "{out}");
}

#[test]
fn play_writes_identical_transcripts_for_identical_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let p = path.to_str().unwrap();
        let (ok, out, err) = arena(&[
            "play", "--red", "codd", "--blue", "aux:5:6", "--builder", "random", "--painter", "random", "--seed", "3",
            "--max-rounds", "50", "--transcript", p,
        ]);
        assert!(ok, "{err}");
        assert!(out.contains("outcome"));
        std::fs::read_to_string(path).unwrap()
    };
    let a = run("a.txt");
    assert_eq!(a, run("b.txt"));
    let parsed = online_ramsey::arena::parse_transcript(&a).unwrap();
    assert_eq!(parsed.seed, 3);
}

#[test]
fn play_theorem3_against_potential() {
    let (ok, out, _) = arena(&[
        "play", "--red", "c3", "--blue", "path:6", "--builder", "theorem3", "--painter", "potential", "--seed", "0",
        "--max-rounds", "24",
    ]);
    assert!(ok);
    assert!(out.contains("outcome blue after 14 rounds"), "{out}");
}

#[test]
fn play_rejects_mismatched_builder() {
    let (ok, _, err) = arena(&[
        "play", "--red", "c3", "--blue", "path:6", "--builder", "theorem5", "--painter", "potential", "--seed", "0",
        "--max-rounds", "24",
    ]);
    assert!(!ok);
    assert!(err.contains("theorem5"), "{err}");
}

#[test]
fn solve_emits_a_verifiable_strategy() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.txt");
    let (ok, out, _) = arena(&[
        "solve", "--red", "c3", "--blue", "path:3", "--budget", "5", "--board", "5", "--emit-strategy",
        path.to_str().unwrap(),
    ]);
    assert!(ok);
    assert!(out.contains("value 5"), "{out}");
    let tree: online_ramsey::solver::StrategyTree = std::fs::read_to_string(&path).unwrap().parse().unwrap();
    let t = online_ramsey::board::TargetSpec::triangle_path(3);
    tree.verify(&t, &Default::default(), Some(5), 5).unwrap();
}

#[test]
fn solve_above_budget_exits_nonzero() {
    let (ok, out, _) = arena(&["solve", "--red", "p3", "--blue", "path:4", "--budget", "3"]);
    assert!(!ok);
    assert!(out.contains("value above budget"), "{out}");
}

#[test]
fn verify_suites_report_and_exit_zero() {
    for suite in ["golden", "bounds", "solver-exact"] {
        let (ok, out, _) = arena(&["verify", "--suite", suite]);
        assert!(ok, "{out}");
        assert!(out.contains(&format!("suite {suite}: PASS")), "{out}");
    }
    let (ok, _, _) = arena(&["verify", "--suite", "nope"]);
    assert!(!ok);
}
