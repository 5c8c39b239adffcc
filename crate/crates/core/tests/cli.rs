use std::process::{Command, Output};

fn fixture(file: &str) -> String {
    format!("{}/fixtures/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goodsg")).args(args).env_remove("GOODSG_BOX_MARGIN").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn level_count(o: &Output) -> usize {
    stdout(o).lines().filter(|l| l.starts_with('A')).count()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", &fixture("n3_symmetric.json")]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).ends_with("PASS\n"));

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, r#"{"dim":2,"conductor":[3,5],"small_elements":[[0,0],[1,2],[2,3],[2,4],[3,3]]}"#).unwrap();
    let bad = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1), "{}", stdout(&bad));

    let axioms = run(&["validate", &fixture("n3_not_good.json")]);
    assert_eq!(axioms.status.code(), Some(1));
    assert!(stdout(&axioms).contains("is not an element"));
    assert!(stdout(&axioms).ends_with("FAIL\n"));

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "{\"dim\": 2,").unwrap();
    let m = run(&["validate", malformed.to_str().unwrap()]);
    assert_eq!(m.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&m.stderr).contains("line"));

    assert_eq!(run(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn apery_level_counts() {
    for (file, w, n) in [
        ("product_4_7_by_3_5.json", "4,3", 7),
        ("tangent_branches.json", "2,3", 5),
        ("n3_symmetric.json", "2,2,3", 7),
        ("numerical_4_7.json", "4", 4),
    ] {
        let o = run(&["apery", &fixture(file), "--omega", w]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert_eq!(level_count(&o), n, "{file}");
    }
    let out = run(&["apery", &fixture("tangent_branches.json"), "--omega", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let dim = run(&["apery", &fixture("tangent_branches.json"), "--omega", "2"]);
    assert_eq!(dim.status.code(), Some(2));
}

#[test]
fn duality_table() {
    let o = run(&["duality", &fixture("n3_symmetric.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.ends_with("PASS")).count(), 7);
    assert!(text.contains("A1' = A7"));
}

#[test]
fn reconstruct_cusps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cusps.json");
    let o = run(&["reconstruct", "2,3", "2,3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gamma (5,5)"));
    let written = std::fs::read_to_string(&out).unwrap();
    let golden = std::fs::read_to_string(fixture("transversal_cusps.json")).unwrap();
    assert_eq!(written.trim_end(), golden.trim_end());
    assert_eq!(run(&["validate", out.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn blowups() {
    let o = run(&["blowup", &fixture("numerical_4_7.json")]);
    assert!(stdout(&o).contains("blowup generators [3, 4]"));
    let tangent = fixture("tangent_branches.json");
    assert_eq!(run(&["blowup", &tangent]).status.code(), Some(1));
    let local = run(&["blowup", &tangent, "--local", &fixture("tangent_branches_blowup.json")]);
    assert_eq!(local.status.code(), Some(0), "{}", stdout(&local));
}

#[test]
fn well_behaved_verdicts() {
    let tangent = run(&["wellbehaved", &fixture("tangent_branches.json"), "--omega", "2,3"]);
    assert_eq!(tangent.status.code(), Some(0));
    assert!(stdout(&tangent).contains("level 5"));
    let product = run(&["wellbehaved", &fixture("product_4_7_by_3_5.json"), "--omega", "4,3"]);
    assert_eq!(product.status.code(), Some(1));
}

#[test]
fn product_of_fixtures() {
    let o = run(&["product", &fixture("numerical_4_7.json"), &fixture("numerical_3_5.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(level_count(&o), 7);
}

#[test]
fn plots_are_deterministic() {
    let args = ["plot", &fixture("tangent_branches.json"), "--omega", "2,3"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&run(&args)));
    assert!(stdout(&a).lines().last().unwrap().starts_with("   0 1"));

    let dir = tempfile::tempdir().unwrap();
    let (x, y) = (dir.path().join("x.svg"), dir.path().join("y.svg"));
    for f in [&x, &y] {
        let mut v = args.to_vec();
        v.extend(["--out", f.to_str().unwrap()]);
        assert_eq!(run(&v).status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&x).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&y).unwrap());
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}
