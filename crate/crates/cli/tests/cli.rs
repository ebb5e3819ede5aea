use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn whopf(args: &[&str], field: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_whopf"));
    cmd.args(args).env_remove("WHOPF_FIELD");
    if let Some(f) = field {
        cmd.env("WHOPF_FIELD", f);
    }
    cmd.output().unwrap()
}

fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whopf-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn example(dir: &Path, file: &str, args: &[&str]) -> String {
    let path = dir.join(file).to_string_lossy().into_owned();
    let mut full = vec!["example"];
    full.extend(args);
    full.extend(["--out", &path]);
    let o = whopf(&full, None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

#[test]
fn pair_groupoid_passes_every_suite() {
    let dir = scratch("pair");
    let file = example(&dir, "pair.toml", &["groupoid", "pair", "2"]);
    let o = whopf(&["verify", &file], None);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["kind"], "groupoid");
    assert_eq!(json["failed"], 0);
    assert!(json["checks"].as_u64().unwrap() > 500);
}

#[test]
fn corrupted_product_fails_with_a_witness() {
    let dir = scratch("corrupt");
    let file = example(&dir, "z2.toml", &["group_algebra", "2"]);
    let text = std::fs::read_to_string(&file).unwrap().replace("[1, 1, 0, \"1\"]", "[1, 1, 0, \"2\"]");
    std::fs::write(&file, text).unwrap();
    let o = whopf(&["verify", &file, "--suite", "bialgebra", "--format", "text"], None);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] comultiplicativity"), "{out}");
    assert!(out.contains("input"), "{out}");
}

#[test]
fn z2_double_is_four_dimensional_and_hopf() {
    let dir = scratch("double");
    let file = example(&dir, "z2.toml", &["group_algebra", "2"]);
    let dbl = dir.join("d.toml").to_string_lossy().into_owned();
    assert_eq!(whopf(&["double", &file, "--out", &dbl], None).status.code(), Some(0));
    let text = std::fs::read_to_string(&dbl).unwrap();
    assert!(text.contains("dim = 4"));
    assert!(text.contains("construction = \"drinfeld double\""));
    assert_eq!(whopf(&["verify", &dbl, "--suite", "hopf"], None).status.code(), Some(0));
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let dir = scratch("determinism");
    let file = example(&dir, "discrete.toml", &["discrete_groupoid", "2"]);
    let a = whopf(&["verify", &file, "--format", "text"], None);
    let b = whopf(&["verify", &file, "--format", "text"], None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_denominator_exits_with_field_error() {
    let dir = scratch("zero");
    let file = example(&dir, "z2.toml", &["group_algebra", "2"]);
    let text = std::fs::read_to_string(&file).unwrap().replace("counit = [\"1\", \"1\"]", "counit = [\"1/0\", \"1\"]");
    std::fs::write(&file, text).unwrap();
    let o = whopf(&["verify", &file], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("field error"), "{}", stderr(&o));
}

#[test]
fn syntax_error_reports_a_position() {
    let dir = scratch("syntax");
    let file = dir.join("bad.toml");
    std::fs::write(&file, "kind = \"algebra\"\ndim = = 2\nunit = []\n").unwrap();
    let o = whopf(&["verify", file.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn unknown_suite_and_bad_example_exit_two() {
    let dir = scratch("unknown");
    let file = example(&dir, "z2.toml", &["group_algebra", "2"]);
    assert_eq!(whopf(&["verify", &file, "--suite", "quantum"], None).status.code(), Some(2));
    assert_eq!(whopf(&["example", "pair_groupoid", "zero"], None).status.code(), Some(2));
    assert_eq!(whopf(&["example", "graded_yd", "pair", "2", "f_12"], None).status.code(), Some(2));
}

#[test]
fn field_override_switches_to_a_prime_field() {
    let dir = scratch("override");
    let file = example(&dir, "pair.toml", &["pair_groupoid", "2"]);
    let o = whopf(&["verify", &file, "--suite", "double"], Some("prime 5"));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["field"], "prime 5");
}

#[test]
fn graded_example_passes_the_yd_suite() {
    let dir = scratch("graded");
    let file = example(&dir, "graded.toml", &["graded_yd", "pair", "2", "id_1"]);
    let o = whopf(&["verify", &file, "--suite", "yd"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = whopf(&["verify", &file, "--suite", "hopf"], None);
    assert_eq!(o.status.code(), Some(2));
}
