use std::path::Path;
use std::process::{Command, Output};

use neartrig::cli::curve::parse_csv;

fn neartrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_neartrig")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(neartrig(&["eval", "cos_m", "--m", "2", "--x", "1"]).status.code(), Some(0));
    assert_eq!(neartrig(&["eval", "cos_m", "--m", "-1", "--x", "1"]).status.code(), Some(2));
    assert_eq!(neartrig(&["eval", "nope", "--x", "1"]).status.code(), Some(2));
    assert_eq!(neartrig(&["figure", "9"]).status.code(), Some(2));
    assert_eq!(neartrig(&["eval", "cos_m", "--m", "400", "--x", "1000"]).status.code(), Some(3));
    let missing = Path::new(env!("CARGO_TARGET_TMPDIR")).join("no_such_dir").join("x.csv");
    let bad = neartrig(&["grid", "cos_m", "--m", "1", "--from", "0", "--to", "1", "--n", "3", "--out", missing.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(4));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn eval_prints_fifteen_significant_digits() {
    let o = neartrig(&["eval", "cos_m", "--m", "2", "--x", "3.14159265358979"]);
    assert_eq!(stdout(&o), "0.405284734569352\n");
    let o = neartrig(&["eval", "e_m", "--m", "-0.5", "--x", "1"]);
    assert_eq!(stdout(&o), "-0.0761590138255368\n");
}

#[test]
fn grid_output_is_deterministic() {
    let args = ["grid", "sin_m", "--m", "0.5", "--from", "-20", "--to", "20", "--n", "801"];
    let (a, b) = (neartrig(&args), neartrig(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains('\r'));
}

#[test]
fn gain_grid_is_odd() {
    let o = neartrig(&["grid", "fel_gain", "--from", "-20", "--to", "20", "--n", "801"]);
    let csv = parse_csv(&stdout(&o)).unwrap();
    assert_eq!(csv.rows.len(), 801);
    let v = csv.column("value").unwrap();
    let worst = (0..v.len()).map(|i| (v[i] + v[v.len() - 1 - i]).abs()).fold(0.0, f64::max);
    assert!(worst <= 1e-10, "{worst}");
}

#[test]
fn gaussian_grid_is_one_at_the_origin() {
    let o = neartrig(&["grid", "e_m", "--m", "-0.5", "--from", "-4", "--to", "4", "--n", "801"]);
    let csv = parse_csv(&stdout(&o)).unwrap();
    assert_eq!(csv.fn_label, "e_m");
    assert_eq!(csv.rows[400], vec![0.0, 1.0]);
}

#[test]
fn grid_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let o = neartrig(&["grid", "cos_m_deriv", "--m", "3", "--k", "2", "--from", "0", "--to", "5", "--n", "11", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# fn=cos_m_deriv params=m=3,k=2 generated-by=neartrig\nx,value\n"), "{text}");
}

#[test]
fn figure_writes_named_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let o = neartrig(&["figure", "4", "--outdir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> =
        std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names, ["fig4_e_m-0.5.csv", "fig4_e_m0.5.csv", "fig4_e_m0.csv"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn verify_json_reports() {
    for suite in ["series", "kk"] {
        let o = neartrig(&["verify", suite, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["suite"], suite);
        assert_eq!(v["overall_pass"], true);
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["pass"] == true && c["name"].is_string()));
    }
}

#[test]
fn verify_text_ends_with_summary() {
    let o = neartrig(&["verify", "odes"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l == "suite odes: PASS"), "{text}");
    assert!(text.ends_with("suite odes: PASS\n"));
}

#[test]
fn integral_prints_value_and_reference() {
    let o = neartrig(&["integral", "--fn", "cos", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let value: f64 = lines[0].strip_prefix("integral ").unwrap().parse().unwrap();
    let reference: f64 = lines[1].strip_prefix("reference ").unwrap().parse().unwrap();
    assert!((reference - 2.0 * std::f64::consts::PI).abs() < 1e-13);
    assert!((value - reference).abs() / reference < 1e-6);
}
