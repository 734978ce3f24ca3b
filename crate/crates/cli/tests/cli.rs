use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;
use tempfile::TempDir;

use wiener_cli::{
    run_closed_form, run_compute, run_enumerate, run_extremal, run_transform, run_verify_erratum,
    ClosedForm, ClosedFormReport, ComputeMethod, ErratumReport, FamilyParams, IndexReport,
    TransformReport,
};
use wiener_core::{
    enumerate_trees, BetheSpec, EnumerationQuery, ExtremalReport, IndexKind, Method, Tree,
};

const B3: &str = "9\n0 1\n0 2\n1 3\n1 4\n1 5\n2 6\n2 7\n2 8\n";

fn wiener(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wiener"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_input(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn round_trip<T: Serialize + DeserializeOwned>(json: &str) -> T {
    let parsed: T = serde_json::from_str(json).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap();
    assert_eq!(again, json.trim_end());
    parsed
}

fn value_of(report: &IndexReport, method: Method) -> u128 {
    report.values.iter().find(|v| v.method == method).unwrap().to_u128().unwrap()
}

#[test]
fn path_four_all_methods() {
    let p4 = Tree::path(4).unwrap();
    let r = run_compute("p4", &p4, IndexKind::Wiener, ComputeMethod::All, None).unwrap();
    assert!(r.agreement);
    assert_eq!(r.values.len(), 3);
    assert!(r.values.iter().all(|v| v.to_u128() == Some(10)));
    let r = run_compute("p4", &p4, IndexKind::TerminalWiener, ComputeMethod::All, None).unwrap();
    assert!(r.agreement);
    assert_eq!(value_of(&r, Method::EdgeCut), 3);
}

#[test]
fn bethe_tree_from_file() {
    let dir = TempDir::new().unwrap();
    let input = write_input(&dir, "b3.txt", B3);
    for (index, expected) in [("wiener", "88"), ("terminal-wiener", "48")] {
        let out = wiener(&["--json", "compute", "--input", &input, "--index", index, "--method", "all"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let report: IndexReport = round_trip(&stdout(&out));
        assert!(report.agreement);
        assert_eq!(report.values.len(), 3);
        for v in &report.values {
            assert_eq!(v.value.to_string(), expected);
        }
    }
}

#[test]
fn explicit_root_matches_default() {
    let t = Tree::parse(B3).unwrap();
    for root in [0, 1, 2] {
        let r = run_compute("b3", &t, IndexKind::TerminalWiener, ComputeMethod::Recursive, Some(root)).unwrap();
        assert_eq!(value_of(&r, Method::Recursive), 48);
    }
    assert!(run_compute("b3", &t, IndexKind::Wiener, ComputeMethod::Recursive, Some(3)).is_err());
}

#[test]
fn all_methods_agree_on_small_trees() {
    for n in 1..=11 {
        for t in enumerate_trees(&EnumerationQuery::new(n)).unwrap() {
            for index in [IndexKind::Wiener, IndexKind::TerminalWiener] {
                let r = run_compute("t", &t, index, ComputeMethod::All, None).unwrap();
                assert!(r.agreement, "disagreement on {}", t.serialize());
            }
        }
    }
}

#[test]
fn erratum_reports() {
    let r = run_verify_erratum(&BetheSpec::new(vec![2, 3]).unwrap(), 1000).unwrap();
    let got: Vec<_> = [&r.heydari, &r.corrected, &r.edge_cut, &r.brute_force]
        .iter()
        .map(|v| v.to_u128().unwrap())
        .collect();
    assert_eq!(got, vec![60, 88, 88, 88]);
    assert!(r.verified());

    let r = run_verify_erratum(&BetheSpec::new(vec![3]).unwrap(), 1000).unwrap();
    assert_eq!(r.heydari.to_u128(), Some(6));
    assert_eq!(r.corrected.to_u128(), Some(9));
    assert_eq!(r.edge_cut.to_u128(), Some(9));
    assert!(r.verified());

    let out = wiener(&["--json", "verify-erratum", "--degrees", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: ErratumReport = round_trip(&stdout(&out));
    assert_eq!(parsed, run_verify_erratum(&BetheSpec::new(vec![2, 3]).unwrap(), 1000).unwrap());
}

#[test]
fn extremal_order_five() {
    let r = run_extremal(5, 3, 12).unwrap();
    assert_eq!(r.min_tw.to_string(), "8");
    assert_eq!(r.class_size, 1);
    assert!(r.verified());

    let out = wiener(&["--json", "extremal", "--n", "5", "--delta", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: ExtremalReport = round_trip(&stdout(&out));
    assert_eq!(parsed, r);
}

#[test]
fn closed_form_outputs() {
    let r = run_closed_form(ClosedForm::TwBethe, FamilyParams::Bethe { degrees: vec![2, 3] }).unwrap();
    assert_eq!(r.value.to_u128(), Some(48));

    let out = wiener(&["closed-form", "tw-bethe", "--degrees", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("48"));

    let out = wiener(&["--json", "closed-form", "wiener-dendrimer", "--k", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: ClosedFormReport = round_trip(&stdout(&out));
    assert_eq!(parsed.value.to_u128(), Some(117));
}

#[test]
fn enumerate_order_four() {
    assert_eq!(run_enumerate(4, None, 16).unwrap().len(), 2);
    let out = wiener(&["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().last(), Some("count 2"));
    let docs: Vec<&str> = text.split("# tree ").skip(1).collect();
    assert_eq!(docs.len(), 2);
    for doc in docs {
        let body: String = doc
            .lines()
            .skip(1)
            .filter(|l| !l.starts_with("count"))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(Tree::parse(&body).unwrap().order(), 4);
    }
}

#[test]
fn generate_then_compute() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("dendrimer.txt");
    let out = wiener(&["generate", "dendrimer", "--k", "2", "--d", "3", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let tree = Tree::parse(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(tree.order(), 10);
    let out = wiener(&["--json", "compute", "--input", out_path.to_str().unwrap(), "--index", "wiener"]);
    let report: IndexReport = round_trip(&stdout(&out));
    assert_eq!(report.values[0].value.to_string(), "117");
}

#[test]
fn transform_tab() {
    let r_tree = Tree::star(4).unwrap();
    let report = run_transform(&r_tree, 0, 3, 5, 3).unwrap();
    assert_eq!(report.states.len(), 4);
    assert!(report.checks.iter().all(|c| c.holds));
    let last = report.states.last().unwrap();
    assert_eq!((last.a, last.b), (0, 8));

    let dir = TempDir::new().unwrap();
    let input = write_input(&dir, "r.txt", &Tree::path(3).unwrap().serialize());
    let out = wiener(&["--json", "transform", "tab", "--tree", &input, "--root", "1", "--a", "2", "--b", "3", "--steps", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: TransformReport = round_trip(&stdout(&out));
    assert!(parsed.checks.iter().all(|c| c.holds));
}

fn exit_of(args: &[&str]) -> Option<i32> {
    wiener(args).status.code()
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let cycle = write_input(&dir, "cycle.txt", "3\n0 1\n1 2\n2 0\n");
    let disconnected = write_input(&dir, "split.txt", "4\n0 1\n2 3\n");
    let p2 = write_input(&dir, "p2.txt", "2\n0 1\n");

    assert_eq!(exit_of(&["--help"]), Some(0));
    assert_eq!(exit_of(&["--version"]), Some(0));
    assert_eq!(exit_of(&["frobnicate"]), Some(1));
    assert_eq!(exit_of(&["compute", "--index", "wiener"]), Some(1));
    assert_eq!(exit_of(&["closed-form", "tw-dendrimer", "--degrees", "3"]), Some(1));
    let missing = dir.path().join("missing.txt");
    assert_eq!(exit_of(&["compute", "--input", missing.to_str().unwrap(), "--index", "wiener"]), Some(1));

    assert_eq!(exit_of(&["compute", "--input", &cycle, "--index", "wiener"]), Some(2));
    assert_eq!(exit_of(&["compute", "--input", &disconnected, "--index", "wiener"]), Some(2));
    assert_eq!(exit_of(&["compute", "--input", &p2, "--index", "wiener", "--method", "recursive"]), Some(2));
    assert_eq!(exit_of(&["closed-form", "wiener-dendrimer", "--k", "2", "--d", "2"]), Some(2));
    assert_eq!(exit_of(&["extremal", "--n", "13", "--delta", "3"]), Some(2));
    assert_eq!(exit_of(&["enumerate", "--n", "17"]), Some(2));
    assert_eq!(exit_of(&["generate", "bethe", "--degrees", "10,10,10", "--cap", "100"]), Some(2));
}

#[test]
fn parse_errors_are_reported() {
    let dir = TempDir::new().unwrap();
    let bad = write_input(&dir, "bad.txt", "3\n0 1\n0 7\n");
    let out = wiener(&["compute", "--input", &bad, "--index", "wiener"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("7"), "{err}");
}

#[test]
fn generated_files_reparse() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [
        ("bethe", vec!["bethe", "--degrees", "2,2,3"]),
        ("kd", vec!["bethe-kd", "--k", "3", "--d", "3"]),
        ("star", vec!["starlike", "--n", "8", "--delta", "3", "--lengths", "3,2,2"]),
    ] {
        let path = dir.path().join(name);
        let mut full = vec!["generate"];
        full.extend(args);
        full.extend(["--out", path.to_str().unwrap()]);
        assert_eq!(exit_of(&full), Some(0), "{name}");
        let text = fs::read_to_string(Path::new(&path)).unwrap();
        let t = Tree::parse(&text).unwrap();
        assert_eq!(format!("{}\n", t.serialize()), text);
    }
}
