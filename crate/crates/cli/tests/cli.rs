use std::path::PathBuf;
use std::process::{Command, Output};

use exalg::Form;
use proptest::prelude::*;
use ratlin::q;
use skewtor::{commands, Report, Status};

fn skewtor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewtor")).args(args).env_remove("SKEWTOR_MODEL_PATH").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn models_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("models")
}

#[test]
fn torsion_of_heis7() {
    let o = skewtor(&["torsion", "heis7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let t = Form::parse(7, out.trim().strip_prefix("T = ").unwrap()).unwrap();
    assert_eq!(t, Form::parse(7, "-e567 + e135 - e347 - e146").unwrap());
}

#[test]
fn spin_eig_of_contact_torsion() {
    let o = skewtor(&["spin-eig", "5", "2*e1^e2^e5 + 2*e3^e4^e5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(-4, 0, 0, 4)");
    let neg = skewtor(&["spin-eig", "5", "-2*e1^e2^e5 - 2*e3^e4^e5"]);
    assert_eq!(stdout(&neg).trim(), "(-4, 0, 0, 4)");
}

#[test]
fn decompose_g2_form_is_pure_type_one() {
    let o = skewtor(&["decompose", "heis7", g2kit::CANONICAL]);
    let out = stdout(&o);
    let part1 = out.lines().find_map(|l| l.strip_prefix("part1 = ")).unwrap();
    assert_eq!(Form::parse(7, part1).unwrap(), Form::parse(7, g2kit::CANONICAL).unwrap());
    assert!(out.contains("part7 = 0") && out.contains("part27 = 0"));
}

#[test]
fn examples_suite_reports_heis7_ricci() {
    let o = skewtor(&["verify", "examples"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().find(|l| l.contains("heis7.ric-nabla")).unwrap().to_string();
    assert!(line.starts_with("PASS"));
    assert!(line.contains("diag(-2, 0, -2, 0, 0, -2, -2)"));
}

#[test]
fn json_report_round_trips() {
    let o = skewtor(&["verify", "contact", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.suite, "contact");
    assert_eq!(serde_json::to_string_pretty(&r).unwrap().trim(), text.trim());
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let row = &value["checks"][0];
    for key in ["id", "anchor", "status", "value", "expected", "basis"] {
        assert!(row.get(key).is_some(), "{key}");
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    let unknown = skewtor(&["verify", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("examples"));
    assert_eq!(skewtor(&["torsion", "no-such-model"]).status.code(), Some(2));
    assert_eq!(skewtor(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(skewtor(&["spin-eig", "12", "e1"]).status.code(), Some(2));
    assert_eq!(skewtor(&["torsion", "twist7"]).status.code(), Some(2));
    assert_eq!(skewtor(&["decompose", "heis5", "e12"]).status.code(), Some(2));
}

#[test]
fn parse_errors_report_the_column() {
    let o = skewtor(&["spin-eig", "5", "e12 + 3*x4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 9"), "{}", stderr(&o));
}

#[test]
fn model_path_adds_models() {
    let dir = models_dir();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_skewtor")).args(args).env("SKEWTOR_MODEL_PATH", &dir).output().unwrap()
    };
    let list = stdout(&run(&["models", "list"]));
    assert!(list.contains("heis3") && list.contains("kt-scaled") && list.contains("heis7"));
    let t = stdout(&run(&["torsion", "heis3"]));
    assert_eq!(t.trim(), "T = 2*e1^e2^e3");
    assert_eq!(run(&["contact", "report", "heis3"]).status.code(), Some(0));
    assert_eq!(run(&["hermitian", "report", "kt-scaled"]).status.code(), Some(0));
    assert_eq!(skewtor(&["torsion", "heis3"]).status.code(), Some(2));
}

#[test]
fn shown_models_reload_from_a_directory() {
    let dir = std::env::temp_dir().join(format!("skewtor-models-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let shown = stdout(&skewtor(&["models", "show", "su2-r2"])).replace("\"su2-r2\"", "\"su2-r2-copy\"");
    std::fs::write(dir.join("copy.json"), shown).unwrap();
    std::fs::write(dir.join("notes.txt"), "ignored").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_skewtor"))
        .args(["torsion", "su2-r2-copy"])
        .env("SKEWTOR_MODEL_PATH", &dir)
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "T = 2*e2^e3^e5");
    std::fs::write(dir.join("broken.json"), "{\"name\": \"x\", \"dim\": 3, \"coframe_d\": [[3, [[[1, 2], \"1/0\"]]]]}")
        .unwrap();
    let bad = Command::new(env!("CARGO_BIN_EXE_skewtor"))
        .args(["models", "list"])
        .env("SKEWTOR_MODEL_PATH", &dir)
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("broken.json"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convention_ledger_lists_pinned_identities() {
    let o = skewtor(&["--convention-ledger"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pinned by clifford/g2-form.spectrum [PASS]"));
    assert!(!out.contains("FAIL") && !out.contains("MISSING"));
}

#[test]
fn contact_report_rejects_other_structures() {
    assert!(commands::contact_report("kt").is_err());
    assert!(commands::hermitian_report("heis5").is_err());
    let r = commands::contact_report("heis5").unwrap();
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
}

fn coefficient() -> impl Strategy<Value = ratlin::Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn three_form() -> impl Strategy<Value = Form> {
    proptest::collection::vec(coefficient(), 35).prop_map(|c| {
        let mut it = c.into_iter();
        Form::from_fn(7, 3, |_| it.next().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_parts_sum_to_the_input(a in three_form()) {
        let out = commands::decompose("heis7", &a.to_string()).unwrap();
        let mut sum = Form::zero(7);
        for line in out.lines() {
            let (_, rhs) = line.split_once(" = ").unwrap();
            sum += &Form::parse(7, rhs).unwrap();
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn spin_eig_of_negated_form_is_reflected(a in three_form()) {
        let plus = commands::spin_eig(7, &a.to_string()).unwrap();
        let minus = commands::spin_eig(7, &(-&a).to_string()).unwrap();
        // The spectrum of -a is the reflection of the spectrum of a.
        let parse = |s: &str| -> Vec<ratlin::Rational> {
            s.trim().trim_start_matches('(').trim_end_matches(')').split(", ").map(|x| ratlin::parse_rational(x).unwrap()).collect()
        };
        if plus.starts_with('(') && minus.starts_with('(') {
            let mut neg: Vec<_> = parse(&minus).into_iter().map(|x| -x).collect();
            neg.sort();
            prop_assert_eq!(parse(&plus), neg);
        }
    }
}
