use std::process::{Command as Process, Output};

use bousfield_cli::{parse_expr, run, Command, Format, Verb};
use bousfield_core::{ClassExpr, Generator};
use proptest::prelude::*;

fn bin(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_bousfield"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generator() -> impl Strategy<Value = Generator> {
    use Generator::*;
    prop_oneof![
        Just(Zero),
        Just(Sphere),
        Just(Q),
        Just(BP),
        Just(HFp),
        Just(I),
        (0u32..=65536).prop_map(F),
        (0u32..20).prop_map(T),
        (0u32..20).prop_map(K),
        (0u32..20).prop_map(E),
    ]
}

fn expr() -> impl Strategy<Value = ClassExpr> {
    generator().prop_map(ClassExpr::gen).prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::smash(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ClassExpr::wedge(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), e.clone());
        let squeezed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_expr(&squeezed).unwrap(), e.clone());
        let unicode = text.replace(" v ", " ∨ ").replace(" ^ ", " ∧ ");
        prop_assert_eq!(parse_expr(&unicode).unwrap(), e);
    }

    #[test]
    fn parser_never_panics(s in "[ ()0-9vSIQFTKEHBP^∨∧p]{0,24}") {
        if let Err(e) = parse_expr(&s) {
            prop_assert!(e.offset <= s.len());
        }
    }
}

#[test]
fn parse_examples() {
    use Generator::*;
    assert_eq!(parse_expr("T(2) ^ K(3)").unwrap(), ClassExpr::smash(T(2), K(3)));
    assert_eq!(
        parse_expr("K(0) v K(1) ^ F(2)").unwrap(),
        ClassExpr::wedge(K(0), ClassExpr::smash(K(1), F(2)))
    );
    assert_eq!(parse_expr("E(").unwrap_err().offset, 2);
}

fn json_run(verb: Verb, exprs: &[&str], category: Option<&str>) -> String {
    let owned: Vec<String> = exprs.iter().map(|s| s.to_string()).collect();
    let mut c = Command::new(verb, &owned).unwrap().category(category).unwrap();
    c.format = Format::Json;
    c.depth = Some(3);
    run(&c).unwrap()
}

#[test]
fn json_output_is_deterministic() {
    let cases: [(Verb, &[&str], Option<&str>); 8] = [
        (Verb::Eval, &["E(2) ^ (T(1) v F(3))"], None),
        (Verb::Eval, &["T(2) v BP ^ F(1)"], Some("BP")),
        (Verb::Eq, &["T(2)", "K(2)"], None),
        (Verb::Leq, &["I", "HFp"], Some("I")),
        (Verb::Report, &[], None),
        (Verb::Lattice, &[], Some("E(2)")),
        (Verb::Registry, &[], Some("harmonic")),
        (Verb::Graph, &[], None),
    ];
    for (verb, exprs, cat) in cases {
        let a = json_run(verb, exprs, cat);
        let b = json_run(verb, exprs, cat);
        assert_eq!(a, b, "{verb:?}");
        serde_json::from_str::<serde_json::Value>(&a).unwrap();
    }
    let o1 = bin(&["report", "--format", "json", "--max-n", "4"]);
    let o2 = bin(&["report", "--format", "json", "--max-n", "4"]);
    assert!(o1.status.success());
    assert_eq!(o1.stdout, o2.stdout);
}

#[test]
fn documented_examples() {
    let o = bin(&["eval", "--category", "harmonic", "T(2) ^ F(1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "support {2}\n");

    let o = bin(&["report", "--category", "E(2)", "--max-n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("E(2)"));
    assert!(!text.contains("FAILS") && !text.contains("OPEN"), "{text}");

    let o = bin(&["invlimit", "--depth", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("16 elements"));
    assert!(text.contains("isomorphism onto 2^{0..3}: true"));
}

#[test]
fn exit_codes() {
    let o = bin(&["eq", "T(2)", "K(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("OPEN"));

    let o = bin(&["leq", "F(1)", "F(3)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("FAILS"));

    let o = bin(&["eval", "E("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));

    assert_eq!(bin(&["eval", "--category", "X(1)", "K(1)"]).status.code(), Some(2));
    assert_eq!(bin(&["lattice"]).status.code(), Some(2));
    assert_eq!(bin(&["support", "K(1)", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "K(70000)"]).status.code(), Some(2));
    assert_eq!(bin(&["lattice", "--category", "BP"]).status.code(), Some(1));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lattice.dot");
    let o = bin(&[
        "lattice",
        "--category",
        "E(1)",
        "--format",
        "dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 4);
}
