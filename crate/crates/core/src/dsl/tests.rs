use proptest::prelude::*;

use crate::hyperreal::NonStdValue;
use crate::taxonomy::Label;
use crate::{IntervalUnion, NeutroTriple};

use super::*;

fn eval_src(src: &str) -> Vec<Output> {
    evaluate(&parse_script(src).unwrap(), true).unwrap()
}

fn eval_err(src: &str) -> Diagnostic {
    let script = parse_script(src).unwrap();
    evaluate(&script, true).unwrap_err()
}

#[test]
fn parses_interval_heavy_declaration() {
    let src = "universe U = {y}\nset B over U { y: ([0.20,0.30], [0.40,0.45]|[0.50,0.51], {0.20,0.24,0.28}) }";
    let script = parse_script(src).unwrap();
    assert_eq!(script.statements.len(), 2);
    match &script.statements[1].kind {
        StmtKind::SetDecl { name, universe, entries } => {
            assert_eq!(name, "B");
            assert_eq!(universe, "U");
            assert_eq!(entries.len(), 1);
            assert_eq!(entries[0].triple.i.parts.len(), 2);
            assert_eq!(entries[0].triple.f.parts.len(), 3);
        }
        other => panic!("unexpected statement {other:?}"),
    }
}

#[test]
fn parses_eval_complement() {
    let script = parse_script("eval complement(A)").unwrap();
    assert_eq!(script.statements.len(), 1);
    assert!(matches!(
        &script.statements[0].kind,
        StmtKind::Eval(Expr { kind: ExprKind::Complement(_), .. })
    ));
}

#[test]
fn triple_arity_error_is_positioned_with_hint() {
    let err = parse_script("set A over U { x: (0.5, 0.2) }").unwrap_err();
    assert_eq!(err.line, 1);
    assert!(err.message.contains("expected ','"), "{}", err.message);
}

#[test]
fn statements_end_at_line_breaks() {
    let err = parse_script("eval A eval B").unwrap_err();
    assert!(err.message.contains("expected end of line"), "{}", err.message);
    assert!(parse_script("eval A\neval B").is_ok());
}

#[test]
fn evaluate_complement_of_declared_set() {
    let out = eval_src("universe U = {x}\nset A over U { x: (0.5, 0.2, 0.3) }\neval complement(A)");
    assert_eq!(out.len(), 1);
    match &out[0].value {
        Value::Set(s) => {
            let x = s.triple_or_default("x");
            assert_eq!(x.t().inf(), NonStdValue::new(0.5, 1.0));
            assert_eq!(x.i().inf(), NonStdValue::new(0.8, 1.0));
            assert_eq!(x.f().inf(), NonStdValue::new(0.7, 1.0));
            assert_eq!(format_value(&out[0].value), "{x: (0.5^+, 0.8^+, 0.7^+)}");
        }
        other => panic!("unexpected value {other:?}"),
    }
}

#[test]
fn check_is_reflexive_and_classify_matches_taxonomy() {
    let out = eval_src(
        "universe U = {x, y}\nset A over U { x: (0.5, 0.2, 0.3) }\ncheck A <= A\nclassify A.x",
    );
    assert_eq!(out[0].value, Value::Bool(true));
    match &out[1].value {
        Value::Classification(c) => assert!(c.has(Label::IfsConsistent)),
        other => panic!("unexpected value {other:?}"),
    }
}

#[test]
fn undeclared_names_are_positioned_errors() {
    let err = eval_err("eval Q");
    assert_eq!((err.line, err.col), (1, 6));
    assert!(err.message.contains("undeclared name 'Q'"));

    let err = eval_err("universe U = {x}\nset A over V { }");
    assert!(err.message.contains("undeclared universe 'V'"));
}

#[test]
fn universe_mismatch_is_an_evaluation_error() {
    let err = eval_err(
        "universe U = {x}\nuniverse V = {y}\nset A over U { }\nset B over V { }\neval A & B",
    );
    assert_eq!(err.message, "universe mismatch");
    assert_eq!(err.line, 5);
}

#[test]
fn products_enumerate_and_refuse_set_operators() {
    let src = "universe U = {x}\nuniverse V = {w}\nset A over U { x: (0.5, 0.2, 0.3) }\nset D over V { w: (1, 0, 0) }\neval A x D";
    let out = eval_src(src);
    match &out[0].value {
        Value::Product(p) => {
            let tuples = p.tuples();
            assert_eq!(tuples.len(), 1);
            assert_eq!(tuples[0].0, vec!["x".to_string(), "w".to_string()]);
            assert_eq!(tuples[0].1[0], NeutroTriple::point(0.5, 0.2, 0.3).unwrap());
            assert_eq!(tuples[0].1[1], NeutroTriple::point(1.0, 0.0, 0.0).unwrap());
        }
        other => panic!("unexpected value {other:?}"),
    }

    let err = eval_err(&format!("{src} & A"));
    assert!(err.message.contains("Cartesian product"), "{}", err.message);
}

#[test]
fn redeclaration_is_rejected() {
    let err = eval_err("universe U = {x}\nuniverse U = {y}");
    assert!(err.message.contains("already declared"));
    let err = eval_err("universe U = {x}\nset A over U { }\nset A over U { }");
    assert!(err.message.contains("already declared"));
}

#[test]
fn strict_literals_fail_loudly_and_lenient_clamps() {
    let src = "universe U = {x}\nset A over U { x: (1.5, 0, 0) }";
    let err = eval_err(src);
    assert!(err.message.contains("out of unit range"), "{}", err.message);
    assert_eq!(err.line, 2);

    let script = parse_script(src).unwrap();
    let mut ev = Evaluator::new(false);
    ev.eval_script(&script).unwrap();
    let warnings = ev.take_warnings();
    assert_eq!(warnings.len(), 1);
    assert_eq!(warnings[0].severity, Severity::Warning);
}

#[test]
fn inverted_interval_is_reported_at_the_component() {
    let err = eval_err("universe U = {x}\nset A over U { x: ([0.5,0.2], 0, 0) }");
    assert_eq!(err.message, "inverted interval");
}

#[test]
fn format_examples() {
    let triple = NeutroTriple::point(0.5, 0.2, 0.3).unwrap();
    assert_eq!(triple.to_string(), "(0.5, 0.2, 0.3)");

    let component = parse_component("[0.4,0.45]|[0.5,0.51]", true).unwrap();
    assert_eq!(component.to_string(), "[0.4,0.45]|[0.5,0.51]");

    assert_eq!(NonStdValue::ONE_PLUS.to_string(), "1^+");
}

#[test]
fn triple_literals_round_trip() {
    for src in [
        "(0.5, 0.2, 0.3)",
        "([0.2,0.3], [0.4,0.45]|[0.5,0.51], {0.2,0.24,0.28})",
        "(1^+, 0^-, 0.5^+)",
        "([0^-,0.1], {0,0.5,1}, [0.9,1^+])",
    ] {
        let triple = parse_triple(src, true).unwrap();
        assert_eq!(triple.to_string(), src);
        assert_eq!(parse_triple(&triple.to_string(), true).unwrap(), triple);
    }
}

#[test]
fn evaluating_operators_matches_direct_calls() {
    // the operator table is a thin skin over the set operations
    let src = "universe U = {x, y}\nset A over U { x: (0.5, 0.2, 0.3), y: (0.9, 0.1, 0.4) }\nset B over U { x: (0.6, 0.5, 0.2) }\neval A & B\neval A | B\neval A \\ B";
    let out = eval_src(src);
    let a = NeutroSet::new(
        vec!["x".into(), "y".into()],
        [
            ("x".to_string(), NeutroTriple::point(0.5, 0.2, 0.3).unwrap()),
            ("y".to_string(), NeutroTriple::point(0.9, 0.1, 0.4).unwrap()),
        ]
        .into_iter()
        .collect(),
    )
    .unwrap();
    let b = NeutroSet::new(
        vec!["x".into(), "y".into()],
        [("x".to_string(), NeutroTriple::point(0.6, 0.5, 0.2).unwrap())].into_iter().collect(),
    )
    .unwrap();
    assert_eq!(out[0].value, Value::Set(a.intersect(&b).unwrap()));
    assert_eq!(out[1].value, Value::Set(a.union(&b).unwrap()));
    assert_eq!(out[2].value, Value::Set(a.difference(&b).unwrap()));
}

use crate::neutroset::NeutroSet;

fn grid_value() -> impl Strategy<Value = NonStdValue> {
    // endpoints on a millesimal grid with literal-representable suffixes
    (0..=1000i32, prop::sample::select(vec![-1.0, 0.0, 1.0])).prop_map(|(k, c)| {
        NonStdValue::new(k as f64 / 1000.0, c)
    })
}

fn grid_component() -> impl Strategy<Value = IntervalUnion> {
    prop::collection::vec((grid_value(), grid_value()), 1..4).prop_map(|pairs| {
        let parts = pairs
            .into_iter()
            .map(|(a, b)| {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                crate::NsInterval::new(lo, hi).unwrap()
            })
            .collect();
        IntervalUnion::canonicalize(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn canonical_triples_round_trip(
        t in grid_component(),
        i in grid_component(),
        f in grid_component(),
    ) {
        let triple = NeutroTriple::strict(t, i, f).unwrap();
        let text = triple.to_string();
        let back = parse_triple(&text, true).unwrap();
        prop_assert_eq!(&back, &triple);
        // formatting is idempotent under reparse
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn lexer_never_panics(src in "\\PC*") {
        let _ = tokenize(&src);
    }

    #[test]
    fn parser_never_panics_on_token_soup(src in "[a-z0-9(){}\\[\\],:|&\\\\.=<^+# \\n-]{0,120}") {
        if let Ok(tokens) = tokenize(&src) {
            let _ = parse(&tokens);
        }
    }
}
