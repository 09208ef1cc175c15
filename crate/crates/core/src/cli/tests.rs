use super::commands::{self, GlueCheck, IdempotentSpec, TensorSpec};
use super::suite::{fixture, fixture_algebra, FIXTURES};
use super::*;
use crate::error::Error;
use crate::exactla::Field;
use crate::homalg::DimensionBound;

fn settings() -> Settings {
    Settings { cutoff: 20, seed: 0 }
}

fn doc(name: &'static str) -> (&'static str, &'static str) {
    (name, fixture(name))
}

#[test]
fn fixtures_parse() {
    let dims: Vec<(&str, usize)> = vec![
        ("k.json", 1),
        ("kxk.json", 2),
        ("kx2.json", 2),
        ("kx3.json", 3),
        ("kx4_f5.json", 4),
        ("kronecker.json", 4),
        ("a3rel.json", 5),
        ("quaternions.json", 4),
        ("plane.json", 15),
    ];
    for (name, dim) in dims {
        assert_eq!(fixture_algebra(name).unwrap().dim(), dim, "{name}");
    }
    assert_eq!(fixture_algebra("kx3_f5.json").unwrap().field(), Field::Prime(5));
    assert_eq!(FIXTURES.len(), 16);
}

#[test]
fn parse_errors_have_locations() {
    let unknown = fixture("kx2.json").replace("\"x\",\n            \"x\"", "\"x\",\n            \"y\"");
    match parse_algebra(&unknown) {
        Err(Error::Parse { location, message }) => {
            assert_eq!(location, "presentation.relations[0][0]");
            assert!(message.contains("unknown arrow y"));
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_algebra("{\"field\": "), Err(Error::Parse { .. })));
    let bad_prime = fixture("kx2_f5.json").replace("\"p\": 5", "\"p\": 6");
    assert!(matches!(parse_algebra(&bad_prime), Err(Error::Parse { location, .. }) if location == "field.p"));
    let bad_coeff = fixture("kx2.json").replace("\"coeff\": \"1\"", "\"coeff\": \"1/0\"");
    assert!(matches!(parse_algebra(&bad_coeff), Err(Error::Parse { .. })));
    let extra = fixture("k.json").replace("\"dim\": 1", "\"dim\": 1, \"extra\": 3");
    assert!(matches!(parse_algebra(&extra), Err(Error::Parse { .. })));
}

#[test]
fn invalid_algebras_are_validation_errors() {
    // e * e = 2e breaks the unit
    let bad = fixture("k.json").replace("\"table\": [\n      [\n        [\n          \"1\"", "\"table\": [\n      [\n        [\n          \"2\"");
    assert_ne!(bad, fixture("k.json"));
    assert!(matches!(parse_algebra(&bad), Err(Error::Validation(_))));
    let loops = fixture("kx2.json").replace("\"relations\": [", "\"relations\": [], \"unused\": [");
    assert!(parse_algebra(&loops).is_err());
}

#[test]
fn bimodule_documents() {
    let k = fixture_algebra("k.json").unwrap();
    let kx2 = fixture_algebra("kx2.json").unwrap();
    let kron = fixture_algebra("kronecker.json").unwrap();
    assert_eq!(parse_bimodule(fixture("k2.bimodule.json"), k.clone(), k.clone()).unwrap().dim, 2);
    assert_eq!(parse_bimodule(fixture("kx2_simple.bimodule.json"), k.clone(), kx2.clone()).unwrap().dim, 1);
    assert_eq!(parse_bimodule(fixture("kx2_regular.bimodule.json"), kx2.clone(), kx2.clone()).unwrap().dim, 2);
    assert_eq!(parse_bimodule(fixture("kron_p0.bimodule.json"), k.clone(), kron.clone()).unwrap().dim, 3);
    // wrong sides
    assert!(parse_bimodule(fixture("kx2_simple.bimodule.json"), kx2.clone(), k.clone()).is_err());
    let f5 = fixture_algebra("kx2_f5.json").unwrap();
    assert!(matches!(parse_bimodule(fixture("kx2_regular.bimodule.json"), f5.clone(), f5), Err(Error::Validation(_))));
}

#[test]
fn analyze_truncated_cubic() {
    let r = commands::analyze(doc("kx3.json"), &settings()).unwrap();
    assert!(r.passed, "{}", r.to_text());
    let alg = &r.tables["algebra"];
    assert_eq!(alg["radical_dim"], 2);
    assert_eq!(alg["nilpotency_index"], 3);
    assert_eq!(r.tables["global_dimension"]["kind"], "periodic_hence_infinite");
    assert_eq!(r.tables["proper"], true);
}

#[test]
fn analyze_kronecker() {
    let r = commands::analyze(doc("kronecker.json"), &settings()).unwrap();
    assert!(r.passed);
    assert_eq!(r.tables["global_dimension"], serde_json::to_value(DimensionBound::Finite { value: 1 }).unwrap());
    assert_eq!(r.tables["smooth"]["value"], 1);
}

#[test]
fn auslander_verb() {
    let r = commands::auslander(doc("kx2.json"), &settings()).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["gamma"]["dim"], 5);
    assert!(r.checks.iter().any(|c| c.anchor == "auslander/generation"));
}

#[test]
fn glue_verb() {
    let s = settings();
    let r = commands::glue(doc("k.json"), doc("k.json"), doc("k2.bimodule.json"), &GlueCheck::ALL, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["cartan"], serde_json::json!([[1, 0], [2, 1]]));
    let r = commands::glue(doc("kx2.json"), doc("k.json"), doc("kx2_simple.bimodule.json"), &GlueCheck::ALL, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["smooth"]["c"]["kind"], "periodic_hence_infinite");
    let r = commands::glue(doc("kronecker.json"), doc("k.json"), doc("kron_p0.bimodule.json"), &[GlueCheck::Sod], &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.checks.len(), 5);
    // sides swapped: S is not a k-kx2-bimodule
    assert!(commands::glue(doc("k.json"), doc("kx2.json"), doc("kx2_simple.bimodule.json"), &GlueCheck::ALL, &s).is_err());
}

#[test]
fn split_verb() {
    let s = settings();
    let sink = IdempotentSpec::Vertices(vec!["1".into()]);
    let r = commands::split(doc("kronecker.json"), &sink, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["dims"], serde_json::json!([1, 1, 2, 4]));
    let source = IdempotentSpec::Vertices(vec!["0".into()]);
    let r = commands::split(doc("kronecker.json"), &source, &s).unwrap();
    assert!(!r.passed);
    assert_eq!(r.exit_code(), 1);
    let coords = IdempotentSpec::Coefficients(vec!["0".into(), "1".into(), "1".into(), "0".into(), "0".into()]);
    let r = commands::split(doc("a3rel.json"), &coords, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    let not_idem = IdempotentSpec::Coefficients(vec!["2".into(), "0".into(), "0".into(), "0".into()]);
    assert!(commands::split(doc("kronecker.json"), &not_idem, &s).is_err());
}

#[test]
fn sod_verb() {
    let s = settings();
    let r = commands::sod(doc("kronecker.json"), None, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["order"], serde_json::json!([1, 0]));
    let r = commands::sod(doc("kronecker.json"), Some(&[0, 1]), &s).unwrap();
    assert!(!r.passed);
    let r = commands::sod(doc("plane.json"), None, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    let r = commands::sod(doc("kx2.json"), None, &s).unwrap();
    assert!(!r.passed);
    assert!(commands::sod(doc("kronecker.json"), Some(&[0, 0]), &s).is_err());
}

#[test]
fn ncplane_verb() {
    let s = settings();
    let r = commands::ncplane(&TensorSpec::Commutative, Field::Prime(5), 0, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["nondegeneracy"]["exhaustive"], true);
    let spec = TensorSpec::Sklyanin(["1".into(), "2".into(), "3".into()]);
    let r = commands::ncplane(&spec, Field::Rationals, 16, &s).unwrap();
    assert!(r.passed, "{}", r.to_text());
    assert_eq!(r.tables["cubic_v_text"], "x^3 + y^3 + z^3 - 6xyz");
    let zero = TensorSpec::Sklyanin(["0".into(), "0".into(), "0".into()]);
    assert!(commands::ncplane(&zero, Field::Rationals, 4, &s).is_err());
}

#[test]
fn reports_render() {
    let r = commands::analyze(doc("kx2.json"), &settings()).unwrap();
    let json = r.to_json();
    let back: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(back["command"], "analyze");
    assert_eq!(back["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(back["checks"].as_array().unwrap().iter().all(|c| c["anchor"].is_string() && c["verdict"]["status"].is_string()));
    assert!(r.to_text().starts_with("analyze (pass)"));
}
