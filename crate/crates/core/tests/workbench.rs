use autinv_core::envelopes::AlgebraContext;
use autinv_core::field::Kernel;
use autinv_core::modrep::is_isomorphic;
use autinv_core::workbench::{
    self, corpus, search, ClassificationRecord, LoadError, SCHEMA_VERSION,
};
use serde_json::Value;

fn shipped(name: &str) -> Value {
    serde_json::from_str(corpus::shipped_json(name).unwrap()).unwrap()
}

fn load_value(v: &Value) -> Result<workbench::Workbench, LoadError> {
    workbench::load_str(&serde_json::to_string(v).unwrap())
}

#[test]
fn shipped_files_match_their_builders_and_round_trip() {
    for name in corpus::NAMES {
        let loaded = corpus::load(name).unwrap();
        let built = corpus::build(name).unwrap();
        assert_eq!(loaded.to_json(), built.to_json(), "{name}");
        assert_eq!(
            loaded.to_json(),
            corpus::shipped_json(name).unwrap(),
            "{name}"
        );
        let again = workbench::load_str(&loaded.to_json()).unwrap();
        assert_eq!(again.to_file(), loaded.to_file());
        assert!(!loaded.modules.is_empty());
    }
}

#[test]
fn first_example_has_the_expected_shape() {
    let wb = corpus::load("ex_3_1").unwrap();
    assert_eq!(wb.algebra.dim(), 5);
    assert_eq!(wb.field().q(), 2);
    assert_eq!(wb.module("M").unwrap().dim(), 3);
    assert_eq!(wb.module("R").unwrap().dim(), 5);
}

#[test]
fn truncated_input_reports_a_line() {
    let text = corpus::shipped_json("ex_3_1").unwrap();
    let cut = &text[..text.len() / 2];
    match workbench::load_str(cut) {
        Err(LoadError::Parse { line, .. }) => assert!(line > 1),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let mut v = shipped("f2_dual_numbers");
    v["extra"] = Value::from(1);
    assert!(matches!(load_value(&v), Err(LoadError::Parse { .. })));
}

#[test]
fn wrong_schema_version_is_rejected() {
    let mut v = shipped("f2_dual_numbers");
    v["schema_version"] = Value::from(SCHEMA_VERSION + 1);
    match load_value(&v) {
        Err(LoadError::Schema { found }) => assert_eq!(found, SCHEMA_VERSION + 1),
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn non_associative_table_is_located_in_the_algebra() {
    let mut v = shipped("f2_dual_numbers");
    // x * 1 = 0 breaks the unit
    v["algebra"]["mul"][1][0] = serde_json::json!([0, 0]);
    match load_value(&v) {
        Err(LoadError::Invalid { location, .. }) => assert_eq!(location, "algebra"),
        other => panic!("expected an algebra error, got {other:?}"),
    }
}

#[test]
fn broken_module_axiom_is_located_in_the_module() {
    let mut v = shipped("f2_dual_numbers");
    v["modules"][0]["action"][1] = serde_json::json!([[1, 0], [0, 1]]);
    match load_value(&v) {
        Err(LoadError::Invalid { location, .. }) => {
            assert!(location.contains("\"R\""), "{location}")
        }
        other => panic!("expected a module error, got {other:?}"),
    }
}

#[test]
fn out_of_range_scalar_is_rejected() {
    let mut v = shipped("f2_dual_numbers");
    v["modules"][1]["action"][0] = serde_json::json!([[2]]);
    assert!(matches!(load_value(&v), Err(LoadError::Invalid { .. })));
}

#[test]
fn search_records_are_distinct_deterministic_and_auditable() {
    let wb = corpus::load("f2_xy_square_zero").unwrap();
    let ctx = AlgebraContext::new(wb.algebra.clone()).unwrap();
    let report = search(&ctx, 3, true).unwrap();
    let mods: Vec<_> = report.modules.iter().map(|(_, m)| m).collect();
    for (i, a) in mods.iter().enumerate() {
        for b in &mods[i + 1..] {
            assert!(a.dim() != b.dim() || is_isomorphic(a, b).unwrap().is_none());
        }
    }
    let records: Vec<ClassificationRecord> = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(records, report.records);
    for r in &records {
        r.audit(&wb.algebra).unwrap();
        assert_eq!(r.pseudo_injective, Some(r.automorphism_invariant));
    }

    let generic = wb.with_kernel(Kernel::Generic);
    let ctx = AlgebraContext::new(generic.algebra.clone()).unwrap();
    assert_eq!(search(&ctx, 3, true).unwrap().to_json(), report.to_json());
}
