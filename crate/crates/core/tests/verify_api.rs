use aromatic_core::verify::{check, find, registry, run_all, Context, Status, VerifyError};
use aromatic_core::ColorSet;

#[test]
fn registry_names_are_unique_and_findable() {
    let names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    for n in names {
        assert_eq!(find(n).unwrap().name, n);
    }
}

#[test]
fn bad_requests_are_errors() {
    let ctx = Context::default();
    assert_eq!(
        check(&ctx, "nope", None).unwrap_err(),
        VerifyError::UnknownCheck("nope".into())
    );
    assert_eq!(
        check(&ctx, "trace_div", Some(0)).unwrap_err(),
        VerifyError::Degree
    );
}

#[test]
fn small_checks_pass_and_count_instances() {
    let ctx = Context::default();
    let r = check(&ctx, "embedding_aro", Some(1)).unwrap();
    assert!(r.passed());
    // x(-1) and <x(0)>
    assert_eq!(r.instances, 2);
    let r = check(&ctx, "partialbar_closed_form", None).unwrap();
    assert_eq!((r.max_degree, r.status.clone()), (5, Status::Pass));
    assert!(r.instances > 0);
}

#[test]
fn every_check_passes_at_degree_two_with_two_colours() {
    let ctx = Context::new(ColorSet::parse("r,g").unwrap());
    for r in run_all(&ctx, Some(2)) {
        assert!(r.passed(), "{}", r.to_json_line());
    }
}

#[test]
fn reports_serialise_as_flat_json() {
    let ctx = Context::default();
    let r = check(&ctx, "trace_div", Some(2)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
    assert_eq!(v["identity"], "trace_div");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["min_degree"], 1);
    assert_eq!(v["max_degree"], 2);
    assert!(v["counterexample"].is_null());
    assert!(v.get("seconds").is_none());
}
