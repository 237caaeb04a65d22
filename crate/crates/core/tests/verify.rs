use groupdet::verify::{classified_groups, identity_suite_with};
use groupdet::witness::identity;
use groupdet::{
    build_group, completeness_check, enumerate_window, group_determinant, lambda_search, member, set_window,
    soundness_check, CoeffVector, EnumerationJob, Error, GroupSpec, VerificationReport,
};
use num_bigint::BigInt;

fn g(name: &str) -> GroupSpec {
    name.parse().unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn z3_radius_one() {
    let job = EnumerationJob::new(g("Z3"), 1, 10);
    // Circulant determinant a^3 + b^3 + c^3 - 3abc over {-1, 0, 1}^3.
    let mut want: Vec<i64> = (0..27)
        .map(|i| {
            let (a, b, c) = (i % 3 - 1, i / 3 % 3 - 1, i / 9 - 1);
            a * a * a + b * b * b + c * c * c - 3 * a * b * c
        })
        .collect();
    want.sort();
    want.dedup();
    assert_eq!(enumerate_window(&job).unwrap(), want);
    let report = soundness_check(&g("Z3"), &job).unwrap();
    assert!(report.passed());
    assert_eq!(report.lambda_observed, Some(2));
}

#[test]
fn documented_soundness_windows() {
    for (name, r, bound) in [("Z2^3", 2, 300), ("Q8", 2, 300), ("A4", 1, 500)] {
        let report = soundness_check(&g(name), &EnumerationJob::new(g(name), r, bound)).unwrap();
        assert!(report.soundness_violations.is_empty(), "{name}: {:?}", &report.soundness_violations[..1]);
    }
}

#[test]
fn documented_lambdas() {
    for (name, r, want) in [("Q8", 2, 7), ("Z8", 1, 3), ("A4", 1, 5), ("Z2^3", 1, 7)] {
        assert_eq!(lambda_search(&g(name), &EnumerationJob::new(g(name), r, 50)).unwrap(), want, "{name}");
    }
}

#[test]
fn lambda_needs_a_witness_in_range() {
    // Radius 0 only attains 0.
    assert!(matches!(lambda_search(&g("Q8"), &EnumerationJob::new(g("Q8"), 0, 50)), Err(Error::Inconclusive(_))));
}

#[test]
fn mismatched_job_is_a_precondition_error() {
    let job = EnumerationJob::new(g("Q8"), 1, 10);
    assert!(matches!(soundness_check(&g("D8"), &job), Err(Error::Precondition(_))));
}

#[test]
fn completeness_for_every_classified_group() {
    for spec in classified_groups() {
        let report = completeness_check(&spec, 150).unwrap();
        assert!(report.completeness_misses.is_empty(), "{spec}: {:?}", report.completeness_misses);
    }
    assert!(matches!(completeness_check(&g("Z16"), 10), Err(Error::UnsupportedGroup(_))));
}

#[test]
fn enumeration_agrees_with_the_classifier_inside_the_window() {
    let job = EnumerationJob::new(g("Z2xZ2"), 2, 100);
    let attained = enumerate_window(&job).unwrap();
    let accepted = set_window(&g("Z2xZ2"), 100).unwrap();
    assert!(attained.iter().all(|v| accepted.contains(v)));
}

#[test]
fn membership_examples() {
    let z5 = member(&g("Z5"), &big(7)).unwrap();
    assert!(z5.verdict);
    assert!(!member(&g("Z5"), &big(10)).unwrap().verdict);
    assert!(!member(&g("Z2^3"), &big(7)).unwrap().verdict);
    assert!(member(&g("Z2^3"), &big(-7)).unwrap().verdict);
    assert!(!member(&g("Z12"), &big(15)).unwrap().verdict);
    assert!(member(&g("Z3xZ3"), &big(8)).unwrap().verdict);
}

#[test]
fn one_mod_twelve_identity_values() {
    let id = identity("o12.1+12t").unwrap();
    let table = build_group(&g("D12")).unwrap();
    for t in -3..=3 {
        let params = [big(t)];
        assert_eq!(id.claimed(&params), big(1 + 12 * t));
        assert!(id.check(&table, &params).unwrap());
    }
}

#[test]
fn a4_family_at_minus_three_is_minus_two_to_the_eleventh() {
    let id = identity("A4.2^8(1+3k)").unwrap();
    let params = [big(-3)];
    assert_eq!(id.claimed(&params), big(-(1 << 11)));
    let table = build_group(&g("A4")).unwrap();
    assert_eq!(group_determinant(&table, &id.template(&params)).unwrap(), big(-2048));
}

#[test]
fn identity_suite_is_clean_on_a_small_range() {
    let report = identity_suite_with(2);
    assert!(report.passed());
    assert!(report.identities.iter().all(|o| o.checked > 0));
}

#[test]
fn report_json_round_trip() {
    let report = soundness_check(&g("D8"), &EnumerationJob::new(g("D8"), 1, 40)).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert!(!text.contains("identities"));
}

#[test]
fn determinant_of_the_identity_vector_is_one() {
    for spec in classified_groups() {
        let table = build_group(&spec).unwrap();
        let mut e = vec![0i64; spec.order()];
        e[0] = 1;
        assert_eq!(group_determinant(&table, &CoeffVector::from_i64s(&e)).unwrap(), big(1), "{spec}");
    }
}
