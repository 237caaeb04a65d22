use std::sync::OnceLock;

use groupdet::verify::classified_groups;
use groupdet::{
    achieve, build_group, enumerate_window, group_determinant, member, set_window, EnumerationJob, GroupSpec,
    Witness,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn groups() -> &'static [GroupSpec] {
    static GROUPS: OnceLock<Vec<GroupSpec>> = OnceLock::new();
    GROUPS.get_or_init(classified_groups)
}

fn windows() -> &'static [Vec<i64>] {
    static WINDOWS: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    WINDOWS.get_or_init(|| groups().iter().map(|g| set_window(g, 5000).unwrap()).collect())
}

fn int(s: &str) -> BigInt {
    s.parse().unwrap()
}

/// A group and one of its values in `[-5000, 5000]`.
fn group_and_value() -> impl Strategy<Value = (GroupSpec, i64)> {
    (0..groups().len(), any::<prop::sample::Index>()).prop_map(|(i, ix)| {
        let set = &windows()[i];
        (groups()[i].clone(), set[ix.index(set.len())])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn member_is_pure(i in 0..30usize, v in -1_000_000i64..1_000_000) {
        let spec = &groups()[i % groups().len()];
        let v = BigInt::from(v);
        prop_assert_eq!(member(spec, &v).unwrap(), member(spec, &v).unwrap());
    }

    #[test]
    fn certificates_rebuild_the_value(i in 0..30usize, v in -1_000_000i64..1_000_000) {
        let spec = &groups()[i % groups().len()];
        let cert = member(spec, &BigInt::from(v)).unwrap();
        prop_assume!(cert.verdict && v != 0);
        let p = &cert.params;
        let bracket = int(&p["m_coeff"]) * int(&p["m"]) + int(&p["m_offset"]);
        prop_assert_eq!(int(&p["scale"]) * &bracket * int(&p["k"]), BigInt::from(v));
        if let Some(t) = p.get("coprime_to") {
            prop_assert!(bracket.gcd(&int(t)) == BigInt::from(1));
        }
    }

    #[test]
    fn witnesses_evaluate_to_their_value((spec, v) in group_and_value()) {
        let w = achieve(&spec, &BigInt::from(v)).unwrap();
        let table = build_group(&spec).unwrap();
        prop_assert_eq!(group_determinant(&table, &w.coeffs).unwrap(), BigInt::from(v));
        prop_assert_eq!(w.provenance_product(), Some(BigInt::from(v)));
        let back: Witness = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn shards_do_not_change_the_window(count in 1u64..6) {
        let job = EnumerationJob::new("Z2xZ2".parse().unwrap(), 2, 200);
        let whole = enumerate_window(&job).unwrap();
        let mut union: Vec<i64> = (0..count)
            .flat_map(|i| enumerate_window(&job.clone().with_shard(i, count)).unwrap())
            .collect();
        union.sort();
        union.dedup();
        prop_assert_eq!(union, whole);
    }

    #[test]
    fn windows_grow_with_the_radius(i in 0..30usize) {
        let spec = groups()[i % groups().len()].clone();
        prop_assume!(spec.order() <= 8);
        let small = enumerate_window(&EnumerationJob::new(spec.clone(), 1, 100)).unwrap();
        let large = enumerate_window(&EnumerationJob::new(spec, 2, 100)).unwrap();
        prop_assert!(small.iter().all(|v| large.contains(v)));
    }
}
