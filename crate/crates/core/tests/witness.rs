use groupdet::{
    achieve, all_identities, build_group, catalog, group_determinant, negate_or_swap, set_window, CoeffVector,
    Error, GroupSpec, Witness,
};
use num_bigint::BigInt;

fn g(name: &str) -> GroupSpec {
    name.parse().unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Independent check: Cayley determinant of the witness coefficients.
fn det(w: &Witness) -> BigInt {
    group_determinant(&build_group(&w.spec).unwrap(), &w.coeffs).unwrap()
}

#[test]
fn z2_cubed_17_is_one_plus_twice_the_norm_element() {
    let w = achieve(&g("Z2^3"), &big(17)).unwrap();
    // 1 + 2(1+x)(1+y)(1+z): every coefficient 2, constant term 3
    assert_eq!(w.coeffs, CoeffVector::from_i64s(&[3, 2, 2, 2, 2, 2, 2, 2]));
    assert_eq!(det(&w), big(17));
}

#[test]
fn q8_45_uses_p_three() {
    let w = achieve(&g("Q8"), &big(45)).unwrap();
    assert_eq!(det(&w), big(45));
    let step = &w.provenance[0];
    assert_eq!(step.params["m"], "1");
    // 3 = (2A)^2 + (2B+1)^2 + (2C+1)^2 + (2D+1)^2
    let q: Vec<i64> = ["A", "B", "C", "D"].iter().map(|k| step.params[*k].parse().unwrap()).collect();
    let s = (2 * q[0]).pow(2) + (2 * q[1] + 1).pow(2) + (2 * q[2] + 1).pow(2) + (2 * q[3] + 1).pow(2);
    assert_eq!(s, 3);
}

#[test]
fn q12_160_uses_the_doubled_two_squares_step() {
    let w = achieve(&g("Q12"), &big(160)).unwrap();
    assert_eq!(det(&w), big(160));
    assert_eq!(w.provenance.len(), 1);
    assert_eq!(w.provenance[0].params["A"], "0");
    assert_eq!(w.provenance[0].params["B"], "0");
}

#[test]
fn zero_is_the_zero_vector() {
    for name in ["Z1", "Z2^3", "Q12", "D18", "Z3xZ3"] {
        let w = achieve(&g(name), &big(0)).unwrap();
        assert!(w.coeffs.entries().iter().all(|c| c == &big(0)));
        assert_eq!(det(&w), big(0));
    }
}

#[test]
fn rejected_values_are_not_in_set() {
    for (name, v) in [("Z2^3", 7), ("Z12", 15), ("Z5", 10), ("Q8", 3)] {
        assert!(matches!(achieve(&g(name), &big(v)), Err(Error::NotInSet { .. })), "{name} {v}");
    }
}

#[test]
fn negation_mechanisms() {
    let w = achieve(&g("Q12"), &big(13)).unwrap();
    let n = negate_or_swap(&g("Q12"), &w).unwrap();
    assert_eq!(det(&n), big(-13));

    let w = achieve(&g("Z3xZ3"), &big(10)).unwrap();
    let n = negate_or_swap(&g("Z3xZ3"), &w).unwrap();
    assert_eq!(det(&n), big(-10));
    assert_eq!(n.coeffs, -&w.coeffs);

    let w = achieve(&g("Q12"), &big(0)).unwrap();
    assert_eq!(negate_or_swap(&g("Q12"), &w).unwrap().value, big(0));

    let w = achieve(&g("D8"), &big(5)).unwrap();
    assert!(matches!(negate_or_swap(&g("D8"), &w), Err(Error::UnsupportedGroup(_))));
}

#[test]
fn catalog_counts() {
    assert_eq!(catalog(&g("Z3xZ3")).unwrap().len(), 3);
    assert_eq!(catalog(&g("Z2^3")).unwrap().len(), 4);
    assert!(catalog(&g("Z1")).unwrap().is_empty());
    assert!(all_identities().len() >= 40);
}

#[test]
fn provenance_multiplies_to_the_value() {
    for (name, v) in [("A4", -16 * 27 * 13), ("Z6xZ2", 9 * 7 * 3), ("Z12", 32 * 13 * 5), ("D18", 4 * 243 * 5)] {
        let w = achieve(&g(name), &big(v)).unwrap();
        let product = w.provenance.iter().fold(big(1), |acc, s| acc * s.value.parse::<BigInt>().unwrap());
        assert_eq!(product, big(v), "{name}");
        assert_eq!(det(&w), big(v));
    }
}

#[test]
fn json_has_the_four_keys_and_string_coefficients() {
    let w = achieve(&g("Q8"), &big(-7)).unwrap();
    let j: serde_json::Value = serde_json::to_value(&w).unwrap();
    let keys: Vec<&str> = j.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["coeffs", "group", "provenance", "value"]);
    assert!(j["coeffs"].as_array().unwrap().iter().all(|c| c.is_string()));
    assert_eq!(j["group"], "Q8");
    assert_eq!(j["value"], "-7");
}

#[test]
fn prime_bearing_routes_far_outside_the_windows() {
    // p = 10007 (3 mod 4), 10009 (P1 or P2, 1 mod 12), 10037 (5 mod 12), 10039 (7 mod 12)
    let cases = [
        ("Q8", big(5) * big(10007) * big(10007)),
        ("Q12", big(-32) * big(10037)),
        ("Q12", big(32 * 27) * big(10007) * big(10007)),
        ("Z6xZ2", big(9 * 3) * big(10039)),
        ("Z6xZ2", big(256 * 17) * big(10039)),
        ("Z12", big(9 * 5) * big(10037)),
        ("Z12", big(-32) * big(10039)),
        ("Z6xZ2", big(5) * big(7) * big(19)),
        ("Z6xZ2", big(-16 * 7) * big(5 * 5)),
    ];
    for (name, v) in cases {
        let w = achieve(&g(name), &v).unwrap_or_else(|e| panic!("{name} {v}: {e}"));
        assert_eq!(det(&w), v, "{name}");
    }
}

#[test]
fn achieve_covers_small_windows_of_every_group() {
    for spec in groupdet::verify::classified_groups() {
        for v in set_window(&spec, 60).unwrap() {
            let w = achieve(&spec, &big(v)).unwrap_or_else(|e| panic!("{spec} {v}: {e}"));
            assert_eq!(det(&w), big(v));
        }
    }
}
