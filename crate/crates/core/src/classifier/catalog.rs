use serde::Serialize;

use crate::group::GroupSpec;

/// A characterized value set and its displayed description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub predicate: &'static str,
    pub description: &'static str,
}

const ENTRIES: &[(&str, &str, &str)] = &[
    ("Z1", "all", "every integer"),
    ("Z2", "prime", "{2^a m_2 : a = 0 or a >= 2}"),
    ("Z3", "prime", "{3^a m_3 : a = 0 or a >= 2}"),
    ("Z4", "cyclic-2^2", "{2^a m_2 : a = 0 or a >= 4}"),
    ("Z2xZ2", "klein", "{4m+1, 2^4(2m+1), 2^6 m}"),
    ("Z5", "prime", "{5^a m_5 : a = 0 or a >= 2}"),
    ("Z6", "cyclic-2p", "{2^a 3^b m_6 : a = 0 or a >= 2, b = 0 or b >= 2}"),
    ("D6", "dihedral-2p", "{2^a 3^b m_6 : a = 0 or a >= 2, b = 0 or b >= 3}"),
    ("Z7", "prime", "{7^a m_7 : a = 0 or a >= 2}"),
    ("Z8", "cyclic-2^3", "{2^a m_2 : a = 0 or a >= 5}"),
    ("Z4xZ2", "order8", "{8m+1, 2^8 m}"),
    ("Z2^3", "order8", "{8m+1, 2^8(4m+1), 2^12 m}"),
    ("D8", "dihedral-8", "{4m+1, 2^8 m}"),
    ("Q8", "order8", "{8m+1, 2^8 m} and (8m-3)p^2 with p = 3 mod 4"),
    ("Z9", "cyclic-3^2", "{3^a m_3 : a = 0 or a >= 3}"),
    ("Z3xZ3", "z3z3", "{9m+1, 9m-1, 3^6 m}"),
    ("Z10", "cyclic-2p", "{2^a 5^b m_10 : a = 0 or a >= 2, b = 0 or b >= 2}"),
    ("D10", "dihedral-2p", "{2^a 5^b m_10 : a = 0 or a >= 2, b = 0 or b >= 3}"),
    ("Z11", "prime", "{11^a m_11 : a = 0 or a >= 2}"),
    (
        "Z12",
        "order12",
        "odd: m_6, 9 m_6 p (p = 5, 7 mod 12 or p in P1), 27 m_2; \
         even: 144 m, 2^4 m_6, 2^5 m_6 p, 2^6 m_3",
    ),
    (
        "Z6xZ2",
        "order12",
        "27 | v: 27(4m-1), 2^4 27(2m-1), 2^6 27 m; \
         9 || v: 9(4m-1)p, 2^4 9(2m-1)p, 2^6 9 m p (p = 7 mod 12), 2^8 9(4m-1), \
         2^10 9(4m-1), 2^12 9(2m-1), 2^14 9 m; \
         3 does not divide v: 12m+1, 2^4(6m+1), 2^6(3m+1), (12m+5)k, -2^4(6m+1)k, -2^6(3m+1)k, \
         2^8(12m+5), 2^10(12m+5) with an optional p = 7 mod 12, -2^12(6m+1), -2^14(3m+1)",
    ),
    (
        "D12",
        "dihedral-4p",
        "odd: 4m+1 with 3 not dividing or 27 dividing; even: {2^a 3^b m_6 : a = 4 or a >= 6, b = 0 or b >= 3}",
    ),
    (
        "Q12",
        "order12",
        "{2^a 3^b m_6 : a = 0, 4 or a >= 6, b = 0 or b >= 3}, {2^5 3^b m_6 : b = 4 or b >= 6}, \
         {2^5 3^b m_6 k : b = 0, 3, 5; k = p = 5 mod 12 or p^2 with p = 5 mod 6}",
    ),
    (
        "A4",
        "order12",
        "odd: 4m+1 with 3 not dividing or 9 dividing; even: {2^a 3^b m_6 : a = 4 or a >= 8, b = 0 or b >= 2}",
    ),
    ("Z13", "prime", "{13^a m_13 : a = 0 or a >= 2}"),
    ("Z14", "cyclic-2p", "{2^a 7^b m_14 : a = 0 or a >= 2, b = 0 or b >= 2}"),
    ("D14", "dihedral-2p", "{2^a 7^b m_14 : a = 0 or a >= 2, b = 0 or b >= 3}"),
    ("D16", "dihedral-16", "{4m+1, 2^10 m}"),
    ("D18", "dihedral-2p^2", "{2^a 3^b m_6 : a = 0 or a >= 2, b = 0 or b >= 5}"),
];

/// Every group with a membership predicate, one entry each; `D4` is served
/// through `Z2xZ2`.
pub fn set_catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(name, predicate, description)| CatalogEntry {
            spec: name.parse().expect("catalog names parse"),
            predicate,
            description,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::has_predicate;

    #[test]
    fn covers_every_small_group_once() {
        let cat = set_catalog();
        let mut names: Vec<String> = cat.iter().map(|e| e.spec.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        assert!(cat.iter().all(|e| has_predicate(&e.spec)));
        let small = cat.iter().filter(|e| e.spec.order() <= 14).count();
        // 1 + 1 + 1 + 2 + 1 + 2 + 1 + 5 + 2 + 2 + 1 + 5 + 1 + 2 groups of order 1..=14
        assert_eq!(small, 27);
    }
}
