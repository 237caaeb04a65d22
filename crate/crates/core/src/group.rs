//! Finite groups as indexed Cayley tables.
//!
//! Every supported group has a frozen element ordering so that coefficient
//! vectors mean the same thing across releases:
//!
//! * `Z{n}`: `1, x, x^2, ..., x^{n-1}`.
//! * abelian products `Z{n1}xZ{n2}...`: `x1^t1 x2^t2 ...` in mixed-radix
//!   order with the first factor varying fastest, so `Z4xZ2` reads
//!   `f(x) + y g(x)` as `(f coefficients, g coefficients)`.
//! * `D{2n}`: `1, x, ..., x^{n-1}, y, yx, ..., yx^{n-1}` with `xy = yx^{-1}`.
//! * `Q{4n}`: `1, a, ..., a^{2n-1}, b, ba, ..., ba^{2n-1}` with
//!   `b^2 = a^n` and `ab = ba^{-1}`.
//! * `A4`: the twelve permutations `1, (12)(34), (13)(24), (14)(23), (123),
//!   (243), (142), (134), (132), (143), (234), (124)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A group family with its parameters.
///
/// Serializes as its canonical name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupSpec {
    /// `Z_n`.
    Cyclic(u32),
    /// `Z_{n1} x ... x Z_{nr}`, factors listed in the order they are named.
    AbelianProduct(Vec<u32>),
    /// Dihedral group of order `2n`; the payload is `n`.
    Dihedral(u32),
    /// Dicyclic group of order `4n`; the payload is `n`.
    Dicyclic(u32),
    Alternating4,
}

/// Canonical names of every supported group, in display order.
pub const SUPPORTED_NAMES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z13", "Z14", "Z16",
    "Z2xZ2", "Z4xZ2", "Z2^3", "Z3xZ3", "Z6xZ2", "D4", "D6", "D8", "D10", "D12", "D14", "D16",
    "D18", "Q8", "Q12", "A4",
];

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n as usize,
            GroupSpec::AbelianProduct(ns) => ns.iter().map(|&n| n as usize).product(),
            GroupSpec::Dihedral(n) => 2 * *n as usize,
            GroupSpec::Dicyclic(n) => 4 * *n as usize,
            GroupSpec::Alternating4 => 12,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn is_supported(&self) -> bool {
        SUPPORTED_NAMES.contains(&self.name().as_str())
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_) | GroupSpec::AbelianProduct(_) => true,
            GroupSpec::Dihedral(n) => *n <= 2,
            GroupSpec::Dicyclic(_) | GroupSpec::Alternating4 => false,
        }
    }

    /// All supported groups, in [`SUPPORTED_NAMES`] order.
    pub fn supported() -> Vec<GroupSpec> {
        SUPPORTED_NAMES
            .iter()
            .map(|s| s.parse().expect("supported names parse"))
            .collect()
    }

    pub fn ordering_label(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("1, x, ..., x^{}", n - 1),
            GroupSpec::AbelianProduct(ns) => format!(
                "x1^t1 ... x{}^t{} mixed radix ({}), first factor fastest",
                ns.len(),
                ns.len(),
                ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
            ),
            GroupSpec::Dihedral(n) => {
                format!("1, x, ..., x^{m}, y, yx, ..., yx^{m}", m = n - 1)
            }
            GroupSpec::Dicyclic(n) => {
                format!("1, a, ..., a^{m}, b, ba, ..., ba^{m}", m = 2 * n - 1)
            }
            GroupSpec::Alternating4 => A4_LABEL.to_string(),
        }
    }
}

const A4_LABEL: &str =
    "1, (12)(34), (13)(24), (14)(23), (123), (243), (142), (134), (132), (143), (234), (124)";

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::AbelianProduct(ns) => {
                if ns.len() >= 3 && ns.iter().all(|&n| n == ns[0]) {
                    write!(f, "Z{}^{}", ns[0], ns.len())
                } else {
                    let parts: Vec<String> = ns.iter().map(|n| format!("Z{n}")).collect();
                    write!(f, "{}", parts.join("x"))
                }
            }
            GroupSpec::Dihedral(n) => write!(f, "D{}", 2 * n),
            GroupSpec::Dicyclic(n) => write!(f, "Q{}", 4 * n),
            GroupSpec::Alternating4 => write!(f, "A4"),
        }
    }
}

impl From<GroupSpec> for String {
    fn from(g: GroupSpec) -> String {
        g.name()
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadGroupName(s.to_string());
        let num = |t: &str| -> Result<u32> {
            if t.is_empty() || t.starts_with('0') || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<u32>().map_err(|_| bad())
        };
        if s == "A4" {
            return Ok(GroupSpec::Alternating4);
        }
        if let Some(rest) = s.strip_prefix('D') {
            let order = num(rest)?;
            if order < 4 || order % 2 != 0 {
                return Err(bad());
            }
            return Ok(GroupSpec::Dihedral(order / 2));
        }
        if let Some(rest) = s.strip_prefix('Q') {
            let order = num(rest)?;
            if order < 8 || order % 4 != 0 {
                return Err(bad());
            }
            return Ok(GroupSpec::Dicyclic(order / 4));
        }
        if s.starts_with('Z') {
            if let Some((base, pow)) = s.split_once('^') {
                let n = num(base.strip_prefix('Z').ok_or_else(bad)?)?;
                let r = num(pow)?;
                if r < 3 || n < 2 {
                    return Err(bad());
                }
                return Ok(GroupSpec::AbelianProduct(vec![n; r as usize]));
            }
            let factors = s
                .split('x')
                .map(|t| t.strip_prefix('Z').ok_or_else(bad).and_then(num))
                .collect::<Result<Vec<u32>>>()?;
            return match factors.as_slice() {
                [n] => Ok(GroupSpec::Cyclic(*n)),
                ns if ns.iter().all(|&n| n >= 2) => {
                    let spec = GroupSpec::AbelianProduct(ns.to_vec());
                    // "Z2xZ2xZ2" is spelled "Z2^3"; only canonical spellings parse.
                    if spec.to_string() == s {
                        Ok(spec)
                    } else {
                        Err(bad())
                    }
                }
                _ => Err(bad()),
            };
        }
        Err(bad())
    }
}

/// Cayley table of a finite group in its canonical ordering. Index 0 is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub spec: GroupSpec,
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub ordering_label: String,
}

impl GroupTable {
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    /// Checks identity, inverses and associativity exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.order;
        let ident = (0..n).all(|i| self.mul[0][i] == i && self.mul[i][0] == i);
        let inv = (0..n).all(|i| self.mul[i][self.inv[i]] == 0 && self.mul[self.inv[i]][i] == 0);
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul[self.mul[a][b]][c] == self.mul[a][self.mul[b][c]]))
        });
        ident && inv && assoc
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<GroupTable> {
    if !spec.is_supported() {
        return Err(Error::UnsupportedGroup(spec.to_string()));
    }
    let n = spec.order();
    let mul: Vec<Vec<usize>> = match spec {
        GroupSpec::Cyclic(m) => {
            let m = *m as usize;
            (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect()
        }
        GroupSpec::AbelianProduct(ns) => {
            let digits = |mut i: usize| -> Vec<usize> {
                ns.iter()
                    .map(|&m| {
                        let d = i % m as usize;
                        i /= m as usize;
                        d
                    })
                    .collect()
            };
            let index = |ds: &[usize]| -> usize {
                ds.iter()
                    .zip(ns)
                    .rev()
                    .fold(0, |acc, (&d, &m)| acc * m as usize + d)
            };
            (0..n)
                .map(|i| {
                    let di = digits(i);
                    (0..n)
                        .map(|j| {
                            let dj = digits(j);
                            let s: Vec<usize> = di
                                .iter()
                                .zip(&dj)
                                .zip(ns)
                                .map(|((a, b), &m)| (a + b) % m as usize)
                                .collect();
                            index(&s)
                        })
                        .collect()
                })
                .collect()
        }
        GroupSpec::Dihedral(m) => {
            let m = *m as usize;
            // element s*m + k is y^s x^k
            (0..n)
                .map(|i| {
                    let (s, k) = (i / m, i % m);
                    (0..n)
                        .map(|j| {
                            let (t, l) = (j / m, j % m);
                            let k2 = if t == 1 { (m - k) % m } else { k };
                            ((s + t) % 2) * m + (k2 + l) % m
                        })
                        .collect()
                })
                .collect()
        }
        GroupSpec::Dicyclic(m) => {
            let half = 2 * *m as usize;
            let m = *m as usize;
            // element s*2m + k is b^s a^k
            (0..n)
                .map(|i| {
                    let (s, k) = (i / half, i % half);
                    (0..n)
                        .map(|j| {
                            let (t, l) = (j / half, j % half);
                            let k2 = if t == 1 { (half - k) % half } else { k };
                            let mut e = k2 + l;
                            if s + t == 2 {
                                e += m;
                            }
                            ((s + t) % 2) * half + e % half
                        })
                        .collect()
                })
                .collect()
        }
        GroupSpec::Alternating4 => a4_table(),
    };
    let inv = (0..n)
        .map(|i| (0..n).find(|&j| mul[i][j] == 0).expect("every element has an inverse"))
        .collect();
    Ok(GroupTable {
        spec: spec.clone(),
        order: n,
        mul,
        inv,
        ordering_label: spec.ordering_label(),
    })
}

type Perm = [usize; 4];

/// `(p * q)(x) = p(q(x))`.
fn compose(p: &Perm, q: &Perm) -> Perm {
    [p[q[0]], p[q[1]], p[q[2]], p[q[3]]]
}

/// The A4 elements as words in `alpha = (123)` and `beta = (12)(34)`.
pub(crate) fn a4_elements() -> Vec<Perm> {
    let e: Perm = [0, 1, 2, 3];
    let a: Perm = [1, 2, 0, 3];
    let b: Perm = [1, 0, 3, 2];
    let w = |word: &[&Perm]| word.iter().fold(e, |acc, p| compose(&acc, p));
    let a2 = compose(&a, &a);
    vec![
        e,
        b,
        w(&[&a2, &b, &a]),
        w(&[&a, &b, &a2]),
        a,
        w(&[&b, &a]),
        w(&[&a2, &b, &a2]),
        w(&[&a, &b]),
        a2,
        w(&[&b, &a2]),
        w(&[&a2, &b]),
        w(&[&a, &b, &a]),
    ]
}

fn a4_table() -> Vec<Vec<usize>> {
    let els = a4_elements();
    let idx = |p: &Perm| els.iter().position(|q| q == p).expect("A4 is closed");
    els.iter()
        .map(|p| els.iter().map(|q| idx(&compose(p, q))).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in SUPPORTED_NAMES {
            let spec: GroupSpec = name.parse().unwrap();
            assert_eq!(&spec.to_string(), name);
            assert!(spec.is_supported());
        }
        for bad in ["Z0", "D5", "Q6", "Z2xZ2xZ2", "Z2^2", "B4", "", "Z", "Z02"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn tables_satisfy_axioms() {
        for spec in GroupSpec::supported() {
            let t = build_group(&spec).unwrap();
            assert_eq!(t.order, spec.order());
            assert!(t.check_axioms(), "{spec}");
        }
    }

    #[test]
    fn cyclic_is_addition() {
        let t = build_group(&GroupSpec::Cyclic(4)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t.mul(i, j), (i + j) % 4);
            }
        }
    }

    #[test]
    fn dicyclic_relations() {
        let t = build_group(&GroupSpec::Dicyclic(2)).unwrap();
        // b = element 4, b^2 = a^2 = element 2
        assert_eq!(t.mul(4, 4), 2);
        // ab = b a^{-1}
        assert_eq!(t.mul(1, 4), 4 + 3);
        let q12 = build_group(&GroupSpec::Dicyclic(3)).unwrap();
        assert_eq!(q12.mul(6, 6), 3);
    }

    #[test]
    fn dihedral_relations() {
        let t = build_group(&GroupSpec::Dihedral(5)).unwrap();
        assert_eq!(t.mul(5, 5), 0);
        assert_eq!(t.mul(1, 5), 5 + 4);
        assert!(!GroupSpec::Dihedral(5).is_abelian());
    }

    #[test]
    fn a4_matches_cycle_listing() {
        // one-based cycle notation from the canonical ordering label
        let cycles: [&[&[usize]]; 12] = [
            &[],
            &[&[1, 2], &[3, 4]],
            &[&[1, 3], &[2, 4]],
            &[&[1, 4], &[2, 3]],
            &[&[1, 2, 3]],
            &[&[2, 4, 3]],
            &[&[1, 4, 2]],
            &[&[1, 3, 4]],
            &[&[1, 3, 2]],
            &[&[1, 4, 3]],
            &[&[2, 3, 4]],
            &[&[1, 2, 4]],
        ];
        for (el, cyc) in a4_elements().iter().zip(cycles) {
            let mut p = [0, 1, 2, 3];
            for c in cyc {
                for k in 0..c.len() {
                    p[c[k] - 1] = c[(k + 1) % c.len()] - 1;
                }
            }
            assert_eq!(el, &p);
        }
    }
}
