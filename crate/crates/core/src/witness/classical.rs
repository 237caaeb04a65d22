//! Units, prime-power generators and affine families for the cyclic and
//! dihedral groups whose value sets are products of prime-power conditions
//! and a unit.
//!
//! The generator vectors and dihedral families were found by a randomized
//! search over small coefficient boxes; each is checked by the identity suite.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::identities::affine;
use super::{Builder, ConstructionIdentity};
use crate::error::{Error, Result};
use crate::numberkit::split_valuation;

/// `(group, value, coefficients)`.
pub(crate) const CYCLIC_GENERATORS: &[(&str, i64, &[i64])] = &[
    ("Z6", 4, &[0, 0, -1, 0, -1, 0]),
    ("Z6", 8, &[1, 0, 1, 0, 1, 1]),
    ("Z6", 9, &[0, -1, -1, 0, -1, 0]),
    ("Z6", 27, &[0, 1, -1, -1, -1, 1]),
    ("Z10", 4, &[1, 0, -1, 0, -1, 0, 1, 0, 2, 0]),
    ("Z10", 8, &[0, 0, 2, 1, 2, 0, 0, -1, -1, -1]),
    ("Z10", 25, &[-1, 1, 0, 0, -1, 0, -1, 1, 0, 0]),
    ("Z10", 125, &[0, 1, 1, 0, 1, 0, 1, 1, 0, 0]),
    ("Z14", 8, &[-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, -1, 0]),
    ("Z14", 49, &[0, 1, 1, -1, 0, 1, 2, 0, 0, 1, 1, 1, 0, 0]),
    ("Z14", 343, &[0, 0, -1, 1, 0, 1, -1, 0, 0, 1, -1, -1, -1, 1]),
    ("Z9", 27, &[2, 1, 0, 0, -1, 0, -1, 2, 0]),
    ("Z14", 4, &[-1, 0, 1, 0, 0, 0, 1, 0, -1, -1, 1, 2, 1, -1]),
];

/// `(group, value, f, g)`.
pub(crate) const DIHEDRAL_GENERATORS: &[(&str, i64, &[i64], &[i64])] = &[
    ("D6", 4, &[1, 1, 0], &[0, 0, 0]),
    ("D6", 8, &[1, 1, 1], &[1, 0, 0]),
    ("D6", 27, &[1, 1, 0], &[1, -1, 1]),
    ("D6", 81, &[-1, -1, -1], &[1, 0, -1]),
    ("D10", 4, &[-1, 0, -1, 0, 0], &[0, 0, 0, 0, 0]),
    ("D10", 8, &[1, 0, 1, 0, 1], &[-1, 1, -1, 0, 0]),
    ("D10", 125, &[0, 1, 0, 1, 1], &[-1, -1, 1, 0, -1]),
    ("D10", 625, &[-1, -1, -1, -1, -1], &[-1, 0, 1, 1, -1]),
    ("D14", 4, &[1, 0, -1, 1, 0, 0, 1], &[0, 0, 0, 0, 1, 0, -1]),
    ("D14", 8, &[1, 1, 0, 1, 1, -1, 0], &[-1, -1, 1, -1, -1, 1, 1]),
    ("D14", 343, &[1, -1, -1, -1, -1, -1, 0], &[1, 1, 0, 1, 0, -1, 1]),
    ("D14", 2401, &[1, 1, 1, 1, 1, 1, 1], &[1, -1, -1, 0, 0, 0, 1]),
    ("D14", 16807, &[-1, 1, 1, 1, 1, 1, 0], &[1, 0, 0, 1, 1, -1, 1]),
    ("D18", 4, &[-1, 1, 1, 0, -1, 1, 0, 0, 1], &[-1, 0, 1, -1, 0, 0, 0, 0, 1]),
    ("D18", 8, &[-1, 1, 1, 1, -1, -1, -1, -1, -1], &[1, 1, 1, 1, 0, 0, -1, -1, -1]),
    ("D6", -243, &[2, 0, 1], &[2, 2, 2]),
    ("D10", -3125, &[-1, -1, -1, -1, 2], &[1, 1, 0, 2, -1]),
];

/// `(group, K, s, f, g)`: `(f + k h, g + k h)` has determinant `K (s + 2nk)`.
type DihedralFamily = (&'static str, i64, i64, &'static [i64], &'static [i64]);

pub(crate) const DIHEDRAL_FAMILIES: &[DihedralFamily] = &[
    ("D6", 1, 1, &[0, 1, 0], &[0, 0, 0]),
    ("D6", 1, -1, &[0, 0, 0], &[0, 0, -1]),
    ("D10", 1, 1, &[1, 0, 0, 0, 0], &[0, 1, 0, 0, -1]),
    ("D10", 1, 3, &[0, 1, 1, 0, 0], &[0, 0, 0, 1, 0]),
    ("D10", 1, -3, &[0, -1, 0, 0, 0], &[0, -1, 0, 0, -1]),
    ("D10", 1, -1, &[1, -1, 0, 0, 0], &[0, 0, 0, -1, 0]),
    ("D14", 1, 1, &[1, -1, 0, 0, 1, 0, 0], &[0, -1, 0, -1, 1, 1, 0]),
    ("D14", 1, 3, &[1, 0, 1, -1, 0, 0, 1], &[1, 0, 0, 0, 0, 0, 0]),
    ("D14", 1, 5, &[1, 0, 0, 0, 0, 2, 0], &[0, 0, 2, 0, 0, 0, 0]),
    ("D14", 1, -5, &[-1, 0, 0, 0, -1, 1, -1], &[0, 1, -1, -1, -1, 0, -1]),
    ("D14", 1, -3, &[0, 0, 0, 0, -1, 0, 0], &[0, 0, 0, -1, 0, 0, -1]),
    ("D14", 1, -1, &[0, 1, 1, -1, 0, -1, 0], &[0, 1, -1, 0, 0, -1, 0]),
    ("D16", 1, 5, &[0, 1, 1, 2, 1, -1, -1, -1], &[2, 1, 0, 0, -1, 0, 0, 1]),
    ("D16", 1, 13, &[1, 2, 0, 2, 1, 0, 2, -1], &[1, 0, 2, -1, 0, 2, 0, 2]),
    ("D16", -1, 7, &[1, 0, 1, 1, 1, 1, -1, 0], &[2, 1, 0, 1, 0, 0, 0, -1]),
    ("D16", -1, -1, &[0, 2, 0, 0, 1, -1, -1, -1], &[1, -1, -1, 0, -1, -1, 1, 1]),
    ("D16", 256, 0, &[0, 2, -1, -1, 0, -1, 0, -1], &[0, 2, 0, 1, -1, 0, 1, -1]),
    ("D16", 256, 4, &[1, 1, 0, 0, 1, 0, 1, 0], &[0, 0, 1, 0, -1, 0, 0, 0]),
    ("D16", 256, 8, &[1, -1, 1, 2, 2, 1, 0, 0], &[0, 0, -1, 1, 2, 0, 0, 0]),
    ("D16", 256, 12, &[-1, 1, 2, 0, 1, 1, 0, 0], &[2, 1, 0, 0, 1, 2, 2, 0]),
    ("D18", 1, 1, &[-1, -1, 0, -1, 2, 0, 1, 0, 1], &[1, 0, 2, 0, 0, -1, 0, -1, -1]),
    ("D18", 1, 5, &[0, 1, -1, 0, 1, 2, 1, 0, -1], &[0, 1, -1, 1, 2, 1, -1, -1, 0]),
    ("D18", 1, 7, &[0, 0, 2, 0, 0, 0, 2, 0, 0], &[0, 1, 0, 0, 1, 0, 1, 0, 0]),
    ("D18", 1, 11, &[0, -1, 2, 1, 2, 0, 1, -1, 2], &[0, 2, 0, 1, 0, 2, -1, -1, 2]),
    ("D18", 1, -5, &[-1, 1, 0, 0, 0, 1, -1, -1, -1], &[-1, -1, 0, -1, 0, 1, 0, 0, -1]),
    ("D18", 1, 17, &[2, 1, 1, 2, 2, 1, 1, 0, -1], &[2, 1, 2, 1, 0, -1, 2, 0, 1]),
    ("D18", 243, 1, &[1, 2, 0, 0, 0, 0, -1, 0, 0], &[-1, -1, 1, -1, 1, 1, 0, 0, -1]),
    ("D18", 243, 3, &[1, 0, 0, 0, 1, 1, 0, -1, 1], &[0, -1, 0, 0, 0, -1, 0, 1, 1]),
    ("D18", 243, 5, &[0, 1, 1, 0, 0, 1, 0, 0, 1], &[1, 0, 1, -1, 0, 0, 1, -1, 0]),
    ("D18", 243, 7, &[-1, 0, 0, 2, 1, 1, 0, 1, 1], &[1, 0, -1, 2, 0, -1, -1, 0, 2]),
    ("D18", 243, 9, &[1, 0, 0, 1, 0, 1, 1, 0, 2], &[2, -1, 1, 1, 0, 1, 0, 0, -1]),
    ("D18", 243, 11, &[0, -1, 0, 2, 0, 1, 1, 2, 2], &[-1, -1, 1, 1, 1, 0, 1, 2, 0]),
    ("D18", 243, 13, &[1, 2, 2, 1, 0, 1, 0, 0, 1], &[0, 0, 0, -1, 2, 2, 1, 0, 1]),
    ("D18", 243, 15, &[2, 2, 1, 0, 1, 0, 0, 2, 1], &[0, 1, 0, 0, 2, 1, 2, 1, -1]),
    ("D18", 243, -1, &[1, 0, 1, -1, -1, 1, -1, 0, 1], &[-1, 0, 1, -1, 0, 1, -1, 0, -1]),
];

const CYCLIC: &[u32] = &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14];

fn b(a: i64) -> BigInt {
    BigInt::from(a)
}

/// `(n, |G|)` of the dihedral group with this name.
fn dihedral_n(name: &str) -> Option<usize> {
    match name {
        "D6" => Some(3),
        "D10" => Some(5),
        "D14" => Some(7),
        "D16" => Some(8),
        "D18" => Some(9),
        _ => None,
    }
}

fn family_id(group: &str, k: i64, s: i64, modulus: usize) -> String {
    format!("{group}.{k}({s}+{modulus}k)")
}

fn gen_id(group: &str, value: i64) -> String {
    format!("{group}.gen({value})")
}

pub(crate) fn identities() -> Vec<ConstructionIdentity> {
    let mut out = Vec::new();
    for &n in CYCLIC {
        let name = format!("Z{n}");
        let ni = n as i64;
        // 1 + x + ... + x^{j-1} + k(1 + ... + x^{n-1})
        for j in (1..ni).filter(|j| j.gcd(&ni) == 1) {
            let base: Vec<i64> = (0..ni).map(|i| i64::from(i < j)).collect();
            out.push(ConstructionIdentity::new(
                &format!("{name}.{j}+{n}k"),
                &[name.as_str()],
                &["k"],
                move |p| affine(&base, &p[0]),
                move |p| b(ni) * &p[0] + j,
            ));
        }
        // x - 1 + c(1 + ... + x^{n-1})
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let mut base = vec![0i64; n as usize];
        base[0] = -1;
        base[1 % n as usize] += 1;
        out.push(ConstructionIdentity::new(
            &format!("{name}.{}c", sign * ni * ni),
            &[name.as_str()],
            &["c"],
            move |p| affine(&base, &p[0]),
            move |p| b(sign * ni * ni) * &p[0],
        ));
    }
    out.push(ConstructionIdentity::new(
        "Z8.2^5(2k+1)",
        &["Z8"],
        &["k"],
        |p| affine(&[1, 1, 1, 0, 1, 0, 0, 0], &p[0]),
        |p| b(32) * (b(2) * &p[0] + 1),
    ));
    for &(group, value, c) in CYCLIC_GENERATORS {
        out.push(ConstructionIdentity::new(
            &gen_id(group, value),
            &[group],
            &[],
            move |_| c.iter().map(|&a| b(a)).collect(),
            move |_| b(value),
        ));
    }
    for &(group, value, f, g) in DIHEDRAL_GENERATORS {
        out.push(ConstructionIdentity::new(
            &gen_id(group, value),
            &[group],
            &[],
            move |_| f.iter().chain(g).map(|&a| b(a)).collect(),
            move |_| b(value),
        ));
    }
    for &(group, k, s, f, g) in DIHEDRAL_FAMILIES {
        let m = 2 * dihedral_n(group).expect("dihedral table group") as i64;
        let base: Vec<i64> = f.iter().chain(g).copied().collect();
        out.push(ConstructionIdentity::new(
            &family_id(group, k, s, m as usize),
            &[group],
            &["k"],
            move |p| affine(&base, &p[0]),
            move |p| b(k) * (b(m) * &p[0] + s),
        ));
    }
    out
}

/// Splits `e` into parts from `[lo, 2 lo - 1]`; `None` below `lo`.
fn split_exponent(mut e: u32, lo: u32) -> Option<Vec<u32>> {
    if e < lo {
        return None;
    }
    let mut parts = Vec::new();
    while e >= 2 * lo {
        parts.push(lo);
        e -= lo;
    }
    parts.push(e);
    Some(parts)
}

/// The generator of `group` whose absolute value is `q^e`.
fn generator(group: &str, q: u32, e: u32) -> Option<i64> {
    let target = (q as i64).pow(e);
    CYCLIC_GENERATORS
        .iter()
        .map(|&(g, v, _)| (g, v))
        .chain(DIHEDRAL_GENERATORS.iter().map(|&(g, v, _, _)| (g, v)))
        .find(|&(g, v)| g == group && v.abs() == target)
        .map(|(_, v)| v)
}

fn gap(group: &str, v: &BigInt, branch: &str) -> Error {
    Error::ConstructionGap {
        group: group.to_string(),
        value: v.to_string(),
        branch: branch.to_string(),
    }
}

/// Multiplies in generators for `q^e`, with parts from `[lo, 2 lo - 1]`.
fn apply_power(bld: &mut Builder, group: &str, v: &BigInt, q: u32, e: u32, lo: u32) -> Result<()> {
    let parts = split_exponent(e, lo).ok_or_else(|| gap(group, v, "prime power"))?;
    for part in parts {
        let value = generator(group, q, part).ok_or_else(|| gap(group, v, "prime power"))?;
        bld.apply(&gen_id(group, value), &[]);
    }
    Ok(())
}

/// `w / d` when exact.
fn exact(w: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = w.div_rem(d);
    r.is_zero().then_some(q)
}

/// Applies the dihedral family of factor `k` whose class `k s mod 2n`
/// matches `w`.
fn apply_family(bld: &mut Builder, group: &str, w: &BigInt, factor: i64) -> bool {
    let m = 2 * dihedral_n(group).expect("dihedral group") as i64;
    let Some(t) = exact(w, &b(factor)) else { return false };
    for &(g, k, s, _, _) in DIHEDRAL_FAMILIES {
        if g != group || k.abs() != factor {
            continue;
        }
        let u = if k < 0 { -&t } else { t.clone() };
        let (kk, r) = (&u - s).div_rem(&b(m));
        if r.is_zero() {
            bld.apply(&family_id(group, k, s, m as usize), &[kk]);
            return true;
        }
    }
    false
}

/// The unit step `j + nk` of `Z_n`.
fn cyclic_unit(bld: &mut Builder, n: u32, w: &BigInt) {
    let j = w.mod_floor(&b(n as i64));
    let k = (w - &j) / n;
    bld.apply(&format!("Z{n}.{j}+{n}k"), &[k]);
}

/// Builds the witness for the classical groups; `Ok(false)` when `group` is
/// not one of them.
pub(crate) fn achieve(bld: &mut Builder, group: &str, v: &BigInt) -> Result<bool> {
    if let Some(n) = group.strip_prefix('Z').and_then(|s| s.parse::<u32>().ok()) {
        if !CYCLIC.contains(&n) {
            return Ok(false);
        }
        cyclic(bld, group, n, v)?;
        return Ok(true);
    }
    match group {
        "D16" => d16(bld, v)?,
        "D6" | "D10" | "D14" | "D18" => dihedral(bld, group, v)?,
        _ => return Ok(false),
    }
    Ok(true)
}

fn cyclic(bld: &mut Builder, group: &str, n: u32, v: &BigInt) -> Result<()> {
    let ni = n as i64;
    let sq = if n.is_multiple_of(2) { -ni * ni } else { ni * ni };
    if let Some(c) = exact(v, &b(sq)) {
        bld.apply(&format!("{group}.{sq}c"), &[c]);
        return Ok(());
    }
    match n {
        8 if split_valuation(v, 2).0 == 5 => {
            let odd = split_valuation(v, 2).1;
            bld.apply("Z8.2^5(2k+1)", &[(odd - 1) / 2]);
            return Ok(());
        }
        6 | 9 | 10 | 14 => {
            let (primes, lo): (&[u32], u32) = if n == 9 { (&[3], 3) } else { (&[2, n / 2], 2) };
            for &q in primes {
                let (e, _) = split_valuation(v, q);
                if e > 0 {
                    apply_power(bld, group, v, q, e, lo)?;
                }
            }
        }
        _ => {}
    }
    let u = exact(v, bld.value()).ok_or_else(|| gap(group, v, "unit"))?;
    if u.gcd(&b(ni)) != b(1) {
        return Err(gap(group, v, "unit"));
    }
    cyclic_unit(bld, n, &u);
    Ok(())
}

fn dihedral(bld: &mut Builder, group: &str, v: &BigInt) -> Result<()> {
    let n = dihedral_n(group).expect("dihedral group") as u32;
    let p = if n == 9 { 3 } else { n };
    let (e2, odd) = split_valuation(v, 2);
    if e2 > 0 {
        apply_power(bld, group, v, 2, e2, 2)?;
    }
    let (ep, _) = split_valuation(&odd, p);
    let rest = exact(v, bld.value()).ok_or_else(|| gap(group, v, "unit"))?;
    if n == 9 && ep >= 5 {
        if apply_family(bld, group, &rest, 243) {
            return Ok(());
        }
        return Err(gap(group, v, "3^5 family"));
    }
    if ep > 0 {
        apply_power(bld, group, v, p, ep, 3)?;
    }
    let unit = exact(v, bld.value()).ok_or_else(|| gap(group, v, "unit"))?;
    if !apply_family(bld, group, &unit, 1) {
        return Err(gap(group, v, "unit"));
    }
    Ok(())
}

fn d16(bld: &mut Builder, v: &BigInt) -> Result<()> {
    let ok = if v.mod_floor(&b(4)) == b(1) {
        apply_family(bld, "D16", v, 1)
    } else {
        v.mod_floor(&b(1024)).is_zero() && apply_family(bld, "D16", v, 256)
    };
    if ok {
        Ok(())
    } else {
        Err(gap("D16", v, "4m+1 or 2^10m"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_splits() {
        assert_eq!(split_exponent(7, 3), Some(vec![3, 4]));
        assert_eq!(split_exponent(5, 2), Some(vec![2, 3]));
        assert_eq!(split_exponent(3, 3), Some(vec![3]));
        assert_eq!(split_exponent(1, 2), None);
        assert!(split_exponent(40, 5).unwrap().iter().all(|&p| (5..10).contains(&p)));
    }

    #[test]
    fn generators_cover_minimal_exponents() {
        for (group, q, lo) in [("Z6", 2, 2), ("Z6", 3, 2), ("Z10", 5, 2), ("Z14", 7, 2), ("D6", 3, 3), ("D10", 5, 3), ("D14", 7, 3)] {
            for e in lo..2 * lo {
                assert!(generator(group, q, e).is_some(), "{group} {q}^{e}");
            }
        }
        assert!(generator("D18", 2, 3).is_some());
    }
}
