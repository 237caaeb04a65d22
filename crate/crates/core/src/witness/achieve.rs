//! Routes from a membership certificate to a composed witness.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::identities::alpha_k;
use super::{classical, Builder, Witness};
use crate::classifier::{member, MembershipCertificate};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::measure::CoeffVector;
use crate::numberkit::{
    four_squares_q8, n2_form_solutions, norm_sum_split, normform_1mod12, normform_7mod12,
    search_bound, shells, split_valuation, two_squares_doubled, P12Class,
};

/// Largest prime handed to a two-parameter search.
const SEARCH2_LIMIT: u64 = 1 << 32;
/// Largest prime handed to a four-parameter search or the norm-sum split.
const SEARCH4_LIMIT: u64 = 1 << 24;

fn b(a: i64) -> BigInt {
    BigInt::from(a)
}

/// Context shared by the per-group routes.
struct Route<'a> {
    group: String,
    v: &'a BigInt,
    cert: &'a MembershipCertificate,
}

impl Route<'_> {
    fn gap(&self, why: &str) -> Error {
        Error::ConstructionGap {
            group: self.group.clone(),
            value: self.v.to_string(),
            branch: format!("{} ({why})", self.cert.branch),
        }
    }

    fn param(&self, key: &str) -> Result<BigInt> {
        self.cert
            .params
            .get(key)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.gap(&format!("missing {key}")))
    }

    /// The certificate prime, bounded for the solver that will consume it.
    fn prime(&self, limit: u64) -> Result<u64> {
        let p = self.param("p")?;
        p.to_u64().filter(|&p| p < limit).ok_or_else(|| self.gap("prime beyond search range"))
    }

    fn p_class(&self) -> &str {
        self.cert.params.get("p_class").map(String::as_str).unwrap_or("")
    }
}

/// `m` with `w = scale * (coeff * m + offset)`, when exact.
fn solve(w: &BigInt, scale: i64, coeff: i64, offset: i64) -> Option<BigInt> {
    let (q, r) = w.div_rem(&b(scale));
    if !r.is_zero() {
        return None;
    }
    let (m, r) = (q - offset).div_rem(&b(coeff));
    r.is_zero().then_some(m)
}

/// Builds a witness `w` with `det w = v`.
///
/// Fails with [`Error::NotInSet`] when the classifier rejects `v` and with
/// [`Error::ConstructionGap`] when no route covers the certificate (for
/// instance a prime too large for the norm-form searches).
pub fn achieve(spec: &GroupSpec, v: &BigInt) -> Result<Witness> {
    let mut bld = Builder::new(spec)?;
    let cert = member(spec, v)?;
    if !cert.verdict {
        return Err(Error::NotInSet {
            group: spec.name(),
            value: v.to_string(),
        });
    }
    if v.is_zero() {
        let n = bld.table.order;
        bld.push("zero", BTreeMap::new(), &BigInt::zero(), CoeffVector::zeros(n));
        return Ok(bld.finish(v));
    }
    let name = spec.name();
    if name == "Z1" {
        bld.constant(v);
        return Ok(bld.finish(v));
    }
    if classical::achieve(&mut bld, &name, v)? {
        return Ok(bld.finish(v));
    }
    let r = Route { group: name.clone(), v, cert: &cert };
    match name.as_str() {
        "Z2xZ2" | "D4" => klein(&mut bld, &r)?,
        "Q8" | "D8" | "Z4xZ2" => order_eight(&mut bld, &r)?,
        "Z2^3" => z2_cubed(&mut bld, &r)?,
        "A4" => a4(&mut bld, &r)?,
        "D12" => {
            if !order_twelve_direct(&mut bld, v, true) {
                return Err(r.gap("no direct family"));
            }
        }
        "Q12" => q12(&mut bld, &r)?,
        "Z6xZ2" => z6_z2(&mut bld, &r)?,
        "Z12" => z12(&mut bld, &r)?,
        "Z3xZ3" => z3_z3(&mut bld, &r)?,
        _ => return Err(r.gap("no route")),
    }
    Ok(bld.finish(v))
}

/// Applies `id` at `(m)` when `w = scale * (coeff * m + offset)`.
fn linear(bld: &mut Builder, id: &str, w: &BigInt, scale: i64, coeff: i64, offset: i64) -> bool {
    match solve(w, scale, coeff, offset) {
        Some(m) => {
            bld.apply(id, &[m]);
            true
        }
        None => false,
    }
}

/// Tries the linear families in order.
fn first_linear(bld: &mut Builder, w: &BigInt, options: &[(&str, i64, i64, i64)]) -> bool {
    options
        .iter()
        .any(|&(id, scale, coeff, offset)| solve(w, scale, coeff, offset).is_some() && linear(bld, id, w, scale, coeff, offset))
}

fn klein(bld: &mut Builder, r: &Route) -> Result<()> {
    let options = [("V4.4m+1", 1, 4, 1), ("V4.2^4(2m+1)", 16, 2, 1), ("V4.2^6m", 64, 1, 0)];
    if first_linear(bld, r.v, &options) {
        Ok(())
    } else {
        Err(r.gap("no family"))
    }
}

fn order_eight(bld: &mut Builder, r: &Route) -> Result<()> {
    let mut options = vec![
        ("o8.8m+1", 1, 8, 1),
        ("o8.2^8(4k+1)", 256, 4, 1),
        ("o8.-2^8(4k+1)", -256, 4, 1),
        ("o8.2^9k", 512, 1, 0),
    ];
    if r.group == "D8" {
        options.push(("D8.8m-3", 1, 8, -3));
    }
    if first_linear(bld, r.v, &options) {
        return Ok(());
    }
    if r.group != "Q8" || r.cert.branch != "(8m-3)p^2" {
        return Err(r.gap("no family"));
    }
    let p = r.prime(SEARCH2_LIMIT)?;
    let (a, bb, c, d) = four_squares_q8(p)?;
    let p2 = BigInt::from(p) * p;
    let m = solve(&(r.v / &p2), 1, 8, -3).filter(|_| (r.v % &p2).is_zero());
    let m = m.ok_or_else(|| r.gap("cofactor"))?;
    bld.apply("Q8.(8m-3)p^2", &[m, b(a / 2), b((bb - 1) / 2), b((c - 1) / 2), b((d - 1) / 2)]);
    Ok(())
}

fn z2_cubed(bld: &mut Builder, r: &Route) -> Result<()> {
    let options = [
        ("Z2^3.8m+1", 1, 8, 1),
        ("Z2^3.2^8(4m+1)", 256, 4, 1),
        ("Z2^3.2^12(2k+1)", 4096, 2, 1),
        ("Z2^3.2^13k", 8192, 1, 0),
    ];
    if first_linear(bld, r.v, &options) {
        Ok(())
    } else {
        Err(r.gap("no family"))
    }
}

fn a4(bld: &mut Builder, r: &Route) -> Result<()> {
    let (e2, _) = split_valuation(r.v, 2);
    let (e3, _) = split_valuation(r.v, 3);
    // 3^e3 = 9^i (-27)^j
    let j = e3 % 2;
    for _ in 0..(e3 - 3 * j) / 2 {
        bld.apply("A4.9", &[]);
    }
    if j == 1 {
        bld.apply("A4.-27", &[]);
    }
    // 2^e2 as 16^s times one of 2^4, 2^8, ..., 2^11
    let mut last = e2;
    if e2 >= 8 {
        while last > 11 {
            bld.apply("A4.2^4", &[]);
            last -= 4;
        }
    }
    let rest = (r.v / bld.value()) >> last;
    let positive = rest.mod_floor(&b(4)) == BigInt::one();
    match last {
        0 => {}
        4 => bld.apply(if positive { "A4.2^4" } else { "A4.-2^4" }, &[]),
        8..=11 => {
            // (1 + 3k) at k = 0, -1, 1, -3 gives 1, -2, 4, -8
            let k = [0, -1, 1, -3][(last - 8) as usize];
            let sign_of_base = if (last - 8) % 2 == 0 { 1 } else { -1 };
            let id = if positive == (sign_of_base == 1) { "A4.2^8(1+3k)" } else { "A4.-2^8(1+3k)" };
            bld.apply_i(id, &[k]);
        }
        _ => return Err(r.gap("2-adic valuation")),
    }
    let unit = r.v / bld.value();
    let options = [("A4.1+12k", 1, 12, 1), ("A4.5+12k", 1, 12, 5)];
    if first_linear(bld, &unit, &options) {
        Ok(())
    } else {
        Err(r.gap("unit"))
    }
}

/// The families shared by the order-12 groups of the form `f + y g`, plus
/// the two dihedral-only families when `dihedral` is set.
fn order_twelve_direct(bld: &mut Builder, w: &BigInt, dihedral: bool) -> bool {
    let mut options = vec![
        ("o12.1+12t", 1, 12, 1),
        ("o12.5+12t", 1, 12, 5),
        ("o12.2^4(1+6t)", 16, 6, 1),
        ("o12.2^6(1+3t)", 64, 3, 1),
        ("o12.2^6.27t", 1728, 1, 0),
        ("o12.-2^4.27(1+2t)", -432, 2, 1),
    ];
    if dihedral {
        options.push(("D12.2^4(5+6t)", 16, 6, 5));
        options.push(("D12.-2^6(1+3t)", -64, 3, 1));
    }
    let (e3, _) = split_valuation(w, 3);
    if e3 >= 3 && w.is_odd() {
        return linear(bld, "o12.-27(1+4t)", w, -27, 4, 1);
    }
    first_linear(bld, w, &options)
}

/// Multiplies in `w` or `-w`, whichever the families reach; the caller fixes
/// the sign afterwards.
fn q12_cofactor(bld: &mut Builder, r: &Route, w: &BigInt) -> Result<()> {
    if order_twelve_direct(bld, w, false) || order_twelve_direct(bld, &-w, false) {
        Ok(())
    } else {
        Err(r.gap("cofactor"))
    }
}

fn q12(bld: &mut Builder, r: &Route) -> Result<()> {
    let v = r.v;
    match r.cert.branch.as_str() {
        "2^a3^b.m6" => q12_cofactor(bld, r, v)?,
        "2^5.3^b.m6" => {
            let (e3, _) = split_valuation(v, 3);
            bld.apply(if e3 == 6 { "Q12.2^5.3^6" } else { "Q12.2^5.3^4" }, &[]);
            let w = v / bld.value();
            if !w.is_one() && !(-&w).is_one() {
                q12_cofactor(bld, r, &w)?;
            }
        }
        "2^5.3^b.m6.k" => {
            if r.p_class() == "5 mod 12" {
                let p = r.prime(SEARCH2_LIMIT)?;
                let (a, c) = two_squares_doubled(p)?;
                bld.apply_i("Q12.2^5p", &[a, c]);
            } else {
                let p = r.prime(SEARCH4_LIMIT)?;
                let (alpha, beta) = norm_sum_split(p)?;
                let ps = [alpha.params[0], alpha.params[1], beta.params[0], beta.params[1]];
                bld.apply_i("Q12.2^5p^2", &ps);
            }
            let w = v / bld.value();
            if !w.is_one() && !(-&w).is_one() {
                q12_cofactor(bld, r, &w)?;
            }
        }
        _ => return Err(r.gap("no route")),
    }
    if bld.value() != v {
        bld.negate()?;
    }
    Ok(())
}

/// `(A, B)` with `alpha_k(A, B) = k`, by search.
fn search_alpha_k(k: &BigInt) -> Option<(i64, i64)> {
    let k64 = k.to_u64().filter(|&k| k < SEARCH2_LIMIT)?;
    shells::<2>(search_bound(k64)).find(|t| alpha_k(&b(t[0]), &b(t[1])) == *k).map(|t| (t[0], t[1]))
}

/// `(A, B)` with `alpha_k(A, B) = k` for the type-2 divisors.
fn type2_params(r: &Route, k: &BigInt) -> Result<(i64, i64)> {
    let kind = r.cert.params.get("k_kind").map(String::as_str).unwrap_or("");
    let guess = if kind.starts_with("p=") {
        let p = k.to_u64().filter(|&p| p < SEARCH2_LIMIT).ok_or_else(|| r.gap("prime beyond search range"))?;
        let s = normform_1mod12(p, P12Class::P1)?;
        Some((s.params[0], (s.params[1] + 1) / 2))
    } else if kind.starts_with("p^2") {
        k.sqrt().to_i64().map(|p| {
            let t = (p - 5) / 12;
            (2 * t + 1, t + 1)
        })
    } else {
        None
    };
    match guess {
        Some((a, c)) if alpha_k(&b(a), &b(c)) == *k => Ok((a, c)),
        _ => search_alpha_k(k).ok_or_else(|| r.gap("type-2 divisor beyond search range")),
    }
}

fn z6_z2(bld: &mut Builder, r: &Route) -> Result<()> {
    let v = r.v;
    let plain: &[(&str, &str, i64, i64, i64)] = &[
        ("a.27(4m-1)", "o12.-27(1+4t)", -27, 4, 1),
        ("a.2^4.27(2m-1)", "Z6xZ2.-2^4.27(1+2k)", -432, 2, 1),
        ("a.2^6.27m", "Z6xZ2.-2^6.27m", -1728, 1, 0),
        ("b.2^8.9(4m-1)", "Z6xZ2.-2^8.9(1+4m)", -9 * 256, 4, 1),
        ("b.2^10.9(4m-1)", "Z6xZ2.-2^10.9(1+4m)", -9 * 1024, 4, 1),
        ("b.2^12.9(2m-1)", "Z6xZ2.2^12.9(1+2m)", 9 * 4096, 2, 1),
        ("b.2^14.9m", "Z6xZ2.-2^14.9m", -9 * 16384, 1, 0),
        ("c.12m+1", "o12.1+12t", 1, 12, 1),
        ("c.2^4(6m+1)", "o12.2^4(1+6t)", 16, 6, 1),
        ("c.2^6(3m+1)", "Z6xZ2.2^6(1+3m)", 64, 3, 1),
        ("c.2^8(12m+5)", "Z6xZ2.2^8(5+12m)", 256, 12, 5),
        ("c.2^10(12m+5)", "Z6xZ2.2^10(5+12m)", 1024, 12, 5),
        ("c.-2^12(6m+1)", "Z6xZ2.-2^12(1+6m)", -4096, 6, 1),
        ("c.-2^14(3m+1)", "Z6xZ2.-2^14(1+3m)", -16384, 3, 1),
    ];
    let branch = r.cert.branch.as_str();
    if let Some(&(_, id, scale, coeff, offset)) = plain.iter().find(|e| e.0 == branch) {
        return if linear(bld, id, v, scale, coeff, offset) { Ok(()) } else { Err(r.gap("cofactor")) };
    }
    // (id, scale, coeff, offset) of the prime-bearing families
    let with_prime: &[(&str, &str, i64, i64, i64)] = &[
        ("b.9(4m-1)p", "Z6xZ2.-9(1+4m)p", -9, 4, 1),
        ("b.2^4.9(2m-1)p", "Z6xZ2.2^4.9(2m-1)p", 144, 2, -1),
        ("b.2^6.9mp", "Z6xZ2.-2^6.9mp", -576, 1, 0),
        ("c.2^8(12m+5)p", "Z6xZ2.2^8(5+12m)p", 256, 12, 5),
        ("c.2^10(12m+5)p", "Z6xZ2.2^10(5+12m)p", 1024, 12, 5),
        ("c.(12m+5)k", "Z6xZ2.(5+12m)k", 1, 12, 5),
        ("c.-2^4(6m+1)k", "Z6xZ2.-2^4(1+6m)k", -16, 6, 1),
        ("c.-2^6(3m+1)k", "Z6xZ2.-2^6(1+3m)k", -64, 3, 1),
    ];
    let &(_, id, scale, coeff, offset) =
        with_prime.iter().find(|e| e.0 == branch).ok_or_else(|| r.gap("no route"))?;
    let (k, (a, c)) = if branch.starts_with("b.") {
        let p = r.prime(SEARCH2_LIMIT)?;
        let s = normform_7mod12(p)?;
        (BigInt::from(p), (s.params[0], s.params[1] / 2))
    } else if branch.ends_with(")p") {
        let p = r.prime(SEARCH2_LIMIT)?;
        let s = normform_7mod12(p)?;
        (BigInt::from(p), (-(2 * s.params[0] + 1), -s.params[1]))
    } else {
        let k = r.param("k")?;
        let ab = type2_params(r, &k)?;
        (k, ab)
    };
    let w = v / &k;
    let m = solve(&w, scale, coeff, offset).ok_or_else(|| r.gap("cofactor"))?;
    bld.apply(id, &[b(a), b(c), m]);
    Ok(())
}

/// Solutions for the prime factor of the `Z12` families: the family suffix
/// and its leading parameters.
fn z12_prime(r: &Route, odd: bool) -> Result<(&'static str, Vec<i64>)> {
    match r.p_class() {
        "5 mod 12" => {
            let p = r.prime(SEARCH2_LIMIT)?;
            let (a, c) = two_squares_doubled(p)?;
            if odd {
                let (x, y) = (1 + 6 * a, 3 + 6 * c);
                let (s, d) = ((x + y) / 2, (x - y) / 2);
                let (o, e) = if s % 2 != 0 { (s, d) } else { (d, s) };
                let o = if o.rem_euclid(6) == 1 { o } else { -o };
                let e = if e.rem_euclid(6) == 2 { e } else { -e };
                Ok(("p5", vec![(o - 1) / 6, (e - 2) / 6]))
            } else {
                Ok(("p5", vec![-2 * a, 1 + 2 * c]))
            }
        }
        "7 mod 12" => {
            let p = r.prime(SEARCH2_LIMIT)?;
            let s = normform_7mod12(p)?;
            let (a, bh) = (s.params[0], s.params[1] / 2);
            if odd {
                Ok(("p7", vec![-1 - a + 2 * bh, -1 - 2 * a + bh]))
            } else {
                Ok(("p7", vec![a, bh]))
            }
        }
        "P1" => {
            let p = r.prime(SEARCH4_LIMIT)?;
            let (first, second) = n2_form_solutions(p)?;
            if odd {
                let t = &second.params;
                Ok(("pP1", vec![t[0] / 2, t[1], t[2] / 2, t[3] / 2]))
            } else {
                let t = &first.params;
                Ok(("pP1", vec![t[0], t[1], t[2] / 2, t[3]]))
            }
        }
        _ => Err(r.gap("prime class")),
    }
}

fn z12(bld: &mut Builder, r: &Route) -> Result<()> {
    let v = r.v;
    let done = match r.cert.branch.as_str() {
        "odd.m6" => {
            let opts = [("Z12.1+12m", 1, 12, 1), ("Z12.5+12m", 1, 12, 5)];
            first_linear(bld, v, &opts) || first_linear(bld, &-v, &opts)
        }
        "odd.27m2" => linear(bld, "Z12.27(1+4t)", v, 27, 4, 1) || linear(bld, "Z12.27(1+4t)", &-v, 27, 4, 1),
        "even.144m" => linear(bld, "Z12.-144m", v, -144, 1, 0),
        "even.2^4m6" => linear(bld, "Z12.2^4(1+6m)", v, 16, 6, 1) || linear(bld, "Z12.2^4(1+6m)", &-v, 16, 6, 1),
        "even.2^6m3" => linear(bld, "Z12.2^6(1+3m)", v, 64, 3, 1) || linear(bld, "Z12.2^6(1+3m)", &-v, 64, 3, 1),
        "odd.9m6p" | "even.2^5m6p" => {
            let odd = r.cert.branch.starts_with("odd");
            let (suffix, lead) = z12_prime(r, odd)?;
            let (family, scale, coeff) = if odd { ("Z12.9(1+4m)", 9, 4) } else { ("Z12.32(1+6m)", 32, 6) };
            let p = r.param("p")?;
            let w = v / &p;
            let m = solve(&w, scale, coeff, 1).or_else(|| solve(&-&w, scale, coeff, 1));
            let m = m.ok_or_else(|| r.gap("cofactor"))?;
            let mut params: Vec<BigInt> = lead.into_iter().map(b).collect();
            params.push(m);
            bld.apply(&format!("{family}{suffix}"), &params);
            true
        }
        _ => false,
    };
    if !done {
        return Err(r.gap("no family"));
    }
    if bld.value() != v {
        bld.apply("Z12.-1", &[]);
    }
    Ok(())
}

fn z3_z3(bld: &mut Builder, r: &Route) -> Result<()> {
    let v = r.v;
    if let Some(m) = solve(v, 1, 9, 1) {
        bld.apply("Z3xZ3.9m+-1", &[m, b(0)]);
        return Ok(());
    }
    if let Some(m) = solve(v, 1, 9, -1) {
        bld.apply("Z3xZ3.9m+-1", &[m, b(1)]);
        return Ok(());
    }
    let opts = [("Z3xZ3.3^6(1+3m)", 729, 3, 1), ("Z3xZ3.3^7m", 2187, 1, 0)];
    if first_linear(bld, v, &opts) {
        return Ok(());
    }
    if first_linear(bld, &-v, &opts) {
        return bld.negate();
    }
    Err(r.gap("no family"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> GroupSpec {
        name.parse().unwrap()
    }

    fn ids(w: &Witness) -> Vec<&str> {
        w.provenance.iter().map(|s| s.id.as_str()).collect()
    }

    #[test]
    fn documented_examples() {
        let w = achieve(&g("Z2^3"), &b(17)).unwrap();
        assert_eq!(ids(&w), ["Z2^3.8m+1"]);
        let c: Vec<i64> = w.coeffs.to_i64s().unwrap();
        assert_eq!(c, [3, 2, 2, 2, 2, 2, 2, 2]);

        let w = achieve(&g("Q8"), &b(45)).unwrap();
        assert_eq!(ids(&w), ["Q8.(8m-3)p^2"]);
        assert_eq!(w.provenance[0].params["m"], "1");

        let w = achieve(&g("Q12"), &b(160)).unwrap();
        assert_eq!(ids(&w), ["Q12.2^5p"]);
        assert_eq!((w.provenance[0].params["A"].as_str(), w.provenance[0].params["B"].as_str()), ("0", "0"));

        for name in ["Z1", "Q8", "A4", "Z12"] {
            let w = achieve(&g(name), &b(0)).unwrap();
            assert!(w.coeffs.entries().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rejections_and_products() {
        assert!(matches!(achieve(&g("Z2^3"), &b(3)), Err(Error::NotInSet { .. })));
        assert!(matches!(achieve(&g("Z15"), &b(1)), Err(Error::UnsupportedGroup(_))));
        for (name, v) in [("Z6xZ2", 245), ("Z12", -9 * 13), ("Q12", -32 * 25), ("A4", -16 * 27 * 5)] {
            let w = achieve(&g(name), &b(v)).unwrap_or_else(|e| panic!("{name} {v}: {e}"));
            assert_eq!(w.value, b(v));
            assert_eq!(w.provenance_product(), Some(b(v)));
            assert!(w.verify().unwrap());
        }
    }

    #[test]
    fn two_sevens_type_two() {
        let w = achieve(&g("Z6xZ2"), &b(5 * 7 * 19)).unwrap();
        assert_eq!(ids(&w), ["Z6xZ2.(5+12m)k"]);
    }

    #[test]
    fn sign_fixes() {
        let w = achieve(&g("Z3xZ3"), &b(729 * 2)).unwrap();
        assert_eq!(ids(&w).last(), Some(&"negate"));
        let w = achieve(&g("Z12"), &b(-1)).unwrap();
        assert_eq!(ids(&w).last(), Some(&"Z12.-1"));
    }
}
