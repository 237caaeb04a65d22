//! Membership predicates for the value sets `S(G)`, with certificates.
//!
//! Every set is a finite union of displayed families
//! `scale * (c*m + d) * k`, decided from the 2- and 3-adic valuations, residues
//! of the cofactor and, where a family carries a prime, the factorization of
//! the part of `v` coprime to 6.

use std::cell::OnceCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::numberkit::{
    factorize_with_bound, p12_class, residue, split_valuation, Factorization, P12Class,
    DEFAULT_BOUND_BITS,
};

mod catalog;

pub use catalog::{set_catalog, CatalogEntry};

/// Largest `bound` accepted by [`set_window`].
pub const WINDOW_LIMIT: u64 = 1_000_000;

/// Outcome of a membership query.
///
/// For a positive verdict the parameters `scale`, `m_coeff`, `m_offset`, `m`
/// and `k` satisfy `value = scale * (m_coeff * m + m_offset) * k`, and when
/// `coprime_to` is present the bracket is coprime to it. The remaining entries
/// (valuations, witnessing primes and their classes) are informational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCertificate {
    pub verdict: bool,
    pub branch: String,
    pub params: BTreeMap<String, String>,
    pub undecidable: bool,
}

impl MembershipCertificate {
    fn no(c: &Ctx) -> Self {
        let mut params = BTreeMap::new();
        params.insert("nu2".into(), c.nu2.to_string());
        params.insert("nu3".into(), c.nu3.to_string());
        MembershipCertificate {
            verdict: false,
            branch: "none".into(),
            params,
            undecidable: false,
        }
    }

    fn zero() -> Self {
        MembershipCertificate {
            verdict: true,
            branch: "zero-vector".into(),
            params: BTreeMap::new(),
            undecidable: false,
        }
    }

    /// The certificate reported when factorization hit its cap.
    pub fn undecidable(v: &BigInt) -> Self {
        let mut params = BTreeMap::new();
        params.insert("value".into(), v.to_string());
        MembershipCertificate {
            verdict: false,
            branch: "undecidable".into(),
            params,
            undecidable: true,
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    fn int(&self, key: &str) -> Option<BigInt> {
        self.params.get(key)?.parse().ok()
    }

    /// `scale * (m_coeff * m + m_offset) * k`, or 0 for the zero branch.
    pub fn reconstruct(&self) -> Option<BigInt> {
        if self.branch == "zero-vector" {
            return Some(BigInt::zero());
        }
        let bracket = self.int("m_coeff")? * self.int("m")? + self.int("m_offset")?;
        Some(self.int("scale")? * bracket * self.int("k")?)
    }

    /// Re-verifies a positive certificate by substitution.
    pub fn check(&self, v: &BigInt) -> bool {
        if !self.verdict || self.reconstruct().as_ref() != Some(v) {
            return false;
        }
        match (self.int("coprime_to"), self.int("m_coeff"), self.int("m"), self.int("m_offset")) {
            (Some(t), Some(c), Some(m), Some(d)) => (c * m + d).gcd(&t).is_one(),
            (None, ..) => true,
            _ => false,
        }
    }
}

/// Lazily computed arithmetic data of a nonzero query value.
struct Ctx {
    v: BigInt,
    nu2: u32,
    nu3: u32,
    /// `v / (2^nu2 3^nu3)`, sign kept.
    rest: BigInt,
    bound_bits: u32,
    fac: OnceCell<Result<Factorization>>,
}

impl Ctx {
    fn new(v: &BigInt, bound_bits: u32) -> Self {
        let (nu2, odd) = split_valuation(v, 2);
        let (nu3, rest) = split_valuation(&odd, 3);
        Ctx {
            v: v.clone(),
            nu2,
            nu3,
            rest,
            bound_bits,
            fac: OnceCell::new(),
        }
    }

    fn odd(&self) -> BigInt {
        &self.v >> self.nu2
    }

    fn res(&self, m: u32) -> u32 {
        residue(&self.v, m)
    }

    /// Prime powers of the part of `v` coprime to 6.
    fn primes(&self) -> Result<Vec<(u128, u32)>> {
        let fac = self
            .fac
            .get_or_init(|| factorize_with_bound(&self.rest, self.bound_bits));
        match fac {
            Ok(f) => Ok(f.prime_powers.clone()),
            Err(Error::TooLarge(_)) => Err(Error::UndecidableAtScale(self.v.to_string())),
            Err(e) => Err(e.clone()),
        }
    }

    /// First prime of the coprime-to-6 part passing `accept`.
    fn find_prime(&self, accept: impl Fn(u128, u32) -> bool) -> Result<Option<u128>> {
        for (p, e) in self.primes()? {
            if accept(p, e) {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// `v = scale * (coeff*m + offset) * k`; the caller guarantees exactness.
    fn form(
        &self,
        branch: &str,
        scale: &BigInt,
        coeff: i64,
        offset: i64,
        k: &BigInt,
        coprime_to: Option<u64>,
    ) -> MembershipCertificate {
        let (bracket, r) = self.v.div_rem(&(scale * k));
        assert!(r.is_zero(), "{branch}: {scale}*{k} does not divide {}", self.v);
        let (m, r) = (bracket - offset).div_rem(&BigInt::from(coeff));
        assert!(r.is_zero(), "{branch}: bad residue for {}", self.v);
        let mut cert = MembershipCertificate {
            verdict: true,
            branch: branch.into(),
            params: BTreeMap::new(),
            undecidable: false,
        }
        .with("nu2", self.nu2)
        .with("nu3", self.nu3)
        .with("scale", scale)
        .with("m_coeff", coeff)
        .with("m_offset", offset)
        .with("m", m)
        .with("k", k);
        if let Some(t) = coprime_to {
            cert = cert.with("coprime_to", t);
        }
        cert
    }

    /// `v = 2^nu2 3^nu3 * m_6` style families, valuations only.
    fn powers(&self, branch: &str, coprime_to: u64) -> MembershipCertificate {
        let scale = (BigInt::one() << self.nu2) * num_traits::pow(BigInt::from(3), self.nu3 as usize);
        self.form(branch, &scale, 1, 0, &BigInt::one(), Some(coprime_to))
    }
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn pow3(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

fn int(v: u128) -> BigInt {
    BigInt::from(v)
}

fn one() -> BigInt {
    BigInt::one()
}

/// Decides `v in S(G)` with the default factorization cap.
pub fn member(spec: &GroupSpec, v: &BigInt) -> Result<MembershipCertificate> {
    member_with_bound(spec, v, DEFAULT_BOUND_BITS)
}

/// As [`member`], factoring at most `bound_bits`-bit cofactors.
pub fn member_with_bound(
    spec: &GroupSpec,
    v: &BigInt,
    bound_bits: u32,
) -> Result<MembershipCertificate> {
    let pred = predicate(spec)?;
    if v.is_zero() {
        return Ok(MembershipCertificate::zero());
    }
    let c = Ctx::new(v, bound_bits);
    Ok(pred(&c)?.unwrap_or_else(|| MembershipCertificate::no(&c)))
}

type Predicate = fn(&Ctx) -> Result<Option<MembershipCertificate>>;

fn predicate(spec: &GroupSpec) -> Result<Predicate> {
    let name = spec.name();
    let pred: Predicate = match name.as_str() {
        "Z1" => |c| Ok(Some(c.form("all", &one(), 1, 0, &one(), None))),
        "Z2" => |c| Ok(prime_power(c, 2, |a| a != 1)),
        "Z3" => |c| Ok(prime_power(c, 3, |a| a != 1)),
        "Z5" => |c| Ok(prime_power(c, 5, |a| a != 1)),
        "Z7" => |c| Ok(prime_power(c, 7, |a| a != 1)),
        "Z11" => |c| Ok(prime_power(c, 11, |a| a != 1)),
        "Z13" => |c| Ok(prime_power(c, 13, |a| a != 1)),
        "Z4" => |c| Ok(prime_power(c, 2, |a| a == 0 || a >= 4)),
        "Z8" => |c| Ok(prime_power(c, 2, |a| a == 0 || a >= 5)),
        "Z9" => |c| Ok(prime_power(c, 3, |a| a == 0 || a >= 3)),
        "Z6" => |c| Ok(two_primes(c, 3, |a| a != 1, |b| b != 1)),
        "Z10" => |c| Ok(two_primes(c, 5, |a| a != 1, |b| b != 1)),
        "Z14" => |c| Ok(two_primes(c, 7, |a| a != 1, |b| b != 1)),
        "D6" => |c| Ok(two_primes(c, 3, |a| a != 1, |b| b == 0 || b >= 3)),
        "D10" => |c| Ok(two_primes(c, 5, |a| a != 1, |b| b == 0 || b >= 3)),
        "D14" => |c| Ok(two_primes(c, 7, |a| a != 1, |b| b == 0 || b >= 3)),
        "D18" => |c| Ok(two_primes(c, 3, |a| a != 1, |b| b == 0 || b >= 5)),
        "Z2xZ2" | "D4" => |c| Ok(z2_z2(c)),
        "D8" => |c| Ok(linear_or_power(c, 4, 8)),
        "D16" => |c| Ok(linear_or_power(c, 4, 10)),
        "Z4xZ2" => |c| Ok(linear_or_power(c, 8, 8)),
        "Q8" => q8,
        "Z2^3" => |c| Ok(z2_cubed(c)),
        "D12" => |c| Ok(d12(c)),
        "A4" => |c| Ok(a4(c)),
        "Q12" => q12,
        "Z6xZ2" => z6_z2,
        "Z12" => z12,
        "Z3xZ3" => |c| Ok(z3_z3(c)),
        _ => return Err(Error::UnsupportedGroup(name)),
    };
    Ok(pred)
}

/// `p^a m_p` with `allowed(a)`.
fn prime_power(c: &Ctx, p: u32, allowed: fn(u32) -> bool) -> Option<MembershipCertificate> {
    let (a, _) = split_valuation(&c.v, p);
    if !allowed(a) {
        return None;
    }
    let branch = if a == 0 { "coprime".to_string() } else { format!("{p}^a.m{p}") };
    let scale = num_traits::pow(BigInt::from(p), a as usize);
    Some(c.form(&branch, &scale, 1, 0, &one(), Some(p as u64)))
}

/// `2^a p^b m_{2p}` with `a` and `b` allowed.
fn two_primes(
    c: &Ctx,
    p: u32,
    allowed2: fn(u32) -> bool,
    allowed_p: fn(u32) -> bool,
) -> Option<MembershipCertificate> {
    let (b, _) = split_valuation(&c.v, p);
    if !allowed2(c.nu2) || !allowed_p(b) {
        return None;
    }
    let branch = match (c.nu2, b) {
        (0, 0) => "coprime".to_string(),
        (_, 0) => "2^a.m".to_string(),
        (0, _) => format!("{p}^b.m"),
        _ => format!("2^a{p}^b.m"),
    };
    let scale = pow2(c.nu2) * num_traits::pow(BigInt::from(p), b as usize);
    Some(c.form(&branch, &scale, 1, 0, &one(), Some(2 * p as u64)))
}

/// `{4m+1, 2^4(2m+1), 2^6 m}`.
fn z2_z2(c: &Ctx) -> Option<MembershipCertificate> {
    match c.nu2 {
        0 if c.res(4) == 1 => Some(c.form("4m+1", &one(), 4, 1, &one(), None)),
        4 => Some(c.form("2^4(2m+1)", &pow2(4), 2, 1, &one(), None)),
        a if a >= 6 => Some(c.form("2^6m", &pow2(6), 1, 0, &one(), None)),
        _ => None,
    }
}

/// `{l*m + 1, 2^e m}`.
fn linear_or_power(c: &Ctx, l: u32, e: u32) -> Option<MembershipCertificate> {
    if c.res(l) == 1 {
        Some(c.form(&format!("{l}m+1"), &one(), l as i64, 1, &one(), None))
    } else if c.nu2 >= e {
        Some(c.form(&format!("2^{e}m"), &pow2(e), 1, 0, &one(), None))
    } else {
        None
    }
}

fn q8(c: &Ctx) -> Result<Option<MembershipCertificate>> {
    if let Some(cert) = linear_or_power(c, 8, 8) {
        return Ok(Some(cert));
    }
    if c.res(8) != 5 {
        return Ok(None);
    }
    // p = 3 divides v only through nu3
    let p = if c.nu3 >= 2 {
        Some(3)
    } else {
        c.find_prime(|p, e| p % 4 == 3 && e >= 2)?
    };
    Ok(p.map(|p| {
        c.form("(8m-3)p^2", &one(), 8, -3, &(int(p) * int(p)), None)
            .with("p", p)
            .with("p_class", "3 mod 4")
    }))
}

/// `{8m+1, 2^8(4m+1), 2^12 m}`.
fn z2_cubed(c: &Ctx) -> Option<MembershipCertificate> {
    if c.res(8) == 1 {
        return Some(c.form("8m+1", &one(), 8, 1, &one(), None));
    }
    match c.nu2 {
        8 if residue(&c.odd(), 4) == 1 => Some(c.form("2^8(4m+1)", &pow2(8), 4, 1, &one(), None)),
        a if a >= 12 => Some(c.form("2^12m", &pow2(12), 1, 0, &one(), None)),
        _ => None,
    }
}

fn d12(c: &Ctx) -> Option<MembershipCertificate> {
    if c.nu2 == 0 {
        if c.res(4) == 1 && c.nu3 != 1 && c.nu3 != 2 {
            return Some(c.form("odd.4m+1", &one(), 4, 1, &one(), None));
        }
        return None;
    }
    let a_ok = c.nu2 == 4 || c.nu2 >= 6;
    let b_ok = c.nu3 == 0 || c.nu3 >= 3;
    (a_ok && b_ok).then(|| c.powers("even.2^a3^b.m6", 6))
}

fn a4(c: &Ctx) -> Option<MembershipCertificate> {
    if c.nu2 == 0 {
        if c.res(4) == 1 && c.nu3 != 1 {
            return Some(c.form("odd.4m+1", &one(), 4, 1, &one(), None));
        }
        return None;
    }
    let a_ok = c.nu2 == 4 || c.nu2 >= 8;
    (a_ok && c.nu3 != 1).then(|| c.powers("even.2^a3^b.m6", 6))
}

fn q12(c: &Ctx) -> Result<Option<MembershipCertificate>> {
    let (a, b) = (c.nu2, c.nu3);
    let b_ok = b == 0 || b >= 3;
    if (a == 0 || a == 4 || a >= 6) && b_ok {
        return Ok(Some(c.powers("2^a3^b.m6", 6)));
    }
    if a != 5 {
        return Ok(None);
    }
    if b == 4 || b >= 6 {
        return Ok(Some(c.powers("2^5.3^b.m6", 6)));
    }
    if !(b == 0 || b == 3 || b == 5) {
        return Ok(None);
    }
    let scale = pow2(5) * pow3(b);
    if let Some(p) = c.find_prime(|p, _| p % 12 == 5)? {
        let cert = c.form("2^5.3^b.m6.k", &scale, 1, 0, &int(p), Some(6));
        return Ok(Some(cert.with("p", p).with("p_class", "5 mod 12")));
    }
    let p = c.find_prime(|p, e| p % 6 == 5 && e >= 2)?;
    Ok(p.map(|p| {
        c.form("2^5.3^b.m6.k", &scale, 1, 0, &(int(p) * int(p)), Some(6))
            .with("p", p)
            .with("p_class", "5 mod 6, squared")
    }))
}

fn is_p1(p: u128) -> bool {
    p12_class(p) == Some(P12Class::P1)
}

/// Divisor `k` of the type-2 families: `p in P1`, `p^2` with `p = 5 mod 12`,
/// or `p1 p2` with both `= 7 mod 12` (possibly equal).
fn type2_k(c: &Ctx) -> Result<Option<(BigInt, String)>> {
    if let Some(p) = c.find_prime(|p, _| is_p1(p))? {
        return Ok(Some((int(p), format!("p={p} in P1"))));
    }
    if let Some(p) = c.find_prime(|p, e| p % 12 == 5 && e >= 2)? {
        return Ok(Some((int(p) * int(p), format!("p^2, p={p} = 5 mod 12"))));
    }
    let sevens: Vec<(u128, u32)> = c.primes()?.into_iter().filter(|&(p, _)| p % 12 == 7).collect();
    let pair = match sevens.as_slice() {
        [(p, e), ..] if *e >= 2 => Some((*p, *p)),
        [(p1, _), (p2, _), ..] => Some((*p1, *p2)),
        _ => None,
    };
    Ok(pair.map(|(p1, p2)| (int(p1) * int(p2), format!("p1 p2, p1={p1}, p2={p2} = 7 mod 12"))))
}

fn z6_z2(c: &Ctx) -> Result<Option<MembershipCertificate>> {
    let (a, b) = (c.nu2, c.nu3);
    let one = one();
    // (a) 27 | v
    if b >= 3 {
        let s = pow3(3);
        let u = &c.v / &s;
        return Ok(match a {
            0 if residue(&u, 4) == 3 => Some(c.form("a.27(4m-1)", &s, 4, -1, &one, None)),
            4 => Some(c.form("a.2^4.27(2m-1)", &(pow2(4) * &s), 2, -1, &one, None)),
            a if a >= 6 => Some(c.form("a.2^6.27m", &(pow2(6) * &s), 1, 0, &one, None)),
            _ => None,
        });
    }
    // (b) 9 || v
    if b == 2 {
        let nine = pow3(2);
        let w = &c.v / &nine;
        let with_p = match a {
            0 => residue(&w, 4) == 1,
            4 => true,
            a => a >= 6,
        };
        if with_p {
            if let Some(p) = c.find_prime(|p, _| p % 12 == 7)? {
                let (branch, scale, coeff, offset) = match a {
                    0 => ("b.9(4m-1)p", nine.clone(), 4, -1),
                    4 => ("b.2^4.9(2m-1)p", pow2(4) * &nine, 2, -1),
                    _ => ("b.2^6.9mp", pow2(6) * &nine, 1, 0),
                };
                let cert = c.form(branch, &scale, coeff, offset, &int(p), None);
                return Ok(Some(cert.with("p", p).with("p_class", "7 mod 12")));
            }
        }
        return Ok(match a {
            8 | 10 if residue(&(&w >> a), 4) == 3 => {
                let branch = format!("b.2^{a}.9(4m-1)");
                Some(c.form(&branch, &(pow2(a) * &nine), 4, -1, &one, None))
            }
            12 => Some(c.form("b.2^12.9(2m-1)", &(pow2(12) * &nine), 2, -1, &one, None)),
            a if a >= 14 => Some(c.form("b.2^14.9m", &(pow2(14) * &nine), 1, 0, &one, None)),
            _ => None,
        });
    }
    if b == 1 {
        return Ok(None);
    }
    // (c) 3 does not divide v
    let odd = c.odd();
    let basic = match a {
        0 if c.res(12) == 1 => Some(c.form("c.12m+1", &one, 12, 1, &one, None)),
        4 if residue(&odd, 3) == 1 => Some(c.form("c.2^4(6m+1)", &pow2(4), 6, 1, &one, None)),
        a if a >= 6 && residue(&(&c.v >> 6), 3) == 1 => {
            Some(c.form("c.2^6(3m+1)", &pow2(6), 3, 1, &one, None))
        }
        _ => None,
    };
    if basic.is_some() {
        return Ok(basic);
    }
    let type2_shape = match a {
        0 => c.res(12) == 5,
        4 => residue(&odd, 3) == 2,
        a => a >= 6 && residue(&(&c.v >> 6), 3) == 2,
    };
    if type2_shape {
        if let Some((k, desc)) = type2_k(c)? {
            let (branch, scale, coeff, offset) = match a {
                0 => ("c.(12m+5)k", one.clone(), 12, 5),
                4 => ("c.-2^4(6m+1)k", -pow2(4), 6, 1),
                _ => ("c.-2^6(3m+1)k", -pow2(6), 3, 1),
            };
            return Ok(Some(c.form(branch, &scale, coeff, offset, &k, None).with("k_kind", desc)));
        }
    }
    Ok(match a {
        8 | 10 => match residue(&odd, 12) {
            5 => Some(c.form(&format!("c.2^{a}(12m+5)"), &pow2(a), 12, 5, &one, None)),
            11 => c.find_prime(|p, _| p % 12 == 7)?.map(|p| {
                c.form(&format!("c.2^{a}(12m+5)p"), &pow2(a), 12, 5, &int(p), None)
                    .with("p", p)
                    .with("p_class", "7 mod 12")
            }),
            _ => None,
        },
        12 if residue(&odd, 6) == 5 => Some(c.form("c.-2^12(6m+1)", &-pow2(12), 6, 1, &one, None)),
        a if a >= 14 && residue(&(&c.v >> 14), 3) == 2 => {
            Some(c.form("c.-2^14(3m+1)", &-pow2(14), 3, 1, &one, None))
        }
        _ => None,
    })
}

/// Primes allowed alongside `9 m_6` and `2^5 m_6` for `Z12`.
fn z12_prime(p: u128) -> Option<&'static str> {
    match p % 12 {
        5 => Some("5 mod 12"),
        7 => Some("7 mod 12"),
        1 if is_p1(p) => Some("P1"),
        _ => None,
    }
}

fn z12(c: &Ctx) -> Result<Option<MembershipCertificate>> {
    let (a, b) = (c.nu2, c.nu3);
    let one = one();
    let with_prime = |branch: &str, scale: BigInt| -> Result<Option<MembershipCertificate>> {
        for (p, _) in c.primes()? {
            if let Some(class) = z12_prime(p) {
                let cert = c.form(branch, &scale, 1, 0, &int(p), Some(6));
                return Ok(Some(cert.with("p", p).with("p_class", class)));
            }
        }
        Ok(None)
    };
    if a == 0 {
        return match b {
            0 => Ok(Some(c.form("odd.m6", &one, 1, 0, &one, Some(6)))),
            1 => Ok(None),
            2 => with_prime("odd.9m6p", pow3(2)),
            _ => Ok(Some(c.form("odd.27m2", &pow3(3), 1, 0, &one, Some(2)))),
        };
    }
    if b > 0 {
        let ok = a >= 4 && b >= 2;
        return Ok(ok.then(|| c.form("even.144m", &int(144), 1, 0, &one, None)));
    }
    match a {
        4 => Ok(Some(c.form("even.2^4m6", &pow2(4), 1, 0, &one, Some(6)))),
        5 => with_prime("even.2^5m6p", pow2(5)),
        a if a >= 6 => Ok(Some(c.form("even.2^6m3", &pow2(6), 1, 0, &one, Some(3)))),
        _ => Ok(None),
    }
}

/// `{9m +- 1, 3^6 m}`.
fn z3_z3(c: &Ctx) -> Option<MembershipCertificate> {
    match c.res(9) {
        1 => Some(c.form("9m+1", &one(), 9, 1, &one(), None)),
        8 => Some(c.form("9m-1", &one(), 9, -1, &one(), None)),
        _ if c.nu3 >= 6 => Some(c.form("3^6m", &pow3(6), 1, 0, &one(), None)),
        _ => None,
    }
}

/// `S(G)` intersected with `[-bound, bound]`, ascending.
pub fn set_window(spec: &GroupSpec, bound: u64) -> Result<Vec<i64>> {
    if bound > WINDOW_LIMIT {
        return Err(Error::Precondition(format!("window bound {bound} exceeds {WINDOW_LIMIT}")));
    }
    let pred = predicate(spec)?;
    let b = bound as i64;
    let mut out = Vec::new();
    for v in -b..=b {
        let keep = v == 0 || pred(&Ctx::new(&BigInt::from(v), DEFAULT_BOUND_BITS))?.is_some();
        if keep {
            out.push(v);
        }
    }
    Ok(out)
}

/// Smallest `|s| >= 2` with `s` or `-s` in `S(G)`.
pub fn lambda_from_classifier(spec: &GroupSpec) -> Result<u64> {
    let pred = predicate(spec)?;
    for s in 2u64.. {
        for v in [BigInt::from(s), -BigInt::from(s)] {
            if pred(&Ctx::new(&v, DEFAULT_BOUND_BITS))?.is_some() {
                return Ok(s);
            }
        }
    }
    unreachable!("every catalogued set contains a power of its group order")
}

/// Whether `member` has a predicate for the group.
pub fn has_predicate(spec: &GroupSpec) -> bool {
    predicate(spec).is_ok()
}

/// Exact value of a certificate parameter, if present and integral.
pub fn param_u64(cert: &MembershipCertificate, key: &str) -> Option<u64> {
    cert.params.get(key)?.parse::<BigInt>().ok()?.abs().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> GroupSpec {
        name.parse().unwrap()
    }

    fn m(name: &str, v: i64) -> MembershipCertificate {
        let cert = member(&g(name), &BigInt::from(v)).unwrap();
        if cert.verdict {
            assert!(cert.check(&BigInt::from(v)), "{name} {v} {cert:?}");
        }
        cert
    }

    #[test]
    fn documented_examples() {
        let c = m("Z5", 7);
        assert!(c.verdict);
        assert_eq!(c.branch, "coprime");
        assert!(!m("Z5", 10).verdict);
        let c = m("Q8", 45);
        assert!(c.verdict);
        assert_eq!(c.branch, "(8m-3)p^2");
        assert_eq!(c.params["p"], "3");
        assert_eq!(c.params["m"], "1");
        assert!(!m("Z2^3", 7).verdict);
        assert!(m("Z2^3", -7).verdict);
        assert!(!m("Z12", 15).verdict);
        let c = m("Z3xZ3", 8);
        assert_eq!((c.verdict, c.branch.as_str()), (true, "9m-1"));
        assert_eq!(c.params["m"], "1");
    }

    #[test]
    fn zero_is_always_a_member() {
        for spec in GroupSpec::supported().iter().filter(|s| has_predicate(s)) {
            let c = member(spec, &BigInt::zero()).unwrap();
            assert_eq!(c.branch, "zero-vector");
            assert!(c.check(&BigInt::zero()));
        }
        assert!(matches!(
            member(&g("Z16"), &BigInt::one()),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn lambda_values() {
        for (name, l) in [("Q8", 7), ("Z12", 5), ("Z6xZ2", 11), ("Z8", 3), ("A4", 5), ("Z3xZ3", 8)] {
            assert_eq!(lambda_from_classifier(&g(name)).unwrap(), l, "{name}");
        }
    }

    #[test]
    fn windows() {
        let w = set_window(&g("Z3xZ3"), 20).unwrap();
        assert_eq!(w, vec![-19, -17, -10, -8, -1, 0, 1, 8, 10, 17, 19]);
        let d8 = set_window(&g("D8"), 20).unwrap();
        let expect: Vec<i64> = (-20..=20).filter(|v: &i64| v.rem_euclid(4) == 1 || *v == 0).collect();
        assert_eq!(d8, expect);
        assert_eq!(set_window(&g("A4"), 0).unwrap(), vec![0]);
        assert!(set_window(&g("A4"), WINDOW_LIMIT + 1).is_err());
    }

    #[test]
    fn prime_bearing_branches() {
        // 2^5 * 5
        assert_eq!(m("Q12", 160).branch, "2^5.3^b.m6.k");
        // 2^5 * 11^2, p = 11 = 5 mod 6
        assert!(m("Q12", 32 * 121).verdict);
        assert!(!m("Q12", 32 * 11).verdict);
        // 13 = 4 + 9 and 73 = 64 + 9 are in P1, 37 = 36 + 1 is in P2
        assert!(!m("Z6xZ2", 5 * 37).verdict);
        assert_eq!(m("Z6xZ2", 5 * 13).params["k"], "13");
        assert_eq!(m("Z6xZ2", 5 * 73).params["k"], "73");
        assert_eq!(m("Z6xZ2", 5 * 25).params["k"], "25");
        assert_eq!(m("Z6xZ2", 5 * 49).params["k"], "49");
        assert!(!m("Z6xZ2", 9 * 7).verdict);
        assert_eq!(m("Z6xZ2", -9 * 7).branch, "b.9(4m-1)p");
        assert!(m("Z12", 9 * 73).verdict);
        assert!(!m("Z12", 9 * 37).verdict);
        assert_eq!(m("Z12", 32 * 7).branch, "even.2^5m6p");
    }

    #[test]
    fn undecidable_at_cap() {
        // product of two primes near 2^40 with a 5 mod 8 shape for Q8
        let p = BigInt::from(1_099_511_627_791u64);
        let v = &p * &p * 5;
        assert_eq!(residue(&v, 8), 5);
        assert!(matches!(member_with_bound(&g("Q8"), &v, 40), Err(Error::UndecidableAtScale(_))));
        let c = member(&g("Q8"), &v).unwrap();
        assert_eq!(c.params["p"], p.to_string());
        // no factorization needed for valuation-only sets
        assert!(member_with_bound(&g("Z3"), &v, 8).unwrap().verdict);
    }

    #[test]
    fn purity() {
        for v in [-300i64, -45, 45, 160, 365] {
            for name in ["Q8", "Q12", "Z6xZ2", "Z12"] {
                assert_eq!(m(name, v), m(name, v));
            }
        }
    }
}
