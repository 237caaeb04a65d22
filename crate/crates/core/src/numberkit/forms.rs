//! Bounded searches for quadratic and quartic norm-form representations.
//!
//! Every search walks integer tuples in shells of increasing max-norm, so the
//! first hit is small and the result is deterministic.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::eisenstein::{EisensteinGaussian, EisensteinInt};
use crate::error::{Error, Result};
use crate::numberkit::factor::{is_prime, is_prime_u128};

type E = EisensteinInt<i128>;

/// Integer tuples ordered by max-norm shell. Within a shell the first
/// coordinate reaching the shell radius varies slowest; each coordinate runs
/// `0, -1, 1, -2, 2, ...`.
pub fn shells<const K: usize>(bound: i64) -> impl Iterator<Item = [i64; K]> {
    (0..=bound).flat_map(shell::<K>)
}

fn zigzag(i: i64) -> i64 {
    if i % 2 == 1 {
        -(i + 1) / 2
    } else {
        i / 2
    }
}

fn shell<const K: usize>(r: i64) -> Vec<[i64; K]> {
    if r == 0 {
        return vec![[0; K]];
    }
    let mut out = Vec::new();
    for lead in 0..K {
        // coordinates before `lead` stay strictly inside the shell
        let radix: Vec<i64> = (0..K)
            .map(|j| match j.cmp(&lead) {
                std::cmp::Ordering::Less => 2 * r - 1,
                std::cmp::Ordering::Equal => 2,
                std::cmp::Ordering::Greater => 2 * r + 1,
            })
            .collect();
        let total: i64 = radix.iter().product();
        for mut idx in 0..total {
            let mut t = [0i64; K];
            for j in 0..K {
                let d = idx % radix[j];
                idx /= radix[j];
                t[j] = if j == lead {
                    if d == 0 {
                        -r
                    } else {
                        r
                    }
                } else {
                    zigzag(d)
                };
            }
            out.push(t);
        }
    }
    out
}

/// `ceil(sqrt(n)) + 2`, the per-coordinate search bound.
pub fn search_bound(n: u64) -> i64 {
    let mut s = (n as f64).sqrt() as i64;
    while (s as u64) * (s as u64) < n {
        s += 1;
    }
    while s > 0 && ((s - 1) as u64) * ((s - 1) as u64) >= n {
        s -= 1;
    }
    s + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum P12Class {
    P1,
    P2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeClass {
    pub p: u64,
    /// `p mod 12`, or `p` itself for 2 and 3.
    pub residue_mod_12: u8,
    /// Set exactly when `p = 1 mod 12`.
    pub class: Option<P12Class>,
    /// `(even, odd)` with `p = even^2 + odd^2`, both positive.
    pub representation: Option<(u64, u64)>,
}

pub fn classify_prime(p: u64) -> Result<PrimeClass> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let residue = if p < 5 { p as u8 } else { (p % 12) as u8 };
    if residue != 1 {
        return Ok(PrimeClass {
            p,
            residue_mod_12: residue,
            class: None,
            representation: None,
        });
    }
    let (e, o) = two_squares(p as u128).ok_or(Error::NoSolution {
        form: "two squares",
        target: p.to_string(),
    })?;
    Ok(PrimeClass {
        p,
        residue_mod_12: 1,
        class: Some(class_of_odd(o)),
        representation: Some((e as u64, o as u64)),
    })
}

fn class_of_odd(o: u128) -> P12Class {
    if o.is_multiple_of(3) {
        P12Class::P1
    } else {
        P12Class::P2
    }
}

/// The class of a prime `p = 1 mod 12` of any size below `2^126`; `None` for
/// other residues.
pub fn p12_class(p: u128) -> Option<P12Class> {
    if p % 12 != 1 || !is_prime_u128(p) {
        return None;
    }
    two_squares(p).map(|(_, o)| class_of_odd(o))
}

/// `(even, odd)` with `p = even^2 + odd^2` for a prime `p = 1 mod 4`, by the
/// Hermite-Serret descent from a square root of -1.
fn two_squares(p: u128) -> Option<(u128, u128)> {
    let pb = BigInt::from(p);
    let quarter = BigInt::from((p - 1) / 4);
    let half = BigInt::from((p - 1) / 2);
    let minus_one = &pb - 1;
    let c = (2u32..).find(|&c| BigInt::from(c).modpow(&half, &pb) == minus_one)?;
    let x = BigInt::from(c).modpow(&quarter, &pb);
    let (mut a, mut b) = (pb.clone(), x);
    while &b * &b > pb {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let b = u128::try_from(&b).ok()?;
    let rest = p - b * b;
    let o = isqrt128(rest);
    if o * o != rest {
        return None;
    }
    Some(if b % 2 == 0 { (b, o) } else { (o, b) })
}

fn isqrt128(n: u128) -> u128 {
    let mut s = (n as f64).sqrt() as u128;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

fn isqrt(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

fn require(cond: bool, what: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.into()))
    }
}

/// `p = a^2 + b^2 + c^2 + d^2` with `a` even and `b >= c >= d` odd and
/// positive.
pub fn four_squares_q8(p: u64) -> Result<(i64, i64, i64, i64)> {
    require(p % 4 == 3, format!("{p} is not 3 mod 4"))?;
    let mut a = 0u64;
    while a * a < p {
        let rest = p - a * a;
        let mut b = isqrt(rest);
        if b.is_multiple_of(2) {
            b = b.saturating_sub(1);
        }
        while b >= 1 {
            let r2 = rest - b * b;
            let mut c = isqrt(r2).min(b);
            if c.is_multiple_of(2) {
                c = c.saturating_sub(1);
            }
            while c >= 1 {
                if let Some(r3) = r2.checked_sub(c * c) {
                    let d = isqrt(r3);
                    if d * d == r3 && d % 2 == 1 && d <= c {
                        return Ok((a as i64, b as i64, c as i64, d as i64));
                    }
                }
                if c < 2 {
                    break;
                }
                c -= 2;
            }
            if b < 2 {
                break;
            }
            b -= 2;
        }
        a += 2;
    }
    Err(Error::NoSolution {
        form: "four squares",
        target: p.to_string(),
    })
}

/// `2p = (1 + 6A)^2 + (3 + 6B)^2`.
pub fn two_squares_doubled(p: u64) -> Result<(i64, i64)> {
    require(p % 12 == 5, format!("{p} is not 5 mod 12"))?;
    let target = 2 * p as i128;
    shells::<2>(search_bound(p))
        .find(|[a, b]| {
            let (x, y) = (1 + 6 * *a as i128, 3 + 6 * *b as i128);
            x * x + y * y == target
        })
        .map(|[a, b]| (a, b))
        .ok_or(Error::NoSolution {
            form: "two squares doubled",
            target: p.to_string(),
        })
}

/// The displayed norm forms the constructions consume.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormForm {
    /// `N1(-1 + 2(A + Bw)(1 - w))`.
    Nf1Odd,
    /// `N1(-1 + (A + Bw)(1 - w))`.
    Nf1Coprime3,
    /// `N1(-1 + 2(1 - w)(2A + 1 + Bw))`.
    Nf7Mod12,
    /// `N1(-1 + 2(1 - w)(2A + Bw))`.
    Nf1Mod12,
    /// `N2(-1 + (2A + 2Bw)(1 - w) + i(2 + (C + 2Dw)(1 - w)))`.
    N2Form1,
    /// `N2((A + 1 + 2Bw)(1 - w) + i(1 + (C + Dw)(1 - w)))`.
    N2Form2,
    /// `((1 + 6A)^2 + (3 + 6B)^2) / 2`.
    TwoSquaresDoubled,
    /// `A^2 + B^2 + C^2 + D^2`.
    FourSquares,
    /// `N1(-1 + 2(1 - w)(A + Bw)) + 4 N1(-1 + (C + Dw)(1 - w))`.
    NormSumSplit,
}

impl NormForm {
    pub fn arity(&self) -> usize {
        match self {
            NormForm::Nf1Odd
            | NormForm::Nf1Coprime3
            | NormForm::Nf7Mod12
            | NormForm::Nf1Mod12
            | NormForm::TwoSquaresDoubled => 2,
            _ => 4,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            NormForm::Nf1Odd => "NF1_odd",
            NormForm::Nf1Coprime3 => "NF1_coprime3",
            NormForm::Nf7Mod12 => "NF_7mod12",
            NormForm::Nf1Mod12 => "NF_1mod12",
            NormForm::N2Form1 => "NF_N2_form1",
            NormForm::N2Form2 => "NF_N2_form2",
            NormForm::TwoSquaresDoubled => "TwoSquaresDoubled",
            NormForm::FourSquares => "FourSquares",
            NormForm::NormSumSplit => "NormSumSplit",
        }
    }

    /// The Eisenstein (or biquadratic) element of the display, where the
    /// form is a norm of one.
    pub fn alpha(&self, p: &[i64]) -> Option<EisensteinGaussian<i128>> {
        let e = |a: i128, b: i128| E::new(a, b);
        let one_minus_w = e(1, -1);
        let q = |k: usize| p[k] as i128;
        let plain = |x: E| EisensteinGaussian::new(x, E::new(0, 0));
        match self {
            NormForm::Nf1Odd => Some(plain(
                e(-1, 0) + e(2 * q(0), 2 * q(1)) * one_minus_w,
            )),
            NormForm::Nf1Coprime3 => Some(plain(e(-1, 0) + e(q(0), q(1)) * one_minus_w)),
            NormForm::Nf7Mod12 => Some(plain(
                e(-1, 0) + e(2, -2) * e(2 * q(0) + 1, q(1)),
            )),
            NormForm::Nf1Mod12 => Some(plain(e(-1, 0) + e(2, -2) * e(2 * q(0), q(1)))),
            NormForm::N2Form1 => Some(EisensteinGaussian::new(
                e(-1, 0) + e(2 * q(0), 2 * q(1)) * one_minus_w,
                e(2, 0) + e(q(2), 2 * q(3)) * one_minus_w,
            )),
            NormForm::N2Form2 => Some(EisensteinGaussian::new(
                e(q(0) + 1, 2 * q(1)) * one_minus_w,
                e(1, 0) + e(q(2), q(3)) * one_minus_w,
            )),
            _ => None,
        }
    }

    /// The integer the display evaluates to.
    pub fn evaluate(&self, p: &[i64]) -> i128 {
        assert_eq!(p.len(), self.arity(), "{} takes {} parameters", self.name(), self.arity());
        let q = |k: usize| p[k] as i128;
        match self {
            NormForm::TwoSquaresDoubled => {
                let (x, y) = (1 + 6 * q(0), 3 + 6 * q(1));
                (x * x + y * y) / 2
            }
            NormForm::FourSquares => (0..4).map(|k| q(k) * q(k)).sum(),
            NormForm::NormSumSplit => {
                let a = E::new(-1, 0) + E::new(2, -2) * E::new(q(0), q(1));
                let b = E::new(-1, 0) + E::new(q(2), q(3)) * E::new(1, -1);
                a.norm() + 4 * b.norm()
            }
            NormForm::N2Form1 | NormForm::N2Form2 => {
                self.alpha(p).expect("biquadratic element").norm()
            }
            _ => self.alpha(p).expect("Eisenstein element").re.norm(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormFormSolution {
    pub form: NormForm,
    /// `(A, B, ...)` in display order.
    pub params: Vec<i64>,
    pub target: BigInt,
}

impl NormFormSolution {
    pub fn value(&self) -> BigInt {
        BigInt::from(self.form.evaluate(&self.params))
    }

    pub fn verify(&self) -> bool {
        self.value() == self.target
    }
}

fn solution(form: NormForm, params: &[i64], target: u64) -> NormFormSolution {
    NormFormSolution {
        form,
        params: params.to_vec(),
        target: BigInt::from(target),
    }
}

fn no_solution(form: NormForm, target: u64) -> Error {
    Error::NoSolution {
        form: form.name(),
        target: target.to_string(),
    }
}

/// First two-parameter solution of `form = target` satisfying `accept`.
pub fn search2(
    form: NormForm,
    target: u64,
    accept: impl Fn(&[i64; 2]) -> bool,
) -> Result<NormFormSolution> {
    shells::<2>(search_bound(target))
        .find(|t| accept(t) && form.evaluate(t) == target as i128)
        .map(|t| solution(form, &t, target))
        .ok_or_else(|| no_solution(form, target))
}

/// First four-parameter solution of `form = target` satisfying `accept`.
pub fn search4(
    form: NormForm,
    target: u64,
    bound: i64,
    accept: impl Fn(&[i64; 4]) -> bool,
) -> Result<NormFormSolution> {
    shells::<4>(bound)
        .find(|t| accept(t) && form.evaluate(t) == target as i128)
        .map(|t| solution(form, &t, target))
        .ok_or_else(|| no_solution(form, target))
}

/// `N = N1(-1 + 2(A + Bw)(1 - w))` for `gcd(N, 6) = 1`.
pub fn normform_odd(n: u64) -> Result<NormFormSolution> {
    require(n % 2 == 1 && !n.is_multiple_of(3), format!("{n} is not coprime to 6"))?;
    search2(NormForm::Nf1Odd, n, |_| true)
}

/// `p = N1(-1 + 2(1 - w)(2A + 1 + Bw))` with `B` even.
pub fn normform_7mod12(p: u64) -> Result<NormFormSolution> {
    require(p % 12 == 7, format!("{p} is not 7 mod 12"))?;
    search2(NormForm::Nf7Mod12, p, |t| t[1] % 2 == 0)
}

/// `p = N1(-1 + 2(1 - w)(2A + Bw))` with `B` odd for `P1` and even for `P2`.
pub fn normform_1mod12(p: u64, class: P12Class) -> Result<NormFormSolution> {
    let actual = classify_prime(p)?.class;
    require(actual == Some(class), format!("{p} is not in class {class:?}"))?;
    let want_odd = class == P12Class::P1;
    search2(NormForm::Nf1Mod12, p, |t| (t[1].rem_euclid(2) == 1) == want_odd)
}

/// Both biquadratic norm forms for `p = 1 mod 12`, with the class-dependent
/// parity conditions.
pub fn n2_form_solutions(p: u64) -> Result<(NormFormSolution, NormFormSolution)> {
    let class = classify_prime(p)?
        .class
        .ok_or_else(|| Error::Precondition(format!("{p} is not 1 mod 12")))?;
    let even = |x: i64| x.rem_euclid(2) == 0;
    let bound = search_bound(p);
    let first = search4(NormForm::N2Form1, p, bound, |t| even(t[2]) == (class == P12Class::P1))?;
    let second = search4(NormForm::N2Form2, p, bound, |t| {
        let want = class == P12Class::P1;
        even(t[0]) == want && even(t[2]) == want && even(t[3]) == want
    })?;
    Ok((first, second))
}

/// `p = N1(alpha) + 4 N1(beta)` with `alpha = -1 + 2(1 - w)(A + Bw)` and
/// `beta = -1 + (C + Dw)(1 - w)`, returned as `(alpha, beta)`.
pub fn norm_sum_split(p: u64) -> Result<(NormFormSolution, NormFormSolution)> {
    require(p % 6 == 5, format!("{p} is not 5 mod 6"))?;
    let bound = search_bound(p);
    // smallest-shell (A, B) per alpha norm
    let mut alphas: std::collections::HashMap<i128, [i64; 2]> = std::collections::HashMap::new();
    for t in shells::<2>(bound) {
        let a = (E::new(-1, 0) + E::new(2, -2) * E::new(t[0] as i128, t[1] as i128)).norm();
        if a <= p as i128 {
            alphas.entry(a).or_insert(t);
        }
    }
    for t in shells::<2>(bound) {
        let b = (E::new(-1, 0) + E::new(t[0] as i128, t[1] as i128) * E::new(1, -1)).norm();
        let rest = p as i128 - 4 * b;
        if rest <= 0 {
            continue;
        }
        if let Some(ab) = alphas.get(&rest) {
            let alpha = NormFormSolution {
                form: NormForm::Nf1Odd,
                params: vec![ab[0], ab[1]],
                target: BigInt::from(rest),
            };
            let beta = NormFormSolution {
                form: NormForm::Nf1Coprime3,
                params: vec![t[0], t[1]],
                target: BigInt::from(b),
            };
            return Ok((alpha, beta));
        }
    }
    Err(no_solution(NormForm::NormSumSplit, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shells_cover_boxes_once() {
        let all: Vec<[i64; 3]> = shells::<3>(2).collect();
        assert_eq!(all.len(), 125);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 125);
        assert_eq!(all[0], [0, 0, 0]);
        // shells are nondecreasing in max-norm
        let norms: Vec<i64> = all.iter().map(|t| t.iter().map(|x| x.abs()).max().unwrap()).collect();
        assert!(norms.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn classify_matches_brute_force() {
        for p in crate::numberkit::primes_below(20_000).into_iter().filter(|p| p % 12 == 1) {
            let mut e = 0u64;
            let (even, odd) = loop {
                let o = ((p - e * e) as f64).sqrt().round() as u64;
                if o * o + e * e == p && o % 2 == 1 {
                    break (e, o);
                }
                e += 2;
            };
            let c = classify_prime(p).unwrap();
            assert_eq!(c.representation, Some((even, odd)));
            assert_eq!(p12_class(p as u128), c.class);
        }
        // a 1 mod 12 prime above 2^64
        let big = ((1u128 << 80) + 9..).step_by(12).find(|&q| is_prime_u128(q)).unwrap();
        assert!(p12_class(big).is_some());
    }

    #[test]
    fn classify_examples() {
        let c = |p| classify_prime(p).unwrap();
        assert_eq!(c(13).class, Some(P12Class::P1));
        assert_eq!(c(13).representation, Some((2, 3)));
        assert_eq!(c(37).class, Some(P12Class::P2));
        assert_eq!(c(37).representation, Some((6, 1)));
        assert_eq!(c(73).class, Some(P12Class::P1));
        assert_eq!(c(7).class, None);
        assert_eq!(c(3).residue_mod_12, 3);
        assert_eq!(classify_prime(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn class_matches_parametric_definition() {
        // P1: (6k+2)^2 + (6t+3)^2, P2: (6k)^2 + (6t+1)^2
        let mut p1 = std::collections::BTreeSet::new();
        let mut p2 = std::collections::BTreeSet::new();
        for k in -20i64..=20 {
            for t in -20i64..=20 {
                let a = (6 * k + 2).pow(2) + (6 * t + 3).pow(2);
                let b = (6 * k).pow(2) + (6 * t + 1).pow(2);
                p1.insert(a as u64);
                p2.insert(b as u64);
            }
        }
        for p in crate::numberkit::factor::primes_below(1500) {
            if p % 12 != 1 {
                continue;
            }
            let class = classify_prime(p).unwrap().class.unwrap();
            assert_eq!(p1.contains(&p), class == P12Class::P1, "{p}");
            assert_eq!(p2.contains(&p), class == P12Class::P2, "{p}");
        }
    }

    #[test]
    fn four_square_examples() {
        assert_eq!(four_squares_q8(3).unwrap(), (0, 1, 1, 1));
        assert_eq!(four_squares_q8(7).unwrap(), (2, 1, 1, 1));
        assert_eq!(four_squares_q8(11).unwrap(), (0, 3, 1, 1));
        assert!(matches!(four_squares_q8(5), Err(Error::Precondition(_))));
    }

    #[test]
    fn two_squares_doubled_examples() {
        assert_eq!(two_squares_doubled(5).unwrap(), (0, 0));
        assert_eq!(two_squares_doubled(17).unwrap(), (-1, 0));
        assert_eq!(two_squares_doubled(29).unwrap(), (1, 0));
    }

    #[test]
    fn normform_examples() {
        let s = normform_odd(1).unwrap();
        assert_eq!(s.params, vec![0, 0]);
        assert!(normform_odd(7).unwrap().verify());
        assert!(matches!(normform_odd(5), Err(Error::NoSolution { .. })));
        for p in [7, 19, 31] {
            let s = normform_7mod12(p).unwrap();
            assert!(s.verify() && s.params[1] % 2 == 0);
        }
        let s = normform_1mod12(13, P12Class::P1).unwrap();
        assert!(s.verify() && s.params[1].rem_euclid(2) == 1);
        for p in [37, 61] {
            let s = normform_1mod12(p, P12Class::P2).unwrap();
            assert!(s.verify() && s.params[1] % 2 == 0);
        }
        assert!(matches!(normform_1mod12(13, P12Class::P2), Err(Error::Precondition(_))));
    }

    #[test]
    fn n2_examples() {
        let (f1, f2) = n2_form_solutions(13).unwrap();
        assert!(f1.verify() && f1.params[2] % 2 == 0);
        assert!(f2.verify() && f2.params.iter().enumerate().all(|(i, x)| i == 1 || x % 2 == 0));
        let (f1, f2) = n2_form_solutions(37).unwrap();
        assert!(f1.verify() && f1.params[2].rem_euclid(2) == 1);
        assert!(f2.verify());
    }

    #[test]
    fn norm_sum_split_examples() {
        for (p, a, b) in [(5, 1, 1), (11, 7, 1), (17, 13, 1)] {
            let (alpha, beta) = norm_sum_split(p).unwrap();
            assert!(alpha.verify() && beta.verify());
            assert_eq!(alpha.target, BigInt::from(a));
            assert_eq!(beta.target, BigInt::from(b));
        }
    }
}
