//! Factored forms of the group determinant for the small families that
//! admit one. Each factor is an integer; the determinant is the product of
//! the factors raised to their multiplicities.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::eisenstein::{eval_at_omega, EisensteinInt};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::measure::CoeffVector;
use crate::ring::{sq, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProfileFamily {
    Q8,
    D8,
    Z4xZ2,
    Z2Cubed,
    Q12,
    D12,
    Z6xZ2,
    Z12,
    A4,
    Z3xZ3,
}

impl ProfileFamily {
    pub const ALL: [ProfileFamily; 10] = [
        ProfileFamily::Q8,
        ProfileFamily::D8,
        ProfileFamily::Z4xZ2,
        ProfileFamily::Z2Cubed,
        ProfileFamily::Q12,
        ProfileFamily::D12,
        ProfileFamily::Z6xZ2,
        ProfileFamily::Z12,
        ProfileFamily::A4,
        ProfileFamily::Z3xZ3,
    ];

    pub fn of(spec: &GroupSpec) -> Option<ProfileFamily> {
        Some(match spec {
            GroupSpec::Dicyclic(2) => ProfileFamily::Q8,
            GroupSpec::Dihedral(4) => ProfileFamily::D8,
            GroupSpec::Dicyclic(3) => ProfileFamily::Q12,
            GroupSpec::Dihedral(6) => ProfileFamily::D12,
            GroupSpec::Cyclic(12) => ProfileFamily::Z12,
            GroupSpec::Alternating4 => ProfileFamily::A4,
            GroupSpec::AbelianProduct(ns) => match ns.as_slice() {
                [4, 2] => ProfileFamily::Z4xZ2,
                [2, 2, 2] => ProfileFamily::Z2Cubed,
                [6, 2] => ProfileFamily::Z6xZ2,
                [3, 3] => ProfileFamily::Z3xZ3,
                _ => return None,
            },
            _ => return None,
        })
    }

    pub fn spec(&self) -> GroupSpec {
        match self {
            ProfileFamily::Q8 => GroupSpec::Dicyclic(2),
            ProfileFamily::D8 => GroupSpec::Dihedral(4),
            ProfileFamily::Z4xZ2 => GroupSpec::AbelianProduct(vec![4, 2]),
            ProfileFamily::Z2Cubed => GroupSpec::AbelianProduct(vec![2, 2, 2]),
            ProfileFamily::Q12 => GroupSpec::Dicyclic(3),
            ProfileFamily::D12 => GroupSpec::Dihedral(6),
            ProfileFamily::Z6xZ2 => GroupSpec::AbelianProduct(vec![6, 2]),
            ProfileFamily::Z12 => GroupSpec::Cyclic(12),
            ProfileFamily::A4 => GroupSpec::Alternating4,
            ProfileFamily::Z3xZ3 => GroupSpec::AbelianProduct(vec![3, 3]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub name: String,
    pub value: BigInt,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureFactorization {
    pub family: ProfileFamily,
    pub factors: Vec<Factor>,
}

impl MeasureFactorization {
    pub(crate) fn from_parts(family: ProfileFamily, parts: Parts<BigInt>) -> Self {
        MeasureFactorization {
            family,
            factors: parts
                .into_iter()
                .map(|(name, value, multiplicity)| Factor {
                    name: name.to_string(),
                    value,
                    multiplicity,
                })
                .collect(),
        }
    }

    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, f| acc * num_traits::pow(f.value.clone(), f.multiplicity as usize))
    }

    pub fn get(&self, name: &str) -> Option<&BigInt> {
        self.factors.iter().find(|f| f.name == name).map(|f| &f.value)
    }
}

pub(crate) type Parts<T> = Vec<(&'static str, T, u32)>;

/// Factored determinant for the families in [`ProfileFamily`].
pub fn factored_profile(spec: &GroupSpec, coeffs: &CoeffVector) -> Result<MeasureFactorization> {
    let family = ProfileFamily::of(spec).ok_or_else(|| Error::UnsupportedGroup(spec.to_string()))?;
    coeffs.check_len(spec.order())?;
    Ok(MeasureFactorization::from_parts(
        family,
        profile_parts(family, coeffs.entries()),
    ))
}

/// Product of the factors, for any ring.
pub fn profile_value<T: Ring>(family: ProfileFamily, c: &[T]) -> T {
    profile_parts(family, c)
        .into_iter()
        .fold(T::one(), |acc, (_, v, k)| (0..k).fold(acc, |a, _| a * v.clone()))
}

pub(crate) fn profile_parts<T: Ring>(family: ProfileFamily, c: &[T]) -> Parts<T> {
    match family {
        ProfileFamily::Q8 | ProfileFamily::D8 | ProfileFamily::Z4xZ2 => order8_parts(family, c),
        ProfileFamily::Z2Cubed => z2_cubed_parts(c),
        ProfileFamily::Q12 | ProfileFamily::D12 | ProfileFamily::Z6xZ2 => order12_parts(family, c),
        ProfileFamily::Z12 => z12_parts(c),
        ProfileFamily::A4 => a4_parts(c),
        ProfileFamily::Z3xZ3 => z3_squared_parts(c),
    }
}

fn sum<T: Ring>(c: &[T]) -> T {
    c.iter().fold(T::zero(), |a, b| a + b.clone())
}

/// `f(-1)`.
fn alt_sum<T: Ring>(c: &[T]) -> T {
    c.iter()
        .enumerate()
        .fold(T::zero(), |a, (i, b)| if i % 2 == 0 { a + b.clone() } else { a - b.clone() })
}

/// `f(i)` for a length-4 polynomial, as `(re, im)`.
fn at_i<T: Ring>(c: &[T]) -> (T, T) {
    (c[0].clone() - c[2].clone(), c[1].clone() - c[3].clone())
}

fn abs2<T: Ring>(z: &(T, T)) -> T {
    sq(&z.0) + sq(&z.1)
}

fn order8_parts<T: Ring>(family: ProfileFamily, c: &[T]) -> Parts<T> {
    let (f, g) = c.split_at(4);
    let (f1, g1, fm, gm) = (sum(f), sum(g), alt_sum(f), alt_sum(g));
    let mut parts = vec![
        ("l1", f1.clone() + g1.clone(), 1),
        ("l2", f1 - g1, 1),
        ("l3", fm.clone() + gm.clone(), 1),
        ("l4", fm - gm, 1),
    ];
    let (fi, gi) = (at_i(f), at_i(g));
    match family {
        ProfileFamily::Q8 => parts.push(("q1", abs2(&fi) + abs2(&gi), 2)),
        ProfileFamily::D8 => parts.push(("q2", abs2(&fi) - abs2(&gi), 2)),
        _ => {
            let plus = (fi.0.clone() + gi.0.clone(), fi.1.clone() + gi.1.clone());
            let minus = (fi.0 - gi.0, fi.1 - gi.1);
            parts.push(("q3", abs2(&plus), 1));
            parts.push(("q4", abs2(&minus), 1));
        }
    }
    parts
}

fn z2_cubed_parts<T: Ring>(c: &[T]) -> Parts<T> {
    const NAMES: [&str; 8] = [
        "F(+1,+1,+1)",
        "F(-1,+1,+1)",
        "F(+1,-1,+1)",
        "F(-1,-1,+1)",
        "F(+1,+1,-1)",
        "F(-1,+1,-1)",
        "F(+1,-1,-1)",
        "F(-1,-1,-1)",
    ];
    (0..8u32)
        .map(|signs| {
            let v = c.iter().enumerate().fold(T::zero(), |acc, (idx, a)| {
                if (idx as u32 & signs).count_ones() % 2 == 1 {
                    acc - a.clone()
                } else {
                    acc + a.clone()
                }
            });
            (NAMES[signs as usize], v, 1)
        })
        .collect()
}

fn add<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn sub<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn order12_parts<T: Ring>(family: ProfileFamily, c: &[T]) -> Parts<T> {
    let (f, g) = c.split_at(6);
    let (f1, g1, fm, gm) = (sum(f), sum(g), alt_sum(f), alt_sum(g));
    let a = sq(&f1) - sq(&g1);
    let nw = |p: &[T], neg: bool| eval_at_omega(p, neg).norm();
    match family {
        ProfileFamily::Q12 => vec![
            ("a", a, 1),
            ("b", sq(&fm) + sq(&gm), 1),
            ("c", nw(f, false) - nw(g, false), 2),
            ("d", nw(f, true) + nw(g, true), 2),
        ],
        ProfileFamily::D12 => vec![
            ("a", a, 1),
            ("b1", sq(&fm) - sq(&gm), 1),
            ("c", nw(f, false) - nw(g, false), 2),
            ("d1", nw(f, true) - nw(g, true), 2),
        ],
        _ => {
            let (p, m) = (add(f, g), sub(f, g));
            vec![
                ("a", a, 1),
                ("b1", sq(&fm) - sq(&gm), 1),
                ("e1", nw(&p, false), 1),
                ("e2", nw(&m, false), 1),
                ("e3", nw(&p, true), 1),
                ("e4", nw(&m, true), 1),
            ]
        }
    }
}

/// `F(x) = f(x^2) + x g(x^2)`.
fn z12_parts<T: Ring>(c: &[T]) -> Parts<T> {
    let f: Vec<T> = c.iter().step_by(2).cloned().collect();
    let g: Vec<T> = c.iter().skip(1).step_by(2).cloned().collect();
    let (f1, g1, fm, gm) = (sum(&f), sum(&g), alt_sum(&f), alt_sum(&g));
    let w = EisensteinInt::<T>::omega();
    let (fw, gw) = (eval_at_omega(&f, false), eval_at_omega(&g, false));
    let (fmw, gmw) = (eval_at_omega(&f, true), eval_at_omega(&g, true));
    let s1 = fw.clone() * fw - w.clone() * gw.clone() * gw;
    let s2 = fmw.clone() * fmw + w * gmw.clone() * gmw;
    vec![
        ("a", sq(&f1) - sq(&g1), 1),
        ("b", sq(&fm) + sq(&gm), 1),
        ("s1", s1.norm(), 1),
        ("s2", s2.norm(), 1),
    ]
}

fn det3<T: Ring>(m: [[T; 3]; 3]) -> T {
    let [[a, b, c], [d, e, f], [g, h, i]] = m;
    a * (e.clone() * i.clone() - f.clone() * h.clone()) - b * (d.clone() * i - f * g.clone())
        + c * (d * h - e * g)
}

pub(crate) fn a4_parts<T: Ring>(c: &[T]) -> Parts<T> {
    let x = |k: usize| c[k - 1].clone();
    let a = x(1) + x(2) + x(3) + x(4);
    let b = x(5) + x(6) + x(7) + x(8);
    let cc = x(9) + x(10) + x(11) + x(12);
    let l0 = a.clone() + b.clone() + cc.clone();
    let l1l2 = sq(&a) + sq(&b) + sq(&cc) - a.clone() * b.clone() - b * cc.clone() - cc * a;
    let d = det3([
        [
            x(1) + x(2) - x(3) - x(4),
            x(9) + x(10) - x(11) - x(12),
            x(5) + x(6) - x(7) - x(8),
        ],
        [
            x(5) - x(6) - x(7) + x(8),
            x(1) - x(2) - x(3) + x(4),
            x(9) - x(10) - x(11) + x(12),
        ],
        [
            x(9) - x(10) + x(11) - x(12),
            x(5) - x(6) + x(7) - x(8),
            x(1) - x(2) + x(3) - x(4),
        ],
    ]);
    vec![("l0", l0, 1), ("l1l2", l1l2, 1), ("D", d, 3)]
}

/// Index `i + 3j` holds the `x^i y^j` term.
fn z3_squared_parts<T: Ring>(c: &[T]) -> Parts<T> {
    // F(w^s, w^t) collects coefficients by the exponent s*i + t*j mod 3
    let eval = |s: usize, t: usize| {
        let mut buckets = [T::zero(), T::zero(), T::zero()];
        for (idx, a) in c.iter().enumerate() {
            let e = (s * (idx % 3) + t * (idx / 3)) % 3;
            buckets[e] = buckets[e].clone() + a.clone();
        }
        eval_at_omega(&buckets, false)
    };
    let one = eval(0, 0);
    vec![
        ("F(1,1)", one.a, 1),
        ("N(F(w,1))", eval(1, 0).norm(), 1),
        ("N(F(1,w))", eval(0, 1).norm(), 1),
        ("N(F(w,w))", eval(1, 1).norm(), 1),
        ("N(F(w^2,w))", eval(2, 1).norm(), 1),
    ]
}
