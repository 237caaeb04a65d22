//! Polynomials in `Z[x]/<x^n - 1>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ring::Ring;

/// Cyclic product of two coefficient slices of equal length.
pub fn cyc_mul<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let mut out = vec![T::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = (i + j) % n;
            out[k] = out[k].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

/// `f(x) -> f(x^{-1})`.
pub fn cyc_reverse<T: Ring>(a: &[T]) -> Vec<T> {
    let n = a.len();
    (0..n).map(|i| a[(n - i) % n].clone()).collect()
}

/// `f(x) f(x^{-1})`.
pub fn cyc_norm<T: Ring>(a: &[T]) -> Vec<T> {
    cyc_mul(a, &cyc_reverse(a))
}

/// An element of `Z[x]/<x^n - 1>` with coefficients `c_0..c_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    modulus: usize,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Folds `coeffs` into the ring, so exponents beyond `n - 1` wrap.
    ///
    /// # Panics
    /// If `modulus` is 0.
    pub fn new(modulus: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let mut c = vec![BigInt::zero(); modulus];
        for (i, a) in coeffs.into_iter().enumerate() {
            c[i % modulus] += a;
        }
        LaurentPoly { modulus, coeffs: c }
    }

    pub fn from_i64s(modulus: usize, coeffs: &[i64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&a| BigInt::from(a)))
    }

    /// Sum of `coef * x^exp` terms; negative exponents are allowed.
    pub fn from_terms(modulus: usize, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(modulus);
        let n = modulus as i64;
        for &(e, a) in terms {
            p.coeffs[e.rem_euclid(n) as usize] += a;
        }
        p
    }

    pub fn zero(modulus: usize) -> Self {
        Self::new(modulus, std::iter::empty())
    }

    pub fn one(modulus: usize) -> Self {
        Self::monomial(modulus, 0)
    }

    pub fn monomial(modulus: usize, exp: i64) -> Self {
        Self::from_terms(modulus, &[(exp, 1)])
    }

    /// `1 + x + ... + x^{n-1}`.
    pub fn all_ones(modulus: usize) -> Self {
        Self::new(modulus, (0..modulus).map(|_| BigInt::one()))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(x^{-1})`.
    pub fn reverse(&self) -> Self {
        LaurentPoly {
            modulus: self.modulus,
            coeffs: cyc_reverse(&self.coeffs),
        }
    }

    /// `f(-x)`; only meaningful for even moduli.
    pub fn negate_x(&self) -> Self {
        debug_assert!(self.modulus.is_multiple_of(2));
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        }
    }

    /// `f(x^k)`.
    pub fn substitute_power(&self, k: i64) -> Self {
        let n = self.modulus as i64;
        let mut p = Self::zero(self.modulus);
        for (i, a) in self.coeffs.iter().enumerate() {
            p.coeffs[(i as i64 * k).rem_euclid(n) as usize] += a;
        }
        p
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "polynomials over different moduli"
        );
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[mod x^{} - 1](", self.modulus)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        LaurentPoly {
            modulus: self.modulus,
            coeffs: cyc_mul(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_wraps() {
        let x = LaurentPoly::monomial(4, 1);
        let x3 = LaurentPoly::monomial(4, 3);
        assert_eq!(&x * &x3, LaurentPoly::one(4));
        assert_eq!(LaurentPoly::monomial(4, -1), x3);
    }

    #[test]
    fn reverse_inverts_exponents() {
        let f = LaurentPoly::from_i64s(5, &[1, 2, 3, 4, 5]);
        assert_eq!(f.reverse(), LaurentPoly::from_i64s(5, &[1, 5, 4, 3, 2]));
        assert_eq!(f.reverse().reverse(), f);
        assert_eq!(f.substitute_power(-1), f.reverse());
    }

    #[test]
    fn new_folds_long_input() {
        let f = LaurentPoly::from_i64s(3, &[1, 0, 0, 2, 0, 0, 3]);
        assert_eq!(f.coeffs(), &[BigInt::from(6), BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn ring_laws() {
        let f = LaurentPoly::from_i64s(6, &[1, -2, 0, 3, 1, 1]);
        let g = LaurentPoly::from_i64s(6, &[0, 4, -1, 0, 2, 5]);
        let h = LaurentPoly::from_i64s(6, &[2, 2, 0, 0, -3, 1]);
        assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        assert_eq!(&f * &g, &g * &f);
        assert_eq!(&(&f - &f), &LaurentPoly::zero(6));
        assert_eq!((&f * &g).reverse(), &f.reverse() * &g.reverse());
        assert_eq!(f.negate_x().negate_x(), f);
    }
}
