//! Eisenstein integers `a + b*w` with `w^2 = -1 - w`, and the biquadratic
//! ring `Z[w, i]` as pairs `X + iY` of Eisenstein integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ring::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EisensteinInt<T = BigInt> {
    pub a: T,
    pub b: T,
}

impl<T: Ring> EisensteinInt<T> {
    pub fn new(a: T, b: T) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_int(a: T) -> Self {
        EisensteinInt { a, b: T::zero() }
    }

    pub fn omega() -> Self {
        EisensteinInt {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// `w^k`, exponent read mod 3.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::from_int(T::one()),
            1 => Self::omega(),
            _ => EisensteinInt {
                a: -T::one(),
                b: -T::one(),
            },
        }
    }

    /// `N1(a + b w) = a^2 - ab + b^2`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.a.clone() * self.b.clone()
            + self.b.clone() * self.b.clone()
    }

    /// Complex conjugate `a + b w^2`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: self.a.clone() - self.b.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        EisensteinInt {
            a: self.a.clone() * k.clone(),
            b: self.b.clone() * k.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl EisensteinInt<BigInt> {
    pub fn from_i64(a: i64, b: i64) -> Self {
        EisensteinInt {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }
}

impl<T: fmt::Display> fmt::Debug for EisensteinInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}w)", self.a, self.b)
    }
}

impl<T: Ring> Add for EisensteinInt<T> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        EisensteinInt {
            a: self.a + r.a,
            b: self.b + r.b,
        }
    }
}

impl<T: Ring> Sub for EisensteinInt<T> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        EisensteinInt {
            a: self.a - r.a,
            b: self.b - r.b,
        }
    }
}

impl<T: Ring> Mul for EisensteinInt<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
        let bd = self.b.clone() * r.b.clone();
        EisensteinInt {
            a: self.a.clone() * r.a.clone() - bd.clone(),
            b: self.a * r.b + self.b * r.a - bd,
        }
    }
}

impl<T: Ring> Neg for EisensteinInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// `sum c_j z^j` for `z = w` (`negate = false`) or `z = -w` (`negate = true`).
pub fn eval_at_omega<T: Ring>(coeffs: &[T], negate: bool) -> EisensteinInt<T> {
    // w^j cycles through 1, w, -1-w
    let (mut a, mut b) = (T::zero(), T::zero());
    for (j, c) in coeffs.iter().enumerate() {
        let c = if negate && j % 2 == 1 { -c.clone() } else { c.clone() };
        match j % 3 {
            0 => a = a + c,
            1 => b = b + c,
            _ => {
                a = a - c.clone();
                b = b - c;
            }
        }
    }
    EisensteinInt { a, b }
}

/// An element `X + iY` of `Z[w, i]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EisensteinGaussian<T = BigInt> {
    pub re: EisensteinInt<T>,
    pub im: EisensteinInt<T>,
}

impl<T: Ring> EisensteinGaussian<T> {
    pub fn new(re: EisensteinInt<T>, im: EisensteinInt<T>) -> Self {
        EisensteinGaussian { re, im }
    }

    /// Absolute norm to `Z`: `N1(X^2 + Y^2)`.
    pub fn norm(&self) -> T {
        let s = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        s.norm()
    }
}

impl<T: fmt::Display> fmt::Debug for EisensteinGaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

impl<T: Ring> Mul for EisensteinGaussian<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        EisensteinGaussian {
            re: self.re.clone() * r.re.clone() - self.im.clone() * r.im.clone(),
            im: self.re * r.im + self.im * r.re,
        }
    }
}

impl<T: Ring> One for EisensteinInt<T> {
    fn one() -> Self {
        Self::from_int(T::one())
    }
}

impl<T: Ring> Zero for EisensteinInt<T> {
    fn zero() -> Self {
        Self::from_int(T::zero())
    }
    fn is_zero(&self) -> bool {
        EisensteinInt::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = EisensteinInt<i64>;

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = E::omega();
        assert_eq!(w * w * w, E::one());
        assert_eq!(w * w + w + E::one(), E::zero());
        assert_eq!(w.conj(), w * w);
    }

    #[test]
    fn norm_is_multiplicative() {
        for (a, b, c, d) in [(2, 3, -1, 4), (5, -7, 0, 1), (1, 1, 1, 1)] {
            let x = E::new(a, b);
            let y = E::new(c, d);
            assert_eq!((x * y).norm(), x.norm() * y.norm());
            assert_eq!(x * x.conj(), E::from_int(x.norm()));
        }
        assert_eq!(E::new(1, -1).norm(), 3);
    }

    #[test]
    fn evaluation_at_omega() {
        // 1 + x + x^2 vanishes at w; 1 - x + x^2 vanishes at -w
        assert!(eval_at_omega(&[1i64, 1, 1], false).is_zero());
        assert!(eval_at_omega(&[1i64, -1, 1], true).is_zero());
        assert_eq!(eval_at_omega(&[0i64, 0, 0, 1], true), E::from_int(-1));
    }

    #[test]
    fn biquadratic_norm() {
        // X = Y = 1: X^2 + Y^2 = 2 and N1(2) = 4
        let z = EisensteinGaussian::new(E::one(), E::one());
        assert_eq!(z.norm(), 4);
        let u = EisensteinGaussian::new(E::new(2, 1), E::new(-1, 3));
        let v = EisensteinGaussian::new(E::new(0, 1), E::new(1, 1));
        assert_eq!((u.clone() * v.clone()).norm(), u.norm() * v.norm());
    }
}
