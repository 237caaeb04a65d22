//! Group determinants and the family-specific Lind-Mahler measure formulas.

use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::det::{bareiss, bareiss_i128, bareiss_i64};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::poly::{cyc_norm, LaurentPoly};
use crate::profile::{a4_parts, MeasureFactorization, ProfileFamily};

/// Integer coefficients `a_g`, indexed by the canonical element order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CoeffVector(Vec<BigInt>);

impl CoeffVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        CoeffVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        CoeffVector(entries.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        CoeffVector(vec![BigInt::zero(); n])
    }

    /// Indicator of the identity element.
    pub fn identity(n: usize) -> Self {
        let mut v = Self::zeros(n);
        if n > 0 {
            v.0[0] = BigInt::one();
        }
        v
    }

    /// `(f coefficients, g coefficients)`.
    pub fn concat(f: &LaurentPoly, g: &LaurentPoly) -> Self {
        CoeffVector(f.coeffs().iter().chain(g.coeffs()).cloned().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    /// Entries as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                actual: self.len(),
            })
        }
    }
}

impl Neg for &CoeffVector {
    type Output = CoeffVector;
    fn neg(self) -> CoeffVector {
        CoeffVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<BigInt>> for CoeffVector {
    fn from(v: Vec<BigInt>) -> Self {
        CoeffVector(v)
    }
}

// Decimal strings keep arbitrary precision intact through JSON.
impl Serialize for CoeffVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|a| a.to_string()))
    }
}

impl<'de> Deserialize<'de> for CoeffVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(CoeffVector)
    }
}

/// Group-ring product: `c_g = sum_{uv = g} a_u b_v`.
pub fn convolve(table: &GroupTable, u: &CoeffVector, v: &CoeffVector) -> Result<CoeffVector> {
    u.check_len(table.order)?;
    v.check_len(table.order)?;
    let mut out = vec![BigInt::zero(); table.order];
    for (i, a) in u.0.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.0.iter().enumerate() {
            if !b.is_zero() {
                out[table.mul(i, j)] += a * b;
            }
        }
    }
    Ok(CoeffVector(out))
}

/// `M[i][j] = u[g_i g_j^{-1}]`.
fn group_matrix<T: Clone>(table: &GroupTable, u: &[T]) -> Vec<Vec<T>> {
    (0..table.order)
        .map(|i| {
            (0..table.order)
                .map(|j| u[table.mul(i, table.inv[j])].clone())
                .collect()
        })
        .collect()
}

/// Exact group determinant `det[x_{g_i g_j^{-1}}]`.
pub fn group_determinant(table: &GroupTable, u: &CoeffVector) -> Result<BigInt> {
    u.check_len(table.order)?;
    if let Some(small) = u.to_i64s() {
        if let Some(d) = group_determinant_i64(table, &small) {
            return Ok(BigInt::from(d));
        }
    }
    Ok(bareiss(group_matrix(table, &u.0)))
}

/// Fixed-width fast path; `None` when an intermediate overflows `i128`.
pub fn group_determinant_i64(table: &GroupTable, u: &[i64]) -> Option<i128> {
    debug_assert_eq!(u.len(), table.order);
    let mut m = group_matrix(table, u);
    if let Some(d) = bareiss_i64(&mut m) {
        return Some(d as i128);
    }
    let mut m: Vec<Vec<i128>> = group_matrix(table, u)
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    bareiss_i128(&mut m)
}

fn circulant<T: Clone>(c: &[T]) -> Vec<Vec<T>> {
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|j| c[(i + n - j) % n].clone()).collect())
        .collect()
}

fn check_modulus(expected: usize, f: &LaurentPoly) -> Result<()> {
    if f.modulus() == expected {
        Ok(())
    } else {
        Err(Error::ModulusMismatch {
            expected,
            actual: f.modulus(),
        })
    }
}

/// `prod_{j} f(w_n^j)` as the circulant determinant of `f`.
pub fn cyclic_measure(n: usize, f: &LaurentPoly) -> Result<BigInt> {
    check_modulus(n, f)?;
    Ok(circulant_det(f.coeffs()))
}

pub(crate) fn circulant_det(c: &[BigInt]) -> BigInt {
    let small: Option<Vec<i64>> = c.iter().map(ToPrimitive::to_i64).collect();
    if let Some(d) = small.and_then(|s| circulant_det_i64(&s)) {
        return BigInt::from(d);
    }
    bareiss(circulant(c))
}

/// Circulant determinant in fixed width; `None` on overflow.
pub fn circulant_det_i64(c: &[i64]) -> Option<i128> {
    let mut m = circulant(c);
    if let Some(d) = bareiss_i64(&mut m) {
        return Some(d as i128);
    }
    let mut m: Vec<Vec<i128>> = circulant(c)
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    bareiss_i128(&mut m)
}

/// The same measure computed as `Res(x^n - 1, f)` from a Sylvester matrix.
pub fn cyclic_measure_resultant(n: usize, f: &LaurentPoly) -> Result<BigInt> {
    check_modulus(n, f)?;
    let c = f.coeffs();
    let Some(d) = c.iter().rposition(|a| !a.is_zero()) else {
        return Ok(BigInt::zero());
    };
    if d == 0 {
        return Ok(num_traits::pow(c[0].clone(), n));
    }
    // Rows: d shifted copies of x^n - 1, then n shifted copies of f,
    // coefficients listed from the leading term down.
    let size = n + d;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for (r, row) in m.iter_mut().enumerate().take(d) {
        row[r] = BigInt::one();
        row[r + n] = BigInt::from(-1);
    }
    for r in 0..n {
        for k in 0..=d {
            m[d + r][r + k] = c[d - k].clone();
        }
    }
    Ok(bareiss(m))
}

/// `M_{Z_n}(f f* - g g*)`; the determinant of `D_{2n}` on `(f, g)`.
pub fn dihedral_measure(n: usize, f: &LaurentPoly, g: &LaurentPoly) -> Result<BigInt> {
    check_modulus(n, f)?;
    check_modulus(n, g)?;
    let arg: Vec<BigInt> = cyc_norm(f.coeffs())
        .into_iter()
        .zip(cyc_norm(g.coeffs()))
        .map(|(a, b)| a - b)
        .collect();
    Ok(circulant_det(&arg))
}

/// `M_{Z_2n}(f f* - x^n g g*)`; the determinant of `Q_{4n}` on `(f, g)`.
pub fn dicyclic_measure(n: usize, f: &LaurentPoly, g: &LaurentPoly) -> Result<BigInt> {
    check_modulus(2 * n, f)?;
    check_modulus(2 * n, g)?;
    let gg = cyc_norm(g.coeffs());
    let ff = cyc_norm(f.coeffs());
    let arg: Vec<BigInt> = (0..2 * n).map(|i| &ff[i] - &gg[(i + n) % (2 * n)]).collect();
    Ok(circulant_det(&arg))
}

/// `M_{Z_n}(f + g) M_{Z_n}(f - g)`; the determinant of `Z_n x Z_2` on `(f, g)`.
pub fn zn_z2_measure(n: usize, f: &LaurentPoly, g: &LaurentPoly) -> Result<BigInt> {
    check_modulus(n, f)?;
    check_modulus(n, g)?;
    let plus = cyclic_measure(n, &(f + g))?;
    if plus.is_zero() {
        return Ok(plus);
    }
    Ok(plus * cyclic_measure(n, &(f - g))?)
}

/// Product of `F(x, y, z)` over `x, y, z = +-1`; coefficient index `i + 2j + 4k`
/// holds the `x^i y^j z^k` term.
pub fn z2_cubed_measure(coeffs: &CoeffVector) -> Result<BigInt> {
    coeffs.check_len(8)?;
    let mut total = BigInt::one();
    for signs in 0..8u32 {
        let mut s = BigInt::zero();
        for (idx, c) in coeffs.0.iter().enumerate() {
            // the sign of x^i y^j z^k at the chosen point
            if (idx as u32 & signs).count_ones() % 2 == 1 {
                s -= c;
            } else {
                s += c;
            }
        }
        total *= s;
    }
    Ok(total)
}

/// A4 determinant `l0 * (l1 l2) * D^3` together with its parts.
pub fn a4_determinant(coeffs: &CoeffVector) -> Result<(BigInt, MeasureFactorization)> {
    coeffs.check_len(12)?;
    let parts = MeasureFactorization::from_parts(ProfileFamily::A4, a4_parts(&coeffs.0));
    Ok((parts.product(), parts))
}
