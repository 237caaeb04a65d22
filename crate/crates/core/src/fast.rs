//! Fixed-width determinant evaluators for enumeration over small boxes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::group::{build_group, GroupSpec, GroupTable};
use crate::measure::{circulant_det_i64, group_determinant, group_determinant_i64, CoeffVector};
use crate::poly::cyc_norm;
use crate::profile::{profile_value, ProfileFamily};

#[derive(Debug, Clone)]
enum Kind {
    Profile(ProfileFamily),
    Cyclic,
    Dihedral(usize),
    Table,
}

/// Evaluates the determinant of one group on `i64` coefficients through the
/// cheapest exact route available for it.
#[derive(Debug, Clone)]
pub struct Evaluator {
    table: GroupTable,
    kind: Kind,
}

impl Evaluator {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let table = build_group(spec)?;
        let kind = match (ProfileFamily::of(spec), spec) {
            (Some(f), _) => Kind::Profile(f),
            (None, GroupSpec::Cyclic(_)) => Kind::Cyclic,
            (None, GroupSpec::Dihedral(n)) => Kind::Dihedral(*n as usize),
            _ => Kind::Table,
        };
        Ok(Evaluator { table, kind })
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    /// `None` only if a fixed-width intermediate overflowed.
    pub fn eval_i128(&self, c: &[i64]) -> Option<i128> {
        debug_assert_eq!(c.len(), self.table.order);
        match &self.kind {
            Kind::Profile(fam) => {
                let wide: Vec<i128> = c.iter().map(|&a| a as i128).collect();
                // factors are low-degree forms in the entries
                if c.iter().all(|a| a.unsigned_abs() <= 1 << 12) {
                    Some(profile_value(*fam, &wide))
                } else {
                    None
                }
            }
            Kind::Cyclic => cyclic_split(c),
            Kind::Dihedral(n) => {
                let (f, g) = c.split_at(*n);
                let arg: Vec<i64> = cyc_norm(f)
                    .into_iter()
                    .zip(cyc_norm(g))
                    .map(|(a, b)| a - b)
                    .collect();
                circulant_det_i64(&arg)
            }
            Kind::Table => group_determinant_i64(&self.table, c),
        }
    }

    /// Exact value, falling back to arbitrary precision.
    pub fn eval(&self, c: &[i64]) -> BigInt {
        match self.eval_i128(c) {
            Some(v) => BigInt::from(v),
            None => group_determinant(&self.table, &CoeffVector::from_i64s(c))
                .expect("length checked by caller"),
        }
    }
}

/// For `n = 2 mod 4`, `M_{Z_n}(F) = M_{Z_{n/2}}(F_+) M_{Z_{n/2}}(F_-(-x))`
/// where `F_+-` are `F` reduced mod `x^{n/2} -+ 1`.
fn cyclic_split(c: &[i64]) -> Option<i128> {
    let n = c.len();
    if n % 4 != 2 || n < 6 {
        return circulant_det_i64(c);
    }
    let h = n / 2;
    let plus: Vec<i64> = (0..h).map(|i| c[i] + c[i + h]).collect();
    let minus: Vec<i64> = (0..h)
        .map(|i| {
            let v = c[i] - c[i + h];
            if i % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    let a = circulant_det_i64(&plus)?;
    if a == 0 {
        return Some(0);
    }
    a.checked_mul(circulant_det_i64(&minus)?)
}

/// Converts an exact value into the `i128` window representation.
pub fn to_i128(v: &BigInt) -> Option<i128> {
    v.to_i128()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_group_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in GroupSpec::supported() {
            let ev = Evaluator::new(&spec).unwrap();
            for _ in 0..20 {
                let c: Vec<i64> = (0..ev.order()).map(|_| rng.gen_range(-3..=3)).collect();
                let exact = group_determinant(ev.table(), &CoeffVector::from_i64s(&c)).unwrap();
                assert_eq!(ev.eval(&c), exact, "{spec} {c:?}");
            }
        }
    }
}
