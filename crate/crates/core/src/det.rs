//! Fraction-free (Bareiss) determinants.
//!
//! Every division in the elimination is exact, so the same routine runs over
//! any integral domain with exact division.

use std::ops::Div;

use crate::ring::Ring;

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn bareiss<T: Ring + Div<Output = T>>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    debug_assert!(m.iter().all(|r| r.len() == n));
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

macro_rules! checked_bareiss {
    ($name:ident, $t:ty) => {
        /// Bareiss elimination returning `None` on overflow.
        pub fn $name(m: &mut [Vec<$t>]) -> Option<$t> {
            let n = m.len();
            if n == 0 {
                return Some(1);
            }
            let mut negate = false;
            let mut prev: $t = 1;
            for k in 0..n - 1 {
                if m[k][k] == 0 {
                    match (k + 1..n).find(|&i| m[i][k] != 0) {
                        Some(i) => {
                            m.swap(k, i);
                            negate = !negate;
                        }
                        None => return Some(0),
                    }
                }
                let (top, rest) = m.split_at_mut(k + 1);
                let pivot_row = &top[k];
                let p = pivot_row[k];
                for row in rest.iter_mut() {
                    let lead = row[k];
                    for j in k + 1..n {
                        let num = row[j]
                            .checked_mul(p)?
                            .checked_sub(lead.checked_mul(pivot_row[j])?)?;
                        row[j] = num / prev;
                    }
                }
                prev = p;
            }
            let d = m[n - 1][n - 1];
            Some(if negate { d.checked_neg()? } else { d })
        }
    };
}

checked_bareiss!(bareiss_i64, i64);
checked_bareiss!(bareiss_i128, i128);

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(bareiss::<BigInt>(vec![]), BigInt::from(1));
        assert_eq!(bareiss(big(&[&[7]])), BigInt::from(7));
        assert_eq!(bareiss(big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // needs a pivot swap
        assert_eq!(bareiss(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            bareiss(big(&[&[0, 2, 1], &[0, 3, 4], &[5, 6, 7]])),
            BigInt::from(25)
        );
        assert_eq!(bareiss(big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn checked_matches_bigint() {
        let rows: &[&[i64]] = &[&[2, -1, 0, 3], &[1, 0, 0, 5], &[-4, 2, 7, 1], &[0, 0, 1, -2]];
        let expect = bareiss(big(rows));
        let mut m64: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        let mut m128: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        assert_eq!(BigInt::from(bareiss_i64(&mut m64).unwrap()), expect);
        assert_eq!(BigInt::from(bareiss_i128(&mut m128).unwrap()), expect);
    }

    #[test]
    fn checked_reports_overflow() {
        let big = i64::MAX / 2;
        let mut m = vec![vec![big, 1], vec![-1, big]];
        assert_eq!(bareiss_i64(&mut m), None);
    }
}
