//! Integer factorization: trial division, Brent's variant of Pollard rho and
//! Miller-Rabin.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `|v|`, in bits.
pub const DEFAULT_BOUND_BITS: u32 = 96;

/// The first 13 primes form a deterministic Miller-Rabin base set below
/// 3.3e24.
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;
const TRIAL_LIMIT: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i8,
    /// `(prime, exponent)`, primes strictly increasing.
    pub prime_powers: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for &(p, e) in &self.prime_powers {
            v *= num_traits::pow(BigInt::from(p), e as usize);
        }
        v
    }

    pub fn exponent(&self, p: u128) -> u32 {
        self.prime_powers
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }
}

pub fn factorize(v: &BigInt) -> Result<Factorization> {
    factorize_with_bound(v, DEFAULT_BOUND_BITS)
}

pub fn factorize_with_bound(v: &BigInt, bound_bits: u32) -> Result<Factorization> {
    if v.is_zero() {
        return Err(Error::ZeroInput);
    }
    let bits = v.bits();
    if bits > bound_bits as u64 || bits > 126 {
        return Err(Error::TooLarge(v.to_string()));
    }
    let sign = if v.sign() == Sign::Minus { -1 } else { 1 };
    let n = v.abs().to_u128().expect("bounded by 126 bits");
    let mut primes = Vec::new();
    split(n, &mut primes);
    primes.sort_unstable();
    let mut prime_powers: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match prime_powers.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => prime_powers.push((p, 1)),
        }
    }
    Ok(Factorization { sign, prime_powers })
}

/// Pushes the prime factors of `n` with multiplicity.
fn split(mut n: u128, out: &mut Vec<u128>) {
    for p in 2..TRIAL_LIMIT as u128 {
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            out.push(m);
            continue;
        }
        let d = rho(m);
        stack.push(d);
        stack.push(m / d);
    }
}

/// `a * b` as `(high, low)` 128-bit halves.
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const M: u128 = u64::MAX as u128;
    let (a0, a1, b0, b1) = (a & M, a >> 64, b & M, b >> 64);
    let (p00, p01, p10, p11) = (a0 * b0, a0 * b1, a1 * b0, a1 * b1);
    let mid = (p00 >> 64) + (p01 & M) + (p10 & M);
    let lo = (p00 & M) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Montgomery arithmetic modulo an odd `n < 2^126`, with `R = 2^128`.
struct Montgomery {
    n: u128,
    n_neg_inv: u128,
    r2: u128,
}

impl Montgomery {
    fn new(n: u128) -> Self {
        debug_assert!(n % 2 == 1 && n < 1 << 126);
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let r = (u128::MAX % n + 1) % n;
        // R^2 mod n by doubling R, 128 times
        let mut r2 = r;
        for _ in 0..128 {
            r2 <<= 1;
            if r2 >= n {
                r2 -= n;
            }
        }
        Montgomery {
            n,
            n_neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.n_neg_inv);
        let (mh, ml) = mul_wide(m, self.n);
        let carry = lo.overflowing_add(ml).1 as u128;
        let t = hi + mh + carry;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    fn to_mont(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    fn pow(&self, b: u128, mut e: u128) -> u128 {
        let mut r = self.to_mont(1);
        let mut b = self.to_mont(b);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }
}

/// Miller-Rabin; deterministic below 3.3e24, a strong probable-prime test
/// with extra bases above.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let extra: &[u128] = if n < MR_DETERMINISTIC_LIMIT {
        &[]
    } else {
        &[43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    };
    let mont = Montgomery::new(n);
    let (one, minus_one) = (mont.to_mont(1), mont.to_mont(n - 1));
    'bases: for &a in MR_BASES.iter().chain(extra) {
        let mut x = mont.pow(a, d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = mont.mul(x, x);
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u128(n as u128)
}

/// A nontrivial divisor of the odd composite `n`.
///
/// Iterates in Montgomery form throughout; `gcd` is unaffected because `R`
/// is a unit mod `n`.
fn rho(n: u128) -> u128 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mont = Montgomery::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 ^ (n >> 64) as u64);
    loop {
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(0..n);
        let (mut g, mut r, mut q) = (1u128, 1u64, 1u128);
        let m = 128;
        let mut x = y;
        let mut ys = y;
        let f = |v: u128| (mont.mul(v, v) + c) % n;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mont.mul(q, x.abs_diff(y));
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

/// `(e, v / p^e)` with `p^e` the exact power of `p` dividing `v != 0`.
pub fn split_valuation(v: &BigInt, p: u32) -> (u32, BigInt) {
    debug_assert!(!v.is_zero());
    let p = BigInt::from(p);
    let mut e = 0;
    let mut w = v.clone();
    loop {
        let (q, r) = w.div_rem(&p);
        if !r.is_zero() {
            return (e, w);
        }
        w = q;
        e += 1;
    }
}

/// `v mod m` in `0..m`.
pub fn residue(v: &BigInt, m: u32) -> u32 {
    v.mod_floor(&BigInt::from(m)).to_u32().expect("residue fits")
}

/// Primes below `limit`.
pub fn primes_below(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit as usize];
    let mut out = Vec::new();
    for i in 2..limit as usize {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit as usize {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn fac(v: i128) -> Factorization {
        factorize(&BigInt::from(v)).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fac(45), Factorization { sign: 1, prime_powers: vec![(3, 2), (5, 1)] });
        assert_eq!(fac(-(1 << 8) * 13), Factorization { sign: -1, prime_powers: vec![(2, 8), (13, 1)] });
        let v = (1i128 << 14) * 9 * 7;
        let f = fac(v);
        assert_eq!(f.prime_powers, vec![(2, 14), (3, 2), (7, 1)]);
        assert_eq!(f.value(), BigInt::from(v));
        assert_eq!(fac(1).prime_powers, vec![]);
        assert_eq!(fac(-1).sign, -1);
    }

    #[test]
    fn errors() {
        assert_eq!(factorize(&BigInt::zero()), Err(Error::ZeroInput));
        let huge = BigInt::one() << 100;
        assert!(matches!(factorize(&huge), Err(Error::TooLarge(_))));
    }

    #[test]
    fn large_semiprimes() {
        let p: u128 = 1_000_000_007;
        let q: u128 = 998_244_353;
        let r: u128 = 4_294_967_311;
        let f = factorize(&BigInt::from(p * q * r)).unwrap();
        assert_eq!(f.prime_powers, vec![(q, 1), (p, 1), (r, 1)]);
        // the product is past 2^64, so the rho steps need the wide modular product
        let a: u128 = 35_184_372_088_891;
        let b: u128 = 35_184_372_089_371;
        assert!(is_prime_u128(a) && is_prime_u128(b));
        let f = factorize(&BigInt::from(a * b)).unwrap();
        assert_eq!(f.prime_powers, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn primality_matches_sieve() {
        let sieve = primes_below(5000);
        let tested: Vec<u64> = (0..5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, tested);
        // strong pseudoprime to bases 2..37 is still rejected
        assert!(!is_prime_u128(3_825_123_056_546_413_051));
    }

    #[test]
    fn montgomery_wide() {
        let n: u128 = (1 << 95) + 13;
        let m = Montgomery::new(n);
        let (a, b) = (m.to_mont(n - 2), m.to_mont(n - 3));
        // (-2)(-3) = 6
        assert_eq!(m.mul(a, b), m.to_mont(6));
        assert_eq!(m.pow(3, 4), m.to_mont(81));
        assert_eq!(mul_wide(u128::MAX, u128::MAX), (u128::MAX - 1, 1));
    }

    #[test]
    fn valuations() {
        let (e, rest) = split_valuation(&BigInt::from(-48), 2);
        assert_eq!((e, rest), (4, BigInt::from(-3)));
        assert_eq!(residue(&BigInt::from(-7), 8), 1);
    }
}
