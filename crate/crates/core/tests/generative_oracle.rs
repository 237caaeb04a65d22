//! Each value set is regenerated from its parameterized families (m over a
//! range, primes up to the window) and compared with `set_window`.

use std::collections::BTreeSet;

use groupdet::numberkit::primes_below;
use groupdet::set_window;

const B: i64 = 2000;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Accumulates family values inside `[-B, B]`.
#[derive(Default)]
struct Gen(BTreeSet<i64>);

impl Gen {
    fn new() -> Self {
        let mut g = Gen::default();
        g.0.insert(0);
        g
    }

    fn put(&mut self, v: i64) {
        if v.abs() <= B {
            self.0.insert(v);
        }
    }

    /// `scale * (coeff * m + offset) * k` for all `m`.
    fn linear(&mut self, scale: i64, coeff: i64, offset: i64, k: i64) {
        for m in -B..=B {
            self.put(scale * (coeff * m + offset) * k);
        }
    }

    /// `scale * m_t` for all `m` coprime to `t`.
    fn coprime(&mut self, scale: i64, t: i64) {
        for m in -B..=B {
            if gcd(m, t) == 1 {
                self.put(scale * m);
            }
        }
    }

    /// `2^a q^b m_{2q}` (or `q^b m_q` when `two` is false) over the allowed
    /// exponents.
    fn powers(&mut self, q: i64, two: bool, a_ok: impl Fn(u32) -> bool, b_ok: impl Fn(u32) -> bool) {
        let t = if two { 2 * q } else { q };
        for a in 0..12 {
            if !(two || a == 0) || !a_ok(a) {
                continue;
            }
            for b in 0..12 {
                let scale = 2i64.pow(a) * q.pow(b);
                if b_ok(b) && scale <= B {
                    self.coprime(scale, t);
                }
            }
        }
    }
}

fn primes() -> Vec<i64> {
    primes_below(B as u64).into_iter().map(|p| p as i64).collect()
}

/// `p = (6k + 2)^2 + (6t + 3)^2`, by direct search.
fn in_p1(p: i64) -> bool {
    p % 12 == 1
        && (-20..20).any(|k: i64| (-20..20).any(|t: i64| (6 * k + 2).pow(2) + (6 * t + 3).pow(2) == p))
}

fn zero_or_at_least(lo: u32) -> impl Fn(u32) -> bool {
    move |e| e == 0 || e >= lo
}

fn oracle(name: &str) -> BTreeSet<i64> {
    let mut g = Gen::new();
    let ps = primes();
    match name {
        "Z1" => g.linear(1, 1, 0, 1),
        "Z2" | "Z3" | "Z5" | "Z7" | "Z11" | "Z13" => {
            let p = name[1..].parse().unwrap();
            g.powers(p, false, |_| true, zero_or_at_least(2));
        }
        "Z4" => g.powers(2, false, |_| true, zero_or_at_least(4)),
        "Z8" => g.powers(2, false, |_| true, zero_or_at_least(5)),
        "Z9" => g.powers(3, false, |_| true, zero_or_at_least(3)),
        "Z6" | "Z10" | "Z14" => {
            let p = name[1..].parse::<i64>().unwrap() / 2;
            g.powers(p, true, zero_or_at_least(2), zero_or_at_least(2));
        }
        "D6" | "D10" | "D14" => {
            let p = name[1..].parse::<i64>().unwrap() / 2;
            g.powers(p, true, zero_or_at_least(2), zero_or_at_least(3));
        }
        "D18" => g.powers(3, true, zero_or_at_least(2), zero_or_at_least(5)),
        "Z2xZ2" | "D4" => {
            g.linear(1, 4, 1, 1);
            g.linear(16, 2, 1, 1);
            g.linear(64, 1, 0, 1);
        }
        "D8" | "D16" => {
            g.linear(1, 4, 1, 1);
            g.linear(if name == "D8" { 256 } else { 1024 }, 1, 0, 1);
        }
        "Z4xZ2" | "Q8" => {
            g.linear(1, 8, 1, 1);
            g.linear(256, 1, 0, 1);
            if name == "Q8" {
                for &p in ps.iter().filter(|&&p| p % 4 == 3) {
                    g.linear(1, 8, -3, p * p);
                }
            }
        }
        "Z2^3" => {
            g.linear(1, 8, 1, 1);
            g.linear(256, 4, 1, 1);
            g.linear(4096, 1, 0, 1);
        }
        "A4" => {
            for m in -B..=B {
                if m.rem_euclid(4) == 1 && (m % 3 != 0 || m % 9 == 0) {
                    g.put(m);
                }
            }
            g.powers(3, true, |a| a == 4 || a >= 8, |b| b == 0 || b >= 2);
        }
        "D12" => {
            for m in -B..=B {
                if m.rem_euclid(4) == 1 && (m % 3 != 0 || m % 27 == 0) {
                    g.put(m);
                }
            }
            g.powers(3, true, |a| a == 4 || a >= 6, zero_or_at_least(3));
        }
        "Q12" => {
            g.powers(3, true, |a| a == 0 || a == 4 || a >= 6, zero_or_at_least(3));
            g.powers(3, true, |a| a == 5, |b| b == 4 || b >= 6);
            let ks = ps
                .iter()
                .filter(|&&p| p % 12 == 5)
                .copied()
                .chain(ps.iter().filter(|&&p| p % 6 == 5).map(|&p| p * p));
            for k in ks {
                for b in [0, 3, 5] {
                    g.coprime(32 * 3i64.pow(b) * k, 6);
                }
            }
        }
        "Z6xZ2" => z6_z2(&mut g, &ps),
        "Z12" => {
            g.coprime(1, 6);
            g.coprime(27, 2);
            g.linear(144, 1, 0, 1);
            g.coprime(16, 6);
            g.coprime(64, 3);
            for &p in ps.iter().filter(|&&p| p % 12 == 5 || p % 12 == 7 || in_p1(p)) {
                g.coprime(9 * p, 6);
                g.coprime(32 * p, 6);
            }
        }
        "Z3xZ3" => {
            g.linear(1, 9, 1, 1);
            g.linear(1, 9, -1, 1);
            g.linear(729, 1, 0, 1);
        }
        _ => panic!("no oracle for {name}"),
    }
    g.0
}

fn z6_z2(g: &mut Gen, ps: &[i64]) {
    // (a)
    g.linear(27, 4, -1, 1);
    g.linear(16 * 27, 2, -1, 1);
    g.linear(64 * 27, 1, 0, 1);
    // (b)
    for &p in ps.iter().filter(|&&p| p % 12 == 7) {
        g.linear(9, 4, -1, p);
        g.linear(16 * 9, 2, -1, p);
        g.linear(64 * 9, 1, 0, p);
    }
    g.linear(256 * 9, 4, -1, 1);
    g.linear(1024 * 9, 4, -1, 1);
    g.linear(4096 * 9, 2, -1, 1);
    g.linear(16384 * 9, 1, 0, 1);
    // (c)
    g.linear(1, 12, 1, 1);
    g.linear(16, 6, 1, 1);
    g.linear(64, 3, 1, 1);
    let sevens: Vec<i64> = ps.iter().copied().filter(|p| p % 12 == 7).collect();
    let mut ks: Vec<i64> = ps.iter().copied().filter(|&p| in_p1(p)).collect();
    ks.extend(ps.iter().filter(|&&p| p % 12 == 5 && p * p <= B).map(|&p| p * p));
    for (i, &p1) in sevens.iter().enumerate() {
        for &p2 in &sevens[i..] {
            if p1 * p2 <= B {
                ks.push(p1 * p2);
            }
        }
    }
    for k in ks {
        g.linear(1, 12, 5, k);
        g.linear(-16, 6, 1, k);
        g.linear(-64, 3, 1, k);
    }
    for scale in [256, 1024] {
        g.linear(scale, 12, 5, 1);
        for &p in &sevens {
            g.linear(scale, 12, 5, p);
        }
    }
    g.linear(-4096, 6, 1, 1);
    g.linear(-16384, 3, 1, 1);
}

#[test]
fn every_classified_set_matches_its_families() {
    for spec in groupdet::verify::classified_groups() {
        let name = spec.name();
        let want = oracle(&name);
        let got: BTreeSet<i64> = set_window(&spec, B as u64).unwrap().into_iter().collect();
        let missing: Vec<_> = want.difference(&got).take(5).collect();
        let extra: Vec<_> = got.difference(&want).take(5).collect();
        assert!(missing.is_empty() && extra.is_empty(), "{name}: missing {missing:?}, extra {extra:?}");
    }
}

#[test]
fn documented_windows() {
    let z3z3 = set_window(&"Z3xZ3".parse().unwrap(), 20).unwrap();
    assert_eq!(z3z3, [-19, -17, -10, -8, -1, 0, 1, 8, 10, 17, 19]);
    let d8 = set_window(&"D8".parse().unwrap(), 20).unwrap();
    let want: Vec<i64> = (-20..=20).filter(|v: &i64| v.rem_euclid(4) == 1 || *v == 0).collect();
    assert_eq!(d8, want);
    for name in ["Q8", "Z12", "A4"] {
        assert_eq!(set_window(&name.parse().unwrap(), 0).unwrap(), [0]);
    }
}
