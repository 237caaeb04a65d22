//! The displayed construction identities, one template and one claimed value
//! each.

use num_bigint::BigInt;
use num_traits::Zero;

use super::classical;
use super::ConstructionIdentity;
use crate::eisenstein::{EisensteinGaussian, EisensteinInt};
use crate::poly::LaurentPoly as P;

type E = EisensteinInt<BigInt>;

fn b(a: i64) -> BigInt {
    BigInt::from(a)
}

fn pow(base: i64, e: u32) -> BigInt {
    num_traits::pow(b(base), e as usize)
}

/// `base + k * (1, 1, ..., 1)`.
pub(crate) fn affine(base: &[i64], k: &BigInt) -> Vec<BigInt> {
    base.iter().map(|&a| b(a) + k).collect()
}

fn p6(terms: &[(i64, i64)]) -> P {
    P::from_terms(6, terms)
}

fn p12(terms: &[(i64, i64)]) -> P {
    P::from_terms(12, terms)
}

/// `h(x) = 1 + x + ... + x^5`.
fn h() -> P {
    P::all_ones(6)
}

fn add(a: &P, c: &P) -> P {
    a + c
}

fn sub(a: &P, c: &P) -> P {
    a - c
}

fn mul(a: &P, c: &P) -> P {
    a * c
}

/// `p + t h`.
fn th(p: &P, t: &BigInt) -> P {
    add(p, &h().scale(t))
}

/// `(A - Bx)(x^3 - 1)(x + 1)`.
fn kab(a: &BigInt, bb: &BigInt) -> P {
    let lin = add(&P::one(6).scale(a), &p6(&[(1, -1)]).scale(bb));
    mul(&mul(&lin, &p6(&[(3, 1), (0, -1)])), &p6(&[(1, 1), (0, 1)]))
}

/// `x^4 + x^2 + 1`.
fn q() -> P {
    p6(&[(4, 1), (2, 1), (0, 1)])
}

/// `(f, g)` laid out as `f + y g` over the order-12 groups.
fn fg(f: P, g: P) -> Vec<BigInt> {
    f.into_coeffs().into_iter().chain(g.into_coeffs()).collect()
}

/// `F(x) = f(x^2) + x g(x^2)` over `Z12`.
fn interleave(f: P, g: P) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); 12];
    for (j, (a, c)) in f.coeffs().iter().zip(g.coeffs()).enumerate() {
        out[2 * j] = a.clone();
        out[2 * j + 1] = c.clone();
    }
    out
}

fn n1(x: E) -> BigInt {
    x.norm()
}

fn e(a: &BigInt, c: &BigInt) -> E {
    E::new(a.clone(), c.clone())
}

fn ei(a: i64, c: i64) -> E {
    E::new(b(a), b(c))
}

fn one_minus_w() -> E {
    ei(1, -1)
}

fn id(
    name: &str,
    groups: &[&str],
    params: &[&'static str],
    template: impl Fn(&[BigInt]) -> Vec<BigInt> + Send + Sync + 'static,
    claimed: impl Fn(&[BigInt]) -> BigInt + Send + Sync + 'static,
) -> ConstructionIdentity {
    ConstructionIdentity::new(name, groups, params, template, claimed)
}

const O8: &[&str] = &["Q8", "D8", "Z4xZ2"];
const O12: &[&str] = &["Q12", "D12", "Z6xZ2"];
const QD12: &[&str] = &["Q12", "D12"];

fn order_eight() -> Vec<ConstructionIdentity> {
    vec![
        id("o8.8m+1", O8, &["m"], |p| affine(&[1, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(8) * &p[0] + 1
        }),
        id("o8.2^8(4k+1)", O8, &["k"], |p| affine(&[2, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(256) * (b(4) * &p[0] + 1)
        }),
        id(
            "o8.-2^8(4k+1)",
            O8,
            &["k"],
            |p| affine(&[-1, 1, -1, 1, 1, 1, 0, 0], &p[0]),
            |p| b(-256) * (b(4) * &p[0] + 1),
        ),
        id("o8.2^9k", O8, &["k"], |p| affine(&[1, 0, 1, 0, -1, -1, 0, 0], &p[0]), |p| {
            b(512) * &p[0]
        }),
        id("D8.8m-3", &["D8"], &["m"], |p| affine(&[0, 0, 0, -1, 0, 0, -1, -1], &p[0]), |p| {
            b(8) * &p[0] - 3
        }),
        // a = 2A, b = 2B + 1, c = 2C + 1, d = 2D + 1
        id(
            "Q8.(8m-3)p^2",
            &["Q8"],
            &["m", "A", "B", "C", "D"],
            |p| {
                let (m, a, bb, c, d) = (&p[0], &p[1], &p[2], &p[3], &p[4]);
                vec![
                    m + a,
                    m + bb,
                    m - a,
                    m - bb - 1,
                    m + c,
                    m + d,
                    m - c - 1,
                    m - d - 1,
                ]
            },
            |p| {
                let sq = |x: BigInt| &x * &x;
                let s = sq(b(2) * &p[1])
                    + sq(b(2) * &p[2] + 1)
                    + sq(b(2) * &p[3] + 1)
                    + sq(b(2) * &p[4] + 1);
                (b(8) * &p[0] - 3) * &s * &s
            },
        ),
    ]
}

fn z2_cubed() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["Z2^3"];
    vec![
        id("Z2^3.8m+1", G, &["m"], |p| affine(&[1, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(8) * &p[0] + 1
        }),
        id("Z2^3.2^8(4m+1)", G, &["m"], |p| affine(&[2, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(256) * (b(4) * &p[0] + 1)
        }),
        // 3 + z + k(1+x)(1+y)(1+z)
        id("Z2^3.2^12(2k+1)", G, &["k"], |p| affine(&[3, 0, 0, 0, 1, 0, 0, 0], &p[0]), |p| {
            b(4096) * (b(2) * &p[0] + 1)
        }),
        // x + y + z - 3 + (1-x)(1-y)(1-z) + k(1+x)(1+y)(1+z)
        id("Z2^3.2^13k", G, &["k"], |p| affine(&[-2, 0, 0, 1, 0, 1, 1, -1], &p[0]), |p| {
            b(8192) * &p[0]
        }),
    ]
}

fn a4() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["A4"];
    let fixed = |name: &str, c: [i64; 12], v: i64| {
        id(name, G, &[], move |_| c.iter().map(|&a| b(a)).collect(), move |_| b(v))
    };
    vec![
        fixed("A4.9", [1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0], 9),
        fixed("A4.-27", [1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0], -27),
        fixed("A4.2^4", [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0], 16),
        fixed("A4.-2^4", [1, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0], -16),
        id(
            "A4.2^8(1+3k)",
            G,
            &["k"],
            |p| affine(&[2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0], &p[0]),
            |p| b(256) * (b(3) * &p[0] + 1),
        ),
        id(
            "A4.-2^8(1+3k)",
            G,
            &["k"],
            |p| affine(&[2, 1, -1, 0, 1, 0, 0, 0, 1, 0, 0, 0], &p[0]),
            |p| b(-256) * (b(3) * &p[0] + 1),
        ),
        id("A4.1+12k", G, &["k"], |p| affine(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(12) * &p[0] + 1
        }),
        id(
            "A4.5+12k",
            G,
            &["k"],
            |p| affine(&[1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0], &p[0]),
            |p| b(12) * &p[0] + 5,
        ),
    ]
}

fn order_twelve() -> Vec<ConstructionIdentity> {
    let mut out = vec![
        id("o12.1+12t", O12, &["t"], |p| fg(th(&P::one(6), &p[0]), th(&P::zero(6), &p[0])), |p| {
            b(12) * &p[0] + 1
        }),
        id(
            "o12.5+12t",
            QD12,
            &["t"],
            |p| {
                let f = p6(&[(0, 1), (1, 1), (4, 1)]);
                let g = p6(&[(0, 1), (3, 1)]);
                fg(th(&f, &p[0]), th(&g, &p[0]))
            },
            |p| b(12) * &p[0] + 5,
        ),
        id(
            "o12.-27(1+4t)",
            O12,
            &["t"],
            |p| fg(th(&P::one(6), &p[0]), th(&p6(&[(0, 1), (3, 1)]), &p[0])),
            |p| b(-27) * (b(4) * &p[0] + 1),
        ),
        id(
            "o12.2^4(1+6t)",
            O12,
            &["t"],
            |p| fg(th(&p6(&[(0, 1), (2, 1)]), &p[0]), th(&P::zero(6), &p[0])),
            |p| b(16) * (b(6) * &p[0] + 1),
        ),
        id(
            "o12.-2^4.27(1+2t)",
            QD12,
            &["t"],
            |p| {
                let f = p6(&[(0, 1), (2, 1)]);
                let g = mul(&f, &p6(&[(0, 1), (3, 1)]));
                fg(th(&f, &p[0]), th(&g, &p[0]))
            },
            |p| b(-432) * (b(2) * &p[0] + 1),
        ),
        id(
            "o12.2^6(1+3t)",
            QD12,
            &["t"],
            |p| fg(th(&p6(&[(0, 1), (1, 1), (2, 1), (4, 1)]), &p[0]), th(&P::zero(6), &p[0])),
            |p| b(64) * (b(3) * &p[0] + 1),
        ),
        id(
            "o12.2^6.27t",
            QD12,
            &["t"],
            |p| fg(th(&p6(&[(0, 1), (2, 1)]), &p[0]), th(&p6(&[(0, -1), (3, -1)]), &p[0])),
            |p| b(1728) * &p[0],
        ),
    ];
    for delta in 0..2u32 {
        let name = format!("Q12.2^5.3^{}", 4 + 2 * delta);
        out.push(id(
            &name,
            &["Q12"],
            &[],
            move |_| {
                let f = add(&p6(&[(0, 1), (1, -1), (5, -1)]), &h());
                let mut corr = p6(&[(2, 1), (0, -1)]);
                if delta == 1 {
                    corr = mul(&corr, &p6(&[(1, 1), (0, 1)]));
                }
                fg(f, add(&q(), &corr))
            },
            move |_| b(32) * pow(3, 4 + 2 * delta),
        ));
    }
    out.push(id(
        "Q12.2^5p",
        &["Q12"],
        &["A", "B"],
        |p| {
            let hm = h().negate_x();
            let f = sub(&add(&P::one(6).scale_i64(-1), &h()), &hm.scale(&p[0]));
            let g = add(&q(), &hm.scale(&p[1]));
            fg(f, g)
        },
        |p| {
            let x = b(6) * &p[0] + 1;
            let y = b(6) * &p[1] + 3;
            b(16) * (&x * &x + &y * &y)
        },
    ));
    out.push(id(
        "Q12.2^5p^2",
        &["Q12"],
        &["A", "B", "C", "D"],
        |p| {
            let f = sub(&add(&P::one(6).scale_i64(-1), &h()), &kab(&p[0], &p[1]));
            let g = sub(&p6(&[(0, 1), (1, 1), (2, 1)]), &kab(&(&p[2] - 1), &p[3]));
            fg(f, g)
        },
        |p| {
            let alpha = ei(-1, 0) + ei(2, 0) * one_minus_w() * e(&p[0], &p[1]);
            let beta = ei(-1, 0) + e(&p[2], &p[3]) * one_minus_w();
            let s = n1(alpha) + b(4) * n1(beta);
            b(32) * &s * &s
        },
    ));
    out.push(id(
        "D12.2^4(5+6t)",
        &["D12"],
        &["t"],
        |p| {
            let a = p6(&[(0, 1), (2, 1)]);
            let f = mul(&a, &p6(&[(0, 1), (1, 1), (4, 1)]));
            let g = mul(&a, &p6(&[(0, 1), (3, 1)]));
            fg(th(&f, &p[0]), th(&g, &p[0]))
        },
        |p| b(16) * (b(6) * &p[0] + 5),
    ));
    out.push(id(
        "D12.-2^6(1+3t)",
        &["D12"],
        &["t"],
        |p| {
            let g = mul(&p6(&[(0, 1), (2, 1)]), &p6(&[(0, 1), (3, 1)]));
            fg(th(&p6(&[(0, 1), (1, -1)]), &p[0]), th(&g, &p[0]))
        },
        |p| b(-64) * (b(3) * &p[0] + 1),
    ));
    out
}

/// `N1(1 - 2w + 4(A + Bw)(1 - w))`.
fn alpha_b(a: &BigInt, c: &BigInt) -> BigInt {
    n1(ei(1, -2) + ei(4, 0) * e(a, c) * one_minus_w())
}

/// `N1(-1 - 2w(1 - w) + 4(A + Bw)(1 - w))`.
pub(crate) fn alpha_k(a: &BigInt, c: &BigInt) -> BigInt {
    n1(ei(-1, 0) - ei(0, 2) * one_minus_w() + ei(4, 0) * e(a, c) * one_minus_w())
}

/// `N1(1 + 2(A + Bw)(1 - w))`.
fn alpha_7(a: &BigInt, c: &BigInt) -> BigInt {
    n1(ei(1, 0) + ei(2, 0) * e(a, c) * one_minus_w())
}

fn z6_z2() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["Z6xZ2"];
    let x1 = || p6(&[(0, 1), (1, 1)]);
    let x2 = || p6(&[(0, 1), (2, 1)]);
    let x3 = || p6(&[(0, 1), (3, 1)]);
    let mut out = vec![
        id(
            "Z6xZ2.-2^4.27(1+2k)",
            G,
            &["k"],
            move |p| fg(th(&mul(&x2(), &x3()), &p[0]), th(&x2(), &p[0])),
            |p| b(-432) * (b(2) * &p[0] + 1),
        ),
        id(
            "Z6xZ2.-2^6.27m",
            G,
            &["m"],
            |p| fg(th(&P::one(6), &p[0]), th(&p6(&[(0, 1), (1, -1), (5, -1)]), &p[0])),
            |p| b(-1728) * &p[0],
        ),
        id(
            "Z6xZ2.-9(1+4m)p",
            G,
            &["A", "B", "m"],
            move |p| {
                let k = kab(&p[0], &p[1]);
                fg(th(&sub(&x1(), &k), &p[2]), th(&sub(&p6(&[(1, 1)]), &k), &p[2]))
            },
            |p| b(-9) * (b(4) * &p[2] + 1) * alpha_b(&p[0], &p[1]),
        ),
        id(
            "Z6xZ2.2^4.9(2m-1)p",
            G,
            &["A", "B", "m"],
            move |p| {
                let k = kab(&p[0], &p[1]);
                let f = th(&sub(&x1(), &k), &(&p[2] - 1));
                let g = th(&sub(&x2(), &k), &-&p[2]);
                fg(f, g)
            },
            |p| b(144) * (b(2) * &p[2] - 1) * alpha_b(&p[0], &p[1]),
        ),
        id(
            "Z6xZ2.-2^6.9mp",
            G,
            &["A", "B", "m"],
            move |p| {
                let k = kab(&p[0], &p[1]);
                let f = th(&sub(&add(&x1(), &q()), &k), &(&p[2] - 1));
                let g = th(&sub(&p6(&[(1, 1)]), &k), &p[2]);
                fg(f, g)
            },
            |p| b(-576) * &p[2] * alpha_b(&p[0], &p[1]),
        ),
        id(
            "Z6xZ2.-2^8.9(1+4m)",
            G,
            &["m"],
            move |p| {
                let f = sub(&x2().scale_i64(2), &q());
                fg(th(&f, &p[0]), th(&x3(), &p[0]))
            },
            |p| b(-9 * 256) * (b(4) * &p[0] + 1),
        ),
        id(
            "Z6xZ2.-2^10.9(1+4m)",
            G,
            &["m"],
            move |p| {
                let f = sub(&p6(&[(0, 1), (2, -1)]), &x3().scale_i64(2));
                let g = add(&p6(&[(4, -1)]), &mul(&p6(&[(2, 1)]), &x3()));
                fg(th(&f, &(&p[0] + 1)), th(&g, &p[0]))
            },
            |p| b(-9 * 1024) * (b(4) * &p[0] + 1),
        ),
        id(
            "Z6xZ2.2^12.9(1+2m)",
            G,
            &["m"],
            move |p| {
                let f = sub(&x2().scale_i64(2), &h().negate_x());
                fg(th(&f, &p[0]), th(&x3(), &p[0]))
            },
            |p| b(9 * 4096) * (b(2) * &p[0] + 1),
        ),
        id(
            "Z6xZ2.-2^14.9m",
            G,
            &["m"],
            move |p| {
                let f = sub(&x2().scale_i64(2), &q());
                fg(th(&f, &p[0]), th(&sub(&x3(), &q()), &p[0]))
            },
            |p| b(-9 * 16384) * &p[0],
        ),
        id(
            "Z6xZ2.2^6(1+3m)",
            G,
            &["m"],
            |p| fg(th(&q(), &p[0]), th(&P::one(6), &p[0])),
            |p| b(64) * (b(3) * &p[0] + 1),
        ),
    ];
    // type-2 families; x(x^2+x+1), x(x+1), x^2(1-x^3)
    let c3f = || p6(&[(1, 1), (2, 1), (3, 1)]);
    let c3g = || p6(&[(1, 1), (2, 1)]);
    out.push(id(
        "Z6xZ2.(5+12m)k",
        G,
        &["A", "B", "m"],
        move |p| {
            let k = kab(&p[0], &p[1]);
            fg(th(&sub(&c3f(), &k), &p[2]), th(&sub(&c3g(), &k), &p[2]))
        },
        |p| (b(12) * &p[2] + 5) * alpha_k(&p[0], &p[1]),
    ));
    out.push(id(
        "Z6xZ2.-2^4(1+6m)k",
        G,
        &["A", "B", "m"],
        move |p| {
            let k = kab(&p[0], &p[1]);
            let f = sub(&p6(&[(2, 1), (5, -1)]), &k);
            fg(th(&f, &p[2]), th(&sub(&c3g(), &k), &p[2]))
        },
        |p| b(-16) * (b(6) * &p[2] + 1) * alpha_k(&p[0], &p[1]),
    ));
    out.push(id(
        "Z6xZ2.-2^6(1+3m)k",
        G,
        &["A", "B", "m"],
        move |p| {
            let k = kab(&p[0], &p[1]);
            let f = th(&sub(&c3f(), &k), &p[2]);
            let g = th(&sub(&sub(&c3g(), &q()), &k), &-&p[2]);
            fg(f, g)
        },
        |p| b(-64) * (b(3) * &p[2] + 1) * alpha_k(&p[0], &p[1]),
    ));
    let x2x1 = || p6(&[(0, 1), (1, 1), (2, 1)]);
    let x2m = || p6(&[(0, 1), (1, -1), (2, 1)]);
    out.push(id(
        "Z6xZ2.-2^14(1+3m)",
        G,
        &["m"],
        move |p| fg(th(&x2x1(), &p[0]), th(&x2m(), &p[0])),
        |p| b(-16384) * (b(3) * &p[0] + 1),
    ));
    out.push(id(
        "Z6xZ2.-2^12(1+6m)",
        G,
        &["m"],
        move |p| {
            let f = th(&sub(&x2x1(), &q()), &p[0]);
            let g = th(&sub(&x2m(), &q()), &-&p[0]);
            fg(f, g)
        },
        |p| b(-4096) * (b(6) * &p[0] + 1),
    ));
    // The 2^8 and 2^10 families, optionally shifted by -x(A - Bx)(x^3-1)(1+x)
    // to carry a prime p = 7 mod 12.
    let hi8 = move |p: &[BigInt], kk: &P| {
        fg(th(&add(&x2x1(), kk), &p[0]), th(&add(&x3(), kk), &p[0]))
    };
    let hi10 = move |p: &[BigInt], kk: &P| {
        let f = th(&add(&p6(&[(0, -1), (3, -2)]), kk), &-&p[0]);
        let g = th(&add(&p6(&[(1, 1), (2, 1)]), kk), &p[0]);
        fg(f, g)
    };
    let shift = |a: &BigInt, c: &BigInt| mul(&p6(&[(1, -1)]), &kab(a, c));
    out.push(id(
        "Z6xZ2.2^8(5+12m)",
        G,
        &["m"],
        move |p| hi8(p, &P::zero(6)),
        |p| b(256) * (b(12) * &p[0] + 5),
    ));
    out.push(id(
        "Z6xZ2.2^10(5+12m)",
        G,
        &["m"],
        move |p| hi10(p, &P::zero(6)),
        |p| b(1024) * (b(12) * &p[0] + 5),
    ));
    out.push(id(
        "Z6xZ2.2^8(5+12m)p",
        G,
        &["A", "B", "m"],
        move |p| hi8(&p[2..], &shift(&p[0], &p[1])),
        |p| b(256) * (b(12) * &p[2] + 5) * alpha_7(&p[0], &p[1]),
    ));
    out.push(id(
        "Z6xZ2.2^10(5+12m)p",
        G,
        &["A", "B", "m"],
        move |p| hi10(&p[2..], &shift(&p[0], &p[1])),
        |p| b(1024) * (b(12) * &p[2] + 5) * alpha_7(&p[0], &p[1]),
    ));
    out
}

fn z12() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["Z12"];
    let k12 = || P::all_ones(12);
    let plus = move |f: P, m: &BigInt| add(&f, &k12().scale(m)).into_coeffs();
    // (x - 1)(x^4 + x^2 + 1) in the half-variable
    let cyc = || mul(&p6(&[(1, 1), (0, -1)]), &q());
    let mut out = vec![
        id("Z12.-1", G, &[], |_| p12(&[(1, 1)]).into_coeffs(), |_| b(-1)),
        id("Z12.1+12m", G, &["m"], move |p| plus(P::one(12), &p[0]), |p| b(12) * &p[0] + 1),
        id(
            "Z12.5+12m",
            G,
            &["m"],
            move |p| plus(p12(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]), &p[0]),
            |p| b(12) * &p[0] + 5,
        ),
        id(
            "Z12.27(1+4t)",
            G,
            &["t"],
            move |p| plus(p12(&[(0, 1), (3, 1), (6, 1)]), &p[0]),
            |p| b(27) * (b(4) * &p[0] + 1),
        ),
        id(
            "Z12.2^4(1+6m)",
            G,
            &["m"],
            move |p| plus(p12(&[(0, 1), (4, 1)]), &p[0]),
            |p| b(16) * (b(6) * &p[0] + 1),
        ),
        id(
            "Z12.2^6(1+3m)",
            G,
            &["m"],
            move |p| {
                let sq = p12(&[(0, 1), (4, 2), (8, 1)]);
                let alt = P::all_ones(6).negate_x();
                let alt12 = P::new(12, alt.coeffs().iter().flat_map(|a| [a.clone(), BigInt::zero()]));
                plus(sub(&sq, &alt12), &p[0])
            },
            |p| b(64) * (b(3) * &p[0] + 1),
        ),
        id("Z12.-144m", G, &["m"], move |p| plus(p12(&[(1, 1), (0, -1)]), &p[0]), |p| {
            b(-144) * &p[0]
        }),
    ];
    out.push(id(
        "Z12.9(1+4m)p5",
        G,
        &["A", "B", "m"],
        move |p| {
            let f = sub(&p6(&[(0, 1), (2, 1)]), &cyc().scale(&p[1]));
            let g = sub(&P::one(6), &cyc().scale(&p[0]));
            interleave(th(&f, &p[2]), th(&g, &p[2]))
        },
        |p| {
            let x = b(6) * &p[0] + 1;
            let y = b(6) * &p[1] + 2;
            b(9) * (b(4) * &p[2] + 1) * (&x * &x + &y * &y)
        },
    ));
    out.push(id(
        "Z12.9(1+4m)p7",
        G,
        &["C", "D", "m"],
        move |p| {
            let lin = add(&P::one(6).scale(&p[0]), &p6(&[(1, 1)]).scale(&p[1]));
            let t = mul(&mul(&lin, &p6(&[(0, 1), (1, -1)])), &p6(&[(0, 1), (3, 1)]));
            let f = add(&p6(&[(0, 1), (3, 1)]), &t);
            let g = add(&p6(&[(1, 1)]), &mul(&p6(&[(1, 1)]), &t));
            interleave(th(&f, &p[2]), th(&g, &p[2]))
        },
        |p| {
            let a = ei(3, 0) + ei(4, 0) * one_minus_w() * e(&p[0], &p[1]);
            b(3) * (b(4) * &p[2] + 1) * n1(a)
        },
    ));
    out.push(id(
        "Z12.9(1+4m)pP1",
        G,
        &["A", "B", "C", "D", "m"],
        move |p| {
            let f = sub(&p6(&[(0, 1), (1, 1)]), &kab(&p[0], &p[1]));
            let g = sub(&p6(&[(1, 1)]), &mul(&p6(&[(1, 1)]), &kab(&p[2], &p[3])));
            interleave(th(&f, &p[4]), th(&g, &p[4]))
        },
        |p| {
            let re = (ei(1, 0) + ei(2, 0) * e(&p[0], &p[1])) * one_minus_w();
            let im = ei(1, 0) + ei(2, 0) * e(&p[2], &p[3]) * one_minus_w();
            b(9) * (b(4) * &p[4] + 1) * EisensteinGaussian::new(re, im).norm()
        },
    ));
    out.push(id(
        "Z12.32(1+6m)p5",
        G,
        &["A", "B", "m"],
        move |p| {
            let f = add(&p6(&[(0, 1), (2, 1)]), &cyc().scale(&p[0]));
            let g = mul(&p6(&[(1, 1)]), &cyc().scale(&p[1]));
            interleave(th(&f, &p[2]), th(&g, &p[2]))
        },
        |p| {
            let x = b(1) - b(3) * &p[0];
            let y = b(3) * &p[1];
            b(16) * (b(6) * &p[2] + 1) * (&x * &x + &y * &y)
        },
    ));
    out.push(id(
        "Z12.32(1+6m)p7",
        G,
        &["A", "B", "m"],
        move |p| {
            let lin = add(&P::one(6).scale(&p[0]), &p6(&[(1, 1)]).scale(&p[1]));
            let t = mul(&mul(&lin, &p6(&[(0, 1), (3, 1)])), &p6(&[(0, 1), (1, -1)]));
            let f = add(&p6(&[(0, 1), (2, 1)]), &t);
            let g = add(&p6(&[(1, 1), (2, -1)]), &mul(&p6(&[(1, 1)]), &t));
            interleave(th(&f, &p[2]), th(&g, &p[2]))
        },
        |p| {
            let inner = e(&(b(2) * &p[0] + 1), &(b(2) * &p[1]));
            let a = ei(-1, 0) + ei(2, 0) * inner * one_minus_w();
            b(32) * (b(6) * &p[2] + 1) * n1(a)
        },
    ));
    out.push(id(
        "Z12.32(1+6m)pP1",
        G,
        &["A", "B", "C", "D", "m"],
        move |p| {
            let f = sub(&p6(&[(2, 1), (4, 1)]), &kab(&p[0], &p[1]));
            let x3m = p6(&[(4, 1), (1, -1)]);
            let g = add(&x3m, &mul(&p6(&[(1, 1)]), &kab(&p[2], &p[3])));
            interleave(th(&f, &p[4]), th(&g, &p[4]))
        },
        |p| {
            let re = ei(-1, 0) + ei(2, 0) * e(&p[0], &p[1]) * one_minus_w();
            let im = ei(2, 0) + ei(2, 0) * e(&p[2], &p[3]) * one_minus_w();
            b(32) * (b(6) * &p[4] + 1) * EisensteinGaussian::new(re, im).norm()
        },
    ));
    out
}

fn z3_z3() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["Z3xZ3"];
    vec![
        // (-1)^s + m(x^2+x+1)(y^2+y+1)
        id(
            "Z3xZ3.9m+-1",
            G,
            &["m", "s"],
            |p| {
                let sign = if p[1].bit(0) { -1 } else { 1 };
                affine(&[sign, 0, 0, 0, 0, 0, 0, 0, 0], &p[0])
            },
            |p| {
                let sign = if p[1].bit(0) { -1 } else { 1 };
                b(9) * &p[0] + sign
            },
        ),
        id("Z3xZ3.3^6(1+3m)", G, &["m"], |p| affine(&[1, 2, 0, 0, 0, 0, 0, 0, 0], &p[0]), |p| {
            b(729) * (b(3) * &p[0] + 1)
        }),
        // 1 + 2x - x(y^2+y+1) + m(...)
        id(
            "Z3xZ3.3^7m",
            G,
            &["m"],
            |p| affine(&[1, 1, 0, 0, -1, 0, 0, -1, 0], &p[0]),
            |p| b(2187) * &p[0],
        ),
    ]
}

fn klein() -> Vec<ConstructionIdentity> {
    const G: &[&str] = &["Z2xZ2", "D4"];
    vec![
        id("V4.4m+1", G, &["m"], |p| affine(&[1, 0, 0, 0], &p[0]), |p| b(4) * &p[0] + 1),
        id("V4.2^4(2m+1)", G, &["m"], |p| affine(&[2, 0, 0, 0], &p[0]), |p| {
            b(16) * (b(2) * &p[0] + 1)
        }),
        // 2 - x - y + m(1+x)(1+y)
        id("V4.2^6m", G, &["m"], |p| affine(&[2, -1, -1, 0], &p[0]), |p| b(64) * &p[0]),
    ]
}

/// Every identity, displayed and tabulated.
pub(crate) fn all() -> Vec<ConstructionIdentity> {
    let mut out = Vec::new();
    out.extend(order_eight());
    out.extend(z2_cubed());
    out.extend(a4());
    out.extend(order_twelve());
    out.extend(z6_z2());
    out.extend(z12());
    out.extend(z3_z3());
    out.extend(klein());
    out.extend(classical::identities());
    debug_assert!(out.iter().all(|i| !i.groups.is_empty()));
    out
}
