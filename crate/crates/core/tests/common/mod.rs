#![allow(dead_code)]

use moyal_clifford::{Blade, GaussianRational, HbarScalar, Metric, Multivector, Mv, Poly};
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn small_rational(r: &mut impl Rng) -> BigRational {
    ratio(r.gen_range(-5..=5), r.gen_range(1..=4))
}

pub fn gaussian(r: &mut impl Rng) -> GaussianRational {
    let im = if r.gen_bool(0.5) { small_rational(r) } else { ratio(0, 1) };
    Complex::new(small_rational(r), im)
}

/// Coefficient `a + b ħ` with Gaussian-rational `a`, `b`.
pub fn hbar_scalar(r: &mut impl Rng) -> HbarScalar {
    let mut c = HbarScalar::from_gaussian(gaussian(r));
    if r.gen_bool(0.3) {
        c = c + HbarScalar::monomial(gaussian(r), 1);
    }
    c
}

pub fn poly(r: &mut impl Rng, max_deg: u32, max_terms: usize) -> Poly {
    let n = r.gen_range(1..=max_terms);
    Poly::from_terms((0..n).map(|_| {
        let d = r.gen_range(0..=max_deg);
        let a = r.gen_range(0..=d);
        (hbar_scalar(r), a, d - a)
    }))
}

/// Rational polynomial in `q` of degree at most `max_deg`.
pub fn superpotential(r: &mut impl Rng, max_deg: u32) -> Poly {
    let deg = r.gen_range(1..=max_deg);
    let mut terms = Vec::new();
    for k in 0..=deg {
        if r.gen_bool(0.6) {
            terms.push((HbarScalar::rational(small_rational(r)), k, 0));
        }
    }
    let mut w = Poly::from_terms(terms);
    if w.degree_in(moyal_clifford::Var::Q).unwrap_or(0) == 0 {
        w = w + Poly::q().pow(deg).scale(&HbarScalar::rational(ratio(r.gen_range(1..=3), 1)));
    }
    w
}

pub fn mv(r: &mut impl Rng, dim: usize, max_deg: u32, max_blades: usize) -> Mv {
    let mut out = Multivector::zero(dim);
    for _ in 0..r.gen_range(1..=max_blades) {
        let blade = Blade::from_bits(r.gen_range(0..(1u32 << dim)));
        out.add_term(blade, poly(r, max_deg, 2));
    }
    out
}

/// Random symmetric rational metric, possibly degenerate or indefinite.
pub fn metric(r: &mut impl Rng, dim: usize) -> Metric {
    let mut rows = vec![vec![ratio(0, 1); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v = if i == j || r.gen_bool(0.4) { ratio(r.gen_range(-2..=2), r.gen_range(1..=2)) } else { ratio(0, 1) };
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
    }
    Metric::new(rows).expect("symmetric")
}

pub fn diagonal_metric(r: &mut impl Rng, dim: usize) -> Metric {
    Metric::diagonal((0..dim).map(|_| ratio(r.gen_range(-2..=2), r.gen_range(1..=2))).collect()).expect("diagonal")
}

prop_compose! {
    pub fn arb_scalar()(re in -4i64..=4, im in -4i64..=4, den in 1i64..=3, h in 0i32..=1) -> HbarScalar {
        HbarScalar::monomial(Complex::new(ratio(re, den), ratio(im, den)), h)
    }
}

prop_compose! {
    /// Polynomial with up to `terms` monomials of total degree at most `deg`.
    pub fn arb_poly(deg: u32, terms: usize)(
        raw in prop::collection::vec((arb_scalar(), 0..=deg, 0..=deg), 0..=terms)
    ) -> Poly {
        Poly::from_terms(raw.into_iter().map(|(c, a, b)| {
            let b = b.min(deg - a.min(deg));
            (c, a.min(deg), b)
        }))
    }
}

prop_compose! {
    /// Real rational polynomial, ħ-free.
    pub fn arb_real_poly(deg: u32, terms: usize)(
        raw in prop::collection::vec((-4i64..=4, 1i64..=3, 0..=deg, 0..=deg), 0..=terms)
    ) -> Poly {
        Poly::from_terms(raw.into_iter().map(|(n, d, a, b)| {
            (HbarScalar::rational(ratio(n, d)), a, b.min(deg - a))
        }))
    }
}
