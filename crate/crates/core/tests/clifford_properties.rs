mod common;

use common::{diagonal_metric, gaussian, metric, mv, poly, ratio, rng};
use moyal_clifford::{Blade, CliffordAlgebra, GaussianRational, HbarScalar, Metric, Multivector, MvQ, Poly, PolyQ, Scalar};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Basis product for a diagonal metric by sorting the concatenated index
/// list and contracting adjacent repeats.
fn diagonal_basis_product(metric: &Metric, a: Blade, b: Blade) -> (BigRational, Blade) {
    let mut idx: Vec<usize> = a.indices().chain(b.indices()).collect();
    let mut sign = 1i64;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let mut coeff = BigRational::from_integer(sign.into());
    let mut bits = 0u32;
    let mut k = 0;
    while k < idx.len() {
        if k + 1 < idx.len() && idx[k] == idx[k + 1] {
            coeff *= metric.get(idx[k], idx[k]).clone();
            k += 2;
        } else {
            bits |= 1 << idx[k];
            k += 1;
        }
    }
    (coeff, Blade::from_bits(bits))
}

#[test]
fn clifford_star_is_associative_for_random_metrics() {
    let mut r = rng(11);
    for _ in 0..200 {
        let dim = r.gen_range(1..=4);
        let alg = CliffordAlgebra::new(metric(&mut r, dim));
        let (a, b, c) = (mv(&mut r, dim, 1, 4), mv(&mut r, dim, 1, 4), mv(&mut r, dim, 1, 4));
        let left = alg.clifford_star(&alg.clifford_star(&a, &b).unwrap(), &c).unwrap();
        let right = alg.clifford_star(&a, &alg.clifford_star(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right, "metric {:?}", alg.metric());
    }
}

#[test]
fn moyal_clifford_star_is_associative() {
    let mut r = rng(12);
    for _ in 0..60 {
        let dim = r.gen_range(1..=4);
        let alg = CliffordAlgebra::new(metric(&mut r, dim));
        let (a, b, c) = (mv(&mut r, dim, 2, 3), mv(&mut r, dim, 2, 3), mv(&mut r, dim, 2, 3));
        let left = alg.moyal_clifford_star(&alg.moyal_clifford_star(&a, &b).unwrap(), &c).unwrap();
        let right = alg.moyal_clifford_star(&a, &alg.moyal_clifford_star(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn diagonal_metrics_match_sorting_oracle() {
    let mut r = rng(13);
    for _ in 0..20 {
        let dim = r.gen_range(1..=4);
        let m = diagonal_metric(&mut r, dim);
        let alg = CliffordAlgebra::new(m.clone());
        for x in 0..(1u32 << dim) {
            for y in 0..(1u32 << dim) {
                let (a, b) = (Blade::from_bits(x), Blade::from_bits(y));
                let (c, blade) = diagonal_basis_product(&m, a, b);
                let expected: Vec<(Blade, BigRational)> = if c.is_zero() { vec![] } else { vec![(blade, c)] };
                assert_eq!(alg.basis_product(a, b), expected.as_slice(), "{a} {b}");
            }
        }
    }
}

#[test]
fn zero_metric_gives_wedge() {
    let mut r = rng(14);
    for _ in 0..100 {
        let dim = r.gen_range(1..=4);
        let alg = CliffordAlgebra::new(Metric::zero(dim).unwrap());
        let (a, b) = (mv(&mut r, dim, 2, 4), mv(&mut r, dim, 2, 4));
        assert_eq!(alg.clifford_star(&a, &b).unwrap(), a.wedge(&b).unwrap());
    }
}

#[test]
fn vectors_anticommute_to_metric() {
    let mut r = rng(15);
    for _ in 0..100 {
        let dim = r.gen_range(1..=4);
        let m = metric(&mut r, dim);
        let alg = CliffordAlgebra::new(m.clone());
        let ac: Vec<Poly> = (0..dim).map(|_| poly(&mut r, 2, 2)).collect();
        let bc: Vec<Poly> = (0..dim).map(|_| poly(&mut r, 2, 2)).collect();
        let (a, b) = (Multivector::vector(ac.clone()), Multivector::vector(bc.clone()));
        let mut dot = Poly::zero();
        for i in 0..dim {
            for j in 0..dim {
                dot = dot + ac[i].poly_mul(&bc[j]).scale(&HbarScalar::rational(m.get(i, j).clone()));
            }
        }
        let sym = alg.star_anticommutator(&a, &b).unwrap();
        assert_eq!(sym, Multivector::scalar(dim, dot.scale(&HbarScalar::from_integer(2))));
        assert_eq!(alg.dot(&a, &b).unwrap(), dot);
    }
}

type Mat = [[GaussianRational; 2]; 2];

fn c(re: i64, im: i64) -> GaussianRational {
    Complex::new(ratio(re, 1), ratio(im, 1))
}

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let mut out: Mat = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
        }
    }
    out
}

/// 1 → I, e1 → σ1, e2 → σ2, e1e2 → σ1σ2 = iσ3.
fn to_matrix(a: &MvQ) -> Mat {
    let basis: [Mat; 4] = [
        [[c(1, 0), c(0, 0)], [c(0, 0), c(1, 0)]],
        [[c(0, 0), c(1, 0)], [c(1, 0), c(0, 0)]],
        [[c(0, 0), c(0, -1)], [c(0, 1), c(0, 0)]],
        [[c(0, 1), c(0, 0)], [c(0, 0), c(0, -1)]],
    ];
    let mut out: Mat = Default::default();
    for (blade, coeff) in a.terms() {
        let k = coeff.as_constant().expect("constant coefficient");
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = &out[i][j] + &k * &basis[blade.bits() as usize][i][j];
            }
        }
    }
    out
}

fn random_constant_mv(r: &mut impl Rng) -> MvQ {
    let mut out = Multivector::zero(2);
    for bits in 0..4 {
        if r.gen_bool(0.7) {
            out.add_term(Blade::from_bits(bits), PolyQ::constant(gaussian(r)));
        }
    }
    out
}

#[test]
fn plane_algebra_is_pauli_matrices() {
    let alg = CliffordAlgebra::euclidean_plane();
    let mut r = rng(16);
    for _ in 0..200 {
        let (a, b) = (random_constant_mv(&mut r), random_constant_mv(&mut r));
        let prod = alg.clifford_star(&a, &b).unwrap();
        assert_eq!(to_matrix(&prod), mat_mul(&to_matrix(&a), &to_matrix(&b)));
    }
    assert_eq!(to_matrix(&MvQ::one(2))[0][0], GaussianRational::one());
}

#[test]
fn metric_must_match_operands() {
    let alg = CliffordAlgebra::euclidean_plane();
    let a = Multivector::<HbarScalar>::generator(3, 2).unwrap();
    assert!(alg.clifford_star(&a, &a).is_err());
}
