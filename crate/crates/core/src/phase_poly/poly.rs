use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Phase-space coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    P,
}

/// `q^q_exp p^p_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub q_exp: u32,
    pub p_exp: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q_exp: 0, p_exp: 0 };

    pub fn new(q_exp: u32, p_exp: u32) -> Self {
        Self { q_exp, p_exp }
    }

    pub fn degree(self) -> u32 {
        self.q_exp + self.p_exp
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.q_exp + other.q_exp, self.p_exp + other.p_exp)
    }

    /// Sort key for canonical printing: higher total degree first, then
    /// higher q power first.
    pub(crate) fn print_key(self) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
        (std::cmp::Reverse(self.degree()), std::cmp::Reverse(self.q_exp))
    }
}

/// Sparse polynomial in the commuting coordinates `q`, `p` over a [`Scalar`]
/// ring. Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq)]
pub struct PhasePoly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> PhasePoly<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: S, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::term(S::one(), Monomial::new(1, 0))
    }

    pub fn p() -> Self {
        Self::term(S::one(), Monomial::new(0, 1))
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Q => Self::q(),
            Var::P => Self::p(),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::constant(S::from_ratio(num, den))
    }

    pub fn imag() -> Self {
        Self::constant(S::imag())
    }

    pub fn hbar() -> Self {
        Self::constant(S::hbar())
    }

    /// Builds from `(coefficient, q power, p power)` triples, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (S, u32, u32)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, a, b) in iter {
            out.add_term(Monomial::new(a, b), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> S {
        self.terms.get(&m).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match v {
                Var::Q => m.q_exp,
                Var::P => m.p_exp,
            })
            .max()
    }

    /// The constant coefficient when the polynomial has no q or p dependence.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(*m, v.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> PhasePoly<T> {
        let mut out = PhasePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Fallible coefficient map; any `None` aborts.
    pub fn try_map_coeffs<T: Scalar, F: Fn(&S) -> Option<T>>(&self, f: F) -> Option<PhasePoly<T>> {
        let mut out = PhasePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Some(out)
    }

    /// Complex-conjugates every coefficient.
    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    /// Exact commutative product.
    pub fn poly_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(*mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.poly_mul(self);
        }
        acc
    }

    /// `∂^order f / ∂var^order`.
    pub fn diff(&self, var: Var, order: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = match var {
                Var::Q => m.q_exp,
                Var::P => m.p_exp,
            };
            if e < order {
                continue;
            }
            // falling factorial e (e-1) ... (e-order+1)
            let mut factor: i64 = 1;
            for k in 0..order {
                factor *= i64::from(e - k);
            }
            let nm = match var {
                Var::Q => Monomial::new(e - order, m.p_exp),
                Var::P => Monomial::new(m.q_exp, e - order),
            };
            out.add_term(nm, c.clone() * S::from_integer(factor));
        }
        out
    }

    /// Mixed derivative `∂_q^a ∂_p^b`.
    pub fn diff_mixed(&self, q_order: u32, p_order: u32) -> Self {
        self.diff(Var::Q, q_order).diff(Var::P, p_order)
    }

    /// Substitutes a polynomial for `q` (Horner on each p-slice).
    pub fn compose_q(&self, replacement: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let t = replacement
                .pow(m.q_exp)
                .poly_mul(&Self::term(c.clone(), Monomial::new(0, m.p_exp)));
            out = out + t;
        }
        out
    }
}

impl<S: Scalar> Default for PhasePoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Debug for PhasePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhasePoly({})", self)
    }
}

impl<S: Scalar> Add for PhasePoly<S> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a, S: Scalar> Add<&'a PhasePoly<S>> for &'a PhasePoly<S> {
    type Output = PhasePoly<S>;

    fn add(self, rhs: &PhasePoly<S>) -> PhasePoly<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Neg for PhasePoly<S> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<S: Scalar> Sub for PhasePoly<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a, S: Scalar> Sub<&'a PhasePoly<S>> for &'a PhasePoly<S> {
    type Output = PhasePoly<S>;

    fn sub(self, rhs: &PhasePoly<S>) -> PhasePoly<S> {
        self.clone() - rhs.clone()
    }
}

/// `*` is the commutative (classical) product; the Moyal product is
/// [`moyal_star`](super::moyal_star).
impl<S: Scalar> Mul for PhasePoly<S> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.poly_mul(&rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a PhasePoly<S>> for &'a PhasePoly<S> {
    type Output = PhasePoly<S>;

    fn mul(self, rhs: &PhasePoly<S>) -> PhasePoly<S> {
        self.poly_mul(rhs)
    }
}

impl<S: Scalar> Zero for PhasePoly<S> {
    fn zero() -> Self {
        PhasePoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for PhasePoly<S> {
    fn one() -> Self {
        PhasePoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    #[test]
    fn products() {
        let q = Poly::q();
        let p = Poly::p();
        assert_eq!(q.poly_mul(&p), Poly::term(crate::HbarScalar::one(), Monomial::new(1, 1)));
        let lhs = (&q + &p).poly_mul(&(&q - &p));
        assert_eq!(lhs, q.pow(2) - p.pow(2));
        assert!(Poly::zero().poly_mul(&(q + p)).is_zero());
    }

    #[test]
    fn derivatives() {
        let q = Poly::q();
        let p = Poly::p();
        assert_eq!(q.pow(2).diff(Var::Q, 1), Poly::rational(2, 1) * q.clone());
        assert_eq!((q.clone() * p.clone()).diff(Var::P, 1), q.clone());
        assert!(q.diff(Var::P, 1).is_zero());
        assert!(q.pow(3).diff(Var::Q, 4).is_zero());
        assert_eq!(q.pow(3).diff(Var::Q, 3), Poly::rational(6, 1));
    }

    #[test]
    fn degrees() {
        let f = Poly::q().pow(3) * Poly::p() + Poly::p().pow(2);
        assert_eq!(f.degree(), Some(4));
        assert_eq!(f.degree_in(Var::P), Some(2));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn compose_q_substitutes() {
        let f = Poly::q().pow(2) + Poly::p();
        let g = f.compose_q(&(Poly::q() + Poly::one()));
        let expect = Poly::q().pow(2) + Poly::rational(2, 1) * Poly::q() + Poly::one() + Poly::p();
        assert_eq!(g, expect);
    }
}
