use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::blade::Blade;
use super::MAX_DIM;
use crate::error::{Error, Result};
use crate::phase_poly::PhasePoly;
use crate::scalar::Scalar;

/// Multivector over `dim` Grassmann generators with phase-space polynomial
/// coefficients. Zero coefficients are never stored.
///
/// Sums of multivectors over different generator counts are formed in the
/// larger space; products require equal counts.
#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    dim: usize,
    terms: BTreeMap<Blade, PhasePoly<S>>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: PhasePoly<S>) -> Self {
        Self::blade(dim, Blade::SCALAR, c)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, PhasePoly::one())
    }

    /// `c · blade`. Panics if the blade does not fit in `dim` generators.
    pub fn blade(dim: usize, blade: Blade, c: PhasePoly<S>) -> Self {
        assert!(dim <= MAX_DIM && blade.span() <= dim, "blade {blade} outside {dim} generators");
        let mut out = Self::zero(dim);
        out.add_term(blade, c);
        out
    }

    /// The 0-based generator `ζ_index` with unit coefficient.
    pub fn generator(dim: usize, index: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::TooManyGenerators(dim));
        }
        if index >= dim {
            return Err(Error::GeneratorOutOfRange { index, dim });
        }
        Ok(Self::blade(dim, Blade::generator(index), PhasePoly::one()))
    }

    /// Grade-1 element `Σ c_i ζ_i`.
    pub fn vector(components: Vec<PhasePoly<S>>) -> Self {
        let dim = components.len();
        let mut out = Self::zero(dim);
        for (i, c) in components.into_iter().enumerate() {
            out.add_term(Blade::generator(i), c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &PhasePoly<S>)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: Blade) -> PhasePoly<S> {
        self.terms.get(&blade).cloned().unwrap_or_else(PhasePoly::zero)
    }

    /// `⟨A⟩₀` as a polynomial.
    pub fn scalar_part(&self) -> PhasePoly<S> {
        self.coeff(Blade::SCALAR)
    }

    pub fn add_term(&mut self, blade: Blade, c: PhasePoly<S>) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// `⟨A⟩_k`.
    pub fn grade_project(&self, k: u32) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn is_pure_grade(&self, k: u32) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    /// Component list of a grade-1 element.
    pub fn vector_components(&self) -> Result<Vec<PhasePoly<S>>> {
        if !self.is_pure_grade(1) {
            return Err(Error::NotAVector { grades: self.grades() });
        }
        Ok((0..self.dim).map(|i| self.coeff(Blade::generator(i))).collect())
    }

    /// Multiplies every coefficient by `c` with the commutative product.
    pub fn scale_poly(&self, c: &PhasePoly<S>) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, v) in &self.terms {
            out.add_term(*b, v.poly_mul(c));
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, v) in &self.terms {
            out.add_term(*b, v.scale(c));
        }
        out
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&PhasePoly<S>) -> PhasePoly<T>>(&self, f: F) -> Multivector<T> {
        let mut out = Multivector::zero(self.dim);
        for (b, v) in &self.terms {
            out.add_term(*b, f(v));
        }
        out
    }

    /// Grassmann (exterior) product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                if let Some((sign, b)) = ba.wedge(*bb) {
                    let c = ca.poly_mul(cb);
                    out.add_term(b, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Re-embeds in a space with more generators.
    pub fn with_dim(&self, dim: usize) -> Self {
        assert!(dim >= self.dim && dim <= MAX_DIM);
        Self {
            dim,
            terms: self.terms.clone(),
        }
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector<{}>({})", self.dim, self)
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let dim = self.dim.max(rhs.dim);
        let mut out = self.with_dim(dim);
        for (b, c) in rhs.terms {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, S: Scalar> Add<&'a Multivector<S>> for &'a Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            dim: self.dim,
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a, S: Scalar> Sub<&'a Multivector<S>> for &'a Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.clone() - rhs.clone()
    }
}
