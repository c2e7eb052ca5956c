use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{gaussian_atoms, Atom, GaussianRational, Scalar};

/// Finite Laurent series `Σ_k c_k ħ^k` in a formal ħ with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HbarScalar {
    terms: BTreeMap<i32, GaussianRational>,
}

impl HbarScalar {
    pub fn from_gaussian(c: GaussianRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · ħ^power`.
    pub fn monomial(c: GaussianRational, power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(power, c);
        }
        Self { terms }
    }

    pub fn hbar_pow(power: i32) -> Self {
        Self::monomial(GaussianRational::one(), power)
    }

    pub fn rational(r: BigRational) -> Self {
        Self::from_gaussian(Complex::new(r, BigRational::zero()))
    }

    /// Coefficient of `ħ^power`.
    pub fn coeff(&self, power: i32) -> GaussianRational {
        self.terms.get(&power).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Nonzero `(power, coefficient)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_power(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_power(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `Some((power, c))` when the value is a single term `c ħ^power`.
    pub fn as_monomial(&self) -> Option<(i32, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    /// Multiplicative inverse, defined only for nonzero single-term values.
    pub fn inverse_monomial(&self) -> Option<Self> {
        let (k, c) = self.as_monomial()?;
        Some(Self::monomial(c.inv(), -k))
    }

    /// Evaluates at a rational value of ħ. Negative powers need `hbar ≠ 0`.
    pub fn substitute(&self, hbar: &BigRational) -> Option<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (&k, c) in &self.terms {
            let h = if k >= 0 {
                num_traits::pow(hbar.clone(), k as usize)
            } else {
                if hbar.is_zero() {
                    return None;
                }
                num_traits::pow(hbar.recip(), (-k) as usize)
            };
            acc = acc + c.clone() * Complex::new(h, BigRational::zero());
        }
        Some(acc)
    }

    /// Multiplies by `ħ^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
        }
    }

    fn add_term(&mut self, power: i32, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(GaussianRational::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }
}

impl fmt::Debug for HbarScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({} + {}i)ħ^{}", c.re, c.im, k))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Zero for HbarScalar {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for HbarScalar {
    fn one() -> Self {
        Self::hbar_pow(0)
    }
}

impl<'a> Add<&'a HbarScalar> for &'a HbarScalar {
    type Output = HbarScalar;

    fn add(self, rhs: &HbarScalar) -> HbarScalar {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Add for HbarScalar {
    type Output = HbarScalar;

    fn add(mut self, rhs: HbarScalar) -> HbarScalar {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl AddAssign for HbarScalar {
    fn add_assign(&mut self, rhs: HbarScalar) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Neg for HbarScalar {
    type Output = HbarScalar;

    fn neg(self) -> HbarScalar {
        HbarScalar {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for HbarScalar {
    type Output = HbarScalar;

    fn sub(self, rhs: HbarScalar) -> HbarScalar {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a HbarScalar> for &'a HbarScalar {
    type Output = HbarScalar;

    fn mul(self, rhs: &HbarScalar) -> HbarScalar {
        let mut out = HbarScalar::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for HbarScalar {
    type Output = HbarScalar;

    fn mul(self, rhs: HbarScalar) -> HbarScalar {
        &self * &rhs
    }
}

impl Scalar for HbarScalar {
    fn from_rational(r: &BigRational) -> Self {
        Self::rational(r.clone())
    }

    fn imag() -> Self {
        Self::from_gaussian(GaussianRational::imag())
    }

    fn hbar() -> Self {
        Self::hbar_pow(1)
    }

    fn conj(&self) -> Self {
        HbarScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    fn is_hbar_free(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        for (&k, c) in self.terms.iter().rev() {
            gaussian_atoms(c, k, &mut out);
        }
        out
    }
}
