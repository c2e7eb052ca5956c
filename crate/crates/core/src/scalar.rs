//! Coefficient rings.
//!
//! Every algebraic structure in this crate is generic over a [`Scalar`]: a
//! commutative ring that contains the Gaussian rationals, an imaginary unit
//! and a value for ħ. The exact ring used throughout is
//! [`HbarScalar`](crate::HbarScalar), where ħ stays a formal symbol. The
//! `Complex<BigRational>` and `Complex<f64>`/`Complex<f32>` instances evaluate
//! in units where ħ = 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `a + b i` with `a, b ∈ ℚ`.
pub type GaussianRational = Complex<BigRational>;

/// A commutative coefficient ring for phase-space polynomials.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The imaginary unit.
    fn imag() -> Self;

    /// Planck's constant: a formal symbol for exact rings, `1` otherwise.
    fn hbar() -> Self;

    /// Complex conjugation (i → −i, ħ fixed).
    fn conj(&self) -> Self;

    /// Whether the value is free of ħ. Rings that evaluate ħ numerically
    /// cannot tell and report `true`.
    fn is_hbar_free(&self) -> bool {
        true
    }

    /// Decomposition into printable atoms `±m · [i] · ħ^k`, in canonical order.
    fn atoms(&self) -> Vec<Atom>;
}

/// One printable summand of a scalar: `±magnitude · [i] · ħ^hbar_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub negative: bool,
    /// Absolute value, already formatted (`3`, `(1/2)`, `0.25`).
    pub magnitude: String,
    /// Magnitude equals one and may be elided next to other factors.
    pub unit: bool,
    pub imaginary: bool,
    pub hbar_power: i32,
}

pub(crate) fn rational_magnitude(r: &BigRational) -> (bool, String, bool) {
    let negative = r.is_negative();
    let a = r.abs();
    let unit = a.is_one();
    let text = if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("({}/{})", a.numer(), a.denom())
    };
    (negative, text, unit)
}

pub(crate) fn gaussian_atoms(c: &GaussianRational, hbar_power: i32, out: &mut Vec<Atom>) {
    for (part, imaginary) in [(&c.re, false), (&c.im, true)] {
        if part.is_zero() {
            continue;
        }
        let (negative, magnitude, unit) = rational_magnitude(part);
        out.push(Atom {
            negative,
            magnitude,
            unit,
            imaginary,
            hbar_power,
        });
    }
}

impl Scalar for GaussianRational {
    fn from_rational(r: &BigRational) -> Self {
        Complex::new(r.clone(), BigRational::zero())
    }

    fn imag() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }

    fn hbar() -> Self {
        Self::one()
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        gaussian_atoms(self, 0, &mut out);
        out
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for Complex<$t> {
            fn from_rational(r: &BigRational) -> Self {
                let v = r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN);
                Complex::new(v as $t, 0.0)
            }

            fn imag() -> Self {
                Complex::new(0.0, 1.0)
            }

            fn hbar() -> Self {
                Complex::new(1.0, 0.0)
            }

            fn conj(&self) -> Self {
                Complex::conj(self)
            }

            fn atoms(&self) -> Vec<Atom> {
                let mut out = Vec::new();
                for (part, imaginary) in [(self.re, false), (self.im, true)] {
                    if part == 0.0 {
                        continue;
                    }
                    out.push(Atom {
                        negative: part < 0.0,
                        magnitude: format!("{}", part.abs()),
                        unit: part.abs() == 1.0,
                        imaginary,
                        hbar_power: 0,
                    });
                }
                out
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

pub(crate) fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `n!` as an exact rational.
pub(crate) fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    BigRational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`.
pub(crate) fn binomial(n: u32, k: u32) -> BigRational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_atoms_split_real_and_imaginary() {
        let c = GaussianRational::new(rational(-1, 2), rational(3, 1));
        let atoms = c.atoms();
        assert_eq!(atoms.len(), 2);
        assert!(atoms[0].negative && !atoms[0].imaginary);
        assert_eq!(atoms[0].magnitude, "(1/2)");
        assert!(!atoms[1].negative && atoms[1].imaginary);
        assert_eq!(atoms[1].magnitude, "3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rational(10, 1));
        assert_eq!(binomial(4, 0), rational(1, 1));
        assert_eq!(factorial(0), rational(1, 1));
    }

    #[test]
    fn float_instances_use_unit_hbar() {
        let h = <Complex<f64> as Scalar>::hbar();
        assert_eq!(h, Complex::new(1.0, 0.0));
        let half = <Complex<f32> as Scalar>::from_ratio(1, 2);
        assert_eq!(half.re, 0.5);
    }
}
