//! Star-genvalue checks against Gaussian-weighted Wigner functions.
//!
//! [`GaussPoly`] is the class `P(q, p; ħ) · exp(−α(q² + p²)/ħ)`, closed under
//! `∂_q`, `∂_p` thanks to negative powers of ħ in the prefactor. Star products
//! with a polynomial on one side terminate after `deg` orders of the Moyal
//! expansion, which is the Weyl-ordered Bopp-shift operator
//! `f(q + (iħ/2)∂_p, p − (iħ/2)∂_q)` applied to the Gaussian side.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::phase_poly::{moyal_weights, Derivatives, HbarScalar, Var};
use crate::scalar::{binomial, factorial, rational, Scalar};
use crate::Poly;

/// `prefactor · exp(−alpha (q² + p²)/ħ)` with `alpha ≥ 0`.
#[derive(Clone, PartialEq)]
pub struct GaussPoly {
    prefactor: Poly,
    alpha: BigRational,
}

impl GaussPoly {
    pub fn new(prefactor: Poly, alpha: BigRational) -> Result<Self> {
        if alpha.is_negative() {
            return Err(Error::InvalidGaussian(format!("alpha = {alpha} is negative")));
        }
        Ok(Self::canonical(prefactor, alpha))
    }

    fn canonical(prefactor: Poly, alpha: BigRational) -> Self {
        let alpha = if prefactor.is_zero() { BigRational::zero() } else { alpha };
        Self { prefactor, alpha }
    }

    /// A polynomial viewed as `α = 0`.
    pub fn polynomial(p: Poly) -> Self {
        Self::canonical(p, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::polynomial(Poly::zero())
    }

    pub fn prefactor(&self) -> &Poly {
        &self.prefactor
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    pub fn scale(&self, c: &HbarScalar) -> Self {
        Self::canonical(self.prefactor.scale(c), self.alpha.clone())
    }

    /// Multiplies the prefactor by a polynomial.
    pub fn times_poly(&self, f: &Poly) -> Self {
        Self::canonical(self.prefactor.poly_mul(f), self.alpha.clone())
    }

    /// `∂^order / ∂var^order` within the class.
    pub fn diff(&self, var: Var, order: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..order {
            out = out.diff_once(var);
        }
        out
    }

    fn diff_once(&self, var: Var) -> Self {
        let mut prefactor = self.prefactor.diff(var, 1);
        if !self.alpha.is_zero() {
            // ∂ e^{-α r²/ħ} = (−2α x/ħ) e^{-α r²/ħ}
            let c = HbarScalar::rational(rational(-2, 1) * &self.alpha).shift(-1);
            let x = match var {
                Var::Q => Poly::q(),
                Var::P => Poly::p(),
            };
            prefactor = prefactor + self.prefactor.poly_mul(&x).scale(&c);
        }
        Self::canonical(prefactor, self.alpha.clone())
    }
}

impl fmt::Display for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha.is_zero() {
            return write!(f, "{}", self.prefactor);
        }
        let a = Poly::constant(HbarScalar::rational(self.alpha.clone()));
        write!(f, "({})*exp(-{}*(q^2 + p^2)/hbar)", self.prefactor, a)
    }
}

impl fmt::Debug for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussPoly({self})")
    }
}

/// `∂^order g / ∂var^order`.
pub fn gauss_diff(g: &GaussPoly, var: Var, order: u32) -> GaussPoly {
    g.diff(var, order)
}

fn gauss_step(g: &GaussPoly, v: Var) -> GaussPoly {
    g.diff_once(v)
}

/// Shared Moyal expansion with the derivative orders of the polynomial side
/// bounding the series.
fn star_with_poly(f: &Poly, g: &GaussPoly, poly_on_left: bool) -> GaussPoly {
    let Some(deg) = f.degree() else {
        return GaussPoly::zero();
    };
    if g.is_zero() {
        return GaussPoly::zero();
    }
    let step = gauss_step;
    let mut dg = Derivatives::new(g.clone(), &step);
    let mut acc = Poly::zero();
    for n in 0..=deg {
        for (k, w) in moyal_weights::<HbarScalar>(n).into_iter().enumerate() {
            let k = k as u32;
            // left factor gets ∂_q^{n−k} ∂_p^k, right factor ∂_q^k ∂_p^{n−k}
            let (fq, fp, gq, gp) = if poly_on_left { (n - k, k, k, n - k) } else { (k, n - k, n - k, k) };
            let df = f.diff_mixed(fq, fp);
            if df.is_zero() {
                continue;
            }
            let dgk = dg.get(gq, gp);
            acc = acc + df.poly_mul(dgk.prefactor()).scale(&w);
        }
    }
    GaussPoly::canonical(acc, g.alpha.clone())
}

/// `f ★ g` for polynomial `f`.
pub fn bopp_star_left(f: &Poly, g: &GaussPoly) -> GaussPoly {
    star_with_poly(f, g, true)
}

/// `g ★ f` for polynomial `f`.
pub fn bopp_star_right(g: &GaussPoly, f: &Poly) -> GaussPoly {
    star_with_poly(f, g, false)
}

/// Oscillator Wigner function `W_n = 2(−1)ⁿ e^{−2H₀/ħ} L_n(4H₀/ħ)`,
/// `H₀ = ½(q² + p²)`, as a [`GaussPoly`] with `α = 1`.
pub fn oscillator_wigner(n: u32) -> GaussPoly {
    // x = 4H₀/ħ = 2(q² + p²)/ħ
    let x = (Poly::q().pow(2) + Poly::p().pow(2)).scale(&(HbarScalar::from_integer(2) * HbarScalar::hbar_pow(-1)));
    let mut laguerre = Poly::zero();
    for k in 0..=n {
        let c = binomial(n, k) / factorial(k);
        let c = if k % 2 == 1 { -c } else { c };
        laguerre = laguerre + x.pow(k).scale(&HbarScalar::rational(c));
    }
    let sign = if n % 2 == 1 { -2 } else { 2 };
    GaussPoly::canonical(
        laguerre.scale(&HbarScalar::from_integer(sign)),
        rational(1, 1),
    )
}

/// Whether `H ★ W = E · W` holds exactly.
pub fn check_stargenvalue(h: &Poly, w: &GaussPoly, e: &HbarScalar) -> bool {
    bopp_star_left(h, w) == w.scale(e)
}

/// Whether `W ★ H = E · W` holds exactly.
pub fn check_stargenvalue_right(h: &Poly, w: &GaussPoly, e: &HbarScalar) -> bool {
    bopp_star_right(w, h) == w.scale(e)
}

/// `½(p² + q²)`.
pub fn oscillator_hamiltonian() -> Poly {
    Poly::from_terms([
        (HbarScalar::from_ratio(1, 2), 2, 0),
        (HbarScalar::from_ratio(1, 2), 0, 2),
    ])
}
