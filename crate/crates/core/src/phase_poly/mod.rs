//! Phase-space functions: exact polynomials in `q`, `p` and the Moyal product.

mod hbar;
mod moyal;
mod poly;
pub(crate) mod render;

pub use hbar::HbarScalar;
pub(crate) use moyal::{moyal_weights, Derivatives};
pub use moyal::{moyal_commutator, moyal_star, poisson_bracket};
pub use poly::{Monomial, PhasePoly, Var};

use num_rational::BigRational;

use crate::scalar::GaussianRational;

impl PhasePoly<HbarScalar> {
    /// Coefficient of `ħ^k`, as a polynomial with ħ-free coefficients.
    pub fn hbar_part(&self, k: i32) -> PhasePoly<HbarScalar> {
        self.map_coeffs(|c| HbarScalar::from_gaussian(c.coeff(k)))
    }

    /// Evaluates ħ at a rational value; fails on negative powers at ħ = 0.
    pub fn substitute_hbar(&self, hbar: &BigRational) -> Option<PhasePoly<GaussianRational>> {
        self.try_map_coeffs(|c| c.substitute(hbar))
    }

    pub fn is_hbar_free(&self) -> bool {
        self.terms().all(|(_, c)| crate::Scalar::is_hbar_free(c))
    }
}
