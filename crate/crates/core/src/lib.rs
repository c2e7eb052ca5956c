//! Exact geometric algebra on phase space, deformed by the Moyal product.
//!
//! Coefficients live in a [`Scalar`] ring. The default ring [`HbarScalar`]
//! keeps ħ as a formal symbol with Gaussian-rational coefficients, so every
//! identity is checked as exact data equality. Type aliases at the crate root
//! fix the common instances.

pub mod error;
pub mod gauss_wigner;
pub mod multivector;
pub mod phase_poly;
pub mod scalar;
pub mod susy;
pub mod symplectic;

pub use error::{Error, Result};
pub use gauss_wigner::{
    bopp_star_left, bopp_star_right, check_stargenvalue, gauss_diff, oscillator_hamiltonian, oscillator_wigner, GaussPoly,
};
pub use multivector::{Blade, CliffordAlgebra, Metric, Multivector};
pub use phase_poly::{moyal_commutator, moyal_star, poisson_bracket, HbarScalar, Monomial, PhasePoly, Var};
pub use scalar::{Atom, GaussianRational, Scalar};
pub use symplectic::{hamiltonian_vector_field, nabla, poisson_bracket_geometric, PoissonBivector, SymplecticForm};

use num_complex::Complex;

/// Phase-space polynomial with formal ħ.
pub type Poly = PhasePoly<HbarScalar>;
/// Multivector with formal-ħ polynomial coefficients.
pub type Mv = Multivector<HbarScalar>;
/// Polynomial over `ℚ(i)` with ħ = 1.
pub type PolyQ = PhasePoly<GaussianRational>;
pub type MvQ = Multivector<GaussianRational>;
/// Floating-point instances with ħ = 1.
pub type PolyF64 = PhasePoly<Complex<f64>>;
pub type MvF64 = Multivector<Complex<f64>>;
pub type PolyF32 = PhasePoly<Complex<f32>>;
