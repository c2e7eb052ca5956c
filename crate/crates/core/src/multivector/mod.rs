//! Grassmann multivectors with polynomial coefficients and the Clifford and
//! Moyal-Clifford star products.

mod algebra;
mod blade;
mod metric;
mod mv;
mod render;

pub use algebra::CliffordAlgebra;
pub use blade::Blade;
pub use metric::Metric;
pub use mv::Multivector;

use crate::phase_poly::PhasePoly;
use crate::scalar::Scalar;

/// Largest supported generator count (the blade table has `4^n` entries).
pub const MAX_DIM: usize = 6;

/// `η = ζ_1` in the phase-space plane.
pub fn eta<S: Scalar>() -> Multivector<S> {
    Multivector::blade(2, Blade::generator(0), PhasePoly::one())
}

/// `ρ = ζ_2` in the phase-space plane.
pub fn rho<S: Scalar>() -> Multivector<S> {
    Multivector::blade(2, Blade::generator(1), PhasePoly::one())
}

/// The plane's unit bivector `ηρ`.
pub fn eta_rho<S: Scalar>() -> Multivector<S> {
    Multivector::blade(2, Blade::from_bits(0b11), PhasePoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::{HbarScalar, Mv, Poly};

    fn plane() -> CliffordAlgebra {
        CliffordAlgebra::euclidean_plane()
    }

    fn i() -> HbarScalar {
        HbarScalar::imag()
    }

    fn minus_i_eta_rho() -> Mv {
        eta_rho().scale(&-i())
    }

    #[test]
    fn wedge_examples() {
        let (e, r) = (eta::<HbarScalar>(), rho::<HbarScalar>());
        assert_eq!(e.wedge(&r).unwrap(), eta_rho());
        assert!(e.wedge(&e).unwrap().is_zero());
        assert_eq!(r.wedge(&e).unwrap(), -eta_rho::<HbarScalar>());
        let e3 = Mv::generator(3, 0).unwrap();
        assert_eq!(e.wedge(&e3), Err(Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn clifford_star_examples() {
        let a = plane();
        let (e, r) = (eta::<HbarScalar>(), rho::<HbarScalar>());
        assert_eq!(a.clifford_star(&e, &e).unwrap(), Mv::one(2));
        assert_eq!(a.clifford_star(&e, &r).unwrap(), eta_rho());
        let s = minus_i_eta_rho();
        assert_eq!(a.clifford_star(&s, &s).unwrap(), Mv::one(2));
        assert_eq!(a.clifford_star(&eta_rho(), &e).unwrap(), -r);
    }

    #[test]
    fn grade_projection_examples() {
        let a = plane();
        let (e, r) = (eta::<HbarScalar>(), rho::<HbarScalar>());
        assert!(a.clifford_star(&e, &r).unwrap().grade_project(0).is_zero());
        assert_eq!(a.clifford_star(&e, &e).unwrap().grade_project(0), Mv::one(2));
        assert_eq!(eta_rho::<HbarScalar>().grade_project(2), eta_rho());
    }

    #[test]
    fn commutator_examples() {
        let a = plane();
        let (e, r) = (eta::<HbarScalar>(), rho::<HbarScalar>());
        let two = HbarScalar::from_integer(2);
        assert_eq!(a.star_commutator(&e, &r).unwrap(), eta_rho().scale(&two));
        assert_eq!(
            a.star_commutator(&e, &minus_i_eta_rho()).unwrap(),
            r.scale(&(-two.clone() * i()))
        );
        assert!(a.star_anticommutator(&e, &r).unwrap().is_zero());
    }

    #[test]
    fn moyal_clifford_examples() {
        let a = plane();
        let q_eta = eta::<HbarScalar>().scale_poly(&Poly::q());
        let p_rho = rho::<HbarScalar>().scale_poly(&Poly::p());
        let half_i_hbar = Poly::constant(i() * HbarScalar::hbar() * HbarScalar::from_ratio(1, 2));
        assert_eq!(
            a.moyal_clifford_star(&q_eta, &p_rho).unwrap(),
            eta_rho().scale_poly(&(Poly::q() * Poly::p() + half_i_hbar))
        );
        assert_eq!(a.moyal_clifford_star(&p_rho, &p_rho).unwrap(), Mv::scalar(2, Poly::p().pow(2)));
        assert_eq!(a.moyal_clifford_star(&Mv::one(2), &q_eta).unwrap(), q_eta);
    }

    #[test]
    fn metric_mismatch() {
        let a = plane();
        let e3 = Mv::generator(3, 0).unwrap();
        assert_eq!(
            a.clifford_star(&e3, &e3),
            Err(Error::MetricMismatch { metric: 2, operand: 3 })
        );
    }

    #[test]
    fn rendering() {
        let pi_plus = (Mv::one(2) - eta_rho().scale(&i())).scale(&HbarScalar::from_ratio(1, 2));
        assert_eq!(pi_plus.render(), "(1/2) + (-1/2)*i*e1e2");
        let a = plane();
        let q_eta = eta::<HbarScalar>().scale_poly(&Poly::q());
        let p_rho = rho::<HbarScalar>().scale_poly(&Poly::p());
        assert_eq!(
            a.moyal_clifford_star(&q_eta, &p_rho).unwrap().render(),
            "(q*p + (1/2)*i*hbar)*e1e2"
        );
        assert_eq!((-eta::<HbarScalar>()).render(), "-e1");
        let v = eta::<HbarScalar>() - rho::<HbarScalar>().scale(&HbarScalar::from_integer(2));
        assert_eq!(v.render(), "e1 - 2*e2");
        assert_eq!(Mv::zero(2).render(), "0");
    }

    #[test]
    fn invalid_metrics() {
        use crate::scalar::rational;
        let asym = vec![vec![rational(1, 1), rational(1, 2)], vec![rational(0, 1), rational(1, 1)]];
        assert!(matches!(Metric::new(asym), Err(Error::InvalidMetric(_))));
        assert!(matches!(Metric::euclidean(7), Err(Error::TooManyGenerators(7))));
    }
}
