//! W-independent identities of the phase-plane Clifford algebra: the Pauli
//! table, the projectors π± and the holomorphic ladder vectors f, f̄.

use super::report::Report;
use crate::error::{Error, Result};
use crate::multivector::{eta, eta_rho, rho, CliffordAlgebra, Metric, Multivector};
use crate::phase_poly::PhasePoly;
use crate::scalar::Scalar;

fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}

fn require_plane(algebra: &CliffordAlgebra) -> Result<()> {
    if algebra.metric() != &Metric::euclidean_plane() {
        return Err(Error::InvalidMetric("expected the euclidean plane diag(1, 1)".into()));
    }
    Ok(())
}

/// `−iηρ`, the third Pauli element.
pub fn minus_i_eta_rho<S: Scalar>() -> Multivector<S> {
    eta_rho().scale(&-S::imag())
}

/// `π± = ½(1 ∓ iηρ)`, the eigen-multivectors of `−iηρ` with eigenvalues ±1.
pub fn projectors<S: Scalar>() -> (Multivector<S>, Multivector<S>) {
    let one = Multivector::one(2);
    let i_eta_rho = eta_rho().scale(&S::imag());
    let plus = (one.clone() - i_eta_rho.clone()).scale(&half());
    let minus = (one + i_eta_rho).scale(&half());
    (plus, minus)
}

/// `η`, `ρ`, `−iηρ` with their display names.
fn pauli_basis<S: Scalar>() -> [(&'static str, Multivector<S>); 3] {
    [("eta", eta()), ("rho", rho()), ("-i*eta*rho", minus_i_eta_rho())]
}

fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Star commutators and anticommutators of `η`, `ρ`, `−iηρ` against the
/// Pauli table `[σ_a, σ_b] = 2i ε_abc σ_c`, `{σ_a, σ_b} = 2δ_ab`; every
/// ordered pair is checked, so the vanishing entries are included.
pub fn verify_pauli_algebra<S: Scalar>(algebra: &CliffordAlgebra) -> Result<Report> {
    require_plane(algebra)?;
    let basis = pauli_basis::<S>();
    let two = S::from_integer(2);
    let mut report = Report::new();
    for (a, (na, sa)) in basis.iter().enumerate() {
        for (b, (nb, sb)) in basis.iter().enumerate() {
            let mut expected = Multivector::zero(2);
            for (c, (_, sc)) in basis.iter().enumerate() {
                let e = levi_civita(a, b, c);
                if e != 0 {
                    expected = expected + sc.scale(&(two.clone() * S::imag() * S::from_integer(e)));
                }
            }
            report.check(
                format!("[{na}, {nb}]_*C"),
                &algebra.star_commutator(sa, sb)?,
                &expected,
            );
            let anti = if a == b { Multivector::scalar(2, PhasePoly::constant(two.clone())) } else { Multivector::zero(2) };
            report.check(
                format!("{{{na}, {nb}}}_*C"),
                &algebra.star_anticommutator(sa, sb)?,
                &anti,
            );
        }
    }
    Ok(report)
}

/// Idempotency, orthogonality, eigen-relations, completeness and scalar parts
/// of `π±`.
pub fn verify_projectors<S: Scalar>(algebra: &CliffordAlgebra) -> Result<Report> {
    require_plane(algebra)?;
    let (pp, pm) = projectors::<S>();
    let s = minus_i_eta_rho::<S>();
    let zero = Multivector::zero(2);
    let half_scalar = Multivector::scalar(2, PhasePoly::constant(half()));
    let mut r = Report::new();
    r.check("pi+ *C pi+ = pi+", &algebra.clifford_star(&pp, &pp)?, &pp);
    r.check("pi- *C pi- = pi-", &algebra.clifford_star(&pm, &pm)?, &pm);
    r.check("pi+ *C pi- = 0", &algebra.clifford_star(&pp, &pm)?, &zero);
    r.check("pi- *C pi+ = 0", &algebra.clifford_star(&pm, &pp)?, &zero);
    r.check("-i*eta*rho *C pi+ = pi+", &algebra.clifford_star(&s, &pp)?, &pp);
    r.check("-i*eta*rho *C pi- = -pi-", &algebra.clifford_star(&s, &pm)?, &-pm.clone());
    r.check("pi+ + pi- = 1", &(&pp + &pm), &Multivector::one(2));
    r.check("<pi+>_0 = 1/2", &pp.grade_project(0), &half_scalar);
    r.check("<pi->_0 = 1/2", &pm.grade_project(0), &half_scalar);
    Ok(r)
}

/// Holomorphic frame. `ℚ(i)` has no `√2`, so the frame stores the scaled
/// values `√2 f = η + iρ`, `√2 f̄ = η − iρ`, `√2 B = W + ip`,
/// `√2 B̄ = W − ip`; any product of two frame elements carries an exact `½`.
#[derive(Clone, Debug, PartialEq)]
pub struct HolomorphicFrame<S: Scalar> {
    pub f_scaled: Multivector<S>,
    pub f_bar_scaled: Multivector<S>,
    pub b_scaled: PhasePoly<S>,
    pub b_bar_scaled: PhasePoly<S>,
}

impl<S: Scalar> HolomorphicFrame<S> {
    pub fn new(w: &PhasePoly<S>) -> Self {
        let i = S::imag();
        let ip = PhasePoly::p().scale(&i);
        Self {
            f_scaled: eta() + rho().scale(&i),
            f_bar_scaled: eta() - rho().scale(&i),
            b_scaled: w + &ip,
            b_bar_scaled: w - &ip,
        }
    }

    /// The Clifford frame alone (W = 0).
    pub fn plane() -> Self {
        Self::new(&PhasePoly::zero())
    }

    /// `x ★ y` for two frame vectors given in scaled form: `½ x' ★ y'`.
    pub fn pair(&self, algebra: &CliffordAlgebra, x: &Multivector<S>, y: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(algebra.clifford_star(x, y)?.scale(&half()))
    }

    /// `x ★ m ★ y` for frame vectors `x`, `y` in scaled form.
    pub fn sandwich(
        &self,
        algebra: &CliffordAlgebra,
        x: &Multivector<S>,
        m: &Multivector<S>,
        y: &Multivector<S>,
    ) -> Result<Multivector<S>> {
        let xm = algebra.clifford_star(x, m)?;
        Ok(algebra.clifford_star(&xm, y)?.scale(&half()))
    }

    /// `f ★ f = f̄ ★ f̄ = 0`, `{f, f̄} = 2` and `B B̄ = ½(W² + p²)`.
    pub fn verify(&self, algebra: &CliffordAlgebra) -> Result<Report> {
        require_plane(algebra)?;
        let (f, fb) = (&self.f_scaled, &self.f_bar_scaled);
        let zero = Multivector::zero(2);
        let mut r = Report::new();
        r.check("f *C f = 0", &self.pair(algebra, f, f)?, &zero);
        r.check("fbar *C fbar = 0", &self.pair(algebra, fb, fb)?, &zero);
        let anti = self.pair(algebra, f, fb)? + self.pair(algebra, fb, f)?;
        r.check(
            "{f, fbar}_*C = 2",
            &anti,
            &Multivector::scalar(2, PhasePoly::constant(S::from_integer(2))),
        );
        // W = (B' + B̄')/2, p = (B' − B̄')/(2i)
        let w = (&self.b_scaled + &self.b_bar_scaled).scale(&half());
        let classical = (w.pow(2) + PhasePoly::p().pow(2)).scale(&half());
        r.check(
            "B Bbar = (W^2 + p^2)/2",
            &self.b_scaled.poly_mul(&self.b_bar_scaled).scale(&half()),
            &classical,
        );
        Ok(r)
    }
}

/// Ladder relations `f̄ ★ π+ ★ f = 2π−`, `f ★ π− ★ f̄ = 2π+`, and the six
/// vanishing combinations.
pub fn ladder_check<S: Scalar>(algebra: &CliffordAlgebra, frame: &HolomorphicFrame<S>) -> Result<Report> {
    require_plane(algebra)?;
    let (pp, pm) = projectors::<S>();
    let two = S::from_integer(2);
    let (f, fb) = (&frame.f_scaled, &frame.f_bar_scaled);
    let zero = Multivector::zero(2);
    let cases: [(&str, &Multivector<S>, &str, &Multivector<S>, &str, &Multivector<S>, Multivector<S>); 8] = [
        ("fbar", fb, "pi+", &pp, "f", f, pm.scale(&two)),
        ("f", f, "pi-", &pm, "fbar", fb, pp.scale(&two)),
        ("f", f, "pi+", &pp, "fbar", fb, zero.clone()),
        ("fbar", fb, "pi-", &pm, "f", f, zero.clone()),
        ("f", f, "pi+", &pp, "f", f, zero.clone()),
        ("f", f, "pi-", &pm, "f", f, zero.clone()),
        ("fbar", fb, "pi+", &pp, "fbar", fb, zero.clone()),
        ("fbar", fb, "pi-", &pm, "fbar", fb, zero),
    ];
    let mut r = Report::new();
    for (nx, x, nm, m, ny, y, expected) in cases {
        let rhs_name = if expected.is_zero() {
            "0".to_string()
        } else if nm == "pi+" {
            "2 pi-".to_string()
        } else {
            "2 pi+".to_string()
        };
        r.check(
            format!("{nx} *C {nm} *C {ny} = {rhs_name}"),
            &frame.sandwich(algebra, x, m, y)?,
            &expected,
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{HbarScalar, Mv};

    fn plane() -> CliffordAlgebra {
        CliffordAlgebra::euclidean_plane()
    }

    #[test]
    fn pauli_table_passes() {
        let r = verify_pauli_algebra::<HbarScalar>(&plane()).unwrap();
        assert_eq!(r.len(), 18);
        assert!(r.all_pass(), "{r}");
        let c = r.find("[eta, rho]_*C").unwrap();
        assert_eq!(c.rhs, "2*e1e2");
        let c = r.find("[rho, -i*eta*rho]_*C").unwrap();
        assert_eq!(c.rhs, "2*i*e1");
        let c = r.find("{eta, eta}_*C").unwrap();
        assert_eq!(c.lhs, "2");
    }

    #[test]
    fn projector_examples() {
        let a = plane();
        let (pp, pm) = projectors::<HbarScalar>();
        assert_eq!(a.clifford_star(&pp, &pp).unwrap(), pp);
        assert!(a.clifford_star(&pp, &pm).unwrap().is_zero());
        assert_eq!(a.clifford_star(&minus_i_eta_rho(), &pm).unwrap(), -pm.clone());
        assert!(verify_projectors::<HbarScalar>(&a).unwrap().all_pass());
    }

    #[test]
    fn ladder_examples() {
        let a = plane();
        let frame = HolomorphicFrame::<HbarScalar>::plane();
        let r = ladder_check(&a, &frame).unwrap();
        assert_eq!(r.len(), 8);
        assert!(r.all_pass(), "{r}");
        let (pp, pm) = projectors::<HbarScalar>();
        let two = HbarScalar::from_integer(2);
        assert_eq!(
            frame.sandwich(&a, &frame.f_bar_scaled, &pp, &frame.f_scaled).unwrap(),
            pm.scale(&two)
        );
        assert!(frame.sandwich(&a, &frame.f_scaled, &pp, &frame.f_bar_scaled).unwrap().is_zero());
    }

    #[test]
    fn frame_invariants() {
        let w = crate::Poly::q().pow(3) - crate::Poly::q();
        let frame = HolomorphicFrame::new(&w);
        assert!(frame.verify(&plane()).unwrap().all_pass());
    }

    #[test]
    fn wrong_metric_is_rejected() {
        let a = CliffordAlgebra::new(Metric::euclidean(3).unwrap());
        assert!(matches!(verify_pauli_algebra::<HbarScalar>(&a), Err(Error::InvalidMetric(_))));
        let _ = Mv::zero(2);
    }
}
