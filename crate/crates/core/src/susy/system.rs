use super::clifford::{projectors, HolomorphicFrame};
use super::report::Report;
use crate::error::{Error, Result};
use crate::multivector::{eta, eta_rho, rho, CliffordAlgebra, Multivector};
use crate::phase_poly::{PhasePoly, Var};
use crate::scalar::Scalar;

fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}

/// Superpotential `W(q)`: a polynomial in `q` alone with ħ-free coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Superpotential<S: Scalar> {
    w: PhasePoly<S>,
}

impl<S: Scalar> Superpotential<S> {
    pub fn new(w: PhasePoly<S>) -> Result<Self> {
        if w.degree_in(Var::P).unwrap_or(0) > 0 {
            return Err(Error::InvalidSuperpotential("superpotential must depend on q only".into()));
        }
        if w.terms().any(|(_, c)| !c.is_hbar_free()) {
            return Err(Error::InvalidSuperpotential("superpotential must not contain hbar".into()));
        }
        Ok(Self { w })
    }

    pub fn poly(&self) -> &PhasePoly<S> {
        &self.w
    }

    /// `W'(q)`.
    pub fn derivative(&self) -> PhasePoly<S> {
        self.w.diff(Var::Q, 1)
    }
}

/// `w = W(q) η + p ρ`.
pub fn build_w<S: Scalar>(w: &Superpotential<S>) -> Multivector<S> {
    eta().scale_poly(w.poly()) + rho().scale_poly(&PhasePoly::p())
}

/// `H = ½(p² + W²)`.
pub fn classical_hamiltonian<S: Scalar>(w: &Superpotential<S>) -> PhasePoly<S> {
    (PhasePoly::p().pow(2) + w.poly().pow(2)).scale(&half())
}

/// `H_S = ½ w ★MC w`, computed with the Moyal-Clifford product.
pub fn susy_hamiltonian<S: Scalar>(algebra: &CliffordAlgebra, w: &Superpotential<S>) -> Result<Multivector<S>> {
    let v = build_w(w);
    Ok(algebra.moyal_clifford_star(&v, &v)?.scale(&half()))
}

/// Closed form `½(p² + W²) + (iħ/2) W' ηρ`.
///
/// The coefficient of `ηρ` is `½[W, p]_★ = (iħ/2) W'`, which is also what
/// the split `H1 π+ + H2 π−` produces.
pub fn susy_hamiltonian_closed_form<S: Scalar>(w: &Superpotential<S>) -> Multivector<S> {
    let bivector = w.derivative().scale(&(S::imag() * S::hbar() * half()));
    Multivector::scalar(2, classical_hamiltonian(w)) + eta_rho().scale_poly(&bivector)
}

/// `H1,2 = ½(p² + W² ∓ ħ W')`.
pub fn partner_hamiltonians<S: Scalar>(w: &Superpotential<S>) -> (PhasePoly<S>, PhasePoly<S>) {
    let h = classical_hamiltonian(w);
    let shift = w.derivative().scale(&(S::hbar() * half()));
    (&h - &shift, &h + &shift)
}

/// Supercharges `Q+ = B f̄`, `Q− = B̄ f`, `Q1 = Q+ + Q−`, `Q2 = −i(Q+ − Q−)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Supercharges<S: Scalar> {
    pub plus: Multivector<S>,
    pub minus: Multivector<S>,
    pub q1: Multivector<S>,
    pub q2: Multivector<S>,
}

/// Builds the supercharges from the frame; `B f̄ = ½ (√2 B)(√2 f̄)` is exact.
pub fn supercharges<S: Scalar>(frame: &HolomorphicFrame<S>) -> Supercharges<S> {
    let plus = frame.f_bar_scaled.scale_poly(&frame.b_scaled).scale(&half());
    let minus = frame.f_scaled.scale_poly(&frame.b_bar_scaled).scale(&half());
    let q1 = &plus + &minus;
    let q2 = (&plus - &minus).scale(&-S::imag());
    Supercharges { plus, minus, q1, q2 }
}

/// Every component of a supersymmetric system, unverified. Fields are public
/// so that a component can be replaced before verification.
#[derive(Clone, Debug, PartialEq)]
pub struct SusyParts<S: Scalar> {
    pub superpotential: Superpotential<S>,
    pub w: Multivector<S>,
    pub hs: Multivector<S>,
    pub frame: HolomorphicFrame<S>,
    pub charges: Supercharges<S>,
    pub pi_plus: Multivector<S>,
    pub pi_minus: Multivector<S>,
    pub h1: PhasePoly<S>,
    pub h2: PhasePoly<S>,
}

impl<S: Scalar> SusyParts<S> {
    pub fn derive(algebra: &CliffordAlgebra, superpotential: Superpotential<S>) -> Result<Self> {
        let w = build_w(&superpotential);
        let hs = susy_hamiltonian(algebra, &superpotential)?;
        let frame = HolomorphicFrame::new(superpotential.poly());
        let charges = supercharges(&frame);
        let (pi_plus, pi_minus) = projectors();
        let (h1, h2) = partner_hamiltonians(&superpotential);
        Ok(Self {
            superpotential,
            w,
            hs,
            frame,
            charges,
            pi_plus,
            pi_minus,
            h1,
            h2,
        })
    }
}

/// Checks the supersymmetry algebra of `parts` under the Moyal-Clifford
/// product.
///
/// `Q− ★ Q+` carries the factor `(B̄ ★ B)(f ★ f̄) = H1 · 2π+`; together with
/// `Q± ★ Q± = 0` this is what makes `½{Q+, Q−} = ½ Q1 ★ Q1 = ½ w ★ w`
/// reproduce `H_S = H1 π+ + H2 π−`.
pub fn verify_susy_algebra<S: Scalar>(algebra: &CliffordAlgebra, parts: &SusyParts<S>) -> Result<Report> {
    let mc = |a: &Multivector<S>, b: &Multivector<S>| algebra.moyal_clifford_star(a, b);
    let zero = Multivector::zero(2);
    let two = S::from_integer(2);
    let (qp, qm) = (&parts.charges.plus, &parts.charges.minus);
    let (q1, q2) = (&parts.charges.q1, &parts.charges.q2);
    let hs = &parts.hs;
    let split = parts.pi_plus.scale_poly(&parts.h1) + parts.pi_minus.scale_poly(&parts.h2);

    let mut r = Report::new();
    r.check("H_S = 1/2 w *MC w", hs, &mc(&parts.w, &parts.w)?.scale(&half()));
    r.check(
        "H_S = (p^2 + W^2)/2 + (i hbar/2) W' eta rho",
        hs,
        &susy_hamiltonian_closed_form(&parts.superpotential),
    );
    r.check("H_S = H1 pi+ + H2 pi-", hs, &split);
    r.check("Q1 = Q+ + Q- = w", q1, &parts.w);
    r.check("Q+ *MC Q+ = 0", &mc(qp, qp)?, &zero);
    r.check("Q- *MC Q- = 0", &mc(qm, qm)?, &zero);
    r.check(
        "Q- *MC Q+ = 2 H1 pi+",
        &mc(qm, qp)?,
        &parts.pi_plus.scale_poly(&parts.h1).scale(&two),
    );
    r.check(
        "Q+ *MC Q- = 2 H2 pi-",
        &mc(qp, qm)?,
        &parts.pi_minus.scale_poly(&parts.h2).scale(&two),
    );
    r.check("H_S = 1/2 {Q+, Q-}_*MC", hs, &algebra.mc_anticommutator(qp, qm)?.scale(&half()));
    r.check("[Q+, H_S]_*MC = 0", &algebra.mc_commutator(qp, hs)?, &zero);
    r.check("[Q-, H_S]_*MC = 0", &algebra.mc_commutator(qm, hs)?, &zero);
    r.check("H_S = 1/2 Q1 *MC Q1", hs, &mc(q1, q1)?.scale(&half()));
    r.check("H_S = 1/2 Q2 *MC Q2", hs, &mc(q2, q2)?.scale(&half()));
    r.check("{Q1, Q2}_*MC = 0", &algebra.mc_anticommutator(q1, q2)?, &zero);
    r.check(
        "H_S *MC pi+ = H1 pi+",
        &mc(hs, &parts.pi_plus)?,
        &parts.pi_plus.scale_poly(&parts.h1),
    );
    r.check(
        "H_S *MC pi- = H2 pi-",
        &mc(hs, &parts.pi_minus)?,
        &parts.pi_minus.scale_poly(&parts.h2),
    );
    Ok(r)
}

/// A star-factorized supersymmetric system whose identities have all been
/// verified exactly.
#[derive(Clone, Debug)]
pub struct SusySystem<S: Scalar> {
    parts: SusyParts<S>,
    report: Report,
}

impl<S: Scalar> SusySystem<S> {
    /// Derives and verifies the system for `W` on the euclidean phase plane.
    pub fn new(superpotential: Superpotential<S>) -> Result<Self> {
        let algebra = CliffordAlgebra::euclidean_plane();
        let parts = SusyParts::derive(&algebra, superpotential)?;
        Self::from_parts(&algebra, parts)
    }

    /// Verifies `parts`; fails with the first identity that does not hold.
    pub fn from_parts(algebra: &CliffordAlgebra, parts: SusyParts<S>) -> Result<Self> {
        let mut report = verify_susy_algebra(algebra, &parts)?;
        report.extend(parts.frame.verify(algebra)?);
        let report = report.into_result()?;
        Ok(Self { parts, report })
    }

    pub fn parts(&self) -> &SusyParts<S> {
        &self.parts
    }

    pub fn superpotential(&self) -> &Superpotential<S> {
        &self.parts.superpotential
    }

    pub fn w(&self) -> &Multivector<S> {
        &self.parts.w
    }

    pub fn hamiltonian(&self) -> &Multivector<S> {
        &self.parts.hs
    }

    pub fn supercharges(&self) -> &Supercharges<S> {
        &self.parts.charges
    }

    pub fn projectors(&self) -> (&Multivector<S>, &Multivector<S>) {
        (&self.parts.pi_plus, &self.parts.pi_minus)
    }

    pub fn partners(&self) -> (&PhasePoly<S>, &PhasePoly<S>) {
        (&self.parts.h1, &self.parts.h2)
    }

    pub fn frame(&self) -> &HolomorphicFrame<S> {
        &self.parts.frame
    }

    /// The all-pass report produced at construction.
    pub fn report(&self) -> &Report {
        &self.report
    }
}
