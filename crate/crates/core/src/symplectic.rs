//! Symplectic structure of flat phase space: the two-form Ω, the Poisson
//! bivector J = (Ω⁻¹)ᵀ, the musical maps ♭/♮, the symplectic dot product and
//! Hamilton's equations `ż = d♮H`.
//!
//! Components are stored contravariant. With the euclidean metric on the
//! generators, `ζ^i` and `ζ_i` share one representation.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multivector::{Blade, CliffordAlgebra, Multivector};
use crate::phase_poly::{PhasePoly, Var};
use crate::scalar::Scalar;

type Matrix = Vec<Vec<BigRational>>;

fn check_square(m: &Matrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidSymplecticForm("matrix is not square".into()));
    }
    Ok(n)
}

/// Gauss-Jordan inverse; `None` when singular.
fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] = &a[r][c] - sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

/// `Σ_{i<j} M_ij ζ_i ζ_j`, i.e. `½ M_ij ζ_i ζ_j` for antisymmetric `M`.
fn bivector_of<S: Scalar>(m: &Matrix) -> Multivector<S> {
    let n = m.len();
    let mut out = Multivector::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let b = Blade::from_indices(&[i, j]).expect("distinct");
            out.add_term(b, PhasePoly::constant(S::from_rational(&m[i][j])));
        }
    }
    out
}

fn check_vector<S: Scalar>(a: &Multivector<S>, n: usize) -> Result<Vec<PhasePoly<S>>> {
    if a.dim() != n {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: n,
        });
    }
    a.vector_components()
}

/// Non-degenerate antisymmetric two-form `Ω = ½ Ω_ij ζ^i ζ^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    omega: Matrix,
}

impl SymplecticForm {
    pub fn new(omega: Matrix) -> Result<Self> {
        let n = check_square(&omega)?;
        if n % 2 != 0 {
            return Err(Error::InvalidSymplecticForm(format!("odd dimension {n}")));
        }
        for i in 0..n {
            for j in 0..=i {
                if omega[i][j] != -omega[j][i].clone() {
                    return Err(Error::InvalidSymplecticForm(format!("not antisymmetric at ({i},{j})")));
                }
            }
        }
        if inverse(&omega).is_none() {
            return Err(Error::InvalidSymplecticForm("degenerate".into()));
        }
        Ok(Self { omega })
    }

    /// Darboux form on `2k` coordinates `(q_1..q_k, p_1..p_k)`.
    pub fn canonical(k: usize) -> Self {
        let n = 2 * k;
        let mut omega = vec![vec![BigRational::zero(); n]; n];
        for i in 0..k {
            omega[i][k + i] = BigRational::one();
            omega[k + i][i] = -BigRational::one();
        }
        Self { omega }
    }

    /// `Ω = ηρ` on the phase-space plane (`Ω₁₂ = 1`).
    pub fn plane() -> Self {
        Self::canonical(1)
    }

    pub fn dim(&self) -> usize {
        self.omega.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.omega[i][j]
    }

    pub fn as_bivector<S: Scalar>(&self) -> Multivector<S> {
        bivector_of(&self.omega)
    }

    /// `J = (Ω⁻¹)ᵀ`, so that ♮ inverts ♭.
    pub fn poisson_bivector(&self) -> PoissonBivector {
        let inv = inverse(&self.omega).expect("non-degeneracy checked at construction");
        PoissonBivector { j: transpose(&inv) }
    }

    /// `a♭`, with `(a♭)_j = a^i Ω_ij`.
    pub fn flat<S: Scalar>(&self, a: &Multivector<S>) -> Result<Multivector<S>> {
        let n = self.dim();
        let comps = check_vector(a, n)?;
        Ok(Multivector::vector(
            (0..n)
                .map(|j| {
                    (0..n).fold(PhasePoly::zero(), |acc, i| {
                        acc + comps[i].scale(&S::from_rational(&self.omega[i][j]))
                    })
                })
                .collect(),
        ))
    }

    /// `a ·_Sy b = a^i Ω_ij b^j`.
    pub fn dot<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<PhasePoly<S>> {
        let n = self.dim();
        let ac = check_vector(a, n)?;
        let bc = check_vector(b, n)?;
        let mut acc = PhasePoly::zero();
        for i in 0..n {
            for j in 0..n {
                let w = &self.omega[i][j];
                if !w.is_zero() {
                    acc = acc + ac[i].poly_mul(&bc[j]).scale(&S::from_rational(w));
                }
            }
        }
        Ok(acc)
    }

    /// `a · (Ω · b)`: contract `b` into the Ω bivector, then take the metric
    /// dot product with `a`. `Ω · b` is the grade-1 part of `Ω ★ b`.
    pub fn dot_by_contraction<S: Scalar>(
        &self,
        algebra: &CliffordAlgebra,
        a: &Multivector<S>,
        b: &Multivector<S>,
    ) -> Result<PhasePoly<S>> {
        check_vector(a, self.dim())?;
        check_vector(b, self.dim())?;
        let omega_b = algebra.clifford_star(&self.as_bivector(), b)?.grade_project(1);
        algebra.dot(a, &omega_b)
    }

    /// `(b ∧ a) · Ω`, the scalar part of `(b ∧ a) ★ Ω`.
    pub fn dot_by_bivector<S: Scalar>(
        &self,
        algebra: &CliffordAlgebra,
        a: &Multivector<S>,
        b: &Multivector<S>,
    ) -> Result<PhasePoly<S>> {
        check_vector(a, self.dim())?;
        check_vector(b, self.dim())?;
        let ba = b.wedge(a)?;
        Ok(algebra.clifford_star(&ba, &self.as_bivector())?.scalar_part())
    }
}

/// `J = ½ J^{ij} ζ_i ζ_j` with `J^{ij} = Ω^{ji}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonBivector {
    j: Matrix,
}

impl PoissonBivector {
    pub fn dim(&self) -> usize {
        self.j.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.j[i][j]
    }

    pub fn as_bivector<S: Scalar>(&self) -> Multivector<S> {
        bivector_of(&self.j)
    }

    /// `ω♮`, with `(ω♮)^i = J^{ij} ω_j`.
    pub fn natural<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        let n = self.dim();
        let comps = check_vector(w, n)?;
        Ok(Multivector::vector(
            (0..n)
                .map(|i| {
                    (0..n).fold(PhasePoly::zero(), |acc, j| {
                        acc + comps[j].scale(&S::from_rational(&self.j[i][j]))
                    })
                })
                .collect(),
        ))
    }

    /// `{F, G} = J^{ab} ∂_a F ∂_b G` on the phase-space plane.
    pub fn bracket<S: Scalar>(&self, f: &PhasePoly<S>, g: &PhasePoly<S>) -> Result<PhasePoly<S>> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: 2,
            });
        }
        let df = [f.diff(Var::Q, 1), f.diff(Var::P, 1)];
        let dg = [g.diff(Var::Q, 1), g.diff(Var::P, 1)];
        let mut acc = PhasePoly::zero();
        for a in 0..2 {
            for b in 0..2 {
                let w = &self.j[a][b];
                if !w.is_zero() {
                    acc = acc + df[a].poly_mul(&dg[b]).scale(&S::from_rational(w));
                }
            }
        }
        Ok(acc)
    }
}

/// `dF = (∂F/∂q) η + (∂F/∂p) ρ`.
pub fn nabla<S: Scalar>(f: &PhasePoly<S>) -> Multivector<S> {
    Multivector::vector(vec![f.diff(Var::Q, 1), f.diff(Var::P, 1)])
}

/// `ż = d♮H` for the canonical plane form; the η and ρ components are
/// `q̇` and `ṗ`.
pub fn hamiltonian_vector_field<S: Scalar>(h: &PhasePoly<S>) -> Multivector<S> {
    SymplecticForm::plane()
        .poisson_bivector()
        .natural(&nabla(h))
        .expect("nabla is a plane vector")
}

/// `{F, G}_PB = F ←d ·_Sy →d G` for the canonical plane form.
pub fn poisson_bracket_geometric<S: Scalar>(f: &PhasePoly<S>, g: &PhasePoly<S>) -> PhasePoly<S> {
    SymplecticForm::plane()
        .poisson_bivector()
        .bracket(f, g)
        .expect("plane bivector")
}
