use num_rational::BigRational;
use num_traits::{One, Zero};

use super::blade::Blade;
use super::metric::Metric;
use super::mv::Multivector;
use crate::error::{Error, Result};
use crate::phase_poly::{moyal_star, PhasePoly};
use crate::scalar::Scalar;

type ProductTable = Vec<Vec<Vec<(Blade, BigRational)>>>;

/// Clifford algebra over a fixed metric, with a precomputed basis-blade
/// product table.
///
/// The Clifford product is `A exp[η_ij ←∂/∂ζ_i →∂/∂ζ_j] B`: every term of
/// the exponential series is a set of `k` contractions pairing distinct
/// generators of `A` (differentiated from the right) with distinct
/// generators of `B` (differentiated from the left), followed by the wedge of
/// what is left. The `1/k!` cancels against the `k!` orderings of each set.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    metric: Metric,
    table: ProductTable,
}

impl CliffordAlgebra {
    pub fn new(metric: Metric) -> Self {
        let size = 1usize << metric.dim();
        let table = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| blade_product(&metric, Blade::from_bits(a as u32), Blade::from_bits(b as u32)))
                    .collect()
            })
            .collect();
        Self { metric, table }
    }

    /// The phase-space plane: generators `η = e1`, `ρ = e2`, metric `diag(1, 1)`.
    pub fn euclidean_plane() -> Self {
        Self::new(Metric::euclidean_plane())
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    /// Product of two basis blades as a signed sum of blades.
    pub fn basis_product(&self, a: Blade, b: Blade) -> &[(Blade, BigRational)] {
        &self.table[a.bits() as usize][b.bits() as usize]
    }

    fn check<S: Scalar>(&self, a: &Multivector<S>) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::MetricMismatch {
                metric: self.dim(),
                operand: a.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the blade table, combining coefficients with
    /// `coeff`. Coefficients are even and commute with the generators.
    pub fn product_with<S, F>(&self, a: &Multivector<S>, b: &Multivector<S>, coeff: F) -> Result<Multivector<S>>
    where
        S: Scalar,
        F: Fn(&PhasePoly<S>, &PhasePoly<S>) -> PhasePoly<S>,
    {
        self.check(a)?;
        self.check(b)?;
        let mut out = Multivector::zero(self.dim());
        for (ba, ca) in a.terms() {
            for (bb, cb) in b.terms() {
                let entries = self.basis_product(ba, bb);
                if entries.is_empty() {
                    continue;
                }
                let c = coeff(ca, cb);
                if c.is_zero() {
                    continue;
                }
                for (blade, w) in entries {
                    out.add_term(*blade, c.scale(&S::from_rational(w)));
                }
            }
        }
        Ok(out)
    }

    /// Clifford star product with commuting coefficients.
    pub fn clifford_star<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        self.product_with(a, b, |x, y| x.poly_mul(y))
    }

    /// Moyal-Clifford product: blades by the Clifford star product,
    /// coefficients by the Moyal product.
    pub fn moyal_clifford_star<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        self.product_with(a, b, moyal_star)
    }

    pub fn star_commutator<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.clifford_star(a, b)? - self.clifford_star(b, a)?)
    }

    pub fn star_anticommutator<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.clifford_star(a, b)? + self.clifford_star(b, a)?)
    }

    pub fn mc_commutator<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.moyal_clifford_star(a, b)? - self.moyal_clifford_star(b, a)?)
    }

    pub fn mc_anticommutator<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.moyal_clifford_star(a, b)? + self.moyal_clifford_star(b, a)?)
    }

    /// Metric inner product of two vectors, `⟨a ★ b⟩₀`.
    pub fn dot<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<PhasePoly<S>> {
        if !a.is_pure_grade(1) {
            return Err(Error::NotAVector { grades: a.grades() });
        }
        if !b.is_pure_grade(1) {
            return Err(Error::NotAVector { grades: b.grades() });
        }
        Ok(self.clifford_star(a, b)?.scalar_part())
    }
}

fn blade_product(metric: &Metric, a: Blade, b: Blade) -> Vec<(Blade, BigRational)> {
    let mut acc: Vec<(Blade, BigRational)> = Vec::new();
    contract(metric, a, b, BigRational::one(), 0, &mut acc);
    acc.retain(|(_, w)| !w.is_zero());
    acc.sort_by(|x, y| x.0.cmp(&y.0));
    acc
}

/// Adds `weight · (a ∧ b)` plus every further contraction that uses an
/// `a`-generator with index `>= min_index`, so each contraction set is
/// visited once, in increasing order of its `a`-indices.
fn contract(
    metric: &Metric,
    a: Blade,
    b: Blade,
    weight: BigRational,
    min_index: usize,
    acc: &mut Vec<(Blade, BigRational)>,
) {
    if let Some((sign, blade)) = a.wedge(b) {
        let w = if sign < 0 { -weight.clone() } else { weight.clone() };
        match acc.iter_mut().find(|(bl, _)| *bl == blade) {
            Some(slot) => slot.1 += w,
            None => acc.push((blade, w)),
        }
    }
    for i in a.indices().filter(|&i| i >= min_index) {
        let Some((sa, a_rest)) = a.right_derivative(i) else { continue };
        for j in b.indices() {
            let eta = metric.get(i, j);
            if eta.is_zero() {
                continue;
            }
            let Some((sb, b_rest)) = b.left_derivative(j) else { continue };
            let mut w = &weight * eta;
            if sa * sb < 0 {
                w = -w;
            }
            contract(metric, a_rest, b_rest, w, i + 1, acc);
        }
    }
}
