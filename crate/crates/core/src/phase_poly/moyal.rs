use std::collections::HashMap;

use super::poly::{PhasePoly, Var};
use crate::scalar::{binomial, factorial, Scalar};

/// Memoized mixed partial derivatives `∂_q^a ∂_p^b` of a fixed value.
pub(crate) struct Derivatives<'a, T> {
    cache: HashMap<(u32, u32), T>,
    step: &'a dyn Fn(&T, Var) -> T,
}

impl<'a, T: Clone> Derivatives<'a, T> {
    pub(crate) fn new(base: T, step: &'a dyn Fn(&T, Var) -> T) -> Self {
        let mut cache = HashMap::new();
        cache.insert((0, 0), base);
        Self { cache, step }
    }

    pub(crate) fn get(&mut self, q_order: u32, p_order: u32) -> T {
        if let Some(v) = self.cache.get(&(q_order, p_order)) {
            return v.clone();
        }
        let v = if p_order > 0 {
            let prev = self.get(q_order, p_order - 1);
            (self.step)(&prev, Var::P)
        } else {
            let prev = self.get(q_order - 1, 0);
            (self.step)(&prev, Var::Q)
        };
        self.cache.insert((q_order, p_order), v.clone());
        v
    }
}

/// Coefficient weights of the Moyal bidifferential expansion at order `n`:
/// `(iħ/2)^n / n! · C(n,k) (−1)^k` for `k = 0..=n`. The `k`-th weight goes
/// with `(∂_q^{n−k} ∂_p^k f)(∂_q^k ∂_p^{n−k} g)`.
pub(crate) fn moyal_weights<S: Scalar>(n: u32) -> Vec<S> {
    let half_i_hbar = S::imag() * S::hbar() * S::from_ratio(1, 2);
    let mut prefactor = S::from_rational(&factorial(n).recip());
    for _ in 0..n {
        prefactor = prefactor * half_i_hbar.clone();
    }
    (0..=n)
        .map(|k| {
            let c = S::from_rational(&binomial(n, k));
            let signed = if k % 2 == 1 { -c } else { c };
            signed * prefactor.clone()
        })
        .collect()
}

fn poly_step<S: Scalar>(f: &PhasePoly<S>, v: Var) -> PhasePoly<S> {
    f.diff(v, 1)
}

/// Moyal product `f exp[(iħ/2)(←∂_q →∂_p − ←∂_p →∂_q)] g`.
///
/// The series stops at order `min(deg f, deg g)`; beyond it every
/// bidifferential term vanishes.
pub fn moyal_star<S: Scalar>(f: &PhasePoly<S>, g: &PhasePoly<S>) -> PhasePoly<S> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return PhasePoly::zero();
    };
    let step = poly_step::<S>;
    let mut left = Derivatives::new(f.clone(), &step);
    let mut right = Derivatives::new(g.clone(), &step);
    let mut out = PhasePoly::zero();
    for n in 0..=df.min(dg) {
        for (k, w) in moyal_weights::<S>(n).into_iter().enumerate() {
            let k = k as u32;
            let a = left.get(n - k, k);
            if a.is_zero() {
                continue;
            }
            let b = right.get(k, n - k);
            if b.is_zero() {
                continue;
            }
            out = out + a.poly_mul(&b).scale(&w);
        }
    }
    out
}

/// `f ★ g − g ★ f`.
pub fn moyal_commutator<S: Scalar>(f: &PhasePoly<S>, g: &PhasePoly<S>) -> PhasePoly<S> {
    moyal_star(f, g) - moyal_star(g, f)
}

/// `∂_q f ∂_p g − ∂_p f ∂_q g`, normalized so that `{q, p} = 1`.
pub fn poisson_bracket<S: Scalar>(f: &PhasePoly<S>, g: &PhasePoly<S>) -> PhasePoly<S> {
    f.diff(Var::Q, 1).poly_mul(&g.diff(Var::P, 1)) - f.diff(Var::P, 1).poly_mul(&g.diff(Var::Q, 1))
}

impl<S: Scalar> PhasePoly<S> {
    pub fn star(&self, other: &Self) -> Self {
        moyal_star(self, other)
    }
}
