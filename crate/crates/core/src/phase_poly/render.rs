//! Canonical text form, e.g. `q*p + (1/2)*i*hbar`.
//!
//! Terms are ordered by descending total degree, then descending power of
//! `q`; inside one monomial by descending power of ħ with the real part
//! first. Negative powers of ħ are written as a trailing `/hbar^k`.

use std::fmt;

use super::poly::{Monomial, PhasePoly};
use crate::scalar::{Atom, Scalar};

/// A signed summand; `body` carries no sign.
#[derive(Clone, Debug)]
pub(crate) struct FlatTerm {
    pub negative: bool,
    pub body: String,
}

fn power(name: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

fn render_atom(atom: &Atom, m: Monomial) -> FlatTerm {
    let mut numerator: Vec<String> = Vec::new();
    if atom.imaginary {
        numerator.push("i".into());
    }
    if atom.hbar_power > 0 {
        numerator.extend(power("hbar", atom.hbar_power as u32));
    }
    numerator.extend(power("q", m.q_exp));
    numerator.extend(power("p", m.p_exp));
    if !atom.unit || numerator.is_empty() {
        numerator.insert(0, atom.magnitude.clone());
    }
    let mut body = numerator.join("*");
    if atom.hbar_power < 0 {
        body.push('/');
        body.push_str(&power("hbar", (-atom.hbar_power) as u32).unwrap_or_default());
    }
    FlatTerm {
        negative: atom.negative,
        body,
    }
}

pub(crate) fn join_terms(terms: &[FlatTerm]) -> String {
    let mut out = String::new();
    for (idx, t) in terms.iter().enumerate() {
        if idx == 0 {
            if t.negative {
                if let Some(rest) = t.body.strip_prefix('(') {
                    out.push_str("(-");
                    out.push_str(rest);
                } else {
                    out.push('-');
                    out.push_str(&t.body);
                }
            } else {
                out.push_str(&t.body);
            }
        } else {
            out.push_str(if t.negative { " - " } else { " + " });
            out.push_str(&t.body);
        }
    }
    out
}

impl<S: Scalar> PhasePoly<S> {
    pub(crate) fn flat_terms(&self) -> Vec<FlatTerm> {
        let mut monomials: Vec<(Monomial, &S)> = self.terms().collect();
        monomials.sort_by_key(|(m, _)| m.print_key());
        monomials
            .into_iter()
            .flat_map(|(m, c)| c.atoms().into_iter().map(move |a| render_atom(&a, m)))
            .collect()
    }

    /// Canonical text rendering; identical to `Display`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        join_terms(&self.flat_terms())
    }
}

impl<S: Scalar> fmt::Display for PhasePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use crate::{HbarScalar, Poly, PolyF64, Scalar};
    use num_traits::One;
    use num_complex::Complex;

    #[test]
    fn star_example_rendering() {
        let f = crate::moyal_star(&Poly::q(), &Poly::p());
        assert_eq!(f.render(), "q*p + (1/2)*i*hbar");
    }

    #[test]
    fn ordering_and_signs() {
        let h1 = (Poly::p().pow(2) + Poly::q().pow(2) - Poly::hbar()).scale(&HbarScalar::from_ratio(1, 2));
        assert_eq!(h1.render(), "(1/2)*q^2 + (1/2)*p^2 - (1/2)*hbar");
        let f = Poly::q().pow(3) - Poly::q();
        assert_eq!(f.render(), "q^3 - q");
        assert_eq!((-Poly::q()).render(), "-q");
        assert_eq!(Poly::rational(-1, 2).render(), "(-1/2)");
        assert_eq!(Poly::rational(-3, 1).render(), "-3");
        assert_eq!(Poly::zero().render(), "0");
        assert_eq!(Poly::one().render(), "1");
    }

    #[test]
    fn negative_hbar_powers() {
        let f = Poly::q().scale(&(HbarScalar::from_integer(-2) * HbarScalar::hbar_pow(-1)));
        assert_eq!(f.render(), "-2*q/hbar");
        let g = Poly::constant(HbarScalar::hbar_pow(-2));
        assert_eq!(g.render(), "1/hbar^2");
    }

    #[test]
    fn complex_coefficients() {
        let c = HbarScalar::one() + HbarScalar::imag() * HbarScalar::from_integer(2);
        assert_eq!(Poly::q().scale(&c).render(), "q + 2*i*q");
        let f = PolyF64::q().scale(&Complex::new(0.5, -1.0));
        assert_eq!(f.render(), "0.5*q - i*q");
    }
}
