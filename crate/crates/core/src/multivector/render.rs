use std::fmt;

use super::blade::Blade;
use super::mv::Multivector;
use crate::phase_poly::render::{join_terms, FlatTerm};
use crate::scalar::Scalar;

impl<S: Scalar> Multivector<S> {
    /// Canonical text rendering, e.g. `(1/2) + (-1/2)*i*e1e2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<FlatTerm> = Vec::new();
        for (blade, c) in self.terms() {
            let flat = c.flat_terms();
            if blade == Blade::SCALAR {
                parts.extend(flat);
                continue;
            }
            let text = match flat.as_slice() {
                [t] if t.body == "1" => {
                    parts.push(FlatTerm {
                        negative: t.negative,
                        body: blade.to_string(),
                    });
                    continue;
                }
                [_] => format!("{}*{}", join_terms(&flat), blade),
                _ => format!("({})*{}", join_terms(&flat), blade),
            };
            match text.strip_prefix('-') {
                Some(rest) => parts.push(FlatTerm {
                    negative: true,
                    body: rest.to_string(),
                }),
                None => parts.push(FlatTerm {
                    negative: false,
                    body: text,
                }),
            }
        }
        join_terms(&parts)
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
