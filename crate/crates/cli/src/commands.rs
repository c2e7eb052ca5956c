//! Command implementations, independent of argument parsing.

use std::fmt::Write as _;

use moyal_clifford::gauss_wigner::{bopp_star_left, oscillator_wigner};
use moyal_clifford::multivector::MAX_DIM;
use moyal_clifford::susy::{
    ladder_check, verify_pauli_algebra, verify_projectors, verify_susy_algebra, Report, Superpotential, SusyParts,
};
use moyal_clifford::{moyal_star, CliffordAlgebra, HbarScalar, Metric, Poly, Scalar};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{parse_mv, parse_poly, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error in `{src}`: {}", err.annotate(src))]
    Parse { src: String, err: ParseError },
    #[error("{0}")]
    Library(#[from] moyal_clifford::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn parse_err(src: &str) -> impl FnOnce(ParseError) -> CliError + '_ {
    move |err| CliError::Parse { src: src.to_string(), err }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarKind {
    Moyal,
    Clifford,
    Mc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identity {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Output of `factorize`, `genvalue` and `verify`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CommandReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub superpotential: Option<String>,
    #[serde(rename = "H1", skip_serializing_if = "Option::is_none")]
    pub h1: Option<String>,
    #[serde(rename = "H2", skip_serializing_if = "Option::is_none")]
    pub h2: Option<String>,
    /// Extra `label = value` lines shown in text mode only.
    #[serde(skip)]
    pub summary: Vec<(String, String)>,
    pub identities: Vec<Identity>,
}

impl CommandReport {
    fn add(&mut self, report: Report) {
        self.identities.extend(report.checks.into_iter().map(|c| Identity {
            name: c.name,
            pass: c.pass,
            lhs: c.lhs,
            rhs: c.rhs,
        }));
    }

    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut header: Vec<(&str, &String)> = Vec::new();
        if let Some(w) = &self.superpotential {
            header.push(("W", w));
        }
        header.extend(self.summary.iter().map(|(k, v)| (k.as_str(), v)));
        if let Some(h) = &self.h1 {
            header.push(("H1", h));
        }
        if let Some(h) = &self.h2 {
            header.push(("H2", h));
        }
        let width = header.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in header {
            let _ = writeln!(out, "{k:<width$} = {v}");
        }
        if width > 0 {
            out.push('\n');
        }
        for id in &self.identities {
            let _ = writeln!(out, "{} {}", if id.pass { "PASS" } else { "FAIL" }, id.name);
            if !id.pass {
                let _ = writeln!(out, "    lhs: {}\n    rhs: {}", id.lhs, id.rhs);
            }
        }
        let passed = self.identities.iter().filter(|i| i.pass).count();
        let _ = writeln!(out, "{passed}/{} identities pass", self.identities.len());
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json() + "\n",
        }
    }
}

/// Canonical rendering of a raw star product.
pub fn star(kind: StarKind, lhs: &str, rhs: &str, dim: usize) -> Result<String, CliError> {
    if kind == StarKind::Moyal {
        let a = parse_poly(lhs).map_err(parse_err(lhs))?;
        let b = parse_poly(rhs).map_err(parse_err(rhs))?;
        return Ok(moyal_star(&a, &b).render());
    }
    if dim == 0 || dim > MAX_DIM {
        return Err(CliError::Usage(format!("--dim must be between 1 and {MAX_DIM}, got {dim}")));
    }
    let a = parse_mv(lhs, dim).map_err(parse_err(lhs))?;
    let b = parse_mv(rhs, dim).map_err(parse_err(rhs))?;
    let algebra = CliffordAlgebra::new(Metric::euclidean(dim)?);
    let out = match kind {
        StarKind::Clifford => algebra.clifford_star(&a, &b)?,
        _ => algebra.moyal_clifford_star(&a, &b)?,
    };
    Ok(out.render())
}

/// Parses `W`, derives the star-factorized system and checks every identity.
pub fn factorize(w_src: &str) -> Result<CommandReport, CliError> {
    let w = parse_poly(w_src).map_err(parse_err(w_src))?;
    let superpotential = Superpotential::new(w)?;
    let algebra = CliffordAlgebra::euclidean_plane();
    let parts = SusyParts::derive(&algebra, superpotential)?;

    let mut report = CommandReport {
        superpotential: Some(parts.superpotential.poly().render()),
        h1: Some(parts.h1.render()),
        h2: Some(parts.h2.render()),
        summary: vec![
            ("w".into(), parts.w.render()),
            ("H_S".into(), parts.hs.render()),
            ("Q+".into(), parts.charges.plus.render()),
            ("Q-".into(), parts.charges.minus.render()),
        ],
        identities: Vec::new(),
    };
    report.add(verify_susy_algebra(&algebra, &parts)?);
    report.add(parts.frame.verify(&algebra)?);
    report.add(verify_pauli_algebra::<HbarScalar>(&algebra)?);
    report.add(verify_projectors::<HbarScalar>(&algebra)?);
    report.add(ladder_check(&algebra, &parts.frame)?);
    Ok(report)
}

/// Star-genvalue equations of the oscillator partners `W = q` at levels
/// `0..=n`. With `tamper`, the level-0 eigenvalue of `H1` is shifted by ħ.
pub fn genvalue(n: u32, max_level: u32, tamper: bool) -> Result<CommandReport, CliError> {
    if n > max_level {
        return Err(CliError::Usage(format!("--n {n} exceeds --max-level {max_level}")));
    }
    let superpotential = Superpotential::new(Poly::q())?;
    let (h1, h2) = moyal_clifford::susy::partner_hamiltonians(&superpotential);
    let mut report = Report::new();
    for k in 0..=n {
        let wk = oscillator_wigner(k);
        let mut e1 = HbarScalar::hbar() * HbarScalar::from_integer(k as i64);
        if tamper && k == 0 {
            e1 = e1 + HbarScalar::hbar();
        }
        let e2 = HbarScalar::hbar() * HbarScalar::from_integer(k as i64 + 1);
        let n1 = Poly::constant(e1.clone());
        let n2 = Poly::constant(e2.clone());
        report.check(
            format!("H1 *M W{k} = ({n1}) W{k}"),
            &bopp_star_left(&h1, &wk),
            &wk.scale(&e1),
        );
        report.check(
            format!("H2 *M W{k} = ({n2}) W{k}"),
            &bopp_star_left(&h2, &wk),
            &wk.scale(&e2),
        );
    }
    let mut out = CommandReport {
        superpotential: Some(superpotential.poly().render()),
        h1: Some(h1.render()),
        h2: Some(h2.render()),
        ..Default::default()
    };
    out.add(report);
    Ok(out)
}

/// The built-in suite: Clifford identities on the phase plane, the SUSY
/// algebra for a few superpotentials, and the oscillator genvalue ladder.
pub fn verify() -> Result<CommandReport, CliError> {
    let algebra = CliffordAlgebra::euclidean_plane();
    let mut out = CommandReport::default();
    out.add(verify_pauli_algebra::<HbarScalar>(&algebra)?);
    out.add(verify_projectors::<HbarScalar>(&algebra)?);
    for src in ["q", "q^2", "q^3 - q"] {
        let mut part = factorize(src)?;
        for id in &mut part.identities {
            id.name = format!("[W = {src}] {}", id.name);
        }
        out.identities.extend(part.identities);
    }
    out.identities.extend(genvalue(3, 3, false)?.identities);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        assert_eq!(star(StarKind::Moyal, "q", "p", 2).unwrap(), "q*p + (1/2)*i*hbar");
        assert_eq!(star(StarKind::Clifford, "e1", "e1", 2).unwrap(), "1");
        assert_eq!(star(StarKind::Mc, "q*e1", "p*e2", 2).unwrap(), "(q*p + (1/2)*i*hbar)*e1e2");
        assert!(matches!(star(StarKind::Clifford, "e3", "e1", 2), Err(CliError::Parse { .. })));
        assert!(matches!(star(StarKind::Clifford, "e1", "e1", 9), Err(CliError::Usage(_))));
    }

    #[test]
    fn factorize_examples() {
        let r = factorize("q").unwrap();
        assert_eq!(r.h1.as_deref(), Some("(1/2)*q^2 + (1/2)*p^2 - (1/2)*hbar"));
        assert!(r.all_pass());
        assert!(factorize("q^3-q").unwrap().all_pass());
        let err = factorize("p").unwrap_err();
        assert_eq!(err.to_string(), "invalid superpotential: superpotential must depend on q only");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn json_and_text_agree() {
        let r = factorize("q^2").unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let ids = v["identities"].as_array().unwrap();
        assert_eq!(ids.len(), r.identities.len());
        let text = r.to_text();
        for (j, id) in ids.iter().zip(&r.identities) {
            assert_eq!(j["pass"].as_bool().unwrap(), id.pass);
            assert!(text.contains(&format!("PASS {}", id.name)));
        }
        assert_eq!(v["H2"], "(1/2)*q^4 + (1/2)*p^2 + hbar*q");
    }

    #[test]
    fn genvalue_examples() {
        let r = genvalue(0, 6, false).unwrap();
        assert_eq!(r.identities[0].name, "H1 *M W0 = (0) W0");
        assert!(r.all_pass());
        let r = genvalue(2, 6, false).unwrap();
        assert_eq!(r.identities.len(), 6);
        assert!(r.all_pass());
        let r = genvalue(0, 6, true).unwrap();
        assert!(!r.identities[0].pass);
        assert_eq!(r.exit_code(), 1);
        assert!(matches!(genvalue(7, 6, false), Err(CliError::Usage(_))));
    }

    #[test]
    fn verify_suite_passes() {
        assert!(verify().unwrap().all_pass());
    }
}
