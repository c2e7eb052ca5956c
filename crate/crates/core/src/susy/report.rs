use std::fmt;

use crate::error::Error;

/// Outcome of one identity: both sides rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Ordered list of identity outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs == rhs` under `name`.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let pass = lhs == rhs;
        self.checks.push(IdentityCheck {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
        pass
    }

    pub fn push(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn find(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// `Err` with the first failing identity, if any.
    pub fn into_result(self) -> Result<Report, Error> {
        match self.first_failure() {
            Some(c) => Err(Error::IdentityFailed {
                name: c.name.clone(),
                lhs: c.lhs.clone(),
                rhs: c.rhs.clone(),
            }),
            None => Ok(self),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name)?;
            if !c.pass {
                writeln!(f, "    lhs = {}", c.lhs)?;
                writeln!(f, "    rhs = {}", c.rhs)?;
            }
        }
        Ok(())
    }
}
