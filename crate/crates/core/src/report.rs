//! Report types shared by the validators and checkers.
//!
//! Every check either passes or fails with concrete witnesses; there is no
//! "approximately passed". Reports serialize to JSON with stable field and
//! key order so repeated runs are byte-identical.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Clone, Debug)]
pub struct Witness {
    /// Basis labels (or harmonic element names) the failure was observed on.
    pub inputs: Vec<String>,
    /// What went wrong, with the exact residue.
    pub detail: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Free-form extras such as the sign convention a run settled on.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn add_witness(&mut self, inputs: Vec<String>, detail: impl Into<String>) {
        self.status = Status::Fail;
        self.witnesses.push(Witness { inputs, detail: detail.into() });
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, if self.passed() { "pass" } else { "FAIL" })?;
        for (k, v) in &self.details {
            write!(f, "\n  {k}: {v}")?;
        }
        for w in &self.witnesses {
            write!(f, "\n  at [{}]: {}", w.inputs.join(", "), w.detail)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of structural validation of a DGA: one row per axiom, with a
/// witness basis tuple for the first observed failure of each.
#[derive(Serialize, Clone, Debug)]
pub struct ValidationReport {
    pub axioms: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.axioms.iter().filter(|a| !a.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.axioms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", a.axiom, if a.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &a.witness {
                write!(f, " ({w})")?;
            }
        }
        Ok(())
    }
}
