//! Structured verdicts. A [`Report`] is an ordered list of named checks; it
//! passes iff every check passes. Checks are never short-circuited.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{Field, Matrix, SparseVec};

/// Two output vectors that should have been equal, and the input that
/// produced them. Vectors are sparse `(index, value)` lists of the printed
/// scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis index of the input in the source of the compared maps.
    pub input: usize,
    pub lhs: Vec<(usize, String)>,
    pub rhs: Vec<(usize, String)>,
}

impl Witness {
    pub fn from_vectors<F: Field>(input: usize, lhs: &SparseVec<F>, rhs: &SparseVec<F>) -> Witness {
        let show = |v: &SparseVec<F>| v.iter().map(|(i, x)| (i, x.to_string())).collect();
        Witness { input, lhs: show(lhs), rhs: show(rhs) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.failed().map(|c| c.name.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when a check of this exact name exists and passed.
    pub fn check_passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, witness: None, note: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, note: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: false,
            witness: None,
            note: Some(note.into()),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, note: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: ok, witness: None, note });
    }

    /// Compares two matrices column by column; the witness is the first
    /// differing column.
    pub fn check_eq<F: Field>(&mut self, name: impl Into<String>, lhs: &Matrix<F>, rhs: &Matrix<F>) -> bool {
        let name = name.into();
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            self.fail(
                name,
                format!(
                    "shape mismatch: {}x{} vs {}x{}",
                    lhs.rows(),
                    lhs.cols(),
                    rhs.rows(),
                    rhs.cols()
                ),
            );
            return false;
        }
        match lhs.first_difference(rhs) {
            None => {
                self.pass(name);
                true
            }
            Some(j) => {
                let w = Witness::from_vectors(j, lhs.col(j), rhs.col(j));
                self.checks.push(Check { name, passed: false, witness: Some(w), note: None });
                false
            }
        }
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.passed(),
            "checks": serde_json::to_value(&self.checks).expect("report serializes"),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            match &c.note {
                Some(n) => write!(f, "{mark}  {:<width$}  ({n})", c.name)?,
                None => write!(f, "{mark}  {}", c.name)?,
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(f, "      input basis vector {}", w.input)?;
                writeln!(f, "      lhs {}", show_sparse(&w.lhs))?;
                writeln!(f, "      rhs {}", show_sparse(&w.rhs))?;
            }
        }
        let failed = self.failed().count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn show_sparse(v: &[(usize, String)]) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    v.iter().map(|(i, x)| format!("{x}*e{i}")).collect::<Vec<_>>().join(" + ")
}
