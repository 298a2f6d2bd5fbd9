//! JSON file formats: algebras given by bracket tables, and subspace families.
//!
//! Rationals are written as strings, `"p"` or `"p/q"`. An algebra file lists
//! only the brackets `[b_i, b_j]` with `i < j`; omitted pairs are zero.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use lierad_core::chains::SubspaceFamily;
use lierad_core::{format_rational, parse_rational, LieAlgebra, Rational, Subspace};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<String>,
}

/// A family of subspaces, each given by a list of spanning rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub ambient_dim: usize,
    pub members: Vec<Vec<Vec<String>>>,
}

fn parse_error(locus: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse { locus: locus.into(), message: message.into() }
}

fn json_error(e: serde_json::Error) -> CliError {
    parse_error(format!("line {}, column {}", e.line(), e.column()), e.to_string())
}

fn rational_at(s: &str, locus: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| parse_error(locus, e.to_string()))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes") + "\n"
    }

    /// The algebra described by the file, after range, shape and Jacobi checks.
    pub fn to_algebra(&self) -> Result<LieAlgebra, CliError> {
        let dim = self.dim;
        let labels = if self.basis.is_empty() {
            (0..dim).map(|k| format!("b{k}")).collect()
        } else if self.basis.len() != dim {
            return Err(parse_error("basis", format!("{} labels for dimension {dim}", self.basis.len())));
        } else {
            self.basis.clone()
        };
        let mut seen = BTreeSet::new();
        let mut table = Vec::with_capacity(self.brackets.len());
        for (k, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{k}]");
            if b.i >= dim {
                return Err(parse_error(format!("{at}.i"), format!("index {} out of range for dimension {dim}", b.i)));
            }
            if b.j >= dim {
                return Err(parse_error(format!("{at}.j"), format!("index {} out of range for dimension {dim}", b.j)));
            }
            if b.i >= b.j {
                return Err(parse_error(at, format!("entry ({}, {}) must have i < j", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(parse_error(at, format!("pair ({}, {}) listed twice", b.i, b.j)));
            }
            if b.coefficients.len() != dim {
                return Err(parse_error(
                    format!("{at}.coefficients"),
                    format!("{} coefficients for dimension {dim}", b.coefficients.len()),
                ));
            }
            let coeffs = b
                .coefficients
                .iter()
                .enumerate()
                .map(|(m, s)| rational_at(s, &format!("{at}.coefficients[{m}]")))
                .collect::<Result<Vec<_>, _>>()?;
            table.push((b.i, b.j, coeffs));
        }
        let alg = LieAlgebra::from_brackets(labels.clone(), &table).map_err(|e| CliError::Invalid(e.to_string()))?;
        let report = alg.validate();
        if let Some(&(i, j, k)) = report.jacobi.first() {
            return Err(CliError::Invalid(format!(
                "Jacobi identity fails on ({}, {}, {})",
                labels[i], labels[j], labels[k]
            )));
        }
        Ok(alg)
    }

    /// Canonical file for an algebra: nonzero brackets with `i < j` in order.
    pub fn from_algebra(name: &str, l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = l.structure(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    brackets.push(BracketEntry { i, j, coefficients: v.iter().map(format_rational).collect() });
                }
            }
        }
        AlgebraFile { name: name.to_string(), dim: n, basis: l.labels().to_vec(), brackets }
    }
}

pub fn load_algebra(path: &Path) -> Result<(String, LieAlgebra), CliError> {
    let file = AlgebraFile::from_json(&read(path)?)?;
    let alg = file.to_algebra()?;
    Ok((file.name, alg))
}

pub fn save_algebra(name: &str, l: &LieAlgebra, path: &Path) -> Result<(), CliError> {
    write(path, &AlgebraFile::from_algebra(name, l).to_json())
}

/// Rows of a subspace's canonical basis as rational strings.
pub fn subspace_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors().iter().map(|v| v.iter().map(format_rational).collect()).collect()
}

impl FamilyFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_family(&self) -> Result<SubspaceFamily, CliError> {
        let n = self.ambient_dim;
        let mut family = SubspaceFamily::empty(n);
        for (k, rows) in self.members.iter().enumerate() {
            let mut vs = Vec::with_capacity(rows.len());
            for (r, row) in rows.iter().enumerate() {
                let at = format!("members[{k}][{r}]");
                if row.len() != n {
                    return Err(parse_error(at, format!("{} entries for ambient dimension {n}", row.len())));
                }
                let v = row
                    .iter()
                    .enumerate()
                    .map(|(c, s)| rational_at(s, &format!("{at}[{c}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                vs.push(v);
            }
            family.insert(Subspace::from_vectors(n, vs)).expect("ambient checked above");
        }
        Ok(family)
    }

    pub fn from_family(f: &SubspaceFamily) -> Self {
        FamilyFile { ambient_dim: f.ambient_dim(), members: f.members().map(subspace_rows).collect() }
    }
}

pub fn load_family(path: &Path) -> Result<SubspaceFamily, CliError> {
    FamilyFile::from_json(&read(path)?)?.to_family()
}
