//! Resolving command-line targets and printing subspaces.

use std::path::Path;

use lierad_core::{corpus, format_rational, LieAlgebra, Rational, Subspace};
use num_traits::{One, Signed, Zero};

use crate::error::CliError;
use crate::format::load_algebra;

/// `corpus:EXPR` names a built-in algebra (for example `corpus:ut:3` or
/// `corpus:sl2+heis3`); anything else is read as an algebra file.
pub fn resolve(target: &str) -> Result<(String, LieAlgebra), CliError> {
    match target.strip_prefix("corpus:") {
        Some(expr) => {
            let l = corpus::parse(expr).map_err(|e| CliError::Usage(format!("bad corpus target `{expr}`: {e}")))?;
            Ok((expr.to_string(), l))
        }
        None => load_algebra(Path::new(target)),
    }
}

/// `x + 2y - 1/2z` style rendering of a vector in the labelled basis.
pub fn combination(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format_rational(&a));
            if !a.denom().is_one() {
                out.push('·');
            }
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `span{...}` over the labelled basis, `0` for the zero subspace.
pub fn describe(labels: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| combination(labels, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lierad_core::{q, qf};

    #[test]
    fn renders_combinations() {
        let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(combination(&labels, &[q(1), q(-2), qf(1, 2)]), "x - 2y + 1/2·z");
        assert_eq!(combination(&labels, &[q(0), q(0), q(0)]), "0");
        assert_eq!(describe(&labels, &Subspace::coordinate(3, &[2])), "span{z}");
    }

    #[test]
    fn resolves_corpus_targets() {
        assert_eq!(resolve("corpus:ut:3").unwrap().1.dim(), 6);
        assert!(matches!(resolve("corpus:nope"), Err(CliError::Usage(_))));
        assert!(matches!(resolve("/nonexistent/file.json"), Err(CliError::Io { .. })));
    }
}
