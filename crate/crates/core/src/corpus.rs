//! Built-in algebras.
//!
//! Expressions accepted by [`parse`]: a `+`-separated list of factors (direct
//! product), each one of
//!
//! | factor            | algebra                                           |
//! |-------------------|---------------------------------------------------|
//! | `abelian:n`       | `Q^n` with zero bracket                           |
//! | `aff1`            | `[h, x] = x`                                       |
//! | `heis3`           | `[x, y] = z`                                       |
//! | `sl2`             | `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f`        |
//! | `sl2sl2`          | `sl2 ⊕ sl2`                                        |
//! | `ut:n`, `sut:n`   | upper / strictly upper triangular `n x n` matrices |
//! | `sl2_v2`          | `sl2 ⋉ Q^2`, natural action                         |
//! | `d1_v2`           | `Q·diag(1,2) ⋉ Q^2`                                 |
//! | `sl2-irrep:n`     | `sl2 ⋉ V(n)`, `V(n)` irreducible of dimension n+1  |
//! | `diag:a,b,...`    | `Q·diag(a,b,...) ⋉ Q^k`                             |

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lie::{direct_product, operator_semidirect, semidirect_product};
use crate::linalg::Matrix;
use crate::{q, LieAlgebra, Rational};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n).with_labels((0..n).map(|i| format!("a{}", i + 1)).collect())
}

/// Two-dimensional nonabelian algebra: `[h, x] = x`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_int_brackets(&["h", "x"], &[(0, 1, &[0, 1])]).unwrap()
}

/// Heisenberg algebra: `[x, y] = z`.
pub fn heis3() -> LieAlgebra {
    LieAlgebra::from_int_brackets(&["x", "y", "z"], &[(0, 1, &[0, 0, 1])]).unwrap()
}

/// Basis `e, f, h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        &["e", "f", "h"],
        &[(0, 1, &[0, 0, 1]), (0, 2, &[-2, 0, 0]), (1, 2, &[0, 2, 0])],
    )
    .unwrap()
}

pub fn sl2sl2() -> LieAlgebra {
    direct_product(&[sl2(), sl2()])
}

/// Matrix units `E_ij`, `i <= j` (or `i < j` when `strict`), row-major.
fn triangular(n: usize, strict: bool) -> LieAlgebra {
    let idx: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| !strict || i < j).collect();
    let dim = idx.len();
    let pos = |i: usize, j: usize| idx.iter().position(|&p| p == (i, j));
    let mut brackets = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let ((i, j), (k, l)) = (idx[a], idx[b]);
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
            let mut v = crate::linalg::zero_vector(dim);
            if j == k {
                v[pos(i, l).unwrap()] += q(1);
            }
            if l == i {
                v[pos(k, j).unwrap()] -= q(1);
            }
            if !crate::linalg::is_zero_vector(&v) {
                brackets.push((a, b, v));
            }
        }
    }
    let names = idx.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    LieAlgebra::from_brackets(names, &brackets).unwrap()
}

/// Upper triangular `n x n` matrices; basis `e_ij`, `i <= j`, row-major.
pub fn ut(n: usize) -> LieAlgebra {
    triangular(n, false)
}

/// Strictly upper triangular `n x n` matrices.
pub fn sut(n: usize) -> LieAlgebra {
    triangular(n, true)
}

/// `e, f, h` as 2x2 matrices.
pub fn sl2_natural() -> [Matrix; 3] {
    [
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
    ]
}

/// `e, f, h` on the irreducible module of dimension `n + 1`, weight basis
/// `v_0, ..., v_n` with `h v_i = (n - 2i) v_i`, `f v_i = (i + 1) v_{i+1}`,
/// `e v_i = (n - i + 1) v_{i-1}`.
pub fn sl2_irrep(n: usize) -> [Matrix; 3] {
    let d = n + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    for i in 0..d {
        h.set(i, i, q(n as i64 - 2 * i as i64));
        if i + 1 < d {
            f.set(i + 1, i, q(i as i64 + 1));
        }
        if i > 0 {
            e.set(i - 1, i, q((n - i + 1) as i64));
        }
    }
    [e, f, h]
}

fn module_labels(k: usize) -> impl Iterator<Item = String> {
    (0..k).map(|i| format!("v{}", i + 1))
}

/// `sl2 ⋉ V(n)`.
pub fn sl2_irrep_semidirect(n: usize) -> LieAlgebra {
    let module = LieAlgebra::abelian(n + 1).with_labels(module_labels(n + 1).collect());
    semidirect_product(&sl2(), &module, &sl2_irrep(n)).unwrap()
}

/// `sl2 ⋉ Q^2`.
pub fn sl2_v2() -> LieAlgebra {
    let alg = operator_semidirect(&sl2_natural()).unwrap();
    alg.with_labels(labels(&["e", "f", "h", "v1", "v2"]))
}

/// `Q·D ⋉ Q^k` for `D = diag(entries)`.
pub fn diagonal_semidirect(entries: &[Rational]) -> LieAlgebra {
    let k = entries.len();
    let d = Matrix::diagonal(entries);
    let base = if d.is_zero() { LieAlgebra::abelian(0) } else { LieAlgebra::abelian(1) };
    let ops = if d.is_zero() { Vec::new() } else { alloc::vec![d] };
    let module = LieAlgebra::abelian(k);
    let alg = semidirect_product(&base, &module, &ops).unwrap();
    let mut names: Vec<String> = if ops.is_empty() { Vec::new() } else { labels(&["d"]) };
    names.extend(module_labels(k));
    alg.with_labels(names)
}

/// `Q·diag(1,2) ⋉ Q^2`.
pub fn d1_v2() -> LieAlgebra {
    diagonal_semidirect(&[q(1), q(2)])
}

fn bad(msg: String) -> Error {
    Error::Malformed(msg)
}

fn one_param(name: &str, params: &[&str]) -> Result<usize> {
    match params {
        [p] => p.trim().parse().map_err(|_| bad(format!("{name}: parameter {p:?} is not a count"))),
        _ => Err(bad(format!("{name} takes exactly one parameter"))),
    }
}

fn no_params(name: &str, params: &[&str]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(bad(format!("{name} takes no parameters")))
    }
}

/// A single named algebra with its parameters.
pub fn by_name(name: &str, params: &[&str]) -> Result<LieAlgebra> {
    Ok(match name {
        "abelian" => abelian(one_param(name, params)?),
        "aff1" => no_params(name, params).map(|_| aff1())?,
        "heis3" => no_params(name, params).map(|_| heis3())?,
        "sl2" => no_params(name, params).map(|_| sl2())?,
        "sl2sl2" => no_params(name, params).map(|_| sl2sl2())?,
        "sl2_v2" => no_params(name, params).map(|_| sl2_v2())?,
        "d1_v2" => no_params(name, params).map(|_| d1_v2())?,
        "ut" | "sut" => {
            let n = one_param(name, params)?;
            if n == 0 {
                return Err(bad(format!("{name}: size must be positive")));
            }
            if name == "ut" {
                ut(n)
            } else {
                sut(n)
            }
        }
        "sl2-irrep" => sl2_irrep_semidirect(one_param(name, params)?),
        "diag" => {
            if params.is_empty() {
                return Err(bad(String::from("diag needs at least one entry")));
            }
            let entries = params.iter().map(|p| crate::parse_rational(p.trim())).collect::<Result<Vec<_>>>()?;
            diagonal_semidirect(&entries)
        }
        _ => return Err(bad(format!("unknown corpus algebra {name:?}"))),
    })
}

/// Parses an expression such as `sl2+heis3` or `ut:3` (see module docs).
pub fn parse(expr: &str) -> Result<LieAlgebra> {
    let mut factors = Vec::new();
    for part in expr.split('+') {
        let part = part.trim();
        let mut it = part.splitn(2, ':');
        let name = it.next().unwrap_or_default();
        let params: Vec<&str> = match it.next() {
            Some(rest) if name == "diag" => rest.split(',').collect(),
            Some(rest) => rest.split(':').collect(),
            None => Vec::new(),
        };
        factors.push(by_name(name, &params)?);
    }
    Ok(if factors.len() == 1 { factors.pop().unwrap() } else { direct_product(&factors) })
}

/// The named algebras swept by corpus-wide checks.
pub fn standard() -> Vec<(String, LieAlgebra)> {
    [
        "abelian:1", "abelian:2", "abelian:3", "aff1", "heis3", "sl2", "sl2sl2", "ut:2", "ut:3", "ut:4", "sut:4",
        "sl2_v2", "d1_v2", "sl2-irrep:2", "diag:1,-1", "sl2+abelian:2", "sl2+heis3", "aff1+aff1", "heis3+abelian:1",
        "aff1+sl2",
    ]
    .iter()
    .map(|name| (name.to_string(), parse(name).unwrap()))
    .collect()
}
