//! Exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Rational>` / `&[Rational]`; matrices act on column
//! vectors. A [`Subspace`] is stored through its reduced row-echelon basis,
//! which is unique, so structural equality is subspace equality.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::Echelon;
pub use matrix::Matrix;
pub use subspace::{complement_codim, Subspace};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::Rational;

/// The zero vector of length `n`.
pub fn zero_vector(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vector(n);
    v[i] = crate::q(1);
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += factor * v`, skipping zero entries of `v`.
pub(crate) fn axpy(acc: &mut [Rational], factor: &Rational, v: &[Rational]) {
    if factor.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += factor * x;
        }
    }
}

/// Linear combination `sum coeffs[i] * vectors[i]`.
pub fn combine(n: usize, coeffs: &[Rational], vectors: &[Vec<Rational>]) -> Vec<Rational> {
    let mut out = zero_vector(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// One particular solution of `a x = b` (free variables set to zero), or
/// `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must equal row count");
    let n = a.cols();
    let mut ech = Echelon::new(n + 1);
    for (i, bi) in b.iter().enumerate() {
        let mut row = a.row(i).to_vec();
        row.push(bi.clone());
        ech.insert(row);
    }
    let (rows, pivots) = ech.into_rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}
