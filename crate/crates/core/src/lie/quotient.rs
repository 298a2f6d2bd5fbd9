use alloc::format;
use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Subspace};
use crate::Rational;

/// A quotient `L / I` with its projection and a linear section.
///
/// The quotient basis is the images of the standard basis vectors at the
/// non-pivot coordinates of `I`; `section` sends quotient basis vector `k`
/// to that standard basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub quotient: LieAlgebra,
    /// `dim(L/I) x dim L`.
    pub projection: Matrix,
    /// `dim L x dim(L/I)`.
    pub section: Matrix,
}

impl QuotientData {
    /// Kernel of the projection.
    pub fn kernel(&self) -> Subspace {
        self.projection.nullspace()
    }

    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        self.projection.mul_vec(v)
    }

    pub fn project_space(&self, s: &Subspace) -> Subspace {
        s.image(&self.projection)
    }

    /// Full preimage of a subspace of the quotient.
    pub fn pull_back(&self, s: &Subspace) -> Subspace {
        Subspace::preimage(&self.projection, s)
    }
}

impl LieAlgebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientData> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: ideal.ambient_dim() });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let free = ideal.non_pivots();
        let d = free.len();
        let mut projection = Matrix::zeros(d, n);
        for j in 0..n {
            let r = ideal.reduce(&crate::linalg::unit_vector(n, j));
            for (k, &c) in free.iter().enumerate() {
                projection.set(k, j, r[c].clone());
            }
        }
        let mut section = Matrix::zeros(n, d);
        for (k, &c) in free.iter().enumerate() {
            section.set(c, k, crate::q(1));
        }
        let mut c = zero_vector(d * d * d);
        for a in 0..d {
            for b in 0..d {
                let img = projection.mul_vec(self.structure(free[a], free[b]));
                c[(a * d + b) * d..(a * d + b + 1) * d].clone_from_slice(&img);
            }
        }
        let labels = free.iter().map(|&i| format!("[{}]", self.labels()[i])).collect();
        Ok(QuotientData { quotient: LieAlgebra::raw(labels, c), projection, section })
    }
}
