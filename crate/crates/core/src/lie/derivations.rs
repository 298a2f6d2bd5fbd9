use alloc::vec::Vec;

use num_traits::Zero;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Echelon, Matrix, Subspace};
use crate::Rational;

impl LieAlgebra {
    /// Derivations `D` with `D[a, b] = [Da, b] + [a, Db]`, as a subspace of
    /// `Q^(dim*dim)`; operator entry `(r, s)` sits at coordinate `r * dim + s`.
    pub fn derivation_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut ech = Echelon::new(n * n);
        for i in 0..n {
            for j in i + 1..n {
                for m in 0..n {
                    let mut row = zero_vector(n * n);
                    let mut nonzero = false;
                    for k in 0..n {
                        let a = &self.structure(i, j)[k];
                        if !a.is_zero() {
                            row[m * n + k] += a;
                            nonzero = true;
                        }
                        let b = &self.structure(k, j)[m];
                        if !b.is_zero() {
                            row[k * n + i] -= b;
                            nonzero = true;
                        }
                        let c = &self.structure(i, k)[m];
                        if !c.is_zero() {
                            row[k * n + j] -= c;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        ech.insert(row);
                    }
                }
            }
        }
        ech.kernel()
    }

    /// Basis of the derivation algebra as matrices.
    pub fn derivations(&self) -> Vec<Matrix> {
        let n = self.dim();
        self.derivation_algebra().basis_vectors().iter().map(|v| Matrix::from_flat(n, v)).collect()
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return false;
        }
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.structure(i, j));
                let e_i = crate::linalg::unit_vector(n, i);
                let e_j = crate::linalg::unit_vector(n, j);
                let mut rhs = self.bracket(&cols[i], &e_j);
                for (r, x) in rhs.iter_mut().zip(self.bracket(&e_i, &cols[j])) {
                    *r += x;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The operator `ad x` flattened into derivation coordinates.
    pub fn inner_derivations(&self) -> Subspace {
        let n = self.dim();
        Subspace::from_vectors(n * n, (0..n).map(|i| self.ad(i).as_slice().to_vec()))
    }

    /// Whether the ideal `i` is invariant under every derivation.
    pub fn is_characteristic(&self, i: &Subspace) -> Result<bool> {
        if !self.is_ideal(i) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.is_derivation_invariant(i))
    }

    pub(crate) fn is_derivation_invariant(&self, i: &Subspace) -> bool {
        if i.is_zero() || i.is_full() {
            return true;
        }
        self.derivations().iter().all(|d| i.image(d).is_subspace_of(i))
    }
}
