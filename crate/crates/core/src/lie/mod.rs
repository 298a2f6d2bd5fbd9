//! Lie algebras given by structure constants, and the standard constructions
//! on them.

mod derivations;
mod products;
mod quotient;
mod series;

pub use products::{direct_product, matrix_lie_algebra, operator_semidirect, semidirect_product};
pub use quotient::QuotientData;
pub use series::SeriesResult;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Echelon, Matrix, Subspace};
use crate::Rational;

/// A finite-dimensional Lie algebra over `Q`.
///
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`, stored flat as
/// `c[(i * dim + j) * dim + k]`. Constructors other than [`LieAlgebra::raw`]
/// guarantee antisymmetry and the Jacobi identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rational>,
}

/// Outcome of checking the algebra axioms on every basis pair and triple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Pairs `(i, j)`, `i <= j`, with `c[i][j] != -c[j][i]`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `i < j < k` where the Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("b{i}")).collect()
}

impl LieAlgebra {
    /// Structure tensor taken as is, without any checks.
    pub fn raw(labels: Vec<String>, c: Vec<Rational>) -> Self {
        let dim = labels.len();
        assert_eq!(c.len(), dim * dim * dim, "structure tensor must have dim^3 entries");
        LieAlgebra { dim, labels, c }
    }

    /// Builds an algebra from the brackets `[b_i, b_j]` for `i < j`; omitted
    /// pairs bracket to zero. Fails if an index is out of range, a pair
    /// repeats or is not increasing, or the Jacobi identity fails.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let dim = labels.len();
        let mut alg = LieAlgebra { dim, labels, c: zero_vector(dim * dim * dim) };
        let mut seen = alloc::collections::BTreeSet::new();
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::InvalidAlgebra(format!("bracket index ({i}, {j}) out of range for dimension {dim}")));
            }
            if i >= j {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) must have i < j")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::InvalidAlgebra(format!("bracket ({i}, {j}) given twice")));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            for (k, x) in v.iter().enumerate() {
                alg.c[(i * dim + j) * dim + k] = x.clone();
                alg.c[(j * dim + i) * dim + k] = -x.clone();
            }
        }
        let report = alg.validate();
        if let Some(&(i, j, k)) = report.jacobi.first() {
            return Err(Error::InvalidAlgebra(format!("Jacobi identity fails on ({i}, {j}, {k})")));
        }
        Ok(alg)
    }

    /// Same as [`LieAlgebra::from_brackets`] with integer coefficients.
    pub fn from_int_brackets(labels: &[&str], brackets: &[(usize, usize, &[i64])]) -> Result<Self> {
        let labels = labels.iter().map(|s| String::from(*s)).collect();
        let brackets: Vec<_> =
            brackets.iter().map(|(i, j, v)| (*i, *j, v.iter().map(|&x| crate::q(x)).collect())).collect();
        Self::from_brackets(labels, &brackets)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, labels: default_labels(dim), c: zero_vector(dim * dim * dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count must equal dimension");
        self.labels = labels;
        self
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        let at = (i * self.dim + j) * self.dim;
        &self.c[at..at + self.dim]
    }

    pub fn structure_tensor(&self) -> &[Rational] {
        &self.c
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i..n {
                let ok = self.structure(i, j).iter().zip(self.structure(j, i)).all(|(a, b)| (a + b).is_zero());
                if !ok {
                    report.antisymmetry.push((i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = self.bracket(&unit_vector(n, i), self.structure(j, k));
                    let t = self.bracket(&unit_vector(n, j), self.structure(k, i));
                    let u = self.bracket(&unit_vector(n, k), self.structure(i, j));
                    for ((s, a), b) in sum.iter_mut().zip(&t).zip(&u) {
                        *s += a + b;
                    }
                    if !is_zero_vector(&sum) {
                        report.jacobi.push((i, j, k));
                    }
                }
            }
        }
        report
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        Ok(())
    }

    /// `[u, v]`; panics if either vector has the wrong length.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert!(u.len() == self.dim && v.len() == self.dim, "vector length must equal dimension");
        let mut out = zero_vector(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ui * vj), self.structure(i, j));
            }
        }
        out
    }

    pub fn checked_bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket(u, v))
    }

    /// Matrix of `ad b_i`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, x) in self.structure(i, j).iter().enumerate() {
                if !x.is_zero() {
                    m.set(k, j, x.clone());
                }
            }
        }
        m
    }

    /// Matrix of `ad x`.
    pub fn ad_of(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            m = &m + &self.ad(i).scale(xi);
        }
        m
    }

    pub fn ad_all(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.ad(i)).collect()
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// `span{[u, v] : u in U, v in V}`.
    pub fn bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut ech = Echelon::new(self.dim);
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                ech.insert(self.bracket(&a, &b));
            }
        }
        Subspace::from_echelon(ech)
    }

    pub fn checked_bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_space(u)?;
        self.check_space(v)?;
        Ok(self.bracket_spaces(u, v))
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = self.full();
        self.bracket_spaces(&full, &full)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_spaces(s, s).is_subspace_of(s)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_spaces(&self.full(), s).is_subspace_of(s)
    }

    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        self.bracket_spaces(s, s).is_zero()
    }

    /// Least subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let next = cur.join(&self.bracket_spaces(&cur, &cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Least ideal of the subalgebra `ambient` containing `s` (both given in
    /// the coordinates of `self`).
    pub fn ideal_closure_in(&self, ambient: &Subspace, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let next = cur.join(&self.bracket_spaces(ambient, &cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Least ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        self.ideal_closure_in(&self.full(), s)
    }

    /// `{x : [x, U] = 0}`.
    pub fn centralizer(&self, u: &Subspace) -> Subspace {
        // x ↦ [x, u_k] stacked over a basis of U
        let n = self.dim;
        let mut rows = Vec::new();
        for b in u.basis_vectors() {
            let mut block = Matrix::zeros(n, n);
            for i in 0..n {
                let col = self.bracket(&unit_vector(n, i), &b);
                for (k, x) in col.into_iter().enumerate() {
                    block.set(k, i, x);
                }
            }
            rows.extend(block.row_vectors());
        }
        Matrix::from_rows(n, &rows).nullspace()
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full())
    }

    /// `{x : [x, L] ⊆ target}`, the preimage of `target` under all `ad`.
    pub fn bracket_preimage(&self, target: &Subspace) -> Subspace {
        let n = self.dim;
        let mut acc = self.full();
        for j in 0..n {
            // x ↦ [x, b_j] = -ad(b_j) x
            acc = acc.meet(&Subspace::preimage(&self.ad(j), target));
        }
        acc
    }

    /// Killing form `tr(ad b_i ad b_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads = self.ad_all();
        let n = self.dim;
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].trace_of_product(&ads[j]);
                k.set(j, i, t.clone());
                k.set(i, j, t);
            }
        }
        k
    }

    pub fn killing_rank(&self) -> usize {
        self.killing_form().rank()
    }

    pub fn is_killing_nondegenerate(&self) -> bool {
        self.killing_rank() == self.dim
    }

    /// Killing-orthogonal complement of `u`.
    pub fn killing_orthogonal(&self, u: &Subspace) -> Subspace {
        let k = self.killing_form();
        let rows: Vec<_> = u.basis_vectors().iter().map(|v| k.mul_vec(v)).collect();
        Matrix::from_rows(self.dim, &rows).nullspace()
    }

    /// The subalgebra `s` as an algebra in its own canonical basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_space(s)?;
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let d = s.dim();
        let basis = s.basis_vectors();
        let mut c = zero_vector(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let coords = s.coordinates(&self.bracket(&basis[i], &basis[j])).expect("subalgebra is closed");
                c[(i * d + j) * d..(i * d + j + 1) * d].clone_from_slice(&coords);
            }
        }
        let labels = (0..d).map(|i| format!("s{i}")).collect();
        Ok(LieAlgebra { dim: d, labels, c })
    }

    /// `ad(x)` restricted to the invariant subspace `u`, in `u`'s basis.
    pub fn restricted_ad(&self, x: &[Rational], u: &Subspace) -> Result<Matrix> {
        let d = u.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, b) in u.basis_vectors().iter().enumerate() {
            let coords = u.coordinates(&self.bracket(x, b)).ok_or(Error::InvalidAction(String::from(
                "subspace is not invariant under the acting element",
            )))?;
            for (i, v) in coords.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Least `n` with `L_[n] = 0`.
    pub fn solvability_index(&self) -> Option<usize> {
        self.derived_series().solvability_index()
    }

    pub fn is_solvable(&self) -> bool {
        self.solvability_index().is_some()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_zero()
    }

    /// Solvability index of an ideal (or subalgebra) `s`, computed in `self`.
    pub fn solvability_index_of(&self, s: &Subspace) -> Option<usize> {
        self.derived_series_of(s).solvability_index()
    }

    pub fn is_nilpotent_subspace(&self, s: &Subspace) -> bool {
        let mut cur = s.clone();
        loop {
            let next = self.bracket_spaces(s, &cur);
            if next.is_zero() {
                return true;
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
    }
}

impl core::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "LieAlgebra(dim {}; {:?})", self.dim, self.labels)
    }
}

#[cfg(test)]
mod tests;
