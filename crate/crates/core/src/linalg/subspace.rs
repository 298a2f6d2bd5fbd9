use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use super::{axpy, is_zero_vector, zero_vector, Echelon, Matrix};
use crate::error::{Error, Result};
use crate::Rational;

/// A subspace of `Q^n`, held as its reduced row-echelon basis.
///
/// The basis is unique, so `==` is equality of subspaces. The [`Ord`]
/// instance orders by dimension, then pivot columns, then entries; it is the
/// tie-break used wherever a deterministic choice among subspaces is needed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut ech = Echelon::new(ambient);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_echelon(ech)
    }

    pub fn from_echelon(ech: Echelon) -> Self {
        let ambient = ech.width();
        let (rows, pivots) = ech.into_rref();
        Subspace { basis: Matrix::from_rows(ambient, &rows), pivots }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_vectors(m.cols(), m.row_vectors())
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::from_vectors(ambient, indices.iter().map(|&i| super::unit_vector(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn basis_vector(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.codim());
        let mut it = self.pivots.iter().peekable();
        for j in 0..self.ambient_dim() {
            if it.peek() == Some(&&j) {
                it.next();
            } else {
                out.push(j);
            }
        }
        out
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ambient_dim());
        for v in self.basis_vectors() {
            ech.insert(v);
        }
        ech
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length must equal ambient dimension");
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = -w[p].clone();
            axpy(&mut w, &f, self.basis.row(i));
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn vector_from_coordinates(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate count must equal dimension");
        let mut out = zero_vector(self.ambient_dim());
        for (i, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(i));
        }
        out
    }

    /// Image of a subspace given in this subspace's coordinates.
    pub fn embed(&self, inner: &Subspace) -> Subspace {
        assert_eq!(inner.ambient_dim(), self.dim(), "inner subspace must live in coordinates of self");
        Subspace::from_vectors(
            self.ambient_dim(),
            inner.basis_vectors().iter().map(|c| self.vector_from_coordinates(c)),
        )
    }

    /// Coordinates (in this subspace's basis) of a contained subspace.
    pub fn restrict_coordinates(&self, inner: &Subspace) -> Option<Subspace> {
        let mut vs = Vec::with_capacity(inner.dim());
        for v in inner.basis_vectors() {
            vs.push(self.coordinates(&v)?);
        }
        Some(Subspace::from_vectors(self.dim(), vs))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: other.ambient_dim() });
        }
        Ok(())
    }

    /// `U + V`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.join(other))
    }

    /// `U ∩ V`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.meet(other))
    }

    /// `U + V`; panics on an ambient mismatch.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim(), other.ambient_dim(), "ambient mismatch in join");
        let mut ech = self.echelon();
        for v in other.basis_vectors() {
            ech.insert(v);
        }
        Subspace::from_echelon(ech)
    }

    /// `U ∩ V`; panics on an ambient mismatch.
    ///
    /// Solves `sum a_i u_i = sum b_j v_j` through the nullspace of the
    /// stacked system and maps the `a` part back.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim(), other.ambient_dim(), "ambient mismatch in meet");
        let n = self.ambient_dim();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(n);
        }
        let (du, dv) = (self.dim(), other.dim());
        // columns: u_1..u_du, -v_1..-v_dv
        let mut system = Matrix::zeros(n, du + dv);
        for k in 0..n {
            for i in 0..du {
                system.set(k, i, self.basis.get(i, k).clone());
            }
            for j in 0..dv {
                system.set(k, du + j, -other.basis.get(j, k).clone());
            }
        }
        let kernel = system.nullspace();
        Subspace::from_vectors(n, kernel.basis_vectors().iter().map(|sol| self.vector_from_coordinates(&sol[..du])))
    }

    /// Image under a linear map `m: Q^ambient -> Q^rows(m)`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim(), "map domain must equal ambient dimension");
        Subspace::from_vectors(m.rows(), self.basis_vectors().iter().map(|v| m.mul_vec(v)))
    }

    /// `{x : m x ∈ target}`.
    pub fn preimage(m: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(m.rows(), target.ambient_dim(), "map codomain must equal target ambient");
        // x ↦ (m x mod target) restricted to non-pivot coordinates is linear
        let free = target.non_pivots();
        let mut rows = Vec::with_capacity(free.len());
        let cols: Vec<Vec<Rational>> = (0..m.cols()).map(|j| target.reduce(&m.column(j))).collect();
        for &c in &free {
            rows.push(cols.iter().map(|col| col[c].clone()).collect::<Vec<_>>());
        }
        Matrix::from_rows(m.cols(), &rows).nullspace()
    }

    /// Direct sum of subspaces of different spaces inside the concatenated space.
    pub fn direct_sum(parts: &[Subspace]) -> Subspace {
        let total: usize = parts.iter().map(Subspace::ambient_dim).sum();
        let mut vs = Vec::new();
        let mut offset = 0;
        for p in parts {
            for v in p.basis_vectors() {
                let mut w = zero_vector(total);
                w[offset..offset + v.len()].clone_from_slice(&v);
                vs.push(w);
            }
            offset += p.ambient_dim();
        }
        Subspace::from_vectors(total, vs)
    }

    /// Basis of a complement of `self` inside `outer` (chosen greedily from
    /// `outer`'s canonical basis). Requires `self ⊆ outer`.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vec<Rational>> {
        let mut ech = self.echelon();
        outer.basis_vectors().into_iter().filter(|v| ech.insert(v.clone())).collect()
    }

    /// Canonical lexicographic comparison of equal-dimension subspaces:
    /// pivot columns first, then entries.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.pivots
            .cmp(&other.pivots)
            .then_with(|| self.basis.as_slice().cmp(other.basis.as_slice()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}; ", self.dim(), self.ambient_dim())?;
        f.debug_list().entries(self.basis_vectors().iter().map(|v| {
            v.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>()
        })).finish()?;
        write!(f, ")")
    }
}

/// A complement of `Y ∩ Z` inside `Z`, together with its dimension
/// `dim Z - dim(Y ∩ Z)`, which always equals `dim((Y + Z) / Y)`.
pub fn complement_codim(z: &Subspace, y: &Subspace) -> Result<(Vec<Vec<Rational>>, usize)> {
    let meet = y.intersect(z)?;
    let comp = meet.complement_in(z);
    let codim = z.dim() - meet.dim();
    debug_assert_eq!(comp.len(), codim);
    Ok((comp, codim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;
    use crate::q;
    use alloc::vec;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i)
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let u = Subspace::from_vectors(3, [e(3, 0)]);
        let v = Subspace::from_vectors(3, [e(3, 1)]);
        assert_eq!(u.sum(&v).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn plane_and_skew_line() {
        let u = Subspace::coordinate(3, &[0, 1]);
        let v = Subspace::from_vectors(3, [vec![q(0), q(1), q(1)]]);
        assert!(u.intersect(&v).unwrap().is_zero());
        assert!(u.sum(&v).unwrap().is_full());
    }

    #[test]
    fn idempotent_lattice_ops() {
        let u = Subspace::from_vectors(3, [vec![q(1), q(2), q(3)], vec![q(0), q(1), q(1)]]);
        assert_eq!(u.join(&u), u);
        assert_eq!(u.meet(&u), u);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2);
        let v = Subspace::full(3);
        assert!(matches!(u.sum(&v), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(u.intersect(&v), Err(Error::DimensionMismatch { .. })));
        assert!(complement_codim(&u, &v).is_err());
    }

    #[test]
    fn complement_codim_examples() {
        let (_, c) = complement_codim(&Subspace::full(2), &Subspace::coordinate(2, &[0])).unwrap();
        assert_eq!(c, 1);

        let z = Subspace::from_vectors(3, [vec![q(0), q(1), q(1)]]);
        let y = Subspace::coordinate(3, &[0, 1]);
        let (basis, c) = complement_codim(&z, &y).unwrap();
        assert_eq!(c, 1);
        assert_eq!(basis.len(), 1);
        assert_eq!(y.join(&z).dim() - y.dim(), 1);

        let inner = Subspace::coordinate(3, &[0]);
        assert_eq!(complement_codim(&inner, &y).unwrap().1, 0);
    }

    #[test]
    fn preimage_of_line() {
        // m = projection onto first coordinate, target = {0}
        let m = Matrix::from_i64(&[&[1, 0, 0]]);
        let pre = Subspace::preimage(&m, &Subspace::zero(1));
        assert_eq!(pre, Subspace::coordinate(3, &[1, 2]));
    }

    #[test]
    fn ordering_prefers_earlier_pivots() {
        let a = Subspace::coordinate(2, &[0]);
        let b = Subspace::coordinate(2, &[1]);
        assert!(a < b);
    }
}
