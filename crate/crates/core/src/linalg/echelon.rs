use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Subspace;
use crate::Rational;

/// Incrementally maintained row-echelon basis.
///
/// Rows are kept sorted by pivot column with a unit pivot, which is all
/// membership testing needs; [`Echelon::into_rref`] back-substitutes to the
/// reduced form. Reducing a new row only touches the existing pivot rows,
/// so long redundant equation systems cost O(rank * width) per row.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows in place.
    pub fn reduce(&self, v: &mut [Rational]) {
        debug_assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in p..self.width {
                if !row[j].is_zero() {
                    v[j] -= &factor * &row[j];
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns `false` if it was already in it.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if !v[p].is_one() {
            let inv = v[p].recip();
            for x in v[p..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Reduced row-echelon rows and their pivot columns.
    pub fn into_rref(mut self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let n = self.rows.len();
        for i in (0..n).rev() {
            let p = self.pivots[i];
            let (head, tail) = self.rows.split_at_mut(i);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                if row[p].is_zero() {
                    continue;
                }
                let factor = row[p].clone();
                for j in p..self.width {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &factor * &pivot_row[j];
                    }
                }
            }
        }
        (self.rows, self.pivots)
    }

    /// Solutions `x` of `row . x = 0` for every inserted row.
    pub fn kernel(self) -> Subspace {
        let n = self.width;
        let (rows, pivots) = self.into_rref();
        let mut is_pivot = alloc::vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..n).filter(|&j| !is_pivot[j]).map(|free| {
            let mut v = alloc::vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            v
        });
        Subspace::from_vectors(n, basis)
    }
}
