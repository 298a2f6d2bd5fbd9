use alloc::vec;
use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;

/// A descending chain of subspaces, recorded until its first repeat.
///
/// `terms[0]` is the starting space, consecutive terms are strictly
/// decreasing, and the last term is the stable value: applying the step once
/// more would reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    pub terms: Vec<Subspace>,
    pub stable_index: usize,
}

impl SeriesResult {
    fn iterate(start: Subspace, mut step: impl FnMut(&Subspace) -> Subspace) -> Self {
        let mut terms = vec![start];
        loop {
            let next = step(terms.last().unwrap());
            if &next == terms.last().unwrap() {
                break;
            }
            debug_assert!(next.is_subspace_of(terms.last().unwrap()));
            terms.push(next);
        }
        let stable_index = terms.len() - 1;
        SeriesResult { terms, stable_index }
    }

    pub fn last(&self) -> &Subspace {
        &self.terms[self.stable_index]
    }

    /// `stable_index` if the series ends at zero.
    pub fn solvability_index(&self) -> Option<usize> {
        self.last().is_zero().then_some(self.stable_index)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

impl LieAlgebra {
    /// `L_[0] = L`, `L_[n+1] = [L_[n], L_[n]]`.
    pub fn derived_series(&self) -> SeriesResult {
        self.derived_series_of(&self.full())
    }

    /// Derived series of the subalgebra `s`.
    pub fn derived_series_of(&self, s: &Subspace) -> SeriesResult {
        SeriesResult::iterate(s.clone(), |t| self.bracket_spaces(t, t))
    }

    /// `L^[1] = L`, `L^[n+1] = [L, L^[n]]`.
    pub fn lower_central_series(&self) -> SeriesResult {
        let full = self.full();
        SeriesResult::iterate(full.clone(), |t| self.bracket_spaces(&full, t))
    }

    /// Intersection of the derived series.
    pub fn stable_derived_term(&self) -> Subspace {
        self.derived_series().last().clone()
    }

    /// Intersection of the lower central series.
    pub fn stable_lower_central_term(&self) -> Subspace {
        self.lower_central_series().last().clone()
    }

    /// Nilpotency class: least `n` with `L^[n+1] = 0`, if nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().solvability_index()
    }

    /// The series `J^0 = L`, `J^{k+1}` = ideal closure of `i` inside `J^k`,
    /// together with the least `n` such that `J^n = i`, if any.
    pub fn ideal_closure_series(&self, i: &Subspace) -> Result<(SeriesResult, Option<usize>)> {
        if i.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: i.ambient_dim() });
        }
        if !self.is_subalgebra(i) {
            return Err(Error::NotASubalgebra);
        }
        let series = SeriesResult::iterate(self.full(), |j| self.ideal_closure_in(j, i));
        let depth = series.terms.iter().position(|t| t == i);
        Ok((series, depth))
    }
}
