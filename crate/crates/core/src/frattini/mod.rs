//! Jacobson and Frattini ideals, their indices, Frattini-free structure and
//! the subsimple classification.
//!
//! The Jacobson ideal `K_L = [L, rad L]` is computed exactly. The Frattini
//! ideal is returned as an estimate: exact values come only from structural
//! rules (commutative, semisimple, nilpotent, Frattini-free, direct sums of
//! ideals); otherwise an interval between `(L_[1] ∩ Z) + (N_L)_[1]` and
//! `K_L`.

pub(crate) mod free;
pub(crate) mod subsimple;
mod summands;

pub use free::{
    frattini_free_check, frattini_free_decomposition, is_frattini_free, verify_decomposition, largest_abelian_ideal_frattini_free,
    subdirect_components, subdirect_embedding, verify_subdirect, FrattiniFreeCheck, FrattiniFreeDecomposition,
    FrattiniFreeFailure, SubdirectComponent,
};
pub use subsimple::{classify_subsimple, SubsimpleClass, SubsimpleTag, SubsimpleWitness};
pub use summands::ideal_direct_summands;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::radicals::{largest_semisimple_ideal, levi_subalgebra, nilradical, solvable_radical};
use crate::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EstimateKind {
    Exact,
    Interval,
}

/// Which rule produced a Frattini estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrattiniRule {
    Commutative,
    Semisimple,
    Nilpotent,
    FrattiniFree,
    DirectSum,
    Bounds,
}

/// `lower ⊆ ideal ⊆ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealEstimate {
    pub kind: EstimateKind,
    pub lower: Subspace,
    pub upper: Subspace,
    pub rule: FrattiniRule,
}

impl IdealEstimate {
    fn exact(s: Subspace, rule: FrattiniRule) -> Self {
        IdealEstimate { kind: EstimateKind::Exact, lower: s.clone(), upper: s, rule }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == EstimateKind::Exact
    }

    /// The value, when exact.
    pub fn value(&self) -> Option<&Subspace> {
        self.is_exact().then_some(&self.lower)
    }
}

/// `low <= index <= high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IndexEstimate {
    pub kind: EstimateKind,
    pub low: usize,
    pub high: usize,
}

impl IndexEstimate {
    pub fn exact(n: usize) -> Self {
        IndexEstimate { kind: EstimateKind::Exact, low: n, high: n }
    }

    fn between(low: usize, high: usize) -> Self {
        assert!(low <= high, "empty index interval");
        if low == high {
            Self::exact(low)
        } else {
            IndexEstimate { kind: EstimateKind::Interval, low, high }
        }
    }

    pub fn value(&self) -> Option<usize> {
        (self.kind == EstimateKind::Exact).then_some(self.low)
    }
}

/// `[L, rad L]`, the intersection of the maximal ideals of finite
/// codimension.
pub fn jacobson_ideal(l: &LieAlgebra) -> Subspace {
    l.bracket_spaces(&l.full(), &solvable_radical(l))
}

fn solvability(l: &LieAlgebra, s: &Subspace) -> usize {
    l.solvability_index_of(s).expect("ideal inside the radical is solvable")
}

/// `i_s(K_L) + 1`.
pub fn jacobson_index(l: &LieAlgebra) -> usize {
    solvability(l, &jacobson_ideal(l)) + 1
}

pub fn frattini_ideal(l: &LieAlgebra) -> IdealEstimate {
    if l.is_abelian() {
        return IdealEstimate::exact(l.zero(), FrattiniRule::Commutative);
    }
    if l.is_killing_nondegenerate() {
        return IdealEstimate::exact(l.zero(), FrattiniRule::Semisimple);
    }
    if l.is_nilpotent() {
        return IdealEstimate::exact(l.derived_algebra(), FrattiniRule::Nilpotent);
    }
    if is_frattini_free(l) {
        return IdealEstimate::exact(l.zero(), FrattiniRule::FrattiniFree);
    }
    let parts = ideal_direct_summands(l);
    if parts.len() > 1 {
        let mut lower = l.zero();
        let mut upper = l.zero();
        let mut exact = true;
        for p in &parts {
            let sub = l.subalgebra(p).expect("ideal summand");
            let est = frattini_ideal(&sub);
            exact &= est.is_exact();
            lower = lower.join(&p.embed(&est.lower));
            upper = upper.join(&p.embed(&est.upper));
        }
        let kind = if exact { EstimateKind::Exact } else { EstimateKind::Interval };
        return IdealEstimate { kind, lower, upper, rule: FrattiniRule::DirectSum };
    }
    let (lower, upper) = frattini_bounds(l);
    let kind = if lower == upper { EstimateKind::Exact } else { EstimateKind::Interval };
    IdealEstimate { kind, lower, upper, rule: FrattiniRule::Bounds }
}

/// `(L_[1] ∩ Z) + (N_L)_[1]` and `[L, rad L]`.
pub fn frattini_bounds(l: &LieAlgebra) -> (Subspace, Subspace) {
    let n = nilradical(l);
    let lower = l.derived_algebra().meet(&l.center()).join(&l.bracket_spaces(&n, &n));
    let upper = jacobson_ideal(l);
    debug_assert!(lower.is_subspace_of(&upper));
    (lower, upper)
}

/// The Frattini index: `i_s(φ) + 1` when the ideal is exact, otherwise the
/// interval allowed by the bounds, by `i_s(N_L) <= r <= i_s(N_L) + 1` and by
/// `r_J - 1 <= r <= r_J`.
pub fn frattini_index(l: &LieAlgebra) -> IndexEstimate {
    let est = frattini_ideal(l);
    index_from_estimate(l, &est)
}

pub fn index_from_estimate(l: &LieAlgebra, est: &IdealEstimate) -> IndexEstimate {
    if let Some(v) = est.value() {
        return IndexEstimate::exact(solvability(l, v) + 1);
    }
    let r_j = jacobson_index(l);
    let n_s = solvability(l, &nilradical(l));
    let low = n_s.max(solvability(l, &est.lower) + 1).max(r_j - 1);
    let high = r_j.min(solvability(l, &est.upper) + 1).min(n_s + 1);
    IndexEstimate::between(low, high)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexClass {
    C1,
    C2,
    C3,
    Undetermined,
}

/// Index data behind [`index_class`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexClassification {
    pub class: IndexClass,
    pub frattini_index: IndexEstimate,
    pub jacobson_index: usize,
    /// `i_s(N_L)`.
    pub nilradical_index: usize,
    /// `i_s(K_L)`.
    pub jacobson_ideal_index: usize,
}

fn class_of(r_s: usize, r_j: usize, k: usize, n: usize) -> Option<IndexClass> {
    if r_j != k + 1 {
        return None;
    }
    if r_s == r_j && r_j == n + 1 {
        Some(IndexClass::C1)
    } else if r_s == r_j && r_j == n {
        Some(IndexClass::C2)
    } else if r_s + 1 == r_j && r_j == n + 1 {
        Some(IndexClass::C3)
    } else {
        None
    }
}

pub fn index_class(l: &LieAlgebra) -> IndexClassification {
    let frattini_index = frattini_index(l);
    let k = jacobson_ideal(l);
    let jacobson_ideal_index = solvability(l, &k);
    let jacobson_index = jacobson_ideal_index + 1;
    let nilradical_index = solvability(l, &nilradical(l));
    let classes: Vec<Option<IndexClass>> = (frattini_index.low..=frattini_index.high)
        .map(|r| class_of(r, jacobson_index, jacobson_ideal_index, nilradical_index))
        .collect();
    let class = match classes.as_slice() {
        [Some(c)] => *c,
        _ => IndexClass::Undetermined,
    };
    IndexClassification { class, frattini_index, jacobson_index, nilradical_index, jacobson_ideal_index }
}

/// The infinite-dimensional radicals, all zero at finite dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BanachRadicals {
    pub p_s: Subspace,
    pub p_j: Subspace,
    pub f: Subspace,
    pub f_s: Subspace,
}

pub fn banach_radical_stubs(l: &LieAlgebra) -> BanachRadicals {
    BanachRadicals { p_s: l.zero(), p_j: l.zero(), f: l.zero(), f_s: l.zero() }
}

/// Whether `x` fails to generate `L` together with the proper subalgebra `m`.
pub fn nongenerator_check(l: &LieAlgebra, m: &Subspace, x: &[crate::Rational]) -> Result<bool> {
    if m.ambient_dim() != l.dim() || x.len() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: m.ambient_dim().max(x.len()) });
    }
    if !l.is_subalgebra(m) || m.is_full() {
        return Err(Error::NotASubalgebra);
    }
    let with_x = m.join(&Subspace::from_vectors(l.dim(), [x.to_vec()]));
    Ok(!l.subalgebra_closure(&with_x).is_full())
}

/// `(levi, center)` with `L = levi ⊕ center` when `K_L = 0`.
pub fn is_jacobson_free(l: &LieAlgebra) -> Option<(Subspace, Subspace)> {
    if !jacobson_ideal(l).is_zero() {
        return None;
    }
    let levi = levi_subalgebra(l).levi;
    let center = l.center();
    assert!(
        levi.meet(&center).is_zero() && levi.join(&center).is_full() && l.bracket_spaces(&levi, &center).is_zero(),
        "Jacobson-free algebra failed to split as levi ⊕ center"
    );
    debug_assert_eq!(levi, largest_semisimple_ideal(l));
    Some((levi, center))
}
