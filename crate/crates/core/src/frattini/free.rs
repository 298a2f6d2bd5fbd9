use alloc::boxed::Box;
use alloc::vec::Vec;

use super::subsimple::{classify_subsimple, SubsimpleClass};
use crate::error::{Error, Result};
use crate::lie::{direct_product, QuotientData};
use crate::linalg::{Matrix, Subspace};
use crate::radicals::{decompose_semisimple, nilradical, solvable_radical};
use crate::repr::{decompose_module, is_completely_reducible, split_over_abelian_ideal, Action};
use crate::LieAlgebra;

/// `L = C ∔ S ∔ J` for a Frattini-free `L`.
///
/// With `N` the (abelian) nilradical and `M` a complement subalgebra:
/// `J = [L, N] = [M, N]`, `S = [M, M]`, and `C = Z(M) + (N ∩ Z(L))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrattiniFreeDecomposition {
    pub c: Subspace,
    pub s: Subspace,
    pub j: Subspace,
    pub j_summands: Vec<Subspace>,
    /// The complement `M` of the nilradical.
    pub m: Subspace,
    pub nilradical: Subspace,
}

/// First condition that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrattiniFreeFailure {
    NilradicalNotAbelian,
    NoComplement,
    ComplementNotReductive,
    ActionNotCompletelyReducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrattiniFreeCheck {
    Free(Box<FrattiniFreeDecomposition>),
    NotFree(FrattiniFreeFailure),
}

/// Decides Frattini-freeness through four conditions: the nilradical `N`
/// is abelian; `N` has a complement subalgebra `M`; `M` is reductive
/// (`rad M = Z(M)`); and `M` acts completely reducibly on `N`.
pub fn frattini_free_check(l: &LieAlgebra) -> FrattiniFreeCheck {
    use FrattiniFreeFailure::*;
    let n = nilradical(l);
    if !l.is_abelian_subspace(&n) {
        return FrattiniFreeCheck::NotFree(NilradicalNotAbelian);
    }
    let Some(m) = split_over_abelian_ideal(l, &n).expect("nilradical is an abelian ideal") else {
        return FrattiniFreeCheck::NotFree(NoComplement);
    };
    let malg = l.subalgebra(&m).expect("complement is a subalgebra");
    let mcenter = malg.center();
    if solvable_radical(&malg) != mcenter {
        return FrattiniFreeCheck::NotFree(ComplementNotReductive);
    }
    let action = Action::restricted_adjoint(l, &m, &n).expect("nilradical is an ideal");
    if !is_completely_reducible(&action) {
        return FrattiniFreeCheck::NotFree(ActionNotCompletelyReducible);
    }
    let s = m.embed(&malg.derived_algebra());
    let c = m.embed(&mcenter).join(&n.meet(&l.center()));
    let j = l.bracket_spaces(&m, &n);
    let cs = c.join(&s);
    let j_action = Action::restricted_adjoint(l, &cs, &j).expect("J is an ideal");
    let j_summands = decompose_module(&j_action).expect("restriction of a completely reducible action").iter().map(|p| j.embed(p)).collect();
    let d = FrattiniFreeDecomposition { c, s, j, j_summands, m, nilradical: n };
    debug_assert!(verify_decomposition(l, &d).is_ok());
    FrattiniFreeCheck::Free(Box::new(d))
}

pub fn is_frattini_free(l: &LieAlgebra) -> bool {
    matches!(frattini_free_check(l), FrattiniFreeCheck::Free(_))
}

pub fn frattini_free_decomposition(l: &LieAlgebra) -> Result<FrattiniFreeDecomposition> {
    match frattini_free_check(l) {
        FrattiniFreeCheck::Free(d) => Ok(*d),
        FrattiniFreeCheck::NotFree(_) => Err(Error::NotFrattiniFree),
    }
}

fn cert(msg: &str) -> Error {
    Error::Certificate(msg.into())
}

/// Checks every structural invariant of the decomposition.
pub fn verify_decomposition(l: &LieAlgebra, d: &FrattiniFreeDecomposition) -> Result<()> {
    let dims = d.c.dim() + d.s.dim() + d.j.dim();
    if dims != l.dim() || !d.c.join(&d.s).join(&d.j).is_full() {
        return Err(cert("C, S, J do not span L directly"));
    }
    if !l.is_ideal(&d.j) || !l.is_abelian_subspace(&d.j) {
        return Err(cert("J is not an abelian ideal"));
    }
    if !l.is_subalgebra(&d.c) || !l.is_abelian_subspace(&d.c) {
        return Err(cert("C is not an abelian subalgebra"));
    }
    if !l.bracket_spaces(&d.c, &d.s).is_zero() {
        return Err(cert("[C, S] is not zero"));
    }
    if !l.is_subalgebra(&d.s) || !l.subalgebra(&d.s)?.is_killing_nondegenerate() {
        return Err(cert("S is not a semisimple subalgebra"));
    }
    let sum = d.j_summands.iter().fold(l.zero(), |acc, p| acc.join(p));
    let total: usize = d.j_summands.iter().map(Subspace::dim).sum();
    if sum != d.j || total != d.j.dim() {
        return Err(cert("J summands do not span J directly"));
    }
    let cs = d.c.join(&d.s);
    for p in &d.j_summands {
        if !l.bracket_spaces(&cs, p).is_subspace_of(p) {
            return Err(cert("J summand is not invariant"));
        }
    }
    Ok(())
}

/// `J ⊕ (C ∩ Z(L))`.
pub fn largest_abelian_ideal_frattini_free(l: &LieAlgebra) -> Result<Subspace> {
    let d = frattini_free_decomposition(l)?;
    Ok(d.j.join(&d.c.meet(&l.center())))
}

/// A quotient of `L` in a subdirect decomposition, with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdirectComponent {
    pub kernel: Subspace,
    pub data: QuotientData,
    pub class: SubsimpleClass,
}

/// Quotients `L → L_i`, each subsimple, whose kernels intersect in zero:
/// one per irreducible summand `J_i` (kernel: the other summands plus the
/// annihilator of `J_i` in `C ∔ S`), one per simple component of `S` acting
/// trivially on `J`, and one per line of `C ∩ Z(L)`.
pub fn subdirect_components(l: &LieAlgebra) -> Result<Vec<SubdirectComponent>> {
    let d = frattini_free_decomposition(l)?;
    let cs = d.c.join(&d.s);
    let mut kernels = Vec::new();
    for (i, ji) in d.j_summands.iter().enumerate() {
        let others = d.j_summands.iter().enumerate().filter(|&(k, _)| k != i).fold(l.zero(), |acc, (_, p)| acc.join(p));
        let ann = l.centralizer(ji).meet(&cs);
        kernels.push(others.join(&ann));
    }
    let simple: Vec<Subspace> = if d.s.is_zero() {
        Vec::new()
    } else {
        decompose_semisimple(&l.subalgebra(&d.s)?)?.iter().map(|p| d.s.embed(p)).collect()
    };
    for (k, sk) in simple.iter().enumerate() {
        if !l.bracket_spaces(sk, &d.j).is_zero() {
            continue;
        }
        let rest = simple.iter().enumerate().filter(|&(t, _)| t != k).fold(l.zero(), |acc, (_, p)| acc.join(p));
        kernels.push(d.c.join(&rest).join(&d.j));
    }
    let a = d.c.meet(&l.center());
    let c_rest = Subspace::from_vectors(l.dim(), a.complement_in(&d.c));
    let lines = a.basis_vectors();
    for t in 0..lines.len() {
        let others = Subspace::from_vectors(l.dim(), lines.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, v)| v.clone()));
        kernels.push(others.join(&c_rest).join(&d.s).join(&d.j));
    }
    kernels
        .into_iter()
        .map(|kernel| {
            let data = l.quotient(&kernel)?;
            let class = classify_subsimple(&data.quotient, None)?;
            Ok(SubdirectComponent { kernel, data, class })
        })
        .collect()
}

/// The stacked projections `L → ⊕ L_i`.
pub fn subdirect_embedding(components: &[SubdirectComponent]) -> Option<Matrix> {
    let mut it = components.iter();
    let first = it.next()?.data.projection.clone();
    Some(it.fold(first, |acc, c| acc.vstack(&c.data.projection)))
}

/// Whether `embedding: L → ⊕ components` is an injective homomorphism whose
/// composition with each coordinate projection is onto.
pub fn verify_subdirect(components: &[LieAlgebra], embedding: &Matrix, l: &LieAlgebra) -> Result<bool> {
    let total: usize = components.iter().map(LieAlgebra::dim).sum();
    if embedding.rows() != total || embedding.cols() != l.dim() {
        return Err(Error::DimensionMismatch { expected: total, found: embedding.rows() });
    }
    let product = direct_product(components);
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = embedding.mul_vec(l.structure(i, j));
            let rhs = product.bracket(&embedding.column(i), &embedding.column(j));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    if embedding.rank() != n {
        return Ok(false);
    }
    let mut off = 0;
    for c in components {
        let rows: Vec<Vec<_>> = (off..off + c.dim()).map(|r| embedding.row(r).to_vec()).collect();
        if Matrix::from_rows(n, &rows).rank() != c.dim() {
            return Ok(false);
        }
        off += c.dim();
    }
    Ok(true)
}
