//! Classical radicals and the Levi decomposition.
//!
//! The solvable radical is the Killing-orthogonal complement of `[L, L]`
//! (Cartan's criterion). The nilradical is cut out of the radical by trace
//! conditions against the unital envelope of `ad(rad)`: an element of the
//! radical lies in the nilradical exactly when its adjoint operator is in the
//! Jacobson radical of that envelope, and in characteristic zero this is the
//! trace-form radical.

mod preradical;

pub use preradical::{
    by_name, convolution, convolution_closure, is_absorbing, registry, superposition_closure, Preradical,
    REGISTRY_NAMES,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::repr::{associative_envelope, decompose_module, split_over_abelian_ideal, Action};
use crate::LieAlgebra;

fn cert(msg: &str) -> Error {
    Error::Certificate(msg.into())
}

/// `L = levi ∔ radical` with `levi` semisimple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub levi: Subspace,
    pub radical: Subspace,
}

/// Largest solvable ideal.
pub fn solvable_radical(l: &LieAlgebra) -> Subspace {
    l.killing_orthogonal(&l.derived_algebra())
}

/// Same as [`solvable_radical`]; the ideal that primitive-ideal
/// constructions produce at finite dimension.
pub fn vasilescu_radical(l: &LieAlgebra) -> Subspace {
    solvable_radical(l)
}

/// Checks that `r` is a solvable ideal with semisimple quotient.
pub fn certify_solvable_radical(l: &LieAlgebra, r: &Subspace) -> Result<()> {
    if !l.is_ideal(r) {
        return Err(cert("radical is not an ideal"));
    }
    if l.solvability_index_of(r).is_none() {
        return Err(cert("radical is not solvable"));
    }
    if !l.quotient(r)?.quotient.is_killing_nondegenerate() {
        return Err(cert("quotient by the radical is not semisimple"));
    }
    Ok(())
}

/// Largest nilpotent ideal.
pub fn nilradical(l: &LieAlgebra) -> Subspace {
    let rad = solvable_radical(l);
    if rad.is_zero() {
        return rad;
    }
    let ads: Vec<Matrix> = rad.basis_vectors().iter().map(|r| l.ad_of(r)).collect();
    let env = associative_envelope(&Action::new(l.dim(), ads.clone()).expect("square"));
    // x = sum y_i r_i with sum y_i tr(ad r_i b) = 0 for every envelope basis b
    let rows: Vec<Vec<_>> =
        env.basis().iter().map(|b| ads.iter().map(|a| a.trace_of_product(b)).collect()).collect();
    let coords = Matrix::from_rows(rad.dim(), &rows).nullspace();
    rad.embed(&coords)
}

/// Checks that `n` is a nilpotent ideal containing `[L, rad]`.
pub fn certify_nilradical(l: &LieAlgebra, n: &Subspace) -> Result<()> {
    if !l.is_ideal(n) {
        return Err(cert("nilradical is not an ideal"));
    }
    if !l.is_nilpotent_subspace(n) {
        return Err(cert("nilradical is not nilpotent"));
    }
    if !l.bracket_spaces(&l.full(), &solvable_radical(l)).is_subspace_of(n) {
        return Err(cert("nilradical does not contain [L, rad]"));
    }
    Ok(())
}

/// A Levi subalgebra, lifted layer by layer along the derived series of the
/// radical: at each step the current subalgebra modulo the next derived term
/// is split over the (abelian) current layer.
pub fn levi_subalgebra(l: &LieAlgebra) -> LeviDecomposition {
    let radical = solvable_radical(l);
    let layers = l.derived_series_of(&radical).terms;
    let mut b = l.full();
    for w in layers.windows(2) {
        let (rj, rj1) = (&w[0], &w[1]);
        let balg = l.subalgebra(&b).expect("lifted spaces are subalgebras");
        let rj_c = b.restrict_coordinates(rj).expect("layer inside current subalgebra");
        let rj1_c = b.restrict_coordinates(rj1).expect("layer inside current subalgebra");
        let qd = balg.quotient(&rj1_c).expect("derived terms of the radical are ideals");
        let x = qd.project_space(&rj_c);
        let m = split_over_abelian_ideal(&qd.quotient, &x)
            .expect("layer is an abelian ideal")
            .expect("extensions of semisimple algebras by modules split");
        b = b.embed(&qd.pull_back(&m));
    }
    LeviDecomposition { levi: b, radical }
}

/// Checks the decomposition invariants.
pub fn certify_levi(l: &LieAlgebra, d: &LeviDecomposition) -> Result<()> {
    if d.radical != solvable_radical(l) {
        return Err(cert("radical part is not the solvable radical"));
    }
    if !d.levi.meet(&d.radical).is_zero() || !d.levi.join(&d.radical).is_full() {
        return Err(cert("levi and radical are not complementary"));
    }
    if !l.is_subalgebra(&d.levi) || !l.subalgebra(&d.levi)?.is_killing_nondegenerate() {
        return Err(cert("levi part is not a semisimple subalgebra"));
    }
    if !l.bracket_spaces(&d.levi, &d.radical).is_subspace_of(&d.radical) {
        return Err(cert("levi does not normalize the radical"));
    }
    Ok(())
}

/// Simple ideals of a semisimple algebra, in canonical order.
pub fn decompose_semisimple(s: &LieAlgebra) -> Result<Vec<Subspace>> {
    if !s.is_killing_nondegenerate() {
        return Err(Error::DegenerateKillingForm);
    }
    let parts = decompose_module(&Action::adjoint(s))?;
    let k = s.killing_form();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let orth = a.basis_vectors().iter().all(|u| {
                let ku = k.transpose().mul_vec(u);
                b.basis_vectors().iter().all(|v| ku.iter().zip(v).map(|(x, y)| x * y).sum::<crate::Rational>() == crate::q(0))
            });
            if !s.bracket_spaces(a, b).is_zero() || !orth {
                return Err(cert("simple summands are not orthogonal"));
            }
        }
    }
    Ok(parts)
}

/// Simple ideals of a Levi subalgebra, as subspaces of `L`.
pub fn levi_components(l: &LieAlgebra, levi: &Subspace) -> Vec<Subspace> {
    if levi.is_zero() {
        return Vec::new();
    }
    let s = l.subalgebra(levi).expect("levi is a subalgebra");
    decompose_semisimple(&s).expect("levi is semisimple").iter().map(|p| levi.embed(p)).collect()
}

/// Sum of the simple Levi components that commute with the radical.
pub fn largest_semisimple_ideal(l: &LieAlgebra) -> Subspace {
    let d = levi_subalgebra(l);
    levi_components(l, &d.levi)
        .into_iter()
        .filter(|c| l.bracket_spaces(c, &d.radical).is_zero())
        .fold(l.zero(), |acc, c| acc.join(&c))
}

/// Intersection of the derived series; the smallest characteristic ideal
/// containing every Levi subalgebra.
pub fn levi_radical(l: &LieAlgebra) -> Subspace {
    l.stable_derived_term()
}

#[cfg(test)]
mod tests;
