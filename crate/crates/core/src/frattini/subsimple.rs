use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::radicals::{decompose_semisimple, nilradical};
use crate::repr::{find_proper_submodule, split_over_abelian_ideal, Action};
use crate::{LieAlgebra, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsimpleTag {
    OneDim,
    Simple,
    /// `N ⊕ N` with `N` simple.
    ClassI,
    /// `M ⋉ X` with `X` abelian, self-centralizing, and irreducible under `M`.
    ClassII,
    NotSubsimple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsimpleWitness {
    ClassI { first: Subspace, second: Subspace },
    ClassII { m: Subspace, x: Subspace },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsimpleClass {
    pub tag: SubsimpleTag,
    pub witness: Option<SubsimpleWitness>,
    /// `false` only for a `ClassI` answer whose isomorphism between the two
    /// simple summands was screened by invariants but not exhibited.
    pub verified: bool,
}

impl SubsimpleClass {
    fn plain(tag: SubsimpleTag) -> Self {
        SubsimpleClass { tag, witness: None, verified: true }
    }

    pub fn is_subsimple(&self) -> bool {
        self.tag != SubsimpleTag::NotSubsimple
    }
}

/// `(positive, negative, zero)` counts of a symmetric form.
pub fn inertia(form: &Matrix) -> (usize, usize, usize) {
    let n = form.rows();
    let mut a = form.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !a.get(i, i).is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a.get(i, j).is_zero());
                let Some((i, j)) = pair else { break };
                // row/column i += row/column j makes the diagonal 2 a_ij
                for k in 0..n {
                    let v = a.get(i, k) + a.get(j, k);
                    a.set(i, k, v);
                }
                for k in 0..n {
                    let v = a.get(k, i) + a.get(k, j);
                    a.set(k, i, v);
                }
                i
            }
        };
        let d = a.get(p, p).clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f = a.get(i, p) / &d;
            if f.is_zero() {
                continue;
            }
            for &k in &active {
                let v = a.get(i, k) - &f * a.get(p, k);
                a.set(i, k, v);
            }
            a.set(i, p, Rational::zero());
            a.set(p, i, Rational::zero());
        }
    }
    (pos, neg, n - pos - neg)
}

/// Whether `phi` (coordinates of `a` to coordinates of `b`) is a Lie
/// isomorphism.
fn is_isomorphism(a: &LieAlgebra, b: &LieAlgebra, phi: &Matrix) -> bool {
    let d = a.dim();
    if b.dim() != d || phi.rows() != d || phi.cols() != d || !phi.is_invertible() {
        return false;
    }
    (0..d).all(|i| {
        (i + 1..d).all(|j| phi.mul_vec(a.structure(i, j)) == b.bracket(&phi.column(i), &phi.column(j)))
    })
}

/// Classifies `L` as subsimple (one-dimensional, simple, class I or class
/// II) or not. For two isomorphism-screened simple summands, `witness`
/// maps coordinates of the first summand to those of the second (canonical
/// bases, canonical summand order) and must be an isomorphism.
pub fn classify_subsimple(l: &LieAlgebra, witness: Option<&Matrix>) -> Result<SubsimpleClass> {
    use SubsimpleTag::*;
    match l.dim() {
        0 => return Ok(SubsimpleClass::plain(NotSubsimple)),
        1 => return Ok(SubsimpleClass::plain(OneDim)),
        _ => {}
    }
    if l.is_killing_nondegenerate() {
        let parts = decompose_semisimple(l)?;
        return match parts.len() {
            1 => Ok(SubsimpleClass::plain(Simple)),
            2 => classify_pair(l, &parts[0], &parts[1], witness),
            _ => Ok(SubsimpleClass::plain(NotSubsimple)),
        };
    }
    let x = nilradical(l);
    if x.is_zero() || !l.is_abelian_subspace(&x) || l.centralizer(&x) != x {
        return Ok(SubsimpleClass::plain(NotSubsimple));
    }
    let Some(m) = split_over_abelian_ideal(l, &x)? else {
        return Ok(SubsimpleClass::plain(NotSubsimple));
    };
    let action = Action::restricted_adjoint(l, &m, &x)?;
    if find_proper_submodule(&action).is_some() {
        return Ok(SubsimpleClass::plain(NotSubsimple));
    }
    Ok(SubsimpleClass { tag: ClassII, witness: Some(SubsimpleWitness::ClassII { m, x }), verified: true })
}

fn classify_pair(l: &LieAlgebra, first: &Subspace, second: &Subspace, witness: Option<&Matrix>) -> Result<SubsimpleClass> {
    let a = l.subalgebra(first)?;
    let b = l.subalgebra(second)?;
    let found = SubsimpleClass {
        tag: SubsimpleTag::ClassI,
        witness: Some(SubsimpleWitness::ClassI { first: first.clone(), second: second.clone() }),
        verified: true,
    };
    if let Some(phi) = witness {
        if !is_isomorphism(&a, &b, phi) {
            return Err(Error::WitnessInvalid(format!(
                "map between the {}-dimensional simple summands is not an isomorphism",
                a.dim()
            )));
        }
        return Ok(found);
    }
    if a.dim() != b.dim() || inertia(&a.killing_form()) != inertia(&b.killing_form()) {
        return Ok(SubsimpleClass::plain(SubsimpleTag::NotSubsimple));
    }
    if is_isomorphism(&a, &b, &Matrix::identity(a.dim())) {
        return Ok(found);
    }
    Ok(SubsimpleClass { verified: false, ..found })
}
