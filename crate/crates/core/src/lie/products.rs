use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{solve, zero_vector, Echelon, Matrix};

/// Blockwise direct sum; factor `t` occupies the `t`-th coordinate block.
pub fn direct_product(factors: &[LieAlgebra]) -> LieAlgebra {
    let n: usize = factors.iter().map(LieAlgebra::dim).sum();
    let all: Vec<&String> = factors.iter().flat_map(|f| f.labels()).collect();
    let distinct = all.iter().collect::<BTreeSet<_>>().len() == all.len();
    let mut labels = Vec::with_capacity(n);
    let mut c = zero_vector(n * n * n);
    let mut off = 0;
    for (t, f) in factors.iter().enumerate() {
        let d = f.dim();
        for l in f.labels() {
            labels.push(if distinct { l.clone() } else { format!("{l}_{}", t + 1) });
        }
        for i in 0..d {
            for j in 0..d {
                for (k, x) in f.structure(i, j).iter().enumerate() {
                    c[((off + i) * n + off + j) * n + off + k] = x.clone();
                }
            }
        }
        off += d;
    }
    LieAlgebra::raw(labels, c)
}

/// `L1 ⋉_phi L0` on `L1 ⊕ L0` with
/// `[(a; x), (b; y)] = ([a, b]; phi(a) y - phi(b) x + [x, y])`.
///
/// `phi[i]` is the action of the `i`-th basis element of `l1` on `l0`; it
/// must be a derivation of `l0`, and `phi` must be a Lie homomorphism.
pub fn semidirect_product(l1: &LieAlgebra, l0: &LieAlgebra, phi: &[Matrix]) -> Result<LieAlgebra> {
    let (d1, d0) = (l1.dim(), l0.dim());
    if phi.len() != d1 {
        return Err(Error::DimensionMismatch { expected: d1, found: phi.len() });
    }
    for (i, p) in phi.iter().enumerate() {
        if p.rows() != d0 || p.cols() != d0 {
            return Err(Error::InvalidAction(format!("operator {i} is not {d0}x{d0}")));
        }
        if !l0.is_derivation(p) {
            return Err(Error::InvalidAction(format!("operator {i} is not a derivation")));
        }
    }
    for i in 0..d1 {
        for j in i + 1..d1 {
            let mut lhs = Matrix::zeros(d0, d0);
            for (k, x) in l1.structure(i, j).iter().enumerate() {
                lhs = &lhs + &phi[k].scale(x);
            }
            if lhs != phi[i].commutator(&phi[j]) {
                return Err(Error::InvalidAction(format!("action is not a homomorphism on pair ({i}, {j})")));
            }
        }
    }
    let n = d1 + d0;
    let mut c = zero_vector(n * n * n);
    let mut put = |i: usize, j: usize, k: usize, x: &crate::Rational| {
        c[(i * n + j) * n + k] = x.clone();
    };
    for (i, phi_i) in phi.iter().enumerate() {
        for j in 0..d1 {
            for (k, x) in l1.structure(i, j).iter().enumerate() {
                put(i, j, k, x);
            }
        }
        for y in 0..d0 {
            for k in 0..d0 {
                let v = phi_i.get(k, y);
                put(i, d1 + y, d1 + k, v);
                put(d1 + y, i, d1 + k, &-v.clone());
            }
        }
    }
    for x in 0..d0 {
        for y in 0..d0 {
            for (k, v) in l0.structure(x, y).iter().enumerate() {
                put(d1 + x, d1 + y, d1 + k, v);
            }
        }
    }
    let labels = l1.labels().iter().chain(l0.labels()).cloned().collect();
    Ok(LieAlgebra::raw(labels, c))
}

/// The matrix Lie algebra generated by `ops`, in a basis that starts with
/// the independent members of `ops` (in order) and continues with
/// commutators.
pub fn matrix_lie_algebra(ops: &[Matrix]) -> Result<(LieAlgebra, Vec<Matrix>)> {
    let Some(k) = ops.first().map(Matrix::rows) else {
        return Ok((LieAlgebra::abelian(0), Vec::new()));
    };
    if ops.iter().any(|m| m.rows() != k || m.cols() != k) {
        return Err(Error::InvalidAction(String::from("operators must be square of a common size")));
    }
    let mut ech = Echelon::new(k * k);
    let mut basis: Vec<Matrix> = Vec::new();
    for m in ops {
        if ech.insert(m.as_slice().to_vec()) {
            basis.push(m.clone());
        }
    }
    let mut done = 0;
    while done < basis.len() {
        let new = basis[done].clone();
        for j in 0..=done {
            let br = new.commutator(&basis[j]);
            if ech.insert(br.as_slice().to_vec()) {
                basis.push(br);
            }
        }
        done += 1;
    }
    let d = basis.len();
    let cols: Vec<_> = basis.iter().map(|m| m.as_slice().to_vec()).collect();
    let a = Matrix::from_columns(k * k, &cols);
    let mut c = zero_vector(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let coords = solve(&a, basis[i].commutator(&basis[j]).as_slice()).expect("span is closed");
            c[(i * d + j) * d..(i * d + j + 1) * d].clone_from_slice(&coords);
        }
    }
    let labels = (0..d).map(|i| format!("m{i}")).collect();
    Ok((LieAlgebra::raw(labels, c), basis))
}

/// `g ⋉ Q^k` where `g` is the matrix Lie algebra generated by `ops`, acting
/// by the identity representation.
pub fn operator_semidirect(ops: &[Matrix]) -> Result<LieAlgebra> {
    let (g, basis) = matrix_lie_algebra(ops)?;
    let k = ops.first().map_or(0, Matrix::rows);
    let module = LieAlgebra::abelian(k).with_labels((0..k).map(|i| format!("v{i}")).collect());
    semidirect_product(&g, &module, &basis)
}
