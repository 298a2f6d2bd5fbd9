use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{Matrix, Subspace};
use crate::poly::{factor, minimal_polynomial, Poly};
use crate::repr::Action;
use crate::{q, LieAlgebra, Rational};

/// An idempotent polynomial in `c` splitting off one primary component, if
/// the minimal polynomial of `c` has two coprime factors.
fn primary_idempotent(c: &Matrix) -> Option<Matrix> {
    let m = minimal_polynomial(c);
    let factors = factor(&m).ok()?;
    if factors.len() < 2 {
        return None;
    }
    let (p, mult) = &factors[0];
    let f = (0..*mult).fold(Poly::one(), |acc, _| acc.mul(p));
    let g = m.div_rem(&f).0;
    let (_, _, t) = f.ext_gcd(&g);
    // t g ≡ 1 mod f and ≡ 0 mod g
    Some(t.mul(&g).eval_matrix(c))
}

/// Splits `L` as a direct sum of two nonzero ideals using an idempotent of
/// the commutant of the adjoint action.
fn split_once(l: &LieAlgebra) -> Option<(Subspace, Subspace)> {
    let n = l.dim();
    if n < 2 {
        return None;
    }
    let commutant = Action::adjoint(l).commutant();
    let mut probes = commutant.clone();
    for k in 1..=3i64 {
        let mut acc = Matrix::zeros(n, n);
        for (i, b) in commutant.iter().enumerate() {
            let coef: Rational = q(((i as i64 + 2) * (2 * k + 1)) % 5 - 2);
            acc = &acc + &b.scale(&coef);
        }
        probes.push(acc);
    }
    for c in &probes {
        if let Some(e) = primary_idempotent(c) {
            let image = e.column_space();
            let kernel = e.nullspace();
            if !image.is_zero() && !kernel.is_zero() {
                debug_assert!(l.is_ideal(&image) && l.is_ideal(&kernel));
                return Some((image, kernel));
            }
        }
    }
    None
}

/// Decomposition of `L` into ideals `L = I_1 ⊕ ... ⊕ I_k` with
/// `[I_a, I_b] = 0`, split as far as the probe finds; canonical order.
pub fn ideal_direct_summands(l: &LieAlgebra) -> Vec<Subspace> {
    let mut out = match split_once(l) {
        None => vec![l.full()],
        Some((a, b)) => {
            let mut parts = Vec::new();
            for p in [a, b] {
                let sub = l.subalgebra(&p).expect("ideals are subalgebras");
                parts.extend(ideal_direct_summands(&sub).iter().map(|s| p.embed(s)));
            }
            parts
        }
    };
    out.sort();
    out
}
