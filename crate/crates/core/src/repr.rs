//! Linear actions, their associative envelopes, and submodule search.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{solve, unit_vector, zero_vector, Echelon, Matrix, Subspace};
use crate::poly::{factor, minimal_polynomial};
use crate::{q, LieAlgebra, Rational};

/// Operators on `Q^carrier_dim`, one per acting basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    carrier_dim: usize,
    operators: Vec<Matrix>,
}

impl Action {
    pub fn new(carrier_dim: usize, operators: Vec<Matrix>) -> Result<Self> {
        for m in &operators {
            if m.rows() != carrier_dim || m.cols() != carrier_dim {
                return Err(Error::InvalidAction(alloc::format!(
                    "operator is {}x{}, carrier has dimension {carrier_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Action { carrier_dim, operators })
    }

    /// `ad` of every basis element acting on `L`.
    pub fn adjoint(l: &LieAlgebra) -> Self {
        Action { carrier_dim: l.dim(), operators: l.ad_all() }
    }

    /// `ad(m)|_carrier` for `m` running over `acting`'s basis; `carrier`
    /// must be invariant.
    pub fn restricted_adjoint(l: &LieAlgebra, acting: &Subspace, carrier: &Subspace) -> Result<Self> {
        let ops = acting.basis_vectors().iter().map(|m| l.restricted_ad(m, carrier)).collect::<Result<Vec<_>>>()?;
        Ok(Action { carrier_dim: carrier.dim(), operators: ops })
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.operators
    }

    /// `op([b_i, b_j]) = [op(b_i), op(b_j)]` for all basis pairs of `l`.
    pub fn respects_brackets(&self, l: &LieAlgebra) -> bool {
        if l.dim() != self.operators.len() {
            return false;
        }
        let n = self.carrier_dim;
        (0..l.dim()).all(|i| {
            (i + 1..l.dim()).all(|j| {
                let mut lhs = Matrix::zeros(n, n);
                for (k, x) in l.structure(i, j).iter().enumerate() {
                    if !x.is_zero() {
                        lhs = &lhs + &self.operators[k].scale(x);
                    }
                }
                lhs == self.operators[i].commutator(&self.operators[j])
            })
        })
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        u.ambient_dim() == self.carrier_dim && self.operators.iter().all(|m| u.image(m).is_subspace_of(u))
    }

    /// Least invariant subspace containing `vectors`.
    pub fn spin(&self, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Subspace {
        let mut ech = Echelon::new(self.carrier_dim);
        let mut queue: Vec<Vec<Rational>> = Vec::new();
        for v in vectors {
            if ech.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.operators {
                let w = m.mul_vec(&v);
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        Subspace::from_echelon(ech)
    }

    /// The action on an invariant subspace, in its canonical coordinates.
    pub fn restrict(&self, u: &Subspace) -> Result<Action> {
        let d = u.dim();
        let mut ops = Vec::with_capacity(self.operators.len());
        for m in &self.operators {
            let mut r = Matrix::zeros(d, d);
            for (j, b) in u.basis_vectors().iter().enumerate() {
                let coords = u
                    .coordinates(&m.mul_vec(b))
                    .ok_or_else(|| Error::InvalidAction(String::from("subspace is not invariant")))?;
                for (i, x) in coords.into_iter().enumerate() {
                    r.set(i, j, x);
                }
            }
            ops.push(r);
        }
        Ok(Action { carrier_dim: d, operators: ops })
    }

    /// Matrices commuting with every operator.
    pub fn commutant(&self) -> Vec<Matrix> {
        let n = self.carrier_dim;
        let mut ech = Echelon::new(n * n);
        for g in &self.operators {
            // (c g - g c)[r][s] = sum_k c[r][k] g[k][s] - g[r][k] c[k][s]
            for r in 0..n {
                for s in 0..n {
                    let mut row = zero_vector(n * n);
                    for k in 0..n {
                        row[r * n + k] += g.get(k, s);
                        row[k * n + s] -= g.get(r, k);
                    }
                    ech.insert(row);
                }
            }
        }
        ech.kernel().basis_vectors().iter().map(|v| Matrix::from_flat(n, v)).collect()
    }
}

/// Basis of the unital associative algebra generated by an action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    n: usize,
    basis: Vec<Matrix>,
}

impl Envelope {
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn flat_span(&self) -> Echelon {
        let mut ech = Echelon::new(self.n * self.n);
        for b in &self.basis {
            ech.insert(b.as_slice().to_vec());
        }
        ech
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.flat_span().contains(m.as_slice())
    }

    /// Coordinates in this envelope's basis.
    fn element(&self, coords: &[Rational]) -> Matrix {
        let mut acc = Matrix::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }

    /// `{a : tr(a b) = 0 for all b}` in envelope coordinates; in
    /// characteristic zero this is the Jacobson radical.
    pub fn trace_radical(&self) -> Subspace {
        let d = self.dim();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = self.basis[i].trace_of_product(&self.basis[j]);
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        gram.nullspace()
    }

    /// Trace radical as matrices.
    pub fn radical_elements(&self) -> Vec<Matrix> {
        self.trace_radical().basis_vectors().iter().map(|c| self.element(c)).collect()
    }
}

/// The unital associative envelope of `a`.
pub fn associative_envelope(a: &Action) -> Envelope {
    let n = a.carrier_dim;
    let mut ech = Echelon::new(n * n);
    let mut basis = Vec::new();
    let id = Matrix::identity(n);
    if n > 0 {
        ech.insert(id.as_slice().to_vec());
        basis.push(id);
    }
    let mut done = 0;
    while done < basis.len() {
        for g in &a.operators {
            let p = g * &basis[done];
            if ech.insert(p.as_slice().to_vec()) {
                basis.push(p);
            }
        }
        done += 1;
    }
    Envelope { n, basis }
}

pub fn trace_radical(e: &Envelope) -> Subspace {
    e.trace_radical()
}

/// Semisimplicity of the envelope: the carrier is a direct sum of
/// irreducible submodules exactly when this holds.
pub fn is_completely_reducible(a: &Action) -> bool {
    associative_envelope(a).trace_radical().is_zero()
}

fn proper(s: &Subspace) -> bool {
    !s.is_zero() && !s.is_full()
}

/// Kernels of `p(m)` for the distinct irreducible factors `p` of the
/// minimal polynomial of `m`, skipping the trivial case.
fn primary_kernels(m: &Matrix) -> Vec<Subspace> {
    let mp = minimal_polynomial(m);
    let Ok(factors) = factor(&mp) else {
        return Vec::new();
    };
    if factors.len() == 1 && factors[0].1 == 1 {
        return Vec::new();
    }
    factors.iter().map(|(p, _)| p.eval_matrix(m).nullspace()).collect()
}

/// Small deterministic combinations of envelope basis elements.
fn probes(e: &Envelope) -> Vec<Matrix> {
    let d = e.dim();
    let mut out: Vec<Matrix> = e.basis.iter().skip(1).cloned().collect();
    for k in 1..=3i64 {
        let coords: Vec<Rational> = (0..d).map(|i| q(((i as i64 + 1) * (2 * k + 1)) % 7 - 3)).collect();
        out.push(e.element(&coords));
    }
    out
}

fn smallest(cands: Vec<Subspace>) -> Option<Subspace> {
    cands.into_iter().filter(proper).min()
}

fn search_once(a: &Action) -> Option<Subspace> {
    let n = a.carrier_dim;
    let env = associative_envelope(a);
    let mut cands = Vec::new();

    let rad = env.radical_elements();
    if !rad.is_empty() {
        let image = Subspace::from_vectors(n, rad.iter().flat_map(|r| r.transpose().row_vectors()));
        cands.push(image);
        let mut stacked = Vec::new();
        for r in &rad {
            stacked.extend(r.row_vectors());
        }
        cands.push(Matrix::from_rows(n, &stacked).nullspace());
    }
    for c in a.commutant() {
        cands.extend(primary_kernels(&c));
    }
    for j in 0..n {
        cands.push(a.spin([unit_vector(n, j)]));
    }
    if let Some(s) = smallest(cands) {
        return Some(s);
    }
    let mut spun = Vec::new();
    for m in probes(&env) {
        for k in primary_kernels(&m) {
            for v in k.basis_vectors() {
                spun.push(a.spin([v]));
            }
        }
    }
    smallest(spun)
}

/// A proper nonzero invariant subspace, if the deterministic probe finds
/// one. A found subspace is refined inside itself until the probe finds
/// nothing smaller, and is checked invariant before it is returned.
pub fn find_proper_submodule(a: &Action) -> Option<Subspace> {
    if a.carrier_dim <= 1 {
        return None;
    }
    let mut found = search_once(a)?;
    loop {
        let inner = a.restrict(&found).expect("candidate is invariant");
        match (inner.carrier_dim > 1).then(|| search_once(&inner)).flatten() {
            Some(sub) => found = found.embed(&sub),
            None => break,
        }
    }
    assert!(a.is_invariant(&found) && proper(&found), "submodule search returned a non-submodule");
    Some(found)
}

/// An invariant complement of the invariant subspace `w`, from an
/// equivariant projection onto `w`; `None` if no such projection exists.
pub fn invariant_complement(a: &Action, w: &Subspace) -> Option<Subspace> {
    let n = a.carrier_dim;
    let d = w.dim();
    let inner = a.restrict(w).ok()?;
    let basis = w.basis_vectors();
    // unknown X (d x n), entry (i, j) at i * n + j; projection = B X
    let unknowns = d * n;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for (g, gw) in a.operators.iter().zip(&inner.operators) {
        // (gw X - X g)[i][j] = 0
        for i in 0..d {
            for j in 0..n {
                let mut row = zero_vector(unknowns);
                for k in 0..d {
                    row[k * n + j] += gw.get(i, k);
                }
                for k in 0..n {
                    row[i * n + k] -= g.get(k, j);
                }
                rows.push(row);
                rhs.push(Rational::zero());
            }
        }
    }
    for (t, b) in basis.iter().enumerate() {
        // X b_t = e_t
        for i in 0..d {
            let mut row = zero_vector(unknowns);
            for (k, x) in b.iter().enumerate() {
                row[i * n + k] = x.clone();
            }
            rows.push(row);
            rhs.push(if i == t { q(1) } else { q(0) });
        }
    }
    let x = solve(&Matrix::from_rows(unknowns, &rows), &rhs)?;
    let xm = Matrix::new(d, n, x);
    let comp = xm.nullspace();
    debug_assert!(a.is_invariant(&comp));
    Some(comp)
}

/// Irreducible summands (as far as the probe can tell) of a completely
/// reducible action, in canonical order.
pub fn decompose_module(a: &Action) -> Result<Vec<Subspace>> {
    if !is_completely_reducible(a) {
        return Err(Error::NotCompletelyReducible);
    }
    let mut out = decompose_rec(a);
    out.sort();
    Ok(out)
}

fn decompose_rec(a: &Action) -> Vec<Subspace> {
    let n = a.carrier_dim;
    if n == 0 {
        return Vec::new();
    }
    let Some(w) = find_proper_submodule(a) else {
        return alloc::vec![Subspace::full(n)];
    };
    let comp = invariant_complement(a, &w).expect("completely reducible modules have invariant complements");
    let mut out = Vec::new();
    for part in [w, comp] {
        let inner = a.restrict(&part).expect("invariant");
        out.extend(decompose_rec(&inner).iter().map(|s| part.embed(s)));
    }
    out
}

/// A subalgebra `M` with `L = M ∔ X` for an abelian ideal `X`, or `None`
/// when no complement exists.
///
/// With `u_a` the standard vectors at the non-pivot coordinates of `X`, the
/// complement is sought as `span{u_a + γ_a}`, `γ_a ∈ X`; since `[X, X] = 0`
/// the closure condition is linear in the `γ_a`.
pub fn split_over_abelian_ideal(l: &LieAlgebra, x: &Subspace) -> Result<Option<Subspace>> {
    if x.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: x.ambient_dim() });
    }
    if !l.is_ideal(x) || !l.is_abelian_subspace(x) {
        return Err(Error::NotAbelianIdeal);
    }
    let n = l.dim();
    let free = x.non_pivots();
    let (m, r) = (free.len(), x.dim());
    let us: Vec<Vec<Rational>> = free.iter().map(|&c| unit_vector(n, c)).collect();
    let ads: Vec<Matrix> = us.iter().map(|u| l.restricted_ad(u, x)).collect::<Result<_>>()?;
    // unknown g_a[s] at a * r + s
    let unknowns = m * r;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let w = l.bracket(&us[a], &us[b]);
            let red = x.reduce(&w);
            let alpha: Vec<Rational> = free.iter().map(|&c| red[c].clone()).collect();
            let mut xpart = w.clone();
            for (k, al) in alpha.iter().enumerate() {
                crate::linalg::axpy(&mut xpart, &-al.clone(), &us[k]);
            }
            let beta = x.coordinates(&xpart).expect("remainder lies in the ideal");
            for s in 0..r {
                let mut row = zero_vector(unknowns);
                for t in 0..r {
                    row[b * r + t] += ads[a].get(s, t);
                    row[a * r + t] -= ads[b].get(s, t);
                }
                for (k, al) in alpha.iter().enumerate() {
                    row[k * r + s] -= al;
                }
                rows.push(row);
                rhs.push(-beta[s].clone());
            }
        }
    }
    let g = if rows.is_empty() {
        zero_vector(unknowns)
    } else {
        match solve(&Matrix::from_rows(unknowns, &rows), &rhs) {
            Some(g) => g,
            None => return Ok(None),
        }
    };
    let gens = (0..m).map(|a| {
        let mut v = us[a].clone();
        let gamma = x.vector_from_coordinates(&g[a * r..(a + 1) * r]);
        for (vi, gi) in v.iter_mut().zip(gamma) {
            *vi += gi;
        }
        v
    });
    let complement = Subspace::from_vectors(n, gens);
    debug_assert!(l.is_subalgebra(&complement));
    Ok(Some(complement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{aff1, heis3, sl2_natural, sl2_v2};
    use alloc::vec;

    fn act(n: usize, ops: Vec<Matrix>) -> Action {
        Action::new(n, ops).unwrap()
    }

    #[test]
    fn envelopes() {
        assert_eq!(associative_envelope(&act(2, vec![Matrix::zeros(2, 2)])).dim(), 1);
        // ad x, ad y square-zero with every product vanishing: span{1, ad x, ad y}
        assert_eq!(associative_envelope(&Action::adjoint(&heis3())).dim(), 3);
        assert_eq!(associative_envelope(&act(2, sl2_natural().to_vec())).dim(), 4);
    }

    #[test]
    fn trace_radicals() {
        assert!(associative_envelope(&act(2, sl2_natural().to_vec())).trace_radical().is_zero());
        let e = associative_envelope(&Action::adjoint(&heis3()));
        assert_eq!(e.trace_radical().dim(), 2);
        assert!(!e.trace_radical().contains(&[q(1), q(0), q(0)]));
        assert!(associative_envelope(&act(2, vec![])).trace_radical().is_zero());
    }

    #[test]
    fn complete_reducibility() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert!(is_completely_reducible(&act(2, vec![d])));
        let j = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!is_completely_reducible(&act(2, vec![j])));
        assert!(is_completely_reducible(&act(2, vec![Matrix::zeros(2, 2)])));
    }

    #[test]
    fn submodules() {
        let d = act(2, vec![Matrix::from_i64(&[&[1, 0], &[0, 2]])]);
        assert_eq!(find_proper_submodule(&d), Some(Subspace::coordinate(2, &[0])));
        assert_eq!(find_proper_submodule(&act(2, sl2_natural().to_vec())), None);
        let z = act(2, vec![Matrix::zeros(2, 2)]);
        assert_eq!(find_proper_submodule(&z), Some(Subspace::coordinate(2, &[0])));
    }

    #[test]
    fn decompositions() {
        let d = act(2, vec![Matrix::from_i64(&[&[1, 0], &[0, 2]])]);
        assert_eq!(decompose_module(&d).unwrap(), vec![Subspace::coordinate(2, &[0]), Subspace::coordinate(2, &[1])]);
        assert_eq!(decompose_module(&act(2, sl2_natural().to_vec())).unwrap(), vec![Subspace::full(2)]);
        let z = act(3, vec![Matrix::zeros(3, 3)]);
        assert_eq!(
            decompose_module(&z).unwrap(),
            vec![Subspace::coordinate(3, &[0]), Subspace::coordinate(3, &[1]), Subspace::coordinate(3, &[2])]
        );
        let j = act(2, vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])]);
        assert!(matches!(decompose_module(&j), Err(Error::NotCompletelyReducible)));
    }

    #[test]
    fn isotypic_pair_splits() {
        // natural sl2 module twice, glued by a change of basis
        let p = Matrix::from_i64(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 2, 0], &[0, 1, 0, 3]]);
        let pinv = p.inverse().unwrap();
        let ops: Vec<Matrix> = sl2_natural()
            .iter()
            .map(|m| {
                let mut big = Matrix::zeros(4, 4);
                for i in 0..2 {
                    for j in 0..2 {
                        big.set(i, j, m.get(i, j).clone());
                        big.set(i + 2, j + 2, m.get(i, j).clone());
                    }
                }
                &(&p * &big) * &pinv
            })
            .collect();
        let a = act(4, ops);
        let parts = decompose_module(&a).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|s| s.dim() == 2 && a.is_invariant(s)));
    }

    #[test]
    fn splittings() {
        let h = heis3();
        assert_eq!(split_over_abelian_ideal(&h, &Subspace::coordinate(3, &[2])).unwrap(), None);
        let a = aff1();
        assert_eq!(split_over_abelian_ideal(&a, &Subspace::coordinate(2, &[1])).unwrap(), Some(Subspace::coordinate(2, &[0])));
        let s = sl2_v2();
        let m = split_over_abelian_ideal(&s, &Subspace::coordinate(5, &[3, 4])).unwrap().unwrap();
        assert_eq!(m, Subspace::coordinate(5, &[0, 1, 2]));
        assert!(matches!(split_over_abelian_ideal(&h, &Subspace::coordinate(3, &[0])), Err(Error::NotAbelianIdeal)));
    }
}
