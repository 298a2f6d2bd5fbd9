//! Univariate polynomials over `Q` and their factorization.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::{q, Rational};

/// Coefficients from the constant term up; never has a zero leading
/// coefficient, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![q(1)] }
    }

    /// `t - r`.
    pub fn linear(r: Rational) -> Self {
        Poly { coeffs: vec![-r, q(1)] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Poly { coeffs: self.coeffs.iter().map(|c| c / &lc).collect() }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(a)` for a square matrix `a`.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        r.truncate(dd);
        (Self::new(quot), Self::new(r))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = gcd` monic and `s * self + t * other = g`.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        let neg = Poly::from_i64(&[-1]);
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1);
            let s2 = s0.add(&quo.mul(&s1).mul(&neg));
            let t2 = t0.add(&quo.mul(&t1).mul(&neg));
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Poly::new(vec![r0.leading().recip()]);
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        self.mul(other).div_rem(&self.gcd(other)).0.monic()
    }

    /// Integer polynomial with the same roots, content removed, positive
    /// leading coefficient.
    fn primitive(&self) -> Vec<BigInt> {
        let lcm_den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from(lcm_den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Squarefree decomposition: `(factor, multiplicity)` pairs of a monic
/// polynomial (Yun's algorithm).
fn squarefree(p: &Poly) -> Vec<(Poly, usize)> {
    let p = p.monic();
    let mut out = Vec::new();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = c.add(&b.derivative().mul(&Poly::from_i64(&[-1])));
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = c.add(&b.derivative().mul(&Poly::from_i64(&[-1])));
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = Poly::new(vec![yi.clone()]);
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                term = term.mul(&Poly::linear(xj.clone())).mul(&Poly::new(vec![(xi - xj).recip()]));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// A nontrivial factor of degree `d` of the squarefree primitive `f`, by
/// Kronecker's method.
fn kronecker_factor(f: &Poly, d: usize) -> Option<Poly> {
    // evaluation points with the smallest nonzero |f(a)| keep the divisor
    // search short
    let mut pts: Vec<(BigInt, i64)> = (-24i64..=24)
        .filter_map(|a| {
            let v = f.eval(&q(a));
            (!v.is_zero()).then(|| (v.to_integer(), a))
        })
        .collect();
    pts.sort_by(|x, y| x.0.abs().cmp(&y.0.abs()).then(x.1.abs().cmp(&y.1.abs())));
    let pts = &pts[..=d];
    let xs: Vec<Rational> = pts.iter().map(|(_, a)| q(*a)).collect();
    let divs: Vec<Vec<BigInt>> = pts.iter().map(|(v, _)| divisors(v)).collect();
    let mut idx = vec![0usize; d + 1];
    let mut signs = vec![false; d + 1];
    loop {
        let ys: Vec<Rational> = (0..=d)
            .map(|i| {
                let v = Rational::from(divs[i][idx[i]].clone());
                if signs[i] {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let g = interpolate(&xs, &ys);
        if g.degree() == Some(d) && g.coeffs.iter().all(|c| c.is_integer()) && g.divides(f) {
            return Some(g.monic());
        }
        // odometer over divisor choices; the first sign stays positive since
        // g and -g give the same factor
        let mut k = 0;
        loop {
            if k > d {
                return None;
            }
            if k > 0 && !signs[k] {
                signs[k] = true;
                break;
            }
            signs[k] = false;
            idx[k] += 1;
            if idx[k] < divs[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn rational_roots(prim: &[BigInt]) -> Vec<Rational> {
    let lead = prim.last().unwrap();
    let mut tail = prim.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if tail > 0 {
        roots.push(Rational::zero());
        tail = tail.min(prim.len() - 1);
    }
    let p = Poly::new(prim.iter().map(|c| Rational::from(c.clone())).collect());
    for num in divisors(&prim[tail]) {
        for den in divisors(lead) {
            for s in [1, -1] {
                let r = Rational::new(&num * BigInt::from(s), den.clone());
                if p.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Monic irreducible factors of a squarefree polynomial.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    for r in rational_roots(&rest.primitive()) {
        out.push(Poly::linear(r.clone()));
        rest = rest.div_rem(&Poly::linear(r)).0;
    }
    let mut stack = vec![rest];
    while let Some(g) = stack.pop() {
        let deg = g.degree().unwrap_or(0);
        if deg == 0 {
            continue;
        }
        let prim = Poly::new(g.primitive().into_iter().map(Rational::from).collect());
        let split = (2..=deg / 2).find_map(|d| kronecker_factor(&prim, d));
        match split {
            Some(h) => {
                stack.push(g.div_rem(&h).0.monic());
                stack.push(h);
            }
            None => out.push(g.monic()),
        }
    }
    out
}

/// Irreducible monic factors over `Q` with multiplicities, sorted by degree
/// then coefficients. The leading coefficient of `p` is dropped.
pub fn factor(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (part, mult) in squarefree(p) {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs.cmp(&b.0.coeffs)));
    Ok(out)
}

/// Minimal polynomial of a square matrix (monic).
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let n = a.rows();
    let mut acc = Poly::one();
    let mut span = Echelon::new(n);
    for j in 0..n {
        let e = crate::linalg::unit_vector(n, j);
        if span.contains(&e) {
            continue;
        }
        let (local, krylov) = vector_minimal_polynomial(a, &e);
        for v in krylov {
            span.insert(v);
        }
        acc = acc.lcm(&local);
    }
    acc
}

/// Least monic `p` with `p(a) v = 0`, and the Krylov vectors `v, av, ...`.
fn vector_minimal_polynomial(a: &Matrix, v: &[Rational]) -> (Poly, Vec<Vec<Rational>>) {
    let n = a.rows();
    let mut ech = Echelon::new(2 * n + 1);
    let mut cur = v.to_vec();
    let mut krylov = Vec::new();
    for k in 0..=n {
        let mut row = cur.clone();
        row.extend((0..=n).map(|i| if i == k { q(1) } else { q(0) }));
        ech.reduce(&mut row);
        if row[..n].iter().all(Zero::is_zero) {
            return (Poly::new(row[n..].to_vec()).monic(), krylov);
        }
        ech.insert(row);
        krylov.push(cur.clone());
        cur = a.mul_vec(&cur);
    }
    unreachable!("Krylov sequence must become dependent within n + 1 steps")
}
