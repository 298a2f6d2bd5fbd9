use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::LieAlgebra;

/// A named map sending every algebra to one of its ideals.
#[derive(Clone)]
pub struct Preradical {
    name: String,
    eval: Arc<dyn Fn(&LieAlgebra) -> Subspace + Send + Sync>,
}

impl Preradical {
    pub fn new(name: impl Into<String>, eval: impl Fn(&LieAlgebra) -> Subspace + Send + Sync + 'static) -> Self {
        Preradical { name: name.into(), eval: Arc::new(eval) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Evaluates and checks that the result is an ideal.
    pub fn eval(&self, l: &LieAlgebra) -> Result<Subspace> {
        let r = (self.eval)(l);
        if r.ambient_dim() != l.dim() || !l.is_ideal(&r) {
            return Err(Error::PreradicalContract(format!("{} did not return an ideal", self.name)));
        }
        Ok(r)
    }

    /// Evaluates on the subalgebra `s` of `l` and returns the result in the
    /// coordinates of `l`.
    pub fn eval_on(&self, l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
        if s.is_full() {
            return self.eval(l);
        }
        let sub = l.subalgebra(s)?;
        Ok(s.embed(&self.eval(&sub)?))
    }
}

impl fmt::Debug for Preradical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preradical({})", self.name)
    }
}

pub const REGISTRY_NAMES: [&str; 9] =
    ["rad", "nilrad", "center", "derived", "lower-central-stable", "levi-radical", "semisimple-ideal", "jacobson", "vasilescu"];

/// The named evaluator, if the name is known.
pub fn by_name(name: &str) -> Option<Preradical> {
    let p = match name {
        "rad" => Preradical::new(name, super::solvable_radical),
        "nilrad" => Preradical::new(name, super::nilradical),
        "center" => Preradical::new(name, LieAlgebra::center),
        "derived" => Preradical::new(name, LieAlgebra::derived_algebra),
        "lower-central-stable" => Preradical::new(name, LieAlgebra::stable_lower_central_term),
        "levi-radical" => Preradical::new(name, super::levi_radical),
        "semisimple-ideal" => Preradical::new(name, super::largest_semisimple_ideal),
        "jacobson" => Preradical::new(name, crate::frattini::jacobson_ideal),
        "vasilescu" => Preradical::new(name, super::vasilescu_radical),
        _ => return None,
    };
    Some(p)
}

pub fn registry() -> Vec<Preradical> {
    REGISTRY_NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

/// `R^0 = L`, `R^{n+1} = R(R^n)`; returns the stable term and the least
/// `n` with `R^{n+1} = R^n`.
pub fn superposition_closure(r: &Preradical, l: &LieAlgebra) -> Result<(Subspace, usize)> {
    let mut cur = l.full();
    let mut n = 0;
    loop {
        let next = r.eval_on(l, &cur)?;
        if next == cur {
            return Ok((cur, n));
        }
        if !next.is_subspace_of(&cur) {
            return Err(Error::PreradicalContract(format!("{} is not contained in its argument", r.name())));
        }
        cur = next;
        n += 1;
    }
}

/// `(R * T)(L)`: the preimage of `R(L / T(L))`.
pub fn convolution(r: &Preradical, t: &Preradical, l: &LieAlgebra) -> Result<Subspace> {
    let inner = t.eval(l)?;
    convolve_with(r, l, &inner)
}

fn convolve_with(r: &Preradical, l: &LieAlgebra, inner: &Subspace) -> Result<Subspace> {
    let qd = l.quotient(inner)?;
    let out = qd.pull_back(&r.eval(&qd.quotient)?);
    debug_assert!(inner.is_subspace_of(&out));
    Ok(out)
}

/// `R^(0) = 0`, `R^(a+1) = (R * R^(a))(L)`; returns the stable term and the
/// least `a` with `R^(a+1) = R^(a)`.
pub fn convolution_closure(r: &Preradical, l: &LieAlgebra) -> Result<(Subspace, usize)> {
    let mut cur = l.zero();
    let mut n = 0;
    loop {
        let next = convolve_with(r, l, &cur)?;
        if next == cur {
            return Ok((cur, n));
        }
        cur = next;
        n += 1;
    }
}

/// Whether `R(L / I) = 0`.
pub fn is_absorbing(r: &Preradical, l: &LieAlgebra, i: &Subspace) -> Result<bool> {
    let qd = l.quotient(i)?;
    Ok(r.eval(&qd.quotient)?.is_zero())
}
