//! Exact structure theory for finite-dimensional Lie algebras over the rationals.
//!
//! Everything here works with arbitrary-precision rationals and canonical
//! reduced-row-echelon bases, so subspaces compare exactly and results are
//! reproducible bit for bit. The crate is `no_std` and only needs `alloc`.
//!
//! Layout:
//!
//! - [`linalg`]: matrices, canonical subspaces, solving.
//! - [`poly`]: univariate rational polynomials and their factorization.
//! - [`lie`]: algebras given by structure constants and the standard
//!   constructions on them (closures, series, Killing form, derivations,
//!   quotients, products).
//! - [`repr`]: actions on modules, associative envelopes, submodule search,
//!   splitting of extensions over abelian ideals.
//! - [`radicals`]: solvable radical, nilradical, Levi decomposition and the
//!   preradical combinators (superposition and convolution series).
//! - [`frattini`]: Jacobson and Frattini ideals and indices, Frattini-free
//!   structure, subsimple classification and subdirect decompositions.
//! - [`chains`]: finite families of subspaces, completions and finite-gap chains.
//! - [`corpus`]: the built-in algebras used by tests and the CLI.

#![no_std]

extern crate alloc;

pub mod chains;
pub mod corpus;
mod error;
pub mod frattini;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod radicals;
mod rational;
pub mod repr;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, QuotientData, SeriesResult, ValidationReport};
pub use linalg::{Matrix, Subspace};
pub use rational::{format_rational, parse_rational, q, qf, Rational};
