//! Exact ψ-extended finite operator calculus.
//!
//! An admissible sequence assigns every `n ≥ 1` a nonzero scalar `n_ψ` (the
//! ψ-analog of `n`). From it this crate builds ψ-factorials and ψ-binomials,
//! the ψ-derivative `x^n ↦ n_ψ x^{n-1}` and its right inverse, the generalized
//! translation `E^a(∂_ψ)`, the ψ-difference operator `Δ_ψ = E^1(∂_ψ) - id`,
//! ψ-Bernoulli-Ward numbers and polynomials, and a closed-form solver for
//! `Δ_ψ f = φ` over polynomials.
//!
//! Built-in families: classical (`n_ψ = n`), q-analog
//! (`n_ψ = (1 - q^n)/(1 - q)`), Fibonomial (`n_ψ = F_n`), and a finite custom
//! table.
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bernoulli;
mod error;
pub mod operators;
pub mod psi;
pub mod solver;

pub use crate::algebra::{Coefficient, Poly, Rational, Series};
pub use crate::bernoulli::{BernoulliTable, GfReport, Method};
pub use crate::error::{Error, Result};
pub use crate::operators::OperatorSeries;
pub use crate::psi::{PsiFamily, PsiSequence};
pub use crate::solver::Solution;
