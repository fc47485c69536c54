//! Closed-form solution of `Δ_ψ f = φ` over polynomials, and ψ-power sums.
//!
//! Applying `B̂ = ∂_ψ/Δ_ψ` to both sides gives `∂_ψ f = Σ_n B_n/n_ψ! φ^{(n)}`,
//! which integrates to
//!
//! ```text
//! f = Σ_{n≥1} B_n/n_ψ! φ^{(n-1)} + ∫_ψ φ + p
//! ```
//!
//! with `Δ_ψ p = 0`. In `Q[x]` the kernel of `Δ_ψ` is the constants, so the
//! canonical solution takes `p = 0`.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Poly, Rational};
use crate::bernoulli::{bernoulli_polynomial, BernoulliTable};
use crate::error::{Error, Result};
use crate::operators::{bar_power, delta_psi, psi_derivative, psi_integral, umbral_eval};
use crate::psi::PsiSequence;

/// A verified solution of `Δ_ψ f = φ` with zero periodic part.
#[derive(Clone, Debug)]
pub struct Solution {
    f: Poly,
    phi: Poly,
    seq: PsiSequence,
}

impl Solution {
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn sequence(&self) -> &PsiSequence {
        &self.seq
    }
}

/// `(φ, ∂_ψφ, ∂_ψ²φ, ..., ∂_ψ^count φ)`.
pub fn derivative_chain(seq: &PsiSequence, phi: &Poly, count: usize) -> Result<Vec<Poly>> {
    let mut chain = Vec::with_capacity(count + 1);
    chain.push(phi.clone());
    for i in 0..count {
        let next = psi_derivative(seq, &chain[i])?;
        chain.push(next);
    }
    Ok(chain)
}

/// Solves `Δ_ψ f = φ`. The table must hold `B_0..B_{deg φ + 1}`.
///
/// The result is checked against `φ` before it is returned; a mismatch is
/// reported as [`Error::InvariantViolation`].
pub fn solve_delta(seq: &PsiSequence, table: &BernoulliTable, phi: &Poly) -> Result<Solution> {
    let Some(degree) = phi.degree() else {
        return Ok(Solution {
            f: Poly::zero(),
            phi: Poly::zero(),
            seq: seq.clone(),
        });
    };
    table.get(degree + 1)?;
    let chain = derivative_chain(seq, phi, degree)?;
    let mut f = psi_integral(seq, phi)?;
    for (n, d) in chain.iter().enumerate().map(|(i, d)| (i + 1, d)) {
        let weight = &table.values()[n] / seq.factorial(n)?;
        f = Poly::combine(&f, &Rational::one(), d, &weight);
    }
    if !verify_solution(seq, &f, phi)? {
        return Err(Error::InvariantViolation(format!(
            "solution of Δ_ψ f = φ failed verification ({})",
            seq.family()
        )));
    }
    Ok(Solution {
        f,
        phi: phi.clone(),
        seq: seq.clone(),
    })
}

/// Whether `Δ_ψ f = φ` holds exactly.
pub fn verify_solution(seq: &PsiSequence, f: &Poly, phi: &Poly) -> Result<bool> {
    Ok(delta_psi(seq, f)? == *phi)
}

/// `Σ_{k=0}^{n-1} k̄^r` from Bernoulli-Ward polynomials:
/// `(B_{r+1}(n̄) - B_{r+1})/(r+1)_ψ`, with `B_{r+1}(n̄)` the umbral evaluation.
/// The table must hold `B_0..B_{r+1}`.
pub fn power_sum(
    seq: &PsiSequence,
    table: &BernoulliTable,
    n: usize,
    r: usize,
) -> Result<Rational> {
    let b = bernoulli_polynomial(table, r + 1)?;
    if n == 0 {
        return Ok(Rational::zero());
    }
    let at_bar = umbral_eval(seq, &b, n)?;
    Ok((at_bar - b.constant_term()) / seq.n_psi(r + 1)?)
}

/// `Σ_{k=0}^{n-1} k̄^r` summed term by term.
pub fn power_sum_bruteforce(seq: &PsiSequence, n: usize, r: usize) -> Result<Rational> {
    (0..n).map(|k| bar_power(seq, k, r)).sum()
}
