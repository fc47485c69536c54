//! ψ-Bernoulli-Ward numbers and polynomials.
//!
//! Two independent constructions of `B_0..B_N`:
//!
//! * [`bernoulli_numbers`] solves the triangular system
//!   `Σ_{s=0}^{n-1} C(n,s)_ψ B_s = 0` for `n ≥ 2`, `B_0 = 1`;
//! * [`bernoulli_numbers_gf`] inverts `(exp_ψ{z} - 1)/z` as a power series
//!   and reads `B_n = n_ψ!·[z^n]`.
//!
//! The polynomials are `B_n(x) = Σ_s C(n,s)_ψ B_s x^{n-s}`. They satisfy
//! `Δ_ψ B_n(x) = n_ψ x^{n-1}` and `∂_ψ B_n(x) = n_ψ B_{n-1}(x)`.

use alloc::vec::Vec;

use crate::algebra::{Poly, Rational, Series};
use crate::error::{Error, Result};
use crate::operators::{exp_psi, OperatorSeries};
use crate::psi::PsiSequence;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Method {
    Recurrence,
    GfInversion,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::GfInversion => "gf",
        }
    }
}

/// `B_0..B_N` for one sequence, tagged with how it was computed.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    seq: PsiSequence,
    values: Vec<Rational>,
    method: Method,
}

impl BernoulliTable {
    pub fn sequence(&self) -> &PsiSequence {
        &self.seq
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Largest index held.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational> {
        self.values.get(n).ok_or(Error::TableTooShort {
            max: self.max_index(),
            requested: n,
        })
    }
}

/// `B_0..B_max` by the row recurrence
/// `B_{n-1} = -(1/C(n,n-1)_ψ) Σ_{s=0}^{n-2} C(n,s)_ψ B_s`.
pub fn bernoulli_numbers(seq: &PsiSequence, max: usize) -> Result<BernoulliTable> {
    let mut values = Vec::with_capacity(max + 1);
    values.push(Rational::one());
    for n in 2..=max + 1 {
        let mut s = Rational::zero();
        for (i, b) in values.iter().enumerate() {
            s += seq.binomial(n, i)? * b;
        }
        values.push(-(s / seq.binomial(n, n - 1)?));
    }
    Ok(BernoulliTable {
        seq: seq.clone(),
        values,
        method: Method::Recurrence,
    })
}

/// `B_0..B_max` from `z/(exp_ψ{z} - 1)`.
pub fn bernoulli_numbers_gf(seq: &PsiSequence, max: usize) -> Result<BernoulliTable> {
    let shifted = exp_psi(seq, max + 1)?;
    let a = Series::from_coeffs(max, shifted.coeffs()[1..].iter().cloned());
    let inv = a.invert()?;
    let values = inv
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| Ok(seq.factorial(n)? * c))
        .collect::<Result<Vec<_>>>()?;
    Ok(BernoulliTable {
        seq: seq.clone(),
        values,
        method: Method::GfInversion,
    })
}

/// `B_n(x) = Σ_{s=0}^{n} C(n,s)_ψ B_s x^{n-s}`.
pub fn bernoulli_polynomial(table: &BernoulliTable, n: usize) -> Result<Poly> {
    table.get(n)?;
    let seq = &table.seq;
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    for (s, b) in table.values[..=n].iter().enumerate() {
        coeffs[n - s] = seq.binomial(n, s)? * b;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `B̂ = ∂_ψ/Δ_ψ = Σ B_n/n_ψ! ∂_ψ^n`, truncated to the table.
pub fn bernoulli_operator(table: &BernoulliTable) -> Result<OperatorSeries> {
    let coeffs = table
        .values
        .iter()
        .enumerate()
        .map(|(n, b)| Ok(b / table.seq.factorial(n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(OperatorSeries::truncated(&table.seq, coeffs))
}

/// Coefficientwise outcome of the polynomial generating-function check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfReport {
    /// `passed[n]` compares the `z^n` coefficients of both sides.
    pub passed: Vec<bool>,
}

impl GfReport {
    pub fn all_passed(&self) -> bool {
        self.passed.iter().all(|&p| p)
    }

    pub fn failures(&self) -> impl Iterator<Item = usize> + '_ {
        self.passed
            .iter()
            .enumerate()
            .filter(|(_, &p)| !p)
            .map(|(n, _)| n)
    }
}

/// Checks `(exp_ψ{z} - 1)·Σ_n B_n(x) z^n/n_ψ! = z·exp_ψ{xz}` through `z^order`,
/// with the polynomials built from the recurrence table.
pub fn check_polynomial_gf(seq: &PsiSequence, order: usize) -> Result<GfReport> {
    let table = bernoulli_numbers(seq, order)?;
    let polys = (0..=order)
        .map(|n| Ok(bernoulli_polynomial(&table, n)?.scale(&seq.factorial(n)?.recip().unwrap())))
        .collect::<Result<Vec<_>>>()?;
    let gf = Series::from_coeffs(order, polys);

    let mut exp_minus_one = exp_psi(seq, order)?.coeffs().to_vec();
    exp_minus_one[0] = Rational::zero();
    let lhs = Series::from_coeffs(order, exp_minus_one).lift().mul(&gf)?;

    // z·exp_ψ{xz}: [z^n] = x^{n-1}/(n-1)_ψ!
    let rhs = Series::from_coeffs(
        order,
        (0..=order)
            .map(|n| match n {
                0 => Ok(Poly::zero()),
                _ => Ok(Poly::monomial(
                    seq.factorial(n - 1)?.recip().unwrap(),
                    n - 1,
                )),
            })
            .collect::<Result<Vec<_>>>()?,
    );
    let passed = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .map(|(l, r)| l == r)
        .collect();
    Ok(GfReport { passed })
}
