//! Linear operators on `Q[x]` built from the ψ-derivative.
//!
//! Every operator here is a formal series `Σ a_k ∂_ψ^k`. On a polynomial of
//! degree `d` only `a_0..a_d` matter, so the action is always a finite sum.

use alloc::vec::Vec;

use crate::algebra::{Poly, Rational, Series};
use crate::error::{Error, Result};
use crate::psi::PsiSequence;

/// `∂_ψ`: `x^n ↦ n_ψ x^{n-1}`.
pub fn psi_derivative(seq: &PsiSequence, p: &Poly) -> Result<Poly> {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| Ok(c * seq.n_psi(n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// `∫_ψ`: `x^n ↦ x^{n+1}/(n+1)_ψ`. Right inverse of [`psi_derivative`]; the
/// result has no constant term.
pub fn psi_integral(seq: &PsiSequence, p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Ok(Poly::zero());
    }
    let mut coeffs = Vec::with_capacity(p.coeffs().len() + 1);
    coeffs.push(Rational::zero());
    for (n, c) in p.coeffs().iter().enumerate() {
        coeffs.push(c / seq.n_psi(n + 1)?);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `E^a(∂_ψ) p = Σ_k a^k/k_ψ! ∂_ψ^k p`, written `p(x +_ψ a)`.
pub fn translate(seq: &PsiSequence, p: &Poly, a: &Rational) -> Result<Poly> {
    let Some(degree) = p.degree() else {
        return Ok(Poly::zero());
    };
    if a.is_zero() {
        return Ok(p.clone());
    }
    apply_operator(&OperatorSeries::translation(seq, a, degree)?, p)
}

/// `Δ_ψ p = p(x +_ψ 1) - p(x)`.
pub fn delta_psi(seq: &PsiSequence, p: &Poly) -> Result<Poly> {
    Ok(&translate(seq, p, &Rational::one())? - p)
}

/// `(x +_ψ a)^n = Σ_k C(n,k)_ψ a^k x^{n-k}`.
pub fn psi_pow(seq: &PsiSequence, a: &Rational, n: usize) -> Result<Poly> {
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    let mut a_pow = Rational::one();
    for k in 0..=n {
        coeffs[n - k] = seq.binomial(n, k)? * &a_pow;
        a_pow *= a;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// `k̄^r`, the `r`-th ψ-power of `1 +_ψ 1 +_ψ ··· +_ψ 1` (`k` summands):
/// `(E^1)^k x^r` at `x = 0`.
pub fn bar_power(seq: &PsiSequence, k: usize, r: usize) -> Result<Rational> {
    umbral_eval(seq, &Poly::monomial(Rational::one(), r), k)
}

/// Evaluation at `k̄`: substitutes `x^j ↦ k̄^j`, i.e. `((E^1)^k p)(0)`.
///
/// For the classical family this is plain evaluation at `k`.
pub fn umbral_eval(seq: &PsiSequence, p: &Poly, k: usize) -> Result<Rational> {
    let Some(degree) = p.degree() else {
        return Ok(Rational::zero());
    };
    let step = OperatorSeries::translation(seq, &Rational::one(), degree)?;
    let mut acc = p.clone();
    for _ in 0..k {
        acc = apply_operator(&step, &acc)?;
    }
    Ok(acc.constant_term())
}

/// `(a_1 +_ψ a_2 +_ψ ··· +_ψ a_k)^n`: `E^{a_1} ∘ ··· ∘ E^{a_k}` applied to
/// `x^n`, at `x = 0`.
pub fn iterated_sum_power(seq: &PsiSequence, scalars: &[Rational], n: usize) -> Result<Rational> {
    if scalars.is_empty() {
        return Err(Error::EmptyScalars);
    }
    let mut acc = Poly::monomial(Rational::one(), n);
    for a in scalars.iter().rev() {
        acc = translate(seq, &acc, a)?;
    }
    Ok(acc.constant_term())
}

/// `exp_ψ{z} = Σ z^n/n_ψ!` through `z^order`.
pub fn exp_psi(seq: &PsiSequence, order: usize) -> Result<Series<Rational>> {
    let coeffs = (0..=order)
        .map(|n| {
            Ok(seq
                .factorial(n)?
                .recip()
                .expect("admissible factorials are nonzero"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::from_coeffs(order, coeffs))
}

/// A series `Σ a_k ∂_ψ^k` in the ψ-derivative of one sequence.
#[derive(Clone, Debug)]
pub struct OperatorSeries {
    seq: PsiSequence,
    coeffs: Vec<Rational>,
    /// Whether coefficients past `coeffs` are zero (a polynomial in `∂_ψ`)
    /// rather than unknown (a truncated infinite series).
    finite: bool,
}

impl OperatorSeries {
    /// A polynomial in `∂_ψ`; absent coefficients are zero.
    pub fn finite(seq: &PsiSequence, coeffs: Vec<Rational>) -> Self {
        OperatorSeries {
            seq: seq.clone(),
            coeffs,
            finite: true,
        }
    }

    /// A prefix of an infinite series; applying it to polynomials of degree
    /// `≥ coeffs.len()` is an error.
    pub fn truncated(seq: &PsiSequence, coeffs: Vec<Rational>) -> Self {
        OperatorSeries {
            seq: seq.clone(),
            coeffs,
            finite: false,
        }
    }

    pub fn identity(seq: &PsiSequence) -> Self {
        Self::finite(seq, alloc::vec![Rational::one()])
    }

    /// `E^a(∂_ψ)`: `a_k = a^k/k_ψ!`, through `k = order`.
    pub fn translation(seq: &PsiSequence, a: &Rational, order: usize) -> Result<Self> {
        let mut a_pow = Rational::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            coeffs.push(&a_pow / seq.factorial(k)?);
            a_pow *= a;
        }
        Ok(Self::truncated(seq, coeffs))
    }

    /// `B̂^{-1} = Δ_ψ/∂_ψ`: `a_k = 1/(k+1)_ψ!`, through `k = order`.
    pub fn bernoulli_inverse(seq: &PsiSequence, order: usize) -> Result<Self> {
        let coeffs = (0..=order)
            .map(|k| {
                Ok(seq
                    .factorial(k + 1)?
                    .recip()
                    .expect("admissible factorials are nonzero"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::truncated(seq, coeffs))
    }

    pub fn sequence(&self) -> &PsiSequence {
        &self.seq
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }
}

/// `Σ_{k=0..deg p} a_k ∂_ψ^k p`, with `p` taken in the operator's own family.
pub fn apply_operator(op: &OperatorSeries, p: &Poly) -> Result<Poly> {
    apply_operator_in(&op.seq, op, p)
}

/// As [`apply_operator`], but checks that `seq` is the operator's family.
pub fn apply_operator_in(seq: &PsiSequence, op: &OperatorSeries, p: &Poly) -> Result<Poly> {
    if *seq != op.seq {
        return Err(Error::FamilyMismatch);
    }
    let Some(degree) = p.degree() else {
        return Ok(Poly::zero());
    };
    if !op.finite && op.coeffs.len() <= degree {
        return Err(Error::OperatorTooShort {
            len: op.coeffs.len(),
            needed: degree + 1,
        });
    }
    let mut acc = Poly::zero();
    let mut term = p.clone();
    for (k, a) in op.coeffs.iter().enumerate().take(degree + 1) {
        if k > 0 {
            term = psi_derivative(seq, &term)?;
        }
        if !a.is_zero() {
            acc = Poly::combine(&acc, &Rational::one(), &term, a);
        }
    }
    Ok(acc)
}
