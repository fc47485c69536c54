use alloc::vec::Vec;
use core::fmt::Debug;

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Ring operations a series coefficient needs.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Power series in `z` truncated after `z^order` (inclusive).
///
/// Holds exactly `order + 1` coefficients. Binary operations require equal
/// orders.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// remain.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut coeffs: Vec<C> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_coeffs(order, [])
    }

    pub fn one(order: usize) -> Self {
        Series::from_coeffs(order, [C::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                (0..=n).fold(C::zero(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(b))
                    }
                })
            })
            .collect();
        Ok(Series { coeffs })
    }

    /// Multiplies by `z`, dropping the term pushed past the order.
    pub fn shift_up(&self) -> Self {
        let order = self.order();
        Series::from_coeffs(
            order,
            core::iter::once(C::zero()).chain(self.coeffs[..order].iter().cloned()),
        )
    }
}

impl Series<Rational> {
    /// Multiplicative inverse by the triangular recurrence
    /// `b_0 = 1/a_0`, `b_n = -(1/a_0) Σ_{k=1..n} a_k b_{n-k}`.
    pub fn invert(&self) -> Result<Self> {
        let inv_lead = self.coeffs[0].recip().ok_or(Error::NotInvertible)?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_lead.clone());
        for n in 1..=self.order() {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-(s * &inv_lead));
        }
        Ok(Series { coeffs: out })
    }

    /// Embeds as a series with constant-polynomial coefficients.
    pub fn lift(&self) -> Series<Poly> {
        Series {
            coeffs: self.coeffs.iter().cloned().map(Poly::constant).collect(),
        }
    }
}
