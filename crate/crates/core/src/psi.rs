//! Admissible sequence families and the quantities they induce.
//!
//! A family fixes `n_ψ` for every `n ≥ 1`:
//!
//! | family       | `n_ψ`                                  |
//! |--------------|----------------------------------------|
//! | `Classical`  | `n`                                    |
//! | `QAnalog(q)` | `(1 - q^n)/(1 - q)`, and `n` at `q = 1` |
//! | `Fibonomial` | `F_n` with `F_1 = F_2 = 1`             |
//! | `Custom`     | the `n`-th table entry                 |
//!
//! with `0_ψ = 0` and `0_ψ! = 1` throughout. A sequence is admissible when
//! `n_ψ ≠ 0` on its whole range, which makes every ψ-factorial invertible.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use spin::RwLock;

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PsiFamily {
    Classical,
    QAnalog(Rational),
    Fibonomial,
    /// Values `1_ψ, 2_ψ, ...` in order.
    Custom(Vec<Rational>),
}

impl PsiFamily {
    /// `q = 1` is the classical limit of the q-analog.
    fn effective(&self) -> &PsiFamily {
        match self {
            PsiFamily::QAnalog(q) if q.is_one() => &PsiFamily::Classical,
            other => other,
        }
    }
}

/// Renders the CLI family spec: `classical`, `q:<rational>`, `fib`,
/// `custom:<v1,v2,...>`.
impl fmt::Display for PsiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiFamily::Classical => f.write_str("classical"),
            PsiFamily::QAnalog(q) => write!(f, "q:{q}"),
            PsiFamily::Fibonomial => f.write_str("fib"),
            PsiFamily::Custom(values) => {
                f.write_str("custom:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PsiFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec_err = |_| Error::FamilySpec(s.to_string());
        match s {
            "classical" => Ok(PsiFamily::Classical),
            "fib" => Ok(PsiFamily::Fibonomial),
            _ => {
                if let Some(q) = s.strip_prefix("q:") {
                    Ok(PsiFamily::QAnalog(q.parse().map_err(spec_err)?))
                } else if let Some(list) = s.strip_prefix("custom:") {
                    let values = list
                        .split(',')
                        .map(|v| v.trim().parse::<Rational>())
                        .collect::<Result<Vec<_>>>()
                        .map_err(spec_err)?;
                    Ok(PsiFamily::Custom(values))
                } else {
                    Err(Error::FamilySpec(String::from(s)))
                }
            }
        }
    }
}

struct Cache {
    /// `values[n] = n_ψ`, validated nonzero for `n ≥ 1`.
    values: Vec<Rational>,
    /// `factorials[n] = n_ψ!`.
    factorials: Vec<Rational>,
}

struct Inner {
    family: PsiFamily,
    capacity: usize,
    cache: RwLock<Cache>,
}

/// An admissible sequence: a family validated nonzero on `1..=capacity`.
///
/// Built-in families extend past the capacity on demand (memoized, with the
/// same nonzero check); a custom table never extends. Clones share the memo.
#[derive(Clone)]
pub struct PsiSequence {
    inner: Arc<Inner>,
}

impl fmt::Debug for PsiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PsiSequence")
            .field("family", &self.inner.family)
            .field("capacity", &self.inner.capacity)
            .finish()
    }
}

impl PartialEq for PsiSequence {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.family == other.inner.family
    }
}

impl PsiSequence {
    pub fn new(family: PsiFamily, capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::ZeroCapacity);
        }
        if let PsiFamily::Custom(table) = &family {
            if let Some(i) = table.iter().position(Rational::is_zero) {
                return Err(Error::Inadmissible(i + 1));
            }
            if capacity > table.len() {
                return Err(Error::BeyondTable {
                    index: capacity,
                    len: table.len(),
                });
            }
        }
        let seq = PsiSequence {
            inner: Arc::new(Inner {
                family,
                capacity,
                cache: RwLock::new(Cache {
                    values: vec![Rational::zero()],
                    factorials: vec![Rational::one()],
                }),
            }),
        };
        seq.ensure(capacity)?;
        Ok(seq)
    }

    pub fn classical() -> Self {
        Self::new(PsiFamily::Classical, 1).expect("classical family is admissible")
    }

    pub fn fibonomial() -> Self {
        Self::new(PsiFamily::Fibonomial, 1).expect("Fibonomial family is admissible")
    }

    pub fn q_analog(q: Rational) -> Result<Self> {
        Self::new(PsiFamily::QAnalog(q), 1)
    }

    pub fn family(&self) -> &PsiFamily {
        &self.inner.family
    }

    pub fn capacity(&self) -> usize {
        self.inner.capacity
    }

    /// Extends the memo so that index `n` is available.
    fn ensure(&self, n: usize) -> Result<()> {
        if self.inner.cache.read().values.len() > n {
            return Ok(());
        }
        let mut cache = self.inner.cache.write();
        while cache.values.len() <= n {
            let m = cache.values.len();
            let value = self.next_value(&cache.values, m)?;
            if value.is_zero() {
                return Err(Error::Inadmissible(m));
            }
            let fact = &cache.factorials[m - 1] * &value;
            cache.values.push(value);
            cache.factorials.push(fact);
        }
        Ok(())
    }

    /// `m_ψ` given `values[0..m]`, `m ≥ 1`.
    fn next_value(&self, values: &[Rational], m: usize) -> Result<Rational> {
        Ok(match self.inner.family.effective() {
            PsiFamily::Classical => Rational::from(m as i64),
            // n_q = 1 + q·(n-1)_q
            PsiFamily::QAnalog(q) => &values[m - 1] * q + Rational::one(),
            PsiFamily::Fibonomial => match m {
                1 | 2 => Rational::one(),
                _ => &values[m - 1] + &values[m - 2],
            },
            PsiFamily::Custom(table) => table.get(m - 1).cloned().ok_or(Error::BeyondTable {
                index: m,
                len: table.len(),
            })?,
        })
    }

    /// `n_ψ`, with `0_ψ = 0`.
    pub fn n_psi(&self, n: usize) -> Result<Rational> {
        self.ensure(n)?;
        Ok(self.inner.cache.read().values[n].clone())
    }

    /// `n_ψ! = 1_ψ·2_ψ···n_ψ`, with `0_ψ! = 1`.
    pub fn factorial(&self, n: usize) -> Result<Rational> {
        self.ensure(n)?;
        Ok(self.inner.cache.read().factorials[n].clone())
    }

    /// `n_ψ!/(k_ψ!(n-k)_ψ!)`, zero when `k > n`.
    pub fn binomial(&self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Ok(Rational::zero());
        }
        self.ensure(n)?;
        let cache = self.inner.cache.read();
        let f = &cache.factorials;
        Ok(&f[n] / (&f[k] * &f[n - k]))
    }

    /// `n_ψ!/Π (s_i)_ψ!`; the parts must sum to `n`.
    pub fn multinomial(&self, n: usize, parts: &[usize]) -> Result<Rational> {
        let sum: usize = parts.iter().sum();
        if sum != n {
            return Err(Error::MultinomialParts { n, sum });
        }
        self.ensure(n)?;
        let cache = self.inner.cache.read();
        let f = &cache.factorials;
        let den: Rational = parts.iter().map(|&s| f[s].clone()).product();
        Ok(&f[n] / den)
    }

    /// `x_ψ (x-1)_ψ ··· (x-k+1)_ψ`; every index must be nonnegative.
    pub fn falling_factorial(&self, x: i64, k: usize) -> Result<Rational> {
        if k == 0 {
            return Ok(Rational::one());
        }
        let low = x - (k as i64) + 1;
        if low < 0 {
            return Err(Error::FallingFactorialRange);
        }
        (low..=x).map(|i| self.n_psi(i as usize)).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn q(n: i64, d: i64) -> PsiSequence {
        PsiSequence::q_analog(r(n, d)).unwrap()
    }

    #[test]
    fn make_sequence_examples() {
        assert_eq!(
            PsiSequence::new(PsiFamily::QAnalog(r(-1, 1)), 2).unwrap_err(),
            Error::Inadmissible(2)
        );
        let c = PsiSequence::new(PsiFamily::Classical, 10).unwrap();
        for n in 1..=10 {
            assert_eq!(c.n_psi(n).unwrap(), r(n as i64, 1));
        }
        let q0 = PsiSequence::new(PsiFamily::QAnalog(r(0, 1)), 10).unwrap();
        for n in 1..=12 {
            assert_eq!(q0.n_psi(n).unwrap(), r(1, 1));
        }
        assert_eq!(
            PsiSequence::new(PsiFamily::Classical, 0).unwrap_err(),
            Error::ZeroCapacity
        );
    }

    #[test]
    fn lazy_extension_revalidates() {
        let s = q(-1, 1);
        assert_eq!(s.n_psi(1).unwrap(), r(1, 1));
        assert_eq!(s.n_psi(2), Err(Error::Inadmissible(2)));
        assert_eq!(s.factorial(5), Err(Error::Inadmissible(2)));
    }

    #[test]
    fn custom_table() {
        let fam = PsiFamily::Custom(alloc::vec![r(1, 1), r(3, 1), r(1, 2)]);
        let s = PsiSequence::new(fam.clone(), 3).unwrap();
        assert_eq!(s.factorial(3).unwrap(), r(3, 2));
        assert_eq!(s.n_psi(4), Err(Error::BeyondTable { index: 4, len: 3 }));
        assert!(PsiSequence::new(fam, 4).is_err());
        let zero = PsiFamily::Custom(alloc::vec![r(1, 1), r(0, 1)]);
        assert_eq!(
            PsiSequence::new(zero, 1).unwrap_err(),
            Error::Inadmissible(2)
        );
    }

    #[test]
    fn n_psi_examples() {
        assert_eq!(PsiSequence::classical().n_psi(7).unwrap(), r(7, 1));
        assert_eq!(q(2, 1).n_psi(3).unwrap(), r(7, 1));
        assert_eq!(PsiSequence::fibonomial().n_psi(5).unwrap(), r(5, 1));
        for s in [PsiSequence::classical(), q(1, 2), PsiSequence::fibonomial()] {
            assert_eq!(s.n_psi(0).unwrap(), r(0, 1));
            assert_eq!(s.factorial(0).unwrap(), r(1, 1));
        }
    }

    #[test]
    fn q_half_closed_form() {
        // (1 - q^n)/(1 - q) evaluated directly
        let s = q(1, 2);
        for n in 0..15u32 {
            let direct = (r(1, 1) - r(1, 2).pow(n)) / r(1, 2);
            assert_eq!(s.n_psi(n as usize).unwrap(), direct);
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(PsiSequence::fibonomial().factorial(4).unwrap(), r(6, 1));
        assert_eq!(q(2, 1).factorial(3).unwrap(), r(21, 1));
    }

    #[test]
    fn binomial_examples() {
        let fib = PsiSequence::fibonomial();
        assert_eq!(fib.binomial(4, 2).unwrap(), r(6, 1));
        assert_eq!(q(2, 1).binomial(4, 2).unwrap(), r(35, 1));
        assert_eq!(fib.binomial(9, 0).unwrap(), r(1, 1));
        assert_eq!(fib.binomial(3, 4).unwrap(), r(0, 1));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(
            PsiSequence::classical().multinomial(4, &[2, 1, 1]).unwrap(),
            r(12, 1)
        );
        assert_eq!(
            PsiSequence::fibonomial()
                .multinomial(4, &[2, 1, 1])
                .unwrap(),
            r(6, 1)
        );
        assert_eq!(q(3, 1).multinomial(6, &[6]).unwrap(), r(1, 1));
        assert_eq!(
            PsiSequence::classical().multinomial(4, &[2, 1]),
            Err(Error::MultinomialParts { n: 4, sum: 3 })
        );
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(
            PsiSequence::classical().falling_factorial(5, 2).unwrap(),
            r(20, 1)
        );
        assert_eq!(
            PsiSequence::fibonomial().falling_factorial(5, 2).unwrap(),
            r(15, 1)
        );
        assert_eq!(
            PsiSequence::fibonomial().falling_factorial(-3, 0).unwrap(),
            r(1, 1)
        );
        assert_eq!(
            PsiSequence::classical().falling_factorial(3, 4).unwrap(),
            r(0, 1)
        );
        assert_eq!(
            PsiSequence::classical().falling_factorial(2, 4),
            Err(Error::FallingFactorialRange)
        );
    }

    #[test]
    fn family_spec_round_trip() {
        for spec in ["classical", "fib", "q:1/2", "q:-3", "custom:1,2,-1/3"] {
            let fam: PsiFamily = spec.parse().unwrap();
            assert_eq!(fam.to_string(), spec);
        }
        for bad in [
            "",
            "q:",
            "q:1/0",
            "custom:",
            "custom:1,,2",
            "fibonacci",
            "Q:2",
        ] {
            assert!(bad.parse::<PsiFamily>().is_err(), "{bad}");
        }
    }

    #[test]
    fn shared_memo_across_threads() {
        let s = PsiSequence::fibonomial();
        let handles: std::vec::Vec<_> = (0..4)
            .map(|t| {
                let s = s.clone();
                std::thread::spawn(move || s.factorial(40 + t).unwrap())
            })
            .collect();
        let got: std::vec::Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let fresh = PsiSequence::fibonomial();
        for (t, g) in got.iter().enumerate() {
            assert_eq!(g, &fresh.factorial(40 + t).unwrap());
        }
    }
}
