//! Identity suites run by `check`.
//!
//! Each suite checks one exact identity over a family for every index up to a
//! bound. A failed identity is reported, not raised; errors are reserved for
//! families that cannot supply the needed values.

use std::fmt;

use clap::ValueEnum;
use psi_umbral::bernoulli::{
    bernoulli_numbers, bernoulli_numbers_gf, bernoulli_polynomial, check_polynomial_gf,
};
use psi_umbral::operators::{
    delta_psi, iterated_sum_power, psi_derivative, psi_integral, translate,
};
use psi_umbral::solver::{power_sum, power_sum_bruteforce};
use psi_umbral::{Error, Poly, PsiFamily, PsiSequence, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recurrence,
    Gf,
    Appell,
    Sheffer,
    Difference,
    Multinomial,
    Powersum,
    Integration,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Recurrence,
        Suite::Gf,
        Suite::Appell,
        Suite::Sheffer,
        Suite::Difference,
        Suite::Multinomial,
        Suite::Powersum,
        Suite::Integration,
    ];

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            one => vec![one],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Gf => "gf",
            Suite::Appell => "appell",
            Suite::Sheffer => "sheffer",
            Suite::Difference => "difference",
            Suite::Multinomial => "multinomial",
            Suite::Powersum => "powersum",
            Suite::Integration => "integration",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Families checked when none is given.
pub fn default_grid() -> Vec<PsiFamily> {
    let q = |n, d| PsiFamily::QAnalog(Rational::new(n, d).unwrap());
    vec![
        PsiFamily::Classical,
        q(0, 1),
        q(1, 2),
        q(2, 1),
        q(3, 1),
        PsiFamily::Fibonomial,
    ]
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub family: PsiFamily,
    pub cases: usize,
    /// Descriptions of failing cases.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }
}

fn multinomial_expansion(
    seq: &PsiSequence,
    scalars: &[Rational],
    n: usize,
) -> Result<Rational, Error> {
    let mut total = Rational::zero();
    let mut parts = vec![0usize; scalars.len()];
    compositions(n, 0, &mut parts, &mut |parts| {
        let term = parts
            .iter()
            .zip(scalars)
            .map(|(&s, a)| a.pow(s as u32))
            .product::<Rational>();
        total += seq.multinomial(n, parts)? * term;
        Ok(())
    })?;
    Ok(total)
}

/// Visits every `parts` with `Σ parts = n`.
fn compositions(
    left: usize,
    at: usize,
    parts: &mut [usize],
    visit: &mut dyn FnMut(&[usize]) -> Result<(), Error>,
) -> Result<(), Error> {
    if at + 1 == parts.len() {
        parts[at] = left;
        return visit(parts);
    }
    for s in 0..=left {
        parts[at] = s;
        compositions(left - s, at + 1, parts, visit)?;
    }
    Ok(())
}

const SCALARS: [(i64, i64); 4] = [(1, 2), (-2, 1), (3, 5), (1, 1)];
const SHIFTS: [(i64, i64); 3] = [(1, 1), (-2, 1), (3, 5)];

pub fn run_suite(
    suite: Suite,
    family: &PsiFamily,
    max_degree: usize,
) -> Result<CheckOutcome, Error> {
    let seq = PsiSequence::new(family.clone(), 1)?;
    let d = max_degree;
    let mut t = Tally::new();
    let one = Rational::one();
    match suite {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::Recurrence => {
            let a = bernoulli_numbers(&seq, d)?;
            let b = bernoulli_numbers_gf(&seq, d)?;
            for (n, (x, y)) in a.values().iter().zip(b.values()).enumerate() {
                t.check(x == y, || format!("B_{n}: {x} vs {y}"));
            }
        }
        Suite::Gf => {
            let report = check_polynomial_gf(&seq, d)?;
            for (n, &ok) in report.passed.iter().enumerate() {
                t.check(ok, || format!("z^{n}"));
            }
        }
        Suite::Appell | Suite::Difference => {
            let table = bernoulli_numbers(&seq, d)?;
            for n in 1..=d {
                let bn = bernoulli_polynomial(&table, n)?;
                let ok = if suite == Suite::Appell {
                    let prev = bernoulli_polynomial(&table, n - 1)?;
                    psi_derivative(&seq, &bn)? == prev.scale(&seq.n_psi(n)?)
                } else {
                    delta_psi(&seq, &bn)? == Poly::monomial(seq.n_psi(n)?, n - 1)
                };
                t.check(ok, || format!("n={n}"));
            }
        }
        Suite::Sheffer => {
            let table = bernoulli_numbers(&seq, d)?;
            for &(yn, yd) in &SHIFTS {
                let y = Rational::new(yn, yd)?;
                for n in 0..=d {
                    let lhs = translate(&seq, &bernoulli_polynomial(&table, n)?, &y)?;
                    let mut rhs = Poly::zero();
                    for s in 0..=n {
                        let c = seq.binomial(n, s)? * bernoulli_polynomial(&table, s)?.eval(&y);
                        rhs = &rhs + &Poly::monomial(c, n - s);
                    }
                    t.check(lhs == rhs, || format!("y={y} n={n}"));
                }
            }
        }
        Suite::Multinomial => {
            let mixed: Vec<Rational> = SCALARS
                .iter()
                .map(|&(a, b)| Rational::new(a, b))
                .collect::<Result<_, _>>()?;
            for k in 1..=4 {
                for scalars in [vec![one.clone(); k], mixed[..k].to_vec()] {
                    for n in 0..=d.min(6) {
                        let lhs = iterated_sum_power(&seq, &scalars, n)?;
                        let rhs = multinomial_expansion(&seq, &scalars, n)?;
                        t.check(lhs == rhs, || format!("k={k} n={n} scalars={scalars:?}"));
                    }
                }
            }
        }
        Suite::Powersum => {
            let rmax = d.clamp(1, 6);
            let table = bernoulli_numbers(&seq, rmax + 1)?;
            for n in 0..=8 {
                for r in 1..=rmax {
                    let closed = power_sum(&seq, &table, n, r)?;
                    let brute = power_sum_bruteforce(&seq, n, r)?;
                    t.check(closed == brute, || {
                        format!("n={n} r={r}: {closed} vs {brute}")
                    });
                }
            }
        }
        Suite::Integration => {
            for n in 0..=d {
                let xn = Poly::monomial(one.clone(), n);
                let back = psi_derivative(&seq, &psi_integral(&seq, &xn)?)?;
                t.check(back == xn, || format!("x^{n}"));
            }
        }
    }
    Ok(CheckOutcome {
        suite,
        family: family.clone(),
        cases: t.cases,
        failures: t.failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_classical() {
        for suite in Suite::EACH {
            let out = run_suite(suite, &PsiFamily::Classical, 6).unwrap();
            assert!(out.passed(), "{suite}: {:?}", out.failures);
            assert!(out.cases > 0);
        }
    }

    #[test]
    fn compositions_are_complete() {
        let mut count = 0;
        compositions(4, 0, &mut [0; 3], &mut |p| {
            assert_eq!(p.iter().sum::<usize>(), 4);
            count += 1;
            Ok(())
        })
        .unwrap();
        // C(4 + 2, 2)
        assert_eq!(count, 15);
    }

    #[test]
    fn custom_family_too_short_is_an_error() {
        let fam: PsiFamily = "custom:1,2".parse().unwrap();
        assert!(run_suite(Suite::Appell, &fam, 6).is_err());
    }
}
