//! Checks against routes that share no code with the library's own
//! constructions.

use psi_umbral::bernoulli::{bernoulli_numbers, bernoulli_numbers_gf};
use psi_umbral::{PsiFamily, PsiSequence, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Akiyama–Tanigawa; yields the `B_1 = +1/2` convention.
fn akiyama_tanigawa(max: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut row: Vec<Rational> = Vec::new();
    for m in 0..=max {
        row.push(r(1, m as i64 + 1));
        for j in (1..=m).rev() {
            row[j - 1] = r(j as i64, 1) * (&row[j - 1] - &row[j]);
        }
        out.push(row[0].clone());
    }
    out
}

#[test]
fn classical_matches_akiyama_tanigawa() {
    let mut expected = akiyama_tanigawa(30);
    expected[1] = r(-1, 2);
    let table = bernoulli_numbers(&PsiSequence::classical(), 30).unwrap();
    assert_eq!(table.values(), expected.as_slice());
}

#[test]
fn classical_frozen_values() {
    let t = bernoulli_numbers_gf(&PsiSequence::classical(), 20).unwrap();
    let v = t.values();
    assert_eq!(v[2], r(1, 6));
    assert_eq!(v[4], r(-1, 30));
    assert_eq!(v[6], r(1, 42));
    assert_eq!(v[8], r(-1, 30));
    assert_eq!(v[10], r(5, 66));
    assert_eq!(v[12], r(-691, 2730));
    assert_eq!(v[14], r(7, 6));
    assert_eq!(v[16], r(-3617, 510));
    assert_eq!(v[18], r(43867, 798));
    assert_eq!(v[20], r(-174611, 330));
    for n in (3..=19).step_by(2) {
        assert!(v[n].is_zero(), "B_{n}");
    }
}

/// Gaussian binomial at `q` via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
fn q_pascal(q: &Rational, max: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![r(1, 1)]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { r(0, 1) };
                let right = prev.get(k).cloned().unwrap_or_else(|| r(0, 1));
                left + q.pow(k as u32) * right
            })
            .collect();
        rows.push(row);
    }
    rows
}

#[test]
fn q_binomials_match_q_pascal() {
    for q in [r(2, 1), r(3, 1), r(1, 2), r(-2, 3), r(0, 1), r(1, 1)] {
        let seq = PsiSequence::q_analog(q.clone()).unwrap();
        let rows = q_pascal(&q, 20);
        for (n, row) in rows.iter().enumerate() {
            for (k, want) in row.iter().enumerate() {
                assert_eq!(&seq.binomial(n, k).unwrap(), want, "q={q} n={n} k={k}");
            }
        }
    }
}

/// Fibonomials via `C(n,k) = F_{k+1} C(n-1,k) + F_{n-k-1} C(n-1,k-1)`.
fn fibonomial_pascal(max: usize) -> Vec<Vec<Rational>> {
    let mut fib = vec![r(0, 1), r(1, 1)];
    for i in 2..=max + 2 {
        let next = &fib[i - 1] + &fib[i - 2];
        fib.push(next);
    }
    // F_{-1} = 1 appears on the diagonal k = n.
    let f = |i: isize| {
        if i < 0 {
            r(1, 1)
        } else {
            fib[i as usize].clone()
        }
    };
    let mut rows: Vec<Vec<Rational>> = vec![vec![r(1, 1)]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let keep = prev.get(k).cloned().unwrap_or_else(|| r(0, 1)) * f(k as isize + 1);
                let take = if k > 0 {
                    &prev[k - 1] * f(n as isize - k as isize - 1)
                } else {
                    r(0, 1)
                };
                keep + take
            })
            .collect();
        rows.push(row);
    }
    rows
}

#[test]
fn fibonomials_match_pascal_type_recurrence() {
    let seq = PsiSequence::fibonomial();
    for (n, row) in fibonomial_pascal(30).iter().enumerate() {
        for (k, want) in row.iter().enumerate() {
            let got = seq.binomial(n, k).unwrap();
            assert!(got.is_integer() && !got.is_negative() && !got.is_zero());
            assert_eq!(&got, want, "n={n} k={k}");
        }
    }
}

#[test]
fn q_one_matches_classical() {
    let q1 = PsiSequence::new(PsiFamily::QAnalog(r(1, 1)), 30).unwrap();
    let c = PsiSequence::classical();
    for n in 0..=30 {
        assert_eq!(q1.n_psi(n).unwrap(), c.n_psi(n).unwrap());
        assert_eq!(q1.factorial(n).unwrap(), c.factorial(n).unwrap());
        for k in 0..=n {
            assert_eq!(q1.binomial(n, k).unwrap(), c.binomial(n, k).unwrap());
        }
    }
}
