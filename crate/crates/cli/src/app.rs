use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use psi_umbral::bernoulli::{bernoulli_numbers, bernoulli_numbers_gf, bernoulli_polynomial};
use psi_umbral::solver::{power_sum, power_sum_bruteforce, solve_delta};
use psi_umbral::{BernoulliTable, Error, PsiFamily, PsiSequence};

use crate::checks::{default_grid, run_suite, Suite};
use crate::expr::{format_poly, parse_poly, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "psi-umbral",
    version,
    about = "Exact ψ-umbral calculus: Bernoulli-Ward numbers, ψ-binomials and Δ_ψ f = φ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum OutFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
enum MethodArg {
    #[default]
    Recurrence,
    Gf,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ψ-Bernoulli-Ward numbers B_0..B_N
    BernNumbers {
        #[arg(long)]
        family: PsiFamily,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// ψ-Bernoulli-Ward polynomials B_0(x)..B_N(x)
    BernPoly {
        #[arg(long)]
        family: PsiFamily,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Triangle of ψ-binomial coefficients through row N
    BinomTable {
        #[arg(long)]
        family: PsiFamily,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Solve Δ_ψ f = φ for polynomial φ
    Solve {
        #[arg(long)]
        family: PsiFamily,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// ψ-power sum Σ_{k<n} k̄^r
    Powersum {
        #[arg(long)]
        family: PsiFamily,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r', value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Also sum the bar powers directly and compare
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t)]
        out: OutFormat,
    },
    /// Run identity suites
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Single family; defaults to classical, q:0, q:1/2, q:2, q:3, fib
        #[arg(long)]
        family: Option<PsiFamily>,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
}

/// Exit status plus everything written to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Math(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(msg) => Failure::Internal(msg),
            other => Failure::Math(other),
        }
    }
}

/// Runs one command line; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("psi-umbral".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(failure) => {
            let (code, stderr) = match failure {
                Failure::Parse(e) => (EXIT_USAGE, format!("error: invalid polynomial: {e}\n")),
                Failure::Math(e) => (EXIT_MATH, format!("error: {e}\n")),
                Failure::Internal(msg) => (EXIT_INTERNAL, format!("internal error: {msg}\n")),
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

#[derive(Serialize)]
struct TableJson<'a> {
    family: String,
    method: &'a str,
    values: Vec<Entry>,
}

#[derive(Serialize)]
struct Entry {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct TriangleJson {
    family: String,
    rows: Vec<Row>,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    values: Vec<String>,
}

#[derive(Serialize)]
struct SolveJson {
    family: String,
    phi: String,
    f: String,
    kernel: &'static str,
    verified: bool,
}

#[derive(Serialize)]
struct PowerSumJson {
    family: String,
    n: usize,
    r: u32,
    value: String,
    bruteforce: Option<String>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain structs serialize");
    s.push('\n');
    s
}

fn csv_rows<R, F>(header: Option<&[&str]>, rows: impl IntoIterator<Item = R>, fields: F) -> String
where
    F: Fn(R) -> Vec<String>,
{
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).expect("in-memory write");
    }
    for row in rows {
        w.write_record(fields(row)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn sequence(family: &PsiFamily, capacity: usize) -> Result<PsiSequence, Failure> {
    Ok(PsiSequence::new(family.clone(), capacity.max(1))?)
}

fn render_table(
    family: &PsiFamily,
    method: &str,
    label: impl Fn(usize) -> String,
    values: &[String],
    out: OutFormat,
) -> String {
    match out {
        OutFormat::Text => values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{} = {v}\n", label(n)))
            .collect(),
        OutFormat::Json => json(&TableJson {
            family: family.to_string(),
            method,
            values: values
                .iter()
                .enumerate()
                .map(|(n, v)| Entry {
                    n,
                    value: v.clone(),
                })
                .collect(),
        }),
        OutFormat::Csv => csv_rows(
            Some(&["n", "value"]),
            values.iter().enumerate(),
            |(n, v)| vec![n.to_string(), v.clone()],
        ),
    }
}

fn dispatch(command: Command) -> Result<(i32, String), Failure> {
    match command {
        Command::BernNumbers {
            family,
            count,
            method,
            out,
        } => {
            // The recurrence row for B_N involves (N+1)_ψ.
            let seq = sequence(&family, count + 1)?;
            let table: BernoulliTable = match method {
                MethodArg::Recurrence => bernoulli_numbers(&seq, count)?,
                MethodArg::Gf => bernoulli_numbers_gf(&seq, count)?,
                MethodArg::Both => {
                    let a = bernoulli_numbers(&seq, count)?;
                    let b = bernoulli_numbers_gf(&seq, count)?;
                    if let Some(n) = (0..=count).find(|&n| a.values()[n] != b.values()[n]) {
                        return Err(Failure::Internal(format!(
                            "recurrence and generating-function tables differ at B_{n}"
                        )));
                    }
                    a
                }
            };
            let name = match method {
                MethodArg::Both => "both",
                _ => table.method().name(),
            };
            let values: Vec<String> = table.values().iter().map(ToString::to_string).collect();
            let mut text = render_table(&family, name, |n| format!("B_{n}"), &values, out);
            if method == MethodArg::Both && out == OutFormat::Text {
                text.push_str("recurrence and generating-function tables agree\n");
            }
            Ok((EXIT_OK, text))
        }
        Command::BernPoly { family, n, out } => {
            let seq = sequence(&family, n + 1)?;
            let table = bernoulli_numbers(&seq, n)?;
            let values = (0..=n)
                .map(|k| Ok(format_poly(&bernoulli_polynomial(&table, k)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok((
                EXIT_OK,
                render_table(&family, "recurrence", |k| format!("B_{k}(x)"), &values, out),
            ))
        }
        Command::BinomTable { family, n, out } => {
            let seq = sequence(&family, n)?;
            let rows = (0..=n)
                .map(|m| {
                    (0..=m)
                        .map(|k| Ok(seq.binomial(m, k)?.to_string()))
                        .collect()
                })
                .collect::<Result<Vec<Vec<String>>, Error>>()?;
            let text = match out {
                OutFormat::Text => rows
                    .iter()
                    .enumerate()
                    .map(|(m, row)| format!("{m}: {}\n", row.join(" ")))
                    .collect(),
                OutFormat::Json => json(&TriangleJson {
                    family: family.to_string(),
                    rows: rows
                        .into_iter()
                        .enumerate()
                        .map(|(n, values)| Row { n, values })
                        .collect(),
                }),
                OutFormat::Csv => csv_rows(None, rows.into_iter().enumerate(), |(m, row)| {
                    std::iter::once(m.to_string()).chain(row).collect()
                }),
            };
            Ok((EXIT_OK, text))
        }
        Command::Solve { family, phi, out } => {
            let phi_poly = parse_poly(&phi).map_err(Failure::Parse)?;
            let degree = phi_poly.degree().unwrap_or(0);
            let seq = sequence(&family, degree + 2)?;
            let table = bernoulli_numbers(&seq, degree + 1)?;
            let solution = solve_delta(&seq, &table, &phi_poly)?;
            let f = solution.f();
            let text = match out {
                OutFormat::Text => {
                    let mut s = String::new();
                    writeln!(s, "f(x) = {}", format_poly(f)).unwrap();
                    writeln!(s, "verified: Δ_ψ f = {} exactly", format_poly(&phi_poly)).unwrap();
                    writeln!(s, "kernel: constants (f + c solves the same equation)").unwrap();
                    s
                }
                OutFormat::Json => json(&SolveJson {
                    family: family.to_string(),
                    phi: format_poly(&phi_poly),
                    f: format_poly(f),
                    kernel: "constants",
                    verified: true,
                }),
                OutFormat::Csv => csv_rows(
                    Some(&["n", "value"]),
                    f.coeffs().iter().enumerate(),
                    |(n, c)| vec![n.to_string(), c.to_string()],
                ),
            };
            Ok((EXIT_OK, text))
        }
        Command::Powersum {
            family,
            n,
            r,
            verify,
            out,
        } => {
            let r = r as usize;
            let seq = sequence(&family, r + 2)?;
            let table = bernoulli_numbers(&seq, r + 1)?;
            let value = power_sum(&seq, &table, n, r)?;
            let brute = if verify {
                Some(power_sum_bruteforce(&seq, n, r)?)
            } else {
                None
            };
            if let Some(b) = &brute {
                if *b != value {
                    return Err(Failure::Internal(format!(
                        "power sum {value} disagrees with direct summation {b}"
                    )));
                }
            }
            let text = match out {
                OutFormat::Text => {
                    let mut s = format!("S(n={n}, r={r}) = {value}\n");
                    if let Some(b) = &brute {
                        writeln!(s, "direct summation: {b} (agrees)").unwrap();
                    }
                    s
                }
                OutFormat::Json => json(&PowerSumJson {
                    family: family.to_string(),
                    n,
                    r: r as u32,
                    value: value.to_string(),
                    bruteforce: brute.map(|b| b.to_string()),
                }),
                OutFormat::Csv => csv_rows(Some(&["n", "r", "value"]), [()], |()| {
                    vec![n.to_string(), r.to_string(), value.to_string()]
                }),
            };
            Ok((EXIT_OK, text))
        }
        Command::Check {
            suite,
            family,
            max_degree,
        } => {
            let families = family.map_or_else(default_grid, |f| vec![f]);
            let mut text = String::new();
            let (mut total, mut failed) = (0, 0);
            for s in suite.expand() {
                for fam in &families {
                    let outcome = run_suite(s, fam, max_degree)?;
                    total += 1;
                    let status = if outcome.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        text,
                        "{status} {:<12} {:<10} {} cases",
                        s.name(),
                        fam,
                        outcome.cases
                    )
                    .unwrap();
                    for case in &outcome.failures {
                        writeln!(text, "    failed: {case}").unwrap();
                    }
                    if !outcome.passed() {
                        failed += 1;
                    }
                }
            }
            if failed == 0 {
                writeln!(text, "all {total} checks passed").unwrap();
                Ok((EXIT_OK, text))
            } else {
                writeln!(text, "{failed} of {total} checks failed").unwrap();
                Ok((EXIT_INTERNAL, text))
            }
        }
    }
}
