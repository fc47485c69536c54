//! Polynomial expressions in `x`.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := coeff? monomial | coeff
//! monomial := "x" ("^" uint)?
//! coeff    := ["-"] uint ("/" uint)?
//! ```
//!
//! Whitespace is ignored between tokens. A bare sign before a monomial
//! (`-x^3`) is accepted as a coefficient of `-1`.

use std::fmt;

use psi_umbral::{Poly, Rational};

/// Exponents above this are rejected rather than allocated.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, column_pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            column: column_pos + 1,
            message: message.into(),
        }
    }

    fn uint(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, self.chars[start..self.pos].iter().collect()))
    }

    fn term(&mut self, negate: bool) -> Result<(Rational, usize), ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut negative = negate;
        if self.peek() == Some('-') {
            negative = !negative;
            self.pos += 1;
        }
        let mut coeff = None;
        if let Some((num_at, num)) = self.uint() {
            let mut text = num;
            if self.peek() == Some('/') {
                let slash = self.pos;
                self.pos += 1;
                let (_, den) = self.uint().ok_or_else(|| {
                    self.error(slash, "malformed rational: expected denominator after '/'")
                })?;
                text = format!("{text}/{den}");
            }
            let value = text
                .parse::<Rational>()
                .map_err(|e| self.error(num_at, format!("malformed rational: {e}")))?;
            coeff = Some(value);
        }
        let mut power = 0;
        let has_monomial = self.peek() == Some('x');
        if has_monomial {
            self.pos += 1;
            power = 1;
            if self.peek() == Some('^') {
                let caret = self.pos;
                self.pos += 1;
                let (at, digits) = self
                    .uint()
                    .ok_or_else(|| self.error(caret, "expected exponent after '^'"))?;
                power = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&p| p <= MAX_EXPONENT)
                    .ok_or_else(|| self.error(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
            }
        }
        if coeff.is_none() && !has_monomial {
            let at = self.pos;
            return Err(match self.chars.get(at) {
                Some(c) => self.error(at, format!("unexpected '{c}'")),
                None if at == start => self.error(at, "expected a term"),
                None => self.error(at, "unexpected end of input"),
            });
        }
        let mut c = coeff.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        Ok((c, power))
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut add = |(c, power): (Rational, usize)| {
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += c;
    };
    add(parser.term(false)?);
    while let Some(c) = parser.peek() {
        let negate = match c {
            '+' => false,
            '-' => true,
            other => return Err(parser.error(parser.pos, format!("unexpected '{other}'"))),
        };
        parser.pos += 1;
        add(parser.term(negate)?);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Descending powers, unit coefficients suppressed: `1/2x^2 - 1/2x + 1/12`.
pub fn format_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (power, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let magnitude = c.abs();
        if power == 0 || !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        match power {
            0 => {}
            1 => out.push('x'),
            _ => {
                out.push_str("x^");
                out.push_str(&power.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
