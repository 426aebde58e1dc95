use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational};

/// A parsed polynomial with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyExpr {
    pub source: String,
    pub parsed: Polynomial,
    /// The variable letter; `x` for list input or constants.
    pub variable: String,
    /// Non-fatal remarks, e.g. a constant input.
    pub warnings: Vec<String>,
}

struct Scanner<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current token in the source.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    /// `int` or `int/int`
    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num = BigInt::from_str(&num).expect("digits");
        if !self.eat('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        let den = self
            .digits()
            .ok_or_else(|| self.error("expected a denominator after `/`"))?;
        let den = BigInt::from_str(&den).expect("digits");
        if den.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let r = self
            .rational()?
            .ok_or_else(|| self.error("expected a number"))?;
        Ok(if neg { -r } else { r })
    }
}

fn parse_list(s: &mut Scanner) -> Result<Polynomial> {
    let mut coeffs = Vec::new();
    if s.eat(']') {
        return Ok(Polynomial::zero());
    }
    loop {
        coeffs.push(s.signed_rational()?);
        if s.eat(']') {
            break;
        }
        if !s.eat(',') {
            return Err(s.error("expected `,` or `]`"));
        }
    }
    if s.peek().is_some() {
        return Err(s.error("unexpected text after `]`"));
    }
    Ok(Polynomial::new(coeffs))
}

fn parse_sum(s: &mut Scanner, variable: &mut Option<char>) -> Result<Polynomial> {
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    let mut first = true;
    while s.peek().is_some() || first {
        let neg = match s.peek() {
            Some('-') => {
                s.bump();
                true
            }
            Some('+') => {
                s.bump();
                false
            }
            _ if first => false,
            _ => return Err(s.error("expected `+` or `-`")),
        };
        first = false;
        let coeff = s.rational()?;
        let has_coeff = coeff.is_some();
        let star = has_coeff && s.eat('*');
        let exponent = match s.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                if let Some(v) = variable.filter(|v| *v != c) {
                    return Err(s.error(format!("mixed variables `{v}` and `{c}`")));
                }
                s.bump();
                *variable = Some(c);
                if s.eat('^') {
                    let e = s
                        .digits()
                        .ok_or_else(|| s.error("expected an exponent after `^`"))?;
                    e.parse::<usize>()
                        .map_err(|_| s.error("exponent too large"))?
                } else {
                    1
                }
            }
            _ if star => return Err(s.error("expected a variable after `*`")),
            _ if has_coeff => 0,
            Some(c) => {
                return Err(s.error(format!("expected a coefficient or variable, found `{c}`")))
            }
            None => return Err(s.error("expected a term")),
        };
        let c = coeff.unwrap_or_else(Rational::one);
        terms.push((exponent, if neg { -c } else { c }));
    }
    Ok(Polynomial::from_terms(terms))
}

/// Parses `"x^5 - 1"`, `"y^4 + 3/2*y - 7"` or the low-to-high list form
/// `"[1, 2, 3]"`.
pub fn parse_poly(text: &str) -> Result<PolyExpr> {
    let mut s = Scanner::new(text);
    let mut variable = None;
    let parsed = if s.eat('[') {
        parse_list(&mut s)?
    } else {
        parse_sum(&mut s, &mut variable)?
    };
    let mut warnings = Vec::new();
    if parsed.degree().unwrap_or(0) == 0 {
        warnings.push("degree 0: the polynomial has no zeros".to_string());
    }
    Ok(PolyExpr {
        source: text.to_string(),
        parsed,
        variable: variable.unwrap_or('x').to_string(),
        warnings,
    })
}
