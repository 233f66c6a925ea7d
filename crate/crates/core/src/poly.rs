//! Text form of algebra elements.
//!
//! Grammar: terms joined by `+` / `-`; a term is an optional coefficient
//! (`3`, `2/5`) followed by `*`-separated factors `name` or `name^k`.
//! Whitespace is ignored. Factors may appear in any order; odd factors are
//! multiplied out with their Koszul sign.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cdga::{Element, SullivanAlgebra};
use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected `{found}` at offset {offset}")]
    Unexpected { found: String, offset: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid exponent at offset {0}")]
    BadExponent(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                out.push((Token::Num(s.parse().expect("digits")), start));
                continue;
            }
            _ if c.is_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((Token::Name(bytes[start..i].iter().collect()), start));
                continue;
            }
            _ => {
                return Err(ParseError::Unexpected {
                    found: c.to_string(),
                    offset: start,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    alg: &'a SullivanAlgebra,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.len)
    }

    fn unexpected(&self) -> ParseError {
        match self.tokens.get(self.pos) {
            Some((t, o)) => ParseError::Unexpected {
                found: format!("{t:?}"),
                offset: *o,
            },
            None => ParseError::Unexpected {
                found: "end of input".into(),
                offset: self.len,
            },
        }
    }

    fn expression(&mut self) -> Result<Element, ParseError> {
        if self.tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut sign = Rational::one();
        match self.peek() {
            Some(Token::Minus) => {
                sign = -sign;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?.scale(&sign);
        while let Some(t) = self.peek() {
            let s = match t {
                Token::Plus => Rational::one(),
                Token::Minus => -Rational::one(),
                _ => return Err(self.unexpected()),
            };
            self.pos += 1;
            acc = acc.add(&self.term()?.scale(&s));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut coeff = Rational::one();
        let mut acc = self.alg.one();
        let mut first = true;
        loop {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let mut value = Rational::from_integer(n);
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Token::Num(d)) => {
                                if d.is_zero() {
                                    return Err(ParseError::ZeroDenominator);
                                }
                                self.pos += 1;
                                value /= Rational::from_integer(d);
                            }
                            _ => return Err(self.unexpected()),
                        }
                    }
                    coeff *= value;
                }
                Some(Token::Name(name)) => {
                    self.pos += 1;
                    let g = self
                        .alg
                        .named(&name)
                        .map_err(|_| ParseError::UnknownGenerator(name))?;
                    let mut k = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        let at = self.offset();
                        match self.peek().cloned() {
                            Some(Token::Num(n)) => {
                                self.pos += 1;
                                k = u32::try_from(n).map_err(|_| ParseError::BadExponent(at))?;
                            }
                            _ => return Err(ParseError::BadExponent(at)),
                        }
                    }
                    acc = self.alg.mul_unchecked(&acc, &self.alg.power(&g, k));
                }
                _ => {
                    return Err(if first {
                        self.unexpected()
                    } else {
                        // a dangling `*`
                        self.unexpected()
                    });
                }
            }
            first = false;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(acc.scale(&coeff))
    }
}

pub fn parse(text: &str, alg: &SullivanAlgebra) -> Result<Element, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        alg,
        len: text.len(),
    };
    p.expression()
}

fn format_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms in monomial order, unit coefficients omitted,
/// no spaces. `parse(format(e)) == e`.
pub fn format(e: &Element, alg: &SullivanAlgebra) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in e.terms().enumerate() {
        let negative = c < &Rational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if negative {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .zip(alg.generators())
            .filter(|(&x, _)| x > 0)
            .map(|(&x, g)| {
                if x == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, x)
                }
            })
            .collect();
        if factors.is_empty() {
            out.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::Generator;
    use crate::linalg::q_frac;

    fn ring() -> SullivanAlgebra {
        SullivanAlgebra::free(
            vec![
                Generator::new("x", 2),
                Generator::new("y", 2),
                Generator::new("n", 3),
                Generator::new("m", 3),
            ],
            8,
        )
        .unwrap()
    }

    #[test]
    fn parses_and_formats() {
        let a = ring();
        let e = parse("x^2 + y^2", &a).unwrap();
        assert_eq!(format(&e, &a), "x^2+y^2");
        let f = parse("-1/2*x*n + 3", &a).unwrap();
        assert_eq!(format(&f, &a), "-1/2*x*n+3");
        assert_eq!(
            f.coefficient(&parse("x*n", &a).unwrap().terms().next().unwrap().0.clone()),
            q_frac(-1, 2)
        );
    }

    #[test]
    fn odd_factor_order_sets_sign() {
        let a = ring();
        assert_eq!(parse("m*n", &a).unwrap(), parse("-n*m", &a).unwrap());
        assert!(parse("n*n", &a).unwrap().is_zero());
        assert_eq!(format(&parse("m*x*n", &a).unwrap(), &a), "-x*n*m");
    }

    #[test]
    fn rejects_bad_input() {
        let a = ring();
        assert_eq!(parse("", &a), Err(ParseError::Empty));
        assert_eq!(
            parse("z", &a),
            Err(ParseError::UnknownGenerator("z".into()))
        );
        assert_eq!(parse("1/0*x", &a), Err(ParseError::ZeroDenominator));
        assert!(parse("x +", &a).is_err());
        assert!(parse("x^y", &a).is_err());
        assert!(parse("x $ y", &a).is_err());
    }

    #[test]
    fn zero_formats_as_zero() {
        let a = ring();
        assert_eq!(format(&parse("x-x", &a).unwrap(), &a), "0");
        assert!(parse("0", &a).unwrap().is_zero());
    }
}
