//! Expression grammar for scalars and tensor words.
//!
//! ```text
//! expr    := ['-'] product (('+'|'-') product)*
//! product := tensor ('*' tensor)*
//! tensor  := power ('.' power)*
//! power   := atom ['^' ['-'] digits]
//! atom    := digits ['/' digits] | ident | '(' expr ')'
//! ```
//!
//! `.` is the tensor concatenation (`e23.e12` is the word `e23⊗e12`) and
//! `*` scales by scalars; both denote the tensor-algebra product, so
//! `(q - q^-1) * e14.e23` parses as expected. Exponents apply to
//! scalar-valued operands only; negative exponents require units.
//! Identifiers resolve to declared variables, declared sign constants, or
//! basis elements, in that order.

use std::collections::BTreeMap;

use num::BigInt;
use thiserror::Error;

use crate::algebra::{BasisId, TLieSpec, TensorPoly, Word};
use crate::scalar::{LaurentScalar, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown id `{id}` at {pos}")]
    UnknownId { pos: usize, id: String },
    #[error("exponent at {pos} applies to a non-scalar expression")]
    ExponentOnWord { pos: usize },
    #[error("negative exponent at {pos} needs a unit monomial base")]
    NotInvertible { pos: usize },
}

/// Name resolution for [`parse_expression`].
pub struct ExprContext<'a> {
    pub variables: &'a [String],
    pub constants: &'a BTreeMap<String, LaurentScalar>,
    pub resolve_basis: &'a dyn Fn(&str) -> Option<BasisId>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Dot,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push((pos, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((pos, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            '.' => {
                out.push((pos, Token::Dot));
                i += 1;
            }
            '^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((pos, Token::Slash));
                i += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let mut s = String::new();
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    s.push(bytes[i]);
                    i += 1;
                }
                out.push((pos, Token::Num(s.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    s.push(bytes[i]);
                    i += 1;
                }
                out.push((pos, Token::Ident(s)));
            }
            other => {
                return Err(ExprError::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    ctx: &'a ExprContext<'a>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(&want) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(ExprError::Syntax {
                pos: self.pos(),
                msg: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<TensorPoly, ExprError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            negate = true;
        }
        let mut acc = self.product()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.cursor += 1;
                    acc = acc.add(&self.product()?);
                }
                Some(Token::Minus) => {
                    self.cursor += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<TensorPoly, ExprError> {
        let mut acc = self.tensor()?;
        while self.peek() == Some(&Token::Star) {
            self.cursor += 1;
            acc = acc.tensor(&self.tensor()?);
        }
        Ok(acc)
    }

    fn tensor(&mut self) -> Result<TensorPoly, ExprError> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Token::Dot) {
            self.cursor += 1;
            acc = acc.tensor(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<TensorPoly, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        self.cursor += 1;
        let mut negative = false;
        if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            negative = true;
        }
        let exp = match self.bump() {
            Some(Token::Num(n)) => {
                let e: i32 = n.to_string().parse().map_err(|_| ExprError::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?;
                if negative {
                    -e
                } else {
                    e
                }
            }
            _ => {
                return Err(ExprError::Syntax {
                    pos: self.pos(),
                    msg: "expected integer exponent".into(),
                })
            }
        };
        let scalar = as_scalar(&base).ok_or(ExprError::ExponentOnWord { pos })?;
        let powered = scalar
            .pow(exp)
            .map_err(|_| ExprError::NotInvertible { pos })?;
        Ok(scalar_poly(powered))
    }

    fn atom(&mut self) -> Result<TensorPoly, ExprError> {
        let pos = self.pos();
        match self.bump() {
            Some(Token::Num(n)) => {
                let num = Rational::from(n);
                if self.peek() == Some(&Token::Slash) {
                    self.cursor += 1;
                    match self.bump() {
                        Some(Token::Num(d)) if !num::Zero::is_zero(&d) => Ok(scalar_poly(
                            LaurentScalar::from_rational(num / Rational::from(d)),
                        )),
                        _ => Err(ExprError::Syntax {
                            pos: self.pos(),
                            msg: "expected nonzero denominator".into(),
                        }),
                    }
                } else {
                    Ok(scalar_poly(LaurentScalar::from_rational(num)))
                }
            }
            Some(Token::Ident(name)) => {
                if let Some(idx) = self.ctx.variables.iter().position(|v| *v == name) {
                    return Ok(scalar_poly(LaurentScalar::var(idx)));
                }
                if let Some(c) = self.ctx.constants.get(&name) {
                    return Ok(scalar_poly(c.clone()));
                }
                match (self.ctx.resolve_basis)(&name) {
                    Some(id) => Ok(TensorPoly::from_word(Word::single(id))),
                    None => Err(ExprError::UnknownId { pos, id: name }),
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(ExprError::Syntax {
                pos,
                msg: "expected number, identifier or `(`".into(),
            }),
        }
    }
}

fn scalar_poly(s: LaurentScalar) -> TensorPoly {
    TensorPoly::from_term(Word::empty(), s)
}

fn as_scalar(t: &TensorPoly) -> Option<LaurentScalar> {
    if t.is_zero() {
        return Some(LaurentScalar::zero());
    }
    if t.term_count() == 1 {
        if let Some((w, c)) = t.terms().next() {
            if w.is_empty() {
                return Some(c.clone());
            }
        }
    }
    None
}

pub fn parse_expression(src: &str, ctx: &ExprContext) -> Result<TensorPoly, ExprError> {
    let tokens = lex(src)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        ctx,
        end: src.len(),
    };
    let value = parser.expr()?;
    if parser.cursor != parser.tokens.len() {
        return Err(ExprError::Syntax {
            pos: parser.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(value)
}

/// Parse against a built spec: its variables and basis ids are in scope.
pub fn parse_for_spec(src: &str, spec: &TLieSpec) -> Result<TensorPoly, ExprError> {
    let constants = BTreeMap::new();
    let resolve = |id: &str| spec.id_of(id);
    parse_expression(
        src,
        &ExprContext {
            variables: spec.variables(),
            constants: &constants,
            resolve_basis: &resolve,
        },
    )
}

/// Parse a scalar-valued expression (no basis ids in scope).
pub fn parse_scalar(
    src: &str,
    variables: &[String],
    constants: &BTreeMap<String, LaurentScalar>,
) -> Result<LaurentScalar, ExprError> {
    let resolve = |_: &str| None;
    let t = parse_expression(
        src,
        &ExprContext {
            variables,
            constants,
            resolve_basis: &resolve,
        },
    )?;
    as_scalar(&t).ok_or(ExprError::Syntax {
        pos: 0,
        msg: "expected a scalar expression".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn words_and_scalars() {
        let spec = catalog::make_sl_plus_q(2);
        let t = parse_for_spec("e23.e12", &spec).unwrap();
        assert_eq!(t.term_count(), 1);
        let (w, c) = t.terms().next().unwrap();
        assert_eq!(spec.render_word(w), "e23.e12");
        assert!(c.is_one());

        let t = parse_for_spec("(q - q^-1) * e13.e23 + e12.e13", &spec).unwrap();
        assert_eq!(t.term_count(), 2);

        assert!(matches!(
            parse_for_spec("e99", &spec),
            Err(ExprError::UnknownId { .. })
        ));
    }

    #[test]
    fn scalar_arithmetic_shapes() {
        let vars = vec!["q".into(), "p".into()];
        let none = BTreeMap::new();
        let q = LaurentScalar::var(0);
        let p = LaurentScalar::var(1);
        assert_eq!(parse_scalar("q^2 - 1", &vars, &none).unwrap(), q.mul(&q).sub(&LaurentScalar::one()));
        assert_eq!(
            parse_scalar("(p - q^-1) * p^-1 * q", &vars, &none).unwrap(),
            q.sub(&p.pow(-1).unwrap())
        );
        assert_eq!(
            parse_scalar("3/2*p^-2", &vars, &none).unwrap(),
            LaurentScalar::monomial(Rational::new(3.into(), 2.into()), vec![0, -2])
        );
        assert_eq!(parse_scalar("-q + q", &vars, &none).unwrap(), LaurentScalar::zero());
    }

    #[test]
    fn error_positions() {
        let spec = catalog::make_sl_plus_q(2);
        match parse_for_spec("e12 + @", &spec) {
            Err(ExprError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_for_spec("e12^2", &spec),
            Err(ExprError::ExponentOnWord { .. })
        ));
        assert!(matches!(
            parse_for_spec("(q - 1)^-1", &spec),
            Err(ExprError::NotInvertible { .. })
        ));
    }

    /// Rendered polynomials parse back to the same value.
    #[test]
    fn render_parse_round_trip() {
        let spec = catalog::make_sl_plus_q(3);
        let src = "(q - q^-1) * e14.e23 + e13.e24 - 2 * e12 + 1/3";
        let t = parse_for_spec(src, &spec).unwrap();
        let rendered = spec.render_poly(&t);
        let again = parse_for_spec(&rendered, &spec).unwrap();
        assert_eq!(t, again);
    }
}
