//! The expression language and the rules-file format.
//!
//! ```text
//! expr     := ['+' | '-'] term (('+' | '-') term)*
//! term     := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor   := ident | 'P' '(' expr ')' | '(' expr ')'
//! rational := integer ['/' positive-integer]
//! ident    := letter (letter | digit)*
//! ```
//!
//! A bare rational term must be `0`: the algebra has no unit. Products are
//! evaluated through the Rota-Baxter product, so any expression denotes a
//! canonical polynomial. The printer emits terms in descending order and
//! its output parses back to the same polynomial.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{AlgebraContext, Polynomial};
use crate::error::{Error, ParseError, Result};
use crate::scalar::Coefficient;
use crate::starwords::StarWord;
use crate::terms::{Prime, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Int(n) => write!(f, "`{n}`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn tokenize(text: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        let token = if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        } else if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                name.push(d);
                chars.next();
                column += 1;
            }
            Token::Ident(name)
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            Token::Int(digits.parse().expect("ascii digits"))
        } else {
            chars.next();
            column += 1;
            match c {
                '+' => Token::Plus,
                '-' => Token::Minus,
                '*' => Token::Star,
                '/' => Token::Slash,
                '(' => Token::LParen,
                ')' => Token::RParen,
                _ => {
                    return Err(ParseError::new(
                        start_line,
                        start_col,
                        format!("unexpected character `{c}`"),
                    ))
                }
            }
        };
        out.push(Spanned {
            token,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        token: Token::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a, C> {
    tokens: Vec<Spanned>,
    pos: usize,
    ctx: &'a AlgebraContext<C>,
}

impl<'a, C: Coefficient> Parser<'a, C> {
    fn new(text: &str, first_line: usize, ctx: &'a AlgebraContext<C>) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text, first_line)?,
            pos: 0,
            ctx,
        })
    }

    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if t.token != Token::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = self.peek();
        ParseError::new(t.line, t.column, message)
    }

    fn expect(&mut self, token: Token) -> Result<(), ParseError> {
        if self.peek().token == token {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {token}, found {}", self.peek().token)))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek().token {
            Token::Eof => Ok(()),
            ref other => Err(self.error_here(format!("unexpected {other}"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut sign = C::one();
        match self.peek().token {
            Token::Minus => {
                self.bump();
                sign = -C::one();
            }
            Token::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            let sign = match self.peek().token {
                Token::Plus => C::one(),
                Token::Minus => -C::one(),
                _ => return Ok(acc),
            };
            self.bump();
            let t = self.term()?;
            acc.add_scaled(&t, &sign);
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, ParseError> {
        let (coeff, mut acc) = if matches!(self.peek().token, Token::Int(_)) {
            let at = self.peek().clone();
            let coeff = self.rational()?;
            if self.peek().token != Token::Star {
                if coeff.is_zero() {
                    return Ok(Polynomial::zero());
                }
                return Err(ParseError::new(
                    at.line,
                    at.column,
                    "a nonzero constant needs a word factor (the algebra has no unit)",
                ));
            }
            self.bump();
            (coeff, self.factor()?)
        } else {
            (C::one(), self.factor()?)
        };
        while self.peek().token == Token::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = self.ctx.multiply(&acc, &rhs);
        }
        Ok(acc.scale(&coeff))
    }

    fn factor(&mut self) -> Result<Polynomial<C>, ParseError> {
        let t = self.bump();
        match t.token {
            Token::Ident(name) if name == "P" => {
                self.expect(Token::LParen)?;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner.apply_p())
            }
            Token::Ident(name) => match self.ctx.generator(&name) {
                Some(g) => Ok(Polynomial::monomial(Word::generator(g))),
                None => Err(ParseError::new(
                    t.line,
                    t.column,
                    format!("unknown identifier `{name}`"),
                )),
            },
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError::new(
                t.line,
                t.column,
                format!("expected a generator, `P(` or `(`, found {other}"),
            )),
        }
    }

    fn rational(&mut self) -> Result<C, ParseError> {
        let t = self.bump();
        let Token::Int(numer) = t.token else {
            return Err(ParseError::new(
                t.line,
                t.column,
                format!("expected a number, found {}", t.token),
            ));
        };
        let denom = if self.peek().token == Token::Slash {
            self.bump();
            let d = self.bump();
            match d.token {
                Token::Int(n) if !n.is_zero() => n,
                Token::Int(_) => return Err(ParseError::new(d.line, d.column, "zero denominator")),
                other => {
                    return Err(ParseError::new(
                        d.line,
                        d.column,
                        format!("expected a denominator, found {other}"),
                    ))
                }
            }
        } else {
            BigInt::one()
        };
        C::from_ratio(&numer, &denom).ok_or_else(|| {
            ParseError::new(
                t.line,
                t.column,
                format!("coefficient {numer}/{denom} does not fit the scalar type"),
            )
        })
    }

    /// `['-'] rational`, used by the `lambda` header.
    fn signed_rational(&mut self) -> Result<C, ParseError> {
        let negate = self.peek().token == Token::Minus;
        if negate {
            self.bump();
        }
        let value = self.rational()?;
        Ok(if negate { -value } else { value })
    }
}

/// Parses and evaluates an expression in `ctx`.
pub fn parse_expr<C: Coefficient>(text: &str, ctx: &AlgebraContext<C>) -> Result<Polynomial<C>> {
    parse_expr_at(text, 1, ctx).map_err(Error::from)
}

fn parse_expr_at<C: Coefficient>(
    text: &str,
    line: usize,
    ctx: &AlgebraContext<C>,
) -> Result<Polynomial<C>, ParseError> {
    let mut parser = Parser::new(text, line, ctx)?;
    let p = parser.expr()?;
    parser.finish()?;
    Ok(p)
}

/// Parses an expression that must evaluate to a single word with
/// coefficient one.
pub fn parse_word<C: Coefficient>(text: &str, ctx: &AlgebraContext<C>) -> Result<Word> {
    let p = parse_expr(text, ctx)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() => Ok(w.clone()),
        _ => Err(ParseError::new(1, 1, format!("`{}` does not denote a single word", text.trim())).into()),
    }
}

/// Parses a rational such as `-1/2`.
pub fn parse_rational<C: Coefficient>(text: &str) -> Result<C> {
    let ctx = AlgebraContext::<C>::with_generators(&["x"]).expect("valid name");
    let mut parser = Parser::new(text, 1, &ctx)?;
    let value = parser.signed_rational()?;
    parser.finish()?;
    Ok(value)
}

fn write_word<C: Coefficient>(out: &mut String, w: &Word, ctx: &AlgebraContext<C>) {
    for (i, prime) in w.primes().iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        write_prime(out, prime, ctx);
    }
}

fn write_prime<C: Coefficient>(out: &mut String, prime: &Prime, ctx: &AlgebraContext<C>) {
    match prime {
        Prime::Gen(g) => out.push_str(&ctx.names()[g.rank()]),
        Prime::P(inner) => {
            out.push_str("P(");
            write_word(out, inner, ctx);
            out.push(')');
        }
    }
}

pub fn print_word<C: Coefficient>(w: &Word, ctx: &AlgebraContext<C>) -> String {
    let mut out = String::new();
    write_word(&mut out, w, ctx);
    out
}

/// Renders a frame with `★` for the hole.
pub fn print_star_word<C: Coefficient>(c: &StarWord, ctx: &AlgebraContext<C>) -> String {
    let mut out = String::new();
    c.fmt_with(&mut out, &|prime, f| {
        let mut s = String::new();
        write_prime(&mut s, prime, ctx);
        f.write_str(&s)
    })
    .expect("writing to a String cannot fail");
    out
}

/// Canonical text of a polynomial: descending terms, unit coefficients
/// suppressed, `0` for the zero polynomial.
pub fn print_poly<C: Coefficient>(p: &Polynomial<C>, ctx: &AlgebraContext<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            write!(out, "{magnitude}*").expect("writing to a String cannot fail");
        }
        write_word(&mut out, w, ctx);
    }
    out
}

/// A parsed rules file: the context and the relations in file order.
#[derive(Clone, PartialEq)]
pub struct RulesFile<C> {
    pub ctx: AlgebraContext<C>,
    pub relations: Vec<Polynomial<C>>,
}

impl<C: Coefficient> fmt::Debug for RulesFile<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RulesFile")
            .field("ctx", &self.ctx)
            .field("relations", &self.relations)
            .finish()
    }
}

/// Parses a rules file.
///
/// Lines are `lambda <rational>`, `generators <name> ...`, `#` comments,
/// blank, or one relation each (`expr` or `lhs = rhs`). Both headers must
/// precede the first relation; `generators` is mandatory and `lambda`
/// defaults to zero. Relations that evaluate to zero are dropped.
pub fn parse_rules<C: Coefficient>(text: &str) -> Result<RulesFile<C>> {
    let mut lambda: Option<C> = None;
    let mut ctx: Option<AlgebraContext<C>> = None;
    let mut relations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = indent + keyword.len() + 1;
        match keyword {
            "lambda" => {
                if lambda.is_some() || ctx.is_some() && !relations.is_empty() {
                    return Err(
                        ParseError::new(line_no, indent + 1, "`lambda` must appear once, before any relation").into(),
                    );
                }
                let value = parse_rational::<C>(rest).map_err(|e| relocate(e, line_no, rest_col))?;
                ctx = ctx.map(|c| c.with_lambda(value.clone()));
                lambda = Some(value);
            }
            "generators" => {
                if ctx.is_some() {
                    return Err(ParseError::new(line_no, indent + 1, "`generators` declared twice").into());
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let value = lambda.clone().unwrap_or_else(C::zero);
                ctx = Some(
                    AlgebraContext::new(value, names).map_err(|e| ParseError::new(line_no, rest_col, e.to_string()))?,
                );
            }
            _ => {
                let Some(c) = ctx.as_ref() else {
                    return Err(ParseError::new(line_no, indent + 1, "relation before the `generators` header").into());
                };
                let p = match line.split_once('=') {
                    Some((lhs, rhs)) => {
                        let l = parse_expr_at(lhs, line_no, c)?;
                        let r = parse_expr_at(rhs, line_no, c).map_err(|e| shift(e, lhs.len() + 1))?;
                        &l - &r
                    }
                    None => parse_expr_at(line, line_no, c)?,
                };
                if !p.is_zero() {
                    relations.push(p);
                }
            }
        }
    }
    let ctx = ctx.ok_or_else(|| ParseError::new(1, 1, "missing `generators` header"))?;
    Ok(RulesFile { ctx, relations })
}

fn shift(mut e: ParseError, columns: usize) -> ParseError {
    e.column += columns;
    e
}

fn relocate(e: Error, line: usize, column: usize) -> Error {
    match e {
        Error::Parse(p) => ParseError::new(line, p.column + column - 1, p.message).into(),
        other => other,
    }
}

/// Renders relations as a rules file that [`parse_rules`] reads back.
pub fn write_rules<C: Coefficient>(ctx: &AlgebraContext<C>, relations: &[Polynomial<C>]) -> String {
    let mut out = String::new();
    writeln!(out, "lambda {}", ctx.lambda()).expect("writing to a String cannot fail");
    writeln!(out, "generators {}", ctx.names().join(" ")).expect("writing to a String cannot fail");
    for r in relations {
        out.push_str(&print_poly(r, ctx));
        out.push('\n');
    }
    out
}
