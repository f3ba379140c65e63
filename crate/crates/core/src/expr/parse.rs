//! Recursive-descent parser for problem statements and real expressions.
//!
//! ```text
//! equation := lhs "=" rhs
//! lhs      := ["+"|"-"] lterm { ("+"|"-") lterm }
//! lterm    := [number ["*"]] deriv
//! deriv    := "x" { "'" }          (at most four primes)
//!           | "x^(" uint ")"
//! rhs      := ["+"|"-"] term { ("+"|"-") term }
//! term     := factor { ["*"] factor | "/" number }
//! factor   := number | "t" ["^" uint] | "(" poly ")" ["^" uint]
//!           | "e^(" linear ")" | "e^{" linear "}" | "e^t"
//!           | ("cos"|"sin") "(" linear [("+"|"-") number] ")"
//! linear   := ["+"|"-"] [number ["*"]] "t"
//! number   := uint ["/" uint]
//! ```
//!
//! Polynomials inside parentheses use the same `term` rule restricted to
//! numbers, `t` and nested parentheses. Whitespace is insignificant. Errors
//! carry the byte offset where parsing stopped.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{ComplexRational, Rational};
use crate::diffop::LinearOperator;
use crate::error::ParseError;
use crate::exptrig::{ExpTrigPoly, TrigKind};
use crate::forcing::Forcing;
use crate::poly::Polynomial;

use super::ProblemStatement;

type PResult<T> = Result<T, ParseError>;

const MAX_PRIMES: usize = 4;

pub fn parse_problem(text: &str) -> PResult<ProblemStatement> {
    let mut p = Parser::new(text, false);
    let operator = p.lhs()?;
    p.expect('=')?;
    let rhs = p.rhs()?;
    p.end()?;
    Ok(ProblemStatement {
        operator,
        forcing: Forcing::from_exptrig(&rhs),
        options: Default::default(),
    })
}

/// Parses the left-hand side of an equation on its own, e.g. `x'' + 2x' + 2x`.
pub fn parse_operator(text: &str) -> PResult<LinearOperator> {
    let mut p = Parser::new(text, false);
    let op = p.lhs()?;
    p.end()?;
    Ok(op)
}

/// Parses a real expression in the right-hand-side grammar.
pub fn parse_exptrig(text: &str) -> PResult<ExpTrigPoly> {
    let mut p = Parser::new(text, false);
    let e = p.rhs()?;
    p.end()?;
    Ok(e)
}

/// Parses a polynomial in `t` with Gaussian rational coefficients; `i` is the
/// imaginary unit.
pub fn parse_polynomial(text: &str) -> PResult<Polynomial> {
    let mut p = Parser::new(text, true);
    let poly = p.poly_sum()?;
    p.end()?;
    Ok(poly)
}

/// One parsed product: polynomial coefficient, accumulated exponent and an
/// optional trigonometric factor.
struct Product {
    poly: Polynomial,
    alpha: Rational,
    trig: Option<(TrigKind, Rational, Rational, usize)>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    allow_imag: bool,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, allow_imag: bool) -> Self {
        Parser { src, pos: 0, allow_imag }
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(pos, msg))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn rest(&mut self) -> &'a str {
        self.skip_ws();
        &self.src[self.pos..]
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        let pos = self.peek_pos();
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(pos, format!("expected '{c}', found '{found}'")),
                None => self.err(pos, format!("expected '{c}', found end of input")),
            }
        }
    }

    fn end(&mut self) -> PResult<()> {
        let pos = self.peek_pos();
        match self.peek() {
            None => Ok(()),
            Some(')') | Some('}') => self.err(pos, "unbalanced closing bracket"),
            Some(c) => self.err(pos, format!("unexpected '{c}'")),
        }
    }

    fn uint(&mut self) -> PResult<BigInt> {
        let start = self.peek_pos();
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err(start, "expected a number");
        }
        self.pos = start + len;
        Ok(self.src[start..start + len].parse().expect("ascii digits"))
    }

    fn small_uint(&mut self) -> PResult<usize> {
        let pos = self.peek_pos();
        let n = self.uint()?;
        match usize::try_from(n) {
            Ok(n) if n <= 10_000 => Ok(n),
            _ => self.err(pos, "exponent too large"),
        }
    }

    fn number(&mut self) -> PResult<Rational> {
        let numer = self.uint()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let pos = self.peek_pos();
            let denom = self.uint()?;
            return Rational::new(numer, denom)
                .or_else(|_| self.err(pos, "zero denominator"));
        }
        Ok(Rational::from_integer(numer))
    }

    fn starts_number(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    // ---- left-hand side ----

    fn lhs(&mut self) -> PResult<LinearOperator> {
        let start = self.peek_pos();
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let coeff = if self.starts_number() {
                let c = self.number()?;
                self.eat('*');
                c
            } else {
                Rational::one()
            };
            let order = self.deriv()?;
            let coeff = if negative { -coeff } else { coeff };
            *coeffs.entry(order).or_insert_with(Rational::zero) += &coeff;
            match self.sign() {
                Some(neg) => negative = neg,
                None => break,
            }
        }
        let order = coeffs.keys().next_back().copied().unwrap_or(0);
        let dense = (0..=order)
            .map(|k| coeffs.remove(&k).unwrap_or_else(Rational::zero))
            .collect();
        LinearOperator::new(dense).or_else(|e| self.err(start, e.to_string()))
    }

    fn deriv(&mut self) -> PResult<usize> {
        let pos = self.peek_pos();
        if !self.eat('x') {
            return self.err(pos, "expected the unknown 'x'");
        }
        if self.src[self.pos..].starts_with("^(") {
            self.pos += 2;
            let k = self.small_uint()?;
            self.expect(')')?;
            return Ok(k);
        }
        let primes = self.src[self.pos..].bytes().take_while(|&b| b == b'\'').count();
        if primes > MAX_PRIMES {
            return self.err(pos, format!("more than {MAX_PRIMES} primes; write x^({primes})"));
        }
        self.pos += primes;
        Ok(primes)
    }

    // ---- right-hand side ----

    fn rhs(&mut self) -> PResult<ExpTrigPoly> {
        let mut sum = ExpTrigPoly::zero();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let start = self.peek_pos();
            let product = self.product(true)?;
            let poly = if negative { -product.poly } else { product.poly };
            let term = match product.trig {
                None => ExpTrigPoly::exp_term(poly, product.alpha),
                Some((kind, beta, delta, trig_pos)) => {
                    if beta.is_zero() && !delta.is_zero() {
                        return self.err(
                            trig_pos,
                            "phase on a term without frequency (real exponent with a phase)",
                        );
                    }
                    ExpTrigPoly::term(poly, product.alpha, beta, delta, kind)
                }
            };
            sum = sum + term.or_else(|e| self.err(start, e.to_string()))?;
            match self.sign() {
                Some(neg) => negative = neg,
                None => break,
            }
        }
        Ok(sum)
    }

    fn product(&mut self, allow_functions: bool) -> PResult<Product> {
        let mut out = Product {
            poly: Polynomial::from_ints(&[1]),
            alpha: Rational::zero(),
            trig: None,
        };
        let mut factors = 0;
        loop {
            let pos = self.peek_pos();
            if factors > 0 && self.eat('/') {
                let d = self.number()?;
                let inv = d.recip().or_else(|_| self.err(pos, "division by zero"))?;
                out.poly = out.poly.scale_real(&inv);
                continue;
            }
            if factors > 0 && self.eat('*') {
                if !self.starts_factor(allow_functions) {
                    let pos = self.peek_pos();
                    return self.err(pos, "expected a factor after '*'");
                }
            } else if !self.starts_factor(allow_functions) {
                break;
            }
            self.factor(&mut out, allow_functions)?;
            factors += 1;
        }
        if factors == 0 {
            let pos = self.peek_pos();
            return match self.peek() {
                Some(c) => self.err(pos, format!("expected a term, found '{c}'")),
                None => self.err(pos, "expected a term, found end of input"),
            };
        }
        Ok(out)
    }

    fn starts_factor(&mut self, allow_functions: bool) -> bool {
        let rest = self.rest();
        match rest.chars().next() {
            Some(c) if c.is_ascii_digit() => true,
            Some('t') | Some('(') => true,
            Some('i') => !rest.starts_with("in"),
            Some('e') => allow_functions && rest.starts_with("e^"),
            Some('c') => allow_functions && rest.starts_with("cos"),
            Some('s') => allow_functions && rest.starts_with("sin"),
            _ => false,
        }
    }

    fn factor(&mut self, out: &mut Product, allow_functions: bool) -> PResult<()> {
        let pos = self.peek_pos();
        if self.starts_number() {
            let c = self.number()?;
            out.poly = out.poly.scale_real(&c);
        } else if self.eat('t') {
            let k = if self.eat('^') {
                if self.eat('{') {
                    let k = self.small_uint()?;
                    self.expect('}')?;
                    k
                } else {
                    self.small_uint()?
                }
            } else {
                1
            };
            out.poly = &out.poly * Polynomial::monomial(ComplexRational::one(), k);
        } else if self.eat('i') {
            if !self.allow_imag {
                return self.err(pos, "the imaginary unit is not allowed in a real expression");
            }
            out.poly = out.poly.scale(&ComplexRational::i());
        } else if self.eat('(') {
            let inner = self.poly_sum()?;
            self.expect(')')?;
            let inner = if self.eat('^') {
                let k = self.small_uint()?;
                (0..k).fold(Polynomial::from_ints(&[1]), |acc, _| &acc * &inner)
            } else {
                inner
            };
            out.poly = &out.poly * &inner;
        } else if allow_functions && self.eat_str("e^") {
            let alpha = if self.eat('(') {
                let a = self.exponent_linear(pos)?;
                self.expect(')')?;
                a
            } else if self.eat('{') {
                let a = self.exponent_linear(pos)?;
                self.expect('}')?;
                a
            } else if self.eat('t') {
                Rational::one()
            } else {
                let p = self.peek_pos();
                return self.err(p, "expected '(', '{' or 't' after 'e^'");
            };
            out.alpha += &alpha;
        } else if allow_functions && (self.rest().starts_with("cos") || self.rest().starts_with("sin")) {
            let kind = if self.eat_str("cos") { TrigKind::Cos } else {
                self.eat_str("sin");
                TrigKind::Sin
            };
            if out.trig.is_some() {
                return self.err(pos, "products of trigonometric functions are not supported");
            }
            self.expect('(')?;
            let beta = self.linear()?;
            let delta = match self.sign() {
                Some(neg) => {
                    let d = self.number()?;
                    if neg { -d } else { d }
                }
                None => Rational::zero(),
            };
            self.expect(')')?;
            out.trig = Some((kind, beta, delta, pos));
        } else {
            return self.err(pos, "expected a factor");
        }
        Ok(())
    }

    /// `[sign] [number ["*"]] "t"`.
    fn linear(&mut self) -> PResult<Rational> {
        let negative = self.sign().unwrap_or(false);
        let c = if self.starts_number() {
            let c = self.number()?;
            self.eat('*');
            c
        } else {
            Rational::one()
        };
        let pos = self.peek_pos();
        if !self.eat('t') {
            return self.err(pos, "expected 't' in a linear argument");
        }
        Ok(if negative { -c } else { c })
    }

    fn exponent_linear(&mut self, exp_pos: usize) -> PResult<Rational> {
        let alpha = self.linear()?;
        if matches!(self.peek(), Some('+') | Some('-')) {
            return self.err(
                exp_pos,
                "a constant in the exponent is a phase on a real exponential, which is not supported",
            );
        }
        Ok(alpha)
    }

    fn poly_sum(&mut self) -> PResult<Polynomial> {
        let mut sum = Polynomial::zero();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let product = self.product(false)?;
            sum = if negative { sum - product.poly } else { sum + product.poly };
            match self.sign() {
                Some(neg) => negative = neg,
                None => break,
            }
        }
        Ok(sum)
    }
}
