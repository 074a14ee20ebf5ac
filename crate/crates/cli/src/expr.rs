//! Text expressions for symmetric functions and operators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := factor ('^' integer)?
//! factor := '-' factor | rational | atom | func '(' args ')' | '(' expr ')'
//! atom   := ('s' | 'h' | 'e' | 'p') '[' parts ']' | 'sk' '[' parts '/' parts ']'
//! func   := 'kron' '(' expr ',' expr ')' | 'apply' '(' op ',' expr ')'
//! op     := opterm (('+' | '-') opterm)*
//! opterm := opfactor ('*' opfactor)*
//! opfactor := '-' opfactor | rational | 'Id' | ('U' | 'D' | 'K' | 'KB') '(' expr ')' | '(' op ')'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use symop_core::{Basis, OperatorExpr, Partition, Rational, SkewShape, SymFunc};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("at position {pos}: {source}")]
    Invalid { pos: usize, source: symop_core::Error },
}

type Result<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Scalar(Rational),
    Atom(Basis, Partition),
    Skew(SkewShape),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Kron(Box<Expr>, Box<Expr>),
    Apply(Box<OpExpr>, Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    U,
    D,
    K,
    KB,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpExpr {
    Scalar(Rational),
    Id,
    Gen(OpKind, Box<Expr>),
    Neg(Box<OpExpr>),
    Add(Box<OpExpr>, Box<OpExpr>),
    Sub(Box<OpExpr>, Box<OpExpr>),
    Compose(Box<OpExpr>, Box<OpExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigInt),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*^/()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax { pos: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, at: 0, end: text.chars().count() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(ParseError::Syntax { pos: self.pos(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(t) => self.error(format!("expected `{c}`, found {t}")),
                None => self.error(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.error(format!("unexpected {t}")),
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(n)
            }
            _ => self.error("expected a number"),
        }
    }

    /// `n` or `n/d`
    fn rational(&mut self) -> Result<Rational> {
        let n = self.number()?;
        if self.eat('/') {
            let pos = self.pos();
            let d = self.number()?;
            if d.is_zero() {
                return Err(ParseError::Syntax { pos, message: "zero denominator".into() });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn parts(&mut self) -> Result<Partition> {
        let pos = self.pos();
        let mut parts = Vec::new();
        if matches!(self.peek(), Some(Tok::Num(_))) {
            loop {
                let n = self.number()?;
                let Ok(x) = usize::try_from(&n) else { return self.error("part too large") };
                parts.push(x);
                if !self.eat(',') {
                    break;
                }
            }
        }
        Partition::new(parts).map_err(|source| ParseError::Invalid { pos, source })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            if self.eat('+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat('-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.power()?;
        while self.eat('*') {
            left = Expr::Mul(Box::new(left), Box::new(self.power()?));
        }
        Ok(left)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.factor()?;
        if self.eat('^') {
            let n = self.number()?;
            let Ok(k) = u32::try_from(&n) else { return self.error("exponent too large") };
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        match self.peek().cloned() {
            Some(Tok::Num(_)) => Ok(Expr::Scalar(self.rational()?)),
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match name.as_str() {
                    "s" | "h" | "e" | "p" => {
                        self.expect('[')?;
                        let p = self.parts()?;
                        self.expect(']')?;
                        Ok(Expr::Atom(Basis::from_tag(&name).expect("basis tag"), p))
                    }
                    "sk" => {
                        self.expect('[')?;
                        let pos = self.pos();
                        let outer = self.parts()?;
                        let inner = if self.eat('/') { self.parts()? } else { Partition::empty() };
                        self.expect(']')?;
                        let shape = SkewShape::new(outer, inner).map_err(|source| ParseError::Invalid { pos, source })?;
                        Ok(Expr::Skew(shape))
                    }
                    "kron" => {
                        self.expect('(')?;
                        let a = self.expr()?;
                        self.expect(',')?;
                        let b = self.expr()?;
                        self.expect(')')?;
                        Ok(Expr::Kron(Box::new(a), Box::new(b)))
                    }
                    "apply" => {
                        self.expect('(')?;
                        let op = self.op()?;
                        self.expect(',')?;
                        let g = self.expr()?;
                        self.expect(')')?;
                        Ok(Expr::Apply(Box::new(op), Box::new(g)))
                    }
                    _ => {
                        self.at -= 1;
                        self.error(format!("unknown name `{name}`"))
                    }
                }
            }
            Some(t) => self.error(format!("unexpected {t}")),
            None => self.error("unexpected end of input"),
        }
    }

    fn op(&mut self) -> Result<OpExpr> {
        let mut left = self.opterm()?;
        loop {
            if self.eat('+') {
                left = OpExpr::Add(Box::new(left), Box::new(self.opterm()?));
            } else if self.eat('-') {
                left = OpExpr::Sub(Box::new(left), Box::new(self.opterm()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn opterm(&mut self) -> Result<OpExpr> {
        let mut left = self.opfactor()?;
        while self.eat('*') {
            left = OpExpr::Compose(Box::new(left), Box::new(self.opfactor()?));
        }
        Ok(left)
    }

    fn opfactor(&mut self) -> Result<OpExpr> {
        if self.eat('-') {
            return Ok(OpExpr::Neg(Box::new(self.opfactor()?)));
        }
        if self.eat('(') {
            let e = self.op()?;
            self.expect(')')?;
            return Ok(e);
        }
        match self.peek().cloned() {
            Some(Tok::Num(_)) => Ok(OpExpr::Scalar(self.rational()?)),
            Some(Tok::Ident(name)) => {
                let kind = match name.as_str() {
                    "Id" => {
                        self.at += 1;
                        return Ok(OpExpr::Id);
                    }
                    "U" => OpKind::U,
                    "D" => OpKind::D,
                    "K" => OpKind::K,
                    "KB" => OpKind::KB,
                    _ => return self.error(format!("unknown operator `{name}`")),
                };
                self.at += 1;
                self.expect('(')?;
                let f = self.expr()?;
                self.expect(')')?;
                Ok(OpExpr::Gen(kind, Box::new(f)))
            }
            Some(t) => self.error(format!("unexpected {t}")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_op(text: &str) -> Result<OpExpr> {
    let mut p = Parser::new(text)?;
    let e = p.op()?;
    p.finish()?;
    Ok(e)
}

fn eval_native(e: &Expr) -> SymFunc {
    match e {
        Expr::Scalar(c) => SymFunc::constant(c.clone()),
        Expr::Atom(b, p) => SymFunc::basis_element(*b, p.clone()),
        Expr::Skew(shape) => symop_core::skew_schur(shape),
        Expr::Neg(a) => -eval_native(a),
        Expr::Add(a, b) => eval_native(a) + eval_native(b),
        Expr::Sub(a, b) => eval_native(a) - eval_native(b),
        Expr::Mul(a, b) => eval_native(a) * eval_native(b),
        Expr::Pow(a, k) => {
            let base = eval_native(a);
            (0..*k).fold(SymFunc::one(), |acc, _| acc * &base)
        }
        Expr::Kron(a, b) => eval_native(a).kronecker(&eval_native(b)),
        Expr::Apply(op, g) => eval_op(op).apply(&eval_native(g)),
    }
}

/// Exact value, in the Schur basis.
pub fn evaluate(e: &Expr) -> SymFunc {
    eval_native(e).to_schur()
}

pub fn eval_op(op: &OpExpr) -> OperatorExpr {
    match op {
        OpExpr::Scalar(c) => OperatorExpr::scalar(c.clone()),
        OpExpr::Id => OperatorExpr::identity(),
        OpExpr::Gen(kind, f) => {
            let f = eval_native(f);
            match kind {
                OpKind::U => OperatorExpr::u(f),
                OpKind::D => OperatorExpr::d(f),
                OpKind::K => OperatorExpr::k(f),
                OpKind::KB => OperatorExpr::kb(f),
            }
        }
        OpExpr::Neg(a) => -eval_op(a),
        OpExpr::Add(a, b) => eval_op(a) + eval_op(b),
        OpExpr::Sub(a, b) => eval_op(a) - eval_op(b),
        OpExpr::Compose(a, b) => eval_op(a) * eval_op(b),
    }
}

/// Canonical rendering in the Schur basis; [`parse`] reads it back.
pub fn render(f: &SymFunc) -> String {
    f.to_schur().to_string()
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<SymFunc> {
    parse(text).map(|e| evaluate(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(text: &str) -> String {
        render(&eval_str(text).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(v("s[1]*s[1]"), "s[2] + s[1,1]");
        assert_eq!(v("kron(s[2,1], s[2,1])"), "s[3] + s[2,1] + s[1,1,1]");
        assert_eq!(v("sk[2,1/1]"), "s[2] + s[1,1]");
        assert_eq!(v("s[0]"), "s[0]");
        assert_eq!(v("s[1]^2 - h[2] - e[2]"), "0");
        assert_eq!(v("-1/2*p[1,1] + 1/2*p[2]"), "-s[1,1]");
        assert_eq!(v("apply(D(s[1])*U(s[1]) - U(s[1])*D(s[1]), s[2,1])"), "s[2,1]");
    }

    #[test]
    fn ast_shapes() {
        assert!(matches!(parse("s[2,1]*s[1]").unwrap(), Expr::Mul(..)));
        assert!(matches!(parse("kron(s[2,1], s[2,1])").unwrap(), Expr::Kron(..)));
    }

    #[test]
    fn errors() {
        let e = parse("s[1,2]").unwrap_err();
        assert!(e.to_string().contains("weakly decreasing"), "{e}");
        assert_eq!(parse("s[1] + ").unwrap_err(), ParseError::Syntax { pos: 7, message: "unexpected end of input".into() });
        assert!(matches!(parse("s[1] $"), Err(ParseError::Syntax { pos: 5, .. })));
        assert!(matches!(parse("q[1]"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(parse("sk[1/2]").is_err());
        assert!(parse("1/0").is_err());
    }
}
