//! A small formula language over [`BiSeries`].
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals, implicit
//! multiplication by juxtaposition, and identifiers. A postfix `'` applies
//! `D1 = q1 d/dq1`. An identifier suffix `_p`/`_b` (repeatable, e.g. `I11_pb`)
//! applies `D1`/`D2` to a base name found in the environment. The name `i`
//! is the fourth root of unity unless the environment binds it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::series::{Axis, BiSeries};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    D1(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[st..i].iter().collect();
            out.push(Tok::Num(s.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()'".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} at {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else if self.starts_atom() {
                e = Expr::Mul(Box::new(e), Box::new(self.power()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.postfix()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let paren = self.eat('(');
            let neg = neg || (paren && self.eat('-'));
            let n = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.clone(),
                _ => return Err(Error::Parse("integer exponent expected".into())),
            };
            self.pos += 1;
            if paren && !self.eat(')') {
                return Err(Error::Parse("missing ')' in exponent".into()));
            }
            let n: i64 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.eat('\'') {
            e = Expr::D1(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a formula.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {src:?}")));
    }
    Ok(e)
}

/// Named series used to evaluate formulas.
#[derive(Clone, Debug)]
pub struct Env {
    order: u32,
    trunc: (usize, usize),
    vars: BTreeMap<String, BiSeries>,
}

impl Env {
    pub fn new(order: u32, trunc: (usize, usize)) -> Self {
        Env { order, trunc, vars: BTreeMap::new() }
    }

    pub fn trunc(&self) -> (usize, usize) {
        self.trunc
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn set(&mut self, name: &str, s: BiSeries) {
        let s = s.truncate((self.trunc.0.min(s.trunc().0), self.trunc.1.min(s.trunc().1)));
        self.vars.insert(name.to_string(), s.pad(self.trunc));
    }

    pub fn set_constant(&mut self, name: &str, c: Cyclo) {
        self.vars.insert(name.to_string(), BiSeries::constant(c, self.trunc));
    }

    pub fn get(&self, name: &str) -> Option<&BiSeries> {
        self.vars.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.vars.keys()
    }

    /// Resolves a name, applying `_p`/`_b` derivative suffixes when the full
    /// name is unbound.
    pub fn lookup(&self, name: &str) -> Result<BiSeries> {
        if let Some(s) = self.vars.get(name) {
            return Ok(s.clone());
        }
        if let Some((base, suf)) = name.rsplit_once('_') {
            if !suf.is_empty() && suf.chars().all(|c| c == 'p' || c == 'b') {
                let mut s = self.lookup(base)?;
                for c in suf.chars() {
                    s = s.euler(if c == 'p' { Axis::Q1 } else { Axis::Q2 });
                }
                return Ok(s);
            }
        }
        if name == "i" {
            return Ok(BiSeries::constant(Cyclo::root_of_unity(4, 1), self.trunc));
        }
        Err(Error::Unknown { kind: "series", name: name.to_string() })
    }

    pub fn eval(&self, e: &Expr) -> Result<BiSeries> {
        Ok(match e {
            Expr::Num(n) => {
                BiSeries::constant(Cyclo::from_rational(BigRational::from_integer(n.clone()), self.order), self.trunc)
            }
            Expr::Var(s) => self.lookup(s)?,
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(&self.eval(b)?),
            Expr::Mul(a, b) => self.eval(a)?.mul(&self.eval(b)?),
            Expr::Div(a, b) => self.eval(a)?.div(&self.eval(b)?)?,
            Expr::Pow(a, n) => {
                let x = self.eval(a)?;
                let p = x.pow(n.unsigned_abs() as u32);
                if *n < 0 {
                    p.invert()?
                } else {
                    p
                }
            }
            Expr::D1(a) => self.eval(a)?.euler(Axis::Q1),
        })
    }

    pub fn eval_str(&self, src: &str) -> Result<BiSeries> {
        self.eval(&parse(src)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env() -> Env {
        let mut e = Env::new(4, (4, 2));
        e.set("x", BiSeries::monomial(Cyclo::one(4), (1, 0), (4, 2)));
        e.set("y", BiSeries::monomial(Cyclo::one(4), (0, 1), (4, 2)));
        e
    }

    #[test]
    fn precedence() {
        let e = env();
        let a = e.eval_str("-x^2 + 2 x y - 3/(1 - x)").unwrap();
        let x = e.get("x").unwrap();
        let y = e.get("y").unwrap();
        let b = x
            .pow(2)
            .neg()
            .add(&x.mul(y).scale_rational(&crate::cyclo::rat(2, 1)))
            .sub(&x.neg().add_constant(&Cyclo::one(4)).invert().unwrap().scale_rational(&crate::cyclo::rat(3, 1)));
        assert_eq!(a, b);
    }

    #[test]
    fn derivative_suffixes() {
        let mut e = env();
        e.set("f", e.eval_str("x^2 y + x").unwrap());
        assert_eq!(e.eval_str("f_pb").unwrap(), e.eval_str("2 x^2 y").unwrap());
        assert_eq!(e.eval_str("f'").unwrap(), e.eval_str("f_p").unwrap());
        assert_eq!(e.eval_str("(f y)'").unwrap(), e.eval_str("f_p y").unwrap());
    }

    #[test]
    fn imaginary_unit() {
        let e = env();
        assert_eq!(e.eval_str("i^2").unwrap(), e.eval_str("-1").unwrap());
    }

    #[test]
    fn errors() {
        let e = env();
        assert!(matches!(e.eval_str("x +"), Err(Error::Parse(_))));
        assert!(matches!(e.eval_str("zz"), Err(Error::Unknown { .. })));
        assert!(matches!(e.eval_str("1/x"), Err(Error::NonUnit)));
    }
}
