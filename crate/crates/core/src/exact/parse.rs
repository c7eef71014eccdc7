//! Textual polynomial syntax: integers, identifiers, `+ - * / ^` and
//! parentheses. Division is allowed by nonzero rational constants only.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactError, Result};

/// Sparse polynomial over `Q` in a fixed list of names.
pub(crate) type RawPoly = BTreeMap<Vec<u32>, BigRational>;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
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
            out.push(Token::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(ExactError::Parse(format!("unexpected character `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    names: &'a [String],
    text: &'a str,
}

fn add_into(a: &mut RawPoly, b: RawPoly, sign: i64) {
    for (e, c) in b {
        let entry = a.entry(e).or_insert_with(BigRational::zero);
        *entry += c * BigRational::from_integer(sign.into());
    }
    a.retain(|_, c| !c.is_zero());
}

pub(crate) fn raw_mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn constant(n: usize, c: BigRational) -> RawPoly {
    let mut p = RawPoly::new();
    if !c.is_zero() {
        p.insert(vec![0; n], c);
    }
    p
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at token {} in `{}`", self.pos, self.text))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                add_into(&mut acc, t, 1);
            } else if self.eat('-') {
                let t = self.term()?;
                add_into(&mut acc, t, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let f = self.factor()?;
                acc = raw_mul(&acc, &f);
            } else if self.eat('/') {
                let f = self.factor()?;
                let zero = vec![0; self.names.len()];
                let c = match (f.len(), f.get(&zero)) {
                    (1, Some(c)) => c.clone(),
                    _ => return Err(self.err("division by a non-constant")),
                };
                acc = acc.into_iter().map(|(e, x)| (e, x / &c)).collect();
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RawPoly> {
        if self.eat('-') {
            let f = self.factor()?;
            return Ok(f.into_iter().map(|(e, c)| (e, -c)).collect());
        }
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Token::Num(k)) = self.peek().cloned() else {
                return Err(self.err("expected exponent"));
            };
            self.pos += 1;
            let k: u32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
            let mut out = constant(self.names.len(), BigRational::one());
            for _ in 0..k {
                out = raw_mul(&out, &base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RawPoly> {
        let n = self.names.len();
        match self.peek().cloned() {
            Some(Token::Num(k)) => {
                self.pos += 1;
                Ok(constant(n, BigRational::from_integer(k)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .names
                    .iter()
                    .position(|x| *x == name)
                    .ok_or_else(|| ExactError::Parse(format!("unknown symbol `{name}` in `{}`", self.text)))?;
                let mut e = vec![0; n];
                e[i] = 1;
                Ok(RawPoly::from([(e, BigRational::one())]))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, symbol or `(`")),
        }
    }
}

/// Parses `text` as a polynomial over `Q` in `names`.
pub(crate) fn parse_raw(text: &str, names: &[String]) -> Result<RawPoly> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0, names, text };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Human-readable form of a sparse polynomial with the given names.
pub(crate) fn format_raw(p: &RawPoly, names: &[String]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, c) in p.iter().rev() {
        let mono: Vec<String> = e
            .iter()
            .zip(names)
            .filter(|(k, _)| **k > 0)
            .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
            .collect();
        let neg = c < &BigRational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        });
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&mono.join("*"));
        }
    }
    out
}
