//! Rational functions of q with an expression parser.

use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, IntPoly};
use crate::rat::Rat;

/// Reduced quotient of integer polynomials in q.
///
/// The denominator is primitive with positive leading coefficient and shares
/// no factor with the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    numer: IntPoly,
    denom: IntPoly,
}

impl RatFunc {
    /// Builds and reduces `numer / denom`; the denominator must be nonzero.
    pub fn new(numer: IntPoly, denom: IntPoly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        if numer.is_zero() {
            return Ok(RatFunc {
                numer: IntPoly::zero(),
                denom: IntPoly::one(),
            });
        }
        let g = poly_gcd(&numer, &denom);
        let mut n = exact_div(&numer, &g);
        let mut d = exact_div(&denom, &g);
        // strip the shared integer content, then fix the denominator sign
        let c = {
            use num_integer::Integer;
            n.content().gcd(&d.content())
        };
        if !c.is_one() {
            let s = Rat::new(num_bigint::BigInt::from(1), c);
            n = scale_rat(&n, &s);
            d = scale_rat(&d, &s);
        }
        if d.coeff(d.degree().unwrap()).is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Ok(RatFunc { numer: n, denom: d })
    }

    pub fn constant(x: &Rat) -> Self {
        RatFunc {
            numer: IntPoly::new(vec![x.numer().clone()]),
            denom: IntPoly::new(vec![x.denom().clone()]),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            numer: IntPoly::zero(),
            denom: IntPoly::one(),
        }
    }

    pub fn var() -> Self {
        RatFunc {
            numer: IntPoly::from_i64(&[0, 1]),
            denom: IntPoly::one(),
        }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.numer
    }

    pub fn denom(&self) -> &IntPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self
            .numer
            .mul(&other.denom)
            .add(&other.numer.mul(&self.denom));
        let d = self.denom.mul(&other.denom);
        RatFunc::new(n, d).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.numer.mul(&other.numer), self.denom.mul(&other.denom))
            .expect("nonzero denominator")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Parse("division by zero expression".into()));
        }
        RatFunc::new(self.numer.mul(&other.denom), self.denom.mul(&other.numer))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatFunc::constant(&Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at `q`; fails with `PoleAtQ` on a denominator zero.
    pub fn eval(&self, q: &Rat) -> Result<Rat> {
        let d = self.denom.eval(q);
        if d.is_zero() {
            return Err(Error::PoleAtQ { q: q.clone() });
        }
        Ok(self.numer.eval(q) / d)
    }

    /// Parses expressions over q: `+ - * / ^`, parentheses, rational literals.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = lex(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input in {text:?}"
            )));
        }
        Ok(e)
    }
}

/// Exact polynomial quotient; panics if the division is not exact.
fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let ac = a.to_rat_coeffs();
    let bc = b.to_rat_coeffs();
    let mut rem = ac;
    let db = bc.len() - 1;
    let lead = bc[db].clone();
    let mut q = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - 1;
        let f = rem[k].clone() / &lead;
        q[k - db] = f.clone();
        for j in 0..=db {
            let v = rem[k - db + j].clone() - &f * &bc[j];
            rem[k - db + j] = v;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    assert!(rem.is_empty(), "inexact polynomial division");
    let scaled = crate::poly::IntPoly::from_rat_coeffs(&clear(&q));
    scaled
}

fn clear(coeffs: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    assert!(lcm.is_one(), "exact quotient had non-integer coefficients");
    coeffs.to_vec()
}

fn scale_rat(p: &IntPoly, s: &Rat) -> IntPoly {
    let coeffs: Vec<Rat> = p
        .to_rat_coeffs()
        .iter()
        .map(|c| c * s)
        .collect();
    IntPoly::from_rat_coeffs(&coeffs)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            'q' => {
                out.push(Tok::Var);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: num_bigint::BigInt = text[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number in {text:?}")))?;
                out.push(Tok::Num(n));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected character {c:?} in {text:?}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Star => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(RatFunc {
                numer: IntPoly::new(vec![n]),
                denom: IntPoly::one(),
            }),
            Some(Tok::Var) => Ok(RatFunc::var()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_zero() || self.denom == IntPoly::one() {
            write!(f, "{}", q_str(&self.numer))
        } else {
            write!(f, "({}) / ({})", q_str(&self.numer), q_str(&self.denom))
        }
    }
}

fn q_str(p: &IntPoly) -> String {
    format!("{p}").replace('t', "q")
}
