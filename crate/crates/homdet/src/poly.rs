//! Integer polynomials in one variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::rat::Rat;

/// Polynomial with integer coefficients, stored low degree first.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds from coefficients `c0 + c1 t + ...`, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds from small integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Substitutes `t -> -t`.
    pub fn flip_sign(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Gcd of all coefficients, positive; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Rational coefficient view, low degree first.
    pub fn to_rat_coeffs(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect()
    }

    /// Builds from rational coefficients, clearing denominators is the
    /// caller's job; panics if any coefficient is non-integral.
    pub fn from_rat_coeffs(coeffs: &[Rat]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| {
                    assert!(c.denom().is_one(), "non-integral coefficient {c}");
                    c.numer().clone()
                })
                .collect(),
        )
    }

    /// All rational roots with multiplicity, plus the rootless cofactor.
    ///
    /// Candidates p/s are drawn from divisors of the trailing and leading
    /// coefficients; each found root is divided out before continuing.
    pub fn rational_roots(&self) -> (Vec<Rat>, IntPoly) {
        if self.is_zero() {
            return (Vec::new(), Self::zero());
        }
        let mut roots = Vec::new();
        let mut cur = self.to_rat_coeffs();
        // factor out powers of t first
        while cur.first().is_some_and(|c| c.is_zero()) {
            cur.remove(0);
            roots.push(Rat::zero());
        }
        loop {
            if cur.len() <= 1 {
                break;
            }
            let prim = IntPoly::from_rat_coeffs(&clear_denoms(&cur)).primitive();
            let lead = prim.coeffs.last().unwrap().clone();
            let tail = prim.coeffs.first().unwrap().clone();
            let mut found = None;
            'search: for p in divisors(&tail) {
                for s in divisors(&lead) {
                    for sign in [1i64, -1] {
                        let cand = Rat::new(&p * BigInt::from(sign), s.clone());
                        if prim.eval(&cand).is_zero() {
                            found = Some(cand);
                            break 'search;
                        }
                    }
                }
            }
            match found {
                Some(r) => {
                    cur = synth_div(&cur, &r);
                    roots.push(r);
                }
                None => break,
            }
        }
        let cofactor = IntPoly::from_rat_coeffs(&clear_denoms(&cur)).primitive();
        (roots, cofactor)
    }
}

/// Scales rational coefficients to integers by the common denominator.
fn clear_denoms(coeffs: &[Rat]) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let f = Rat::from_integer(lcm);
    coeffs.iter().map(|c| c * &f).collect()
}

/// Synthetic division by `(t - r)`; the remainder must vanish.
fn synth_div(coeffs: &[Rat], r: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); coeffs.len() - 1];
    let mut carry = Rat::zero();
    for k in (0..coeffs.len()).rev() {
        let v = coeffs[k].clone() + &carry * r;
        if k == 0 {
            assert!(v.is_zero(), "nonzero remainder in synthetic division");
        } else {
            out[k - 1] = v.clone();
            carry = v;
        }
    }
    out
}

/// Positive divisors of |n|.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if n.is_multiple_of(&k) {
            out.push(k.clone());
            let m = &n / &k;
            if m != k {
                out.push(m);
            }
        }
        k += BigInt::one();
    }
    out.sort();
    out
}

/// Monic gcd over the rationals, returned as a primitive integer polynomial.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = a.to_rat_coeffs();
    let mut y = b.to_rat_coeffs();
    while !y.is_empty() {
        let r = rat_poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return IntPoly::zero();
    }
    IntPoly::from_rat_coeffs(&clear_denoms(&x)).primitive()
}

/// Remainder of rational-coefficient polynomial division.
fn rat_poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1;
        let f = r[k].clone() / &lead;
        if !f.is_zero() {
            for j in 0..=db {
                let v = r[k - db + j].clone() - &f * &b[j];
                r[k - db + j] = v;
            }
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn mul_and_eval() {
        let p = IntPoly::from_i64(&[1, 1]); // 1 + t
        let sq = p.mul(&p);
        assert_eq!(sq, IntPoly::from_i64(&[1, 2, 1]));
        assert_eq!(sq.eval(&rat_int(3)), rat_int(16));
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(format!("{sq}"), "t^2 + 2*t + 1");
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = IntPoly::from_i64(&[-1, 0, 1]); // t^2 - 1
        let b = IntPoly::from_i64(&[1, 1]); // t + 1
        assert_eq!(poly_gcd(&a, &b), b);
        let c = IntPoly::from_i64(&[2, 2]);
        assert_eq!(poly_gcd(&c, &b), b);
    }

    #[test]
    fn roots_with_multiplicity() {
        // (1+t)^2 (1-2t)
        let p = IntPoly::from_i64(&[1, 1])
            .mul(&IntPoly::from_i64(&[1, 1]))
            .mul(&IntPoly::from_i64(&[1, -2]));
        let (mut roots, cof) = p.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![rat_int(-1), rat_int(-1), rat(1, 2)]);
        assert_eq!(cof.degree(), Some(0));
    }

    #[test]
    fn irreducible_cofactor() {
        let p = IntPoly::from_i64(&[1, 0, 1]); // t^2 + 1
        let (roots, cof) = p.rational_roots();
        assert!(roots.is_empty());
        assert_eq!(cof, p);
    }
}
