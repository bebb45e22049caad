//! Exact rational scalars and q-integer arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Canonical text form `num/den`, or just `num` when the denominator is 1.
pub fn rat_str(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a` or `a/b` with optional sign and surrounding whitespace.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid rational literal {text:?}"));
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = den_s.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Integer power with negative exponents; panics on 0^negative.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        return base.pow(exp as i32);
    }
    assert!(!base.is_zero(), "negative power of zero");
    base.pow((-exp) as i32).recip()
}

/// The q-integer `[n]_q = (q^n - 1)/(q - 1)`, valid for any sign of n.
pub fn qint(n: i64, q: &Rat) -> Rat {
    if q.is_one() {
        return rat_int(n);
    }
    let one = Rat::one();
    (rat_pow(q, n) - &one) / (q.clone() - one)
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
///
/// Fails with `RootOfUnity` at the first k with `[k]_q = 0`.
pub fn qfact(n: usize, q: &Rat) -> Result<Rat> {
    let mut acc = Rat::one();
    for k in 1..=n {
        let f = qint(k as i64, q);
        if f.is_zero() {
            return Err(Error::RootOfUnity { k, q: q.clone() });
        }
        acc *= f;
    }
    Ok(acc)
}

/// True when `x` is a nonnegative integer; returns it as usize.
pub fn as_usize(x: &Rat) -> Option<usize> {
    if x.denom().is_one() && !x.numer().is_negative() {
        x.numer().try_into().ok()
    } else {
        None
    }
}
