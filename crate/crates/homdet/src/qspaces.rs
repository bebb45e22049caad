//! Quantum algebra dimensions, Poincare series, and birank detection.
//!
//! The dimension of the quantum exterior power is the rank of the
//! antisymmetrizer, which for an idempotent equals its trace, so dimensions
//! are computed exactly from traces of the unnormalized symmetrizer sums.
//! The generating series is reconstructed as a rational function by exact
//! Berlekamp-Massey; its numerator and denominator degrees give the birank.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hecke::{HeckeSym, ProjectorTower};
use crate::poly::{poly_gcd, IntPoly};
use crate::rat::{as_usize, qfact, Rat};
use crate::Limits;

/// Default number of series terms used for birank detection.
pub const DEFAULT_SERIES_TERMS: usize = 7;

/// Guard band: extra stable terms required before a recurrence is trusted.
pub const DEFAULT_GUARD: usize = 2;

/// Dimension of the k-th quantum exterior power: the rank of `Y_k`.
pub fn lambda_dim(hs: &HeckeSym, k: usize, limits: &Limits) -> Result<usize> {
    let mut tower = ProjectorTower::new(hs, limits.clone());
    projector_dim(&mut tower, k, true)
}

/// Dimension of the l-th quantum symmetric power: the rank of `X_l`.
pub fn sym_dim(hs: &HeckeSym, l: usize, limits: &Limits) -> Result<usize> {
    let mut tower = ProjectorTower::new(hs, limits.clone());
    projector_dim(&mut tower, l, false)
}

/// Rank of the normalized projector at one level, via its trace.
fn projector_dim(tower: &mut ProjectorTower<'_>, n: usize, signed: bool) -> Result<usize> {
    let q = tower.hs().q().clone();
    let norm = if signed {
        qfact(n, &q.recip())?
    } else {
        qfact(n, &q)?
    };
    let tr = tower.level_trace(n, signed)? / norm;
    as_usize(&tr).ok_or_else(|| {
        Error::Dimension(format!(
            "projector trace {tr} at level {n} is not a nonnegative integer"
        ))
    })
}

/// Result of rational reconstruction from initial series terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Determined { numer: IntPoly, denom: IntPoly },
    Undetermined,
}

/// Reconstructs a generating function from series coefficients.
///
/// Runs Berlekamp-Massey over the rationals and accepts the recurrence only
/// when the last `guard` terms produced no discrepancy. The returned
/// fraction is reduced, with `denom(0) = 1`.
pub fn reconstruct_rational_with_guard(coeffs: &[i64], guard: usize) -> Reconstruction {
    let n_terms = coeffs.len();
    if n_terms == 0 {
        return Reconstruction::Undetermined;
    }
    let s: Vec<Rat> = coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect();

    // Berlekamp-Massey state: current and previous connection polynomials
    let mut c = vec![Rat::one()];
    let mut b = vec![Rat::one()];
    let mut l: usize = 0;
    let mut m: usize = 1;
    let mut bdisc = Rat::one();
    let mut last_update: usize = 0;

    for n in 0..n_terms {
        let mut delta = s[n].clone();
        for i in 1..=l.min(c.len().saturating_sub(1)) {
            delta += &c[i] * &s[n - i];
        }
        if delta.is_zero() {
            m += 1;
            continue;
        }
        last_update = n;
        let coef = delta.clone() / &bdisc;
        if 2 * l <= n {
            let t = c.clone();
            sub_scaled_shifted(&mut c, &b, &coef, m);
            l = n + 1 - l;
            b = t;
            bdisc = delta;
            m = 1;
        } else {
            sub_scaled_shifted(&mut c, &b, &coef, m);
            m += 1;
        }
    }

    if n_terms - 1 - last_update < guard {
        return Reconstruction::Undetermined;
    }

    // numerator = (connection * series) truncated below t^l
    let mut numer = vec![Rat::zero(); l.max(1)];
    for (k, slot) in numer.iter_mut().enumerate() {
        if k >= l {
            break;
        }
        let mut acc = Rat::zero();
        for i in 0..=k.min(c.len() - 1) {
            acc += &c[i] * &s[k - i];
        }
        *slot = acc;
    }

    let (numer, denom) = reduce_fraction(&numer, &c);
    Reconstruction::Determined { numer, denom }
}

/// Reconstruction with the default guard band.
pub fn reconstruct_rational(coeffs: &[i64]) -> Reconstruction {
    reconstruct_rational_with_guard(coeffs, DEFAULT_GUARD)
}

/// In place `c -= coef * t^shift * b`.
fn sub_scaled_shifted(c: &mut Vec<Rat>, b: &[Rat], coef: &Rat, shift: usize) {
    let need = b.len() + shift;
    if c.len() < need {
        c.resize(need, Rat::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        let v = c[i + shift].clone() - coef * bi;
        c[i + shift] = v;
    }
    while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

/// Reduces to lowest terms with constant term 1 in the denominator.
fn reduce_fraction(numer: &[Rat], denom: &[Rat]) -> (IntPoly, IntPoly) {
    let np = int_scale(numer);
    let dp = int_scale(denom);
    if np.is_zero() {
        return (IntPoly::zero(), IntPoly::one());
    }
    let g = poly_gcd(&np, &dp);
    let n1 = exact_quot(&np, &g);
    let d1 = exact_quot(&dp, &g);
    let d0 = Rat::from_integer(d1.constant_term());
    assert!(!d0.is_zero(), "denominator vanishes at 0");
    let scale = d0.recip();
    let n2: Vec<Rat> = n1.to_rat_coeffs().iter().map(|x| x * &scale).collect();
    let d2: Vec<Rat> = d1.to_rat_coeffs().iter().map(|x| x * &scale).collect();
    (IntPoly::from_rat_coeffs(&n2), IntPoly::from_rat_coeffs(&d2))
}

/// Clears denominators into an integer polynomial (up to positive scale).
fn int_scale(coeffs: &[Rat]) -> IntPoly {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in coeffs {
        lcm = lcm.lcm(x.denom());
    }
    let f = Rat::from_integer(lcm);
    let scaled: Vec<Rat> = coeffs.iter().map(|x| x * &f).collect();
    IntPoly::from_rat_coeffs(&scaled)
}

/// Quotient of exactly divisible integer polynomials.
fn exact_quot(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut rem = a.to_rat_coeffs();
    let bc = b.to_rat_coeffs();
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
        while rem.last().is_some_and(|x| x.is_zero()) {
            rem.pop();
        }
    }
    assert!(rem.is_empty(), "inexact division in fraction reduction");
    let mut lcm = num_bigint::BigInt::one();
    for x in &q {
        use num_integer::Integer;
        lcm = lcm.lcm(x.denom());
    }
    assert!(lcm.is_one(), "non-integer quotient in fraction reduction");
    IntPoly::from_rat_coeffs(&q)
}

/// Poincare series data for one symmetry.
#[derive(Debug, Clone)]
pub struct PoincareReport {
    pub lambda_dims: Vec<usize>,
    pub sym_dims: Vec<usize>,
    pub numer: IntPoly,
    pub denom: IntPoly,
    /// Degrees of the reduced fraction, when the recurrence stabilized.
    pub birank: Option<(usize, usize)>,
    pub roots_ok: bool,
    pub duality_ok: bool,
    /// Highest degree covered by the duality check.
    pub duality_degree: usize,
    /// Human-readable diagnosis when `roots_ok` is false.
    pub root_note: Option<String>,
}

/// Computes dimensions up to degree `kmax` and reconstructs the series.
///
/// `kmax` is lowered silently when the ambient cap would be exceeded.
pub fn poincare(hs: &HeckeSym, kmax: usize, limits: &Limits) -> Result<PoincareReport> {
    poincare_profiles(hs, kmax, kmax, limits)
}

/// As `poincare`, with separate degree bounds for the two sides.
///
/// The exterior dimensions drive the reconstruction and the birank; the
/// symmetric dimensions only feed the duality check, which runs on the
/// common degree window. Terminating exterior towers make large
/// `lambda_kmax` cheap, while the symmetric tower keeps growing, so callers
/// usually keep `sym_kmax` modest.
pub fn poincare_profiles(
    hs: &HeckeSym,
    lambda_kmax: usize,
    sym_kmax: usize,
    limits: &Limits,
) -> Result<PoincareReport> {
    let cap_degree = |kmax: usize| {
        let mut top = kmax;
        while top > 0 {
            let dim = hs.dim().checked_pow(top as u32).unwrap_or(usize::MAX);
            if dim <= limits.max_ambient_dim {
                break;
            }
            top -= 1;
        }
        top
    };
    let top_l = cap_degree(lambda_kmax);
    let top_s = cap_degree(sym_kmax);

    let mut tower = ProjectorTower::new(hs, limits.clone());
    let mut lambda_dims = Vec::with_capacity(top_l + 1);
    for n in 0..=top_l {
        lambda_dims.push(projector_dim(&mut tower, n, true)?);
    }
    let mut sym_dims = Vec::with_capacity(top_s + 1);
    for n in 0..=top_s {
        sym_dims.push(projector_dim(&mut tower, n, false)?);
    }

    let coeffs: Vec<i64> = lambda_dims.iter().map(|&x| x as i64).collect();
    let (numer, denom, birank) = match reconstruct_rational(&coeffs) {
        Reconstruction::Determined { numer, denom } => {
            let m = numer.degree().unwrap_or(0);
            let n = denom.degree().unwrap_or(0);
            (numer, denom, Some((m, n)))
        }
        Reconstruction::Undetermined => (IntPoly::zero(), IntPoly::one(), None),
    };

    // soundness: denom * series - numer must vanish up to the known terms
    if birank.is_some() {
        for t in 0..=top_l {
            let mut acc = -numer.coeff(t);
            for i in 0..=t.min(denom.degree().unwrap_or(0)) {
                acc += denom.coeff(i) * num_bigint::BigInt::from(coeffs[t - i]);
            }
            assert!(acc.is_zero(), "reconstruction inconsistent at degree {t}");
        }
    }

    let (roots_ok, root_note) = if birank.is_some() {
        check_root_signs(&numer, &denom)
    } else {
        (true, None)
    };

    // duality: sum_{i+j=t} sym[j] * (-1)^i * lambda[i] = 0 for t >= 1
    let duality_degree = top_l.min(top_s);
    let mut duality_ok = !lambda_dims.is_empty() && lambda_dims[0] == 1 && sym_dims[0] == 1;
    for t in 1..=duality_degree {
        let mut acc = 0i64;
        for i in 0..=t {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc += sign * (lambda_dims[i] as i64) * (sym_dims[t - i] as i64);
        }
        if acc != 0 {
            duality_ok = false;
        }
    }

    Ok(PoincareReport {
        lambda_dims,
        sym_dims,
        numer,
        denom,
        birank,
        roots_ok,
        duality_ok,
        duality_degree,
        root_note,
    })
}

/// Verifies that all numerator roots are negative and all poles positive.
///
/// Falls back to coefficient-sign certificates when a factor does not split
/// over the rationals.
fn check_root_signs(numer: &IntPoly, denom: &IntPoly) -> (bool, Option<String>) {
    let (nroots, ncof) = numer.rational_roots();
    if ncof.degree().unwrap_or(0) == 0 {
        if let Some(r) = nroots.iter().find(|r| !r.is_negative()) {
            return (
                false,
                Some(format!("numerator root {r} is not negative")),
            );
        }
    } else {
        // certificate: strictly positive coefficients force negative real roots
        let all_pos = numer.coeffs().iter().all(|c| c.is_positive());
        if !all_pos {
            return (
                false,
                Some("numerator does not split over Q and is not totally positive".into()),
            );
        }
    }
    let (droots, dcof) = denom.rational_roots();
    if dcof.degree().unwrap_or(0) == 0 {
        if let Some(r) = droots.iter().find(|r| !r.is_positive()) {
            return (false, Some(format!("pole {r} is not positive")));
        }
    } else {
        let alternating = denom
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| if k % 2 == 0 { c.is_positive() } else { c.is_negative() });
        if !alternating {
            return (
                false,
                Some("denominator does not split over Q and does not alternate".into()),
            );
        }
    }
    (true, None)
}

/// Birank of the symmetry: degrees of the reduced Poincare fraction.
pub fn birank(hs: &HeckeSym, kmax: usize, limits: &Limits) -> Result<(usize, usize)> {
    let report = poincare_profiles(hs, kmax, 0, limits)?;
    match report.birank {
        None => Err(Error::Undetermined {
            terms: report.lambda_dims.len(),
        }),
        Some(_) if !report.roots_ok => Err(Error::RootSignViolation(
            report.root_note.unwrap_or_else(|| "sign check failed".into()),
        )),
        Some(b) => Ok(b),
    }
}
