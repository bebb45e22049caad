//! Hecke symmetries: axiom verification, the contraction P, q-symmetrizers.
//!
//! A Hecke symmetry is an invertible matrix R on V tensor V satisfying the
//! braid equation, the quadratic relation `(R + 1)(R - q) = 0`, and closure:
//! the half adjoint obtained by exchanging one index pair is invertible.
//! Matrices act on tensor powers through the big-endian flattening of index
//! tuples, and `Mat(R)[(k,l),(i,j)]` is the coefficient of `x_k x_l` in
//! `R(x_i x_j)`.

use num_traits::{One, Zero};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rat::{qfact, rat_str, Rat};
use crate::Limits;

/// Outcome of the three axiom checks, with first-failure witnesses.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub dim: usize,
    pub q: Rat,
    pub braid: bool,
    /// Failing position as 1-based digit tuples `(output, input)`.
    pub braid_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub quadratic: bool,
    pub quadratic_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub half_adjoint: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.braid && self.quadratic && self.half_adjoint
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}, q = {}", self.dim, rat_str(&self.q))?;
        let fmt_witness = |w: &Option<(Vec<usize>, Vec<usize>)>| match w {
            Some((out, inp)) => format!("fail at output {out:?}, input {inp:?}"),
            None => "fail".to_string(),
        };
        if self.braid {
            writeln!(f, "  braid:        ok")?;
        } else {
            writeln!(f, "  braid:        {}", fmt_witness(&self.braid_witness))?;
        }
        if self.quadratic {
            writeln!(f, "  quadratic:    ok")?;
        } else {
            writeln!(f, "  quadratic:    {}", fmt_witness(&self.quadratic_witness))?;
        }
        if self.half_adjoint {
            write!(f, "  half adjoint: ok")?;
        } else {
            write!(f, "  half adjoint: fail (singular)")?;
        }
        Ok(())
    }
}

/// Splits a flat index into n 1-based base-d digits, most significant first.
fn digits(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d + 1;
        idx /= d;
    }
    out
}

/// Side length d of a matrix on V tensor V, i.e. rows = d^2.
fn tensor_side(r: &ExactMatrix) -> Result<usize> {
    if r.rows() != r.cols() {
        return Err(Error::Dimension(format!(
            "R must be square, got {}x{}",
            r.rows(),
            r.cols()
        )));
    }
    let d = (r.rows() as f64).sqrt().round() as usize;
    if d * d != r.rows() {
        return Err(Error::Dimension(format!(
            "R acts on V tensor V, so its size must be a square, got {}",
            r.rows()
        )));
    }
    if d == 0 {
        return Err(Error::Dimension("R must be nonempty".into()));
    }
    Ok(d)
}

/// First position where two matrices differ.
fn first_difference(a: &ExactMatrix, b: &ExactMatrix) -> Option<(usize, usize)> {
    for r in 0..a.rows() {
        let ra = a.row_entries(r);
        let rb = b.row_entries(r);
        let mut i = 0;
        let mut j = 0;
        while i < ra.len() || j < rb.len() {
            if j >= rb.len() || (i < ra.len() && ra[i].0 < rb[j].0) {
                return Some((r, ra[i].0));
            }
            if i >= ra.len() || rb[j].0 < ra[i].0 {
                return Some((r, rb[j].0));
            }
            if ra[i].1 != rb[j].1 {
                return Some((r, ra[i].0));
            }
            i += 1;
            j += 1;
        }
    }
    None
}

/// Runs the three Hecke axioms on R at the given q.
pub fn check_hecke(r: &ExactMatrix, q: &Rat) -> Result<AxiomReport> {
    let d = tensor_side(r)?;
    let id_d = ExactMatrix::identity(d);

    // braid equation on V tensor 3
    let r1 = r.kron(&id_d);
    let r2 = id_d.kron(r);
    let lhs = r1.mul(&r2)?.mul(&r1)?;
    let rhs = r2.mul(&r1)?.mul(&r2)?;
    let braid_diff = first_difference(&lhs, &rhs);

    // quadratic relation (R + 1)(R - q) = 0
    let id2 = ExactMatrix::identity(d * d);
    let quad = r.add(&id2)?.mul(&r.sub(&id2.scale(q))?)?;
    let quad_diff = if quad.is_zero() {
        None
    } else {
        first_difference(&quad, &ExactMatrix::zeros(d * d, d * d))
    };

    // half adjoint: entry ((k,l),(i,j)) = R[(i,k),(j,l)], must be invertible
    let half = ExactMatrix::from_entries(
        d * d,
        d * d,
        (0..r.rows()).flat_map(|row| {
            r.row_entries(row)
                .iter()
                .map(move |(col, v)| (row, *col, v.clone()))
                .collect::<Vec<_>>()
        })
        .map(|(row, col, v)| {
            let (i, k) = (row / d, row % d);
            let (j, l) = (col / d, col % d);
            (k * d + l, i * d + j, v)
        }),
    );
    let half_ok = half.rank() == d * d;

    Ok(AxiomReport {
        dim: d,
        q: q.clone(),
        braid: braid_diff.is_none(),
        braid_witness: braid_diff.map(|(row, col)| (digits(row, d, 3), digits(col, d, 3))),
        quadratic: quad_diff.is_none(),
        quadratic_witness: quad_diff.map(|(row, col)| (digits(row, d, 2), digits(col, d, 2))),
        half_adjoint: half_ok,
    })
}

/// Solves for the contraction P with `P^{im}_{jn} R^{nk}_{ml} = d^i_l d^k_j`.
///
/// The defining identity is a reshuffled matrix inversion; the result is
/// verified by recontraction before it is returned.
pub fn solve_p(r: &ExactMatrix) -> Result<ExactMatrix> {
    let d = tensor_side(r)?;
    let dd = d * d;

    // reshuffle R into the matrix that must be inverted:
    // M2[(a,c),(e,b)] = R[(a,b),(c,e)]
    let m2 = ExactMatrix::from_entries(
        dd,
        dd,
        entry_iter(r).map(|(row, col, v)| {
            let (a, b) = (row / d, row % d);
            let (c, e) = (col / d, col % d);
            (a * d + c, e * d + b, v)
        }),
    );
    let m1 = m2.inverse().ok_or(Error::SingularHalfAdjoint)?;

    // read P back off the inverse: P[(i,m),(j,n)] = M1[(i,j),(n,m)]
    let p = ExactMatrix::from_entries(
        dd,
        dd,
        entry_iter(&m1).map(|(row, col, v)| {
            let (i, j) = (row / d, row % d);
            let (n, m) = (col / d, col % d);
            (i * d + m, j * d + n, v)
        }),
    );

    // recontract: sum_{m,n} P^{im}_{jn} R^{nk}_{ml} must be the twist of the
    // identity, delta^i_l delta^k_j
    let a = ExactMatrix::from_entries(
        dd,
        dd,
        entry_iter(&p).map(|(row, col, v)| {
            let (i, m) = (row / d, row % d);
            let (j, n) = (col / d, col % d);
            (i * d + j, m * d + n, v)
        }),
    );
    let b = ExactMatrix::from_entries(
        dd,
        dd,
        entry_iter(r).map(|(row, col, v)| {
            let (n, k) = (row / d, row % d);
            let (m, l) = (col / d, col % d);
            (m * d + n, k * d + l, v)
        }),
    );
    let contracted = a.mul(&b)?;
    let expected = ExactMatrix::from_entries(
        dd,
        dd,
        (0..d).flat_map(|i| (0..d).map(move |j| (i * d + j, j * d + i, Rat::one()))),
    );
    if contracted != expected {
        return Err(Error::SingularHalfAdjoint);
    }
    Ok(p)
}

/// Iterates all entries of a sparse matrix as `(row, col, value)`.
fn entry_iter(m: &ExactMatrix) -> impl Iterator<Item = (usize, usize, Rat)> + '_ {
    (0..m.rows()).flat_map(move |r| {
        m.row_entries(r)
            .iter()
            .map(move |(c, v)| (r, *c, v.clone()))
            .collect::<Vec<_>>()
    })
}

/// A validated Hecke symmetry with cached derived data.
#[derive(Debug)]
pub struct HeckeSym {
    dim: usize,
    q: Rat,
    r: ExactMatrix,
    p: OnceLock<ExactMatrix>,
    rank_q: OnceLock<Rat>,
}

impl Clone for HeckeSym {
    fn clone(&self) -> Self {
        HeckeSym {
            dim: self.dim,
            q: self.q.clone(),
            r: self.r.clone(),
            p: self.p.clone(),
            rank_q: self.rank_q.clone(),
        }
    }
}

impl HeckeSym {
    /// Validates all axioms and wraps R; q = 0 and q = -1 are rejected.
    pub fn new(r: ExactMatrix, q: Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Parse("q must be nonzero".into()));
        }
        if q == -Rat::one() {
            return Err(Error::RootOfUnity { k: 2, q });
        }
        let report = check_hecke(&r, &q)?;
        if !report.all_pass() {
            return Err(Error::AxiomViolation { report });
        }
        Ok(HeckeSym {
            dim: report.dim,
            q,
            r,
            p: OnceLock::new(),
            rank_q: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.r
    }

    /// The contraction matrix P, computed on first use.
    pub fn p(&self) -> &ExactMatrix {
        self.p
            .get_or_init(|| solve_p(&self.r).expect("closure was validated"))
    }

    /// Quantum rank: the full trace of P.
    pub fn rank_q(&self) -> Rat {
        self.rank_q.get_or_init(|| self.p().trace()).clone()
    }

    /// Pair contraction `x_b (x) xi^i -> C[i,b]`: partial trace of P.
    pub fn contraction_map(&self) -> ExactMatrix {
        let d = self.dim;
        let p = self.p();
        ExactMatrix::from_entries(
            d,
            d,
            entry_iter(p).filter_map(|(row, col, v)| {
                let (i, m) = (row / d, row % d);
                let (b, n) = (col / d, col % d);
                (m == n).then_some((i, b, v))
            }),
        )
    }

    /// R acting on the i-th and (i+1)-st of n tensor factors, 1-based.
    pub fn r_op(&self, i: usize, n: usize) -> Result<ExactMatrix> {
        if i == 0 || i + 1 > n {
            return Err(Error::Index { i, n });
        }
        let left = self.dim.pow((i - 1) as u32);
        let right = self.dim.pow((n - i - 1) as u32);
        Ok(ExactMatrix::identity(left)
            .kron(&self.r)
            .kron(&ExactMatrix::identity(right)))
    }

    /// Normalized q-symmetrizer `X_n` with its image basis.
    pub fn symmetrizer(&self, n: usize, limits: &Limits) -> Result<ProjectorRep> {
        let mut tower = ProjectorTower::new(self, limits.clone());
        tower.ensure_sym(n)?;
        let norm = qfact(n, &self.q)?;
        let matrix = tower.sym_hat(n).scale(&norm.recip());
        let (image_basis, _) = matrix.column_space();
        Ok(ProjectorRep {
            n,
            kind: ProjectorKind::Symmetrizer,
            matrix,
            image_basis,
        })
    }

    /// Normalized q-antisymmetrizer `Y_n` with its image basis.
    pub fn antisymmetrizer(&self, n: usize, limits: &Limits) -> Result<ProjectorRep> {
        let mut tower = ProjectorTower::new(self, limits.clone());
        tower.ensure_alt(n)?;
        let norm = qfact(n, &self.q.recip())?;
        let matrix = tower.alt_hat(n).scale(&norm.recip());
        let (image_basis, _) = matrix.column_space();
        Ok(ProjectorRep {
            n,
            kind: ProjectorKind::Antisymmetrizer,
            matrix,
            image_basis,
        })
    }
}

/// Which of the two projector families a representation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectorKind {
    Symmetrizer,
    Antisymmetrizer,
}

/// A projector on a tensor power together with a basis of its image.
#[derive(Debug, Clone)]
pub struct ProjectorRep {
    pub n: usize,
    pub kind: ProjectorKind,
    pub matrix: ExactMatrix,
    pub image_basis: ExactMatrix,
}

impl ProjectorRep {
    pub fn rank(&self) -> usize {
        self.image_basis.cols()
    }
}

/// Incremental tower of unnormalized symmetrizer sums.
///
/// Level n holds `sum over S_n of T_w` for the symmetric family and
/// `sum of (-q)^{-l(w)} T_w` for the antisymmetric one, both on V tensor n.
/// Levels are built by the coset recursion
/// `S_n = kron(S_{n-1}, I) * (1 + R_{n-1} + R_{n-1}R_{n-2} + ...)`.
pub(crate) struct ProjectorTower<'a> {
    hs: &'a HeckeSym,
    limits: Limits,
    sym: Vec<ExactMatrix>,
    alt: Vec<ExactMatrix>,
}

impl<'a> ProjectorTower<'a> {
    pub fn new(hs: &'a HeckeSym, limits: Limits) -> Self {
        let unit = ExactMatrix::identity(1);
        ProjectorTower {
            hs,
            limits,
            sym: vec![unit.clone()],
            alt: vec![unit],
        }
    }

    pub fn hs(&self) -> &HeckeSym {
        self.hs
    }

    fn check_cap(&self, n: usize) -> Result<usize> {
        let dim = self
            .hs
            .dim
            .checked_pow(n as u32)
            .unwrap_or(usize::MAX);
        if dim > self.limits.max_ambient_dim {
            return Err(Error::ResourceCap {
                dim,
                cap: self.limits.max_ambient_dim,
            });
        }
        Ok(dim)
    }

    /// Coset factor `sum_j w^(n-j) R_{n-1} ... R_j` with `w = 1` or `-1/q`.
    fn coset_sum(&self, n: usize, signed: bool) -> Result<ExactMatrix> {
        let dim = self.check_cap(n)?;
        let step = if signed {
            -self.hs.q.recip()
        } else {
            Rat::one()
        };
        let mut acc = ExactMatrix::identity(dim);
        let mut partial = ExactMatrix::identity(dim);
        let mut weight = Rat::one();
        for j in (1..n).rev() {
            partial = partial.mul(&self.hs.r_op(j, n)?)?;
            weight *= &step;
            acc = acc.add(&partial.scale(&weight))?;
        }
        Ok(acc)
    }

    pub fn ensure_sym(&mut self, n: usize) -> Result<()> {
        while self.sym.len() <= n {
            let k = self.sym.len();
            let dim = self.check_cap(k)?;
            // once a level vanishes the recursion keeps it zero forever
            if self.sym[k - 1].is_zero() {
                self.sym.push(ExactMatrix::zeros(dim, dim));
                continue;
            }
            let lifted = self.sym[k - 1].kron(&ExactMatrix::identity(self.hs.dim));
            let next = lifted.mul(&self.coset_sum(k, false)?)?;
            self.sym.push(next);
        }
        Ok(())
    }

    pub fn ensure_alt(&mut self, n: usize) -> Result<()> {
        while self.alt.len() <= n {
            let k = self.alt.len();
            let dim = self.check_cap(k)?;
            if self.alt[k - 1].is_zero() {
                self.alt.push(ExactMatrix::zeros(dim, dim));
                continue;
            }
            let lifted = self.alt[k - 1].kron(&ExactMatrix::identity(self.hs.dim));
            let next = lifted.mul(&self.coset_sum(k, true)?)?;
            self.alt.push(next);
        }
        Ok(())
    }

    pub fn sym_hat(&self, n: usize) -> &ExactMatrix {
        &self.sym[n]
    }

    pub fn alt_hat(&self, n: usize) -> &ExactMatrix {
        &self.alt[n]
    }

    /// Trace of level n without materializing its matrix.
    pub fn level_trace(&mut self, n: usize, signed: bool) -> Result<Rat> {
        if n == 0 {
            return Ok(Rat::one());
        }
        let cached = if signed { &self.alt } else { &self.sym };
        if let Some(m) = cached.get(n) {
            return Ok(m.trace());
        }
        if signed {
            self.ensure_alt(n - 1)?;
        } else {
            self.ensure_sym(n - 1)?;
        }
        self.check_cap(n)?;
        let prev = if signed {
            &self.alt[n - 1]
        } else {
            &self.sym[n - 1]
        };
        if prev.is_zero() {
            return Ok(Rat::zero());
        }
        let coset = self.coset_sum(n, signed)?;
        // tr(kron(prev, I) * C) without forming the product
        let d = self.hs.dim;
        let mut acc = Rat::zero();
        for (i1, j1, v) in entry_iter(prev) {
            for t in 0..d {
                let row = i1 * d + t;
                let col = j1 * d + t;
                let w = coset.get(col, row);
                if !w.is_zero() {
                    acc += v.clone() * w;
                }
            }
        }
        Ok(acc)
    }
}
