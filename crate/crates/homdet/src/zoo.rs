//! Built-in Hecke symmetries and a loader for user-supplied R-matrices.
//!
//! The built-ins cover the standard Drinfeld-Jimbo deformations, the super
//! flip on a graded space, the one-dimensional odd symmetry, and the Hecke
//! sum combinator. Arbitrary symmetries can be supplied as files holding
//! sparse matrix entries whose values are rational functions of q; they are
//! specialized at a chosen q and validated like the built-ins.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hecke::HeckeSym;
use crate::matrix::ExactMatrix;
use crate::rat::{parse_rat, rat_int, Rat};
use crate::ratfunc::RatFunc;

/// Drinfeld-Jimbo symmetry on N generators with eigenvalues q and -1.
pub fn drinfeld_jimbo(n: usize, q: &Rat) -> Result<HeckeSym> {
    if n == 0 {
        return Err(Error::Parse("drinfeld_jimbo requires N >= 1".into()));
    }
    HeckeSym::new(dj_matrix(n, q), q.clone())
}

/// Matrix of the Drinfeld-Jimbo symmetry, before axiom validation.
fn dj_matrix(n: usize, q: &Rat) -> ExactMatrix {
    let mut entries = Vec::new();
    let qm1 = q - rat_int(1);
    for i in 0..n {
        entries.push((i * n + i, i * n + i, q.clone()));
        for j in (i + 1)..n {
            // R(x_i (x) x_j) = x_j (x) x_i for i < j
            entries.push((j * n + i, i * n + j, rat_int(1)));
            // R(x_j (x) x_i) = q x_i (x) x_j + (q-1) x_j (x) x_i
            entries.push((i * n + j, j * n + i, q.clone()));
            entries.push((j * n + i, j * n + i, qm1.clone()));
        }
    }
    ExactMatrix::from_entries(n * n, n * n, entries)
}

/// Super flip on a space with m even and n odd generators, at q = 1.
pub fn super_flip(m: usize, n: usize) -> Result<HeckeSym> {
    if m + n == 0 {
        return Err(Error::Parse("super_flip requires m + n >= 1".into()));
    }
    HeckeSym::new(super_flip_matrix(m, n), rat_int(1))
}

/// Matrix of the super flip, before axiom validation.
pub(crate) fn super_flip_matrix(m: usize, n: usize) -> ExactMatrix {
    let d = m + n;
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let sign = if i >= m && j >= m { -1 } else { 1 };
            entries.push((j * d + i, i * d + j, rat_int(sign)));
        }
    }
    ExactMatrix::from_entries(d * d, d * d, entries)
}

/// The odd symmetry on one generator: R = [-1], exterior algebra free.
pub fn odd_point(q: &Rat) -> Result<HeckeSym> {
    HeckeSym::new(ExactMatrix::from_i64(&[&[-1]]), q.clone())
}

/// Hecke sum of two symmetries with the same q, on the direct sum space.
pub fn hecke_sum(r1: &HeckeSym, r2: &HeckeSym) -> Result<HeckeSym> {
    if r1.q() != r2.q() {
        return Err(Error::MismatchedQ {
            left: r1.q().clone(),
            right: r2.q().clone(),
        });
    }
    let q = r1.q().clone();
    let da = r1.dim();
    let db = r2.dim();
    let d = da + db;
    let mut entries = Vec::new();

    // diagonal blocks keep each summand's action
    let reindex = |flat: usize, dim: usize, off: usize| -> usize {
        let (a, b) = (flat / dim, flat % dim);
        (a + off) * d + (b + off)
    };
    for (src, off) in [(r1, 0), (r2, da)] {
        let dim = src.dim();
        let mat = src.matrix();
        for row in 0..dim * dim {
            for (col, v) in mat.row_entries(row) {
                entries.push((reindex(row, dim, off), reindex(*col, dim, off), v.clone()));
            }
        }
    }

    // mixed blocks: flip one way, flip plus the Hecke correction the other
    let qm1 = &q - rat_int(1);
    for i in 0..da {
        for j in da..d {
            entries.push((j * d + i, i * d + j, rat_int(1)));
            entries.push((i * d + j, j * d + i, q.clone()));
            entries.push((j * d + i, j * d + i, qm1.clone()));
        }
    }
    HeckeSym::new(ExactMatrix::from_entries(d * d, d * d, entries), q)
}

/// A parametric family of R-matrix entries in the variable q.
///
/// Indices are stored zero-based; `entries[(k,l,i,j)]` is the coefficient of
/// `x_k (x) x_l` in `R(x_i (x) x_j)`.
#[derive(Debug, Clone)]
pub struct RFamily {
    pub name: String,
    pub dim: usize,
    pub q_excluded: Vec<Rat>,
    pub entries: BTreeMap<(usize, usize, usize, usize), RatFunc>,
}

impl RFamily {
    /// Evaluates the family at q and validates the Hecke axioms.
    pub fn specialize(&self, q: &Rat) -> Result<HeckeSym> {
        if self.q_excluded.contains(q) {
            return Err(Error::PoleAtQ { q: q.clone() });
        }
        let d2 = self.dim * self.dim;
        let mut entries = Vec::new();
        for (&(k, l, i, j), f) in &self.entries {
            let v = f.eval(q)?;
            entries.push((k * self.dim + l, i * self.dim + j, v));
        }
        HeckeSym::new(ExactMatrix::from_entries(d2, d2, entries), q.clone())
    }
}

#[derive(Deserialize)]
struct FileRm {
    dim: usize,
    #[serde(default)]
    q_excluded: Vec<String>,
    #[serde(default)]
    entries: Vec<FileEntry>,
}

#[derive(Deserialize)]
struct FileEntry {
    out: [usize; 2],
    #[serde(rename = "in")]
    input: [usize; 2],
    value: String,
}

/// Parses the R-matrix file format into a family.
///
/// The format is TOML: `dim` (integer), optional `q_excluded` (list of
/// rational strings), and `[[entries]]` records with 1-based `out = [k, l]`,
/// `in = [i, j]`, and `value` (a polynomial fraction in q). Omitted entries
/// are zero.
pub fn parse_rmatrix(text: &str) -> Result<RFamily> {
    let file: FileRm =
        toml::from_str(text).map_err(|e| Error::Parse(format!("invalid R-matrix file: {e}")))?;
    if file.dim == 0 {
        return Err(Error::Parse("dimension must be at least 1".into()));
    }
    let q_excluded = file
        .q_excluded
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = BTreeMap::new();
    for e in &file.entries {
        let [k, l] = e.out;
        let [i, j] = e.input;
        for idx in [k, l, i, j] {
            if idx == 0 || idx > file.dim {
                return Err(Error::Parse(format!(
                    "index {idx} out of range 1..={} in entry out={:?} in={:?}",
                    file.dim, e.out, e.input
                )));
            }
        }
        let key = (k - 1, l - 1, i - 1, j - 1);
        if entries.contains_key(&key) {
            return Err(Error::Parse(format!(
                "duplicate entry for out={:?} in={:?}",
                e.out, e.input
            )));
        }
        entries.insert(key, RatFunc::parse(&e.value)?);
    }
    Ok(RFamily {
        name: "user".into(),
        dim: file.dim,
        q_excluded,
        entries,
    })
}

/// Reads an R-matrix file and specializes it at q.
pub fn load_rmatrix(path: &Path, q: &Rat) -> Result<HeckeSym> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut family = parse_rmatrix(&text)?;
    if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
        family.name = stem.to_string();
    }
    family.specialize(q)
}
