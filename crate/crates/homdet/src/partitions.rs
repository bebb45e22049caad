//! Partition combinatorics: Pieri rules, hook validity, Hom dimensions.
//!
//! Simple comodules of the bialgebra attached to a birank (m,n) symmetry are
//! labeled by partitions whose (m+1)-st part is at most n. Tensor products
//! with one-row or one-column partitions decompose by the Pieri rules, so the
//! Hom dimensions needed here are counts of common strip extensions that pass
//! the hook filter.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates monotonicity; trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Rectangle with `rows` parts equal to `width`; empty if either is 0.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part, 0-based, zero beyond the last row.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Hook condition for birank (m,n): the (m+1)-st part is at most n.
pub fn hook_valid(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.get(m) <= n
}

/// All partitions obtained from `lambda` by adding a horizontal l-strip.
///
/// Results are sorted lexicographically descending.
pub fn pieri_row(lambda: &Partition, l: usize) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(rows);
    // row i may grow to at most the previous row of the result and must
    // stay at least lambda_i; interleaving bounds it by lambda_{i-1}
    fn rec(
        lambda: &Partition,
        i: usize,
        rows: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("constructed decreasing"));
            }
            return;
        }
        let base = lambda.get(i);
        let cap_interleave = if i == 0 { usize::MAX } else { lambda.get(i - 1) };
        let cap_shape = if i == 0 { usize::MAX } else { cur[i - 1] };
        let hi = base
            .saturating_add(remaining)
            .min(cap_interleave)
            .min(cap_shape);
        if hi < base {
            return;
        }
        // descend from the largest extension for lexicographic order
        for v in (base..=hi).rev() {
            cur.push(v);
            rec(lambda, i + 1, rows, remaining - (v - base), cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, rows, l, &mut cur, &mut out);
    out
}

/// All partitions obtained from `lambda` by adding a vertical k-strip.
///
/// Results are sorted lexicographically descending.
pub fn pieri_col(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.len() + k;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(rows);
    fn rec(
        lambda: &Partition,
        i: usize,
        rows: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows || (remaining == 0 && i >= lambda.len()) {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("constructed decreasing"));
            }
            return;
        }
        let base = lambda.get(i);
        let cap_shape = if i == 0 { usize::MAX } else { cur[i - 1] };
        // at most one new cell per row for a vertical strip
        for add in [1usize, 0] {
            if add > remaining {
                continue;
            }
            let v = base + add;
            if v > cap_shape || v == 0 {
                continue;
            }
            cur.push(v);
            rec(lambda, i + 1, rows, remaining - add, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, rows, k, &mut cur, &mut out);
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out.dedup();
    out
}

/// One Hom-dimension query between strip extensions of two partitions.
#[derive(Debug, Clone)]
pub struct HomQuery {
    pub alpha: Partition,
    /// Size of the one-row factor tensored onto `alpha`.
    pub row: usize,
    pub beta: Partition,
    /// Size of the one-column factor tensored onto `beta`.
    pub col: usize,
    /// Hook bound (m, n) for the ambient comodule category.
    pub hook: (usize, usize),
}

/// Dimension of the Hom space by counting common hook-valid constituents.
pub fn hom_dimension(query: &HomQuery) -> usize {
    let (m, n) = query.hook;
    let left = pieri_row(&query.alpha, query.row);
    let right = pieri_col(&query.beta, query.col);
    left.iter()
        .filter(|g| hook_valid(g, m, n) && right.contains(g))
        .count()
}

/// The three Hom dimensions controlling non-vanishing at birank (m,n).
pub fn verify_theorem1_homs(m: usize, n: usize) -> (usize, usize, usize) {
    let alpha = Partition::rectangle(n + 1, m);
    let beta = Partition::rectangle(n, m + 1);
    let query = |row: usize, col: usize| {
        hom_dimension(&HomQuery {
            alpha: alpha.clone(),
            row,
            beta: beta.clone(),
            col,
            hook: (m, n),
        })
    };
    let h0 = query(n, m);
    let h_minus = if n == 0 { 0 } else { query(n - 1, m + 1) };
    let h_plus = query(n + 1, m + 1);
    (h0, h_minus, h_plus)
}
