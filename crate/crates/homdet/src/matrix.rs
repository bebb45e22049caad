//! Sparse exact matrices over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::par::par_map;
use crate::rat::Rat;

/// Sparse vector: sorted `(index, value)` pairs with nonzero values.
pub type SparseVec = Vec<(usize, Rat)>;

/// Row-major sparse matrix with exact rational entries.
///
/// Every row keeps its entries sorted by column; zeros are never stored, so
/// structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rat::one())]).collect();
        ExactMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let data = entries
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if v.is_zero() {
                    Vec::new()
                } else {
                    vec![(i, v.clone())]
                }
            })
            .collect();
        ExactMatrix {
            rows: entries.len(),
            cols: entries.len(),
            data,
        }
    }

    /// Builds from an entry list; duplicate positions are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rat)>,
    {
        let mut maps: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            if v.is_zero() {
                continue;
            }
            let slot = maps[r].entry(c).or_insert_with(Rat::zero);
            *slot += v;
        }
        let data = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        ExactMatrix { rows, cols, data }
    }

    /// Dense constructor for tests and small inputs.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        ExactMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Dense integer constructor for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| crate::rat::rat_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn row_entries(&self, r: usize) -> &[(usize, Rat)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols);
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    self.data[r].remove(k);
                } else {
                    self.data[r][k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    self.data[r].insert(k, (c, v));
                }
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_scaled(a, b, &Rat::one()))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let minus = -Rat::one();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_scaled(a, b, &minus))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix product; row-parallel when the `parallel` feature is on.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let indices: Vec<usize> = (0..self.rows).collect();
        let data = par_map(indices, |r| {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for (c, v) in &self.data[r] {
                for (c2, v2) in &other.data[*c] {
                    let slot = acc.entry(*c2).or_insert_with(Rat::zero);
                    *slot += v * v2;
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Applies to a sparse vector: `self * v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = Rat::zero();
            let mut i = 0;
            let mut j = 0;
            while i < row.len() && j < v.len() {
                match row[i].0.cmp(&v[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc += &row[i].1 * &v[j].1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            if !acc.is_zero() {
                out.push((r, acc));
            }
        }
        out
    }

    /// Weighted sum of rows: `sum_j w_j * row_j`, i.e. `w^T * self`.
    pub fn linear_combination_of_rows(&self, weights: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (j, w) in weights {
            for (c, v) in &self.data[*j] {
                let slot = acc.entry(*c).or_insert_with(Rat::zero);
                *slot += w * v;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Kronecker product with the big-endian index convention:
    /// entry `((i*p + k), (j*q + l)) = self[i,j] * other[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data: Vec<SparseVec> = Vec::with_capacity(rows);
        for ra in 0..self.rows {
            for rb in 0..other.rows {
                let mut row = Vec::new();
                for (ca, va) in &self.data[ra] {
                    for (cb, vb) in &other.data[rb] {
                        row.push((ca * other.cols + cb, va * vb));
                    }
                }
                data.push(row);
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn trace(&self) -> Rat {
        let mut acc = Rat::zero();
        for r in 0..self.rows.min(self.cols) {
            acc += self.get(r, r);
        }
        acc
    }

    /// Restriction to the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().map(|&r| self.data[r].clone()).collect();
        ExactMatrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Restriction to the given columns, renumbered to 0..k.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut lookup = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            lookup[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| lookup[*c] != usize::MAX)
                    .map(|(c, v)| (lookup[*c], v.clone()))
                    .collect()
            })
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = a.clone();
                row.extend(b.iter().map(|(c, v)| (c + self.cols, v.clone())));
                row
            })
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// Rank by fraction-exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Rank together with a canonical kernel basis.
    ///
    /// Kernel vectors are dense, scaled to primitive integer form with a
    /// positive leading entry, and ordered by free column.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let ech = self.echelon().into_reduced();
        let rank = ech.pivots.len();
        let mut is_pivot = vec![false; self.cols];
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (k, &(_, c)) in ech.pivots.iter().enumerate() {
            is_pivot[c] = true;
            pivot_of_col[c] = k;
        }
        let mut kernel = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for &(_, c) in &ech.pivots {
                let row = &ech.rows[pivot_of_col[c]];
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v[c] = -row[k].1.clone();
                }
            }
            kernel.push(canonical_vector(v));
        }
        (rank, kernel)
    }

    /// Indices of a maximal independent column set, with the restriction.
    pub fn column_space(&self) -> (ExactMatrix, Vec<usize>) {
        let ech = self.echelon();
        let cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut sorted = cols.clone();
        sorted.sort_unstable();
        (self.select_cols(&sorted), sorted)
    }

    /// Indices of rows forming an invertible square block, with its inverse.
    ///
    /// Requires full column rank.
    pub fn independent_rows(&self) -> Result<(Vec<usize>, ExactMatrix)> {
        let ech = self.transpose().echelon();
        if ech.pivots.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has column rank {} < {}",
                ech.pivots.len(),
                self.cols
            )));
        }
        let mut rows: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        rows.sort_unstable();
        let block = self.select_rows(&rows);
        let inv = block
            .inverse()
            .expect("pivot row block must be invertible");
        Ok((rows, inv))
    }

    /// Exact inverse, or None when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self
            .hcat(&Self::identity(n))
            .expect("same row count");
        let ech = aug.echelon().into_reduced();
        if ech.pivots.len() != n || ech.pivots.iter().any(|&(_, c)| c >= n) {
            return None;
        }
        let mut data = vec![Vec::new(); n];
        for (k, &(_, c)) in ech.pivots.iter().enumerate() {
            let row: SparseVec = ech.rows[k]
                .iter()
                .filter(|(j, _)| *j >= n)
                .map(|(j, v)| (j - n, v.clone()))
                .collect();
            data[c] = row;
        }
        Some(ExactMatrix {
            rows: n,
            cols: n,
            data,
        })
    }

    /// Solves `self * x = rhs`; None when inconsistent.
    pub fn solve(&self, rhs: &SparseVec) -> Option<Vec<Rat>> {
        let mut b = Self::zeros(self.rows, 1);
        for (r, v) in rhs {
            b.set(*r, 0, v.clone());
        }
        let aug = self.hcat(&b).expect("same row count");
        let ech = aug.echelon().into_reduced();
        if ech.pivots.iter().any(|&(_, c)| c >= self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (k, &(_, c)) in ech.pivots.iter().enumerate() {
            if let Ok(pos) = ech.rows[k].binary_search_by_key(&self.cols, |e| e.0) {
                x[c] = ech.rows[k][pos].1.clone();
            }
        }
        Some(x)
    }

    /// Determinant by dense elimination; intended for small matrices.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<Rat>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c)).collect())
            .collect();
        let mut det = Rat::one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !m[r][col].is_zero()) {
                Some(p) => p,
                None => return Ok(Rat::zero()),
            };
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= p.clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone() / &p;
                for c in col..n {
                    let v = m[r][c].clone() - &f * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
        Ok(det)
    }

    /// Reduces `v` modulo the row space of `self`.
    pub(crate) fn reduce_vector_mod_rowspace(&self, v: &SparseVec) -> SparseVec {
        let ech = self.echelon();
        let mut cur = v.clone();
        loop {
            let hit = cur.iter().find_map(|(c, val)| {
                ech.by_col.get(c).map(|&k| (k, val.clone()))
            });
            match hit {
                Some((k, val)) => {
                    cur = merge_scaled(&cur, &ech.rows[k], &-val);
                }
                None => return cur,
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon {
            pivots: Vec::new(),
            rows: Vec::new(),
            by_col: BTreeMap::new(),
        };
        for (orig, row) in self.data.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let mut cur = row.clone();
            loop {
                let lead = match cur.first() {
                    Some((c, _)) => *c,
                    None => break,
                };
                match ech.by_col.get(&lead) {
                    Some(&k) => {
                        let f = cur[0].1.clone();
                        cur = merge_scaled(&cur, &ech.rows[k], &-f);
                    }
                    None => {
                        // normalize so the leading entry is 1
                        let lv = cur[0].1.clone();
                        if !lv.is_one() {
                            for (_, v) in cur.iter_mut() {
                                *v /= lv.clone();
                            }
                        }
                        ech.by_col.insert(lead, ech.rows.len());
                        ech.pivots.push((orig, lead));
                        ech.rows.push(cur);
                        break;
                    }
                }
            }
        }
        ech
    }
}

/// Echelon form bookkeeping: pivot rows normalized to leading 1.
struct Echelon {
    /// `(original row index, pivot column)` per pivot, in insertion order.
    pivots: Vec<(usize, usize)>,
    rows: Vec<SparseVec>,
    by_col: BTreeMap<usize, usize>,
}

impl Echelon {
    /// Back-substitutes to reduced row echelon form.
    fn into_reduced(mut self) -> Self {
        let order: Vec<(usize, usize)> = self.by_col.iter().map(|(&c, &k)| (c, k)).collect();
        // eliminate each pivot column from all other rows, highest column first
        for &(c, k) in order.iter().rev() {
            let piv_row = self.rows[k].clone();
            for &(_, k2) in order.iter() {
                if k2 == k {
                    continue;
                }
                let f = match self.rows[k2].binary_search_by_key(&c, |e| e.0) {
                    Ok(pos) => self.rows[k2][pos].1.clone(),
                    Err(_) => continue,
                };
                self.rows[k2] = merge_scaled(&self.rows[k2], &piv_row, &-f);
            }
        }
        self
    }
}

/// Computes `a + s * b` for sorted sparse vectors.
fn merge_scaled(a: &SparseVec, b: &SparseVec, s: &Rat) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = &b[j].1 * s;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * s;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Scales to a primitive integer vector whose first nonzero entry is positive.
fn canonical_vector(v: Vec<Rat>) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    ints.into_iter().map(Rat::from_integer).collect()
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols)
                .map(|c| crate::rat::rat_str(&self.get(r, c)))
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn rank_and_kernel_example() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (rank, kernel) = a.rank_and_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel, vec![vec![rat_int(2), rat_int(-1)]]);
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let z = ExactMatrix::zeros(2, 3);
        let (rank, kernel) = z.rank_and_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
        for (i, v) in kernel.iter().enumerate() {
            let mut e = vec![rat_int(0); 3];
            e[i] = rat_int(1);
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = ExactMatrix::from_i64(&[&[2, 1], &[5, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(inv.mul(&a).unwrap(), ExactMatrix::identity(2));
        let sing = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn kron_convention() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        // entry ((i*2 + r), (j*2 + s)) = a[i,j] * b[r,s]
        assert_eq!(k.get(0, 1), rat_int(1));
        assert_eq!(k.get(1, 0), rat_int(1));
        assert_eq!(k.get(0, 3), rat_int(2));
        assert_eq!(k.get(3, 2), rat_int(4));
        assert_eq!(k.get(0, 0), rat_int(0));
        // mixed product rule (A x B)(C x D) = AC x BD
        let c = ExactMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let d = ExactMatrix::from_i64(&[&[2, 0], &[1, 1]]);
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let x = a.solve(&vec![(0, rat_int(5)), (1, rat_int(11))]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);
        let sing = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.solve(&vec![(0, rat_int(1))]).is_none());
        assert!(sing.solve(&vec![(0, rat_int(1)), (1, rat_int(2))]).is_some());
    }

    #[test]
    fn column_space_and_pivot_rows() {
        let a = ExactMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        let (basis, cols) = a.column_space();
        assert_eq!(cols, vec![0, 2]);
        assert_eq!(basis.cols(), 2);
        assert_eq!(basis.rank(), 2);

        let b = ExactMatrix::from_i64(&[&[0, 0], &[1, 0], &[1, 1]]);
        let (rows, inv) = b.independent_rows().unwrap();
        assert_eq!(rows, vec![1, 2]);
        assert_eq!(
            b.select_rows(&rows).mul(&inv).unwrap(),
            ExactMatrix::identity(2)
        );
    }

    #[test]
    fn det_values() {
        let a = ExactMatrix::from_i64(&[&[2, 1], &[5, 3]]);
        assert_eq!(a.det().unwrap(), rat_int(1));
        let b = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat_int(0)],
            vec![rat_int(7), rat(2, 3)],
        ]);
        assert_eq!(b.det().unwrap(), rat(1, 3));
        let sing = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det().unwrap(), rat_int(0));
    }

    #[test]
    fn apply_and_row_combination_agree() {
        let a = ExactMatrix::from_i64(&[&[1, 2, 0], &[0, 3, 4]]);
        let v: SparseVec = vec![(1, rat_int(2)), (2, rat_int(1))];
        let direct = a.apply(&v);
        assert_eq!(direct, vec![(0, rat_int(4)), (1, rat_int(10))]);
        let via_t = a.transpose().linear_combination_of_rows(&v);
        assert_eq!(via_t, direct);
    }
}
