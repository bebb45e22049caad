//! Koszul bicomplex of a Hecke symmetry: differentials, homology, Berezinian.
//!
//! The bicomplex term at bidegree (k,l) is the quantum exterior power of V
//! tensored with the dual quantum symmetric power, realized as subspaces of
//! tensor powers cut out by the unnormalized symmetrizer sums. The
//! differential inserts the canonical element sum x_a (x) xi^a at the inner
//! edge and reprojects; the codifferential contracts the innermost pair
//! through the map derived from P. All computations happen in coordinates on
//! the terms, so matrices stay at the size of the graded pieces rather than
//! the ambient tensor powers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hecke::{HeckeSym, ProjectorTower};
use crate::matrix::{ExactMatrix, SparseVec};
use crate::rat::{qfact, qint, rat, rat_pow, Rat};
use crate::zoo::super_flip_matrix;
use crate::Limits;

/// Reverses the base-d digit string of an index of the given length.
fn rev_index(idx: usize, d: usize, n: usize) -> usize {
    let mut x = idx;
    let mut r = 0;
    for _ in 0..n {
        r = r * d + x % d;
        x /= d;
    }
    r
}

/// The insertion map sending v (x) w to the sum over a of v (x) x_a (x) xi^a (x) w.
pub fn dual_basis_insert(k: usize, l: usize, d: usize) -> ExactMatrix {
    let dl = d.pow(l as u32);
    let rows = d.pow((k + l + 2) as u32);
    let cols = d.pow((k + l) as u32);
    let mut entries = Vec::new();
    for i in 0..d.pow(k as u32) {
        for j in 0..dl {
            let col = i * dl + j;
            for a in 0..d {
                let row = (i * d + a) * dl * d + a * dl + j;
                entries.push((row, col, Rat::one()));
            }
        }
    }
    ExactMatrix::from_entries(rows, cols, entries)
}

/// A basis of a graded piece, with pivot rows for coordinate extraction.
struct TermBasis {
    basis_t: ExactMatrix,
    piv_rows: Vec<usize>,
    piv_inv: ExactMatrix,
}

impl TermBasis {
    fn new(basis: &ExactMatrix) -> Self {
        let (piv_rows, piv_inv) = basis
            .independent_rows()
            .expect("projector image basis has full column rank");
        TermBasis {
            basis_t: basis.transpose(),
            piv_rows,
            piv_inv,
        }
    }

    fn rank(&self) -> usize {
        self.basis_t.rows()
    }

    /// Coordinates of a vector lying in the span of the basis.
    fn coords(&self, v: &SparseVec) -> Vec<Rat> {
        let gathered: SparseVec = self
            .piv_rows
            .iter()
            .enumerate()
            .filter_map(|(i, &r)| {
                v.binary_search_by_key(&r, |e| e.0)
                    .ok()
                    .map(|pos| (i, v[pos].1.clone()))
            })
            .collect();
        let mut out = vec![Rat::zero(); self.rank()];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, w) in self.piv_inv.row_entries(i) {
                if let Ok(pos) = gathered.binary_search_by_key(j, |e| e.0) {
                    *slot += w * &gathered[pos].1;
                }
            }
        }
        #[cfg(debug_assertions)]
        {
            let weights: SparseVec = out
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect();
            let back = self.basis_t.linear_combination_of_rows(&weights);
            assert_eq!(&back, v, "vector escapes the graded piece");
        }
        out
    }
}

/// One tensor level: projectors and graded-piece bases for both sides.
struct Level {
    yhat_t: ExactMatrix,
    dxhat_t: ExactMatrix,
    lambda: TermBasis,
    sstar: TermBasis,
}

/// The Koszul bicomplex of a validated Hecke symmetry.
pub struct KoszulComplex<'a> {
    hs: &'a HeckeSym,
    tower: ProjectorTower<'a>,
    c0: ExactMatrix,
    levels: Vec<Level>,
    diff_cache: BTreeMap<(usize, usize), ExactMatrix>,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(hs: &'a HeckeSym, limits: Limits) -> Self {
        KoszulComplex {
            hs,
            tower: ProjectorTower::new(hs, limits),
            c0: hs.contraction_map(),
            levels: Vec::new(),
            diff_cache: BTreeMap::new(),
        }
    }

    pub fn hecke(&self) -> &HeckeSym {
        self.hs
    }

    /// Builds tensor levels 0..=top: projectors and graded-piece bases.
    fn ensure_levels(&mut self, top: usize) -> Result<()> {
        let d = self.hs.dim();
        while self.levels.len() <= top {
            let n = self.levels.len();
            self.tower.ensure_alt(n)?;
            self.tower.ensure_sym(n)?;
            let yhat = self.tower.alt_hat(n);
            let lambda = TermBasis::new(&yhat.column_space().0);
            let yhat_t = yhat.transpose();
            // dual symmetrizer: transpose conjugated by digit reversal
            let sym = self.tower.sym_hat(n);
            let mut entries = Vec::new();
            for row in 0..sym.rows() {
                for (col, v) in sym.row_entries(row) {
                    entries.push((rev_index(*col, d, n), rev_index(row, d, n), v.clone()));
                }
            }
            let dxhat = ExactMatrix::from_entries(sym.rows(), sym.cols(), entries);
            let sstar = TermBasis::new(&dxhat.column_space().0);
            self.levels.push(Level {
                yhat_t,
                dxhat_t: dxhat.transpose(),
                lambda,
                sstar,
            });
        }
        Ok(())
    }

    fn term_dim_raw(&self, k: usize, l: usize) -> usize {
        self.levels[k].lambda.rank() * self.levels[l].sstar.rank()
    }

    /// Dimension of the bicomplex term at (k,l).
    pub fn term_dim(&mut self, k: usize, l: usize) -> Result<usize> {
        self.ensure_levels(k.max(l))?;
        Ok(self.term_dim_raw(k, l))
    }

    /// The differential d: (k,l) -> (k+1,l+1) in term coordinates.
    pub fn differential_d(&mut self, k: usize, l: usize) -> Result<ExactMatrix> {
        self.ensure_levels(k.max(l) + 1)?;
        if let Some(m) = self.diff_cache.get(&(k, l)) {
            return Ok(m.clone());
        }
        let m = self.build_differential(k, l);
        self.diff_cache.insert((k, l), m.clone());
        Ok(m)
    }

    /// The codifferential d': (k,l) -> (k-1,l-1) in term coordinates.
    ///
    /// At the bicomplex boundary (k = 0 or l = 0) this is the zero map,
    /// represented with zero target dimension.
    pub fn codifferential_dprime(&mut self, k: usize, l: usize) -> Result<ExactMatrix> {
        self.ensure_levels(k.max(l))?;
        Ok(self.build_codifferential(k, l))
    }

    /// Pure differential construction; levels up to max(k,l)+1 must exist.
    fn build_differential(&self, k: usize, l: usize) -> ExactMatrix {
        let d = self.hs.dim();
        let src_l = &self.levels[k].lambda;
        let src_s = &self.levels[l].sstar;
        let tgt_l = &self.levels[k + 1].lambda;
        let tgt_s = &self.levels[l + 1].sstar;
        let (r1, r2) = (src_l.rank(), src_s.rank());
        let (t1, t2) = (tgt_l.rank(), tgt_s.rank());
        // q^k times the multiplicity pair [k+1][l+1] relative to the
        // normalized projectors, written with unnormalized sums
        let q = self.hs.q();
        let scale = rat_pow(q, k as i64)
            / (qfact(k, &q.recip()).expect("validated q admits q-factorials")
                * qfact(l, q).expect("validated q admits q-factorials"));
        let dl = d.pow(l as u32);
        let mut entries = Vec::new();
        for p in 0..r1 {
            let b = src_l.basis_t.row_entries(p);
            for s in 0..r2 {
                let c = src_s.basis_t.row_entries(s);
                let col = p * r2 + s;
                let mut acc = vec![vec![Rat::zero(); t2]; t1];
                for a in 0..d {
                    // append x_a on the exterior side, prepend xi^a on the dual side
                    let ins_b: SparseVec =
                        b.iter().map(|(i, v)| (*i * d + a, v.clone())).collect();
                    let u = self.levels[k + 1].yhat_t.linear_combination_of_rows(&ins_b);
                    if u.is_empty() {
                        continue;
                    }
                    let ins_c: SparseVec =
                        c.iter().map(|(j, v)| (a * dl + *j, v.clone())).collect();
                    let w = self.levels[l + 1].dxhat_t.linear_combination_of_rows(&ins_c);
                    if w.is_empty() {
                        continue;
                    }
                    outer_accumulate(&mut acc, &tgt_l.coords(&u), &tgt_s.coords(&w));
                }
                for (i, row) in acc.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            entries.push((i * t2 + j, col, v * &scale));
                        }
                    }
                }
            }
        }
        ExactMatrix::from_entries(t1 * t2, r1 * r2, entries)
    }

    /// Pure codifferential construction; levels up to max(k,l) must exist.
    fn build_codifferential(&self, k: usize, l: usize) -> ExactMatrix {
        let src_l = &self.levels[k].lambda;
        let src_s = &self.levels[l].sstar;
        let cols = src_l.rank() * src_s.rank();
        if k == 0 || l == 0 {
            return ExactMatrix::zeros(0, cols);
        }
        let d = self.hs.dim();
        let tgt_l = &self.levels[k - 1].lambda;
        let tgt_s = &self.levels[l - 1].sstar;
        let (t1, t2) = (tgt_l.rank(), tgt_s.rank());
        let dl1 = d.pow((l - 1) as u32);
        let mut entries = Vec::new();
        for p in 0..src_l.rank() {
            let b = src_l.basis_t.row_entries(p);
            for s in 0..src_s.rank() {
                let c = src_s.basis_t.row_entries(s);
                let col = p * src_s.rank() + s;
                // slice the dual part by its leading index
                let mut c_slices: Vec<SparseVec> = vec![Vec::new(); d];
                for (j, v) in c {
                    c_slices[j / dl1].push((j % dl1, v.clone()));
                }
                // contract the trailing exterior index against C0
                let mut g: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); d];
                for (idx, v) in b {
                    let (pre, t) = (idx / d, idx % d);
                    for (sp, row) in g.iter_mut().enumerate() {
                        let w = self.c0.get(sp, t);
                        if w.is_zero() {
                            continue;
                        }
                        *row.entry(pre).or_insert_with(Rat::zero) += v * &w;
                    }
                }
                // the slices already lie in the lower graded pieces, so no
                // reprojection is needed, only coordinate extraction
                let mut acc = vec![vec![Rat::zero(); t2]; t1];
                for (sp, slice) in c_slices.iter().enumerate() {
                    if slice.is_empty() {
                        continue;
                    }
                    let gv: SparseVec = g[sp]
                        .iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| (*i, v.clone()))
                        .collect();
                    if gv.is_empty() {
                        continue;
                    }
                    outer_accumulate(&mut acc, &tgt_l.coords(&gv), &tgt_s.coords(slice));
                }
                for (i, row) in acc.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            entries.push((i * t2 + j, col, v.clone()));
                        }
                    }
                }
            }
        }
        ExactMatrix::from_entries(t1 * t2, cols, entries)
    }

    /// Checks q d d' + d' d = q^k (rank_q R + [l-k]_q) on the (k,l) term.
    pub fn gurevich_identity(&mut self, k: usize, l: usize) -> Result<GurevichReport> {
        self.ensure_levels(k.max(l) + 1)?;
        let t = self.term_dim_raw(k, l);
        let expected =
            rat_pow(self.hs.q(), k as i64) * (self.hs.rank_q() + qint(l as i64 - k as i64, self.hs.q()));
        let d_out = self.differential_d(k, l)?;
        let dp_back = self.build_codifferential(k + 1, l + 1);
        let m1 = dp_back.mul(&d_out)?;
        let m2 = if k >= 1 && l >= 1 {
            let dp_out = self.build_codifferential(k, l);
            let d_back = self.differential_d(k - 1, l - 1)?;
            d_back.mul(&dp_out)?
        } else {
            ExactMatrix::zeros(t, t)
        };
        let op = m2.scale(self.hs.q()).add(&m1)?;
        if t == 0 {
            return Ok(GurevichReport {
                k,
                l,
                lhs_is_scalar: true,
                scalar: None,
                expected,
                matches: true,
            });
        }
        let s = op.get(0, 0);
        let lhs_is_scalar = op == ExactMatrix::identity(t).scale(&s);
        let matches = lhs_is_scalar && s == expected;
        Ok(GurevichReport {
            k,
            l,
            lhs_is_scalar,
            scalar: lhs_is_scalar.then_some(s),
            expected,
            matches,
        })
    }

    /// Homology dimensions for all bidegrees up to (kmax, lmax).
    ///
    /// Differentials stay within one diagonal l - k, so diagonals are
    /// processed independently.
    pub fn homology_table(&mut self, kmax: usize, lmax: usize) -> Result<KoszulTable> {
        self.ensure_levels(kmax.max(lmax) + 1)?;
        let mut diagonals: Vec<Vec<(usize, usize)>> = Vec::new();
        for c in -(kmax as i64)..=(lmax as i64) {
            let cells: Vec<(usize, usize)> = (0..=kmax)
                .filter_map(|k| {
                    let l = k as i64 + c;
                    (0..=lmax as i64).contains(&l).then_some((k, l as usize))
                })
                .collect();
            if !cells.is_empty() {
                diagonals.push(cells);
            }
        }
        let this: &Self = self;
        let computed = crate::par::par_map(diagonals, |cells| {
            cells
                .into_iter()
                .map(|(k, l)| ((k, l), this.build_differential(k, l).rank()))
                .collect::<Vec<_>>()
        });
        let mut rank_map = BTreeMap::new();
        for group in computed {
            for (key, r) in group {
                rank_map.insert(key, r);
            }
        }
        let entries = (0..=kmax)
            .map(|k| {
                (0..=lmax)
                    .map(|l| {
                        let term_dim = self.term_dim_raw(k, l);
                        let rank_out = rank_map[&(k, l)];
                        let rank_in = if k >= 1 && l >= 1 {
                            rank_map[&(k - 1, l - 1)]
                        } else {
                            0
                        };
                        let homology = term_dim
                            .checked_sub(rank_out + rank_in)
                            .expect("differential image escapes the kernel");
                        TableEntry {
                            term_dim,
                            rank_out,
                            rank_in,
                            homology,
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(KoszulTable {
            kmax,
            lmax,
            entries,
        })
    }

    /// Generator data at (m,n) in term coordinates: the reduced kernel
    /// vector spanning homology, and the incoming image matrix.
    fn generator_term_data(&mut self, m: usize, n: usize) -> Result<(Vec<Rat>, ExactMatrix)> {
        self.ensure_levels(m.max(n) + 1)?;
        let d_out = self.differential_d(m, n)?;
        let t = d_out.cols();
        let (rank_out, kernel) = d_out.rank_and_kernel();
        let im = if m >= 1 && n >= 1 {
            self.differential_d(m - 1, n - 1)?
        } else {
            ExactMatrix::zeros(t, 0)
        };
        let rank_in = im.rank();
        let dim = t
            .checked_sub(rank_out + rank_in)
            .expect("differential image escapes the kernel");
        if dim != 1 {
            return Err(Error::NotOneDimensional { k: m, l: n, dim });
        }
        let im_rows = im.transpose();
        for kv in &kernel {
            let sparse: SparseVec = kv
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect();
            let reduced = im_rows.reduce_vector_mod_rowspace(&sparse);
            if !reduced.is_empty() {
                let mut dense = vec![Rat::zero(); t];
                for (i, v) in reduced {
                    dense[i] = v;
                }
                return Ok((dense, im));
            }
        }
        unreachable!("one-dimensional homology always yields a surviving kernel vector");
    }

    /// The homology generator at (m,n) as an ambient tensor, first nonzero
    /// coordinate normalized to 1.
    pub fn homology_generator(&mut self, m: usize, n: usize) -> Result<Vec<Rat>> {
        let (kv, _) = self.generator_term_data(m, n)?;
        let d = self.hs.dim();
        let dn = d.pow(n as u32);
        let r2 = self.levels[n].sstar.rank();
        let mut out = vec![Rat::zero(); d.pow((m + n) as u32)];
        for (idx, v) in kv.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (p, s) = (idx / r2, idx % r2);
            for (i, bv) in self.levels[m].lambda.basis_t.row_entries(p) {
                for (j, cv) in self.levels[n].sstar.basis_t.row_entries(s) {
                    out[i * dn + j] += v * bv * cv;
                }
            }
        }
        let lead = out
            .iter()
            .find(|v| !v.is_zero())
            .cloned()
            .expect("homology generator is nonzero");
        for v in &mut out {
            *v /= &lead;
        }
        Ok(out)
    }

    /// Action of (z, zinv_t) on the (k,l) term, in term coordinates.
    ///
    /// Fails with NotCommuting when the action does not preserve the term.
    fn action_on_term(
        &self,
        k: usize,
        l: usize,
        z: &ExactMatrix,
        zinv_t: &ExactMatrix,
    ) -> Result<ExactMatrix> {
        let d = self.hs.dim();
        let dl = d.pow(l as u32);
        let act = kron_pow(z, k).kron(&kron_pow(zinv_t, l));
        let lam = &self.levels[k].lambda;
        let ss = &self.levels[l].sstar;
        let (r1, r2) = (lam.rank(), ss.rank());
        let mut entries = Vec::new();
        for p in 0..r1 {
            for s in 0..r2 {
                let mut dyad: SparseVec = Vec::new();
                for (i, bv) in lam.basis_t.row_entries(p) {
                    for (j, cv) in ss.basis_t.row_entries(s) {
                        dyad.push((i * dl + j, bv * cv));
                    }
                }
                let acted = act.apply(&dyad);
                // two-sided pivot solve for coordinates in the dyad basis
                let mut sub = Vec::with_capacity(r1);
                for &ri in &lam.piv_rows {
                    let mut row = Vec::with_capacity(r2);
                    for &cj in &ss.piv_rows {
                        let flat = ri * dl + cj;
                        let v = match acted.binary_search_by_key(&flat, |e| e.0) {
                            Ok(pos) => acted[pos].1.clone(),
                            Err(_) => Rat::zero(),
                        };
                        row.push(v);
                    }
                    sub.push(row);
                }
                let coords = lam
                    .piv_inv
                    .mul(&ExactMatrix::from_rows(sub))
                    .and_then(|m| m.mul(&ss.piv_inv.transpose()))
                    .expect("pivot blocks are square");
                // the coordinates are valid only if they reproduce the image
                let mut back: BTreeMap<usize, Rat> = BTreeMap::new();
                for i in 0..r1 {
                    for (j, x) in coords.row_entries(i) {
                        for (bi, bv) in lam.basis_t.row_entries(i) {
                            for (cj, cv) in ss.basis_t.row_entries(*j) {
                                let e = back.entry(bi * dl + cj).or_insert_with(Rat::zero);
                                *e += x * bv * cv;
                            }
                        }
                    }
                }
                back.retain(|_, v| !v.is_zero());
                let back_vec: SparseVec = back.into_iter().collect();
                if back_vec != acted {
                    return Err(Error::NotCommuting { k, l });
                }
                let col = p * r2 + s;
                for i in 0..r1 {
                    for (j, x) in coords.row_entries(i) {
                        entries.push((i * r2 + j, col, x.clone()));
                    }
                }
            }
        }
        Ok(ExactMatrix::from_entries(r1 * r2, r1 * r2, entries))
    }

    /// Compares the scalar action on the homology generator at (m,n) with
    /// the Berezinian det(A)/det(D) of a block-diagonal point.
    pub fn berezinian_check(
        &mut self,
        m: usize,
        n: usize,
        point: &SuperMatrixPoint,
    ) -> Result<BerezinianReport> {
        if *self.hs.matrix() != super_flip_matrix(m, n) {
            return Err(Error::Dimension(format!(
                "Berezinian check requires the super flip on {m}+{n} generators"
            )));
        }
        if point.a.rows() != m || point.d.rows() != n {
            return Err(Error::Dimension(format!(
                "point blocks {}|{} do not match ({m},{n})",
                point.a.rows(),
                point.d.rows()
            )));
        }
        let (kv, im) = self.generator_term_data(m, n)?;
        let z = block_diag(&point.a, &point.d);
        let zinv_t = z
            .inverse()
            .ok_or_else(|| Error::Dimension("point matrix is singular".into()))?
            .transpose();

        // the action must commute with both differentials at the generator
        let d_out = self.differential_d(m, n)?;
        let a_here = self.action_on_term(m, n, &z, &zinv_t)?;
        let a_up = self.action_on_term(m + 1, n + 1, &z, &zinv_t)?;
        if d_out.mul(&a_here)? != a_up.mul(&d_out)? {
            return Err(Error::NotCommuting { k: m, l: n });
        }
        if m >= 1 && n >= 1 {
            let dp_out = self.build_codifferential(m, n);
            let a_down = self.action_on_term(m - 1, n - 1, &z, &zinv_t)?;
            if dp_out.mul(&a_here)? != a_down.mul(&dp_out)? {
                return Err(Error::NotCommuting { k: m, l: n });
            }
        }

        // scalar on the homology line: acted generator = s*kv modulo the image
        let kv_sparse: SparseVec = kv
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        let acted = a_here.apply(&kv_sparse);
        let kv_col = ExactMatrix::from_entries(
            kv.len(),
            1,
            kv_sparse.iter().map(|(i, v)| (*i, 0, v.clone())),
        );
        let sys = kv_col.hcat(&im)?;
        let sol = sys
            .solve(&acted)
            .ok_or(Error::NotCommuting { k: m, l: n })?;
        let scalar_action = sol[0].clone();
        let berezinian = point.berezinian();
        let equal = scalar_action == berezinian;
        Ok(BerezinianReport {
            scalar_action,
            berezinian,
            equal,
        })
    }
}

/// Outer-product accumulation acc += p (x) r.
fn outer_accumulate(acc: &mut [Vec<Rat>], p: &[Rat], r: &[Rat]) {
    for (i, pv) in p.iter().enumerate() {
        if pv.is_zero() {
            continue;
        }
        for (j, rv) in r.iter().enumerate() {
            if rv.is_zero() {
                continue;
            }
            acc[i][j] += pv * rv;
        }
    }
}

/// k-fold Kronecker power.
fn kron_pow(m: &ExactMatrix, k: usize) -> ExactMatrix {
    let mut acc = ExactMatrix::identity(1);
    for _ in 0..k {
        acc = acc.kron(m);
    }
    acc
}

/// Block-diagonal matrix with blocks a and d.
fn block_diag(a: &ExactMatrix, d: &ExactMatrix) -> ExactMatrix {
    let m = a.rows();
    let n = d.rows();
    let mut entries = Vec::new();
    for r in 0..m {
        for (c, v) in a.row_entries(r) {
            entries.push((r, *c, v.clone()));
        }
    }
    for r in 0..n {
        for (c, v) in d.row_entries(r) {
            entries.push((m + r, m + c, v.clone()));
        }
    }
    ExactMatrix::from_entries(m + n, m + n, entries)
}

/// Result of checking the scalar identity at one bidegree.
#[derive(Debug, Clone)]
pub struct GurevichReport {
    pub k: usize,
    pub l: usize,
    pub lhs_is_scalar: bool,
    /// The scalar value, present when the left side is scalar.
    pub scalar: Option<Rat>,
    pub expected: Rat,
    pub matches: bool,
}

/// Ranks and homology dimension at one bidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub term_dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub homology: usize,
}

/// Homology dimensions over a rectangle of bidegrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulTable {
    pub kmax: usize,
    pub lmax: usize,
    /// Indexed entries[k][l].
    pub entries: Vec<Vec<TableEntry>>,
}

impl KoszulTable {
    pub fn homology(&self, k: usize, l: usize) -> usize {
        self.entries[k][l].homology
    }

    /// All bidegrees with nonzero homology, with their dimensions.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, row) in self.entries.iter().enumerate() {
            for (l, e) in row.iter().enumerate() {
                if e.homology != 0 {
                    out.push((k, l, e.homology));
                }
            }
        }
        out
    }

    /// The unique concentration point when homology is a single line.
    pub fn concentrated_at(&self) -> Option<(usize, usize)> {
        match self.nonzero().as_slice() {
            [(k, l, 1)] => Some((*k, *l)),
            _ => None,
        }
    }
}

impl fmt::Display for KoszulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k\\l")?;
        for l in 0..=self.lmax {
            write!(f, "{l:>4}")?;
        }
        writeln!(f)?;
        for k in 0..=self.kmax {
            write!(f, "{k:>3}")?;
            for l in 0..=self.lmax {
                write!(f, "{:>4}", self.entries[k][l].homology)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A block-diagonal group element acting on a super space.
#[derive(Debug, Clone)]
pub struct SuperMatrixPoint {
    pub a: ExactMatrix,
    pub d: ExactMatrix,
}

impl SuperMatrixPoint {
    /// Validates that both blocks are square and invertible.
    pub fn new(a: ExactMatrix, d: ExactMatrix) -> Result<Self> {
        for (name, block) in [("A", &a), ("D", &d)] {
            if block.rows() != block.cols() {
                return Err(Error::Dimension(format!("block {name} is not square")));
            }
            if block.det()?.is_zero() {
                return Err(Error::Dimension(format!("block {name} is singular")));
            }
        }
        Ok(SuperMatrixPoint { a, d })
    }

    /// Seeded random invertible point with small rational entries.
    pub fn random(m: usize, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let a = random_block(&mut rng, m);
            let d = random_block(&mut rng, n);
            if let Ok(p) = SuperMatrixPoint::new(a, d) {
                return p;
            }
        }
    }

    /// Classical Berezinian of the block-diagonal point: det(A)/det(D).
    pub fn berezinian(&self) -> Rat {
        let da = self.a.det().expect("block A is square");
        let dd = self.d.det().expect("block D is square");
        da / dd
    }
}

fn random_block(rng: &mut ChaCha8Rng, size: usize) -> ExactMatrix {
    let mut entries = Vec::new();
    for r in 0..size {
        for c in 0..size {
            let num = rng.random_range(-9i64..=9);
            let den = rng.random_range(1i64..=3);
            if num != 0 {
                entries.push((r, c, rat(num, den)));
            }
        }
    }
    ExactMatrix::from_entries(size, size, entries)
}

/// Outcome of one Berezinian comparison.
#[derive(Debug, Clone)]
pub struct BerezinianReport {
    pub scalar_action: Rat,
    pub berezinian: Rat,
    pub equal: bool,
}
