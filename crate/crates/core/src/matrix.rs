//! Dense and sparse matrices over an exact field, with rank, kernel, image
//! and linear-solve primitives.
//!
//! Bar and Hochschild differentials are extremely sparse (a handful of
//! entries per column out of tens of thousands of rows), so the elimination
//! core works column-by-column against a set of pivot columns keyed by their
//! minimal nonzero row. Non-pivot columns are discarded as soon as they
//! reduce to zero, which keeps memory bounded by the pivot fill rather than
//! by the matrix size.

use std::collections::HashMap;
use std::fmt;

use crate::field::{FieldElement, FieldKind};

/// A sparse column: `(row, value)` pairs sorted by row, values nonzero.
pub type SparseVec = Vec<(u32, FieldElement)>;

/// Matrices below this density are stored in sparse column-major form.
const SPARSE_DENSITY_THRESHOLD: f64 = 0.10;

#[derive(Clone, Debug)]
enum Storage {
    Dense(Vec<FieldElement>),
    Sparse(Vec<SparseVec>),
}

/// A `rows x cols` matrix over an exact field.
#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldKind,
    data: Storage,
}

impl Matrix {
    pub fn zero(field: FieldKind, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: Storage::Sparse(vec![Vec::new(); cols]),
        }
    }

    pub fn identity(field: FieldKind, n: usize) -> Matrix {
        let cols = (0..n).map(|i| vec![(i as u32, field.one())]).collect();
        Matrix {
            rows: n,
            cols: n,
            field,
            data: Storage::Sparse(cols),
        }
    }

    /// Builds from row-major data, choosing dense or sparse storage by the
    /// fraction of nonzero entries.
    pub fn from_rows(field: FieldKind, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix input"
        );
        let nnz = rows
            .iter()
            .flat_map(|r| r.iter())
            .filter(|e| !e.is_zero())
            .count();
        let total = nrows.max(1) * ncols.max(1);
        if (nnz as f64) / (total as f64) < SPARSE_DENSITY_THRESHOLD {
            let mut cols: Vec<SparseVec> = vec![Vec::new(); ncols];
            for (i, row) in rows.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    if !v.is_zero() {
                        cols[j].push((i as u32, v));
                    }
                }
            }
            Matrix {
                rows: nrows,
                cols: ncols,
                field,
                data: Storage::Sparse(cols),
            }
        } else {
            let data = rows.into_iter().flatten().collect();
            Matrix {
                rows: nrows,
                cols: ncols,
                field,
                data: Storage::Dense(data),
            }
        }
    }

    pub fn from_i64_rows(field: FieldKind, rows: &[Vec<i64>]) -> Matrix {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
            .collect();
        Matrix::from_rows(field, converted)
    }

    pub fn from_fn(
        field: FieldKind,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        Matrix::from_rows(field, data)
    }

    /// Builds directly from sparse columns (rows must be sorted, values nonzero).
    pub fn from_sparse_columns(field: FieldKind, rows: usize, cols: Vec<SparseVec>) -> Matrix {
        debug_assert!(cols.iter().all(|c| {
            c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|(r, v)| (*r as usize) < rows && !v.is_zero())
        }));
        Matrix {
            rows,
            cols: cols.len(),
            field,
            data: Storage::Sparse(cols),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols);
        match &self.data {
            Storage::Dense(d) => d[i * self.cols + j].clone(),
            Storage::Sparse(cols) => cols[j]
                .binary_search_by_key(&(i as u32), |e| e.0)
                .map(|k| cols[j][k].1.clone())
                .unwrap_or_else(|_| self.field.zero()),
        }
    }

    pub fn nnz(&self) -> usize {
        match &self.data {
            Storage::Dense(d) => d.iter().filter(|e| !e.is_zero()).count(),
            Storage::Sparse(cols) => cols.iter().map(|c| c.len()).sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn column(&self, j: usize) -> SparseVec {
        match &self.data {
            Storage::Dense(d) => (0..self.rows)
                .filter_map(|i| {
                    let v = &d[i * self.cols + j];
                    (!v.is_zero()).then(|| (i as u32, v.clone()))
                })
                .collect(),
            Storage::Sparse(cols) => cols[j].clone(),
        }
    }

    fn column_ref(&self, j: usize) -> Option<&SparseVec> {
        match &self.data {
            Storage::Dense(_) => None,
            Storage::Sparse(cols) => Some(&cols[j]),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for j in 0..self.cols {
            for (i, v) in self.column(j) {
                cols[i as usize].push((j as u32, v));
            }
        }
        // Entries arrive ordered by the old column index, which is the new row.
        Matrix::from_sparse_columns(self.field, self.cols, cols)
    }

    /// Applies the matrix to a sparse column vector.
    pub fn apply_to_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc: HashMap<u32, FieldElement> = HashMap::new();
        for (j, c) in v {
            for (i, a) in self.column(*j as usize) {
                let slot = acc.entry(i).or_insert_with(|| self.field.zero());
                *slot = slot.add(&a.mul(c));
            }
        }
        let mut out: SparseVec = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn apply_to_dense(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in self.column(j) {
                out[i as usize] = out[i as usize].add(&a.mul(x));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        assert_eq!(self.field, other.field, "field mismatch in matrix product");
        let cols = (0..other.cols)
            .map(|j| self.apply_to_sparse(&other.column(j)))
            .collect();
        Matrix::from_sparse_columns(self.field, self.rows, cols)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let cols = (0..self.cols)
            .map(|j| add_scaled(&self.column(j), &self.field.one(), &other.column(j)))
            .collect();
        Matrix::from_sparse_columns(self.field, self.rows, cols)
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let cols = (0..self.cols)
            .map(|j| {
                self.column(j)
                    .into_iter()
                    .map(|(i, v)| (i, v.mul(c)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Matrix::from_sparse_columns(self.field, self.rows, cols)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        let mut cols: Vec<SparseVec> = (0..self.cols).map(|j| self.column(j)).collect();
        cols.extend((0..other.cols).map(|j| other.column(j)));
        Matrix::from_sparse_columns(self.field, self.rows, cols)
    }

    /// Keeps the selected columns, in the given order.
    pub fn select_columns(&self, indices: &[usize]) -> Matrix {
        let cols = indices.iter().map(|&j| self.column(j)).collect();
        Matrix::from_sparse_columns(self.field, self.rows, cols)
    }

    /// Restricts to the given rows, renumbering them `0..indices.len()` in order.
    pub fn select_rows(&self, indices: &[usize]) -> Matrix {
        let lookup: HashMap<u32, u32> = indices
            .iter()
            .enumerate()
            .map(|(new, &old)| (old as u32, new as u32))
            .collect();
        let cols = (0..self.cols)
            .map(|j| {
                let mut col: SparseVec = self
                    .column(j)
                    .into_iter()
                    .filter_map(|(i, v)| lookup.get(&i).map(|&ni| (ni, v)))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        Matrix::from_sparse_columns(self.field, indices.len(), cols)
    }

    /// Exact rank by elimination. Dense storage uses row reduction with
    /// smallest-bit-size pivots; sparse storage uses column echelon reduction.
    pub fn rank(&self) -> usize {
        match &self.data {
            Storage::Dense(_) => self.dense_rank(),
            Storage::Sparse(cols) => {
                let mut elim = Eliminator::new(self.field, false);
                for col in cols {
                    elim.offer(col.clone(), None);
                }
                elim.rank()
            }
        }
    }

    fn dense_rank(&self) -> usize {
        let mut m: Vec<Vec<FieldElement>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for j in 0..self.cols {
            // Pivot: the nonzero entry of smallest bit size below the
            // eliminated block, to control coefficient growth.
            let pivot_row = (rank..self.rows)
                .filter(|&i| !m[i][j].is_zero())
                .min_by_key(|&i| (m[i][j].bit_size(), i));
            let Some(p) = pivot_row else { continue };
            m.swap(rank, p);
            let inv = m[rank][j].inv().expect("nonzero pivot");
            for k in j..self.cols {
                m[rank][k] = m[rank][k].mul(&inv);
            }
            for i in 0..self.rows {
                if i != rank && !m[i][j].is_zero() {
                    let c = m[i][j].clone();
                    for k in j..self.cols {
                        let t = m[rank][k].mul(&c);
                        m[i][k] = m[i][k].sub(&t);
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// A basis of `{ v : self . v = 0 }`, with `cols - rank` elements.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut elim = Eliminator::new(self.field, true);
        let mut kernel = Vec::new();
        for j in 0..self.cols {
            let col = match self.column_ref(j) {
                Some(c) => c.clone(),
                None => self.column(j),
            };
            if let Offer::Dependent(combo) = elim.offer(col, Some(j as u32)) {
                let mut v = vec![self.field.zero(); self.cols];
                for (idx, c) in combo {
                    v[idx as usize] = c;
                }
                kernel.push(v);
            }
        }
        kernel
    }

    /// Any `x` with `self . x = b`, or `None` when `b` is outside the image.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut elim = Eliminator::new(self.field, true);
        for j in 0..self.cols {
            elim.offer(self.column(j), Some(j as u32));
        }
        let rhs: SparseVec = b
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i as u32, v.clone()))
            .collect();
        let combo = elim.express(rhs)?;
        let mut x = vec![self.field.zero(); self.cols];
        for (idx, c) in combo {
            x[idx as usize] = c;
        }
        Some(x)
    }

    /// Solves `self . X = rhs` column by column; `None` if any column of
    /// `rhs` is outside the image.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let mut elim = Eliminator::new(self.field, true);
        for j in 0..self.cols {
            elim.offer(self.column(j), Some(j as u32));
        }
        let mut out_cols = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            let combo = elim.express(rhs.column(j))?;
            out_cols.push(combo);
        }
        Some(Matrix::from_sparse_columns(self.field, self.cols, out_cols))
    }

    /// Indices of a maximal set of linearly independent columns, in column order.
    pub fn column_space_pivots(&self) -> Vec<usize> {
        let mut elim = Eliminator::new(self.field, false);
        let mut pivots = Vec::new();
        for j in 0..self.cols {
            if let Offer::NewPivot = elim.offer(self.column(j), None) {
                pivots.push(j);
            }
        }
        pivots
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Matrix) -> bool {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return false;
        }
        (0..self.cols).all(|j| self.column(j) == other.column(j))
    }
}

impl Eq for Matrix {}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `a + c * b` on sparse columns (sorted merge).
pub fn add_scaled(a: &SparseVec, c: &FieldElement, b: &SparseVec) -> SparseVec {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let v = c.mul(&b[j].1);
                if !v.is_zero() {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = a[i].1.add(&c.mul(&b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (r, v) in &b[j..] {
        let v = c.mul(v);
        if !v.is_zero() {
            out.push((*r, v));
        }
    }
    out
}

enum Offer {
    NewPivot,
    Dependent(SparseVec),
}

/// Incremental column-echelon eliminator.
///
/// Pivot columns are normalized to 1 at their minimal nonzero row and keyed
/// by that row; reducing a fresh column against them strictly increases its
/// minimal row, so reduction terminates and pivot rows stay distinct.
struct Eliminator {
    field: FieldKind,
    pivots: HashMap<u32, SparseVec>,
    combos: HashMap<u32, SparseVec>,
    track: bool,
}

impl Eliminator {
    fn new(field: FieldKind, track: bool) -> Eliminator {
        Eliminator {
            field,
            pivots: HashMap::new(),
            combos: HashMap::new(),
            track,
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `col`; keeps it as a new pivot when independent, otherwise
    /// returns the dependency combination (if tracking).
    fn offer(&mut self, col: SparseVec, index: Option<u32>) -> Offer {
        let mut v = col;
        let mut combo: SparseVec = match index {
            Some(i) if self.track => vec![(i, self.field.one())],
            _ => Vec::new(),
        };
        loop {
            let Some(&(row, _)) = v.first() else {
                return Offer::Dependent(combo);
            };
            let Some(pivot) = self.pivots.get(&row) else {
                // New pivot: normalize the leading entry to 1.
                let lead = v[0].1.clone();
                let inv = lead.inv().expect("nonzero leading entry");
                if !lead.is_one() {
                    for (_, x) in v.iter_mut() {
                        *x = x.mul(&inv);
                    }
                    for (_, x) in combo.iter_mut() {
                        *x = x.mul(&inv);
                    }
                }
                self.pivots.insert(row, v);
                if self.track {
                    self.combos.insert(row, combo);
                }
                return Offer::NewPivot;
            };
            let c = v[0].1.neg();
            v = add_scaled(&v, &c, pivot);
            debug_assert!(v.first().is_none_or(|e| e.0 > row));
            if self.track {
                combo = add_scaled(&combo, &c, &self.combos[&row]);
            }
        }
    }

    /// Expresses `b` as a combination of previously offered columns, or
    /// `None` when `b` is outside their span. Requires tracking.
    fn express(&self, b: SparseVec) -> Option<SparseVec> {
        debug_assert!(self.track);
        let mut v = b;
        let mut combo: SparseVec = Vec::new();
        while let Some(&(row, _)) = v.first() {
            let pivot = self.pivots.get(&row)?;
            let c = v[0].1.neg();
            v = add_scaled(&v, &c, pivot);
            combo = add_scaled(&combo, &c, &self.combos[&row]);
        }
        // b + sum(combo . cols) = 0, so b = sum(-combo . cols).
        Some(
            combo
                .into_iter()
                .map(|(i, c)| (i, c.neg()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldKind {
        FieldKind::Rational
    }

    fn mat(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_i64_rows(q(), rows)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(q(), 2).rank(), 2);
        assert_eq!(Matrix::zero(q(), 3, 4).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // Second row is twice the first.
        assert_eq!(mat(&[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(q(), 2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = Matrix::zero(q(), 2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn kernel_of_sum_functional() {
        // [[1, 1]] has kernel spanned by (1, -1).
        let k = mat(&[vec![1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0], v[1].neg());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(5)];
        assert_eq!(m.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_underdetermined() {
        let m = mat(&[vec![1, 1]]);
        let b = vec![q().from_i64(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(x[0].add(&x[1]), q().from_i64(2));
    }

    #[test]
    fn solve_inconsistent() {
        let m = mat(&[vec![1], vec![1]]);
        let b = vec![q().from_i64(0), q().from_i64(1)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn solve_verifies() {
        let m = mat(&[vec![2, 1, 0], vec![0, 3, 1]]);
        let b = vec![q().from_i64(5), q().from_i64(7)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply_to_dense(&x), b);
    }

    #[test]
    fn kernel_vectors_are_in_the_kernel() {
        let m = mat(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply_to_dense(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn product_and_transpose() {
        let a = mat(&[vec![1, 2], vec![3, 4]]);
        let b = mat(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), mat(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), mat(&[vec![1, 3], vec![2, 4]]));
    }

    #[test]
    fn prime_field_rank_differs_from_rational() {
        // [[2]] over F2 is zero.
        let f2 = FieldKind::prime(2).unwrap();
        let m = Matrix::from_i64_rows(f2, &[vec![2]]);
        assert_eq!(m.rank(), 0);
        assert_eq!(mat(&[vec![2]]).rank(), 1);
    }

    #[test]
    fn column_space_pivots_select_independent_columns() {
        let m = mat(&[vec![1, 2, 0], vec![2, 4, 1]]);
        assert_eq!(m.column_space_pivots(), vec![0, 2]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-4i64..=4, 30)) {
            let rows: Vec<Vec<i64>> = entries.chunks(6).map(|c| c.to_vec()).collect();
            let m = mat(&rows);
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn rank_invariant_under_permutation(
            entries in proptest::collection::vec(-4i64..=4, 20),
            row_seed in 0usize..24,
            col_seed in 0usize..120,
        ) {
            let mut rows: Vec<Vec<i64>> = entries.chunks(5).map(|c| c.to_vec()).collect();
            let r = m_permute(row_seed, rows.len());
            rows = r.iter().map(|&i| rows[i].clone()).collect();
            let c = m_permute(col_seed, 5);
            let permuted: Vec<Vec<i64>> = rows
                .iter()
                .map(|row| c.iter().map(|&j| row[j]).collect())
                .collect();
            let original: Vec<Vec<i64>> = entries.chunks(5).map(|ch| ch.to_vec()).collect();
            prop_assert_eq!(mat(&original).rank(), mat(&permuted).rank());
        }

        #[test]
        fn dense_and_sparse_paths_agree(entries in proptest::collection::vec(-3i64..=3, 24)) {
            // The dense row reduction and the sparse column echelon are
            // independent implementations; they must agree on rank and
            // kernel dimension.
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let dense = Matrix::from_rows(
                q(),
                rows.iter()
                    .map(|r| r.iter().map(|&n| q().from_i64(n)).collect())
                    .collect(),
            );
            let sparse_cols: Vec<SparseVec> = (0..4)
                .map(|j| {
                    rows.iter()
                        .enumerate()
                        .filter(|(_, r)| r[j] != 0)
                        .map(|(i, r)| (i as u32, q().from_i64(r[j])))
                        .collect()
                })
                .collect();
            let sparse = Matrix::from_sparse_columns(q(), rows.len(), sparse_cols);
            prop_assert_eq!(dense.rank(), sparse.rank());
            prop_assert_eq!(dense.kernel_basis().len(), sparse.kernel_basis().len());
        }

        #[test]
        fn rank_equals_transpose_rank(entries in proptest::collection::vec(-3i64..=3, 24)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let m = mat(&rows);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    /// Deterministic permutation of `0..n` from a seed (Lehmer-code style).
    fn m_permute(seed: usize, n: usize) -> Vec<usize> {
        let mut items: Vec<usize> = (0..n).collect();
        let mut out = Vec::with_capacity(n);
        let mut s = seed;
        for k in (1..=n).rev() {
            out.push(items.remove(s % k));
            s /= k.max(1);
        }
        out
    }
}
