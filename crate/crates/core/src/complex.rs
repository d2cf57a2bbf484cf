//! Bounded chain complexes of finite-dimensional vector spaces.
//!
//! Homology is computed purely through ranks: over a field,
//! `dim H_n = dim C_n - rank d_n - rank d_{n+1}`. Every constructor verifies
//! `d ∘ d = 0`; quotients by finite group actions are computed as invariants
//! of the averaging projector, which over characteristic 0 agrees with the
//! homology of the quotient space (transfer).

use crate::error::ComplexError;
use crate::field::FieldKind;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;

/// A chain complex concentrated in degrees `min_degree ..= max_degree`.
///
/// `diffs[k]` is the differential out of degree `min_degree + k` into the
/// degree below; `diffs[0]` maps to the zero space and is stored as a
/// `0 x dims[0]` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    field: FieldKind,
    min_degree: i64,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
    /// Rank of the first differential above `max_degree`, recorded when this
    /// complex was obtained by truncating a larger one. Used so homology at
    /// the top degree matches the untruncated complex.
    incoming_rank_at_top: Option<usize>,
}

impl ChainComplex {
    /// `diffs[k]: C_{min_degree+k} -> C_{min_degree+k-1}` for `k >= 1`.
    pub fn new(
        field: FieldKind,
        min_degree: i64,
        dims: Vec<usize>,
        diffs_above_min: Vec<Matrix>,
    ) -> Result<ChainComplex, ComplexError> {
        assert_eq!(
            diffs_above_min.len() + 1,
            dims.len().max(1),
            "need one differential per degree above the minimum"
        );
        let mut diffs = Vec::with_capacity(dims.len());
        diffs.push(Matrix::zero(field, 0, dims.first().copied().unwrap_or(0)));
        diffs.extend(diffs_above_min);
        for (k, d) in diffs.iter().enumerate().skip(1) {
            let (want_rows, want_cols) = (dims[k - 1], dims[k]);
            if d.rows() != want_rows || d.cols() != want_cols {
                return Err(ComplexError::ShapeMismatch {
                    degree: min_degree + k as i64,
                    got_rows: d.rows(),
                    got_cols: d.cols(),
                    want_rows,
                    want_cols,
                });
            }
            if d.field() != field {
                return Err(ComplexError::FieldMismatch);
            }
        }
        let complex = ChainComplex {
            field,
            min_degree,
            dims,
            diffs,
            incoming_rank_at_top: None,
        };
        complex.verify_d_squared()?;
        Ok(complex)
    }

    /// The zero complex in a single degree.
    pub fn zero(field: FieldKind) -> ChainComplex {
        ChainComplex::new(field, 0, vec![0], vec![]).unwrap()
    }

    /// A complex concentrated in one degree.
    pub fn concentrated(field: FieldKind, degree: i64, dim: usize) -> ChainComplex {
        ChainComplex::new(field, degree, vec![dim], vec![]).unwrap()
    }

    fn verify_d_squared(&self) -> Result<(), ComplexError> {
        for k in 2..self.diffs.len() {
            // Column-by-column: d_{k-1}(d_k(e_j)) must vanish.
            let lower = &self.diffs[k - 1];
            let upper = &self.diffs[k];
            for j in 0..upper.cols() {
                let col = upper.column(j);
                if !lower.apply_to_sparse(&col).is_empty() {
                    return Err(ComplexError::BoundarySquareNonzero(
                        self.min_degree + k as i64,
                        self.min_degree + k as i64 - 2,
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_in_degree(&self, n: i64) -> usize {
        let k = n - self.min_degree;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// The differential out of degree `n` (zero matrix when out of range).
    pub fn differential(&self, n: i64) -> Matrix {
        let k = n - self.min_degree;
        if k <= 0 || k as usize >= self.diffs.len() {
            Matrix::zero(self.field, self.dim_in_degree(n - 1), self.dim_in_degree(n))
        } else {
            self.diffs[k as usize].clone()
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let sign = if (self.min_degree + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
                sign * d as i64
            })
            .sum()
    }

    /// Betti numbers `dim H_n` for every stored degree.
    pub fn homology(&self) -> BettiVector {
        let n = self.dims.len();
        let mut ranks = Vec::with_capacity(n + 1);
        for d in &self.diffs {
            ranks.push(d.rank());
        }
        ranks.push(self.incoming_rank_at_top.unwrap_or(0));
        let betti = (0..n)
            .map(|k| self.dims[k] - ranks[k] - ranks[k + 1])
            .collect();
        BettiVector {
            min_degree: self.min_degree,
            betti,
        }
    }

    /// Degreewise direct sum; the summands must share the field.
    pub fn direct_sum(pieces: &[ChainComplex]) -> Result<ChainComplex, ComplexError> {
        let Some(first) = pieces.first() else {
            return Ok(ChainComplex::zero(FieldKind::Rational));
        };
        let field = first.field;
        if pieces.iter().any(|c| c.field != field) {
            return Err(ComplexError::FieldMismatch);
        }
        let min = pieces.iter().map(|c| c.min_degree).min().unwrap();
        let max = pieces.iter().map(|c| c.max_degree()).max().unwrap();
        let len = (max - min + 1) as usize;
        let dims: Vec<usize> = (0..len)
            .map(|k| pieces.iter().map(|c| c.dim_in_degree(min + k as i64)).sum())
            .collect();
        let mut diffs = Vec::new();
        for k in 1..len {
            let n = min + k as i64;
            let rows: usize = dims[k - 1];
            let cols: usize = dims[k];
            let mut sparse_cols = Vec::with_capacity(cols);
            let mut row_offset = 0usize;
            let mut entries_per_piece: Vec<(usize, Matrix)> = Vec::new();
            for c in pieces {
                entries_per_piece.push((row_offset, c.differential(n)));
                row_offset += c.dim_in_degree(n - 1);
            }
            for (off, d) in &entries_per_piece {
                for j in 0..d.cols() {
                    sparse_cols.push(
                        d.column(j)
                            .into_iter()
                            .map(|(i, v)| (i + *off as u32, v))
                            .collect(),
                    );
                }
            }
            diffs.push(Matrix::from_sparse_columns(field, rows, sparse_cols));
        }
        ChainComplex::new(field, min, dims, diffs)
    }

    /// Drops all degrees above `top`. The rank of the first dropped
    /// differential is recorded, so homology in every kept degree (including
    /// `top`) agrees with this complex; callers reporting truncations of
    /// genuinely unbounded complexes should still flag `top` as untrusted.
    pub fn truncate(&self, top: i64) -> Result<ChainComplex, ComplexError> {
        if top < self.min_degree {
            return Err(ComplexError::TruncationBelowMin(top, self.min_degree));
        }
        if top >= self.max_degree() {
            return Ok(self.clone());
        }
        let keep = (top - self.min_degree + 1) as usize;
        let incoming = self.diffs[keep].rank();
        Ok(ChainComplex {
            field: self.field,
            min_degree: self.min_degree,
            dims: self.dims[..keep].to_vec(),
            diffs: self.diffs[..keep].to_vec(),
            incoming_rank_at_top: Some(incoming),
        })
    }
}

/// Betti numbers per degree, starting at `min_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub min_degree: i64,
    pub betti: Vec<usize>,
}

impl BettiVector {
    pub fn in_degree(&self, n: i64) -> usize {
        let k = n - self.min_degree;
        if k < 0 || k as usize >= self.betti.len() {
            0
        } else {
            self.betti[k as usize]
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| {
                let sign = if (self.min_degree + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
                sign * b as i64
            })
            .sum()
    }

    /// Degreewise sum.
    pub fn add(&self, other: &BettiVector) -> BettiVector {
        let min = self.min_degree.min(other.min_degree);
        let max = (self.min_degree + self.betti.len() as i64)
            .max(other.min_degree + other.betti.len() as i64)
            - 1;
        let betti = (0..=(max - min))
            .map(|k| self.in_degree(min + k) + other.in_degree(min + k))
            .collect();
        BettiVector { min_degree: min, betti }
    }

    /// Graded tensor product (Cauchy convolution), restricted to the degrees
    /// where both factors are known, i.e. up to `min` of the two tops.
    pub fn convolve(&self, other: &BettiVector) -> BettiVector {
        let min = self.min_degree + other.min_degree;
        let top = (self.min_degree + self.betti.len() as i64 - 1)
            .min(other.min_degree + other.betti.len() as i64 - 1);
        if self.betti.is_empty() || other.betti.is_empty() {
            return BettiVector { min_degree: min, betti: vec![] };
        }
        let betti = (min..=top)
            .map(|n| {
                (self.min_degree..=n - other.min_degree)
                    .map(|i| self.in_degree(i) * other.in_degree(n - i))
                    .sum()
            })
            .collect();
        BettiVector { min_degree: min, betti }
    }

    /// Equality of the entries in degrees `..= through`.
    pub fn agrees_through(&self, other: &BettiVector, through: i64) -> bool {
        let lo = self.min_degree.min(other.min_degree);
        (lo..=through).all(|n| self.in_degree(n) == other.in_degree(n))
    }
}

/// A finite group acting on a chain complex by chain maps.
#[derive(Clone, Debug)]
pub struct ComplexGroupAction {
    pub complex: ChainComplex,
    pub group: FiniteGroup,
    /// `matrices[g][k]`: action of element `g` in degree `min_degree + k`.
    matrices: Vec<Vec<Matrix>>,
}

impl ComplexGroupAction {
    pub fn new(
        complex: ChainComplex,
        group: FiniteGroup,
        matrices: Vec<Vec<Matrix>>,
    ) -> Result<ComplexGroupAction, ComplexError> {
        let degrees = complex.dims.len();
        if matrices.len() != group.order() || matrices.iter().any(|m| m.len() != degrees) {
            return Err(ComplexError::NotARepresentation(
                "one matrix per element per degree required".into(),
            ));
        }
        for (g, mats) in matrices.iter().enumerate() {
            for (k, m) in mats.iter().enumerate() {
                if m.rows() != complex.dims[k] || m.cols() != complex.dims[k] {
                    return Err(ComplexError::NotARepresentation(format!(
                        "matrix for element {g} in degree {k} has the wrong shape"
                    )));
                }
            }
        }
        let e = group.identity();
        let id_ok = (0..degrees).all(|k| matrices[e][k] == Matrix::identity(complex.field, complex.dims[k]));
        if !id_ok {
            return Err(ComplexError::NotARepresentation(
                "identity element does not act as the identity".into(),
            ));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                for k in 0..degrees {
                    if matrices[g][k].mul(&matrices[h][k]) != matrices[gh][k] {
                        return Err(ComplexError::NotARepresentation(format!(
                            "rho({g})rho({h}) != rho({g}{h}) in degree {k}"
                        )));
                    }
                }
            }
        }
        // Chain map: rho(g) d = d rho(g).
        for g in 0..group.order() {
            for k in 1..degrees {
                let d = &complex.diffs[k];
                let left = matrices[g][k - 1].mul(d);
                let right = d.mul(&matrices[g][k]);
                if left != right {
                    return Err(ComplexError::NotAChainMap(g, complex.min_degree + k as i64));
                }
            }
        }
        Ok(ComplexGroupAction {
            complex,
            group,
            matrices,
        })
    }

    pub fn matrix(&self, g: usize, degree_index: usize) -> &Matrix {
        &self.matrices[g][degree_index]
    }

    /// The averaging projector `(1/|G|) sum_g rho(g)` in each degree.
    pub fn averaging_projector(&self) -> Result<Vec<Matrix>, ComplexError> {
        let field = self.complex.field;
        let order = self.group.order();
        let char_p = field.characteristic();
        if char_p != 0 && (order as u32).is_multiple_of(char_p) {
            return Err(ComplexError::CharacteristicDividesOrder(char_p, order));
        }
        let inv_order = field.from_i64(order as i64).inv().expect("order nonzero in field");
        let mut projectors = Vec::with_capacity(self.complex.dims.len());
        for k in 0..self.complex.dims.len() {
            let n = self.complex.dims[k];
            let mut sum = Matrix::zero(field, n, n);
            for g in 0..order {
                sum = sum.add(&self.matrices[g][k]);
            }
            projectors.push(sum.scale(&inv_order));
        }
        Ok(projectors)
    }

    /// The subcomplex of invariants: the image of the averaging projector
    /// with the restricted differentials.
    pub fn invariants_subcomplex(&self) -> Result<ChainComplex, ComplexError> {
        let field = self.complex.field;
        let projectors = self.averaging_projector()?;
        // Basis of the image of each projector, as a dims[k] x inv_dim matrix.
        let bases: Vec<Matrix> = projectors
            .iter()
            .map(|p| {
                let pivots = p.column_space_pivots();
                p.select_columns(&pivots)
            })
            .collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mut diffs = Vec::new();
        for k in 1..dims.len() {
            // d maps invariants to invariants (d commutes with the action),
            // so d . basis_k factors through basis_{k-1}.
            let image = self.complex.diffs[k].mul(&bases[k]);
            let restricted = bases[k - 1]
                .solve_matrix(&image)
                .expect("differential preserves invariants");
            diffs.push(restricted);
        }
        ChainComplex::new(field, self.complex.min_degree, dims, diffs)
    }
}
