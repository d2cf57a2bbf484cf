//! Shared fixtures for the benchmark suite.

use std::collections::BTreeMap;

use orbihom_core::algebra::{Algebra, AlgebraTwist};
use orbihom_core::facthom::DiskAlgebra1D;
use orbihom_core::field::FieldKind;
use orbihom_core::group::FiniteGroup;
use orbihom_core::matrix::{Matrix, SparseVec};

/// The largest coefficient pair in the acceptance corpus: 2x2 matrices with
/// the conjugation twist by diag(1, -1).
pub fn m2_conjugation_data() -> DiskAlgebra1D {
    let q = FieldKind::Rational;
    let a = Algebra::matrix_algebra(q, 2);
    let u = Matrix::from_i64_rows(q, &[vec![1, 0], vec![0, -1]]);
    let phi = AlgebraTwist::matrix_conjugation(&a, 2, &u).unwrap();
    DiskAlgebra1D::new(a, phi, BTreeMap::new()).unwrap()
}

pub fn qz2_data() -> DiskAlgebra1D {
    let q = FieldKind::Rational;
    let a = Algebra::group_algebra(q, &FiniteGroup::cyclic(2));
    let id = AlgebraTwist::identity(&a);
    DiskAlgebra1D::new(a, id, BTreeMap::new()).unwrap()
}

/// A structured sparse matrix shaped like a bar differential: shifted
/// difference blocks with small integer entries.
pub fn shift_difference_matrix(rows: usize, cols: usize) -> Matrix {
    let q = FieldKind::Rational;
    let columns: Vec<SparseVec> = (0..cols)
        .map(|j| {
            let a = (j * 7) % rows;
            let b = (j * 7 + 3) % rows;
            if a == b {
                vec![(a as u32, q.from_i64(2))]
            } else {
                let mut col = vec![(a as u32, q.from_i64(1)), (b as u32, q.from_i64(-1))];
                col.sort_by_key(|e| e.0);
                col
            }
        })
        .collect();
    Matrix::from_sparse_columns(q, rows, columns)
}
