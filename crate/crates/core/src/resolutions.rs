//! Chain-level engines: the Hochschild complex `C_*(A, M)` and the
//! two-sided bar complex `B(M, A, N)`, plus twisted traces.
//!
//! Chain conventions: Hochschild chains are `M (x) A^{(x)n}`, with
//! `d(m (x) a_1 (x) .. (x) a_n) = m.a_1 (x) .. + sum_i (-1)^i m (x) .. a_i a_{i+1} .. + (-1)^n a_n.m (x) a_1 ..`;
//! bar chains are `M (x) A^{(x)n} (x) N`, first face moving `a_1` into `M`,
//! last face moving `a_n` into `N`.
//!
//! By default both complexes are normalized: the tensor legs run over
//! `A / K.1`, which shrinks degree `n` from `dim(A)^n` to `(dim(A) - 1)^n`
//! without changing homology. The unnormalized variant is kept for
//! cross-validation.

use crate::algebra::{Algebra, AlgebraTwist, Bimodule, RightModule, TwistKind};
use crate::complex::ChainComplex;
use crate::error::{AlgebraError, ComplexError};
use crate::field::{FieldElement, FieldKind};
use crate::matrix::{Matrix, SparseVec};

/// Specification of a Hochschild chain complex computation.
#[derive(Clone, Debug)]
pub struct HochschildComplexSpec {
    pub algebra: Algebra,
    pub coefficients: Bimodule,
    pub degree_cap: usize,
    pub normalized: bool,
}

/// Specification of a two-sided bar complex `B(M, A, N)`.
///
/// `left` is a right `A`-module (`M` receives `a_1`), and `right` is a left
/// `A`-module encoded as a right module over `A^op` (`N` receives `a_n`).
#[derive(Clone, Debug)]
pub struct BarComplexSpec {
    pub algebra: Algebra,
    pub left: RightModule,
    pub right: RightModule,
    pub degree_cap: usize,
    pub normalized: bool,
}

/// A tensor leg `A` or its normalization `A / K.1`, with the projected
/// products and the section back into `A` precomputed.
struct TensorLeg {
    /// Dimension of the leg.
    dim: usize,
    /// Leg basis index -> algebra basis index (the section).
    section: Vec<usize>,
    /// `prod[i][j]` = projection of `s(i) s(j)` to the leg, sparse.
    prod: Vec<Vec<SparseVec>>,
}

impl TensorLeg {
    fn new(algebra: &Algebra, normalized: bool) -> TensorLeg {
        let field = algebra.field();
        let dim_a = algebra.dim();
        if !normalized {
            let prod = (0..dim_a)
                .map(|i| {
                    (0..dim_a)
                        .map(|j| dense_to_sparse(algebra.basis_product(i, j)))
                        .collect()
                })
                .collect();
            return TensorLeg {
                dim: dim_a,
                section: (0..dim_a).collect(),
                prod,
            };
        }
        // Choose basis vectors completing the unit to a basis of A; they
        // form a complement of K.1 and serve as the section of A -> A/K.1.
        let mut cols: Vec<SparseVec> = vec![dense_to_sparse(algebra.unit())];
        for i in 0..dim_a {
            cols.push(vec![(i as u32, field.one())]);
        }
        let stacked = Matrix::from_sparse_columns(field, dim_a, cols);
        let pivots = stacked.column_space_pivots();
        debug_assert_eq!(pivots.len(), dim_a);
        debug_assert_eq!(pivots[0], 0);
        let section: Vec<usize> = pivots[1..].iter().map(|&c| c - 1).collect();
        // Projection: coordinates of each x in the basis (unit, e_{s1}, ...),
        // dropping the unit coordinate.
        let basis_cols: Vec<usize> = std::iter::once(0).chain(pivots[1..].iter().copied()).collect();
        let basis = stacked.select_columns(&basis_cols);
        let proj_of = |x: &[FieldElement]| -> SparseVec {
            let coords = basis.solve(x).expect("basis spans A");
            coords[1..]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u32, c.clone()))
                .collect()
        };
        let dim = dim_a - 1;
        let prod = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| proj_of(algebra.basis_product(section[i], section[j])))
                    .collect()
            })
            .collect();
        TensorLeg {
            dim,
            section,
            prod,
        }
    }
}

fn dense_to_sparse(v: &[FieldElement]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c.clone()))
        .collect()
}

/// Column `j` of a matrix as a sparse vector.
fn matrix_column(m: &Matrix, j: usize) -> SparseVec {
    m.column(j)
}

/// The Hochschild chain complex of `(A, M)` up to `degree_cap`.
///
/// Homology in degrees strictly below the cap agrees with the full complex;
/// the top degree is a truncation artifact and should be reported untrusted.
pub fn hochschild_complex(spec: &HochschildComplexSpec) -> Result<ChainComplex, ComplexError> {
    let a = &spec.algebra;
    assert_eq!(
        spec.coefficients.over, *a,
        "coefficient bimodule must be over the given algebra"
    );
    let field = a.field();
    let leg = TensorLeg::new(a, spec.normalized);
    let m_dim = spec.coefficients.dim;
    let cap = spec.degree_cap;

    let dims: Vec<usize> = (0..=cap).map(|n| m_dim * leg.dim.pow(n as u32)).collect();
    let mut diffs = Vec::with_capacity(cap);
    for n in 1..=cap {
        diffs.push(assemble_differential(
            field,
            dims[n - 1],
            m_dim,
            &leg,
            n,
            None,
            |face, m_idx, tuple| {
                hochschild_face(&spec.coefficients, &leg, face, m_idx, tuple)
            },
        ));
    }
    ChainComplex::new(field, 0, dims, diffs)
}

/// The two-sided bar complex `B(M, A, N)` up to `degree_cap`. Its homology
/// in trusted degrees computes `Tor^A(M, N)`.
pub fn bar_complex(spec: &BarComplexSpec) -> Result<ChainComplex, ComplexError> {
    let a = &spec.algebra;
    assert_eq!(spec.left.over, *a, "left module must be over the given algebra");
    assert_eq!(
        spec.right.over,
        a.opposite(),
        "right module must be over the opposite algebra (a left module)"
    );
    let field = a.field();
    let leg = TensorLeg::new(a, spec.normalized);
    let m_dim = spec.left.dim;
    let n_dim = spec.right.dim;
    let cap = spec.degree_cap;

    let dims: Vec<usize> = (0..=cap)
        .map(|n| m_dim * leg.dim.pow(n as u32) * n_dim)
        .collect();
    let mut diffs = Vec::with_capacity(cap);
    for n in 1..=cap {
        diffs.push(assemble_differential(
            field,
            dims[n - 1],
            m_dim,
            &leg,
            n,
            Some(n_dim),
            |face, m_idx, tuple| bar_face(&spec.left, &spec.right, &leg, face, m_idx, tuple),
        ));
    }
    ChainComplex::new(field, 0, dims, diffs)
}

/// The result of one face map applied to one basis chain: the surviving
/// tensor tuple plus a sparse expansion of the factor that was acted on.
enum FaceResult {
    /// Face 0 or face n: the module absorbed a tensor factor. Entries are
    /// (new module basis index, coefficient); `tuple` already shortened.
    Module(SparseVec),
    /// A middle face: two adjacent tensor factors multiplied. Entries are
    /// (leg basis index at the merged slot, coefficient).
    Middle(SparseVec),
}

fn hochschild_face(m: &Bimodule, leg: &TensorLeg, face: usize, m_idx: usize, tuple: &[usize]) -> FaceResult {
    let n = tuple.len();
    if face == 0 {
        // m . a_1 through the right action.
        let a1 = leg.section[tuple[0]];
        FaceResult::Module(matrix_column(&m.right[a1], m_idx))
    } else if face == n {
        // a_n . m through the left action.
        let an = leg.section[tuple[n - 1]];
        FaceResult::Module(matrix_column(&m.left[an], m_idx))
    } else {
        FaceResult::Middle(leg.prod[tuple[face - 1]][tuple[face]].clone())
    }
}

fn bar_face(
    m: &RightModule,
    n_mod: &RightModule,
    leg: &TensorLeg,
    face: usize,
    side_idx: usize,
    tuple: &[usize],
) -> FaceResult {
    let n = tuple.len();
    if face == 0 {
        let a1 = leg.section[tuple[0]];
        FaceResult::Module(matrix_column(&m.action[a1], side_idx))
    } else if face == n {
        // a_n . n: the left action of A on N, stored as the right action of
        // A^op (same basis indexing).
        let an = leg.section[tuple[n - 1]];
        FaceResult::Module(matrix_column(&n_mod.action[an], side_idx))
    } else {
        FaceResult::Middle(leg.prod[tuple[face - 1]][tuple[face]].clone())
    }
}

/// Assembles the degree-`n` differential of a (possibly two-sided) tensor
/// complex. `n_dim` is `None` for Hochschild (one module leg) and
/// `Some(dim N)` for the bar complex. `face_fn(face, module-ish index, tuple)`
/// must interpret `module-ish index` as the `M` index for face 0 and the `N`
/// index for face `n` (for Hochschild both are the `M` index).
fn assemble_differential(
    field: FieldKind,
    target_dim: usize,
    m_dim: usize,
    leg: &TensorLeg,
    n: usize,
    n_dim: Option<usize>,
    face_fn: impl Fn(usize, usize, &[usize]) -> FaceResult,
) -> Matrix {
    let right_dim = n_dim.unwrap_or(1);
    let tuple_count = leg.dim.pow(n as u32);
    let source_dim = m_dim * tuple_count * right_dim;
    if leg.dim == 0 {
        // Normalized ground field: no chains above degree zero.
        return Matrix::from_sparse_columns(field, target_dim, vec![]);
    }
    let mut cols: Vec<SparseVec> = Vec::with_capacity(source_dim);

    // Index layout: ((m * leg^n + tuple) * right + r), tuple big-endian in
    // a_1 .. a_n. Target layout identical with n-1 tensor slots.
    let target_tuple_count = leg.dim.pow(n as u32 - 1);
    let target_index = |m_idx: usize, tuple: &[usize], r_idx: usize| -> u32 {
        let mut t = 0usize;
        for &x in tuple {
            t = t * leg.dim + x;
        }
        debug_assert!(tuple.len() == n - 1);
        ((m_idx * target_tuple_count + t) * right_dim + r_idx) as u32
    };
    debug_assert_eq!(target_dim, m_dim * target_tuple_count * right_dim);

    let mut tuple = vec![0usize; n];
    for m_idx in 0..m_dim {
        // Reset odometer per module index.
        for x in tuple.iter_mut() {
            *x = 0;
        }
        loop {
            for r_idx in 0..right_dim {
                let mut entries: SparseVec = Vec::new();
                for face in 0..=n {
                    let sign_neg = face % 2 == 1;
                    match face_fn(face, if face == n && n_dim.is_some() { r_idx } else { m_idx }, &tuple) {
                        FaceResult::Module(expansion) => {
                            let rest: Vec<usize> = if face == 0 {
                                tuple[1..].to_vec()
                            } else {
                                tuple[..n - 1].to_vec()
                            };
                            for (new_idx, c) in expansion {
                                let c = if sign_neg { c.neg() } else { c };
                                let row = if face == 0 {
                                    target_index(new_idx as usize, &rest, r_idx)
                                } else if n_dim.is_some() {
                                    target_index(m_idx, &rest, new_idx as usize)
                                } else {
                                    target_index(new_idx as usize, &rest, r_idx)
                                };
                                entries.push((row, c));
                            }
                        }
                        FaceResult::Middle(expansion) => {
                            let mut rest: Vec<usize> = Vec::with_capacity(n - 1);
                            rest.extend_from_slice(&tuple[..face - 1]);
                            rest.push(0); // placeholder at merged slot
                            rest.extend_from_slice(&tuple[face + 1..]);
                            for (merged, c) in expansion {
                                rest[face - 1] = merged as usize;
                                let c = if sign_neg { c.neg() } else { c };
                                entries.push((target_index(m_idx, &rest, r_idx), c));
                            }
                        }
                    }
                }
                cols.push(combine_entries(entries, field));
            }
            // Advance the big-endian odometer over the tensor tuple.
            let mut slot = n;
            loop {
                if slot == 0 {
                    break;
                }
                slot -= 1;
                tuple[slot] += 1;
                if tuple[slot] < leg.dim {
                    break;
                }
                tuple[slot] = 0;
            }
            if tuple.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Matrix::from_sparse_columns(field, target_dim, cols)
}

/// Sorts entries by row and merges duplicates (faces may collide).
fn combine_entries(mut entries: SparseVec, _field: FieldKind) -> SparseVec {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (row, v) in entries {
        match out.last_mut() {
            Some((r, acc)) if *r == row => {
                *acc = acc.add(&v);
            }
            _ => out.push((row, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Which side the twist falls on in the trace relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceConvention {
    /// `f(ab) = f(phi(b) a)` (the default).
    TwistSecondArgument,
    /// `f(ab) = f(b phi(a))`.
    TwistFirstArgument,
}

/// A basis of the twisted trace space
/// `{ f : A -> K | f(ab) = f(phi(b) a) }` (or the flipped convention),
/// computed by solving the linear system over all basis pairs. Requires an
/// involutive algebra automorphism.
pub fn twisted_traces(
    a: &Algebra,
    phi: &AlgebraTwist,
    convention: TraceConvention,
) -> Result<Vec<Vec<FieldElement>>, AlgebraError> {
    if phi.kind != TwistKind::Automorphism {
        return Err(AlgebraError::TwistKindMismatch {
            expected: "automorphism",
            got: "anti-automorphism",
        });
    }
    if !phi.is_involution() {
        return Err(AlgebraError::TwistOrderMismatch(2));
    }
    let field = a.field();
    let dim = a.dim();
    let mut rows = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            // f(e_i e_j) - f(phi-side product) = 0 as a row over f(e_0..e_{dim-1}).
            let lhs = a.basis_product(i, j);
            let rhs = match convention {
                TraceConvention::TwistSecondArgument => {
                    let phi_j = phi.apply(&basis_unit(field, dim, j));
                    let ei = basis_unit(field, dim, i);
                    a.mul_vec(&phi_j, &ei)
                }
                TraceConvention::TwistFirstArgument => {
                    let phi_i = phi.apply(&basis_unit(field, dim, i));
                    let ej = basis_unit(field, dim, j);
                    a.mul_vec(&ej, &phi_i)
                }
            };
            let row: Vec<FieldElement> = (0..dim).map(|k| lhs[k].sub(&rhs[k])).collect();
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(field, rows).kernel_basis())
}

fn basis_unit(field: FieldKind, dim: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}
