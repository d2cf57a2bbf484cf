//! Inertia decomposition of a global quotient at the level of rational
//! Betti numbers: for each conjugacy class `[g]`, the fixed subcomplex
//! `X^g` with its centralizer action, and the total Betti vector of
//! `LL_{[g]} X^g / C(g)` computed through invariants.
//!
//! The degree grading is the plain cellular one; no age shift is applied.
//! Fixed loci that cut through open cells cannot be represented here: a
//! cell that an element maps to itself reversing orientation is detected
//! through its orientation character and rejected with a subdivision hint.

use crate::bredon::{ExpandedCell, GammaCwComplex};
use crate::complex::{BettiVector, ChainComplex, ComplexGroupAction};
use crate::error::InertiaError;
use crate::field::FieldKind;
use crate::matrix::{Matrix, SparseVec};

/// One inertia sector: the fixed subcomplex of a class representative with
/// the restricted centralizer action.
#[derive(Clone, Debug)]
pub struct InertiaPiece {
    pub class_representative: usize,
    pub fixed_complex: ChainComplex,
    pub centralizer_action: ComplexGroupAction,
}

/// The subcomplex of cells fixed by `g` (as cells, preserving orientation),
/// together with the action of the centralizer of `g` on it.
///
/// A cell fixed by `g` with orientation character `-1` at the relevant
/// element means the geometric fixed locus meets the open cell; the input
/// must be subdivided, so this is an error rather than a silent omission.
pub fn fixed_subcomplex(
    x: &GammaCwComplex,
    g: usize,
    field: FieldKind,
) -> Result<InertiaPiece, InertiaError> {
    let group = &x.group;
    let (full, cells) = x.expanded_complex(field)?;
    let dim_count = cells.len();

    // Indices (per degree) of the cells fixed by g.
    let mut fixed: Vec<Vec<usize>> = Vec::with_capacity(dim_count);
    for (degree, degree_cells) in cells.iter().enumerate() {
        let mut keep = Vec::new();
        for (idx, cell) in degree_cells.iter().enumerate() {
            match fixed_sign(x, degree, cell, g) {
                None => {}
                Some(1) => keep.push(idx),
                Some(_) => {
                    return Err(InertiaError::OrientationReversal {
                        element: g,
                        orbit: x.orbits()[degree][cell.orbit].id.clone(),
                    });
                }
            }
        }
        fixed.push(keep);
    }

    // Restrict the differentials. Boundaries of fixed cells stay inside the
    // fixed subcomplex because boundary morphisms only enlarge isotropy.
    let dims: Vec<usize> = fixed.iter().map(|f| f.len()).collect();
    let mut diffs = Vec::new();
    for n in 1..dim_count {
        let d = full.differential(n as i64);
        let restricted_cols = d.select_columns(&fixed[n]);
        for j in 0..restricted_cols.cols() {
            for (row, _) in restricted_cols.column(j) {
                debug_assert!(
                    fixed[n - 1].binary_search(&(row as usize)).is_ok(),
                    "boundary of a fixed cell left the fixed subcomplex"
                );
            }
        }
        diffs.push(restricted_cols.select_rows(&fixed[n - 1]));
    }
    let fixed_complex = ChainComplex::new(field, 0, dims, diffs)?;

    // Centralizer action on the fixed cells (with orientation signs).
    let (centralizer_group, embedding) = {
        let z = group.centralizer(g)?;
        group.subgroup_as_group(&z)
    };
    let matrices = embedding
        .iter()
        .map(|&h| {
            (0..dim_count)
                .map(|degree| action_on_fixed(x, &cells[degree], &fixed[degree], degree, h, field))
                .collect()
        })
        .collect();
    let centralizer_action =
        ComplexGroupAction::new(fixed_complex.clone(), centralizer_group, matrices)?;
    Ok(InertiaPiece {
        class_representative: g,
        fixed_complex,
        centralizer_action,
    })
}

/// `Some(sign)` when `g` maps the cell to itself, with the orientation sign
/// of the return; `None` when the cell moves.
fn fixed_sign(x: &GammaCwComplex, degree: usize, cell: &ExpandedCell, g: usize) -> Option<i8> {
    let group = &x.group;
    let orbit = &x.orbits()[degree][cell.orbit];
    // g . (rep I) = rep I  iff  rep^{-1} g rep lies in I.
    let conj = group.conjugate(group.inv(cell.rep), g);
    let pos = orbit.isotropy.elements.binary_search(&conj).ok()?;
    Some(if orbit.character.is_empty() {
        1
    } else {
        orbit.character[pos]
    })
}

fn action_on_fixed(
    x: &GammaCwComplex,
    cells: &[ExpandedCell],
    fixed: &[usize],
    degree: usize,
    h: usize,
    field: FieldKind,
) -> Matrix {
    let group = &x.group;
    let cols: Vec<SparseVec> = fixed
        .iter()
        .map(|&idx| {
            let cell = &cells[idx];
            let orbit = &x.orbits()[degree][cell.orbit];
            let moved = group.mul(h, cell.rep);
            // Resolve h.rep to its coset representative and sign.
            let rep = orbit
                .isotropy
                .elements
                .iter()
                .map(|&s| group.mul(moved, s))
                .min()
                .expect("nonempty isotropy");
            let j = group.mul(group.inv(rep), moved);
            let pos = orbit
                .isotropy
                .elements
                .binary_search(&j)
                .expect("same coset");
            let sign = if orbit.character.is_empty() {
                1
            } else {
                orbit.character[pos]
            };
            let target_full = cells
                .iter()
                .position(|c| c.orbit == cell.orbit && c.rep == rep)
                .expect("translated cell exists");
            let target = fixed
                .binary_search(&target_full)
                .expect("centralizer preserves the fixed subcomplex");
            vec![(target as u32, field.from_i64(sign as i64))]
        })
        .collect();
    Matrix::from_sparse_columns(field, fixed.len(), cols)
}

/// The inertia (Chen-Ruan) Betti numbers of `[X/G]`: the sum over
/// conjugacy classes `[g]` of the Betti numbers of `X^g / C(g)`, each
/// quotient computed as invariants of the centralizer action.
pub fn chen_ruan_betti(x: &GammaCwComplex, field: FieldKind) -> Result<BettiVector, InertiaError> {
    let pieces = inertia_pieces(x, field)?;
    let mut total = BettiVector {
        min_degree: 0,
        betti: vec![0; x.dimension() + 1],
    };
    for piece in &pieces {
        let invariants = piece.centralizer_action.invariants_subcomplex()?;
        total = total.add(&invariants.homology());
    }
    Ok(total)
}

/// All inertia sectors, one per conjugacy class, ordered by the class's
/// minimal element.
pub fn inertia_pieces(
    x: &GammaCwComplex,
    field: FieldKind,
) -> Result<Vec<InertiaPiece>, InertiaError> {
    x.group
        .conjugacy_classes()
        .iter()
        .map(|class| fixed_subcomplex(x, class[0], field))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bredon::library;
    use crate::group::FiniteGroup;

    fn q() -> FieldKind {
        FieldKind::Rational
    }

    #[test]
    fn identity_fixes_everything() {
        let x = library::torus_z2_rotation();
        let piece = fixed_subcomplex(&x, 0, q()).unwrap();
        assert_eq!(piece.fixed_complex.dims(), &[4, 8, 4]);
        assert_eq!(piece.fixed_complex.homology().betti, vec![1, 2, 1]);
    }

    #[test]
    fn torus_generator_fixes_four_vertices() {
        let x = library::torus_z2_rotation();
        let piece = fixed_subcomplex(&x, 1, q()).unwrap();
        assert_eq!(piece.fixed_complex.dims(), &[4, 0, 0]);
        assert_eq!(piece.fixed_complex.homology().betti, vec![4, 0, 0]);
    }

    #[test]
    fn free_circle_generator_fixes_nothing() {
        let x = library::rotation_circle(2);
        let piece = fixed_subcomplex(&x, 1, q()).unwrap();
        assert_eq!(piece.fixed_complex.dims(), &[0, 0]);
    }

    #[test]
    fn orientation_reversal_detected() {
        let x = library::reflection_circle_coarse();
        let r = fixed_subcomplex(&x, 1, q());
        assert!(matches!(r, Err(InertiaError::OrientationReversal { element: 1, .. })));
        // The identity sector is still fine.
        assert!(fixed_subcomplex(&x, 0, q()).is_ok());
    }

    #[test]
    fn chen_ruan_of_trivial_action_is_plain_betti() {
        let x = library::rotation_circle(1);
        assert_eq!(chen_ruan_betti(&x, q()).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn chen_ruan_of_torus_rotation() {
        // Identity sector: H(T^2 / Z_2) = H(S^2) = (1, 0, 1); generator
        // sector: four fixed points. Total (5, 0, 1).
        let x = library::torus_z2_rotation();
        assert_eq!(chen_ruan_betti(&x, q()).unwrap().betti, vec![5, 0, 1]);
    }

    #[test]
    fn chen_ruan_of_reflection_circle() {
        // Identity sector: interval (1, 0); generator sector: two fixed
        // points with trivial centralizer action (2, 0). Total (3, 0).
        let x = library::reflection_circle();
        assert_eq!(chen_ruan_betti(&x, q()).unwrap().betti, vec![3, 0]);
    }

    #[test]
    fn identity_sector_is_quotient_homology() {
        // The identity-class contribution equals H(X/G).
        for x in [library::torus_z2_rotation(), library::reflection_circle()] {
            let pieces = inertia_pieces(&x, q()).unwrap();
            let identity_piece = &pieces[0];
            assert_eq!(identity_piece.class_representative, 0);
            let quotient = identity_piece
                .centralizer_action
                .invariants_subcomplex()
                .unwrap()
                .homology();
            // Cross-check against the full-action invariants.
            let action = x.expanded_action(q()).unwrap();
            let expected = action.invariants_subcomplex().unwrap().homology();
            assert_eq!(quotient.betti, expected.betti);
        }
    }

    #[test]
    fn euler_characteristics_add_over_sectors() {
        let x = library::torus_z2_rotation();
        let pieces = inertia_pieces(&x, q()).unwrap();
        let total: i64 = pieces
            .iter()
            .map(|p| {
                p.centralizer_action
                    .invariants_subcomplex()
                    .unwrap()
                    .homology()
                    .euler_characteristic()
            })
            .sum();
        assert_eq!(total, chen_ruan_betti(&x, q()).unwrap().euler_characteristic());
    }

    #[test]
    fn chen_ruan_of_free_rotation_circle() {
        // Only the identity sector survives a free action; it contributes
        // the homology of the quotient circle.
        let x = library::rotation_circle(2);
        assert_eq!(chen_ruan_betti(&x, q()).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn s3_regular_orbit_chen_ruan() {
        // G = S3 acting on itself: X^g is empty unless g = e, and the
        // identity sector is a point. Chen-Ruan Betti = one point per
        // conjugacy class of the trivial... no: only the identity class
        // contributes, with X/G a point.
        let g = FiniteGroup::symmetric(3);
        let free = g.subgroup_from_elements(&[g.identity()]).unwrap();
        let x = library::orbit(&g, free);
        assert_eq!(chen_ruan_betti(&x, q()).unwrap().betti, vec![1]);
    }
}
