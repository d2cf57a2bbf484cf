//! One-dimensional global quotient orbifolds (circles and intervals) and
//! their invariants via collar-gluing excision.
//!
//! An orbifold here is a combinatorial descriptor: the acting group, the
//! action kind, and the coloured singular strata. That data determines the
//! framed equivalence class in dimension one, which is all the invariants
//! depend on.
//!
//! The evaluator decomposes a circle along a collar gluing, forms the
//! algebra carried by the collar (a tensor product of `A` and `A^op`
//! factors, one per component, opposite for the orientation-reversed one),
//! and computes the homology of the two-sided bar complex of the piece
//! modules over it. For a free rotation circle this is
//! `Tor_{A (x) A^op}(A, A_phi)`; for a reflection circle with singular
//! strata coloured `c, c'` it is `Tor_A(M_c, M_{c'})`.

use std::collections::BTreeMap;

use crate::algebra::{
    right_to_left_along, Algebra, AlgebraTwist, Bimodule, RightModule, TwistKind,
};
use crate::complex::BettiVector;
use crate::error::FacthomError;
use crate::group::FiniteGroup;
use crate::resolutions::{bar_complex, hochschild_complex, BarComplexSpec, HochschildComplexSpec};

/// How the cyclic group acts on the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// Trivial group: the plain circle.
    Trivial,
    /// Free rotation action of `Z_n`, `n >= 2`.
    Rotation,
    /// Reflection action of `Z_2`, with two fixed points.
    Reflection,
}

/// A one-dimensional global quotient circle.
///
/// Reflection circles carry exactly two singular strata, labeled by colours
/// that select coefficient modules; smooth strata always carry the default
/// colour and need no label.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbifoldCircle {
    pub group: FiniteGroup,
    pub action: ActionKind,
    pub stratum_colours: Vec<String>,
}

impl OrbifoldCircle {
    pub fn new(
        group: FiniteGroup,
        action: ActionKind,
        stratum_colours: Vec<String>,
    ) -> Result<OrbifoldCircle, FacthomError> {
        match action {
            ActionKind::Trivial => {
                if group.order() != 1 {
                    return Err(FacthomError::BadDescriptor(
                        "a trivial action on a circle requires the trivial group".into(),
                    ));
                }
                if !stratum_colours.is_empty() {
                    return Err(FacthomError::BadDescriptor(
                        "a trivial-action circle has no singular strata".into(),
                    ));
                }
            }
            ActionKind::Rotation => {
                if group.order() < 2 || !is_cyclic(&group) {
                    return Err(FacthomError::BadDescriptor(
                        "a rotation circle requires a cyclic group of order >= 2".into(),
                    ));
                }
                if !stratum_colours.is_empty() {
                    return Err(FacthomError::BadDescriptor(
                        "a rotation circle is free and has no singular strata".into(),
                    ));
                }
            }
            ActionKind::Reflection => {
                if group.order() != 2 {
                    return Err(FacthomError::BadDescriptor(
                        "a reflection circle requires Z_2".into(),
                    ));
                }
                if stratum_colours.len() != 2 {
                    return Err(FacthomError::BadDescriptor(
                        "a reflection circle has exactly 2 singular strata".into(),
                    ));
                }
            }
        }
        Ok(OrbifoldCircle {
            group,
            action,
            stratum_colours,
        })
    }

    pub fn trivial_circle() -> OrbifoldCircle {
        OrbifoldCircle::new(FiniteGroup::trivial(), ActionKind::Trivial, vec![]).unwrap()
    }

    pub fn rotation_circle(n: usize) -> OrbifoldCircle {
        OrbifoldCircle::new(FiniteGroup::cyclic(n), ActionKind::Rotation, vec![]).unwrap()
    }

    pub fn reflection_circle(colour0: &str, colour1: &str) -> OrbifoldCircle {
        OrbifoldCircle::new(
            FiniteGroup::cyclic(2),
            ActionKind::Reflection,
            vec![colour0.to_string(), colour1.to_string()],
        )
        .unwrap()
    }
}

fn is_cyclic(g: &FiniteGroup) -> bool {
    g.elements().any(|x| g.generated_subgroup(&[x]).order() == g.order())
}

/// A one-dimensional orbifold: a circle or an interval (local model).
#[derive(Clone, Debug, PartialEq)]
pub enum Orbifold1D {
    Circle(OrbifoldCircle),
    /// A free orbit of intervals `[D_e / Gamma]`; evaluates to the algebra.
    FreeInterval,
    /// A reflection half-interval `[D_{Z_2} / Z_2]` with a coloured fixed
    /// point; evaluates to the module for that colour.
    SingularInterval(String),
}

/// Local models appearing as gluing pieces and collar components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalModel {
    /// A free orbit of arcs, `[D_e / Gamma]`.
    FreeArcOrbit,
    /// A half-interval around a reflection fixed point, `[D_{Z_2} / Z_2]`.
    SingularHalfInterval,
}

/// One of the two closed pieces of a collar gluing.
#[derive(Clone, Debug, PartialEq)]
pub struct GluingPiece {
    pub model: LocalModel,
    /// Whether the module structure over the collar algebra picks up the
    /// deck-transformation twist (the far adjacency routes through `phi`).
    pub twisted: bool,
    /// Colour of the singular stratum, for singular pieces.
    pub colour: Option<String>,
}

/// A collar component with its traversal orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct CollarComponent {
    pub model: LocalModel,
    pub reversed: bool,
}

/// A collar gluing of a circle into two pieces over a collar. The
/// positively-oriented side acts on the left factor of the collar algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct CollarGluing1D {
    pub positive: GluingPiece,
    pub negative: GluingPiece,
    pub collar: Vec<CollarComponent>,
}

/// The canonical collar gluing of a circle.
///
/// Rotation (and trivial) circles decompose into two free arc orbits glued
/// over two free arc orbits, the second traversed in reverse; the reflection
/// circle decomposes into its two singular half-intervals over a single free
/// orbit of arcs.
pub fn standard_gluing(o: &OrbifoldCircle) -> CollarGluing1D {
    match o.action {
        ActionKind::Trivial | ActionKind::Rotation => CollarGluing1D {
            positive: GluingPiece {
                model: LocalModel::FreeArcOrbit,
                twisted: false,
                colour: None,
            },
            negative: GluingPiece {
                model: LocalModel::FreeArcOrbit,
                twisted: o.action == ActionKind::Rotation,
                colour: None,
            },
            collar: vec![
                CollarComponent {
                    model: LocalModel::FreeArcOrbit,
                    reversed: false,
                },
                CollarComponent {
                    model: LocalModel::FreeArcOrbit,
                    reversed: true,
                },
            ],
        },
        ActionKind::Reflection => CollarGluing1D {
            positive: GluingPiece {
                model: LocalModel::SingularHalfInterval,
                twisted: false,
                colour: Some(o.stratum_colours[0].clone()),
            },
            negative: GluingPiece {
                model: LocalModel::SingularHalfInterval,
                twisted: false,
                colour: Some(o.stratum_colours[1].clone()),
            },
            collar: vec![CollarComponent {
                model: LocalModel::FreeArcOrbit,
                reversed: false,
            }],
        },
    }
}

/// A second, genuinely different collar gluing of a rotation or trivial
/// circle: the roles of the two pieces are exchanged, so the twist sits on
/// the positive side. Excision says the invariant cannot tell the two apart.
pub fn swapped_gluing(o: &OrbifoldCircle) -> Result<CollarGluing1D, FacthomError> {
    match o.action {
        ActionKind::Trivial | ActionKind::Rotation => {
            let mut g = standard_gluing(o);
            std::mem::swap(&mut g.positive.twisted, &mut g.negative.twisted);
            Ok(g)
        }
        ActionKind::Reflection => {
            // Swap which singular point is the positive piece.
            let mut g = standard_gluing(o);
            std::mem::swap(&mut g.positive, &mut g.negative);
            Ok(g)
        }
    }
}

fn validate_gluing(o: &OrbifoldCircle, g: &CollarGluing1D) -> Result<(), FacthomError> {
    match o.action {
        ActionKind::Trivial | ActionKind::Rotation => {
            let free_pieces = g.positive.model == LocalModel::FreeArcOrbit
                && g.negative.model == LocalModel::FreeArcOrbit;
            let reversed_count = g.collar.iter().filter(|c| c.reversed).count();
            let collar_free = g.collar.iter().all(|c| c.model == LocalModel::FreeArcOrbit);
            if !free_pieces || g.collar.len() != 2 || reversed_count != 1 || !collar_free {
                return Err(FacthomError::DecompositionInvalid(
                    "a free circle glues two free arc orbits over two free arc orbits, one reversed"
                        .into(),
                ));
            }
            let twists = [g.positive.twisted, g.negative.twisted];
            let expected = usize::from(o.action == ActionKind::Rotation);
            if twists.iter().filter(|&&t| t).count() != expected {
                return Err(FacthomError::DecompositionInvalid(format!(
                    "expected exactly {expected} twisted piece(s) for this action"
                )));
            }
        }
        ActionKind::Reflection => {
            let singular_pieces = g.positive.model == LocalModel::SingularHalfInterval
                && g.negative.model == LocalModel::SingularHalfInterval;
            let collar_ok = g.collar.len() == 1
                && g.collar[0].model == LocalModel::FreeArcOrbit
                && !g.collar[0].reversed;
            if !singular_pieces || !collar_ok {
                return Err(FacthomError::DecompositionInvalid(
                    "a reflection circle glues two singular half-intervals over one free arc orbit"
                        .into(),
                ));
            }
            let mut colours: Vec<String> = [&g.positive, &g.negative]
                .iter()
                .filter_map(|p| p.colour.clone())
                .collect();
            colours.sort();
            let mut expected = o.stratum_colours.clone();
            expected.sort();
            if colours != expected {
                return Err(FacthomError::DecompositionInvalid(
                    "gluing piece colours do not match the orbifold's strata".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Coefficient data for a family of one-dimensional singularity types: the
/// algebra with its twist on the smooth (free) stratum, and a pointed right
/// module per declared singular colour.
#[derive(Clone, Debug)]
pub struct DiskAlgebra1D {
    pub smooth: Algebra,
    pub twist: AlgebraTwist,
    singular: BTreeMap<String, RightModule>,
}

impl DiskAlgebra1D {
    pub fn new(
        smooth: Algebra,
        twist: AlgebraTwist,
        singular: BTreeMap<String, RightModule>,
    ) -> Result<DiskAlgebra1D, FacthomError> {
        if twist.algebra != smooth {
            return Err(FacthomError::BadDescriptor(
                "twist is not defined on the smooth-stratum algebra".into(),
            ));
        }
        for (colour, module) in &singular {
            if module.over != smooth {
                return Err(FacthomError::BadDescriptor(format!(
                    "module for colour '{colour}' is not over the smooth-stratum algebra"
                )));
            }
            if module.marked_point.is_none() {
                return Err(FacthomError::BadDescriptor(format!(
                    "module for colour '{colour}' has no marked point"
                )));
            }
        }
        Ok(DiskAlgebra1D {
            smooth,
            twist,
            singular,
        })
    }

    /// The declared family of colours for the reflection singularity type.
    pub fn singular_colours(&self) -> impl Iterator<Item = &String> {
        self.singular.keys()
    }

    pub fn singular_module(&self, colour: &str) -> Result<&RightModule, FacthomError> {
        self.singular
            .get(colour)
            .ok_or_else(|| FacthomError::MissingCoefficient(colour.to_string()))
    }
}

/// The outcome of an excision evaluation.
#[derive(Clone, Debug)]
pub struct ExcisionResult {
    pub betti: BettiVector,
    pub decomposition_used: Option<CollarGluing1D>,
    /// Degrees `0 ..= trusted_through` agree with the untruncated invariant.
    pub trusted_through: i64,
}

/// The algebra assigned to the collar: the tensor product over its
/// components of `A` (positive orientation) and `A^op` (reversed).
pub fn collar_algebra(g: &CollarGluing1D, data: &DiskAlgebra1D) -> Result<Algebra, FacthomError> {
    let mut acc: Option<Algebra> = None;
    for comp in &g.collar {
        if comp.model != LocalModel::FreeArcOrbit {
            return Err(FacthomError::DecompositionInvalid(
                "collar components must be free arc orbits".into(),
            ));
        }
        let factor = if comp.reversed {
            data.smooth.opposite()
        } else {
            data.smooth.clone()
        };
        acc = Some(match acc {
            None => factor,
            Some(prev) => Algebra::tensor(&prev, &factor).map_err(FacthomError::Algebra)?,
        });
    }
    acc.ok_or_else(|| FacthomError::DecompositionInvalid("empty collar".into()))
}

fn ensure_automorphism(twist: &AlgebraTwist) -> Result<AlgebraTwist, FacthomError> {
    if twist.kind == TwistKind::Automorphism {
        return Ok(twist.clone());
    }
    AlgebraTwist::new(
        twist.algebra.clone(),
        twist.matrix.clone(),
        TwistKind::Automorphism,
        twist.order,
    )
    .map_err(FacthomError::Algebra)
}

fn ensure_anti_automorphism(twist: &AlgebraTwist) -> Result<AlgebraTwist, FacthomError> {
    if twist.kind == TwistKind::AntiAutomorphism {
        return Ok(twist.clone());
    }
    // A map can satisfy both laws (identity on a commutative algebra);
    // re-verify the anti law rather than rejecting outright.
    AlgebraTwist::new(
        twist.algebra.clone(),
        twist.matrix.clone(),
        TwistKind::AntiAutomorphism,
        twist.order,
    )
    .map_err(FacthomError::Algebra)
}

/// Evaluates the invariant of a circle along a specific collar gluing.
pub fn evaluate_with_gluing(
    o: &OrbifoldCircle,
    data: &DiskAlgebra1D,
    gluing: &CollarGluing1D,
    degree_cap: usize,
    normalized: bool,
) -> Result<ExcisionResult, FacthomError> {
    validate_gluing(o, gluing)?;
    let complex = match o.action {
        ActionKind::Trivial | ActionKind::Rotation => {
            let env = collar_algebra(gluing, data)?;
            let piece_bimodule = |twisted: bool| -> Result<Bimodule, FacthomError> {
                if twisted {
                    let phi = ensure_automorphism(&data.twist)?;
                    Bimodule::twisted_diagonal(&data.smooth, &phi).map_err(FacthomError::Algebra)
                } else {
                    Ok(Bimodule::diagonal(&data.smooth))
                }
            };
            let (env_from_pos, left) = piece_bimodule(gluing.positive.twisted)?
                .as_right_env_module()
                .map_err(FacthomError::Algebra)?;
            let (_, right) = piece_bimodule(gluing.negative.twisted)?
                .as_left_env_module()
                .map_err(FacthomError::Algebra)?;
            debug_assert_eq!(env, env_from_pos);
            bar_complex(&BarComplexSpec {
                algebra: env,
                left,
                right,
                degree_cap,
                normalized,
            })
            .map_err(FacthomError::Complex)?
        }
        ActionKind::Reflection => {
            let algebra = collar_algebra(gluing, data)?;
            debug_assert_eq!(algebra, data.smooth);
            let colour_pos = gluing.positive.colour.as_deref().unwrap_or_default();
            let colour_neg = gluing.negative.colour.as_deref().unwrap_or_default();
            let left = data.singular_module(colour_pos)?.clone();
            let phi = ensure_anti_automorphism(&data.twist)?;
            let right = right_to_left_along(data.singular_module(colour_neg)?, &phi)
                .map_err(FacthomError::Algebra)?;
            bar_complex(&BarComplexSpec {
                algebra,
                left,
                right,
                degree_cap,
                normalized,
            })
            .map_err(FacthomError::Complex)?
        }
    };
    Ok(ExcisionResult {
        betti: complex.homology(),
        decomposition_used: Some(gluing.clone()),
        trusted_through: degree_cap as i64 - 1,
    })
}

/// Evaluates a single one-dimensional orbifold with the standard gluing.
pub fn evaluate(
    o: &Orbifold1D,
    data: &DiskAlgebra1D,
    degree_cap: usize,
    normalized: bool,
) -> Result<ExcisionResult, FacthomError> {
    match o {
        Orbifold1D::Circle(c) => {
            let gluing = standard_gluing(c);
            evaluate_with_gluing(c, data, &gluing, degree_cap, normalized)
        }
        Orbifold1D::FreeInterval => Ok(concentrated_result(data.smooth.dim(), degree_cap)),
        Orbifold1D::SingularInterval(colour) => {
            let module = data.singular_module(colour)?;
            Ok(concentrated_result(module.dim, degree_cap))
        }
    }
}

fn concentrated_result(dim: usize, degree_cap: usize) -> ExcisionResult {
    let mut betti = vec![0usize; degree_cap + 1];
    betti[0] = dim;
    ExcisionResult {
        betti: BettiVector {
            min_degree: 0,
            betti,
        },
        decomposition_used: None,
        trusted_through: degree_cap as i64 - 1,
    }
}

/// Evaluates a disjoint union of orbifolds: the invariant of the union is
/// the graded tensor product (Cauchy convolution) of the factors, reliable
/// through the smallest trusted degree.
pub fn evaluate_union(
    components: &[Orbifold1D],
    data: &DiskAlgebra1D,
    degree_cap: usize,
    normalized: bool,
) -> Result<ExcisionResult, FacthomError> {
    if components.is_empty() {
        return Err(FacthomError::BadDescriptor("empty orbifold".into()));
    }
    let mut results = components
        .iter()
        .map(|o| evaluate(o, data, degree_cap, normalized))
        .collect::<Result<Vec<_>, _>>()?;
    let mut acc = results.remove(0);
    for r in results {
        let trusted = acc.trusted_through.min(r.trusted_through);
        let a = crop(&acc.betti, trusted);
        let b = crop(&r.betti, trusted);
        acc = ExcisionResult {
            betti: a.convolve(&b),
            decomposition_used: None,
            trusted_through: trusted,
        };
    }
    Ok(acc)
}

fn crop(b: &BettiVector, through: i64) -> BettiVector {
    let keep = ((through - b.min_degree + 1).max(0) as usize).min(b.betti.len());
    BettiVector {
        min_degree: b.min_degree,
        betti: b.betti[..keep].to_vec(),
    }
}

/// Cross-check of the excision pipeline against the direct twisted
/// Hochschild complex. Disagreement is a finding reported in the result,
/// not an error.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub excision: BettiVector,
    pub direct: BettiVector,
    pub trusted_through: i64,
    pub agree: bool,
}

pub fn check_excision_against_oracle(
    o: &OrbifoldCircle,
    data: &DiskAlgebra1D,
    degree_cap: usize,
    normalized: bool,
) -> Result<OracleReport, FacthomError> {
    if o.action == ActionKind::Reflection {
        return Err(FacthomError::UnsupportedAction(
            "the Hochschild oracle applies to rotation and trivial circles".into(),
        ));
    }
    let gluing = standard_gluing(o);
    let excision = evaluate_with_gluing(o, data, &gluing, degree_cap, normalized)?;
    let coefficients = if o.action == ActionKind::Rotation {
        let phi = ensure_automorphism(&data.twist)?;
        Bimodule::twisted_diagonal(&data.smooth, &phi).map_err(FacthomError::Algebra)?
    } else {
        Bimodule::diagonal(&data.smooth)
    };
    let direct = hochschild_complex(&HochschildComplexSpec {
        algebra: data.smooth.clone(),
        coefficients,
        degree_cap,
        normalized,
    })
    .map_err(FacthomError::Complex)?
    .homology();
    let trusted = degree_cap as i64 - 1;
    let agree = excision.betti.agrees_through(&direct, trusted);
    Ok(OracleReport {
        excision: excision.betti,
        direct,
        trusted_through: trusted,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;

    fn q() -> FieldKind {
        FieldKind::Rational
    }

    fn data_qz2_id() -> DiskAlgebra1D {
        let a = Algebra::group_algebra(q(), &FiniteGroup::cyclic(2));
        let id = AlgebraTwist::identity(&a);
        DiskAlgebra1D::new(a, id, BTreeMap::new()).unwrap()
    }

    fn data_qq_swap() -> DiskAlgebra1D {
        let a = Algebra::product(&Algebra::ground_field(q()), &Algebra::ground_field(q())).unwrap();
        let swap = AlgebraTwist::product_swap(&a, 1).unwrap();
        DiskAlgebra1D::new(a, swap, BTreeMap::new()).unwrap()
    }

    fn reflection_data_ground_field() -> DiskAlgebra1D {
        let a = Algebra::ground_field(q());
        let id = AlgebraTwist::identity(&a);
        let m = RightModule::regular(&a);
        let mut singular = BTreeMap::new();
        singular.insert("c".to_string(), m.clone());
        singular.insert("c_star".to_string(), m);
        DiskAlgebra1D::new(a, id, singular).unwrap()
    }

    #[test]
    fn standard_gluing_shapes() {
        let rot = OrbifoldCircle::rotation_circle(2);
        let g = standard_gluing(&rot);
        assert_eq!(g.collar.len(), 2);
        assert_eq!(g.collar.iter().filter(|c| c.reversed).count(), 1);
        assert!(g.negative.twisted && !g.positive.twisted);

        let refl = OrbifoldCircle::reflection_circle("c", "c_star");
        let g = standard_gluing(&refl);
        assert_eq!(g.collar.len(), 1);
        assert_eq!(g.positive.model, LocalModel::SingularHalfInterval);

        let triv = OrbifoldCircle::trivial_circle();
        let g = standard_gluing(&triv);
        assert!(!g.positive.twisted && !g.negative.twisted);
    }

    #[test]
    fn collar_algebra_shapes() {
        let rot = OrbifoldCircle::rotation_circle(2);
        let data = data_qz2_id();
        let env = collar_algebra(&standard_gluing(&rot), &data).unwrap();
        assert_eq!(env.dim(), 4);
        assert_eq!(env, data.smooth.enveloping());

        let refl = OrbifoldCircle::reflection_circle("c", "c_star");
        let rdata = reflection_data_ground_field();
        let a = collar_algebra(&standard_gluing(&refl), &rdata).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn rotation_circle_group_algebra() {
        let rot = Orbifold1D::Circle(OrbifoldCircle::rotation_circle(2));
        let r = evaluate(&rot, &data_qz2_id(), 3, true).unwrap();
        assert_eq!(r.trusted_through, 2);
        assert_eq!(r.betti.betti[..3], [2, 0, 0]);
    }

    #[test]
    fn rotation_circle_swap_twist() {
        let rot = Orbifold1D::Circle(OrbifoldCircle::rotation_circle(2));
        let r = evaluate(&rot, &data_qq_swap(), 3, true).unwrap();
        assert_eq!(r.betti.betti[..3], [0, 0, 0]);
    }

    #[test]
    fn reflection_circle_ground_field() {
        let refl = Orbifold1D::Circle(OrbifoldCircle::reflection_circle("c", "c_star"));
        let r = evaluate(&refl, &reflection_data_ground_field(), 3, true).unwrap();
        assert_eq!(r.betti.betti[..3], [1, 0, 0]);
    }

    #[test]
    fn oracle_agreement_cases() {
        let rot = OrbifoldCircle::rotation_circle(2);
        for data in [data_qz2_id(), data_qq_swap()] {
            let report = check_excision_against_oracle(&rot, &data, 3, true).unwrap();
            assert!(report.agree, "excision {:?} vs direct {:?}", report.excision, report.direct);
        }
        // Ground field, trivially exact.
        let k = Algebra::ground_field(q());
        let data = DiskAlgebra1D::new(k.clone(), AlgebraTwist::identity(&k), BTreeMap::new()).unwrap();
        let report = check_excision_against_oracle(&rot, &data, 3, true).unwrap();
        assert!(report.agree);
        assert_eq!(report.direct.betti[..3], [1, 0, 0]);
    }

    #[test]
    fn identity_twist_reduces_to_plain_hochschild() {
        // A trivially equivariant datum on the free circle gives the
        // quotient circle's Hochschild homology.
        let rot = OrbifoldCircle::rotation_circle(2);
        let triv = OrbifoldCircle::trivial_circle();
        let data = data_qz2_id();
        let r_rot = evaluate_with_gluing(&rot, &data, &standard_gluing(&rot), 3, true).unwrap();
        let r_triv = evaluate_with_gluing(&triv, &data, &standard_gluing(&triv), 3, true).unwrap();
        assert_eq!(r_rot.betti.betti, r_triv.betti.betti);
    }

    #[test]
    fn gluing_independence() {
        let rot = OrbifoldCircle::rotation_circle(2);
        for data in [data_qz2_id(), data_qq_swap()] {
            let std_g = standard_gluing(&rot);
            let alt_g = swapped_gluing(&rot).unwrap();
            assert_ne!(std_g, alt_g);
            let a = evaluate_with_gluing(&rot, &data, &std_g, 3, true).unwrap();
            let b = evaluate_with_gluing(&rot, &data, &alt_g, 3, true).unwrap();
            assert_eq!(a.betti.betti, b.betti.betti);
        }
    }

    #[test]
    fn reflection_gluing_swap_agrees() {
        // Swapping which singular point is the positive piece exchanges the
        // two sides of the relative tensor product; homology cannot differ.
        let a = Algebra::group_algebra(q(), &FiniteGroup::cyclic(2));
        let twist =
            crate::algebra::AlgebraTwist::group_inversion(&a, &FiniteGroup::cyclic(2)).unwrap();
        let f = q();
        let mut singular = BTreeMap::new();
        singular.insert("c".to_string(), RightModule::regular(&a));
        singular.insert(
            "d".to_string(),
            RightModule::character_module(&a, &[f.one(), f.one()]).unwrap(),
        );
        let data = DiskAlgebra1D::new(a, twist, singular).unwrap();
        let refl = OrbifoldCircle::reflection_circle("c", "d");
        let std_g = standard_gluing(&refl);
        let alt_g = swapped_gluing(&refl).unwrap();
        let x = evaluate_with_gluing(&refl, &data, &std_g, 3, true).unwrap();
        let y = evaluate_with_gluing(&refl, &data, &alt_g, 3, true).unwrap();
        assert_eq!(x.betti.betti, y.betti.betti);
    }

    #[test]
    fn invalid_gluings_rejected() {
        let rot = OrbifoldCircle::rotation_circle(2);
        let mut g = standard_gluing(&rot);
        g.collar[1].reversed = false;
        assert!(matches!(
            evaluate_with_gluing(&rot, &data_qz2_id(), &g, 2, true),
            Err(FacthomError::DecompositionInvalid(_))
        ));
    }

    #[test]
    fn reflection_colouring_picks_modules() {
        // Distinct colours with modules of different dimension: Tor_0 over
        // the ground field multiplies dimensions.
        let a = Algebra::ground_field(q());
        let id = AlgebraTwist::identity(&a);
        let m1 = RightModule::regular(&a);
        // 2-dimensional module over K.
        let two = RightModule::new(
            a.clone(),
            2,
            vec![crate::matrix::Matrix::identity(q(), 2)],
            Some(vec![q().one(), q().zero()]),
        )
        .unwrap();
        let mut singular = BTreeMap::new();
        singular.insert("c".to_string(), m1);
        singular.insert("d".to_string(), two);
        let data = DiskAlgebra1D::new(a, id, singular).unwrap();
        let refl = Orbifold1D::Circle(OrbifoldCircle::reflection_circle("c", "d"));
        let r = evaluate(&refl, &data, 2, true).unwrap();
        assert_eq!(r.betti.betti[..2], [2, 0]);
    }

    #[test]
    fn missing_colour_is_an_error() {
        let refl = Orbifold1D::Circle(OrbifoldCircle::reflection_circle("c", "missing"));
        let data = reflection_data_ground_field();
        assert!(matches!(
            evaluate(&refl, &data, 2, true),
            Err(FacthomError::MissingCoefficient(_))
        ));
    }

    #[test]
    fn intervals_return_coefficients() {
        let data = reflection_data_ground_field();
        let free = evaluate(&Orbifold1D::FreeInterval, &data, 2, true).unwrap();
        assert_eq!(free.betti.betti, vec![1, 0, 0]);
        let sing = evaluate(&Orbifold1D::SingularInterval("c".into()), &data, 2, true).unwrap();
        assert_eq!(sing.betti.betti, vec![1, 0, 0]);
    }

    #[test]
    fn union_is_graded_tensor() {
        let rot = Orbifold1D::Circle(OrbifoldCircle::rotation_circle(2));
        let data = data_qz2_id();
        let single = evaluate(&rot, &data, 3, true).unwrap();
        let double = evaluate_union(&[rot.clone(), rot.clone()], &data, 3, true).unwrap();
        let expected = crop(&single.betti, 2).convolve(&crop(&single.betti, 2));
        assert_eq!(double.betti.betti, expected.betti);
        assert_eq!(double.betti.betti[0], 4);
    }

    #[test]
    fn empty_union_rejected() {
        assert!(matches!(
            evaluate_union(&[], &data_qz2_id(), 2, true),
            Err(FacthomError::BadDescriptor(_))
        ));
    }

    #[test]
    fn zn_rotation_accepts_higher_order_twists() {
        // Z_3 rotation circle with Q[Z_3] and the inversion automorphism
        // (order 2, still an automorphism since the group is abelian).
        let z3 = FiniteGroup::cyclic(3);
        let a = Algebra::group_algebra(q(), &z3);
        let inv = AlgebraTwist::group_inversion(&a, &z3).unwrap();
        let data = DiskAlgebra1D::new(a, inv, BTreeMap::new()).unwrap();
        let rot = OrbifoldCircle::rotation_circle(3);
        let report = check_excision_against_oracle(&rot, &data, 2, true).unwrap();
        assert!(report.agree);
    }
}
