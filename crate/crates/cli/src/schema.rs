//! JSON input schemas: validation with JSON-pointer diagnostics, and
//! builders turning documents into engine structures.
//!
//! Every document carries `"schema": 1`. Validation is strict: unknown keys
//! are rejected, and every diagnostic names the offending location as a
//! JSON pointer. Rationals are written as integers or strings `"p/q"`.

use std::collections::BTreeMap;

use orbihom_core::algebra::{Algebra, AlgebraTwist, RightModule, TwistKind};
use orbihom_core::bredon::{
    BoundaryTerm, CellOrbit, CoefficientSystem, GammaCwComplex, OrbitCategory, Variance,
};
use orbihom_core::facthom::{ActionKind, DiskAlgebra1D, Orbifold1D, OrbifoldCircle};
use orbihom_core::field::{FieldElement, FieldKind};
use orbihom_core::group::FiniteGroup;
use orbihom_core::matrix::Matrix;
use serde_json::{Map, Value};

/// A schema violation, pointing at the offending document location.
///
/// `math` distinguishes mathematical precondition failures (a
/// non-associative table, a map that is not a twist, d^2 != 0) from plain
/// format problems; the two map to different exit codes.
#[derive(Debug, Clone)]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
    pub math: bool,
}

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "schema error at {}: {}", self.pointer, self.message)
    }
}

impl std::error::Error for SchemaError {}

fn err<T>(pointer: &str, message: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError {
        pointer: pointer.to_string(),
        message: message.into(),
        math: false,
    })
}

fn math_err(pointer: &str, e: impl std::fmt::Display) -> SchemaError {
    SchemaError {
        pointer: pointer.to_string(),
        message: e.to_string(),
        math: true,
    }
}

fn as_object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object()
        .ok_or_else(|| SchemaError {
            pointer: pointer.to_string(),
            message: "expected an object".into(),
            math: false,
        })
}

fn check_keys(obj: &Map<String, Value>, pointer: &str, allowed: &[&str]) -> Result<(), SchemaError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return err(
                &format!("{pointer}/{key}"),
                format!("unknown key; allowed keys: {}", allowed.join(", ")),
            );
        }
    }
    Ok(())
}

fn required<'a>(
    obj: &'a Map<String, Value>,
    pointer: &str,
    key: &str,
) -> Result<&'a Value, SchemaError> {
    obj.get(key).ok_or_else(|| SchemaError {
        pointer: pointer.to_string(),
        message: format!("missing required key '{key}'"),
        math: false,
    })
}

fn as_usize(v: &Value, pointer: &str) -> Result<usize, SchemaError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| SchemaError {
            pointer: pointer.to_string(),
            message: "expected a nonnegative integer".into(),
            math: false,
        })
}

fn as_i64(v: &Value, pointer: &str) -> Result<i64, SchemaError> {
    v.as_i64().ok_or_else(|| SchemaError {
        pointer: pointer.to_string(),
        message: "expected an integer".into(),
        math: false,
    })
}

fn as_str<'a>(v: &'a Value, pointer: &str) -> Result<&'a str, SchemaError> {
    v.as_str().ok_or_else(|| SchemaError {
        pointer: pointer.to_string(),
        message: "expected a string".into(),
        math: false,
    })
}

fn as_array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array().ok_or_else(|| SchemaError {
        pointer: pointer.to_string(),
        message: "expected an array".into(),
        math: false,
    })
}

/// Checks the `"schema": 1` version key and returns the document object.
pub fn check_envelope(doc: &Value) -> Result<&Map<String, Value>, SchemaError> {
    let obj = as_object(doc, "")?;
    let version = required(obj, "", "schema")?;
    if version.as_u64() != Some(1) {
        return err("/schema", "unsupported schema version; expected 1");
    }
    Ok(obj)
}

/// Parses an exact scalar: an integer literal or a string `"p/q"`.
pub fn parse_scalar(field: FieldKind, v: &Value, pointer: &str) -> Result<FieldElement, SchemaError> {
    if let Some(n) = v.as_i64() {
        return Ok(field.from_i64(n));
    }
    if let Some(s) = v.as_str() {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = match num.parse() {
            Ok(n) => n,
            Err(_) => return err(pointer, format!("cannot parse numerator of '{s}'")),
        };
        let den: i64 = match den.parse() {
            Ok(d) => d,
            Err(_) => return err(pointer, format!("cannot parse denominator of '{s}'")),
        };
        return field.from_ratio(num, den).map_err(|e| math_err(pointer, e));
    }
    err(pointer, "expected an integer or a rational string 'p/q'")
}

fn parse_vector(field: FieldKind, v: &Value, pointer: &str) -> Result<Vec<FieldElement>, SchemaError> {
    as_array(v, pointer)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_scalar(field, x, &format!("{pointer}/{i}")))
        .collect()
}

pub fn parse_matrix(field: FieldKind, v: &Value, pointer: &str) -> Result<Matrix, SchemaError> {
    let rows = as_array(v, pointer)?;
    let parsed: Vec<Vec<FieldElement>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(field, r, &format!("{pointer}/{i}")))
        .collect::<Result<_, _>>()?;
    let width = parsed.first().map_or(0, |r| r.len());
    if parsed.iter().any(|r| r.len() != width) {
        return err(pointer, "matrix rows have unequal lengths");
    }
    Ok(Matrix::from_rows(field, parsed))
}

/// Builds a finite group from its descriptor.
pub fn build_group(v: &Value, pointer: &str) -> Result<FiniteGroup, SchemaError> {
    let obj = as_object(v, pointer)?;
    let kind = as_str(required(obj, pointer, "kind")?, &format!("{pointer}/kind"))?;
    match kind {
        "trivial" => {
            check_keys(obj, pointer, &["kind"])?;
            Ok(FiniteGroup::trivial())
        }
        "cyclic" => {
            check_keys(obj, pointer, &["kind", "n"])?;
            let n = as_usize(required(obj, pointer, "n")?, &format!("{pointer}/n"))?;
            if n == 0 {
                return err(&format!("{pointer}/n"), "cyclic group order must be positive");
            }
            Ok(FiniteGroup::cyclic(n))
        }
        "dihedral" => {
            check_keys(obj, pointer, &["kind", "n"])?;
            let n = as_usize(required(obj, pointer, "n")?, &format!("{pointer}/n"))?;
            if n == 0 {
                return err(&format!("{pointer}/n"), "dihedral parameter must be positive");
            }
            Ok(FiniteGroup::dihedral(n))
        }
        "symmetric" => {
            check_keys(obj, pointer, &["kind", "n"])?;
            let n = as_usize(required(obj, pointer, "n")?, &format!("{pointer}/n"))?;
            if !(1..=5).contains(&n) {
                return err(&format!("{pointer}/n"), "symmetric groups are supported for n <= 5");
            }
            Ok(FiniteGroup::symmetric(n))
        }
        "product" => {
            check_keys(obj, pointer, &["kind", "factors"])?;
            let factors = as_array(required(obj, pointer, "factors")?, &format!("{pointer}/factors"))?;
            if factors.len() < 2 {
                return err(&format!("{pointer}/factors"), "need at least two factors");
            }
            let mut groups = factors
                .iter()
                .enumerate()
                .map(|(i, f)| build_group(f, &format!("{pointer}/factors/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            let mut acc = groups.remove(0);
            for g in groups {
                acc = FiniteGroup::product(&acc, &g);
            }
            Ok(acc)
        }
        "table" => {
            check_keys(obj, pointer, &["kind", "table", "names"])?;
            let table_v = as_array(required(obj, pointer, "table")?, &format!("{pointer}/table"))?;
            let table: Vec<Vec<usize>> = table_v
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    as_array(row, &format!("{pointer}/table/{i}"))?
                        .iter()
                        .enumerate()
                        .map(|(j, x)| as_usize(x, &format!("{pointer}/table/{i}/{j}")))
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let names = match obj.get("names") {
                None => None,
                Some(v) => Some(
                    as_array(v, &format!("{pointer}/names"))?
                        .iter()
                        .enumerate()
                        .map(|(i, n)| {
                            as_str(n, &format!("{pointer}/names/{i}")).map(str::to_string)
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            FiniteGroup::from_table(table, names)
                .map_err(|e| math_err(&format!("{pointer}/table"), e))
        }
        other => err(
            &format!("{pointer}/kind"),
            format!("unknown group kind '{other}'; expected cyclic, dihedral, symmetric, product, table or trivial"),
        ),
    }
}

/// Extra structure remembered from the algebra descriptor, used to resolve
/// named twists and modules.
#[derive(Clone, Debug)]
pub enum AlgebraShape {
    Field,
    GroupAlgebra(FiniteGroup),
    TruncatedPoly(usize),
    MatrixAlgebra(usize),
    Product(Vec<usize>),
    Constants,
}

pub fn build_algebra(
    field: FieldKind,
    v: &Value,
    pointer: &str,
) -> Result<(Algebra, AlgebraShape), SchemaError> {
    let obj = as_object(v, pointer)?;
    let kind = as_str(required(obj, pointer, "kind")?, &format!("{pointer}/kind"))?;
    match kind {
        "field" => {
            check_keys(obj, pointer, &["kind"])?;
            Ok((Algebra::ground_field(field), AlgebraShape::Field))
        }
        "group" => {
            check_keys(obj, pointer, &["kind", "group"])?;
            let group = build_group(required(obj, pointer, "group")?, &format!("{pointer}/group"))?;
            Ok((
                Algebra::group_algebra(field, &group),
                AlgebraShape::GroupAlgebra(group),
            ))
        }
        "truncated_poly" => {
            check_keys(obj, pointer, &["kind", "n"])?;
            let n = as_usize(required(obj, pointer, "n")?, &format!("{pointer}/n"))?;
            if n == 0 {
                return err(&format!("{pointer}/n"), "truncation exponent must be positive");
            }
            Ok((
                Algebra::truncated_polynomial(field, n),
                AlgebraShape::TruncatedPoly(n),
            ))
        }
        "matrix" => {
            check_keys(obj, pointer, &["kind", "n"])?;
            let n = as_usize(required(obj, pointer, "n")?, &format!("{pointer}/n"))?;
            if n == 0 {
                return err(&format!("{pointer}/n"), "matrix size must be positive");
            }
            Ok((Algebra::matrix_algebra(field, n), AlgebraShape::MatrixAlgebra(n)))
        }
        "product" => {
            check_keys(obj, pointer, &["kind", "factors"])?;
            let factors = as_array(required(obj, pointer, "factors")?, &format!("{pointer}/factors"))?;
            if factors.len() < 2 {
                return err(&format!("{pointer}/factors"), "need at least two factors");
            }
            let built = factors
                .iter()
                .enumerate()
                .map(|(i, f)| build_algebra(field, f, &format!("{pointer}/factors/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            let dims: Vec<usize> = built.iter().map(|(a, _)| a.dim()).collect();
            let mut iter = built.into_iter().map(|(a, _)| a);
            let mut acc = iter.next().unwrap();
            for a in iter {
                acc = Algebra::product(&acc, &a)
                    .map_err(|e| math_err(&format!("{pointer}/factors"), e))?;
            }
            Ok((acc, AlgebraShape::Product(dims)))
        }
        "constants" => {
            check_keys(obj, pointer, &["kind", "dim", "table", "unit"])?;
            let dim = as_usize(required(obj, pointer, "dim")?, &format!("{pointer}/dim"))?;
            let table_v = as_array(required(obj, pointer, "table")?, &format!("{pointer}/table"))?;
            let mut table = Vec::with_capacity(dim);
            for (i, row) in table_v.iter().enumerate() {
                let row_v = as_array(row, &format!("{pointer}/table/{i}"))?;
                let mut parsed_row = Vec::with_capacity(dim);
                for (j, cell) in row_v.iter().enumerate() {
                    parsed_row.push(parse_vector(field, cell, &format!("{pointer}/table/{i}/{j}"))?);
                }
                table.push(parsed_row);
            }
            let unit = parse_vector(field, required(obj, pointer, "unit")?, &format!("{pointer}/unit"))?;
            let algebra = Algebra::new(field, dim, table, unit)
                .map_err(|e| math_err(&format!("{pointer}/table"), e))?;
            Ok((algebra, AlgebraShape::Constants))
        }
        other => err(
            &format!("{pointer}/kind"),
            format!("unknown algebra kind '{other}'; expected field, group, truncated_poly, matrix, product or constants"),
        ),
    }
}

pub fn build_twist(
    algebra: &Algebra,
    shape: &AlgebraShape,
    v: Option<&Value>,
    pointer: &str,
) -> Result<AlgebraTwist, SchemaError> {
    let Some(v) = v else {
        return Ok(AlgebraTwist::identity(algebra));
    };
    let obj = as_object(v, pointer)?;
    check_keys(obj, pointer, &["kind", "matrix", "name", "by", "order"])?;
    let field = algebra.field();
    let order = match obj.get("order") {
        None => None,
        Some(o) => Some(as_usize(o, &format!("{pointer}/order"))? as u32),
    };
    if let Some(name_v) = obj.get("name") {
        if obj.contains_key("matrix") {
            return err(pointer, "give either 'name' or 'matrix', not both");
        }
        let name = as_str(name_v, &format!("{pointer}/name"))?;
        let twist = match name {
            "identity" => Ok(AlgebraTwist::identity(algebra)),
            "swap" => match shape {
                AlgebraShape::Product(dims) if dims.len() == 2 && dims[0] == dims[1] => {
                    AlgebraTwist::product_swap(algebra, dims[0])
                }
                _ => {
                    return err(
                        &format!("{pointer}/name"),
                        "'swap' requires a product of two equal-dimensional factors",
                    )
                }
            },
            "inversion" => match shape {
                AlgebraShape::GroupAlgebra(g) => AlgebraTwist::group_inversion(algebra, g),
                _ => return err(&format!("{pointer}/name"), "'inversion' requires a group algebra"),
            },
            "neg_x" => match shape {
                AlgebraShape::TruncatedPoly(_) => AlgebraTwist::polynomial_negation(algebra),
                _ => {
                    return err(
                        &format!("{pointer}/name"),
                        "'neg_x' requires a truncated polynomial algebra",
                    )
                }
            },
            "conjugation" => match shape {
                AlgebraShape::MatrixAlgebra(n) => {
                    let by = required(obj, pointer, "by")?;
                    let u = parse_matrix(field, by, &format!("{pointer}/by"))?;
                    AlgebraTwist::matrix_conjugation(algebra, *n, &u)
                }
                _ => {
                    return err(
                        &format!("{pointer}/name"),
                        "'conjugation' requires a matrix algebra",
                    )
                }
            },
            other => {
                return err(
                    &format!("{pointer}/name"),
                    format!("unknown twist name '{other}'; expected identity, swap, inversion, neg_x or conjugation"),
                )
            }
        };
        return twist.map_err(|e| math_err(pointer, e));
    }
    let kind = match obj.get("kind") {
        Some(k) => match as_str(k, &format!("{pointer}/kind"))? {
            "auto" => TwistKind::Automorphism,
            "anti" => TwistKind::AntiAutomorphism,
            other => {
                return err(
                    &format!("{pointer}/kind"),
                    format!("unknown twist kind '{other}'; expected 'auto' or 'anti'"),
                )
            }
        },
        None => return err(pointer, "a matrix twist requires 'kind': 'auto' or 'anti'"),
    };
    let matrix_v = required(obj, pointer, "matrix")?;
    let matrix = parse_matrix(field, matrix_v, &format!("{pointer}/matrix"))?;
    AlgebraTwist::new(algebra.clone(), matrix, kind, order)
        .map_err(|e| math_err(&format!("{pointer}/matrix"), e))
}

/// Which side of a bar complex a module descriptor feeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleSide {
    /// A right module over the algebra.
    Right,
    /// A left module, encoded as a right module over the opposite algebra;
    /// explicit action matrices are read as matrices of `x -> e_i . x`.
    Left,
}

pub fn build_module(
    algebra: &Algebra,
    shape: &AlgebraShape,
    side: ModuleSide,
    v: &Value,
    pointer: &str,
) -> Result<RightModule, SchemaError> {
    let obj = as_object(v, pointer)?;
    let field = algebra.field();
    let carrier = match side {
        ModuleSide::Right => algebra.clone(),
        ModuleSide::Left => algebra.opposite(),
    };
    if let Some(name_v) = obj.get("name") {
        check_keys(obj, pointer, &["name"])?;
        let name = as_str(name_v, &format!("{pointer}/name"))?;
        return match name {
            "regular" => {
                let action = match side {
                    ModuleSide::Right => (0..algebra.dim()).map(|i| algebra.right_mul_matrix(i)).collect(),
                    ModuleSide::Left => (0..algebra.dim())
                        .map(|i| algebra.left_mul_matrix(i).clone())
                        .collect(),
                };
                RightModule::new(carrier, algebra.dim(), action, Some(algebra.unit().to_vec()))
                    .map_err(|e| math_err(pointer, e))
            }
            "trivial" => {
                let values: Vec<FieldElement> = match shape {
                    AlgebraShape::Field => vec![field.one()],
                    AlgebraShape::GroupAlgebra(g) => {
                        (0..g.order()).map(|_| field.one()).collect()
                    }
                    AlgebraShape::TruncatedPoly(n) => {
                        let mut v = vec![field.zero(); *n];
                        v[0] = field.one();
                        v
                    }
                    _ => {
                        return err(
                            &format!("{pointer}/name"),
                            "'trivial' requires a field, group or truncated polynomial algebra",
                        )
                    }
                };
                // Characters are central, so left and right structures share
                // the 1x1 action matrices.
                RightModule::character_module(&carrier, &values)
                    .map_err(|e| math_err(pointer, e))
            }
            other => err(
                &format!("{pointer}/name"),
                format!("unknown module name '{other}'; expected regular or trivial"),
            ),
        };
    }
    check_keys(obj, pointer, &["dim", "action", "marked_point"])?;
    let dim = as_usize(required(obj, pointer, "dim")?, &format!("{pointer}/dim"))?;
    let action_v = as_array(required(obj, pointer, "action")?, &format!("{pointer}/action"))?;
    if action_v.len() != algebra.dim() {
        return err(
            &format!("{pointer}/action"),
            format!("expected one matrix per algebra basis element ({})", algebra.dim()),
        );
    }
    let action = action_v
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(field, m, &format!("{pointer}/action/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let marked = match obj.get("marked_point") {
        None => None,
        Some(p) => Some(parse_vector(field, p, &format!("{pointer}/marked_point"))?),
    };
    RightModule::new(carrier, dim, action, marked)
        .map_err(|e| math_err(&format!("{pointer}/action"), e))
}

/// Parses the `orbifold` value: one descriptor or an array (disjoint union).
pub fn build_orbifolds(v: &Value, pointer: &str) -> Result<Vec<Orbifold1D>, SchemaError> {
    match v {
        Value::Array(items) => {
            if items.is_empty() {
                return err(pointer, "disjoint union must have at least one component");
            }
            items
                .iter()
                .enumerate()
                .map(|(i, o)| build_orbifold(o, &format!("{pointer}/{i}")))
                .collect()
        }
        _ => Ok(vec![build_orbifold(v, pointer)?]),
    }
}

fn build_orbifold(v: &Value, pointer: &str) -> Result<Orbifold1D, SchemaError> {
    let obj = as_object(v, pointer)?;
    check_keys(obj, pointer, &["group", "action", "colours", "colour"])?;
    let action = as_str(required(obj, pointer, "action")?, &format!("{pointer}/action"))?;
    match action {
        "interval" => Ok(Orbifold1D::FreeInterval),
        "singular_interval" => {
            let colour = as_str(required(obj, pointer, "colour")?, &format!("{pointer}/colour"))?;
            Ok(Orbifold1D::SingularInterval(colour.to_string()))
        }
        "trivial" | "rotation" | "reflection" => {
            let kind = match action {
                "trivial" => ActionKind::Trivial,
                "rotation" => ActionKind::Rotation,
                _ => ActionKind::Reflection,
            };
            let group = match obj.get("group") {
                Some(g) => build_group(g, &format!("{pointer}/group"))?,
                None if kind == ActionKind::Trivial => FiniteGroup::trivial(),
                None => return err(pointer, "missing required key 'group'"),
            };
            let colours = match obj.get("colours") {
                None => Vec::new(),
                Some(c) => {
                    let cobj = as_object(c, &format!("{pointer}/colours"))?;
                    check_keys(cobj, &format!("{pointer}/colours"), &["stratum_0", "stratum_1"])?;
                    let c0 = as_str(
                        required(cobj, &format!("{pointer}/colours"), "stratum_0")?,
                        &format!("{pointer}/colours/stratum_0"),
                    )?;
                    let c1 = as_str(
                        required(cobj, &format!("{pointer}/colours"), "stratum_1")?,
                        &format!("{pointer}/colours/stratum_1"),
                    )?;
                    vec![c0.to_string(), c1.to_string()]
                }
            };
            let circle = OrbifoldCircle::new(group, kind, colours)
                .map_err(|e| math_err(pointer, e))?;
            Ok(Orbifold1D::Circle(circle))
        }
        other => err(
            &format!("{pointer}/action"),
            format!("unknown action '{other}'; expected rotation, reflection, trivial, interval or singular_interval"),
        ),
    }
}

/// Builds the coefficient data for the one-dimensional evaluator.
pub fn build_disk_algebra(
    field: FieldKind,
    v: &Value,
    pointer: &str,
) -> Result<DiskAlgebra1D, SchemaError> {
    let obj = as_object(v, pointer)?;
    check_keys(obj, pointer, &["algebra", "twist", "modules"])?;
    let (algebra, shape) = build_algebra(field, required(obj, pointer, "algebra")?, &format!("{pointer}/algebra"))?;
    let twist = build_twist(&algebra, &shape, obj.get("twist"), &format!("{pointer}/twist"))?;
    let mut singular = BTreeMap::new();
    if let Some(modules_v) = obj.get("modules") {
        let modules = as_object(modules_v, &format!("{pointer}/modules"))?;
        for (colour, module_v) in modules {
            let module = build_module(
                &algebra,
                &shape,
                ModuleSide::Right,
                module_v,
                &format!("{pointer}/modules/{colour}"),
            )?;
            singular.insert(colour.clone(), module);
        }
    }
    DiskAlgebra1D::new(algebra, twist, singular).map_err(|e| math_err(pointer, e))
}

fn element_by_value(group: &FiniteGroup, v: &Value, pointer: &str) -> Result<usize, SchemaError> {
    if let Some(n) = v.as_u64() {
        let n = n as usize;
        if n >= group.order() {
            return err(pointer, format!("element index {n} out of range"));
        }
        return Ok(n);
    }
    if let Some(s) = v.as_str() {
        return group.element_by_name(s).ok_or_else(|| SchemaError {
            pointer: pointer.to_string(),
            message: format!("no group element named '{s}'"),
            math: false,
        });
    }
    err(pointer, "expected a group element name or index")
}

/// Builds an equivariant CW complex from its descriptor.
pub fn build_gcw(v: &Value, pointer: &str) -> Result<GammaCwComplex, SchemaError> {
    let obj = as_object(v, pointer)?;
    check_keys(obj, pointer, &["group", "cells", "boundary"])?;
    let group = build_group(required(obj, pointer, "group")?, &format!("{pointer}/group"))?;
    let cells_v = as_array(required(obj, pointer, "cells")?, &format!("{pointer}/cells"))?;

    // Collect cells per dimension, remembering (dim, index) per id.
    let mut orbits: Vec<Vec<CellOrbit>> = Vec::new();
    let mut index_of: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for (i, cell_v) in cells_v.iter().enumerate() {
        let cp = format!("{pointer}/cells/{i}");
        let cell = as_object(cell_v, &cp)?;
        check_keys(cell, &cp, &["dim", "isotropy", "id", "character"])?;
        let dim = as_usize(required(cell, &cp, "dim")?, &format!("{cp}/dim"))?;
        let id = as_str(required(cell, &cp, "id")?, &format!("{cp}/id"))?.to_string();
        if index_of.contains_key(&id) {
            return err(&format!("{cp}/id"), format!("duplicate cell id '{id}'"));
        }
        let isotropy_v = as_array(required(cell, &cp, "isotropy")?, &format!("{cp}/isotropy"))?;
        let elements = isotropy_v
            .iter()
            .enumerate()
            .map(|(j, e)| element_by_value(&group, e, &format!("{cp}/isotropy/{j}")))
            .collect::<Result<Vec<_>, _>>()?;
        let isotropy = group
            .subgroup_from_elements(&elements)
            .map_err(|e| math_err(&format!("{cp}/isotropy"), e))?;
        let character = match cell.get("character") {
            None => Vec::new(),
            Some(c) => as_array(c, &format!("{cp}/character"))?
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    as_i64(s, &format!("{cp}/character/{j}")).and_then(|n| match n {
                        1 => Ok(1i8),
                        -1 => Ok(-1i8),
                        _ => err(&format!("{cp}/character/{j}"), "character entries must be 1 or -1"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        while orbits.len() <= dim {
            orbits.push(Vec::new());
        }
        index_of.insert(id.clone(), (dim, orbits[dim].len()));
        orbits[dim].push(CellOrbit {
            id,
            isotropy,
            character,
        });
    }
    if orbits.is_empty() {
        return err(&format!("{pointer}/cells"), "a complex needs at least one cell orbit");
    }
    if orbits.iter().any(|d| d.is_empty()) {
        return err(
            &format!("{pointer}/cells"),
            "every dimension up to the top one needs at least one cell orbit",
        );
    }

    // Boundary records.
    let mut boundaries: Vec<Vec<Vec<BoundaryTerm>>> = (1..orbits.len())
        .map(|n| vec![Vec::new(); orbits[n].len()])
        .collect();
    if let Some(bv) = obj.get("boundary") {
        let records = as_array(bv, &format!("{pointer}/boundary"))?;
        for (i, rec_v) in records.iter().enumerate() {
            let rp = format!("{pointer}/boundary/{i}");
            let rec = as_object(rec_v, &rp)?;
            check_keys(rec, &rp, &["from", "to", "morphisms"])?;
            let from = as_str(required(rec, &rp, "from")?, &format!("{rp}/from"))?;
            let to = as_str(required(rec, &rp, "to")?, &format!("{rp}/to"))?;
            let &(from_dim, from_idx) = index_of.get(from).ok_or_else(|| SchemaError {
                pointer: format!("{rp}/from"),
                message: format!("no cell with id '{from}'"),
                math: false,
            })?;
            let &(to_dim, to_idx) = index_of.get(to).ok_or_else(|| SchemaError {
                pointer: format!("{rp}/to"),
                message: format!("no cell with id '{to}'"),
                math: false,
            })?;
            if from_dim == 0 || to_dim + 1 != from_dim {
                return err(
                    &rp,
                    format!("boundary must go from dimension d to d-1; got {from_dim} -> {to_dim}"),
                );
            }
            let morphisms = as_array(required(rec, &rp, "morphisms")?, &format!("{rp}/morphisms"))?;
            for (j, m_v) in morphisms.iter().enumerate() {
                let mp = format!("{rp}/morphisms/{j}");
                let m = as_object(m_v, &mp)?;
                check_keys(m, &mp, &["coset", "coeff"])?;
                let translate =
                    element_by_value(&group, required(m, &mp, "coset")?, &format!("{mp}/coset"))?;
                let coeff = as_i64(required(m, &mp, "coeff")?, &format!("{mp}/coeff"))?;
                boundaries[from_dim - 1][from_idx].push(BoundaryTerm {
                    coeff,
                    target: to_idx,
                    translate,
                });
            }
        }
    }
    GammaCwComplex::new(group, orbits, boundaries).map_err(|e| math_err(pointer, e))
}

/// Builds a coefficient system over the orbit category of `group`.
pub fn build_coefficient_system(
    field: FieldKind,
    group: &FiniteGroup,
    v: Option<&Value>,
    pointer: &str,
) -> Result<CoefficientSystem, SchemaError> {
    let category = OrbitCategory::new(group).map_err(|e| math_err(pointer, e))?;
    let Some(v) = v else {
        return Ok(CoefficientSystem::constant(&category, field, 1, Variance::Covariant));
    };
    let obj = as_object(v, pointer)?;
    check_keys(obj, pointer, &["system", "dim", "subgroup", "variance"])?;
    let variance = match obj.get("variance") {
        None => Variance::Covariant,
        Some(x) => match as_str(x, &format!("{pointer}/variance"))? {
            "covariant" => Variance::Covariant,
            "contravariant" => Variance::Contravariant,
            other => {
                return err(
                    &format!("{pointer}/variance"),
                    format!("unknown variance '{other}'"),
                )
            }
        },
    };
    let system = as_str(required(obj, pointer, "system")?, &format!("{pointer}/system"))?;
    match system {
        "constant" => {
            let dim = match obj.get("dim") {
                None => 1,
                Some(d) => as_usize(d, &format!("{pointer}/dim"))?,
            };
            Ok(CoefficientSystem::constant(&category, field, dim, variance))
        }
        "representable" | "corepresentable" => {
            let fixed_variance = if system == "representable" {
                Variance::Covariant
            } else {
                Variance::Contravariant
            };
            if obj.contains_key("variance") && variance != fixed_variance {
                return err(
                    &format!("{pointer}/variance"),
                    format!("'{system}' systems have a fixed variance"),
                );
            }
            let sub_v = required(obj, pointer, "subgroup")?;
            let elements = as_array(sub_v, &format!("{pointer}/subgroup"))?
                .iter()
                .enumerate()
                .map(|(i, e)| element_by_value(group, e, &format!("{pointer}/subgroup/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            let sub = group
                .subgroup_from_elements(&elements)
                .map_err(|e| math_err(&format!("{pointer}/subgroup"), e))?;
            let base = category.object_index(&sub).ok_or_else(|| SchemaError {
                pointer: format!("{pointer}/subgroup"),
                message: "subgroup is not an object of the orbit category".into(),
                math: false,
            })?;
            Ok(if system == "representable" {
                CoefficientSystem::representable(&category, field, base)
            } else {
                CoefficientSystem::corepresentable(&category, field, base)
            })
        }
        other => err(
            &format!("{pointer}/system"),
            format!("unknown coefficient system '{other}'; expected constant, representable or corepresentable"),
        ),
    }
}
