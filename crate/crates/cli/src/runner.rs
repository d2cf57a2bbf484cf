//! Command execution: each subcommand parses its document, drives the
//! engines, and renders a deterministic report (JSON with sorted keys, or a
//! plain table).

use orbihom_core::algebra::Bimodule;
use orbihom_core::bredon::Decomposition;
use orbihom_core::complex::BettiVector;
use orbihom_core::facthom::{self, ActionKind, Orbifold1D};
use orbihom_core::field::FieldKind;
use orbihom_core::inertia;
use orbihom_core::resolutions::{
    bar_complex, hochschild_complex, twisted_traces, BarComplexSpec, HochschildComplexSpec,
    TraceConvention,
};
use serde_json::{json, Value};

use crate::schema::{self, ModuleSide, SchemaError};

/// Options shared by the subcommands.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub field: FieldKind,
    pub cap: usize,
    pub normalized: bool,
    pub oracle: bool,
    pub convention: TraceConvention,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            field: FieldKind::Rational,
            cap: 4,
            normalized: true,
            oracle: false,
            convention: TraceConvention::TwistSecondArgument,
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    /// Invalid input document: exit code 1.
    Schema(SchemaError),
    /// A mathematical precondition failed: exit code 2.
    Math(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Schema(e) => write!(f, "{e}"),
            RunError::Math(m) => write!(f, "precondition violated: {m}"),
        }
    }
}

impl From<SchemaError> for RunError {
    fn from(e: SchemaError) -> RunError {
        if e.math {
            RunError::Math(format!("at {}: {}", e.pointer, e.message))
        } else {
            RunError::Schema(e)
        }
    }
}

fn math(e: impl std::fmt::Display) -> RunError {
    RunError::Math(e.to_string())
}

/// A rendered report: canonical JSON plus a human-readable table.
pub struct Report {
    pub json: Value,
    pub table: String,
}

pub fn run(command: &str, doc: &Value, opts: &Options) -> Result<Report, RunError> {
    match command {
        "hochschild" => run_hochschild(doc, opts),
        "tor" => run_tor(doc, opts),
        "facthom" => run_facthom(doc, opts),
        "bredon" => run_bredon(doc, opts),
        "chenruan" => run_chenruan(doc, opts),
        "traces" => run_traces(doc, opts),
        "axioms" => run_axioms(doc, opts),
        other => Err(RunError::Schema(SchemaError {
            pointer: String::new(),
            message: format!("unknown command '{other}'"),
            math: false,
        })),
    }
}

fn betti_json(b: &BettiVector, through: i64) -> Value {
    let entries: Vec<usize> = (b.min_degree..=through).map(|n| b.in_degree(n)).collect();
    json!(entries)
}

fn betti_report(
    betti: &BettiVector,
    trusted_through: i64,
    truncated: bool,
    opts: &Options,
    oracle: Option<(&BettiVector, bool)>,
) -> Report {
    let mut warnings: Vec<String> = Vec::new();
    if truncated {
        warnings.push(format!(
            "degree {} omitted: the complex is truncated at its cap and unreliable there",
            trusted_through + 1
        ));
    }
    if let Some((_, agree)) = oracle {
        if !agree {
            warnings.push("DISAGREE: oracle Betti numbers differ in trusted degrees".into());
        }
    }
    let mut json = json!({
        "betti": betti_json(betti, trusted_through),
        "trusted_through": trusted_through,
        "field": opts.field.to_string(),
        "warnings": warnings,
    });
    if let Some((oracle_betti, agree)) = oracle {
        json["oracle"] = json!({
            "betti": betti_json(oracle_betti, trusted_through),
            "agree": agree,
        });
    }
    let mut table = String::new();
    table.push_str(&format!("field: {}\n", opts.field));
    table.push_str(&format!(
        "betti: {}\n",
        (betti.min_degree..=trusted_through)
            .map(|n| betti.in_degree(n).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    table.push_str(&format!("trusted through degree: {trusted_through}\n"));
    if let Some((oracle_betti, agree)) = oracle {
        table.push_str(&format!(
            "oracle betti: {}\n",
            (oracle_betti.min_degree..=trusted_through)
                .map(|n| oracle_betti.in_degree(n).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ));
        table.push_str(&format!(
            "oracle: {}\n",
            if agree { "AGREE" } else { "DISAGREE" }
        ));
    }
    for w in json["warnings"].as_array().unwrap() {
        table.push_str(&format!("warning: {}\n", w.as_str().unwrap()));
    }
    Report { json, table }
}

fn run_hochschild(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "algebra", "twist"])?;
    let (algebra, shape) =
        schema::build_algebra(opts.field, field_required(obj, "algebra")?, "/algebra")?;
    let twist = schema::build_twist(&algebra, &shape, obj.get("twist"), "/twist")?;
    let coefficients = Bimodule::twisted_diagonal(&algebra, &twist).map_err(math)?;
    let complex = hochschild_complex(&HochschildComplexSpec {
        algebra,
        coefficients,
        degree_cap: opts.cap,
        normalized: opts.normalized,
    })
    .map_err(math)?;
    let betti = complex.homology();
    Ok(betti_report(&betti, opts.cap as i64 - 1, true, opts, None))
}

fn run_traces(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "algebra", "twist"])?;
    let (algebra, shape) =
        schema::build_algebra(opts.field, field_required(obj, "algebra")?, "/algebra")?;
    let twist = schema::build_twist(&algebra, &shape, obj.get("twist"), "/twist")?;
    let basis = twisted_traces(&algebra, &twist, opts.convention).map_err(math)?;
    let basis_json: Vec<Vec<String>> = basis
        .iter()
        .map(|f| f.iter().map(|x| x.to_string()).collect())
        .collect();
    let json = json!({
        "dim": basis.len(),
        "basis": basis_json,
        "field": opts.field.to_string(),
        "warnings": [],
    });
    let mut table = format!("field: {}\ntrace space dimension: {}\n", opts.field, basis.len());
    for (i, f) in basis.iter().enumerate() {
        table.push_str(&format!(
            "basis {}: {}\n",
            i,
            f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        ));
    }
    Ok(Report { json, table })
}

fn run_tor(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "algebra", "left", "right"])?;
    let (algebra, shape) =
        schema::build_algebra(opts.field, field_required(obj, "algebra")?, "/algebra")?;
    let left = schema::build_module(
        &algebra,
        &shape,
        ModuleSide::Right,
        field_required(obj, "left")?,
        "/left",
    )?;
    let right = schema::build_module(
        &algebra,
        &shape,
        ModuleSide::Left,
        field_required(obj, "right")?,
        "/right",
    )?;
    let complex = bar_complex(&BarComplexSpec {
        algebra,
        left,
        right,
        degree_cap: opts.cap,
        normalized: opts.normalized,
    })
    .map_err(math)?;
    let betti = complex.homology();
    Ok(betti_report(&betti, opts.cap as i64 - 1, true, opts, None))
}

fn run_facthom(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "orbifold", "coefficients"])?;
    let orbifolds = schema::build_orbifolds(field_required(obj, "orbifold")?, "/orbifold")?;
    let data =
        schema::build_disk_algebra(opts.field, field_required(obj, "coefficients")?, "/coefficients")?;
    let result =
        facthom::evaluate_union(&orbifolds, &data, opts.cap, opts.normalized).map_err(math)?;
    let oracle = if opts.oracle {
        let circle = match &orbifolds[..] {
            [Orbifold1D::Circle(c)]
                if c.action == ActionKind::Rotation || c.action == ActionKind::Trivial =>
            {
                c
            }
            _ => {
                return Err(RunError::Math(
                    "the Hochschild oracle applies to a single rotation or trivial circle".into(),
                ))
            }
        };
        let report = facthom::check_excision_against_oracle(circle, &data, opts.cap, opts.normalized)
            .map_err(math)?;
        Some((report.direct, report.agree))
    } else {
        None
    };
    Ok(betti_report(
        &result.betti,
        result.trusted_through,
        true,
        opts,
        oracle.as_ref().map(|(b, a)| (b, *a)),
    ))
}

fn run_bredon(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "gcw", "coefficients"])?;
    let gcw = schema::build_gcw(field_required(obj, "gcw")?, "/gcw")?;
    let system =
        schema::build_coefficient_system(opts.field, &gcw.group, obj.get("coefficients"), "/coefficients")?;
    let betti = gcw.bredon_betti(&system).map_err(math)?;
    let top = betti.min_degree + betti.betti.len() as i64 - 1;
    Ok(betti_report(&betti, top, false, opts, None))
}

fn run_chenruan(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "gcw"])?;
    let gcw = schema::build_gcw(field_required(obj, "gcw")?, "/gcw")?;
    let betti = inertia::chen_ruan_betti(&gcw, opts.field).map_err(math)?;
    let top = betti.min_degree + betti.betti.len() as i64 - 1;
    Ok(betti_report(&betti, top, false, opts, None))
}

fn run_axioms(doc: &Value, opts: &Options) -> Result<Report, RunError> {
    let obj = schema::check_envelope(doc)?;
    schema_keys(obj, &["schema", "gcw", "other", "coefficients", "decomposition"])?;
    let x = schema::build_gcw(field_required(obj, "gcw")?, "/gcw")?;
    let y = schema::build_gcw(field_required(obj, "other")?, "/other")?;
    let system =
        schema::build_coefficient_system(opts.field, &x.group, obj.get("coefficients"), "/coefficients")?;
    let parsed_decomposition = match obj.get("decomposition") {
        None => None,
        Some(d) => {
            let dobj = d.as_object().ok_or_else(|| SchemaError {
                pointer: "/decomposition".into(),
                message: "expected an object".into(),
                math: false,
            })?;
            for key in dobj.keys() {
                if !["plus", "minus", "zero"].contains(&key.as_str()) {
                    return Err(RunError::Schema(SchemaError {
                        pointer: format!("/decomposition/{key}"),
                        message: "unknown key; allowed keys: plus, minus, zero".into(),
                        math: false,
                    }));
                }
            }
            let get = |key: &str| -> Result<_, RunError> {
                let v = dobj.get(key).ok_or_else(|| SchemaError {
                    pointer: "/decomposition".into(),
                    message: format!("missing required key '{key}'"),
                    math: false,
                })?;
                Ok(schema::build_gcw(v, &format!("/decomposition/{key}"))?)
            };
            Some((get("plus")?, get("minus")?, get("zero")?))
        }
    };
    let report = orbihom_core::bredon::check_axioms(
        &x,
        &y,
        &system,
        parsed_decomposition
            .as_ref()
            .map(|(p, m, z)| Decomposition {
                plus: p,
                minus: m,
                intersection: z,
            }),
    )
    .map_err(math)?;
    let mut json = json!({
        "additivity": {
            "ok": report.additivity_ok,
            "union_betti": report.union_betti.betti,
            "sum_betti": report.sum_betti.betti,
        },
        "field": opts.field.to_string(),
        "warnings": if report.additivity_ok { json!([]) } else { json!(["DISAGREE: additivity failed"]) },
    });
    let mut table = format!(
        "field: {}\nadditivity: {}\n",
        opts.field,
        if report.additivity_ok { "ok" } else { "DISAGREE" }
    );
    if let Some(mv) = &report.mayer_vietoris {
        json["mayer_vietoris"] = json!({
            "euler_whole": mv.euler_whole,
            "euler_pieces": mv.euler_pieces,
            "euler_ok": mv.euler_ok,
            "rank_inequalities_ok": mv.rank_inequalities_ok,
        });
        table.push_str(&format!(
            "mayer-vietoris euler: {} vs {} ({})\nrank inequalities: {}\n",
            mv.euler_whole,
            mv.euler_pieces,
            if mv.euler_ok { "ok" } else { "DISAGREE" },
            if mv.rank_inequalities_ok { "ok" } else { "DISAGREE" },
        ));
    }
    Ok(Report { json, table })
}

fn schema_keys(obj: &serde_json::Map<String, Value>, allowed: &[&str]) -> Result<(), SchemaError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(SchemaError {
                pointer: format!("/{key}"),
                message: format!("unknown key; allowed keys: {}", allowed.join(", ")),
                math: false,
            });
        }
    }
    Ok(())
}

fn field_required<'a>(
    obj: &'a serde_json::Map<String, Value>,
    key: &str,
) -> Result<&'a Value, SchemaError> {
    obj.get(key).ok_or_else(|| SchemaError {
        pointer: String::new(),
        message: format!("missing required key '{key}'"),
        math: false,
    })
}
