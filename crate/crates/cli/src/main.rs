//! Command-line front end for the orbifold homology engines.
//!
//! Inputs are JSON documents (or `builtin:<name>` entries from the built-in
//! corpus); reports are byte-deterministic JSON or plain tables.
//!
//! Exit codes: 0 on success (oracle disagreement is a reported finding, not
//! a failure), 1 on schema or I/O errors, 2 on mathematical precondition
//! violations.

use clap::{Parser, Subcommand};
use orbihom_cli::registry;
use orbihom_cli::runner::{run, Options, RunError};
use orbihom_core::field::FieldKind;
use orbihom_core::resolutions::TraceConvention;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "orbihom", version, about = "Exact homology of one-dimensional global quotient orbifolds: twisted Hochschild and bar complexes, Bredon homology, inertia Betti numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: `q` or `fp:<p>` for a prime p < 2^31.
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Top degree of truncated complexes (degrees above cap-1 are untrusted).
    #[arg(long, global = true, default_value_t = 4)]
    cap: usize,

    /// Use normalized chains (`true`) or the full unnormalized ones (`false`).
    #[arg(long, global = true, default_value = "true")]
    normalized: String,

    /// Output format: `json` or `table`.
    #[arg(long, global = true, default_value = "json")]
    format: String,

    /// Cross-check the excision pipeline against the direct Hochschild
    /// complex (facthom, single rotation or trivial circle).
    #[arg(long, global = true)]
    oracle: bool,

    /// Trace relation convention: `standard` puts the twist on the second
    /// argument, `flipped` on the first.
    #[arg(long, global = true, default_value = "standard")]
    trace_convention: String,
}

#[derive(Subcommand)]
enum Command {
    /// Twisted Hochschild homology of an algebra with involution.
    Hochschild { input: String },
    /// Derived tensor product Tor over an algebra via the bar complex.
    Tor { input: String },
    /// Invariant of a 1-dimensional global quotient via excision.
    Facthom { input: String },
    /// Bredon homology of an equivariant CW complex.
    Bredon { input: String },
    /// Inertia (Chen-Ruan) Betti numbers of a global quotient.
    Chenruan { input: String },
    /// Basis of the twisted trace space of an algebra.
    Traces { input: String },
    /// Additivity and Mayer-Vietoris checks for Bredon homology.
    Axioms { input: String },
    /// List the built-in example inputs.
    ListBuiltins,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(real_main(cli));
}

fn real_main(cli: Cli) -> i32 {
    let (command, input) = match &cli.command {
        Command::Hochschild { input } => ("hochschild", input),
        Command::Tor { input } => ("tor", input),
        Command::Facthom { input } => ("facthom", input),
        Command::Bredon { input } => ("bredon", input),
        Command::Chenruan { input } => ("chenruan", input),
        Command::Traces { input } => ("traces", input),
        Command::Axioms { input } => ("axioms", input),
        Command::ListBuiltins => {
            for b in registry::builtins() {
                println!("builtin:{}  ({})", b.name, b.commands.join(", "));
            }
            return 0;
        }
    };

    let opts = match parse_options(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };

    let doc = match load_document(command, input) {
        Ok(d) => d,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };

    match run(command, &doc, &opts) {
        Ok(report) => {
            match cli.format.as_str() {
                "table" => print!("{}", report.table),
                _ => println!("{}", serde_json::to_string_pretty(&report.json).unwrap()),
            }
            0
        }
        Err(RunError::Schema(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(e @ RunError::Math(_)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn parse_options(cli: &Cli) -> Result<Options, String> {
    let field = match cli.field.as_str() {
        "q" | "Q" => FieldKind::Rational,
        other => match other.strip_prefix("fp:") {
            Some(p) => {
                let p: u32 = p.parse().map_err(|_| format!("cannot parse prime in '{other}'"))?;
                FieldKind::prime(p).map_err(|e| e.to_string())?
            }
            None => return Err(format!("unknown field '{other}'; expected 'q' or 'fp:<p>'")),
        },
    };
    let normalized = match cli.normalized.as_str() {
        "true" => true,
        "false" => false,
        other => return Err(format!("--normalized takes 'true' or 'false', got '{other}'")),
    };
    if !matches!(cli.format.as_str(), "json" | "table") {
        return Err(format!("--format takes 'json' or 'table', got '{}'", cli.format));
    }
    let convention = match cli.trace_convention.as_str() {
        "standard" => TraceConvention::TwistSecondArgument,
        "flipped" => TraceConvention::TwistFirstArgument,
        other => {
            return Err(format!(
                "--trace-convention takes 'standard' or 'flipped', got '{other}'"
            ))
        }
    };
    if cli.cap == 0 {
        return Err("--cap must be at least 1".into());
    }
    Ok(Options {
        field,
        cap: cli.cap,
        normalized,
        oracle: cli.oracle,
        convention,
    })
}

fn load_document(command: &str, input: &str) -> Result<Value, String> {
    if let Some(name) = input.strip_prefix("builtin:") {
        let builtin = registry::lookup(name)
            .ok_or_else(|| format!("no builtin named '{name}'; try list-builtins"))?;
        if !builtin.commands.contains(&command) {
            return Err(format!(
                "builtin '{name}' is an input for {}, not {command}",
                builtin.commands.join("/")
            ));
        }
        return Ok(builtin.doc);
    }
    let text = std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("{input} is not valid JSON: {e}"))
}
