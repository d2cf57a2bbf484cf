//! Input schemas, built-in example registry, and command runner behind the
//! `orbihom` binary.

pub mod registry;
pub mod runner;
pub mod schema;

pub use runner::{run, Options, Report, RunError};
