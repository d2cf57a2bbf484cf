//! Exact-arithmetic homology engines for one-dimensional global quotient
//! orbifolds and finite group actions.
//!
//! The crate is organized around a single substrate, exact linear algebra
//! over Q or a prime field ([`matrix`]), on top of which sit:
//!
//! - [`group`]: finite groups as Cayley tables, subgroups, conjugacy,
//!   centralizers, coset actions;
//! - [`complex`]: bounded chain complexes, homology, group actions on
//!   complexes and invariants by averaging;
//! - [`algebra`]: finite-dimensional associative algebras, twists,
//!   bimodules and one-sided modules;
//! - [`resolutions`]: Hochschild and two-sided bar chain complexes and
//!   twisted traces;
//! - [`facthom`]: orbifold circles, collar gluings, and the excision
//!   evaluator for their invariants;
//! - [`bredon`]: orbit categories, coefficient systems, equivariant CW
//!   complexes and Bredon homology;
//! - [`inertia`]: fixed-point subcomplexes and inertia (Chen-Ruan) Betti
//!   numbers of global quotients.

// Structure-constant code indexes basis triples directly.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bredon;
pub mod complex;
pub mod error;
pub mod facthom;
pub mod field;
pub mod group;
pub mod inertia;
pub mod matrix;
pub mod resolutions;

pub use algebra::{Algebra, AlgebraTwist, Bimodule, RightModule, TwistKind};
pub use bredon::{CoefficientSystem, GammaCwComplex, OrbitCategory, Variance};
pub use complex::{BettiVector, ChainComplex, ComplexGroupAction};
pub use error::*;
pub use facthom::{ActionKind, CollarGluing1D, DiskAlgebra1D, ExcisionResult, Orbifold1D, OrbifoldCircle};
pub use field::{FieldElement, FieldKind, Rational};
pub use group::{FiniteGroup, GroupAction, Subgroup};
pub use inertia::{chen_ruan_betti, fixed_subcomplex, InertiaPiece};
pub use matrix::{Matrix, SparseVec};
pub use resolutions::{bar_complex, hochschild_complex, twisted_traces, BarComplexSpec, HochschildComplexSpec, TraceConvention};
