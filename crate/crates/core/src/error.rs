//! Error types shared across the engines.
//!
//! Construction-time verification failures (a non-associative table,
//! d^2 != 0, a non-functorial coefficient system) are hard errors.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {0} is divisible by the characteristic {1}")]
    DenominatorDivisibleByP(i64, u32),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not {0}x{0}")]
    BadTableShape(usize),
    #[error("table entry out of range at ({0}, {1})")]
    EntryOutOfRange(usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("operation is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group order {0} exceeds the enumeration limit {1}")]
    LimitExceeded(usize, usize),
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("element index {0} out of range for group of order {1}")]
    NoSuchElement(usize, usize),
    #[error("action table is not a valid group action: {0}")]
    InvalidAction(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("differential in degree {degree} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    ShapeMismatch {
        degree: i64,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("d^2 != 0 between degrees {0} and {1}")]
    BoundarySquareNonzero(i64, i64),
    #[error("complexes are over different fields")]
    FieldMismatch,
    #[error("field characteristic {0} divides the group order {1}; averaging is undefined")]
    CharacteristicDividesOrder(u32, usize),
    #[error("group element {0} does not act by chain maps in degree {1}")]
    NotAChainMap(usize, i64),
    #[error("group action matrices do not define a representation: {0}")]
    NotARepresentation(String),
    #[error("truncation degree {0} is below the minimum degree {1}")]
    TruncationBelowMin(i64, i64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("designated unit is not a two-sided identity")]
    UnitNotIdentity,
    #[error("structure constant shape mismatch")]
    BadShape,
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("twist does not fix the unit")]
    TwistMovesUnit,
    #[error("twist fails the {0} law at basis pair ({1}, {2})")]
    TwistNotMultiplicative(String, usize, usize),
    #[error("twist does not have the declared order {0}")]
    TwistOrderMismatch(u32),
    #[error("operation requires an {expected}, got an {got}")]
    TwistKindMismatch {
        expected: &'static str,
        got: &'static str,
    },
    #[error("module action fails the {0} law at basis pair ({1}, {2})")]
    ActionNotMultiplicative(String, usize, usize),
    #[error("module action does not fix elements under the unit")]
    ActionNotUnital,
    #[error("left and right actions do not commute at ({0}, {1})")]
    ActionsDoNotCommute(usize, usize),
    #[error("bimodule is not over a single algebra")]
    AlgebraMismatch,
    #[error("module is over a different algebra than expected")]
    WrongAlgebra,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BredonError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("coefficient system is not functorial: {0}")]
    NotFunctorial(String),
    #[error("coefficient system and complex use different orbit categories")]
    OrbitCategoryMismatch,
    #[error("isotropy type of cell orbit '{0}' is not an object of the orbit category")]
    IsotropyNotCovered(String),
    #[error("boundary term on orbit '{0}' is not a valid equivariant map: {1}")]
    InvalidBoundaryMorphism(String, String),
    #[error("cell orbit '{0}' carries a nontrivial orientation character; supply a subdivided cell structure")]
    OrientationCharacter(String),
    #[error("boundary of orbit '{0}' is not compatible with its orientation character")]
    CharacterInconsistent(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("decomposition is invalid: {0}")]
    DecompositionInvalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InertiaError {
    #[error("element {element} fixes cell '{orbit}' reversing orientation; subdivide so the fixed locus is a subcomplex")]
    OrientationReversal { element: usize, orbit: String },
    #[error(transparent)]
    Bredon(#[from] BredonError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FacthomError {
    #[error("action kind is not supported for this orbifold: {0}")]
    UnsupportedAction(String),
    #[error("no coefficient datum for singular stratum coloured '{0}'")]
    MissingCoefficient(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("collar gluing does not reassemble the orbifold: {0}")]
    DecompositionInvalid(String),
    #[error("orbifold descriptor is invalid: {0}")]
    BadDescriptor(String),
}
