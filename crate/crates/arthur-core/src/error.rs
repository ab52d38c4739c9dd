//! Error types: domain errors (violated preconditions, named) and parse
//! errors (offending token and byte position).

use thiserror::Error;

/// A violated precondition of a library operation.
///
/// Every variant names the precondition it reports so that callers (and the
/// CLI, which maps these to exit code 2) can surface a precise message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    /// `minus` is undefined on the empty partition.
    #[error("minus is undefined on the empty partition")]
    MinusOnEmpty,

    /// A partition's size has the wrong parity for the requested type
    /// (type B needs odd size, types C and D need even size).
    #[error("partition of size {size} has the wrong parity for type {ctype}")]
    ParityMismatch { size: u32, ctype: &'static str },

    /// An operation required a partition of a specific classical type.
    #[error("partition {partition} is not of type {ctype}")]
    NotOfType {
        partition: String,
        ctype: &'static str,
    },

    /// Dominance comparison requires equal sizes.
    #[error("dominance is undefined between partitions of sizes {left} and {right}")]
    DominanceSizeMismatch { left: u32, right: u32 },

    /// Orbit comparison requires the same classical type and the same size.
    #[error("orbits of type {left_type} (size {left_size}) and type {right_type} (size {right_size}) are not comparable")]
    OrbitContextMismatch {
        left_type: &'static str,
        left_size: u32,
        right_type: &'static str,
        right_size: u32,
    },

    /// A very-even type-D partition carries exactly two orbits; constructing
    /// a single orbit for it requires an I/II label.
    #[error("partition {partition} is very even: an I/II label is required")]
    MissingVeryEvenLabel { partition: String },

    /// An I/II label is only meaningful on a very-even type-D partition.
    #[error("partition {partition} of type {ctype} is not very even: no I/II label is allowed")]
    UnexpectedVeryEvenLabel {
        partition: String,
        ctype: &'static str,
    },

    /// Duality produced a very-even partition from an unlabeled orbit, so the
    /// image label is underdetermined. This cannot arise for well-formed
    /// inputs; it is surfaced loudly instead of guessed.
    #[error("duality image {partition} is very even but the source orbit carries no label")]
    VeryEvenImageUnlabeled { partition: String },

    /// A move sequence violated one of its validity conditions.
    /// `condition` is one of "a" (index bounds), "b" (value profile),
    /// "c" (strictly decreasing moved values), "d" (disjoint positions).
    #[error("move sequence violates condition ({condition}): {detail}")]
    InvalidMoveSequence {
        condition: &'static str,
        detail: String,
    },

    /// A label constructor was given inconsistent data.
    #[error("invalid representation label {name}: {reason}")]
    InvalidLabel { name: String, reason: String },

    /// The operation requires a self-dual parameter.
    #[error("parameter is not self-dual")]
    NotSelfDual,

    /// The operation requires a parameter that is valid for the given group.
    #[error("parameter is not valid for {group}: {reason}")]
    InvalidForGroup { group: String, reason: String },

    /// The operation requires an unramified parameter.
    #[error("label {label} is ramified where an unramified parameter is required")]
    RamifiedLabel { label: String },

    /// Infinitesimal parameters must be closed under duality.
    #[error("infinitesimal parameter is not closed under duality")]
    LambdaNotSelfDual,

    /// No L-parameter exists with the requested infinitesimal parameter.
    #[error("no L-parameter has the requested infinitesimal parameter for {group}")]
    EmptyParameterFamily { group: String },

    /// The dominance-extremal partition in a parameter family either does not
    /// exist or is attained by more than one parameter.
    #[error("the {which} partition in the parameter family is not attained uniquely")]
    NonUniqueExtremum { which: &'static str },

    /// Weak-packet computation requires an anti-tempered parameter.
    #[error("parameter is not anti-tempered (a summand has a > 1)")]
    NotAntiTempered,

    /// The special-case witness construction requires a one-dimensional
    /// self-dual label.
    #[error("witness construction requires a self-dual label of dimension 1, got {name} (dim {dim})")]
    LabelNotOneDimSelfDual { name: String, dim: u32 },

    /// Brute-force re-verification (`--oracle`) disagreed with the primary
    /// algorithm. This indicates a bug and is reported rather than ignored.
    #[error("oracle cross-check failed for {operation}: {detail}")]
    OracleMismatch { operation: String, detail: String },
}

/// A text-syntax error, reporting the byte position and the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the input at which the error was detected.
    pub position: usize,
    /// What the parser was looking for.
    pub expected: String,
    /// The offending token (or "end of input").
    pub found: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ParseError {
            position,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
