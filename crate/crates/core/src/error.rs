use std::fmt;

use thiserror::Error;

/// Why a pair of elements has no join or no meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    NoUpperBound,
    NoLeastUpperBound,
    NoLowerBound,
    NoGreatestLowerBound,
}

impl fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFailure::NoUpperBound => "no upper bound",
            BoundFailure::NoLeastUpperBound => "no least upper bound",
            BoundFailure::NoLowerBound => "no lower bound",
            BoundFailure::NoGreatestLowerBound => "no greatest lower bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle through `{label}`")]
    CycleDetected { label: String },

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("{operation}: size {size} exceeds the configured bound of {limit}")]
    SizeLimit {
        operation: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("not a lattice: `{a}` and `{b}` have {reason}")]
    NotALattice {
        a: String,
        b: String,
        reason: BoundFailure,
    },

    #[error("`{element}` is not {}{}", irreducibility_text(*.join_irreducible, *.meet_irreducible), step_text(*.step))]
    NotIrreducible {
        element: String,
        join_irreducible: bool,
        meet_irreducible: bool,
        step: Option<usize>,
    },

    #[error("duplication site `{element}` lost irreducibility at step {step}")]
    IrreducibilityLost { element: String, step: usize },

    #[error("h-vector has no nonzero entry")]
    AllZero,

    #[error("h-vector is empty")]
    EmptyVector,

    #[error("h-vector is not truncated: last entry is zero")]
    TrailingZero,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error in field `{field}`: {message}")]
    Schema { field: String, message: String },

    #[error("generator failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("internal contract violation: {0}")]
    ContractViolation(String),
}

fn irreducibility_text(join: bool, meet: bool) -> &'static str {
    match (join, meet) {
        (false, false) => "join-irreducible or meet-irreducible",
        (false, true) => "join-irreducible",
        (true, false) => "meet-irreducible",
        (true, true) => "irreducible (inconsistent report)",
    }
}

fn step_text(step: Option<usize>) -> String {
    step.map(|s| format!(" at duplication step {s}"))
        .unwrap_or_default()
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
