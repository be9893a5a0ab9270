//! Quivers with relations and their completed algebras.
//!
//! Paths are written in composition order: the word `b*a` means "first `a`,
//! then `b`". Normal forms come from a noncommutative Buchberger completion
//! under the degree-lexicographic order, with arrows ordered by declaration.

mod algebra;
mod emit;
mod glue;
mod parse;
mod poly;
mod quiver;

use thiserror::Error;

pub use algebra::{Algebra, Presentation, DEFAULT_MAXDEG};
pub use emit::{emit_dot, emit_qalg};
pub use glue::{check_gluing_finiteness, detect_gluing, glue, glued_ideal_check, Detected, GluingSpec, Side};
pub use parse::{declared_prime, parse_presentation, DEFAULT_PRIME};
pub use poly::PathPoly;
pub use quiver::{Arrow, Path, Quiver, QuiverIso};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: {inner}")]
    Located {
        line: usize,
        col: usize,
        inner: Box<PresentationError>,
    },
    #[error("invalid name `{0}`")]
    BadName(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows do not compose in `{0}`")]
    NotComposable(String),
    #[error("relation terms are not parallel in `{0}`")]
    NonParallel(String),
    #[error("relation term `{0}` has length < 2 (not an admissible generator)")]
    ShortTerm(String),
    #[error("relation is zero")]
    ZeroRelation,
    #[error("finite-dimensionality not certified at maxdeg {maxdeg}")]
    NotCertified { maxdeg: usize },
    #[error("file declares field {declared} but the session uses {session}")]
    FieldMismatch { declared: u64, session: u64 },
    #[error("field too small: algebra dimension {dim} is not below p = {p}")]
    FieldTooSmall { dim: usize, p: u64 },
    #[error("gluing is infinite-dimensional: return paths survive at both {a} and {b} ({witness})")]
    GluingInfinite { a: String, b: String, witness: String },
}

impl PresentationError {
    /// The error with any position wrapper removed.
    pub fn root(&self) -> &PresentationError {
        match self {
            PresentationError::Located { inner, .. } => inner.root(),
            e => e,
        }
    }
}
