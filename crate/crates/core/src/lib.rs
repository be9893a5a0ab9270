//! Bound quiver algebras over prime fields, simple gluings, and their
//! Gorenstein-projective invariants.

pub mod atlas;
pub mod field;
pub mod gluing;
pub mod homology;
pub mod linalg;
pub mod modules;
pub mod oracle;
pub mod poly;
pub mod presentation;

#[cfg(test)]
mod testutil;

pub use field::{Field, Fp, One, Zero};

/// The default ground field.
pub type Fp32003 = Fp<32003>;
pub type Mat32003 = linalg::Mat<Fp32003>;
pub type Algebra32003 = presentation::Algebra<Fp32003>;
