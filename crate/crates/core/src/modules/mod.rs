//! Representations of bound quivers and their morphisms.
//!
//! `P(i)` is realised on the normal words starting at `i`, in basis order;
//! every matrix touching a projective is relative to that basis.

mod cover;
mod decompose;
mod hom;
mod ops;
mod qrep;
mod rep;
mod standard;

use thiserror::Error;

pub use cover::{
    ar_cotranslate, ar_translate, generator_images, is_injective, is_projective, left_approx_cokernel, lift_through,
    map_from_generators, minimal_left_proj_approx, minimal_presentation, projective_cover, projective_sum, syzygy,
    syzygy_power, syzygy_with_cover, transpose, Cover, LeftApprox, Presentation1,
};
pub use decompose::{decompose, find_isomorphism, is_indecomposable, is_isomorphic, Decomposition, Summand};
pub(crate) use hom::as_columns;
pub use hom::{coordinates, end_ring, hom_dim, hom_space, span_dim, EndRing};
pub use ops::{
    cokernel, dual, dual_map, dual_map_between, image, kernel, quotient, quotient_split, radical, radical_bases,
    socle_bases, socle_dims, subrep, top_complements, top_dims,
};
pub use qrep::{emit_qrep, parse_qrep, qrep_algebra_file};
pub use rep::{direct_sum_map, hstack_into, sum_out_of, summand_maps, RepMorphism, Representation};
pub use standard::{
    generator_image, injective, projective, simple, standard_modules, yoneda, ProjectiveBasis, StandardModules,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("relation `{0}` does not act as zero")]
    RelationViolated(String),
    #[error("components do not intertwine arrow `{0}`")]
    NotIntertwining(String),
    #[error("field too small: no splitting found for a module of dimension {dim} over F_{p}")]
    FieldTooSmall { dim: usize, p: u64 },
    #[error("module has a projective summand")]
    ProjectiveSummand,
    #[error("module has an injective summand")]
    InjectiveSummand,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
