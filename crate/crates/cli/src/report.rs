use std::collections::BTreeMap;

use serde::Serialize;

use qglue_core::homology::{Bounded, GorensteinReport};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinSummary {
    pub gorenstein: bool,
    /// `null` when the bound was exceeded.
    pub gd: Option<usize>,
    pub left_injdim: Option<usize>,
    pub right_injdim: Option<usize>,
    pub bound: usize,
}

impl From<&GorensteinReport> for GorensteinSummary {
    fn from(r: &GorensteinReport) -> Self {
        GorensteinSummary {
            gorenstein: r.is_gorenstein(),
            gd: r.gd().value(),
            left_injdim: r.left_injdim.value(),
            right_injdim: r.right_injdim.value(),
            bound: r.bound,
        }
    }
}

pub fn bounded_str(b: Bounded) -> String {
    match b {
        Bounded::Value(v) => v.to_string(),
        Bounded::Exceeds(n) => format!(">{n}"),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleEntry {
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AtlasSummary {
    pub indecomposables: usize,
    pub gproj: usize,
    pub nonprojective_gproj: Vec<Vec<usize>>,
    pub cm_free: bool,
    pub modules: Vec<ModuleEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AusSummary {
    pub vertices: usize,
    pub arrows: usize,
    pub end_dim: usize,
    pub quotient_dim: usize,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub name: String,
    pub dim: usize,
    pub gorenstein: GorensteinSummary,
    pub atlas: Option<AtlasSummary>,
    pub aus: Option<AusSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GluingSummary {
    pub glued_vertex: String,
    pub a: String,
    pub b: String,
    pub glued_ideal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub schema: u32,
    pub seed: u64,
    pub inputs: Vec<InputDigest>,
    pub algebra: AlgebraReport,
    pub gluing: Option<GluingSummary>,
    pub components: Vec<AlgebraReport>,
    pub verdicts: BTreeMap<String, String>,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RenameSide {
    pub input: String,
    pub role: String,
    pub vertices: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RenameTable {
    pub schema: u32,
    pub glued_vertex: String,
    pub swapped: bool,
    pub first: RenameSide,
    pub second: RenameSide,
}

#[derive(Debug, Clone, Serialize)]
pub struct GprojFile {
    pub file: String,
    pub dims: Vec<usize>,
    pub projective: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GprojSummary {
    pub schema: u32,
    pub input: InputDigest,
    pub gorenstein: GorensteinSummary,
    pub modules: Vec<GprojFile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCase {
    pub case: String,
    pub fast: usize,
    pub slow: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub schema: u32,
    pub mode: String,
    pub cases: Vec<OracleCase>,
    pub divergent: usize,
}
