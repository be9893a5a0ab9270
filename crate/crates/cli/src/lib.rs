//! `qglue`: gluing, reports, Gorenstein-projective listings and oracle
//! cross-checks for bound quiver algebras given as `.qalg` files.
//!
//! The ground field comes from the `field` line of the first input and must
//! be one of [`PRIMES`]; every other input must declare the same prime.

pub mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

use qglue_core::atlas::{
    auslander_presentation, gproj_atlas, irr_table, knit, verify_aus_gluing, ARQuiverData, AtlasError,
    AuslanderPresentation, ModuleAtlas, Selection,
};
use qglue_core::gluing::{
    classify_gproj_via_gluing, cm_free_check, factoring_check, gorenstein_transfer_check, GluingError, Verdict,
};
use qglue_core::homology::{default_bound, ext_dim, ext_dim_coresolution, gorenstein_report, GorensteinReport};
use qglue_core::modules::{cokernel, emit_qrep, map_from_generators, projective_sum, simple, Representation};
use qglue_core::oracle::{basis_dim_bruteforce, hom_dim_kronecker};
use qglue_core::presentation::{
    declared_prime, detect_gluing, emit_dot, emit_qalg, glue, glued_ideal_check, parse_presentation, Algebra, Detected,
    GluingSpec, PresentationError, Side,
};
use qglue_core::{Field, Fp};

use report::*;

/// Primes the binary is compiled for.
pub const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 101, 1009, 10007, 32003];

pub const THEOREM_CHECKS: [&str; 6] = [
    "gorenstein_transfer",
    "gproj_classification",
    "factoring",
    "cm_free",
    "aus_quiver",
    "aus_relations",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: PresentationError },
    #[error("field {0} is not supported (compiled primes: {PRIMES:?})")]
    UnsupportedPrime(u64),
    #[error("inputs declare different fields: {0} and {1}")]
    FieldMismatch(u64, u64),
    #[error("bad --at value `{0}`, expected a=<vertex>,b=<vertex>")]
    BadAt(String),
    #[error("{path}: no vertex named `{name}`")]
    UnknownVertex { path: String, name: String },
    #[error("{0}")]
    Construction(String),
    #[error("{0}")]
    Budget(String),
    #[error("oracle divergence: {0}")]
    Divergence(String),
}

impl CliError {
    /// 2 for input or construction errors, 3 for budget, 4 for oracle
    /// divergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            CliError::Divergence(_) => 4,
            _ => 2,
        }
    }
}

impl From<AtlasError> for CliError {
    fn from(e: AtlasError) -> Self {
        match e {
            AtlasError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            e => CliError::Construction(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qglue", version, about = "Simple gluings of bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Glue two algebras at one vertex each.
    Glue(GlueArgs),
    /// Gorenstein data, Gproj atlas, AR and Auslander quivers, and theorem checks.
    Report(ReportArgs),
    /// Write one `.qrep` per indecomposable Gorenstein projective.
    Gproj(GprojArgs),
    /// Compare fast computations against slow independent ones.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct GlueArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    /// Glue vertices, as `a=<vertex of first>,b=<vertex of second>`.
    #[arg(long)]
    pub at: String,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    pub algebra: PathBuf,
    /// Resolution length bound for injective dimensions. Defaults to 2·dim.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Maximum number of indecomposables to knit.
    #[arg(long, default_value_t = 200)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Treat the input as the gluing of these two component files.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub components: Option<Vec<PathBuf>>,
    /// Glue vertices for `--components`.
    #[arg(long, requires = "components")]
    pub at: Option<String>,
    #[arg(short, long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Record wall-clock time in the report, which makes it non-reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct GprojArgs {
    pub algebra: PathBuf,
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, default_value_t = 200)]
    pub budget: usize,
    #[arg(short, long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    Basis,
    Hom,
    Ext,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub mode: OracleMode,
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Random module pairs per algebra in hom mode.
    #[arg(long, default_value_t = 20)]
    pub cases: usize,
    /// Largest Ext degree in ext mode.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Runs a parsed command line, returning what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let inputs: Vec<&Path> = match &cli.command {
        Command::Glue(a) => vec![&a.first, &a.second],
        Command::Report(a) => {
            let mut v = vec![a.algebra.as_path()];
            v.extend(a.components.iter().flatten().map(PathBuf::as_path));
            v
        }
        Command::Gproj(a) => vec![&a.algebra],
        Command::Oracle(a) => a.inputs.iter().map(PathBuf::as_path).collect(),
    };
    let texts: Vec<Source> = inputs.iter().map(|p| Source::read(p)).collect::<Result<_, _>>()?;
    let p = texts[0].prime;
    if let Some(s) = texts.iter().find(|s| s.prime != p) {
        return Err(CliError::FieldMismatch(p, s.prime));
    }
    macro_rules! dispatch {
        ($($p:literal),*) => {
            match p {
                $($p => run_in::<Fp<$p>>(cli, &texts),)*
                other => Err(CliError::UnsupportedPrime(other)),
            }
        };
    }
    dispatch!(2, 3, 5, 7, 11, 13, 17, 19, 101, 1009, 10007, 32003)
}

struct Source {
    path: String,
    text: String,
    prime: u64,
}

impl Source {
    fn read(path: &Path) -> Result<Source, CliError> {
        let shown = path.display().to_string();
        let text = fs::read_to_string(path).map_err(|e| CliError::Io {
            path: shown.clone(),
            source: e,
        })?;
        let prime = declared_prime(&text).map_err(|e| CliError::Input {
            path: shown.clone(),
            source: e,
        })?;
        Ok(Source {
            path: shown,
            text,
            prime,
        })
    }

    fn algebra<F: Field>(&self) -> Result<Arc<Algebra<F>>, CliError> {
        parse_presentation::<F>(&self.text)
            .and_then(|p| p.complete())
            .map_err(|e| CliError::Input {
                path: self.path.clone(),
                source: e,
            })
    }

    fn digest(&self) -> InputDigest {
        InputDigest {
            path: self.path.clone(),
            sha256: hex::encode(Sha256::digest(self.text.as_bytes())),
        }
    }

    fn stem(&self) -> String {
        Path::new(&self.path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "algebra".into())
    }

    fn file_name(&self) -> String {
        Path::new(&self.path)
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| self.path.clone())
    }

    fn vertex<F: Field>(&self, alg: &Algebra<F>, name: &str) -> Result<usize, CliError> {
        alg.quiver().vertex_index(name).ok_or_else(|| CliError::UnknownVertex {
            path: self.path.clone(),
            name: name.to_string(),
        })
    }
}

fn run_in<F: Field>(cli: &Cli, src: &[Source]) -> Result<String, CliError> {
    match &cli.command {
        Command::Glue(a) => cmd_glue::<F>(a, &src[0], &src[1]),
        Command::Report(a) => cmd_report::<F>(a, src),
        Command::Gproj(a) => cmd_gproj::<F>(a, &src[0]),
        Command::Oracle(a) => cmd_oracle::<F>(a, src),
    }
}

fn parse_at(s: &str) -> Result<(String, String), CliError> {
    let mut a = None;
    let mut b = None;
    for part in s.split(',') {
        match part.split_once('=') {
            Some(("a", v)) if !v.is_empty() => a = Some(v.to_string()),
            Some(("b", v)) if !v.is_empty() => b = Some(v.to_string()),
            _ => return Err(CliError::BadAt(s.to_string())),
        }
    }
    a.zip(b).ok_or_else(|| CliError::BadAt(s.to_string()))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Io {
            path: dir.display().to_string(),
            source: e,
        })?;
    }
    fs::write(path, contents).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn glue_inputs<F: Field>(first: &Source, second: &Source, at: &str) -> Result<GluingSpec<F>, CliError> {
    let (an, bn) = parse_at(at)?;
    let (x, y) = (first.algebra::<F>()?, second.algebra::<F>()?);
    let (a, b) = (first.vertex(&x, &an)?, second.vertex(&y, &bn)?);
    glue(&x, a, &y, b).map_err(|e| CliError::Construction(e.to_string()))
}

fn rename_side<F: Field>(spec: &GluingSpec<F>, side: Side, src: &Source, role: &str) -> RenameSide {
    let alg = spec.alg(side);
    let (q, g) = (alg.quiver(), spec.glued.quiver());
    RenameSide {
        input: src.path.clone(),
        role: role.to_string(),
        vertices: (0..q.num_vertices())
            .map(|i| {
                (
                    q.vertex_name(i).to_string(),
                    g.vertex_name(spec.vertex_map(side)[i]).to_string(),
                )
            })
            .collect(),
        arrows: (0..q.num_arrows())
            .map(|i| (q.arrow(i).name.clone(), g.arrow(spec.arrow_map(side)[i]).name.clone()))
            .collect(),
    }
}

fn cmd_glue<F: Field>(args: &GlueArgs, first: &Source, second: &Source) -> Result<String, CliError> {
    let spec = glue_inputs::<F>(first, second, &args.at)?;
    let (fs, ss) = if spec.swapped {
        (Side::B, Side::A)
    } else {
        (Side::A, Side::B)
    };
    let role = |s: Side| if s == Side::A { "A" } else { "B" };
    let table = RenameTable {
        schema: SCHEMA,
        glued_vertex: spec.glued.quiver().vertex_name(spec.v).to_string(),
        swapped: spec.swapped,
        first: rename_side(&spec, fs, first, role(fs)),
        second: rename_side(&spec, ss, second, role(ss)),
    };
    let qalg = emit_qalg(spec.glued.presentation());
    write(&args.output, &qalg)?;
    let json_path = args.output.with_extension("json");
    write(&json_path, &to_json(&table))?;
    Ok(format!("{}\n{}\n", args.output.display(), json_path.display()))
}

fn classified_atlas<F: Field>(
    alg: &Arc<Algebra<F>>,
    rep: &GorensteinReport,
    budget: usize,
) -> Result<ModuleAtlas<F>, AtlasError> {
    gproj_atlas(&knit(alg, budget)?, rep)
}

fn atlas_summary<F: Field>(at: &ModuleAtlas<F>) -> AtlasSummary {
    let g = at.gproj_indices().unwrap_or_default();
    let nonproj: Vec<Vec<usize>> = g
        .iter()
        .filter(|&&i| !at.projective[i])
        .map(|&i| at.modules[i].dims().to_vec())
        .collect();
    AtlasSummary {
        indecomposables: at.len(),
        gproj: g.len(),
        cm_free: nonproj.is_empty(),
        nonprojective_gproj: nonproj,
        modules: (0..at.len())
            .map(|i| ModuleEntry {
                dims: at.modules[i].dims().to_vec(),
                projective: at.projective[i],
                injective: at.injective[i],
            })
            .collect(),
    }
}

/// Gproj AR quiver and Auslander presentation of a classified atlas.
struct AusBundle<F> {
    arq: ARQuiverData<F>,
    aus: Result<AuslanderPresentation<F>, AtlasError>,
}

fn aus_bundle<F: Field>(at: &ModuleAtlas<F>) -> Result<AusBundle<F>, CliError> {
    let arq = irr_table(at, Selection::Gproj)?;
    let names: Vec<String> = (1..=arq.num_vertices()).map(|i| format!("g{i}")).collect();
    let aus = auslander_presentation(&arq, &names);
    Ok(AusBundle { arq, aus })
}

fn aus_summary<F: Field>(b: &AusBundle<F>) -> Option<AusSummary> {
    let aus = b.aus.as_ref().ok()?;
    Some(AusSummary {
        vertices: aus.presentation.quiver.num_vertices(),
        arrows: aus.presentation.quiver.num_arrows(),
        end_dim: aus.end_dim,
        quotient_dim: aus.algebra.dim(),
        relations: aus
            .presentation
            .relations
            .iter()
            .map(|r| r.display(&aus.presentation.quiver).to_string())
            .collect(),
    })
}

struct Analysed<F> {
    report: AlgebraReport,
    atlas: ModuleAtlas<F>,
    aus: AusBundle<F>,
}

fn analyse<F: Field>(
    name: String,
    alg: &Arc<Algebra<F>>,
    bound: usize,
    budget: usize,
) -> Result<Analysed<F>, CliError> {
    let g = gorenstein_report(alg, bound);
    let atlas = classified_atlas(alg, &g, budget)?;
    let aus = aus_bundle(&atlas)?;
    let report = AlgebraReport {
        name,
        dim: alg.dim(),
        gorenstein: (&g).into(),
        atlas: Some(atlas_summary(&atlas)),
        aus: aus_summary(&aus),
    };
    Ok(Analysed { report, atlas, aus })
}

fn all_verdicts(v: Verdict) -> BTreeMap<String, String> {
    THEOREM_CHECKS.iter().map(|k| (k.to_string(), v.to_string())).collect()
}

enum Decomposition<F> {
    Spec(Box<GluingSpec<F>>),
    NonGlued,
    None,
}

fn cmd_report<F: Field>(args: &ReportArgs, src: &[Source]) -> Result<String, CliError> {
    let start = Instant::now();
    let l = src[0].algebra::<F>()?;
    let bound = args.bound.unwrap_or_else(|| default_bound(&l));
    let stem = src[0].stem();
    let mut bundle = ReportBundle {
        schema: SCHEMA,
        seed: args.seed,
        inputs: src.iter().map(Source::digest).collect(),
        algebra: AlgebraReport {
            name: src[0].path.clone(),
            dim: l.dim(),
            gorenstein: (&gorenstein_report(&l, bound)).into(),
            atlas: None,
            aus: None,
        },
        gluing: None,
        components: Vec::new(),
        verdicts: BTreeMap::new(),
        files: Vec::new(),
        timing_ms: None,
    };
    let json_path = args.out_dir.join(format!("{stem}.report.json"));
    let finish = |mut bundle: ReportBundle| -> Result<String, CliError> {
        if args.timing {
            bundle.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        let s = to_json(&bundle);
        write(&json_path, &s)?;
        Ok(s)
    };

    let decomposition = match (&args.components, &args.at) {
        (Some(_), Some(at)) => {
            let spec = glue_inputs::<F>(&src[1], &src[2], at)?;
            match glued_ideal_check(&spec, &l) {
                Some(iso) => Decomposition::Spec(Box::new(spec.transport(&l, &iso))),
                None => {
                    bundle.gluing = Some(gluing_summary(&spec.mark_non_glued()));
                    Decomposition::NonGlued
                }
            }
        }
        (Some(_), None) => return Err(CliError::BadAt(String::new())),
        _ => match detect_gluing(&l) {
            Detected::Glued(s) => Decomposition::Spec(s),
            Detected::NonGluedIdeal { .. } => Decomposition::NonGlued,
            Detected::NoSplit => Decomposition::None,
        },
    };

    let main = match analyse(src[0].path.clone(), &l, bound, args.budget) {
        Ok(a) => a,
        Err(e @ CliError::Budget(_)) => {
            bundle.verdicts = all_verdicts(Verdict::Skipped("budget exceeded".into()));
            finish(bundle)?;
            return Err(e);
        }
        Err(e) => return Err(e),
    };
    bundle.algebra = main.report.clone();

    let dot = |name: String, body: String, files: &mut Vec<String>| -> Result<(), CliError> {
        write(&args.out_dir.join(&name), &body)?;
        files.push(name);
        Ok(())
    };
    let full = irr_table(&main.atlas, Selection::All)?;
    dot(
        format!("{stem}.ar.dot"),
        full.to_dot(&main.atlas, "AR"),
        &mut bundle.files,
    )?;
    dot(
        format!("{stem}.gproj_ar.dot"),
        main.aus.arq.to_dot(&main.atlas, "GprojAR"),
        &mut bundle.files,
    )?;
    if let Ok(aus) = &main.aus.aus {
        dot(format!("{stem}.aus.dot"), emit_dot(&aus.algebra), &mut bundle.files)?;
        dot(
            format!("{stem}.aus.qalg"),
            emit_qalg(&aus.presentation),
            &mut bundle.files,
        )?;
    }

    bundle.verdicts = match decomposition {
        Decomposition::None => all_verdicts(Verdict::Skipped("no gluing decomposition".into())),
        Decomposition::NonGlued => all_verdicts(Verdict::non_glued()),
        Decomposition::Spec(spec) => {
            bundle.gluing = Some(gluing_summary(&spec));
            let names = match &args.components {
                Some(c) => [c[0].display().to_string(), c[1].display().to_string()],
                None => [format!("{stem}:A"), format!("{stem}:B")],
            };
            let names = if spec.swapped {
                [names[1].clone(), names[0].clone()]
            } else {
                names
            };
            let parts = [Side::A, Side::B]
                .into_iter()
                .zip(names)
                .map(|(side, n)| analyse(n, spec.alg(side), bound, args.budget))
                .collect::<Result<Vec<_>, _>>();
            let parts = match parts {
                Ok(p) => p,
                Err(e @ CliError::Budget(_)) => {
                    bundle.verdicts = all_verdicts(Verdict::Skipped("budget exceeded".into()));
                    finish(bundle)?;
                    return Err(e);
                }
                Err(e) => return Err(e),
            };
            let v = theorem_verdicts(&spec, &parts[0], &parts[1], &main, bound)?;
            bundle.components = parts.into_iter().map(|p| p.report).collect();
            v
        }
    };
    finish(bundle)
}

fn gluing_summary<F: Field>(spec: &GluingSpec<F>) -> GluingSummary {
    GluingSummary {
        glued_vertex: spec.glued.quiver().vertex_name(spec.v).to_string(),
        a: spec.left.quiver().vertex_name(spec.a).to_string(),
        b: spec.right.quiver().vertex_name(spec.b).to_string(),
        glued_ideal: spec.glued_ideal,
    }
}

fn theorem_verdicts<F: Field>(
    spec: &GluingSpec<F>,
    a: &Analysed<F>,
    b: &Analysed<F>,
    l: &Analysed<F>,
    bound: usize,
) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: Verdict| {
        out.insert(k.to_string(), v.to_string());
    };
    let rep = |alg: &Arc<Algebra<F>>| gorenstein_report(alg, bound);
    put(
        "gorenstein_transfer",
        gorenstein_transfer_check(spec, &rep(&spec.left), &rep(&spec.right), &rep(&spec.glued)),
    );
    let gl = |x: &Analysed<F>| x.atlas.gproj_modules().map_err(CliError::from);
    let (ga, gb, gll) = (gl(a)?, gl(b)?, gl(l)?);
    let gluing_err = |e: GluingError| match e {
        GluingError::NonGluedIdeal => Verdict::non_glued(),
        e => Verdict::Fail(e.to_string()),
    };
    put(
        "gproj_classification",
        classify_gproj_via_gluing(spec, &ga, &gb, &gll).map_or_else(gluing_err, |c| c.verdict()),
    );
    put("factoring", factoring_check(spec, &ga, &gb).unwrap_or_else(gluing_err));
    put("cm_free", cm_free_check(spec, &ga, &gb, &gll));
    fn aus<F>(x: &Analysed<F>) -> Result<&AuslanderPresentation<F>, String> {
        x.aus.aus.as_ref().map_err(|e| e.to_string())
    }
    match (aus(a), aus(b), aus(l)) {
        (Ok(aa), Ok(ab), Ok(al)) => {
            let r = verify_aus_gluing(spec, (&a.aus.arq, aa), (&b.aus.arq, ab), (&l.aus.arq, al))?;
            put("aus_quiver", r.quiver_verdict());
            put("aus_relations", r.relations_verdict());
        }
        (x, y, z) => {
            let e = [x.err(), y.err(), z.err()]
                .into_iter()
                .flatten()
                .next()
                .unwrap_or_default();
            put("aus_quiver", Verdict::Fail(e.clone()));
            put("aus_relations", Verdict::Fail(e));
        }
    }
    Ok(out)
}

fn cmd_gproj<F: Field>(args: &GprojArgs, src: &Source) -> Result<String, CliError> {
    let l = src.algebra::<F>()?;
    let g = gorenstein_report(&l, args.bound.unwrap_or_else(|| default_bound(&l)));
    let at = classified_atlas(&l, &g, args.budget)?;
    let stem = src.stem();
    let algebra_file = src.file_name();
    let mut modules = Vec::new();
    for (k, i) in at.gproj_indices()?.into_iter().enumerate() {
        let file = format!("{stem}_gproj_{}.qrep", k + 1);
        write(&args.out_dir.join(&file), &emit_qrep(&at.modules[i], &algebra_file))?;
        modules.push(GprojFile {
            file,
            dims: at.modules[i].dims().to_vec(),
            projective: at.projective[i],
        });
    }
    let summary = GprojSummary {
        schema: SCHEMA,
        input: src.digest(),
        gorenstein: (&g).into(),
        modules,
    };
    let s = to_json(&summary);
    write(&args.out_dir.join(format!("{stem}.gproj.json")), &s)?;
    Ok(s)
}

/// A random quotient of a small sum of projectives.
pub fn random_module<F: Field, R: Rng>(alg: &Arc<Algebra<F>>, rng: &mut R) -> Representation<F> {
    let n = alg.num_vertices();
    let verts: Vec<usize> = (0..rng.random_range(1..3)).map(|_| rng.random_range(0..n)).collect();
    let p = projective_sum(alg, &verts);
    let sub: Vec<usize> = (0..rng.random_range(0..3)).map(|_| rng.random_range(0..n)).collect();
    if sub.is_empty() {
        return p;
    }
    let images: Vec<Vec<F>> = sub
        .iter()
        .map(|&v| (0..p.dim_at(v)).map(|_| F::sample(rng)).collect())
        .collect();
    cokernel(&map_from_generators(&sub, &p, &images)).0
}

fn cmd_oracle<F: Field>(args: &OracleArgs, src: &[Source]) -> Result<String, CliError> {
    let mut cases = Vec::new();
    for s in src {
        let alg = s.algebra::<F>()?;
        match args.mode {
            OracleMode::Basis => {
                let pres = alg.presentation();
                let slow = (1..=alg.maxdeg() + 1)
                    .find_map(|n| basis_dim_bruteforce(pres, n))
                    .unwrap_or(0);
                cases.push(OracleCase {
                    case: s.path.clone(),
                    fast: alg.dim(),
                    slow,
                });
            }
            OracleMode::Hom => {
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                for k in 0..args.cases {
                    let m = random_module(&alg, &mut rng);
                    let n = random_module(&alg, &mut rng);
                    cases.push(OracleCase {
                        case: format!(
                            "{} pair {k}: {} → {}",
                            s.path,
                            m.dim_vector_string(),
                            n.dim_vector_string()
                        ),
                        fast: qglue_core::modules::hom_dim(&m, &n),
                        slow: hom_dim_kronecker(&m, &n),
                    });
                }
            }
            OracleMode::Ext => {
                let simples: Vec<_> = (0..alg.num_vertices()).map(|i| simple(&alg, i)).collect();
                let q = alg.quiver();
                for (i, x) in simples.iter().enumerate() {
                    for (j, y) in simples.iter().enumerate() {
                        for k in 1..=args.degree {
                            cases.push(OracleCase {
                                case: format!("{} Ext^{k}(S{}, S{})", s.path, q.vertex_name(i), q.vertex_name(j)),
                                fast: ext_dim(x, y, k),
                                slow: ext_dim_coresolution(x, y, k),
                            });
                        }
                    }
                }
            }
        }
    }
    let divergent = cases.iter().filter(|c| c.fast != c.slow).count();
    let report = OracleReport {
        schema: SCHEMA,
        mode: format!("{:?}", args.mode).to_lowercase(),
        divergent,
        cases,
    };
    if let Some(c) = report.cases.iter().find(|c| c.fast != c.slow) {
        return Err(CliError::Divergence(format!(
            "{}: fast {}, slow {}",
            c.case, c.fast, c.slow
        )));
    }
    Ok(to_json(&report))
}
