//! The six functors between the module categories of a simple gluing
//! `Λ = A ⊔_v B` and its components.
//!
//! `i_μ`, `j_μ` restrict a `Λ`-module to one side. `i_λ`, `j_λ` induce along
//! a minimal projective presentation, sending `P(i)` to `U(i)`; `i_ρ`, `j_ρ`
//! are their duals over the opposite gluing.

mod checks;

use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;
use crate::homology::HomologyError;
use crate::linalg::Mat;
use crate::modules::{
    dual, dual_map, generator_images, is_isomorphic, kernel, lift_through, map_from_generators, minimal_presentation,
    projective_sum, quotient_split, sum_out_of, ModuleError, Presentation1, ProjectiveBasis, RepMorphism,
    Representation,
};
use crate::presentation::{Algebra, GluingSpec, Path, Side};

pub use checks::{
    classify_gproj_via_gluing, cm_free_check, composite_injectivity_check, factoring_check, factoring_dims,
    gorenstein_transfer_check, Classification, Origin, Verdict,
};

#[cfg(test)]
mod tests;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("skipped: non-glued ideal")]
    NonGluedIdeal,
    #[error("exactness verification failed: {0}")]
    Exactness(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// One of the six functors, tied to a gluing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctorTag {
    ILambda,
    IMu,
    IRho,
    JLambda,
    JMu,
    JRho,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 6] = [
        FunctorTag::ILambda,
        FunctorTag::IMu,
        FunctorTag::IRho,
        FunctorTag::JLambda,
        FunctorTag::JMu,
        FunctorTag::JRho,
    ];

    pub fn side(self) -> Side {
        match self {
            FunctorTag::ILambda | FunctorTag::IMu | FunctorTag::IRho => Side::A,
            _ => Side::B,
        }
    }

    /// Whether the functor goes from the glued algebra to a component.
    pub fn is_restriction(self) -> bool {
        matches!(self, FunctorTag::IMu | FunctorTag::JMu)
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctorTag::ILambda => "i_lambda",
            FunctorTag::IMu => "i_mu",
            FunctorTag::IRho => "i_rho",
            FunctorTag::JLambda => "j_lambda",
            FunctorTag::JMu => "j_mu",
            FunctorTag::JRho => "j_rho",
        }
    }

    /// The algebra the functor's inputs live over.
    pub fn domain<'a, F: Field>(self, spec: &'a GluingSpec<F>) -> &'a Arc<Algebra<F>> {
        if self.is_restriction() {
            &spec.glued
        } else {
            spec.alg(self.side())
        }
    }

    pub fn apply<F: Field>(self, spec: &GluingSpec<F>, m: &Representation<F>) -> Representation<F> {
        let side = self.side();
        match self {
            FunctorTag::IMu | FunctorTag::JMu => restrict(spec, side, m),
            FunctorTag::ILambda | FunctorTag::JLambda => induce(spec, side, m),
            FunctorTag::IRho | FunctorTag::JRho => coinduce(spec, side, m),
        }
    }

    pub fn apply_map<F: Field>(self, spec: &GluingSpec<F>, f: &RepMorphism<F>) -> RepMorphism<F> {
        let side = self.side();
        match self {
            FunctorTag::IMu | FunctorTag::JMu => restrict_map(spec, side, f),
            FunctorTag::ILambda | FunctorTag::JLambda => induce_map(spec, side, f),
            FunctorTag::IRho | FunctorTag::JRho => coinduce_map(spec, side, f),
        }
    }
}

/// `i_μ` (side `A`) or `j_μ` (side `B`).
pub fn restrict<F: Field>(spec: &GluingSpec<F>, side: Side, n: &Representation<F>) -> Representation<F> {
    let alg = spec.alg(side);
    let vm = spec.vertex_map(side);
    let am = spec.arrow_map(side);
    let dims = vm.iter().map(|&u| n.dim_at(u)).collect();
    let mats = am.iter().map(|&u| n.mat(u).clone()).collect();
    Representation::new(alg.clone(), dims, mats).expect("restriction of a module is a module")
}

pub fn restrict_map<F: Field>(spec: &GluingSpec<F>, side: Side, f: &RepMorphism<F>) -> RepMorphism<F> {
    let s = restrict(spec, side, f.source());
    let t = restrict(spec, side, f.target());
    let comps = spec.vertex_map(side).iter().map(|&u| f.comp(u).clone()).collect();
    RepMorphism::new(s, t, comps).expect("restriction of a morphism is a morphism")
}

/// A component path read inside the glued quiver.
pub fn glued_path<F: Field>(spec: &GluingSpec<F>, side: Side, p: &Path) -> Path {
    let vm = spec.vertex_map(side);
    if p.is_trivial() {
        return Path::trivial(vm[p.source]);
    }
    let am = spec.arrow_map(side);
    Path::from_arrows(spec.glued.quiver(), p.arrows.iter().map(|&a| am[a]).collect())
        .expect("image of a path is a path")
}

/// The linear inclusion `(⊕ P(verts))_at → (⊕ U(verts))_at`, sending each
/// component word to its glued path.
fn transport_matrix<F: Field>(spec: &GluingSpec<F>, side: Side, verts: &[usize], at: usize) -> Mat<F> {
    let alg = spec.alg(side);
    let lam = &spec.glued;
    let vm = spec.vertex_map(side);
    let comp: Vec<ProjectiveBasis> = verts.iter().map(|&w| ProjectiveBasis::new(alg, w)).collect();
    let glued: Vec<ProjectiveBasis> = verts.iter().map(|&w| ProjectiveBasis::new(lam, vm[w])).collect();
    let rows: usize = glued.iter().map(|pb| pb.words[vm[at]].len()).sum();
    let cols: usize = comp.iter().map(|pb| pb.words[at].len()).sum();
    let mut t = Mat::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for (pa, pl) in comp.iter().zip(&glued) {
        for (c, &b) in pa.words[at].iter().enumerate() {
            let p = glued_path(spec, side, &alg.basis()[b]);
            for (k, x) in lam.path_coords(&p) {
                t[(r0 + pl.local(vm[at], k), c0 + c)] += x;
            }
        }
        r0 += pl.words[vm[at]].len();
        c0 += pa.words[at].len();
    }
    t
}

/// `i_λ h` for a map between sums of component projectives.
fn transport_projective_map<F: Field>(
    spec: &GluingSpec<F>,
    side: Side,
    src: &[usize],
    tgt: &[usize],
    h: &RepMorphism<F>,
) -> RepMorphism<F> {
    let vm = spec.vertex_map(side);
    let lam_tgt: Vec<usize> = tgt.iter().map(|&w| vm[w]).collect();
    let lam_src: Vec<usize> = src.iter().map(|&w| vm[w]).collect();
    let target = projective_sum(&spec.glued, &lam_tgt);
    let images: Vec<Vec<F>> = generator_images(src, h)
        .iter()
        .zip(src)
        .map(|(x, &w)| transport_matrix(spec, side, tgt, w).mul_vec(x))
        .collect();
    map_from_generators(&lam_src, &target, &images).with_source(projective_sum(&spec.glued, &lam_src))
}

/// An induced module with the data needed to induce morphisms into and out
/// of it.
#[derive(Clone)]
struct Induced<F> {
    module: Representation<F>,
    pres: Presentation1<F>,
    /// `⊕ U(p0) → module`.
    proj: RepMorphism<F>,
    sections: Vec<Mat<F>>,
}

fn induce_full<F: Field>(spec: &GluingSpec<F>, side: Side, m: &Representation<F>) -> Induced<F> {
    let pres = minimal_presentation(m);
    let d = transport_projective_map(spec, side, &pres.p1, &pres.p0, &pres.d);
    let (module, proj, sections) = quotient_split(d.target(), d.comps());
    Induced {
        module,
        pres,
        proj,
        sections,
    }
}

/// `i_λ` (side `A`) or `j_λ` (side `B`): the cokernel of the transported
/// minimal presentation.
pub fn induce<F: Field>(spec: &GluingSpec<F>, side: Side, m: &Representation<F>) -> Representation<F> {
    induce_full(spec, side, m).module
}

pub fn induce_map<F: Field>(spec: &GluingSpec<F>, side: Side, f: &RepMorphism<F>) -> RepMorphism<F> {
    let im = induce_full(spec, side, f.source());
    let inn = induce_full(spec, side, f.target());
    let top = f.after(&im.pres.cover);
    let g = lift_through(&im.pres.p0, &top, &inn.pres.cover).expect("covers are surjective");
    let g = transport_projective_map(spec, side, &im.pres.p0, &inn.pres.p0, &g);
    let comps = (0..spec.glued.num_vertices())
        .map(|u| inn.proj.comp(u).mul(&g.comp(u).mul(&im.sections[u])))
        .collect();
    RepMorphism::new(im.module, inn.module, comps).expect("induced map intertwines")
}

/// `i_ρ` (side `A`) or `j_ρ` (side `B`), as `D ∘ induce^op ∘ D`.
pub fn coinduce<F: Field>(spec: &GluingSpec<F>, side: Side, m: &Representation<F>) -> Representation<F> {
    dual(&induce(&spec.opposite(), side, &dual(m)))
}

pub fn coinduce_map<F: Field>(spec: &GluingSpec<F>, side: Side, f: &RepMorphism<F>) -> RepMorphism<F> {
    dual_map(&induce_map(&spec.opposite(), side, &dual_map(f)))
}

/// The unit `μ_M: M → i_μ i_λ M` (or `ν_L` on side `B`), a split mono.
pub fn unit<F: Field>(spec: &GluingSpec<F>, side: Side, m: &Representation<F>) -> RepMorphism<F> {
    let ind = induce_full(spec, side, m);
    let target = restrict(spec, side, &ind.module);
    let vm = spec.vertex_map(side);
    let comps = (0..m.dims().len())
        .map(|x| {
            let sec = ind
                .pres
                .cover
                .comp(x)
                .solve(&Mat::identity(m.dim_at(x)))
                .expect("shapes agree")
                .expect("cover is surjective");
            let t = transport_matrix(spec, side, &ind.pres.p0, x);
            ind.proj.comp(vm[x]).mul(&t.mul(&sec))
        })
        .collect();
    RepMorphism::new(m.clone(), target, comps).expect("unit intertwines")
}

/// The counit `ε_N: i_λ i_μ N → N` (or `ζ_N` on side `B`).
pub fn counit<F: Field>(spec: &GluingSpec<F>, side: Side, n: &Representation<F>) -> RepMorphism<F> {
    let r = restrict(spec, side, n);
    let ind = induce_full(spec, side, &r);
    let vm = spec.vertex_map(side);
    let lam_p0: Vec<usize> = ind.pres.p0.iter().map(|&w| vm[w]).collect();
    let gens = generator_images(&ind.pres.p0, &ind.pres.cover);
    let e = map_from_generators(&lam_p0, n, &gens);
    let comps = (0..n.dims().len()).map(|u| e.comp(u).mul(&ind.sections[u])).collect();
    RepMorphism::new(ind.module, n.clone(), comps).expect("counit intertwines")
}

/// `0 → U(v)^{dim N_v} → i_λ i_μ N ⊕ j_λ j_μ N → N → 0`.
#[derive(Debug, Clone)]
pub struct CanonicalSes<F> {
    pub kernel: Representation<F>,
    pub incl: RepMorphism<F>,
    pub middle: Representation<F>,
    /// `(ε_N, ζ_N)`.
    pub map: RepMorphism<F>,
}

pub fn canonical_ses<F: Field>(spec: &GluingSpec<F>, n: &Representation<F>) -> Result<CanonicalSes<F>, GluingError> {
    let eps = counit(spec, Side::A, n);
    let zeta = counit(spec, Side::B, n);
    let map = sum_out_of(n, &[eps, zeta]);
    if !map.is_surjective() {
        return Err(GluingError::Exactness("(ε, ζ) is not surjective".into()));
    }
    let (k, incl) = kernel(&map);
    let copies = vec![spec.v; n.dim_at(spec.v)];
    let expected = projective_sum(&spec.glued, &copies);
    if k.dims() != expected.dims() || !is_isomorphic(&k, &expected) {
        return Err(GluingError::Exactness(format!(
            "kernel {} is not U(v)^{}",
            k.dim_vector_string(),
            copies.len()
        )));
    }
    Ok(CanonicalSes {
        kernel: k,
        incl,
        middle: map.source().clone(),
        map,
    })
}

/// The scalar map `P(x)^m → P(x)^n` with matrix `h`, over the algebra of `p`.
fn scalar_map<F: Field>(alg: &Arc<Algebra<F>>, x: usize, h: &Mat<F>) -> RepMorphism<F> {
    let pb = ProjectiveBasis::new(alg, x);
    let block = pb.words[x].len();
    let (n, m) = h.shape();
    let target = projective_sum(alg, &vec![x; n]);
    let images: Vec<Vec<F>> = (0..m)
        .map(|k| {
            let mut v = vec![F::zero(); n * block];
            for l in 0..n {
                v[l * block] = h[(l, k)];
            }
            v
        })
        .collect();
    map_from_generators(&vec![x; m], &target, &images).with_source(projective_sum(alg, &vec![x; m]))
}

/// Generators of the `P(a)`-part of `i_μ i_λ M` (same side) or of the whole
/// of the other side's restriction: `w · μ(m)` for basis vectors `m` of
/// `M` at the glue vertex and `w` running over `words`.
fn glue_generators<F: Field>(spec: &GluingSpec<F>, side: Side, m: &Representation<F>, words: &[Path]) -> Vec<Vec<F>> {
    let ind = induce(spec, side, m);
    let mu = unit(spec, side, m);
    let g = spec.glue_vertex(side);
    let at_v = mu.comp(g);
    let mut out = Vec::new();
    for w in words {
        let act = ind.path_action(w);
        for c in 0..at_v.cols() {
            out.push(act.mul_vec(&at_v.col(c)));
        }
    }
    out
}

/// The nontrivial return words at the glue vertex of `side`, as glued paths.
fn return_words<F: Field>(spec: &GluingSpec<F>, side: Side) -> Vec<Path> {
    let alg = spec.alg(side);
    alg.return_paths(spec.glue_vertex(side))
        .into_iter()
        .map(|p| glued_path(spec, side, p))
        .collect()
}

fn block_scalar<F: Field>(reps: usize, f: &Mat<F>) -> Mat<F> {
    let blocks = vec![f; reps];
    Mat::block_diag(&blocks)
}

/// The two displayed morphism forms for `f` over `side`:
///
/// * `i_μ i_λ f = (f, h)` on `M ⊕ P(a)^m`, with `h = 1 ⊗ f_a` in scalar blocks;
/// * the other restriction of `i_λ f` is the scalar map `1 ⊗ f_a` between
///   sums of `Q(b)`.
pub fn morphism_form_check<F: Field>(
    spec: &GluingSpec<F>,
    side: Side,
    f: &RepMorphism<F>,
) -> Result<bool, GluingError> {
    if !spec.glued_ideal {
        return Err(GluingError::NonGluedIdeal);
    }
    let (m, n) = (f.source(), f.target());
    let big = induce_map(spec, side, f);
    let glue = spec.glue_vertex(side);
    let other = side.other();
    let fa = f.comp(glue);

    // same side: M ⊕ P(a)^r·dim M_a
    let same = restrict_map(spec, side, &big);
    let words = return_words(spec, other);
    let r = words.len();
    let split = |x: &Representation<F>| -> Option<(RepMorphism<F>, RepMorphism<F>)> {
        let mu = unit(spec, side, x);
        let gens = glue_generators(spec, side, x, &words);
        let tgt = mu.target().clone();
        let phi = map_from_generators(&vec![glue; gens.len()], &tgt, &gens);
        let both = sum_out_of(&tgt, &[mu.clone(), phi.clone()]);
        both.is_iso().then_some((mu, phi))
    };
    let (Some((mu_m, phi_m)), Some((mu_n, phi_n))) = (split(m), split(n)) else {
        return Ok(false);
    };
    if same.after(&mu_m).comps() != mu_n.after(f).comps() {
        return Ok(false);
    }
    let alg = spec.alg(side);
    let h = scalar_map(alg, glue, &block_scalar(r, fa));
    if same.after(&phi_m).comps() != phi_n.after(&h).comps() {
        return Ok(false);
    }

    // other side: Q(b)^dim M_a
    let cross = restrict_map(spec, other, &big);
    let b = spec.glue_vertex(other);
    let trivial = [Path::trivial(spec.v)];
    let psi = |x: &Representation<F>| -> Option<RepMorphism<F>> {
        let gens = glue_generators(spec, side, x, &trivial);
        let tgt = restrict(spec, other, &induce(spec, side, x));
        let p = map_from_generators(&vec![b; gens.len()], &tgt, &gens);
        p.is_iso().then_some(p)
    };
    let (Some(psi_m), Some(psi_n)) = (psi(m), psi(n)) else {
        return Ok(false);
    };
    let h = scalar_map(spec.alg(other), b, fa);
    Ok(cross.after(&psi_m).comps() == psi_n.after(&h).comps())
}
