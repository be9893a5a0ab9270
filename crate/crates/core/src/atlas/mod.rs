//! Indecomposables of a representation-finite algebra by knitting, the
//! Gorenstein-projective part, its AR quiver and the Cohen-Macaulay
//! Auslander algebra.

mod aus;
mod irr;

use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;
use crate::homology::{in_perp, GorensteinReport, GprojLookup};
use crate::linalg::Mat;
use crate::modules::{
    cokernel, decompose, end_ring, hom_dim, hom_space, hstack_into, injective, is_injective, is_isomorphic,
    is_projective, lift_through, minimal_left_proj_approx, projective, quotient, quotient_split, radical, simple,
    socle_bases, sum_out_of, summand_maps, syzygy_with_cover, ModuleError, RepMorphism, Representation,
};
use crate::presentation::{Algebra, PresentationError};

pub use aus::{auslander_presentation, verify_aus_gluing, AusGluingReport, AuslanderPresentation};
pub use irr::{irr_table, ARQuiverData, IrrArrow, Selection};

#[cfg(test)]
mod tests;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("budget exceeded, possibly representation-infinite ({found} indecomposables, budget {budget})")]
    BudgetExceeded { budget: usize, found: usize },
    #[error("module is projective")]
    Projective,
    #[error("gorenstein-projective flags not computed")]
    NoGprojFlags,
    #[error("evaluation kernel not generated within degree {0}")]
    RelationsNotGenerated(usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// The indecomposable modules of an algebra, pairwise non-isomorphic.
#[derive(Debug, Clone)]
pub struct ModuleAtlas<F> {
    pub algebra: Arc<Algebra<F>>,
    pub modules: Vec<Representation<F>>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    /// Set by [`gproj_atlas`].
    pub gproj: Option<Vec<bool>>,
    /// `hom[i][j] = dim Hom(modules[i], modules[j])`.
    pub hom: Vec<Vec<usize>>,
}

impl<F: Field> ModuleAtlas<F> {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the member isomorphic to `m`.
    pub fn find(&self, m: &Representation<F>) -> Option<usize> {
        self.modules
            .iter()
            .position(|x| x.dims() == m.dims() && is_isomorphic(x, m))
    }

    /// Indices of the Gorenstein projective members.
    pub fn gproj_indices(&self) -> Result<Vec<usize>, AtlasError> {
        let flags = self.gproj.as_ref().ok_or(AtlasError::NoGprojFlags)?;
        Ok((0..self.len()).filter(|&i| flags[i]).collect())
    }

    pub fn gproj_modules(&self) -> Result<Vec<Representation<F>>, AtlasError> {
        Ok(self
            .gproj_indices()?
            .into_iter()
            .map(|i| self.modules[i].clone())
            .collect())
    }

    /// The member isomorphic to `P(i)`.
    pub fn projective_index(&self, i: usize) -> usize {
        self.find(&projective(&self.algebra, i))
            .expect("atlas contains every projective")
    }
}

impl<F: Field> GprojLookup<F> for ModuleAtlas<F> {
    fn gproj_flag(&self, m: &Representation<F>) -> Option<bool> {
        let flags = self.gproj.as_ref()?;
        self.find(m).map(|i| flags[i])
    }
}

/// An almost split sequence `0 → τX → E → X → 0`.
#[derive(Debug, Clone)]
pub struct ArSequence<F> {
    pub tau: Representation<F>,
    pub middle: Representation<F>,
    pub left: RepMorphism<F>,
    pub right: RepMorphism<F>,
}

/// The almost split sequence ending at a nonprojective indecomposable `X`,
/// as the pushout of `0 → ΩX → P → X → 0` along a socle element of
/// `Ext¹(X, τX)` over `End(X)`.
pub fn ar_sequence<F: Field>(x: &Representation<F>) -> Result<ArSequence<F>, AtlasError> {
    if is_projective(x) {
        return Err(AtlasError::Projective);
    }
    let tau = crate::modules::ar_translate(x)?;
    let (omega, iota, cover) = syzygy_with_cover(x);
    let pi = &cover.map;
    let p = pi.source().clone();

    let homs = hom_space(&omega, &tau)?;
    let len: usize = (0..omega.dims().len()).map(|v| omega.dim_at(v) * tau.dim_at(v)).sum();
    let through: Vec<RepMorphism<F>> = hom_space(&p, &tau)?.iter().map(|g| g.after(&iota)).collect();
    // rows of `ann` vanish exactly on the maps that extend to P
    let ann = if through.is_empty() {
        Mat::identity(len)
    } else {
        crate::modules::as_columns(len, &through)
            .transpose()
            .kernel_basis()
            .transpose()
    };

    let end = end_ring(x);
    let mut blocks = Vec::new();
    for c in 0..end.radical.cols() {
        let terms: Vec<(F, &RepMorphism<F>)> = end
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| (end.radical[(i, c)], b))
            .collect();
        let r = RepMorphism::combination(x, x, &terms);
        let r_p = lift_through(&cover.vertices, &r.after(pi), pi).expect("cover is surjective");
        let comps = (0..omega.dims().len())
            .map(|v| {
                let rhs = r_p.comp(v).mul(iota.comp(v));
                iota.comp(v)
                    .solve(&rhs)
                    .expect("shapes agree")
                    .expect("syzygy is stable")
            })
            .collect();
        let r_omega = RepMorphism::new_unchecked(omega.clone(), omega.clone(), comps);
        let cols: Vec<Vec<F>> = homs.iter().map(|h| h.after(&r_omega).flatten()).collect();
        blocks.push(ann.mul(&Mat::from_cols(&cols, len)));
    }
    let candidates = if blocks.is_empty() {
        Mat::identity(homs.len())
    } else {
        Mat::vstack(&blocks.iter().collect::<Vec<_>>()).kernel_basis()
    };
    let flat: Vec<Vec<F>> = homs.iter().map(|h| h.flatten()).collect();
    let hm = Mat::from_cols(&flat, len);
    let xi = (0..candidates.cols())
        .map(|c| candidates.col(c))
        .find(|c| !ann.mul_vec(&hm.mul_vec(c)).iter().all(|e| e.is_zero()))
        .expect("a nonprojective indecomposable has a nonsplit extension");
    let terms: Vec<(F, &RepMorphism<F>)> = xi.iter().copied().zip(&homs).collect();
    let xi = RepMorphism::combination(&omega, &tau, &terms);

    // E = (τX ⊕ P) / {(ξ ω, -ι ω)}
    let glue = hstack_into(&omega, &[xi, iota.scale(-F::one())]);
    let (middle, q, sections) = quotient_split(glue.target(), glue.comps());
    let parts = [tau.clone(), p.clone()];
    let (incl_tau, _) = summand_maps(glue.target(), &parts, 0);
    let left = q.after(&incl_tau);
    let down = sum_out_of(x, &[RepMorphism::zero(&tau, x), pi.clone()]);
    let comps = (0..x.dims().len()).map(|v| down.comp(v).mul(&sections[v])).collect();
    let right = RepMorphism::new_unchecked(middle.clone(), x.clone(), comps);
    Ok(ArSequence {
        tau,
        middle,
        left,
        right,
    })
}

fn indecomposable_summands<F: Field>(m: &Representation<F>) -> Result<Vec<Representation<F>>, AtlasError> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    Ok(decompose(m, 0)?.modules())
}

/// Knits the AR quiver from the projectives, injectives and simples, closing
/// under `τ`, `τ⁻¹` and summands of AR middle terms.
pub fn knit<F: Field>(alg: &Arc<Algebra<F>>, budget: usize) -> Result<ModuleAtlas<F>, AtlasError> {
    let n = alg.num_vertices();
    let mut modules: Vec<Representation<F>> = Vec::new();
    let mut seeds: Vec<Representation<F>> = Vec::new();
    seeds.extend((0..n).map(|i| projective(alg, i)));
    seeds.extend((0..n).map(|i| injective(alg, i)));
    seeds.extend((0..n).map(|i| simple(alg, i)));
    for i in 0..n {
        // neighbours of projectives and injectives that no translate reaches
        seeds.extend(indecomposable_summands(&radical(&projective(alg, i)).0)?);
        let inj = injective(alg, i);
        seeds.extend(indecomposable_summands(&quotient(&inj, &socle_bases(&inj)).0)?);
    }
    let add = |m: Representation<F>, modules: &mut Vec<Representation<F>>| -> Result<(), AtlasError> {
        if m.is_zero() || modules.iter().any(|x| x.dims() == m.dims() && is_isomorphic(x, &m)) {
            return Ok(());
        }
        if modules.len() >= budget {
            return Err(AtlasError::BudgetExceeded {
                budget,
                found: modules.len() + 1,
            });
        }
        modules.push(m);
        Ok(())
    };
    for s in seeds {
        add(s, &mut modules)?;
    }
    let mut next = 0;
    while next < modules.len() {
        let x = modules[next].clone();
        next += 1;
        if !is_projective(&x) {
            let seq = ar_sequence(&x)?;
            add(seq.tau, &mut modules)?;
            for e in indecomposable_summands(&seq.middle)? {
                add(e, &mut modules)?;
            }
        }
        if !is_injective(&x) {
            add(crate::modules::ar_cotranslate(&x)?, &mut modules)?;
        }
    }
    let projective: Vec<bool> = modules.iter().map(is_projective).collect();
    let injective: Vec<bool> = modules.iter().map(is_injective).collect();
    let hom = modules
        .iter()
        .map(|a| modules.iter().map(|b| hom_dim(a, b)).collect())
        .collect();
    Ok(ModuleAtlas {
        algebra: alg.clone(),
        modules,
        projective,
        injective,
        gproj: None,
        hom,
    })
}

/// Flags the Gorenstein projective members.
///
/// Over a certified Gorenstein algebra of dimension `d` these are the
/// members of `⊥Λ` to depth `max(d, 1)`. Otherwise start from the members
/// of `⊥Λ` to depth `report.bound` and keep `N` while its minimal left
/// `add Λ`-approximation is injective with cokernel in the current set.
pub fn gproj_atlas<F: Field>(atlas: &ModuleAtlas<F>, report: &GorensteinReport) -> Result<ModuleAtlas<F>, AtlasError> {
    let mut out = atlas.clone();
    let flags = match report.gd().value() {
        Some(d) => atlas.modules.iter().map(|m| in_perp(m, d.max(1))).collect(),
        None => {
            let mut keep: Vec<bool> = atlas.modules.iter().map(|m| in_perp(m, report.bound)).collect();
            let approx: Vec<_> = atlas
                .modules
                .iter()
                .map(|m| {
                    let th = minimal_left_proj_approx(m);
                    let ok = th.map.is_injective();
                    let coker = cokernel(&th.map).0;
                    (ok, coker)
                })
                .collect();
            let pieces: Vec<Option<Vec<usize>>> = approx
                .iter()
                .map(|(ok, c)| {
                    if !ok {
                        return Ok(None);
                    }
                    let parts = indecomposable_summands(c)?;
                    Ok(parts.iter().map(|z| atlas.find(z)).collect::<Option<Vec<_>>>())
                })
                .collect::<Result<_, AtlasError>>()?;
            loop {
                let next: Vec<bool> = (0..atlas.len())
                    .map(|i| keep[i] && pieces[i].as_ref().is_some_and(|ps| ps.iter().all(|&j| keep[j])))
                    .collect();
                if next == keep {
                    break keep;
                }
                keep = next;
            }
        }
    };
    out.gproj = Some(flags);
    Ok(out)
}
