//! Resolutions, Ext, homological dimensions and Gorenstein projectivity.
//!
//! Every dimension is computed against an explicit bound. A resolution that
//! has not terminated by then is reported as [`Bounded::Exceeds`], never as
//! infinite.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;
use crate::modules::{
    decompose, dual, dual_map, hom_dim, hom_space, injective, is_isomorphic, projective, projective_cover, span_dim,
    syzygy_with_cover, ModuleError, RepMorphism, Representation,
};
use crate::presentation::Algebra;

#[cfg(test)]
mod tests;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("undecidable without atlas: the algebra is not certified Gorenstein")]
    NeedsAtlas,
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// A dimension that is either known or larger than the bound tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bounded {
    Value(usize),
    Exceeds(usize),
}

impl Bounded {
    pub fn value(self) -> Option<usize> {
        match self {
            Bounded::Value(v) => Some(v),
            Bounded::Exceeds(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bounded::Value(_))
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Value(v) => write!(f, "{v}"),
            Bounded::Exceeds(b) => write!(f, "exceeds {b}"),
        }
    }
}

/// Default bound for dimension computations: `2 · dim Λ`.
pub fn default_bound<F: Field>(alg: &Algebra<F>) -> usize {
    2 * alg.dim()
}

/// A minimal projective resolution, possibly truncated.
///
/// `terms[k]` lists the vertices of the indecomposable summands of `P_k`;
/// `covers[k]: P_k → Ω^k M` and `incls[k]: Ω^{k+1} M → P_k`.
#[derive(Debug, Clone)]
pub struct ResolutionTrace<F> {
    pub module: Representation<F>,
    pub terms: Vec<Vec<usize>>,
    pub syzygies: Vec<Representation<F>>,
    pub covers: Vec<RepMorphism<F>>,
    pub incls: Vec<RepMorphism<F>>,
    /// `Ω^k M = 0` was reached.
    pub terminated: bool,
}

impl<F: Field> ResolutionTrace<F> {
    /// Number of projective terms computed.
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    /// `d_k: P_k → P_{k-1}` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> RepMorphism<F> {
        self.incls[k - 1].after(&self.covers[k])
    }

    /// `Ω^k M`, if computed.
    pub fn syzygy(&self, k: usize) -> Option<&Representation<F>> {
        self.syzygies.get(k)
    }
}

/// Minimal projective resolution with at most `terms` projective terms.
pub fn resolve<F: Field>(m: &Representation<F>, terms: usize) -> ResolutionTrace<F> {
    let mut tr = ResolutionTrace {
        module: m.clone(),
        terms: Vec::new(),
        syzygies: vec![m.clone()],
        covers: Vec::new(),
        incls: Vec::new(),
        terminated: m.is_zero(),
    };
    let mut x = m.clone();
    while !x.is_zero() && tr.terms.len() < terms {
        let (omega, incl, cover) = syzygy_with_cover(&x);
        tr.terms.push(cover.vertices);
        tr.covers.push(cover.map);
        tr.incls.push(incl);
        tr.syzygies.push(omega.clone());
        x = omega;
    }
    tr.terminated = x.is_zero();
    tr
}

pub fn proj_dim_bounded<F: Field>(m: &Representation<F>, bound: usize) -> Bounded {
    let tr = resolve(m, bound + 1);
    if tr.terminated {
        Bounded::Value(tr.length().saturating_sub(1))
    } else {
        Bounded::Exceeds(bound)
    }
}

pub fn inj_dim_bounded<F: Field>(m: &Representation<F>, bound: usize) -> Bounded {
    proj_dim_bounded(&dual(m), bound)
}

/// `dim Ext^k(M, N)` from a resolution of `M` with at least `k` terms.
pub fn ext_dim_from<F: Field>(tr: &ResolutionTrace<F>, n: &Representation<F>, k: usize) -> usize {
    if k == 0 {
        return hom_dim(&tr.module, n);
    }
    let Some(omega) = tr.syzygy(k) else {
        assert!(tr.terminated, "resolution too short for Ext^{k}");
        return 0;
    };
    if omega.is_zero() {
        return 0;
    }
    let total = hom_dim(omega, n);
    if total == 0 {
        return 0;
    }
    let p = tr.incls[k - 1].target();
    let restricted: Vec<RepMorphism<F>> = hom_space(p, n)
        .expect("same algebra")
        .iter()
        .map(|g| g.after(&tr.incls[k - 1]))
        .collect();
    total - span_dim(&restricted)
}

/// `dim Ext^k(M, N)`, computed as `Hom(Ω^k M, N)` modulo the maps that
/// extend to the `(k-1)`-st projective term.
pub fn ext_dim<F: Field>(m: &Representation<F>, n: &Representation<F>, k: usize) -> usize {
    ext_dim_from(&resolve(m, k), n, k)
}

/// `dim Ext^k(M, N)` through a minimal injective coresolution of `N`.
pub fn ext_dim_coresolution<F: Field>(m: &Representation<F>, n: &Representation<F>, k: usize) -> usize {
    if k == 0 {
        return hom_dim(m, n);
    }
    // the coresolution of N is the dual of a resolution of D N
    let tr = resolve(&dual(n), k);
    let Some(omega) = tr.syzygy(k) else {
        return 0;
    };
    if omega.is_zero() {
        return 0;
    }
    let cosyz = dual(omega);
    let proj = dual_map(&tr.incls[k - 1]);
    let total = hom_dim(m, &cosyz);
    if total == 0 {
        return 0;
    }
    let through: Vec<RepMorphism<F>> = hom_space(m, proj.source())
        .expect("same algebra")
        .iter()
        .map(|g| proj.after(g).with_target(cosyz.clone()))
        .collect();
    total - span_dim(&through)
}

/// Injective dimensions of `Λ` on both sides and the Gorenstein dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinReport {
    pub bound: usize,
    /// Largest projective dimension of an indecomposable injective, which
    /// is `id Λ_Λ`.
    pub left_injdim: Bounded,
    /// The same computation over the opposite algebra, which is `id _ΛΛ`.
    pub right_injdim: Bounded,
}

impl GorensteinReport {
    pub fn is_gorenstein(&self) -> bool {
        self.left_injdim.is_finite() && self.right_injdim.is_finite()
    }

    /// The common value of the two injective dimensions when both are finite.
    pub fn gd(&self) -> Bounded {
        match (self.left_injdim, self.right_injdim) {
            (Bounded::Value(l), Bounded::Value(r)) => Bounded::Value(l.max(r)),
            _ => Bounded::Exceeds(self.bound),
        }
    }

    /// Both sides agree, as they must for a Gorenstein algebra.
    pub fn consistent(&self) -> bool {
        match (self.left_injdim, self.right_injdim) {
            (Bounded::Value(l), Bounded::Value(r)) => l == r,
            _ => true,
        }
    }
}

fn max_pd<F: Field>(alg: &Arc<Algebra<F>>, bound: usize) -> Bounded {
    let mut best = 0;
    for i in 0..alg.num_vertices() {
        match proj_dim_bounded(&injective(alg, i), bound) {
            Bounded::Value(v) => best = best.max(v),
            e => return e,
        }
    }
    Bounded::Value(best)
}

pub fn gorenstein_report<F: Field>(alg: &Arc<Algebra<F>>, bound: usize) -> GorensteinReport {
    GorensteinReport {
        bound,
        left_injdim: max_pd(alg, bound),
        right_injdim: max_pd(&alg.opposite(), bound),
    }
}

/// `Ext^i(M, Λ) = 0` for `1 ≤ i ≤ depth`.
pub fn in_perp<F: Field>(m: &Representation<F>, depth: usize) -> bool {
    let alg = m.algebra();
    let projs: Vec<_> = (0..alg.num_vertices()).map(|j| projective(alg, j)).collect();
    let tr = resolve(m, depth);
    (1..=depth).all(|i| {
        tr.syzygy(i)
            .is_none_or(|_| projs.iter().all(|p| ext_dim_from(&tr, p, i) == 0))
    })
}

/// Indecomposables with Gorenstein-projective flags, used when the algebra
/// is not certified Gorenstein.
pub trait GprojLookup<F> {
    /// `Some(flag)` for a module isomorphic to a listed indecomposable.
    fn gproj_flag(&self, m: &Representation<F>) -> Option<bool>;
}

/// Gorenstein projectivity.
///
/// Over a certified Gorenstein algebra of dimension `d` this is `M ∈ ⊥Λ`
/// tested to depth `max(d, 1)`. Otherwise the indecomposable summands are
/// looked up in a classified atlas.
pub fn is_gproj<F: Field>(
    m: &Representation<F>,
    report: &GorensteinReport,
    atlas: Option<&dyn GprojLookup<F>>,
) -> Result<bool, HomologyError> {
    if let Bounded::Value(d) = report.gd() {
        return Ok(in_perp(m, d.max(1)));
    }
    let Some(atlas) = atlas else {
        return Err(HomologyError::NeedsAtlas);
    };
    if m.is_zero() {
        return Ok(true);
    }
    for x in decompose(m, 0)?.modules() {
        match atlas.gproj_flag(&x) {
            Some(true) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// `Hom(M, N)` modulo maps factoring through a projective.
#[derive(Debug, Clone)]
pub struct StableHom<F> {
    pub dim: usize,
    /// Morphisms whose classes form a basis of the stable Hom space.
    pub basis: Vec<RepMorphism<F>>,
}

/// A map into `N` factors through a projective iff it factors through the
/// projective cover of `N`.
pub fn stable_hom<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<StableHom<F>, HomologyError> {
    let all = hom_space(m, n)?;
    if all.is_empty() {
        return Ok(StableHom {
            dim: 0,
            basis: Vec::new(),
        });
    }
    let cover = projective_cover(n).map;
    let mut span: Vec<RepMorphism<F>> = hom_space(m, cover.source())?.iter().map(|g| cover.after(g)).collect();
    let mut rank = span_dim(&span);
    let mut basis = Vec::new();
    for f in all {
        span.push(f.clone());
        let r = span_dim(&span);
        if r > rank {
            rank = r;
            basis.push(f);
        } else {
            span.pop();
        }
    }
    Ok(StableHom {
        dim: basis.len(),
        basis,
    })
}

/// Index of the first listed module isomorphic to `m`.
pub fn position_iso<F: Field>(list: &[Representation<F>], m: &Representation<F>) -> Option<usize> {
    list.iter().position(|x| is_isomorphic(x, m))
}
