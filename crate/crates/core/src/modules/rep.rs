use std::fmt;
use std::sync::Arc;

use crate::field::Field;
use crate::linalg::Mat;
use crate::presentation::{Algebra, Path, PathPoly};

use super::ModuleError;

struct Inner<F> {
    alg: Arc<Algebra<F>>,
    dims: Vec<usize>,
    mats: Vec<Mat<F>>,
}

/// A finite-dimensional representation `(M_i, M_α)` of a bound quiver.
///
/// The matrix of `α: s → t` has shape `dims[t] × dims[s]`. Cloning is cheap.
#[derive(Clone)]
pub struct Representation<F>(Arc<Inner<F>>);

impl<F> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)
    }
}

impl<F: Field> PartialEq for Representation<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.0.dims == other.0.dims && self.0.mats == other.0.mats
    }
}

impl<F: Field> Eq for Representation<F> {}

impl<F: Field> Representation<F> {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(alg: Arc<Algebra<F>>, dims: Vec<usize>, mats: Vec<Mat<F>>) -> Result<Self, ModuleError> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || mats.len() != q.num_arrows() {
            return Err(ModuleError::Shape("vertex or arrow count".into()));
        }
        for (i, a) in q.arrows().iter().enumerate() {
            if mats[i].shape() != (dims[a.target], dims[a.source]) {
                return Err(ModuleError::Shape(format!(
                    "arrow {} expects {}x{}, got {:?}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    mats[i].shape()
                )));
            }
        }
        let rep = Self::new_unchecked(alg, dims, mats);
        for r in rep.algebra().relations() {
            if !rep.poly_action(r).is_zero() {
                return Err(ModuleError::RelationViolated(
                    r.display(rep.algebra().quiver()).to_string(),
                ));
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(alg: Arc<Algebra<F>>, dims: Vec<usize>, mats: Vec<Mat<F>>) -> Self {
        debug_assert_eq!(dims.len(), alg.num_vertices());
        debug_assert_eq!(mats.len(), alg.num_arrows());
        Representation(Arc::new(Inner { alg, dims, mats }))
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        let q = alg.quiver();
        Self::new_unchecked(
            alg.clone(),
            vec![0; q.num_vertices()],
            vec![Mat::zeros(0, 0); q.num_arrows()],
        )
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.0.alg
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0.alg, &other.0.alg) || self.0.alg.same_as(&other.0.alg)
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn mats(&self) -> &[Mat<F>] {
        &self.0.mats
    }

    pub fn mat(&self, a: usize) -> &Mat<F> {
        &self.0.mats[a]
    }

    /// Start of each vertex block in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.0.dims.len());
        let mut acc = 0;
        for &d in &self.0.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Matrix of a path: `arrows[0]` acts last.
    pub fn path_action(&self, p: &Path) -> Mat<F> {
        let mut m = Mat::identity(self.dim_at(p.source));
        for &a in p.arrows.iter().rev() {
            m = self.mat(a).mul(&m);
        }
        m
    }

    pub fn poly_action(&self, r: &PathPoly<F>) -> Mat<F> {
        let Some((s, t)) = r.endpoints() else {
            return Mat::zeros(0, 0);
        };
        let mut out = Mat::zeros(self.dim_at(t), self.dim_at(s));
        for (p, c) in r.terms() {
            out.add_scaled(&self.path_action(p), c);
        }
        out
    }

    /// Action of a basis element of the algebra.
    pub fn basis_action(&self, b: usize) -> Mat<F> {
        self.path_action(&self.algebra().basis()[b])
    }

    pub fn direct_sum(parts: &[Representation<F>]) -> Self {
        let alg = parts
            .first()
            .expect("direct sum of at least one module")
            .algebra()
            .clone();
        let q = alg.quiver();
        let dims: Vec<usize> = (0..q.num_vertices())
            .map(|v| parts.iter().map(|p| p.dim_at(v)).sum())
            .collect();
        let mats = (0..q.num_arrows())
            .map(|a| Mat::block_diag(&parts.iter().map(|p| p.mat(a)).collect::<Vec<_>>()))
            .collect();
        Self::new_unchecked(alg, dims, mats)
    }

    /// Dimension vector written as `(d1,d2,...)`.
    pub fn dim_vector_string(&self) -> String {
        let v: Vec<String> = self.dims().iter().map(|d| d.to_string()).collect();
        format!("({})", v.join(","))
    }

    /// Whether the module is the same representation over the given algebra.
    pub fn rebase(&self, alg: &Arc<Algebra<F>>) -> Self {
        Self::new_unchecked(alg.clone(), self.0.dims.clone(), self.0.mats.clone())
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone)]
pub struct RepMorphism<F> {
    source: Representation<F>,
    target: Representation<F>,
    comps: Vec<Mat<F>>,
}

impl<F> fmt::Debug for RepMorphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.source, self.target)
    }
}

impl<F: Field> PartialEq for RepMorphism<F> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.comps == other.comps
    }
}

impl<F: Field> Eq for RepMorphism<F> {}

impl<F: Field> RepMorphism<F> {
    pub fn new(source: Representation<F>, target: Representation<F>, comps: Vec<Mat<F>>) -> Result<Self, ModuleError> {
        if !source.same_algebra(&target) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let n = source.algebra().num_vertices();
        if comps.len() != n {
            return Err(ModuleError::Shape("component count".into()));
        }
        for v in 0..n {
            if comps[v].shape() != (target.dim_at(v), source.dim_at(v)) {
                return Err(ModuleError::Shape(format!("component at vertex {v}")));
            }
        }
        let f = Self::new_unchecked(source, target, comps);
        for (i, a) in f.source.algebra().quiver().arrows().iter().enumerate() {
            let lhs = f.comps[a.target].mul(f.source.mat(i));
            let rhs = f.target.mat(i).mul(&f.comps[a.source]);
            if lhs != rhs {
                return Err(ModuleError::NotIntertwining(a.name.clone()));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation<F>, target: Representation<F>, comps: Vec<Mat<F>>) -> Self {
        debug_assert!(comps
            .iter()
            .enumerate()
            .all(|(v, c)| c.shape() == (target.dim_at(v), source.dim_at(v))));
        RepMorphism { source, target, comps }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let comps = m.dims().iter().map(|&d| Mat::identity(d)).collect();
        Self::new_unchecked(m.clone(), m.clone(), comps)
    }

    pub fn zero(m: &Representation<F>, n: &Representation<F>) -> Self {
        let comps = (0..m.dims().len())
            .map(|v| Mat::zeros(n.dim_at(v), m.dim_at(v)))
            .collect();
        Self::new_unchecked(m.clone(), n.clone(), comps)
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }

    pub fn target(&self) -> &Representation<F> {
        &self.target
    }

    pub fn comps(&self) -> &[Mat<F>] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Mat<F> {
        &self.comps[v]
    }

    /// `self ∘ g`: first `g`, then `self`.
    pub fn after(&self, g: &RepMorphism<F>) -> Self {
        debug_assert_eq!(g.target.dims(), self.source.dims());
        let comps = self.comps.iter().zip(&g.comps).map(|(a, b)| a.mul(b)).collect();
        Self::new_unchecked(g.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &Self) -> Self {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-F::one()))
    }

    pub fn scale(&self, c: F) -> Self {
        let comps = self.comps.iter().map(|a| a.scale(c)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// `Σ c_i f_i` over morphisms with a common source and target.
    pub fn combination(source: &Representation<F>, target: &Representation<F>, terms: &[(F, &RepMorphism<F>)]) -> Self {
        let mut comps: Vec<Mat<F>> = (0..source.dims().len())
            .map(|v| Mat::zeros(target.dim_at(v), source.dim_at(v)))
            .collect();
        for (c, f) in terms {
            for (acc, m) in comps.iter_mut().zip(&f.comps) {
                acc.add_scaled(m, *c);
            }
        }
        Self::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.is_invertible())
    }

    pub fn inverse(&self) -> Option<Self> {
        let comps = self.comps.iter().map(|c| c.inverse()).collect::<Option<Vec<_>>>()?;
        Some(Self::new_unchecked(self.target.clone(), self.source.clone(), comps))
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(|c| c.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total(&self) -> Mat<F> {
        Mat::block_diag(&self.comps.iter().collect::<Vec<_>>())
    }

    /// Entries of all components, concatenated; used to compare morphisms
    /// as vectors.
    pub fn flatten(&self) -> Vec<F> {
        self.comps.iter().flat_map(|c| c.data().iter().copied()).collect()
    }

    pub fn with_source(&self, source: Representation<F>) -> Self {
        Self::new_unchecked(source, self.target.clone(), self.comps.clone())
    }

    pub fn with_target(&self, target: Representation<F>) -> Self {
        Self::new_unchecked(self.source.clone(), target, self.comps.clone())
    }
}

/// `(f_1, …, f_n): M → N_1 ⊕ … ⊕ N_n`.
pub fn hstack_into<F: Field>(source: &Representation<F>, maps: &[RepMorphism<F>]) -> RepMorphism<F> {
    let target = if maps.is_empty() {
        Representation::zero(source.algebra())
    } else {
        Representation::direct_sum(&maps.iter().map(|f| f.target().clone()).collect::<Vec<_>>())
    };
    let comps = (0..source.dims().len())
        .map(|v| {
            Mat::vstack_n(
                source.dim_at(v),
                &maps.iter().map(|f| f.comp(v).clone()).collect::<Vec<_>>(),
            )
        })
        .collect();
    RepMorphism::new_unchecked(source.clone(), target, comps)
}

/// `[g_1 … g_n]: N_1 ⊕ … ⊕ N_n → M`.
pub fn sum_out_of<F: Field>(target: &Representation<F>, maps: &[RepMorphism<F>]) -> RepMorphism<F> {
    let source = if maps.is_empty() {
        Representation::zero(target.algebra())
    } else {
        Representation::direct_sum(&maps.iter().map(|f| f.source().clone()).collect::<Vec<_>>())
    };
    let comps = (0..target.dims().len())
        .map(|v| {
            Mat::hstack_n(
                target.dim_at(v),
                &maps.iter().map(|f| f.comp(v).clone()).collect::<Vec<_>>(),
            )
        })
        .collect();
    RepMorphism::new_unchecked(source, target.clone(), comps)
}

/// `f ⊕ g`.
pub fn direct_sum_map<F: Field>(maps: &[RepMorphism<F>]) -> RepMorphism<F> {
    let s = Representation::direct_sum(&maps.iter().map(|f| f.source().clone()).collect::<Vec<_>>());
    let t = Representation::direct_sum(&maps.iter().map(|f| f.target().clone()).collect::<Vec<_>>());
    let comps = (0..s.dims().len())
        .map(|v| Mat::block_diag(&maps.iter().map(|f| f.comp(v)).collect::<Vec<_>>()))
        .collect();
    RepMorphism::new_unchecked(s, t, comps)
}

/// Inclusion of and projection onto summand `k` of `⊕ parts`.
pub fn summand_maps<F: Field>(
    sum: &Representation<F>,
    parts: &[Representation<F>],
    k: usize,
) -> (RepMorphism<F>, RepMorphism<F>) {
    let n = sum.dims().len();
    let mut incl = Vec::with_capacity(n);
    let mut proj = Vec::with_capacity(n);
    for v in 0..n {
        let off: usize = parts[..k].iter().map(|p| p.dim_at(v)).sum();
        let d = parts[k].dim_at(v);
        let mut i = Mat::zeros(sum.dim_at(v), d);
        let mut p = Mat::zeros(d, sum.dim_at(v));
        for j in 0..d {
            i[(off + j, j)] = F::one();
            p[(j, off + j)] = F::one();
        }
        incl.push(i);
        proj.push(p);
    }
    (
        RepMorphism::new_unchecked(parts[k].clone(), sum.clone(), incl),
        RepMorphism::new_unchecked(sum.clone(), parts[k].clone(), proj),
    )
}
