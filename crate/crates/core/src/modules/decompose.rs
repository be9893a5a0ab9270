use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linalg::Mat;
use crate::poly::{charpoly, Poly};

use super::hom::{end_ring, hom_basis};
use super::ops::subrep;
use super::{ModuleError, RepMorphism, Representation};

const SPLIT_BUDGET: usize = 32;
const ISO_BUDGET: usize = 64;

/// One indecomposable summand with its split inclusion and projection.
#[derive(Debug, Clone)]
pub struct Summand<F> {
    pub module: Representation<F>,
    pub incl: RepMorphism<F>,
    pub proj: RepMorphism<F>,
}

#[derive(Debug, Clone)]
pub struct Decomposition<F> {
    pub summands: Vec<Summand<F>>,
    /// `class_of[k]` indexes `classes`.
    pub class_of: Vec<usize>,
    /// Representative summand index and multiplicity of each iso class.
    pub classes: Vec<(usize, usize)>,
}

impl<F: Field> Decomposition<F> {
    pub fn modules(&self) -> Vec<Representation<F>> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }

    /// `(representative, multiplicity)` pairs.
    pub fn classes(&self) -> Vec<(Representation<F>, usize)> {
        self.classes
            .iter()
            .map(|&(k, m)| (self.summands[k].module.clone(), m))
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }
}

/// Krull–Schmidt decomposition. Deterministic for a fixed seed.
pub fn decompose<F: Field>(m: &Representation<F>, seed: u64) -> Result<Decomposition<F>, ModuleError> {
    let p = F::characteristic();
    if m.dim() as u64 >= p {
        return Err(ModuleError::FieldTooSmall { dim: m.dim(), p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summands = Vec::new();
    split_rec(
        &RepMorphism::identity(m),
        &RepMorphism::identity(m),
        &mut rng,
        &mut summands,
    )?;
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut class_of = Vec::with_capacity(summands.len());
    for k in 0..summands.len() {
        let found = classes
            .iter()
            .position(|&(r, _)| is_isomorphic(&summands[r].module, &summands[k].module));
        match found {
            Some(c) => {
                classes[c].1 += 1;
                class_of.push(c);
            }
            None => {
                class_of.push(classes.len());
                classes.push((k, 1));
            }
        }
    }
    Ok(Decomposition {
        summands,
        class_of,
        classes,
    })
}

/// `incl: X → M`, `proj: M → X` with `proj ∘ incl = 1`; splits `X` further.
fn split_rec<F: Field, R: Rng>(
    incl: &RepMorphism<F>,
    proj: &RepMorphism<F>,
    rng: &mut R,
    out: &mut Vec<Summand<F>>,
) -> Result<(), ModuleError> {
    let x = incl.source();
    if x.is_zero() {
        return Ok(());
    }
    match split_once(x, rng)? {
        None => out.push(Summand {
            module: x.clone(),
            incl: incl.clone(),
            proj: proj.clone(),
        }),
        Some(parts) => {
            for (i, p) in parts {
                split_rec(&incl.after(&i), &p.after(proj), rng, out)?;
            }
        }
    }
    Ok(())
}

type Piece<F> = (RepMorphism<F>, RepMorphism<F>);

/// A nontrivial splitting `X = K ⊕ I` via Fitting's lemma, or `None` when
/// `End(X)` is local.
fn split_once<F: Field, R: Rng>(x: &Representation<F>, rng: &mut R) -> Result<Option<Vec<Piece<F>>>, ModuleError> {
    let end = end_ring(x);
    if end.top_dim <= 1 {
        return Ok(None);
    }
    let n = x.dims().len();
    let d = x.dim() as u32;
    for _ in 0..SPLIT_BUDGET {
        let coeffs: Vec<F> = (0..end.basis.len()).map(|_| F::sample(rng)).collect();
        let terms: Vec<(F, &RepMorphism<F>)> = coeffs.iter().copied().zip(end.basis.iter()).collect();
        let phi = RepMorphism::combination(x, x, &terms);
        let mut cp = Poly::constant(F::one());
        for v in 0..n {
            cp = cp.mul(&charpoly(phi.comp(v)));
        }
        for lam in cp.roots(rng) {
            let psi: Vec<Mat<F>> = (0..n)
                .map(|v| phi.comp(v).sub(&Mat::scalar(x.dim_at(v), lam)).pow(d))
                .collect();
            let ks: Vec<Mat<F>> = psi.iter().map(|m| m.kernel_basis()).collect();
            let kd: usize = ks.iter().map(|k| k.cols()).sum();
            if kd == 0 || kd == x.dim() {
                continue;
            }
            let is: Vec<Mat<F>> = psi.iter().map(|m| m.col_basis()).collect();
            return Ok(Some(two_pieces(x, ks, is)));
        }
    }
    Err(ModuleError::FieldTooSmall {
        dim: x.dim(),
        p: F::characteristic(),
    })
}

fn two_pieces<F: Field>(x: &Representation<F>, ks: Vec<Mat<F>>, is: Vec<Mat<F>>) -> Vec<Piece<F>> {
    let n = x.dims().len();
    let mut pk = Vec::with_capacity(n);
    let mut pi = Vec::with_capacity(n);
    for v in 0..n {
        let full = Mat::hstack(&[&ks[v], &is[v]]);
        let inv = full.inverse().expect("Fitting decomposition");
        let k = ks[v].cols();
        pk.push(inv.submatrix(0..k, 0..x.dim_at(v)));
        pi.push(inv.submatrix(k..x.dim_at(v), 0..x.dim_at(v)));
    }
    let (km, ki) = subrep(x, ks);
    let (im, ii) = subrep(x, is);
    vec![
        (ki, RepMorphism::new_unchecked(x.clone(), km, pk)),
        (ii, RepMorphism::new_unchecked(x.clone(), im, pi)),
    ]
}

pub fn is_indecomposable<F: Field>(m: &Representation<F>) -> bool {
    !m.is_zero() && end_ring(m).top_dim == 1
}

/// Isomorphism test by random search for an invertible intertwiner.
pub fn is_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>) -> bool {
    find_isomorphism(m, n).is_some()
}

pub fn find_isomorphism<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Option<RepMorphism<F>> {
    if !m.same_algebra(n) || m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(RepMorphism::zero(m, n));
    }
    if m == n {
        return Some(RepMorphism::identity(m).with_target(n.clone()));
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..ISO_BUDGET {
        let terms: Vec<(F, &RepMorphism<F>)> = basis.iter().map(|f| (F::sample(&mut rng), f)).collect();
        let f = RepMorphism::combination(m, n, &terms);
        if f.is_iso() {
            return Some(f);
        }
    }
    None
}
