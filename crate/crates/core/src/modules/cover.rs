use std::sync::Arc;

use crate::field::Field;
use crate::presentation::Algebra;

use super::decompose::{decompose, is_indecomposable};
use super::hom::{as_columns, hom_basis};
use super::ops::{cokernel, dual, kernel, top_complements};
use super::standard::{projective, yoneda, ProjectiveBasis};
use super::{hstack_into, sum_out_of, ModuleError, RepMorphism, Representation};

/// `⊕_k P(vertices[k])`, with summands in the given order.
pub fn projective_sum<F: Field>(alg: &Arc<Algebra<F>>, vertices: &[usize]) -> Representation<F> {
    if vertices.is_empty() {
        return Representation::zero(alg);
    }
    let parts: Vec<_> = vertices.iter().map(|&v| projective(alg, v)).collect();
    Representation::direct_sum(&parts)
}

/// The map `⊕_k P(vertices[k]) → N` sending the `k`-th generator to `images[k]`.
pub fn map_from_generators<F: Field>(
    vertices: &[usize],
    target: &Representation<F>,
    images: &[Vec<F>],
) -> RepMorphism<F> {
    let alg = target.algebra();
    let maps: Vec<_> = vertices
        .iter()
        .zip(images)
        .map(|(&v, x)| yoneda(&projective(alg, v), v, target, x))
        .collect();
    sum_out_of(target, &maps)
}

/// Images of the generators of `⊕_k P(vertices[k])` under `f`.
pub fn generator_images<F: Field>(vertices: &[usize], f: &RepMorphism<F>) -> Vec<Vec<F>> {
    let alg = f.source().algebra();
    let pbs: Vec<ProjectiveBasis> = vertices.iter().map(|&v| ProjectiveBasis::new(alg, v)).collect();
    (0..vertices.len())
        .map(|k| {
            let v = vertices[k];
            // the trivial word is first among the words from v to v
            let off: usize = pbs[..k].iter().map(|pb| pb.words[v].len()).sum();
            f.comp(v).col(off)
        })
        .collect()
}

/// A lift `g: ⊕ P(vertices[k]) → M` of `f` along `epi: M → N`, so that
/// `epi ∘ g = f`. `None` when some generator image is not in the image of `epi`.
pub fn lift_through<F: Field>(vertices: &[usize], f: &RepMorphism<F>, epi: &RepMorphism<F>) -> Option<RepMorphism<F>> {
    let gens = generator_images(vertices, f);
    let mut images = Vec::with_capacity(gens.len());
    for (&v, x) in vertices.iter().zip(&gens) {
        let rhs = crate::linalg::Mat::from_vec(x.len(), 1, x.clone());
        let y = epi.comp(v).solve(&rhs).expect("shapes agree")?;
        images.push(y.col(0));
    }
    Some(map_from_generators(vertices, epi.source(), &images).with_source(f.source().clone()))
}

/// A projective cover `π: ⊕ P(vertices[k]) → M`.
#[derive(Debug, Clone)]
pub struct Cover<F> {
    pub vertices: Vec<usize>,
    pub map: RepMorphism<F>,
}

pub fn projective_cover<F: Field>(m: &Representation<F>) -> Cover<F> {
    let tops = top_complements(m);
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for (v, t) in tops.iter().enumerate() {
        for c in 0..t.cols() {
            vertices.push(v);
            images.push(t.col(c));
        }
    }
    let map = map_from_generators(&vertices, m, &images);
    Cover { vertices, map }
}

/// `Ω M` with its inclusion into the projective cover.
pub fn syzygy_with_cover<F: Field>(m: &Representation<F>) -> (Representation<F>, RepMorphism<F>, Cover<F>) {
    let cover = projective_cover(m);
    let (k, incl) = kernel(&cover.map);
    (k, incl, cover)
}

pub fn syzygy<F: Field>(m: &Representation<F>) -> Representation<F> {
    syzygy_with_cover(m).0
}

/// `Ω^k M`.
pub fn syzygy_power<F: Field>(m: &Representation<F>, k: usize) -> Representation<F> {
    let mut x = m.clone();
    for _ in 0..k {
        if x.is_zero() {
            break;
        }
        x = syzygy(&x);
    }
    x
}

pub fn is_projective<F: Field>(m: &Representation<F>) -> bool {
    projective_cover(m).map.source().dim() == m.dim()
}

pub fn is_injective<F: Field>(m: &Representation<F>) -> bool {
    is_projective(&dual(m))
}

/// Minimal projective presentation `P1 --d--> P0 --π--> M → 0`.
#[derive(Debug, Clone)]
pub struct Presentation1<F> {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub d: RepMorphism<F>,
    pub cover: RepMorphism<F>,
}

pub fn minimal_presentation<F: Field>(m: &Representation<F>) -> Presentation1<F> {
    let (omega, incl, c0) = syzygy_with_cover(m);
    let c1 = projective_cover(&omega);
    Presentation1 {
        d: incl.after(&c1.map),
        p0: c0.vertices,
        p1: c1.vertices,
        cover: c0.map,
    }
}

/// `Tr M = coker(d*)`, a module over the opposite algebra.
pub fn transpose<F: Field>(m: &Representation<F>) -> Representation<F> {
    let pres = minimal_presentation(m);
    let alg = m.algebra();
    let op = alg.opposite();
    let p1_star = projective_sum(&op, &pres.p1);
    if pres.p0.is_empty() {
        return Representation::zero(&op);
    }
    let op_bases: Vec<ProjectiveBasis> = pres.p1.iter().map(|&i| ProjectiveBasis::new(&op, i)).collect();
    let lam_bases: Vec<ProjectiveBasis> = pres.p0.iter().map(|&j| ProjectiveBasis::new(alg, j)).collect();
    // images of the generators of P1 inside P0
    let gens = generator_images(&pres.p1, &pres.d);
    let mut images = Vec::with_capacity(pres.p0.len());
    for (l, &j) in pres.p0.iter().enumerate() {
        // element of ⊕_k P^op(i_k) at vertex j
        let mut img = Vec::with_capacity(p1_star.dim_at(j));
        for (k, &i) in pres.p1.iter().enumerate() {
            let mut block = vec![F::zero(); op_bases[k].words[j].len()];
            // x_{lk}: the P(j_l) part of the image of generator k, at vertex i
            let off: usize = lam_bases[..l].iter().map(|pb| pb.words[i].len()).sum();
            for (w, &b) in lam_bases[l].words[i].iter().enumerate() {
                let c = gens[k][off + w];
                if c.is_zero() {
                    continue;
                }
                let rev = alg.basis()[b].reversed();
                for (ob, oc) in op.path_coords(&rev) {
                    block[op_bases[k].local(j, ob)] += c * oc;
                }
            }
            img.extend(block);
        }
        images.push(img);
    }
    let d_star = map_from_generators(&pres.p0, &p1_star, &images);
    cokernel(&d_star).0
}

fn has_projective_summand<F: Field>(m: &Representation<F>) -> Result<bool, ModuleError> {
    if m.is_zero() {
        return Ok(false);
    }
    if is_indecomposable(m) {
        return Ok(is_projective(m));
    }
    Ok(decompose(m, 0)?.modules().iter().any(is_projective))
}

/// `τ M = D Tr M`.
pub fn ar_translate<F: Field>(m: &Representation<F>) -> Result<Representation<F>, ModuleError> {
    if has_projective_summand(m)? {
        return Err(ModuleError::ProjectiveSummand);
    }
    Ok(tau_unchecked(m))
}

/// `τ⁻¹ M = Tr D M`.
pub fn ar_cotranslate<F: Field>(m: &Representation<F>) -> Result<Representation<F>, ModuleError> {
    if has_projective_summand(&dual(m))? {
        return Err(ModuleError::InjectiveSummand);
    }
    Ok(tau_inv_unchecked(m))
}

pub(crate) fn tau_unchecked<F: Field>(m: &Representation<F>) -> Representation<F> {
    dual(&transpose(m))
}

pub(crate) fn tau_inv_unchecked<F: Field>(m: &Representation<F>) -> Representation<F> {
    transpose(&dual(m))
}

/// A minimal left `add Λ`-approximation `θ: M → ⊕ P(vertices[k])`.
#[derive(Debug, Clone)]
pub struct LeftApprox<F> {
    pub vertices: Vec<usize>,
    pub map: RepMorphism<F>,
}

/// Generators of `Hom(M, Λ)` as a right module: for each `j`, maps
/// `M → P(j)` completing the span of the composites `M → P(k) → P(j)` along
/// the arrows `j → k`.
pub fn minimal_left_proj_approx<F: Field>(m: &Representation<F>) -> LeftApprox<F> {
    let alg = m.algebra();
    let q = alg.quiver();
    let n = q.num_vertices();
    let projs: Vec<_> = (0..n).map(|j| projective(alg, j)).collect();
    let homs: Vec<Vec<RepMorphism<F>>> = projs.iter().map(|p| hom_basis(m, p)).collect();
    let mut vertices = Vec::new();
    let mut maps = Vec::new();
    for j in 0..n {
        if homs[j].is_empty() {
            continue;
        }
        let pj = ProjectiveBasis::new(alg, j);
        let mut span: Vec<RepMorphism<F>> = Vec::new();
        for a in q.arrows_from(j) {
            let k = q.arrow(a).target;
            let b = alg
                .basis_index(&crate::presentation::Path::arrow(q, a))
                .expect("arrows are basis words");
            let mut x = vec![F::zero(); projs[j].dim_at(k)];
            x[pj.local(k, b)] = F::one();
            let rho = yoneda(&projs[k], k, &projs[j], &x);
            span.extend(homs[k].iter().map(|f| rho.after(f)));
        }
        let len = homs[j][0].flatten().len();
        let mut rank = if span.is_empty() {
            0
        } else {
            as_columns(len, &span).rank()
        };
        for f in &homs[j] {
            span.push(f.clone());
            let r = as_columns(len, &span).rank();
            if r > rank {
                rank = r;
                vertices.push(j);
                maps.push(f.clone());
            } else {
                span.pop();
            }
        }
    }
    let map = hstack_into(m, &maps);
    LeftApprox { vertices, map }
}

/// Cokernel of the minimal left approximation, the first cosyzygy-like step
/// of a projective coresolution.
pub fn left_approx_cokernel<F: Field>(m: &Representation<F>) -> (LeftApprox<F>, Representation<F>) {
    let th = minimal_left_proj_approx(m);
    let c = cokernel(&th.map).0;
    (th, c)
}
