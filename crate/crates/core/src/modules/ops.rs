use crate::field::Field;
use crate::linalg::Mat;

use super::{RepMorphism, Representation};

/// Submodule spanned vertexwise by the columns of `bases` (each full column
/// rank and jointly closed under the arrows), with its inclusion.
pub fn subrep<F: Field>(m: &Representation<F>, bases: Vec<Mat<F>>) -> (Representation<F>, RepMorphism<F>) {
    let q = m.algebra().quiver();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = m.mat(ai).mul(&bases[a.source]);
            bases[a.target]
                .solve(&img)
                .expect("shapes agree")
                .expect("subspace closed under arrows")
        })
        .collect();
    let sub = Representation::new_unchecked(m.algebra().clone(), dims, mats);
    let incl = RepMorphism::new_unchecked(sub.clone(), m.clone(), bases);
    (sub, incl)
}

/// Quotient by the submodule spanned by the columns of `sub`, with the
/// projection.
pub fn quotient<F: Field>(m: &Representation<F>, sub: &[Mat<F>]) -> (Representation<F>, RepMorphism<F>) {
    let (quo, proj, _) = quotient_split(m, sub);
    (quo, proj)
}

/// [`quotient`] together with vertexwise linear sections of the projection.
pub fn quotient_split<F: Field>(
    m: &Representation<F>,
    sub: &[Mat<F>],
) -> (Representation<F>, RepMorphism<F>, Vec<Mat<F>>) {
    let q = m.algebra().quiver();
    let n = m.dims().len();
    let mut sections = Vec::with_capacity(n);
    let mut projs = Vec::with_capacity(n);
    for (v, s) in sub.iter().enumerate().take(n) {
        let basis = s.col_basis();
        let comp = basis.col_complement();
        let full = Mat::hstack(&[&basis, &comp]);
        let inv = full.inverse().expect("basis and complement span");
        let k = basis.cols();
        projs.push(inv.submatrix(k..m.dim_at(v), 0..m.dim_at(v)));
        sections.push(comp);
    }
    let dims: Vec<usize> = sections.iter().map(|s| s.cols()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| projs[a.target].mul(&m.mat(ai).mul(&sections[a.source])))
        .collect();
    let quo = Representation::new_unchecked(m.algebra().clone(), dims, mats);
    let proj = RepMorphism::new_unchecked(m.clone(), quo.clone(), projs);
    (quo, proj, sections)
}

pub fn kernel<F: Field>(f: &RepMorphism<F>) -> (Representation<F>, RepMorphism<F>) {
    subrep(f.source(), f.comps().iter().map(|c| c.kernel_basis()).collect())
}

pub fn image<F: Field>(f: &RepMorphism<F>) -> (Representation<F>, RepMorphism<F>) {
    subrep(f.target(), f.comps().iter().map(|c| c.col_basis()).collect())
}

pub fn cokernel<F: Field>(f: &RepMorphism<F>) -> (Representation<F>, RepMorphism<F>) {
    quotient(f.target(), f.comps())
}

/// `D M = Hom_K(M, K)` over the opposite algebra.
pub fn dual<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = m.algebra().opposite();
    let mats = m.mats().iter().map(|a| a.transpose()).collect();
    Representation::new_unchecked(op, m.dims().to_vec(), mats)
}

/// `D f: D N → D M`.
pub fn dual_map<F: Field>(f: &RepMorphism<F>) -> RepMorphism<F> {
    dual_map_between(f, &dual(f.target()), &dual(f.source()))
}

/// `D f` with prescribed source `D N` and target `D M`.
pub fn dual_map_between<F: Field>(
    f: &RepMorphism<F>,
    dn: &Representation<F>,
    dm: &Representation<F>,
) -> RepMorphism<F> {
    let comps = f.comps().iter().map(|c| c.transpose()).collect();
    RepMorphism::new_unchecked(dn.clone(), dm.clone(), comps)
}

/// Top `M / rad M` as complements: for each vertex, columns completing
/// `Σ_{α: → i} im M_α` to `M_i`.
pub fn top_complements<F: Field>(m: &Representation<F>) -> Vec<Mat<F>> {
    radical_bases(m).iter().map(|r| r.col_complement()).collect()
}

/// Vertexwise bases of `rad M`.
pub fn radical_bases<F: Field>(m: &Representation<F>) -> Vec<Mat<F>> {
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let parts: Vec<&Mat<F>> = q.arrows_into(v).map(|a| m.mat(a)).collect();
            if parts.is_empty() {
                Mat::zeros(m.dim_at(v), 0)
            } else {
                Mat::hstack(&parts).col_basis()
            }
        })
        .collect()
}

pub fn radical<F: Field>(m: &Representation<F>) -> (Representation<F>, RepMorphism<F>) {
    subrep(m, radical_bases(m))
}

/// Vertexwise bases of `soc M`: common kernel of all outgoing arrows.
pub fn socle_bases<F: Field>(m: &Representation<F>) -> Vec<Mat<F>> {
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let parts: Vec<&Mat<F>> = q.arrows_from(v).map(|a| m.mat(a)).collect();
            if parts.is_empty() {
                Mat::identity(m.dim_at(v))
            } else {
                Mat::vstack(&parts).kernel_basis()
            }
        })
        .collect()
}

pub fn top_dims<F: Field>(m: &Representation<F>) -> Vec<usize> {
    top_complements(m).iter().map(|c| c.cols()).collect()
}

pub fn socle_dims<F: Field>(m: &Representation<F>) -> Vec<usize> {
    socle_bases(m).iter().map(|c| c.cols()).collect()
}
