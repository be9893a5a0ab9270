use crate::field::Field;
use crate::linalg::Mat;

use super::{ModuleError, RepMorphism, Representation};

/// Basis of `Hom(M, N)`.
///
/// Unknowns are the entries of every component `X_i` (row-major, vertex by
/// vertex); each arrow `α: s → t` contributes `X_t M_α − N_α X_s = 0`.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<RepMorphism<F>>, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    Ok(hom_basis(m, n))
}

pub(crate) fn hom_offsets<F: Field>(m: &Representation<F>, n: &Representation<F>) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims().len());
    let mut acc = 0;
    for v in 0..m.dims().len() {
        off.push(acc);
        acc += n.dim_at(v) * m.dim_at(v);
    }
    (off, acc)
}

pub(crate) fn hom_basis<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<RepMorphism<F>> {
    let (off, unknowns) = hom_offsets(m, n);
    if unknowns == 0 {
        return Vec::new();
    }
    let q = m.algebra().quiver();
    let rows: usize = q.arrows().iter().map(|a| n.dim_at(a.target) * m.dim_at(a.source)).sum();
    let mut sys = Mat::zeros(rows, unknowns);
    let mut r0 = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, mt, ns, nt) = (m.dim_at(s), m.dim_at(t), n.dim_at(s), n.dim_at(t));
        let ma = m.mat(ai);
        let na = n.mat(ai);
        for r in 0..nt {
            for c in 0..ms {
                let row = r0 + r * ms + c;
                // (X_t M_α)[r,c] = Σ_k X_t[r,k] M_α[k,c]
                for k in 0..mt {
                    let v = ma[(k, c)];
                    if !v.is_zero() {
                        sys[(row, off[t] + r * mt + k)] += v;
                    }
                }
                // (N_α X_s)[r,c] = Σ_k N_α[r,k] X_s[k,c]
                for k in 0..ns {
                    let v = na[(r, k)];
                    if !v.is_zero() {
                        sys[(row, off[s] + k * ms + c)] -= v;
                    }
                }
            }
        }
        r0 += nt * ms;
    }
    let ker = sys.kernel_basis();
    (0..ker.cols()).map(|j| unflatten(m, n, &off, &ker.col(j))).collect()
}

pub(crate) fn unflatten<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
    off: &[usize],
    x: &[F],
) -> RepMorphism<F> {
    let comps = (0..m.dims().len())
        .map(|v| {
            let (r, c) = (n.dim_at(v), m.dim_at(v));
            Mat::from_vec(r, c, x[off[v]..off[v] + r * c].to_vec())
        })
        .collect();
    RepMorphism::new_unchecked(m.clone(), n.clone(), comps)
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_basis(m, n).len()
}

/// Matrix whose columns are the flattened morphisms.
pub(crate) fn as_columns<F: Field>(len: usize, maps: &[RepMorphism<F>]) -> Mat<F> {
    Mat::from_cols(&maps.iter().map(|f| f.flatten()).collect::<Vec<_>>(), len)
}

/// Dimension of the span of the given morphisms.
pub fn span_dim<F: Field>(maps: &[RepMorphism<F>]) -> usize {
    let Some(f) = maps.first() else { return 0 };
    let len: usize = f.comps().iter().map(|c| c.rows() * c.cols()).sum();
    as_columns(len, maps).rank()
}

/// Coordinates of `f` in the span of `basis`, if it lies there.
pub fn coordinates<F: Field>(basis: &[RepMorphism<F>], f: &RepMorphism<F>) -> Option<Vec<F>> {
    let len = f.flatten().len();
    let a = as_columns(len, basis);
    let b = Mat::from_vec(len, 1, f.flatten());
    a.solve(&b).ok().flatten().map(|x| x.col(0))
}

/// The endomorphism ring together with its radical, computed through the
/// trace form `(φ, ψ) ↦ tr(φψ)`; valid when `p > dim M`.
pub struct EndRing<F> {
    pub basis: Vec<RepMorphism<F>>,
    /// Dimension of `End(M)/rad End(M)`.
    pub top_dim: usize,
    /// Radical as coefficient vectors (columns) in `basis`.
    pub radical: Mat<F>,
}

pub fn end_ring<F: Field>(m: &Representation<F>) -> EndRing<F> {
    let basis = hom_basis(m, m);
    let k = basis.len();
    let mut t = Mat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let tr: F = (0..m.dims().len())
                .map(|v| basis[i].comp(v).mul(basis[j].comp(v)).trace())
                .sum();
            t[(i, j)] = tr;
            t[(j, i)] = tr;
        }
    }
    let radical = t.kernel_basis();
    EndRing {
        top_dim: k - radical.cols(),
        basis,
        radical,
    }
}
