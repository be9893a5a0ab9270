//! Slow independent implementations used to cross-check the fast paths.

use std::collections::HashMap;

use crate::field::Field;
use crate::linalg::Mat;
use crate::modules::Representation;
use crate::presentation::{Path, Presentation};

/// Dimension of `KQ/I` by enumerating every path up to length `n` and
/// computing the rank of the truncated two-sided ideal.
///
/// Returns `None` when some path of length `n` is not in the truncated
/// ideal, so `n` is too small to certify the count.
pub fn basis_dim_bruteforce<F: Field>(p: &Presentation<F>, n: usize) -> Option<usize> {
    let q = &p.quiver;
    let mut paths: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut frontier = paths.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for a in q.arrows_from(w.target) {
                next.push(Path::arrow(q, a).compose(w).expect("composable"));
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut gens: Vec<Vec<F>> = Vec::new();
    for r in &p.relations {
        let Some((s, t)) = r.endpoints() else { continue };
        for u in paths.iter().filter(|u| u.source == t) {
            for w in paths.iter().filter(|w| w.target == s) {
                let mut v = vec![F::zero(); paths.len()];
                let mut keep = false;
                for (term, c) in r.terms() {
                    let full = u.compose(&term.compose(w).expect("composable")).expect("composable");
                    if let Some(&i) = index.get(&full) {
                        v[i] += c;
                        keep = true;
                    }
                }
                if keep {
                    gens.push(v);
                }
            }
        }
    }
    let rank_of = |g: &[Vec<F>]| {
        if g.is_empty() {
            0
        } else {
            Mat::from_cols(g, paths.len()).rank()
        }
    };
    let rank = rank_of(&gens);
    let mut with_top = gens;
    for (i, p) in paths.iter().enumerate() {
        if p.len() == n {
            let mut v = vec![F::zero(); paths.len()];
            v[i] = F::one();
            with_top.push(v);
        }
    }
    (rank_of(&with_top) == rank).then(|| paths.len() - rank)
}

/// `dim Hom(M, N)` from the commuting-square equations written with
/// Kronecker products.
pub fn hom_dim_kronecker<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    let q = m.algebra().quiver();
    let sizes: Vec<usize> = (0..q.num_vertices()).map(|v| m.dim_at(v) * n.dim_at(v)).collect();
    let total: usize = sizes.iter().sum();
    let offs: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let kron = |a: &Mat<F>, b: &Mat<F>| {
        Mat::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
            a[(i / b.rows(), j / b.cols())] * b[(i % b.rows(), j % b.cols())]
        })
    };
    if total == 0 {
        return 0;
    }
    let mut blocks = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let rows = n.dim_at(t) * m.dim_at(s);
        let mut blk = Mat::zeros(rows, total);
        let left = kron(&m.mat(ai).transpose(), &Mat::identity(n.dim_at(t)));
        let right = kron(&Mat::identity(m.dim_at(s)), n.mat(ai)).neg();
        blk.set_block(0, offs[t], &left);
        let mut r2 = Mat::zeros(rows, total);
        r2.set_block(0, offs[s], &right);
        blocks.push(blk.add(&r2));
    }
    if blocks.is_empty() {
        return total;
    }
    total - Mat::vstack(&blocks.iter().collect::<Vec<_>>()).rank()
}
