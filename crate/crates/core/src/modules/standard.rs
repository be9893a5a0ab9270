use std::sync::Arc;

use crate::field::Field;
use crate::linalg::Mat;
use crate::presentation::Algebra;

use super::{dual, RepMorphism, Representation};

/// Basis words of `P(i) = Λe_i`, grouped by target vertex.
#[derive(Debug, Clone)]
pub struct ProjectiveBasis {
    pub vertex: usize,
    /// `words[j]`: basis indices of the normal words from `i` to `j`, in basis order.
    pub words: Vec<Vec<usize>>,
}

impl ProjectiveBasis {
    pub fn new<F: Field>(alg: &Algebra<F>, i: usize) -> Self {
        let mut words = vec![Vec::new(); alg.num_vertices()];
        for &b in alg.basis_from(i) {
            words[alg.basis()[b].target].push(b);
        }
        ProjectiveBasis { vertex: i, words }
    }

    /// Position of basis word `b` inside its vertex block.
    pub fn local(&self, target: usize, b: usize) -> usize {
        self.words[target]
            .iter()
            .position(|&x| x == b)
            .expect("word in projective basis")
    }
}

/// `P(i)`, realised on the normal words starting at `i`.
pub fn projective<F: Field>(alg: &Arc<Algebra<F>>, i: usize) -> Representation<F> {
    let pb = ProjectiveBasis::new(alg, i);
    let q = alg.quiver();
    let dims: Vec<usize> = pb.words.iter().map(|w| w.len()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            for (c, &b) in pb.words[a.source].iter().enumerate() {
                for &(k, x) in alg.left_action(ai, b) {
                    m[(pb.local(a.target, k), c)] += x;
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(alg.clone(), dims, mats)
}

/// `I(i) = D(P^op(i))`.
pub fn injective<F: Field>(alg: &Arc<Algebra<F>>, i: usize) -> Representation<F> {
    let op = alg.opposite();
    dual(&projective(&op, i)).rebase(alg)
}

pub fn simple<F: Field>(alg: &Arc<Algebra<F>>, i: usize) -> Representation<F> {
    let n = alg.num_vertices();
    let dims = (0..n).map(|v| usize::from(v == i)).collect::<Vec<_>>();
    let mats = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Mat::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation::new_unchecked(alg.clone(), dims, mats)
}

pub struct StandardModules<F> {
    pub projectives: Vec<Representation<F>>,
    pub injectives: Vec<Representation<F>>,
    pub simples: Vec<Representation<F>>,
}

pub fn standard_modules<F: Field>(alg: &Arc<Algebra<F>>) -> StandardModules<F> {
    let n = alg.num_vertices();
    StandardModules {
        projectives: (0..n).map(|i| projective(alg, i)).collect(),
        injectives: (0..n).map(|i| injective(alg, i)).collect(),
        simples: (0..n).map(|i| simple(alg, i)).collect(),
    }
}

/// The map `P(i) → N` sending `e_i` to `x ∈ N_i`.
pub fn yoneda<F: Field>(p: &Representation<F>, i: usize, n: &Representation<F>, x: &[F]) -> RepMorphism<F> {
    let alg = n.algebra();
    let pb = ProjectiveBasis::new(alg, i);
    let xm = Mat::from_vec(x.len(), 1, x.to_vec());
    let comps = (0..alg.num_vertices())
        .map(|j| {
            let cols: Vec<Vec<F>> = pb.words[j]
                .iter()
                .map(|&b| n.path_action(&alg.basis()[b]).mul(&xm).col(0))
                .collect();
            Mat::from_cols(&cols, n.dim_at(j))
        })
        .collect();
    RepMorphism::new_unchecked(p.clone(), n.clone(), comps)
}

/// The image of the generator `e_i` under `f: P(i) → N`.
pub fn generator_image<F: Field>(f: &RepMorphism<F>, i: usize) -> Vec<F> {
    let alg = f.source().algebra();
    let pos = alg
        .basis_index(&crate::presentation::Path::trivial(i))
        .expect("trivial path is a basis word");
    let pb = ProjectiveBasis::new(alg, i);
    f.comp(i).col(pb.local(i, pos))
}
