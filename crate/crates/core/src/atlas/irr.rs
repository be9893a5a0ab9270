use std::fmt::Write;

use crate::field::Field;
use crate::modules::{end_ring, hom_space, span_dim, RepMorphism, Representation};

use super::{AtlasError, ModuleAtlas};

/// Which members an AR quiver is computed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    Gproj,
}

/// An irreducible map `modules[from] → modules[to]` lifting a basis vector
/// of `rad/rad²`.
#[derive(Debug, Clone)]
pub struct IrrArrow<F> {
    pub from: usize,
    pub to: usize,
    pub map: RepMorphism<F>,
}

/// The AR quiver of a selection of atlas members. Indices are positions in
/// `vertices`.
#[derive(Debug, Clone)]
pub struct ARQuiverData<F> {
    /// Atlas indices of the selected members.
    pub vertices: Vec<usize>,
    pub modules: Vec<Representation<F>>,
    /// `mult[i][j] = dim rad(X_i, X_j)/rad²(X_i, X_j)`.
    pub mult: Vec<Vec<usize>>,
    pub arrows: Vec<IrrArrow<F>>,
    /// `rad2[i][j]`: maps spanning `rad²(X_i, X_j)`.
    pub rad2: Vec<Vec<Vec<RepMorphism<F>>>>,
    /// `hom[i][j] = dim Hom(X_i, X_j)`.
    pub hom: Vec<Vec<usize>>,
}

impl<F: Field> ARQuiverData<F> {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// Graphviz digraph, one edge per irreducible map, labelled by
    /// dimension vectors and flags.
    pub fn to_dot(&self, atlas: &ModuleAtlas<F>, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph {name} {{").unwrap();
        for (i, &a) in self.vertices.iter().enumerate() {
            let mut flags = Vec::new();
            if atlas.projective[a] {
                flags.push("P");
            }
            if atlas.injective[a] {
                flags.push("I");
            }
            if atlas.gproj.as_ref().is_some_and(|g| g[a]) {
                flags.push("G");
            }
            writeln!(
                s,
                "  m{i} [label=\"{} {}\"];",
                self.modules[i].dim_vector_string(),
                flags.join("")
            )
            .unwrap();
        }
        for a in &self.arrows {
            writeln!(s, "  m{} -> m{};", a.from, a.to).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn rad_space<F: Field>(x: &Representation<F>, y: &Representation<F>, same: bool) -> Vec<RepMorphism<F>> {
    if !same {
        return hom_space(x, y).expect("same algebra");
    }
    let end = end_ring(x);
    (0..end.radical.cols())
        .map(|c| {
            let terms: Vec<(F, &RepMorphism<F>)> = end
                .basis
                .iter()
                .enumerate()
                .map(|(i, b)| (end.radical[(i, c)], b))
                .collect();
            RepMorphism::combination(x, x, &terms)
        })
        .collect()
}

/// Irreducible maps between the selected members: `rad²` is spanned by
/// composites through selected members only.
pub fn irr_table<F: Field>(atlas: &ModuleAtlas<F>, selection: Selection) -> Result<ARQuiverData<F>, AtlasError> {
    let vertices: Vec<usize> = match selection {
        Selection::All => (0..atlas.len()).collect(),
        Selection::Gproj => atlas.gproj_indices()?,
    };
    let modules: Vec<Representation<F>> = vertices.iter().map(|&i| atlas.modules[i].clone()).collect();
    let n = modules.len();
    let rad: Vec<Vec<Vec<RepMorphism<F>>>> = (0..n)
        .map(|i| (0..n).map(|j| rad_space(&modules[i], &modules[j], i == j)).collect())
        .collect();
    let mut mult = vec![vec![0; n]; n];
    let mut arrows = Vec::new();
    let mut rad2 = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if rad[i][j].is_empty() {
                continue;
            }
            let mut span: Vec<RepMorphism<F>> = Vec::new();
            for k in 0..n {
                for g in &rad[k][j] {
                    for f in &rad[i][k] {
                        span.push(g.after(f));
                    }
                }
            }
            let mut rank = span_dim(&span);
            // keep only a basis of rad²
            let mut basis: Vec<RepMorphism<F>> = Vec::new();
            let mut r = 0;
            for f in span {
                basis.push(f);
                let s = span_dim(&basis);
                if s > r {
                    r = s;
                } else {
                    basis.pop();
                }
                if r == rank {
                    break;
                }
            }
            let mut acc = basis.clone();
            for f in &rad[i][j] {
                acc.push(f.clone());
                let s = span_dim(&acc);
                if s > rank {
                    rank = s;
                    mult[i][j] += 1;
                    arrows.push(IrrArrow {
                        from: i,
                        to: j,
                        map: f.clone(),
                    });
                } else {
                    acc.pop();
                }
            }
            rad2[i][j] = basis;
        }
    }
    let hom = vertices
        .iter()
        .map(|&a| vertices.iter().map(|&b| atlas.hom[a][b]).collect())
        .collect();
    Ok(ARQuiverData {
        vertices,
        modules,
        mult,
        arrows,
        rad2,
        hom,
    })
}
