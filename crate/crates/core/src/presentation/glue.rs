use std::collections::HashSet;
use std::sync::Arc;

use crate::field::Field;

use super::algebra::{Algebra, Presentation};
use super::poly::PathPoly;
use super::quiver::{Path, Quiver, QuiverIso};
use super::PresentationError;

/// One of the two glued components. `A` is always the side whose return
/// paths at the glued vertex vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A simple gluing `Λ` of `A` at `a` and `B` at `b`.
#[derive(Debug, Clone)]
pub struct GluingSpec<F> {
    pub left: Arc<Algebra<F>>,
    pub right: Arc<Algebra<F>>,
    pub glued: Arc<Algebra<F>>,
    /// Glue vertex in `left`.
    pub a: usize,
    /// Glue vertex in `right`.
    pub b: usize,
    /// Glued vertex in `glued`.
    pub v: usize,
    left_vertices: Vec<usize>,
    left_arrows: Vec<usize>,
    right_vertices: Vec<usize>,
    right_arrows: Vec<usize>,
    /// The inputs were given as (B, A): the second input carries the
    /// vanishing-return-path condition and plays the role of `A`.
    pub swapped: bool,
    /// Finiteness criterion for (left, right).
    pub sides_ok: (bool, bool),
    /// Whether the glued ideal is generated by the two component ideals.
    pub glued_ideal: bool,
}

/// `(a-side ok, b-side ok)`: whether every nontrivial return path at the
/// glue vertex vanishes in that component.
pub fn check_gluing_finiteness<F: Field>(a_alg: &Algebra<F>, a: usize, b_alg: &Algebra<F>, b: usize) -> (bool, bool) {
    (a_alg.no_return_paths(a), b_alg.no_return_paths(b))
}

fn fresh(name: &str, taken: &HashSet<String>) -> String {
    let mut s = format!("{name}'");
    while taken.contains(&s) {
        s.push('\'');
    }
    s
}

/// Glues `first` at `a` with `second` at `b`.
///
/// `first` keeps its names; `second`'s vertices and arrows gain a `'`
/// suffix, except `b`, which takes the name of `a`.
pub fn glue<F: Field>(
    first: &Arc<Algebra<F>>,
    a: usize,
    second: &Arc<Algebra<F>>,
    b: usize,
) -> Result<GluingSpec<F>, PresentationError> {
    let (ok1, ok2) = check_gluing_finiteness(first, a, second, b);
    if !ok1 && !ok2 {
        let wit = |alg: &Algebra<F>, v: usize| {
            alg.return_paths(v)
                .first()
                .map(|p| p.display(alg.quiver()).to_string())
                .unwrap_or_default()
        };
        return Err(PresentationError::GluingInfinite {
            a: first.quiver().vertex_name(a).to_string(),
            b: second.quiver().vertex_name(b).to_string(),
            witness: format!("{} and {}", wit(first, a), wit(second, b)),
        });
    }
    let (q1, q2) = (first.quiver(), second.quiver());
    let mut q = Quiver::new();
    let mut taken: HashSet<String> = HashSet::new();
    for n in q1.vertices() {
        q.add_vertex(n).expect("names from a valid quiver");
        taken.insert(n.clone());
    }
    for a in q1.arrows() {
        taken.insert(a.name.clone());
    }
    let v1: Vec<usize> = (0..q1.num_vertices()).collect();
    let mut v2 = Vec::with_capacity(q2.num_vertices());
    for (i, n) in q2.vertices().iter().enumerate() {
        if i == b {
            v2.push(a);
        } else {
            let name = fresh(n, &taken);
            taken.insert(name.clone());
            v2.push(q.add_vertex(&name).expect("fresh name"));
        }
    }
    let mut a1 = Vec::new();
    for ar in q1.arrows() {
        q.push_arrow_raw(ar.name.clone(), ar.source, ar.target);
        a1.push(q.num_arrows() - 1);
    }
    let mut a2 = Vec::new();
    for ar in q2.arrows() {
        let name = fresh(&ar.name, &taken);
        taken.insert(name.clone());
        q.push_arrow_raw(name, v2[ar.source], v2[ar.target]);
        a2.push(q.num_arrows() - 1);
    }
    let mut pres = Presentation::new(q.clone());
    for r in first.relations() {
        pres.push_relation(map_poly(r, &q, &a1))?;
    }
    for r in second.relations() {
        pres.push_relation(map_poly(r, &q, &a2))?;
    }
    let (m1, m2) = (first.maxdeg(), second.maxdeg());
    pres.maxdeg = if ok1 { 2 * m1 + m2 } else { m1 + 2 * m2 };
    let glued = pres.complete()?;

    let spec = if ok1 {
        GluingSpec {
            left: first.clone(),
            right: second.clone(),
            glued,
            a,
            b,
            v: a,
            left_vertices: v1,
            left_arrows: a1,
            right_vertices: v2,
            right_arrows: a2,
            swapped: false,
            sides_ok: (ok1, ok2),
            glued_ideal: true,
        }
    } else {
        GluingSpec {
            left: second.clone(),
            right: first.clone(),
            glued,
            a: b,
            b: a,
            v: a,
            left_vertices: v2,
            left_arrows: a2,
            right_vertices: v1,
            right_arrows: a1,
            swapped: true,
            sides_ok: (ok2, ok1),
            glued_ideal: true,
        }
    };
    Ok(spec)
}

pub(crate) fn map_poly<F: Field>(r: &PathPoly<F>, q: &Quiver, amap: &[usize]) -> PathPoly<F> {
    r.map_paths(|p| {
        if p.is_trivial() {
            unreachable!("relations have no trivial terms")
        }
        Path::from_arrows(q, p.arrows.iter().map(|&x| amap[x]).collect()).expect("image of a path is a path")
    })
}

/// Outcome of looking for a gluing decomposition inside one algebra.
#[derive(Debug, Clone)]
pub enum Detected<F> {
    Glued(Box<GluingSpec<F>>),
    /// The quiver splits at a vertex but some relation straddles the split.
    NonGluedIdeal {
        vertex: usize,
    },
    /// No cut vertex exists.
    NoSplit,
}

/// Finds `Λ = A ⊔_v B` with every relation supported on one side.
pub fn detect_gluing<F: Field>(lam: &Arc<Algebra<F>>) -> Detected<F> {
    let q = lam.quiver();
    let n = q.num_vertices();
    let mut straddled = None;
    for v in 0..n {
        let touched: HashSet<usize> = q.arrows().iter().flat_map(|a| [a.source, a.target]).collect();
        if (0..n).any(|u| u != v && !touched.contains(&u)) {
            continue;
        }
        // arrows linked through a shared vertex other than v
        let m = q.num_arrows();
        let mut uf = UnionFind::new(m);
        for i in 0..m {
            for j in i + 1..m {
                let (x, y) = (q.arrow(i), q.arrow(j));
                let ends_i = [x.source, x.target];
                if [y.source, y.target].iter().any(|e| *e != v && ends_i.contains(e)) {
                    uf.union(i, j);
                }
            }
        }
        if uf.classes() < 2 {
            continue;
        }
        for r in lam.relations() {
            let arrows: Vec<usize> = r.terms().flat_map(|(p, _)| p.arrows.clone()).collect();
            for w in arrows.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        if uf.classes() < 2 {
            straddled.get_or_insert(v);
            continue;
        }
        let root = uf.find(0);
        let side_a: Vec<usize> = (0..m).filter(|&i| uf.find(i) == root).collect();
        let side_b: Vec<usize> = (0..m).filter(|&i| uf.find(i) != root).collect();
        let (Some(pa), Some(pb)) = (sub_algebra(lam, v, &side_a), sub_algebra(lam, v, &side_b)) else {
            continue;
        };
        let (alg_a, ma) = pa;
        let (alg_b, mb) = pb;
        let (va_ok, vb_ok) = check_gluing_finiteness(&alg_a, ma.0, &alg_b, mb.0);
        if !va_ok && !vb_ok {
            continue;
        }
        let spec = if va_ok {
            GluingSpec {
                left: alg_a,
                right: alg_b,
                glued: lam.clone(),
                a: ma.0,
                b: mb.0,
                v,
                left_vertices: ma.1,
                left_arrows: side_a,
                right_vertices: mb.1,
                right_arrows: side_b,
                swapped: false,
                sides_ok: (va_ok, vb_ok),
                glued_ideal: true,
            }
        } else {
            GluingSpec {
                left: alg_b,
                right: alg_a,
                glued: lam.clone(),
                a: mb.0,
                b: ma.0,
                v,
                left_vertices: mb.1,
                left_arrows: side_b,
                right_vertices: ma.1,
                right_arrows: side_a,
                swapped: true,
                sides_ok: (vb_ok, va_ok),
                glued_ideal: true,
            }
        };
        return Detected::Glued(Box::new(spec));
    }
    match straddled {
        Some(vertex) => Detected::NonGluedIdeal { vertex },
        None => Detected::NoSplit,
    }
}

type SubAlg<F> = (Arc<Algebra<F>>, (usize, Vec<usize>));

/// The component on `arrows` together with `v`, keeping `Λ`'s names.
fn sub_algebra<F: Field>(lam: &Arc<Algebra<F>>, v: usize, arrows: &[usize]) -> Option<SubAlg<F>> {
    let q = lam.quiver();
    let mut verts: Vec<usize> = vec![v];
    for &i in arrows {
        for e in [q.arrow(i).source, q.arrow(i).target] {
            if !verts.contains(&e) {
                verts.push(e);
            }
        }
    }
    verts.sort();
    let mut sq = Quiver::new();
    for &u in &verts {
        sq.add_vertex(q.vertex_name(u)).ok()?;
    }
    // arrow index in Λ -> index in the component
    let mut amap = vec![usize::MAX; q.num_arrows()];
    for &i in arrows {
        let a = q.arrow(i);
        amap[i] = sq
            .add_arrow(&a.name, q.vertex_name(a.source), q.vertex_name(a.target))
            .ok()?;
    }
    let arrow_set: HashSet<usize> = arrows.iter().copied().collect();
    let mut pres = Presentation::new(sq.clone());
    pres.maxdeg = lam.maxdeg();
    for r in lam.relations() {
        if r.terms().all(|(p, _)| p.arrows.iter().all(|x| arrow_set.contains(x))) {
            pres.push_relation(map_poly(r, &sq, &amap)).ok()?;
        }
    }
    let alg = pres.complete().ok()?;
    let local_v = verts.iter().position(|&u| u == v)?;
    Some((alg, (local_v, verts)))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// Whether `lam` is the gluing `spec.glued` up to a quiver isomorphism: its
/// relations vanish in the gluing, the gluing's vanish in `lam`, and the
/// dimensions agree. Returns the matching isomorphism (gluing → `lam`).
pub fn glued_ideal_check<F: Field>(spec: &GluingSpec<F>, lam: &Arc<Algebra<F>>) -> Option<QuiverIso> {
    let g = &spec.glued;
    if g.dim() != lam.dim() {
        return None;
    }
    for iso in g.quiver().isomorphisms(lam.quiver(), 256) {
        let mut inv = vec![0; iso.arrows.len()];
        for (i, &j) in iso.arrows.iter().enumerate() {
            inv[j] = i;
        }
        let forward = g
            .relations()
            .iter()
            .all(|r| lam.is_zero_in(&map_poly(r, lam.quiver(), &iso.arrows)));
        let backward = lam
            .relations()
            .iter()
            .all(|r| g.is_zero_in(&map_poly(r, g.quiver(), &inv)));
        if forward && backward {
            return Some(iso);
        }
    }
    None
}

impl<F: Field> GluingSpec<F> {
    pub fn alg(&self, side: Side) -> &Arc<Algebra<F>> {
        match side {
            Side::A => &self.left,
            Side::B => &self.right,
        }
    }

    /// The glue vertex inside the component.
    pub fn glue_vertex(&self, side: Side) -> usize {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }

    /// Component vertex index → glued vertex index.
    pub fn vertex_map(&self, side: Side) -> &[usize] {
        match side {
            Side::A => &self.left_vertices,
            Side::B => &self.right_vertices,
        }
    }

    /// Component arrow index → glued arrow index.
    pub fn arrow_map(&self, side: Side) -> &[usize] {
        match side {
            Side::A => &self.left_arrows,
            Side::B => &self.right_arrows,
        }
    }

    /// Glued vertex index → component vertex index, when it lies on `side`.
    pub fn vertex_preimage(&self, side: Side, u: usize) -> Option<usize> {
        self.vertex_map(side).iter().position(|&x| x == u)
    }

    /// Glued arrow index → component arrow index, when it lies on `side`.
    pub fn arrow_preimage(&self, side: Side, u: usize) -> Option<usize> {
        self.arrow_map(side).iter().position(|&x| x == u)
    }

    /// The component a glued arrow comes from.
    pub fn side_of_arrow(&self, u: usize) -> Side {
        if self.left_arrows.contains(&u) {
            Side::A
        } else {
            Side::B
        }
    }

    /// Re-bases the specification on an isomorphic copy of the glued algebra.
    pub fn transport(&self, lam: &Arc<Algebra<F>>, iso: &QuiverIso) -> GluingSpec<F> {
        let mut s = self.clone();
        s.glued = lam.clone();
        s.v = iso.vertices[self.v];
        for m in [&mut s.left_vertices, &mut s.right_vertices] {
            for x in m.iter_mut() {
                *x = iso.vertices[*x];
            }
        }
        for m in [&mut s.left_arrows, &mut s.right_arrows] {
            for x in m.iter_mut() {
                *x = iso.arrows[*x];
            }
        }
        s
    }

    /// The same gluing read over the opposite algebras. Indices carry over
    /// unchanged since opposite quivers keep them.
    pub fn opposite(&self) -> GluingSpec<F> {
        let mut s = self.clone();
        s.left = self.left.opposite();
        s.right = self.right.opposite();
        s.glued = self.glued.opposite();
        s
    }

    /// A non-glued copy: same data, flagged so that checkers refuse to run.
    pub fn mark_non_glued(mut self) -> Self {
        self.glued_ideal = false;
        self
    }
}
