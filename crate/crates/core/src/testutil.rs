use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Fp};
use crate::modules::{cokernel, map_from_generators, projective_sum, Representation};
use crate::presentation::{glue, parse_presentation, Algebra, GluingSpec};

pub(crate) type F = Fp<32003>;

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!("../../../fixtures/", $name, ".qalg"))
    };
}

pub(crate) const EX3_13: &str = fixture!("ex3_13");
pub(crate) const EX3_13_PRIME: &str = fixture!("ex3_13_prime");
pub(crate) const EX3_13_A: &str = fixture!("ex3_13_A");
pub(crate) const EX3_13_B: &str = fixture!("ex3_13_B");
pub(crate) const EX3_15: &str = fixture!("ex3_15");
pub(crate) const EX3_15_A: &str = fixture!("ex3_15_A");
pub(crate) const EX3_15_B: &str = fixture!("ex3_15_B");
pub(crate) const EX4_10: &str = fixture!("ex4_10");
pub(crate) const EX4_10_A: &str = fixture!("ex4_10_A");
pub(crate) const EX4_10_B: &str = fixture!("ex4_10_B");
pub(crate) const H2: &str = fixture!("h2");
pub(crate) const DUAL_NUMBERS: &str = fixture!("dual_numbers");
pub(crate) const CLUSTER_TUBE: &str = fixture!("cluster_tube_n3");
pub(crate) const A2: &str = fixture!("a2");
pub(crate) const K: &str = fixture!("k");
pub(crate) const FIG3: &str = fixture!("fig3");
pub(crate) const FIG3_A: &str = fixture!("fig3_A");
pub(crate) const FIG3_B: &str = fixture!("fig3_B");
pub(crate) const EX4_10_AUS: &str = fixture!("ex4_10_aus");
pub(crate) const EX3_15_AUS: &str = fixture!("ex3_15_aus");

pub(crate) fn alg(text: &str) -> Arc<Algebra<F>> {
    parse_presentation::<F>(text).unwrap().complete().unwrap()
}

/// Glues `a_text` at the vertex named `a` with `b_text` at `b`.
pub(crate) fn gluing(a_text: &str, a: &str, b_text: &str, b: &str) -> GluingSpec<F> {
    let (x, y) = (alg(a_text), alg(b_text));
    let ai = x.quiver().vertex_index(a).unwrap();
    let bi = y.quiver().vertex_index(b).unwrap();
    glue(&x, ai, &y, bi).unwrap()
}

/// A random quotient of a small sum of projectives.
pub(crate) fn random_module(alg: &Arc<Algebra<F>>, seed: u64) -> Representation<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.num_vertices();
    let verts: Vec<usize> = (0..rng.random_range(1..3)).map(|_| rng.random_range(0..n)).collect();
    let p = projective_sum(alg, &verts);
    let k = rng.random_range(0..3);
    let sub_verts: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
    let images: Vec<Vec<F>> = sub_verts
        .iter()
        .map(|&v| (0..p.dim_at(v)).map(|_| F::sample(&mut rng)).collect())
        .collect();
    if sub_verts.is_empty() {
        return p;
    }
    cokernel(&map_from_generators(&sub_verts, &p, &images)).0
}
