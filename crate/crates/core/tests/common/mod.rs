//! Fixture gluings and seeded property checks shared by the property suites
//! and the acceptance target. Each check returns `Err` with a witness.

#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qglue_core::atlas::{gproj_atlas, knit};
use qglue_core::gluing::{canonical_ses, composite_injectivity_check, factoring_dims, induce, FunctorTag};
use qglue_core::homology::{default_bound, ext_dim, ext_dim_coresolution, gorenstein_report};
use qglue_core::modules::{
    cokernel, decompose, hom_dim, hom_space, image, is_isomorphic, map_from_generators, projective, projective_sum,
    radical, simple, span_dim, RepMorphism, Representation,
};
use qglue_core::presentation::{glue, parse_presentation, Algebra, GluingSpec, Side};
use qglue_core::{Field, Fp32003};

pub type F = Fp32003;

macro_rules! fixture {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/", $name, ".qalg"))
    };
}

pub const ALGEBRAS: [&str; 10] = [
    fixture!("ex3_13"),
    fixture!("ex3_15"),
    fixture!("ex4_10"),
    fixture!("cluster_tube_n3"),
    fixture!("h2"),
    fixture!("dual_numbers"),
    fixture!("a2"),
    fixture!("ex3_13_prime"),
    fixture!("fig3"),
    fixture!("ex3_15_aus"),
];

/// `(A, a, B, b)` for each shipped gluing.
pub const GLUINGS: [(&str, &str, &str, &str); 4] = [
    (fixture!("ex3_13_A"), "2", fixture!("ex3_13_B"), "2"),
    (fixture!("ex3_15_A"), "2", fixture!("ex3_15_B"), "2"),
    (fixture!("ex4_10_A"), "3", fixture!("ex4_10_B"), "3"),
    (fixture!("h2"), "1", fixture!("dual_numbers"), "1"),
];

pub fn alg(text: &str) -> Arc<Algebra<F>> {
    parse_presentation::<F>(text).unwrap().complete().unwrap()
}

pub struct Glued {
    pub spec: GluingSpec<F>,
    pub gproj_a: Vec<Representation<F>>,
    pub gproj_b: Vec<Representation<F>>,
}

fn gproj_list(a: &Arc<Algebra<F>>) -> Vec<Representation<F>> {
    let r = gorenstein_report(a, default_bound(a));
    gproj_atlas(&knit(a, 200).unwrap(), &r)
        .unwrap()
        .gproj_modules()
        .unwrap()
}

fn build_gluings() -> Vec<Glued> {
    GLUINGS
        .iter()
        .map(|&(a, an, b, bn)| {
            let (x, y) = (alg(a), alg(b));
            let spec = glue(
                &x,
                x.quiver().vertex_index(an).unwrap(),
                &y,
                y.quiver().vertex_index(bn).unwrap(),
            )
            .unwrap();
            Glued {
                gproj_a: gproj_list(&spec.left),
                gproj_b: gproj_list(&spec.right),
                spec,
            }
        })
        .collect()
}

thread_local! {
    static GLUED: Vec<Glued> = build_gluings();
    static FIXTURES: Vec<Arc<Algebra<F>>> = ALGEBRAS.iter().map(|t| alg(t)).collect();
}

pub fn with_gluing<T>(rng: &mut ChaCha8Rng, f: impl FnOnce(&Glued, &mut ChaCha8Rng) -> T) -> T {
    let k = rng.random_range(0..GLUINGS.len());
    GLUED.with(|g| f(&g[k], rng))
}

pub fn with_fixture<T>(rng: &mut ChaCha8Rng, f: impl FnOnce(&Arc<Algebra<F>>, &mut ChaCha8Rng) -> T) -> T {
    let k = rng.random_range(0..ALGEBRAS.len());
    FIXTURES.with(|a| f(&a[k], rng))
}

/// A random quotient of a small sum of projectives.
pub fn random_module(alg: &Arc<Algebra<F>>, rng: &mut ChaCha8Rng) -> Representation<F> {
    let n = alg.num_vertices();
    let verts: Vec<usize> = (0..rng.random_range(1..3)).map(|_| rng.random_range(0..n)).collect();
    let p = projective_sum(alg, &verts);
    let sub: Vec<usize> = (0..rng.random_range(0..3)).map(|_| rng.random_range(0..n)).collect();
    if sub.is_empty() {
        return p;
    }
    let images: Vec<Vec<F>> = sub
        .iter()
        .map(|&v| (0..p.dim_at(v)).map(|_| F::sample(rng)).collect())
        .collect();
    cokernel(&map_from_generators(&sub, &p, &images)).0
}

pub fn random_map(m: &Representation<F>, n: &Representation<F>, rng: &mut ChaCha8Rng) -> RepMorphism<F> {
    let basis = hom_space(m, n).unwrap();
    let terms: Vec<(F, &RepMorphism<F>)> = basis.iter().map(|f| (F::sample(rng), f)).collect();
    RepMorphism::combination(m, n, &terms)
}

/// A simple, a radical of a projective, or a random quotient, with equal odds.
pub fn random_test_module(alg: &Arc<Algebra<F>>, rng: &mut ChaCha8Rng) -> Representation<F> {
    let i = rng.random_range(0..alg.num_vertices());
    match rng.random_range(0..3) {
        0 => simple(alg, i),
        1 => radical(&projective(alg, i)).0,
        _ => random_module(alg, rng),
    }
}

/// `0 → K → X → X/K → 0` with `K` the image of a random map into `X`.
pub fn random_ses(alg: &Arc<Algebra<F>>, rng: &mut ChaCha8Rng) -> (RepMorphism<F>, RepMorphism<F>) {
    let x = random_module(alg, rng);
    let y = random_module(alg, rng);
    let f = random_map(&y, &x, rng);
    let (_, incl) = image(&f);
    let (_, proj) = cokernel(&incl);
    (incl, proj)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each of the six functors takes a random short exact sequence to one.
pub fn check_exactness(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_gluing(&mut rng, |g, rng| {
        let tag = FunctorTag::ALL[rng.random_range(0..6)];
        let (incl, proj) = random_ses(tag.domain(&g.spec), rng);
        let (ti, tp) = (tag.apply_map(&g.spec, &incl), tag.apply_map(&g.spec, &proj));
        let ok = ti.is_injective()
            && tp.is_surjective()
            && tp.after(&ti).is_zero()
            && ti.target().dim() == ti.source().dim() + tp.target().dim();
        if ok {
            Ok(())
        } else {
            Err(format!(
                "{} on {} ⊂ {}",
                tag.name(),
                incl.source().dim_vector_string(),
                incl.target().dim_vector_string()
            ))
        }
    })
}

/// `Hom(λM, N) ≅ Hom(M, μN)` and `Hom(μN, M) ≅ Hom(N, ρM)` on both sides.
pub fn check_adjunctions(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_gluing(&mut rng, |g, rng| {
        let side = if rng.random_bool(0.5) { Side::A } else { Side::B };
        let (lambda, mu, rho) = match side {
            Side::A => (FunctorTag::ILambda, FunctorTag::IMu, FunctorTag::IRho),
            Side::B => (FunctorTag::JLambda, FunctorTag::JMu, FunctorTag::JRho),
        };
        let m = random_module(g.spec.alg(side), rng);
        let n = random_module(&g.spec.glued, rng);
        let mn = mu.apply(&g.spec, &n);
        let left = (hom_dim(&lambda.apply(&g.spec, &m), &n), hom_dim(&m, &mn));
        let right = (hom_dim(&mn, &m), hom_dim(&n, &rho.apply(&g.spec, &m)));
        if left.0 == left.1 && right.0 == right.1 {
            Ok(())
        } else {
            Err(format!("{side:?}: {left:?} {right:?}"))
        }
    })
}

/// `0 → U(v)^{dim N_v} → i_λ i_μ N ⊕ j_λ j_μ N → N → 0`.
pub fn check_canonical_ses(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_gluing(&mut rng, |g, rng| {
        let lam = &g.spec.glued;
        let n = random_module(lam, rng);
        let ses = canonical_ses(&g.spec, &n).map_err(|e| e.to_string())?;
        let expected = projective_sum(lam, &vec![g.spec.v; n.dim_at(g.spec.v)]);
        let ok = ses.incl.is_injective()
            && ses.map.is_surjective()
            && ses.map.after(&ses.incl).is_zero()
            && ses.middle.dim() == ses.kernel.dim() + n.dim()
            && (ses.kernel.dim() == 0 && expected.dim() == 0 || is_isomorphic(&ses.kernel, &expected));
        if ok {
            Ok(())
        } else {
            Err(format!("N = {}", n.dim_vector_string()))
        }
    })
}

/// Maps between `i_λ X` and `j_λ Y` for Gorenstein projective `X`, `Y` all
/// factor through `add U(v)`.
pub fn check_factoring(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_gluing(&mut rng, |g, rng| {
        let x = &g.gproj_a[rng.random_range(0..g.gproj_a.len())];
        let y = &g.gproj_b[rng.random_range(0..g.gproj_b.len())];
        let (ix, jy) = (induce(&g.spec, Side::A, x), induce(&g.spec, Side::B, y));
        let u = projective(&g.spec.glued, g.spec.v);
        for (s, t) in [(&ix, &jy), (&jy, &ix)] {
            let (all, through) = factoring_dims(s, t, &u).map_err(|e| e.to_string())?;
            if all != through {
                return Err(format!(
                    "{} → {}: {all} vs {through}",
                    s.dim_vector_string(),
                    t.dim_vector_string()
                ));
            }
        }
        Ok(())
    })
}

/// For linearly independent `f_i: X → P(a)`, `Σ j_λ(g_i) i_λ(f_i) = 0`
/// forces every `g_i = 0`.
pub fn check_composite_injectivity(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_gluing(&mut rng, |g, rng| {
        let side = if rng.random_bool(0.5) { Side::A } else { Side::B };
        let (xs, ys) = match side {
            Side::A => (&g.gproj_a, &g.gproj_b),
            Side::B => (&g.gproj_b, &g.gproj_a),
        };
        let x = &xs[rng.random_range(0..xs.len())];
        let y = &ys[rng.random_range(0..ys.len())];
        let p = projective(g.spec.alg(side), g.spec.glue_vertex(side));
        let basis = hom_space(x, &p).map_err(|e| e.to_string())?;
        if basis.is_empty() {
            return Ok(());
        }
        let n = rng.random_range(1..=basis.len());
        let fs: Vec<RepMorphism<F>> = (0..n).map(|_| random_map(x, &p, rng)).collect();
        if span_dim(&fs) < n {
            return Ok(());
        }
        match composite_injectivity_check(&g.spec, side, &fs, y) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!(
                "{side:?}: X = {}, Y = {}, n = {n}",
                x.dim_vector_string(),
                y.dim_vector_string()
            )),
            Err(e) => Err(e.to_string()),
        }
    })
}

/// `Ext^k` from a projective resolution of the first argument agrees with
/// `Ext^k` from an injective coresolution of the second, for `k ≤ 6`.
pub fn check_ext_agreement(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_fixture(&mut rng, |a, rng| {
        let m = random_test_module(a, rng);
        let n = random_test_module(a, rng);
        for k in 1..=6 {
            let (p, i) = (ext_dim(&m, &n, k), ext_dim_coresolution(&m, &n, k));
            if p != i {
                return Err(format!(
                    "Ext^{k}({}, {}): {p} vs {i}",
                    m.dim_vector_string(),
                    n.dim_vector_string()
                ));
            }
        }
        Ok(())
    })
}

/// Two decompositions with different seeds give the same multiset of
/// isomorphism classes.
pub fn check_decompose_seeds(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    with_fixture(&mut rng, |a, rng| {
        let parts: Vec<_> = (0..rng.random_range(1..4))
            .map(|_| random_test_module(a, rng))
            .collect();
        let m = Representation::direct_sum(&parts);
        if m.is_zero() {
            return Ok(());
        }
        let d1 = decompose(&m, rng.random()).map_err(|e| e.to_string())?.classes();
        let d2 = decompose(&m, rng.random()).map_err(|e| e.to_string())?.classes();
        let total = |d: &[(Representation<F>, usize)]| d.iter().map(|(_, k)| k).sum::<usize>();
        if d1.len() != d2.len() || total(&d1) != total(&d2) {
            return Err(format!("{} classes vs {}", d1.len(), d2.len()));
        }
        for (x, k) in &d1 {
            let hit = d2.iter().find(|(y, _)| is_isomorphic(x, y));
            if hit.map(|(_, j)| j) != Some(k) {
                return Err(format!("class {} ×{k} not matched", x.dim_vector_string()));
            }
        }
        Ok(())
    })
}
