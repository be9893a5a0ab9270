use super::*;
use crate::modules::{cokernel, map_from_generators, projective_sum, radical, simple};
use crate::testutil::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_module(alg: &Arc<Algebra<F>>, rng: &mut ChaCha8Rng) -> Representation<F> {
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

#[test]
fn ext_small_cases() {
    let d = alg(DUAL_NUMBERS);
    let s = simple(&d, 0);
    assert_eq!(ext_dim(&s, &s, 1), 1);
    assert_eq!(ext_dim_coresolution(&s, &s, 1), 1);
    let p = projective(&d, 0);
    for k in 1..4 {
        assert_eq!(ext_dim(&p, &s, k), 0);
    }
    let a = alg(A2);
    assert_eq!(ext_dim(&simple(&a, 0), &simple(&a, 1), 1), 1);
    assert_eq!(ext_dim_coresolution(&simple(&a, 0), &simple(&a, 1), 1), 1);
    assert_eq!(ext_dim(&simple(&a, 1), &simple(&a, 0), 1), 0);
    assert_eq!(ext_dim(&simple(&a, 0), &simple(&a, 0), 0), 1);
}

#[test]
fn projective_dimensions() {
    let a = alg(A2);
    assert_eq!(proj_dim_bounded(&projective(&a, 0), 5), Bounded::Value(0));
    assert_eq!(proj_dim_bounded(&simple(&a, 0), 5), Bounded::Value(1));
    assert_eq!(inj_dim_bounded(&simple(&a, 1), 5), Bounded::Value(1));
    let d = alg(DUAL_NUMBERS);
    for b in [0, 3, 10] {
        assert_eq!(proj_dim_bounded(&simple(&d, 0), b), Bounded::Exceeds(b));
    }
}

#[test]
fn gorenstein_reports() {
    let l = alg(EX3_13);
    let r = gorenstein_report(&l, 20);
    assert!(r.is_gorenstein());
    assert!(r.consistent());
    assert_eq!(r.gd(), Bounded::Value(1));

    let lp = alg(EX3_13_PRIME);
    let r = gorenstein_report(&lp, 20);
    assert!(!r.is_gorenstein());

    let h = alg(H2);
    assert_eq!(gorenstein_report(&h, 10).gd(), Bounded::Value(0));
    let k = alg(K);
    assert_eq!(gorenstein_report(&k, 4).gd(), Bounded::Value(0));
}

#[test]
fn perpendicularity() {
    let l = alg(EX3_15);
    for i in 0..4 {
        assert!(in_perp(&projective(&l, i), 3));
    }
    assert!(in_perp(&simple(&l, 0), 10));
    assert!(!in_perp(&simple(&l, 3), 10));
}

#[test]
fn corner_gluing_is_not_gorenstein() {
    // the CM-free corner B has a nonzero singularity category
    let l = alg(EX3_15);
    let r = gorenstein_report(&l, 20);
    assert!(!r.is_gorenstein());
    assert_eq!(
        is_gproj(&simple(&l, 0), &r, None).unwrap_err(),
        HomologyError::NeedsAtlas
    );
    for m in [simple(&l, 0), radical(&projective(&l, 0)).0] {
        assert!(in_perp(&m, 10));
        assert!(in_perp(&crate::modules::syzygy(&m), 10));
    }
    assert!(!in_perp(&simple(&l, 1), 10));
}

#[test]
fn gproj_needs_atlas_when_not_gorenstein() {
    let lp = alg(EX3_13_PRIME);
    let r = gorenstein_report(&lp, 6);
    assert_eq!(
        is_gproj(&simple(&lp, 0), &r, None).unwrap_err(),
        HomologyError::NeedsAtlas
    );
}

#[test]
fn self_injective_everything_gproj() {
    let h = alg(H2);
    let r = gorenstein_report(&h, 10);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let m = random_module(&h, &mut rng);
        assert!(is_gproj(&m, &r, None).unwrap());
    }
}

#[test]
fn stable_homs() {
    let d = alg(DUAL_NUMBERS);
    let s = simple(&d, 0);
    let p = projective(&d, 0);
    assert_eq!(stable_hom(&s, &s).unwrap().dim, 1);
    assert_eq!(stable_hom(&s, &p).unwrap().dim, 0);
    assert_eq!(stable_hom(&p, &s).unwrap().dim, 0);
    let l = alg(EX3_15);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..5 {
        let m = random_module(&l, &mut rng);
        for j in 0..4 {
            assert_eq!(stable_hom(&m, &projective(&l, j)).unwrap().dim, 0);
        }
    }
}

#[test]
fn resolution_differentials_compose_to_zero() {
    let l = alg(EX4_10);
    let tr = resolve(&simple(&l, 2), 5);
    for k in 2..tr.length() {
        assert!(tr.differential(k - 1).after(&tr.differential(k)).is_zero());
    }
}

#[test]
fn ext_resolution_matches_coresolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for text in [EX3_15, EX4_10, EX3_13] {
        let l = alg(text);
        for _ in 0..3 {
            let m = random_module(&l, &mut rng);
            let n = random_module(&l, &mut rng);
            for k in 0..=4 {
                assert_eq!(ext_dim(&m, &n, k), ext_dim_coresolution(&m, &n, k), "k = {k}");
            }
        }
    }
}
