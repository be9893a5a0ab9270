use std::fmt;

use crate::field::Field;
use crate::homology::{position_iso, Bounded, GorensteinReport};
use crate::modules::{hom_space, is_isomorphic, is_projective, projective, span_dim, RepMorphism, Representation};
use crate::presentation::{GluingSpec, Side};

use super::{induce, induce_map, GluingError};

/// Outcome of a theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Verdict {
    pub fn non_glued() -> Self {
        Verdict::Skipped("non-glued ideal".into())
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn from_witness(w: Option<String>) -> Self {
        match w {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail(w),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(w) => write!(f, "fail: {w}"),
            Verdict::Skipped(r) => write!(f, "skipped: {r}"),
        }
    }
}

/// Gorenstein transfer: `Λ` is Gorenstein iff both components are, and then
/// `max{gd A, gd B} ≤ gd Λ ≤ max{gd A, gd B, 1}`.
pub fn gorenstein_transfer_check<F: Field>(
    spec: &GluingSpec<F>,
    ra: &GorensteinReport,
    rb: &GorensteinReport,
    rl: &GorensteinReport,
) -> Verdict {
    if !spec.glued_ideal {
        return Verdict::non_glued();
    }
    let parts = ra.is_gorenstein() && rb.is_gorenstein();
    if parts != rl.is_gorenstein() {
        return Verdict::Fail(format!(
            "components gorenstein = {parts}, glued gorenstein = {}",
            rl.is_gorenstein()
        ));
    }
    if let (Bounded::Value(a), Bounded::Value(b), Bounded::Value(l)) = (ra.gd(), rb.gd(), rl.gd()) {
        let lo = a.max(b);
        if l < lo || l > lo.max(1) {
            return Verdict::Fail(format!("gd A = {a}, gd B = {b}, gd = {l}"));
        }
    }
    Verdict::Pass
}

/// Where an indecomposable Gorenstein projective of `Λ` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Origin {
    pub side: Side,
    /// Index into that side's Gproj list.
    pub index: usize,
}

/// Matching of `Ind Gproj Λ` against `i_λ(Ind Gproj A) ⊎ j_λ(Ind Gproj B)`.
#[derive(Debug, Clone)]
pub struct Classification {
    /// For each `Λ` member, the component modules it is the image of.
    pub origins: Vec<Vec<Origin>>,
    pub mismatches: Vec<String>,
}

impl Classification {
    pub fn verdict(&self) -> Verdict {
        Verdict::from_witness(self.mismatches.first().cloned())
    }
}

/// Bijection with the images of the component lists, with `U(v) = i_λ P(a) = j_λ Q(b)` the only
/// allowed coincidence.
pub fn classify_gproj_via_gluing<F: Field>(
    spec: &GluingSpec<F>,
    gproj_a: &[Representation<F>],
    gproj_b: &[Representation<F>],
    gproj_l: &[Representation<F>],
) -> Result<Classification, GluingError> {
    if !spec.glued_ideal {
        return Err(GluingError::NonGluedIdeal);
    }
    let uv = projective(&spec.glued, spec.v);
    let mut origins = vec![Vec::new(); gproj_l.len()];
    let mut mismatches = Vec::new();
    for (side, list) in [(Side::A, gproj_a), (Side::B, gproj_b)] {
        for (index, x) in list.iter().enumerate() {
            let img = induce(spec, side, x);
            match position_iso(gproj_l, &img) {
                Some(k) => origins[k].push(Origin { side, index }),
                None => mismatches.push(format!(
                    "image of {side:?}[{index}] {} is not in the glued list",
                    img.dim_vector_string()
                )),
            }
        }
    }
    for (k, o) in origins.iter().enumerate() {
        let x = &gproj_l[k];
        let ok = match o.len() {
            1 => true,
            2 => o[0].side != o[1].side && is_isomorphic(x, &uv),
            _ => false,
        };
        if !ok {
            mismatches.push(format!("{} is hit {} times", x.dim_vector_string(), o.len()));
        }
    }
    Ok(Classification { origins, mismatches })
}

/// Every map between `i_λ X` and `j_λ Y` factors through `add U(v)`, in both
/// directions.
pub fn factoring_check<F: Field>(
    spec: &GluingSpec<F>,
    gproj_a: &[Representation<F>],
    gproj_b: &[Representation<F>],
) -> Result<Verdict, GluingError> {
    if !spec.glued_ideal {
        return Ok(Verdict::non_glued());
    }
    let uv = projective(&spec.glued, spec.v);
    let ia: Vec<_> = gproj_a.iter().map(|x| induce(spec, Side::A, x)).collect();
    let jb: Vec<_> = gproj_b.iter().map(|y| induce(spec, Side::B, y)).collect();
    for x in &ia {
        for y in &jb {
            for (s, t) in [(x, y), (y, x)] {
                let (all, through) = factoring_dims(s, t, &uv)?;
                if all != through {
                    return Ok(Verdict::Fail(format!(
                        "Hom({}, {}) has dim {all}, maps through U(v) span {through}",
                        s.dim_vector_string(),
                        t.dim_vector_string()
                    )));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `dim Hom(s, t)` and the dimension of its subspace of maps through `add u`.
pub fn factoring_dims<F: Field>(
    s: &Representation<F>,
    t: &Representation<F>,
    u: &Representation<F>,
) -> Result<(usize, usize), GluingError> {
    let all = hom_space(s, t)?.len();
    let into = hom_space(s, u)?;
    let out = hom_space(u, t)?;
    let comps: Vec<RepMorphism<F>> = out.iter().flat_map(|g| into.iter().map(move |f| g.after(f))).collect();
    Ok((all, span_dim(&comps)))
}

/// `Λ` is CM-free iff both components are.
pub fn cm_free_check<F: Field>(
    spec: &GluingSpec<F>,
    gproj_a: &[Representation<F>],
    gproj_b: &[Representation<F>],
    gproj_l: &[Representation<F>],
) -> Verdict {
    if !spec.glued_ideal {
        return Verdict::non_glued();
    }
    let free = |l: &[Representation<F>]| l.iter().all(is_projective);
    let (a, b, l) = (free(gproj_a), free(gproj_b), free(gproj_l));
    if l == (a && b) {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("CM-free: A {a}, B {b}, glued {l}"))
    }
}

/// For linearly independent `f_i: X → P(a)` over `side`, the map
/// `(g_i) ↦ Σ j_λ(g_i) ∘ i_λ(f_i)` on `Hom(Q(b), Y)^n` is injective.
pub fn composite_injectivity_check<F: Field>(
    spec: &GluingSpec<F>,
    side: Side,
    fs: &[RepMorphism<F>],
    y: &Representation<F>,
) -> Result<bool, GluingError> {
    if !spec.glued_ideal {
        return Err(GluingError::NonGluedIdeal);
    }
    let other = side.other();
    let q = projective(spec.alg(other), spec.glue_vertex(other));
    let gs = hom_space(&q, y)?;
    if gs.is_empty() || fs.is_empty() {
        return Ok(true);
    }
    let jg: Vec<_> = gs.iter().map(|g| induce_map(spec, other, g)).collect();
    let mut comps = Vec::with_capacity(fs.len() * gs.len());
    for f in fs {
        let i_f = induce_map(spec, side, f);
        for g in &jg {
            // both sides of the junction are U(v) on the same basis
            comps.push(RepMorphism::new_unchecked(
                i_f.source().clone(),
                g.target().clone(),
                g.comps().iter().zip(i_f.comps()).map(|(a, b)| a.mul(b)).collect(),
            ));
        }
    }
    Ok(span_dim(&comps) == fs.len() * gs.len())
}
