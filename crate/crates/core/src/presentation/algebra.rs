use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock, Weak};

use crate::field::Field;
use crate::linalg::Mat;

use super::poly::PathPoly;
use super::quiver::{Path, Quiver};
use super::PresentationError;

pub const DEFAULT_MAXDEG: usize = 12;

/// Uncompleted quiver-with-relations data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation<F> {
    pub quiver: Quiver,
    pub relations: Vec<PathPoly<F>>,
    pub maxdeg: usize,
}

impl<F: Field> Presentation<F> {
    pub fn new(quiver: Quiver) -> Self {
        Presentation {
            quiver,
            relations: Vec::new(),
            maxdeg: DEFAULT_MAXDEG,
        }
    }

    /// Adds a relation given as `(coefficient, arrow names in composition order)`.
    pub fn add_relation(&mut self, terms: &[(i64, &[&str])]) -> Result<(), PresentationError> {
        let mut poly = PathPoly::zero();
        for (c, names) in terms {
            let idx = names
                .iter()
                .map(|n| {
                    self.quiver
                        .arrow_index(n)
                        .ok_or_else(|| PresentationError::UnknownArrow(n.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let word = names.join("*");
            if idx.len() < 2 {
                return Err(PresentationError::ShortTerm(word));
            }
            let p = Path::from_arrows(&self.quiver, idx).ok_or(PresentationError::NotComposable(word))?;
            poly.add_term(p, F::from_i64(*c));
        }
        self.push_relation(poly)
    }

    pub fn push_relation(&mut self, poly: PathPoly<F>) -> Result<(), PresentationError> {
        validate_relation(&self.quiver, &poly)?;
        self.relations.push(poly);
        Ok(())
    }

    pub fn with_maxdeg(mut self, maxdeg: usize) -> Self {
        self.maxdeg = maxdeg;
        self
    }

    pub fn complete(self) -> Result<Arc<Algebra<F>>, PresentationError> {
        Algebra::complete(self).map(Arc::new)
    }

    pub fn opposite(&self) -> Self {
        Presentation {
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(|r| r.map_paths(|p| p.reversed())).collect(),
            maxdeg: self.maxdeg,
        }
    }
}

pub(crate) fn validate_relation<F: Field>(q: &Quiver, poly: &PathPoly<F>) -> Result<(), PresentationError> {
    if poly.is_zero() {
        return Err(PresentationError::ZeroRelation);
    }
    for (p, _) in poly.terms() {
        if p.len() < 2 {
            return Err(PresentationError::ShortTerm(p.display(q).to_string()));
        }
    }
    if poly.endpoints().is_none() {
        return Err(PresentationError::NonParallel(poly.display(q).to_string()));
    }
    Ok(())
}

#[derive(Debug, Clone)]
struct Rule<F> {
    lead: Vec<usize>,
    /// `lead ≡ -tail`
    tail: PathPoly<F>,
}

/// A completed bound quiver algebra `KQ/I` with its normal-word basis.
#[derive(Debug)]
pub struct Algebra<F> {
    presentation: Presentation<F>,
    rules: Vec<Rule<F>>,
    lead_index: HashMap<Vec<usize>, usize>,
    max_lead: usize,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    by_source: Vec<Vec<usize>>,
    /// `left[α][b]`: normal form of `α · basis[b]`.
    left: Vec<Vec<Vec<(usize, F)>>>,
    fingerprint: u64,
    op: OnceLock<Arc<Algebra<F>>>,
    origin: Weak<Algebra<F>>,
}

impl<F: Field> Algebra<F> {
    fn complete(pres: Presentation<F>) -> Result<Self, PresentationError> {
        let q = &pres.quiver;
        for r in &pres.relations {
            validate_relation(q, r)?;
        }
        let maxdeg = pres.maxdeg.max(2);
        let rules = buchberger(q, &pres.relations, 2 * maxdeg);
        let mut lead_index = HashMap::new();
        let mut max_lead = 0;
        for (i, r) in rules.iter().enumerate() {
            lead_index.insert(r.lead.clone(), i);
            max_lead = max_lead.max(r.lead.len());
        }
        let mut alg = Algebra {
            presentation: pres.clone(),
            rules,
            lead_index,
            max_lead,
            basis: Vec::new(),
            basis_index: HashMap::new(),
            by_source: Vec::new(),
            left: Vec::new(),
            fingerprint: 0,
            op: OnceLock::new(),
            origin: Weak::new(),
        };
        alg.enumerate_basis(maxdeg)?;
        alg.build_left_action();
        alg.certify_radical_power(maxdeg)?;
        let p = F::characteristic();
        if alg.dim() as u64 >= p {
            return Err(PresentationError::FieldTooSmall { dim: alg.dim(), p });
        }
        alg.fingerprint = fnv1a(super::emit::emit_qalg(&alg.presentation).as_bytes());
        Ok(alg)
    }

    fn enumerate_basis(&mut self, maxdeg: usize) -> Result<(), PresentationError> {
        let q = &self.presentation.quiver;
        let mut out = Vec::new();
        let mut stack: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
        while let Some(p) = stack.pop() {
            if p.len() >= maxdeg {
                return Err(PresentationError::NotCertified { maxdeg });
            }
            for a in q.arrows_from(p.target) {
                let mut w = Vec::with_capacity(p.len() + 1);
                w.push(a);
                w.extend_from_slice(&p.arrows);
                // only prefixes can be new leads
                let reducible = (2..=w.len().min(self.max_lead)).any(|l| self.lead_index.contains_key(&w[..l]));
                if !reducible {
                    stack.push(Path {
                        source: p.source,
                        target: q.arrow(a).target,
                        arrows: w,
                    });
                }
            }
            out.push(p);
        }
        out.sort();
        self.basis_index = out.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        self.by_source = vec![Vec::new(); q.num_vertices()];
        for (i, p) in out.iter().enumerate() {
            self.by_source[p.source].push(i);
        }
        self.basis = out;
        Ok(())
    }

    fn build_left_action(&mut self) {
        let q = self.presentation.quiver.clone();
        let mut left = Vec::with_capacity(q.num_arrows());
        for a in 0..q.num_arrows() {
            let row: Vec<Vec<(usize, F)>> = self
                .basis
                .iter()
                .map(|b| {
                    if b.target != q.arrow(a).source {
                        return Vec::new();
                    }
                    let p = Path::arrow(&q, a).compose(b).expect("composable");
                    self.coords(&self.reduce(PathPoly::monomial(p, F::one())))
                })
                .collect();
            left.push(row);
        }
        self.left = left;
    }

    /// Checks that every path of length `maxdeg` lies in the ideal.
    fn certify_radical_power(&self, maxdeg: usize) -> Result<(), PresentationError> {
        let q = &self.presentation.quiver;
        let n = self.dim();
        let mut span: Vec<Vec<F>> = (0..q.num_arrows())
            .map(|a| {
                let mut v = vec![F::zero(); n];
                v[self.basis_index[&Path::arrow(q, a)]] = F::one();
                v
            })
            .collect();
        for _ in 1..maxdeg {
            if span.is_empty() {
                return Ok(());
            }
            let mut next = Vec::new();
            for a in 0..q.num_arrows() {
                for v in &span {
                    next.push(self.left_mul_vec(a, v));
                }
            }
            let m = Mat::from_cols(&next, n).col_basis();
            span = (0..m.cols()).map(|j| m.col(j)).collect();
        }
        if span.is_empty() {
            Ok(())
        } else {
            Err(PresentationError::NotCertified { maxdeg })
        }
    }

    pub(crate) fn left_mul_vec(&self, a: usize, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (b, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(k, d) in &self.left[a][b] {
                out[k] += c * d;
            }
        }
        out
    }

    fn find_lead(&self, w: &[usize]) -> Option<(usize, usize, usize)> {
        for start in 0..w.len() {
            for l in 2..=self.max_lead.min(w.len() - start) {
                if let Some(&r) = self.lead_index.get(&w[start..start + l]) {
                    return Some((r, start, l));
                }
            }
        }
        None
    }

    /// Normal form of a polynomial.
    pub fn reduce(&self, mut p: PathPoly<F>) -> PathPoly<F> {
        let q = &self.presentation.quiver;
        let mut out = PathPoly::zero();
        while let Some((w, c)) = p.pop_lead() {
            match self.find_lead(&w.arrows) {
                None => out.add_term(w, c),
                Some((r, start, l)) => {
                    let x = &w.arrows[..start];
                    let z = &w.arrows[start + l..];
                    p.add_assign_scaled(&self.rules[r].tail.wrap(q, x, z), -c);
                }
            }
        }
        out
    }

    /// Coordinates of a normal-form polynomial in the basis.
    pub fn coords(&self, nf: &PathPoly<F>) -> Vec<(usize, F)> {
        let mut v: Vec<(usize, F)> = nf.terms().map(|(p, c)| (self.basis_index[p], c)).collect();
        v.sort_by_key(|x| x.0);
        v
    }

    /// Basis coordinates of an arbitrary path.
    pub fn path_coords(&self, p: &Path) -> Vec<(usize, F)> {
        if let Some(&i) = self.basis_index.get(p) {
            return vec![(i, F::one())];
        }
        self.coords(&self.reduce(PathPoly::monomial(p.clone(), F::one())))
    }

    pub fn is_zero_in(&self, poly: &PathPoly<F>) -> bool {
        self.reduce(poly.clone()).is_zero()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn relations(&self) -> &[PathPoly<F>] {
        &self.presentation.relations
    }

    pub fn maxdeg(&self) -> usize {
        self.presentation.maxdeg
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver().num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver().num_arrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Basis indices of the words starting at `v`, in basis order.
    pub fn basis_from(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    /// `left_action(α, b)`: coordinates of `α · basis[b]`.
    pub fn left_action(&self, a: usize, b: usize) -> &[(usize, F)] {
        &self.left[a][b]
    }

    /// Number of leading words in the completed rewriting system.
    pub fn num_rules(&self) -> usize {
        self.rules.len()
    }

    pub fn rule_leads(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.rules.iter().map(|r| r.lead.as_slice())
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.presentation == other.presentation
    }

    /// Opposite algebra. Cached, and `a.opposite().opposite()` is `a` itself
    /// as long as `a` is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(o) = self.origin.upgrade() {
            return o;
        }
        self.op
            .get_or_init(|| {
                let mut op =
                    Algebra::complete(self.presentation.opposite()).expect("opposite of a completed algebra completes");
                op.origin = Arc::downgrade(self);
                Arc::new(op)
            })
            .clone()
    }

    /// Whether `e_v (rad) e_v` vanishes: no nontrivial basis word from `v` to `v`.
    pub fn no_return_paths(&self, v: usize) -> bool {
        !self
            .basis
            .iter()
            .any(|p| !p.is_trivial() && p.source == v && p.target == v)
    }

    /// Nonzero nontrivial return words at `v`.
    pub fn return_paths(&self, v: usize) -> Vec<&Path> {
        self.basis
            .iter()
            .filter(|p| !p.is_trivial() && p.source == v && p.target == v)
            .collect()
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn contains(hay: &[usize], needle: &[usize]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Two-sided overlap completion. Overlap words longer than `limit` are skipped.
fn buchberger<F: Field>(q: &Quiver, gens: &[PathPoly<F>], limit: usize) -> Vec<Rule<F>> {
    let mut rules: Vec<Option<Rule<F>>> = Vec::new();
    let mut queue: VecDeque<PathPoly<F>> = gens.iter().cloned().collect();

    let reduce_by = |rules: &[Option<Rule<F>>], mut p: PathPoly<F>| -> PathPoly<F> {
        let mut out = PathPoly::zero();
        'outer: while let Some((w, c)) = p.pop_lead() {
            for r in rules.iter().flatten() {
                let l = r.lead.len();
                if l > w.len() {
                    continue;
                }
                if let Some(start) = (0..=w.len() - l).find(|&s| w.arrows[s..s + l] == r.lead[..]) {
                    let x = &w.arrows[..start];
                    let z = &w.arrows[start + l..];
                    p.add_assign_scaled(&r.tail.wrap(q, x, z), -c);
                    continue 'outer;
                }
            }
            out.add_term(w, c);
        }
        out
    };

    while let Some(p) = queue.pop_front() {
        let r = reduce_by(&rules, p);
        let Some((lead, _)) = r.lead() else {
            continue;
        };
        let lead = lead.arrows.clone();
        let monic = r.monic();
        let mut tail = monic.clone();
        tail.pop_lead();
        let new = Rule {
            lead: lead.clone(),
            tail,
        };
        // rules whose lead contains the new lead go back to the queue
        for slot in rules.iter_mut() {
            if slot.as_ref().is_some_and(|old| contains(&old.lead, &lead)) {
                let old = slot.take().unwrap();
                let mut poly = old.tail.clone();
                let lp = Path::from_arrows(q, old.lead).unwrap();
                poly.add_term(lp, F::one());
                queue.push_back(poly);
            }
        }
        rules.push(Some(new));
        let ni = rules.len() - 1;
        for i in 0..rules.len() {
            let Some(other) = rules[i].as_ref() else {
                continue;
            };
            let nr = rules[ni].as_ref().unwrap();
            for (f, g) in [(nr, other), (other, nr)] {
                for s in overlaps(q, f, g, limit) {
                    queue.push_back(s);
                }
                if i == ni {
                    break;
                }
            }
        }
    }
    let mut out: Vec<Rule<F>> = rules.into_iter().flatten().collect();
    // fully reduce tails so that normal forms need fewer steps
    for i in 0..out.len() {
        let t = reduce_by(&out.iter().cloned().map(Some).collect::<Vec<_>>(), out[i].tail.clone());
        out[i].tail = t;
    }
    out.sort_by(|a, b| a.lead.len().cmp(&b.lead.len()).then(a.lead.cmp(&b.lead)));
    out
}

/// S-polynomials from suffixes of `f.lead` that are prefixes of `g.lead`.
fn overlaps<F: Field>(q: &Quiver, f: &Rule<F>, g: &Rule<F>, limit: usize) -> Vec<PathPoly<F>> {
    let (u, v) = (&f.lead, &g.lead);
    let mut out = Vec::new();
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] != v[..k] {
            continue;
        }
        if u.len() + v.len() - k > limit {
            continue;
        }
        let x = &u[..u.len() - k];
        let z = &v[k..];
        let full = |r: &Rule<F>| {
            let mut p = r.tail.clone();
            p.add_term(Path::from_arrows(q, r.lead.clone()).unwrap(), F::one());
            p
        };
        let mut s = full(f).wrap(q, &[], z);
        s.add_assign_scaled(&full(g).wrap(q, x, &[]), -F::one());
        if !s.is_zero() {
            out.push(s);
        }
    }
    out
}
