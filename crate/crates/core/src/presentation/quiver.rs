use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

pub(crate) fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<S: AsRef<str>>(names: &[S]) -> Result<Self, PresentationError> {
        let mut q = Self::new();
        for n in names {
            q.add_vertex(n.as_ref())?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, PresentationError> {
        if !valid_name(name) {
            return Err(PresentationError::BadName(name.to_string()));
        }
        if self.vertex_index(name).is_some() {
            return Err(PresentationError::Duplicate(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize, PresentationError> {
        if !valid_name(name) || name.chars().all(|c| c.is_ascii_digit()) {
            return Err(PresentationError::BadName(name.to_string()));
        }
        if self.arrow_index(name).is_some() || self.vertex_index(name).is_some() {
            return Err(PresentationError::Duplicate(name.to_string()));
        }
        let s = self
            .vertex_index(source)
            .ok_or_else(|| PresentationError::UnknownVertex(source.to_string()))?;
        let t = self
            .vertex_index(target)
            .ok_or_else(|| PresentationError::UnknownVertex(target.to_string()))?;
        self.arrows.push(Arrow {
            name: name.to_string(),
            source: s,
            target: t,
        });
        Ok(self.arrows.len() - 1)
    }

    pub(crate) fn push_arrow_raw(&mut self, name: String, source: usize, target: usize) {
        self.arrows.push(Arrow { name, source, target });
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed, indices preserved.
    pub fn opposite(&self) -> Self {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].target == v)
    }

    /// Every vertex/arrow bijection onto `other` that respects sources and
    /// targets, up to `limit` of them. Names are ignored.
    pub fn isomorphisms(&self, other: &Quiver, limit: usize) -> Vec<QuiverIso> {
        let mut out = Vec::new();
        if self.num_vertices() != other.num_vertices() || self.num_arrows() != other.num_arrows() {
            return out;
        }
        let n = self.num_vertices();
        let count = |q: &Quiver| {
            let mut m: HashMap<(usize, usize), usize> = HashMap::new();
            for a in &q.arrows {
                *m.entry((a.source, a.target)).or_default() += 1;
            }
            m
        };
        let (ca, cb) = (count(self), count(other));
        let degree = |q: &Quiver, v: usize| {
            (
                q.arrows_from(v).count(),
                q.arrows_into(v).count(),
                q.arrows.iter().filter(|a| a.source == v && a.target == v).count(),
            )
        };
        let mut vmap = vec![usize::MAX; n];
        let mut used = vec![false; n];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            k: usize,
            a: &Quiver,
            b: &Quiver,
            ca: &HashMap<(usize, usize), usize>,
            cb: &HashMap<(usize, usize), usize>,
            vmap: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
            limit: usize,
            degree: &dyn Fn(&Quiver, usize) -> (usize, usize, usize),
        ) {
            if out.len() >= limit {
                return;
            }
            if k == vmap.len() {
                out.push(vmap.clone());
                return;
            }
            for w in 0..vmap.len() {
                if used[w] || degree(a, k) != degree(b, w) {
                    continue;
                }
                vmap[k] = w;
                let ok = (0..=k).all(|j| {
                    let f = |x: usize, y: usize| ca.get(&(x, y)).copied().unwrap_or(0);
                    let g = |x: usize, y: usize| cb.get(&(x, y)).copied().unwrap_or(0);
                    f(k, j) == g(w, vmap[j]) && f(j, k) == g(vmap[j], w)
                });
                if ok {
                    used[w] = true;
                    rec(k + 1, a, b, ca, cb, vmap, used, out, limit, degree);
                    used[w] = false;
                }
            }
            vmap[k] = usize::MAX;
        }
        let mut vmaps = Vec::new();
        rec(
            0, self, other, &ca, &cb, &mut vmap, &mut used, &mut vmaps, limit, &degree,
        );
        for vm in vmaps {
            // parallel arrows are matched in declaration order
            let mut amap = vec![usize::MAX; self.num_arrows()];
            let mut taken = vec![false; other.num_arrows()];
            for (i, a) in self.arrows.iter().enumerate() {
                let j = (0..other.num_arrows())
                    .find(|&j| {
                        !taken[j] && other.arrows[j].source == vm[a.source] && other.arrows[j].target == vm[a.target]
                    })
                    .expect("arrow counts agree");
                taken[j] = true;
                amap[i] = j;
            }
            out.push(QuiverIso {
                vertices: vm,
                arrows: amap,
            });
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverIso {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
}

/// A path in composition order: `arrows[0]` is applied last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let ar = q.arrow(a);
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// Builds a nontrivial path, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        let last = *arrows.last()?;
        for w in arrows.windows(2) {
            if q.arrow(w[0]).source != q.arrow(w[1]).target {
                return None;
            }
        }
        Some(Path {
            source: q.arrow(last).source,
            target: q.arrow(first).target,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, q }
    }
}

impl Ord for Path {
    /// Degree-lexicographic, arrows compared by declaration index.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    q: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e_{}", self.q.vertex_name(self.path.source));
        }
        for (i, &a) in self.path.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.q.arrow(a).name)?;
        }
        Ok(())
    }
}
