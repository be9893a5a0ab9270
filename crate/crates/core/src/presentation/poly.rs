use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::field::Field;

use super::quiver::{Path, Quiver};

/// A linear combination of parallel paths, kept sorted by the path order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathPoly<F> {
    terms: BTreeMap<Path, F>,
}

impl<F: Field> Default for PathPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> PathPoly<F> {
    pub fn zero() -> Self {
        PathPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(p: Path, c: F) -> Self {
        let mut s = Self::zero();
        s.add_term(p, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (F, Path)>) -> Self {
        let mut s = Self::zero();
        for (c, p) in terms {
            s.add_term(p, c);
        }
        s
    }

    pub fn add_term(&mut self, p: Path, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: F) {
        for (p, &v) in &other.terms {
            self.add_term(p.clone(), v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest path with its coefficient.
    pub fn lead(&self) -> Option<(&Path, F)> {
        self.terms.iter().next_back().map(|(p, &c)| (p, c))
    }

    pub(crate) fn pop_lead(&mut self) -> Option<(Path, F)> {
        self.terms.pop_last()
    }

    /// Terms in descending path order.
    pub fn terms(&self) -> impl Iterator<Item = (&Path, F)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn scale(&self, c: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, &v)| (v * c, p.clone())))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(c.try_inv().expect("nonzero lead")),
        }
    }

    /// `left ∘ self ∘ right` on every term; the words must compose.
    pub fn wrap(&self, q: &Quiver, left: &[usize], right: &[usize]) -> Self {
        let mut out = Self::zero();
        for (p, &c) in &self.terms {
            let mut w = left.to_vec();
            w.extend_from_slice(&p.arrows);
            w.extend_from_slice(right);
            let path = Path::from_arrows(q, w).expect("wrapped word composes");
            out.add_term(path, c);
        }
        out
    }

    /// Common endpoints of all terms, if the polynomial is parallel.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let st = (first.source, first.target);
        it.all(|p| (p.source, p.target) == st).then_some(st)
    }

    pub fn map_paths(&self, mut f: impl FnMut(&Path) -> Path) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, &c)| (c, f(p))))
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, q }
    }
}

pub struct PolyDisplay<'a, F> {
    poly: &'a PathPoly<F>,
    q: &'a Quiver,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.poly.terms().enumerate() {
            let s = c.signed();
            let mag = s.unsigned_abs();
            match (i, s < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", p.display(self.q))?;
        }
        Ok(())
    }
}
