//! Free graded-commutative algebras ∧V over ℚ.
//!
//! A [`Universe`] fixes the generators (sorted by degree, then id) and an
//! optional truncation degree above which products vanish. [`Monomial`]s are
//! sorted multisets of generator indices; an [`Element`] is a finite rational
//! combination of monomials; a [`Derivation`] is a degree +1 map on generators
//! extended by the graded Leibniz rule.

mod derivation;
mod element;
mod monomial;
pub mod span;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

pub use derivation::{Cdga, Derivation};
pub use element::Element;
pub use monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements belong to different generator universes")]
    MixedUniverse,
    #[error("duplicate generator id `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has degree 0; degrees must be positive")]
    ZeroDegree(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("derivation has no image for generator `{0}`")]
    MissingImage(String),
    #[error("d({generator}) must have degree {expected}, found a term of degree {found}")]
    DegreeMismatch {
        generator: String,
        expected: u32,
        found: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub degree: u32,
    /// Filtration step annotation carried over from a model file, if any.
    pub declared_step: Option<u32>,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: u32) -> Self {
        Self {
            id: id.into(),
            degree,
            declared_step: None,
        }
    }

    pub fn with_step(mut self, step: u32) -> Self {
        self.declared_step = Some(step);
        self
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    gens: Vec<Generator>,
    index: BTreeMap<String, usize>,
    truncation: Option<u32>,
}

impl Universe {
    /// Sorts the generators by `(degree, id)`; products of degree above
    /// `truncation` are dropped.
    pub fn new(
        mut gens: Vec<Generator>,
        truncation: Option<u32>,
    ) -> Result<Arc<Self>, AlgebraError> {
        gens.sort_by(|a, b| (a.degree, &a.id).cmp(&(b.degree, &b.id)));
        let mut index = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegree(g.id.clone()));
            }
            if index.insert(g.id.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.id.clone()));
            }
        }
        Ok(Arc::new(Self {
            gens,
            index,
            truncation,
        }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.gens[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].is_odd()
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Indices of generators of degree `n`, in universe order.
    pub fn indices_of_degree(&self, n: u32) -> Vec<usize> {
        (0..self.gens.len())
            .filter(|&i| self.gens[i].degree == n)
            .collect()
    }

    /// Every nonzero monomial of total degree `k` (the unit when `k == 0`).
    pub fn monomials_of_degree(&self, k: u32) -> Vec<Monomial> {
        self.monomials_of_degree_where(k, |_| true)
    }

    /// Monomials of degree `k` built only from generators accepted by `keep`.
    pub fn monomials_of_degree_where(&self, k: u32, keep: impl Fn(usize) -> bool) -> Vec<Monomial> {
        if self.truncation.is_some_and(|t| k > t) {
            return Vec::new();
        }
        let allowed: Vec<usize> = (0..self.gens.len()).filter(|&i| keep(i)).collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(&allowed, 0, k, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate(
        &self,
        allowed: &[usize],
        start: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_sorted(current.clone()));
            return;
        }
        for pos in start..allowed.len() {
            let g = allowed[pos];
            let deg = self.degree(g);
            if deg > remaining {
                continue;
            }
            current.push(g as u32);
            // an odd generator may appear at most once
            let next = if self.is_odd(g) { pos + 1 } else { pos };
            self.enumerate(allowed, next, remaining - deg, current, out);
            current.pop();
        }
    }
}
