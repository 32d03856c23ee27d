//! Free graded Lie algebras, computed inside their tensor algebras.
//!
//! A Lie element is stored as its expansion in the free associative algebra
//! on the same generators, where `[x, y] = xy − (−1)^{|x||y|} yx`. The
//! embedding is injective over ℚ, so an element is zero exactly when its
//! expansion is. Degrees are Samelson degrees (Whitehead degree minus one).

mod torus;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{format_rational, Rational};

pub use torus::{
    retraction, scaling_weight, verify_jacobi_lemmas, verify_nonvanishing, LemmaCheck, LemmaReport,
    NonvanishingReport, NonvanishingRow, TorusAction, ZetaTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("ζ_{{{k},{j}}} is undefined for c = {c}: need k ≥ 2 and 1 ≤ j ≤ c")]
    OutOfRange { k: u32, j: u32, c: u32 },
    #[error("element is not homogeneous in scale weight: {0:?}")]
    Inhomogeneous(Vec<(String, u32)>),
    #[error("elements use different generator alphabets")]
    MixedAlphabet,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieGenerator {
    pub id: String,
    /// Whitehead degree minus one.
    pub samelson_degree: u32,
    /// Power of `L` carried by the scaled representative.
    pub scale_weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<LieGenerator>,
}

impl Alphabet {
    pub fn new(gens: Vec<LieGenerator>) -> Arc<Self> {
        Arc::new(Self { gens })
    }

    pub fn generators(&self) -> &[LieGenerator] {
        &self.gens
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.id == id)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn word_degree(&self, w: &[u16]) -> u32 {
        w.iter()
            .map(|&i| self.gens[i as usize].samelson_degree)
            .sum()
    }

    pub fn word_weight(&self, w: &[u16]) -> u32 {
        w.iter().map(|&i| self.gens[i as usize].scale_weight).sum()
    }

    pub fn render_word(&self, w: &[u16]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&i| self.gens[i as usize].id.as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

/// An element of the free Lie algebra, by tensor expansion; `label` keeps the
/// bracket expression it was built from.
#[derive(Clone)]
pub struct LieElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Vec<u16>, Rational>,
    label: Option<Arc<str>>,
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LieElement {}

fn add_into(map: &mut BTreeMap<Vec<u16>, Rational>, w: Vec<u16>, q: Rational) {
    if q.is_zero() {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(q);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += q;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LieElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
            label: Some("0".into()),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, i: usize) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::from([(vec![i as u16], Rational::one())]),
            label: Some(alphabet.gens[i].id.as_str().into()),
        }
    }

    pub fn var(alphabet: &Arc<Alphabet>, id: &str) -> Option<Self> {
        alphabet.index_of(id).map(|i| Self::generator(alphabet, i))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.terms.iter().map(|(w, q)| (w.as_slice(), q))
    }

    pub fn coefficient(&self, word: &[&str]) -> Rational {
        let w: Option<Vec<u16>> = word
            .iter()
            .map(|id| self.alphabet.index_of(id).map(|i| i as u16))
            .collect();
        w.and_then(|w| self.terms.get(&w).cloned())
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// The bracket expression this element was built from, if tracked.
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into().into());
        self
    }

    /// Samelson degree, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|w| self.alphabet.word_degree(w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            add_into(&mut out.terms, w.clone(), c * q);
        }
        out.label = self
            .label
            .as_ref()
            .map(|l| format!("{}·{l}", format_rational(q)).into());
        out
    }

    /// Linear map sending generator `i` to `images[i]`, extended
    /// multiplicatively on words.
    pub fn substitute(&self, target: &Arc<Alphabet>, images: &[LieElement]) -> LieElement {
        let mut out = LieElement::zero(target);
        for (w, q) in &self.terms {
            let mut prod: BTreeMap<Vec<u16>, Rational> = BTreeMap::from([(Vec::new(), q.clone())]);
            for &g in w {
                let mut next = BTreeMap::new();
                for (a, qa) in &prod {
                    for (b, qb) in &images[g as usize].terms {
                        let mut ab = a.clone();
                        ab.extend_from_slice(b);
                        add_into(&mut next, ab, qa * qb);
                    }
                }
                prod = next;
            }
            for (w, q) in prod {
                add_into(&mut out.terms, w, q);
            }
        }
        out.label = None;
        out
    }
}

/// `[x, y] = xy − (−1)^{|x||y|} yx`, word by word.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    assert!(
        Arc::ptr_eq(&x.alphabet, &y.alphabet) || x.alphabet == y.alphabet,
        "{}",
        LieError::MixedAlphabet
    );
    let a = &x.alphabet;
    let mut terms = BTreeMap::new();
    for (u, p) in &x.terms {
        let du = a.word_degree(u);
        for (v, q) in &y.terms {
            let dv = a.word_degree(v);
            let pq = p * q;
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            add_into(&mut terms, uv, pq.clone());
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            let sign = if du * dv % 2 == 1 { pq } else { -pq };
            add_into(&mut terms, vu, sign);
        }
    }
    let label = match (&x.label, &y.label) {
        (Some(l), Some(r)) => Some(format!("[{l},{r}]").into()),
        _ => None,
    };
    LieElement {
        alphabet: a.clone(),
        terms,
        label,
    }
}

impl std::ops::Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (w, q) in &rhs.terms {
            add_into(&mut out.terms, w.clone(), q.clone());
        }
        out.label = match (&self.label, &rhs.label) {
            (Some(l), Some(r)) => Some(format!("{l} + {r}").into()),
            _ => None,
        };
        out
    }
}

impl std::ops::Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        let mut out = self.scale(&-Rational::one());
        out.label = self.label.as_ref().map(|l| format!("-{l}").into());
        out
    }
}

impl std::ops::Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &(-rhs)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, q)| {
                let word = self.alphabet.render_word(w);
                if q.is_one() {
                    word
                } else {
                    format!("{}*{word}", format_rational(q))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "{l} = {self}"),
            None => write!(f, "{self}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn alphabet() -> Arc<Alphabet> {
        let g = |id: &str, d| LieGenerator {
            id: id.into(),
            samelson_degree: d,
            scale_weight: 1,
        };
        Alphabet::new(vec![g("x", 1), g("y", 1), g("u", 2), g("v", 3)])
    }

    #[test]
    fn odd_bracket_is_symmetric_sum() {
        let a = alphabet();
        let (x, y) = (
            LieElement::var(&a, "x").unwrap(),
            LieElement::var(&a, "y").unwrap(),
        );
        let b = bracket(&x, &y);
        assert_eq!(b.coefficient(&["x", "y"]), rat(1));
        assert_eq!(b.coefficient(&["y", "x"]), rat(1));
        assert_eq!(b.label(), Some("[x,y]"));
        let xx = bracket(&x, &x);
        assert_eq!(xx.coefficient(&["x", "x"]), rat(2));
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let a = alphabet();
        let u = LieElement::var(&a, "u").unwrap();
        assert!(bracket(&u, &u).is_zero());
    }

    #[test]
    fn antisymmetry_and_jacobi() {
        let a = alphabet();
        let gens: Vec<LieElement> = (0..a.len()).map(|i| LieElement::generator(&a, i)).collect();
        let mut pool = gens.clone();
        for x in &gens {
            for y in &gens {
                pool.push(bracket(x, y));
            }
        }
        for x in &pool {
            for y in &pool {
                let (dx, dy) = match (x.degree(), y.degree()) {
                    (Some(a), Some(b)) => (a, b),
                    _ => continue,
                };
                let s = if dx * dy % 2 == 1 { rat(-1) } else { rat(1) };
                assert!((&bracket(x, y) + &bracket(y, x).scale(&s)).is_zero());
                for z in gens.iter() {
                    let lhs = bracket(x, &bracket(y, z));
                    let rhs = &bracket(&bracket(x, y), z) + &bracket(y, &bracket(x, z)).scale(&s);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
