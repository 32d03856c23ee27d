use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Monomial, Universe};
use crate::rational::{format_rational, Rational};

/// A rational combination of canonical monomials. Zero coefficients are never
/// stored, so equality is map equality.
#[derive(Clone)]
pub struct Element {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for Element {}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::scalar(universe, Rational::one())
    }

    pub fn scalar(universe: &Arc<Universe>, q: Rational) -> Self {
        Self::monomial(universe, Monomial::one(), q)
    }

    pub fn generator(universe: &Arc<Universe>, index: usize) -> Self {
        Self::monomial(universe, Monomial::generator(index), Rational::one())
    }

    /// Generator by id.
    pub fn var(universe: &Arc<Universe>, id: &str) -> Result<Self, AlgebraError> {
        let i = universe
            .index_of(id)
            .ok_or_else(|| AlgebraError::UnknownGenerator(id.to_string()))?;
        Ok(Self::generator(universe, i))
    }

    pub fn monomial(universe: &Arc<Universe>, m: Monomial, q: Rational) -> Self {
        let mut e = Self::zero(universe);
        if !q.is_zero()
            && !universe
                .truncation()
                .is_some_and(|t| m.degree(universe) > t)
        {
            e.terms.insert(m, q);
        }
        e
    }

    /// Signed product of generators in the given (unsorted) order.
    pub fn product_of(universe: &Arc<Universe>, factors: &[usize], q: Rational) -> Self {
        match Monomial::normalize(universe, factors) {
            Some((s, m)) => Self::monomial(universe, m, if s < 0 { -q } else { q }),
            None => Self::zero(universe),
        }
    }

    pub fn from_terms(
        universe: &Arc<Universe>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut e = Self::zero(universe);
        for (m, q) in terms {
            e.add_term(m, q);
        }
        e
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero()
            || self
                .universe
                .truncation()
                .is_some_and(|t| m.degree(&self.universe) > t)
        {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &Element, q: &Rational) {
        if q.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * q);
        }
    }

    /// Degree when every term has the same degree; `None` for zero or mixed.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree(&self.universe));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Terms whose monomials satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Element {
        Element {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    /// The part of word length exactly `k`.
    pub fn word_length_part(&self, k: usize) -> Element {
        self.filter(|m| m.word_length() == k)
    }

    pub fn min_word_length(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::word_length).min()
    }

    pub fn scale(&self, q: &Rational) -> Element {
        let mut out = Element::zero(&self.universe);
        out.add_scaled(self, q);
        out
    }

    /// Graded-commutative product; errors when the universes differ.
    pub fn wedge(&self, other: &Element) -> Result<Element, AlgebraError> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(AlgebraError::MixedUniverse);
        }
        let mut out = Element::zero(&self.universe);
        for (m1, q1) in &self.terms {
            for (m2, q2) in &other.terms {
                if let Some((s, m)) = m1.mul(m2, &self.universe) {
                    let q = q1 * q2;
                    out.add_term(m, if s < 0 { -q } else { q });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut out = Element::one(&self.universe);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> Rational {
        self.terms
            .values()
            .map(|q| q.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Image under the algebra map sending generator `i` to `images[i]`.
    /// All images must share one target universe.
    pub fn substitute(&self, target: &Arc<Universe>, images: &[Element]) -> Element {
        let mut out = Element::zero(target);
        for (m, q) in &self.terms {
            let mut prod = Element::scalar(target, q.clone());
            for g in m.factors() {
                prod = &prod * &images[g];
                if prod.is_zero() {
                    break;
                }
            }
            out = out + prod;
        }
        out
    }

    /// Same coefficients in another universe with identical generator ids.
    pub fn transport(&self, target: &Arc<Universe>) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(target);
        for (m, q) in &self.terms {
            let factors: Vec<usize> = m
                .factors()
                .map(|g| {
                    let id = &self.universe.generator(g).id;
                    target
                        .index_of(id)
                        .ok_or_else(|| AlgebraError::UnknownGenerator(id.clone()))
                })
                .collect::<Result<_, _>>()?;
            out = out + Element::product_of(target, &factors, q.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Renders as `c*g1^e1*g2 + ...`, the same syntax model files use.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            let abs = q.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(&self.universe))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), m.render(&self.universe))?;
            }
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert!(
            same_universe(&self.universe, &rhs.universe),
            "mixed universes"
        );
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        assert!(
            same_universe(&self.universe, &rhs.universe),
            "mixed universes"
        );
        for (m, q) in rhs.terms {
            self.add_term(m, q);
        }
        self
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert!(
            same_universe(&self.universe, &rhs.universe),
            "mixed universes"
        );
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Rational::one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Panics on mixed universes; use [`Element::wedge`] for the checked form.
impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.wedge(rhs).expect("mixed universes")
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}
