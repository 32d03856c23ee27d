use std::sync::Arc;

use num_traits::One;

use super::element::same_universe;
use super::{AlgebraError, Element, Monomial, Universe};
use crate::rational::Rational;

/// A degree +1 derivation of ∧V, given by its values on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    universe: Arc<Universe>,
    images: Vec<Option<Element>>,
}

impl Derivation {
    /// Checks that every image is homogeneous of degree `|g| + 1`.
    pub fn new(
        universe: &Arc<Universe>,
        images: Vec<Option<Element>>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(images.len(), universe.len(), "one image slot per generator");
        for (g, img) in images.iter().enumerate() {
            let Some(img) = img else { continue };
            if !same_universe(img.universe(), universe) {
                return Err(AlgebraError::MixedUniverse);
            }
            let expected = universe.degree(g) + 1;
            for (m, _) in img.terms() {
                let found = m.degree(universe);
                if found != expected {
                    return Err(AlgebraError::DegreeMismatch {
                        generator: universe.generator(g).id.clone(),
                        expected,
                        found,
                    });
                }
            }
        }
        Ok(Self {
            universe: universe.clone(),
            images,
        })
    }

    /// The zero differential.
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self {
            universe: universe.clone(),
            images: vec![Some(Element::zero(universe)); universe.len()],
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn image(&self, g: usize) -> Option<&Element> {
        self.images[g].as_ref()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    fn image_or_err(&self, g: usize) -> Result<&Element, AlgebraError> {
        self.images[g]
            .as_ref()
            .ok_or_else(|| AlgebraError::MissingImage(self.universe.generator(g).id.clone()))
    }

    /// `d(m) = Σ (−1)^{|prefix|} prefix · d(g) · suffix`.
    pub fn apply_monomial(&self, m: &Monomial) -> Result<Element, AlgebraError> {
        let u = &self.universe;
        let mut out = Element::zero(u);
        let mut prefix_degree = 0u32;
        for pos in 0..m.word_length() {
            let (pre, g, post) = m.split_at_factor(pos);
            let dg = self.image_or_err(g)?;
            if !dg.is_zero() {
                let pre = Element::monomial(u, pre, Rational::one());
                let post = Element::monomial(u, post, Rational::one());
                let term = &(&pre * dg) * &post;
                let sign = if prefix_degree.is_multiple_of(2) {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                out.add_scaled(&term, &sign);
            }
            prefix_degree += u.degree(g);
        }
        Ok(out)
    }

    pub fn apply(&self, a: &Element) -> Result<Element, AlgebraError> {
        if !same_universe(a.universe(), &self.universe) {
            return Err(AlgebraError::MixedUniverse);
        }
        let mut out = Element::zero(&self.universe);
        for (m, q) in a.terms() {
            out.add_scaled(&self.apply_monomial(m)?, q);
        }
        Ok(out)
    }

    /// Generators `g` with `d(d(g)) ≠ 0`. Missing images count as violations.
    pub fn check_d_squared(&self) -> Vec<usize> {
        (0..self.universe.len())
            .filter(
                |&g| match self.image_or_err(g).and_then(|dg| self.apply(dg)) {
                    Ok(ddg) => !ddg.is_zero(),
                    Err(_) => true,
                },
            )
            .collect()
    }

    /// `d_k`: the part of each image of word length `k + 1`.
    pub fn wordlength_component(&self, k: usize) -> Derivation {
        Derivation {
            universe: self.universe.clone(),
            images: self
                .images
                .iter()
                .map(|img| img.as_ref().map(|e| e.word_length_part(k + 1)))
                .collect(),
        }
    }

    /// Largest word length occurring in any image.
    pub fn max_word_length(&self) -> usize {
        self.images
            .iter()
            .flatten()
            .flat_map(|e| e.terms().map(|(m, _)| m.word_length()))
            .max()
            .unwrap_or(0)
    }

    pub fn sum(&self, other: &Derivation) -> Derivation {
        Derivation {
            universe: self.universe.clone(),
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| match (a, b) {
                    (Some(a), Some(b)) => Some(a + b),
                    (Some(a), None) | (None, Some(a)) => Some(a.clone()),
                    (None, None) => None,
                })
                .collect(),
        }
    }
}

/// A free commutative DGA (∧V, d), possibly truncated above some degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cdga {
    universe: Arc<Universe>,
    d: Derivation,
}

impl Cdga {
    pub fn new(d: Derivation) -> Result<Self, AlgebraError> {
        if let Some(g) = (0..d.universe().len()).find(|&g| d.image(g).is_none()) {
            return Err(AlgebraError::MissingImage(
                d.universe().generator(g).id.clone(),
            ));
        }
        Ok(Self {
            universe: d.universe().clone(),
            d,
        })
    }

    /// The ground field ℚ as a DGA (no generators).
    pub fn ground() -> Self {
        let u = Universe::new(Vec::new(), None).expect("empty universe");
        Self {
            d: Derivation::zero(&u),
            universe: u,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn differential(&self) -> &Derivation {
        &self.d
    }

    pub fn d(&self, a: &Element) -> Element {
        self.d.apply(a).expect("element of this algebra")
    }

    pub fn var(&self, id: &str) -> Element {
        Element::var(&self.universe, id).unwrap_or_else(|e| panic!("{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::Generator;

    fn s2() -> (Arc<Universe>, Derivation) {
        let u = Universe::new(vec![Generator::new("x", 2), Generator::new("y", 3)], None).unwrap();
        let x = Element::var(&u, "x").unwrap();
        let d = Derivation::new(&u, vec![Some(Element::zero(&u)), Some(&x * &x)]).unwrap();
        (u, d)
    }

    fn heisenberg() -> (Arc<Universe>, Derivation) {
        let u = Universe::new(
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("z", 1),
            ],
            None,
        )
        .unwrap();
        let x = Element::var(&u, "x").unwrap();
        let y = Element::var(&u, "y").unwrap();
        let z0 = Element::zero(&u);
        let d = Derivation::new(&u, vec![Some(z0.clone()), Some(z0), Some(&x * &y)]).unwrap();
        (u, d)
    }

    #[test]
    fn s2_leibniz() {
        let (u, d) = s2();
        let x = Element::var(&u, "x").unwrap();
        let y = Element::var(&u, "y").unwrap();
        assert_eq!(d.apply(&y).unwrap(), &x * &x);
        // d(xy) = dx·y + x·dy = x^3
        assert_eq!(d.apply(&(&x * &y)).unwrap(), x.pow(3));
        assert!(d.apply(&Element::one(&u)).unwrap().is_zero());
        assert!(d.check_d_squared().is_empty());
    }

    #[test]
    fn heisenberg_d_squared() {
        let (_, d) = heisenberg();
        assert!(d.check_d_squared().is_empty());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let (u, _) = heisenberg();
        let x = Element::var(&u, "x").unwrap();
        let z0 = Element::zero(&u);
        let err = Derivation::new(&u, vec![Some(z0.clone()), Some(z0), Some(x)]).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::DegreeMismatch {
                expected: 2,
                found: 1,
                ..
            }
        ));
    }

    #[test]
    fn missing_image() {
        let (u, _) = heisenberg();
        let d = Derivation::new(&u, vec![None, None, None]).unwrap();
        let x = Element::var(&u, "x").unwrap();
        assert_eq!(d.apply(&x), Err(AlgebraError::MissingImage("x".into())));
    }

    #[test]
    fn wordlength_split() {
        let u = Universe::new(
            vec![
                Generator::new("x", 2),
                Generator::new("y", 4),
                Generator::new("w", 5),
            ],
            None,
        )
        .unwrap();
        let x = Element::var(&u, "x").unwrap();
        let y = Element::var(&u, "y").unwrap();
        let z = Element::zero(&u);
        let dw = &(&x * &y) + &x.pow(3);
        let d = Derivation::new(&u, vec![Some(z.clone()), Some(z), Some(dw.clone())]).unwrap();
        let w = u.index_of("w").unwrap();
        assert_eq!(d.wordlength_component(1).image(w).unwrap(), &(&x * &y));
        assert_eq!(d.wordlength_component(2).image(w).unwrap(), &x.pow(3));
        assert!(d.wordlength_component(3).image(w).unwrap().is_zero());
        let total = d.wordlength_component(1).sum(&d.wordlength_component(2));
        assert_eq!(total.image(w).unwrap(), &dw);
        let xi = u.index_of("x").unwrap();
        assert!(d.wordlength_component(1).image(xi).unwrap().is_zero());
    }
}
