use std::sync::Arc;

use crate::gca::{Cdga, Element, Universe};

use super::{HomotopyError, IntervalElement};

/// An algebra map `∧V → B` given on generators, possibly only on some of them.
///
/// A partial morphism stands for a map out of the sub-algebra generated by the
/// generators that have images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgaMorphism {
    source: Cdga,
    target: Cdga,
    images: Vec<Option<Element>>,
}

fn check_degree(
    source: &Arc<Universe>,
    g: usize,
    degree: Option<u32>,
    homogeneous: bool,
) -> Result<(), HomotopyError> {
    let expected = source.degree(g);
    match degree {
        Some(found) if !homogeneous || found != expected => Err(HomotopyError::DegreeMismatch {
            generator: source.generator(g).id.clone(),
            expected,
            found,
        }),
        _ => Ok(()),
    }
}

impl DgaMorphism {
    pub fn new(
        source: &Cdga,
        target: &Cdga,
        images: Vec<Option<Element>>,
    ) -> Result<Self, HomotopyError> {
        assert_eq!(
            images.len(),
            source.universe().len(),
            "one slot per source generator"
        );
        for (g, im) in images.iter().enumerate() {
            if let Some(e) = im {
                if e.universe() != target.universe() {
                    return Err(HomotopyError::WrongTarget(
                        source.universe().generator(g).id.clone(),
                    ));
                }
                check_degree(source.universe(), g, e.degree(), e.is_homogeneous())?;
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Images given by id; unnamed generators stay unassigned.
    pub fn from_named(
        source: &Cdga,
        target: &Cdga,
        named: impl IntoIterator<Item = (String, Element)>,
    ) -> Result<Self, HomotopyError> {
        let mut images = vec![None; source.universe().len()];
        for (id, e) in named {
            let g = source
                .universe()
                .index_of(&id)
                .ok_or_else(|| HomotopyError::UnknownGenerator(id.clone()))?;
            images[g] = Some(e);
        }
        Self::new(source, target, images)
    }

    pub fn identity(cdga: &Cdga) -> Self {
        let u = cdga.universe();
        Self {
            source: cdga.clone(),
            target: cdga.clone(),
            images: (0..u.len())
                .map(|g| Some(Element::generator(u, g)))
                .collect(),
        }
    }

    /// Every generator to zero.
    pub fn zero(source: &Cdga, target: &Cdga) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            images: vec![Some(Element::zero(target.universe())); source.universe().len()],
        }
    }

    pub fn source(&self) -> &Cdga {
        &self.source
    }

    pub fn target(&self) -> &Cdga {
        &self.target
    }

    pub fn image(&self, g: usize) -> Option<&Element> {
        self.images[g].as_ref()
    }

    pub fn images(&self) -> &[Option<Element>] {
        &self.images
    }

    pub fn is_defined(&self, g: usize) -> bool {
        self.images[g].is_some()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(Option::is_some)
    }

    pub fn defined_generators(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&g| self.is_defined(g))
            .collect()
    }

    /// Same morphism with one more (or a replaced) generator image.
    pub fn with_image(&self, g: usize, e: Element) -> Result<Self, HomotopyError> {
        let mut images = self.images.clone();
        images[g] = Some(e);
        Self::new(&self.source, &self.target, images)
    }

    /// Restriction to the given generators.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = self.clone();
        for (g, im) in out.images.iter_mut().enumerate() {
            if !keep.contains(&g) {
                *im = None;
            }
        }
        out
    }

    /// Image of an element; every generator it involves must be assigned.
    pub fn apply(&self, a: &Element) -> Result<Element, HomotopyError> {
        let zero = Element::zero(self.target.universe());
        let mut images = Vec::with_capacity(self.images.len());
        for (g, im) in self.images.iter().enumerate() {
            match im {
                Some(e) => images.push(e.clone()),
                None if a.terms().any(|(m, _)| m.contains(g)) => {
                    return Err(HomotopyError::MissingImage(
                        self.source.universe().generator(g).id.clone(),
                    ))
                }
                None => images.push(zero.clone()),
            }
        }
        Ok(a.substitute(self.target.universe(), &images))
    }

    /// `η ∘ self`.
    pub fn then(&self, eta: &DgaMorphism) -> Result<Self, HomotopyError> {
        let images = self
            .images
            .iter()
            .map(|im| im.as_ref().map(|e| eta.apply(e)).transpose())
            .collect::<Result<_, _>>()?;
        Self::new(&self.source, &eta.target, images)
    }

    /// `φ(dg) − dφ(g)` for each generator where both sides are defined and
    /// nonzero.
    pub fn commutation_defects(&self) -> Vec<(String, Element)> {
        let mut out = Vec::new();
        for g in self.defined_generators() {
            let dg = self
                .source
                .d(&Element::generator(self.source.universe(), g));
            let Ok(lhs) = self.apply(&dg) else { continue };
            let rhs = self.target.d(self.images[g].as_ref().unwrap());
            let r = lhs - rhs;
            if !r.is_zero() {
                out.push((self.source.universe().generator(g).id.clone(), r));
            }
        }
        out
    }

    pub fn commutes(&self) -> bool {
        self.commutation_defects().is_empty()
    }

    /// Agreement with `other` on the generators where both are defined.
    pub fn agrees_with(&self, other: &DgaMorphism, on: &[usize]) -> Vec<String> {
        on.iter()
            .filter(|&&g| self.images[g] != other.images[g])
            .map(|&g| self.source.universe().generator(g).id.clone())
            .collect()
    }
}

/// An algebra map `∧V → B ⊗ ℚ⟨t, dt⟩` commuting with `d`, possibly partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicHomotopy {
    source: Cdga,
    target: Cdga,
    images: Vec<Option<IntervalElement>>,
}

impl AlgebraicHomotopy {
    pub fn new(
        source: &Cdga,
        target: &Cdga,
        images: Vec<Option<IntervalElement>>,
    ) -> Result<Self, HomotopyError> {
        assert_eq!(
            images.len(),
            source.universe().len(),
            "one slot per source generator"
        );
        for (g, im) in images.iter().enumerate() {
            if let Some(e) = im {
                if e.universe() != target.universe() {
                    return Err(HomotopyError::WrongTarget(
                        source.universe().generator(g).id.clone(),
                    ));
                }
                let (deg, homog) = interval_degree(e);
                check_degree(source.universe(), g, deg, homog)?;
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// `φ ⊗ 1`.
    pub fn constant(phi: &DgaMorphism) -> Self {
        Self {
            source: phi.source.clone(),
            target: phi.target.clone(),
            images: phi
                .images
                .iter()
                .map(|im| im.as_ref().map(IntervalElement::constant))
                .collect(),
        }
    }

    /// Nothing assigned yet.
    pub fn empty(source: &Cdga, target: &Cdga) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.universe().len()],
        }
    }

    pub fn source(&self) -> &Cdga {
        &self.source
    }

    pub fn target(&self) -> &Cdga {
        &self.target
    }

    pub fn image(&self, g: usize) -> Option<&IntervalElement> {
        self.images[g].as_ref()
    }

    pub fn is_defined(&self, g: usize) -> bool {
        self.images[g].is_some()
    }

    pub fn defined_generators(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&g| self.is_defined(g))
            .collect()
    }

    pub fn with_image(&self, g: usize, e: IntervalElement) -> Result<Self, HomotopyError> {
        let mut images = self.images.clone();
        images[g] = Some(e);
        Self::new(&self.source, &self.target, images)
    }

    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = self.clone();
        for (g, im) in out.images.iter_mut().enumerate() {
            if !keep.contains(&g) {
                *im = None;
            }
        }
        out
    }

    pub fn apply(&self, a: &Element) -> Result<IntervalElement, HomotopyError> {
        let tu = self.target.universe();
        let mut out = IntervalElement::zero(tu);
        for (m, q) in a.terms() {
            let mut prod = IntervalElement::constant(&Element::scalar(tu, q.clone()));
            for g in m.factors() {
                let im = self.images[g].as_ref().ok_or_else(|| {
                    HomotopyError::MissingImage(self.source.universe().generator(g).id.clone())
                })?;
                prod = &prod * im;
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    fn endpoint(&self, f: impl Fn(&IntervalElement) -> Element) -> DgaMorphism {
        DgaMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|im| im.as_ref().map(&f)).collect(),
        }
    }

    /// Restriction to `t = 0, dt = 0`.
    pub fn at_0(&self) -> DgaMorphism {
        self.endpoint(IntervalElement::at_0)
    }

    /// Restriction to `t = 1, dt = 0`.
    pub fn at_1(&self) -> DgaMorphism {
        self.endpoint(IntervalElement::at_1)
    }

    /// `∫₀¹Φ(g)` on each assigned generator.
    pub fn integrated(&self) -> Vec<Option<Element>> {
        self.images
            .iter()
            .map(|im| im.as_ref().map(IntervalElement::integrate_0_1))
            .collect()
    }

    /// `t ↦ t/T` on every image.
    pub fn rescale(&self, t: &crate::rational::Rational) -> Self {
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self
                .images
                .iter()
                .map(|im| im.as_ref().map(|e| e.rescale(t)))
                .collect(),
        }
    }

    /// `Φ(dg) − dΦ(g)` wherever defined and nonzero.
    pub fn commutation_defects(&self) -> Vec<(String, IntervalElement)> {
        let d = self.target.differential();
        let mut out = Vec::new();
        for g in self.defined_generators() {
            let dg = self
                .source
                .d(&Element::generator(self.source.universe(), g));
            let Ok(lhs) = self.apply(&dg) else { continue };
            let r = &lhs - &self.images[g].as_ref().unwrap().d(d);
            if !r.is_zero() {
                out.push((self.source.universe().generator(g).id.clone(), r));
            }
        }
        out
    }

    pub fn commutes(&self) -> bool {
        self.commutation_defects().is_empty()
    }
}

/// Total degree of an interval element, and whether it is homogeneous.
pub(crate) fn interval_degree(e: &IntervalElement) -> (Option<u32>, bool) {
    let mut degs = Vec::new();
    for b in e.poly_part().values() {
        degs.extend(b.terms().map(|(m, _)| m.degree(b.universe())));
    }
    for b in e.dt_part().values() {
        degs.extend(b.terms().map(|(m, _)| m.degree(b.universe()) + 1));
    }
    degs.sort_unstable();
    degs.dedup();
    (degs.first().copied(), degs.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::{Derivation, Generator};
    use crate::rational::rat;

    fn free_u() -> Cdga {
        let u = Universe::new(vec![Generator::new("u", 2)], Some(6)).unwrap();
        Cdga::new(Derivation::zero(&u)).unwrap()
    }

    #[test]
    fn identity_commutes() {
        let m = crate::model::tests::heisenberg();
        let id = DgaMorphism::identity(m.cdga());
        assert!(id.commutes());
        let h = AlgebraicHomotopy::constant(&id);
        assert!(h.commutes());
        assert_eq!(h.at_0(), id);
        assert_eq!(h.at_1(), id);
    }

    #[test]
    fn degree_checked() {
        let b = free_u();
        let src = free_u();
        let bad = DgaMorphism::new(
            &src,
            &b,
            vec![Some(Element::var(b.universe(), "u").unwrap().pow(2))],
        );
        assert!(matches!(bad, Err(HomotopyError::DegreeMismatch { .. })));
    }

    #[test]
    fn non_commuting_map_detected() {
        let m = crate::model::tests::heisenberg();
        let c = m.cdga();
        let u = c.universe();
        // x ↦ x, y ↦ y, z ↦ 0 breaks dz = xy
        let phi = DgaMorphism::new(
            c,
            c,
            vec![
                Some(Element::var(u, "x").unwrap()),
                Some(Element::var(u, "y").unwrap()),
                Some(Element::zero(u)),
            ],
        )
        .unwrap();
        assert_eq!(phi.commutation_defects().len(), 1);
        let half = phi.restrict(&[0, 1]);
        assert!(half.commutes());
        assert!(half.apply(&Element::var(u, "z").unwrap()).is_err());
        let scaled = DgaMorphism::identity(c).then(&phi).unwrap();
        assert_eq!(scaled, phi);
        assert_eq!(
            phi.apply(&Element::scalar(u, rat(3))).unwrap(),
            Element::scalar(u, rat(3))
        );
    }
}
