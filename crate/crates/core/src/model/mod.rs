//! Minimal Sullivan models.
//!
//! A [`MinimalModel`] is a free CDGA `(∧V, d)` with every generator in degree
//! at most `N`, computed in `∧V` truncated above `N + 2`. Construction only
//! checks degrees; [`MinimalModel::validate`] decides `d² = 0`, minimality and
//! the nilpotence condition. Filtrations, the step-adapted basis and weights
//! are computed on first use and cached.

mod adapted;
mod exponents;
mod filtration;
pub mod sampler;
mod weights;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::gca::span::{preimage, MonomialBasis};
use crate::gca::{AlgebraError, Cdga, Derivation, Element, Generator, Universe};
use crate::linalg::Subspace;

pub use adapted::{
    AdaptedModel, BlockViolation, DeltaViolation, DifferentialSplit, StepBoundReport,
};
pub use exponents::{table_cells, Classification, ExponentReport, ExponentRow, TableCells};
pub use filtration::{DegreeFiltration, FiltrationKind, FiltrationTable};
pub use weights::{
    applicable_bounds, BoundCheck, GeneratorBounds, LightFactorReport, WeightAssignment,
    WeightBoundReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("generator `{id}` has degree {degree} above the working degree {max}")]
    AboveMaxDegree { id: String, degree: u32, max: u32 },
    #[error(
        "the cautious filtration does not exhaust V in degree {0}; the model is not nilpotent"
    )]
    NotNilpotent(u32),
    #[error("weight recursion revisits `{0}`; the basis is not triangular for d")]
    WeightCycle(String),
}

#[derive(Debug, Clone)]
pub struct MinimalModel {
    name: String,
    max_degree: u32,
    cdga: Cdga,
    tower: OnceLock<NilpotenceTower>,
    cautious: OnceLock<FiltrationTable>,
    naive: OnceLock<FiltrationTable>,
    adapted: OnceLock<Result<Arc<AdaptedModel>, ModelError>>,
}

impl MinimalModel {
    /// The universe a model with these generators works in: truncated above
    /// `max_degree + 2`.
    pub fn universe_for(
        gens: Vec<Generator>,
        max_degree: u32,
    ) -> Result<Arc<Universe>, ModelError> {
        if let Some(g) = gens.iter().find(|g| g.degree > max_degree) {
            return Err(ModelError::AboveMaxDegree {
                id: g.id.clone(),
                degree: g.degree,
                max: max_degree,
            });
        }
        Ok(Universe::new(gens, Some(max_degree + 2))?)
    }

    /// `d` must live on a universe from [`MinimalModel::universe_for`] and be
    /// defined on every generator.
    pub fn new(
        name: impl Into<String>,
        max_degree: u32,
        d: Derivation,
    ) -> Result<Self, ModelError> {
        let u = d.universe();
        if let Some(g) = u.generators().iter().find(|g| g.degree > max_degree) {
            return Err(ModelError::AboveMaxDegree {
                id: g.id.clone(),
                degree: g.degree,
                max: max_degree,
            });
        }
        Ok(Self {
            name: name.into(),
            max_degree,
            cdga: Cdga::new(d)?,
            tower: OnceLock::new(),
            cautious: OnceLock::new(),
            naive: OnceLock::new(),
            adapted: OnceLock::new(),
        })
    }

    /// Builds a model from generator declarations and `(id, image)` pairs;
    /// generators without an image are closed.
    pub fn from_images(
        name: impl Into<String>,
        max_degree: u32,
        gens: Vec<Generator>,
        images: impl FnOnce(&Arc<Universe>) -> Result<Vec<(String, Element)>, AlgebraError>,
    ) -> Result<Self, ModelError> {
        let u = Self::universe_for(gens, max_degree)?;
        let mut slots: Vec<Option<Element>> = vec![None; u.len()];
        for (id, img) in images(&u)? {
            let i = u.index_of(&id).ok_or(AlgebraError::UnknownGenerator(id))?;
            slots[i] = Some(img);
        }
        let slots = slots
            .into_iter()
            .map(|s| Some(s.unwrap_or_else(|| Element::zero(&u))))
            .collect();
        Self::new(name, max_degree, Derivation::new(&u, slots)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn cdga(&self) -> &Cdga {
        &self.cdga
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.cdga.universe()
    }

    pub fn differential(&self) -> &Derivation {
        self.cdga.differential()
    }

    pub fn generators(&self) -> &[Generator] {
        self.universe().generators()
    }

    pub fn id(&self, g: usize) -> &str {
        &self.universe().generator(g).id
    }

    /// `d` of generator `g`.
    pub fn d_of(&self, g: usize) -> &Element {
        self.differential().image(g).expect("total differential")
    }

    pub fn d(&self, a: &Element) -> Element {
        self.cdga.d(a)
    }

    pub fn var(&self, id: &str) -> Element {
        self.cdga.var(id)
    }

    pub fn generator_indices(&self, n: u32) -> Vec<usize> {
        self.universe().indices_of_degree(n)
    }

    pub fn generator_elements(&self, n: u32) -> Vec<Element> {
        self.generator_indices(n)
            .into_iter()
            .map(|g| Element::generator(self.universe(), g))
            .collect()
    }

    pub fn has_degree_one(&self) -> bool {
        !self.generator_indices(1).is_empty()
    }

    pub fn is_simply_connected(&self) -> bool {
        !self.has_degree_one()
    }

    /// `d = d₁`: every image is quadratic.
    pub fn is_coformal(&self) -> bool {
        self.differential().max_word_length() <= 2
    }

    /// Generators whose differential has a term of word length 1.
    pub fn minimality_violations(&self) -> Vec<usize> {
        (0..self.universe().len())
            .filter(|&g| self.d_of(g).terms().any(|(m, _)| m.word_length() < 2))
            .collect()
    }

    pub fn nilpotence_tower(&self) -> &NilpotenceTower {
        self.tower.get_or_init(|| NilpotenceTower::compute(self))
    }

    pub fn validate(&self) -> ValidationReport {
        let ids = |v: Vec<usize>| v.into_iter().map(|g| self.id(g).to_string()).collect();
        ValidationReport {
            d_squared: ids(self.differential().check_d_squared()),
            minimality: ids(self.minimality_violations()),
            nilpotence: self.nilpotence_tower().clone(),
        }
    }

    pub fn cautious_filtration(&self) -> &FiltrationTable {
        self.cautious
            .get_or_init(|| FiltrationTable::compute(self, FiltrationKind::Cautious))
    }

    pub fn naive_filtration(&self) -> &FiltrationTable {
        self.naive
            .get_or_init(|| FiltrationTable::compute(self, FiltrationKind::Naive))
    }

    /// Smallest `c` with `Cⁿ(c) = Vⁿ` in every degree; `None` if some degree
    /// never exhausts.
    pub fn nilpotency_class(&self) -> Option<u32> {
        self.cautious_filtration().class()
    }

    /// The model rewritten in a basis where every generator lies in a single
    /// cautious step.
    pub fn adapted(&self) -> Result<&Arc<AdaptedModel>, ModelError> {
        self.adapted
            .get_or_init(|| AdaptedModel::compute(self).map(Arc::new))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Same model with generator ids renamed by `rename`.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<MinimalModel, ModelError> {
        let gens: Vec<Generator> = self
            .generators()
            .iter()
            .map(|g| Generator {
                id: rename(&g.id),
                ..g.clone()
            })
            .collect();
        let old = self.universe().clone();
        Self::from_images(self.name.clone(), self.max_degree, gens, |u| {
            let images: Vec<Element> = (0..old.len())
                .map(|g| Element::var(u, &rename(&old.generator(g).id)))
                .collect::<Result<_, _>>()?;
            Ok((0..old.len())
                .map(|g| {
                    (
                        rename(&old.generator(g).id),
                        self.d_of(g).substitute(u, &images),
                    )
                })
                .collect())
        })
    }

    /// The sub-model on generators of degree at most `n`.
    pub fn truncated(&self, n: u32) -> Result<MinimalModel, ModelError> {
        let keep: Vec<usize> = (0..self.universe().len())
            .filter(|&g| self.universe().generator(g).degree <= n)
            .collect();
        let gens = keep
            .iter()
            .map(|&g| self.universe().generator(g).clone())
            .collect();
        Self::from_images(self.name.clone(), n, gens, |u| {
            keep.iter()
                .map(|&g| Ok((self.id(g).to_string(), self.d_of(g).transport(u)?)))
                .collect()
        })
    }
}

/// Result of [`MinimalModel::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Generators with `d(d g) ≠ 0`.
    pub d_squared: Vec<String>,
    /// Generators whose differential has a linear term.
    pub minimality: Vec<String>,
    pub nilpotence: NilpotenceTower,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.d_squared.is_empty() && self.minimality.is_empty() && self.nilpotence.exhausted
    }
}

/// `Z(r) = { v ∈ V : dv ∈ ∧Z(r−1) }`, degree by degree, with `Z(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotenceTower {
    /// `levels[r-1][n]` is `Z(r) ∩ Vⁿ` in generator coordinates.
    pub levels: Vec<BTreeMap<u32, Subspace>>,
    pub exhausted: bool,
    /// Generators outside the final level.
    pub missing: Vec<String>,
}

impl NilpotenceTower {
    fn compute(model: &MinimalModel) -> Self {
        let u = model.universe();
        let degrees: Vec<u32> = (1..=model.max_degree).collect();
        let gens: BTreeMap<u32, Vec<Element>> = degrees
            .iter()
            .map(|&n| (n, model.generator_elements(n)))
            .collect();
        let mut levels: Vec<BTreeMap<u32, Subspace>> = Vec::new();
        let mut current: BTreeMap<u32, Subspace> = degrees
            .iter()
            .map(|&n| (n, Subspace::zero(gens[&n].len())))
            .collect();
        let cap = u.len() + 1;
        for _ in 0..cap {
            let parts: Vec<(u32, Vec<Element>)> = current
                .iter()
                .map(|(&n, s)| (n, subspace_elements(s, &gens[&n])))
                .collect();
            let mut next = BTreeMap::new();
            for &n in &degrees {
                let basis = MonomialBasis::of_degree(u, n + 1);
                let target = basis.span(&graded_products(u, &parts, n + 1));
                next.insert(
                    n,
                    preimage(model.differential(), &gens[&n], &basis, &target),
                );
            }
            let stalled = next == current;
            current = next;
            if stalled {
                break;
            }
            levels.push(current.clone());
        }
        let mut missing = Vec::new();
        for &n in &degrees {
            for (k, g) in model.generator_indices(n).into_iter().enumerate() {
                if !current[&n].contains(&crate::linalg::unit(gens[&n].len(), k)) {
                    missing.push(model.id(g).to_string());
                }
            }
        }
        let exhausted = current.values().all(Subspace::is_full);
        Self {
            levels,
            exhausted,
            missing,
        }
    }

    /// Dimension of `Z(r)` summed over degrees.
    pub fn dims(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.values().map(Subspace::dim).sum())
            .collect()
    }
}

/// The elements `Σ v_k g_k` for the basis vectors `v` of `s`.
pub fn subspace_elements(s: &Subspace, gens: &[Element]) -> Vec<Element> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let u = first.universe();
    s.basis()
        .iter()
        .map(|v| crate::gca::span::combination(gens, v, u))
        .collect()
}

/// All products of total degree `k` of the given homogeneous elements,
/// one factor list per nondecreasing choice of indices.
pub(crate) fn graded_products(
    u: &Arc<Universe>,
    parts: &[(u32, Vec<Element>)],
    k: u32,
) -> Vec<Element> {
    let items: Vec<(u32, &Element)> = parts
        .iter()
        .flat_map(|(n, es)| es.iter().map(move |e| (*n, e)))
        .collect();
    let mut out = Vec::new();
    fn go(
        items: &[(u32, &Element)],
        start: usize,
        remaining: u32,
        acc: Element,
        out: &mut Vec<Element>,
    ) {
        if remaining == 0 {
            if !acc.is_zero() {
                out.push(acc);
            }
            return;
        }
        for pos in start..items.len() {
            let (n, e) = items[pos];
            if n > remaining {
                continue;
            }
            let next = if n % 2 == 1 { pos + 1 } else { pos };
            let prod = &acc * e;
            if !prod.is_zero() {
                go(items, next, remaining - n, prod, out);
            }
        }
    }
    go(&items, 0, k, Element::one(u), &mut out);
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::gca::Generator;

    pub(crate) fn heisenberg() -> MinimalModel {
        MinimalModel::from_images(
            "heisenberg",
            3,
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("z", 1),
            ],
            |u| {
                let x = Element::var(u, "x")?;
                let y = Element::var(u, "y")?;
                Ok(vec![("z".into(), &x * &y)])
            },
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_tower() {
        let m = heisenberg();
        let r = m.validate();
        assert!(r.is_valid(), "{r:?}");
        assert_eq!(r.nilpotence.levels[0][&1], Subspace::coordinate(3, [0, 1]));
        assert!(r.nilpotence.levels[1][&1].is_full());
        assert_eq!(r.nilpotence.levels.len(), 2);
    }

    #[test]
    fn truncation_drops_high_generators() {
        let m = MinimalModel::from_images(
            "s2",
            3,
            vec![Generator::new("x", 2), Generator::new("y", 3)],
            |u| {
                let x = Element::var(u, "x")?;
                Ok(vec![("y".into(), &x * &x)])
            },
        )
        .unwrap();
        let t = m.truncated(2).unwrap();
        assert_eq!(t.generators().len(), 1);
        assert_eq!(t.max_degree(), 2);
        assert!(t.validate().is_valid());
        assert_eq!(
            m.truncated(3).unwrap().d_of(1).to_string(),
            m.d_of(1).to_string()
        );
    }

    #[test]
    fn so3_is_not_nilpotent() {
        let m = MinimalModel::from_images(
            "so3",
            3,
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("z", 1),
            ],
            |u| {
                let x = Element::var(u, "x")?;
                let y = Element::var(u, "y")?;
                let z = Element::var(u, "z")?;
                Ok(vec![
                    ("x".into(), &y * &z),
                    ("y".into(), &z * &x),
                    ("z".into(), &x * &y),
                ])
            },
        )
        .unwrap();
        let r = m.validate();
        assert!(r.d_squared.is_empty());
        assert!(r.minimality.is_empty());
        assert!(!r.nilpotence.exhausted);
        assert_eq!(r.nilpotence.missing, ["x", "y", "z"]);
        assert_eq!(m.nilpotency_class(), None);
    }

    #[test]
    fn linear_term_breaks_minimality() {
        let m = MinimalModel::from_images(
            "bad",
            3,
            vec![Generator::new("x", 1), Generator::new("z", 2)],
            |_| Ok(vec![]),
        )
        .unwrap();
        assert!(m.validate().is_valid());
        let m = MinimalModel::from_images(
            "bad",
            3,
            vec![Generator::new("x", 2), Generator::new("z", 1)],
            |u| Ok(vec![("z".into(), Element::var(u, "x")?)]),
        )
        .unwrap();
        assert_eq!(m.validate().minimality, ["z"]);
    }

    #[test]
    fn above_max_degree_rejected() {
        let err = MinimalModel::from_images("m", 2, vec![Generator::new("y", 3)], |_| Ok(vec![]))
            .unwrap_err();
        assert!(matches!(err, ModelError::AboveMaxDegree { .. }));
    }

    #[test]
    fn coformal_flag() {
        assert!(heisenberg().is_coformal());
        let m = MinimalModel::from_images(
            "cubic",
            5,
            vec![Generator::new("x", 2), Generator::new("z", 5)],
            |u| Ok(vec![("z".into(), Element::var(u, "x")?.pow(3))]),
        )
        .unwrap();
        assert!(!m.is_coformal());
    }
}
