use std::collections::{BTreeMap, BTreeSet};

use crate::gca::span::{combination, MonomialBasis};
use crate::gca::{Derivation, Element, Generator, Monomial};
use crate::linalg::{unit, Matrix, Subspace};
use crate::rational::Rational;

use super::{MinimalModel, ModelError};

/// A model whose generators each lie in one cautious step `Eⁿ(J)`.
///
/// When the declared basis of a degree already has this property its
/// generators are kept. Otherwise that degree is replaced by the concatenated
/// step bases, named `e{n}_{J}_{k}`.
#[derive(Debug, Clone)]
pub struct AdaptedModel {
    pub model: MinimalModel,
    /// Step of each generator, indexed like `model.universe()`.
    pub steps: Vec<u32>,
    pub class: u32,
    /// Degrees whose declared basis had to be changed.
    pub changed_degrees: Vec<u32>,
    /// For every adapted generator id, its coordinates over the declared
    /// generators of the same degree.
    pub change_of_basis: BTreeMap<String, Vec<Rational>>,
}

/// The pieces of `dω` for one adapted generator `ω ∈ Eⁿ(J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialSplit {
    pub generator: String,
    pub degree: u32,
    pub step: u32,
    /// Terms whose factors all have degree below `n`.
    pub d_sim: Element,
    pub d_nil: Element,
    /// `d_nil` split into blocks `E¹(i) ∧ Eⁿ(j)`. In degree 1 the key is
    /// `(min, max)` of the two factor steps.
    pub blocks: BTreeMap<(u32, u32), Element>,
    /// The `(1, J−1)` block.
    pub delta: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaViolation {
    pub degree: u32,
    pub step: u32,
    pub dim: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockViolation {
    pub generator: String,
    pub step: u32,
    pub block: (u32, u32),
    pub bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepBoundReport {
    /// Nilpotent blocks with `i + j > J`.
    pub violations: Vec<BlockViolation>,
    /// Whether the quadratic refinement was checked (coformal models only).
    pub coformal_checked: bool,
    /// Quadratic terms with `i₁ + i₂ > J + c`.
    pub coformal_violations: Vec<BlockViolation>,
}

impl StepBoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.coformal_violations.is_empty()
    }
}

impl AdaptedModel {
    pub(crate) fn compute(model: &MinimalModel) -> Result<Self, ModelError> {
        let table = model.cautious_filtration();
        if let Some((&n, _)) = table.degrees.iter().find(|(_, f)| !f.exhausted()) {
            return Err(ModelError::NotNilpotent(n));
        }
        let class = table.class().unwrap_or(1);
        let old = model.universe();
        let taken: BTreeSet<String> = old.generators().iter().map(|g| g.id.clone()).collect();

        // (generator, coordinates over the declared generators of its degree)
        let mut new_gens: Vec<(Generator, u32, Vec<Rational>)> = Vec::new();
        let mut changed_degrees = Vec::new();
        for n in 1..=model.max_degree() {
            let f = table.degree(n);
            let dim = f.dim();
            if dim == 0 {
                continue;
            }
            let steps: Vec<Subspace> = (1..=f.length().unwrap()).map(|j| f.step(j)).collect();
            let step_of_unit: Vec<Option<u32>> = (0..dim)
                .map(|k| {
                    let e = unit(dim, k);
                    steps
                        .iter()
                        .position(|s| s.contains(&e))
                        .map(|j| j as u32 + 1)
                })
                .collect();
            if step_of_unit.iter().all(Option::is_some) {
                for (k, &g) in f.generators.iter().enumerate() {
                    let j = step_of_unit[k].unwrap();
                    new_gens.push((old.generator(g).clone().with_step(j), n, unit(dim, k)));
                }
            } else {
                changed_degrees.push(n);
                for (j, s) in steps.iter().enumerate() {
                    for (k, v) in s.basis().iter().enumerate() {
                        let mut id = format!("e{n}_{}_{}", j + 1, k + 1);
                        while taken.contains(&id) {
                            id.insert(0, '_');
                        }
                        new_gens.push((
                            Generator::new(id, n).with_step(j as u32 + 1),
                            n,
                            v.clone(),
                        ));
                    }
                }
            }
        }

        let gens: Vec<Generator> = new_gens.iter().map(|(g, _, _)| g.clone()).collect();
        let nu = MinimalModel::universe_for(gens, model.max_degree())?;

        // declared generators written in the adapted basis
        let mut old_images: Vec<Element> = vec![Element::zero(&nu); old.len()];
        for n in 1..=model.max_degree() {
            let f = table.degree(n);
            let mine: Vec<&(Generator, u32, Vec<Rational>)> =
                new_gens.iter().filter(|(_, deg, _)| *deg == n).collect();
            if mine.is_empty() {
                continue;
            }
            let new_elems: Vec<Element> = mine
                .iter()
                .map(|(g, _, _)| Element::var(&nu, &g.id).expect("adapted generator"))
                .collect();
            // rows of `a` are the new generators in old coordinates
            let a = Matrix::from_rows(f.dim(), mine.iter().map(|(_, _, v)| v.clone()).collect());
            let at = a.transpose();
            for (k, &g) in f.generators.iter().enumerate() {
                let c = at.solve(&unit(f.dim(), k)).expect("step bases span Vⁿ");
                old_images[g] = combination(&new_elems, &c, &nu);
            }
        }

        let mut images = vec![None; nu.len()];
        let mut change_of_basis = BTreeMap::new();
        for (g, n, v) in &new_gens {
            let old_gens = model.generator_elements(*n);
            let as_old = combination(&old_gens, v, old);
            let image = model.d(&as_old).substitute(&nu, &old_images);
            images[nu.index_of(&g.id).unwrap()] = Some(image);
            change_of_basis.insert(g.id.clone(), v.clone());
        }
        let adapted = MinimalModel::new(
            model.name(),
            model.max_degree(),
            Derivation::new(&nu, images)?,
        )?;
        let steps = nu
            .generators()
            .iter()
            .map(|g| g.declared_step.unwrap())
            .collect();
        Ok(Self {
            model: adapted,
            steps,
            class,
            changed_degrees,
            change_of_basis,
        })
    }

    pub fn is_declared_basis(&self) -> bool {
        self.changed_degrees.is_empty()
    }

    pub fn step(&self, g: usize) -> u32 {
        self.steps[g]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.model.universe().index_of(id)
    }

    /// Adapted generators of degree `n` in step `j`.
    pub fn step_generators(&self, n: u32, j: u32) -> Vec<usize> {
        self.model
            .generator_indices(n)
            .into_iter()
            .filter(|&g| self.steps[g] == j)
            .collect()
    }

    fn block_key(&self, n: u32, m: &Monomial) -> Option<(u32, u32)> {
        let u = self.model.universe();
        let f: Vec<usize> = m.factors().collect();
        if n == 1 {
            let (a, b) = (self.steps[f[0]], self.steps[f[1]]);
            return Some((a.min(b), a.max(b)));
        }
        if f.len() == 2 && u.degree(f[0]) == 1 && u.degree(f[1]) == n {
            return Some((self.steps[f[0]], self.steps[f[1]]));
        }
        None
    }

    pub fn split(&self, g: usize) -> DifferentialSplit {
        let u = self.model.universe();
        let n = u.degree(g);
        let j = self.steps[g];
        let dg = self.model.d_of(g);
        let mut blocks: BTreeMap<(u32, u32), Element> = BTreeMap::new();
        let mut sim = Vec::new();
        for (m, q) in dg.terms() {
            match self.block_key(n, m) {
                Some(key) => {
                    let e = blocks.entry(key).or_insert_with(|| Element::zero(u));
                    *e = &*e + &Element::monomial(u, m.clone(), q.clone());
                }
                None => sim.push((m.clone(), q.clone())),
            }
        }
        let d_sim = Element::from_terms(u, sim);
        let d_nil = dg - &d_sim;
        let delta = if j >= 2 {
            blocks
                .get(&(1, j - 1))
                .cloned()
                .unwrap_or_else(|| Element::zero(u))
        } else {
            Element::zero(u)
        };
        DifferentialSplit {
            generator: u.generator(g).id.clone(),
            degree: n,
            step: j,
            d_sim,
            d_nil,
            blocks,
            delta,
        }
    }

    /// `δ : Eⁿ(J) → E¹(1) ∧ Eⁿ(J−1)` has full rank for every `n` and `J ≥ 2`.
    pub fn delta_violations(&self) -> Vec<DeltaViolation> {
        let mut out = Vec::new();
        let u = self.model.universe();
        for n in 1..=self.model.max_degree() {
            let basis = MonomialBasis::of_degree(u, n + 1);
            for j in 2..=self.class {
                let gens = self.step_generators(n, j);
                if gens.is_empty() {
                    continue;
                }
                let images: Vec<Element> = gens.iter().map(|&g| self.split(g).delta).collect();
                let rank = basis.span(&images).dim();
                if rank < gens.len() {
                    out.push(DeltaViolation {
                        degree: n,
                        step: j,
                        dim: gens.len(),
                        rank,
                    });
                }
            }
        }
        out
    }

    /// Block support of `d_nil`, plus the quadratic refinement for coformal models.
    pub fn step_bounds(&self) -> StepBoundReport {
        let u = self.model.universe();
        let mut violations = Vec::new();
        let mut coformal_violations = Vec::new();
        let coformal = self.model.is_coformal();
        for g in 0..u.len() {
            let s = self.split(g);
            for &(i, j) in s.blocks.keys() {
                if i + j > s.step {
                    violations.push(BlockViolation {
                        generator: s.generator.clone(),
                        step: s.step,
                        block: (i, j),
                        bound: s.step,
                    });
                }
            }
            if coformal {
                let bound = s.step + self.class;
                let mut seen = BTreeSet::new();
                for (m, _) in self.model.d_of(g).terms() {
                    let f: Vec<usize> = m.factors().collect();
                    if f.len() != 2 {
                        continue;
                    }
                    let key = (self.steps[f[0]], self.steps[f[1]]);
                    if key.0 + key.1 > bound && seen.insert(key) {
                        coformal_violations.push(BlockViolation {
                            generator: s.generator.clone(),
                            step: s.step,
                            block: key,
                            bound,
                        });
                    }
                }
            }
        }
        StepBoundReport {
            violations,
            coformal_checked: coformal,
            coformal_violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::heisenberg;
    use super::*;
    use crate::gca::Generator;

    #[test]
    fn heisenberg_blocks() {
        let m = heisenberg();
        let a = m.adapted().unwrap();
        assert!(a.is_declared_basis());
        let z = a.index_of("z").unwrap();
        let s = a.split(z);
        assert_eq!(s.step, 2);
        assert_eq!(s.blocks.keys().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        assert_eq!(
            s.delta,
            (&m.var("x") * &m.var("y"))
                .transport(a.model.universe())
                .unwrap()
        );
        assert!(s.d_sim.is_zero());
        assert!(a.delta_violations().is_empty());
        assert!(a.step_bounds().passed());
    }

    #[test]
    fn s2_split() {
        let m = MinimalModel::from_images(
            "s2",
            3,
            vec![Generator::new("x", 2), Generator::new("y", 3)],
            |u| Ok(vec![("y".into(), Element::var(u, "x")?.pow(2))]),
        )
        .unwrap();
        let a = m.adapted().unwrap();
        let s = a.split(a.index_of("y").unwrap());
        assert_eq!(
            s.d_sim,
            m.var("x").pow(2).transport(a.model.universe()).unwrap()
        );
        assert!(s.d_nil.is_zero());
    }

    #[test]
    fn mixed_closed_combination_is_rebased() {
        let m = MinimalModel::from_images(
            "mixed",
            2,
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("z", 1),
                Generator::new("w", 1),
            ],
            |u| {
                let x = Element::var(u, "x")?;
                let y = Element::var(u, "y")?;
                Ok(vec![("z".into(), &x * &y), ("w".into(), &x * &y)])
            },
        )
        .unwrap();
        assert_eq!(m.nilpotency_class(), Some(2));
        let a = m.adapted().unwrap();
        assert_eq!(a.changed_degrees, vec![1]);
        assert_eq!(a.step_generators(1, 1).len(), 3);
        assert_eq!(a.step_generators(1, 2).len(), 1);
        assert!(a.model.validate().is_valid());
        assert!(a.model.adapted().unwrap().is_declared_basis());
        assert!(a.delta_violations().is_empty());
        assert!(a.step_bounds().passed());
    }
}
