use std::collections::BTreeMap;

use crate::gca::span::{preimage, product_span, MonomialBasis};
use crate::gca::Element;
use crate::linalg::Subspace;

use super::{subspace_elements, MinimalModel};

const MAX_STEPS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiltrationKind {
    /// `Cⁿ(J) = d⁻¹(∧^{≥2}V^{<n} ⊕ C¹(J−1) ∧ Cⁿ(J−1))`.
    Cautious,
    /// `W̃ⁿ(J) = d⁻¹(∧^{≥2}V^{<n} ⊕ V¹ ∧ W̃ⁿ(J−1))`.
    Naive,
}

/// The tower of subspaces of `Vⁿ` for one degree, in generator coordinates.
///
/// `levels[J-1]` is the `J`th subspace. The list stops once the tower is
/// stable, and [`DegreeFiltration::level`] repeats the last entry beyond it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeFiltration {
    pub degree: u32,
    /// Universe indices of the generators of this degree.
    pub generators: Vec<usize>,
    pub levels: Vec<Subspace>,
}

impl DegreeFiltration {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// The `J`th subspace, `J ≥ 1`.
    pub fn level(&self, j: u32) -> &Subspace {
        assert!(j >= 1, "filtration index starts at 1");
        let i = (j as usize - 1).min(self.levels.len() - 1);
        &self.levels[i]
    }

    /// `E(1) = C(1)`, `E(J) = C(J) ∩ C(J−1)^⊥`.
    pub fn step(&self, j: u32) -> Subspace {
        if j == 1 {
            self.level(1).clone()
        } else {
            self.level(j).complement_within(self.level(j - 1))
        }
    }

    pub fn exhausted(&self) -> bool {
        self.levels.last().is_some_and(Subspace::is_full)
    }

    /// Smallest `J` with `C(J) = Vⁿ`.
    pub fn length(&self) -> Option<u32> {
        self.levels
            .iter()
            .position(Subspace::is_full)
            .map(|i| i as u32 + 1)
    }

    /// Number of stored levels.
    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationTable {
    pub kind: FiltrationKind,
    pub degrees: BTreeMap<u32, DegreeFiltration>,
}

impl FiltrationTable {
    pub(crate) fn compute(model: &MinimalModel, kind: FiltrationKind) -> Self {
        let mut degrees = BTreeMap::new();
        let first = compute_degree(model, 1, kind, None);
        for n in 2..=model.max_degree() {
            degrees.insert(n, compute_degree(model, n, kind, Some(&first)));
        }
        degrees.insert(1, first);
        Self { kind, degrees }
    }

    pub fn degree(&self, n: u32) -> &DegreeFiltration {
        &self.degrees[&n]
    }

    pub fn exhausted(&self) -> bool {
        self.degrees.values().all(DegreeFiltration::exhausted)
    }

    /// Largest per-degree length, at least 1; `None` if some degree never
    /// exhausts.
    pub fn class(&self) -> Option<u32> {
        self.degrees
            .values()
            .map(DegreeFiltration::length)
            .try_fold(1, |acc, l| l.map(|l| acc.max(l)))
    }

    /// Deepest stored level over all degrees.
    pub fn depth(&self) -> u32 {
        self.degrees
            .values()
            .map(DegreeFiltration::depth)
            .max()
            .unwrap_or(1)
    }

    /// `(n, J)` pairs where the two tables disagree.
    pub fn differences(&self, other: &FiltrationTable) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        let depth = self.depth().max(other.depth());
        for (&n, mine) in &self.degrees {
            let Some(theirs) = other.degrees.get(&n) else {
                out.push((n, 1));
                continue;
            };
            for j in 1..=depth {
                if mine.level(j) != theirs.level(j) {
                    out.push((n, j));
                }
            }
        }
        out
    }
}

fn compute_degree(
    model: &MinimalModel,
    n: u32,
    kind: FiltrationKind,
    first: Option<&DegreeFiltration>,
) -> DegreeFiltration {
    let u = model.universe();
    let gens = model.generator_elements(n);
    let generators = model.generator_indices(n);
    let basis = MonomialBasis::of_degree(u, n + 1);
    let simple =
        basis.coordinate_subspace(|m| m.word_length() >= 2 && m.factors().all(|g| u.degree(g) < n));
    let d = model.differential();
    let ones = model.generator_elements(1);
    let mut levels = vec![preimage(d, &gens, &basis, &simple)];
    while levels.len() < MAX_STEPS && !levels.last().unwrap().is_full() {
        let j = levels.len() as u32 + 1;
        let prev = levels.last().unwrap();
        let right = subspace_elements(prev, &gens);
        let left: Vec<Element> = match (kind, first) {
            (FiltrationKind::Naive, _) => ones.clone(),
            (FiltrationKind::Cautious, Some(f)) => subspace_elements(f.level(j - 1), &ones),
            (FiltrationKind::Cautious, None) => right.clone(),
        };
        let target = simple.sum(&product_span(&left, &right, &basis));
        let next = preimage(d, &gens, &basis, &target);
        // the cautious tower in degree n > 1 can stall while C¹ still grows
        let feeder_settled = match (kind, first) {
            (FiltrationKind::Cautious, Some(f)) => j > f.depth(),
            _ => true,
        };
        if next == *prev && feeder_settled {
            break;
        }
        levels.push(next);
    }
    DegreeFiltration {
        degree: n,
        generators,
        levels,
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::heisenberg;
    use super::*;
    use crate::gca::Generator;

    fn three_step() -> MinimalModel {
        MinimalModel::from_images(
            "three-step",
            3,
            ["x", "y", "z", "w"]
                .iter()
                .map(|s| Generator::new(*s, 1))
                .collect(),
            |u| {
                let v = |s| Element::var(u, s);
                Ok(vec![
                    ("z".into(), &v("x")? * &v("y")?),
                    ("w".into(), &v("x")? * &v("z")?),
                ])
            },
        )
        .unwrap()
    }

    #[test]
    fn heisenberg_cautious() {
        let m = heisenberg();
        let t = m.cautious_filtration();
        let f = t.degree(1);
        assert_eq!(f.level(1), &Subspace::coordinate(3, [0, 1]));
        assert!(f.level(2).is_full());
        assert_eq!(f.step(2), Subspace::coordinate(3, [2]));
        assert_eq!(m.nilpotency_class(), Some(2));
        assert!(t.differences(m.naive_filtration()).is_empty());
    }

    #[test]
    fn three_step_class() {
        let m = three_step();
        assert_eq!(m.nilpotency_class(), Some(3));
        let f = m.cautious_filtration().degree(1);
        // ids sort as w, x, y, z
        assert_eq!(f.level(1), &Subspace::coordinate(4, [1, 2]));
        assert_eq!(f.level(2), &Subspace::coordinate(4, [1, 2, 3]));
        assert!(f.level(3).is_full());
    }

    #[test]
    fn naive_takes_the_whole_action_in_degree_one() {
        let m = three_step();
        let naive = m.naive_filtration().degree(1);
        assert!(naive.level(2).is_full());
        assert_eq!(
            m.naive_filtration().differences(m.cautious_filtration()),
            vec![(1, 2)]
        );
    }

    #[test]
    fn simply_connected_is_one_step() {
        let m = MinimalModel::from_images(
            "s2",
            3,
            vec![Generator::new("x", 2), Generator::new("y", 3)],
            |u| Ok(vec![("y".into(), Element::var(u, "x")?.pow(2))]),
        )
        .unwrap();
        let t = m.cautious_filtration();
        assert!(t.degrees.values().all(|f| f.level(1).is_full()));
        assert_eq!(m.nilpotency_class(), Some(1));
        assert_eq!(
            t,
            &FiltrationTable {
                kind: FiltrationKind::Cautious,
                ..m.naive_filtration().clone()
            }
        );
    }

    #[test]
    fn monotone() {
        let m = three_step();
        let f = m.cautious_filtration().degree(1);
        for j in 1..5 {
            assert!(f.level(j).is_subspace_of(f.level(j + 1)));
        }
    }
}
