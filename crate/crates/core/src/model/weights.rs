use std::collections::BTreeMap;

use crate::gca::Monomial;

use super::{AdaptedModel, MinimalModel, ModelError};

/// `wt(g) = |g|` if `dg = 0`, otherwise the largest summed factor weight over
/// the monomials of `dg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    weights: BTreeMap<String, u32>,
    by_index: Vec<u32>,
}

impl WeightAssignment {
    pub(crate) fn compute(model: &MinimalModel) -> Result<Self, ModelError> {
        let n = model.universe().len();
        let mut memo: Vec<Option<u32>> = vec![None; n];
        let mut on_stack = vec![false; n];
        for g in 0..n {
            visit(model, g, &mut memo, &mut on_stack)?;
        }
        let by_index: Vec<u32> = memo.into_iter().map(Option::unwrap).collect();
        let weights = (0..n)
            .map(|g| (model.id(g).to_string(), by_index[g]))
            .collect();
        Ok(Self { weights, by_index })
    }

    pub fn get(&self, id: &str) -> Option<u32> {
        self.weights.get(id).copied()
    }

    pub fn of_index(&self, g: usize) -> u32 {
        self.by_index[g]
    }

    /// Sum of factor weights, with multiplicity.
    pub fn of_monomial(&self, m: &Monomial) -> u32 {
        m.factors().map(|g| self.by_index[g]).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.weights.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

fn visit(
    model: &MinimalModel,
    g: usize,
    memo: &mut Vec<Option<u32>>,
    on_stack: &mut Vec<bool>,
) -> Result<u32, ModelError> {
    if let Some(w) = memo[g] {
        return Ok(w);
    }
    if on_stack[g] {
        return Err(ModelError::WeightCycle(model.id(g).to_string()));
    }
    on_stack[g] = true;
    let dg = model.d_of(g);
    let w = if dg.is_zero() {
        model.universe().degree(g)
    } else {
        let mut best = 0;
        for (m, _) in dg.terms() {
            let mut s = 0;
            for f in m.factors() {
                s += visit(model, f, memo, on_stack)?;
            }
            best = best.max(s);
        }
        best
    };
    on_stack[g] = false;
    memo[g] = Some(w);
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub bound: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorBounds {
    pub generator: String,
    pub degree: u32,
    pub step: u32,
    pub weight: u32,
    pub checks: Vec<BoundCheck>,
}

impl GeneratorBounds {
    /// The smallest applicable bound and its name.
    pub fn sharpest(&self) -> Option<&BoundCheck> {
        self.checks.iter().min_by_key(|c| c.bound)
    }

    /// `bound − wt` for the sharpest bound.
    pub fn margin(&self) -> Option<i64> {
        self.sharpest().map(|c| c.bound - self.weight as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBoundReport {
    pub class: u32,
    pub coformal: bool,
    pub generators: Vec<GeneratorBounds>,
}

impl WeightBoundReport {
    pub fn passed(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.checks.iter().all(|c| c.holds))
    }

    pub fn failures(&self) -> Vec<(&str, &BoundCheck)> {
        self.generators
            .iter()
            .flat_map(|g| {
                g.checks
                    .iter()
                    .filter(|c| !c.holds)
                    .map(move |c| (g.generator.as_str(), c))
            })
            .collect()
    }
}

/// The weight bounds that apply to a generator of degree `n` in step `j` of a
/// `c`-step model.
pub fn applicable_bounds(n: u32, j: u32, c: u32, coformal: bool) -> Vec<(&'static str, i64)> {
    let (n, j, c) = (n as i64, j as i64, c as i64);
    let mut out = Vec::new();
    if n == 1 {
        out.push(("degree-1", j));
    }
    if n == 2 {
        out.push(("degree-2", j + 2 * c));
    }
    if n >= 2 {
        out.push(("nilpotent", n * (4 * c - 1) - 3 * (2 * c - 1) + (j - 1)));
    }
    if c == 1 {
        out.push(("simple", 2 * n - 1));
    }
    if coformal && n >= 2 {
        out.push(("coformal", (c + 1) * (n - 1) + j - c));
    }
    out
}

impl WeightBoundReport {
    pub(crate) fn compute(adapted: &AdaptedModel) -> Result<Self, ModelError> {
        let m = &adapted.model;
        let wt = m.weights()?;
        let coformal = m.is_coformal();
        let c = adapted.class;
        let generators = (0..m.universe().len())
            .map(|g| {
                let n = m.universe().degree(g);
                let j = adapted.step(g);
                let w = wt.of_index(g);
                GeneratorBounds {
                    generator: m.id(g).to_string(),
                    degree: n,
                    step: j,
                    weight: w,
                    checks: applicable_bounds(n, j, c, coformal)
                        .into_iter()
                        .map(|(name, bound)| BoundCheck {
                            name,
                            bound,
                            holds: w as i64 <= bound,
                        })
                        .collect(),
                }
            })
            .collect();
        Ok(Self {
            class: c,
            coformal,
            generators,
        })
    }
}

/// The optional check that when only simple-component summands reach
/// `wt(ω)`, one of those summands has a factor in some `Eᵐ(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LightFactorReport {
    /// Generators whose weight is reached only by simple-component summands.
    pub applicable: Vec<String>,
    /// The subset with no light factor in any weight-maximizing summand.
    pub counterexamples: Vec<String>,
}

impl LightFactorReport {
    pub(crate) fn compute(adapted: &AdaptedModel) -> Result<Self, ModelError> {
        let m = &adapted.model;
        let wt = m.weights()?;
        let mut out = Self::default();
        for g in 0..m.universe().len() {
            if m.d_of(g).is_zero() {
                continue;
            }
            let split = adapted.split(g);
            let max_of =
                |e: &crate::gca::Element| e.terms().map(|(mon, _)| wt.of_monomial(mon)).max();
            let sim = max_of(&split.d_sim);
            let nil = max_of(&split.d_nil);
            let only_sim = match (sim, nil) {
                (Some(s), Some(n)) => s > n,
                (Some(_), None) => true,
                _ => false,
            };
            if !only_sim {
                continue;
            }
            out.applicable.push(split.generator.clone());
            let w = wt.of_index(g);
            let light = m
                .d_of(g)
                .terms()
                .filter(|(mon, _)| wt.of_monomial(mon) == w)
                .any(|(mon, _)| mon.factors().any(|f| adapted.step(f) == 1));
            if !light {
                out.counterexamples.push(split.generator);
            }
        }
        Ok(out)
    }

    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl MinimalModel {
    /// Weights in the declared basis.
    pub fn weights(&self) -> Result<WeightAssignment, ModelError> {
        WeightAssignment::compute(self)
    }

    /// Weight bounds, checked in the step-adapted basis.
    pub fn weight_bounds(&self) -> Result<WeightBoundReport, ModelError> {
        WeightBoundReport::compute(self.adapted()?)
    }

    pub fn light_factor_check(&self) -> Result<LightFactorReport, ModelError> {
        LightFactorReport::compute(self.adapted()?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::heisenberg;
    use super::*;
    use crate::gca::{Element, Generator};

    fn s2() -> MinimalModel {
        MinimalModel::from_images(
            "s2",
            3,
            vec![Generator::new("x", 2), Generator::new("y", 3)],
            |u| Ok(vec![("y".into(), Element::var(u, "x")?.pow(2))]),
        )
        .unwrap()
    }

    #[test]
    fn s2_weights() {
        let w = s2().weights().unwrap();
        assert_eq!(w.get("x"), Some(2));
        assert_eq!(w.get("y"), Some(4));
        let r = s2().weight_bounds().unwrap();
        let y = r.generators.iter().find(|g| g.generator == "y").unwrap();
        let simple = y.checks.iter().find(|c| c.name == "simple").unwrap();
        assert_eq!(simple.bound, 5);
        assert!(r.passed());
    }

    #[test]
    fn heisenberg_weights() {
        let m = heisenberg();
        let w = m.weights().unwrap();
        assert_eq!(
            (w.get("x"), w.get("y"), w.get("z")),
            (Some(1), Some(1), Some(2))
        );
        let r = m.weight_bounds().unwrap();
        let z = r.generators.iter().find(|g| g.generator == "z").unwrap();
        assert_eq!(z.sharpest().unwrap().name, "degree-1");
        assert_eq!(z.margin(), Some(0));
    }

    #[test]
    fn cycle_detected() {
        // dg contains g itself: not triangular
        let m = MinimalModel::from_images(
            "cyc",
            2,
            vec![Generator::new("a", 1), Generator::new("g", 1)],
            |u| {
                Ok(vec![(
                    "g".into(),
                    &Element::var(u, "a")? * &Element::var(u, "g")?,
                )])
            },
        )
        .unwrap();
        assert_eq!(m.weights(), Err(ModelError::WeightCycle("g".into())));
    }

    #[test]
    fn bound_table() {
        assert_eq!(applicable_bounds(1, 2, 2, true), vec![("degree-1", 2)]);
        assert_eq!(
            applicable_bounds(2, 1, 2, false),
            vec![("degree-2", 5), ("nilpotent", 5)]
        );
        assert_eq!(
            applicable_bounds(3, 1, 1, true),
            vec![("nilpotent", 6), ("simple", 5), ("coformal", 4)]
        );
    }
}
