//! Random minimal models for property tests.
//!
//! Generators are created in universe order. Each new generator `w` of degree
//! `n` gets `dw` drawn from the closed combinations of a random handful of
//! word-length ≥ 2 monomials of degree `n + 1` in earlier generators: the
//! kernel of `d` on their span is computed exactly and a small integer
//! combination of a kernel basis is taken. This makes `d² = 0`, minimality and
//! the nilpotence condition hold by construction.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gca::span::MonomialBasis;
use crate::gca::{Derivation, Element, Generator, Monomial};
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};

use super::MinimalModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleKind {
    /// No degree-1 generators.
    SimplyConnected,
    /// Degree-1 generators are closed and no `t ∧ v` terms appear, so `c = 1`.
    Simple,
    /// Quadratic differentials only.
    Coformal,
    General,
}

impl SampleKind {
    pub const ALL: [SampleKind; 4] = [
        SampleKind::SimplyConnected,
        SampleKind::Simple,
        SampleKind::Coformal,
        SampleKind::General,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleKind::SimplyConnected => "simply-connected",
            SampleKind::Simple => "simple",
            SampleKind::Coformal => "coformal",
            SampleKind::General => "general",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerConfig {
    pub kind: SampleKind,
    pub max_degree: u32,
    /// Generators per degree, at most; index 0 is degree 1. Shorter lists
    /// repeat their last entry.
    pub max_per_degree: Vec<usize>,
    /// Monomials offered to each differential.
    pub max_terms: usize,
}

impl SamplerConfig {
    pub fn new(kind: SampleKind, max_degree: u32) -> Self {
        Self {
            kind,
            max_degree,
            max_per_degree: vec![5, 3, 3, 2, 2],
            max_terms: 10,
        }
    }

    fn cap(&self, n: u32) -> usize {
        let i = (n as usize - 1).min(self.max_per_degree.len() - 1);
        self.max_per_degree[i].min(6)
    }
}

/// One random model.
pub fn sample(rng: &mut impl Rng, cfg: &SamplerConfig, name: &str) -> MinimalModel {
    let mut counts = Vec::new();
    for n in 1..=cfg.max_degree {
        let cap = cfg.cap(n);
        let k = match (cfg.kind, n) {
            (SampleKind::SimplyConnected, 1) => 0,
            (SampleKind::Coformal | SampleKind::General, 1) => rng.gen_range(2.min(cap)..=cap),
            _ => rng.gen_range(0..=cap),
        };
        counts.push(k);
    }
    let gens: Vec<Generator> = counts
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| {
            (1..=k).map(move |j| Generator::new(format!("v{}_{j}", i + 1), i as u32 + 1))
        })
        .collect();
    let u = MinimalModel::universe_for(gens, cfg.max_degree).expect("sampler universe");
    let mut images: Vec<Option<Element>> = vec![None; u.len()];
    for g in 0..u.len() {
        let n = u.degree(g);
        let first_in_degree = g == 0 || u.degree(g - 1) != n;
        let closed = first_in_degree
            || (n == 1 && (g < 2 || cfg.kind == SampleKind::Simple))
            || rng.gen_bool(0.2);
        let image = if closed {
            Element::zero(&u)
        } else {
            let d = Derivation::new(&u, images.clone()).expect("degrees are correct");
            random_closed_image(rng, cfg, &d, g)
        };
        images[g] = Some(image);
    }
    let d = Derivation::new(&u, images).expect("degrees are correct");
    MinimalModel::new(name, cfg.max_degree, d).expect("sampler model")
}

fn random_closed_image(
    rng: &mut impl Rng,
    cfg: &SamplerConfig,
    d: &Derivation,
    g: usize,
) -> Element {
    let u = d.universe();
    let n = u.degree(g);
    let mut allowed: Vec<Monomial> = u
        .monomials_of_degree_where(n + 1, |h| h < g)
        .into_iter()
        .filter(|m| m.word_length() >= 2)
        .filter(|m| match cfg.kind {
            SampleKind::Coformal => m.word_length() == 2,
            SampleKind::Simple | SampleKind::SimplyConnected => {
                m.factors().all(|f| u.degree(f) < n)
            }
            SampleKind::General => true,
        })
        .collect();
    if allowed.is_empty() {
        return Element::zero(u);
    }
    allowed.shuffle(rng);
    allowed.truncate(cfg.max_terms);
    let elems: Vec<Element> = allowed
        .iter()
        .map(|m| Element::monomial(u, m.clone(), rat(1)))
        .collect();
    let target = MonomialBasis::of_degree(u, n + 2);
    let cols: Vec<Vec<Rational>> = elems
        .iter()
        .map(|e| {
            target
                .coords(&d.apply(e).expect("earlier generators are defined"))
                .unwrap()
        })
        .collect();
    let mut m = Matrix::zeros(target.len(), elems.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, q) in col.into_iter().enumerate() {
            m.set(i, j, q);
        }
    }
    let kernel = m.kernel();
    let mut out = Element::zero(u);
    for v in kernel.basis() {
        let k: i64 = rng.gen_range(-2..=2);
        if k == 0 {
            continue;
        }
        for (e, q) in elems.iter().zip(v) {
            out = out + e.scale(&(q * rat(k)));
        }
    }
    out
}

/// `count` models cycling through every [`SampleKind`], reproducible from `seed`.
pub fn corpus(seed: u64, count: usize, max_degree: u32) -> Vec<MinimalModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let kind = SampleKind::ALL[i % SampleKind::ALL.len()];
            let cfg = SamplerConfig::new(kind, max_degree);
            sample(&mut rng, &cfg, &format!("random-{}-{i}", kind.name()))
        })
        .collect()
}

/// A single model from a seed, as named by a recipe line in a model file.
pub fn from_seed(seed: u64, cfg: &SamplerConfig, name: &str) -> MinimalModel {
    sample(&mut ChaCha8Rng::seed_from_u64(seed), cfg, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid() {
        for m in corpus(7, 12, 4) {
            let r = m.validate();
            assert!(r.is_valid(), "{}: {r:?}", m.name());
        }
    }

    #[test]
    fn kinds_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..4 {
            let m = sample(&mut rng, &SamplerConfig::new(SampleKind::Simple, 4), "s");
            assert_eq!(m.nilpotency_class(), Some(1));
            let m = sample(&mut rng, &SamplerConfig::new(SampleKind::Coformal, 4), "c");
            assert!(m.is_coformal());
            let m = sample(
                &mut rng,
                &SamplerConfig::new(SampleKind::SimplyConnected, 4),
                "sc",
            );
            assert!(m.is_simply_connected());
        }
    }

    #[test]
    fn reproducible() {
        let a = corpus(11, 4, 3);
        let b = corpus(11, 4, 3);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.differential(), y.differential());
        }
    }
}
