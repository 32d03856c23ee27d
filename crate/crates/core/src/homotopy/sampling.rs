//! Random interval elements, homotopies and extension problems.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gca::{Cdga, Element, Universe};
use crate::rational::rat;

use super::interval::fundamental_theorem_residuals;
use super::{AlgebraicHomotopy, DgaMorphism, ExtensionData, HomotopyError, IntervalElement};
use std::sync::Arc;

/// A small integer combination of up to `terms` monomials of degree `k`.
pub fn random_element(rng: &mut impl Rng, u: &Arc<Universe>, k: u32, terms: usize) -> Element {
    let monos = u.monomials_of_degree(k);
    let mut out = Element::zero(u);
    for _ in 0..terms {
        if let Some(m) = monos.choose(rng) {
            let q: i64 = rng.gen_range(-2..=2);
            out = out + Element::monomial(u, m.clone(), rat(q));
        }
    }
    out
}

/// Up to four terms `b tⁱ` or `b tⁱ dt` with random `b` of any degree up to
/// the truncation.
pub fn random_interval_element(rng: &mut impl Rng, u: &Arc<Universe>) -> IntervalElement {
    let top = u.truncation().unwrap_or(4);
    let mut out = IntervalElement::zero(u);
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(0..=top);
        let b = random_element(rng, u, k, 2);
        let i = rng.gen_range(0..=3);
        let term = if rng.gen_bool(0.5) {
            IntervalElement::poly_term(&b, i)
        } else {
            IntervalElement::dt_term(&b, i)
        };
        out = &out + &term;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FundamentalTheoremReport {
    pub samples: usize,
    /// Display forms of the elements where an identity failed.
    pub failures: Vec<String>,
}

impl FundamentalTheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Both integration identities on `samples` random elements over `cdga`.
pub fn check_fundamental_theorems(
    rng: &mut impl Rng,
    cdga: &Cdga,
    samples: usize,
) -> FundamentalTheoremReport {
    let mut report = FundamentalTheoremReport {
        samples,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let e = random_interval_element(rng, cdga.universe());
        let (r1, r2) = fundamental_theorem_residuals(&e, cdga.differential());
        if !r1.is_zero() || !r2.is_zero() {
            report.failures.push(e.to_string());
        }
    }
    report
}

/// Generators ordered so that each `dg` only involves earlier ones.
pub fn dependency_order(cdga: &Cdga) -> Option<Vec<usize>> {
    let u = cdga.universe();
    let deps: Vec<Vec<usize>> = (0..u.len())
        .map(|g| {
            let mut v: Vec<usize> = cdga
                .d(&Element::generator(u, g))
                .terms()
                .flat_map(|(m, _)| m.factors().collect::<Vec<_>>())
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let mut done = vec![false; u.len()];
    let mut order = Vec::new();
    while order.len() < u.len() {
        let next = (0..u.len()).find(|&g| !done[g] && deps[g].iter().all(|&h| done[h]))?;
        done[next] = true;
        order.push(next);
    }
    Some(order)
}

/// `Φ(a) = G(a) + d(c_a ⊗ t) + ∫₀ᵗΦ(da)` with random `c_a`, built along the
/// dependency order. Starts at `G`.
pub fn random_homotopy(
    rng: &mut impl Rng,
    start: &DgaMorphism,
) -> Result<AlgebraicHomotopy, HomotopyError> {
    let src = start.source();
    let tgt = start.target();
    let order = dependency_order(src).ok_or(HomotopyError::NotTriangular)?;
    let mut h = AlgebraicHomotopy::empty(src, tgt);
    for g in order {
        let a = Element::generator(src.universe(), g);
        let ga = start.apply(&a)?;
        let k = src.universe().degree(g) - 1;
        let c = random_element(rng, tgt.universe(), k, 2);
        let image = &(&IntervalElement::constant(&ga)
            + &IntervalElement::poly_term(&c, 1).d(tgt.differential()))
            + &h.apply(&src.d(&a))?.integrate_0_t();
        h = h.with_image(g, image)?;
    }
    Ok(h)
}

/// Generators that no other differential mentions; removing one leaves a
/// sub-algebra closed under `d`.
pub fn top_generators(cdga: &Cdga) -> Vec<usize> {
    let u = cdga.universe();
    let images: Vec<Element> = (0..u.len())
        .map(|g| cdga.d(&Element::generator(u, g)))
        .collect();
    (0..u.len())
        .filter(|&z| {
            images
                .iter()
                .all(|e| e.terms().all(|(m, _)| !m.contains(z)))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTrial {
    pub slot: String,
    /// `d(O(z)) = 0`.
    pub cocycle: bool,
    /// The known primitive `(Φ|₁(z), ∫₀¹Φ(z))` is accepted and the extension
    /// restricts to the right endpoints.
    pub known_solution: bool,
    /// The linear solver found a primitive and the extension checks out.
    pub solved: bool,
}

impl ExtensionTrial {
    pub fn passed(&self) -> bool {
        self.cocycle && self.known_solution && self.solved
    }
}

/// One random extension problem over `cdga` with `B = C`, `η = id`.
///
/// A random homotopy `Ψ` from the identity gives `g = Ψ|₁`; a second random
/// homotopy `Φ` from `g` gives `f = Φ|₁`. Dropping a top generator `z`
/// restricts `f` and `Φ` to `𝒜`, and `(Φ|₁(z), ∫₀¹Φ(z))` is a primitive of
/// the obstruction. `None` when the model has no usable top generator.
pub fn extension_trial(
    rng: &mut impl Rng,
    cdga: &Cdga,
) -> Result<Option<ExtensionTrial>, HomotopyError> {
    let tops = top_generators(cdga);
    let Some(&z) = tops.choose(rng) else {
        return Ok(None);
    };
    let id = DgaMorphism::identity(cdga);
    let g = random_homotopy(rng, &id)?.at_1();
    let full = random_homotopy(rng, &g)?;
    let base: Vec<usize> = (0..cdga.universe().len()).filter(|&h| h != z).collect();
    let f = full.at_1().restrict(&base);
    let phi = full.restrict(&base);
    let slot = [z];
    let data = ExtensionData {
        f: &f,
        eta: &id,
        g: &g,
        phi: &phi,
        slot: &slot,
    };
    let cocycle = data.cocycle_defects()?.iter().all(|r| r.is_zero());
    let known = data.extend_homotopy(
        &[full.at_1().image(z).unwrap().clone()],
        &[full.image(z).unwrap().integrate_0_1()],
    );
    let known_solution = match known {
        Ok(ext) => ext.phi.at_0().images() == g.images() && ext.f.then(&id)? == ext.phi.at_1(),
        Err(_) => false,
    };
    let solved = matches!(data.find_extension(), Ok(Some(_)));
    Ok(Some(ExtensionTrial {
        slot: cdga.universe().generator(z).id.clone(),
        cocycle,
        known_solution,
        solved,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn heisenberg_fundamental_theorems() {
        let m = crate::model::tests::heisenberg();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let r = check_fundamental_theorems(&mut rng, m.cdga(), 200);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn random_homotopies_commute() {
        let m = crate::model::tests::heisenberg();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let id = DgaMorphism::identity(m.cdga());
        for _ in 0..10 {
            let h = random_homotopy(&mut rng, &id).unwrap();
            assert!(h.commutes());
            assert_eq!(h.at_0(), id);
            assert!(h.at_1().commutes());
        }
    }

    #[test]
    fn heisenberg_extension() {
        let m = crate::model::tests::heisenberg();
        assert_eq!(top_generators(m.cdga()), vec![2]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let t = extension_trial(&mut rng, m.cdga()).unwrap().unwrap();
            assert_eq!(t.slot, "z");
            assert!(t.passed(), "{t:?}");
        }
    }

    #[test]
    fn random_models_extend() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for m in crate::model::sampler::corpus(3, 8, 3) {
            if let Some(t) = extension_trial(&mut rng, m.cdga()).unwrap() {
                assert!(t.passed(), "{}: {t:?}", m.name());
            }
        }
    }
}
