//! Obstructions to extending a homotopy over an elementary extension
//! `𝒜 → 𝒜⟨Z⟩`, and the extension formulas once they vanish.
//!
//! Homotopies run from `t = 0` to `t = 1`. In the square
//! `f: 𝒜 → B`, `η: B → C`, `g: 𝒜⟨Z⟩ → C`, the homotopy `Φ: 𝒜 → C ⊗ ℚ⟨t,dt⟩`
//! starts at `g|𝒜` and ends at `η ∘ f`.

use crate::gca::span::MonomialBasis;
use crate::gca::{Cdga, Element};
use crate::linalg::Matrix;
use crate::rational::Rational;

use super::{AlgebraicHomotopy, DgaMorphism, HomotopyError, IntervalElement};

/// A cochain `(a, b) ∈ Bᵏ ⊕ Cᵏ⁻¹` of the mapping cone of `η: B → C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeCochain {
    pub b: Element,
    pub c: Element,
}

impl RelativeCochain {
    pub fn is_zero(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    fn sub(&self, other: &RelativeCochain) -> RelativeCochain {
        RelativeCochain {
            b: &self.b - &other.b,
            c: &self.c - &other.c,
        }
    }
}

/// `d(a, b) = (da, η(a) − db)`.
pub fn relative_d(
    eta: &DgaMorphism,
    x: &RelativeCochain,
) -> Result<RelativeCochain, HomotopyError> {
    Ok(RelativeCochain {
        b: eta.source().d(&x.b),
        c: eta.apply(&x.b)? - eta.target().d(&x.c),
    })
}

/// A primitive of the degree-`k` cochain `x`, if one exists within the
/// truncation.
pub fn solve_relative(
    eta: &DgaMorphism,
    x: &RelativeCochain,
    k: u32,
) -> Result<Option<RelativeCochain>, HomotopyError> {
    let (bu, cu) = (eta.source().universe(), eta.target().universe());
    let rows_b = MonomialBasis::of_degree(bu, k);
    let rows_c = match k.checked_sub(1) {
        Some(j) => MonomialBasis::of_degree(cu, j),
        None => MonomialBasis::new(cu, Vec::new()),
    };
    let cols_b = match k.checked_sub(1) {
        Some(j) => MonomialBasis::of_degree(bu, j),
        None => MonomialBasis::new(bu, Vec::new()),
    };
    let cols_c = match k.checked_sub(2) {
        Some(j) => MonomialBasis::of_degree(cu, j),
        None => MonomialBasis::new(cu, Vec::new()),
    };
    let (Some(rhs_b), Some(rhs_c)) = (rows_b.coords(&x.b), rows_c.coords(&x.c)) else {
        return Ok(None);
    };
    let nr = rows_b.len() + rows_c.len();
    let mut m = Matrix::zeros(nr, cols_b.len() + cols_c.len());
    let mut put = |col: usize, top: &Element, bottom: &Element| {
        let t = rows_b.coords(top).expect("degree k in B");
        let s = rows_c.coords(bottom).expect("degree k-1 in C");
        for (i, q) in t.into_iter().chain(s).enumerate() {
            m.set(i, col, q);
        }
    };
    for (j, mono) in cols_b.monomials().iter().enumerate() {
        let e = Element::monomial(bu, mono.clone(), Rational::from_integer(1.into()));
        put(j, &eta.source().d(&e), &eta.apply(&e)?);
    }
    for (j, mono) in cols_c.monomials().iter().enumerate() {
        let e = Element::monomial(cu, mono.clone(), Rational::from_integer(1.into()));
        put(cols_b.len() + j, &Element::zero(bu), &-eta.target().d(&e));
    }
    let rhs: Vec<Rational> = rhs_b.into_iter().chain(rhs_c).collect();
    Ok(m.solve(&rhs).map(|v| {
        let (vb, vc) = v.split_at(cols_b.len());
        RelativeCochain {
            b: cols_b.element(vb),
            c: cols_c.element(vc),
        }
    }))
}

/// Data of the square to be filled over the slot `Z`.
#[derive(Debug, Clone, Copy)]
pub struct ExtensionData<'a> {
    /// `f: 𝒜 → B`; its assigned generators define `𝒜`.
    pub f: &'a DgaMorphism,
    /// `η: B → C`, total.
    pub eta: &'a DgaMorphism,
    /// `g: 𝒜⟨Z⟩ → C`.
    pub g: &'a DgaMorphism,
    /// `Φ: 𝒜 → C ⊗ ℚ⟨t,dt⟩` from `g|𝒜` to `η ∘ f`.
    pub phi: &'a AlgebraicHomotopy,
    /// Generators of `Z`, all of one degree.
    pub slot: &'a [usize],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotObstruction {
    pub generator: String,
    pub index: usize,
    pub cochain: RelativeCochain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub f: DgaMorphism,
    pub phi: AlgebraicHomotopy,
}

fn id_of(c: &Cdga, g: usize) -> String {
    c.universe().generator(g).id.clone()
}

impl ExtensionData<'_> {
    fn source(&self) -> &Cdga {
        self.g.source()
    }

    /// Generators of `𝒜`.
    pub fn base(&self) -> Vec<usize> {
        self.f.defined_generators()
    }

    /// Degree of the slot.
    pub fn degree(&self) -> Option<u32> {
        self.slot
            .first()
            .map(|&z| self.source().universe().degree(z))
    }

    fn check(&self) -> Result<(), HomotopyError> {
        let src = self.source();
        let base = self.base();
        let n = self.degree();
        for &z in self.slot {
            let id = id_of(src, z);
            if base.contains(&z) || Some(src.universe().degree(z)) != n {
                return Err(HomotopyError::BadSlot(id));
            }
            if !self.g.is_defined(z) {
                return Err(HomotopyError::MissingImage(id));
            }
            let dz = src.d(&Element::generator(src.universe(), z));
            if dz
                .terms()
                .any(|(m, _)| m.factors().any(|h| !base.contains(&h)))
            {
                return Err(HomotopyError::BadSlot(id));
            }
        }
        let start = self.phi.at_0();
        let end = self.phi.at_1();
        let eta_f = self.f.then(self.eta)?;
        for &a in &base {
            if !self.phi.is_defined(a) || !self.g.is_defined(a) {
                return Err(HomotopyError::MissingImage(id_of(src, a)));
            }
            if start.image(a) != self.g.image(a) {
                return Err(HomotopyError::EndpointMismatch {
                    generator: id_of(src, a),
                    endpoint: 0,
                });
            }
            if end.image(a) != eta_f.image(a) {
                return Err(HomotopyError::EndpointMismatch {
                    generator: id_of(src, a),
                    endpoint: 1,
                });
            }
        }
        Ok(())
    }

    /// `O(z) = (f(dz), g(z) + ∫₀¹Φ(dz))` for each slot generator.
    pub fn obstruction_cochain(&self) -> Result<Vec<SlotObstruction>, HomotopyError> {
        self.check()?;
        let src = self.source();
        self.slot
            .iter()
            .map(|&z| {
                let dz = src.d(&Element::generator(src.universe(), z));
                let cochain = RelativeCochain {
                    b: self.f.apply(&dz)?,
                    c: self.g.image(z).unwrap() + &self.phi.apply(&dz)?.integrate_0_1(),
                };
                Ok(SlotObstruction {
                    generator: id_of(src, z),
                    index: z,
                    cochain,
                })
            })
            .collect()
    }

    /// `d(O(z))` for each slot generator; all zero for a valid square.
    pub fn cocycle_defects(&self) -> Result<Vec<RelativeCochain>, HomotopyError> {
        self.obstruction_cochain()?
            .iter()
            .map(|o| relative_d(self.eta, &o.cochain))
            .collect()
    }

    /// `f̃(z) = b(z)`, `Φ̃(z) = g(z) + d(c(z) ⊗ t) + ∫₀ᵗΦ(dz)`, once
    /// `d(b(z), c(z)) = O(z)` has been confirmed.
    pub fn extend_homotopy(
        &self,
        b: &[Element],
        c: &[Element],
    ) -> Result<Extension, HomotopyError> {
        assert_eq!(
            (b.len(), c.len()),
            (self.slot.len(), self.slot.len()),
            "one (b, c) per slot generator"
        );
        let obstructions = self.obstruction_cochain()?;
        let src = self.source();
        let dc = self.eta.target().differential();
        let mut f = self.f.clone();
        let mut phi = self.phi.clone();
        for ((o, bz), cz) in obstructions.iter().zip(b).zip(c) {
            let candidate = RelativeCochain {
                b: bz.clone(),
                c: cz.clone(),
            };
            let residual = relative_d(self.eta, &candidate)?.sub(&o.cochain);
            if !residual.is_zero() {
                return Err(HomotopyError::NotExact {
                    generator: o.generator.clone(),
                    residual_b: residual.b,
                    residual_c: residual.c,
                });
            }
            let z = o.index;
            let dz = src.d(&Element::generator(src.universe(), z));
            let image = &(&IntervalElement::constant(self.g.image(z).unwrap())
                + &IntervalElement::poly_term(cz, 1).d(dc))
                + &self.phi.apply(&dz)?.integrate_0_t();
            f = f.with_image(z, bz.clone())?;
            phi = phi.with_image(z, image)?;
        }
        let out = Extension { f, phi };
        self.check_extension(&out)?;
        Ok(out)
    }

    /// Endpoints `Φ̃|₀ = g`, `Φ̃|₁ = η ∘ f̃` and commutation with `d` on `Z`.
    pub fn check_extension(&self, ext: &Extension) -> Result<(), HomotopyError> {
        let src = self.source();
        let mut on = self.base();
        on.extend_from_slice(self.slot);
        let start = ext.phi.at_0();
        let end = ext.phi.at_1();
        let eta_f = ext.f.then(self.eta)?;
        for &g in &on {
            if start.image(g) != self.g.image(g) {
                return Err(HomotopyError::EndpointMismatch {
                    generator: id_of(src, g),
                    endpoint: 0,
                });
            }
            if end.image(g) != eta_f.image(g) {
                return Err(HomotopyError::EndpointMismatch {
                    generator: id_of(src, g),
                    endpoint: 1,
                });
            }
        }
        let slot_only = |ids: Vec<String>| {
            ids.into_iter()
                .find(|id| self.slot.iter().any(|&z| id_of(src, z) == *id))
        };
        if let Some(id) = slot_only(
            ext.f
                .commutation_defects()
                .into_iter()
                .map(|(id, _)| id)
                .collect(),
        ) {
            return Err(HomotopyError::NotCommuting(id));
        }
        if let Some(id) = slot_only(
            ext.phi
                .commutation_defects()
                .into_iter()
                .map(|(id, _)| id)
                .collect(),
        ) {
            return Err(HomotopyError::NotCommuting(id));
        }
        Ok(())
    }

    /// Solves `d(b, c) = O` by linear algebra and extends; `None` when the
    /// obstruction class is nonzero.
    pub fn find_extension(&self) -> Result<Option<Extension>, HomotopyError> {
        let Some(n) = self.degree() else {
            return Ok(Some(Extension {
                f: self.f.clone(),
                phi: self.phi.clone(),
            }));
        };
        let mut bs = Vec::new();
        let mut cs = Vec::new();
        for o in self.obstruction_cochain()? {
            match solve_relative(self.eta, &o.cochain, n + 1)? {
                Some(p) => {
                    bs.push(p.b);
                    cs.push(p.c);
                }
                None => return Ok(None),
            }
        }
        self.extend_homotopy(&bs, &cs).map(Some)
    }
}

/// Data of the relative problem: `φ, ψ: 𝒜⟨Z⟩ → B` joined over `𝒜` by `Φ`,
/// a surjection `μ: B → C`, and a homotopy `χ` from `μφ` to `μψ` extending
/// `μ ∘ Φ`.
#[derive(Debug, Clone, Copy)]
pub struct RelativeData<'a> {
    pub phi: &'a DgaMorphism,
    pub psi: &'a DgaMorphism,
    /// Assigned generators define `𝒜`.
    pub homotopy: &'a AlgebraicHomotopy,
    pub mu: &'a DgaMorphism,
    pub chi: &'a AlgebraicHomotopy,
    pub slot: &'a [usize],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeObstruction {
    pub generator: String,
    /// `(ψ(z) − φ(z) − ∫₀¹Φ(dz), ∫₀¹χ(z))`.
    pub cochain: RelativeCochain,
    /// Whether the class vanishes in `Hⁿ(μ)` within the truncation.
    pub vanishes: bool,
}

/// Lowest degree where `μ` misses part of the target, up to `top`.
pub fn surjectivity_gap(mu: &DgaMorphism, top: u32) -> Result<Option<u32>, HomotopyError> {
    let (bu, cu) = (mu.source().universe(), mu.target().universe());
    for k in 0..=top {
        let target = MonomialBasis::of_degree(cu, k);
        if target.is_empty() {
            continue;
        }
        let images = MonomialBasis::of_degree(bu, k)
            .monomials()
            .iter()
            .map(|m| {
                mu.apply(&Element::monomial(
                    bu,
                    m.clone(),
                    Rational::from_integer(1.into()),
                ))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !target.span(&images).is_full() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

impl RelativeData<'_> {
    fn check(&self) -> Result<u32, HomotopyError> {
        let src = self.phi.source();
        let n = self
            .slot
            .first()
            .map(|&z| src.universe().degree(z))
            .ok_or_else(|| HomotopyError::BadSlot("empty slot".into()))?;
        let top = self
            .mu
            .target()
            .universe()
            .truncation()
            .unwrap_or(n + 1)
            .max(n + 1);
        if let Some(k) = surjectivity_gap(self.mu, top)? {
            return Err(HomotopyError::NotSurjective(k));
        }
        let base = self.homotopy.defined_generators();
        let (start, end) = (self.homotopy.at_0(), self.homotopy.at_1());
        let mismatch = |g: usize, endpoint| HomotopyError::EndpointMismatch {
            generator: id_of(src, g),
            endpoint,
        };
        for &a in &base {
            if start.image(a) != self.phi.image(a) {
                return Err(mismatch(a, 0));
            }
            if end.image(a) != self.psi.image(a) {
                return Err(mismatch(a, 1));
            }
            let pushed = push_forward(self.mu, self.homotopy.image(a).unwrap())?;
            if self.chi.image(a) != Some(&pushed) {
                return Err(HomotopyError::NotAnExtension(id_of(src, a)));
            }
        }
        let (mu_phi, mu_psi) = (self.phi.then(self.mu)?, self.psi.then(self.mu)?);
        let (cs, ce) = (self.chi.at_0(), self.chi.at_1());
        for &z in self.slot {
            if base.contains(&z) || src.universe().degree(z) != n {
                return Err(HomotopyError::BadSlot(id_of(src, z)));
            }
            if cs.image(z) != mu_phi.image(z) {
                return Err(mismatch(z, 0));
            }
            if ce.image(z) != mu_psi.image(z) {
                return Err(mismatch(z, 1));
            }
        }
        Ok(n)
    }

    pub fn relative_obstruction(&self) -> Result<Vec<RelativeObstruction>, HomotopyError> {
        let n = self.check()?;
        let src = self.phi.source();
        self.slot
            .iter()
            .map(|&z| {
                let zel = Element::generator(src.universe(), z);
                let dz = src.d(&zel);
                let cochain = RelativeCochain {
                    b: self.psi.apply(&zel)?
                        - self.phi.apply(&zel)?
                        - self.homotopy.apply(&dz)?.integrate_0_1(),
                    c: self
                        .chi
                        .image(z)
                        .ok_or_else(|| HomotopyError::MissingImage(id_of(src, z)))?
                        .integrate_0_1(),
                };
                let vanishes = solve_relative(self.mu, &cochain, n)?.is_some();
                Ok(RelativeObstruction {
                    generator: id_of(src, z),
                    cochain,
                    vanishes,
                })
            })
            .collect()
    }
}

/// `μ` applied to the coefficients of an interval element.
pub fn push_forward(
    mu: &DgaMorphism,
    e: &IntervalElement,
) -> Result<IntervalElement, HomotopyError> {
    let mut out = IntervalElement::zero(mu.target().universe());
    for (&i, b) in e.poly_part() {
        out = &out + &IntervalElement::poly_term(&mu.apply(b)?, i);
    }
    for (&i, b) in e.dt_part() {
        out = &out + &IntervalElement::dt_term(&mu.apply(b)?, i);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::{Derivation, Generator, Universe};
    use crate::rational::rat;

    fn free(gens: Vec<Generator>) -> Cdga {
        let u = Universe::new(gens, Some(6)).unwrap();
        Cdga::new(Derivation::zero(&u)).unwrap()
    }

    #[test]
    fn unassigned_slot_over_ground() {
        // 𝒜 = ℚ, Z = ⟨z⟩ of degree 2, B = C = ∧(u), g(z) = u
        let src = free(vec![Generator::new("z", 2)]);
        let b = free(vec![Generator::new("u", 2)]);
        let u = b.var("u");
        let f = DgaMorphism::new(&src, &b, vec![None]).unwrap();
        let eta = DgaMorphism::identity(&b);
        let g = DgaMorphism::new(&src, &b, vec![Some(u.clone())]).unwrap();
        let phi = AlgebraicHomotopy::empty(&src, &b);
        let data = ExtensionData {
            f: &f,
            eta: &eta,
            g: &g,
            phi: &phi,
            slot: &[0],
        };
        let o = data.obstruction_cochain().unwrap();
        assert_eq!(
            o[0].cochain,
            RelativeCochain {
                b: Element::zero(b.universe()),
                c: u.clone()
            }
        );
        assert!(data
            .cocycle_defects()
            .unwrap()
            .iter()
            .all(RelativeCochain::is_zero));
        // b(z) = u solves it: d(u, 0) = (0, u)
        let ext = data.find_extension().unwrap().unwrap();
        assert_eq!(ext.f.image(0), Some(&u));
        assert_eq!(ext.phi.image(0), Some(&IntervalElement::constant(&u)));
    }

    #[test]
    fn closed_slot_with_c_correction() {
        // dz = 0, b(z) = 0, dc = −g(z): g(z) = x·y exact as d(−w)... use C with dw = xy
        let src = free(vec![Generator::new("z", 2)]);
        let c = crate::model::MinimalModel::from_images(
            "c",
            3,
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("w", 1),
            ],
            |u| {
                Ok(vec![(
                    "w".into(),
                    &Element::var(u, "x")? * &Element::var(u, "y")?,
                )])
            },
        )
        .unwrap();
        let c = c.cdga().clone();
        let gz = &c.var("x") * &c.var("y");
        let f = DgaMorphism::new(&src, &c, vec![None]).unwrap();
        let eta = DgaMorphism::identity(&c);
        let g = DgaMorphism::new(&src, &c, vec![Some(gz.clone())]).unwrap();
        let phi = AlgebraicHomotopy::empty(&src, &c);
        let data = ExtensionData {
            f: &f,
            eta: &eta,
            g: &g,
            phi: &phi,
            slot: &[0],
        };
        let cz = -c.var("w");
        let ext = data
            .extend_homotopy(&[Element::zero(c.universe())], std::slice::from_ref(&cz))
            .unwrap();
        let expected = &IntervalElement::constant(&gz)
            + &IntervalElement::poly_term(&cz, 1).d(c.differential());
        assert_eq!(ext.phi.image(0), Some(&expected));
        assert!(ext.f.image(0).unwrap().is_zero());
    }

    #[test]
    fn wrong_b_reports_residual() {
        let m = crate::model::tests::heisenberg();
        let c = m.cdga();
        let (x, y, z) = (0, 1, 2);
        let id = DgaMorphism::identity(c);
        let f = id.restrict(&[x, y]);
        let phi = AlgebraicHomotopy::constant(&f);
        let data = ExtensionData {
            f: &f,
            eta: &id,
            g: &id,
            phi: &phi,
            slot: &[z],
        };
        let zero = Element::zero(c.universe());
        let err = data
            .extend_homotopy(std::slice::from_ref(&zero), std::slice::from_ref(&zero))
            .unwrap_err();
        match err {
            HomotopyError::NotExact { residual_b, .. } => {
                // db − f(dz) with b = 0
                assert_eq!(residual_b, -(&c.var("x") * &c.var("y")));
            }
            e => panic!("{e}"),
        }
        let ext = data
            .extend_homotopy(&[c.var("z")], &[Element::zero(c.universe())])
            .unwrap();
        assert_eq!(ext.f, id);
    }

    #[test]
    fn endpoint_mismatch() {
        let m = crate::model::tests::heisenberg();
        let c = m.cdga();
        let id = DgaMorphism::identity(c);
        let f = id.restrict(&[0, 1]);
        let twice = DgaMorphism::new(
            c,
            c,
            vec![Some(c.var("x").scale(&rat(2))), Some(c.var("y")), None],
        )
        .unwrap();
        let phi = AlgebraicHomotopy::constant(&twice);
        let data = ExtensionData {
            f: &f,
            eta: &id,
            g: &id,
            phi: &phi,
            slot: &[2],
        };
        assert!(matches!(
            data.obstruction_cochain(),
            Err(HomotopyError::EndpointMismatch { endpoint: 0, .. })
        ));
    }

    fn worked_example() -> (Cdga, Cdga, Cdga, DgaMorphism, DgaMorphism, DgaMorphism) {
        let src = free(vec![Generator::new("x", 2)]);
        let b = free(vec![Generator::new("u", 2)]);
        let ground = Cdga::ground();
        let u = b.var("u");
        let phi = DgaMorphism::new(&src, &b, vec![Some(u.clone())]).unwrap();
        let psi = DgaMorphism::new(&src, &b, vec![Some(u.scale(&rat(2)))]).unwrap();
        let mu = DgaMorphism::zero(&b, &ground);
        (src, b, ground, phi, psi, mu)
    }

    #[test]
    fn relative_worked_example_is_nonzero() {
        let (src, b, ground, phi, psi, mu) = worked_example();
        let hom = AlgebraicHomotopy::empty(&src, &b);
        let chi = AlgebraicHomotopy::new(
            &src,
            &ground,
            vec![Some(IntervalElement::zero(ground.universe()))],
        )
        .unwrap();
        let data = RelativeData {
            phi: &phi,
            psi: &psi,
            homotopy: &hom,
            mu: &mu,
            chi: &chi,
            slot: &[0],
        };
        let o = data.relative_obstruction().unwrap();
        assert_eq!(o[0].cochain.b, b.var("u"));
        assert!(o[0].cochain.c.is_zero());
        assert!(!o[0].vanishes);
        assert!(relative_d(&mu, &o[0].cochain).unwrap().is_zero());
    }

    #[test]
    fn relative_equal_maps_vanish() {
        let (src, b, ground, phi, _, mu) = worked_example();
        let hom = AlgebraicHomotopy::empty(&src, &b);
        let chi = AlgebraicHomotopy::new(
            &src,
            &ground,
            vec![Some(IntervalElement::zero(ground.universe()))],
        )
        .unwrap();
        let data = RelativeData {
            phi: &phi,
            psi: &phi,
            homotopy: &hom,
            mu: &mu,
            chi: &chi,
            slot: &[0],
        };
        let o = data.relative_obstruction().unwrap();
        assert!(o[0].cochain.is_zero() && o[0].vanishes);
    }

    #[test]
    fn relative_identity_mu_matches_absolute() {
        let (src, b, _, phi, _, _) = worked_example();
        let mu = DgaMorphism::identity(&b);
        let hom = AlgebraicHomotopy::empty(&src, &b);
        let chi = AlgebraicHomotopy::constant(&phi);
        let data = RelativeData {
            phi: &phi,
            psi: &phi,
            homotopy: &hom,
            mu: &mu,
            chi: &chi,
            slot: &[0],
        };
        let o = data.relative_obstruction().unwrap();
        assert!(o[0].cochain.is_zero() && o[0].vanishes);
    }

    #[test]
    fn non_surjective_mu_rejected() {
        let (src, b, _, phi, psi, _) = worked_example();
        let bigger = free(vec![Generator::new("u", 2), Generator::new("v", 2)]);
        let mu = DgaMorphism::new(&b, &bigger, vec![Some(bigger.var("u"))]).unwrap();
        let hom = AlgebraicHomotopy::empty(&src, &b);
        let chi = AlgebraicHomotopy::empty(&src, &bigger);
        let data = RelativeData {
            phi: &phi,
            psi: &psi,
            homotopy: &hom,
            mu: &mu,
            chi: &chi,
            slot: &[0],
        };
        assert_eq!(
            data.relative_obstruction().unwrap_err(),
            HomotopyError::NotSurjective(2)
        );
    }
}
