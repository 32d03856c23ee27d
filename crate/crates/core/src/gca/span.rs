//! Coordinates of homogeneous elements in monomial bases, and the linear
//! algebra built on them (preimages under `d`, spans of products).

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{Derivation, Element, Monomial, Universe};
use crate::linalg::{Matrix, Subspace};
use crate::rational::Rational;

/// An ordered list of monomials used as coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    universe: Arc<Universe>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(universe: &Arc<Universe>, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Self {
            universe: universe.clone(),
            monomials,
            index,
        }
    }

    /// Every monomial of degree `k`.
    pub fn of_degree(universe: &Arc<Universe>, k: u32) -> Self {
        Self::new(universe, universe.monomials_of_degree(k))
    }

    /// The generators of degree `n`, as length-one monomials.
    pub fn generators_of_degree(universe: &Arc<Universe>, n: u32) -> Self {
        Self::new(
            universe,
            universe
                .indices_of_degree(n)
                .into_iter()
                .map(Monomial::generator)
                .collect(),
        )
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `e`, or `None` if it has a term outside the basis.
    pub fn coords(&self, e: &Element) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (m, q) in e.terms() {
            v[self.position(m)?] = q.clone();
        }
        Some(v)
    }

    pub fn element(&self, v: &[Rational]) -> Element {
        Element::from_terms(
            &self.universe,
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, q)| !q.is_zero())
                .map(|(m, q)| (m.clone(), q.clone())),
        )
    }

    /// Positions whose monomial satisfies `keep`, as a coordinate subspace.
    pub fn coordinate_subspace(&self, keep: impl Fn(&Monomial) -> bool) -> Subspace {
        Subspace::coordinate(
            self.len(),
            self.monomials
                .iter()
                .enumerate()
                .filter(|(_, m)| keep(m))
                .map(|(i, _)| i),
        )
    }

    /// Span of the given elements, which must lie in this basis.
    pub fn span(&self, elements: &[Element]) -> Subspace {
        Subspace::span(
            self.len(),
            elements
                .iter()
                .map(|e| self.coords(e).expect("element outside the monomial basis"))
                .collect(),
        )
    }
}

/// Matrix whose column `i` is the coordinate vector of `d(source[i])`.
pub fn differential_matrix(d: &Derivation, source: &[Element], target: &MonomialBasis) -> Matrix {
    let cols: Vec<Vec<Rational>> = source
        .iter()
        .map(|s| {
            let ds = d.apply(s).expect("derivation defined on source");
            target.coords(&ds).expect("image outside target basis")
        })
        .collect();
    let mut m = Matrix::zeros(target.len(), source.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, q) in col.into_iter().enumerate() {
            if !q.is_zero() {
                m.set(i, j, q);
            }
        }
    }
    m
}

/// `{ c : d(Σ c_i source_i) ∈ target }`, in coordinates over `source`.
pub fn preimage(
    d: &Derivation,
    source: &[Element],
    basis: &MonomialBasis,
    target: &Subspace,
) -> Subspace {
    assert_eq!(target.ambient_dim(), basis.len());
    let dm = differential_matrix(d, source, basis);
    let ann = target.orthogonal_complement();
    if ann.is_zero() {
        return Subspace::full(source.len());
    }
    let p = Matrix::from_rows(basis.len(), ann.basis().to_vec());
    p.mul(&dm).kernel()
}

/// All products `a ∧ b` with `a ∈ left`, `b ∈ right`, as a span in `basis`.
pub fn product_span(left: &[Element], right: &[Element], basis: &MonomialBasis) -> Subspace {
    let mut prods = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            prods.push(a * b);
        }
    }
    basis.span(&prods)
}

/// `Σ v_i e_i`.
pub fn combination(elements: &[Element], v: &[Rational], universe: &Arc<Universe>) -> Element {
    let mut out = Element::zero(universe);
    for (e, q) in elements.iter().zip(v) {
        out.add_scaled(e, q);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::Generator;
    use crate::rational::rat;

    fn heisenberg() -> (Arc<Universe>, Derivation) {
        let u = Universe::new(
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("z", 1),
            ],
            Some(3),
        )
        .unwrap();
        let x = Element::var(&u, "x").unwrap();
        let y = Element::var(&u, "y").unwrap();
        let z0 = Element::zero(&u);
        (
            u.clone(),
            Derivation::new(&u, vec![Some(z0.clone()), Some(z0), Some(&x * &y)]).unwrap(),
        )
    }

    #[test]
    fn heisenberg_first_step() {
        let (u, d) = heisenberg();
        let gens: Vec<Element> = (0..3).map(|i| Element::generator(&u, i)).collect();
        let b2 = MonomialBasis::of_degree(&u, 2);
        let c1 = preimage(&d, &gens, &b2, &Subspace::zero(b2.len()));
        assert_eq!(c1, Subspace::coordinate(3, [0, 1]));
        let c2 = preimage(&d, &gens, &b2, &product_span(&gens[..2], &gens[..2], &b2));
        assert!(c2.is_full());
    }

    #[test]
    fn full_target_is_everything() {
        let (u, d) = heisenberg();
        let gens: Vec<Element> = (0..3).map(|i| Element::generator(&u, i)).collect();
        let b2 = MonomialBasis::of_degree(&u, 2);
        assert!(preimage(&d, &gens, &b2, &Subspace::full(b2.len())).is_full());
    }

    #[test]
    fn coords_round_trip() {
        let (u, _) = heisenberg();
        let b2 = MonomialBasis::of_degree(&u, 2);
        let x = Element::var(&u, "x").unwrap();
        let z = Element::var(&u, "z").unwrap();
        let e = (&x * &z).scale(&rat(-3));
        assert_eq!(b2.element(&b2.coords(&e).unwrap()), e);
        assert!(b2.coords(&x).is_none());
    }
}
