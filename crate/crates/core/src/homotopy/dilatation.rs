use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::gca::{Element, Monomial};
use crate::rational::{pow, to_f64, Rational};

use super::{AlgebraicHomotopy, DgaMorphism, IntervalElement};

/// Per-degree operator norms `‖φ|_{V_k}‖` for the coefficient max-norms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Dilatation {
    pub norms: BTreeMap<u32, Rational>,
}

impl Dilatation {
    pub fn norm(&self, k: u32) -> Rational {
        self.norms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Dil ≤ L`, decided as `‖φ|_{V_k}‖ ≤ Lᵏ` for every `k`.
    pub fn at_most(&self, l: &Rational) -> bool {
        self.norms.iter().all(|(&k, n)| n <= &pow(l, k))
    }

    /// `max_k ‖φ|_{V_k}‖^{1/k}`, for display.
    pub fn approx(&self) -> f64 {
        self.norms
            .iter()
            .map(|(&k, n)| to_f64(n).powf(1.0 / k as f64))
            .fold(0.0, f64::max)
    }
}

/// Max absolute row sum of the matrix whose columns are `columns`, each a
/// list of `(row key, coefficient)`.
fn operator_norm<K: Ord>(columns: impl IntoIterator<Item = Vec<(K, Rational)>>) -> Rational {
    let mut rows: BTreeMap<K, Rational> = BTreeMap::new();
    for col in columns {
        for (k, q) in col {
            *rows.entry(k).or_insert_with(Rational::zero) += q.abs();
        }
    }
    rows.into_values().max().unwrap_or_else(Rational::zero)
}

fn element_column(e: &Element) -> Vec<(Monomial, Rational)> {
    e.terms().map(|(m, q)| (m.clone(), q.clone())).collect()
}

fn interval_column(e: &IntervalElement) -> Vec<((Monomial, u32, bool), Rational)> {
    let mut out = Vec::new();
    for (&i, b) in e.poly_part() {
        out.extend(b.terms().map(|(m, q)| ((m.clone(), i, false), q.clone())));
    }
    for (&i, b) in e.dt_part() {
        out.extend(b.terms().map(|(m, q)| ((m.clone(), i, true), q.clone())));
    }
    out
}

fn by_degree<T>(
    source: &crate::gca::Cdga,
    images: impl Iterator<Item = (usize, T)>,
) -> BTreeMap<u32, Vec<T>> {
    let mut out: BTreeMap<u32, Vec<T>> = BTreeMap::new();
    for (g, e) in images {
        out.entry(source.universe().degree(g)).or_default().push(e);
    }
    out
}

/// Dilatation of a morphism over its assigned generators.
pub fn dilatation(phi: &DgaMorphism) -> Dilatation {
    let cols = by_degree(
        phi.source(),
        phi.images()
            .iter()
            .enumerate()
            .filter_map(|(g, e)| e.as_ref().map(|e| (g, element_column(e)))),
    );
    Dilatation {
        norms: cols
            .into_iter()
            .map(|(k, c)| (k, operator_norm(c)))
            .collect(),
    }
}

/// `Dil_T(Φ) = Dil(ρ_T Φ)`; `T = 1` when omitted.
pub fn homotopy_dilatation(h: &AlgebraicHomotopy, t: Option<&Rational>) -> Dilatation {
    let h = match t {
        Some(t) => h.rescale(t),
        None => h.clone(),
    };
    let defined = h.defined_generators();
    let cols = by_degree(
        h.source(),
        defined
            .into_iter()
            .map(|g| (g, interval_column(h.image(g).unwrap()))),
    );
    Dilatation {
        norms: cols
            .into_iter()
            .map(|(k, c)| (k, operator_norm(c)))
            .collect(),
    }
}

/// `length(Φ) = Dil(∫₀¹Φ)`, with `T = 1`.
pub fn formal_length(h: &AlgebraicHomotopy) -> Dilatation {
    let cols = by_degree(
        h.source(),
        h.integrated()
            .into_iter()
            .enumerate()
            .filter_map(|(g, e)| e.map(|e| (g, element_column(&e)))),
    );
    Dilatation {
        norms: cols
            .into_iter()
            .map(|(k, c)| (k, operator_norm(c)))
            .collect(),
    }
}

/// Every image in degree `k` multiplied by `r`.
pub fn scale_degree(phi: &DgaMorphism, k: u32, r: &Rational) -> DgaMorphism {
    let images = phi
        .images()
        .iter()
        .enumerate()
        .map(|(g, e)| {
            e.as_ref().map(|e| {
                if phi.source().universe().degree(g) == k {
                    e.scale(r)
                } else {
                    e.clone()
                }
            })
        })
        .collect();
    DgaMorphism::new(phi.source(), phi.target(), images).expect("scaling keeps degrees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::{Cdga, Derivation, Generator, Universe};
    use crate::rational::{rat, ratio};
    use num_traits::One;

    fn free(gens: Vec<Generator>) -> Cdga {
        let u = Universe::new(gens, Some(6)).unwrap();
        Cdga::new(Derivation::zero(&u)).unwrap()
    }

    #[test]
    fn zero_morphism() {
        let a = free(vec![Generator::new("x", 2), Generator::new("y", 3)]);
        let d = dilatation(&DgaMorphism::zero(&a, &a));
        assert!(d.norms.values().all(Zero::is_zero));
        assert!(d.at_most(&rat(0)));
    }

    #[test]
    fn three_u() {
        let a = free(vec![Generator::new("x", 2)]);
        let b = free(vec![Generator::new("u", 2)]);
        let phi = DgaMorphism::new(&a, &b, vec![Some(b.var("u").scale(&rat(3)))]).unwrap();
        let d = dilatation(&phi);
        assert_eq!(d.norm(2), rat(3));
        assert!(d.at_most(&rat(2)));
        assert!(!d.at_most(&ratio(17, 10)));
        assert!(d.at_most(&ratio(7, 4)));
        assert!((d.approx() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rescaling_halves() {
        let a = free(vec![Generator::new("x", 2)]);
        let b = free(vec![Generator::new("u", 2)]);
        let h = AlgebraicHomotopy::new(
            &a,
            &b,
            vec![Some(IntervalElement::poly_term(&b.var("u"), 1))],
        )
        .unwrap();
        assert_eq!(homotopy_dilatation(&h, None).norm(2), rat(1));
        assert_eq!(homotopy_dilatation(&h, Some(&rat(2))).norm(2), ratio(1, 2));
    }

    #[test]
    fn row_sums() {
        // x ↦ u + v, y ↦ u − 2v: rows u: 1+1, v: 1+2
        let a = free(vec![Generator::new("x", 2), Generator::new("y", 2)]);
        let b = free(vec![Generator::new("u", 2), Generator::new("v", 2)]);
        let (u, v) = (b.var("u"), b.var("v"));
        let phi =
            DgaMorphism::new(&a, &b, vec![Some(&u + &v), Some(&u - &v.scale(&rat(2)))]).unwrap();
        assert_eq!(dilatation(&phi).norm(2), rat(3));
        assert_eq!(
            dilatation(&scale_degree(&phi, 2, &ratio(1, 3))).norm(2),
            rat(1)
        );
    }

    #[test]
    fn formal_length_of_linear_path() {
        // Φ(x) = u ⊗ 1 + d(w ⊗ t) into ∧(u, w) with |w| = 1, dw = 0: ∫₀¹Φ(x) = w
        let a = free(vec![Generator::new("x", 2)]);
        let b = free(vec![Generator::new("w", 1), Generator::new("u", 2)]);
        let e = &IntervalElement::constant(&b.var("u"))
            + &IntervalElement::poly_term(&b.var("w"), 1).d(b.differential());
        let h = AlgebraicHomotopy::new(&a, &b, vec![Some(e)]).unwrap();
        assert_eq!(h.integrated()[0], Some(b.var("w")));
        assert_eq!(formal_length(&h).norm(2), Rational::one());
    }
}
