use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::gca::{Derivation, Element, Universe};
use crate::rational::{pow, rat, Rational};

/// An element of `B ⊗ ℚ⟨t, dt⟩`: `Σ bᵢ tⁱ + Σ cᵢ tⁱ dt`.
///
/// `t` has degree 0 and `dt` degree 1, so `dt² = 0` and every element has a
/// polynomial part and a `dt` part. Coefficients are written to the left.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalElement {
    universe: Arc<Universe>,
    poly: BTreeMap<u32, Element>,
    dt: BTreeMap<u32, Element>,
}

/// `b ↦ Σ (−1)^{|m|} q m`.
pub(crate) fn parity_twist(b: &Element) -> Element {
    let u = b.universe();
    Element::from_terms(
        u,
        b.terms().map(|(m, q)| {
            let q = if m.degree(u) % 2 == 1 {
                -q.clone()
            } else {
                q.clone()
            };
            (m.clone(), q)
        }),
    )
}

fn insert(map: &mut BTreeMap<u32, Element>, i: u32, b: Element) {
    if b.is_zero() {
        return;
    }
    match map.remove(&i) {
        Some(old) => {
            let s = old + b;
            if !s.is_zero() {
                map.insert(i, s);
            }
        }
        None => {
            map.insert(i, b);
        }
    }
}

impl IntervalElement {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self {
            universe: universe.clone(),
            poly: BTreeMap::new(),
            dt: BTreeMap::new(),
        }
    }

    /// `b ⊗ 1`.
    pub fn constant(b: &Element) -> Self {
        Self::poly_term(b, 0)
    }

    /// `b ⊗ tⁱ`.
    pub fn poly_term(b: &Element, i: u32) -> Self {
        let mut out = Self::zero(b.universe());
        insert(&mut out.poly, i, b.clone());
        out
    }

    /// `b ⊗ tⁱ dt`.
    pub fn dt_term(b: &Element, i: u32) -> Self {
        let mut out = Self::zero(b.universe());
        insert(&mut out.dt, i, b.clone());
        out
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// `(i, bᵢ)` for the polynomial part.
    pub fn poly_part(&self) -> &BTreeMap<u32, Element> {
        &self.poly
    }

    /// `(i, cᵢ)` for the `dt` part.
    pub fn dt_part(&self) -> &BTreeMap<u32, Element> {
        &self.dt
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.dt.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(&self.universe);
        for (&i, b) in &self.poly {
            insert(&mut out.poly, i, b.scale(q));
        }
        for (&i, b) in &self.dt {
            insert(&mut out.dt, i, b.scale(q));
        }
        out
    }

    /// `d(b tⁱ) = db tⁱ + (−1)^{|b|} i b t^{i−1} dt`, `d(b tⁱ dt) = db tⁱ dt`.
    pub fn d(&self, d: &Derivation) -> Self {
        let mut out = Self::zero(&self.universe);
        for (&i, b) in &self.poly {
            insert(&mut out.poly, i, d.apply(b).expect("derivation on B"));
            if i > 0 {
                insert(&mut out.dt, i - 1, parity_twist(b).scale(&rat(i as i64)));
            }
        }
        for (&i, b) in &self.dt {
            insert(&mut out.dt, i, d.apply(b).expect("derivation on B"));
        }
        out
    }

    /// Restriction to `t = s`, `dt = 0`.
    pub fn at(&self, s: &Rational) -> Element {
        let mut out = Element::zero(&self.universe);
        for (&i, b) in &self.poly {
            out = out + b.scale(&pow(s, i));
        }
        out
    }

    pub fn at_0(&self) -> Element {
        self.poly
            .get(&0)
            .cloned()
            .unwrap_or_else(|| Element::zero(&self.universe))
    }

    pub fn at_1(&self) -> Element {
        self.at(&Rational::one())
    }

    /// `∫₀¹ b tⁱ = 0`, `∫₀¹ b tⁱ dt = (−1)^{|b|} b / (i+1)`.
    pub fn integrate_0_1(&self) -> Element {
        let mut out = Element::zero(&self.universe);
        for (&i, b) in &self.dt {
            out = out + parity_twist(b).scale(&Rational::new(1.into(), (i + 1).into()));
        }
        out
    }

    /// `∫₀ᵗ b tⁱ = 0`, `∫₀ᵗ b tⁱ dt = (−1)^{|b|} b t^{i+1} / (i+1)`.
    pub fn integrate_0_t(&self) -> Self {
        let mut out = Self::zero(&self.universe);
        for (&i, b) in &self.dt {
            insert(
                &mut out.poly,
                i + 1,
                parity_twist(b).scale(&Rational::new(1.into(), (i + 1).into())),
            );
        }
        out
    }

    /// `t ↦ t/T`: the term `b tⁱ dtᵉ` is multiplied by `T^{−(i+e)}`.
    pub fn rescale(&self, t: &Rational) -> Self {
        assert!(t > &Rational::zero(), "rescaling needs T > 0");
        let inv = t.recip();
        let mut out = Self::zero(&self.universe);
        for (&i, b) in &self.poly {
            insert(&mut out.poly, i, b.scale(&pow(&inv, i)));
        }
        for (&i, b) in &self.dt {
            insert(&mut out.dt, i, b.scale(&pow(&inv, i + 1)));
        }
        out
    }

    /// Largest power of `t` present.
    pub fn t_degree(&self) -> Option<u32> {
        self.poly.keys().chain(self.dt.keys()).max().copied()
    }
}

impl Add for &IntervalElement {
    type Output = IntervalElement;
    fn add(self, rhs: &IntervalElement) -> IntervalElement {
        let mut out = self.clone();
        for (&i, b) in &rhs.poly {
            insert(&mut out.poly, i, b.clone());
        }
        for (&i, b) in &rhs.dt {
            insert(&mut out.dt, i, b.clone());
        }
        out
    }
}

impl Add for IntervalElement {
    type Output = IntervalElement;
    fn add(self, rhs: IntervalElement) -> IntervalElement {
        &self + &rhs
    }
}

impl Neg for &IntervalElement {
    type Output = IntervalElement;
    fn neg(self) -> IntervalElement {
        self.scale(&-Rational::one())
    }
}

impl Sub for &IntervalElement {
    type Output = IntervalElement;
    fn sub(self, rhs: &IntervalElement) -> IntervalElement {
        self + &(-rhs)
    }
}

impl Sub for IntervalElement {
    type Output = IntervalElement;
    fn sub(self, rhs: IntervalElement) -> IntervalElement {
        &self - &rhs
    }
}

/// `(b₁ tⁱ dtᵃ)(b₂ tʲ dtᵉ) = (−1)^{a|b₂|} b₁b₂ t^{i+j} dt^{a+e}`.
impl Mul for &IntervalElement {
    type Output = IntervalElement;
    fn mul(self, rhs: &IntervalElement) -> IntervalElement {
        let mut out = IntervalElement::zero(&self.universe);
        for (&i, b1) in &self.poly {
            for (&j, b2) in &rhs.poly {
                insert(&mut out.poly, i + j, b1 * b2);
            }
            for (&j, b2) in &rhs.dt {
                insert(&mut out.dt, i + j, b1 * b2);
            }
        }
        for (&i, b1) in &self.dt {
            for (&j, b2) in &rhs.poly {
                insert(&mut out.dt, i + j, b1 * &parity_twist(b2));
            }
        }
        out
    }
}

impl Mul for IntervalElement {
    type Output = IntervalElement;
    fn mul(self, rhs: IntervalElement) -> IntervalElement {
        &self * &rhs
    }
}

impl fmt::Display for IntervalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let tpow = |i: u32| match i {
            0 => String::new(),
            1 => "*t".to_string(),
            _ => format!("*t^{i}"),
        };
        for (&i, b) in &self.poly {
            parts.push(format!("({b}){}", tpow(i)));
        }
        for (&i, b) in &self.dt {
            parts.push(format!("({b}){}*dt", tpow(i)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for IntervalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalElement({self})")
    }
}

/// Both identities
/// `d∫₀¹u + ∫₀¹du = u|₁ − u|₀` and `d∫₀ᵗu + ∫₀ᵗdu = u − u|₀ ⊗ 1`,
/// returned as the two residuals (zero when they hold).
pub fn fundamental_theorem_residuals(
    u: &IntervalElement,
    d: &Derivation,
) -> (Element, IntervalElement) {
    let first = d.apply(&u.integrate_0_1()).expect("derivation on B") + u.d(d).integrate_0_1()
        - (u.at_1() - u.at_0());
    let second = &(&u.integrate_0_t().d(d) + &u.d(d).integrate_0_t())
        - &(u - &IntervalElement::constant(&u.at_0()));
    (first, second)
}
