//! The mapping-torus action and the iterated brackets `ζ_{k,j}`.
//!
//! Generators `a1..ac`, `b1..bc` stand for `α_j`, `β_j` (Samelson degree 1,
//! scale weight `j+1`). Bracketing with the loop class `t` is the degree-0
//! derivation `D` with `D a_j = a_{j+1}`, `D a_c = 0`, and the same on `b`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{bracket, Alphabet, LieElement, LieError, LieGenerator};
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct TorusAction {
    alphabet: Arc<Alphabet>,
    c: u32,
    images: Vec<LieElement>,
}

impl TorusAction {
    pub fn new(c: u32) -> Self {
        assert!(c >= 1, "c must be at least 1");
        let mut gens = Vec::new();
        for prefix in ["a", "b"] {
            for j in 1..=c {
                gens.push(LieGenerator {
                    id: format!("{prefix}{j}"),
                    samelson_degree: 1,
                    scale_weight: j + 1,
                });
            }
        }
        let alphabet = Alphabet::new(gens);
        let images = (0..alphabet.len())
            .map(|i| {
                let j = i as u32 % c + 1;
                if j < c {
                    LieElement::generator(&alphabet, i + 1)
                } else {
                    LieElement::zero(&alphabet)
                }
            })
            .collect();
        Self {
            alphabet,
            c,
            images,
        }
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// `α_j`.
    pub fn alpha(&self, j: u32) -> LieElement {
        assert!((1..=self.c).contains(&j));
        LieElement::generator(&self.alphabet, j as usize - 1)
    }

    /// `β_j`.
    pub fn beta(&self, j: u32) -> LieElement {
        assert!((1..=self.c).contains(&j));
        LieElement::generator(&self.alphabet, (self.c + j) as usize - 1)
    }

    /// `[t, x] = D x`; `[x, t]` is its negative.
    pub fn t_bracket(&self, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero(&self.alphabet);
        for (w, q) in x.terms() {
            for (pos, &g) in w.iter().enumerate() {
                for (img, r) in self.images[g as usize].terms() {
                    let mut nw = w[..pos].to_vec();
                    nw.extend_from_slice(img);
                    nw.extend_from_slice(&w[pos + 1..]);
                    super::add_into(&mut out.terms, nw, q * r);
                }
            }
        }
        out.label = x.label.as_ref().map(|l| format!("[t,{l}]").into());
        out
    }
}

/// Memoized `ζ_{k,j}` for `2 ≤ k ≤ k_max`, `1 ≤ j ≤ c`:
/// `ζ_{2,1} = β₁`, `ζ_{k,1} = [α₁, ζ_{k−1,c}]`, `ζ_{k,j} = [t, ζ_{k,j−1}]`.
#[derive(Debug, Clone)]
pub struct ZetaTable {
    action: TorusAction,
    k_max: u32,
    memo: BTreeMap<(u32, u32), LieElement>,
}

impl ZetaTable {
    pub fn new(c: u32, k_max: u32) -> Self {
        let action = TorusAction::new(c);
        let mut memo = BTreeMap::new();
        for k in 2..=k_max {
            for j in 1..=c {
                let z = if j > 1 {
                    action.t_bracket(&memo[&(k, j - 1)])
                } else if k == 2 {
                    action.beta(1)
                } else {
                    bracket(&action.alpha(1), &memo[&(k - 1, c)])
                };
                memo.insert((k, j), z.with_label(format!("ζ({k},{j})")));
            }
        }
        Self {
            action,
            k_max,
            memo,
        }
    }

    pub fn action(&self) -> &TorusAction {
        &self.action
    }

    pub fn get(&self, k: u32, j: u32) -> Result<&LieElement, LieError> {
        let c = self.action.c;
        if k < 2 || j < 1 || j > c || k > self.k_max {
            return Err(LieError::OutOfRange { k, j, c });
        }
        Ok(&self.memo[&(k, j)])
    }
}

/// The common scale weight of every word, or the per-word weights if they
/// differ.
pub fn scaling_weight(x: &LieElement) -> Result<u32, LieError> {
    let a = x.alphabet();
    let weights: Vec<(String, u32)> = x
        .terms()
        .map(|(w, _)| (a.render_word(w), a.word_weight(w)))
        .collect();
    match weights.first() {
        None => Ok(0),
        Some((_, w0)) if weights.iter().all(|(_, w)| w == w0) => Ok(*w0),
        Some(_) => Err(LieError::Inhomogeneous(weights)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub identity: &'static str,
    pub k: u32,
    pub j: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub c: u32,
    pub k_max: u32,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&LemmaCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

/// `[t, ζ_{k,c}] = 0`; `[t, [α_j, ζ_{k−1,c}]]` is `[α_{j+1}, ζ_{k−1,c}]` for
/// `j < c` and `0` for `j = c`; `ζ_{k,j} = [α_j, ζ_{k−1,c}]`; and `D` is a
/// derivation on pairs drawn from generators and the `ζ`s.
pub fn verify_jacobi_lemmas(k_max: u32, c: u32) -> LemmaReport {
    let table = ZetaTable::new(c, k_max);
    let act = table.action();
    let mut checks = Vec::new();
    let mut push = |identity, k, j, holds| {
        checks.push(LemmaCheck {
            identity,
            k,
            j,
            holds,
        })
    };
    for k in 2..=k_max {
        let top = table.get(k, c).unwrap();
        push("[t,ζ(k,c)] = 0", k, c, act.t_bracket(top).is_zero());
        if k > 2 {
            let prev = table.get(k - 1, c).unwrap();
            for j in 1..=c {
                let inner = bracket(&act.alpha(j), prev);
                let expected = if j < c {
                    bracket(&act.alpha(j + 1), prev)
                } else {
                    LieElement::zero(act.alphabet())
                };
                push(
                    "[t,[a_j,ζ(k-1,c)]]",
                    k,
                    j,
                    act.t_bracket(&inner) == expected,
                );
                push(
                    "ζ(k,j) = [a_j,ζ(k-1,c)]",
                    k,
                    j,
                    *table.get(k, j).unwrap() == inner,
                );
            }
        }
    }
    let mut pool: Vec<LieElement> = (0..act.alphabet().len())
        .map(|i| LieElement::generator(act.alphabet(), i))
        .collect();
    pool.extend((2..=k_max.min(4)).map(|k| table.get(k, 1).unwrap().clone()));
    for (i, x) in pool.iter().enumerate() {
        for y in &pool[i..] {
            let lhs = act.t_bracket(&bracket(x, y));
            let rhs = &bracket(&act.t_bracket(x), y) + &bracket(x, &act.t_bracket(y));
            push("D[x,y] = [Dx,y] + [x,Dy]", 0, 0, lhs == rhs);
        }
    }
    LemmaReport { c, k_max, checks }
}

/// `α_c ↦ A`, `β_c ↦ B`, other generators to 0, into the free Lie algebra on
/// `A`, `B` (both of Samelson degree 1 and scale weight `c+1`).
pub fn retraction(x: &LieElement, action: &TorusAction) -> LieElement {
    let c = action.c();
    let hat = Alphabet::new(
        ["A", "B"]
            .iter()
            .map(|id| LieGenerator {
                id: id.to_string(),
                samelson_degree: 1,
                scale_weight: c + 1,
            })
            .collect(),
    );
    let images: Vec<LieElement> = (0..action.alphabet().len() as u32)
        .map(|i| match (i / c, i % c + 1 == c) {
            (0, true) => LieElement::generator(&hat, 0),
            (1, true) => LieElement::generator(&hat, 1),
            _ => LieElement::zero(&hat),
        })
        .collect();
    x.substitute(&hat, &images)
}

/// `[A,[A,…[A,B]…]]` with `k−2` copies of `A`.
pub fn nested_bracket(hat: &Arc<Alphabet>, k: u32) -> LieElement {
    let a = LieElement::generator(hat, 0);
    let mut out = LieElement::generator(hat, 1);
    for _ in 2..k {
        out = bracket(&a, &out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonvanishingRow {
    pub k: u32,
    pub words: usize,
    pub direct: bool,
    /// The retraction image is a nonzero multiple of the nested bracket.
    pub retraction: bool,
    pub ratio: Option<Rational>,
    pub weight: Result<u32, LieError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonvanishingReport {
    pub c: u32,
    pub rows: Vec<NonvanishingRow>,
}

impl NonvanishingReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.direct && r.retraction)
    }

    /// Every `ζ_{k,c}` has scale weight `(c+1)(k−1)`.
    pub fn weights_match(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.weight == Ok((self.c + 1) * (r.k - 1)))
    }
}

pub fn verify_nonvanishing(k_max: u32, c: u32) -> NonvanishingReport {
    let table = ZetaTable::new(c, k_max);
    let rows = (2..=k_max)
        .map(|k| {
            let z = table.get(k, c).unwrap();
            let image = retraction(z, table.action());
            let target = nested_bracket(image.alphabet(), k);
            let ratio = proportionality(&image, &target);
            NonvanishingRow {
                k,
                words: z.len(),
                direct: !z.is_zero(),
                retraction: ratio.as_ref().is_some_and(|r| !r.is_zero()) && !image.is_zero(),
                ratio,
                weight: scaling_weight(z),
            }
        })
        .collect();
    NonvanishingReport { c, rows }
}

/// `λ` with `x = λ y`, if `y ≠ 0` and one exists.
fn proportionality(x: &LieElement, y: &LieElement) -> Option<Rational> {
    let (w, q) = y.terms().next()?;
    let lambda = x.terms.get(w).cloned().unwrap_or_else(Rational::zero) / q;
    (*x == y.scale(&lambda)).then_some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn action_on_generators() {
        let act = TorusAction::new(2);
        assert_eq!(act.t_bracket(&act.alpha(1)), act.alpha(2));
        assert!(act.t_bracket(&act.alpha(2)).is_zero());
        assert!(act.t_bracket(&act.beta(2)).is_zero());
        let act = TorusAction::new(3);
        let ab = bracket(&act.alpha(1), &act.beta(1));
        let expected =
            &bracket(&act.alpha(2), &act.beta(1)) + &bracket(&act.alpha(1), &act.beta(2));
        assert_eq!(act.t_bracket(&ab), expected);
    }

    #[test]
    fn small_zetas() {
        let t = ZetaTable::new(2, 3);
        assert_eq!(*t.get(2, 1).unwrap(), t.action().beta(1));
        assert_eq!(*t.get(2, 2).unwrap(), t.action().beta(2));
        let z3 = t.get(3, 2).unwrap();
        assert_ne!(z3.coefficient(&["a2", "b2"]), rat(0));
        let t1 = ZetaTable::new(1, 3);
        assert_eq!(
            *t1.get(3, 1).unwrap(),
            bracket(&t1.action().alpha(1), &t1.action().beta(1))
        );
        assert!(matches!(t.get(1, 1), Err(LieError::OutOfRange { .. })));
        assert!(matches!(t.get(2, 3), Err(LieError::OutOfRange { .. })));
    }

    #[test]
    fn weights() {
        let t = ZetaTable::new(3, 3);
        assert_eq!(scaling_weight(t.get(2, 3).unwrap()), Ok(4));
        assert_eq!(scaling_weight(t.get(3, 3).unwrap()), Ok(8));
        assert_eq!(scaling_weight(&t.action().alpha(2)), Ok(3));
        let mixed = &t.action().alpha(1) + &t.action().alpha(2);
        assert!(matches!(
            scaling_weight(&mixed),
            Err(LieError::Inhomogeneous(_))
        ));
    }

    #[test]
    fn lemmas_small() {
        assert!(verify_jacobi_lemmas(4, 2).passed());
        let r = verify_jacobi_lemmas(2, 1);
        assert!(r.passed());
        assert!(r.checks.iter().any(|c| c.identity == "[t,ζ(k,c)] = 0"));
    }

    #[test]
    fn nonvanishing_small() {
        let r = verify_nonvanishing(4, 3);
        assert!(r.passed() && r.weights_match(), "{r:?}");
        assert_eq!(r.rows[0].ratio, Some(rat(1)));
    }
}
