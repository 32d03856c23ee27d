use super::Universe;

/// A product of generators, stored as nondecreasing generator indices.
///
/// Because a [`Universe`] sorts generators by `(degree, id)`, index order is
/// the canonical factor order. Odd generators occur at most once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Self(vec![i as u32])
    }

    pub(crate) fn from_sorted(factors: Vec<u32>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Self(factors)
    }

    /// Sorts `factors` into canonical order. Returns the Koszul sign of the
    /// sorting permutation, or `None` when an odd generator repeats.
    pub fn normalize(universe: &Universe, factors: &[usize]) -> Option<(i8, Monomial)> {
        let mut v: Vec<u32> = factors.iter().map(|&i| i as u32).collect();
        let mut sign = 1i8;
        // insertion sort, flipping on every odd/odd transposition
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                if universe.is_odd(v[j - 1] as usize) && universe.is_odd(v[j] as usize) {
                    sign = -sign;
                }
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        if v.windows(2)
            .any(|w| w[0] == w[1] && universe.is_odd(w[0] as usize))
        {
            return None;
        }
        Some((sign, Monomial(v)))
    }

    /// `self ∧ other` in canonical form with its sign, or `None` if it vanishes.
    pub fn mul(&self, other: &Monomial, universe: &Universe) -> Option<(i8, Monomial)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut sign = 1i8;
        let (a, b) = (&self.0, &other.0);
        // number of odd factors of `a` not yet emitted
        let mut odd_left = a.iter().filter(|&&g| universe.is_odd(g as usize)).count();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] <= b[j]) {
                if j < b.len() && a[i] == b[j] && universe.is_odd(a[i] as usize) {
                    return None;
                }
                if universe.is_odd(a[i] as usize) {
                    odd_left -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else {
                if universe.is_odd(b[j] as usize) && odd_left % 2 == 1 {
                    sign = -sign;
                }
                out.push(b[j]);
                j += 1;
            }
        }
        Some((sign, Monomial(out)))
    }

    pub fn factors(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn raw(&self) -> &[u32] {
        &self.0
    }

    pub fn word_length(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, universe: &Universe) -> u32 {
        self.0.iter().map(|&i| universe.degree(i as usize)).sum()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.binary_search(&(g as u32)).is_ok()
    }

    /// `(generator, exponent)` pairs in canonical order.
    pub fn powers(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, e)) if *h == g as usize => *e += 1,
                _ => out.push((g as usize, 1)),
            }
        }
        out
    }

    /// Splits off the factor at `pos`: `(prefix, factor, suffix)`.
    pub(crate) fn split_at_factor(&self, pos: usize) -> (Monomial, usize, Monomial) {
        (
            Monomial(self.0[..pos].to_vec()),
            self.0[pos] as usize,
            Monomial(self.0[pos + 1..].to_vec()),
        )
    }

    pub fn render(&self, universe: &Universe) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.powers()
            .into_iter()
            .map(|(g, e)| {
                let id = &universe.generator(g).id;
                if e == 1 {
                    id.clone()
                } else {
                    format!("{id}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::Generator;

    fn uni() -> std::sync::Arc<Universe> {
        Universe::new(
            vec![
                Generator::new("x", 1),
                Generator::new("y", 1),
                Generator::new("u", 2),
                Generator::new("v", 2),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn odd_transposition_flips_sign() {
        let u = uni();
        let (x, y) = (u.index_of("x").unwrap(), u.index_of("y").unwrap());
        let (s, m) = Monomial::normalize(&u, &[y, x]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(m, Monomial::normalize(&u, &[x, y]).unwrap().1);
    }

    #[test]
    fn odd_square_vanishes() {
        let u = uni();
        let x = u.index_of("x").unwrap();
        assert!(Monomial::normalize(&u, &[x, x]).is_none());
        let mx = Monomial::generator(x);
        assert!(mx.mul(&mx, &u).is_none());
    }

    #[test]
    fn even_commutes() {
        let u = uni();
        let (a, b) = (u.index_of("u").unwrap(), u.index_of("v").unwrap());
        assert_eq!(Monomial::normalize(&u, &[b, a]).unwrap().0, 1);
        let (s, m) = Monomial::generator(a)
            .mul(&Monomial::generator(a), &u)
            .unwrap();
        assert_eq!((s, m.powers()), (1, vec![(a, 2)]));
    }

    #[test]
    fn mul_agrees_with_normalize() {
        let u = uni();
        let all: Vec<usize> = (0..u.len()).collect();
        for &p in &all {
            for &q in &all {
                for &r in &all {
                    let left = Monomial::normalize(&u, &[p, q]);
                    let right = Monomial::generator(r);
                    let via_mul =
                        left.and_then(|(s, m)| m.mul(&right, &u).map(|(t, n)| (s * t, n)));
                    assert_eq!(via_mul, Monomial::normalize(&u, &[p, q, r]));
                }
            }
        }
    }
}
