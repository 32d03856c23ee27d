//! Exact linear algebra over ℚ.
//!
//! Row reduction runs fraction-free on integer rows (denominators cleared,
//! row content divided out after every elimination step) and only turns back
//! into rationals when the pivots are normalised at the end. The reduced
//! row-echelon form is unique, so two [`Subspace`]s are equal exactly when
//! their bases are.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<Rational>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                t.data[c][r] = v.clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self.cols, self.data.clone()).pivots.len()
    }

    /// `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        kernel_of_rows(self.cols, self.data.clone())
    }

    /// Row space as a subspace of ℚ^cols.
    pub fn row_space(&self) -> Subspace {
        Subspace::span(self.cols, self.data.clone())
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<Vec<Rational>> = self
            .data
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let red = rref(self.cols + 1, aug);
        if red.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

/// Reduced row-echelon form: nonzero rows only, each with a leading 1.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|q| !q.is_zero())
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Fraction-free Gauss–Jordan elimination followed by pivot normalisation.
pub fn rref(cols: usize, rows: Vec<Vec<Rational>>) -> Rref {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            clear_denominators(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    for r in work.iter_mut() {
        remove_content(r);
    }

    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..cols {
        if lead == work.len() {
            break;
        }
        // smallest nonzero entry keeps the multipliers small
        let Some(p) = (lead..work.len())
            .filter(|&r| !work[r][col].is_zero())
            .min_by(|&a, &b| work[a][col].abs().cmp(&work[b][col].abs()))
        else {
            continue;
        };
        work.swap(lead, p);
        let pivot_row = work[lead].clone();
        let pv = pivot_row[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == lead || row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &pv * &*x - &a * y;
            }
            remove_content(row);
        }
        pivots.push(col);
        lead += 1;
    }
    work.truncate(lead);

    let rows = work
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let pv = row[p].clone();
            row.into_iter()
                .map(|x| Rational::new(x, pv.clone()))
                .collect()
        })
        .collect();
    Rref { rows, pivots }
}

fn kernel_of_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Subspace {
    let red = rref(cols, rows);
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Subspace::span(cols, basis)
}

/// A subspace of ℚ^n, stored as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Self::span(ambient, basis)
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let red = rref(ambient, vectors);
        Self {
            ambient,
            basis: red.rows,
            pivots: red.pivots,
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        Self::span(
            ambient,
            coords.into_iter().map(|i| unit(ambient, i)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce against the echelon basis
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, vs)
    }

    /// Complement with respect to the standard inner product.
    pub fn orthogonal_complement(&self) -> Subspace {
        kernel_of_rows(self.ambient, self.basis.clone())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.orthogonal_complement()
            .sum(&other.orthogonal_complement())
            .orthogonal_complement()
    }

    /// `self ∩ inner^⊥`: the orthogonal complement of `inner` taken inside `self`.
    pub fn complement_within(&self, inner: &Subspace) -> Subspace {
        self.intersection(&inner.orthogonal_complement())
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::span(
            3,
            vec![vec![rat(2), rat(4), rat(0)], vec![rat(0), rat(3), rat(3)]],
        );
        let b = Subspace::span(
            3,
            vec![vec![rat(1), rat(5), rat(3)], vec![rat(1), rat(2), rat(0)]],
        );
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], vec![rat(1), rat(0), rat(-2)]);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = m(&[&[1, 1, 1], &[2, 2, 2]]).kernel();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[rat(1), rat(-1), rat(0)]));
        assert!(!k.contains(&[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let x = a.solve(&[rat(5), rat(6)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(5), rat(6)]);
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(sing.solve(&[rat(1), rat(3)]).is_none());
        let x = sing.solve(&[rat(1), rat(2)]).unwrap();
        assert_eq!(sing.mul_vec(&x), vec![rat(1), rat(2)]);
    }

    #[test]
    fn fractions_survive_elimination() {
        let a = Matrix::from_rows(
            2,
            vec![
                vec![ratio(1, 3), ratio(1, 2)],
                vec![ratio(2, 5), ratio(-7, 4)],
            ],
        );
        assert_eq!(a.rank(), 2);
        let x = a.solve(&[rat(1), rat(1)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(1), rat(1)]);
    }

    #[test]
    fn lattice_identities() {
        let a = Subspace::span(4, vec![unit(4, 0), unit(4, 1)]);
        let b = Subspace::span(4, vec![vec![rat(1), rat(1), rat(1), rat(0)], unit(4, 3)]);
        let i = a.intersection(&b);
        let s = a.sum(&b);
        assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        assert!(a.is_subspace_of(&s));
        assert_eq!(s.dim(), a.dim() + b.dim() - i.dim());
        assert_eq!(i.dim(), 0);
    }

    #[test]
    fn complement_within() {
        let big = Subspace::full(3);
        let small = Subspace::span(3, vec![vec![rat(1), rat(1), rat(0)]]);
        let c = big.complement_within(&small);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&[rat(1), rat(-1), rat(0)]));
        assert!(c.contains(&unit(3, 2)));
    }
}
