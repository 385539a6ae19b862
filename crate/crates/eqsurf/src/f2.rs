//! Small dense linear algebra over the field with two elements.
//!
//! Everything in the crate that needs a rank ends up here: matrices are
//! bit-packed rows and ranks come from plain Gaussian elimination. Sizes are
//! desk-scale (at most a few dozen rows), so no effort is spent on anything
//! cleverer.

use std::collections::BTreeSet;

/// Dense matrix over `Z/2`, rows stored as bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        F2Matrix { rows, cols, words_per_row, data: vec![0; rows * words_per_row] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let word = r * self.words_per_row + c / 64;
        let bit = 1u64 << (c % 64);
        if value {
            self.data[word] |= bit;
        } else {
            self.data[word] &= !bit;
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        let word = r * self.words_per_row + c / 64;
        self.data[word] ^= 1u64 << (c % 64);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (s, d) = (src * w, dst * w);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col));
            let Some(pivot) = pivot else { continue };
            m.swap_rows(pivot, rank);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn is_bijection(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Incremental row-reduced subspace of `F2` vectors, used to track spans
/// while splitting cyclic pieces off a graded module.
#[derive(Debug, Clone, Default)]
pub struct F2Span {
    /// Echelon basis, each with its pivot column.
    rows: Vec<(usize, Vec<bool>)>,
    dim: usize,
}

impl F2Span {
    pub fn new() -> Self {
        F2Span::default()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the span; returns the residue.
    pub fn reduce(&self, mut v: Vec<bool>) -> Vec<bool> {
        for (pivot, row) in &self.rows {
            if *pivot < v.len() && v[*pivot] {
                for (i, b) in row.iter().enumerate() {
                    v[i] ^= *b;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[bool]) -> bool {
        self.reduce(v.to_vec()).iter().all(|b| !b)
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: Vec<bool>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|b| *b) {
            None => false,
            Some(pivot) => {
                self.rows.push((pivot, v));
                self.dim += 1;
                true
            }
        }
    }
}

/// Polynomial over `Z/2` in one variable, stored as the set of exponents with
/// nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct F2Poly {
    exponents: BTreeSet<u32>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly::default()
    }

    pub fn one() -> Self {
        F2Poly::monomial(0)
    }

    pub fn monomial(degree: u32) -> Self {
        F2Poly { exponents: [degree].into_iter().collect() }
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        let mut p = F2Poly::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, e: u32) {
        if !self.exponents.remove(&e) {
            self.exponents.insert(e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.exponents.iter().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.exponents.iter().next().copied()
    }

    /// True when the polynomial is a single power of `t`.
    pub fn is_monomial(&self) -> bool {
        self.exponents.len() == 1
    }

    pub fn has_term(&self, e: u32) -> bool {
        self.exponents.contains(&e)
    }

    pub fn terms(&self) -> impl Iterator<Item = u32> + '_ {
        self.exponents.iter().copied()
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let mut out = self.clone();
        for e in other.terms() {
            out.toggle(e);
        }
        out
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for a in self.terms() {
            for b in other.terms() {
                out.toggle(a + b);
            }
        }
        out
    }

    pub fn times_monomial(&self, degree: u32) -> F2Poly {
        F2Poly { exponents: self.terms().map(|e| e + degree).collect() }
    }

    /// Exact division by `t^degree`; None if some term has a lower exponent.
    pub fn div_monomial(&self, degree: u32) -> Option<F2Poly> {
        if self.terms().any(|e| e < degree) {
            return None;
        }
        Some(F2Poly { exponents: self.terms().map(|e| e - degree).collect() })
    }
}

impl std::fmt::Display for F2Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Determinant of a square matrix of `F2Poly` by Laplace expansion; the
/// matrices here are at most 6x6.
pub fn poly_det(matrix: &[Vec<F2Poly>]) -> F2Poly {
    let n = matrix.len();
    if n == 0 {
        return F2Poly::one();
    }
    assert!(matrix.iter().all(|row| row.len() == n));
    let cols: Vec<usize> = (0..n).collect();
    det_rec(matrix, 0, &cols)
}

fn det_rec(matrix: &[Vec<F2Poly>], row: usize, cols: &[usize]) -> F2Poly {
    if cols.is_empty() {
        return F2Poly::one();
    }
    let mut acc = F2Poly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> =
            cols.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &c)| c).collect();
        acc = acc.add(&entry.mul(&det_rec(matrix, row + 1, &rest)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_singular() {
        let mut m = F2Matrix::zero(3, 3);
        for i in 0..3 {
            m.set(i, i, true);
        }
        assert_eq!(m.rank(), 3);
        assert!(m.is_bijection());

        let mut s = F2Matrix::zero(2, 2);
        s.set(0, 0, true);
        s.set(0, 1, true);
        s.set(1, 0, true);
        s.set(1, 1, true);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn rank_wide_matrix() {
        let mut m = F2Matrix::zero(2, 70);
        m.set(0, 0, true);
        m.set(0, 69, true);
        m.set(1, 69, true);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn span_tracks_dimension() {
        let mut span = F2Span::new();
        assert!(span.insert(vec![true, false, true]));
        assert!(span.insert(vec![false, true, false]));
        assert!(!span.insert(vec![true, true, true]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[true, true, true]));
        assert!(!span.contains(&[false, false, true]));
    }

    #[test]
    fn poly_arithmetic() {
        let a = F2Poly::from_exponents([0, 2]); // 1 + t^2
        let b = F2Poly::from_exponents([1]); // t
        assert_eq!(a.mul(&b), F2Poly::from_exponents([1, 3]));
        assert_eq!(a.add(&a), F2Poly::zero());
        assert_eq!(a.degree(), Some(2));
        assert!(!a.is_monomial());
        assert!(b.is_monomial());
        assert_eq!(b.div_monomial(1), Some(F2Poly::one()));
        assert_eq!(a.div_monomial(1), None);
    }

    #[test]
    fn determinant_of_triangular_matrix() {
        // [[1, t^2], [0, t]] has determinant t.
        let m = vec![
            vec![F2Poly::one(), F2Poly::monomial(2)],
            vec![F2Poly::zero(), F2Poly::monomial(1)],
        ];
        assert_eq!(poly_det(&m), F2Poly::monomial(1));
    }

    #[test]
    fn determinant_cancellation() {
        // [[t, t], [t, t]] has determinant 0 over Z/2.
        let t = F2Poly::monomial(1);
        let m = vec![vec![t.clone(), t.clone()], vec![t.clone(), t]];
        assert!(poly_det(&m).is_zero());
    }
}
