//! Dense exact linear algebra over the Gaussian rationals.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;

use super::UniPoly;

pub type Vector = Vec<GaussianRational>;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &GaussianRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    /// Builds an `n × cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Evaluates a univariate polynomial at this (square) matrix.
    pub fn eval_poly(&self, p: &UniPoly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Matrix::scalar(n, c));
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<_> = self.row(i).iter().map(|x| x.to_text()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[GaussianRational]> = (0..self.rows).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

/// Fraction-free (Bareiss) row echelon form.
///
/// Returns the echelon matrix and the pivot columns. Every update is
/// `(p * a_ij - a_ic * a_rj) / p_prev`, the quotient being exact.
pub fn bareiss_echelon(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prev = GaussianRational::one();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let piv = a[(r, c)].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in r + 1..a.rows {
            let f = a[(i, c)].clone();
            for j in 0..a.cols {
                if j < c {
                    continue;
                }
                let v = &(&piv * &a[(i, j)]) - &(&f * &a[(r, j)]);
                a[(i, j)] = &v * &prev_inv;
            }
        }
        // Entries left of the pivot column in lower rows are already zero.
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Exact rank and a kernel basis (one vector per free column).
pub fn kernel_rank(m: &Matrix) -> (usize, Vec<Vector>) {
    let (e, pivots) = bareiss_echelon(m);
    let rank = pivots.len();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel = Vec::new();
    for free in (0..m.cols).filter(|&j| !is_pivot[j]) {
        let mut x = vec![GaussianRational::zero(); m.cols];
        x[free] = GaussianRational::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = GaussianRational::zero();
            for j in pc + 1..m.cols {
                if !e[(row, j)].is_zero() && !x[j].is_zero() {
                    acc += &(&e[(row, j)] * &x[j]);
                }
            }
            x[pc] = -(&acc * &e[(row, pc)].inv().expect("pivot is nonzero"));
        }
        kernel.push(x);
    }
    (rank, kernel)
}

pub fn rank(m: &Matrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Characteristic polynomial `det(x I - m)` by Berkowitz's division-free
/// recurrence.
pub fn char_poly(m: &Matrix) -> Result<UniPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "char_poly of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    // Coefficients, highest degree first.
    let mut p: Vec<GaussianRational> = vec![GaussianRational::one()];
    for r in 1..=n {
        let k = r - 1;
        let a_rr = m[(k, k)].clone();
        let row: Vector = (0..k).map(|j| m[(k, j)].clone()).collect();
        let mut col: Vector = (0..k).map(|i| m[(i, k)].clone()).collect();
        // First column of the Toeplitz factor.
        let mut toeplitz = vec![GaussianRational::one(), -&a_rr];
        for _ in 0..k {
            let dot = dot(&row, &col);
            toeplitz.push(-dot);
            col = (0..k)
                .map(|i| {
                    let mut acc = GaussianRational::zero();
                    for (j, c) in col.iter().enumerate() {
                        if !c.is_zero() && !m[(i, j)].is_zero() {
                            acc += &(&m[(i, j)] * c);
                        }
                    }
                    acc
                })
                .collect();
        }
        let mut next = vec![GaussianRational::zero(); r + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < toeplitz.len() {
                    *slot += &(&toeplitz[i - j] * pj);
                }
            }
        }
        p = next;
    }
    p.reverse();
    Ok(UniPoly::new(p))
}

fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Coordinates of `v` in the basis `basis` (columns), if `v` lies in its span.
pub fn solve_in_span(basis: &[Vector], v: &[GaussianRational]) -> Option<Vector> {
    let n = v.len();
    let k = basis.len();
    if k == 0 {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut aug = Matrix::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            aug[(i, j)] = b[i].clone();
        }
    }
    for i in 0..n {
        aug[(i, k)] = v[i].clone();
    }
    let (e, pivots) = bareiss_echelon(&aug);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); k];
    for (row, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = e[(row, k)].clone();
        for j in pc + 1..k {
            if !e[(row, j)].is_zero() && !x[j].is_zero() {
                acc -= &(&e[(row, j)] * &x[j]);
            }
        }
        x[pc] = &acc * &e[(row, pc)].inv().expect("pivot is nonzero");
    }
    Some(x)
}

/// Greedily selects a maximal linearly independent subfamily.
pub fn independent_subset(vectors: &[Vector]) -> Vec<Vector> {
    let mut chosen: Vec<Vector> = Vec::new();
    for v in vectors {
        if solve_in_span(&chosen, v).is_none() {
            chosen.push(v.clone());
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn identity_and_zero_kernels() {
        let (r, k) = kernel_rank(&Matrix::identity(4));
        assert_eq!((r, k.len()), (4, 0));
        let (r, k) = kernel_rank(&Matrix::zeros(3, 3));
        assert_eq!((r, k.len()), (0, 3));
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let (r, ker) = kernel_rank(&m);
        assert_eq!(r, 2);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn char_poly_identity() {
        // (x-1)^2 = x^2 - 2x + 1
        assert_eq!(
            char_poly(&Matrix::identity(2)).unwrap(),
            UniPoly::from_ints(&[1, -2, 1])
        );
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        let m = Matrix::from_int_rows(&[&[2, -1, 0], &[3, 1, 4], &[0, 5, -2]]);
        // det(xI - m) by hand: x^3 - x^2 - 21x + 2
        // trace 1; principal 2-minors: (2*1+3) + (2*-2-0) + (1*-2-20) = 5 - 4 - 22 = -21
        // det m = 2(1*-2-20) + 1(3*-2-0) = -44 - 6 = -50
        assert_eq!(
            char_poly(&m).unwrap(),
            UniPoly::from_ints(&[50, -21, -1, 1])
        );
    }

    #[test]
    fn char_poly_complex_rotation() {
        let m = Matrix::from_rows(vec![vec![g(0), g(-8)], vec![g(8), g(0)]]);
        assert_eq!(char_poly(&m).unwrap(), UniPoly::from_ints(&[64, 0, 1]));
    }

    #[test]
    fn span_membership() {
        let b = vec![vec![g(1), g(0), g(1)], vec![g(0), g(1), g(1)]];
        assert_eq!(
            solve_in_span(&b, &[g(2), g(3), g(5)]),
            Some(vec![g(2), g(3)])
        );
        assert_eq!(solve_in_span(&b, &[g(0), g(0), g(1)]), None);
    }
}
