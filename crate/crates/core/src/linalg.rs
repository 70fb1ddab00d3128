//! Dense complex vectors and square matrices for few-qubit state spaces.
//!
//! Everything here targets dimensions 2, 4 and 8, so storage is a plain
//! row-major `Vec` and all products are written out naively. Entries are
//! validated to be finite on construction; identity checks use absolute
//! elementwise tolerances (the default across this crate is 1e-12, far above
//! the roundoff accumulated by a handful of unit-magnitude products).

use std::ops::{Add, Mul, Neg, Sub};

pub type Complex64 = num_complex::Complex<f64>;

/// Absolute tolerance used by the exact-identity checks in this crate.
pub const IDENTITY_TOL: f64 = 1e-12;

fn assert_finite(entries: &[Complex64]) {
    assert!(
        entries.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
        "non-finite entry in complex data"
    );
}

/// A ket of dimension 2^n, indexed with particle 1 as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    /// Wraps entries after checking the dimension is a positive power of two
    /// and every entry is finite.
    pub fn new(entries: Vec<Complex64>) -> Self {
        assert!(
            !entries.is_empty() && entries.len().is_power_of_two(),
            "vector dimension must be a positive power of two, got {}",
            entries.len()
        );
        assert_finite(&entries);
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); dim])
    }

    /// Computational basis ket |index⟩.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "basis index {index} out of range for dim {dim}"
        );
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        v[index] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn from_reals(reals: &[f64]) -> Self {
        Self::new(reals.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, index: usize) -> Complex64 {
        self.entries[index]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Inner product ⟨self|other⟩, conjugating `self`.
    pub fn inner(&self, other: &ComplexVector) -> Complex64 {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dimension mismatch in inner product"
        );
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.entries.iter().map(|c| c * factor).collect())
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scale(Complex64::new(1.0 / n, 0.0))
    }

    /// Tensor product |self⟩ ⊗ |other⟩ with `self` as the leftmost factor.
    pub fn tensor(&self, other: &ComplexVector) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                out.push(a * b);
            }
        }
        Self::new(out)
    }

    pub fn max_abs_diff(&self, other: &ComplexVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in comparison");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// True iff the largest elementwise absolute difference is within `tol`.
    pub fn approx_eq(&self, other: &ComplexVector, tol: f64) -> bool {
        assert!(tol > 0.0, "tolerance must be positive");
        self.max_abs_diff(other) <= tol
    }
}

impl Add for &ComplexVector {
    type Output = ComplexVector;

    fn add(self, rhs: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in addition");
        ComplexVector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &ComplexVector {
    type Output = ComplexVector;

    fn sub(self, rhs: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in subtraction");
        ComplexVector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &ComplexVector {
    type Output = ComplexVector;

    fn neg(self) -> ComplexVector {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// A square matrix over `Complex64`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Self {
        assert!(
            dim > 0 && dim.is_power_of_two(),
            "matrix dimension must be a positive power of two, got {dim}"
        );
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        assert_finite(&entries);
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(dim, vec![Complex64::new(0.0, 0.0); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a 2×2 matrix from rows; handy for Pauli literals.
    pub fn from_rows_2(rows: [[Complex64; 2]; 2]) -> Self {
        Self::new(2, vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.entries[row * self.dim + col] = value;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.dim, self.entries.iter().map(|c| c * factor).collect())
    }

    /// Kronecker product with `self` as the leftmost (most significant) factor.
    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Commutator ab − ba.
    pub fn commutator(&self, other: &ComplexMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// Anti-commutator ab + ba.
    pub fn anti_commutator(&self, other: &ComplexMatrix) -> Self {
        &(self * other) + &(other * self)
    }

    /// Largest entrywise absolute value.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in comparison");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// True iff the largest elementwise absolute difference is within `tol`.
    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        assert!(tol > 0.0, "tolerance must be positive");
        self.max_abs_diff(other) <= tol
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Matrix product; the right factor acts first on kets.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * rhs.get(k, j));
                }
            }
        }
        out
    }
}

impl Mul<&ComplexVector> for &ComplexMatrix {
    type Output = ComplexVector;

    fn mul(self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(
            self.dim,
            v.dim(),
            "dimension mismatch in matrix-vector product"
        );
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.get(i, j) * v.entry(j);
            }
            *slot = acc;
        }
        ComplexVector::new(out)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in addition");
        ComplexMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in subtraction");
        ComplexMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn inner_product_conjugates_left_argument() {
        let v = ComplexVector::new(vec![c(0.0, 1.0), c(1.0, 0.0)]);
        let w = ComplexVector::new(vec![c(0.0, 1.0), c(0.0, 0.0)]);
        // ⟨v|w⟩ = conj(i)·i = 1
        assert_eq!(v.inner(&w), c(1.0, 0.0));
    }

    #[test]
    fn tensor_puts_left_factor_most_significant() {
        let e0 = ComplexVector::basis_state(2, 0);
        let e1 = ComplexVector::basis_state(2, 1);
        let t = e1.tensor(&e0); // |1⟩⊗|0⟩ = index 2 of dim 4
        assert_eq!(t.entry(2), c(1.0, 0.0));
        assert_eq!(t.norm_sqr(), 1.0);
    }

    #[test]
    fn kron_block_structure() {
        let id = ComplexMatrix::identity(2);
        let mut x = ComplexMatrix::zeros(2);
        x.set(0, 1, c(1.0, 0.0));
        x.set(1, 0, c(1.0, 0.0));
        let m = id.kron(&x); // block-diagonal [[x,0],[0,x]]
        assert_eq!(m.get(0, 1), c(1.0, 0.0));
        assert_eq!(m.get(2, 3), c(1.0, 0.0));
        assert_eq!(m.get(0, 3), c(0.0, 0.0));
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let m =
            ComplexMatrix::from_rows_2([[c(1.0, 2.0), c(0.0, -1.0)], [c(3.0, 0.0), c(0.5, 0.5)]]);
        let id = ComplexMatrix::identity(2);
        assert!((&id * &m).approx_eq(&m, 1e-15));
        assert!((&m * &id).approx_eq(&m, 1e-15));
    }

    #[test]
    fn self_commutator_vanishes() {
        let m =
            ComplexMatrix::from_rows_2([[c(1.0, 2.0), c(0.0, -1.0)], [c(3.0, 0.0), c(0.5, 0.5)]]);
        assert_eq!(m.commutator(&m).max_abs(), 0.0);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mismatched_product_panics() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(4);
        let _ = &a * &b;
    }

    #[test]
    #[should_panic(expected = "non-finite")]
    fn non_finite_entries_rejected() {
        let _ = ComplexVector::new(vec![c(f64::NAN, 0.0), c(0.0, 0.0)]);
    }
}
