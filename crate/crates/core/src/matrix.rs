//! Dense complex matrices and small vector helpers.
//!
//! Matrices are row-major over `Complex<T>`. The outer product follows the
//! bra-ket convention used throughout the crate: `outer(η, ξ)` has entries
//! `η_i · conj(ξ_j)`, i.e. it maps `ζ ↦ ⟨ζ|ξ⟩ η`.

use num_complex::Complex;

use crate::error::Error;
use crate::scalar::Real;

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    /// Builds a matrix from row-major entries, validating shape and finiteness.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "entry count {} does not match {}x{}",
                entries.len(),
                rows,
                cols
            )));
        }
        let m = Self { rows, cols, entries };
        if !m.is_finite() {
            return Err(Error::invalid("matrix entries must be finite"));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_parts(rows, cols, vec![Complex::new(T::zero(), T::zero()); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::from_parts(rows, cols, entries)
    }

    pub fn diag(values: &[T]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex::new(v, T::zero());
        }
        m
    }

    /// Outer product `η ⊗ ξ` with entries `η_i · conj(ξ_j)`.
    pub fn outer(eta: &[Complex<T>], xi: &[Complex<T>]) -> Self {
        Self::from_fn(eta.len(), xi.len(), |i, j| eta[i] * xi[j].conj())
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

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise conjugation in the standard basis.
    pub fn conj(&self) -> Self {
        Self::from_parts(
            self.rows,
            self.cols,
            self.entries.iter().map(|z| z.conj()).collect(),
        )
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::from_parts(
            self.rows,
            self.cols,
            self.entries.iter().map(|&z| z * s).collect(),
        )
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            t = t + self[(i, i)];
        }
        t
    }

    /// Hilbert-Schmidt inner product `tr(self^H · rhs)`, conjugate-linear in `self`.
    pub fn hs_inner(&self, rhs: &Self) -> Complex<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut acc = Complex::new(T::zero(), T::zero());
        for (a, b) in self.entries.iter().zip(rhs.entries.iter()) {
            acc = acc + a.conj() * *b;
        }
        acc
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Complex<T>> {
        (0..self.cols).map(|j| self[(i, j)]).collect()
    }

    /// Matrix-vector product.
    pub fn apply_vec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for j in 0..self.cols {
                    acc = acc + self[(i, j)] * x[j];
                }
                acc
            })
            .collect()
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Complex<T>>]) -> Self {
        let n = cols[0].len();
        Self::from_fn(n, cols.len(), |i, j| cols[j][i])
    }
}

impl<T: Real> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.cols + j]
    }
}

impl<T: Real> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Real> std::ops::Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_parts(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }
}

impl<T: Real> std::ops::Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_parts(
            self.rows,
            self.cols,
            self.entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }
}

impl<T: Real> std::ops::Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Real> std::ops::Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix::from_parts(
            self.rows,
            self.cols,
            self.entries.iter().map(|&z| -z).collect(),
        )
    }
}

impl<T: Real> std::fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "({:?}{:+?}i) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// ── vector helpers ──────────────────────────────────────────────────

/// `x^H y`, conjugate-linear in the first argument.
pub fn inner<T: Real>(x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
    assert_eq!(x.len(), y.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in x.iter().zip(y.iter()) {
        acc = acc + a.conj() * *b;
    }
    acc
}

pub fn norm2<T: Real>(x: &[Complex<T>]) -> T {
    x.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

pub fn normalized<T: Real>(x: &[Complex<T>]) -> Vec<Complex<T>> {
    let n = norm2(x);
    assert!(n > T::zero(), "cannot normalize the zero vector");
    x.iter().map(|&z| z / n).collect()
}

/// Standard basis vector `e_k` in dimension `n`.
pub fn basis_vector<T: Real>(n: usize, k: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::new(T::zero(), T::zero()); n];
    v[k] = Complex::new(T::one(), T::zero());
    v
}

/// Removes the components of `x` along each (orthonormal) vector in `basis`.
pub fn project_out<T: Real>(x: &mut [Complex<T>], basis: &[Vec<Complex<T>>]) {
    for b in basis {
        let c = inner(b, x);
        for (xi, bi) in x.iter_mut().zip(b.iter()) {
            *xi = *xi - c * *bi;
        }
    }
}

/// Orthonormal basis of the orthogonal complement of `span(vs)` in ℂⁿ.
///
/// Deterministic: candidates are taken from the standard basis in order,
/// projected twice for stability.
pub fn orthonormal_complement<T: Real>(n: usize, vs: &[Vec<Complex<T>>]) -> Vec<Vec<Complex<T>>> {
    let target = n - vs.len();
    let mut out: Vec<Vec<Complex<T>>> = Vec::with_capacity(target);
    let half = crate::scalar::real::<T>(0.5);
    for k in 0..n {
        if out.len() == target {
            break;
        }
        let mut cand = basis_vector::<T>(n, k);
        project_out(&mut cand, vs);
        project_out(&mut cand, &out);
        let nrm = norm2(&cand);
        if nrm > half {
            // second pass tightens orthogonality
            let mut cand: Vec<_> = cand.iter().map(|&z| z / nrm).collect();
            project_out(&mut cand, vs);
            project_out(&mut cand, &out);
            out.push(normalized(&cand));
        }
    }
    // Standard-basis candidates rejected by the 0.5 gate can in principle
    // leave the complement short; sweep again with a smaller gate.
    if out.len() < target {
        let small = crate::scalar::real::<T>(1e-3);
        for k in 0..n {
            if out.len() == target {
                break;
            }
            let mut cand = basis_vector::<T>(n, k);
            project_out(&mut cand, vs);
            project_out(&mut cand, &out);
            if norm2(&cand) > small {
                let mut cand = normalized(&cand);
                project_out(&mut cand, vs);
                project_out(&mut cand, &out);
                out.push(normalized(&cand));
            }
        }
    }
    assert_eq!(out.len(), target, "complement construction failed");
    out
}
