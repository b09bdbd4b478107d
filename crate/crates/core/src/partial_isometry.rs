//! Partial isometries: certification, rank-one construction, support.
//!
//! An element `e` is a partial isometry when `e e* e = e`, equivalently when
//! every singular value is 0 or 1. Minimal means rank one.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::{norm2, ComplexMatrix};
use crate::scalar::{real, Real};
use crate::svd::{singular_values, svd};
use crate::tol;

#[derive(Clone, Debug)]
pub struct PartialIsometry<T> {
    matrix: ComplexMatrix<T>,
    rank: usize,
}

impl<T: Real> PartialIsometry<T> {
    /// Certifies `m` as a partial isometry with the default tolerances
    /// (`‖ee*e − e‖ ≤ 1e-9`, singular values within 1e-7 of {0, 1}).
    pub fn certify(m: ComplexMatrix<T>) -> Result<Self, Error> {
        Self::certify_with(m, real(tol::PI_CERT_TOL), real(tol::PI_SIGMA_TOL))
    }

    pub fn certify_with(m: ComplexMatrix<T>, cert_tol: T, sigma_tol: T) -> Result<Self, Error> {
        if !m.is_finite() {
            return Err(Error::invalid("partial isometry: non-finite entries"));
        }
        let residual = (&m.matmul(&m.adjoint()).matmul(&m) - &m).operator_norm();
        if residual > cert_tol {
            return Err(Error::invalid(format!(
                "not a partial isometry: ‖ee*e − e‖ = {residual:e}"
            )));
        }
        let sigmas = singular_values(&m)?;
        let mut rank = 0;
        for s in &sigmas {
            if (*s - T::one()).abs() <= sigma_tol {
                rank += 1;
            } else if s.abs() > sigma_tol {
                return Err(Error::invalid(format!(
                    "singular value {s} not within tolerance of {{0, 1}}"
                )));
            }
        }
        if rank == 0 {
            return Err(Error::invalid("zero matrix is not a partial isometry"));
        }
        Ok(Self { matrix: m, rank })
    }

    /// Construction that is a partial isometry by algebra; skips the SVD pass.
    pub(crate) fn from_orthonormal_pairs(
        etas: &[Vec<Complex<T>>],
        xis: &[Vec<Complex<T>>],
    ) -> Self {
        debug_assert_eq!(etas.len(), xis.len());
        let rows = etas[0].len();
        let cols = xis[0].len();
        let mut m = ComplexMatrix::zeros(rows, cols);
        for (eta, xi) in etas.iter().zip(xis.iter()) {
            for i in 0..rows {
                for j in 0..cols {
                    m[(i, j)] = m[(i, j)] + eta[i] * xi[j].conj();
                }
            }
        }
        Self { matrix: m, rank: etas.len() }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_minimal(&self) -> bool {
        self.rank == 1
    }

    /// Range projection `e e*`.
    pub fn left_projection(&self) -> ComplexMatrix<T> {
        self.matrix.matmul(&self.matrix.adjoint())
    }

    /// Co-range projection `e* e`.
    pub fn right_projection(&self) -> ComplexMatrix<T> {
        self.matrix.adjoint().matmul(&self.matrix)
    }
}

/// Minimal partial isometry `η ⊗ ξ` from unit vectors.
pub fn rank_one<T: Real>(eta: &[Complex<T>], xi: &[Complex<T>]) -> Result<PartialIsometry<T>, Error> {
    let tol = real::<T>(tol::UNIT_VECTOR_TOL);
    if (norm2(eta) - T::one()).abs() > tol || (norm2(xi) - T::one()).abs() > tol {
        return Err(Error::invalid("rank_one: inputs must be unit vectors"));
    }
    Ok(PartialIsometry {
        matrix: ComplexMatrix::outer(eta, xi),
        rank: 1,
    })
}

/// Rank-one from arbitrary nonzero vectors, normalizing internally.
pub(crate) fn rank_one_normalized<T: Real>(
    eta: &[Complex<T>],
    xi: &[Complex<T>],
) -> PartialIsometry<T> {
    let ne = norm2(eta);
    let nx = norm2(xi);
    let eta: Vec<_> = eta.iter().map(|&z| z / ne).collect();
    let xi: Vec<_> = xi.iter().map(|&z| z / nx).collect();
    PartialIsometry {
        matrix: ComplexMatrix::outer(&eta, &xi),
        rank: 1,
    }
}

/// Support partial isometry `s(a) = Σ_{σ_n > zero_tol} η_n ⊗ ξ_n` with the
/// default cutoff `1e-10 · σ₁`.
pub fn support<T: Real>(a: &ComplexMatrix<T>) -> Result<PartialIsometry<T>, Error> {
    let sigma1 = a.operator_norm();
    support_with(a, real::<T>(tol::SUPPORT_ZERO_TOL_REL) * sigma1)
}

pub fn support_with<T: Real>(a: &ComplexMatrix<T>, zero_tol: T) -> Result<PartialIsometry<T>, Error> {
    let r = svd(a)?;
    if r.sigmas[0] <= T::epsilon() {
        return Err(Error::DegenerateInput(
            "support of the zero matrix is undefined".into(),
        ));
    }
    let keep: Vec<usize> = (0..r.sigmas.len())
        .filter(|&j| r.sigmas[j] > zero_tol)
        .collect();
    let etas: Vec<_> = keep.iter().map(|&j| r.left[j].clone()).collect();
    let xis: Vec<_> = keep.iter().map(|&j| r.right[j].clone()).collect();
    Ok(PartialIsometry::from_orthonormal_pairs(&etas, &xis))
}

/// Predicate: does `e` certify as a rank-one partial isometry at tolerance `tol`?
///
/// Returns false (never errors) on non-finite input.
pub fn is_minimal_pi<T: Real>(e: &ComplexMatrix<T>, tol: T) -> bool {
    if !e.is_finite() {
        return false;
    }
    match PartialIsometry::certify_with(e.clone(), tol, tol.max(real(crate::tol::PI_SIGMA_TOL))) {
        Ok(pi) => pi.is_minimal(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vector;

    #[test]
    fn rank_one_standard_units() {
        let e1 = basis_vector::<f64>(2, 0);
        let e2 = basis_vector::<f64>(2, 1);
        let m = rank_one(&e1, &e1).unwrap();
        assert_eq!(m.matrix()[(0, 0)].re, 1.0);
        assert!(m.is_minimal());
        let m12 = rank_one(&e1, &e2).unwrap();
        assert_eq!(m12.matrix()[(0, 1)].re, 1.0);
        assert_eq!(m12.matrix()[(1, 0)].re, 0.0);
    }

    #[test]
    fn rank_one_rejects_non_unit() {
        let v = vec![num_complex::Complex64::new(0.5, 0.0), num_complex::Complex64::new(0.0, 0.0)];
        let u = basis_vector::<f64>(2, 0);
        assert!(matches!(rank_one(&v, &u), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn support_of_diag() {
        let a = ComplexMatrix::<f64>::diag(&[2.0, 0.0]);
        let s = support(&a).unwrap();
        assert_eq!(s.rank(), 1);
        assert!((s.matrix()[(0, 0)].re - 1.0).abs() < 1e-12);
        assert!(s.matrix()[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn support_of_zero_is_degenerate() {
        let a = ComplexMatrix::<f64>::zeros(2, 2);
        assert!(matches!(support(&a), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn minimal_predicate_edge_cases() {
        let e11 = ComplexMatrix::<f64>::diag(&[1.0, 0.0]);
        assert!(is_minimal_pi(&e11, 1e-9));
        let id = ComplexMatrix::<f64>::identity(2);
        assert!(!is_minimal_pi(&id, 1e-9)); // rank 2
        let half = e11.scale_re(0.5);
        assert!(!is_minimal_pi(&half, 1e-9)); // singular value 0.5
        let mut bad = ComplexMatrix::<f64>::zeros(2, 2);
        bad[(0, 0)] = num_complex::Complex64::new(f64::NAN, 0.0);
        assert!(!is_minimal_pi(&bad, 1e-9));
    }
}
