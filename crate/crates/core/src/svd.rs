//! Singular value decomposition by one-sided Jacobi.
//!
//! The factorization is written `a = Σ σ_j · η_j ⊗ ξ_j` where `η_j ⊗ ξ_j`
//! is the outer product with entries `η_i · conj(ξ_j)`; equivalently
//! `a = U diag(σ) V^H` with the η's as columns of U and the ξ's as columns
//! of V. Sigmas come back sorted non-increasing. Within a cluster of equal
//! singular values the returned basis is an arbitrary orthonormal basis of
//! the cluster subspace; callers must not depend on the in-cluster choice.

use num_complex::Complex;

use crate::error::Error;
use crate::matrix::{basis_vector, inner, norm2, normalized, project_out, ComplexMatrix};
use crate::scalar::{real, Real};
use crate::tol;

#[derive(Clone, Debug)]
pub struct SvdResult<T> {
    pub sigmas: Vec<T>,
    /// Left orthonormal system η_j, each of length `rows`.
    pub left: Vec<Vec<Complex<T>>>,
    /// Right orthonormal system ξ_j, each of length `cols`.
    pub right: Vec<Vec<Complex<T>>>,
}

impl<T: Real> SvdResult<T> {
    /// `Σ σ_j · η_j ⊗ ξ_j`
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let rows = self.left[0].len();
        let cols = self.right[0].len();
        let mut out = ComplexMatrix::zeros(rows, cols);
        for ((s, eta), xi) in self.sigmas.iter().zip(&self.left).zip(&self.right) {
            for i in 0..rows {
                for j in 0..cols {
                    out[(i, j)] = out[(i, j)] + eta[i] * xi[j].conj() * Complex::new(*s, T::zero());
                }
            }
        }
        out
    }

    pub fn rank(&self, tol: T) -> usize {
        self.sigmas.iter().filter(|&&s| s > tol).count()
    }
}

/// Full SVD with paired left/right orthonormal systems.
pub fn svd<T: Real>(a: &ComplexMatrix<T>) -> Result<SvdResult<T>, Error> {
    if !a.is_finite() {
        return Err(Error::invalid("svd: non-finite input"));
    }
    if a.rows() < a.cols() {
        // work on the adjoint and swap the two systems
        let flipped = svd(&a.adjoint())?;
        return Ok(SvdResult {
            sigmas: flipped.sigmas,
            left: flipped.right,
            right: flipped.left,
        });
    }
    let (work, v) = jacobi_orthogonalize(a, true);
    let v = v.expect("vectors requested");
    let m = a.rows();
    let n = a.cols();

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<T> = (0..n).map(|j| norm2(&work.column(j))).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut sigmas = Vec::with_capacity(n);
    let mut left: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    let mut needs_completion = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        let s = norms[j];
        sigmas.push(s);
        right.push(v.column(j));
        if s > T::zero() {
            left.push(work.column(j).iter().map(|&z| z / s).collect());
        } else {
            left.push(basis_vector::<T>(m, 0)); // placeholder, fixed below
            needs_completion.push(slot);
        }
    }
    // Columns with exactly zero norm carry no direction; complete the left
    // system to an orthonormal family.
    if !needs_completion.is_empty() {
        let keep: Vec<Vec<Complex<T>>> = (0..n)
            .filter(|slot| !needs_completion.contains(slot))
            .map(|slot| left[slot].clone())
            .collect();
        let mut fill = complete_orthonormal(m, &keep, needs_completion.len());
        for slot in needs_completion {
            left[slot] = fill.remove(0);
        }
    }
    Ok(SvdResult { sigmas, left, right })
}

/// Singular values only; skips accumulating the right vectors.
pub fn singular_values<T: Real>(a: &ComplexMatrix<T>) -> Result<Vec<T>, Error> {
    if !a.is_finite() {
        return Err(Error::invalid("svd: non-finite input"));
    }
    let work = if a.rows() < a.cols() {
        jacobi_orthogonalize(&a.adjoint(), false).0
    } else {
        jacobi_orthogonalize(a, false).0
    };
    let n = work.cols();
    let mut sigmas: Vec<T> = (0..n).map(|j| norm2(&work.column(j))).collect();
    sigmas.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(sigmas)
}

impl<T: Real> ComplexMatrix<T> {
    /// Operator norm σ₁ (the `‖·‖_∞` of the crate's norm conventions).
    pub fn operator_norm(&self) -> T {
        singular_values(self).expect("finite matrix")[0]
    }
}

/// Cyclic one-sided Jacobi: right-multiplies `a` by rotations until its
/// columns are pairwise orthogonal. Returns the rotated matrix and, when
/// requested, the accumulated product of rotations.
fn jacobi_orthogonalize<T: Real>(
    a: &ComplexMatrix<T>,
    want_v: bool,
) -> (ComplexMatrix<T>, Option<ComplexMatrix<T>>) {
    let n = a.cols();
    let mut w = a.clone();
    let mut v = if want_v {
        Some(ComplexMatrix::identity(n))
    } else {
        None
    };
    let tol = T::jacobi_tol();
    for _ in 0..tol::SVD_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let (alpha, beta, gamma) = gram_pair(&w, p, q);
                if alpha == T::zero() || beta == T::zero() {
                    continue;
                }
                let g = gamma.norm();
                if g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / Complex::new(g, T::zero());
                let tau = (beta - alpha) / (real::<T>(2.0) * g);
                let t = {
                    let sign = if tau < T::zero() { -T::one() } else { T::one() };
                    sign / (tau.abs() + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = phase.conj() * Complex::new(t * c, T::zero());
                rotate_columns(&mut w, p, q, c, s);
                if let Some(v) = v.as_mut() {
                    rotate_columns(v, p, q, c, s);
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (w, v)
}

/// Gram data of columns p, q: (‖w_p‖², ‖w_q‖², w_p^H w_q).
fn gram_pair<T: Real>(w: &ComplexMatrix<T>, p: usize, q: usize) -> (T, T, Complex<T>) {
    let mut alpha = T::zero();
    let mut beta = T::zero();
    let mut gamma = Complex::new(T::zero(), T::zero());
    for i in 0..w.rows() {
        let wp = w[(i, p)];
        let wq = w[(i, q)];
        alpha += wp.norm_sqr();
        beta += wq.norm_sqr();
        gamma = gamma + wp.conj() * wq;
    }
    (alpha, beta, gamma)
}

/// col_p ← c·col_p + s·col_q,  col_q ← −conj(s)·col_p + c·col_q
fn rotate_columns<T: Real>(w: &mut ComplexMatrix<T>, p: usize, q: usize, c: T, s: Complex<T>) {
    let cc = Complex::new(c, T::zero());
    for i in 0..w.rows() {
        let wp = w[(i, p)];
        let wq = w[(i, q)];
        w[(i, p)] = cc * wp + s * wq;
        w[(i, q)] = cc * wq - s.conj() * wp;
    }
}

fn complete_orthonormal<T: Real>(
    dim: usize,
    existing: &[Vec<Complex<T>>],
    count: usize,
) -> Vec<Vec<Complex<T>>> {
    let mut out: Vec<Vec<Complex<T>>> = Vec::with_capacity(count);
    let gate = real::<T>(0.1);
    for k in 0..dim {
        if out.len() == count {
            break;
        }
        let mut cand = basis_vector::<T>(dim, k);
        project_out(&mut cand, existing);
        project_out(&mut cand, &out);
        if norm2(&cand) > gate {
            let mut cand = normalized(&cand);
            project_out(&mut cand, existing);
            project_out(&mut cand, &out);
            out.push(normalized(&cand));
        }
    }
    assert_eq!(out.len(), count, "orthonormal completion failed");
    out
}

/// Residual of the factorization in operator norm, for tests and certification.
pub fn reconstruction_residual<T: Real>(a: &ComplexMatrix<T>, r: &SvdResult<T>) -> T {
    (&r.reconstruct() - a).operator_norm()
}

/// Max deviation of `vs` from pairwise orthonormality.
pub fn orthonormality_defect<T: Real>(vs: &[Vec<Complex<T>>]) -> T {
    let mut worst = T::zero();
    for i in 0..vs.len() {
        for j in i..vs.len() {
            let g = inner(&vs[i], &vs[j]);
            let target = if i == j { T::one() } else { T::zero() };
            let dev = (g - Complex::new(target, T::zero())).norm();
            worst = worst.max(dev);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_sorted() {
        let a = ComplexMatrix::<f64>::diag(&[3.0, 4.0]);
        let r = svd(&a).unwrap();
        assert!((r.sigmas[0] - 4.0).abs() < 1e-14);
        assert!((r.sigmas[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix() {
        let a = ComplexMatrix::<f64>::zeros(2, 2);
        let r = svd(&a).unwrap();
        assert_eq!(r.sigmas, vec![0.0, 0.0]);
        assert!(orthonormality_defect(&r.left) < 1e-14);
        assert!(orthonormality_defect(&r.right) < 1e-14);
    }

    #[test]
    fn rejects_non_finite() {
        let mut a = ComplexMatrix::<f64>::zeros(2, 2);
        a[(0, 0)] = num_complex::Complex64::new(f64::INFINITY, 0.0);
        assert!(matches!(svd(&a), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rectangular_shapes() {
        for (rows, cols) in [(3usize, 2usize), (2, 3), (4, 1), (1, 4)] {
            let a = ComplexMatrix::<f64>::from_fn(rows, cols, |i, j| {
                num_complex::Complex64::new((i + 2 * j) as f64 * 0.3 - 0.7, (i * j) as f64 * 0.1)
            });
            let r = svd(&a).unwrap();
            assert_eq!(r.sigmas.len(), rows.min(cols));
            assert_eq!(r.left[0].len(), rows);
            assert_eq!(r.right[0].len(), cols);
            assert!(reconstruction_residual(&a, &r) < 1e-12);
            assert!(orthonormality_defect(&r.left) < 1e-12);
            assert!(orthonormality_defect(&r.right) < 1e-12);
        }
    }

    #[test]
    fn singular_values_match_full_svd() {
        let a = ComplexMatrix::<f64>::from_fn(4, 4, |i, j| {
            num_complex::Complex64::new(((i * 7 + j * 3) % 5) as f64 - 2.0, ((i + j) % 3) as f64)
        });
        let full = svd(&a).unwrap();
        let vals = singular_values(&a).unwrap();
        for (x, y) in full.sigmas.iter().zip(vals.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn f32_instantiation() {
        let a = ComplexMatrix::<f32>::diag(&[3.0, 4.0]);
        let r = svd(&a).unwrap();
        assert!((r.sigmas[0] - 4.0).abs() < 1e-5);
        assert!(reconstruction_residual(&a, &r) < 1e-5);
    }
}
