//! Distance profiles `f_a(e) = ‖a − γe‖_p^p` over minimal partial
//! isometries, for unit-norm `a`, `γ ≥ 1` and `p ∈ (1, ∞) \ {2}`.
//!
//! The minimum value is `(γ−σ₁)^p + 1 − σ₁^p` and the minimizer set is
//! exactly `{v minimal : v ≤ e_m}` where `e_m` sums the spectral terms of
//! the largest singular-value cluster.

use num_complex::Complex;

use crate::error::Error;
use crate::lp::min_value_formula;
use crate::matrix::ComplexMatrix;
use crate::norm::{gate_p_not_two, norm_p_pow, schatten_norm, PNorm};
use crate::partial_isometry::PartialIsometry;
use crate::scalar::{real, Real};
use crate::svd::svd;
use crate::tol;

pub use crate::lp::invert_min_value;

/// The profile minimum, the top singular value it encodes, and the
/// top-cluster partial isometry.
#[derive(Clone, Debug)]
pub struct ProfileSummary<T> {
    pub min_value: T,
    pub sigma1: T,
    pub e_m: PartialIsometry<T>,
    pub cluster_size: usize,
}

fn validate_profile_args<T: Real>(a: &ComplexMatrix<T>, gamma: T, p: T) -> Result<(), Error> {
    gate_p_not_two(p)?;
    if gamma < T::one() || !gamma.is_finite() {
        return Err(Error::invalid("gamma must be a finite real ≥ 1"));
    }
    let nrm = schatten_norm(a, PNorm::Finite(p))?;
    if (nrm - T::one()).abs() > real::<T>(tol::UNIT_NORM_TOL) {
        return Err(Error::invalid(format!(
            "profile: a must have unit p-norm, got {nrm}"
        )));
    }
    Ok(())
}

/// `‖a − γe‖_p^p` for a minimal partial isometry `e`.
pub fn profile_value<T: Real>(
    a: &ComplexMatrix<T>,
    e: &PartialIsometry<T>,
    gamma: T,
    p: T,
) -> Result<T, Error> {
    validate_profile_args(a, gamma, p)?;
    if !e.is_minimal() {
        return Err(Error::invalid("profile_value: e must be minimal"));
    }
    if (e.matrix().rows(), e.matrix().cols()) != (a.rows(), a.cols()) {
        return Err(Error::invalid("profile_value: dimension mismatch"));
    }
    Ok(norm_p_pow(&(a - &e.matrix().scale_re(gamma)), p))
}

/// Closed-form profile minimum together with σ₁ and the cluster isometry.
///
/// The cluster is `σ_j ≥ σ₁·(1 − cluster_tol)`; the default width is
/// [`tol::CLUSTER_TOL_REL`].
pub fn profile_summary<T: Real>(
    a: &ComplexMatrix<T>,
    gamma: T,
    p: T,
    cluster_tol: T,
) -> Result<ProfileSummary<T>, Error> {
    validate_profile_args(a, gamma, p)?;
    let r = svd(a)?;
    let sigma1 = r.sigmas[0];
    if sigma1 <= T::zero() {
        return Err(Error::DegenerateInput("profile_summary: a is zero".into()));
    }
    let cut = sigma1 * (T::one() - cluster_tol);
    let cluster: Vec<usize> = (0..r.sigmas.len()).filter(|&j| r.sigmas[j] >= cut).collect();
    let etas: Vec<_> = cluster.iter().map(|&j| r.left[j].clone()).collect();
    let xis: Vec<_> = cluster.iter().map(|&j| r.right[j].clone()).collect();
    Ok(ProfileSummary {
        min_value: min_value_formula(sigma1, gamma, p),
        sigma1,
        cluster_size: cluster.len(),
        e_m: PartialIsometry::from_orthonormal_pairs(&etas, &xis),
    })
}

/// Whether the minimal `v` lies under the cluster isometry, i.e. `v ≤ e_m`,
/// tested algebraically as `e_m v*v = v` and `v v* e_m = v` within `tol`.
pub fn minimizer_membership<T: Real>(
    v: &PartialIsometry<T>,
    summary: &ProfileSummary<T>,
    tol: T,
) -> bool {
    if !v.is_minimal() {
        return false;
    }
    let em = summary.e_m.matrix();
    let vm = v.matrix();
    if (em.rows(), em.cols()) != (vm.rows(), vm.cols()) {
        return false;
    }
    let lhs = (&em.matmul(&vm.adjoint().matmul(vm)) - vm).operator_norm();
    let rhs = (&vm.matmul(&vm.adjoint()).matmul(em) - vm).operator_norm();
    lhs <= tol && rhs <= tol
}

/// Hermitian dilation `2^{-1/p} [[0, a], [a*, 0]]` of a square matrix.
///
/// Its eigenvalues are `±2^{-1/p} σ_j(a)` and its p-norm equals `‖a‖_p`.
pub fn wielandt<T: Real>(a: &ComplexMatrix<T>, p: T) -> Result<ComplexMatrix<T>, Error> {
    if !a.is_square() {
        return Err(Error::invalid("wielandt: a must be square"));
    }
    if !(p >= T::one() && p.is_finite()) {
        return Err(Error::invalid("wielandt: p must lie in [1, ∞)"));
    }
    let n = a.rows();
    let scale = real::<T>(0.5).powf(T::one() / p);
    let mut out = ComplexMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            out[(i, n + j)] = a[(i, j)] * Complex::new(scale, T::zero());
            out[(n + i, j)] = a[(j, i)].conj() * Complex::new(scale, T::zero());
        }
    }
    Ok(out)
}

/// Eigenpair residuals certifying the dilation's spectrum.
///
/// For each singular triple `(σ_j, η_j, ξ_j)` of `a` the vectors
/// `(η_j; ±ξ_j)/√2` are orthonormal eigenvectors of the dilation with
/// eigenvalues `±2^{-1/p}σ_j`; returns the worst residual
/// `‖ã w − λ w‖₂` over all 2n claimed pairs.
pub fn wielandt_eigen_residual<T: Real>(a: &ComplexMatrix<T>, p: T) -> Result<T, Error> {
    let n = a.rows();
    let tilde = wielandt(a, p)?;
    let r = svd(a)?;
    let scale = real::<T>(0.5).powf(T::one() / p);
    let inv_sqrt2 = real::<T>(0.5).sqrt();
    let mut worst = T::zero();
    for j in 0..n {
        for sign in [T::one(), -T::one()] {
            let mut w: Vec<Complex<T>> = Vec::with_capacity(2 * n);
            w.extend(r.left[j].iter().map(|&z| z * Complex::new(inv_sqrt2, T::zero())));
            w.extend(
                r.right[j]
                    .iter()
                    .map(|&z| z * Complex::new(sign * inv_sqrt2, T::zero())),
            );
            let lambda = sign * scale * r.sigmas[j];
            let tw = tilde.apply_vec(&w);
            let res: T = tw
                .iter()
                .zip(w.iter())
                .map(|(&t, &x)| (t - x * Complex::new(lambda, T::zero())).norm_sqr())
                .fold(T::zero(), |s, x| s + x)
                .sqrt();
            worst = worst.max(res);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vector;
    use crate::partial_isometry::rank_one;

    #[test]
    fn profile_at_own_support_is_zero() {
        let e1 = basis_vector::<f64>(2, 0);
        let e = rank_one(&e1, &e1).unwrap();
        let v = profile_value(e.matrix(), &e, 1.0, 3.0).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn profile_of_normalized_identity() {
        // a = 2^{-1/p} I₂, e = e₁⊗e₁, γ = 1 → (1 − 2^{-1/p})^p + 1/2
        let p = 3.0;
        let s = 0.5f64.powf(1.0 / p);
        let a = ComplexMatrix::<f64>::identity(2).scale_re(s);
        let e1 = basis_vector::<f64>(2, 0);
        let e = rank_one(&e1, &e1).unwrap();
        let v = profile_value(&a, &e, 1.0, p).unwrap();
        let expected = (1.0 - s).powf(p) + 0.5;
        assert!((v - expected).abs() < 1e-12);
    }

    #[test]
    fn summary_of_rank_one() {
        let a = ComplexMatrix::<f64>::diag(&[1.0, 0.0]);
        let s = profile_summary(&a, 2.0, 3.0, 1e-8).unwrap();
        assert!((s.sigma1 - 1.0).abs() < 1e-12);
        assert_eq!(s.cluster_size, 1);
        assert!((s.min_value - 1.0).abs() < 1e-12); // (γ−1)^p = 1
        assert!((s.e_m.matrix() - &a).operator_norm() < 1e-12);
    }

    #[test]
    fn summary_of_normalized_identity() {
        let p = 3.0;
        let s = 0.5f64.powf(1.0 / p);
        let a = ComplexMatrix::<f64>::identity(2).scale_re(s);
        let summ = profile_summary(&a, 1.0, p, 1e-8).unwrap();
        assert_eq!(summ.cluster_size, 2);
        assert!((summ.e_m.matrix() - &ComplexMatrix::identity(2)).operator_norm() < 1e-10);
        let expected = (1.0 - s).powf(p) + 0.5;
        assert!((summ.min_value - expected).abs() < 1e-12);
    }

    #[test]
    fn membership_examples() {
        let p = 3.0;
        let s = 0.5f64.powf(1.0 / p);
        let a = ComplexMatrix::<f64>::identity(2).scale_re(s);
        let summ = profile_summary(&a, 1.0, p, 1e-8).unwrap();
        let e1 = basis_vector::<f64>(2, 0);
        let e2 = basis_vector::<f64>(2, 1);
        let diag = rank_one(&e1, &e1).unwrap();
        assert!(minimizer_membership(&diag, &summ, 1e-9));
        // off-diagonal η₁⊗ξ₂ is not below e_m = I
        let off = rank_one(&e1, &e2).unwrap();
        assert!(!minimizer_membership(&off, &summ, 1e-9));
        let off_val = profile_value(&a, &off, 1.0, p).unwrap();
        assert!(off_val > summ.min_value + 1e-3, "strictly larger off the set");
    }

    #[test]
    fn profile_rejects_bad_args() {
        let a = ComplexMatrix::<f64>::diag(&[1.0, 0.0]);
        let e1 = basis_vector::<f64>(2, 0);
        let e = rank_one(&e1, &e1).unwrap();
        assert!(profile_value(&a, &e, 0.5, 3.0).is_err()); // γ < 1
        assert!(profile_value(&a, &e, 1.0, 2.0).is_err()); // p = 2
        let not_unit = a.scale_re(0.7);
        assert!(profile_value(&not_unit, &e, 1.0, 3.0).is_err());
    }

    #[test]
    fn wielandt_shape_and_hermiticity() {
        let a = ComplexMatrix::<f64>::from_fn(2, 2, |i, j| {
            num_complex::Complex64::new((i + j) as f64, (i as f64) - (j as f64))
        });
        let t = wielandt(&a, 3.0).unwrap();
        assert_eq!(t.rows(), 4);
        assert!((&t - &t.adjoint()).max_abs() == 0.0);
        let rect = ComplexMatrix::<f64>::zeros(2, 3);
        assert!(wielandt(&rect, 3.0).is_err());
    }

    #[test]
    fn wielandt_eigenvalues_of_rank_one() {
        // a = diag(1, 0), p = 3: eigenvalues {±2^{-1/3}, 0, 0}
        let a = ComplexMatrix::<f64>::diag(&[1.0, 0.0]);
        let res = wielandt_eigen_residual(&a, 3.0).unwrap();
        assert!(res < 1e-12, "residual {res:e}");
        let t = wielandt(&a, 3.0).unwrap();
        let sv = crate::svd::singular_values(&t).unwrap();
        let s = 0.5f64.powf(1.0 / 3.0);
        assert!((sv[0] - s).abs() < 1e-12);
        assert!((sv[1] - s).abs() < 1e-12);
        assert!(sv[2].abs() < 1e-12);
        assert!(sv[3].abs() < 1e-12);
    }
}
