//! Schatten p-norms, the two-sided convexity inequalities, and the
//! norm-based orthogonality characterization `‖a ± b‖_p^p = 2 ⟺ a ⊥ b`
//! for unit vectors (valid for p ≠ 2).

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, Real};
use crate::svd::singular_values;
use crate::tol;

/// Exponent of a Schatten norm: finite `p ≥ 1` or the operator norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PNorm<T> {
    Finite(T),
    Inf,
}

impl<T: Real> PNorm<T> {
    pub fn finite(p: T) -> Result<Self, Error> {
        if !p.is_finite() || p < T::one() {
            return Err(Error::invalid(format!("p-norm exponent must be ≥ 1, got {p}")));
        }
        Ok(PNorm::Finite(p))
    }
}

/// `(Σ σ_n^p)^{1/p}`; for `Inf` the largest singular value.
pub fn schatten_norm<T: Real>(a: &ComplexMatrix<T>, p: PNorm<T>) -> Result<T, Error> {
    if !a.is_finite() {
        return Err(Error::invalid("schatten_norm: non-finite input"));
    }
    let sigmas = singular_values(a)?;
    Ok(match p {
        PNorm::Inf => sigmas[0],
        PNorm::Finite(p) => {
            if p < T::one() {
                return Err(Error::invalid("schatten_norm: p must be ≥ 1"));
            }
            pow_sum(&sigmas, p).powf(T::one() / p)
        }
    })
}

/// `Σ σ^p` over a slice of non-negative values.
pub(crate) fn pow_sum<T: Real>(sigmas: &[T], p: T) -> T {
    sigmas
        .iter()
        .map(|&s| s.powf(p))
        .fold(T::zero(), |a, b| a + b)
}

/// `‖a‖_p^p` for finite p; the common internal quantity.
pub(crate) fn norm_p_pow<T: Real>(a: &ComplexMatrix<T>, p: T) -> T {
    pow_sum(&singular_values(a).expect("finite matrix"), p)
}

/// Gaps of the two-sided inequality between `S = ‖a+b‖_p^p + ‖a−b‖_p^p`
/// and `2^{p−1}(‖a‖_p^p + ‖b‖_p^p)`, `2(‖a‖_p^p + ‖b‖_p^p)`.
///
/// For `1 < p ≤ 2` the first expression is the lower bound and the second
/// the upper; for `p ≥ 2` the roles swap. Returns `(S − lower, upper − S)`;
/// both are non-negative up to roundoff.
pub fn clarkson_mccarthy_gaps<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    p: T,
) -> Result<(T, T), Error> {
    if !(p > T::one() && p.is_finite()) {
        return Err(Error::invalid(format!(
            "clarkson_mccarthy_gaps: p must lie in (1, ∞), got {p}"
        )));
    }
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::invalid("clarkson_mccarthy_gaps: shape mismatch"));
    }
    let two = real::<T>(2.0);
    let s = norm_p_pow(&(a + b), p) + norm_p_pow(&(a - b), p);
    let base = norm_p_pow(a, p) + norm_p_pow(b, p);
    let scaled = two.powf(p - T::one()) * base;
    let doubled = two * base;
    let (lower, upper) = if p <= two {
        (scaled, doubled)
    } else {
        (doubled, scaled)
    };
    Ok((s - lower, upper - s))
}

/// Algebraic orthogonality `ab* = 0 = b*a`, tested in operator norm with a
/// relative tolerance.
pub fn are_orthogonal<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>, tol: T) -> bool {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return false;
    }
    let ab = a.matmul(&b.adjoint()).operator_norm();
    let ba = b.adjoint().matmul(a).operator_norm();
    let scale = T::one().max(a.operator_norm() * b.operator_norm());
    ab.max(ba) <= tol * scale
}

/// Norm characterization of orthogonality for unit-norm `a`, `b` and
/// `p ∈ (1, ∞) \ {2}`: true iff both `‖a+b‖_p^p` and `‖a−b‖_p^p` equal 2
/// within 1e-8.
///
/// The characterization is a theorem only away from p = 2, so exponents
/// within 1e-6 of 2 are rejected rather than answered unsoundly.
pub fn orthogonality_by_norm<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    p: T,
) -> Result<bool, Error> {
    orthogonality_by_norm_with(a, b, p, real(tol::ORTH_NORM_TOL))
}

pub fn orthogonality_by_norm_with<T: Real>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
    p: T,
    norm_tol: T,
) -> Result<bool, Error> {
    gate_p_not_two(p)?;
    let unit_tol = real::<T>(tol::UNIT_NORM_TOL);
    let na = schatten_norm(a, PNorm::Finite(p))?;
    let nb = schatten_norm(b, PNorm::Finite(p))?;
    if (na - T::one()).abs() > unit_tol || (nb - T::one()).abs() > unit_tol {
        return Err(Error::invalid(
            "orthogonality_by_norm: inputs must have unit p-norm",
        ));
    }
    let two = real::<T>(2.0);
    let plus = norm_p_pow(&(a + b), p);
    let minus = norm_p_pow(&(a - b), p);
    Ok((plus - two).abs() <= norm_tol && (minus - two).abs() <= norm_tol)
}

/// Rejects exponents outside `(1, ∞)` or within the gate radius of 2.
pub(crate) fn gate_p_not_two<T: Real>(p: T) -> Result<(), Error> {
    if !(p > T::one() && p.is_finite()) {
        return Err(Error::invalid(format!("p must lie in (1, ∞), got {p}")));
    }
    if (p - real::<T>(2.0)).abs() <= real::<T>(tol::P_GATE_RADIUS) {
        return Err(Error::UnsupportedExponent(format!(
            "p = {p} is within {:e} of 2; the characterization fails at p = 2",
            tol::P_GATE_RADIUS
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e11() -> ComplexMatrix<f64> {
        ComplexMatrix::diag(&[1.0, 0.0])
    }

    fn e22() -> ComplexMatrix<f64> {
        ComplexMatrix::diag(&[0.0, 1.0])
    }

    #[test]
    fn norm_examples() {
        let a = ComplexMatrix::<f64>::diag(&[3.0, 4.0]);
        assert!((schatten_norm(&a, PNorm::Finite(1.0)).unwrap() - 7.0).abs() < 1e-12);
        assert!((schatten_norm(&a, PNorm::Inf).unwrap() - 4.0).abs() < 1e-12);
        for p in [1.5, 3.0, 7.0] {
            let scaled = ComplexMatrix::<f64>::identity(2).scale_re(0.5f64.powf(1.0 / p));
            assert!((schatten_norm(&scaled, PNorm::Finite(p)).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn pnorm_rejects_below_one() {
        assert!(PNorm::finite(0.5f64).is_err());
        assert!(PNorm::finite(f64::NAN).is_err());
    }

    #[test]
    fn clarkson_orthogonal_equality() {
        // ⊥ pair at p = 3: S = 4 = 2(‖a‖³ + ‖b‖³) and that is the lower bound
        let (lo, hi) = clarkson_mccarthy_gaps(&e11(), &e22(), 3.0).unwrap();
        assert!(lo.abs() < 1e-12, "lower gap {lo}");
        assert!(hi >= -1e-12);
    }

    #[test]
    fn clarkson_equal_pair_hits_scaled_bound() {
        // a = b: S = 8 = 2^{p−1}·2 at p = 3, the upper bound
        let (lo, hi) = clarkson_mccarthy_gaps(&e11(), &e11(), 3.0).unwrap();
        assert!(hi.abs() < 1e-12, "upper gap {hi}");
        assert!(lo >= -1e-12);
    }

    #[test]
    fn clarkson_rejects_bad_p() {
        assert!(clarkson_mccarthy_gaps(&e11(), &e22(), 1.0).is_err());
        assert!(clarkson_mccarthy_gaps(&e11(), &e22(), f64::INFINITY).is_err());
    }

    #[test]
    fn algebraic_orthogonality() {
        assert!(are_orthogonal(&e11(), &e22(), 1e-10));
        // e1⊗e1 vs e1⊗e2: b*a = E21·E11 ≠ 0
        let e12 = ComplexMatrix::<f64>::from_fn(2, 2, |i, j| {
            num_complex::Complex64::new(if (i, j) == (0, 1) { 1.0 } else { 0.0 }, 0.0)
        });
        assert!(!are_orthogonal(&e11(), &e12, 1e-10));
    }

    #[test]
    fn norm_orthogonality_examples() {
        assert!(orthogonality_by_norm(&e11(), &e22(), 3.0).unwrap());
        // a vs −a: ‖a − (−a)‖_p^p = 2^p ≠ 2
        let a = e11();
        let minus = (&a).scale_re(-1.0);
        assert!(!orthogonality_by_norm(&a, &minus, 3.0).unwrap());
    }

    #[test]
    fn p_two_gate() {
        assert!(matches!(
            orthogonality_by_norm(&e11(), &e22(), 2.0),
            Err(Error::UnsupportedExponent(_))
        ));
        assert!(matches!(
            orthogonality_by_norm(&e11(), &e22(), 2.0000001),
            Err(Error::UnsupportedExponent(_))
        ));
        assert!(matches!(
            orthogonality_by_norm(&e11(), &e22(), 1.0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn non_unit_rejected() {
        let half = e11().scale_re(0.5);
        assert!(matches!(
            orthogonality_by_norm(&half, &e22(), 3.0),
            Err(Error::InvalidInput(_))
        ));
    }
}
