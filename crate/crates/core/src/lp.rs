//! Commutative ℓ_p toolkit: minima of `z ↦ ‖a − γz‖_p^p` over signed basis
//! vectors, and over the symmetric pair vectors of the dilated sequence.
//!
//! For a non-increasing, non-negative `a = (λ₁, …, λ_n)` with `Σ λ_j^p = 1`
//! the dilated sequence is `â = 2^{-1/p}(λ₁, …, λ_n, −λ_n, …, −λ₁)` in this
//! fixed coordinate order: position `n + k` (0-based) holds `−λ_{n−1−k}`, so
//! the mirror of dilated index `j ≥ n` is `2n − 1 − j`.

use crate::error::Error;
use crate::matrix::ComplexMatrix;
use crate::norm::gate_p_not_two;
use crate::scalar::{real, Real};
use crate::tol;

/// A finite real coordinate vector in ℓ_p^m.
#[derive(Clone, Debug, PartialEq)]
pub struct LpVector<T> {
    entries: Vec<T>,
}

impl<T: Real> LpVector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::invalid("LpVector: empty"));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("LpVector: non-finite entry"));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Result of the signed-basis minimization: the minimum of `‖a − γ(±e_j)‖_p^p`
/// and the 0-based indices attaining it (always with the + sign).
#[derive(Clone, Debug, PartialEq)]
pub struct AxisMinimum<T> {
    pub min_value: T,
    pub argmin_indices: Vec<usize>,
}

/// Result of the paired minimization over `s_{ij} = 2^{-1/p}(e_i − e_j)`,
/// `i ≠ j`, in the dilated 2n-dimensional space. Pairs are 0-based ordered
/// `(i, j)` with `i < n ≤ j` in the fixed coordinate order.
#[derive(Clone, Debug, PartialEq)]
pub struct PairedMinimum<T> {
    pub min_value: T,
    pub argmin_pairs: Vec<(usize, usize)>,
}

fn validate_normalized<T: Real>(a: &LpVector<T>, gamma: T, p: T) -> Result<(), Error> {
    gate_p_not_two(p)?;
    if gamma < T::one() {
        return Err(Error::invalid("gamma must be ≥ 1"));
    }
    let entries = a.entries();
    for w in entries.windows(2) {
        if w[1] > w[0] {
            return Err(Error::invalid("entries must be non-increasing"));
        }
    }
    if *entries.last().unwrap() < T::zero() {
        return Err(Error::invalid("entries must be non-negative"));
    }
    let mass: T = entries
        .iter()
        .map(|&x| x.powf(p))
        .fold(T::zero(), |s, x| s + x);
    if (mass - T::one()).abs() > real::<T>(1e-10) {
        return Err(Error::invalid(format!("Σ λ^p must equal 1, got {mass}")));
    }
    Ok(())
}

/// Minimum of `k_a(z) = ‖a − γz‖_p^p` over `z ∈ {±e_j}`.
///
/// The minimum is `(γ−λ₁)^p + 1 − λ₁^p`, attained exactly at `+e_i` for the
/// indices in the top cluster `λ_i = λ₁` (relative width 1e-8).
pub fn signed_axis_minimum<T: Real>(
    a: &LpVector<T>,
    gamma: T,
    p: T,
) -> Result<AxisMinimum<T>, Error> {
    validate_normalized(a, gamma, p)?;
    let lambda1 = a.entries()[0];
    let min_value = min_value_formula(lambda1, gamma, p);
    let cut = lambda1 * (T::one() - real::<T>(tol::CLUSTER_TOL_REL));
    let argmin_indices = (0..a.len()).filter(|&i| a.entries()[i] >= cut).collect();
    Ok(AxisMinimum {
        min_value,
        argmin_indices,
    })
}

/// Minimum of `h_â(s_{ij}) = ‖â − γ s_{ij}‖_p^p` over all ordered pairs.
///
/// Equals the signed-axis minimum; attained exactly at the mixed pairs
/// `(i, j)` with `i < n ≤ j` whose two coordinates both carry `λ₁`, i.e.
/// `λ_i = λ_{2n−1−j} = λ₁`.
pub fn paired_axis_minimum<T: Real>(
    a: &LpVector<T>,
    gamma: T,
    p: T,
) -> Result<PairedMinimum<T>, Error> {
    validate_normalized(a, gamma, p)?;
    let n = a.len();
    let lambda1 = a.entries()[0];
    let min_value = min_value_formula(lambda1, gamma, p);
    let cut = lambda1 * (T::one() - real::<T>(tol::CLUSTER_TOL_REL));
    let top: Vec<usize> = (0..n).filter(|&i| a.entries()[i] >= cut).collect();
    let mut argmin_pairs = Vec::new();
    for &i in &top {
        for &k in &top {
            // second coordinate sits in the mirrored half
            argmin_pairs.push((i, 2 * n - 1 - k));
        }
    }
    argmin_pairs.sort_unstable();
    Ok(PairedMinimum {
        min_value,
        argmin_pairs,
    })
}

/// The dilated coordinate sequence `2^{-1/p}(λ₁, …, λ_n, −λ_n, …, −λ₁)`.
pub fn dilated<T: Real>(a: &LpVector<T>, p: T) -> Vec<T> {
    let scale = real::<T>(0.5).powf(T::one() / p);
    let mut out: Vec<T> = a.entries().iter().map(|&x| x * scale).collect();
    out.extend(a.entries().iter().rev().map(|&x| -x * scale));
    out
}

/// `(γ−t)^p + 1 − t^p`, the closed-form minimum as a function of the top value.
pub fn min_value_formula<T: Real>(t: T, gamma: T, p: T) -> T {
    (gamma - t).powf(p) + T::one() - t.powf(p)
}

/// Inverts `t ↦ (γ−t)^p + 1 − t^p` on `(0, 1]` by bisection.
///
/// The map is strictly decreasing there for `γ ≥ 1`, `p > 1`, so the root is
/// unique; the iteration stops when the bracket width is below 1e-12.
pub fn invert_min_value<T: Real>(m: T, gamma: T, p: T) -> Result<T, Error> {
    if !(p > T::one() && p.is_finite()) {
        return Err(Error::invalid("invert_min_value: p must lie in (1, ∞)"));
    }
    if gamma < T::one() {
        return Err(Error::invalid("invert_min_value: gamma must be ≥ 1"));
    }
    let at_one = min_value_formula(T::one(), gamma, p);
    let at_zero = gamma.powf(p) + T::one();
    if !(m >= at_one && m < at_zero) {
        return Err(Error::invalid(format!(
            "invert_min_value: {m} outside the attainable range [{at_one}, {at_zero})"
        )));
    }
    let step_tol = real::<T>(tol::INVERT_STEP_TOL).max(real::<T>(4.0) * T::epsilon());
    let mut lo = T::zero(); // g(lo) > m
    let mut hi = T::one(); // g(hi) ≤ m
    while hi - lo > step_tol {
        let mid = (lo + hi) * real::<T>(0.5);
        if min_value_formula(mid, gamma, p) > m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * real::<T>(0.5))
}

/// Certifies the stated ℓ_p normalization of the singular values of a matrix.
pub fn lp_vector_from_sigmas<T: Real>(a: &ComplexMatrix<T>, _p: T) -> Result<LpVector<T>, Error> {
    LpVector::new(crate::svd::singular_values(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[f64]) -> LpVector<f64> {
        LpVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn point_mass() {
        let r = signed_axis_minimum(&v(&[1.0, 0.0]), 1.0, 3.0).unwrap();
        assert!(r.min_value.abs() < 1e-14);
        assert_eq!(r.argmin_indices, vec![0]);
    }

    #[test]
    fn two_point_tie() {
        let p = 3.0;
        let l = 0.5f64.powf(1.0 / p);
        let r = signed_axis_minimum(&v(&[l, l]), 1.0, p).unwrap();
        let expected = (1.0 - l).powf(p) + 0.5;
        assert!((r.min_value - expected).abs() < 1e-14);
        assert_eq!(r.argmin_indices, vec![0, 1]);
    }

    #[test]
    fn paired_point_mass() {
        let r = paired_axis_minimum(&v(&[1.0, 0.0]), 1.0, 3.0).unwrap();
        assert!(r.min_value.abs() < 1e-14);
        // the single pair joins index 0 with the mirror of index 0, i.e. 2n−1 = 3
        assert_eq!(r.argmin_pairs, vec![(0, 3)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(signed_axis_minimum(&v(&[0.5, 0.9]), 1.0, 3.0).is_err()); // increasing
        assert!(signed_axis_minimum(&v(&[1.0, 0.0]), 0.5, 3.0).is_err()); // gamma < 1
        assert!(signed_axis_minimum(&v(&[0.9, 0.0]), 1.0, 3.0).is_err()); // not normalized
        assert!(signed_axis_minimum(&v(&[1.0, 0.0]), 1.0, 2.0).is_err()); // p = 2
    }

    #[test]
    fn invert_boundary_and_roundtrip() {
        // m = (γ−1)^p at γ = 1 means m = 0 and t = 1
        let t = invert_min_value(0.0, 1.0, 3.0).unwrap();
        assert!((t - 1.0).abs() < 1e-10);
        let m = min_value_formula(0.5, 1.0, 3.0);
        let t = invert_min_value(m, 1.0, 3.0).unwrap();
        assert!((t - 0.5).abs() < 1e-10);
    }

    #[test]
    fn invert_rejects_out_of_range() {
        assert!(invert_min_value(-0.1, 1.0, 3.0).is_err());
        assert!(invert_min_value(2.1, 1.0, 3.0).is_err()); // ≥ γ^p + 1 = 2
    }

    #[test]
    fn dilated_order() {
        let d = dilated(&v(&[1.0, 0.0]), 3.0);
        let s = 0.5f64.powf(1.0 / 3.0);
        assert_eq!(d.len(), 4);
        assert!((d[0] - s).abs() < 1e-15);
        assert!(d[1].abs() < 1e-15);
        assert!(d[2].abs() < 1e-15);
        assert!((d[3] + s).abs() < 1e-15);
    }
}
