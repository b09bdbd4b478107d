//! Derivative-free minimization over the rank-one manifold.
//!
//! The search parameterizes a minimal isometry by its unit vector pair
//! (η, ξ) and runs coordinate descent: each sweep perturbs every real and
//! imaginary coordinate of both vectors by ±step, renormalizes, and keeps
//! improvements; the step halves when a sweep makes no move. Multistart
//! seeds the descent from the best of a batch of rotation-invariant samples.

use num_complex::Complex;

use crate::matrix::normalized;
use crate::sample::{rng_at, unit_vector};
use crate::scalar::{real, Real};

#[derive(Clone, Copy, Debug)]
pub struct RefineOptions<T> {
    pub max_sweeps: usize,
    pub init_step: T,
    pub min_step: T,
    /// Stop when a sweep improves the value by less than this while the
    /// step has already bottomed out.
    pub ftol: T,
}

impl<T: Real> RefineOptions<T> {
    /// Moderate effort: enough to certify a minimum value to ~1e-7.
    pub fn certificate() -> Self {
        Self {
            max_sweeps: 60,
            init_step: real(0.5),
            min_step: real(1e-5),
            ftol: real(1e-12),
        }
    }

    /// High effort: locates the minimizer itself to ~1e-7.
    pub fn locate() -> Self {
        Self {
            max_sweeps: 400,
            init_step: real(0.5),
            min_step: real(1e-9),
            ftol: T::zero(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RankOnePoint<T> {
    pub eta: Vec<Complex<T>>,
    pub xi: Vec<Complex<T>>,
    pub value: T,
}

/// Coordinate descent from `(eta0, xi0)`. The objective must accept any
/// unit pair; non-finite returns are treated as rejections.
pub fn refine_rank_one<T: Real, F>(
    f: &mut F,
    eta0: &[Complex<T>],
    xi0: &[Complex<T>],
    opts: &RefineOptions<T>,
) -> RankOnePoint<T>
where
    F: FnMut(&[Complex<T>], &[Complex<T>]) -> T,
{
    let mut eta = eta0.to_vec();
    let mut xi = xi0.to_vec();
    let mut best = f(&eta, &xi);
    let mut step = opts.init_step;
    let half = real::<T>(0.5);
    for _ in 0..opts.max_sweeps {
        let before = best;
        let mut moved = false;
        for side in 0..2 {
            let dim = if side == 0 { eta.len() } else { xi.len() };
            for k in 0..dim {
                for dir in 0..4 {
                    let delta = match dir {
                        0 => Complex::new(step, T::zero()),
                        1 => Complex::new(-step, T::zero()),
                        2 => Complex::new(T::zero(), step),
                        _ => Complex::new(T::zero(), -step),
                    };
                    let (cand_eta, cand_xi) = if side == 0 {
                        let mut c = eta.clone();
                        c[k] = c[k] + delta;
                        (normalized(&c), xi.clone())
                    } else {
                        let mut c = xi.clone();
                        c[k] = c[k] + delta;
                        (eta.clone(), normalized(&c))
                    };
                    let v = f(&cand_eta, &cand_xi);
                    if v.is_finite() && v < best {
                        best = v;
                        eta = cand_eta;
                        xi = cand_xi;
                        moved = true;
                    }
                }
            }
        }
        if !moved {
            step = step * half;
            if step < opts.min_step {
                break;
            }
        } else if before - best < opts.ftol && step <= opts.min_step * real(2.0) {
            break;
        }
    }
    RankOnePoint { eta, xi, value: best }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions<T> {
    pub samples: usize,
    pub refine_starts: usize,
    pub refine: RefineOptions<T>,
}

/// Samples `samples` rotation-invariant pairs, refines the best
/// `refine_starts` of them, and returns the overall best point.
///
/// Sample k uses the counter-derived rng `rng_at(seed, k)`, so the result
/// does not depend on evaluation order.
pub fn multistart_minimize<T: Real, F>(
    f: &mut F,
    dim_left: usize,
    dim_right: usize,
    opts: &SearchOptions<T>,
    seed: u64,
) -> RankOnePoint<T>
where
    F: FnMut(&[Complex<T>], &[Complex<T>]) -> T,
{
    assert!(opts.samples >= 1);
    let mut pool: Vec<RankOnePoint<T>> = Vec::with_capacity(opts.samples);
    for k in 0..opts.samples {
        let mut rng = rng_at(seed, k as u64);
        let eta = unit_vector::<T>(dim_left, &mut rng);
        let xi = unit_vector::<T>(dim_right, &mut rng);
        let value = f(&eta, &xi);
        pool.push(RankOnePoint { eta, xi, value });
    }
    pool.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
    let mut best: Option<RankOnePoint<T>> = None;
    for start in pool.iter().take(opts.refine_starts.max(1)) {
        let refined = refine_rank_one(f, &start.eta, &start.xi, &opts.refine);
        if best.as_ref().map_or(true, |b| refined.value < b.value) {
            best = Some(refined);
        }
    }
    best.expect("at least one start")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{basis_vector, inner};

    /// Smooth objective with minimum at (e₁, e₂): 2 − |⟨η,e₁⟩|² − |⟨ξ,e₂⟩|².
    fn alignment_objective(eta: &[Complex<f64>], xi: &[Complex<f64>]) -> f64 {
        let t1 = basis_vector::<f64>(3, 0);
        let t2 = basis_vector::<f64>(3, 1);
        2.0 - inner(&t1, eta).norm_sqr() - inner(&t2, xi).norm_sqr()
    }

    #[test]
    fn multistart_finds_alignment() {
        let mut f = alignment_objective;
        let opts = SearchOptions {
            samples: 16,
            refine_starts: 2,
            refine: RefineOptions::certificate(),
        };
        let best = multistart_minimize(&mut f, 3, 3, &opts, 42);
        assert!(best.value < 1e-6, "found {}", best.value);
    }

    #[test]
    fn refine_is_deterministic() {
        let mut f = alignment_objective;
        let mut rng = crate::sample::rng_at(1, 0);
        let eta = crate::sample::unit_vector::<f64>(3, &mut rng);
        let xi = crate::sample::unit_vector::<f64>(3, &mut rng);
        let a = refine_rank_one(&mut f, &eta, &xi, &RefineOptions::certificate());
        let b = refine_rank_one(&mut f, &eta, &xi, &RefineOptions::certificate());
        assert_eq!(a.value, b.value);
        assert_eq!(a.eta, b.eta);
    }
}
