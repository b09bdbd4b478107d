//! Seeded random generation of vectors, unitaries, sphere points and
//! minimal partial isometries.
//!
//! All randomness flows from a single 64-bit seed through a counter-based
//! split, so results are identical whether samples are drawn sequentially or
//! in parallel: sample k of a run always uses `rng_at(seed, k)`.

use num_complex::Complex;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{inner, norm2, normalized, ComplexMatrix};
use crate::norm::{schatten_norm, PNorm};
use crate::partial_isometry::{rank_one_normalized, PartialIsometry};
use crate::scalar::{real, Real};

/// SplitMix64 mix of a seed and a counter.
pub fn derive_seed(seed: u64, counter: u64) -> u64 {
    let mut z = seed ^ 0x9E3779B97F4A7C15u64.wrapping_mul(counter.wrapping_add(1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rng_at(seed: u64, counter: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, counter))
}

/// Uniform in (0, 1].
fn uniform01(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal via Box-Muller.
pub fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = uniform01(rng);
    let u2 = uniform01(rng);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

pub fn complex_gaussian<T: Real>(rng: &mut ChaCha8Rng) -> Complex<T> {
    Complex::new(real(standard_normal(rng)), real(standard_normal(rng)))
}

/// Unit vector drawn from the rotation-invariant distribution on the sphere
/// of ℂⁿ (normalized complex Gaussian).
pub fn unit_vector<T: Real>(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<T>> = (0..n).map(|_| complex_gaussian(rng)).collect();
        if norm2(&v) > real(1e-6) {
            return normalized(&v);
        }
    }
}

pub fn gaussian_matrix<T: Real>(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-ish random minimal partial isometry `η ⊗ ξ`.
pub fn minimal_isometry<T: Real>(n: usize, rng: &mut ChaCha8Rng) -> PartialIsometry<T> {
    let eta = unit_vector::<T>(n, rng);
    let xi = unit_vector::<T>(n, rng);
    rank_one_normalized(&eta, &xi)
}

/// Random unitary from Gram-Schmidt on a Gaussian matrix (two passes).
pub fn unitary<T: Real>(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix<T> {
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex<T>> = (0..n).map(|_| complex_gaussian(rng)).collect();
        for pass in 0..2 {
            for c in &cols {
                let coef = inner(c, &v);
                for (vi, ci) in v.iter_mut().zip(c.iter()) {
                    *vi = *vi - coef * *ci;
                }
            }
            let nrm = norm2(&v);
            if nrm < real(1e-6) {
                break; // nearly dependent draw; resample
            }
            v = v.iter().map(|&z| z / nrm).collect();
            if pass == 1 {
                cols.push(v.clone());
            }
        }
    }
    ComplexMatrix::from_columns(&cols)
}

/// Random point on the unit sphere of the p-norm.
pub fn sphere_point<T: Real>(n: usize, p: T, rng: &mut ChaCha8Rng) -> ComplexMatrix<T> {
    let g = gaussian_matrix::<T>(n, n, rng);
    let nrm = schatten_norm(&g, PNorm::Finite(p)).expect("finite Gaussian");
    g.scale_re(T::one() / nrm)
}

/// Pair of unit-norm matrices built on disjoint singular subspaces, hence
/// orthogonal (`ab* = 0 = b*a`) by construction. Requires `n ≥ 2`.
pub fn orthogonal_unit_pair<T: Real>(
    n: usize,
    p: T,
    rng: &mut ChaCha8Rng,
) -> (ComplexMatrix<T>, ComplexMatrix<T>) {
    assert!(n >= 2);
    let u = unitary::<T>(n, rng);
    let w = unitary::<T>(n, rng);
    let split = 1 + (rng.next_u64() as usize) % (n - 1);
    let build = |range: std::ops::Range<usize>, rng: &mut ChaCha8Rng| {
        let mut m = ComplexMatrix::zeros(n, n);
        for j in range {
            let s: T = real(uniform01(rng) + 0.1);
            let uc = u.column(j);
            let wc = w.column(j);
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] = m[(r, c)] + uc[r] * wc[c].conj() * Complex::new(s, T::zero());
                }
            }
        }
        let nrm = schatten_norm(&m, PNorm::Finite(p)).expect("finite");
        m.scale_re(T::one() / nrm)
    };
    let a = build(0..split, rng);
    let b = build(split..n, rng);
    (a, b)
}

/// Unit-norm matrix with prescribed singular values and Haar-ish frames.
pub fn with_singular_values<T: Real>(
    sigmas: &[T],
    rng: &mut ChaCha8Rng,
) -> ComplexMatrix<T> {
    let n = sigmas.len();
    let u = unitary::<T>(n, rng);
    let w = unitary::<T>(n, rng);
    let mut m = ComplexMatrix::zeros(n, n);
    for (j, &s) in sigmas.iter().enumerate() {
        let uc = u.column(j);
        let wc = w.column(j);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = m[(r, c)] + uc[r] * wc[c].conj() * Complex::new(s, T::zero());
            }
        }
    }
    m
}

/// Non-increasing singular values with `Σ σ^p = 1`, consecutive gaps at least
/// `min_gap`, and σ_n at least `min_gap` above zero. Rejection-samples, so it
/// is deterministic for a fixed rng state.
pub fn gapped_unit_sigmas<T: Real>(
    n: usize,
    p: T,
    min_gap: T,
    rng: &mut ChaCha8Rng,
) -> Vec<T> {
    loop {
        let mut draw: Vec<T> = (0..n)
            .map(|_| real::<T>(standard_normal(rng).abs() + 0.05))
            .collect();
        draw.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mass = draw
            .iter()
            .map(|&x| x.powf(p))
            .fold(T::zero(), |s, x| s + x);
        let scale = mass.powf(T::one() / p);
        let sigmas: Vec<T> = draw.iter().map(|&x| x / scale).collect();
        let mut ok = *sigmas.last().unwrap() >= min_gap;
        for w in sigmas.windows(2) {
            ok &= w[0] - w[1] >= min_gap;
        }
        if ok {
            return sigmas;
        }
    }
}
