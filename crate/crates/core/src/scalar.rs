//! Real scalar abstraction underlying all complex matrix computations.

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real floating-point scalar: `f32` or `f64`.
///
/// Every matrix in this crate has `Complex<T>` entries for some `T: Real`.
/// The stated default tolerances assume `f64`; they are converted with
/// [`real`] and floored at a small multiple of machine epsilon so the
/// `f32` instantiation stays usable.
pub trait Real:
    Float + FromPrimitive + NumAssign + core::fmt::Debug + core::fmt::Display + Send + Sync + 'static
{
    /// Relative threshold below which a Gram off-diagonal counts as
    /// annihilated in the one-sided Jacobi sweep.
    fn jacobi_tol() -> Self {
        let pinned = real::<Self>(1e-14);
        let floor = Self::epsilon() * real::<Self>(16.0);
        if pinned > floor {
            pinned
        } else {
            floor
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the working scalar type.
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant converts to scalar type")
}
