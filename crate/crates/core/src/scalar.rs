//! Scalar abstraction: everything in this crate is generic over the working
//! floating-point type, with `f64` as the shipped precision.

use nalgebra::RealField;
use num_traits::FromPrimitive;

/// Floating-point scalar for covariance matrices, spectra and rates.
///
/// Implemented by `f32` and `f64`. All tolerance constants in this crate are
/// stated for `f64`; for wider-epsilon scalars they are floored at a small
/// multiple of the type's epsilon (see [`Tolerances`]).
pub trait Real: RealField + FromPrimitive + Copy + Send + Sync {}

impl<T: RealField + FromPrimitive + Copy + Send + Sync> Real for T {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant must be representable in the scalar type")
}

/// Lossy view of a scalar as `f64`, for diagnostics and error messages.
#[inline]
pub(crate) fn to_f64<T: Real>(x: T) -> f64 {
    nalgebra::try_convert(x).unwrap_or(f64::NAN)
}

/// Validation tolerances used by the covariance-matrix constructors.
///
/// Each bound is the stated `f64` contract value floored at `100·eps` of the
/// scalar type, and the spectrum bounds additionally scale with the magnitude
/// of the matrix being checked: a backward-stable eigensolver can only locate
/// the symplectic spectrum of `V` to within O(eps·‖V‖).
pub(crate) struct Tolerances;

impl Tolerances {
    /// Relative asymmetry allowed in a covariance matrix (contract: 1e-12).
    pub(crate) fn symmetry<T: Real>() -> T {
        real::<T>(1e-12).max(T::default_epsilon() * real(100.0))
    }

    /// How far a symplectic eigenvalue may dip below 1 before the matrix is
    /// rejected as unphysical (contract: 1e-9 at unit scale).
    pub(crate) fn physical<T: Real>(magnitude: T) -> T {
        real::<T>(1e-9).max(T::default_epsilon() * real::<T>(100.0) * magnitude.max(T::one()))
    }

    /// Allowed split between the two copies of a symplectic eigenvalue when
    /// the moduli of eig(iΩV) are paired up (contract: 1e-8 at unit scale).
    pub(crate) fn pairing<T: Real>(magnitude: T) -> T {
        real::<T>(1e-8).max(T::default_epsilon() * real::<T>(100.0) * magnitude.max(T::one()))
    }

    /// Max-norm defect allowed in S Ω Sᵀ = Ω (contract: 1e-10).
    pub(crate) fn symplectic<T: Real>() -> T {
        real::<T>(1e-10).max(T::default_epsilon() * real(100.0))
    }
}
