//! Numeric traits the library is generic over.
//!
//! [`Scalar`] is the field-like interface used by the classical probability
//! code and by polynomial evaluation; it is implemented for `f32`, `f64` and
//! the exact rational [`Rational`]. [`Real`] adds the floating point
//! operations that state vectors and Born means need.

use std::fmt::{Debug, Display};

use num_rational::Rational64;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Exact rational number used for polynomial coefficients and exact
/// probability spaces.
pub type Rational = Rational64;

/// Field element with an ordering.
pub trait Scalar:
    Num + Copy + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an exact rational into this scalar type.
    fn from_rational(r: Rational) -> Self;

    /// Band for probability comparisons (sums to 1, bound checks).
    fn probability_tol() -> Self;

    /// A probability at or below this counts as zero.
    fn zero_tol() -> Self;

    fn magnitude(self) -> Self {
        if self < Self::zero() {
            Self::zero() - self
        } else {
            self
        }
    }

    fn is_close(self, other: Self, tol: Self) -> bool {
        (self - other).magnitude() <= tol
    }
}

impl Scalar for f32 {
    fn from_rational(r: Rational) -> Self {
        *r.numer() as f32 / *r.denom() as f32
    }

    fn probability_tol() -> Self {
        Self::TOL_NUM
    }

    fn zero_tol() -> Self {
        Self::TOL_ZERO
    }
}

impl Scalar for f64 {
    fn from_rational(r: Rational) -> Self {
        *r.numer() as f64 / *r.denom() as f64
    }

    fn probability_tol() -> Self {
        Self::TOL_NUM
    }

    fn zero_tol() -> Self {
        Self::TOL_ZERO
    }
}

// Exact arithmetic: comparisons need no band.
impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn probability_tol() -> Self {
        Rational::from_integer(0)
    }

    fn zero_tol() -> Self {
        Rational::from_integer(0)
    }
}

pub(crate) fn lossy_f64<T: ToPrimitive>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Floating point scalar: f32 or f64.
///
/// Carries the default tolerances for its precision. The f64 values are the
/// documented library tolerances; f32 uses bands scaled to single precision.
pub trait Real: Scalar + Float + FloatConst {
    /// Dense-operator comparisons (max norm).
    const TOL_OP: Self;
    /// Unit-norm checks on state vectors.
    const TOL_NORM: Self;
    /// Probability comparisons.
    const TOL_NUM: Self;
    /// "Probability is zero" decisions.
    const TOL_ZERO: Self;
    /// Default band for the Bayes-case classifier.
    const TOL_CLASSIFY: Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }
}

impl Real for f64 {
    const TOL_OP: Self = 1e-12;
    const TOL_NORM: Self = 1e-12;
    const TOL_NUM: Self = 1e-10;
    const TOL_ZERO: Self = 1e-12;
    const TOL_CLASSIFY: Self = 1e-9;
}

impl Real for f32 {
    const TOL_OP: Self = 1e-5;
    const TOL_NORM: Self = 1e-5;
    const TOL_NUM: Self = 1e-4;
    const TOL_ZERO: Self = 1e-6;
    const TOL_CLASSIFY: Self = 1e-4;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_conversion() {
        let r = Rational::new(3, 8);
        assert_eq!(f64::from_rational(r), 0.375);
        assert_eq!(f32::from_rational(r), 0.375);
        assert_eq!(Rational::from_rational(r), r);
    }

    #[test]
    fn magnitude_works_for_exact_values() {
        assert_eq!(Rational::new(-1, 3).magnitude(), Rational::new(1, 3));
        assert!(Rational::new(1, 3).is_close(Rational::new(1, 3), Rational::from_integer(0)));
        assert_eq!((-2.5f64).magnitude(), 2.5);
    }
}
