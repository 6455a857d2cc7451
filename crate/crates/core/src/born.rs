//! Born-rule measurement of logical projectors.
//!
//! For commuting projectors `A`, `B` a state splits into four orthogonal
//! pieces `ψ_ab`, one per joint truth value, and every probability of the
//! pair is a sum of their squared norms.

use num_complex::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::DiagonalProjector;
use crate::scalar::Real;
use crate::states::{from_amplitudes, State};

/// `⟨ψ|P|ψ⟩`, summed in ascending row order.
pub fn born_mean<T: Real>(s: &State<T>, p: &DiagonalProjector) -> Result<T> {
    if s.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            left: s.dim(),
            right: p.dim(),
        });
    }
    Ok(s.amplitudes()
        .iter()
        .zip(p.diagonal())
        .filter(|(_, &on)| on)
        .fold(T::zero(), |acc, (c, _)| acc + c.norm_sqr()))
}

/// The six probabilities of a proposition pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bundle<T> {
    #[serde(rename = "pA")]
    pub p_a: T,
    #[serde(rename = "pB")]
    pub p_b: T,
    #[serde(rename = "pAnd")]
    pub p_and: T,
    #[serde(rename = "pOr")]
    pub p_or: T,
    /// `P(A -> B)`
    #[serde(rename = "pImp")]
    pub p_imp: T,
    /// `P(B -> A)`
    #[serde(rename = "pConv")]
    pub p_conv: T,
}

impl<T: Real> Bundle<T> {
    /// Checks range, inclusion-exclusion and the linear relation within `tol`.
    pub fn is_consistent(&self, tol: T) -> bool {
        let unit = |x: T| x >= -tol && x <= T::one() + tol;
        let close = |x: T, y: T| (x - y).abs() <= tol;
        [
            self.p_a,
            self.p_b,
            self.p_and,
            self.p_or,
            self.p_imp,
            self.p_conv,
        ]
        .into_iter()
        .all(unit)
            && close(self.p_or, self.p_a + self.p_b - self.p_and)
            && close(self.p_a + self.p_imp, T::one() + self.p_and)
            && close(self.p_b + self.p_conv, T::one() + self.p_and)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        [
            self.p_a - other.p_a,
            self.p_b - other.p_b,
            self.p_and - other.p_and,
            self.p_or - other.p_or,
            self.p_imp - other.p_imp,
            self.p_conv - other.p_conv,
        ]
        .into_iter()
        .map(T::abs)
        .fold(T::zero(), T::max)
    }
}

/// Squared norms `|ψ_ab|^2`; `a` is the truth value of A, `b` of B.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Weights<T> {
    pub w00: T,
    pub w01: T,
    pub w10: T,
    pub w11: T,
}

impl<T: Real> Weights<T> {
    pub fn new(w00: T, w01: T, w10: T, w11: T) -> Self {
        Self { w00, w01, w10, w11 }
    }

    pub fn sum(&self) -> T {
        self.w00 + self.w01 + self.w10 + self.w11
    }

    pub fn as_array(&self) -> [T; 4] {
        [self.w00, self.w01, self.w10, self.w11]
    }
}

/// Unnormalized components `ψ_00, ψ_01, ψ_10, ψ_11`.
#[derive(Debug, Clone, PartialEq)]
pub struct Components<T> {
    pub c00: Vec<Complex<T>>,
    pub c01: Vec<Complex<T>>,
    pub c10: Vec<Complex<T>>,
    pub c11: Vec<Complex<T>>,
}

impl<T: Real> Components<T> {
    pub fn parts(&self) -> [&[Complex<T>]; 4] {
        [&self.c00, &self.c01, &self.c10, &self.c11]
    }

    /// Component-wise sum; reconstructs the decomposed state.
    pub fn sum(&self) -> Vec<Complex<T>> {
        (0..self.c00.len())
            .map(|r| self.c00[r] + self.c01[r] + self.c10[r] + self.c11[r])
            .collect()
    }

    pub fn weights(&self) -> Weights<T> {
        let w = |v: &[Complex<T>]| v.iter().fold(T::zero(), |acc, c| acc + c.norm_sqr());
        Weights::new(w(&self.c00), w(&self.c01), w(&self.c10), w(&self.c11))
    }

    /// Normalized component `ψ_ab / |ψ_ab|`, or `None` when it vanishes.
    pub fn conditional_state(&self, a: bool, b: bool) -> Option<State<T>> {
        let part = match (a, b) {
            (false, false) => &self.c00,
            (false, true) => &self.c01,
            (true, false) => &self.c10,
            (true, true) => &self.c11,
        };
        from_amplitudes(part.clone(), true).ok()
    }
}

fn check_pair<T: Real>(s: &State<T>, a: &DiagonalProjector, b: &DiagonalProjector) -> Result<()> {
    for p in [a, b] {
        if p.dim() != s.dim() {
            return Err(Error::DimensionMismatch {
                left: s.dim(),
                right: p.dim(),
            });
        }
    }
    Ok(())
}

/// Born means of A, B, A∧B, A∨B, A→B and B→A.
pub fn probability_bundle<T: Real>(
    s: &State<T>,
    a: &DiagonalProjector,
    b: &DiagonalProjector,
) -> Result<Bundle<T>> {
    check_pair(s, a, b)?;
    Ok(Bundle {
        p_a: born_mean(s, a)?,
        p_b: born_mean(s, b)?,
        p_and: born_mean(s, &a.meet(b)?)?,
        p_or: born_mean(s, &a.join(b)?)?,
        p_imp: born_mean(s, &a.implies(b)?)?,
        p_conv: born_mean(s, &b.implies(a)?)?,
    })
}

/// Applies `(I−A)(I−B)`, `(I−A)B`, `A(I−B)` and `AB` to `s`.
pub fn decompose<T: Real>(
    s: &State<T>,
    a: &DiagonalProjector,
    b: &DiagonalProjector,
) -> Result<(Components<T>, Weights<T>)> {
    check_pair(s, a, b)?;
    let d = s.dim();
    let mut parts = [
        vec![Complex::zero(); d],
        vec![Complex::zero(); d],
        vec![Complex::zero(); d],
        vec![Complex::zero(); d],
    ];
    for (r, &c) in s.amplitudes().iter().enumerate() {
        let slot = ((a.diagonal()[r] as usize) << 1) | b.diagonal()[r] as usize;
        parts[slot][r] = c;
    }
    let [c00, c01, c10, c11] = parts;
    let components = Components { c00, c01, c10, c11 };
    let weights = components.weights();
    Ok((components, weights))
}

/// Bundle from the squared norms:
/// `P(A) = w10 + w11`, `P(A∧B) = w11`, `P(A→B) = 1 − w10`, `P(A∨B) = 1 − w00`
/// and the mirrored forms for B.
pub fn probabilities_from_weights<T: Real>(w: &Weights<T>) -> Result<Bundle<T>> {
    let sum = w.sum();
    if (sum - T::one()).abs() > T::TOL_NUM || w.as_array().iter().any(|&x| x < -T::TOL_NUM) {
        return Err(Error::WeightsNotNormalized {
            sum: sum.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(Bundle {
        p_a: w.w10 + w.w11,
        p_b: w.w01 + w.w11,
        p_and: w.w11,
        p_or: T::one() - w.w00,
        p_imp: T::one() - w.w10,
        p_conv: T::one() - w.w01,
    })
}
