//! State vectors used as probabilistic contexts.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::Dense;
use crate::scalar::Real;

/// Unit vector of `2^n` complex amplitudes, row order `00…0, 00…1, …`.
#[derive(Debug, Clone, PartialEq)]
pub struct State<T> {
    amps: Vec<Complex<T>>,
}

/// Bloch-sphere angles of a single qubit,
/// `cos(theta/2)|0⟩ + e^{i phi} sin(theta/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bloch<T> {
    theta: T,
    phi: T,
}

impl<T: Real> Bloch<T> {
    pub fn new(theta: T, phi: T) -> Result<Self> {
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(Error::ThetaOutOfRange(theta.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { theta, phi })
    }

    /// Angles whose probability of `|1⟩` is `p` (phase zero).
    pub fn with_probability(p: T) -> Result<Self> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::ThetaOutOfRange(p.to_f64().unwrap_or(f64::NAN)));
        }
        Self::new(T::lit(2.0) * p.sqrt().asin(), T::zero())
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    /// `sin^2(theta/2)`, the probability of `|1⟩`.
    pub fn probability_one(&self) -> T {
        let s = (self.theta / T::lit(2.0)).sin();
        s * s
    }
}

/// Every name accepted by [`named_state`].
pub const STATE_NAMES: [&str; 17] = [
    "00", "01", "10", "11", "++", "+-", "-+", "--", "0+", "+0", "1+", "+1", "phi+", "phi-", "psi+",
    "psi-", "cluster",
];

impl<T: Real> State<T> {
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn qubits(&self) -> usize {
        self.amps.len().trailing_zeros() as usize
    }

    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm_sqr())
    }

    /// `|c_r|^2` for every row.
    pub fn probabilities(&self) -> Vec<T> {
        self.amps.iter().map(|c| c.norm_sqr()).collect()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b))
    }

    /// Multiplies every amplitude by `e^{i gamma}`.
    pub fn with_global_phase(&self, gamma: T) -> Self {
        let phase = Complex::from_polar(T::one(), gamma);
        Self {
            amps: self.amps.iter().map(|&c| c * phase).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.dim() != other.dim() {
            return T::infinity();
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Equality up to a global phase: `|⟨a|b⟩| = 1` within `tol`.
    pub fn same_ray(&self, other: &Self, tol: T) -> bool {
        match self.inner(other) {
            Ok(overlap) => (overlap.norm() - T::one()).abs() <= tol,
            Err(_) => false,
        }
    }

    /// Dense `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> Density<T> {
        let d = self.dim();
        let mut m = ndarray::Array2::zeros((d, d));
        for (r, a) in self.amps.iter().enumerate() {
            for (c, b) in self.amps.iter().enumerate() {
                m[(r, c)] = *a * b.conj();
            }
        }
        Density(Dense(m))
    }

    #[cfg(test)]
    pub(crate) fn from_raw(amps: Vec<Complex<T>>) -> Self {
        Self { amps }
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// Computational basis state; `bits[0]` is the most significant qubit.
pub fn basis_state<T: Real>(bits: &[u8]) -> Result<State<T>> {
    if bits.is_empty() {
        return Err(Error::EmptyBits);
    }
    let row = bits
        .iter()
        .fold(0usize, |acc, &b| (acc << 1) | (b != 0) as usize);
    let mut amps = vec![Complex::zero(); 1 << bits.len()];
    amps[row] = Complex::one();
    Ok(State { amps })
}

pub fn single_qubit<T: Real>(angles: Bloch<T>) -> State<T> {
    let half = angles.theta / T::lit(2.0);
    State {
        amps: vec![
            Complex::new(half.cos(), T::zero()),
            Complex::from_polar(half.sin(), angles.phi),
        ],
    }
}

/// Kronecker product; the first factor is the most significant.
pub fn tensor<T: Real>(first: &State<T>, second: &State<T>) -> State<T> {
    let amps = first
        .amps
        .iter()
        .flat_map(|&a| second.amps.iter().map(move |&b| a * b))
        .collect();
    State { amps }
}

/// Builds a state from raw amplitudes. With `normalize` the vector is
/// rescaled; otherwise it must already have unit norm within `T::TOL_NORM`.
pub fn from_amplitudes<T: Real>(amps: Vec<Complex<T>>, normalize: bool) -> Result<State<T>> {
    if amps.is_empty() || !amps.len().is_power_of_two() {
        return Err(Error::NotPowerOfTwo(amps.len()));
    }
    let norm_sqr = amps.iter().fold(T::zero(), |acc, c| acc + c.norm_sqr());
    if normalize {
        if norm_sqr <= T::zero() {
            return Err(Error::ZeroVector);
        }
        let inv = T::one() / norm_sqr.sqrt();
        return Ok(State {
            amps: amps.into_iter().map(|c| c * inv).collect(),
        });
    }
    if (norm_sqr - T::one()).abs() > T::TOL_NORM {
        return Err(Error::NormViolation {
            norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(State { amps })
}

fn single_from_symbol<T: Real>(c: char) -> Option<State<T>> {
    let h = T::FRAC_1_SQRT_2();
    let re = |x: T| Complex::new(x, T::zero());
    let amps = match c {
        '0' => vec![re(T::one()), re(T::zero())],
        '1' => vec![re(T::zero()), re(T::one())],
        '+' => vec![re(h), re(h)],
        '-' | '−' => vec![re(h), re(-h)],
        _ => return None,
    };
    Some(State { amps })
}

/// Two-qubit states by name: basis labels, products of `0 1 + -`, the Bell
/// states and the cluster state.
pub fn named_state<T: Real>(name: &str) -> Result<State<T>> {
    let unknown = || Error::UnknownState(name.to_string());
    let key = name.trim().to_lowercase().replace('−', "-");
    let h = T::FRAC_1_SQRT_2();
    let half = T::lit(0.5);
    let real = |v: [T; 4]| State {
        amps: v.iter().map(|&x| Complex::new(x, T::zero())).collect(),
    };
    let z = T::zero();
    match key.as_str() {
        "phi+" | "φ+" => return Ok(real([h, z, z, h])),
        "phi-" | "φ-" => return Ok(real([h, z, z, -h])),
        "psi+" | "ψ+" => return Ok(real([z, h, h, z])),
        "psi-" | "ψ-" => return Ok(real([z, h, -h, z])),
        "cluster" => return Ok(real([half, half, half, -half])),
        _ => {}
    }
    let symbols: Vec<char> = key.chars().collect();
    if symbols.len() != 2 {
        return Err(unknown());
    }
    let first = single_from_symbol::<T>(symbols[0]).ok_or_else(unknown)?;
    let second = single_from_symbol::<T>(symbols[1]).ok_or_else(unknown)?;
    Ok(tensor(&first, &second))
}

/// `ρ = |ψ⟩⟨ψ|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Density<T>(pub Dense<T>);

impl<T: Real> Density<T> {
    pub fn trace(&self) -> T {
        self.0.trace().re
    }

    /// `Tr(ρ M)`.
    pub fn expectation(&self, m: &Dense<T>) -> Result<T> {
        check_dims(self.0.dim(), m.dim())?;
        Ok(self.0.matmul(m).trace().re)
    }

    pub fn matrix(&self) -> &Dense<T> {
        &self.0
    }
}

/// JSON state file: explicit amplitudes or a named state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Named {
        name: String,
    },
    Amplitudes {
        n: usize,
        amplitudes: Vec<[f64; 2]>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        normalize: bool,
    },
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidStateFile(e.to_string()))
    }

    pub fn to_state<T: Real>(&self) -> Result<State<T>> {
        match self {
            StateFile::Named { name } => named_state(name),
            StateFile::Amplitudes {
                n,
                amplitudes,
                normalize,
            } => {
                if *n >= usize::BITS as usize || amplitudes.len() != 1usize << n {
                    return Err(Error::InvalidStateFile(format!(
                        "n = {n} but {} amplitudes given",
                        amplitudes.len()
                    )));
                }
                let amps = amplitudes
                    .iter()
                    .map(|[re, im]| Complex::new(T::lit(*re), T::lit(*im)))
                    .collect();
                from_amplitudes(amps, *normalize)
            }
        }
    }

    pub fn from_state<T: Real>(state: &State<T>) -> Self {
        StateFile::Amplitudes {
            n: state.qubits(),
            amplitudes: state
                .amplitudes()
                .iter()
                .map(|c| {
                    [
                        c.re.to_f64().unwrap_or(f64::NAN),
                        c.im.to_f64().unwrap_or(f64::NAN),
                    ]
                })
                .collect(),
            normalize: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    type S = State<f64>;

    fn real(v: &[f64]) -> S {
        S::from_raw(v.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    fn close(a: &S, b: &S) -> bool {
        a.max_abs_diff(b) <= 1e-15
    }

    #[test]
    fn basis_states() {
        assert_eq!(
            basis_state::<f64>(&[1, 0]).unwrap(),
            real(&[0.0, 0.0, 1.0, 0.0])
        );
        assert_eq!(
            basis_state::<f64>(&[1, 1]).unwrap(),
            real(&[0.0, 0.0, 0.0, 1.0])
        );
        assert_eq!(basis_state::<f64>(&[]), Err(Error::EmptyBits));
    }

    #[test]
    fn single_qubit_states() {
        let zero = single_qubit(Bloch::new(0.0, 0.0).unwrap());
        assert!(close(&zero, &real(&[1.0, 0.0])));
        let one = single_qubit(Bloch::new(PI, 0.0).unwrap());
        assert!(one.same_ray(&real(&[0.0, 1.0]), 1e-15));
        let plus = single_qubit(Bloch::new(PI / 2.0, 0.0).unwrap());
        assert!(close(&plus, &real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2])));
        assert!(matches!(
            Bloch::new(-0.1, 0.0),
            Err(Error::ThetaOutOfRange(_))
        ));
        assert!(Bloch::new(PI + 1e-9, 0.0).is_err());
        let b = Bloch::<f64>::with_probability(0.3).unwrap();
        assert!((b.probability_one() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn tensor_products() {
        let plus = named_state::<f64>("++").unwrap();
        assert!(close(&plus, &real(&[0.5, 0.5, 0.5, 0.5])));
        let h = FRAC_1_SQRT_2;
        assert!(close(&named_state("0+").unwrap(), &real(&[h, h, 0.0, 0.0])));
        assert!(close(&named_state("1+").unwrap(), &real(&[0.0, 0.0, h, h])));
        assert!(close(&named_state("+0").unwrap(), &real(&[h, 0.0, h, 0.0])));
        assert!(close(&named_state("+1").unwrap(), &real(&[0.0, h, 0.0, h])));
        let three = tensor(
            &named_state::<f64>("++").unwrap(),
            &basis_state(&[1]).unwrap(),
        );
        assert_eq!(three.dim(), 8);
        assert!((three.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn named_entangled_states() {
        let h = FRAC_1_SQRT_2;
        assert!(close(
            &named_state("phi+").unwrap(),
            &real(&[h, 0.0, 0.0, h])
        ));
        assert!(close(
            &named_state("phi-").unwrap(),
            &real(&[h, 0.0, 0.0, -h])
        ));
        assert!(close(
            &named_state("psi+").unwrap(),
            &real(&[0.0, h, h, 0.0])
        ));
        assert!(close(
            &named_state("psi−").unwrap(),
            &real(&[0.0, h, -h, 0.0])
        ));
        assert!(close(
            &named_state("cluster").unwrap(),
            &real(&[0.5, 0.5, 0.5, -0.5])
        ));
        for name in STATE_NAMES {
            let s = named_state::<f64>(name).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < 1e-15, "{name}");
        }
        assert_eq!(
            named_state::<f64>("bogus"),
            Err(Error::UnknownState("bogus".into()))
        );
        assert!(named_state::<f64>("+").is_err());
    }

    #[test]
    fn amplitude_construction() {
        let c = |x: f64| Complex::new(x, 0.0);
        assert_eq!(
            from_amplitudes(vec![c(1.0), c(0.0), c(0.0), c(0.0)], false).unwrap(),
            basis_state(&[0, 0]).unwrap()
        );
        let uniform = from_amplitudes(vec![c(1.0); 4], true).unwrap();
        assert!(close(&uniform, &named_state("++").unwrap()));
        assert!(matches!(
            from_amplitudes(vec![c(1.0), c(1.0)], false),
            Err(Error::NormViolation { .. })
        ));
        assert_eq!(
            from_amplitudes(vec![c(0.0); 2], true),
            Err(Error::ZeroVector)
        );
        assert_eq!(
            from_amplitudes(vec![c(1.0); 3], true),
            Err(Error::NotPowerOfTwo(3))
        );
        assert_eq!(
            from_amplitudes::<f64>(vec![], true),
            Err(Error::NotPowerOfTwo(0))
        );
    }

    #[test]
    fn density_matrices() {
        let rho = basis_state::<f64>(&[0]).unwrap().density();
        assert_eq!(
            rho.0,
            Dense::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]).unwrap()
        );
        let rho = named_state::<f64>("cluster").unwrap().density();
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        assert!(rho.0.matmul(&rho.0).max_abs_diff(&rho.0) < 1e-12);
        assert!(rho.0.max_abs_diff(&rho.0.adjoint()) < 1e-15);
    }

    #[test]
    fn state_files() {
        let named = StateFile::parse(r#"{"name": "phi+"}"#).unwrap();
        assert!(close(
            &named.to_state().unwrap(),
            &named_state("phi+").unwrap()
        ));

        let explicit =
            StateFile::parse(r#"{"n": 1, "amplitudes": [[0.6, 0.0], [0.0, 0.8]]}"#).unwrap();
        let s: S = explicit.to_state().unwrap();
        assert_eq!(s.amplitudes()[1], Complex::new(0.0, 0.8));

        let round = StateFile::from_state(&s);
        assert_eq!(round, explicit);

        let wrong_n = StateFile::parse(r#"{"n": 2, "amplitudes": [[1, 0], [0, 0]]}"#).unwrap();
        assert!(matches!(
            wrong_n.to_state::<f64>(),
            Err(Error::InvalidStateFile(_))
        ));
        let unnormalized = StateFile::parse(r#"{"n": 1, "amplitudes": [[1, 0], [1, 0]]}"#).unwrap();
        assert!(matches!(
            unnormalized.to_state::<f64>(),
            Err(Error::NormViolation { .. })
        ));
        assert!(matches!(
            StateFile::parse("{"),
            Err(Error::InvalidStateFile(_))
        ));
    }

    #[test]
    fn global_phase_keeps_the_ray() {
        let s = named_state::<f64>("cluster").unwrap();
        let t = s.with_global_phase(1.234);
        assert!(s.same_ray(&t, 1e-12));
        assert!(s.max_abs_diff(&t) > 0.1);
    }
}
