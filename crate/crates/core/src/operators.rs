//! Logical connectives as commuting projection operators.
//!
//! All projectors of one variable order are diagonal in the computational
//! basis, so a projector is stored as its 0/1 diagonal. [`Dense`] is the
//! full-matrix form, built independently from Kronecker products, and is
//! used to cross-check the diagonal algebra.

use std::fmt;
use std::str::FromStr;

use ndarray::{linalg::kron, Array2};
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::formula::{truth_table, Formula, MultilinearPolynomial, VariableOrder, MAX_VARIABLES};
use crate::scalar::Real;

/// Largest variable count for dense-matrix operations (d = 1024).
pub const MAX_DENSE_VARIABLES: usize = 10;

/// Projector diagonal in the computational basis; entry `r` is the truth
/// value on row `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalProjector {
    diag: Vec<bool>,
}

impl DiagonalProjector {
    pub fn from_diagonal(diag: Vec<bool>) -> Result<Self> {
        if diag.is_empty() || !diag.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(diag.len()));
        }
        Ok(Self { diag })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        Self::from_diagonal(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            diag: vec![true; 1 << n],
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            diag: vec![false; 1 << n],
        }
    }

    /// Projector onto "variable `i` is true" among `n` variables.
    pub fn elementary(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, count: n });
        }
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: n,
                max: MAX_VARIABLES,
            });
        }
        let shift = n - 1 - i;
        Ok(Self {
            diag: (0..1usize << n).map(|r| (r >> shift) & 1 == 1).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// log2 of the dimension.
    pub fn qubits(&self) -> usize {
        self.diag.len().trailing_zeros() as usize
    }

    pub fn diagonal(&self) -> &[bool] {
        &self.diag
    }

    pub fn bits(&self) -> Vec<u8> {
        self.diag.iter().map(|&b| b as u8).collect()
    }

    /// Rank, the number of 1 eigenvalues.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|&&b| b).count()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            diag: self
                .diag
                .iter()
                .zip(&other.diag)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Product `PQ`: conjunction.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a && b)
    }

    /// `P + Q - PQ`: disjunction.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a || b)
    }

    /// `I - P`: negation.
    pub fn complement(&self) -> Self {
        Self {
            diag: self.diag.iter().map(|&b| !b).collect(),
        }
    }

    /// `I - P + PQ`: material implication.
    pub fn implies(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| !a || b)
    }

    pub fn to_dense<T: Real>(&self) -> Dense<T> {
        let d = self.dim();
        let mut m = Array2::zeros((d, d));
        for (r, &b) in self.diag.iter().enumerate() {
            if b {
                m[(r, r)] = Complex::one();
            }
        }
        Dense(m)
    }
}

/// Compiles `f` into its projector over `order`.
pub fn compile(f: &Formula, order: &VariableOrder) -> Result<DiagonalProjector> {
    DiagonalProjector::from_diagonal(truth_table(f, order)?.into_column())
}

/// `dim=<d>;diag=<bits>`, row 0 first.
impl fmt::Display for DiagonalProjector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim={};diag=", self.dim())?;
        for &b in &self.diag {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

impl FromStr for DiagonalProjector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidProjector(s.to_string());
        let (dim, diag) = s.trim().split_once(';').ok_or_else(bad)?;
        let dim: usize = dim
            .strip_prefix("dim=")
            .and_then(|d| d.parse().ok())
            .ok_or_else(bad)?;
        let bits = diag
            .strip_prefix("diag=")
            .ok_or_else(bad)?
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() != dim {
            return Err(bad());
        }
        Self::from_diagonal(bits)
    }
}

/// Dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<T>(pub Array2<Complex<T>>);

impl<T: Real> Dense<T> {
    pub fn identity(d: usize) -> Self {
        Dense(Array2::eye(d))
    }

    pub fn zeros(d: usize) -> Self {
        Dense(Array2::zeros((d, d)))
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::NonSquare {
                rows: nrows,
                cols: ncols,
            });
        }
        let flat: Vec<_> = rows.into_iter().flatten().collect();
        let m = Array2::from_shape_vec((nrows, ncols), flat).expect("shape checked");
        Ok(Dense(m))
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Complex::new(T::lit(x), T::zero()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn shape(&self) -> (usize, usize) {
        self.0.dim()
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        Dense(self.0.dot(&other.0))
    }

    pub fn kron(&self, other: &Self) -> Self {
        Dense(kron(&self.0, &other.0))
    }

    pub fn adjoint(&self) -> Self {
        Dense(self.0.t().mapv(|c| c.conj()))
    }

    pub fn scale(&self, k: T) -> Self {
        Dense(self.0.mapv(|c| c * k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Dense(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Dense(&self.0 - &other.0)
    }

    pub fn trace(&self) -> Complex<T> {
        self.0
            .diag()
            .iter()
            .fold(Complex::zero(), |acc, &c| acc + c)
    }

    /// Largest entry modulus of `self - other`; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.shape() != other.shape() {
            return T::infinity();
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Row-major `(re, im)` pairs.
    pub fn to_pairs(&self) -> Vec<Vec<(T, T)>> {
        self.0
            .rows()
            .into_iter()
            .map(|row| row.iter().map(|c| (c.re, c.im)).collect())
            .collect()
    }

    /// `sum c_S prod_{i in S} X_i` with `X_i` from [`dense_kron_elementary`].
    pub fn from_polynomial(p: &MultilinearPolynomial) -> Result<Self> {
        let n = p.order().len();
        let d = 1usize << n;
        let elementary = (0..n)
            .map(|i| dense_kron_elementary::<T>(i, n))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = Self::zeros(d);
        for (mono, &coeff) in p.terms() {
            let term = mono
                .indices()
                .iter()
                .fold(Self::identity(d), |m, &i| m.matmul(&elementary[i]));
            acc = acc.add(&term.scale(T::from_rational(coeff)));
        }
        Ok(acc)
    }
}

/// `I ⊗ … ⊗ diag(0,1) ⊗ … ⊗ I` with the projector in slot `i` (slot 0 is
/// the leftmost, most significant factor).
pub fn dense_kron_elementary<T: Real>(i: usize, n: usize) -> Result<Dense<T>> {
    if n == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, count: n });
    }
    if n > MAX_DENSE_VARIABLES {
        return Err(Error::TooManyVariables {
            count: n,
            max: MAX_DENSE_VARIABLES,
        });
    }
    let one_projector = Dense::<T>::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]])?;
    let id2 = Dense::<T>::identity(2);
    let mut acc = Dense::<T>::identity(1);
    for slot in 0..n {
        acc = acc.kron(if slot == i { &one_projector } else { &id2 });
    }
    Ok(acc)
}

/// True iff `m` is Hermitian and idempotent within `tol` (max norm).
pub fn verify_projector<T: Real>(m: &Dense<T>, tol: T) -> Result<bool> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    let hermitian = m.max_abs_diff(&m.adjoint()) <= tol;
    let idempotent = m.matmul(m).max_abs_diff(m) <= tol;
    Ok(hermitian && idempotent)
}
