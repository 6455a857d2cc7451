//! Propositional logic as commuting projection operators.
//!
//! A formula over `n` variables compiles to a 0/1 diagonal operator on
//! `2^n` dimensions whose eigenvalues are its truth values. Measuring such
//! operators on a state vector with the Born rule gives probabilities for
//! conjunction, disjunction and material implication, and [`bayes`] checks
//! when `P(B|A) = P(A→B)` holds for them.
//!
//! Numeric code is generic over [`Real`] (f32, f64) or [`Scalar`] (which
//! also covers exact [`Rational`]); the aliases below fix the common f64 and
//! exact instantiations.
//!
//! ```
//! use eigenlogic::{born_mean, compile, named_state, parse, StateVector, VariableOrder};
//!
//! let order = VariableOrder::new(["A", "B"]).unwrap();
//! let imp = compile(&parse("A -> B").unwrap(), &order).unwrap();
//! let uniform: StateVector = named_state("++").unwrap();
//! assert!((born_mean(&uniform, &imp).unwrap() - 0.75).abs() < 1e-12);
//! ```

pub mod bayes;
pub mod born;
mod error;
pub mod formula;
pub mod operators;
pub mod scalar;
pub mod states;

pub use bayes::{
    alpha_implication, classify_case, conditional, event_probability, implication_probability,
    inclusion_exclusion, linear_relation_residuals, probability_bounds, quantum_bayes_check, Case,
};
pub use born::{born_mean, decompose, probabilities_from_weights, probability_bundle};
pub use error::{Error, Result};
pub use formula::{
    boole_polynomial, eval_polynomial, parse, truth_table, BinOp, Formula, MultilinearPolynomial,
    TruthTable, VariableOrder,
};
pub use operators::{compile, dense_kron_elementary, verify_projector, DiagonalProjector};
pub use scalar::{Rational, Real, Scalar};
pub use states::{basis_state, from_amplitudes, named_state, single_qubit, tensor};

pub type StateVector = states::State<f64>;
pub type BlochAngles = states::Bloch<f64>;
pub type DensityMatrix = states::Density<f64>;
pub type DenseOperator = operators::Dense<f64>;
pub type ProbabilityBundle = born::Bundle<f64>;
pub type DecompositionWeights = born::Weights<f64>;
pub type ProbabilitySpace = bayes::Space<f64>;
pub type ExactProbabilitySpace = bayes::Space<Rational>;
pub type AlphaParameter = bayes::Alpha<f64>;
pub type BayesReport = bayes::Report<f64>;
