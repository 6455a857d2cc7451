//! Boole's arithmetic form of a logical function.
//!
//! Interpolating a truth table with the basis `prod_i (x_i or 1 - x_i)` and
//! expanding gives a multilinear polynomial with integer coefficients, e.g.
//! `A -> B` becomes `1 - a + a*b`. The expansion is the Möbius transform of
//! the truth column over the subset lattice.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::ast::Formula;
use super::table::{truth_table, VariableOrder};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Product of distinct variables, stored as sorted variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self(indices)
    }

    pub fn constant() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

// Graded order: constant first, then by degree, then lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPolynomial {
    order: VariableOrder,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultilinearPolynomial {
    /// Builds a polynomial from explicit terms; zero coefficients are dropped.
    pub fn from_terms<I>(order: VariableOrder, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (mono, coeff) in terms {
            if let Some(&bad) = mono.indices().iter().find(|&&i| i >= order.len()) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    count: order.len(),
                });
            }
            *map.entry(mono).or_insert_with(Rational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { order, terms: map })
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).copied().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the product of the named variables.
    pub fn coefficient_of(&self, names: &[&str]) -> Result<Rational> {
        let indices = names
            .iter()
            .map(|n| {
                self.order
                    .index_of(n)
                    .ok_or_else(|| Error::UnknownVariable(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.coefficient(&Monomial::new(indices)))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Evaluates with positional values, one per variable of the order.
    pub fn eval<T: Scalar>(&self, values: &[T]) -> Result<T> {
        if values.len() != self.order.len() {
            return Err(Error::DimensionMismatch {
                left: self.order.len(),
                right: values.len(),
            });
        }
        Ok(self.eval_by(|i| values[i]))
    }

    /// Evaluates with values looked up by name. Only variables that occur in
    /// a nonzero term must be assigned.
    pub fn eval_named<T: Scalar>(&self, assignment: &HashMap<String, T>) -> Result<T> {
        let mut values = Vec::with_capacity(self.order.len());
        for name in self.order.names() {
            values.push(assignment.get(name).copied());
        }
        for mono in self.terms.keys() {
            if let Some(&i) = mono.indices().iter().find(|&&i| values[i].is_none()) {
                return Err(Error::MissingAssignment(self.order.names()[i].clone()));
            }
        }
        Ok(self.eval_by(|i| values[i].expect("checked above")))
    }

    fn eval_by<T: Scalar>(&self, value: impl Fn(usize) -> T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (mono, &coeff)| {
            let product = mono.indices().iter().fold(T::one(), |p, &i| p * value(i));
            acc + T::from_rational(coeff) * product
        })
    }
}

/// Boole's multilinear polynomial of `f` over `order`.
pub fn boole_polynomial(f: &Formula, order: &VariableOrder) -> Result<MultilinearPolynomial> {
    let table = truth_table(f, order)?;
    let n = order.len();
    let mut coeffs: Vec<i64> = table.column().iter().map(|&b| b as i64).collect();
    // In-place Möbius transform; row bit `n-1-i` carries variable i.
    for bit in 0..n {
        let step = 1 << bit;
        for row in 0..coeffs.len() {
            if row & step != 0 {
                coeffs[row] -= coeffs[row ^ step];
            }
        }
    }
    let terms = coeffs
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(row, c)| {
            let indices = (0..n).filter(|&i| order.bit(row, i)).collect();
            (Monomial::new(indices), Rational::from_integer(c))
        });
    MultilinearPolynomial::from_terms(order.clone(), terms)
}

/// Evaluates `p` at the given assignment.
pub fn eval_polynomial<T: Scalar>(
    p: &MultilinearPolynomial,
    assignment: &HashMap<String, T>,
) -> Result<T> {
    p.eval_named(assignment)
}

impl fmt::Display for MultilinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, coeff)) in self.terms.iter().enumerate() {
            let negative = *coeff < Rational::zero();
            let magnitude = if negative { -*coeff } else { *coeff };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let names: Vec<&str> = mono
                .indices()
                .iter()
                .map(|&i| self.order.names()[i].as_str())
                .collect();
            if names.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", names.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", names.join("*"))?;
            }
        }
        Ok(())
    }
}
