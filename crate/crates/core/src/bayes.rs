//! Classical probability over truth-table atoms, and the quantum-like Bayes
//! condition `P(B|A) = P(A→B)` on Born probabilities.
//!
//! The classical half is generic over [`Scalar`], so it runs exactly on
//! rationals as well as on floats.

use serde::Serialize;

use crate::born::{decompose, probability_bundle, Bundle, Weights};
use crate::error::{Error, Result};
use crate::formula::{truth_table, Formula, VariableOrder};
use crate::operators::DiagonalProjector;
use crate::scalar::{lossy_f64, Real, Scalar};
use crate::states::{from_amplitudes, State};

/// Upper limit on the number of events for inclusion-exclusion.
pub const MAX_EVENTS: usize = 12;

/// Probability weights over the `2^n` atoms of a variable order.
#[derive(Debug, Clone, PartialEq)]
pub struct Space<T> {
    order: VariableOrder,
    weights: Vec<T>,
}

impl<T: Scalar> Space<T> {
    pub fn new(order: VariableOrder, weights: Vec<T>) -> Result<Self> {
        if weights.len() != order.rows() {
            return Err(Error::InvalidSpace(format!(
                "{} weights for {} atoms",
                weights.len(),
                order.rows()
            )));
        }
        let tol = T::probability_tol();
        if let Some(w) = weights.iter().find(|&&w| w < T::zero() - tol) {
            return Err(Error::InvalidSpace(format!("negative weight {w}")));
        }
        let sum = weights.iter().fold(T::zero(), |acc, &w| acc + w);
        if !sum.is_close(T::one(), tol) {
            return Err(Error::InvalidSpace(format!("weights sum to {sum}")));
        }
        Ok(Self { order, weights })
    }

    pub fn uniform(order: VariableOrder) -> Self {
        let rows = order.rows();
        let w = T::one() / T::from_usize(rows).expect("row count fits");
        Self {
            order,
            weights: vec![w; rows],
        }
    }

    pub fn point_mass(order: VariableOrder, row: usize) -> Result<Self> {
        let rows = order.rows();
        if row >= rows {
            return Err(Error::IndexOutOfRange {
                index: row,
                count: rows,
            });
        }
        let mut weights = vec![T::zero(); rows];
        weights[row] = T::one();
        Ok(Self { order, weights })
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    fn mass(&self, column: &[bool]) -> T {
        self.weights
            .iter()
            .zip(column)
            .filter(|(_, &on)| on)
            .fold(T::zero(), |acc, (&w, _)| acc + w)
    }

    fn column(&self, f: &Formula) -> Result<Vec<bool>> {
        Ok(truth_table(f, &self.order)?.into_column())
    }
}

/// Total weight of the atoms where `f` holds.
pub fn event_probability<T: Scalar>(sp: &Space<T>, f: &Formula) -> Result<T> {
    Ok(sp.mass(&sp.column(f)?))
}

/// `P(target | given) = P(given ∧ target) / P(given)`.
pub fn conditional<T: Scalar>(sp: &Space<T>, given: &Formula, target: &Formula) -> Result<T> {
    let prior = event_probability(sp, given)?;
    if prior <= T::zero_tol() {
        return Err(Error::ZeroPrior {
            prior: lossy_f64(prior),
        });
    }
    let joint = event_probability(sp, &Formula::and(given.clone(), target.clone()))?;
    Ok(joint / prior)
}

/// `P(A → B)`, by direct event evaluation.
pub fn implication_probability<T: Scalar>(sp: &Space<T>, a: &Formula, b: &Formula) -> Result<T> {
    event_probability(sp, &Formula::implies(a.clone(), b.clone()))
}

/// Interpolation weight between Bayes conditioning (0) and material
/// implication (1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha<T>(T);

impl<T: Scalar> Alpha<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if alpha < T::zero() || alpha > T::one() {
            return Err(Error::AlphaOutOfRange(lossy_f64(alpha)));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// `(P(A∩B) + α(1 − P(A))) / (P(A) + α(1 − P(A)))`.
///
/// Gives `P(A∩B)/P(A)` at α = 0 and `1 − P(A) + P(A∩B)` at α = 1, and is
/// nondecreasing in α.
pub fn alpha_implication<T: Scalar>(p_a: T, p_and: T, alpha: Alpha<T>) -> Result<T> {
    if p_and > p_a + T::probability_tol() {
        return Err(Error::InconsistentProbabilities {
            a: lossy_f64(p_a),
            and: lossy_f64(p_and),
        });
    }
    let slack = alpha.0 * (T::one() - p_a);
    let denominator = p_a + slack;
    if denominator <= T::zero_tol() {
        return Err(Error::ZeroDenominator);
    }
    Ok((p_and + slack) / denominator)
}

/// `(pA + pImp − 1 − pAnd, pB + pConv − 1 − pAnd)`. Division free, so it is
/// defined even when a prior vanishes.
pub fn linear_relation_residuals<T: Scalar>(bundle: &Bundle<T>) -> (T, T) {
    let rhs = T::one() + bundle.p_and;
    (
        bundle.p_a + bundle.p_imp - rhs,
        bundle.p_b + bundle.p_conv - rhs,
    )
}

fn event_columns<T: Scalar>(sp: &Space<T>, events: &[Formula]) -> Result<Vec<Vec<bool>>> {
    if events.is_empty() {
        return Err(Error::NoEvents);
    }
    if events.len() > MAX_EVENTS {
        return Err(Error::TooManyEvents {
            count: events.len(),
            max: MAX_EVENTS,
        });
    }
    events.iter().map(|f| sp.column(f)).collect()
}

/// `P(∪ A_i)` by the alternating sum over all nonempty index subsets.
pub fn inclusion_exclusion<T: Scalar>(sp: &Space<T>, events: &[Formula]) -> Result<T> {
    let columns = event_columns(sp, events)?;
    let rows = sp.order.rows();
    let mut total = T::zero();
    for subset in 1usize..1 << columns.len() {
        let mut meet = vec![true; rows];
        for (k, col) in columns.iter().enumerate() {
            if subset & (1 << k) != 0 {
                meet.iter_mut().zip(col).for_each(|(m, &c)| *m &= c);
            }
        }
        let p = sp.mass(&meet);
        if subset.count_ones() % 2 == 1 {
            total = total + p;
        } else {
            total = total - p;
        }
    }
    Ok(total)
}

/// Implication bounds for the ordered pair (antecedent, consequent):
/// `P(B) ≤ P(A→B) ≤ 1 − P(A) + P(B)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImplicationBound<T> {
    pub antecedent: usize,
    pub consequent: usize,
    pub value: T,
    pub lower: T,
    pub upper: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds<T> {
    /// `P(∪ A_i)` by inclusion-exclusion.
    pub union: T,
    /// `P(∪ A_i)` evaluated on the disjunction directly.
    pub union_direct: T,
    /// `Σ P(A_i)`
    pub boole: T,
    /// `Σ P(A_i) − Σ_{i<j} P(A_i ∩ A_j)`
    pub bonferroni: T,
    pub implications: Vec<ImplicationBound<T>>,
}

impl<T: Scalar> Bounds<T> {
    /// Whether every bound brackets its value within `tol`.
    pub fn holds(&self, tol: T) -> bool {
        self.bonferroni <= self.union + tol
            && self.union <= self.boole + tol
            && self.union.is_close(self.union_direct, tol)
            && self
                .implications
                .iter()
                .all(|b| b.lower <= b.value + tol && b.value <= b.upper + tol)
    }
}

/// Boole upper bound, Bonferroni lower bound and pairwise implication bounds.
pub fn probability_bounds<T: Scalar>(sp: &Space<T>, events: &[Formula]) -> Result<Bounds<T>> {
    let columns = event_columns(sp, events)?;
    let singles: Vec<T> = columns.iter().map(|c| sp.mass(c)).collect();
    let boole = singles.iter().fold(T::zero(), |acc, &p| acc + p);
    let mut pairwise = T::zero();
    let mut implications = Vec::new();
    for i in 0..columns.len() {
        for j in 0..columns.len() {
            if i == j {
                continue;
            }
            if i < j {
                let both: Vec<bool> = columns[i]
                    .iter()
                    .zip(&columns[j])
                    .map(|(&a, &b)| a && b)
                    .collect();
                pairwise = pairwise + sp.mass(&both);
            }
            let imp: Vec<bool> = columns[i]
                .iter()
                .zip(&columns[j])
                .map(|(&a, &b)| !a || b)
                .collect();
            implications.push(ImplicationBound {
                antecedent: i,
                consequent: j,
                value: sp.mass(&imp),
                lower: singles[j],
                upper: T::one() - singles[i] + singles[j],
            });
        }
    }
    let any: Vec<bool> = (0..sp.order.rows())
        .map(|r| columns.iter().any(|c| c[r]))
        .collect();
    Ok(Bounds {
        union: inclusion_exclusion(sp, events)?,
        union_direct: sp.mass(&any),
        boole,
        bonferroni: boole - pairwise,
        implications,
    })
}

/// State with amplitudes `sqrt(weight_r)`; its Born probabilities are the
/// classical ones.
pub fn diagonal_state<T: Real>(sp: &Space<T>) -> Result<State<T>> {
    let amps = sp
        .weights
        .iter()
        .map(|&w| num_complex::Complex::new(w.max(T::zero()).sqrt(), T::zero()))
        .collect();
    from_amplitudes(amps, true)
}

/// Outcome of the quantum-like Bayes check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    /// `w10 = w01 = 0`, `w11 ≠ 0`
    #[serde(rename = "case1")]
    Case1,
    /// `w10 = w00 = 0`, `w01 + w11 = 1`, `w11 ≠ 0`
    #[serde(rename = "case2")]
    Case2,
    /// `w01 = w00 = 0`, `w10 + w11 = 1`, `w11 ≠ 0`
    #[serde(rename = "case3")]
    Case3,
    /// `w11 = 1`
    #[serde(rename = "case4")]
    Case4,
    #[serde(rename = "holds_A_only")]
    HoldsAOnly,
    #[serde(rename = "holds_B_only")]
    HoldsBOnly,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "degenerate")]
    Degenerate,
}

impl Case {
    /// True for the four cases in which both Bayes equalities hold.
    pub fn satisfies_rule(self) -> bool {
        matches!(self, Case::Case1 | Case::Case2 | Case::Case3 | Case::Case4)
    }

    pub fn label(self) -> &'static str {
        match self {
            Case::Case1 => "case1",
            Case::Case2 => "case2",
            Case::Case3 => "case3",
            Case::Case4 => "case4",
            Case::HoldsAOnly => "holds_A_only",
            Case::HoldsBOnly => "holds_B_only",
            Case::Fails => "fails",
            Case::Degenerate => "degenerate",
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// `w10 (1 − (w10 + w11))`, equal to `P(A) P(A→B) − P(A∩B)`.
pub fn residual_a<T: Real>(w: &Weights<T>) -> T {
    w.w10 * (T::one() - (w.w10 + w.w11))
}

/// `w01 (1 − (w01 + w11))`, equal to `P(B) P(B→A) − P(A∩B)`.
pub fn residual_b<T: Real>(w: &Weights<T>) -> T {
    w.w01 * (T::one() - (w.w01 + w.w11))
}

/// Classifies decomposition weights against the four hypotheses under which
/// both Bayes equalities hold.
///
/// Precedence: both priors zero gives `Degenerate`; then case4, case1,
/// case2, case3; then one-sided results. When exactly one prior is zero the
/// residual on that side vanishes trivially: if the other side's residual
/// also vanishes the result is `Degenerate`, otherwise the vanishing side is
/// reported (`HoldsAOnly` or `HoldsBOnly`).
pub fn classify_case<T: Real>(w: &Weights<T>, tol: T) -> Case {
    let zero = |x: T| x.abs() <= tol;
    let unit = |x: T| (x - T::one()).abs() <= tol;
    let p_a = w.w10 + w.w11;
    let p_b = w.w01 + w.w11;
    let a_defined = p_a > tol;
    let b_defined = p_b > tol;
    if !a_defined && !b_defined {
        return Case::Degenerate;
    }
    if a_defined && b_defined {
        let w11_on = w.w11 > tol;
        if unit(w.w11) && zero(w.w00) && zero(w.w01) && zero(w.w10) {
            return Case::Case4;
        }
        if zero(w.w10) && zero(w.w01) && w11_on {
            return Case::Case1;
        }
        if zero(w.w10) && zero(w.w00) && unit(w.w01 + w.w11) && w11_on {
            return Case::Case2;
        }
        if zero(w.w01) && zero(w.w00) && unit(w.w10 + w.w11) && w11_on {
            return Case::Case3;
        }
    }
    match (zero(residual_a(w)), zero(residual_b(w))) {
        // Both vanish but no hypothesis matched: one prior is zero, or the
        // weights sit at the edge of the tolerance band.
        (true, true) => Case::Degenerate,
        (true, false) => Case::HoldsAOnly,
        (false, true) => Case::HoldsBOnly,
        (false, false) => Case::Fails,
    }
}

/// Bundle, weights, residuals, conditionals and case for one state and pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<T> {
    #[serde(flatten)]
    pub bundle: Bundle<T>,
    #[serde(flatten)]
    pub weights: Weights<T>,
    #[serde(rename = "residualA")]
    pub residual_a: T,
    #[serde(rename = "residualB")]
    pub residual_b: T,
    #[serde(skip)]
    pub cond_a_defined: bool,
    #[serde(skip)]
    pub cond_b_defined: bool,
    /// `P(B|A)`
    #[serde(rename = "conditionalBA")]
    pub conditional_ba: Option<T>,
    /// `P(A|B)`
    #[serde(rename = "conditionalAB")]
    pub conditional_ab: Option<T>,
    pub case: Case,
}

impl<T: Real> Report<T> {
    /// `(P(A)P(A→B) − P(A∩B), P(B)P(B→A) − P(A∩B))` from the bundle.
    pub fn direct_residuals(&self) -> (T, T) {
        let b = &self.bundle;
        (b.p_a * b.p_imp - b.p_and, b.p_b * b.p_conv - b.p_and)
    }
}

pub fn quantum_bayes_check<T: Real>(
    s: &State<T>,
    a: &DiagonalProjector,
    b: &DiagonalProjector,
    tol: T,
) -> Result<Report<T>> {
    let (_, weights) = decompose(s, a, b)?;
    let bundle = probability_bundle(s, a, b)?;
    let cond_a_defined = bundle.p_a > T::TOL_ZERO;
    let cond_b_defined = bundle.p_b > T::TOL_ZERO;
    Ok(Report {
        bundle,
        weights,
        residual_a: residual_a(&weights),
        residual_b: residual_b(&weights),
        cond_a_defined,
        cond_b_defined,
        conditional_ba: cond_a_defined.then(|| bundle.p_and / bundle.p_a),
        conditional_ab: cond_b_defined.then(|| bundle.p_and / bundle.p_b),
        case: classify_case(&weights, tol),
    })
}
