#![allow(dead_code)]

use eigenlogic::bayes::Space;
use eigenlogic::formula::{BinOp, Formula, VariableOrder};
use eigenlogic::states::State;
use eigenlogic::{from_amplitudes, Rational};
use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const VARS: [&str; 5] = ["A", "B", "C", "D", "E"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn order(n: usize) -> VariableOrder {
    VariableOrder::new(VARS[..n].iter().copied()).unwrap()
}

/// Random formula over the first `n` variables with depth at most `depth`.
pub fn random_formula(rng: &mut impl Rng, n: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::var(VARS[rng.gen_range(0..n)]),
        };
    }
    if rng.gen_bool(0.2) {
        return Formula::not(random_formula(rng, n, depth - 1));
    }
    let op = BinOp::ALL[rng.gen_range(0..BinOp::ALL.len())];
    Formula::binary(
        op,
        random_formula(rng, n, depth - 1),
        random_formula(rng, n, depth - 1),
    )
}

/// Uniformly random direction in C^(2^n).
pub fn random_state(rng: &mut impl Rng, n: usize) -> State<f64> {
    let amps = (0..1usize << n)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    from_amplitudes(amps, true).unwrap()
}

pub fn random_space(rng: &mut impl Rng, n: usize) -> Space<f64> {
    let raw: Vec<f64> = (0..1usize << n)
        .map(|_| {
            if rng.gen_bool(0.15) {
                0.0
            } else {
                rng.gen_range(0.0..1.0)
            }
        })
        .collect();
    let total: f64 = raw.iter().sum();
    let weights = if total > 0.0 {
        raw.iter().map(|w| w / total).collect()
    } else {
        let mut w = vec![0.0; raw.len()];
        w[0] = 1.0;
        w
    };
    Space::new(order(n), weights).unwrap()
}

/// Classical evaluation on row `r` (variable 0 is the most significant bit).
pub fn eval_row(f: &Formula, order: &VariableOrder, r: usize) -> bool {
    let n = order.len();
    f.eval_with(&|name: &str| {
        let i = order.index_of(name).unwrap();
        (r >> (n - 1 - i)) & 1 == 1
    })
}

/// Boole interpolation evaluated directly:
/// `sum_r f(r) prod_i (x_i if bit_i(r) else 1 - x_i)`.
pub fn interpolate(f: &Formula, order: &VariableOrder, x: &[f64]) -> f64 {
    let n = order.len();
    (0..1usize << n)
        .filter(|&r| eval_row(f, order, r))
        .map(|r| {
            (0..n)
                .map(|i| {
                    if (r >> (n - 1 - i)) & 1 == 1 {
                        x[i]
                    } else {
                        1.0 - x[i]
                    }
                })
                .product::<f64>()
        })
        .sum()
}

pub fn exact_interpolate(f: &Formula, order: &VariableOrder, x: &[Rational]) -> Rational {
    let n = order.len();
    let one = Rational::from_integer(1);
    (0..1usize << n)
        .filter(|&r| eval_row(f, order, r))
        .map(|r| {
            (0..n).fold(one, |acc, i| {
                acc * if (r >> (n - 1 - i)) & 1 == 1 {
                    x[i]
                } else {
                    one - x[i]
                }
            })
        })
        .fold(Rational::from_integer(0), |a, b| a + b)
}
