mod common;

use eigenlogic::bayes::{
    classify_case, diagonal_state, linear_relation_residuals, residual_a, residual_b, Alpha, Space,
};
use eigenlogic::born::Weights;
use eigenlogic::formula::{BinOp, Formula};
use eigenlogic::operators::Dense;
use eigenlogic::states::{Bloch, State};
use eigenlogic::*;
use proptest::prelude::*;
use std::f64::consts::TAU;

fn formula_strategy(n: usize) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::True),
        Just(Formula::False),
        (0..n).prop_map(|i| Formula::var(common::VARS[i])),
    ];
    leaf.prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (0..BinOp::ALL.len(), inner.clone(), inner).prop_map(|(k, l, r)| Formula::binary(
                BinOp::ALL[k],
                l,
                r
            )),
        ]
    })
}

fn state_strategy(n: usize) -> impl Strategy<Value = State<f64>> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n).prop_filter_map(
        "nonzero",
        |pairs| {
            let amps = pairs
                .into_iter()
                .map(|(re, im)| num_complex::Complex::new(re, im))
                .collect();
            from_amplitudes(amps, true).ok()
        },
    )
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(f in formula_strategy(4)) {
        let text = f.to_string();
        prop_assert_eq!(parse(&text).unwrap(), f);
    }

    #[test]
    fn polynomial_matches_truth_table(f in formula_strategy(4)) {
        let order = common::order(4);
        let poly = boole_polynomial(&f, &order).unwrap();
        prop_assert!(poly.is_integral());
        let table = truth_table(&f, &order).unwrap();
        for (r, &tv) in table.column().iter().enumerate() {
            let x: Vec<Rational> = (0..4)
                .map(|i| Rational::from_integer(order.bit(r, i) as i64))
                .collect();
            let value = poly.eval(&x).unwrap();
            prop_assert_eq!(value, Rational::from_integer(tv as i64));
            // idempotent truth values
            prop_assert_eq!(value * value, value);
        }
    }

    #[test]
    fn polynomial_matches_exact_interpolation(
        f in formula_strategy(3),
        xs in proptest::collection::vec((0i64..=8, 1i64..=8), 3),
    ) {
        let order = common::order(3);
        let x: Vec<Rational> = xs
            .iter()
            .map(|&(a, b)| Rational::new(a.min(b), b))
            .collect();
        let poly = boole_polynomial(&f, &order).unwrap();
        prop_assert_eq!(poly.eval(&x).unwrap(), common::exact_interpolate(&f, &order, &x));
    }

    #[test]
    fn global_phase_is_invisible(s in state_strategy(2), gamma in 0.0f64..TAU, f in formula_strategy(2)) {
        let order = common::order(2);
        let p = compile(&f, &order).unwrap();
        let t = s.with_global_phase(gamma);
        let diff = born_mean(&s, &p).unwrap() - born_mean(&t, &p).unwrap();
        prop_assert!(diff.abs() <= 1e-12);
    }

    #[test]
    fn born_mean_matches_density_trace(s in state_strategy(3), f in formula_strategy(3)) {
        let order = common::order(3);
        let p = compile(&f, &order).unwrap();
        let born = born_mean(&s, &p).unwrap();
        let trace = s.density().expectation(&p.to_dense()).unwrap();
        prop_assert!((born - trace).abs() <= 1e-12);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&born));
    }

    #[test]
    fn separable_closed_forms(
        tp in 0.0f64..=std::f64::consts::PI,
        tq in 0.0f64..=std::f64::consts::PI,
        pp in 0.0f64..TAU,
        pq in 0.0f64..TAU,
    ) {
        let a = Bloch::new(tp, pp).unwrap();
        let b = Bloch::new(tq, pq).unwrap();
        let s = tensor(&single_qubit(a), &single_qubit(b));
        prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
        let (p, q) = (a.probability_one(), b.probability_one());
        let bundle = probability_bundle(
            &s,
            &DiagonalProjector::elementary(0, 2).unwrap(),
            &DiagonalProjector::elementary(1, 2).unwrap(),
        ).unwrap();
        let tol = 1e-10;
        prop_assert!((bundle.p_a - p).abs() <= tol);
        prop_assert!((bundle.p_b - q).abs() <= tol);
        prop_assert!((bundle.p_and - p * q).abs() <= tol);
        prop_assert!((bundle.p_or - (p + q - p * q)).abs() <= tol);
        prop_assert!((bundle.p_imp - (1.0 - p + p * q)).abs() <= tol);
    }

    #[test]
    fn classifier_soundness(s in state_strategy(2)) {
        let a = DiagonalProjector::elementary(0, 2).unwrap();
        let b = DiagonalProjector::elementary(1, 2).unwrap();
        let report = quantum_bayes_check(&s, &a, &b, 1e-9).unwrap();
        if report.case.satisfies_rule() {
            prop_assert!(report.residual_a.abs() <= 1e-8 && report.residual_b.abs() <= 1e-8);
        }
        let (ra, rb) = report.direct_residuals();
        prop_assert!((ra - report.residual_a).abs() <= 1e-10);
        prop_assert!((rb - report.residual_b).abs() <= 1e-10);
    }

    #[test]
    fn alpha_is_monotone(pa in 0.01f64..=1.0, frac in 0.0f64..=1.0, a1 in 0.0f64..=1.0, a2 in 0.0f64..=1.0) {
        let pand = pa * frac;
        let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let v_lo = alpha_implication(pa, pand, Alpha::new(lo).unwrap()).unwrap();
        let v_hi = alpha_implication(pa, pand, Alpha::new(hi).unwrap()).unwrap();
        prop_assert!(v_lo <= v_hi + 1e-12);
    }
}

// Hypothesis-constructed weights: every case label implies vanishing
// residuals and conditionals equal to the implication probabilities.
#[test]
fn classifier_soundness_on_boundary_weights() {
    let mut rng = common::rng(11);
    use rand::Rng;
    for _ in 0..2000 {
        let t: f64 = rng.gen_range(0.0..1.0);
        let w = match rng.gen_range(0..4) {
            0 => Weights::new(1.0 - t, 0.0, 0.0, t),
            1 => Weights::new(0.0, 1.0 - t, 0.0, t),
            2 => Weights::new(0.0, 0.0, 1.0 - t, t),
            _ => Weights::new(0.0, 0.0, 0.0, 1.0),
        };
        let case = classify_case(&w, 1e-9);
        if case.satisfies_rule() {
            assert!(residual_a(&w).abs() <= 1e-8 && residual_b(&w).abs() <= 1e-8);
            let bundle = probabilities_from_weights(&w).unwrap();
            assert!((bundle.p_and / bundle.p_a - bundle.p_imp).abs() <= 1e-8);
            assert!((bundle.p_and / bundle.p_b - bundle.p_conv).abs() <= 1e-8);
        } else {
            assert!(t <= 1e-9, "{w:?} -> {case}");
        }
    }
}

#[test]
fn truth_value_identities_on_all_rows() {
    let order = common::order(2);
    let col = |text: &str| truth_table(&parse(text).unwrap(), &order).unwrap().bits();
    let (a, b, and) = (col("A"), col("B"), col("A & B"));
    let (imp, conv) = (col("A -> B"), col("B -> A"));
    for r in 0..4 {
        assert_eq!(a[r] * imp[r], and[r]);
        assert_eq!(b[r] * conv[r], and[r]);
        assert_eq!(a[r] + imp[r], 1 + and[r]);
        assert_eq!(b[r] + conv[r], 1 + and[r]);
    }
    assert_eq!(col("A -> B"), col("!A | B"));
    assert_eq!(col("B -> A"), col("A | !B"));
}

fn formulas_up_to_depth(depth: usize) -> Vec<Formula> {
    let mut all = vec![
        Formula::var("A"),
        Formula::var("B"),
        Formula::True,
        Formula::False,
    ];
    for _ in 0..depth {
        let mut next = all.clone();
        for f in &all {
            next.push(Formula::not(f.clone()));
        }
        for l in &all {
            for r in &all {
                for op in [BinOp::And, BinOp::Or, BinOp::Implies] {
                    next.push(Formula::binary(op, l.clone(), r.clone()));
                }
            }
        }
        // Dedupe by column to keep the next level tractable.
        let order = common::order(2);
        let mut seen = std::collections::HashSet::new();
        next.retain(|f| seen.insert((truth_table(f, &order).unwrap().bits(), f.depth())));
        all = next;
    }
    all
}

#[test]
fn compilation_is_a_homomorphism() {
    let order = common::order(2);
    let fs = formulas_up_to_depth(2);
    assert!(fs.iter().any(|f| f.depth() == 2));
    for f in &fs {
        let pf = compile(f, &order).unwrap();
        assert_eq!(
            compile(&Formula::not(f.clone()), &order).unwrap(),
            pf.complement()
        );
        for g in &fs {
            let pg = compile(g, &order).unwrap();
            let and = compile(&Formula::and(f.clone(), g.clone()), &order).unwrap();
            let or = compile(&Formula::or(f.clone(), g.clone()), &order).unwrap();
            let imp = compile(&Formula::implies(f.clone(), g.clone()), &order).unwrap();
            assert_eq!(and, pf.meet(&pg).unwrap());
            assert_eq!(or, pf.join(&pg).unwrap());
            assert_eq!(imp, pf.implies(&pg).unwrap());
            assert_eq!(pf.meet(&pg).unwrap(), pg.meet(&pf).unwrap());
        }
    }
}

#[test]
fn exact_classical_spaces() {
    let order = common::order(2);
    let q = Rational::new;
    let sp = Space::new(order, vec![q(1, 8), q(3, 8), q(1, 4), q(1, 4)]).unwrap();
    let a = parse("A").unwrap();
    let b = parse("B").unwrap();
    let p_a = event_probability(&sp, &a).unwrap();
    let p_and = event_probability(&sp, &parse("A & B").unwrap()).unwrap();
    let p_imp = implication_probability(&sp, &a, &b).unwrap();
    assert_eq!(p_a, q(1, 2));
    assert_eq!(p_imp, Rational::from_integer(1) - p_a + p_and);
    assert_eq!(conditional(&sp, &a, &b).unwrap(), q(1, 2));
    assert_eq!(
        alpha_implication(p_a, p_and, Alpha::new(q(0, 1)).unwrap()).unwrap(),
        p_and / p_a
    );
    assert_eq!(
        alpha_implication(p_a, p_and, Alpha::new(q(1, 1)).unwrap()).unwrap(),
        p_imp
    );
}

#[test]
fn single_precision_instantiation() {
    let a = DiagonalProjector::elementary(0, 2).unwrap();
    let b = DiagonalProjector::elementary(1, 2).unwrap();
    let s: State<f32> = named_state("cluster").unwrap();
    let report = quantum_bayes_check(&s, &a, &b, f32::TOL_CLASSIFY).unwrap();
    assert!((report.bundle.p_imp - 0.75).abs() < 1e-6);
    assert!((report.residual_a - 0.125).abs() < 1e-6);
    assert_eq!(report.case, Case::Fails);
    let (la, lb) = linear_relation_residuals(&report.bundle);
    assert!(la.abs() < 1e-6 && lb.abs() < 1e-6);
    let dense: Dense<f32> = a.to_dense();
    assert!(verify_projector(&dense, f32::TOL_OP).unwrap());
}

#[test]
fn diagonal_states_are_classical() {
    let mut rng = common::rng(5);
    for _ in 0..50 {
        let sp = common::random_space(&mut rng, 3);
        let s = diagonal_state(&sp).unwrap();
        let f = common::random_formula(&mut rng, 3, 4);
        let p = compile(&f, sp.order()).unwrap();
        let diff = born_mean(&s, &p).unwrap() - event_probability(&sp, &f).unwrap();
        assert!(diff.abs() <= 1e-10);
    }
}
