//! Command-line front end for the `eigenlogic` library.
//!
//! [`run`] executes a parsed [`Cli`] and returns the text to print together
//! with the exit code, so the binary stays a thin wrapper.

pub mod format;
pub mod tables;

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use eigenlogic::bayes::{alpha_implication, probability_bounds, Alpha, Space};
use eigenlogic::states::StateFile;
use eigenlogic::{
    boole_polynomial, born_mean, compile, decompose, from_amplitudes, named_state, parse,
    probability_bundle, quantum_bayes_check, truth_table, DenseOperator, DiagonalProjector, Error,
    Formula, Real, StateVector, VariableOrder,
};
use num_complex::Complex;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::format::{num, round12};

pub const EXIT_OK: u8 = 0;
/// `bayes` finished but the rule does not hold (or the case is degenerate).
pub const EXIT_RULE_FAILS: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DIMENSION: u8 = 3;
pub const EXIT_INPUT_FILE: u8 = 4;
pub const EXIT_OTHER: u8 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "eigenlogic",
    version,
    about = "Propositional formulas as projectors, measured by the Born rule"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the truth table of one or more formulas.
    Truthtable {
        #[arg(required = true)]
        formulas: Vec<String>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Show the diagonal projector and Boole polynomial of a formula.
    Compile {
        formula: String,
        #[arg(long)]
        order: Option<String>,
        /// Include the dense matrix (JSON only).
        #[arg(long)]
        dense: bool,
        #[arg(long)]
        json: bool,
    },
    /// Born probability of each formula in a state.
    Measure {
        #[command(flatten)]
        state: StateArgs,
        #[arg(required = true)]
        formulas: Vec<String>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Check the quantum-like Bayes rule for propositions A and B.
    Bayes {
        #[command(flatten)]
        state: StateArgs,
        a: String,
        b: String,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = f64::TOL_CLASSIFY)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Print the reference tables.
    Tables {
        #[arg(long)]
        json: bool,
    },
    /// Union, Boole and Bonferroni bounds for events on a classical space.
    Bounds {
        /// Space file, `@path` or `path`.
        #[arg(long)]
        space: String,
        #[arg(required = true)]
        events: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Named state, or `@path` to a JSON state file.
    #[arg(
        long,
        required_unless_present = "amplitudes",
        conflicts_with = "amplitudes"
    )]
    pub state: Option<String>,
    /// Comma-separated amplitudes in row order; complex entries as `re:im`.
    #[arg(long, allow_hyphen_values = true)]
    pub amplitudes: Option<String>,
    /// Rescale `--amplitudes` to unit norm.
    #[arg(long, requires = "amplitudes")]
    pub normalize: bool,
}

/// Space file: `{"order": ["A", "B"], "weights": [w00, w01, w10, w11]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub order: Vec<String>,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code,
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    use Error::*;
    match e {
        EmptyInput
        | Syntax { .. }
        | UnbalancedParen { .. }
        | AmbiguousImplication { .. }
        | InvalidVariable(_)
        | DuplicateVariable(_)
        | UnknownVariable(_)
        | MissingAssignment(_)
        | TooManyVariables { .. }
        | NoEvents
        | TooManyEvents { .. }
        | AlphaOutOfRange(_) => EXIT_PARSE,
        DimensionMismatch { .. } | IndexOutOfRange { .. } => EXIT_DIMENSION,
        InvalidStateFile(_)
        | UnknownState(_)
        | NormViolation { .. }
        | ZeroVector
        | NotPowerOfTwo(_)
        | InvalidSpace(_)
        | EmptyBits => EXIT_INPUT_FILE,
        _ => EXIT_OTHER,
    }
}

fn fail(e: Error) -> Failure {
    Failure::new(exit_code(&e), e.to_string())
}

fn error_offset(e: &Error) -> Option<usize> {
    match e {
        Error::Syntax { offset, .. }
        | Error::UnbalancedParen { offset }
        | Error::AmbiguousImplication { offset } => Some(*offset),
        _ => None,
    }
}

/// Parse a formula, pointing at the offending byte on failure.
fn parse_formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| {
        let mut message = e.to_string();
        if let Some(offset) = error_offset(&e) {
            let column = text.get(..offset).map_or(offset, |s| s.chars().count());
            message.push_str(&format!("\n  {text}\n  {}^", " ".repeat(column)));
        }
        Failure::new(EXIT_PARSE, message)
    })
}

fn parse_all(texts: &[String]) -> Result<Vec<Formula>, Failure> {
    texts.iter().map(|t| parse_formula(t)).collect()
}

fn free_variables(formulas: &[Formula]) -> BTreeSet<String> {
    formulas
        .iter()
        .flat_map(|f| f.variables())
        .map(str::to_string)
        .collect()
}

fn explicit_order(text: &str, formulas: &[Formula]) -> Result<VariableOrder, Failure> {
    let order = VariableOrder::parse_list(text).map_err(fail)?;
    for f in formulas {
        order.check_covers(f).map_err(fail)?;
    }
    Ok(order)
}

/// Sorted free variables unless `--order` is given.
fn table_order(order: Option<&str>, formulas: &[Formula]) -> Result<VariableOrder, Failure> {
    match order {
        Some(text) => explicit_order(text, formulas),
        None => VariableOrder::new(free_variables(formulas)).map_err(fail),
    }
}

/// For an `n`-qubit state: `A, B, C, ...` when the formulas only mention
/// those letters, otherwise the sorted free variables.
fn state_order(
    order: Option<&str>,
    formulas: &[Formula],
    qubits: usize,
) -> Result<VariableOrder, Failure> {
    let order = match order {
        Some(text) => explicit_order(text, formulas)?,
        None => {
            let vars = free_variables(formulas);
            let letters: Vec<String> = (b'A'..=b'Z')
                .take(qubits)
                .map(|c| (c as char).to_string())
                .collect();
            if letters.len() == qubits && vars.iter().all(|v| letters.contains(v)) {
                VariableOrder::new(letters).map_err(fail)?
            } else {
                VariableOrder::new(vars).map_err(fail)?
            }
        }
    };
    if order.len() != qubits {
        return Err(fail(Error::DimensionMismatch {
            left: order.rows(),
            right: 1usize << qubits,
        }));
    }
    Ok(order)
}

fn read_input(arg: &str) -> Result<String, Failure> {
    let path = PathBuf::from(arg.strip_prefix('@').unwrap_or(arg));
    std::fs::read_to_string(&path).map_err(|e| {
        Failure::new(
            EXIT_INPUT_FILE,
            format!("cannot read {}: {e}", path.display()),
        )
    })
}

fn parse_amplitudes(text: &str) -> Result<Vec<Complex<f64>>, Failure> {
    let bad = |item: &str| {
        Failure::new(
            EXIT_INPUT_FILE,
            format!("invalid amplitude `{item}`; expected `re` or `re:im`"),
        )
    };
    text.split(',')
        .map(|item| {
            let item = item.trim();
            let (re, im) = item.split_once(':').unwrap_or((item, "0"));
            match (re.trim().parse(), im.trim().parse()) {
                (Ok(re), Ok(im)) => Ok(Complex::new(re, im)),
                _ => Err(bad(item)),
            }
        })
        .collect()
}

/// Loaded state with the JSON description echoed in reports.
fn load_state(args: &StateArgs) -> Result<(StateVector, Value), Failure> {
    if let Some(amps) = &args.amplitudes {
        let s = from_amplitudes(parse_amplitudes(amps)?, args.normalize).map_err(fail)?;
        let echo = serde_json::to_value(StateFile::from_state(&s)).expect("state file serializes");
        return Ok((s, round_json(echo)));
    }
    let spec = args
        .state
        .as_deref()
        .expect("clap enforces one state source");
    if spec.starts_with('@') {
        let file = StateFile::parse(&read_input(spec)?).map_err(fail)?;
        let s = file.to_state().map_err(fail)?;
        let echo = serde_json::to_value(&file).expect("state file serializes");
        Ok((s, echo))
    } else {
        let s = named_state(spec).map_err(fail)?;
        Ok((s, json!({ "name": spec })))
    }
}

fn load_space(arg: &str) -> Result<Space<f64>, Failure> {
    let file: SpaceFile = serde_json::from_str(&read_input(arg)?)
        .map_err(|e| Failure::new(EXIT_INPUT_FILE, format!("invalid space file: {e}")))?;
    let order =
        VariableOrder::new(file.order).map_err(|e| Failure::new(EXIT_INPUT_FILE, e.to_string()))?;
    Space::new(order, file.weights).map_err(fail)
}

/// Replace every number with its 12-significant-digit rounding.
pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if !n.is_i64() && !n.is_u64() => json!(round12(x)),
            _ => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(round_json).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_json(v))).collect())
        }
        other => other,
    }
}

fn json_text(v: Value) -> String {
    serde_json::to_string_pretty(&round_json(v)).expect("json values serialize") + "\n"
}

fn alpha_arg(alpha: Option<f64>) -> Result<Option<Alpha<f64>>, Failure> {
    alpha.map(|a| Alpha::new(a).map_err(fail)).transpose()
}

fn ok(stdout: String) -> Result<Outcome, Failure> {
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Truthtable {
            formulas,
            order,
            json,
        } => cmd_truthtable(formulas, order.as_deref(), *json),
        Command::Compile {
            formula,
            order,
            dense,
            json,
        } => cmd_compile(formula, order.as_deref(), *dense, *json),
        Command::Measure {
            state,
            formulas,
            order,
            alpha,
            json,
        } => cmd_measure(state, formulas, order.as_deref(), *alpha, *json),
        Command::Bayes {
            state,
            a,
            b,
            order,
            alpha,
            tol,
            json,
        } => cmd_bayes(state, a, b, order.as_deref(), *alpha, *tol, *json),
        Command::Tables { json } => cmd_tables(*json),
        Command::Bounds {
            space,
            events,
            json,
        } => cmd_bounds(space, events, *json),
    }
}

pub fn cmd_truthtable(
    texts: &[String],
    order: Option<&str>,
    as_json: bool,
) -> Result<Outcome, Failure> {
    let formulas = parse_all(texts)?;
    let order = table_order(order, &formulas)?;
    let tables = formulas
        .iter()
        .map(|f| truth_table(f, &order))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    let equivalent = tables.len() > 1 && tables.iter().all(|t| t.column() == tables[0].column());
    let labels: Vec<String> = formulas.iter().map(|f| f.to_string()).collect();

    if as_json {
        let columns: Vec<Value> = labels
            .iter()
            .zip(&tables)
            .map(|(label, t)| {
                json!({
                    "formula": label,
                    "values": t.bits(),
                    "tautology": t.is_tautology(),
                    "contradiction": t.is_contradiction(),
                })
            })
            .collect();
        let rows: Vec<Vec<u8>> = (0..order.rows())
            .map(|r| (0..order.len()).map(|i| order.bit(r, i) as u8).collect())
            .collect();
        return ok(json_text(json!({
            "order": order.names(),
            "rows": rows,
            "columns": columns,
            "equivalent": equivalent,
        })));
    }

    let names = order.names().join(" ");
    let mut out = String::new();
    let widths: Vec<usize> = labels.iter().map(|l| l.chars().count()).collect();
    out.push_str(&names);
    for l in &labels {
        out.push_str(&format!(" | {l}"));
    }
    out.push('\n');
    for r in 0..order.rows() {
        let bits: Vec<String> = order
            .names()
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let b = order.bit(r, i) as u8;
                format!("{b:<w$}", w = name.chars().count())
            })
            .collect();
        out.push_str(&bits.join(" "));
        for (t, &w) in tables.iter().zip(&widths) {
            out.push_str(&format!(" | {:<w$}", t.column()[r] as u8));
        }
        out = out.trim_end().to_string();
        out.push('\n');
    }
    for (label, t) in labels.iter().zip(&tables) {
        if t.is_contradiction() {
            out.push_str(&format!("CONTRADICTION: {label}\n"));
        } else if t.is_tautology() {
            out.push_str(&format!("TAUTOLOGY: {label}\n"));
        }
    }
    if equivalent {
        out.push_str("EQUIVALENT\n");
    }
    ok(out)
}

pub fn cmd_compile(
    text: &str,
    order: Option<&str>,
    dense: bool,
    as_json: bool,
) -> Result<Outcome, Failure> {
    let f = parse_formula(text)?;
    let order = table_order(order, std::slice::from_ref(&f))?;
    let p = compile(&f, &order).map_err(fail)?;
    let poly = boole_polynomial(&f, &order).map_err(fail)?;
    if as_json {
        let mut v = json!({
            "formula": f.to_string(),
            "order": order.names(),
            "projector": p.to_string(),
            "rank": p.rank(),
            "polynomial": poly.to_string(),
        });
        if dense {
            let m = DenseOperator::from_polynomial(&poly).map_err(fail)?;
            v["dense"] = json!(m.to_pairs());
        }
        return ok(json_text(v));
    }
    ok(format!(
        "formula={f}\norder={}\nprojector={p}\nrank={}\npolynomial={poly}\n",
        order.names().join(","),
        p.rank()
    ))
}

pub fn cmd_measure(
    state: &StateArgs,
    texts: &[String],
    order: Option<&str>,
    alpha: Option<f64>,
    as_json: bool,
) -> Result<Outcome, Failure> {
    let formulas = parse_all(texts)?;
    let alpha = alpha_arg(alpha)?;
    let (s, echo) = load_state(state)?;
    let order = state_order(order, &formulas, s.qubits())?;
    let mut means = Vec::new();
    for f in &formulas {
        let p = compile(f, &order).map_err(fail)?;
        means.push((f.to_string(), born_mean(&s, &p).map_err(fail)?));
    }

    let designated = (order.len() >= 2)
        .then(|| -> Result<_, Error> {
            let a = DiagonalProjector::elementary(0, order.len())?;
            let b = DiagonalProjector::elementary(1, order.len())?;
            let bundle = probability_bundle(&s, &a, &b)?;
            let (_, w) = decompose(&s, &a, &b)?;
            Ok((bundle, w))
        })
        .transpose()
        .map_err(fail)?;
    let alpha_value = match (alpha, &designated) {
        (Some(al), Some((bundle, _))) => Some(alpha_implication(bundle.p_a, bundle.p_and, al).ok()),
        _ => None,
    };

    if as_json {
        let mut v = json!({
            "state": echo,
            "order": order.names(),
            "formulas": means.iter().map(|(f, m)| json!({"formula": f, "born": m})).collect::<Vec<_>>(),
        });
        if let Some((bundle, w)) = &designated {
            let obj = v.as_object_mut().expect("object literal");
            if let Value::Object(fields) = serde_json::to_value(bundle).expect("bundle serializes")
            {
                obj.extend(fields);
            }
            obj.insert("weights".into(), json!(w.as_array()));
        }
        if let (Some(al), Some(value)) = (alpha, alpha_value) {
            v["alpha"] = json!(al.value());
            v["alphaImplication"] = json!(value);
        }
        return ok(json_text(v));
    }

    let mut out = String::new();
    for (f, m) in &means {
        out.push_str(&format!("P({f})={}\n", num(*m)));
    }
    if let Some((bundle, w)) = &designated {
        let (a, b) = (&order.names()[0], &order.names()[1]);
        out.push_str(&format!("designated A={a} B={b}\n"));
        for (k, x) in [
            ("pA", bundle.p_a),
            ("pB", bundle.p_b),
            ("pAnd", bundle.p_and),
            ("pOr", bundle.p_or),
            ("pImp", bundle.p_imp),
            ("pConv", bundle.p_conv),
        ] {
            out.push_str(&format!("{k}={}\n", num(x)));
        }
        let ws: Vec<String> = w.as_array().iter().map(|&x| num(x)).collect();
        out.push_str(&format!("weights={}\n", ws.join(",")));
    }
    if let (Some(al), Some(value)) = (alpha, alpha_value) {
        let shown = value.map_or("undefined".to_string(), num);
        out.push_str(&format!("alphaImplication[{}]={shown}\n", al.value()));
    }
    ok(out)
}

pub fn cmd_bayes(
    state: &StateArgs,
    a_text: &str,
    b_text: &str,
    order: Option<&str>,
    alpha: Option<f64>,
    tol: f64,
    as_json: bool,
) -> Result<Outcome, Failure> {
    let a_f = parse_formula(a_text)?;
    let b_f = parse_formula(b_text)?;
    let alpha = alpha_arg(alpha)?;
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("tolerance {tol} must be a finite non-negative number"),
        ));
    }
    let (s, echo) = load_state(state)?;
    let order = state_order(order, &[a_f.clone(), b_f.clone()], s.qubits())?;
    let a = compile(&a_f, &order).map_err(fail)?;
    let b = compile(&b_f, &order).map_err(fail)?;
    let report = quantum_bayes_check(&s, &a, &b, tol).map_err(fail)?;
    let alpha_value =
        alpha.map(|al| alpha_implication(report.bundle.p_a, report.bundle.p_and, al).ok());
    let code = if report.case.satisfies_rule() {
        EXIT_OK
    } else {
        EXIT_RULE_FAILS
    };

    if as_json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["state"] = echo;
        v["A"] = json!(a_f.to_string());
        v["B"] = json!(b_f.to_string());
        v["order"] = json!(order.names());
        if let (Some(al), Some(value)) = (alpha, alpha_value) {
            v["alpha"] = json!(al.value());
            v["alphaImplication"] = json!(value);
        }
        return Ok(Outcome {
            stdout: json_text(v),
            code,
        });
    }

    let opt = |x: Option<f64>| x.map_or("undefined".to_string(), num);
    let b = &report.bundle;
    let w = &report.weights;
    let mut out = format!("A={a_f}\nB={b_f}\norder={}\n", order.names().join(","));
    for (k, x) in [
        ("pA", b.p_a),
        ("pB", b.p_b),
        ("pAnd", b.p_and),
        ("pOr", b.p_or),
        ("pImp", b.p_imp),
        ("pConv", b.p_conv),
        ("w00", w.w00),
        ("w01", w.w01),
        ("w10", w.w10),
        ("w11", w.w11),
        ("residualA", report.residual_a),
        ("residualB", report.residual_b),
    ] {
        out.push_str(&format!("{k}={}\n", num(x)));
    }
    out.push_str(&format!("conditionalBA={}\n", opt(report.conditional_ba)));
    out.push_str(&format!("conditionalAB={}\n", opt(report.conditional_ab)));
    if let (Some(al), Some(value)) = (alpha, alpha_value) {
        out.push_str(&format!(
            "alphaImplication[{}]={}\n",
            al.value(),
            opt(value)
        ));
    }
    out.push_str(&format!("case={}\n", report.case.label()));
    Ok(Outcome { stdout: out, code })
}

pub fn cmd_tables(as_json: bool) -> Result<Outcome, Failure> {
    let all = tables::all_tables().map_err(fail)?;
    if as_json {
        return ok(json_text(json!({ "tables": all })));
    }
    ok(tables::render(&all))
}

pub fn cmd_bounds(space: &str, texts: &[String], as_json: bool) -> Result<Outcome, Failure> {
    let events = parse_all(texts)?;
    let sp = load_space(space)?;
    for f in &events {
        sp.order().check_covers(f).map_err(fail)?;
    }
    let bounds = probability_bounds(&sp, &events).map_err(fail)?;
    let labels: Vec<String> = events.iter().map(|f| f.to_string()).collect();
    if as_json {
        let mut v = serde_json::to_value(&bounds).expect("bounds serialize");
        v["events"] = json!(labels);
        return ok(json_text(v));
    }
    let mut out = String::new();
    for (k, x) in [
        ("union", bounds.union),
        ("unionDirect", bounds.union_direct),
        ("boole", bounds.boole),
        ("bonferroni", bounds.bonferroni),
    ] {
        out.push_str(&format!("{k}={}\n", num(x)));
    }
    for imp in &bounds.implications {
        out.push_str(&format!(
            "P({} -> {})={} in [{}, {}]\n",
            labels[imp.antecedent],
            labels[imp.consequent],
            num(imp.value),
            num(imp.lower),
            num(imp.upper)
        ));
    }
    ok(out)
}
