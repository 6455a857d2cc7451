//! The five reference tables: truth values of the basic connectives and Born
//! probabilities for the two-qubit states.

use eigenlogic::{named_state, parse, probability_bundle, truth_table, DiagonalProjector, Result};
use eigenlogic::{ProbabilityBundle, StateVector, VariableOrder};
use serde::Serialize;

use crate::format::exact;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub id: &'static str,
    pub caption: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub values: Vec<String>,
}

pub const PROBABILITY_COLUMNS: [&str; 7] = [
    "P(A)",
    "P(B)",
    "P(A→B)",
    "P(B→A)",
    "P(A)P(A→B)",
    "P(B)P(B→A)",
    "P(A∧B)",
];

const CONNECTIVES: [(&str, &str); 10] = [
    ("A", "A"),
    ("B", "B"),
    ("A∧B", "A & B"),
    ("A∨B", "A | B"),
    ("A→B", "A -> B"),
    ("B→A", "B -> A"),
    ("¬A", "!A"),
    ("¬B", "!B"),
    ("¬A∨B", "!A | B"),
    ("A∨¬B", "A | !B"),
];

/// Table id, caption and `(state name, row label)` pairs.
type StateTable = (
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str)],
);

const STATE_TABLES: [StateTable; 4] = [
    (
        "basis",
        "Born probabilities on the computational basis",
        &[
            ("00", "|00⟩"),
            ("01", "|01⟩"),
            ("10", "|10⟩"),
            ("11", "|11⟩"),
        ],
    ),
    (
        "uniform",
        "Born probabilities on the equal-weight superpositions and the cluster state",
        &[
            ("++", "|++⟩"),
            ("+-", "|+−⟩"),
            ("-+", "|−+⟩"),
            ("--", "|−−⟩"),
            ("cluster", "cluster"),
        ],
    ),
    (
        "mixed_basis",
        "Born probabilities on product states mixing the two bases",
        &[
            ("0+", "|0+⟩"),
            ("+0", "|+0⟩"),
            ("1+", "|1+⟩"),
            ("+1", "|+1⟩"),
        ],
    ),
    (
        "bell",
        "Born probabilities on the Bell states",
        &[
            ("phi+", "|Φ+⟩"),
            ("phi-", "|Φ−⟩"),
            ("psi+", "|Ψ+⟩"),
            ("psi-", "|Ψ−⟩"),
        ],
    ),
];

pub fn probability_row(b: &ProbabilityBundle) -> [f64; 7] {
    [
        b.p_a,
        b.p_b,
        b.p_imp,
        b.p_conv,
        b.p_a * b.p_imp,
        b.p_b * b.p_conv,
        b.p_and,
    ]
}

fn truth_values() -> Result<Table> {
    let order = VariableOrder::new(["A", "B"])?;
    let mut columns = vec!["A B".to_string()];
    let mut tables = Vec::new();
    for (label, text) in CONNECTIVES {
        columns.push(label.to_string());
        tables.push(truth_table(&parse(text)?, &order)?);
    }
    let rows = (0..order.rows())
        .map(|r| Row {
            label: format!("{}{}", order.bit(r, 0) as u8, order.bit(r, 1) as u8),
            values: tables
                .iter()
                .map(|t| (t.column()[r] as u8).to_string())
                .collect(),
        })
        .collect();
    Ok(Table {
        id: "truth_values",
        caption: "Truth values of the basic connectives over A and B",
        columns,
        rows,
    })
}

pub fn all_tables() -> Result<Vec<Table>> {
    let a = DiagonalProjector::elementary(0, 2)?;
    let b = DiagonalProjector::elementary(1, 2)?;
    let mut out = vec![truth_values()?];
    for (id, caption, states) in STATE_TABLES {
        let mut rows = Vec::new();
        for (name, label) in states {
            let s: StateVector = named_state(name)?;
            let bundle = probability_bundle(&s, &a, &b)?;
            rows.push(Row {
                label: label.to_string(),
                values: probability_row(&bundle).iter().map(|&x| exact(x)).collect(),
            });
        }
        let mut columns = vec!["state".to_string()];
        columns.extend(PROBABILITY_COLUMNS.iter().map(|c| c.to_string()));
        out.push(Table {
            id,
            caption,
            columns,
            rows,
        });
    }
    Ok(out)
}

fn width(s: &str) -> usize {
    s.chars().count()
}

pub fn render(tables: &[Table]) -> String {
    let mut out = String::new();
    for (k, t) in tables.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&format!("Table {}. {}\n", k + 1, t.caption));
        let mut widths: Vec<usize> = t.columns.iter().map(|c| width(c)).collect();
        for r in &t.rows {
            widths[0] = widths[0].max(width(&r.label));
            for (i, v) in r.values.iter().enumerate() {
                widths[i + 1] = widths[i + 1].max(width(v));
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(t.columns.iter().map(String::as_str).collect()));
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&line(rule.iter().map(String::as_str).collect()));
        for r in &t.rows {
            let mut cells = vec![r.label.as_str()];
            cells.extend(r.values.iter().map(String::as_str));
            out.push_str(&line(cells));
        }
    }
    out
}
