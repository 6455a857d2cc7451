use std::fmt;

use super::ast::{is_valid_name, Formula};
use crate::error::{Error, Result};

/// Largest variable count for diagonal (bit-vector) operations.
pub const MAX_VARIABLES: usize = 20;

/// Ordered list of distinct variable names. Position 0 is the most
/// significant bit of a row index, so rows run `00, 01, 10, 11` for `[A, B]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableOrder {
    names: Vec<String>,
}

impl VariableOrder {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: names.len(),
                max: MAX_VARIABLES,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidVariable(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// Sorted free variables of `f`.
    pub fn of_formula(f: &Formula) -> Result<Self> {
        Self::new(f.variables())
    }

    /// Parses a comma separated list such as `A,B,C`.
    pub fn parse_list(text: &str) -> Result<Self> {
        Self::new(text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of rows, `2^n`.
    pub fn rows(&self) -> usize {
        1 << self.names.len()
    }

    /// Value of variable `index` in row `row`.
    pub fn bit(&self, row: usize, index: usize) -> bool {
        (row >> (self.names.len() - 1 - index)) & 1 == 1
    }

    /// Fails with the first free variable of `f` not in this order.
    pub fn check_covers(&self, f: &Formula) -> Result<()> {
        match f
            .variables()
            .into_iter()
            .find(|v| self.index_of(v).is_none())
        {
            Some(missing) => Err(Error::UnknownVariable(missing.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

/// Truth-table column of a formula under a variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    order: VariableOrder,
    column: Vec<bool>,
}

impl TruthTable {
    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn column(&self) -> &[bool] {
        &self.column
    }

    pub fn into_column(self) -> Vec<bool> {
        self.column
    }

    pub fn is_tautology(&self) -> bool {
        self.column.iter().all(|&b| b)
    }

    pub fn is_contradiction(&self) -> bool {
        self.column.iter().all(|&b| !b)
    }

    /// Column as 0/1 values.
    pub fn bits(&self) -> Vec<u8> {
        self.column.iter().map(|&b| b as u8).collect()
    }
}

/// Evaluates `f` on every row of `order`.
pub fn truth_table(f: &Formula, order: &VariableOrder) -> Result<TruthTable> {
    order.check_covers(f)?;
    Ok(TruthTable {
        order: order.clone(),
        column: column(f, order),
    })
}

// Bottom-up, one full column per node.
fn column(f: &Formula, order: &VariableOrder) -> Vec<bool> {
    let rows = order.rows();
    match f {
        Formula::True => vec![true; rows],
        Formula::False => vec![false; rows],
        Formula::Var(name) => {
            let index = order.index_of(name).expect("order covers formula");
            (0..rows).map(|r| order.bit(r, index)).collect()
        }
        Formula::Not(inner) => column(inner, order).into_iter().map(|b| !b).collect(),
        Formula::Binary(op, l, r) => column(l, order)
            .into_iter()
            .zip(column(r, order))
            .map(|(a, b)| op.apply(a, b))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn order_ab() -> VariableOrder {
        VariableOrder::new(["A", "B"]).unwrap()
    }

    fn bits(text: &str) -> Vec<u8> {
        truth_table(&parse(text).unwrap(), &order_ab())
            .unwrap()
            .bits()
    }

    #[test]
    fn table_one_columns() {
        assert_eq!(bits("A & B"), [0, 0, 0, 1]);
        assert_eq!(bits("A -> B"), [1, 1, 0, 1]);
        assert_eq!(bits("B -> A"), [1, 0, 1, 1]);
        assert_eq!(bits("A <- B"), [1, 0, 1, 1]);
        assert_eq!(bits("!A | B"), bits("A -> B"));
        assert_eq!(bits("A | !B"), bits("B -> A"));
    }

    #[test]
    fn extra_variables_in_order_are_allowed() {
        assert_eq!(bits("A"), [0, 0, 1, 1]);
        assert_eq!(bits("B"), [0, 1, 0, 1]);
        assert_eq!(bits("1"), [1, 1, 1, 1]);
    }

    #[test]
    fn missing_variable_is_an_error() {
        let err = truth_table(&parse("A & C").unwrap(), &order_ab()).unwrap_err();
        assert_eq!(err, Error::UnknownVariable("C".into()));
    }

    #[test]
    fn order_validation() {
        assert_eq!(
            VariableOrder::new(["A", "A"]),
            Err(Error::DuplicateVariable("A".into()))
        );
        assert_eq!(
            VariableOrder::new(["9"]),
            Err(Error::InvalidVariable("9".into()))
        );
        let many: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        assert!(matches!(
            VariableOrder::new(many),
            Err(Error::TooManyVariables { count: 21, .. })
        ));
        assert_eq!(VariableOrder::parse_list("A, B ,C").unwrap().len(), 3);
    }

    #[test]
    fn default_order_is_sorted() {
        let f = parse("C -> A & B").unwrap();
        let order = VariableOrder::of_formula(&f).unwrap();
        assert_eq!(order.names(), ["A", "B", "C"]);
    }

    #[test]
    fn zero_variable_table() {
        let order = VariableOrder::new(Vec::<String>::new()).unwrap();
        let t = truth_table(&parse("1 & !0").unwrap(), &order).unwrap();
        assert_eq!(t.column(), [true]);
        assert!(t.is_tautology());
    }
}
