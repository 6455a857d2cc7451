use std::collections::BTreeSet;
use std::fmt;

/// Binary connectives. Each one is fixed by its truth-table column over the
/// rows `00, 01, 10, 11` of its two operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    And,
    Or,
    Xor,
    /// `l -> r`
    Implies,
    /// `l <- r`, i.e. `r -> l`
    Converse,
    Iff,
}

impl BinOp {
    pub const ALL: [BinOp; 6] = [
        BinOp::And,
        BinOp::Or,
        BinOp::Xor,
        BinOp::Implies,
        BinOp::Converse,
        BinOp::Iff,
    ];

    pub fn apply(self, l: bool, r: bool) -> bool {
        match self {
            BinOp::And => l && r,
            BinOp::Or => l || r,
            BinOp::Xor => l != r,
            BinOp::Implies => !l || r,
            BinOp::Converse => l || !r,
            BinOp::Iff => l == r,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Xor => "^",
            BinOp::Implies => "->",
            BinOp::Converse => "<-",
            BinOp::Iff => "<->",
        }
    }

    /// Binding strength; higher binds tighter.
    pub(crate) fn precedence(self) -> u8 {
        match self {
            BinOp::Iff => 1,
            BinOp::Implies | BinOp::Converse => 2,
            BinOp::Or => 3,
            BinOp::Xor => 4,
            BinOp::And => 5,
        }
    }
}

/// Propositional formula over named variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Var(String),
    Not(Box<Formula>),
    Binary(BinOp, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn binary(op: BinOp, l: Formula, r: Formula) -> Self {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Or, l, r)
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Self::binary(BinOp::Implies, l, r)
    }

    /// Free variables in sorted order.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Var(name) => {
                out.insert(name);
            }
            Formula::Not(f) => f.collect_vars(out),
            Formula::Binary(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Var(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::Binary(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Classical evaluation under a lookup for variable values.
    pub fn eval_with<F>(&self, lookup: &F) -> bool
    where
        F: Fn(&str) -> bool,
    {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Var(name) => lookup(name),
            Formula::Not(f) => !f.eval_with(lookup),
            Formula::Binary(op, l, r) => op.apply(l.eval_with(lookup), r.eval_with(lookup)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Binary(op, _, _) => op.precedence(),
            _ => 6,
        }
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

// Printing inserts only the parentheses the grammar needs, so that
// `parse(f.to_string()) == f`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "1"),
            Formula::False => write!(f, "0"),
            Formula::Var(name) => write!(f, "{name}"),
            Formula::Not(inner) => {
                if inner.precedence() < 6 {
                    write!(f, "!({inner})")
                } else {
                    write!(f, "!{inner}")
                }
            }
            Formula::Binary(op, l, r) => {
                let prec = op.precedence();
                let left_parens = match op {
                    BinOp::Implies | BinOp::Converse => l.precedence() <= prec,
                    _ => l.precedence() < prec,
                };
                let right_parens = match op {
                    BinOp::Implies => {
                        r.precedence() < prec
                            || matches!(**r, Formula::Binary(BinOp::Converse, _, _))
                    }
                    _ => r.precedence() <= prec,
                };
                write_operand(f, l, left_parens)?;
                write!(f, " {} ", op.symbol())?;
                write_operand(f, r, right_parens)
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, operand: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({operand})")
    } else {
        write!(f, "{operand}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connective_columns() {
        let col = |op: BinOp| {
            [(false, false), (false, true), (true, false), (true, true)]
                .map(|(l, r)| op.apply(l, r) as u8)
        };
        assert_eq!(col(BinOp::And), [0, 0, 0, 1]);
        assert_eq!(col(BinOp::Or), [0, 1, 1, 1]);
        assert_eq!(col(BinOp::Implies), [1, 1, 0, 1]);
        assert_eq!(col(BinOp::Converse), [1, 0, 1, 1]);
        assert_eq!(col(BinOp::Xor), [0, 1, 1, 0]);
        assert_eq!(col(BinOp::Iff), [1, 0, 0, 1]);
    }

    #[test]
    fn names() {
        assert!(is_valid_name("A"));
        assert!(is_valid_name("x_1"));
        assert!(!is_valid_name(""));
        assert!(!is_valid_name("1x"));
        assert!(!is_valid_name("_x"));
        assert!(!is_valid_name("a-b"));
    }

    #[test]
    fn display_uses_minimal_parentheses() {
        let a = || Formula::var("A");
        let b = || Formula::var("B");
        let c = || Formula::var("C");
        assert_eq!(
            Formula::implies(a(), Formula::implies(b(), c())).to_string(),
            "A -> B -> C"
        );
        assert_eq!(
            Formula::implies(Formula::implies(a(), b()), c()).to_string(),
            "(A -> B) -> C"
        );
        assert_eq!(
            Formula::and(a(), Formula::and(b(), c())).to_string(),
            "A & (B & C)"
        );
        assert_eq!(
            Formula::and(Formula::and(a(), b()), c()).to_string(),
            "A & B & C"
        );
        assert_eq!(Formula::not(Formula::or(a(), b())).to_string(), "!(A | B)");
        assert_eq!(Formula::or(Formula::not(a()), b()).to_string(), "!A | B");
    }
}
