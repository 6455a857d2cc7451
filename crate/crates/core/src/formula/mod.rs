//! Propositional formulas: parsing, truth tables and Boole polynomials.

mod ast;
mod parser;
mod poly;
mod table;

pub use ast::{BinOp, Formula};
pub use parser::parse;
pub use poly::{boole_polynomial, eval_polynomial, Monomial, MultilinearPolynomial};
pub use table::{truth_table, TruthTable, VariableOrder, MAX_VARIABLES};
