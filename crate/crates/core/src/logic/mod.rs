//! First-order terms and formulas of arithmetic, numerals, substitution and
//! the concrete syntax used for all formula I/O.

mod parse;
mod print;
mod syntax;

pub use parse::{parse_formula, parse_term, ParseError};
pub use print::{print_formula, print_term};
pub use syntax::{numeral, numeral_value, Formula, Term, TermOp, Variable, RESERVED};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("`{0}` is not a valid variable name")]
    InvalidVariable(String),
    #[error("substituting for `{var}` would be captured by the binder `{binder}`")]
    Capture { var: Variable, binder: Variable },
    #[error(transparent)]
    Parse(#[from] ParseError),
}
