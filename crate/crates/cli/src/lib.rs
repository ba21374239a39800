//! Command-line front end: an expression language for series, family tables
//! and the identity registry runner.

pub mod commands;
pub mod expr;
pub mod format;

pub use commands::{run, Output};
pub use expr::{eval_expr, parse_expr, render, EvalError, Expr, ParseError};
