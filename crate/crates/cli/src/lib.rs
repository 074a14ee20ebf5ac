//! Expression language and subcommands for the `symop` binary.

pub mod commands;
pub mod expr;

pub use commands::{run, Cli, CliError, Command, Format, Outcome};
pub use expr::{eval_op, eval_str, evaluate, parse, parse_op, render, Expr, OpExpr, ParseError};
