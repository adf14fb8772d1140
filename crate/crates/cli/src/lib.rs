//! Command-line front end: an expression parser, corner-matrix JSON and one
//! subcommand per library operation.

pub mod commands;
pub mod matrix;
pub mod parse;

pub use commands::{run, EXIT_COMPUTATION, EXIT_OK, EXIT_USER, EXIT_VERIFICATION};
pub use matrix::{matrix_to_json, parse_matrix, MatrixError};
pub use parse::{parse_element, parse_expr, Expr, ParseError, ReadError};
