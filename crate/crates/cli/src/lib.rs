//! Front end for the `mcga` binary: expression syntax and commands.

pub mod commands;
pub mod expr;

pub use commands::{factorize, genvalue, star, verify, CliError, CommandReport, Format, Identity, StarKind};
pub use expr::{parse, parse_mv, parse_poly, Expr, ParseError};
