//! Command-line front end: expression parsing and command dispatch.

mod command;
mod parse;

pub use command::{run, CliError, Command, Format, Verb};
pub use parse::{parse_expr, ParseError, MAX_INDEX};
