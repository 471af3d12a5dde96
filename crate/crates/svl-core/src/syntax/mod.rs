//! SVL concrete syntax: lexer, recursive-descent parser with statement-level
//! error recovery, AST, and a pretty-printer whose output re-parses to a
//! structurally identical tree.

pub mod ast;
mod lexer;
pub mod parser;
pub mod printer;
mod token;

pub use ast::*;
pub use parser::parse_unit;
pub use printer::print_ast;
