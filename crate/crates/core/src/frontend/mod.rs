//! Lexer, recursive-descent parser and linearizer for the C++ teaching subset.
//!
//! The accepted grammar is listed in `docs/grammar.md`.

pub mod ast;
pub mod lexer;
pub mod linearize;
pub mod parser;
pub mod token;

use thiserror::Error;

pub use ast::SyntaxTree;
pub use lexer::{tokenize, LexError};
pub use linearize::{dump_tree, linearize};
pub use parser::{parse, ParseError};
pub use token::{Atom, Token, TokenKind, TokenStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontendError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl FrontendError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            FrontendError::Lex(e) => e.position(),
            FrontendError::Parse(e) => (e.line, e.column),
        }
    }
}

/// Lexes, parses and linearizes one source file.
pub fn token_stream(source: &str) -> Result<TokenStream, FrontendError> {
    let tokens = tokenize(source)?;
    let tree = parse(&tokens)?;
    Ok(linearize(&tree))
}
