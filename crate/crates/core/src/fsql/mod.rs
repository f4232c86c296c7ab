//! FSQL subset: tokenizer, parser, catalog-validating compiler and plan
//! explanation.

mod ast;
mod compile;
mod explain;
mod parser;
mod token;

pub use ast::{ColumnRef, Condition, DistElement, Operand, Predicate, Query, SelectItem};
pub use compile::{compile, Combiner, CompiledCondition, CompiledPlan, ConditionDomain, OutputColumn, OutputSource};
pub use explain::explain;
pub use parser::{parse, parse_query, Parser};
pub use token::{tokenize, Comparator, Keyword, Token, TokenKind};

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsqlErrorKind {
    Lex,
    Syntax,
    Compile,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{} error{}: {message}", kind_name(.kind), at(.position))]
pub struct FsqlError {
    pub kind: FsqlErrorKind,
    pub position: Option<Position>,
    pub message: String,
}

fn kind_name(k: &FsqlErrorKind) -> &'static str {
    match k {
        FsqlErrorKind::Lex => "lexical",
        FsqlErrorKind::Syntax => "syntax",
        FsqlErrorKind::Compile => "compile",
    }
}

fn at(p: &Option<Position>) -> String {
    p.map(|p| format!(" at {p}")).unwrap_or_default()
}

impl FsqlError {
    pub(crate) fn lex(pos: Position, message: impl Into<String>) -> Self {
        FsqlError {
            kind: FsqlErrorKind::Lex,
            position: Some(pos),
            message: message.into(),
        }
    }

    pub(crate) fn syntax(pos: Position, message: impl Into<String>) -> Self {
        FsqlError {
            kind: FsqlErrorKind::Syntax,
            position: Some(pos),
            message: message.into(),
        }
    }

    pub(crate) fn compile(message: impl Into<String>) -> Self {
        FsqlError {
            kind: FsqlErrorKind::Compile,
            position: None,
            message: message.into(),
        }
    }

    pub fn position(&self) -> Option<Position> {
        self.position
    }
}
