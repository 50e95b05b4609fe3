//! File formats, verification suite runner and command-line front end for
//! [`hermsos_core`].

use core::fmt;

pub mod cli;
pub mod json;
pub mod report;
pub mod suite;
pub mod text;

/// A rejected input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    position: Option<(usize, usize)>,
    path: Option<String>,
    message: String,
}

impl ParseError {
    /// Error at a 1-based line and column.
    pub fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { position: Some((line, column)), path: None, message: message.into() }
    }

    /// Error at a structural location such as `terms[3].re`.
    pub fn path(path: &str, message: impl Into<String>) -> Self {
        Self { position: None, path: Some(path.to_string()), message: message.into() }
    }

    pub fn nested(mut self, outer: &str) -> Self {
        self.path = Some(match self.path {
            Some(p) => format!("{outer}.{p}"),
            None => outer.to_string(),
        });
        self
    }

    pub fn line_column(&self) -> Option<(usize, usize)> {
        self.position
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((line, column)) = self.position {
            write!(f, "line {line}, column {column}: ")?;
        }
        if let Some(path) = &self.path {
            write!(f, "{path}: ")?;
        }
        f.write_str(&self.message)
    }
}

impl std::error::Error for ParseError {}
