//! A small declarative script language for working with the set algebra:
//! declare universes and sets, evaluate expressions, check containment and
//! classify elements. One statement per line, `#` starts a comment, and
//! script files conventionally use the `.ns` extension.
//!
//! ```text
//! script    := stmt*
//! stmt      := "universe" NAME "=" "{" namelist "}"
//!            | "set" NAME "over" NAME "{" (NAME ":" triple ("," NAME ":" triple)*)? "}"
//!            | "eval" expr
//!            | "check" expr "<=" expr
//!            | "classify" NAME "." NAME
//! triple    := "(" component "," component "," component ")"
//! component := interval ("|" interval)* | "{" numlist "}"
//! interval  := "[" num "," num "]" | num
//! num       := NUMBER ("^-" | "^+")?
//! expr      := term (("|" | "\") term)*
//! term      := factor ("&" factor)*
//! factor    := primary ("x" primary)*
//! primary   := "complement" "(" expr ")" | NAME | "(" expr ")"
//! ```
//!
//! `&` is intersection, `|` union, `\` difference, `x` Cartesian product and
//! `<=` the containment check; `complement(...)` is the complement. Inside a
//! component literal `|` separates intervals instead — the two roles never
//! collide because literals only appear inside triple parentheses. Numbers
//! may carry a `^-` or `^+` suffix for the values infinitesimally below or
//! above them. Rendering collapses an infinitesimal coefficient to its sign,
//! so only literal-representable values round-trip through text; JSON keeps
//! full precision.

mod ast;
mod eval;
mod lexer;
mod parser;
mod token;

use std::fmt;

pub use ast::{ComponentLit, Expr, ExprKind, Script, SetEntry, Stmt, StmtKind, TripleLit};
pub use eval::{evaluate, Evaluator, Output, Product, Value};
pub use lexer::tokenize;
pub use parser::parse;
pub use token::{render_tokens, Token, TokenKind};

use crate::neutroset::NeutroTriple;

/// A positioned message. Lines and columns are 1-based and point into the
/// source text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagnostic {
    pub line: u32,
    pub col: u32,
    pub message: String,
    pub severity: Severity,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Severity {
    Error,
    Warning,
}

impl Diagnostic {
    pub fn error(line: u32, col: u32, message: impl Into<String>) -> Self {
        Diagnostic { line, col, message: message.into(), severity: Severity::Error }
    }

    pub fn warning(line: u32, col: u32, message: impl Into<String>) -> Self {
        Diagnostic { line, col, message: message.into(), severity: Severity::Warning }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.severity {
            Severity::Error => write!(f, "{}:{}: {}", self.line, self.col, self.message),
            Severity::Warning => write!(f, "{}:{}: warning: {}", self.line, self.col, self.message),
        }
    }
}

/// Tokenizes and parses a whole script.
pub fn parse_script(source: &str) -> Result<Script, Diagnostic> {
    parse(&tokenize(source)?)
}

/// Parses a standalone component literal such as `[0.2,0.3]|{0.5}`.
pub fn parse_component(source: &str, strict: bool) -> Result<crate::IntervalUnion, Diagnostic> {
    let tokens = tokenize(source)?;
    let lit = parser::parse_component_only(&tokens)?;
    eval::literal_to_union(&lit, strict).map(|(u, _)| u)
}

/// Parses a standalone triple literal such as `(0.5, 0.2, 0.3)`.
pub fn parse_triple(source: &str, strict: bool) -> Result<NeutroTriple, Diagnostic> {
    let tokens = tokenize(source)?;
    let lit = parser::parse_triple_only(&tokens)?;
    eval::triple_from_literal(&lit, strict).map(|(t, _)| t)
}

/// Canonical text for any value a statement can produce.
pub fn format_value(value: &Value) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests;
