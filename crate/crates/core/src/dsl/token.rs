use std::fmt;

use crate::hyperreal::NonStdValue;

#[derive(Clone, PartialEq, Debug)]
pub enum TokenKind {
    Ident(String),
    Number(NonStdValue),
    Universe,
    Set,
    Over,
    Eval,
    Check,
    Classify,
    /// Reserved; no production uses it yet.
    In,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Pipe,
    Amp,
    Backslash,
    Dot,
    Eq,
    Le,
    Newline,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub col: u32,
}

impl TokenKind {
    /// Human description used in "expected X, found Y" messages.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("name '{name}'"),
            TokenKind::Number(_) => "number".to_string(),
            TokenKind::Universe => "keyword 'universe'".to_string(),
            TokenKind::Set => "keyword 'set'".to_string(),
            TokenKind::Over => "keyword 'over'".to_string(),
            TokenKind::Eval => "keyword 'eval'".to_string(),
            TokenKind::Check => "keyword 'check'".to_string(),
            TokenKind::Classify => "keyword 'classify'".to_string(),
            TokenKind::In => "keyword 'in'".to_string(),
            TokenKind::Newline => "end of line".to_string(),
            other => format!("'{other}'"),
        }
    }
}

impl fmt::Display for TokenKind {
    /// Source form of the token, good enough to re-render a token stream
    /// into parseable text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(name) => f.write_str(name),
            TokenKind::Number(v) => write!(f, "{v}"),
            TokenKind::Universe => f.write_str("universe"),
            TokenKind::Set => f.write_str("set"),
            TokenKind::Over => f.write_str("over"),
            TokenKind::Eval => f.write_str("eval"),
            TokenKind::Check => f.write_str("check"),
            TokenKind::Classify => f.write_str("classify"),
            TokenKind::In => f.write_str("in"),
            TokenKind::LParen => f.write_str("("),
            TokenKind::RParen => f.write_str(")"),
            TokenKind::LBracket => f.write_str("["),
            TokenKind::RBracket => f.write_str("]"),
            TokenKind::LBrace => f.write_str("{"),
            TokenKind::RBrace => f.write_str("}"),
            TokenKind::Comma => f.write_str(","),
            TokenKind::Colon => f.write_str(":"),
            TokenKind::Pipe => f.write_str("|"),
            TokenKind::Amp => f.write_str("&"),
            TokenKind::Backslash => f.write_str("\\"),
            TokenKind::Dot => f.write_str("."),
            TokenKind::Eq => f.write_str("="),
            TokenKind::Le => f.write_str("<="),
            TokenKind::Newline => f.write_str("\n"),
        }
    }
}

/// Joins tokens back into source text, one space between tokens and bare
/// newlines for line breaks. Used by the fuzzing harnesses.
pub fn render_tokens(tokens: &[Token]) -> String {
    let mut out = String::new();
    for token in tokens {
        if matches!(token.kind, TokenKind::Newline) {
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        } else {
            if !out.is_empty() && !out.ends_with('\n') {
                out.push(' ');
            }
            out.push_str(&token.kind.to_string());
        }
    }
    out
}
