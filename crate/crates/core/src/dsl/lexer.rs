use crate::hyperreal::NonStdValue;

use super::token::{Token, TokenKind};
use super::Diagnostic;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

/// Lexes a script into tokens. Consecutive line breaks collapse into one
/// `Newline` token; `#` comments run to end of line; numbers may carry a
/// `^-`/`^+` suffix, which folds into the number token itself.
pub fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut lx = Lexer { src: source.as_bytes(), pos: 0, line: 1, col: 1 };
    let mut tokens = Vec::new();
    while let Some(c) = lx.peek() {
        let (line, col) = (lx.line, lx.col);
        match c {
            b' ' | b'\t' | b'\r' => {
                lx.bump();
            }
            b'#' => {
                while lx.peek().is_some_and(|c| c != b'\n') {
                    lx.bump();
                }
            }
            b'\n' => {
                lx.bump();
                if !matches!(tokens.last(), None | Some(Token { kind: TokenKind::Newline, .. })) {
                    tokens.push(Token { kind: TokenKind::Newline, line, col });
                }
            }
            b'0'..=b'9' => {
                let kind = lx.number(line, col)?;
                tokens.push(Token { kind, line, col });
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let kind = lx.ident();
                tokens.push(Token { kind, line, col });
            }
            _ => {
                let kind = lx.punct(line, col)?;
                tokens.push(Token { kind, line, col });
            }
        }
    }
    // a trailing newline token carries no information
    if matches!(tokens.last(), Some(Token { kind: TokenKind::Newline, .. })) {
        tokens.pop();
    }
    Ok(tokens)
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.get(self.pos + offset).copied()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += 1;
            if c == b'\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
    }

    fn number(&mut self, line: u32, col: u32) -> Result<TokenKind, Diagnostic> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some(b'.') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value: f64 = text.parse().expect("digit span parses");
        if !value.is_finite() {
            return Err(Diagnostic::error(line, col, format!("number literal out of range: {text}")));
        }
        let coeff = if self.peek() == Some(b'^') {
            let (caret_line, caret_col) = (self.line, self.col);
            self.bump();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    1.0
                }
                Some(b'-') => {
                    self.bump();
                    -1.0
                }
                _ => {
                    return Err(Diagnostic::error(
                        caret_line,
                        caret_col,
                        "expected '+' or '-' after '^'",
                    ))
                }
            }
        } else {
            0.0
        };
        Ok(TokenKind::Number(NonStdValue::new(value, coeff)))
    }

    fn ident(&mut self) -> TokenKind {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.bump();
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii word");
        match text {
            "universe" => TokenKind::Universe,
            "set" => TokenKind::Set,
            "over" => TokenKind::Over,
            "eval" => TokenKind::Eval,
            "check" => TokenKind::Check,
            "classify" => TokenKind::Classify,
            "in" => TokenKind::In,
            _ => TokenKind::Ident(text.to_string()),
        }
    }

    fn punct(&mut self, line: u32, col: u32) -> Result<TokenKind, Diagnostic> {
        let c = self.peek().expect("caller checked");
        let kind = match c {
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'[' => TokenKind::LBracket,
            b']' => TokenKind::RBracket,
            b'{' => TokenKind::LBrace,
            b'}' => TokenKind::RBrace,
            b',' => TokenKind::Comma,
            b':' => TokenKind::Colon,
            b'|' => TokenKind::Pipe,
            b'&' => TokenKind::Amp,
            b'\\' => TokenKind::Backslash,
            b'.' => TokenKind::Dot,
            b'=' => TokenKind::Eq,
            b'<' => {
                self.bump();
                if self.peek() == Some(b'=') {
                    self.bump();
                    return Ok(TokenKind::Le);
                }
                return Err(Diagnostic::error(line, col, "expected '<=' after '<'"));
            }
            other => {
                let shown = if other.is_ascii() && !other.is_ascii_control() {
                    (other as char).to_string()
                } else {
                    // keep multi-byte input printable in the message
                    let rest = std::str::from_utf8(&self.src[self.pos..])
                        .ok()
                        .and_then(|s| s.chars().next());
                    match rest {
                        Some(ch) => ch.to_string(),
                        None => format!("\\x{other:02x}"),
                    }
                };
                // consume the whole character so the lexer never stalls
                let skip = utf8_len(other);
                for _ in 0..skip {
                    self.bump();
                }
                return Err(Diagnostic::error(line, col, format!("unexpected character '{shown}'")));
            }
        };
        self.bump();
        Ok(kind)
    }
}

fn utf8_len(first_byte: u8) -> usize {
    match first_byte {
        0x00..=0x7f => 1,
        0xc0..=0xdf => 2,
        0xe0..=0xef => 3,
        _ => 4,
    }
}
