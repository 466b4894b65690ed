use crate::hyperreal::NonStdValue;

use super::ast::{ComponentLit, Expr, ExprKind, Script, SetEntry, Stmt, StmtKind, TripleLit};
use super::token::{Token, TokenKind};
use super::Diagnostic;

/// Recursive-descent parser over the token stream. Reports the first syntax
/// error with its position and an expected-token hint. Statements end at a
/// line break.
pub fn parse(tokens: &[Token]) -> Result<Script, Diagnostic> {
    let mut p = Parser { tokens, pos: 0 };
    let mut statements = Vec::new();
    p.skip_newlines();
    while !p.at_end() {
        statements.push(p.statement()?);
        if !p.at_end() {
            p.expect(&TokenKind::Newline, "end of line")?;
            p.skip_newlines();
        }
    }
    Ok(Script { statements })
}

/// Parses a single component literal followed by end of input.
pub fn parse_component_only(tokens: &[Token]) -> Result<ComponentLit, Diagnostic> {
    let mut p = Parser { tokens, pos: 0 };
    let lit = p.component()?;
    p.expect_end()?;
    Ok(lit)
}

/// Parses a single triple literal followed by end of input.
pub fn parse_triple_only(tokens: &[Token]) -> Result<TripleLit, Diagnostic> {
    let mut p = Parser { tokens, pos: 0 };
    let lit = p.triple()?;
    p.expect_end()?;
    Ok(lit)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    /// Position just past the last token, for end-of-input errors.
    fn here(&self) -> (u32, u32) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => match self.tokens.last() {
                Some(t) => {
                    let width = t.kind.to_string().len() as u32;
                    (t.line, t.col + width)
                }
                None => (1, 1),
            },
        }
    }

    fn err_expected(&self, what: &str) -> Diagnostic {
        let (line, col) = self.here();
        let found = match self.peek() {
            Some(t) => t.kind.describe(),
            None => "end of input".to_string(),
        };
        Diagnostic::error(line, col, format!("expected {what}, found {found}"))
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<(u32, u32), Diagnostic> {
        match self.peek() {
            Some(t) if &t.kind == kind => {
                let pos = (t.line, t.col);
                self.pos += 1;
                Ok(pos)
            }
            _ => Err(self.err_expected(what)),
        }
    }

    fn expect_end(&self) -> Result<(), Diagnostic> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err_expected("end of input"))
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek_kind(), Some(TokenKind::Newline)) {
            self.pos += 1;
        }
    }

    fn name(&mut self, what: &str) -> Result<(String, u32, u32), Diagnostic> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(name), line, col }) => {
                let out = (name.clone(), *line, *col);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.err_expected(what)),
        }
    }

    fn statement(&mut self) -> Result<Stmt, Diagnostic> {
        match self.peek() {
            Some(Token { kind: TokenKind::Universe, line, col }) => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                let (name, ..) = self.name("universe name")?;
                self.expect(&TokenKind::Eq, "'='")?;
                self.expect(&TokenKind::LBrace, "'{'")?;
                let mut elements = vec![self.name("element name")?.0];
                while matches!(self.peek_kind(), Some(TokenKind::Comma)) {
                    self.pos += 1;
                    elements.push(self.name("element name")?.0);
                }
                self.expect(&TokenKind::RBrace, "',' or '}'")?;
                Ok(Stmt { kind: StmtKind::Universe { name, elements }, line, col })
            }
            Some(Token { kind: TokenKind::Set, line, col }) => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                let (name, ..) = self.name("set name")?;
                self.expect(&TokenKind::Over, "'over'")?;
                let (universe, ..) = self.name("universe name")?;
                self.expect(&TokenKind::LBrace, "'{'")?;
                let mut entries = Vec::new();
                if !matches!(self.peek_kind(), Some(TokenKind::RBrace)) {
                    entries.push(self.set_entry()?);
                    while matches!(self.peek_kind(), Some(TokenKind::Comma)) {
                        self.pos += 1;
                        entries.push(self.set_entry()?);
                    }
                }
                self.expect(&TokenKind::RBrace, "',' or '}'")?;
                Ok(Stmt { kind: StmtKind::SetDecl { name, universe, entries }, line, col })
            }
            Some(Token { kind: TokenKind::Eval, line, col }) => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                let expr = self.expr()?;
                Ok(Stmt { kind: StmtKind::Eval(expr), line, col })
            }
            Some(Token { kind: TokenKind::Check, line, col }) => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                let left = self.expr()?;
                self.expect(&TokenKind::Le, "'<='")?;
                let right = self.expr()?;
                Ok(Stmt { kind: StmtKind::Check { left, right }, line, col })
            }
            Some(Token { kind: TokenKind::Classify, line, col }) => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                let (set, ..) = self.name("set name")?;
                self.expect(&TokenKind::Dot, "'.'")?;
                let (element, ..) = self.name("element name")?;
                Ok(Stmt { kind: StmtKind::Classify { set, element }, line, col })
            }
            _ => Err(self.err_expected("'universe', 'set', 'eval', 'check' or 'classify'")),
        }
    }

    fn set_entry(&mut self) -> Result<SetEntry, Diagnostic> {
        let (element, line, col) = self.name("element name")?;
        self.expect(&TokenKind::Colon, "':'")?;
        let triple = self.triple()?;
        Ok(SetEntry { element, triple, line, col })
    }

    pub(super) fn triple(&mut self) -> Result<TripleLit, Diagnostic> {
        self.expect(&TokenKind::LParen, "'('")?;
        let t = self.component()?;
        self.expect(&TokenKind::Comma, "','")?;
        let i = self.component()?;
        self.expect(&TokenKind::Comma, "','")?;
        let f = self.component()?;
        self.expect(&TokenKind::RParen, "')'")?;
        Ok(TripleLit { t, i, f })
    }

    pub(super) fn component(&mut self) -> Result<ComponentLit, Diagnostic> {
        let (line, col) = self.here();
        if matches!(self.peek_kind(), Some(TokenKind::LBrace)) {
            self.pos += 1;
            let mut parts = vec![self.singleton_num()?];
            while matches!(self.peek_kind(), Some(TokenKind::Comma)) {
                self.pos += 1;
                parts.push(self.singleton_num()?);
            }
            self.expect(&TokenKind::RBrace, "',' or '}'")?;
            return Ok(ComponentLit { parts, line, col });
        }
        let mut parts = vec![self.interval()?];
        while matches!(self.peek_kind(), Some(TokenKind::Pipe)) {
            self.pos += 1;
            parts.push(self.interval()?);
        }
        Ok(ComponentLit { parts, line, col })
    }

    fn singleton_num(&mut self) -> Result<(NonStdValue, NonStdValue), Diagnostic> {
        let v = self.number()?;
        Ok((v, v))
    }

    fn interval(&mut self) -> Result<(NonStdValue, NonStdValue), Diagnostic> {
        if matches!(self.peek_kind(), Some(TokenKind::LBracket)) {
            self.pos += 1;
            let lo = self.number()?;
            self.expect(&TokenKind::Comma, "','")?;
            let hi = self.number()?;
            self.expect(&TokenKind::RBracket, "']'")?;
            return Ok((lo, hi));
        }
        self.singleton_num()
    }

    fn number(&mut self) -> Result<NonStdValue, Diagnostic> {
        match self.peek() {
            Some(Token { kind: TokenKind::Number(v), .. }) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err_expected("number")),
        }
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.term()?;
        loop {
            match self.peek_kind() {
                Some(TokenKind::Pipe) => {
                    let (line, col) = self.here();
                    self.pos += 1;
                    let right = self.term()?;
                    left = Expr {
                        kind: ExprKind::Union(Box::new(left), Box::new(right)),
                        line,
                        col,
                    };
                }
                Some(TokenKind::Backslash) => {
                    let (line, col) = self.here();
                    self.pos += 1;
                    let right = self.term()?;
                    left = Expr {
                        kind: ExprKind::Difference(Box::new(left), Box::new(right)),
                        line,
                        col,
                    };
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.factor()?;
        while matches!(self.peek_kind(), Some(TokenKind::Amp)) {
            let (line, col) = self.here();
            self.pos += 1;
            let right = self.factor()?;
            left = Expr { kind: ExprKind::Intersect(Box::new(left), Box::new(right)), line, col };
        }
        Ok(left)
    }

    /// `x` between operands is the Cartesian product; it is an ordinary
    /// identifier everywhere else, so a set may itself be named `x`.
    fn factor(&mut self) -> Result<Expr, Diagnostic> {
        let mut left = self.primary()?;
        while matches!(self.peek_kind(), Some(TokenKind::Ident(name)) if name == "x") {
            let (line, col) = self.here();
            self.pos += 1;
            let right = self.primary()?;
            left = Expr { kind: ExprKind::Cartesian(Box::new(left), Box::new(right)), line, col };
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<Expr, Diagnostic> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(name), line, col })
                if name == "complement"
                    && matches!(
                        self.tokens.get(self.pos + 1).map(|t| &t.kind),
                        Some(TokenKind::LParen)
                    ) =>
            {
                let (line, col) = (*line, *col);
                self.pos += 2;
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "')'")?;
                Ok(Expr { kind: ExprKind::Complement(Box::new(inner)), line, col })
            }
            Some(Token { kind: TokenKind::Ident(name), line, col }) => {
                let expr = Expr { kind: ExprKind::Name(name.clone()), line: *line, col: *col };
                self.pos += 1;
                Ok(expr)
            }
            Some(Token { kind: TokenKind::LParen, .. }) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err_expected("a set name, 'complement(...)' or '('")),
        }
    }
}
