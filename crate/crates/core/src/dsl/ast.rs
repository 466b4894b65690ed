use crate::hyperreal::NonStdValue;

#[derive(Clone, PartialEq, Debug)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, PartialEq, Debug)]
pub enum StmtKind {
    Universe { name: String, elements: Vec<String> },
    SetDecl { name: String, universe: String, entries: Vec<SetEntry> },
    Eval(Expr),
    Check { left: Expr, right: Expr },
    Classify { set: String, element: String },
}

#[derive(Clone, PartialEq, Debug)]
pub struct SetEntry {
    pub element: String,
    pub triple: TripleLit,
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, PartialEq, Debug)]
pub struct TripleLit {
    pub t: ComponentLit,
    pub i: ComponentLit,
    pub f: ComponentLit,
}

/// A component literal as written: a list of raw `[lo, hi]` pairs (singleton
/// entries are degenerate pairs). Canonicalization happens at evaluation.
#[derive(Clone, PartialEq, Debug)]
pub struct ComponentLit {
    pub parts: Vec<(NonStdValue, NonStdValue)>,
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    /// Position of the operator for compound nodes, of the name otherwise.
    pub line: u32,
    pub col: u32,
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExprKind {
    Name(String),
    Complement(Box<Expr>),
    Intersect(Box<Expr>, Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Cartesian(Box<Expr>, Box<Expr>),
}
