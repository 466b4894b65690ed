use std::collections::BTreeMap;
use std::fmt;

use crate::hyperreal::NonStdValue;
use crate::ndset::{IntervalUnion, NsInterval};
use crate::neutroset::{set_apply, set_is_subset, NeutroSet, NeutroTriple, SetOp};
use crate::taxonomy::{classify_triple, Classification};
use crate::Error;

use super::ast::{ComponentLit, Expr, ExprKind, Script, Stmt, StmtKind, TripleLit};
use super::Diagnostic;

/// Anything a statement can print.
#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Set(NeutroSet),
    Product(Product),
    Bool(bool),
    Classification(Classification),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Set(s) => write!(f, "{s}"),
            Value::Product(p) => write!(f, "{p}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Classification(c) => write!(f, "{c}"),
        }
    }
}

/// A Cartesian product of sets. No combining formula is applied: every tuple
/// keeps the records of its constituents side by side.
#[derive(Clone, PartialEq, Debug)]
pub struct Product {
    factors: Vec<NeutroSet>,
}

impl Product {
    pub fn factors(&self) -> &[NeutroSet] {
        &self.factors
    }

    /// Enumerates all tuples in row-major order (rightmost factor varying
    /// fastest), each with the records of its members.
    pub fn tuples(&self) -> Vec<(Vec<String>, Vec<NeutroTriple>)> {
        let mut out = vec![(Vec::new(), Vec::new())];
        for factor in &self.factors {
            let mut next = Vec::with_capacity(out.len() * factor.universe().len());
            for (names, triples) in &out {
                for name in factor.universe() {
                    let mut names = names.clone();
                    let mut triples = triples.clone();
                    names.push(name.clone());
                    triples.push(factor.triple_or_default(name));
                    next.push((names, triples));
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .tuples()
            .iter()
            .map(|(names, triples)| {
                let ts: Vec<String> = triples.iter().map(|t| t.to_string()).collect();
                format!("({}): ({})", names.join(", "), ts.join(", "))
            })
            .collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

/// One printable result, tagged with the line of the statement it came from.
#[derive(Clone, PartialEq, Debug)]
pub struct Output {
    pub line: u32,
    pub value: Value,
}

/// Evaluates a whole script with strict literal handling; the REPL drives an
/// [`Evaluator`] directly instead.
pub fn evaluate(script: &Script, strict: bool) -> Result<Vec<Output>, Diagnostic> {
    Evaluator::new(strict).eval_script(script)
}

/// The statement interpreter. Declarations are immutable: re-declaring a
/// name is an error, which keeps results independent of evaluation history.
pub struct Evaluator {
    universes: BTreeMap<String, Vec<String>>,
    sets: BTreeMap<String, (String, NeutroSet)>,
    strict: bool,
    warnings: Vec<Diagnostic>,
}

enum EvalVal {
    Set(NeutroSet),
    Product(Vec<NeutroSet>),
}

impl Evaluator {
    pub fn new(strict: bool) -> Self {
        Evaluator { universes: BTreeMap::new(), sets: BTreeMap::new(), strict, warnings: Vec::new() }
    }

    /// Warnings accumulated so far (lenient-mode clamps); draining resets.
    pub fn take_warnings(&mut self) -> Vec<Diagnostic> {
        std::mem::take(&mut self.warnings)
    }

    pub fn eval_script(&mut self, script: &Script) -> Result<Vec<Output>, Diagnostic> {
        let mut outputs = Vec::new();
        for stmt in &script.statements {
            if let Some(value) = self.eval_stmt(stmt)? {
                outputs.push(Output { line: stmt.line, value });
            }
        }
        Ok(outputs)
    }

    pub fn eval_stmt(&mut self, stmt: &Stmt) -> Result<Option<Value>, Diagnostic> {
        match &stmt.kind {
            StmtKind::Universe { name, elements } => {
                if self.universes.contains_key(name) {
                    return Err(Diagnostic::error(
                        stmt.line,
                        stmt.col,
                        format!("universe '{name}' already declared"),
                    ));
                }
                let mut seen = std::collections::BTreeSet::new();
                for e in elements {
                    if !seen.insert(e) {
                        return Err(Diagnostic::error(
                            stmt.line,
                            stmt.col,
                            Error::DuplicateElement(e.clone()).to_string(),
                        ));
                    }
                }
                self.universes.insert(name.clone(), elements.clone());
                Ok(None)
            }
            StmtKind::SetDecl { name, universe, entries } => {
                if self.sets.contains_key(name) {
                    return Err(Diagnostic::error(
                        stmt.line,
                        stmt.col,
                        format!("set '{name}' already declared"),
                    ));
                }
                let Some(elements) = self.universes.get(universe).cloned() else {
                    return Err(Diagnostic::error(
                        stmt.line,
                        stmt.col,
                        format!("undeclared universe '{universe}'"),
                    ));
                };
                let mut membership: BTreeMap<String, NeutroTriple> = BTreeMap::new();
                for entry in entries {
                    if !elements.iter().any(|e| e == &entry.element) {
                        return Err(Diagnostic::error(
                            entry.line,
                            entry.col,
                            Error::ElementNotInUniverse(entry.element.clone()).to_string(),
                        ));
                    }
                    if membership.contains_key(&entry.element) {
                        return Err(Diagnostic::error(
                            entry.line,
                            entry.col,
                            format!("element '{}' listed twice", entry.element),
                        ));
                    }
                    let (triple, warnings) = triple_from_literal(&entry.triple, self.strict)?;
                    self.warnings.extend(warnings);
                    membership.insert(entry.element.clone(), triple);
                }
                let set = NeutroSet::new(elements, membership)
                    .map_err(|e| Diagnostic::error(stmt.line, stmt.col, e.to_string()))?;
                self.sets.insert(name.clone(), (universe.clone(), set));
                Ok(None)
            }
            StmtKind::Eval(expr) => {
                let value = match self.eval_expr(expr)? {
                    EvalVal::Set(s) => Value::Set(s),
                    EvalVal::Product(factors) => Value::Product(Product { factors }),
                };
                Ok(Some(value))
            }
            StmtKind::Check { left, right } => {
                let a = self.eval_set(left, "'<='")?;
                let b = self.eval_set(right, "'<='")?;
                let holds = set_is_subset(&a, &b)
                    .map_err(|e| Diagnostic::error(stmt.line, stmt.col, e.to_string()))?;
                Ok(Some(Value::Bool(holds)))
            }
            StmtKind::Classify { set, element } => {
                let Some((_, s)) = self.sets.get(set) else {
                    return Err(Diagnostic::error(
                        stmt.line,
                        stmt.col,
                        format!("undeclared name '{set}'"),
                    ));
                };
                if !s.universe().iter().any(|e| e == element) {
                    return Err(Diagnostic::error(
                        stmt.line,
                        stmt.col,
                        Error::ElementNotInUniverse(element.clone()).to_string(),
                    ));
                }
                let triple = s.triple_or_default(element);
                Ok(Some(Value::Classification(classify_triple(&triple))))
            }
        }
    }

    fn eval_expr(&mut self, expr: &Expr) -> Result<EvalVal, Diagnostic> {
        match &expr.kind {
            ExprKind::Name(name) => match self.sets.get(name) {
                Some((_, s)) => Ok(EvalVal::Set(s.clone())),
                None => Err(Diagnostic::error(
                    expr.line,
                    expr.col,
                    format!("undeclared name '{name}'"),
                )),
            },
            ExprKind::Complement(inner) => {
                let s = self.eval_set_at(inner, expr.line, expr.col, "'complement'")?;
                Ok(EvalVal::Set(set_apply(SetOp::Complement, &s, None).expect("unary")))
            }
            ExprKind::Intersect(l, r) => self.binary(SetOp::Intersect, l, r, expr, "'&'"),
            ExprKind::Union(l, r) => self.binary(SetOp::Union, l, r, expr, "'|'"),
            ExprKind::Difference(l, r) => self.binary(SetOp::Difference, l, r, expr, "'\\'"),
            ExprKind::Cartesian(l, r) => {
                let mut factors = match self.eval_expr(l)? {
                    EvalVal::Set(s) => vec![s],
                    EvalVal::Product(fs) => fs,
                };
                match self.eval_expr(r)? {
                    EvalVal::Set(s) => factors.push(s),
                    EvalVal::Product(fs) => factors.extend(fs),
                }
                Ok(EvalVal::Product(factors))
            }
        }
    }

    fn binary(
        &mut self,
        op: SetOp,
        l: &Expr,
        r: &Expr,
        at: &Expr,
        op_name: &str,
    ) -> Result<EvalVal, Diagnostic> {
        let a = self.eval_set_at(l, at.line, at.col, op_name)?;
        let b = self.eval_set_at(r, at.line, at.col, op_name)?;
        let out = set_apply(op, &a, Some(&b))
            .map_err(|e| Diagnostic::error(at.line, at.col, e.to_string()))?;
        Ok(EvalVal::Set(out))
    }

    fn eval_set(&mut self, expr: &Expr, op_name: &str) -> Result<NeutroSet, Diagnostic> {
        self.eval_set_at(expr, expr.line, expr.col, op_name)
    }

    fn eval_set_at(
        &mut self,
        expr: &Expr,
        line: u32,
        col: u32,
        op_name: &str,
    ) -> Result<NeutroSet, Diagnostic> {
        match self.eval_expr(expr)? {
            EvalVal::Set(s) => Ok(s),
            EvalVal::Product(_) => Err(Diagnostic::error(
                line,
                col,
                format!("Cartesian product is not a valid operand of {op_name}"),
            )),
        }
    }
}

/// Turns a component literal into a canonical union. In strict mode an
/// endpoint outside `[0^-, 1^+]` is an error; otherwise it is clamped and
/// reported back as a warning diagnostic.
pub(super) fn literal_to_union(
    lit: &ComponentLit,
    strict: bool,
) -> Result<(IntervalUnion, Option<Diagnostic>), Diagnostic> {
    let parts = lit
        .parts
        .iter()
        .map(|&(lo, hi)| NsInterval::new(lo, hi))
        .collect::<Result<Vec<_>, Error>>()
        .map_err(|e| Diagnostic::error(lit.line, lit.col, e.to_string()))?;
    let union = IntervalUnion::canonicalize(parts)
        .map_err(|e| Diagnostic::error(lit.line, lit.col, e.to_string()))?;

    let out_of_range = union.parts().iter().flat_map(|p| [p.lo(), p.hi()]).find(|v| {
        *v < NonStdValue::ZERO_MINUS || *v > NonStdValue::ONE_PLUS
    });
    match out_of_range {
        None => Ok((union, None)),
        Some(v) if strict => Err(Diagnostic::error(
            lit.line,
            lit.col,
            Error::EndpointOutOfRange(v.to_string()).to_string(),
        )),
        Some(v) => {
            let warning = Diagnostic::warning(
                lit.line,
                lit.col,
                format!("literal endpoint {v} clamped to the unit range"),
            );
            Ok((union.clamp_unit(), Some(warning)))
        }
    }
}

/// Builds a record from a triple literal; see [`literal_to_union`] for the
/// strictness rules.
pub(super) fn triple_from_literal(
    lit: &TripleLit,
    strict: bool,
) -> Result<(NeutroTriple, Vec<Diagnostic>), Diagnostic> {
    let mut warnings = Vec::new();
    let mut conv = |c: &ComponentLit| -> Result<IntervalUnion, Diagnostic> {
        let (u, w) = literal_to_union(c, strict)?;
        warnings.extend(w);
        Ok(u)
    };
    let t = conv(&lit.t)?;
    let i = conv(&lit.i)?;
    let f = conv(&lit.f)?;
    let triple = NeutroTriple::strict(t, i, f)
        .expect("components already range-checked or clamped");
    Ok((triple, warnings))
}
