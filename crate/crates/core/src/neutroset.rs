//! Membership records and sets over a universe. Every element of a set
//! carries three independent component subsets: T (membership), I
//! (indeterminacy) and F (non-membership). The set operations combine the
//! components with Minkowski arithmetic and clamp the final result into
//! `[0^-, 1^+]`; intermediates are deliberately left unclamped.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hyperreal::NonStdValue;
use crate::ndset::IntervalUnion;
use crate::parallel;
use crate::{Error, Result};

/// An element's appurtenance record: the ordered component subsets (T, I, F).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTriple", into = "RawTriple")]
pub struct NeutroTriple {
    t: IntervalUnion,
    i: IntervalUnion,
    f: IntervalUnion,
}

#[derive(Serialize, Deserialize)]
struct RawTriple {
    #[serde(rename = "T")]
    t: IntervalUnion,
    #[serde(rename = "I")]
    i: IntervalUnion,
    #[serde(rename = "F")]
    f: IntervalUnion,
}

impl NeutroTriple {
    /// Strict construction: every endpoint of every component must already
    /// lie in `[0^-, 1^+]`. Used for literals, where a value out of range is
    /// a typo that should fail loudly.
    pub fn strict(t: IntervalUnion, i: IntervalUnion, f: IntervalUnion) -> Result<Self> {
        for comp in [&t, &i, &f] {
            for part in comp.parts() {
                for v in [part.lo(), part.hi()] {
                    if v < NonStdValue::ZERO_MINUS || v > NonStdValue::ONE_PLUS {
                        return Err(Error::EndpointOutOfRange(v.to_string()));
                    }
                }
            }
        }
        Ok(NeutroTriple { t, i, f })
    }

    /// Clamping construction: endpoints outside `[0^-, 1^+]` are replaced by
    /// the boundary values. Operation outputs are built this way.
    pub fn clamping(t: IntervalUnion, i: IntervalUnion, f: IntervalUnion) -> Self {
        NeutroTriple { t: t.clamp_unit(), i: i.clamp_unit(), f: f.clamp_unit() }
    }

    /// Point triple `({t}, {i}, {f})` of plain reals, strict.
    pub fn point(t: f64, i: f64, f: f64) -> Result<Self> {
        Self::strict(IntervalUnion::point(t), IntervalUnion::point(i), IntervalUnion::point(f))
    }

    pub fn t(&self) -> &IntervalUnion {
        &self.t
    }

    pub fn i(&self) -> &IntervalUnion {
        &self.i
    }

    pub fn f(&self) -> &IntervalUnion {
        &self.f
    }

    /// `(n_inf, n_sup)`: the component infima summed and the component
    /// suprema summed.
    pub fn n_bounds(&self) -> (NonStdValue, NonStdValue) {
        (
            self.t.inf() + self.i.inf() + self.f.inf(),
            self.t.sup() + self.i.sup() + self.f.sup(),
        )
    }

    /// Componentwise `{1^+} ⊖ C`, clamped.
    pub fn complement(&self) -> NeutroTriple {
        let one_plus = IntervalUnion::singleton(NonStdValue::ONE_PLUS);
        NeutroTriple::clamping(&one_plus - &self.t, &one_plus - &self.i, &one_plus - &self.f)
    }

    /// Componentwise Minkowski product, clamped.
    pub fn intersect(&self, other: &NeutroTriple) -> NeutroTriple {
        NeutroTriple::clamping(&self.t * &other.t, &self.i * &other.i, &self.f * &other.f)
    }

    /// Componentwise `C1 ⊕ C2 ⊖ C1 ⊙ C2`, evaluated exactly as written (the
    /// two occurrences of each component are treated as independent), then
    /// clamped.
    pub fn union(&self, other: &NeutroTriple) -> NeutroTriple {
        let comp = |a: &IntervalUnion, b: &IntervalUnion| &(a + b) - &(a * b);
        NeutroTriple::clamping(
            comp(&self.t, &other.t),
            comp(&self.i, &other.i),
            comp(&self.f, &other.f),
        )
    }

    /// Componentwise `C1 ⊖ C1 ⊙ C2`, clamped.
    pub fn difference(&self, other: &NeutroTriple) -> NeutroTriple {
        let comp = |a: &IntervalUnion, b: &IntervalUnion| a - &(a * b);
        NeutroTriple::clamping(
            comp(&self.t, &other.t),
            comp(&self.i, &other.i),
            comp(&self.f, &other.f),
        )
    }

    /// Containment order: T bounds must not exceed the other's, F bounds
    /// must not fall below the other's. I is unconstrained.
    pub fn is_subset(&self, other: &NeutroTriple) -> bool {
        self.t.inf() <= other.t.inf()
            && self.t.sup() <= other.t.sup()
            && self.f.inf() >= other.f.inf()
            && self.f.sup() >= other.f.sup()
    }
}

impl Default for NeutroTriple {
    /// `({0}, {0}, {1})`: definite non-membership, the record assumed for
    /// universe elements a set says nothing about.
    fn default() -> Self {
        NeutroTriple {
            t: IntervalUnion::point(0.0),
            i: IntervalUnion::point(0.0),
            f: IntervalUnion::point(1.0),
        }
    }
}

impl fmt::Display for NeutroTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

impl TryFrom<RawTriple> for NeutroTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        NeutroTriple::strict(raw.t, raw.i, raw.f)
    }
}

impl From<NeutroTriple> for RawTriple {
    fn from(x: NeutroTriple) -> Self {
        RawTriple { t: x.t, i: x.i, f: x.f }
    }
}

/// A named element together with its record, as used by Cartesian pairing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub name: String,
    pub triple: NeutroTriple,
}

/// Cartesian pairing keeps both constituent records unmodified; no combining
/// formula is applied.
pub fn cartesian(x: Element, y: Element) -> (Element, Element) {
    (x, y)
}

/// A set over a universe of named elements. Elements the membership map does
/// not mention take [`NeutroTriple::default`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSet", into = "RawSet")]
pub struct NeutroSet {
    universe: Vec<String>,
    membership: BTreeMap<String, NeutroTriple>,
}

#[derive(Serialize, Deserialize)]
struct RawSet {
    universe: Vec<String>,
    membership: BTreeMap<String, NeutroTriple>,
}

impl NeutroSet {
    pub fn new(universe: Vec<String>, membership: BTreeMap<String, NeutroTriple>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for name in &universe {
            if !seen.insert(name) {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        for name in membership.keys() {
            if !seen.contains(name) {
                return Err(Error::ElementNotInUniverse(name.clone()));
            }
        }
        Ok(NeutroSet { universe, membership })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn membership(&self) -> &BTreeMap<String, NeutroTriple> {
        &self.membership
    }

    /// The element's record, or the default `({0},{0},{1})` when unmapped.
    pub fn triple_or_default(&self, name: &str) -> NeutroTriple {
        self.membership.get(name).cloned().unwrap_or_default()
    }

    pub fn complement(&self) -> NeutroSet {
        set_apply(SetOp::Complement, self, None).expect("unary op cannot mismatch")
    }

    pub fn intersect(&self, other: &NeutroSet) -> Result<NeutroSet> {
        set_apply(SetOp::Intersect, self, Some(other))
    }

    pub fn union(&self, other: &NeutroSet) -> Result<NeutroSet> {
        set_apply(SetOp::Union, self, Some(other))
    }

    pub fn difference(&self, other: &NeutroSet) -> Result<NeutroSet> {
        set_apply(SetOp::Difference, self, Some(other))
    }

    pub fn is_subset_of(&self, other: &NeutroSet) -> Result<bool> {
        set_is_subset(self, other)
    }
}

impl fmt::Display for NeutroSet {
    /// Mapped elements in universe order: `{x: (0.5, 0.2, 0.3), ...}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .universe
            .iter()
            .filter_map(|name| self.membership.get(name).map(|t| format!("{name}: {t}")))
            .collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

impl TryFrom<RawSet> for NeutroSet {
    type Error = Error;

    fn try_from(raw: RawSet) -> Result<Self> {
        NeutroSet::new(raw.universe, raw.membership)
    }
}

impl From<NeutroSet> for RawSet {
    fn from(s: NeutroSet) -> Self {
        RawSet { universe: s.universe, membership: s.membership }
    }
}

/// The element-wise liftable operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetOp {
    Complement,
    Intersect,
    Union,
    Difference,
}

impl fmt::Display for SetOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SetOp::Complement => "complement",
            SetOp::Intersect => "intersection",
            SetOp::Union => "union",
            SetOp::Difference => "difference",
        };
        f.write_str(s)
    }
}

/// Lifts a record operation over every element of the universe. Binary
/// operations require both sets to range over the same universe; unmapped
/// elements contribute the default record.
pub fn set_apply(op: SetOp, a: &NeutroSet, b: Option<&NeutroSet>) -> Result<NeutroSet> {
    match (op, b) {
        (SetOp::Complement, None) => {
            let membership = map_universe(a, |x| x.complement());
            Ok(NeutroSet { universe: a.universe.clone(), membership })
        }
        (SetOp::Complement, Some(_)) | (_, None) => Err(Error::OperandArity),
        (op, Some(b)) => {
            if a.universe != b.universe {
                return Err(Error::UniverseMismatch);
            }
            let entries = parallel::map_collect(&a.universe, |name| {
                let x = a.triple_or_default(name);
                let y = b.triple_or_default(name);
                let out = match op {
                    SetOp::Intersect => x.intersect(&y),
                    SetOp::Union => x.union(&y),
                    SetOp::Difference => x.difference(&y),
                    SetOp::Complement => unreachable!("handled above"),
                };
                (name.clone(), out)
            });
            Ok(NeutroSet {
                universe: a.universe.clone(),
                membership: entries.into_iter().collect(),
            })
        }
    }
}

fn map_universe(
    a: &NeutroSet,
    f: impl Fn(&NeutroTriple) -> NeutroTriple + Sync + Send,
) -> BTreeMap<String, NeutroTriple> {
    parallel::map_collect(&a.universe, |name| {
        (name.clone(), f(&a.triple_or_default(name)))
    })
    .into_iter()
    .collect()
}

/// Set-level containment: every element's record of `a` is a subset of the
/// corresponding record of `b`.
pub fn set_is_subset(a: &NeutroSet, b: &NeutroSet) -> Result<bool> {
    if a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    Ok(parallel::all(&a.universe, |name| {
        a.triple_or_default(name).is_subset(&b.triple_or_default(name))
    }))
}

/// An n-ary relation: records attached to ordered name tuples drawn from a
/// fixed list of domains.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NeutroRelation {
    domains: Vec<Vec<String>>,
    tuples: BTreeMap<Vec<String>, NeutroTriple>,
}

impl NeutroRelation {
    pub fn new(domains: Vec<Vec<String>>) -> Result<Self> {
        if domains.is_empty() {
            return Err(Error::EmptyRelationSignature);
        }
        Ok(NeutroRelation { domains, tuples: BTreeMap::new() })
    }

    pub fn arity(&self) -> usize {
        self.domains.len()
    }

    pub fn domains(&self) -> &[Vec<String>] {
        &self.domains
    }

    fn check_signature(&self, tuple: &[String]) -> Result<()> {
        if tuple.len() != self.arity() {
            return Err(Error::TupleOutsideSignature);
        }
        for (name, domain) in tuple.iter().zip(&self.domains) {
            if !domain.iter().any(|d| d == name) {
                return Err(Error::TupleOutsideSignature);
            }
        }
        Ok(())
    }

    pub fn insert(&mut self, tuple: Vec<String>, triple: NeutroTriple) -> Result<()> {
        self.check_signature(&tuple)?;
        self.tuples.insert(tuple, triple);
        Ok(())
    }

    /// The stored record, or the default `({0},{0},{1})` for an absent tuple
    /// that still fits the signature.
    pub fn get(&self, tuple: &[String]) -> Result<NeutroTriple> {
        self.check_signature(tuple)?;
        Ok(self.tuples.get(tuple).cloned().unwrap_or_default())
    }
}
