//! Canonical finite unions of closed intervals over [`NonStdValue`], with
//! Minkowski addition, subtraction and multiplication, division by a real,
//! bounds, and unit clamping. These are the component subsets that membership
//! records are made of.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::hyperreal::NonStdValue;
use crate::{Error, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`; singletons are the
/// degenerate case `lo == hi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NsInterval {
    lo: NonStdValue,
    hi: NonStdValue,
}

impl NsInterval {
    pub fn new(lo: NonStdValue, hi: NonStdValue) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvertedInterval);
        }
        Ok(NsInterval { lo, hi })
    }

    pub fn singleton(v: NonStdValue) -> Self {
        NsInterval { lo: v, hi: v }
    }

    pub fn lo(self) -> NonStdValue {
        self.lo
    }

    pub fn hi(self) -> NonStdValue {
        self.hi
    }

    pub fn is_singleton(self) -> bool {
        self.lo == self.hi
    }
}

/// A non-empty union of closed intervals in canonical form: parts sorted by
/// lower endpoint, pairwise disjoint, touching parts merged.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<(NonStdValue, NonStdValue)>", into = "Vec<(NonStdValue, NonStdValue)>")]
pub struct IntervalUnion {
    parts: Vec<NsInterval>,
}

impl IntervalUnion {
    /// Sorts, merges overlapping or touching parts, and rejects empty input.
    pub fn canonicalize(raw: Vec<NsInterval>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyComponent);
        }
        let mut parts = raw;
        parts.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut merged: Vec<NsInterval> = Vec::with_capacity(parts.len());
        for p in parts {
            match merged.last_mut() {
                Some(last) if p.lo <= last.hi => {
                    if p.hi > last.hi {
                        last.hi = p.hi;
                    }
                }
                _ => merged.push(p),
            }
        }
        Ok(IntervalUnion { parts: merged })
    }

    pub fn singleton(v: NonStdValue) -> Self {
        IntervalUnion { parts: vec![NsInterval::singleton(v)] }
    }

    /// Singleton union of the plain real `r`.
    pub fn point(r: f64) -> Self {
        Self::singleton(NonStdValue::real(r))
    }

    /// Single proper interval `[lo, hi]` of plain reals.
    pub fn span(lo: f64, hi: f64) -> Result<Self> {
        Ok(IntervalUnion {
            parts: vec![NsInterval::new(NonStdValue::real(lo), NonStdValue::real(hi))?],
        })
    }

    pub fn parts(&self) -> &[NsInterval] {
        &self.parts
    }

    pub fn inf(&self) -> NonStdValue {
        self.parts[0].lo
    }

    pub fn sup(&self) -> NonStdValue {
        self.parts[self.parts.len() - 1].hi
    }

    pub fn bounds(&self) -> (NonStdValue, NonStdValue) {
        (self.inf(), self.sup())
    }

    /// True iff the union is a single point.
    pub fn is_singleton(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].is_singleton()
    }

    pub fn contains(&self, v: NonStdValue) -> bool {
        self.parts.iter().any(|p| p.lo <= v && v <= p.hi)
    }

    /// Division by a non-zero real; a negative divisor flips every part.
    pub fn div_scalar(&self, k: f64) -> Result<Self> {
        if k == 0.0 {
            return Err(Error::DivisionByZero);
        }
        let parts = self
            .parts
            .iter()
            .map(|p| {
                let a = p.lo.div_scalar(k).expect("k != 0");
                let b = p.hi.div_scalar(k).expect("k != 0");
                if k < 0.0 {
                    NsInterval { lo: b, hi: a }
                } else {
                    NsInterval { lo: a, hi: b }
                }
            })
            .collect();
        Ok(Self::canonicalize(parts).expect("scaled parts stay non-empty and ordered"))
    }

    /// Every endpoint clamped into `[0^-, 1^+]`; parts that collapse onto a
    /// boundary become the singletons `{0^-}` or `{1^+}`.
    pub fn clamp_unit(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|p| NsInterval { lo: p.lo.clamp_unit(), hi: p.hi.clamp_unit() })
            .collect();
        Self::canonicalize(parts).expect("clamping preserves non-emptiness and order")
    }

    fn pairwise(&self, other: &Self, f: impl Fn(NsInterval, NsInterval) -> NsInterval) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() * other.parts.len());
        for a in &self.parts {
            for b in &other.parts {
                parts.push(f(*a, *b));
            }
        }
        Self::canonicalize(parts).expect("pairwise images of non-empty unions are non-empty")
    }
}

impl Add for &IntervalUnion {
    type Output = IntervalUnion;

    /// Minkowski sum `{x + y | x ∈ self, y ∈ other}`. Not clamped.
    fn add(self, other: &IntervalUnion) -> IntervalUnion {
        self.pairwise(other, |a, b| NsInterval { lo: a.lo + b.lo, hi: a.hi + b.hi })
    }
}

impl Sub for &IntervalUnion {
    type Output = IntervalUnion;

    /// Minkowski difference `{x - y | x ∈ self, y ∈ other}`. Not clamped.
    fn sub(self, other: &IntervalUnion) -> IntervalUnion {
        self.pairwise(other, |a, b| NsInterval { lo: a.lo - b.hi, hi: a.hi - b.lo })
    }
}

impl Mul for &IntervalUnion {
    type Output = IntervalUnion;

    /// Minkowski product `{x · y | x ∈ self, y ∈ other}`. Each part pair
    /// takes the min/max of the four endpoint products, which stays correct
    /// for sign-mixed inputs that can occur before clamping.
    fn mul(self, other: &IntervalUnion) -> IntervalUnion {
        self.pairwise(other, |a, b| {
            let candidates = [a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi];
            let mut lo = candidates[0];
            let mut hi = candidates[0];
            for c in &candidates[1..] {
                if *c < lo {
                    lo = *c;
                }
                if *c > hi {
                    hi = *c;
                }
            }
            NsInterval { lo, hi }
        })
    }
}

impl fmt::Display for IntervalUnion {
    /// Canonical text form: a lone singleton renders as its value, an
    /// all-singleton union as `{a,b,c}`, anything else as `|`-joined parts
    /// with `[lo,hi]` for proper intervals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.len() == 1 {
            let p = self.parts[0];
            return if p.is_singleton() {
                write!(f, "{}", p.lo)
            } else {
                write!(f, "[{},{}]", p.lo, p.hi)
            };
        }
        if self.parts.iter().all(|p| p.is_singleton()) {
            let vals: Vec<String> = self.parts.iter().map(|p| p.lo.to_string()).collect();
            return write!(f, "{{{}}}", vals.join(","));
        }
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.is_singleton() {
                    p.lo.to_string()
                } else {
                    format!("[{},{}]", p.lo, p.hi)
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl TryFrom<Vec<(NonStdValue, NonStdValue)>> for IntervalUnion {
    type Error = Error;

    fn try_from(raw: Vec<(NonStdValue, NonStdValue)>) -> Result<Self> {
        let parts = raw
            .into_iter()
            .map(|(lo, hi)| NsInterval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Self::canonicalize(parts)
    }
}

impl From<IntervalUnion> for Vec<(NonStdValue, NonStdValue)> {
    fn from(u: IntervalUnion) -> Self {
        u.parts.iter().map(|p| (p.lo, p.hi)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperreal::NonStdValue;
    use proptest::prelude::*;

    fn ns(std: f64, coeff: f64) -> NonStdValue {
        NonStdValue::new(std, coeff)
    }

    fn iv(lo: f64, hi: f64) -> NsInterval {
        NsInterval::new(NonStdValue::real(lo), NonStdValue::real(hi)).unwrap()
    }

    fn union(parts: &[(f64, f64)]) -> IntervalUnion {
        IntervalUnion::canonicalize(parts.iter().map(|&(a, b)| iv(a, b)).collect()).unwrap()
    }

    fn points(vals: &[f64]) -> IntervalUnion {
        IntervalUnion::canonicalize(
            vals.iter().map(|&v| NsInterval::singleton(NonStdValue::real(v))).collect(),
        )
        .unwrap()
    }

    fn union_close(a: &IntervalUnion, b: &IntervalUnion) -> bool {
        a.parts().len() == b.parts().len()
            && a.parts().iter().zip(b.parts()).all(|(p, q)| {
                (p.lo().std() - q.lo().std()).abs() <= 1e-12
                    && (p.hi().std() - q.hi().std()).abs() <= 1e-12
                    && (p.lo().coeff() - q.lo().coeff()).abs() <= 1e-12
                    && (p.hi().coeff() - q.hi().coeff()).abs() <= 1e-12
            })
    }

    #[test]
    fn canonicalize_keeps_separated_parts() {
        let u = union(&[(0.4, 0.45), (0.5, 0.51)]);
        assert_eq!(u.parts().len(), 2);
    }

    #[test]
    fn canonicalize_merges_overlap_and_adjacency() {
        assert_eq!(union(&[(0.2, 0.5), (0.4, 0.6)]), union(&[(0.2, 0.6)]));
        assert_eq!(union(&[(0.3, 0.3), (0.3, 0.4)]), union(&[(0.3, 0.4)]));
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert_eq!(IntervalUnion::canonicalize(vec![]), Err(Error::EmptyComponent));
        assert_eq!(
            NsInterval::new(NonStdValue::real(0.5), NonStdValue::real(0.2)),
            Err(Error::InvertedInterval)
        );
    }

    #[test]
    fn bounds_span_the_whole_union() {
        let three = points(&[0.20, 0.24, 0.28]);
        assert_eq!(three.bounds(), (NonStdValue::real(0.20), NonStdValue::real(0.28)));
        assert_eq!(union(&[(0.2, 0.3)]).bounds(), (NonStdValue::real(0.2), NonStdValue::real(0.3)));
        let zm = IntervalUnion::singleton(NonStdValue::ZERO_MINUS);
        assert_eq!(zm.bounds(), (NonStdValue::ZERO_MINUS, NonStdValue::ZERO_MINUS));
    }

    #[test]
    fn minkowski_add() {
        assert!(union_close(
            &(&union(&[(0.1, 0.2)]) + &union(&[(0.3, 0.4)])),
            &union(&[(0.4, 0.6)])
        ));
        assert_eq!(&IntervalUnion::point(0.3) + &union(&[(0.2, 0.5)]), union(&[(0.5, 0.8)]));
        // split operand stays split when the shift is small
        let split = union(&[(0.0, 0.1), (0.9, 1.0)]);
        assert!(union_close(
            &(&split + &IntervalUnion::point(0.05)),
            &union(&[(0.05, 0.15), (0.95, 1.05)])
        ));
    }

    #[test]
    fn minkowski_sub() {
        let one_plus = IntervalUnion::singleton(NonStdValue::ONE_PLUS);
        let got = &one_plus - &union(&[(0.2, 0.3)]);
        assert_eq!(got.parts().len(), 1);
        assert_eq!(got.inf(), ns(0.7, 1.0));
        assert_eq!(got.sup(), ns(0.8, 1.0));

        assert_eq!(&union(&[(0.5, 0.6)]) - &IntervalUnion::point(0.0), union(&[(0.5, 0.6)]));
        assert!(union_close(
            &(&union(&[(0.1, 0.2)]) - &union(&[(0.3, 0.4)])),
            &union(&[(-0.3, -0.1)])
        ));
    }

    #[test]
    fn minkowski_mul() {
        let got = &union(&[(0.2, 0.3)]) * &union(&[(0.5, 0.6)]);
        assert_eq!(got, union(&[(0.10, 0.18)]));

        let s = union(&[(0.25, 0.75)]);
        assert_eq!(&IntervalUnion::point(1.0) * &s, s);

        let one_plus = IntervalUnion::singleton(NonStdValue::ONE_PLUS);
        let got = &one_plus * &union(&[(0.2, 0.3)]);
        assert_eq!(got.inf(), ns(0.2, 0.2));
        assert_eq!(got.sup(), ns(0.3, 0.3));
    }

    #[test]
    fn div_scalar_cases() {
        assert_eq!(union(&[(0.4, 0.8)]).div_scalar(2.0).unwrap(), union(&[(0.2, 0.4)]));
        assert_eq!(union(&[(0.2, 0.4)]).div_scalar(1.0).unwrap(), union(&[(0.2, 0.4)]));
        assert_eq!(union(&[(0.2, 0.4)]).div_scalar(-2.0).unwrap(), union(&[(-0.2, -0.1)]));
        assert_eq!(union(&[(0.2, 0.4)]).div_scalar(0.0), Err(Error::DivisionByZero));
    }

    #[test]
    fn clamp_unit_set() {
        let below = union(&[(-0.3, -0.1)]).clamp_unit();
        assert_eq!(below, IntervalUnion::singleton(NonStdValue::ZERO_MINUS));

        let above = union(&[(0.9, 1.4)]).clamp_unit();
        assert_eq!(above.inf(), NonStdValue::real(0.9));
        assert_eq!(above.sup(), NonStdValue::ONE_PLUS);

        assert_eq!(union(&[(0.2, 0.5)]).clamp_unit(), union(&[(0.2, 0.5)]));
    }

    #[test]
    fn containment_respects_gaps_and_order() {
        let gap = union(&[(0.4, 0.45), (0.5, 0.51)]);
        assert!(!gap.contains(NonStdValue::real(0.47)));
        assert!(union(&[(0.2, 0.3)]).contains(NonStdValue::real(0.2)));
        assert!(!union(&[(0.0, 1.0)]).contains(NonStdValue::ONE_PLUS));
    }

    #[test]
    fn display_forms() {
        assert_eq!(union(&[(0.2, 0.3), (0.5, 0.51)]).to_string(), "[0.2,0.3]|[0.5,0.51]");
        assert_eq!(points(&[0.2, 0.24]).to_string(), "{0.2,0.24}");
        assert_eq!(IntervalUnion::point(0.5).to_string(), "0.5");
        assert_eq!(union(&[(0.2, 0.3)]).to_string(), "[0.2,0.3]");
        let mixed = IntervalUnion::canonicalize(vec![
            iv(0.1, 0.2),
            NsInterval::singleton(NonStdValue::real(0.5)),
        ])
        .unwrap();
        assert_eq!(mixed.to_string(), "[0.1,0.2]|0.5");
    }

    fn arb_union() -> impl Strategy<Value = IntervalUnion> {
        prop::collection::vec((0.0..1.0f64, 0.0..0.2f64), 1..4).prop_map(|raw| {
            IntervalUnion::canonicalize(
                raw.into_iter().map(|(lo, w)| iv(lo, (lo + w).min(1.0))).collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent(u in arb_union()) {
            let again = IntervalUnion::canonicalize(u.parts().to_vec()).unwrap();
            prop_assert_eq!(again, u);
        }

        #[test]
        fn add_bounds_identity(a in arb_union(), b in arb_union()) {
            let sum = &a + &b;
            prop_assert_eq!(sum.inf(), a.inf() + b.inf());
            prop_assert_eq!(sum.sup(), a.sup() + b.sup());
        }

        #[test]
        fn sub_bounds_identity(a in arb_union(), b in arb_union()) {
            let diff = &a - &b;
            prop_assert_eq!(diff.inf(), a.inf() - b.sup());
            prop_assert_eq!(diff.sup(), a.sup() - b.inf());
        }

        #[test]
        fn mul_bounds_identity_on_nonnegative(a in arb_union(), b in arb_union()) {
            let prod = &a * &b;
            prop_assert_eq!(prod.inf(), a.inf() * b.inf());
            prop_assert_eq!(prod.sup(), a.sup() * b.sup());
        }

        #[test]
        fn add_and_mul_commute(a in arb_union(), b in arb_union()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn add_and_mul_associate(a in arb_union(), b in arb_union(), c in arb_union()) {
            // identical point sets; canonical forms match up to fp noise
            prop_assert!(union_close(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
            prop_assert!(union_close(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
        }

        #[test]
        fn parts_stay_sorted_and_disjoint(a in arb_union(), b in arb_union()) {
            let u = &a + &b;
            for w in u.parts().windows(2) {
                prop_assert!(w[0].hi() < w[1].lo());
            }
        }
    }
}
