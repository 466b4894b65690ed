//! Classification of membership records into the generalization lattice:
//! which simpler set models a record fits (classical, fuzzy, consistent,
//! incomplete, paraconsistent, ...) plus out-of-range flags for components
//! that boil over 1 or freeze under 0.
//!
//! Labels are predicates, not partitions: a record usually satisfies several
//! at once. All comparisons snap both value fields to 12 decimal places
//! first, so classification is deterministic under short arithmetic chains.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hyperreal::NonStdValue;
use crate::neutroset::NeutroTriple;

/// Category labels, ordered for stable rendering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    /// n = 1, i = 0, and t, f each exactly 0 or 1.
    Classical,
    /// n = 1 and i = 0.
    Fuzzy,
    /// Component sum exactly 1 with 0 <= i < 1 (point records), or sup sum
    /// exactly 1 with all components inside [0, 1] (interval records).
    IfsConsistent,
    /// n < 1: incomplete information.
    IntuitionisticIncomplete,
    /// n > 1: contradictory sources.
    Paraconsistent,
    /// i > 0: some genuine indeterminacy.
    Faillibilist,
    /// t = 1 and f = 1 with i = 0.
    Dialetheist,
    /// t = 1 and f = 1: belongs and does not belong at once.
    Paradoxist,
    /// 0 < i < 1 and t + f > 1.
    Pseudoparadoxist,
    /// i < 0 or t > 1.
    Tautological,
}

impl Label {
    fn as_str(self) -> &'static str {
        match self {
            Label::Classical => "classical",
            Label::Fuzzy => "fuzzy",
            Label::IfsConsistent => "ifs_consistent",
            Label::IntuitionisticIncomplete => "intuitionistic_incomplete",
            Label::Paraconsistent => "paraconsistent",
            Label::Faillibilist => "faillibilist",
            Label::Dialetheist => "dialetheist",
            Label::Paradoxist => "paradoxist",
            Label::Pseudoparadoxist => "pseudoparadoxist",
            Label::Tautological => "tautological",
        }
    }
}

/// Out-of-range flags, derived purely from component bounds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Overincluded,
    Overindeterminate,
    Overexcluded,
    Undertrue,
    Underindeterminate,
    Underfalse,
}

impl Flag {
    fn as_str(self) -> &'static str {
        match self {
            Flag::Overincluded => "overincluded",
            Flag::Overindeterminate => "overindeterminate",
            Flag::Overexcluded => "overexcluded",
            Flag::Undertrue => "undertrue",
            Flag::Underindeterminate => "underindeterminate",
            Flag::Underfalse => "underfalse",
        }
    }
}

/// The labels and flags a record satisfies.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Classification {
    pub labels: BTreeSet<Label>,
    pub flags: BTreeSet<Flag>,
}

impl Classification {
    pub fn has(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }

    pub fn flagged(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

impl fmt::Display for Classification {
    /// Labels comma-joined in declaration order, flags bracketed after:
    /// `"paraconsistent, faillibilist [overincluded]"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.labels.is_empty() {
            f.write_str("none")?;
        } else {
            let labels: Vec<&str> = self.labels.iter().map(|l| l.as_str()).collect();
            f.write_str(&labels.join(", "))?;
        }
        if !self.flags.is_empty() {
            let flags: Vec<&str> = self.flags.iter().map(|x| x.as_str()).collect();
            write!(f, " [{}]", flags.join(", "))?;
        }
        Ok(())
    }
}

const ZERO: NonStdValue = NonStdValue::ZERO;
const ONE: NonStdValue = NonStdValue::ONE;

fn is_zero_or_one(v: NonStdValue) -> bool {
    v == ZERO || v == ONE
}

/// Standard-part sum snapped to 12 decimals; infinitesimal parts do not move
/// a sum across a category boundary.
fn std_sum(vals: [NonStdValue; 2]) -> NonStdValue {
    NonStdValue::real(vals[0].std() + vals[1].std()).snapped()
}

fn std_sum3(vals: [NonStdValue; 3]) -> NonStdValue {
    NonStdValue::real(vals[0].std() + vals[1].std() + vals[2].std()).snapped()
}

/// Classifies a point record (t, i, f).
pub fn classify_point(t: NonStdValue, i: NonStdValue, f: NonStdValue) -> Classification {
    let (t, i, f) = (t.snapped(), i.snapped(), f.snapped());
    let n = std_sum3([t, i, f]);
    let tf = std_sum([t, f]);

    let mut c = Classification::default();
    if n == ONE && i == ZERO && is_zero_or_one(t) && is_zero_or_one(f) {
        c.labels.insert(Label::Classical);
    }
    if n == ONE && i == ZERO {
        c.labels.insert(Label::Fuzzy);
    }
    if n == ONE && ZERO <= i && i < ONE {
        c.labels.insert(Label::IfsConsistent);
    }
    if n < ONE {
        c.labels.insert(Label::IntuitionisticIncomplete);
    }
    if n > ONE {
        c.labels.insert(Label::Paraconsistent);
    }
    if i > ZERO {
        c.labels.insert(Label::Faillibilist);
    }
    if t == ONE && f == ONE && i == ZERO {
        c.labels.insert(Label::Dialetheist);
    }
    if t == ONE && f == ONE {
        c.labels.insert(Label::Paradoxist);
    }
    if ZERO < i && i < ONE && tf > ONE {
        c.labels.insert(Label::Pseudoparadoxist);
    }
    if i < ZERO || t > ONE {
        c.labels.insert(Label::Tautological);
    }
    set_flags(&mut c, t, i, f, t, i, f);
    c
}

/// Classifies a record. Point records delegate to [`classify_point`];
/// interval records are judged by their bound sums, with "over" flags read
/// off the suprema and "under" flags off the infima.
pub fn classify_triple(x: &NeutroTriple) -> Classification {
    if x.t().is_singleton() && x.i().is_singleton() && x.f().is_singleton() {
        return classify_point(x.t().inf(), x.i().inf(), x.f().inf());
    }
    let sup = [x.t().sup().snapped(), x.i().sup().snapped(), x.f().sup().snapped()];
    let inf = [x.t().inf().snapped(), x.i().inf().snapped(), x.f().inf().snapped()];
    let n_sup = std_sum3(sup);

    let mut c = Classification::default();
    if n_sup > ONE {
        c.labels.insert(Label::Paraconsistent);
    }
    if n_sup < ONE {
        c.labels.insert(Label::IntuitionisticIncomplete);
    }
    let within_unit = inf.iter().all(|v| *v >= ZERO) && sup.iter().all(|v| *v <= ONE);
    if n_sup == ONE && within_unit {
        c.labels.insert(Label::IfsConsistent);
    }
    if sup[1] > ZERO {
        c.labels.insert(Label::Faillibilist);
    }
    set_flags(&mut c, sup[0], sup[1], sup[2], inf[0], inf[1], inf[2]);
    c
}

fn set_flags(
    c: &mut Classification,
    t_hi: NonStdValue,
    i_hi: NonStdValue,
    f_hi: NonStdValue,
    t_lo: NonStdValue,
    i_lo: NonStdValue,
    f_lo: NonStdValue,
) {
    if t_hi > ONE {
        c.flags.insert(Flag::Overincluded);
    }
    if i_hi > ONE {
        c.flags.insert(Flag::Overindeterminate);
    }
    if f_hi > ONE {
        c.flags.insert(Flag::Overexcluded);
    }
    if t_lo < ZERO {
        c.flags.insert(Flag::Undertrue);
    }
    if i_lo < ZERO {
        c.flags.insert(Flag::Underindeterminate);
    }
    if f_lo < ZERO {
        c.flags.insert(Flag::Underfalse);
    }
}

/// True iff the record could be carried by an intuitionistic fuzzy set:
/// all endpoints standard, inside [0, 1], and the suprema summing exactly
/// to 1.
pub fn is_ifs_representable(x: &NeutroTriple) -> bool {
    for comp in [x.t(), x.i(), x.f()] {
        for part in comp.parts() {
            for v in [part.lo(), part.hi()] {
                if !v.is_standard() || v < ZERO || v > ONE {
                    return false;
                }
            }
        }
    }
    std_sum3([x.t().sup(), x.i().sup(), x.f().sup()]) == ONE
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ndset::{IntervalUnion, NsInterval};
    use crate::neutroset::NeutroTriple;

    fn r(v: f64) -> NonStdValue {
        NonStdValue::real(v)
    }

    fn pt(t: f64, i: f64, f: f64) -> NeutroTriple {
        NeutroTriple::point(t, i, f).unwrap()
    }

    fn interval_triple_b() -> NeutroTriple {
        NeutroTriple::strict(
            IntervalUnion::span(0.20, 0.30).unwrap(),
            IntervalUnion::canonicalize(vec![
                NsInterval::new(r(0.40), r(0.45)).unwrap(),
                NsInterval::new(r(0.50), r(0.51)).unwrap(),
            ])
            .unwrap(),
            IntervalUnion::canonicalize(
                [0.20, 0.24, 0.28].iter().map(|&v| NsInterval::singleton(r(v))).collect(),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn point_examples() {
        let a = classify_point(r(0.5), r(0.2), r(0.3));
        assert!(a.has(Label::IfsConsistent));

        let c = classify_point(r(0.1), r(0.3), r(0.4));
        assert!(c.has(Label::IntuitionisticIncomplete));
        assert!(c.has(Label::Faillibilist));

        let d = classify_point(r(1.0), r(0.0), r(1.0));
        assert!(d.has(Label::Dialetheist));
        assert!(d.has(Label::Paradoxist));
        assert!(d.has(Label::Paraconsistent));
    }

    #[test]
    fn fp_noise_does_not_move_categories() {
        // 0.5 + 0.2 + 0.3 is not exactly 1.0 in floats; snapping makes it so
        let a = classify_point(r(0.5), r(0.2), r(0.3));
        assert!(!a.has(Label::IntuitionisticIncomplete));
        assert!(!a.has(Label::Paraconsistent));
    }

    #[test]
    fn triple_examples() {
        let b = classify_triple(&interval_triple_b());
        assert!(b.has(Label::Paraconsistent));
        assert!(b.flags.is_empty());

        let point = classify_triple(&pt(0.5, 0.2, 0.3));
        assert_eq!(point, classify_point(r(0.5), r(0.2), r(0.3)));

        let cube = NeutroTriple::strict(
            IntervalUnion::span(0.0, 1.0).unwrap(),
            IntervalUnion::span(0.0, 1.0).unwrap(),
            IntervalUnion::span(0.0, 1.0).unwrap(),
        )
        .unwrap();
        let c = classify_triple(&cube);
        assert!(c.has(Label::Paraconsistent));
        assert!(c.flags.is_empty());
    }

    #[test]
    fn ifs_representability() {
        assert!(is_ifs_representable(&pt(0.5, 0.2, 0.3)));
        assert!(!is_ifs_representable(&interval_triple_b()));
        let absolute = NeutroTriple::strict(
            IntervalUnion::singleton(NonStdValue::ONE_PLUS),
            IntervalUnion::point(0.0),
            IntervalUnion::point(0.0),
        )
        .unwrap();
        assert!(!is_ifs_representable(&absolute));
    }

    #[test]
    fn incomplete_and_paraconsistent_exclude_each_other() {
        for t in 0..=10 {
            for i in 0..=10 {
                for f in 0..=10 {
                    let c = classify_point(
                        r(t as f64 / 10.0),
                        r(i as f64 / 10.0),
                        r(f as f64 / 10.0),
                    );
                    assert!(
                        !(c.has(Label::IntuitionisticIncomplete) && c.has(Label::Paraconsistent))
                    );
                }
            }
        }
    }

    #[test]
    fn simplex_grid_is_ifs_consistent() {
        // t + i + f = 1 with i < 1 and components in [0, 1]
        let steps: i32 = 20;
        for ti in 0..=steps {
            for ii in 0..steps {
                let fi = steps - ti - ii;
                if fi < 0 {
                    continue;
                }
                let t = ti as f64 / steps as f64;
                let i = ii as f64 / steps as f64;
                let f = fi as f64 / steps as f64;
                let c = classify_point(r(t), r(i), r(f));
                assert!(c.has(Label::IfsConsistent), "t={t} i={i} f={f}: {c}");
            }
        }
    }

    #[test]
    fn flags_turn_on_monotonically() {
        let base = classify_point(r(0.8), r(0.3), r(0.2));
        let raised = classify_point(r(1.2), r(0.3), r(0.2));
        assert!(!base.flagged(Flag::Overincluded));
        assert!(raised.flagged(Flag::Overincluded));
        assert!(base.flags.is_subset(&raised.flags));
        assert!(raised.has(Label::Tautological));

        // interval route: clamped overflow surfaces as 1^+ and still flags
        let spill = NeutroTriple::clamping(
            IntervalUnion::span(0.9, 1.4).unwrap(),
            IntervalUnion::span(0.0, 0.1).unwrap(),
            IntervalUnion::point(0.2),
        );
        assert!(classify_triple(&spill).flagged(Flag::Overincluded));
    }

    #[test]
    fn ifs_representable_implies_consistent_label() {
        // interval record with sup sum exactly one
        let x = NeutroTriple::strict(
            IntervalUnion::span(0.1, 0.4).unwrap(),
            IntervalUnion::span(0.0, 0.35).unwrap(),
            IntervalUnion::span(0.2, 0.25).unwrap(),
        )
        .unwrap();
        assert!(is_ifs_representable(&x));
        assert!(classify_triple(&x).has(Label::IfsConsistent));
    }

    #[test]
    fn paradoxist_element_is_representable() {
        let p = classify_point(r(1.0), r(0.6), r(1.0));
        assert!(p.has(Label::Paradoxist));
        assert!(!p.has(Label::Dialetheist));
    }

    #[test]
    fn overindeterminate_is_a_flag_not_paradoxist() {
        let c = classify_point(r(0.2), r(1.3), r(0.2));
        assert!(c.flagged(Flag::Overindeterminate));
        assert!(!c.has(Label::Paradoxist));
    }

    #[test]
    fn tautological_disjunction() {
        assert!(classify_point(r(0.5), r(-0.2), r(0.5)).has(Label::Tautological));
        assert!(classify_point(r(1.2), r(0.0), r(0.0)).has(Label::Tautological));
    }

    #[test]
    fn rendering_is_stable() {
        let c = classify_point(r(0.1), r(0.3), r(0.4));
        assert_eq!(c.to_string(), "intuitionistic_incomplete, faillibilist");

        let flagged = classify_point(r(1.2), r(0.0), r(-0.1));
        assert_eq!(flagged.to_string(), "paraconsistent, tautological [overincluded, underfalse]");
    }
}
