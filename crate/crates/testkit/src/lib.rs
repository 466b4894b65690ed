//! Deterministic generators and brute-force oracles shared by the test
//! suites. Everything here is seeded, so failures reproduce exactly.
//!
//! The oracles are intentionally independent of the implementation paths
//! they cross-check: the Minkowski oracle samples operand sets on a dense
//! grid and inspects the raw image, and the scalar product oracle expands
//! `(a + bε)(c + dε)` symbolically before collapsing.

use neutrosophic::{IntervalUnion, NeutroTriple, NonStdValue, NsInterval};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Re-exported so downstream test suites use one rand version.
pub use rand;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn ns(std: f64, coeff: f64) -> NonStdValue {
    NonStdValue::new(std, coeff)
}

/// A canonical union with up to `max_parts` parts, standard endpoints in
/// [0, 1], arbitrary widths.
pub fn gen_unit_union(rng: &mut StdRng, max_parts: usize) -> IntervalUnion {
    let n = rng.gen_range(1..=max_parts);
    let parts = (0..n)
        .map(|_| {
            let a: f64 = rng.gen_range(0.0..=1.0);
            let b: f64 = rng.gen_range(0.0..=1.0);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            NsInterval::new(ns(lo, 0.0), ns(hi, 0.0)).unwrap()
        })
        .collect();
    IntervalUnion::canonicalize(parts).unwrap()
}

/// Like [`gen_unit_union`] but with narrow parts (width <= 0.04) separated
/// by clear gaps, so a dense-grid oracle stays cheap and cluster-free.
pub fn gen_small_union(rng: &mut StdRng, max_parts: usize) -> IntervalUnion {
    let n = rng.gen_range(1..=max_parts);
    let mut parts = Vec::with_capacity(n);
    let mut cursor: f64 = rng.gen_range(0.0..0.2);
    for _ in 0..n {
        let width = if rng.gen_bool(0.25) { 0.0 } else { rng.gen_range(0.0..=0.04) };
        let lo = cursor.min(0.95);
        let hi = (lo + width).min(1.0);
        parts.push(NsInterval::new(ns(lo, 0.0), ns(hi, 0.0)).unwrap());
        cursor = hi + rng.gen_range(0.05..0.2);
    }
    IntervalUnion::canonicalize(parts).unwrap()
}

/// A point record with standard components in [0, 1].
pub fn gen_point_triple(rng: &mut StdRng) -> NeutroTriple {
    NeutroTriple::point(
        rng.gen_range(0.0..=1.0),
        rng.gen_range(0.0..=1.0),
        rng.gen_range(0.0..=1.0),
    )
    .unwrap()
}

/// An interval record with standard endpoints in [0, 1].
pub fn gen_interval_triple(rng: &mut StdRng, max_parts: usize) -> NeutroTriple {
    NeutroTriple::strict(
        gen_unit_union(rng, max_parts),
        gen_unit_union(rng, max_parts),
        gen_unit_union(rng, max_parts),
    )
    .unwrap()
}

/// A record whose endpoints may carry infinitesimal coefficients from
/// {-1, 0, +1}, always inside `[0^-, 1^+]`.
pub fn gen_nonstd_triple(rng: &mut StdRng, max_parts: usize) -> NeutroTriple {
    let comp = |rng: &mut StdRng| {
        let n = rng.gen_range(1..=max_parts);
        let parts = (0..n)
            .map(|_| {
                let endpoint = |rng: &mut StdRng| {
                    let std: f64 = rng.gen_range(0.0..=1.0);
                    let coeff = *[-1.0, 0.0, 1.0].get(rng.gen_range(0..3)).unwrap();
                    ns(std, coeff).clamp_unit()
                };
                let a = endpoint(rng);
                let b = endpoint(rng);
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                NsInterval::new(lo, hi).unwrap()
            })
            .collect();
        IntervalUnion::canonicalize(parts).unwrap()
    };
    let t = comp(rng);
    let i = comp(rng);
    let f = comp(rng);
    NeutroTriple::strict(t, i, f).unwrap()
}

/// A record whose endpoints sit on the millesimal grid with coefficients in
/// {-1, 0, +1}: exactly the values a script literal can spell, which is what
/// text round-trip checks need.
pub fn gen_literal_triple(rng: &mut StdRng, max_parts: usize) -> NeutroTriple {
    let comp = |rng: &mut StdRng| {
        let n = rng.gen_range(1..=max_parts);
        let parts = (0..n)
            .map(|_| {
                let endpoint = |rng: &mut StdRng| {
                    let std = rng.gen_range(0..=1000) as f64 / 1000.0;
                    let coeff = *[-1.0, 0.0, 1.0].get(rng.gen_range(0..3)).unwrap();
                    ns(std, coeff).clamp_unit()
                };
                let a = endpoint(rng);
                let b = endpoint(rng);
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                NsInterval::new(lo, hi).unwrap()
            })
            .collect();
        IntervalUnion::canonicalize(parts).unwrap()
    };
    let t = comp(rng);
    let i = comp(rng);
    let f = comp(rng);
    NeutroTriple::strict(t, i, f).unwrap()
}

/// The scalar operations the Minkowski oracle can sample.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinkowskiOp {
    Add,
    Sub,
    Mul,
}

impl MinkowskiOp {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            MinkowskiOp::Add => a + b,
            MinkowskiOp::Sub => a - b,
            MinkowskiOp::Mul => a * b,
        }
    }
}

/// Grid points of a standard union at the given step, always including both
/// endpoints of every part.
pub fn sample_union(s: &IntervalUnion, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    for part in s.parts() {
        let (lo, hi) = (part.lo().std(), part.hi().std());
        let mut x = lo;
        while x < hi {
            out.push(x);
            x += step;
        }
        out.push(hi);
    }
    out
}

/// Dense image of `op` over all sample pairs of two standard unions.
pub fn dense_image(op: MinkowskiOp, s1: &IntervalUnion, s2: &IntervalUnion, step: f64) -> Vec<f64> {
    let xs = sample_union(s1, step);
    let ys = sample_union(s2, step);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &x in &xs {
        for &y in &ys {
            out.push(op.apply(x, y));
        }
    }
    out
}

/// Checks a computed union against the sampled image of the operation it
/// claims to be:
///
/// 1. coverage — every sampled value lies inside some part (inflated by
///    `tol`), so the result does not undershoot the true image;
/// 2. tightness — every part endpoint has a sampled value within `tol`, so
///    the result does not overshoot it either.
pub fn check_against_samples(
    result: &IntervalUnion,
    samples: &[f64],
    tol: f64,
) -> Result<(), String> {
    for &v in samples {
        let covered = result
            .parts()
            .iter()
            .any(|p| p.lo().std() - tol <= v && v <= p.hi().std() + tol);
        if !covered {
            return Err(format!("sampled value {v} escapes the computed parts"));
        }
    }
    for part in result.parts() {
        for endpoint in [part.lo().std(), part.hi().std()] {
            if !samples.iter().any(|&v| (v - endpoint).abs() <= tol) {
                return Err(format!("no sample within {tol} of computed endpoint {endpoint}"));
            }
        }
    }
    Ok(())
}

/// Symbolic two-term product: expands `(a + bε)(c + dε)` keeping the ε and
/// ε² coefficients separate, then applies the sign-preserving collapse. An
/// independent route for cross-checking scalar multiplication.
pub fn two_term_product(a: NonStdValue, b: NonStdValue) -> NonStdValue {
    let standard = a.std() * b.std();
    let first_order = a.std() * b.coeff() + b.std() * a.coeff();
    let second_order = a.coeff() * b.coeff();
    if first_order != 0.0 || second_order == 0.0 {
        ns(standard, first_order)
    } else {
        ns(standard, second_order)
    }
}

/// Absolute comparison at the crate's test tolerance.
pub fn value_close(a: NonStdValue, b: NonStdValue, tol: f64) -> bool {
    (a.std() - b.std()).abs() <= tol && (a.coeff() - b.coeff()).abs() <= tol
}

pub fn union_close(a: &IntervalUnion, b: &IntervalUnion, tol: f64) -> bool {
    a.parts().len() == b.parts().len()
        && a.parts().iter().zip(b.parts()).all(|(p, q)| {
            value_close(p.lo(), q.lo(), tol) && value_close(p.hi(), q.hi(), tol)
        })
}

pub fn triple_close(a: &NeutroTriple, b: &NeutroTriple, tol: f64) -> bool {
    union_close(a.t(), b.t(), tol)
        && union_close(a.i(), b.i(), tol)
        && union_close(a.f(), b.f(), tol)
}
