//! Scalars of the form `r + k·ε`: a real standard part plus a first-order
//! infinitesimal coefficient. This is enough to house the boundary values
//! `0^-` and `1^+` of the non-standard unit interval and everything between
//! them, with a total lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A non-standard scalar `std + coeff·ε`.
///
/// Terms of order ε² and higher are not tracked; multiplication collapses a
/// surviving second-order term into the ε slot so that its sign is kept (see
/// [`Mul`]). Both fields must be finite.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonStdValue {
    std: f64,
    coeff: f64,
}

impl NonStdValue {
    pub const ZERO: NonStdValue = NonStdValue { std: 0.0, coeff: 0.0 };
    pub const ONE: NonStdValue = NonStdValue { std: 1.0, coeff: 0.0 };
    /// `0^-`, infinitesimally below zero.
    pub const ZERO_MINUS: NonStdValue = NonStdValue { std: 0.0, coeff: -1.0 };
    /// `1^+`, infinitesimally above one.
    pub const ONE_PLUS: NonStdValue = NonStdValue { std: 1.0, coeff: 1.0 };

    pub fn new(std: f64, coeff: f64) -> Self {
        assert!(
            std.is_finite() && coeff.is_finite(),
            "non-finite non-standard value ({std}, {coeff})"
        );
        NonStdValue { std, coeff }
    }

    /// A plain real `r`, i.e. `(r, 0)`.
    pub fn real(r: f64) -> Self {
        Self::new(r, 0.0)
    }

    pub fn std(self) -> f64 {
        self.std
    }

    pub fn coeff(self) -> f64 {
        self.coeff
    }

    /// True when the value carries no infinitesimal part.
    pub fn is_standard(self) -> bool {
        self.coeff == 0.0
    }

    /// Division by a non-zero real.
    pub fn div_scalar(self, k: f64) -> Result<Self> {
        if k == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(self.std / k, self.coeff / k))
    }

    /// Replaces values below `0^-` with `0^-` and above `1^+` with `1^+`;
    /// the boundary values themselves pass through unchanged.
    pub fn clamp_unit(self) -> Self {
        if self < Self::ZERO_MINUS {
            Self::ZERO_MINUS
        } else if self > Self::ONE_PLUS {
            Self::ONE_PLUS
        } else {
            self
        }
    }

    /// Both fields rounded to 12 decimal places. Classification predicates
    /// compare snapped values so that short arithmetic chains stay exact.
    pub fn snapped(self) -> Self {
        Self::new(round12(self.std), round12(self.coeff))
    }
}

fn round12(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    // normalize -0.0 so comparisons and rendering stay sign-stable
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl Add for NonStdValue {
    type Output = NonStdValue;

    fn add(self, rhs: NonStdValue) -> NonStdValue {
        NonStdValue::new(self.std + rhs.std, self.coeff + rhs.coeff)
    }
}

impl Sub for NonStdValue {
    type Output = NonStdValue;

    fn sub(self, rhs: NonStdValue) -> NonStdValue {
        NonStdValue::new(self.std - rhs.std, self.coeff - rhs.coeff)
    }
}

impl Mul for NonStdValue {
    type Output = NonStdValue;

    /// `(a + bε)(c + dε) = ac + (ad + bc)ε + bd·ε²`. The ε² term is dropped
    /// unless the first-order coefficient vanishes while `bd` does not, in
    /// which case `bd` takes the ε slot: the order collapses but the sign of
    /// the offset from `ac` is preserved (so `0^- · 0^-` stays above zero).
    fn mul(self, rhs: NonStdValue) -> NonStdValue {
        let std = self.std * rhs.std;
        let first = self.std * rhs.coeff + rhs.std * self.coeff;
        let second = self.coeff * rhs.coeff;
        let coeff = if first == 0.0 && second != 0.0 { second } else { first };
        NonStdValue::new(std, coeff)
    }
}

impl Eq for NonStdValue {}

impl PartialOrd for NonStdValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NonStdValue {
    /// Lexicographic on `(std, coeff)`: the standard part dominates and the
    /// infinitesimal coefficient breaks ties.
    fn cmp(&self, other: &Self) -> Ordering {
        // fields are finite by construction, so partial_cmp cannot fail
        self.std
            .partial_cmp(&other.std)
            .expect("finite std")
            .then(self.coeff.partial_cmp(&other.coeff).expect("finite coeff"))
    }
}

impl fmt::Display for NonStdValue {
    /// Plain reals render as decimals ("0.5"); values with an infinitesimal
    /// part carry a caret suffix by sign ("0^-", "1^+"). The coefficient
    /// magnitude only shows in debug output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff == 0.0 {
            write!(f, "{}", fmt_decimal(self.std))
        } else if self.coeff > 0.0 {
            write!(f, "{}^+", fmt_decimal(self.std))
        } else {
            write!(f, "{}^-", fmt_decimal(self.std))
        }
    }
}

impl fmt::Debug for NonStdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{:+}", self.std, self.coeff)
    }
}

/// Decimal rendering used everywhere values surface as text: fixed to 12
/// places, trailing zeros trimmed. Reparsing the result yields a value within
/// 5e-13 of the original, and rendering is idempotent under reparse.
pub(crate) fn fmt_decimal(x: f64) -> String {
    let mut s = format!("{:.12}", x);
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}
