//! Exact arithmetic for bound values: rationals and quantities of the form
//! (a − √r)/d. Comparisons against integer invariant values go through the
//! equivalent squared integer inequality, never floating point, so tightness
//! detection is exact.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactValue {
    /// num/den with den > 0, fully reduced.
    Rational { num: i64, den: i64 },
    /// (add − √rad)/den with rad ≥ 0 not a perfect square, den > 0.
    Surd { add: i64, rad: i64, den: i64 },
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn isqrt(x: i64) -> i64 {
    debug_assert!(x >= 0);
    let mut r = (x as f64).sqrt() as i64;
    while r > 0 && r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

impl ExactValue {
    pub fn integer(v: i64) -> ExactValue {
        ExactValue::Rational { num: v, den: 1 }
    }

    pub fn rational(num: i64, den: i64) -> ExactValue {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        ExactValue::Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    /// (add − √rad)/den. Collapses to a rational when rad is a perfect
    /// square.
    pub fn sqrt_deficit(add: i64, rad: i64, den: i64) -> ExactValue {
        assert!(rad >= 0, "negative radicand");
        assert!(den > 0, "nonpositive denominator");
        let root = isqrt(rad);
        if root * root == rad {
            return ExactValue::rational(add - root, den);
        }
        ExactValue::Surd { add, rad, den }
    }

    /// Compares the exact value against an integer.
    pub fn cmp_int(&self, t: i64) -> Ordering {
        match *self {
            ExactValue::Rational { num, den } => num.cmp(&(t * den)),
            ExactValue::Surd { add, rad, den } => {
                // (add − √rad)/den vs t  ⇔  (add − t·den) vs √rad
                let s = add - t * den;
                if s < 0 {
                    Ordering::Less
                } else {
                    (s * s).cmp(&rad)
                }
            }
        }
    }

    pub fn eq_int(&self, t: i64) -> bool {
        self.cmp_int(t) == Ordering::Equal
    }

    /// Does `invariant ≤ value` hold?
    pub fn admits(&self, invariant: i64) -> bool {
        self.cmp_int(invariant) != Ordering::Less
    }

    pub fn approx(&self) -> f64 {
        match *self {
            ExactValue::Rational { num, den } => num as f64 / den as f64,
            ExactValue::Surd { add, rad, den } => (add as f64 - (rad as f64).sqrt()) / den as f64,
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExactValue::Rational { num, den: 1 } => write!(f, "{num}"),
            ExactValue::Rational { num, den } => write!(f, "{num}/{den}"),
            ExactValue::Surd { add, rad, den: 1 } => write!(f, "{add} - sqrt({rad})"),
            ExactValue::Surd { add, rad, den } => write!(f, "({add} - sqrt({rad}))/{den}"),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactValue", 2)?;
        s.serialize_field("exact", &self.to_string())?;
        s.serialize_field("approx", &self.approx())?;
        s.end()
    }
}
