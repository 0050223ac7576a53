//! Small-denominator rational fitting by continued-fraction convergents.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub const MAX_DENOMINATOR: i64 = 320;
pub const RESIDUAL_GATE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(pub Ratio<i64>);

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        Fraction(Ratio::new(num, den))
    }

    pub fn to_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A fitted fraction and how far the value is from it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Fit {
    pub fraction: Fraction,
    pub residual: f64,
}

/// Last convergent of `x` with denominator ≤ `max_den`.
pub fn best_convergent(x: f64, max_den: i64) -> Option<Fit> {
    if !x.is_finite() || max_den < 1 {
        return None;
    }
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut rest = x;
    let mut best = None;
    for _ in 0..64 {
        let a = rest.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let (h2, k2) = (a.checked_mul(h1)?.checked_add(h0)?, a.checked_mul(k1)?.checked_add(k0)?);
        if k2 > max_den {
            break;
        }
        let q = Fraction::new(h2, k2);
        best = Some(Fit { fraction: q, residual: (x - q.to_f64()).abs() });
        let frac = rest - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        rest = 1.0 / frac;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    best
}

/// Fits `x` and keeps the fit only when it passes the residual gate.
pub fn fit(x: f64) -> (Option<Fraction>, f64) {
    match best_convergent(x, MAX_DENOMINATOR) {
        Some(f) if f.residual <= RESIDUAL_GATE => (Some(f.fraction), f.residual),
        Some(f) => (None, f.residual),
        None => (None, f64::NAN),
    }
}
