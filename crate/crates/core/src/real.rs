//! Arbitrary-precision binary fixed-point reals.
//!
//! A [`Real`] stores `mantissa / 2^bits`. All values produced by one
//! computation share the same `bits`; mixing precisions rescales to the finer
//! one. This is enough for the constants this crate needs (nested square
//! roots, rationals, zeta and L-series) and keeps the arithmetic exact apart
//! from the final truncation of each multiply, divide and square root.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Guard bits added on top of the requested decimal precision.
const GUARD_BITS: u32 = 64;

/// Number of binary digits needed for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

#[derive(Clone, Debug)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

impl Real {
    pub fn zero(digits: u32) -> Self {
        Real { mantissa: BigInt::zero(), bits: bits_for_digits(digits) }
    }

    pub fn from_int(value: impl Into<BigInt>, digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        Real { mantissa: value.into() << bits, bits }
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, digits: u32) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let bits = bits_for_digits(digits);
        Ok(Real { mantissa: (num.into() << bits) / den, bits })
    }

    /// Parses a plain decimal literal such as `0.0075726186` or `-12.5e-3`.
    pub fn parse_decimal(text: &str, digits: u32) -> Result<Self> {
        let bad = || Error::Syntax { offset: 0, message: format!("invalid decimal literal `{text}`") };
        let (body, exp) = match text.find(['e', 'E']) {
            Some(i) => (&text[..i], text[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (text, 0),
        };
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let all = format!("{int_part}{frac_part}");
        let mut num: BigInt = all.parse().map_err(|_| bad())?;
        if neg {
            num = -num;
        }
        let scale = exp - frac_part.len() as i32;
        let ten = BigInt::from(10);
        if scale >= 0 {
            Ok(Real::from_int(num * ten.pow(scale as u32), digits))
        } else {
            Real::from_ratio(num, ten.pow((-scale) as u32), digits)
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Decimal digits carried (excluding guard bits).
    pub fn digits(&self) -> u32 {
        (f64::from(self.bits.saturating_sub(GUARD_BITS)) / std::f64::consts::LOG2_10).floor() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Self {
        Real { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    fn rescaled(&self, bits: u32) -> BigInt {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (bits - self.bits),
            Ordering::Less => &self.mantissa >> (self.bits - bits),
        }
    }

    fn aligned(&self, other: &Real) -> (BigInt, BigInt, u32) {
        let bits = self.bits.max(other.bits);
        (self.rescaled(bits), other.rescaled(bits), bits)
    }

    pub fn checked_div(&self, other: &Real) -> Result<Real> {
        let (a, b, bits) = self.aligned(other);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Real { mantissa: (a << bits) / b, bits })
    }

    pub fn sqrt(&self) -> Result<Real> {
        if self.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        Ok(Real { mantissa: (&self.mantissa << self.bits).sqrt(), bits: self.bits })
    }

    pub fn powi(&self, exp: u32) -> Real {
        let mut acc = Real { mantissa: BigInt::one() << self.bits, bits: self.bits };
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        // Keep the final scaling inside the normal f64 exponent range.
        const MAX_SHIFT: u32 = 900;
        let (m, bits) = if self.bits > MAX_SHIFT {
            (&self.mantissa >> (self.bits - MAX_SHIFT), MAX_SHIFT)
        } else {
            (self.mantissa.clone(), self.bits)
        };
        m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(bits as i32))
    }

    /// Decimal expansion truncated (towards zero) to `places` fractional digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scaled: BigInt = (self.mantissa.abs() * BigInt::from(10).pow(places as u32)) >> self.bits;
        let mut digits = scaled.to_string();
        if digits.len() <= places {
            digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
        }
        let split = digits.len() - places;
        let sign = if self.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{digits}")
        } else {
            format!("{sign}{}.{}", &digits[..split], &digits[split..])
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        Some(a.cmp(&b))
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        let (a, b, bits) = self.aligned(rhs);
        Real { mantissa: a + b, bits }
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        let (a, b, bits) = self.aligned(rhs);
        Real { mantissa: a - b, bits }
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        let (a, b, bits) = self.aligned(rhs);
        Real { mantissa: (a * b) >> bits, bits }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mantissa: -&self.mantissa, bits: self.bits }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real { (&self).$m(&rhs) }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().unwrap_or(self.digits() as usize);
        f.write_str(&self.to_decimal(places))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_digits() {
        let two = Real::from_int(2, 50);
        let root = two.sqrt().unwrap();
        assert_eq!(root.to_decimal(48), "1.414213562373095048801688724209698078569671875376");
    }

    #[test]
    fn ratio_and_division() {
        let third = Real::from_ratio(1, 3, 30).unwrap();
        assert_eq!(third.to_decimal(10), "0.3333333333");
        let back = Real::from_int(1, 30).checked_div(&third).unwrap();
        assert!((back.to_f64() - 3.0).abs() < 1e-25);
        assert_eq!(Real::from_ratio(1, 0, 10), Err(Error::DivisionByZero));
    }

    #[test]
    fn negative_sqrt_rejected() {
        assert_eq!(Real::from_int(-1, 20).sqrt(), Err(Error::NegativeSqrt));
    }

    #[test]
    fn decimal_literal() {
        let v = Real::parse_decimal("0.0075726186", 30).unwrap();
        assert!((v.to_f64() - 0.0075726186).abs() < 1e-18);
        let w = Real::parse_decimal("-1.5e2", 30).unwrap();
        assert_eq!(w.to_f64(), -150.0);
        assert!(Real::parse_decimal("1.2.3", 30).is_err());
        assert!(Real::parse_decimal(".", 30).is_err());
    }

    #[test]
    fn small_negative_decimal_keeps_sign() {
        let v = Real::from_ratio(-1, 8, 20).unwrap();
        assert_eq!(v.to_decimal(3), "-0.125");
    }

    #[test]
    fn mixed_precision_aligns() {
        let a = Real::from_ratio(1, 7, 10).unwrap();
        let b = Real::from_ratio(1, 7, 60).unwrap();
        assert!(((&a - &b).to_f64()).abs() < 1e-12);
    }
}
