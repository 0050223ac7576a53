//! Riemann zeta and real Dirichlet L-values at integer arguments.
//!
//! Both reduce to sums `Σ_{m≥0} (d·m + r)^{-s}`, evaluated as a direct sum of
//! `terms` terms plus an Euler–Maclaurin tail. The summand is completely
//! monotone, so the remainder after the last Bernoulli correction is bounded
//! by the first omitted correction; that bound (plus a rounding allowance) is
//! reported with every value.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::real::Real;

/// A truncated series value with a rigorous bound on the discarded part.
#[derive(Clone, Debug)]
pub struct SeriesValue {
    pub value: Real,
    pub tail_bound: Real,
    pub terms: usize,
    pub corrections: usize,
}

/// Bernoulli numbers `B_0 ..= B_n` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b = Vec::with_capacity(n + 1);
    extend_bernoulli(&mut b, n);
    b
}

fn extend_bernoulli(b: &mut Vec<BigRational>, n: usize) {
    if b.is_empty() {
        b.push(BigRational::one());
    }
    for m in b.len()..=n {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
}

/// `B_n`, from a process-wide table that only ever grows.
fn bernoulli(n: usize) -> BigRational {
    static TABLE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());
    let mut table = TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if table.len() <= n {
        extend_bernoulli(&mut table, n);
    }
    table[n].clone()
}

fn ratio_to_real(q: &BigRational, digits: u32) -> Real {
    Real::from_ratio(q.numer().clone(), q.denom().clone(), digits).expect("nonzero denominator")
}

fn rising(s: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(s + i))
}

/// `Σ_{m≥0} (d·m + r)^{-s}` with `terms` explicit terms.
fn progression_sum(s: u32, d: u32, r: u32, terms: usize, digits: u32) -> SeriesValue {
    let work = digits + 10;
    let mut value = Real::zero(work);
    for m in 0..terms as u64 {
        let base = BigInt::from(u64::from(d) * m + u64::from(r));
        value = value + Real::from_ratio(1, base.pow(s), work).expect("positive base");
    }
    let x = BigInt::from(u64::from(d) * terms as u64 + u64::from(r));
    // ∫_N^∞ f + f(N)/2
    value = value + Real::from_ratio(1, BigInt::from(d) * BigInt::from(s - 1) * x.pow(s - 1), work).unwrap();
    value = value + Real::from_ratio(1, BigInt::from(2) * x.pow(s), work).unwrap();

    let threshold = Real::from_ratio(1, BigInt::from(10).pow(digits + 5), work).unwrap();
    let max_corrections = 4 * digits as usize + 40;
    let mut factorial = BigInt::one();
    let mut j = 1usize;
    let correction = |j: usize, factorial: &BigInt| -> BigRational {
        let k = 2 * j as u32;
        // B_{2j}/(2j)! · (s)_{2j-1} · d^{2j-1} · x^{-(s+2j-1)}
        let num = rising(s, k - 1) * BigInt::from(d).pow(k - 1);
        let den = factorial * x.pow(s + k - 1);
        bernoulli(2 * j) * BigRational::new(num, den)
    };
    factorial *= BigInt::from(2);
    let mut term = correction(j, &factorial);
    loop {
        value = value + ratio_to_real(&term, work);
        factorial *= BigInt::from((2 * j + 1) * (2 * j + 2));
        j += 1;
        let next = correction(j, &factorial);
        // The expansion is asymptotic: stop once terms are small enough or
        // start growing again.
        let done = ratio_to_real(&term.abs(), work) < threshold || next.abs() >= term.abs() || j > max_corrections;
        term = next;
        if done {
            break;
        }
    }
    let omitted = ratio_to_real(&term.abs(), work);
    // Each of the `terms + j + 2` additions truncates by at most one ulp.
    let ulps = BigInt::from(terms + j + 4);
    let rounding = Real::from_ratio(ulps, BigInt::one() << Real::zero(work).bits(), work).unwrap();
    SeriesValue { value, tail_bound: omitted + rounding, terms, corrections: j - 1 }
}

fn default_terms(digits: u32) -> usize {
    digits as usize + 10
}

/// `ζ(k)` from `terms` explicit terms plus the Euler–Maclaurin tail.
pub fn zeta_series(k: u32, terms: usize, digits: u32) -> Result<SeriesValue> {
    if k < 2 {
        return Err(Error::Domain(format!("zeta({k}) diverges; need k >= 2")));
    }
    if terms == 0 {
        return Err(Error::Domain("need at least one explicit term".into()));
    }
    Ok(progression_sum(k, 1, 1, terms, digits))
}

pub fn zeta(k: u32, digits: u32) -> Result<Real> {
    Ok(zeta_series(k, default_terms(digits), digits)?.value)
}

fn is_odd_prime(d: u32) -> bool {
    d >= 3 && d % 2 == 1 && (3..).step_by(2).take_while(|p| p * p <= d).all(|p| !d.is_multiple_of(p))
}

/// Legendre symbol `(a/d)` for an odd prime `d`, via Euler's criterion.
pub fn legendre_symbol(a: i64, d: u32) -> Result<i32> {
    if !is_odd_prime(d) {
        return Err(Error::Domain(format!("Legendre symbol needs an odd prime modulus, got {d}")));
    }
    let a = BigInt::from(a).mod_floor(&BigInt::from(d));
    let e = a.modpow(&BigInt::from((d - 1) / 2), &BigInt::from(d));
    Ok(if e.is_zero() {
        0
    } else if e.is_one() {
        1
    } else {
        -1
    })
}

/// `L(s, (·/d)) = Σ (n/d) n^{-s}`, summed by residue class.
pub fn dirichlet_l_series(s: u32, d: u32, terms: usize, digits: u32) -> Result<SeriesValue> {
    if s < 2 {
        return Err(Error::Domain(format!("L-series needs s >= 2, got {s}")));
    }
    if !is_odd_prime(d) {
        return Err(Error::Domain(format!("unsupported modulus {d}; need an odd prime")));
    }
    let work = digits + 10;
    let mut value = Real::zero(work);
    let mut bound = Real::zero(work);
    let mut corrections = 0;
    for r in 1..d {
        let chi = legendre_symbol(i64::from(r), d)?;
        let part = progression_sum(s, d, r, terms, digits);
        value = if chi > 0 { value + part.value } else { value - part.value };
        bound = bound + part.tail_bound;
        corrections = corrections.max(part.corrections);
    }
    Ok(SeriesValue { value, tail_bound: bound, terms, corrections })
}

pub fn dirichlet_l(s: u32, d: u32, digits: u32) -> Result<Real> {
    Ok(dirichlet_l_series(s, d, default_terms(digits), digits)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(8);
        let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[3], q(0, 1));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = zeta(2, 30).unwrap();
        assert_eq!(z.to_decimal(25), "1.6449340668482264364724151");
    }

    #[test]
    fn zeta_three() {
        let z = zeta(3, 40).unwrap();
        assert_eq!(z.to_decimal(35), "1.20205690315959428539973816151144999");
    }

    #[test]
    fn zeta_domain() {
        assert!(matches!(zeta(1, 20), Err(Error::Domain(_))));
    }

    #[test]
    fn legendre_mod_five() {
        let got: Vec<i32> = (0..10).map(|a| legendre_symbol(a, 5).unwrap()).collect();
        assert_eq!(got, vec![0, 1, -1, -1, 1, 0, 1, -1, -1, 1]);
        assert_eq!(legendre_symbol(-1, 5).unwrap(), 1);
        assert!(legendre_symbol(1, 9).is_err());
        assert!(legendre_symbol(1, 2).is_err());
    }

    #[test]
    fn l_three_five() {
        let l = dirichlet_l(3, 5, 40).unwrap();
        assert_eq!(l.to_decimal(34), "0.8548247666485430102356900835381376");
        assert!(dirichlet_l(3, 6, 20).is_err());
    }

    #[test]
    fn doubling_terms_stays_inside_bound() {
        for digits in [15, 30, 60] {
            let a = zeta_series(3, 20, digits).unwrap();
            let b = zeta_series(3, 40, digits).unwrap();
            assert!((&a.value - &b.value).abs() <= &a.tail_bound + &b.tail_bound);
        }
    }
}
