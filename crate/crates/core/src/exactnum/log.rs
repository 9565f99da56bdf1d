//! Directed-rounding natural logarithm of positive rationals.
//!
//! Works in fixed point at scale `2^F` with `F = bits + 32` guard bits.
//! `ln x = e ln 2 + 2 atanh(y)` with `y = (m-1)/(m+1)` for the mantissa
//! `m = x / 2^e` in `[1, 2)`, so `y` stays in `[0, 1/3]` and the atanh series
//! gains more than three bits per term. Lower bounds use floor rounding
//! throughout, upper bounds ceil rounding plus an explicit tail bound, so the
//! returned interval always contains the exact logarithm.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use super::interval::{Rat, RatInterval};

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    // Euclidean-style floor division for positive b.
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.is_negative() {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.is_positive() {
        q + 1
    } else {
        q
    }
}

/// Fixed-point mantissas at scale `2^f`, with directed rounding.
struct Fixed {
    f: u32,
}

impl Fixed {
    fn one(&self) -> BigInt {
        BigInt::one() << self.f as usize
    }

    fn from_rat_down(&self, x: &Rat) -> BigInt {
        floor_div(&(x.numer() << self.f as usize), x.denom())
    }

    fn from_rat_up(&self, x: &Rat) -> BigInt {
        ceil_div(&(x.numer() << self.f as usize), x.denom())
    }

    fn to_rat(&self, m: &BigInt) -> Rat {
        Rat::new(m.clone(), self.one())
    }

    fn mul_down(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.f as usize
    }

    fn mul_up(&self, a: &BigInt, b: &BigInt) -> BigInt {
        ceil_div(&(a * b), &self.one())
    }
}

/// atanh at fixed point for `0 <= y <= 0.34`; returns scaled [lo, hi].
fn atanh_fixed(fx: &Fixed, y_lo: &BigInt, y_hi: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!y_lo.is_negative());
    // Lower bound: floor everything; dropping the tail only helps.
    let y2_lo = fx.mul_down(y_lo, y_lo);
    let mut acc_lo = y_lo.clone();
    let mut pow = y_lo.clone();
    let mut k: u64 = 3;
    loop {
        pow = fx.mul_down(&pow, &y2_lo);
        if pow.is_zero() {
            break;
        }
        let term = floor_div(&pow, &BigInt::from(k));
        if term.is_zero() {
            break;
        }
        acc_lo += term;
        k += 2;
    }
    // Upper bound: ceil everything; once a term is down to one ulp the true
    // tail is below (y^2/(1-y^2)) * term <= term/7 for y <= 0.34, so two
    // extra ulps cover it.
    let y2_hi = fx.mul_up(y_hi, y_hi);
    let mut acc_hi = y_hi.clone();
    let mut pow = y_hi.clone();
    let mut k: u64 = 3;
    loop {
        pow = fx.mul_up(&pow, &y2_hi);
        let term = ceil_div(&pow, &BigInt::from(k));
        acc_hi += &term;
        if term <= BigInt::one() {
            break;
        }
        k += 2;
    }
    acc_hi += 2;
    (acc_lo, acc_hi)
}

/// Enclosure of ln 2 at `f` fractional bits (scaled integers).
fn ln2_fixed(fx: &Fixed) -> (BigInt, BigInt) {
    // ln 2 = 2 atanh(1/3)
    let third_lo = floor_div(&fx.one(), &BigInt::from(3));
    let third_hi = ceil_div(&fx.one(), &BigInt::from(3));
    let (lo, hi) = atanh_fixed(fx, &third_lo, &third_hi);
    (lo << 1, hi << 1)
}

static LN2_CACHE: Lazy<Mutex<HashMap<u32, (BigInt, BigInt)>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn ln2_cached(fx: &Fixed) -> (BigInt, BigInt) {
    let mut cache = LN2_CACHE.lock().unwrap();
    cache.entry(fx.f).or_insert_with(|| ln2_fixed(fx)).clone()
}

/// Certified enclosure of `ln x` for a positive rational `x`, with interval
/// width of order `2^-bits`.
pub fn ln_interval(x: &Rat, bits: u32) -> RatInterval {
    assert!(x.is_positive(), "ln_interval requires a positive argument");
    let fx = Fixed { f: bits + 32 };
    if x.is_one() {
        return RatInterval::point(Rat::zero());
    }

    // Normalize to m = x / 2^e in [1, 2).
    let mut e: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = Rat::from_integer(BigInt::from(2));
    let mut m = if e >= 0 {
        x / Rat::from_integer(BigInt::one() << e as usize)
    } else {
        x * Rat::from_integer(BigInt::one() << (-e) as usize)
    };
    while m < Rat::one() {
        m = &m * &two;
        e -= 1;
    }
    while m >= two {
        m = &m / &two;
        e += 1;
    }

    // y = (m-1)/(m+1) in [0, 1/3)
    let y = (&m - Rat::one()) / (&m + Rat::one());
    let y_lo = fx.from_rat_down(&y);
    let y_hi = fx.from_rat_up(&y);
    let (a_lo, a_hi) = atanh_fixed(&fx, &y_lo, &y_hi);
    let (lnm_lo, lnm_hi) = (a_lo << 1, a_hi << 1);

    let (l2_lo, l2_hi) = ln2_cached(&fx);
    let eb = BigInt::from(e);
    let (e_lo, e_hi) = if e >= 0 {
        (&eb * &l2_lo, &eb * &l2_hi)
    } else {
        (&eb * &l2_hi, &eb * &l2_lo)
    };
    RatInterval::new(fx.to_rat(&(e_lo + lnm_lo)), fx.to_rat(&(e_hi + lnm_hi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval::{pow2, rat_to_f64};
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ln_one_is_zero() {
        let i = ln_interval(&Rat::one(), 64);
        assert!(i.is_point() && i.lo.is_zero());
    }

    #[test]
    fn ln_two_digits() {
        let i = ln_interval(&r(2, 1), 128);
        // ln 2 = 0.693147180559945309417232121458...
        let reference = r(6931471805599453094, 1) / Rat::from_integer(BigInt::from(10).pow(19));
        assert!(i.lo <= reference && reference <= i.hi);
        assert!(i.width() < pow2(-120));
    }

    #[test]
    fn ln_reciprocal_negates() {
        let a = ln_interval(&r(7, 2), 96);
        let b = ln_interval(&r(2, 7), 96);
        let sum = a.add(&b);
        assert!(sum.contains(&Rat::zero()));
        assert!(sum.width() < pow2(-90));
    }

    #[test]
    fn ln_matches_f64_on_samples() {
        for (n, d) in [(3, 1), (10, 1), (1, 5), (355, 113), (1, 1024), (99, 7)] {
            let x = r(n, d);
            let i = ln_interval(&x, 80);
            let f = (n as f64 / d as f64).ln();
            let (lo, hi) = (rat_to_f64(&i.lo), rat_to_f64(&i.hi));
            assert!(lo - 1e-12 <= f && f <= hi + 1e-12, "ln({n}/{d}): {lo} {f} {hi}");
        }
    }

    #[test]
    fn ln_directed_width() {
        let x = r(123456789, 1000);
        for bits in [32u32, 64, 128, 256] {
            let i = ln_interval(&x, bits);
            assert!(i.width() < pow2(-(bits as i64)));
        }
    }
}
