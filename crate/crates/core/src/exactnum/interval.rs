//! Rational intervals and boxes.
//!
//! Endpoints are exact rationals; every operation returns an interval that
//! contains the exact image of its inputs. `round_out` trims endpoint bit
//! growth by widening to dyadic bounds, which keeps deep refinement loops
//! from dragging multi-kilobit numerators around.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used everywhere in the crate.
pub type Rat = BigRational;

pub(crate) fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `2^k` for a possibly negative exponent.
pub(crate) fn pow2(k: i64) -> Rat {
    if k >= 0 {
        Rat::from_integer(BigInt::one() << k as usize)
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (-k) as usize)
    }
}

/// Largest multiple of `2^-bits` that is `<= x`.
pub(crate) fn dyadic_floor(x: &Rat, bits: u32) -> Rat {
    let scaled = x * pow2(bits as i64);
    Rat::new(scaled.floor().to_integer(), BigInt::one() << bits as usize)
}

/// Smallest multiple of `2^-bits` that is `>= x`.
pub(crate) fn dyadic_ceil(x: &Rat, bits: u32) -> Rat {
    let scaled = x * pow2(bits as i64);
    Rat::new(scaled.ceil().to_integer(), BigInt::one() << bits as usize)
}

pub(crate) fn rat_to_f64(x: &Rat) -> f64 {
    // Good enough for seeding; exactness is never needed here.
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 62).max(0);
    let n = (num >> shift as usize)
        .to_string()
        .parse::<f64>()
        .unwrap_or(0.0);
    let d = (den >> shift as usize)
        .to_string()
        .parse::<f64>()
        .unwrap_or(1.0);
    if d == 0.0 {
        0.0
    } else {
        n / d
    }
}

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn from_i64(lo: i64, hi: i64) -> Self {
        RatInterval::new(rat_i64(lo), rat_i64(hi))
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / rat_i64(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn excludes_zero(&self) -> bool {
        self.strictly_positive() || self.strictly_negative()
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RatInterval { lo, hi })
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &RatInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn add_rat(&self, x: &Rat) -> RatInterval {
        RatInterval { lo: &self.lo + x, hi: &self.hi + x }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn mul_rat(&self, x: &Rat) -> RatInterval {
        if x.is_negative() {
            RatInterval { lo: &self.hi * x, hi: &self.lo * x }
        } else {
            RatInterval { lo: &self.lo * x, hi: &self.hi * x }
        }
    }

    /// Tight image of `x^2` over the interval.
    pub fn square(&self) -> RatInterval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if !self.lo.is_negative() {
            RatInterval { lo: a, hi: b }
        } else if !self.hi.is_positive() {
            RatInterval { lo: b, hi: a }
        } else {
            RatInterval { lo: Rat::zero(), hi: if a >= b { a } else { b } }
        }
    }

    /// Image of `|x|` over the interval.
    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let a = -self.lo.clone();
            RatInterval {
                lo: Rat::zero(),
                hi: if a >= self.hi { a } else { self.hi.clone() },
            }
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> RatInterval {
        debug_assert!(self.excludes_zero());
        RatInterval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    /// Widen outward to dyadic endpoints with `bits` fractional bits.
    pub fn round_out(&self, bits: u32) -> RatInterval {
        RatInterval { lo: dyadic_floor(&self.lo, bits), hi: dyadic_ceil(&self.hi, bits) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rat_to_f64(&self.lo), rat_to_f64(&self.hi))
    }
}

/// Axis-aligned rational rectangle in the complex plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl ComplexBox {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexBox { re: RatInterval::point(re), im: RatInterval::point(im) }
    }

    /// Max of the two side lengths.
    pub fn width(&self) -> Rat {
        let wr = self.re.width();
        let wi = self.im.width();
        if wr >= wi {
            wr
        } else {
            wi
        }
    }

    pub fn mid(&self) -> (Rat, Rat) {
        (self.re.mid(), self.im.mid())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn add(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn mul(&self, other: &ComplexBox) -> ComplexBox {
        let ac = self.re.mul(&other.re);
        let bd = self.im.mul(&other.im);
        let ad = self.re.mul(&other.im);
        let bc = self.im.mul(&other.re);
        ComplexBox { re: ac.sub(&bd), im: ad.add(&bc) }
    }

    pub fn mul_point(&self, re: &Rat, im: &Rat) -> ComplexBox {
        self.mul(&ComplexBox::point(re.clone(), im.clone()))
    }

    /// Enclosure of `|z|^2 = re^2 + im^2` over the box.
    pub fn norm_sq(&self) -> RatInterval {
        self.re.square().add(&self.im.square())
    }

    pub fn contains(&self, re: &Rat, im: &Rat) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_box(&self, other: &ComplexBox) -> bool {
        self.re.contains_interval(&other.re) && self.im.contains_interval(&other.im)
    }

    /// Strict containment in the interior.
    pub fn contains_box_interior(&self, other: &ComplexBox) -> bool {
        self.re.lo < other.re.lo
            && other.re.hi < self.re.hi
            && self.im.lo < other.im.lo
            && other.im.hi < self.im.hi
    }

    pub fn is_disjoint(&self, other: &ComplexBox) -> bool {
        self.re.is_disjoint(&other.re) || self.im.is_disjoint(&other.im)
    }

    pub fn intersect(&self, other: &ComplexBox) -> Option<ComplexBox> {
        Some(ComplexBox {
            re: self.re.intersect(&other.re)?,
            im: self.im.intersect(&other.im)?,
        })
    }

    pub fn round_out(&self, bits: u32) -> ComplexBox {
        ComplexBox { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }

    pub fn inflate(&self, margin: &Rat) -> ComplexBox {
        ComplexBox {
            re: RatInterval::new(&self.re.lo - margin, &self.re.hi + margin),
            im: RatInterval::new(&self.im.lo - margin, &self.im.hi + margin),
        }
    }

    /// Division `self / other`; `other` must exclude zero (norm_sq > 0).
    pub fn div(&self, other: &ComplexBox) -> ComplexBox {
        let n = other.norm_sq();
        debug_assert!(n.strictly_positive(), "division by a box containing zero");
        let num = self.mul(&other.conj());
        let inv = n.recip();
        ComplexBox { re: num.re.mul(&inv), im: num.im.mul(&inv) }
    }
}

pub(crate) fn bigint_sign(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub(crate) fn rat_sign(x: &Rat) -> i32 {
    bigint_sign(x.numer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::from_i64(-2, 3);
        let b = RatInterval::from_i64(-5, 1);
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_i64(-15));
        assert_eq!(p.hi, rat_i64(10));
    }

    #[test]
    fn square_straddling_zero() {
        let a = RatInterval::from_i64(-2, 3);
        let s = a.square();
        assert_eq!(s.lo, rat_i64(0));
        assert_eq!(s.hi, rat_i64(9));
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let x = r(1, 3);
        let lo = dyadic_floor(&x, 8);
        let hi = dyadic_ceil(&x, 8);
        assert!(lo <= x && x <= hi);
        assert_eq!(&hi - &lo, r(1, 256));
    }

    #[test]
    fn box_division_contains_quotient() {
        // (1+2i)/(3-i) = (1/10)(1+7i)
        let z = ComplexBox::point(rat_i64(1), rat_i64(2));
        let w = ComplexBox {
            re: RatInterval::new(r(29, 10), r(31, 10)),
            im: RatInterval::new(r(-11, 10), r(-9, 10)),
        };
        let q = z.div(&w);
        assert!(q.contains(&r(1, 10), &r(7, 10)));
    }

    #[test]
    fn norm_sq_of_real_straddling_box() {
        let b = ComplexBox {
            re: RatInterval::from_i64(1, 2),
            im: RatInterval::from_i64(-1, 1),
        };
        let n = b.norm_sq();
        assert_eq!(n.lo, rat_i64(1));
        assert_eq!(n.hi, rat_i64(5));
    }
}
