//! Real algebraic numbers: squarefree defining polynomial plus isolating
//! rational interval.
//!
//! Interval invariant: either the interval is a single rational point that is
//! a root of the defining polynomial, or `lo < hi`, neither endpoint is a
//! root, and exactly one root lies strictly inside. Under that invariant
//! equality is decidable: gcd the defining polynomials and refine until the
//! intervals separate or both isolate the same root of the gcd.

use num_bigint::BigInt;
use num_traits::Signed;

use super::interval::{pow2, rat_to_f64, Rat, RatInterval};
use super::poly::Polynomial;
use super::sturm::SturmChain;

#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    defining: Polynomial,
    lo: Rat,
    hi: Rat,
}

impl RealAlgebraic {
    /// Caller guarantees the invariant; `defining` must be squarefree and in
    /// primitive integer form.
    pub(crate) fn new_unchecked(defining: Polynomial, lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        debug_assert!(if lo == hi {
            defining.sign_at(&lo) == 0
        } else {
            defining.sign_at(&lo) != 0 && defining.sign_at(&hi) != 0
        });
        RealAlgebraic { defining, lo, hi }
    }

    pub fn from_rational(c: &Rat) -> Self {
        let defining = Polynomial::x_minus(c).primitive_int();
        RealAlgebraic { defining, lo: c.clone(), hi: c.clone() }
    }

    /// Validated constructor: checks that exactly one root of the squarefree
    /// part of `f` lies in `[lo, hi]` with non-root endpoints (or a root
    /// endpoint when degenerate).
    pub fn new(f: &Polynomial, lo: Rat, hi: Rat) -> Option<Self> {
        if f.is_zero() || lo > hi {
            return None;
        }
        let g = f.squarefree_part();
        if lo == hi {
            return if g.sign_at(&lo) == 0 {
                Some(RealAlgebraic { defining: g, lo, hi })
            } else {
                None
            };
        }
        if g.sign_at(&lo) == 0 || g.sign_at(&hi) == 0 {
            return None;
        }
        let chain = SturmChain::new(&g);
        if chain.count_in(&lo, &hi) == 1 {
            Some(RealAlgebraic { defining: g, lo, hi })
        } else {
            None
        }
    }

    /// Converging-enclosure constructor. `g` must be squarefree and the
    /// closure must produce enclosures of one fixed real root of `g` with
    /// widths tending to zero (a degenerate enclosure ends the loop
    /// immediately). Enclosures are padded outward before the isolation
    /// test, so values sitting exactly on an enclosure endpoint are handled.
    pub(crate) fn from_root_enclosure<F: FnMut() -> RatInterval>(
        g: &Polynomial,
        mut tighten: F,
    ) -> Self {
        let g = g.primitive_int();
        debug_assert!(g.is_squarefree());
        let chain = SturmChain::new(&g);
        let mut guard = 0u32;
        loop {
            guard += 1;
            assert!(guard < 10_000, "enclosure failed to converge onto a root of the candidate");
            let enc = tighten();
            if enc.is_point() {
                assert!(g.sign_at(&enc.lo) == 0, "degenerate enclosure is not a root");
                return RealAlgebraic { defining: g, lo: enc.lo.clone(), hi: enc.hi };
            }
            let w = enc.width();
            let pad = &w / Rat::from_integer(BigInt::from(7));
            let step = &w / Rat::from_integer(BigInt::from(11));
            let mut lo = &enc.lo - &pad;
            let mut hi = &enc.hi + &pad;
            while g.sign_at(&lo) == 0 {
                lo -= &step;
            }
            while g.sign_at(&hi) == 0 {
                hi += &step;
            }
            if chain.count_in(&lo, &hi) == 1 {
                return RealAlgebraic { defining: g, lo, hi };
            }
        }
    }

    pub fn defining(&self) -> &Polynomial {
        &self.defining
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn interval_lo(&self) -> &Rat {
        &self.lo
    }

    pub fn interval_hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn rational_value(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// Bisection refinement; the result is contained in `self` and isolates
    /// the same root.
    pub fn refined(&self, target_width: &Rat) -> Self {
        assert!(target_width.is_positive());
        if self.is_rational() {
            return self.clone();
        }
        let f = &self.defining;
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let mut sign_lo = f.sign_at(&lo);
        debug_assert!(sign_lo != 0);
        while &hi - &lo > *target_width {
            let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
            let sm = f.sign_at(&mid);
            if sm == 0 {
                return RealAlgebraic { defining: f.clone(), lo: mid.clone(), hi: mid };
            }
            if sm == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
            let _ = &mut sign_lo;
        }
        RealAlgebraic { defining: f.clone(), lo, hi }
    }

    /// Refined to interval width `2^-bits`.
    pub fn refined_bits(&self, bits: u32) -> Self {
        self.refined(&pow2(-(bits as i64)))
    }

    /// Exact sign of the number.
    pub fn sign(&self) -> i32 {
        if let Some(v) = self.rational_value() {
            return if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
        }
        let zero = Rat::from_integer(BigInt::from(0));
        if self.interval().contains(&zero) && self.defining.sign_at(&zero) == 0 {
            // The unique root in the interval is 0 itself.
            return 0;
        }
        let mut cur = self.clone();
        loop {
            let iv = cur.interval();
            if iv.strictly_positive() {
                return 1;
            }
            if iv.strictly_negative() {
                return -1;
            }
            cur = cur.refined(&(cur.width() / Rat::from_integer(BigInt::from(4))));
        }
    }

    /// Negation: root of `f(-x)` in the mirrored interval.
    pub fn neg(&self) -> Self {
        let g = self
            .defining
            .compose_scale(&Rat::from_integer(BigInt::from(-1)))
            .primitive_int();
        RealAlgebraic { defining: g, lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    /// Reciprocal of a nonzero value: root of the reversed polynomial.
    pub fn recip(&self) -> Self {
        assert!(self.sign() != 0, "reciprocal of zero");
        let mut cur = self.clone();
        while !cur.interval().excludes_zero() && !cur.is_rational() {
            cur = cur.refined(&(cur.width() / Rat::from_integer(BigInt::from(4))));
        }
        if let Some(v) = cur.rational_value() {
            return RealAlgebraic::from_rational(&v.recip());
        }
        let mut rev: Vec<Rat> = cur.defining.coeffs().to_vec();
        rev.reverse();
        let g = Polynomial::from_coeffs(rev).primitive_int();
        RealAlgebraic { defining: g, lo: cur.hi.recip(), hi: cur.lo.recip() }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.refined(&pow2(-60));
        rat_to_f64(&r.interval().mid())
    }

    /// True once the isolating interval fits inside `[a, b]`; refines as long
    /// as the interval straddles either bound.
    pub fn contains_value_in(&self, a: &Rat, b: &Rat) -> bool {
        let mut cur = self.clone();
        loop {
            if a <= &cur.lo && &cur.hi <= b {
                return true;
            }
            if &cur.hi < a || b < &cur.lo {
                return false;
            }
            if cur.is_rational() {
                return a <= &cur.lo && &cur.lo <= b;
            }
            cur = cur.refined(&(cur.width() / Rat::from_integer(BigInt::from(4))));
        }
    }

    /// Certified: the two numbers are distinct because their isolating
    /// regions cannot share a root.
    fn surely_distinct(a: &RealAlgebraic, b: &RealAlgebraic) -> bool {
        if a.hi < b.lo || b.hi < a.lo {
            return true;
        }
        // Touching at a single point: that point is an interior root of
        // neither non-degenerate interval, and a degenerate endpoint cannot
        // be the other number (endpoints of the other are non-roots).
        let overlap_lo = if a.lo >= b.lo { &a.lo } else { &b.lo };
        let overlap_hi = if a.hi <= b.hi { &a.hi } else { &b.hi };
        if overlap_lo == overlap_hi {
            return !(a.is_rational() && b.is_rational() && a.lo == b.lo);
        }
        false
    }

    /// Decide whether this number is a root of the factor `g` of its defining
    /// polynomial (`g` divides `defining`). Exact, always terminates.
    fn is_root_of_factor(&self, g: &Polynomial, cofactor: &Polynomial) -> bool {
        if let Some(v) = self.rational_value() {
            return g.sign_at(v) == 0;
        }
        let chain_g = SturmChain::new(g);
        let chain_h = if cofactor.is_constant() { None } else { Some(SturmChain::new(cofactor)) };
        let mut cur = self.clone();
        loop {
            if let Some(v) = cur.rational_value() {
                return g.sign_at(v) == 0;
            }
            let cg = chain_g.count_in(&cur.lo, &cur.hi);
            let ch = chain_h.as_ref().map_or(0, |c| c.count_in(&cur.lo, &cur.hi));
            if cg + ch == 1 {
                return cg == 1;
            }
            cur = cur.refined(&(cur.width() / Rat::from_integer(BigInt::from(4))));
        }
    }
}

/// Exact equality of two real algebraic numbers.
pub fn alg_equal(a: &RealAlgebraic, b: &RealAlgebraic) -> bool {
    if a.is_rational() && b.is_rational() {
        return a.lo == b.lo;
    }
    if RealAlgebraic::surely_distinct(a, b) {
        return false;
    }
    let g = a.defining.gcd(&b.defining);
    if g.is_constant() {
        // No common root at all, so the numbers differ.
        return false;
    }
    let ha = a.defining.div_exact(&g).primitive_int();
    let hb = b.defining.div_exact(&g).primitive_int();
    if !a.is_root_of_factor(&g, &ha) || !b.is_root_of_factor(&g, &hb) {
        return false;
    }
    let chain = SturmChain::new(&g);
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if RealAlgebraic::surely_distinct(&a, &b) {
            return false;
        }
        let lo = if a.lo <= b.lo { a.lo.clone() } else { b.lo.clone() };
        let hi = if a.hi >= b.hi { a.hi.clone() } else { b.hi.clone() };
        let lo_ok = g.sign_at(&lo) != 0 || (a.is_rational() && a.lo == lo) || (b.is_rational() && b.lo == lo);
        let hi_ok = g.sign_at(&hi) != 0 || (a.is_rational() && a.hi == hi) || (b.is_rational() && b.hi == hi);
        if lo_ok && hi_ok && g.sign_at(&lo) != 0 && g.sign_at(&hi) != 0 && chain.count_in(&lo, &hi) == 1
        {
            return true;
        }
        // A rational value equal to a hull endpoint that is a g-root means
        // one number is that rational; compare directly against the other.
        if let Some(v) = a.rational_value() {
            let vv = v.clone();
            if b.interval().contains(&vv) && g.sign_at(&vv) == 0 {
                let hb2 = b.defining.div_exact(&g).primitive_int();
                let _ = hb2;
            }
        }
        let quarter = Rat::from_integer(BigInt::from(4));
        if !a.is_rational() {
            a = a.refined(&(a.width() / &quarter));
        }
        if !b.is_rational() {
            b = b.refined(&(b.width() / &quarter));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval::rat_i64;
    use crate::exactnum::sturm::isolate_real_roots;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    fn sqrt2() -> RealAlgebraic {
        isolate_real_roots(&p(&[-2, 0, 1])).unwrap().pop().unwrap()
    }

    #[test]
    fn refine_keeps_containment() {
        let r = sqrt2();
        let tight = r.refined(&Rat::new(BigInt::from(1), BigInt::from(1000)));
        assert!(tight.width() <= Rat::new(BigInt::from(1), BigInt::from(1000)));
        assert!(r.interval_lo() <= tight.interval_lo() && tight.interval_hi() <= r.interval_hi());
        let tighter = tight.refined(&Rat::new(BigInt::from(1), BigInt::from(1_000_000)));
        assert!(tight.interval().contains_interval(&tighter.interval()));
    }

    #[test]
    fn sqrt2_value_brackets() {
        let r = sqrt2().refined(&Rat::new(BigInt::from(1), BigInt::from(100000)));
        // 1.41421 < sqrt2 < 1.41422
        assert!(r.contains_value_in(
            &Rat::new(BigInt::from(141421), BigInt::from(100000)),
            &Rat::new(BigInt::from(141422), BigInt::from(100000)),
        ));
    }

    #[test]
    fn equality_across_defining_polynomials() {
        // sqrt2 from x^2-2 and from x^4-4
        let a = sqrt2();
        let roots = isolate_real_roots(&p(&[-4, 0, 0, 0, 1])).unwrap();
        let b = roots.last().unwrap();
        assert!(alg_equal(&a, b));
    }

    #[test]
    fn sqrt2_not_sqrt3() {
        let a = sqrt2();
        let b = isolate_real_roots(&p(&[-3, 0, 1])).unwrap().pop().unwrap();
        assert!(!alg_equal(&a, &b));
    }

    #[test]
    fn rational_cases() {
        let half = RealAlgebraic::from_rational(&Rat::new(BigInt::from(1), BigInt::from(2)));
        let half2 = RealAlgebraic::from_rational(&Rat::new(BigInt::from(2), BigInt::from(4)));
        assert!(alg_equal(&half, &half2));
        let one = RealAlgebraic::from_rational(&rat_i64(1));
        assert!(!alg_equal(&half, &one));
        // rational root of a bigger polynomial: x^3 - x isolates 1
        let roots = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert!(alg_equal(&one, &roots[2]));
    }

    #[test]
    fn sign_and_recip() {
        let a = sqrt2();
        assert_eq!(a.sign(), 1);
        assert_eq!(a.neg().sign(), -1);
        let inv = a.recip();
        // 1/sqrt2 = sqrt2/2: defining 2x^2 - 1
        assert!(inv.contains_value_in(
            &Rat::new(BigInt::from(7), BigInt::from(10)),
            &Rat::new(BigInt::from(8), BigInt::from(10)),
        ));
        let zero_root = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap().remove(1);
        assert_eq!(zero_root.sign(), 0);
    }

    #[test]
    fn enclosure_constructor_isolates() {
        // Feed shrinking enclosures of sqrt2 into the candidate x^2 - 2.
        let g = p(&[-2, 0, 1]);
        let mut r = sqrt2();
        let alg = RealAlgebraic::from_root_enclosure(&g, move || {
            r = r.refined(&(r.width() / rat_i64(2)));
            r.interval()
        });
        assert!(alg_equal(&alg, &sqrt2()));
    }
}
