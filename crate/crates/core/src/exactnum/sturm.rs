//! Sturm sequences and real root counting/isolation.
//!
//! The chain is kept in primitive integer form with sign-faithful scaling:
//! each remainder is negated and divided by its (positive) content, so sign
//! variation counts are those of the classical rational sequence while
//! coefficients stay small.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::interval::{bigint_sign, Rat};
use super::poly::Polynomial;
use super::real::RealAlgebraic;
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    /// Sturm chain of `f`. Sign variations count distinct real roots of `f`
    /// in half-open intervals `(a, b]`.
    pub fn new(f: &Polynomial) -> Self {
        assert!(!f.is_zero());
        let f = f.primitive_int();
        let mut chain = vec![f.clone()];
        if f.is_constant() {
            return SturmChain { chain };
        }
        chain.push(f.derivative().primitive_int());
        loop {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.is_constant() {
                break;
            }
            let next = negated_scaled_rem(a, b);
            if next.is_zero() {
                break;
            }
            chain.push(next);
        }
        SturmChain { chain }
    }

    fn variations<F: Fn(&Polynomial) -> i32>(&self, sign_of: F) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let s = sign_of(p);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        self.variations(|p| p.sign_at(x))
    }

    fn variations_at_neg_inf(&self) -> usize {
        self.variations(|p| {
            let s = sign_of_leading(p);
            if p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        })
    }

    fn variations_at_pos_inf(&self) -> usize {
        self.variations(sign_of_leading)
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`; the
    /// endpoints must not be roots.
    pub fn count_open(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(self.chain[0].sign_at(a) != 0 && self.chain[0].sign_at(b) != 0);
        self.count_in(a, b)
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }

    /// Roots in `(a, +inf)`; `a` must not be a root.
    pub fn count_above(&self, a: &Rat) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_pos_inf())
    }
}

fn sign_of_leading(p: &Polynomial) -> i32 {
    if p.is_zero() {
        0
    } else {
        let l = p.leading();
        if l.is_positive() {
            1
        } else if l.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// `-(a mod b)` up to a positive rational factor, in primitive integer form.
fn negated_scaled_rem(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ai = a.int_coeffs();
    let bi = b.int_coeffs();
    let (r, steps) = int_pseudo_rem_signed(&ai, &bi);
    if r.is_empty() {
        return Polynomial::zero();
    }
    // lc(b)^steps * (a mod b) = r; flip to -(a mod b) keeping a positive
    // overall multiplier.
    let lcb_sign = bigint_sign(bi.last().unwrap());
    let mult_sign = if steps % 2 == 0 { 1 } else { lcb_sign };
    let flipped: Vec<BigInt> = if mult_sign >= 0 {
        r.iter().map(|c| -c).collect()
    } else {
        r
    };
    Polynomial::from_bigint_coeffs(flipped).primitive_int()
}

fn int_pseudo_rem_signed(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, u32) {
    let db = b.len() - 1;
    let lcb = b[db].clone();
    let mut r = a.to_vec();
    let mut steps = 0u32;
    loop {
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
        let dr = r.len() - 1;
        let coef = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lcb;
        }
        let shift = dr - db;
        for i in 0..=db {
            r[shift + i] -= &coef * &b[i];
        }
        steps += 1;
    }
    (r, steps)
}

/// Exact count of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(f: &Polynomial) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(0);
    }
    Ok(SturmChain::new(&f.squarefree_part()).count_all())
}

/// Isolate all distinct real roots of `f`, sorted ascending, with pairwise
/// disjoint intervals whose non-degenerate endpoints are not roots.
pub fn isolate_real_roots(f: &Polynomial) -> Result<Vec<RealAlgebraic>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let g = f.squarefree_part();
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&g);
    let total = chain.count_all();
    if total == 0 {
        return Ok(Vec::new());
    }
    let bound = g.cauchy_bound();
    let lo = -bound.clone();
    let hi = bound;
    debug_assert!(g.sign_at(&lo) != 0 && g.sign_at(&hi) != 0);

    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RealAlgebraic::new_unchecked(g.clone(), a, b));
            continue;
        }
        let mid = (&a + &b) / Rat::from_integer(BigInt::from(2));
        if g.sign_at(&mid) == 0 {
            // Midpoint is itself a root: emit it and carve out a punctured
            // neighbourhood containing no other root.
            let mut delta = (&b - &a) / Rat::from_integer(BigInt::from(4));
            loop {
                let l = &mid - &delta;
                let r = &mid + &delta;
                if g.sign_at(&l) != 0 && g.sign_at(&r) != 0 && chain.count_in(&l, &r) == 1 {
                    out.push(RealAlgebraic::new_unchecked(
                        g.clone(),
                        mid.clone(),
                        mid.clone(),
                    ));
                    let left = chain.count_in(&a, &l);
                    let right = chain.count_in(&r, &b);
                    stack.push((a, l, left));
                    stack.push((r, b, right));
                    break;
                }
                delta /= Rat::from_integer(BigInt::from(2));
            }
            continue;
        }
        let left = chain.count_in(&a, &mid);
        let right = count - left;
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, right));
    }
    out.sort_by(|x, y| x.interval_lo().cmp(y.interval_lo()));

    // Tighten so closed intervals are pairwise disjoint.
    for i in 1..out.len() {
        while out[i - 1].interval_hi() >= out[i].interval_lo() {
            let w = {
                let a = &out[i - 1];
                let b = &out[i];
                std::cmp::max(a.width(), b.width()) / Rat::from_integer(BigInt::from(4))
            };
            out[i - 1] = out[i - 1].refined(&w);
            out[i] = out[i].refined(&w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval::rat_i64;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn counts_match_known_polynomials() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1])).unwrap(), 0); // x^2+1
        assert_eq!(count_real_roots(&p(&[-2, 0, 1])).unwrap(), 2); // x^2-2
        assert_eq!(count_real_roots(&p(&[-1, -1, 0, 1])).unwrap(), 1); // x^3-x-1
        assert_eq!(count_real_roots(&p(&[-1, -1, 0, 0, 0, 1])).unwrap(), 1); // x^5-x-1
        assert_eq!(count_real_roots(&p(&[-1, -1, 0, 0, 1])).unwrap(), 2); // x^4-x-1
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(count_real_roots(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn count_counts_distinct_roots_of_nonsquarefree() {
        let f = p(&[-2, 0, 1]);
        let sq = f.mul(&f);
        assert_eq!(count_real_roots(&sq).unwrap(), 2);
    }

    #[test]
    fn isolation_brackets_sqrt2() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].interval_hi() < roots[1].interval_lo());
        assert!(roots[0].contains_value_in(&rat_i64(-2), &rat_i64(-1)));
        assert!(roots[1].contains_value_in(&rat_i64(1), &rat_i64(2)));
    }

    #[test]
    fn isolation_handles_rational_roots() {
        // x^3 - x = x(x-1)(x+1); midpoint hits are likely
        let roots = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        let vals: Vec<i64> = vec![-1, 0, 1];
        for (r, v) in roots.iter().zip(vals) {
            assert!(r.contains_value_in(&rat_i64(v - 1), &rat_i64(v + 1)));
        }
    }

    #[test]
    fn plastic_root_isolated() {
        let roots = isolate_real_roots(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        // 1.3247... within loose bounds
        assert!(roots[0].contains_value_in(&rat_i64(1), &rat_i64(2)));
    }
}
