//! Univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored constant term first with the leading coefficient
//! nonzero; the zero polynomial has an empty coefficient vector. Defining
//! polynomials of algebraic numbers are kept in primitive integer form with
//! positive leading coefficient, which makes them canonical and cheap to
//! compare.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::{bigint_sign, rat_i64, rat_sign, ComplexBox, Rat, RatInterval};
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_int_coeffs(&[0, 1])
    }

    /// `x - c`.
    pub fn x_minus(c: &Rat) -> Self {
        Self::from_coeffs(vec![-c.clone(), Rat::one()])
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[0] = -Rat::one();
        coeffs[m] = Rat::one();
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> usize {
        debug_assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        debug_assert!(!self.is_zero());
        self.scale(&self.leading().recip())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_i64(i as i64 + 1))
                .collect(),
        )
    }

    /// Substitute `x -> k x`.
    pub fn compose_scale(&self, k: &Rat) -> Self {
        let mut pow = Rat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= k;
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division; `d` must be nonzero.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead_inv = d.leading().recip();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &lead_inv;
            if !q.is_zero() {
                for i in 0..dd {
                    let t = &q * &d.coeffs[i];
                    rem[k + i] -= t;
                }
            }
            quot[k] = q;
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "div_exact with nonzero remainder");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Primitive integer form with positive leading coefficient.
    /// Same roots, canonical representation.
    pub fn primitive_int(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let sign_fix = if bigint_sign(ints.last().unwrap()) < 0 { -content } else { content };
        Self::from_coeffs(ints.iter().map(|c| Rat::from_integer(c / &sign_fix)).collect())
    }

    pub fn int_coeffs(&self) -> Vec<BigInt> {
        debug_assert!(self.has_integer_coeffs());
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// Polynomial gcd, returned in primitive integer form (positive leading
    /// coefficient); computed with a primitive pseudo-remainder sequence to
    /// keep coefficients small.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_int();
        }
        if other.is_zero() {
            return self.primitive_int();
        }
        let mut a = self.primitive_int().int_coeffs();
        let mut b = other.primitive_int().int_coeffs();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.iter().all(|c| c.is_zero()) || b.is_empty() {
                return Self::from_bigint_coeffs(a).primitive_int();
            }
            let (r, _) = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(&r);
        }
    }

    /// `f / gcd(f, f')`, in primitive integer form.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        if self.is_constant() {
            return self.primitive_int();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive_int();
        }
        self.primitive_int().div_exact(&g).primitive_int()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `f(p/q)` without normalizing the rational value; fast path for
    /// integer coefficients.
    pub fn sign_at(&self, x: &Rat) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if self.has_integer_coeffs() {
            // f(p/q) * q^deg = sum a_i p^i q^{deg-i}; q > 0, so the sign of
            // the integer Horner sum is the sign of f(p/q).
            let p = x.numer();
            let q = x.denom();
            let n = self.coeffs.len() - 1;
            let mut acc = self.coeffs[n].to_integer();
            let mut qpow = BigInt::one();
            for i in (0..n).rev() {
                qpow *= q;
                acc = acc * p + self.coeffs[i].to_integer() * &qpow;
            }
            return bigint_sign(&acc);
        }
        rat_sign(&self.eval(x))
    }

    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_rat(c);
        }
        acc
    }

    pub fn eval_box(&self, z: &ComplexBox) -> ComplexBox {
        let mut acc = ComplexBox::point(Rat::zero(), Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re = acc.re.add_rat(c);
        }
        acc
    }

    /// Centered-form enclosure `f(m) + f'(B) (B - m)`; much tighter than the
    /// Horner form on small boxes away from roots.
    pub fn eval_box_centered(&self, z: &ComplexBox, deriv: &Polynomial) -> ComplexBox {
        let (mr, mi) = z.mid();
        let m = ComplexBox::point(mr.clone(), mi.clone());
        let fm = self.eval_point_complex(&mr, &mi);
        let dfb = deriv.eval_box(z);
        let offset = z.sub(&m);
        let prod = dfb.mul(&offset);
        ComplexBox {
            re: prod.re.add_rat(&fm.0),
            im: prod.im.add_rat(&fm.1),
        }
    }

    /// Exact complex evaluation at a rational point.
    pub fn eval_point_complex(&self, re: &Rat, im: &Rat) -> (Rat, Rat) {
        let mut ar = Rat::zero();
        let mut ai = Rat::zero();
        for c in self.coeffs.iter().rev() {
            let nr = &ar * re - &ai * im + c;
            let ni = &ar * im + &ai * re;
            ar = nr;
            ai = ni;
        }
        (ar, ai)
    }

    pub fn eval_complex_f64(&self, re: f64, im: f64) -> (f64, f64) {
        let mut ar = 0.0;
        let mut ai = 0.0;
        for c in self.coeffs.iter().rev() {
            let cf = super::interval::rat_to_f64(c);
            let nr = ar * re - ai * im + cf;
            let ni = ar * im + ai * re;
            ar = nr;
            ai = ni;
        }
        (ar, ai)
    }

    /// Cauchy root bound: all roots have absolute value strictly below it.
    pub fn cauchy_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lead = self.leading().abs();
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Rat::one() + max / lead
    }

    /// Positive rational lower bound on the distance between distinct roots
    /// (integer squarefree input). Crude but safe.
    pub fn root_separation_lower_bound(&self) -> Rat {
        let f = self.primitive_int();
        let n = f.degree().max(1) as u32;
        let height: BigInt =
            f.coeffs.iter().map(|c| c.to_integer().abs()).sum::<BigInt>().max(BigInt::one());
        let denom = BigInt::from(n).pow(n.div_ceil(2) + 1) * height.pow(n.saturating_sub(1));
        Rat::new(BigInt::one(), denom)
    }

    /// Resultant of two nonzero polynomials.
    pub fn resultant(&self, other: &Self) -> Rat {
        assert!(!self.is_zero() && !other.is_zero(), "resultant of zero polynomial");
        resultant_inner(self.clone(), other.clone())
    }

    pub fn discriminant_is_zero(&self) -> bool {
        !self.is_squarefree()
    }
}

fn resultant_inner(f: Polynomial, g: Polynomial) -> Rat {
    let df = if f.is_zero() { return Rat::zero() } else { f.degree() };
    let dg = if g.is_zero() { return Rat::zero() } else { g.degree() };
    if df == 0 {
        return pow_rat(f.leading(), dg as u32);
    }
    if dg == 0 {
        return pow_rat(g.leading(), df as u32);
    }
    if df < dg {
        let s = if (df * dg) % 2 == 1 { -Rat::one() } else { Rat::one() };
        return s * resultant_inner(g, f);
    }
    let r = f.rem(&g);
    if r.is_zero() {
        return Rat::zero();
    }
    let dr = r.degree();
    let sign = if (df * dg) % 2 == 1 { -Rat::one() } else { Rat::one() };
    sign * pow_rat(g.leading(), (df - dr) as u32) * resultant_inner(g, r)
}

fn pow_rat(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn int_degree(a: &[BigInt]) -> Option<usize> {
    let mut d = a.len();
    while d > 0 && a[d - 1].is_zero() {
        d -= 1;
    }
    if d == 0 {
        None
    } else {
        Some(d - 1)
    }
}

/// Integer pseudo-remainder: returns `(r, k)` with
/// `lc(b)^k * (a mod b) = r` as polynomials over Q.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, u32) {
    let db = int_degree(b).expect("pseudo-remainder by zero");
    let lcb = b[db].clone();
    let mut r = a.to_vec();
    let mut steps = 0u32;
    loop {
        let dr = match int_degree(&r) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let coef = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lcb;
        }
        let shift = dr - db;
        for i in 0..=db {
            r[shift + i] -= &coef * &b[i];
        }
        steps += 1;
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    (r, steps)
}

fn int_primitive(a: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in a {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c / &content).collect()
}

/// Polynomial whose roots are all products `alpha * beta` of a root of `f`
/// and a root of `g`, computed as `Res_y(f(y), y^{deg g} g(x/y))` by
/// evaluation and interpolation. Degree is exactly `deg f * deg g`.
pub fn composed_product(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.primitive_int();
    let g = g.primitive_int();
    // Strip zero roots: products with zero are zero.
    let (f0, fz) = strip_zero_roots(&f);
    let (g0, gz) = strip_zero_roots(&g);
    let zero_mult = fz * (g0.degree()) + gz * f0.degree() + fz * gz;
    let core = if f0.is_constant() || g0.is_constant() {
        Polynomial::constant(Rat::one())
    } else {
        let df = f0.degree();
        let dg = g0.degree();
        let target = df * dg;
        let mut points = Vec::with_capacity(target + 1);
        for node in interpolation_nodes(target + 1) {
            // h(y) = y^dg g0(x0/y) = sum_k g_k x0^k y^{dg-k}
            let x0 = rat_i64(node);
            let mut h = vec![Rat::zero(); dg + 1];
            let mut pw = Rat::one();
            for k in 0..=dg {
                h[dg - k] = g0.coeff(k) * &pw;
                pw *= &x0;
            }
            let h = Polynomial::from_coeffs(h);
            let val = f0.resultant(&h);
            points.push((x0, val));
        }
        interpolate(&points)
    };
    let mut shifted = vec![Rat::zero(); zero_mult];
    shifted.extend_from_slice(core.coeffs());
    Ok(Polynomial::from_coeffs(shifted).primitive_int())
}

/// Polynomial whose roots are all sums `alpha + beta`, via
/// `Res_y(f(y), g(x - y))`.
pub fn composed_sum(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.primitive_int();
    let g = g.primitive_int();
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::constant(Rat::one()));
    }
    let df = f.degree();
    let dg = g.degree();
    let target = df * dg;
    let mut points = Vec::with_capacity(target + 1);
    for node in interpolation_nodes(target + 1) {
        let x0 = rat_i64(node);
        // g(x0 - y) as a polynomial in y
        let mut h = Polynomial::zero();
        // Horner in (x0 - y)
        let neg_y = Polynomial::from_coeffs(vec![x0.clone(), -Rat::one()]);
        for c in g.coeffs().iter().rev() {
            h = h.mul(&neg_y).add(&Polynomial::constant(c.clone()));
        }
        let val = f.resultant(&h);
        points.push((x0, val));
    }
    Ok(interpolate(&points).primitive_int())
}

fn strip_zero_roots(f: &Polynomial) -> (Polynomial, usize) {
    let mut k = 0;
    while f.coeff(k).is_zero() {
        k += 1;
    }
    (Polynomial::from_coeffs(f.coeffs()[k..].to_vec()), k)
}

fn interpolation_nodes(count: usize) -> impl Iterator<Item = i64> {
    (0..count as i64).map(|i| {
        if i % 2 == 0 {
            i / 2
        } else {
            -(i / 2 + 1)
        }
    })
}

/// Newton-form interpolation through distinct rational nodes.
pub(crate) fn interpolate(points: &[(Rat, Rat)]) -> Polynomial {
    let n = points.len();
    let mut coef: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let dx = &points[i].0 - &points[i - j].0;
            coef[i] = (&coef[i] - &coef[i - 1]) / dx;
        }
    }
    let mut poly = Polynomial::zero();
    for i in (0..n).rev() {
        let factor = Polynomial::from_coeffs(vec![-points[i].0.clone(), Rat::one()]);
        poly = if i == n - 1 {
            Polynomial::constant(coef[i].clone())
        } else {
            poly.mul(&factor).add(&Polynomial::constant(coef[i].clone()))
        };
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn divmod_roundtrip() {
        let f = p(&[-1, -1, 0, 1]); // x^3 - x - 1
        let d = p(&[2, 1]); // x + 2
        let (q, r) = f.divmod(&d);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.is_constant());
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = p(&[-2, 0, 1]); // x^2 - 2
        let b = p(&[0, -2, 0, 1]); // x^3 - 2x = x(x^2 - 2)
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-2, 0, 1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = p(&[-2, 0, 1]);
        let sq = f.mul(&f).squarefree_part();
        assert_eq!(sq, p(&[-2, 0, 1]));
    }

    #[test]
    fn resultant_matches_norm_convention() {
        // Res(x^3 - x - 1, x) = product of roots = 1
        let f = p(&[-1, -1, 0, 1]);
        assert_eq!(f.resultant(&Polynomial::x()), Rat::one());
        // Res(x^2 - 2, x) = -2
        let g = p(&[-2, 0, 1]);
        assert_eq!(g.resultant(&Polynomial::x()), rat_i64(-2));
    }

    #[test]
    fn composed_product_linear() {
        // roots {2} x {2} -> {4}
        let f = p(&[-2, 1]);
        let cp = composed_product(&f, &f).unwrap();
        assert_eq!(cp, p(&[-4, 1]));
    }

    #[test]
    fn composed_product_sqrt2_sqrt3() {
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        let cp = composed_product(&f, &g).unwrap();
        assert_eq!(cp.degree(), 4);
        // roots are +-sqrt(6) doubled: (x^2-6)^2 divides it (up to scaling)
        let target = p(&[-6, 0, 1]);
        assert!(target.divides(&cp));
        assert_eq!(cp.squarefree_part(), target);
    }

    #[test]
    fn composed_product_with_zero_root() {
        // f = x(x-1), g = x-3: products {0, 3}
        let f = p(&[0, -1, 1]);
        let g = p(&[-3, 1]);
        let cp = composed_product(&f, &g).unwrap();
        assert_eq!(cp.degree(), 2);
        assert!(cp.eval(&Rat::zero()).is_zero());
        assert!(cp.eval(&rat_i64(3)).is_zero());
    }

    #[test]
    fn composed_sum_sqrt2_sqrt3() {
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        let cs = composed_sum(&f, &g).unwrap();
        assert_eq!(cs.degree(), 4);
        // min poly of sqrt2 + sqrt3 is x^4 - 10x^2 + 1
        assert_eq!(cs.primitive_int(), p(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn centered_form_contains_point_value() {
        let f = p(&[-1, -1, 0, 1]);
        let d = f.derivative();
        let z = ComplexBox {
            re: RatInterval::new(Rat::new(BigInt::from(13), BigInt::from(10)), Rat::new(BigInt::from(14), BigInt::from(10))),
            im: RatInterval::new(Rat::new(BigInt::from(-1), BigInt::from(100)), Rat::new(BigInt::from(1), BigInt::from(100))),
        };
        let enc = f.eval_box_centered(&z, &d);
        let (vr, vi) = f.eval_point_complex(&Rat::new(BigInt::from(27), BigInt::from(20)), &Rat::zero());
        assert!(enc.contains(&vr, &vi));
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let f = p(&[-1, -1, 0, 1]);
        let b = f.cauchy_bound();
        assert!(b >= rat_i64(2)); // real root ~1.3247
    }
}
