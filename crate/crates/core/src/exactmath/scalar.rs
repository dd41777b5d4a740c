//! Cyclotomic numbers with exact rational coordinates.
//!
//! A [`Scalar`] is an element of the `N`-th cyclotomic field, stored in the
//! power basis `1, z, ..., z^(phi(N)-1)` modulo the `N`-th cyclotomic
//! polynomial, where `z = exp(2*pi*i/N)`. Mixed-order arithmetic embeds both
//! operands into the field of order `lcm` of the two orders. A value whose
//! coordinates are all rational is demoted to order 1, so rationals stay
//! rationals.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::{euler_phi, lcm_u64, ExactError, Rational};

/// Exact cyclotomic number: `coeffs[i]` is the coordinate of `zeta_order^i`
/// in the power basis of the `order`-th cyclotomic field.
#[derive(Debug, Clone)]
pub struct Scalar {
    order: u64,
    coeffs: Vec<Rational>,
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monic coefficients (lowest first) of the `n`-th cyclotomic polynomial,
/// computed by dividing `x^n - 1` by all lower-order cyclotomic factors.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = int_poly_exact_div(&num, &cyclotomic_poly(d));
            }
        }
        num
    };
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// Exact division of integer polynomials with monic divisor; remainder must vanish.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let idx = i - dd + j;
            rem[idx] = &rem[idx] - &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

fn rat(i: i64) -> Rational {
    Rational::from_integer(BigInt::from(i))
}

/// Reduce raw power-basis coordinates (any length) modulo the cyclotomic
/// polynomial of `order`, then pad to length `phi(order)`.
fn reduce_mod_cyclotomic(order: u64, mut raw: Vec<Rational>) -> Vec<Rational> {
    let phi = euler_phi(order) as usize;
    let modulus = cyclotomic_poly(order);
    let deg = modulus.len() - 1;
    debug_assert_eq!(deg, phi);
    let mut i = raw.len();
    while i > deg {
        i -= 1;
        let c = raw[i].clone();
        if c.is_zero() {
            continue;
        }
        raw[i] = Rational::zero();
        for (j, m) in modulus.iter().enumerate().take(deg) {
            let v = &c * Rational::from_integer(m.clone());
            raw[i - deg + j] -= v;
        }
    }
    raw.resize(phi, Rational::zero());
    raw
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Scalar {
            order: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(rat(i))
    }

    /// `p/q` as an exact scalar. Panics if `q == 0`.
    pub fn from_fraction(p: i64, q: i64) -> Self {
        assert!(q != 0);
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Build from raw power-basis coordinates of `zeta_order`, reducing to
    /// canonical form.
    pub fn from_coordinates(order: u64, raw: Vec<Rational>) -> Self {
        assert!(order >= 1);
        let coeffs = reduce_mod_cyclotomic(order, raw);
        let mut s = Scalar { order, coeffs };
        s.demote();
        s
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Drop to order 1 when the value is rational.
    fn demote(&mut self) {
        if self.order > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.order = 1;
            self.coeffs.truncate(1);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express in the field of order `m`; `order` must divide `m`.
    pub fn embed(&self, m: u64) -> Scalar {
        assert!(m % self.order == 0);
        if m == self.order {
            return self.clone();
        }
        let k = (m / self.order) as usize;
        let mut raw = vec![Rational::zero(); self.coeffs.len() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * k] = c.clone();
        }
        Scalar {
            order: m,
            coeffs: reduce_mod_cyclotomic(m, raw),
        }
    }

    fn promote_pair(a: &Scalar, b: &Scalar) -> (Scalar, Scalar, u64) {
        let m = lcm_u64(a.order, b.order);
        (a.embed(m), b.embed(m), m)
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        let (a, b, m) = Scalar::promote_pair(self, rhs);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        let mut s = Scalar { order: m, coeffs };
        s.demote();
        s
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        let (a, b, m) = Scalar::promote_pair(self, rhs);
        let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        let mut s = Scalar {
            order: m,
            coeffs: reduce_mod_cyclotomic(m, raw),
        };
        s.demote();
        s
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic modulus.
    pub fn inverse(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Scalar::from_rational(Rational::one() / r));
        }
        let modulus: Vec<Rational> = cyclotomic_poly(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let inv = ratpoly_modular_inverse(&self.coeffs, &modulus)
            .expect("nonzero element of a field must be invertible");
        let mut s = Scalar {
            order: self.order,
            coeffs: reduce_mod_cyclotomic(self.order, inv),
        };
        s.demote();
        Ok(s)
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar, ExactError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut result = Scalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(result)
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        self.mul(&Scalar::from_int(k))
    }

    /// Numeric value in the complex plane, for the certified numeric layer.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / (self.order as f64);
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    // Good enough for certification thresholds: corpus values are small.
    let nf = numer.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = denom.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

/// `zeta_order^exponent` in canonical form.
pub fn root_of_unity(order: u64, exponent: i64) -> Scalar {
    assert!(order >= 1, "root of unity order must be positive");
    let e = exponent.rem_euclid(order as i64) as usize;
    let mut raw = vec![Rational::zero(); e + 1];
    raw[e] = Rational::one();
    Scalar::from_coordinates(order, raw)
}

/// Extended Euclid over Q[x]: returns `u` with `u*a = 1 (mod m)`.
fn ratpoly_modular_inverse(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let trim = |p: &[Rational]| -> Vec<Rational> {
        let mut v = p.to_vec();
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let mut r0 = trim(m);
    let mut r1 = trim(a);
    let mut s0: Vec<Rational> = vec![];
    let mut s1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, rem) = ratpoly_divrem(&r0, &r1);
        let s_next = ratpoly_sub(&s0, &ratpoly_mul(&q, &s1));
        r0 = r1;
        r1 = trim(&rem);
        s0 = s1;
        s1 = trim(&s_next);
    }
    // r0 = gcd; must be a nonzero constant since the modulus is irreducible.
    if r0.len() != 1 {
        return None;
    }
    let inv = Rational::one() / r0[0].clone();
    Some(s0.iter().map(|c| c * &inv).collect())
}

fn ratpoly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let v = &c * d;
            rem[i - dd + j] -= v;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

fn ratpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ratpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Scalar::promote_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&r));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "zeta({},{})", self.order, i)?;
            } else {
                write!(f, "{}*zeta({},{})", fmt_rational(&mag), self.order, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12
    }

    #[test]
    fn identity_case() {
        assert_eq!(root_of_unity(1, 0), Scalar::one());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Scalar::from_int(-1));
    }

    #[test]
    fn zeta3_plus_zeta3_squared() {
        // minimal polynomial x^2 + x + 1 of zeta_3, cross-checked against the
        // numeric embedding as an independent oracle
        let a = root_of_unity(3, 1);
        let b = root_of_unity(3, 2);
        let sum = a.add(&b);
        assert_eq!(sum, Scalar::from_int(-1));
        let (re_a, im_a) = a.to_complex();
        let (re_b, im_b) = b.to_complex();
        assert!(close((re_a + re_b, im_a + im_b), (-1.0, 0.0)));
    }

    #[test]
    fn rational_addition() {
        let a = Scalar::from_fraction(1, 2);
        let b = Scalar::from_fraction(1, 3);
        assert_eq!(a.add(&b), Scalar::from_fraction(5, 6));
    }

    #[test]
    fn zeta6_relation() {
        // zeta_6 satisfies x^2 - x + 1 = 0, so zeta_6 - (zeta_6 - 1) = 1 and
        // zeta_6^2 = zeta_6 - 1
        let z = root_of_unity(6, 1);
        let z2 = z.mul(&z);
        assert_eq!(z.sub(&z2), Scalar::one());
        assert_eq!(z.sub(&z.sub(&Scalar::one())), Scalar::one());
    }

    #[test]
    fn mixed_order_equality() {
        // zeta_4^2 = -1 = zeta_2 viewed in different fields
        let a = root_of_unity(4, 2);
        let b = root_of_unity(2, 1);
        assert_eq!(a, b);
        assert_eq!(a, Scalar::from_int(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let z = root_of_unity(12, 5);
        let x = z.add(&Scalar::from_fraction(3, 7));
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).is_one());
        assert_eq!(
            Scalar::zero().inverse().unwrap_err(),
            ExactError::DivisionByZero
        );
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            Scalar::one().div(&Scalar::zero()).unwrap_err(),
            ExactError::DivisionByZero
        );
    }

    #[test]
    fn root_order_divides() {
        for order in 1..=12u64 {
            for e in 0..order as i64 {
                let z = root_of_unity(order, e);
                assert!(z.pow(order as i64).unwrap().is_one());
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_fraction(5, 6).to_string(), "5/6");
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
        assert_eq!(root_of_unity(4, 1).to_string(), "zeta(4,1)");
        let s = root_of_unity(3, 1).scale_int(2).add(&Scalar::one());
        assert_eq!(s.to_string(), "1+2*zeta(3,1)");
    }
}
