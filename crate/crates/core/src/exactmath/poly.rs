//! Univariate polynomials with exact cyclotomic coefficients, lowest degree
//! first. The zero polynomial is the empty coefficient sequence.

use std::fmt;

use super::{ExactError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Monomial `c * x^d`.
    pub fn monomial(c: Scalar, d: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Euclidean division; coefficients form a field so this never fails for
    /// a nonzero divisor.
    pub fn divrem(&self, den: &Poly) -> Result<(Poly, Poly), ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let dd = den.coeffs.len() - 1;
        let lead_inv = den.coeffs[dd].inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), Poly::from_coeffs(rem)));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c.clone();
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].sub(&c.mul(d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Division known to be exact; returns `None` if a remainder appears.
    pub fn exact_div(&self, den: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(den).ok()?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Greatest multiplicity of the root 0, i.e. the lowest nonzero degree.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Quotient by `x^k`; panics unless the valuation allows it.
    pub fn shift_down(&self, k: usize) -> Poly {
        assert!(self.valuation().map(|v| v >= k).unwrap_or(true));
        Poly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd_monic(p: &Poly, q: &Poly) -> Result<Poly, ExactError> {
    if p.is_zero() && q.is_zero() {
        return Err(ExactError::BothZero);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match d {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{d}"),
            };
            if d == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{var}")?;
            } else if c.is_rational() {
                write!(f, "{c}*{var}")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::root_of_unity;
    use super::*;

    fn t() -> Poly {
        Poly::monomial(Scalar::one(), 1)
    }

    #[test]
    fn gcd_basic() {
        // (T^2 - T, T^2) -> T
        let p = t().mul(&t()).sub(&t());
        let q = t().mul(&t());
        assert_eq!(poly_gcd_monic(&p, &q).unwrap(), t());
    }

    #[test]
    fn gcd_with_zero() {
        let q = t().mul(&t());
        assert_eq!(poly_gcd_monic(&q, &Poly::zero()).unwrap(), q);
        assert_eq!(
            poly_gcd_monic(&Poly::zero(), &Poly::zero()).unwrap_err(),
            ExactError::BothZero
        );
    }

    #[test]
    fn gcd_linear_factor() {
        // (T^2 - 1, T - 1) -> T - 1
        let p = t().mul(&t()).sub(&Poly::one());
        let q = t().sub(&Poly::one());
        assert_eq!(poly_gcd_monic(&p, &q).unwrap(), q);
    }

    #[test]
    fn divrem_with_cyclotomic_lead() {
        let p = Poly::from_coeffs(vec![Scalar::from_int(2), root_of_unity(3, 1)]);
        let sq = p.mul(&p);
        let (q, r) = sq.divrem(&p).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p);
    }
}
