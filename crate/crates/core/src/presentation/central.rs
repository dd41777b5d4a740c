//! The designated central Hopf subalgebra `C` and its characters.
//!
//! `C` is presented by a list of commuting symbols, each group-like of finite
//! order (torsion), group-like of infinite order (Laurent), or primitive
//! (polynomial). Elements of `C` are exact linear combinations of monomials
//! in these symbols; characters of `C` assign a scalar to each symbol and
//! form a group under convolution.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::exactmath::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralKind {
    /// Group-like of the given finite order.
    GroupTorsion(u64),
    /// Group-like with no relation (Laurent direction).
    GroupFree,
    /// Primitive with no relation (polynomial direction).
    PrimitiveFree,
}

#[derive(Debug, Clone)]
pub struct CentralSymbol {
    pub name: String,
    pub kind: CentralKind,
}

#[derive(Debug, Clone, Default)]
pub struct CentralDescriptor {
    pub symbols: Vec<CentralSymbol>,
}

impl CentralDescriptor {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn is_torsion_only(&self) -> bool {
        self.symbols
            .iter()
            .all(|s| matches!(s.kind, CentralKind::GroupTorsion(_)))
    }

    /// Dimension of `C` as a vector space when it is finite-dimensional.
    pub fn torsion_dim(&self) -> Option<u64> {
        if !self.is_torsion_only() {
            return None;
        }
        let mut d = 1u64;
        for s in &self.symbols {
            if let CentralKind::GroupTorsion(o) = s.kind {
                d *= o;
            }
        }
        Some(d)
    }

    /// Reduce torsion exponents into `0..order` and forbid negative powers of
    /// primitive symbols.
    pub fn normalize_mono(&self, mut exps: Vec<i64>) -> CMono {
        assert_eq!(exps.len(), self.symbols.len());
        for (e, s) in exps.iter_mut().zip(self.symbols.iter()) {
            match s.kind {
                CentralKind::GroupTorsion(o) => *e = e.rem_euclid(o as i64),
                CentralKind::GroupFree => {}
                CentralKind::PrimitiveFree => {
                    assert!(*e >= 0, "negative power of a primitive central symbol")
                }
            }
        }
        CMono { exps }
    }

    pub fn unit_mono(&self) -> CMono {
        CMono {
            exps: vec![0; self.symbols.len()],
        }
    }

    pub fn mono_mul(&self, a: &CMono, b: &CMono) -> CMono {
        self.normalize_mono(
            a.exps
                .iter()
                .zip(b.exps.iter())
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    /// Image of a monomial under the antipode, with the scalar it picks up.
    /// Group-likes invert; a primitive `T` maps to `-T`.
    pub fn mono_antipode(&self, m: &CMono) -> (CMono, Scalar) {
        let mut sign_exp = 0i64;
        let exps = m
            .exps
            .iter()
            .zip(self.symbols.iter())
            .map(|(&e, s)| match s.kind {
                CentralKind::GroupTorsion(_) | CentralKind::GroupFree => -e,
                CentralKind::PrimitiveFree => {
                    sign_exp += e;
                    e
                }
            })
            .collect();
        let sign = if sign_exp % 2 == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        };
        (self.normalize_mono(exps), sign)
    }

    /// Enumerate the monomial basis of `C` when it is finite-dimensional.
    pub fn torsion_monomials(&self) -> Option<Vec<CMono>> {
        if !self.is_torsion_only() {
            return None;
        }
        let mut out = vec![self.unit_mono()];
        for (i, s) in self.symbols.iter().enumerate() {
            let CentralKind::GroupTorsion(o) = s.kind else {
                unreachable!()
            };
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for e in 0..o as i64 {
                for m in &out {
                    let mut exps = m.exps.clone();
                    exps[i] = e;
                    next.push(CMono { exps });
                }
            }
            out = next;
        }
        out.sort();
        Some(out)
    }
}

/// Monomial in the central symbols: one exponent per symbol, in descriptor
/// order. Torsion exponents are kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CMono {
    pub exps: Vec<i64>,
}

impl CMono {
    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn display(&self, desc: &CentralDescriptor) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, s) in self.exps.iter().zip(desc.symbols.iter()) {
            match *e {
                0 => {}
                1 => parts.push(s.name.clone()),
                e => parts.push(format!("{}^{}", s.name, e)),
            }
        }
        parts.join("*")
    }
}

/// Exact element of the central ring `C`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CElem {
    pub terms: BTreeMap<CMono, Scalar>,
}

impl CElem {
    pub fn zero() -> Self {
        CElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(desc: &CentralDescriptor) -> Self {
        CElem::from_scalar(desc, Scalar::one())
    }

    pub fn from_scalar(desc: &CentralDescriptor, s: Scalar) -> Self {
        let mut e = CElem::zero();
        e.accumulate(desc.unit_mono(), s);
        e
    }

    pub fn from_term(mono: CMono, s: Scalar) -> Self {
        let mut e = CElem::zero();
        e.accumulate(mono, s);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, mono: CMono, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&s);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &CElem) -> CElem {
        let mut out = self.clone();
        for (m, s) in &rhs.terms {
            out.accumulate(m.clone(), s.clone());
        }
        out
    }

    pub fn neg(&self) -> CElem {
        CElem {
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (m.clone(), s.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CElem) -> CElem {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &CElem, desc: &CentralDescriptor) -> CElem {
        let mut out = CElem::zero();
        for (m1, s1) in &self.terms {
            for (m2, s2) in &rhs.terms {
                out.accumulate(desc.mono_mul(m1, m2), s1.mul(s2));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> CElem {
        if s.is_zero() {
            return CElem::zero();
        }
        CElem {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Exact division by a nonzero integer (the coefficient ring has
    /// characteristic zero).
    pub fn div_int(&self, k: i64) -> CElem {
        assert!(k != 0);
        let inv = Scalar::from_rational(Rational::new(BigInt::from(1), BigInt::from(k)));
        self.scale(&inv)
    }

    pub fn antipode(&self, desc: &CentralDescriptor) -> CElem {
        let mut out = CElem::zero();
        for (m, s) in &self.terms {
            let (m2, sign) = desc.mono_antipode(m);
            out.accumulate(m2, s.mul(&sign));
        }
        out
    }

    pub fn eval(&self, chi: &CentralCharacter) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, s) in &self.terms {
            let mut v = s.clone();
            for (e, val) in m.exps.iter().zip(chi.values.iter()) {
                if *e != 0 {
                    v = v.mul(&val.pow(*e).expect("character values at group-likes are units"));
                }
            }
            acc = acc.add(&v);
        }
        acc
    }

    /// Constant scalar content, if the element lies in the ground field.
    pub fn to_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, s) = self.terms.iter().next().unwrap();
                if m.is_unit() {
                    Some(s.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn display(&self, desc: &CentralDescriptor) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, s)) in self.terms.iter().enumerate() {
            // pull the sign out of rational coefficients for readability
            let (neg, mag) = match s.to_rational() {
                Some(r) if r < num::BigRational::from_integer(0.into()) => (true, s.neg()),
                _ => (false, s.clone()),
            };
            let mag_str = mag.to_string();
            let needs_parens = mag_str[1..].contains(['+', '-']);
            let piece = if m.is_unit() {
                mag_str
            } else if mag.is_one() {
                m.display(desc)
            } else if needs_parens {
                format!("({})*{}", mag_str, m.display(desc))
            } else {
                format!("{}*{}", mag_str, m.display(desc))
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&piece);
        }
        out
    }
}

/// Coefficient in `C (x) C`, used for coproduct expressions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CCElem {
    pub terms: BTreeMap<(CMono, CMono), Scalar>,
}

impl CCElem {
    pub fn zero() -> Self {
        CCElem::default()
    }

    pub fn one(desc: &CentralDescriptor) -> Self {
        CCElem::from_term(desc.unit_mono(), desc.unit_mono(), Scalar::one())
    }

    pub fn from_term(left: CMono, right: CMono, s: Scalar) -> Self {
        let mut e = CCElem::zero();
        e.accumulate(left, right, s);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, left: CMono, right: CMono, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&s);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &CCElem) -> CCElem {
        let mut out = self.clone();
        for ((l, r), s) in &rhs.terms {
            out.accumulate(l.clone(), r.clone(), s.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &CCElem, desc: &CentralDescriptor) -> CCElem {
        let mut out = CCElem::zero();
        for ((l1, r1), s1) in &self.terms {
            for ((l2, r2), s2) in &rhs.terms {
                out.accumulate(desc.mono_mul(l1, l2), desc.mono_mul(r1, r2), s1.mul(s2));
            }
        }
        out
    }

    /// Multiply the left leg by a `C`-coefficient.
    pub fn mul_left(&self, c: &CElem, desc: &CentralDescriptor) -> CCElem {
        let mut out = CCElem::zero();
        for ((l, r), s) in &self.terms {
            for (m, sc) in &c.terms {
                out.accumulate(desc.mono_mul(l, m), r.clone(), s.mul(sc));
            }
        }
        out
    }

    /// Multiply the right leg by a `C`-coefficient.
    pub fn mul_right(&self, c: &CElem, desc: &CentralDescriptor) -> CCElem {
        let mut out = CCElem::zero();
        for ((l, r), s) in &self.terms {
            for (m, sc) in &c.terms {
                out.accumulate(l.clone(), desc.mono_mul(r, m), s.mul(sc));
            }
        }
        out
    }

    pub fn eval(&self, left: &CentralCharacter, right: &CentralCharacter) -> Scalar {
        let mut acc = Scalar::zero();
        for ((l, r), s) in &self.terms {
            let lv = CElem::from_term(l.clone(), Scalar::one()).eval(left);
            let rv = CElem::from_term(r.clone(), Scalar::one()).eval(right);
            acc = acc.add(&s.mul(&lv).mul(&rv));
        }
        acc
    }
}

/// Coproduct of a `C`-coefficient: group-likes split diagonally, primitive
/// powers expand binomially.
pub fn celem_coproduct(c: &CElem, desc: &CentralDescriptor) -> CCElem {
    let mut out = CCElem::zero();
    for (m, s) in &c.terms {
        let mut acc = CCElem::from_term(desc.unit_mono(), desc.unit_mono(), s.clone());
        for (idx, (&e, sym)) in m.exps.iter().zip(desc.symbols.iter()).enumerate() {
            if e == 0 {
                continue;
            }
            let mut factor = CCElem::zero();
            match sym.kind {
                CentralKind::GroupTorsion(_) | CentralKind::GroupFree => {
                    let mut l = desc.unit_mono();
                    l.exps[idx] = e;
                    let l = desc.normalize_mono(l.exps);
                    factor.accumulate(l.clone(), l, Scalar::one());
                }
                CentralKind::PrimitiveFree => {
                    for j in 0..=e {
                        let mut l = desc.unit_mono();
                        l.exps[idx] = j;
                        let mut r = desc.unit_mono();
                        r.exps[idx] = e - j;
                        let binom = num::integer::binomial(BigInt::from(e), BigInt::from(j));
                        factor.accumulate(
                            l,
                            r,
                            Scalar::from_rational(Rational::from_integer(binom)),
                        );
                    }
                }
            }
            acc = acc.mul(&factor, desc);
        }
        out = out.add(&acc);
    }
    out
}

/// A point of `maxSpec C`: an exact value for each central symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharacter {
    pub values: Vec<Scalar>,
}

impl CentralCharacter {
    pub fn identity(desc: &CentralDescriptor) -> Self {
        CentralCharacter {
            values: desc
                .symbols
                .iter()
                .map(|s| match s.kind {
                    CentralKind::PrimitiveFree => Scalar::zero(),
                    _ => Scalar::one(),
                })
                .collect(),
        }
    }

    pub fn is_identity(&self, desc: &CentralDescriptor) -> bool {
        *self == CentralCharacter::identity(desc)
    }

    /// Check the kind constraints: torsion symbols take roots of unity of
    /// the declared order, free group-likes are nonzero.
    pub fn validate(&self, desc: &CentralDescriptor) -> Result<(), String> {
        if self.values.len() != desc.symbols.len() {
            return Err("character length does not match central descriptor".into());
        }
        for (v, s) in self.values.iter().zip(desc.symbols.iter()) {
            match s.kind {
                CentralKind::GroupTorsion(o) => {
                    if v.is_zero() || !v.pow(o as i64).map(|p| p.is_one()).unwrap_or(false) {
                        return Err(format!(
                            "value {} for torsion symbol {} is not a root of unity of order dividing {}",
                            v, s.name, o
                        ));
                    }
                }
                CentralKind::GroupFree => {
                    if v.is_zero() {
                        return Err(format!("free group-like symbol {} must be nonzero", s.name));
                    }
                }
                CentralKind::PrimitiveFree => {}
            }
        }
        Ok(())
    }

    /// Convolution product: group-like values multiply, primitive values add.
    pub fn convolve(&self, rhs: &CentralCharacter, desc: &CentralDescriptor) -> CentralCharacter {
        let values = self
            .values
            .iter()
            .zip(rhs.values.iter())
            .zip(desc.symbols.iter())
            .map(|((a, b), s)| match s.kind {
                CentralKind::PrimitiveFree => a.add(b),
                _ => a.mul(b),
            })
            .collect();
        CentralCharacter { values }
    }

    /// Convolution inverse via the antipode: group-like values invert,
    /// primitive values negate.
    pub fn inverse(&self, desc: &CentralDescriptor) -> CentralCharacter {
        let values = self
            .values
            .iter()
            .zip(desc.symbols.iter())
            .map(|(a, s)| match s.kind {
                CentralKind::PrimitiveFree => a.neg(),
                _ => a.inverse().expect("group-like character values are nonzero"),
            })
            .collect();
        CentralCharacter { values }
    }

    pub fn label(&self, desc: &CentralDescriptor) -> String {
        if desc.symbols.is_empty() {
            return "m_id".to_string();
        }
        if self.is_identity(desc) {
            return "m_id".to_string();
        }
        let parts: Vec<String> = desc
            .symbols
            .iter()
            .zip(self.values.iter())
            .map(|(s, v)| format!("{}={}", s.name, v))
            .collect();
        format!("m({})", parts.join(","))
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::root_of_unity;

    fn desc_zt() -> CentralDescriptor {
        CentralDescriptor {
            symbols: vec![
                CentralSymbol {
                    name: "z".into(),
                    kind: CentralKind::GroupTorsion(2),
                },
                CentralSymbol {
                    name: "T".into(),
                    kind: CentralKind::PrimitiveFree,
                },
            ],
        }
    }

    #[test]
    fn torsion_exponents_reduce() {
        let d = desc_zt();
        let m = d.normalize_mono(vec![3, 2]);
        assert_eq!(m.exps, vec![1, 2]);
    }

    #[test]
    fn convolution_group_law() {
        let d = desc_zt();
        let a = CentralCharacter {
            values: vec![Scalar::from_int(-1), Scalar::from_int(2)],
        };
        let b = CentralCharacter {
            values: vec![Scalar::from_int(-1), Scalar::from_int(3)],
        };
        let ab = a.convolve(&b, &d);
        assert_eq!(ab.values[0], Scalar::one());
        assert_eq!(ab.values[1], Scalar::from_int(5));
        let id = CentralCharacter::identity(&d);
        assert_eq!(a.convolve(&id, &d), a);
        assert_eq!(a.convolve(&a.inverse(&d), &d), id);
    }

    #[test]
    fn character_validation() {
        let d = desc_zt();
        let ok = CentralCharacter {
            values: vec![Scalar::from_int(-1), Scalar::from_fraction(1, 2)],
        };
        assert!(ok.validate(&d).is_ok());
        let bad = CentralCharacter {
            values: vec![root_of_unity(4, 1), Scalar::zero()],
        };
        assert!(bad.validate(&d).is_err());
    }

    #[test]
    fn primitive_coproduct_is_binomial() {
        let d = desc_zt();
        // T^2 -> T^2 (x) 1 + 2 T (x) T + 1 (x) T^2
        let t2 = CElem::from_term(d.normalize_mono(vec![0, 2]), Scalar::one());
        let cc = celem_coproduct(&t2, &d);
        assert_eq!(cc.terms.len(), 3);
        let mid = cc
            .terms
            .get(&(d.normalize_mono(vec![0, 1]), d.normalize_mono(vec![0, 1])))
            .unwrap();
        assert_eq!(*mid, Scalar::from_int(2));
    }

    #[test]
    fn antipode_on_monomials() {
        let d = desc_zt();
        let m = d.normalize_mono(vec![1, 3]);
        let (m2, sign) = d.mono_antipode(&m);
        assert_eq!(m2.exps, vec![1, 3]);
        assert_eq!(sign, Scalar::from_int(-1));
    }
}
