//! Noncommutative polynomials in the algebra generators with central-ring
//! coefficients, and their analogues in the tensor square.

use std::collections::BTreeMap;

use super::central::{CCElem, CElem, CentralCharacter, CentralDescriptor};

/// A word in the generators; the empty word is the algebra unit.
pub type Word = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    pub terms: BTreeMap<Word, CElem>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one(desc: &CentralDescriptor) -> Self {
        NCPoly::from_term(vec![], CElem::one(desc))
    }

    pub fn from_word(w: Word, desc: &CentralDescriptor) -> Self {
        NCPoly::from_term(w, CElem::one(desc))
    }

    pub fn from_term(w: Word, c: CElem) -> Self {
        let mut p = NCPoly::zero();
        p.accumulate(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, w: Word, c: CElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &NCPoly) -> NCPoly {
        self.add(&rhs.neg())
    }

    /// Free product: concatenate words, multiply coefficients. Callers
    /// normalize afterwards.
    pub fn mul(&self, rhs: &NCPoly, desc: &CentralDescriptor) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.accumulate(w, c1.mul(c2, desc));
            }
        }
        out
    }

    pub fn scale(&self, c: &CElem, desc: &CentralDescriptor) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c0) in &self.terms {
            out.accumulate(w.clone(), c0.mul(c, desc));
        }
        out
    }

    /// Specialize every coefficient at a central character, keeping words.
    pub fn specialize(&self, chi: &CentralCharacter, desc: &CentralDescriptor) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.accumulate(w.clone(), CElem::from_scalar(desc, c.eval(chi)));
        }
        out
    }

    pub fn display(&self, gens: &[String], desc: &CentralDescriptor) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word = display_word(w, gens);
            let coeff = c.display(desc);
            if coeff == "1" {
                parts.push(word);
            } else if w.is_empty() {
                parts.push(format!("({coeff})"));
            } else {
                parts.push(format!("({coeff})*{word}"));
            }
        }
        parts.join(" + ")
    }
}

pub fn display_word(w: &Word, gens: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let g = w[i];
        let mut j = i;
        while j < w.len() && w[j] == g {
            j += 1;
        }
        let run = j - i;
        if run == 1 {
            parts.push(gens[g as usize].clone());
        } else {
            parts.push(format!("{}^{}", gens[g as usize], run));
        }
        i = j;
    }
    parts.join(" ")
}

/// Element of the tensor square: pairs of words with `C (x) C` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    pub terms: BTreeMap<(Word, Word), CCElem>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn one(desc: &CentralDescriptor) -> Self {
        TensorPoly::from_term(vec![], vec![], CCElem::one(desc))
    }

    pub fn from_term(left: Word, right: Word, c: CCElem) -> Self {
        let mut p = TensorPoly::zero();
        p.accumulate(left, right, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, left: Word, right: Word, c: CCElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.accumulate(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TensorPoly {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    (
                        k.clone(),
                        CCElem {
                            terms: c.terms.iter().map(|(m, s)| (m.clone(), s.neg())).collect(),
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &TensorPoly) -> TensorPoly {
        self.add(&rhs.neg())
    }

    /// Componentwise free product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, rhs: &TensorPoly, desc: &CentralDescriptor) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &rhs.terms {
                let mut l = l1.clone();
                l.extend_from_slice(l2);
                let mut r = r1.clone();
                r.extend_from_slice(r2);
                out.accumulate(l, r, c1.mul(c2, desc));
            }
        }
        out
    }
}
