//! Word rewriting to normal form.
//!
//! Rules rewrite a nonempty word to a noncommutative polynomial. Matching is
//! leftmost-first with the longest matching left-hand side winning at a
//! position, which makes normal forms deterministic for confluent systems. A
//! global step cap guards against mis-oriented rule sets.

use super::central::{CElem, CentralDescriptor};
use super::term::{NCPoly, TensorPoly, Word};
use super::PresentationError;

pub const STEP_CAP: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

pub struct Rewriter<'a> {
    pub rules: &'a [RewriteRule],
    pub desc: &'a CentralDescriptor,
    cap: usize,
}

impl<'a> Rewriter<'a> {
    pub fn new(rules: &'a [RewriteRule], desc: &'a CentralDescriptor) -> Self {
        Rewriter {
            rules,
            desc,
            cap: STEP_CAP,
        }
    }

    pub fn with_cap(rules: &'a [RewriteRule], desc: &'a CentralDescriptor, cap: usize) -> Self {
        Rewriter { rules, desc, cap }
    }

    /// Leftmost match position and rule index; longest lhs wins at a
    /// position, earlier rule wins ties.
    fn find_match(&self, word: &[u32]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            let mut best: Option<(usize, usize)> = None;
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.len();
                if l == 0 || pos + l > word.len() {
                    continue;
                }
                if word[pos..pos + l] == rule.lhs[..] {
                    let better = match best {
                        None => true,
                        Some((blen, _)) => l > blen,
                    };
                    if better {
                        best = Some((l, ri));
                    }
                }
            }
            if let Some((_, ri)) = best {
                return Some((pos, ri));
            }
        }
        None
    }

    /// Normal form of a single word with unit coefficient, drawing steps from
    /// the shared budget.
    pub fn normal_form_word(
        &self,
        word: &Word,
        budget: &mut usize,
    ) -> Result<NCPoly, PresentationError> {
        let mut result = NCPoly::zero();
        let mut work: Vec<(Word, CElem)> = vec![(word.clone(), CElem::one(self.desc))];
        while let Some((w, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            match self.find_match(&w) {
                None => result.accumulate(w, c),
                Some((pos, ri)) => {
                    if *budget == 0 {
                        return Err(PresentationError::StepCapExceeded);
                    }
                    *budget -= 1;
                    let rule = &self.rules[ri];
                    for (rw, rc) in &rule.rhs.terms {
                        let mut nw = Vec::with_capacity(w.len() - rule.lhs.len() + rw.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                        work.push((nw, c.mul(rc, self.desc)));
                    }
                }
            }
        }
        Ok(result)
    }

    pub fn normal_form(&self, e: &NCPoly) -> Result<NCPoly, PresentationError> {
        let mut budget = self.cap;
        let mut out = NCPoly::zero();
        for (w, c) in &e.terms {
            let nf = self.normal_form_word(w, &mut budget)?;
            for (nw, nc) in &nf.terms {
                out.accumulate(nw.clone(), nc.mul(c, self.desc));
            }
        }
        Ok(out)
    }

    /// Normal form in the tensor square: both legs rewrite independently.
    pub fn normal_form_tensor(&self, e: &TensorPoly) -> Result<TensorPoly, PresentationError> {
        let mut budget = self.cap;
        let mut out = TensorPoly::zero();
        for ((l, r), cc) in &e.terms {
            let nl = self.normal_form_word(l, &mut budget)?;
            let nr = self.normal_form_word(r, &mut budget)?;
            for (wl, cl) in &nl.terms {
                for (wr, cr) in &nr.terms {
                    let mut c = cc.mul_left(cl, self.desc);
                    c = c.mul_right(cr, self.desc);
                    out.accumulate(wl.clone(), wr.clone(), c);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct CriticalPair {
    pub rule_a: usize,
    pub rule_b: usize,
    pub superposition: Word,
    pub left_normal_form: NCPoly,
    pub right_normal_form: NCPoly,
}

/// Check local confluence of all rule overlaps up to a superposition length
/// bound; returns the pairs that fail to join. Report-only.
pub fn critical_pairs_check(
    rules: &[RewriteRule],
    desc: &CentralDescriptor,
    max_overlap_len: usize,
) -> Result<Vec<CriticalPair>, PresentationError> {
    let rw = Rewriter::new(rules, desc);
    let mut bad = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (ai, a) in rules.iter().enumerate() {
        for (bi, b) in rules.iter().enumerate() {
            // suffix of a.lhs equals prefix of b.lhs
            for k in 1..=a.lhs.len().min(b.lhs.len()) {
                if ai == bi && k == a.lhs.len() {
                    continue; // a rule trivially overlaps itself in place
                }
                if a.lhs[a.lhs.len() - k..] != b.lhs[..k] {
                    continue;
                }
                let mut sup = a.lhs.clone();
                sup.extend_from_slice(&b.lhs[k..]);
                if sup.len() > max_overlap_len {
                    continue;
                }
                let pos_b = sup.len() - b.lhs.len();
                check_superposition(&rw, ai, bi, &sup, 0, pos_b, a, b, &mut seen, &mut bad)?;
            }
            // b.lhs contained in a.lhs away from the left edge
            if b.lhs.len() < a.lhs.len() {
                for pos in 1..=a.lhs.len() - b.lhs.len() {
                    if a.lhs[pos..pos + b.lhs.len()] == b.lhs[..] {
                        let sup = a.lhs.clone();
                        if sup.len() > max_overlap_len {
                            continue;
                        }
                        check_superposition(&rw, ai, bi, &sup, 0, pos, a, b, &mut seen, &mut bad)?;
                    }
                }
            }
        }
    }
    Ok(bad)
}

#[allow(clippy::too_many_arguments)]
fn check_superposition(
    rw: &Rewriter,
    ai: usize,
    bi: usize,
    sup: &Word,
    pos_a: usize,
    pos_b: usize,
    a: &RewriteRule,
    b: &RewriteRule,
    seen: &mut std::collections::BTreeSet<(usize, usize, Word, usize)>,
    bad: &mut Vec<CriticalPair>,
) -> Result<(), PresentationError> {
    if !seen.insert((ai, bi, sup.clone(), pos_b)) {
        return Ok(());
    }
    let apply = |rule: &RewriteRule, pos: usize| -> NCPoly {
        let mut out = NCPoly::zero();
        for (rw_word, rc) in &rule.rhs.terms {
            let mut w = Vec::new();
            w.extend_from_slice(&sup[..pos]);
            w.extend_from_slice(rw_word);
            w.extend_from_slice(&sup[pos + rule.lhs.len()..]);
            out.accumulate(w, rc.clone());
        }
        out
    };
    let ta = rw.normal_form(&apply(a, pos_a))?;
    let tb = rw.normal_form(&apply(b, pos_b))?;
    if ta != tb {
        bad.push(CriticalPair {
            rule_a: ai,
            rule_b: bi,
            superposition: sup.clone(),
            left_normal_form: ta,
            right_normal_form: tb,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Scalar;

    fn free_desc() -> CentralDescriptor {
        CentralDescriptor::default()
    }

    fn rule(lhs: Word, rhs_terms: Vec<(Word, i64)>, desc: &CentralDescriptor) -> RewriteRule {
        let mut rhs = NCPoly::zero();
        for (w, c) in rhs_terms {
            rhs.accumulate(w, CElem::from_scalar(desc, Scalar::from_int(c)));
        }
        RewriteRule { lhs, rhs }
    }

    #[test]
    fn group_inverse_pair_is_confluent() {
        let d = free_desc();
        // ab -> 1, ba -> 1 on free generators
        let rules = vec![
            rule(vec![0, 1], vec![(vec![], 1)], &d),
            rule(vec![1, 0], vec![(vec![], 1)], &d),
        ];
        let report = critical_pairs_check(&rules, &d, 8).unwrap();
        assert!(report.is_empty(), "unexpected divergence: {report:?}");
        // aba -> a both ways
        let rw = Rewriter::new(&rules, &d);
        let nf = rw
            .normal_form(&NCPoly::from_word(vec![0, 1, 0], &d))
            .unwrap();
        assert_eq!(nf, NCPoly::from_word(vec![0], &d));
    }

    #[test]
    fn joinable_overlap_of_absorbing_rules() {
        let d = free_desc();
        // aa -> a and a -> 1 join on every overlap: both sides of the
        // superposition aa normalize to the empty word
        let rules = vec![
            rule(vec![0, 0], vec![(vec![0], 1)], &d),
            rule(vec![0], vec![(vec![], 1)], &d),
        ];
        let report = critical_pairs_check(&rules, &d, 8).unwrap();
        assert!(report.is_empty());
        let rw = Rewriter::new(&rules, &d);
        let nf = rw
            .normal_form(&NCPoly::from_word(vec![0, 0, 0], &d))
            .unwrap();
        assert_eq!(nf, NCPoly::one(&d));
    }

    #[test]
    fn genuine_divergence_is_reported() {
        let d = free_desc();
        // a b -> 1 and b -> a with no rule for a a: superposition ab gives 1
        // one way and a a the other
        let rules = vec![
            rule(vec![0, 1], vec![(vec![], 1)], &d),
            rule(vec![1], vec![(vec![0], 1)], &d),
        ];
        let report = critical_pairs_check(&rules, &d, 8).unwrap();
        assert!(!report.is_empty());
    }

    #[test]
    fn step_cap_detects_growth() {
        let d = free_desc();
        // a -> a a grows forever
        let rules = vec![rule(vec![0], vec![(vec![0, 0], 1)], &d)];
        let rw = Rewriter::with_cap(&rules, &d, 500);
        let err = rw.normal_form(&NCPoly::from_word(vec![0], &d)).unwrap_err();
        assert!(matches!(err, PresentationError::StepCapExceeded));
    }
}
