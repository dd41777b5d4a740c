//! Validated Hopf-algebra presentations and their fiber algebras.

use std::collections::HashMap;

use crate::exactmath::Scalar;
use crate::findim::{basis_vec, CoalgebraData, StructureConstAlgebra};

use super::central::{celem_coproduct, CElem, CentralCharacter, CentralDescriptor, CentralKind};
use super::parse::{parse_text, ParsedPresentation};
use super::rewrite::{critical_pairs_check, CriticalPair, RewriteRule, Rewriter};
use super::term::{display_word, NCPoly, TensorPoly, Word};
use super::PresentationError;

/// A parsed and validated presentation of a Hopf algebra `H` together with
/// its designated central Hopf subalgebra `C` and a `C`-module basis.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub gens: Vec<String>,
    pub central: CentralDescriptor,
    pub rules: Vec<RewriteRule>,
    pub coproduct: Vec<TensorPoly>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<NCPoly>,
    pub basis: Vec<Word>,
    /// Word in the generators defining each central symbol.
    pub central_defs: Vec<Word>,
    basis_index: HashMap<Word, usize>,
    unit_index: usize,
    /// Structure constants over `C`: `sc[i][j][k]` is the `C`-coefficient of
    /// basis word `k` in the product of basis words `i` and `j`.
    sc: Vec<Vec<Vec<CElem>>>,
}

/// Default evaluation points for primitive central symbols.
pub fn default_primitive_samples() -> Vec<Scalar> {
    vec![
        Scalar::zero(),
        Scalar::one(),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_fraction(1, 2),
    ]
}

/// Default evaluation points for free group-like central symbols.
pub fn default_group_samples() -> Vec<Scalar> {
    vec![Scalar::one(), Scalar::from_int(-1), Scalar::from_int(2)]
}

/// The sampled slice of `maxSpec C` an analysis runs over.
#[derive(Debug, Clone)]
pub struct CharacterSpace {
    /// Full sample grid; the identity character comes first.
    pub sampled: Vec<CentralCharacter>,
    /// Exact enumeration of the torsion directions, free directions pinned
    /// at their identity values.
    pub torsion: Vec<CentralCharacter>,
    pub identity: CentralCharacter,
    /// True when `C` is finite-dimensional, so `torsion` is all of
    /// `maxSpec C`.
    pub complete: bool,
}

pub fn parse_presentation(text: &str) -> Result<HopfPresentation, PresentationError> {
    let parsed = parse_text(text)?;
    HopfPresentation::from_parsed(parsed)
}

impl HopfPresentation {
    fn from_parsed(parsed: ParsedPresentation) -> Result<Self, PresentationError> {
        let ParsedPresentation {
            table,
            rules,
            coproduct,
            counit,
            antipode,
            basis,
        } = parsed;
        let gens = table.gens;
        let central = table.central;

        // Defining rule for each central symbol: a rule whose right-hand side
        // is exactly that symbol.
        let mut central_defs = vec![None; central.len()];
        for rule in &rules {
            if rule.rhs.terms.len() != 1 {
                continue;
            }
            let (w, c) = rule.rhs.terms.iter().next().unwrap();
            if !w.is_empty() || c.terms.len() != 1 {
                continue;
            }
            let (mono, s) = c.terms.iter().next().unwrap();
            if !s.is_one() {
                continue;
            }
            let hot: Vec<usize> = (0..central.len()).filter(|&i| mono.exps[i] != 0).collect();
            if hot.len() == 1 && mono.exps[hot[0]] == 1 && central_defs[hot[0]].is_none() {
                central_defs[hot[0]] = Some(rule.lhs.clone());
            }
        }
        let central_defs: Vec<Word> = central_defs
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.ok_or_else(|| PresentationError::HopfMapInconsistent {
                    detail: format!(
                        "central symbol {} has no defining rule of the form word -> {}",
                        central.symbols[i].name, central.symbols[i].name
                    ),
                })
            })
            .collect::<Result<_, _>>()?;

        let mut basis_index = HashMap::new();
        for (i, w) in basis.iter().enumerate() {
            basis_index.insert(w.clone(), i);
        }
        let unit_index =
            *basis_index
                .get(&vec![])
                .ok_or_else(|| PresentationError::HopfMapInconsistent {
                    detail: "the basis must contain the unit word 1".into(),
                })?;

        let mut pres = HopfPresentation {
            gens,
            central,
            rules,
            coproduct,
            counit,
            antipode,
            basis,
            central_defs,
            basis_index,
            unit_index,
            sc: Vec::new(),
        };
        pres.validate()?;
        Ok(pres)
    }

    fn rewriter(&self) -> Rewriter<'_> {
        Rewriter::new(&self.rules, &self.central)
    }

    fn validate(&mut self) -> Result<(), PresentationError> {
        let rw = self.rewriter();

        // basis words must already be in normal form
        for w in &self.basis {
            let mut budget = super::rewrite::STEP_CAP;
            let nf = rw.normal_form_word(w, &mut budget)?;
            if nf != NCPoly::from_word(w.clone(), &self.central) {
                return Err(PresentationError::BasisNotClosed {
                    detail: format!(
                        "basis word {} is not in normal form",
                        display_word(w, &self.gens)
                    ),
                });
            }
        }

        // centrality and torsion orders of the defining words
        for (idx, def) in self.central_defs.iter().enumerate() {
            let sym = &self.central.symbols[idx];
            for g in 0..self.gens.len() as u32 {
                let mut left = def.clone();
                left.push(g);
                let mut right = vec![g];
                right.extend_from_slice(def);
                let mut budget = super::rewrite::STEP_CAP;
                let nl = rw.normal_form_word(&left, &mut budget)?;
                let nr = rw.normal_form_word(&right, &mut budget)?;
                if nl != nr {
                    return Err(PresentationError::HopfMapInconsistent {
                        detail: format!(
                            "central symbol {} does not commute with generator {}",
                            sym.name, self.gens[g as usize]
                        ),
                    });
                }
            }
            if let CentralKind::GroupTorsion(order) = sym.kind {
                let mut w = Vec::new();
                for _ in 0..order {
                    w.extend_from_slice(def);
                }
                let mut budget = super::rewrite::STEP_CAP;
                let nf = rw.normal_form_word(&w, &mut budget)?;
                if nf != NCPoly::one(&self.central) {
                    return Err(PresentationError::HopfMapInconsistent {
                        detail: format!(
                            "torsion symbol {} does not satisfy {}^{} = 1 under the rules",
                            sym.name, sym.name, order
                        ),
                    });
                }
            }
        }

        // the counit, coproduct and antipode must respect every rule
        for (ri, rule) in self.rules.iter().enumerate() {
            let lhs_poly = NCPoly::from_word(rule.lhs.clone(), &self.central);
            let eps_l = self.counit_of(&lhs_poly);
            let eps_r = self.counit_of(&rule.rhs);
            if eps_l != eps_r {
                return Err(PresentationError::HopfMapInconsistent {
                    detail: format!(
                        "counit disagrees on rule {}: {} vs {}",
                        self.rule_display(ri),
                        eps_l,
                        eps_r
                    ),
                });
            }
            let dl = rw.normal_form_tensor(&self.delta_of(&lhs_poly)?)?;
            let dr = rw.normal_form_tensor(&self.delta_of(&rule.rhs)?)?;
            if dl != dr {
                return Err(PresentationError::HopfMapInconsistent {
                    detail: format!("coproduct disagrees on rule {}", self.rule_display(ri)),
                });
            }
            let sl = rw.normal_form(&self.antipode_of(&lhs_poly)?)?;
            let sr = rw.normal_form(&self.antipode_of(&rule.rhs)?)?;
            if sl != sr {
                return Err(PresentationError::HopfMapInconsistent {
                    detail: format!("antipode disagrees on rule {}", self.rule_display(ri)),
                });
            }
        }

        // closure of the basis under multiplication, collecting structure
        // constants over C
        let n = self.basis.len();
        let mut sc = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut w = self.basis[i].clone();
                w.extend_from_slice(&self.basis[j]);
                let mut budget = super::rewrite::STEP_CAP;
                let nf = rw.normal_form_word(&w, &mut budget)?;
                let mut coords = vec![CElem::zero(); n];
                for (word, c) in &nf.terms {
                    match self.basis_index.get(word) {
                        Some(&k) => coords[k] = c.clone(),
                        None => {
                            return Err(PresentationError::BasisNotClosed {
                                detail: format!(
                                    "product {} * {} normalizes to the non-basis word {}",
                                    display_word(&self.basis[i], &self.gens),
                                    display_word(&self.basis[j], &self.gens),
                                    display_word(word, &self.gens)
                                ),
                            })
                        }
                    }
                }
                sc[i][j] = coords;
            }
        }
        self.sc = sc;

        // associativity of the structure constants, exhaustively over C
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.sc_mul(&self.sc[i][j], k, true);
                    let right = self.sc_mul(&self.sc[j][k], i, false);
                    if left != right {
                        return Err(PresentationError::HopfMapInconsistent {
                            detail: format!(
                                "structure constants are not associative at ({i},{j},{k})"
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Multiply a coordinate vector by basis element `other` on the right
    /// (`right = true`) or left.
    fn sc_mul(&self, coords: &[CElem], other: usize, right: bool) -> Vec<CElem> {
        let n = self.basis.len();
        let mut out = vec![CElem::zero(); n];
        for (m, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let prod = if right {
                &self.sc[m][other]
            } else {
                &self.sc[other][m]
            };
            for (k, p) in prod.iter().enumerate() {
                if !p.is_zero() {
                    out[k] = out[k].add(&p.mul(c, &self.central));
                }
            }
        }
        out
    }

    fn rule_display(&self, ri: usize) -> String {
        let r = &self.rules[ri];
        format!(
            "{} -> {}",
            display_word(&r.lhs, &self.gens),
            r.rhs.display(&self.gens, &self.central)
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn basis_label(&self, i: usize) -> String {
        display_word(&self.basis[i], &self.gens)
    }

    pub fn basis_index_of(&self, w: &Word) -> Option<usize> {
        self.basis_index.get(w).copied()
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<CElem>>> {
        &self.sc
    }

    /// Counit of a noncommutative polynomial: multiplicative on words,
    /// identity-character evaluation on coefficients.
    pub fn counit_of(&self, p: &NCPoly) -> Scalar {
        let id = CentralCharacter::identity(&self.central);
        let mut acc = Scalar::zero();
        for (w, c) in &p.terms {
            let mut v = c.eval(&id);
            for g in w {
                v = v.mul(&self.counit[*g as usize]);
            }
            acc = acc.add(&v);
        }
        acc
    }

    /// Coproduct of a noncommutative polynomial in the tensor square, not
    /// yet normalized.
    pub fn delta_of(&self, p: &NCPoly) -> Result<TensorPoly, PresentationError> {
        let mut out = TensorPoly::zero();
        for (w, c) in &p.terms {
            let mut acc = TensorPoly::one(&self.central);
            for g in w {
                acc = acc.mul(&self.coproduct[*g as usize], &self.central);
            }
            let cc = celem_coproduct(c, &self.central);
            for ((l, r), c0) in &acc.terms {
                out.accumulate(l.clone(), r.clone(), c0.mul(&cc, &self.central));
            }
        }
        Ok(out)
    }

    /// Antipode of a noncommutative polynomial: anti-multiplicative on
    /// words, the central antipode on coefficients.
    pub fn antipode_of(&self, p: &NCPoly) -> Result<NCPoly, PresentationError> {
        let mut out = NCPoly::zero();
        for (w, c) in &p.terms {
            let mut acc = NCPoly::one(&self.central);
            for g in w.iter().rev() {
                acc = acc.mul(&self.antipode[*g as usize], &self.central);
            }
            let sc = c.antipode(&self.central);
            for (word, c0) in &acc.terms {
                out.accumulate(word.clone(), c0.mul(&sc, &self.central));
            }
        }
        Ok(out)
    }

    /// Normal form supported on the fiber basis; with `spec`, central
    /// coefficients are specialized at the character.
    pub fn normal_form(
        &self,
        e: &NCPoly,
        spec: Option<&CentralCharacter>,
    ) -> Result<NCPoly, PresentationError> {
        let nf = self.rewriter().normal_form(e)?;
        Ok(match spec {
            None => nf,
            Some(chi) => nf.specialize(chi, &self.central),
        })
    }

    pub fn critical_pairs(&self, max_overlap_len: usize) -> Result<Vec<CriticalPair>, PresentationError> {
        critical_pairs_check(&self.rules, &self.central, max_overlap_len)
    }

    /// Enumerate characters: exact roots of unity in the torsion directions,
    /// sample values in the free directions.
    pub fn characters(
        &self,
        primitive_samples: &[Scalar],
        group_samples: &[Scalar],
    ) -> Result<CharacterSpace, PresentationError> {
        let identity = CentralCharacter::identity(&self.central);
        let mut value_lists: Vec<Vec<Scalar>> = Vec::new();
        let mut torsion_lists: Vec<Vec<Scalar>> = Vec::new();
        for sym in &self.central.symbols {
            match sym.kind {
                CentralKind::GroupTorsion(o) => {
                    let vals: Vec<Scalar> = (0..o)
                        .map(|k| crate::exactmath::root_of_unity(o, k as i64))
                        .collect();
                    value_lists.push(vals.clone());
                    torsion_lists.push(vals);
                }
                CentralKind::GroupFree => {
                    for v in group_samples {
                        if v.is_zero() {
                            return Err(PresentationError::InvalidCharacter {
                                detail: format!(
                                    "sample 0 is not a valid value for free group-like symbol {}",
                                    sym.name
                                ),
                            });
                        }
                    }
                    value_lists.push(group_samples.to_vec());
                    torsion_lists.push(vec![Scalar::one()]);
                }
                CentralKind::PrimitiveFree => {
                    value_lists.push(primitive_samples.to_vec());
                    torsion_lists.push(vec![Scalar::zero()]);
                }
            }
        }
        let mut sampled = cartesian(&value_lists);
        let torsion = cartesian(&torsion_lists);
        if !sampled.contains(&identity) {
            sampled.insert(0, identity.clone());
        } else {
            // keep the identity first for deterministic reporting
            let pos = sampled.iter().position(|c| *c == identity).unwrap();
            let id = sampled.remove(pos);
            sampled.insert(0, id);
        }
        for chi in sampled.iter().chain(torsion.iter()) {
            chi.validate(&self.central)
                .map_err(|detail| PresentationError::InvalidCharacter { detail })?;
        }
        let complete = self.central.is_torsion_only();
        Ok(CharacterSpace {
            sampled,
            torsion,
            identity,
            complete,
        })
    }

    /// The fiber algebra at a central character: specialize the structure
    /// constants. At the identity character, coalgebra data is attached and
    /// the Hopf axioms are verified on the basis.
    pub fn build_fiber(
        &self,
        chi: &CentralCharacter,
    ) -> Result<StructureConstAlgebra, PresentationError> {
        chi.validate(&self.central)
            .map_err(|detail| PresentationError::InvalidCharacter { detail })?;
        let n = self.dim();
        let sc: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.sc[i][j].iter().map(|c| c.eval(chi)).collect())
                    .collect()
            })
            .collect();
        let coalgebra = if chi.is_identity(&self.central) {
            Some(self.identity_coalgebra()?)
        } else {
            None
        };
        let alg = StructureConstAlgebra {
            dim: n,
            labels: (0..n).map(|i| self.basis_label(i)).collect(),
            sc,
            unit: basis_vec(n, self.unit_index),
            coalgebra,
        };
        alg.validate()
            .map_err(|e| PresentationError::HopfMapInconsistent {
                detail: format!("fiber at {} is malformed: {e}", chi.label(&self.central)),
            })?;
        Ok(alg)
    }

    fn identity_coalgebra(&self) -> Result<CoalgebraData, PresentationError> {
        let rw = self.rewriter();
        let id = CentralCharacter::identity(&self.central);
        let n = self.dim();
        let mut delta = Vec::with_capacity(n);
        for w in &self.basis {
            let tp = rw.normal_form_tensor(&self.delta_of(&NCPoly::from_word(w.clone(), &self.central))?)?;
            let mut terms = Vec::new();
            for ((l, r), cc) in &tp.terms {
                let (Some(&li), Some(&ri)) = (self.basis_index.get(l), self.basis_index.get(r))
                else {
                    return Err(PresentationError::BasisNotClosed {
                        detail: format!(
                            "coproduct of {} leaves the basis",
                            display_word(w, &self.gens)
                        ),
                    });
                };
                let s = cc.eval(&id, &id);
                if !s.is_zero() {
                    terms.push((li, ri, s));
                }
            }
            delta.push(terms);
        }
        let epsilon: Vec<Scalar> = self
            .basis
            .iter()
            .map(|w| self.counit_of(&NCPoly::from_word(w.clone(), &self.central)))
            .collect();
        let mut antipode = crate::exactmath::Matrix::zero(n, n);
        for (j, w) in self.basis.iter().enumerate() {
            let s = rw.normal_form(&self.antipode_of(&NCPoly::from_word(w.clone(), &self.central))?)?;
            for (word, c) in &s.terms {
                let Some(&k) = self.basis_index.get(word) else {
                    return Err(PresentationError::BasisNotClosed {
                        detail: format!(
                            "antipode of {} leaves the basis",
                            display_word(w, &self.gens)
                        ),
                    });
                };
                *antipode.at_mut(k, j) = c.eval(&id);
            }
        }
        Ok(CoalgebraData {
            delta,
            epsilon,
            antipode,
        })
    }

    /// Whether `H` itself is finite-dimensional, i.e. `C` is spanned by
    /// torsion group-likes.
    pub fn is_finite_dimensional(&self) -> bool {
        self.central.is_torsion_only()
    }

    /// The whole algebra `H` as one structure-constant record with coalgebra
    /// data, available when `C` is finite-dimensional. The basis is
    /// (central monomial, basis word) pairs.
    pub fn full_record(&self) -> Result<StructureConstAlgebra, PresentationError> {
        let monos = self.central.torsion_monomials().ok_or_else(|| {
            PresentationError::UnsupportedCentralShape {
                detail: "the full algebra record requires a finite-dimensional central ring".into(),
            }
        })?;
        let rw = self.rewriter();
        let n = self.dim();
        let t = monos.len();
        let dim = t * n;
        let mono_index: HashMap<_, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let flat = |mi: usize, wi: usize| mi * n + wi;
        let mut labels = Vec::with_capacity(dim);
        for m in &monos {
            for wi in 0..n {
                let w = self.basis_label(wi);
                let ml = m.display(&self.central);
                labels.push(if ml == "1" {
                    w
                } else if w == "1" {
                    ml
                } else {
                    format!("{ml}*{w}")
                });
            }
        }
        let mut sc = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for (mi, m1) in monos.iter().enumerate() {
            for (mj, m2) in monos.iter().enumerate() {
                let m12 = self.central.mono_mul(m1, m2);
                for i in 0..n {
                    for j in 0..n {
                        let coords = &self.sc[i][j];
                        let target = &mut sc[flat(mi, i)][flat(mj, j)];
                        for (k, c) in coords.iter().enumerate() {
                            for (m3, s) in &c.terms {
                                let mk = mono_index[&self.central.mono_mul(&m12, m3)];
                                target[flat(mk, k)] = target[flat(mk, k)].add(s);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![Scalar::zero(); dim];
        unit[flat(mono_index[&self.central.unit_mono()], self.unit_index)] = Scalar::one();

        // coalgebra data on the full record; torsion monomials are group-like
        let mut delta = vec![Vec::new(); dim];
        let mut epsilon = vec![Scalar::zero(); dim];
        let mut antipode = crate::exactmath::Matrix::zero(dim, dim);
        for (mi, m) in monos.iter().enumerate() {
            for (wi, w) in self.basis.iter().enumerate() {
                let col = flat(mi, wi);
                epsilon[col] = self.counit_of(&NCPoly::from_word(w.clone(), &self.central));
                let tp = rw.normal_form_tensor(
                    &self.delta_of(&NCPoly::from_word(w.clone(), &self.central))?,
                )?;
                let mut terms = Vec::new();
                for ((l, r), cc) in &tp.terms {
                    let (Some(&li), Some(&ri)) =
                        (self.basis_index.get(l), self.basis_index.get(r))
                    else {
                        return Err(PresentationError::BasisNotClosed {
                            detail: "coproduct leaves the basis".into(),
                        });
                    };
                    for ((a, b), s) in &cc.terms {
                        let la = mono_index[&self.central.mono_mul(m, a)];
                        let rb = mono_index[&self.central.mono_mul(m, b)];
                        terms.push((flat(la, li), flat(rb, ri), s.clone()));
                    }
                }
                delta[col] = terms;
                let sp = rw.normal_form(&self.antipode_of(&NCPoly::from_word(w.clone(), &self.central))?)?;
                let (m_inv, _) = self.central.mono_antipode(m);
                for (word, c) in &sp.terms {
                    let Some(&k) = self.basis_index.get(word) else {
                        return Err(PresentationError::BasisNotClosed {
                            detail: "antipode leaves the basis".into(),
                        });
                    };
                    for (m3, s) in &c.terms {
                        let mk = mono_index[&self.central.mono_mul(&m_inv, m3)];
                        let row = flat(mk, k);
                        let v = antipode.at(row, col).add(s);
                        *antipode.at_mut(row, col) = v;
                    }
                }
            }
        }
        let alg = StructureConstAlgebra {
            dim,
            labels,
            sc,
            unit,
            coalgebra: Some(CoalgebraData {
                delta,
                epsilon,
                antipode,
            }),
        };
        alg.validate()
            .map_err(|e| PresentationError::HopfMapInconsistent {
                detail: format!("full algebra record is malformed: {e}"),
            })?;
        Ok(alg)
    }
}

fn cartesian(lists: &[Vec<Scalar>]) -> Vec<CentralCharacter> {
    let mut out = vec![CentralCharacter { values: vec![] }];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for c in &out {
            for v in list {
                let mut values = c.values.clone();
                values.push(v.clone());
                next.push(CentralCharacter { values });
            }
        }
        out = next;
    }
    out
}
