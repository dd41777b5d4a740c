//! Exact matrix representations of a presented Hopf algebra, with tensor
//! products via the coproduct and left duals via the antipode.

use crate::exactmath::{Matrix, Scalar};

use super::central::CentralCharacter;
use super::hopf::HopfPresentation;
use super::term::{display_word, NCPoly, Word};
use super::PresentationError;

/// A module over the fiber algebra at `character`, given by one exact matrix
/// per generator. Central symbols act by the character value.
#[derive(Debug, Clone)]
pub struct Representation {
    pub character: CentralCharacter,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl Representation {
    pub fn new(character: CentralCharacter, action: Vec<Matrix>) -> Self {
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        Representation {
            character,
            dim,
            action,
        }
    }

    /// The one-dimensional module cut out by the counit.
    pub fn trivial(pres: &HopfPresentation) -> Self {
        let action = pres
            .counit
            .iter()
            .map(|e| Matrix::new(1, 1, vec![e.clone()]))
            .collect();
        Representation::new(CentralCharacter::identity(&pres.central), action)
    }

    pub fn word_matrix(&self, w: &Word) -> Matrix {
        let mut m = Matrix::identity(self.dim);
        for g in w {
            m = m.mul(&self.action[*g as usize]);
        }
        m
    }

    /// Evaluate a noncommutative polynomial, specializing central
    /// coefficients at this module's character.
    pub fn eval(&self, p: &NCPoly) -> Matrix {
        let mut out = Matrix::zero(self.dim, self.dim);
        for (w, c) in &p.terms {
            let s = c.eval(&self.character);
            if s.is_zero() {
                continue;
            }
            out = out.add(&self.word_matrix(w).scale(&s));
        }
        out
    }
}

/// Outcome of checking a representation against every rule and central
/// defining word.
#[derive(Debug, Clone)]
pub struct RepCheck {
    pub ok: bool,
    pub first_violation: Option<String>,
}

/// Verify that `rep` satisfies every rule after specializing central symbols
/// through its character, and that central defining words act by the
/// character scalar.
pub fn verify_rep(pres: &HopfPresentation, rep: &Representation) -> RepCheck {
    if rep.action.len() != pres.gens.len() {
        return RepCheck {
            ok: false,
            first_violation: Some("action map does not cover all generators".into()),
        };
    }
    for (ri, rule) in pres.rules.iter().enumerate() {
        let lhs = rep.word_matrix(&rule.lhs);
        let rhs = rep.eval(&rule.rhs);
        if lhs != rhs {
            return RepCheck {
                ok: false,
                first_violation: Some(format!(
                    "rule {} fails: {} -> {}",
                    ri,
                    display_word(&rule.lhs, &pres.gens),
                    rule.rhs.display(&pres.gens, &pres.central)
                )),
            };
        }
    }
    for (si, def) in pres.central_defs.iter().enumerate() {
        let expected = Matrix::identity(rep.dim).scale(&rep.character.values[si]);
        if rep.word_matrix(def) != expected {
            return RepCheck {
                ok: false,
                first_violation: Some(format!(
                    "central symbol {} does not act by its character value",
                    pres.central.symbols[si].name
                )),
            };
        }
    }
    RepCheck {
        ok: true,
        first_violation: None,
    }
}

/// Tensor product of modules: the fiber at the convolution character acts
/// through the coproduct.
pub fn tensor_rep(
    pres: &HopfPresentation,
    v: &Representation,
    w: &Representation,
) -> Result<Representation, PresentationError> {
    let character = v.character.convolve(&w.character, &pres.central);
    let dim = v.dim * w.dim;
    let mut action = Vec::with_capacity(pres.gens.len());
    for g in 0..pres.gens.len() {
        let mut m = Matrix::zero(dim, dim);
        for ((lw, rw), cc) in &pres.coproduct[g].terms {
            let s = cc.eval(&v.character, &w.character);
            if s.is_zero() {
                continue;
            }
            let lm = v.word_matrix(lw);
            let rm = w.word_matrix(rw);
            m = m.add(&kron(&lm, &rm).scale(&s));
        }
        action.push(m);
    }
    Ok(Representation::new(character, action))
}

/// Left dual: the antipode expression acts through the transpose, at the
/// inverse character.
pub fn dual_rep(
    pres: &HopfPresentation,
    w: &Representation,
) -> Result<Representation, PresentationError> {
    let character = w.character.inverse(&pres.central);
    let action = (0..pres.gens.len())
        .map(|g| w.eval(&pres.antipode[g]).transpose())
        .collect();
    Ok(Representation::new(character, action))
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zero(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let s = a.at(i, j);
            if s.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let v = s.mul(b.at(k, l));
                    if !v.is_zero() {
                        *out.at_mut(i * b.rows() + k, j * b.cols() + l) = v;
                    }
                }
            }
        }
    }
    out
}

#[allow(dead_code)]
fn scalar_entries(m: &Matrix) -> Vec<Scalar> {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| m.at(i, j).clone()))
        .collect()
}
