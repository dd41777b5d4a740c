//! The Chevalley property for a finite-dimensional Hopf algebra record:
//! the Jacobson radical must be a coideal stable under the antipode, i.e. a
//! Hopf ideal. All three inclusions are checked by exact linear algebra.

use crate::exactmath::Scalar;

use super::algebra::StructureConstAlgebra;
use super::radical::RadicalData;
use super::FindimError;

#[derive(Debug, Clone)]
pub struct ChevalleyReport {
    pub holds: bool,
    /// On failure: the offending radical vector and which inclusion broke.
    pub witness: Option<(Vec<Scalar>, String)>,
}

/// Test whether the radical is a Hopf ideal: `eps(J) = 0`, `S(J)` inside
/// `J`, and `Delta(J)` inside `J (x) A + A (x) J`. The coproduct membership
/// is decided by projecting both tensor legs to the semisimple quotient.
pub fn chevalley_property(
    a: &StructureConstAlgebra,
    rad: &RadicalData,
) -> Result<ChevalleyReport, FindimError> {
    let co = a.coalgebra.as_ref().ok_or(FindimError::MissingCoalgebraData)?;
    let n = a.dim;
    let s = rad.ss_dim;
    for j in &rad.radical_basis {
        // counit must kill the radical
        let mut eps = Scalar::zero();
        for (k, c) in j.iter().enumerate() {
            eps = eps.add(&c.mul(&co.epsilon[k]));
        }
        if !eps.is_zero() {
            return Ok(ChevalleyReport {
                holds: false,
                witness: Some((j.clone(), format!("counit value {eps} is nonzero"))),
            });
        }
        // antipode stability
        let sj: Vec<Scalar> = (0..n)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (k, c) in j.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&c.mul(co.antipode.at(r, k)));
                    }
                }
                acc
            })
            .collect();
        if !rad.contains(&sj) {
            return Ok(ChevalleyReport {
                holds: false,
                witness: Some((j.clone(), "antipode image leaves the radical".into())),
            });
        }
        // Delta(j) in J (x) A + A (x) J iff (pi (x) pi) Delta(j) = 0
        let mut projected = vec![Scalar::zero(); s * s];
        for (k, c) in j.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, r, d) in &co.delta[k] {
                let pl = rad.project(&basis_vec_scalar(n, *l));
                let pr = rad.project(&basis_vec_scalar(n, *r));
                let cd = c.mul(d);
                for (li, lv) in pl.iter().enumerate() {
                    if lv.is_zero() {
                        continue;
                    }
                    for (ri, rv) in pr.iter().enumerate() {
                        if rv.is_zero() {
                            continue;
                        }
                        let idx = li * s + ri;
                        projected[idx] = projected[idx].add(&cd.mul(lv).mul(rv));
                    }
                }
            }
        }
        if projected.iter().any(|c| !c.is_zero()) {
            return Ok(ChevalleyReport {
                holds: false,
                witness: Some((
                    j.clone(),
                    "coproduct image is not contained in J (x) A + A (x) J".into(),
                )),
            });
        }
    }
    Ok(ChevalleyReport {
        holds: true,
        witness: None,
    })
}

fn basis_vec_scalar(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
