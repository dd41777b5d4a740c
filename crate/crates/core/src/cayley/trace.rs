//! The regular trace over the central ring: traces of left multiplication
//! on the fiber basis, and the symbolic Gram matrix of pairwise traces.

use crate::exactmath::{Poly, Scalar};
use crate::presentation::{CElem, CentralDescriptor, CentralKind, HopfPresentation};

use super::CayleyError;

/// Supported shapes of the central ring for symbolic ideal arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralShape {
    /// No central symbols: `C` is the ground field.
    Field,
    /// A single primitive symbol: `C` is a univariate polynomial ring.
    Univariate { sym: usize },
    /// Torsion group-likes only: `C` is finite-dimensional.
    FiniteDim,
}

pub fn central_shape(desc: &CentralDescriptor) -> Result<CentralShape, CayleyError> {
    if desc.is_empty() {
        return Ok(CentralShape::Field);
    }
    if desc.is_torsion_only() {
        return Ok(CentralShape::FiniteDim);
    }
    let primitive: Vec<usize> = desc
        .symbols
        .iter()
        .enumerate()
        .filter(|(_, s)| s.kind == CentralKind::PrimitiveFree)
        .map(|(i, _)| i)
        .collect();
    if primitive.len() == 1 && desc.symbols.len() == 1 {
        return Ok(CentralShape::Univariate { sym: primitive[0] });
    }
    Err(CayleyError::UnsupportedCentralShape {
        detail: format!(
            "symbolic ideals support C a field, a univariate polynomial ring or a finite-dimensional torsion ring; got {} symbols with {} free",
            desc.symbols.len(),
            desc.symbols.len() - desc.symbols.iter().filter(|s| matches!(s.kind, CentralKind::GroupTorsion(_))).count()
        ),
    })
}

/// Trace data of the regular trace over `C`.
#[derive(Debug, Clone)]
pub struct TraceData {
    pub shape: CentralShape,
    pub desc: CentralDescriptor,
    pub dim: usize,
    pub trace_on_basis: Vec<CElem>,
    pub gram: Vec<Vec<CElem>>,
}

/// Traces of left multiplication by the basis words, as exact elements of
/// `C`, together with the Gram matrix `tr(b_i b_j)`.
pub fn regular_trace_over_c(pres: &HopfPresentation) -> Result<TraceData, CayleyError> {
    let shape = central_shape(&pres.central)?;
    let n = pres.dim();
    let sc = pres.structure_constants();
    let trace_on_basis: Vec<CElem> = (0..n)
        .map(|i| {
            let mut acc = CElem::zero();
            for j in 0..n {
                acc = acc.add(&sc[i][j][j]);
            }
            acc
        })
        .collect();
    let mut gram = vec![vec![CElem::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = CElem::zero();
            for (k, c) in sc[i][j].iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&c.mul(&trace_on_basis[k], &pres.central));
                }
            }
            gram[i][j] = acc;
        }
    }
    // tr(ab) = tr(ba) and tr(1) = rank
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(CayleyError::Internal(format!(
                    "trace Gram is not symmetric at ({i},{j})"
                )));
            }
        }
    }
    let expected = CElem::from_scalar(&pres.central, Scalar::from_int(n as i64));
    if trace_on_basis[pres.unit_index()] != expected {
        return Err(CayleyError::Internal(
            "trace of the unit does not equal the fiber rank".into(),
        ));
    }
    Ok(TraceData {
        shape,
        desc: pres.central.clone(),
        dim: n,
        trace_on_basis,
        gram,
    })
}

impl TraceData {
    /// Convert a `C`-element to a univariate polynomial in the primitive
    /// symbol; only valid for the univariate shape.
    pub fn to_poly(&self, c: &CElem) -> Poly {
        let CentralShape::Univariate { sym } = self.shape else {
            panic!("to_poly requires the univariate central shape");
        };
        let mut coeffs: Vec<Scalar> = Vec::new();
        for (mono, s) in &c.terms {
            let d = mono.exps[sym] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Scalar::zero());
            }
            coeffs[d] = coeffs[d].add(s);
        }
        Poly::from_coeffs(coeffs)
    }

    /// Trace of an element given by rational coordinates on the basis.
    pub fn trace_of_coords(&self, coords: &[CElem]) -> CElem {
        let mut acc = CElem::zero();
        for (c, t) in coords.iter().zip(self.trace_on_basis.iter()) {
            if !c.is_zero() && !t.is_zero() {
                acc = acc.add(&c.mul(t, &self.desc));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    const TAFT2: &str = include_str!("../../../../corpus/taft_inf_2.hopf");
    const EX3_8: &str = include_str!("../../../../corpus/ex3_8.hopf");

    #[test]
    fn taft2_gram_is_diagonal() {
        let pres = parse_presentation(TAFT2).unwrap();
        let td = regular_trace_over_c(&pres).unwrap();
        assert!(matches!(td.shape, CentralShape::Univariate { .. }));
        // diag(4, 4, 4T, -4T) in basis (1, g, x, gx)
        let d = &pres.central;
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(td.gram[i][j].is_zero(), "({i},{j}) = {}", td.gram[i][j].display(d));
                }
            }
        }
        assert_eq!(td.gram[0][0].display(d), "4");
        assert_eq!(td.gram[1][1].display(d), "4");
        assert_eq!(td.gram[2][2].display(d), "4*T");
        assert_eq!(td.gram[3][3].display(d), "-4*T");
    }

    #[test]
    fn ex3_8_gram_matches_hand_computation() {
        let pres = parse_presentation(EX3_8).unwrap();
        let td = regular_trace_over_c(&pres).unwrap();
        assert_eq!(td.shape, CentralShape::FiniteDim);
        let d = &pres.central;
        // diag(4, 4z, 2(1-z), 2(1-z)) in basis (1, g, x, gx) at mu = 1
        assert_eq!(td.gram[0][0].display(d), "4");
        assert_eq!(td.gram[1][1].display(d), "4*z");
        assert_eq!(td.gram[2][2].display(d), "2 - 2*z");
        assert_eq!(td.gram[3][3].display(d), "2 - 2*z");
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(td.gram[i][j].is_zero());
                }
            }
        }
    }
}
